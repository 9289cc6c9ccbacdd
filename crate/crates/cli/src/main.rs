use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use ktdom_core::generator::{
    gen_random_graph, gen_staircase, staircase_structure, StaircaseParams, StaircaseSpec,
};
use ktdom_core::io::{read_graph, write_graph};
use ktdom_core::oracle::brute_force_gamma_capped;
use ktdom_core::report::Report;
use ktdom_core::solver::{gamma_from_structure, gamma_range_from_structure};
use ktdom_core::{analyze, DominationResult, Error, Graph, SolveOptions, VertexSet};

#[derive(Parser)]
#[command(
    name = "ktdom",
    version,
    about = "C0P-graph recognition and k-tuple domination"
)]
struct Cli {
    /// Emit the versioned JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a certifying vertex ordering, or "not-c0p".
    Recognize { file: PathBuf },
    /// Print the (C1, C2, U) partition and interval models.
    Partition { file: PathBuf },
    /// Minimum k-tuple domination number.
    Gamma {
        file: PathBuf,
        #[arg(short = 'k', required_unless_present = "all")]
        k: Option<usize>,
        #[arg(long)]
        witness: bool,
        /// Answer undetermined cases by exhaustive search on small graphs.
        #[arg(long)]
        oracle_fallback: bool,
        /// Every k from 1 up to the last feasible one.
        #[arg(long)]
        all: bool,
    },
    /// Exhaustive answer for small graphs.
    Oracle {
        file: PathBuf,
        #[arg(short = 'k')]
        k: usize,
        #[arg(long, default_value_t = ktdom_core::oracle::DEFAULT_CAP)]
        cap: usize,
    },
    /// Write a generated instance.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
    },
    /// Time the solver phases on staircase instances.
    Bench {
        #[arg(long, value_delimiter = ',', value_parser = parse_size, default_value = "1e3,1e4,1e5")]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Check whether a vertex set is k-tuple dominating.
    Verify {
        file: PathBuf,
        #[arg(long, value_delimiter = ',')]
        set: Vec<usize>,
        #[arg(short = 'k')]
        k: usize,
    },
}

#[derive(Subcommand)]
enum GenKind {
    Staircase {
        #[arg(long)]
        n1: usize,
        #[arg(long)]
        n2: usize,
        #[arg(long, default_value_t = 0)]
        u: usize,
        #[arg(long, default_value_t = 0.1)]
        empty_prob: f64,
        #[arg(long, default_value_t = 3)]
        max_width: usize,
        #[command(flatten)]
        out: GenOut,
    },
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
        #[command(flatten)]
        out: GenOut,
    },
}

#[derive(Args)]
struct GenOut {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Output file; stdout when absent.
    #[arg(short = 'o')]
    output: Option<PathBuf>,
}

fn parse_size(s: &str) -> Result<usize, String> {
    let x: f64 = s
        .trim()
        .parse()
        .map_err(|_| format!("`{s}` is not a number"))?;
    if !(x >= 1.0 && x.fract() == 0.0 && x <= u32::MAX as f64) {
        return Err(format!("`{s}` is not a positive integer size"));
    }
    Ok(x as usize)
}

enum Failure {
    Lib(Error),
    Other(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

fn exit_code(e: &Failure) -> u8 {
    match e {
        Failure::Lib(Error::Parse { .. } | Error::Io { .. }) => 2,
        Failure::Lib(Error::NotC0P) => 3,
        Failure::Lib(Error::CapExceeded { .. }) => 4,
        Failure::Lib(Error::IndexOutOfRange { .. } | Error::SpecViolation(_)) => 2,
        Failure::Lib(_) | Failure::Other(_) => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            match &e {
                Failure::Lib(err) => eprintln!("error: {err}"),
                Failure::Other(msg) => eprintln!("error: {msg}"),
            }
            ExitCode::from(exit_code(&e))
        }
    }
}

fn one_based(vs: impl IntoIterator<Item = usize>) -> String {
    vs.into_iter()
        .map(|v| (v + 1).to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn print_json(report: &Report) -> Result<(), Failure> {
    let text = serde_json::to_string_pretty(report).map_err(|e| Failure::Other(e.to_string()))?;
    println!("{text}");
    Ok(())
}

fn run(cli: &Cli) -> Result<u8, Failure> {
    match &cli.command {
        Command::Recognize { file } => {
            let g = read_graph(file)?;
            let st = match analyze(&g) {
                Ok(st) => st,
                Err(Error::NotC0P) => {
                    if cli.json {
                        print_json(&Report::not_c0p(g.n()))?;
                    } else {
                        println!("not-c0p");
                    }
                    return Ok(1);
                }
                Err(e) => return Err(e.into()),
            };
            if cli.json {
                print_json(&Report::from_structure(&st))?;
            } else {
                println!("{}", one_based(st.ordering().iter().copied()));
            }
            Ok(0)
        }
        Command::Partition { file } => {
            let g = read_graph(file)?;
            let st = structure_or_report(&g, cli.json)?;
            if cli.json {
                print_json(&Report::from_structure(&st))?;
                return Ok(0);
            }
            println!("C1: {}", one_based(st.c1().iter().copied()));
            println!("C2: {}", one_based(st.c2().iter().copied()));
            println!("U: {}", one_based(st.u().iter().copied()));
            println!("r: {}", st.r());
            for (name, model) in [("H1", st.h1()), ("H2", st.h2())] {
                let mut parts: Vec<String> = model
                    .intervals
                    .iter()
                    .map(|iv| format!("{}:[{},{}]", iv.vertex + 1, iv.lo, iv.hi))
                    .collect();
                parts.extend(model.isolated.iter().map(|v| format!("{}:[]", v + 1)));
                println!("{name}: {}", parts.join(" "));
            }
            println!("alpha1: {}", st.alpha1());
            println!("alpha2: {}", st.alpha2());
            Ok(0)
        }
        Command::Gamma {
            file,
            k,
            witness,
            oracle_fallback,
            all,
        } => {
            let g = read_graph(file)?;
            let st = structure_or_report(&g, cli.json)?;
            let opts = SolveOptions {
                oracle_fallback: *oracle_fallback,
                ..SolveOptions::default()
            };
            let results = if *all {
                gamma_range_from_structure(&st, Some(&g), opts)?
            } else {
                let k = k.expect("clap requires -k without --all");
                vec![(k, gamma_from_structure(&st, k, Some(&g), opts)?)]
            };
            if cli.json {
                print_json(
                    &Report::from_structure(&st).with_results(results.iter().map(|(k, r)| (*k, r))),
                )?;
            } else if *all {
                let line: Vec<String> = results
                    .iter()
                    .map(|(k, r)| format!("k={k}:{}", value_text(r)))
                    .collect();
                println!("{}", line.join(" "));
                if *witness {
                    for (k, r) in &results {
                        println!("{}", detail_line(*k, r, true));
                    }
                }
            } else {
                let (k, r) = &results[0];
                println!("{}", detail_line(*k, r, *witness));
            }
            Ok(0)
        }
        Command::Oracle { file, k, cap } => {
            let g = read_graph(file)?;
            let r = brute_force_gamma_capped(&g, *k, *cap)?;
            if cli.json {
                let base = analyze(&g)
                    .map(|st| Report::from_structure(&st))
                    .unwrap_or_else(|_| Report::not_c0p(g.n()));
                print_json(&base.with_results([(*k, &r)]))?;
            } else {
                println!("{}", detail_line(*k, &r, true));
            }
            Ok(0)
        }
        Command::Gen { kind } => {
            let (g, out) = match kind {
                GenKind::Staircase {
                    n1,
                    n2,
                    u,
                    empty_prob,
                    max_width,
                    out,
                } => {
                    let params = StaircaseParams {
                        n1: *n1,
                        n2: *n2,
                        u: *u,
                        empty_prob: *empty_prob,
                        max_width: *max_width,
                    };
                    (
                        gen_staircase(&StaircaseSpec::sample(&params, out.seed))?,
                        out,
                    )
                }
                GenKind::Random { n, p, out } => (gen_random_graph(*n, *p, out.seed), out),
            };
            let text = write_graph(&g);
            match &out.output {
                Some(path) => std::fs::write(path, text)
                    .map_err(|e| Failure::Other(format!("{}: {e}", path.display())))?,
                None => print!("{text}"),
            }
            Ok(0)
        }
        Command::Bench { sizes, seed } => {
            for &n in sizes {
                bench_one(n, *seed)?;
            }
            Ok(0)
        }
        Command::Verify { file, set, k } => {
            let g = read_graph(file)?;
            let mut members = Vec::with_capacity(set.len());
            for &v in set {
                if v == 0 || v > g.n() {
                    return Err(Error::IndexOutOfRange {
                        vertex: v,
                        n: g.n(),
                    }
                    .into());
                }
                members.push(v - 1);
            }
            if g.is_k_tuple_dominating(&VertexSet::new(members), *k) {
                println!("valid");
                Ok(0)
            } else {
                println!("invalid");
                Ok(1)
            }
        }
    }
}

fn structure_or_report(g: &Graph, json: bool) -> Result<ktdom_core::C0PStructure, Failure> {
    analyze(g)
        .inspect_err(|_| {
            if json {
                let _ = print_json(&Report::not_c0p(g.n()));
            }
        })
        .map_err(Failure::from)
}

fn value_text(r: &DominationResult) -> String {
    match r {
        DominationResult::Value { gamma, .. } => gamma.to_string(),
        DominationResult::Infeasible => "infeasible".to_string(),
        DominationResult::Undetermined { .. } => "undetermined".to_string(),
    }
}

fn detail_line(k: usize, r: &DominationResult, witness: bool) -> String {
    match r {
        DominationResult::Value {
            gamma,
            witness: w,
            rule,
        } => {
            let mut line = format!("k={k}:{gamma} rule={rule}");
            if witness {
                line.push_str(&format!(
                    " witness={}",
                    one_based(w.iter()).replace(' ', ",")
                ));
            }
            line
        }
        DominationResult::Infeasible => format!("k={k}:infeasible"),
        DominationResult::Undetermined { reason } => format!("k={k}:undetermined ({reason})"),
    }
}

fn bench_one(n: usize, seed: u64) -> Result<(), Failure> {
    let half = n / 2;
    let params = StaircaseParams {
        n1: half,
        n2: n - half,
        u: 0,
        empty_prob: 0.0,
        max_width: 8,
    };
    let t = Instant::now();
    let spec = StaircaseSpec::sample(&params, seed).covering();
    let st = staircase_structure(&spec)?;
    let build = t.elapsed();

    let t = Instant::now();
    let alphas = (st.h1().stability_number(), st.h2().stability_number());
    let stability = t.elapsed();

    let t = Instant::now();
    let range = gamma_range_from_structure(&st, None, SolveOptions::default())?;
    let solve = t.elapsed();

    println!(
        "n={n} build={:.3}ms stability={:.3}ms gamma_range={:.3}ms alpha=({},{}) ks={}",
        build.as_secs_f64() * 1e3,
        stability.as_secs_f64() * 1e3,
        solve.as_secs_f64() * 1e3,
        alphas.0,
        alphas.1,
        range.len()
    );
    Ok(())
}
