//! Plain-text graph format.
//!
//! ```text
//! c comment
//! p 3 2
//! e 1 2
//! e 2 3
//! ```
//!
//! Vertices are 1-based in the file. `p edge n m` is accepted as well.

use std::collections::HashSet;
use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn number(tok: Option<&str>, line: usize, what: &str) -> Result<usize> {
    let tok = tok.ok_or_else(|| parse_err(line, format!("missing {what}")))?;
    tok.parse().map_err(|_| {
        parse_err(
            line,
            format!("{what} `{tok}` is not a non-negative integer"),
        )
    })
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
    let mut seen = HashSet::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let mut toks = raw.split_whitespace();
        let Some(tag) = toks.next() else { continue };
        match tag {
            "c" => continue,
            "p" => {
                if header.is_some() {
                    return Err(parse_err(line, "duplicate `p` line"));
                }
                let mut first = toks.next();
                if first == Some("edge") {
                    first = toks.next();
                }
                let n = number(first, line, "vertex count")?;
                let m = number(toks.next(), line, "edge count")?;
                header = Some((n, m, line));
            }
            "e" => {
                let Some((n, _, _)) = header else {
                    return Err(parse_err(line, "edge before `p` line"));
                };
                let u = number(toks.next(), line, "endpoint")?;
                let v = number(toks.next(), line, "endpoint")?;
                for w in [u, v] {
                    if w == 0 || w > n {
                        return Err(parse_err(line, format!("vertex {w} outside 1..={n}")));
                    }
                }
                if u == v {
                    return Err(parse_err(line, format!("self-loop on vertex {u}")));
                }
                if !seen.insert((u.min(v), u.max(v))) {
                    return Err(parse_err(line, format!("duplicate edge {u} {v}")));
                }
                edges.push((u - 1, v - 1));
            }
            other => return Err(parse_err(line, format!("unknown line type `{other}`"))),
        }
        if let Some(extra) = toks.next() {
            return Err(parse_err(line, format!("unexpected token `{extra}`")));
        }
    }
    let (n, m, line) =
        header.ok_or_else(|| parse_err(text.lines().count().max(1), "missing `p` line"))?;
    if edges.len() != m {
        return Err(parse_err(
            line,
            format!("header declares {m} edges but {} were given", edges.len()),
        ));
    }
    Graph::from_edge_list(n, &edges)
}

pub fn read_graph(path: impl AsRef<Path>) -> Result<Graph> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    parse_graph(&text)
}

pub fn write_graph(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("p {} {}\n", g.n(), edges.len());
    for (u, v) in edges {
        writeln!(out, "e {} {}", u + 1, v + 1).expect("writing to a String cannot fail");
    }
    out
}
