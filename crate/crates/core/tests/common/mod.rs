#![allow(dead_code)]

use ktdom_core::generator::{gen_staircase, StaircaseParams, StaircaseSpec};
use ktdom_core::{Graph, Vertex};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Mixed staircase instances with `n <= max_n`: every tenth is all-empty,
/// the next all-full (two disjoint cliques when `u = 0`), the rest sampled.
pub fn staircase_corpus(count: usize, max_n: usize, seed: u64) -> Vec<StaircaseSpec> {
    let mut rng = rng(seed);
    (0..count)
        .map(|i| {
            let u = i % 4;
            let room = max_n - u;
            let n1 = rng.gen_range(1..=room.min(6));
            let n2 = rng.gen_range(0..=(room - n1).min(6));
            match i % 10 {
                0 => StaircaseSpec::all_empty(n1, n2, u),
                1 => StaircaseSpec::all_full(n1, n2, u),
                _ => {
                    let params = StaircaseParams {
                        n1,
                        n2,
                        u,
                        empty_prob: if i % 3 == 0 { 0.25 } else { 0.0 },
                        max_width: rng.gen_range(0..=n2.max(1)),
                    };
                    StaircaseSpec::sample(&params, rng.gen())
                }
            }
        })
        .collect()
}

/// Staircase core without universal vertices; `n1, n2` drawn from the
/// given ranges.
pub fn core_spec(
    rng: &mut ChaCha8Rng,
    n1: std::ops::RangeInclusive<usize>,
    n2: std::ops::RangeInclusive<usize>,
) -> StaircaseSpec {
    let params = StaircaseParams {
        n1: rng.gen_range(n1),
        n2: rng.gen_range(n2),
        u: 0,
        empty_prob: 0.0,
        max_width: rng.gen_range(0..=3),
    };
    StaircaseSpec::sample(&params, rng.gen()).covering()
}

/// Core whose `C1` runs share one `C2` offset, so the `C1` intervals
/// pairwise intersect.
pub fn common_point_core(rng: &mut ChaCha8Rng, n1: usize, n2: usize) -> StaircaseSpec {
    let p = rng.gen_range(0..n2);
    let mut lows: Vec<usize> = (0..n1).map(|_| rng.gen_range(0..=p)).collect();
    let mut highs: Vec<usize> = (0..n1).map(|_| rng.gen_range(p..n2)).collect();
    lows.sort_unstable();
    highs.sort_unstable();
    StaircaseSpec {
        n1,
        n2,
        u: 0,
        runs: lows.into_iter().zip(highs).map(Some).collect(),
        seed: 0,
    }
    .covering()
}

pub fn graph(spec: &StaircaseSpec) -> Graph {
    gen_staircase(spec).expect("generated specs are valid")
}

/// Every labeled graph on `n` vertices.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(Vertex, Vertex)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|&(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        Graph::from_edge_list(n, &edges).expect("pairs are in range")
    })
}

/// Neighbors of `w` inside `s`.
pub fn neighbors_in(g: &Graph, w: Vertex, s: &[Vertex]) -> usize {
    s.iter().filter(|&&x| x == w || g.has_edge(w, x)).count()
}

/// Random subset of `pool`, each member kept with probability one half.
pub fn random_subset(rng: &mut ChaCha8Rng, pool: &[Vertex]) -> Vec<Vertex> {
    pool.iter().copied().filter(|_| rng.gen_bool(0.5)).collect()
}
