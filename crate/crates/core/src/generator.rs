//! Seeded instance generation.
//!
//! A staircase instance has cliques `C1` (vertices `0..n1`), `C2`
//! (`n1..n1+n2`) and universal vertices after them. `C1` vertex `i` misses
//! exactly the `C2` offsets of its run `[lo_i, hi_i]`. When both endpoints
//! are non-decreasing in `i`, the non-neighbors of every `C2` vertex are also
//! a contiguous block of `C1`, so the graph is C0P.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::recognition::Ordering;
use crate::structure::{C0PStructure, Partition};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StaircaseSpec {
    pub n1: usize,
    pub n2: usize,
    pub u: usize,
    /// Zero run of each `C1` vertex as 0-based offsets into `C2`.
    pub runs: Vec<Option<(usize, usize)>>,
    pub seed: u64,
}

/// Sampling parameters for [`StaircaseSpec::sample`].
#[derive(Clone, Copy, Debug)]
pub struct StaircaseParams {
    pub n1: usize,
    pub n2: usize,
    pub u: usize,
    /// Probability that a `C1` vertex gets no run (and becomes universal).
    pub empty_prob: f64,
    /// Largest `hi - lo` drawn before the monotonicity fix-up.
    pub max_width: usize,
}

impl StaircaseSpec {
    pub fn n(&self) -> usize {
        self.n1 + self.n2 + self.u
    }

    pub fn all_empty(n1: usize, n2: usize, u: usize) -> Self {
        Self {
            n1,
            n2,
            u,
            runs: vec![None; n1],
            seed: 0,
        }
    }

    pub fn all_full(n1: usize, n2: usize, u: usize) -> Self {
        let run = (n2 > 0).then(|| (0, n2 - 1));
        Self {
            n1,
            n2,
            u,
            runs: vec![run; n1],
            seed: 0,
        }
    }

    /// Draws sorted left endpoints, then right endpoints forced to be at
    /// least the left endpoint and the previous right endpoint.
    pub fn sample(params: &StaircaseParams, seed: u64) -> Self {
        let StaircaseParams { n1, n2, u, .. } = *params;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        if n2 == 0 {
            return Self {
                seed,
                ..Self::all_empty(n1, n2, u)
            };
        }
        let present: Vec<bool> = (0..n1)
            .map(|_| !rng.gen_bool(params.empty_prob.clamp(0.0, 1.0)))
            .collect();
        let mut lefts: Vec<usize> = (0..present.iter().filter(|&&p| p).count())
            .map(|_| rng.gen_range(0..n2))
            .collect();
        lefts.sort_unstable();
        let max_width = params.max_width.min(n2 - 1);
        let mut prev_hi = 0;
        let mut lefts = lefts.into_iter();
        let runs = present
            .into_iter()
            .map(|p| {
                p.then(|| {
                    let lo = lefts.next().expect("one left endpoint per present run");
                    let hi = (lo + rng.gen_range(0..=max_width)).min(n2 - 1).max(prev_hi);
                    prev_hi = hi;
                    (lo, hi)
                })
            })
            .collect();
        Self {
            n1,
            n2,
            u,
            runs,
            seed,
        }
    }

    /// Widens runs so that every `C2` vertex is missed by some `C1`
    /// vertex, leaving the explicit `u` vertices as the only universal ones
    /// besides empty runs. Monotonicity is preserved.
    pub fn covering(mut self) -> Self {
        let present: Vec<usize> = (0..self.n1).filter(|&i| self.runs[i].is_some()).collect();
        let (Some(&first), Some(&last)) = (present.first(), present.last()) else {
            return self;
        };
        for w in present.windows(2) {
            let next_lo = self.runs[w[1]].expect("present").0;
            let run = self.runs[w[0]].as_mut().expect("present");
            run.1 = run.1.max(next_lo.saturating_sub(1));
        }
        self.runs[first].as_mut().expect("present").0 = 0;
        self.runs[last].as_mut().expect("present").1 = self.n2 - 1;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.runs.len() != self.n1 {
            return Err(Error::SpecViolation(format!(
                "{} runs for {} C1 vertices",
                self.runs.len(),
                self.n1
            )));
        }
        let mut prev: Option<(usize, usize)> = None;
        for (i, run) in self.runs.iter().enumerate() {
            let Some((lo, hi)) = *run else { continue };
            if lo > hi || hi >= self.n2 {
                return Err(Error::SpecViolation(format!(
                    "run [{lo},{hi}] of C1 vertex {i} is outside 0..{}",
                    self.n2
                )));
            }
            if let Some((plo, phi)) = prev {
                if lo < plo || hi < phi {
                    return Err(Error::SpecViolation(format!(
                        "run [{lo},{hi}] of C1 vertex {i} breaks monotonicity after [{plo},{phi}]"
                    )));
                }
            }
            prev = Some((lo, hi));
        }
        Ok(())
    }

    /// Non-empty runs first, then covered `C2` vertices, then everything
    /// universal.
    pub fn canonical_ordering(&self) -> Result<Ordering> {
        let layout = self.layout()?;
        Ordering::new(layout.ordering)
    }

    fn layout(&self) -> Result<Layout> {
        self.validate()?;
        let (n1, n2) = (self.n1, self.n2);
        let mut covered = vec![false; n2];
        let mut c1 = Vec::new();
        let mut runs = Vec::new();
        let mut empties = Vec::new();
        // Runs are monotone, so marking can resume where the previous run
        // ended.
        let mut marked_to = 0;
        for (i, run) in self.runs.iter().enumerate() {
            match *run {
                Some((lo, hi)) => {
                    for flag in &mut covered[lo.max(marked_to)..=hi] {
                        *flag = true;
                    }
                    marked_to = marked_to.max(hi + 1);
                    c1.push(i);
                    runs.push((lo, hi));
                }
                None => empties.push(i),
            }
        }
        let mut compressed = vec![usize::MAX; n2];
        let mut c2 = Vec::new();
        let mut uncovered = Vec::new();
        for j in 0..n2 {
            if covered[j] {
                compressed[j] = c2.len();
                c2.push(j);
            } else {
                uncovered.push(n1 + j);
            }
        }
        let ordering = c1
            .iter()
            .copied()
            .chain(c2.iter().map(|&j| n1 + j))
            .chain(empties)
            .chain(uncovered)
            .chain(n1 + n2..self.n())
            .collect();
        Ok(Layout {
            ordering,
            runs,
            c2,
            compressed,
        })
    }
}

struct Layout {
    ordering: Vec<Vertex>,
    /// Runs of the non-empty `C1` vertices, in order.
    runs: Vec<(usize, usize)>,
    /// Covered `C2` offsets, in order.
    c2: Vec<usize>,
    compressed: Vec<usize>,
}

/// Materializes a staircase instance as a dense graph.
pub fn gen_staircase(spec: &StaircaseSpec) -> Result<Graph> {
    spec.validate()?;
    let mut g = Graph::complete(spec.n());
    for (i, run) in spec.runs.iter().enumerate() {
        if let Some((lo, hi)) = *run {
            for j in lo..=hi {
                g.set_edge(i, spec.n1 + j, false);
            }
        }
    }
    Ok(g)
}

/// Builds the `(C1, C2, U)` structure of a staircase instance directly, in
/// linear time and without the dense graph.
pub fn staircase_structure(spec: &StaircaseSpec) -> Result<C0PStructure> {
    let layout = spec.layout()?;
    let r = layout.runs.len();
    let s = layout.c2.len();
    let mut spans = Vec::with_capacity(r + s);
    for &(lo, hi) in &layout.runs {
        spans.push((r + 1 + layout.compressed[lo], r + 1 + layout.compressed[hi]));
    }
    // C1 vertices missing C2 offset j: first run with hi >= j through the
    // last run with lo <= j; both bounds only move forward as j grows.
    let (mut first, mut last) = (0, 0);
    for &j in &layout.c2 {
        while layout.runs[first].1 < j {
            first += 1;
        }
        while last + 1 < r && layout.runs[last + 1].0 <= j {
            last += 1;
        }
        spans.push((first + 1, last + 1));
    }
    let ordering = Ordering::new(layout.ordering)?;
    C0PStructure::from_spans(spec.n(), Partition { ordering, r, s }, spans)
}

/// `G(n, p)` random graph.
pub fn gen_random_graph(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = if p.is_nan() { 0.0 } else { p.clamp(0.0, 1.0) };
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.set_edge(u, v, true);
            }
        }
    }
    g
}

/// Uniformly random relabeling; vertex `v` of `g` becomes `map[v]`.
pub fn scramble_with_map(g: &Graph, seed: u64) -> (Graph, Vec<Vertex>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut map: Vec<Vertex> = (0..g.n()).collect();
    map.shuffle(&mut rng);
    let h = g.relabel(&map).expect("shuffle yields a permutation");
    (h, map)
}

pub fn scramble(g: &Graph, seed: u64) -> Graph {
    scramble_with_map(g, seed).0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{cycle, example_graph};
    use crate::recognition::{find_c0p_ordering, verify_c0p_ordering};
    use crate::solver::gamma_range;
    use crate::structure::{analyze, build_interval_models, extract_partition};

    fn example_spec() -> StaircaseSpec {
        StaircaseSpec {
            n1: 3,
            n2: 3,
            u: 1,
            runs: vec![Some((0, 0)), Some((0, 2)), Some((1, 2))],
            seed: 0,
        }
    }

    fn degree_sequence(g: &Graph) -> Vec<usize> {
        let mut d: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
        d.sort_unstable();
        d
    }

    #[test]
    fn relabeled_example_pattern() {
        let g = gen_staircase(&example_spec()).unwrap();
        let reference = example_graph();
        assert_eq!(g.edge_count(), reference.edge_count());
        assert_eq!(degree_sequence(&g), degree_sequence(&reference));
        // v3, v2, v1 map to 0, 1, 2 and v4..v7 to 3..6.
        let map = [2, 1, 0, 3, 4, 5, 6];
        assert_eq!(reference.relabel(&map).unwrap(), g);
    }

    #[test]
    fn extremes() {
        assert_eq!(
            gen_staircase(&StaircaseSpec::all_empty(2, 3, 1)).unwrap(),
            Graph::complete(6)
        );
        let g = gen_staircase(&StaircaseSpec::all_full(3, 2, 2)).unwrap();
        let st = analyze(&g).unwrap();
        assert_eq!(st.u().len(), 2);
        assert_eq!((st.alpha1(), st.alpha2()), (1, 1));
        let core = g.induced_subgraph(&(0..5).collect()).unwrap().graph;
        assert_eq!(core.connected_components().len(), 2);
    }

    #[test]
    fn non_monotone_runs_are_rejected() {
        let spec = StaircaseSpec {
            runs: vec![Some((1, 2)), Some((0, 2)), None],
            ..example_spec()
        };
        assert!(matches!(gen_staircase(&spec), Err(Error::SpecViolation(_))));
        let spec = StaircaseSpec {
            runs: vec![Some((0, 3)), None, None],
            ..example_spec()
        };
        assert!(matches!(gen_staircase(&spec), Err(Error::SpecViolation(_))));
    }

    #[test]
    fn direct_structure_matches_graph_structure() {
        let params = StaircaseParams {
            n1: 6,
            n2: 7,
            u: 2,
            empty_prob: 0.2,
            max_width: 3,
        };
        for seed in 0..200 {
            let spec = StaircaseSpec::sample(&params, seed);
            let g = gen_staircase(&spec).unwrap();
            let direct = staircase_structure(&spec).unwrap();
            direct.check_against(&g).unwrap();
            let canonical = spec.canonical_ordering().unwrap();
            assert_eq!(
                verify_c0p_ordering(&g.augmented_matrix(), &canonical),
                Ok(true)
            );
            let via_graph =
                build_interval_models(extract_partition(&g, &canonical).unwrap(), &g).unwrap();
            assert_eq!(direct, via_graph, "seed {seed}");
        }
    }

    #[test]
    fn sampling_is_deterministic_and_monotone() {
        let params = StaircaseParams {
            n1: 30,
            n2: 25,
            u: 1,
            empty_prob: 0.1,
            max_width: 5,
        };
        let a = StaircaseSpec::sample(&params, 42);
        assert_eq!(a, StaircaseSpec::sample(&params, 42));
        a.validate().unwrap();
        assert_eq!(gen_staircase(&a).unwrap(), gen_staircase(&a).unwrap());
    }

    #[test]
    fn covering_leaves_only_explicit_universals() {
        let params = StaircaseParams {
            n1: 40,
            n2: 50,
            u: 2,
            empty_prob: 0.0,
            max_width: 2,
        };
        for seed in 0..50 {
            let spec = StaircaseSpec::sample(&params, seed).covering();
            spec.validate().unwrap();
            let st = staircase_structure(&spec).unwrap();
            assert_eq!(st.u(), &[90, 91]);
            st.check_against(&gen_staircase(&spec).unwrap()).unwrap();
        }
    }

    #[test]
    fn random_graph_extremes() {
        assert_eq!(gen_random_graph(5, 1.0, 3), Graph::complete(5));
        assert_eq!(gen_random_graph(5, 0.0, 3), Graph::empty(5));
        assert_eq!(gen_random_graph(5, 0.5, 9), gen_random_graph(5, 0.5, 9));
    }

    #[test]
    fn scrambling_preserves_answers() {
        assert_eq!(scramble(&Graph::complete(4), 1), Graph::complete(4));
        let g = example_graph();
        let expected: Vec<_> = gamma_range(&g)
            .unwrap()
            .into_iter()
            .map(|(k, r)| (k, r.gamma()))
            .collect();
        for seed in 0..20 {
            let h = scramble(&g, seed);
            let got: Vec<_> = gamma_range(&h)
                .unwrap()
                .into_iter()
                .map(|(k, r)| (k, r.gamma()))
                .collect();
            assert_eq!(got, expected);
            assert_eq!(find_c0p_ordering(&scramble(&cycle(5), seed)), None);
        }
    }
}
