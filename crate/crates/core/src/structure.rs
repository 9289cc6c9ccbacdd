//! The `(C1, C2, U)` decomposition of a C0P-graph and its two interval
//! models.
//!
//! Under a certifying ordering every column of `M*` has its zero run either
//! strictly below the diagonal (the vertex goes to `C1`), strictly above it
//! (`C2`), or has no zeros at all (`U`). Once the ordering is re-sorted to
//! `C1, C2, U`, positions `1..=r` hold `C1` and `r+1..=r+s` hold `C2`; every
//! `C1` vertex is then represented by the interval of `C2` positions it is
//! not adjacent to, and vice versa. All positions are 1-based.

use serde::{Deserialize, Serialize};

use crate::bits::BitRow;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::interval::{Interval, IntervalModel};
use crate::recognition::{
    find_c0p_ordering_with, verify_c0p_ordering, Ordering, RecognitionOptions,
};

/// Ordering sorted as `C1, C2, U` with the block sizes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    pub ordering: Ordering,
    /// `|C1|`
    pub r: usize,
    /// `|C2|`
    pub s: usize,
}

impl Partition {
    pub fn c1(&self) -> &[Vertex] {
        &self.ordering.as_slice()[..self.r]
    }

    pub fn c2(&self) -> &[Vertex] {
        &self.ordering.as_slice()[self.r..self.r + self.s]
    }

    pub fn u(&self) -> &[Vertex] {
        &self.ordering.as_slice()[self.r + self.s..]
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct C0PStructure {
    n: usize,
    ordering: Vec<Vertex>,
    position: Vec<usize>,
    r: usize,
    s: usize,
    h1: IntervalModel,
    h2: IntervalModel,
    /// Zero-run of the vertex at each 1-based position `1..=r+s`, stored at
    /// index `pos - 1`.
    spans: Vec<(usize, usize)>,
    stable1: Vec<Vertex>,
    stable2: Vec<Vertex>,
    /// Longest zero run; fixes the minimum degree.
    widest: usize,
}

/// Classifies the columns of `M*(g)` under `ord` and re-sorts the ordering
/// to `C1, C2, U`.
pub fn extract_partition(g: &Graph, ord: &Ordering) -> Result<Partition> {
    let n = g.n();
    let m = g.augmented_matrix();
    if !verify_c0p_ordering(&m, ord)? {
        return Err(Error::StructureViolation(
            "ordering does not make the zeros of every column consecutive".into(),
        ));
    }
    let pos = ord.positions();
    let (mut c1, mut c2, mut u) = (Vec::new(), Vec::new(), Vec::new());
    for (b, c) in ord.iter().enumerate() {
        let zeros = g.closed_neighborhood(c).complement();
        let mut rows = zeros.iter_ones().map(|w| pos[w]);
        match rows.next() {
            None => u.push(c),
            Some(first) => {
                let (lo, hi) = rows.fold((first, first), |(lo, hi), p| (lo.min(p), hi.max(p)));
                if lo > b {
                    c1.push(c);
                } else if hi < b {
                    c2.push(c);
                } else {
                    return Err(Error::StructureViolation(format!(
                        "zero run of column {c} straddles the diagonal"
                    )));
                }
            }
        }
    }

    let (r, s) = (c1.len(), c2.len());
    let ordering = Ordering::new(c1.into_iter().chain(c2).chain(u).collect())?;
    let partition = Partition { ordering, r, s };

    for (name, side) in [("C1", partition.c1()), ("C2", partition.c2())] {
        let mask = BitRow::from_indices(n, side.iter().copied());
        if let Some(&v) = side
            .iter()
            .find(|&&v| !mask.is_subset(&g.closed_neighborhood(v)))
        {
            return Err(Error::StructureViolation(format!(
                "{name} is not a clique at vertex {v}"
            )));
        }
    }
    if let Some(&v) = partition.u().iter().find(|&&v| g.degree(v) + 1 != n) {
        return Err(Error::StructureViolation(format!(
            "vertex {v} in U is not universal"
        )));
    }
    if !verify_c0p_ordering(&m, &partition.ordering)? {
        return Err(Error::StructureViolation(
            "re-sorted ordering lost consecutiveness".into(),
        ));
    }
    Ok(partition)
}

/// Builds the interval models of `G - U` from an extracted partition.
pub fn build_interval_models(p: Partition, g: &Graph) -> Result<C0PStructure> {
    let (r, s) = (p.r, p.s);
    let pos = p.ordering.positions();
    let mut spans = Vec::with_capacity(r + s);
    for (idx, v) in p.ordering.iter().take(r + s).enumerate() {
        let (lo_ok, hi_ok) = if idx < r { (r + 1, r + s) } else { (1, r) };
        let zeros = g.closed_neighborhood(v).complement();
        let positions: Vec<usize> = zeros.iter_ones().map(|w| pos[w] + 1).collect();
        let (Some(&lo), Some(&hi)) = (positions.iter().min(), positions.iter().max()) else {
            return Err(Error::StructureViolation(format!(
                "vertex {v} has no non-neighbor in G - U"
            )));
        };
        if lo < lo_ok || hi > hi_ok || hi - lo + 1 != positions.len() {
            return Err(Error::StructureViolation(format!(
                "zero run of vertex {v} is not a contiguous block of the opposite side"
            )));
        }
        spans.push((lo, hi));
    }
    C0PStructure::from_spans(g.n(), p, spans)
}

/// Recognizes `g` and builds its structure.
pub fn analyze(g: &Graph) -> Result<C0PStructure> {
    analyze_with(g, RecognitionOptions::default())
}

pub fn analyze_with(g: &Graph, opts: RecognitionOptions) -> Result<C0PStructure> {
    let ord = find_c0p_ordering_with(g, opts).ok_or(Error::NotC0P)?;
    let mut partition = extract_partition(g, &ord)?;
    // Reversing the non-universal block swaps the roles of C1 and C2; the
    // canonical orientation puts the smallest non-universal vertex in C1.
    let first_in_c2 = partition.c2().iter().min() < partition.c1().iter().min() && partition.s > 0;
    if opts.tiebreak_seed.is_none() && first_in_c2 {
        let core = partition.r + partition.s;
        let perm = partition.ordering.as_slice();
        let flipped = perm[..core]
            .iter()
            .rev()
            .chain(&perm[core..])
            .copied()
            .collect();
        partition = extract_partition(g, &Ordering::new(flipped)?)?;
    }
    build_interval_models(partition, g)
}

impl C0PStructure {
    /// Assembles a structure from a partition and the zero run of every
    /// `C1`/`C2` position (1-based, in partition order).
    pub fn from_spans(n: usize, p: Partition, spans: Vec<(usize, usize)>) -> Result<Self> {
        let (r, s) = (p.r, p.s);
        if p.ordering.len() != n || spans.len() != r + s {
            return Err(Error::DimensionMismatch {
                expected: r + s,
                actual: spans.len(),
            });
        }
        let ordering = p.ordering.as_slice().to_vec();
        let mut h1 = Vec::with_capacity(r);
        let mut h2 = Vec::with_capacity(s);
        for (idx, &(lo, hi)) in spans.iter().enumerate() {
            let (range, model) = if idx < r {
                ((r + 1, r + s), &mut h1)
            } else {
                ((1, r), &mut h2)
            };
            if lo > hi || lo < range.0 || hi > range.1 {
                return Err(Error::StructureViolation(format!(
                    "interval [{lo},{hi}] of position {} lies outside [{},{}]",
                    idx + 1,
                    range.0,
                    range.1
                )));
            }
            model.push(Interval {
                vertex: ordering[idx],
                lo,
                hi,
            });
        }
        let h1 = IntervalModel::new(h1);
        let h2 = IntervalModel::new(h2);
        let stable1 = h1.max_stable_set();
        let stable2 = h2.max_stable_set();
        let widest = spans.iter().map(|&(lo, hi)| hi - lo + 1).max().unwrap_or(0);
        Ok(Self {
            widest,
            n,
            position: p.ordering.positions(),
            ordering,
            r,
            s,
            h1,
            h2,
            spans,
            stable1,
            stable2,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Ordering sorted as `C1, C2, U`.
    pub fn ordering(&self) -> &[Vertex] {
        &self.ordering
    }

    /// 0-based position of `v` in [`Self::ordering`].
    pub fn position(&self, v: Vertex) -> usize {
        self.position[v]
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn c1(&self) -> &[Vertex] {
        &self.ordering[..self.r]
    }

    pub fn c2(&self) -> &[Vertex] {
        &self.ordering[self.r..self.r + self.s]
    }

    pub fn u(&self) -> &[Vertex] {
        &self.ordering[self.r + self.s..]
    }

    pub fn h1(&self) -> &IntervalModel {
        &self.h1
    }

    pub fn h2(&self) -> &IntervalModel {
        &self.h2
    }

    pub fn alpha1(&self) -> usize {
        self.stable1.len()
    }

    pub fn alpha2(&self) -> usize {
        self.stable2.len()
    }

    /// Maximum stable set of `H1`, greedy order.
    pub fn stable1(&self) -> &[Vertex] {
        &self.stable1
    }

    pub fn stable2(&self) -> &[Vertex] {
        &self.stable2
    }

    /// Zero run `[lo, hi]` of a `C1`/`C2` vertex; `None` for `U`.
    pub fn span_of(&self, v: Vertex) -> Option<(usize, usize)> {
        self.spans.get(self.position[v]).copied()
    }

    /// Degree of `v`, read off its zero run.
    pub fn degree(&self, v: Vertex) -> usize {
        let missing = self.span_of(v).map_or(0, |(lo, hi)| hi - lo + 1);
        self.n - 1 - missing
    }

    /// Minimum degree; `None` for the empty graph.
    pub fn min_degree(&self) -> Option<usize> {
        if self.n == 0 {
            return None;
        }
        Some(self.n - 1 - self.widest)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        if u == v {
            return false;
        }
        let (pu, pv) = (self.position[u], self.position[v]);
        match (self.spans.get(pu), self.spans.get(pv)) {
            (Some(&(lo, hi)), Some(_)) => !(lo..=hi).contains(&(pv + 1)),
            _ => true,
        }
    }

    /// `|N[v] ∩ d|` for every vertex, in `O(n + |d|)`.
    pub fn closed_counts(&self, d: &VertexSet) -> Vec<usize> {
        let core = self.r + self.s;
        // miss[p] counts members of d not adjacent to the vertex at 1-based
        // position p; built as a difference array.
        let mut miss = vec![0isize; core + 2];
        for v in d.iter() {
            if let Some(&(lo, hi)) = self.spans.get(self.position[v]) {
                miss[lo] += 1;
                miss[hi + 1] -= 1;
            }
        }
        let total = d.len();
        let mut counts = vec![total; self.n];
        let mut running = 0isize;
        for p in 1..=core {
            running += miss[p];
            counts[self.ordering[p - 1]] = total - running as usize;
        }
        counts
    }

    /// Sweeps the zero runs of `d` in `O(|d| log |d|)`, independent of `n`.
    pub fn is_k_tuple_dominating(&self, d: &VertexSet, k: usize) -> bool {
        if k == 0 {
            return true;
        }
        if self.n == 0 || d.len() < k || d.iter().any(|v| v >= self.n) {
            return false;
        }
        // (position, +1 at a run start / -1 one past its end); ends sort
        // before starts at the same position.
        let mut events: Vec<(usize, isize)> = Vec::with_capacity(2 * d.len());
        for v in d.iter() {
            if let Some(&(lo, hi)) = self.spans.get(self.position[v]) {
                events.push((lo, 1));
                events.push((hi + 1, -1));
            }
        }
        events.sort_unstable();
        let (mut running, mut worst) = (0isize, 0isize);
        for (_, delta) in events {
            running += delta;
            worst = worst.max(running);
        }
        d.len() - worst as usize >= k
    }

    /// Every structure invariant that can be checked against `g`.
    pub fn check_against(&self, g: &Graph) -> Result<()> {
        let fail = |msg: String| Err(Error::StructureViolation(msg));
        if g.n() != self.n {
            return fail(format!(
                "structure has {} vertices, graph has {}",
                self.n,
                g.n()
            ));
        }
        for u in 0..self.n {
            for v in u + 1..self.n {
                if g.has_edge(u, v) != self.has_edge(u, v) {
                    return fail(format!("adjacency of ({u}, {v}) disagrees"));
                }
            }
        }
        if VertexSet::new(self.u().iter().copied()) != g.universal_vertices() {
            return fail("U is not the set of universal vertices".into());
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{example_graph, two_triangles};

    fn spans_of(model: &IntervalModel) -> Vec<(Vertex, usize, usize)> {
        model
            .intervals
            .iter()
            .map(|iv| (iv.vertex, iv.lo, iv.hi))
            .collect()
    }

    #[test]
    fn example_identity_partition() {
        let g = example_graph();
        let p = extract_partition(&g, &Ordering::identity(7)).unwrap();
        assert_eq!(
            (p.c1(), p.c2(), p.u()),
            (&[0, 1, 2][..], &[3, 4, 5][..], &[6][..])
        );
        assert_eq!(p.r, 3);

        let st = build_interval_models(p, &g).unwrap();
        assert_eq!(spans_of(st.h1()), vec![(0, 5, 6), (1, 4, 6), (2, 4, 4)]);
        assert_eq!(spans_of(st.h2()), vec![(3, 2, 3), (4, 1, 2), (5, 1, 2)]);
        assert_eq!(st.alpha1(), 2);
        assert_eq!(st.stable1(), &[2, 0]);
        assert_eq!(st.alpha2(), 1);
        st.check_against(&g).unwrap();
        assert_eq!(st.min_degree(), Some(3));
    }

    #[test]
    fn complete_graph_is_all_universal() {
        let g = Graph::complete(5);
        let p = extract_partition(&g, &Ordering::identity(5)).unwrap();
        assert!(p.c1().is_empty() && p.c2().is_empty());
        assert_eq!(p.u(), &[0, 1, 2, 3, 4]);
        let st = build_interval_models(p, &g).unwrap();
        assert_eq!((st.alpha1(), st.alpha2()), (0, 0));
    }

    #[test]
    fn disjoint_triangles_give_full_blocks() {
        let g = two_triangles();
        let p = extract_partition(&g, &Ordering::identity(6)).unwrap();
        assert_eq!((p.c1(), p.c2()), (&[0, 1, 2][..], &[3, 4, 5][..]));
        assert!(p.u().is_empty());
        let st = build_interval_models(p, &g).unwrap();
        assert!(st.h1().intervals.iter().all(|iv| (iv.lo, iv.hi) == (4, 6)));
        assert!(st.h2().intervals.iter().all(|iv| (iv.lo, iv.hi) == (1, 3)));
        assert_eq!((st.alpha1(), st.alpha2()), (1, 1));
    }

    #[test]
    fn single_point_interval() {
        // C1 = {0, 1}, C2 = {2, 3, 4}; vertex 0 misses only vertex 4.
        let g =
            Graph::from_edge_list(5, &[(0, 1), (2, 3), (2, 4), (3, 4), (0, 2), (0, 3)]).unwrap();
        let st = analyze(&g).unwrap();
        let iv = st.span_of(0).unwrap();
        assert_eq!(iv.0, iv.1);
    }

    #[test]
    fn non_certificate_is_rejected() {
        let g = example_graph();
        let bad = Ordering::new(vec![4, 1, 2, 3, 0, 5, 6]).unwrap();
        assert!(matches!(
            extract_partition(&g, &bad),
            Err(Error::StructureViolation(_))
        ));
    }

    #[test]
    fn structure_counts_match_graph_counts() {
        let g = example_graph();
        let st = analyze(&g).unwrap();
        for mask in 0u32..1 << 7 {
            let d = VertexSet::new((0..7).filter(|i| mask >> i & 1 == 1));
            let counts = st.closed_counts(&d);
            for (v, &count) in counts.iter().enumerate() {
                assert_eq!(
                    count,
                    g.closed_neighborhood(v).intersection_count(&d.to_bitrow(7))
                );
            }
            for k in 0..=5 {
                assert_eq!(
                    st.is_k_tuple_dominating(&d, k),
                    g.is_k_tuple_dominating(&d, k),
                    "{d:?} k={k}"
                );
            }
        }
    }

    #[test]
    fn one_vertex_side_is_accepted() {
        // K1 + K2 has no universal vertex but |C1| = 1.
        let g = Graph::from_edge_list(3, &[(1, 2)]).unwrap();
        let st = analyze(&g).unwrap();
        assert!(st.u().is_empty());
        assert_eq!(st.c1().len().min(st.c2().len()), 1);
    }
}
