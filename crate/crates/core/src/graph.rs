//! Simple undirected graphs on dense vertex indices `0..n`.
//!
//! Adjacency is stored as one packed [`BitRow`] per vertex so that counting
//! the members of a candidate set inside a closed neighborhood is a handful
//! of word-wide `AND`s.

use std::collections::VecDeque;

use crate::bits::BitRow;
use crate::error::{Error, Result};
use crate::recognition::Ordering;

pub type Vertex = usize;

/// Sorted, duplicate-free list of vertices.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct VertexSet(Vec<Vertex>);

impl VertexSet {
    pub fn new(vertices: impl IntoIterator<Item = Vertex>) -> Self {
        let mut v: Vec<Vertex> = vertices.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        Self(v)
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.0.iter().copied()
    }

    pub fn into_vec(self) -> Vec<Vertex> {
        self.0
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        VertexSet::new(self.iter().chain(other.iter()))
    }

    pub fn intersection_len(&self, other: &VertexSet) -> usize {
        self.iter().filter(|&v| other.contains(v)).count()
    }

    pub fn to_bitrow(&self, n: usize) -> BitRow {
        BitRow::from_indices(n, self.iter())
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        VertexSet::new(iter)
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = &'a Vertex;
    type IntoIter = std::slice::Iter<'a, Vertex>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

/// Square 0/1 matrix, one packed row per index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BitMatrix {
    rows: Vec<BitRow>,
}

impl BitMatrix {
    pub fn from_rows(rows: Vec<BitRow>) -> Result<Self> {
        let n = rows.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                actual: bad.len(),
            });
        }
        Ok(Self { rows })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            rows: (0..n).map(|i| BitRow::from_indices(n, [i])).collect(),
        }
    }

    pub fn all_ones(n: usize) -> Self {
        Self {
            rows: (0..n).map(|_| BitRow::ones(n)).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i].contains(j)
    }

    pub fn row(&self, i: usize) -> &BitRow {
        &self.rows[i]
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| (i + 1..n).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn has_unit_diagonal(&self) -> bool {
        (0..self.dim()).all(|i| self.get(i, i))
    }

    /// Row `a` of the result is row `perm[a]` of `self`; columns stay put.
    pub fn permute_rows(&self, ord: &Ordering) -> Result<BitMatrix> {
        self.check_dim(ord)?;
        Ok(BitMatrix {
            rows: ord.iter().map(|v| self.rows[v].clone()).collect(),
        })
    }

    /// Entry `(a, b)` of the result is entry `(perm[a], perm[b])` of `self`.
    pub fn permute_symmetric(&self, ord: &Ordering) -> Result<BitMatrix> {
        self.check_dim(ord)?;
        let n = self.dim();
        let perm = ord.as_slice();
        let rows = perm
            .iter()
            .map(|&src| {
                let src_row = &self.rows[src];
                BitRow::from_indices(n, (0..n).filter(|&b| src_row.contains(perm[b])))
            })
            .collect();
        Ok(BitMatrix { rows })
    }

    /// True when the zeros of every column occupy a contiguous block of rows.
    pub fn columns_have_consecutive_zeros(&self) -> bool {
        let n = self.dim();
        (0..n).all(|col| {
            let mut seen_run = false;
            let mut in_run = false;
            for row in &self.rows {
                if row.contains(col) {
                    in_run = false;
                } else if in_run {
                    continue;
                } else if seen_run {
                    return false;
                } else {
                    seen_run = true;
                    in_run = true;
                }
            }
            true
        })
    }

    fn check_dim(&self, ord: &Ordering) -> Result<()> {
        if ord.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                actual: ord.len(),
            });
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<BitRow>,
}

/// Result of [`Graph::induced_subgraph`]: the subgraph and the relabeling.
#[derive(Clone, Debug)]
pub struct InducedSubgraph {
    pub graph: Graph,
    pub old_to_new: Vec<Option<Vertex>>,
    pub new_to_old: Vec<Vertex>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Self {
            adj: (0..n).map(|_| BitRow::zeros(n)).collect(),
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self {
            adj: (0..n).map(|_| BitRow::ones(n)).collect(),
        };
        for v in 0..n {
            g.adj[v].remove(v);
        }
        g
    }

    /// Builds a graph from an edge list; duplicates and reversed duplicates
    /// are merged.
    pub fn from_edge_list(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self> {
        let mut g = Self::empty(n);
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::IndexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            g.set_edge(u, v, true);
        }
        Ok(g)
    }

    pub(crate) fn set_edge(&mut self, u: Vertex, v: Vertex, present: bool) {
        if present {
            self.adj[u].insert(v);
            self.adj[v].insert(u);
        } else {
            self.adj[u].remove(v);
            self.adj[v].remove(u);
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj[u].contains(v)
    }

    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.adj[v].iter_ones()
    }

    pub fn open_neighborhood(&self, v: Vertex) -> &BitRow {
        &self.adj[v]
    }

    pub fn closed_neighborhood(&self, v: Vertex) -> BitRow {
        let mut row = self.adj[v].clone();
        row.insert(v);
        row
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].count_ones()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(BitRow::count_ones).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        (0..self.n())
            .flat_map(|u| {
                self.neighbors(u)
                    .filter(move |&v| v > u)
                    .map(move |v| (u, v))
            })
            .collect()
    }

    /// `M*(G)`: adjacency with ones on the diagonal.
    pub fn augmented_matrix(&self) -> BitMatrix {
        BitMatrix {
            rows: (0..self.n()).map(|v| self.closed_neighborhood(v)).collect(),
        }
    }

    pub fn min_degree(&self) -> Result<usize> {
        (0..self.n())
            .map(|v| self.degree(v))
            .min()
            .ok_or(Error::EmptyGraph)
    }

    pub fn universal_vertices(&self) -> VertexSet {
        let n = self.n();
        (0..n).filter(|&v| self.degree(v) + 1 == n).collect()
    }

    pub fn induced_subgraph(&self, keep: &VertexSet) -> Result<InducedSubgraph> {
        let n = self.n();
        if let Some(bad) = keep.iter().find(|&v| v >= n) {
            return Err(Error::IndexOutOfRange { vertex: bad, n });
        }
        let new_to_old = keep.as_slice().to_vec();
        let mut old_to_new = vec![None; n];
        for (new, &old) in new_to_old.iter().enumerate() {
            old_to_new[old] = Some(new);
        }
        let m = new_to_old.len();
        let adj = new_to_old
            .iter()
            .map(|&old| BitRow::from_indices(m, self.neighbors(old).filter_map(|w| old_to_new[w])))
            .collect();
        Ok(InducedSubgraph {
            graph: Graph { adj },
            old_to_new,
            new_to_old,
        })
    }

    /// Relabels vertex `v` as `map[v]`.
    pub fn relabel(&self, map: &[Vertex]) -> Result<Graph> {
        let n = self.n();
        if map.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                actual: map.len(),
            });
        }
        let mut seen = vec![false; n];
        for &t in map {
            if t >= n || std::mem::replace(&mut seen[t], true) {
                return Err(Error::NotAPermutation(n));
            }
        }
        let mut g = Graph::empty(n);
        for (u, v) in self.edges() {
            g.set_edge(map[u], map[v], true);
        }
        Ok(g)
    }

    /// True iff every vertex has at least `k` members of `d` in its closed
    /// neighborhood.
    pub fn is_k_tuple_dominating(&self, d: &VertexSet, k: usize) -> bool {
        if k == 0 {
            return true;
        }
        let n = self.n();
        if d.iter().any(|v| v >= n) {
            return false;
        }
        let mask = d.to_bitrow(n);
        (0..n).all(|v| {
            let own = usize::from(mask.contains(v));
            self.adj[v].intersection_count(&mask) + own >= k
        })
    }

    pub fn connected_components(&self) -> Vec<VertexSet> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut components = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut queue = VecDeque::from([start]);
            let mut members = Vec::new();
            while let Some(v) = queue.pop_front() {
                members.push(v);
                for w in self.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            components.push(VertexSet::new(members));
        }
        components
    }
}
