//! Recognition of C0P-graphs: graphs whose augmented adjacency matrix can be
//! row-permuted so that the zeros of every column are consecutive.
//!
//! Column `c` of `M*` has its zeros exactly on the non-neighbors of `c`, so a
//! certifying row order is a consecutive-ones order for the family of
//! non-neighborhoods. Reordering columns never affects whether a column's
//! zeros are contiguous, so the same permutation may be applied to rows and
//! columns alike; certificates are always checked in that symmetric form.

use crate::bits::BitRow;
use crate::consecutive::consecutive_ones_order;
use crate::error::{Error, Result};
use crate::graph::{BitMatrix, Graph, Vertex};

/// A permutation of `0..n`, read as position -> vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ordering {
    perm: Vec<Vertex>,
}

impl Ordering {
    pub fn new(perm: Vec<Vertex>) -> Result<Self> {
        let n = perm.len();
        let mut seen = vec![false; n];
        for &v in &perm {
            if v >= n || std::mem::replace(&mut seen[v], true) {
                return Err(Error::NotAPermutation(n));
            }
        }
        Ok(Self { perm })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            perm: (0..n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.perm.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perm.is_empty()
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.perm
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.perm.iter().copied()
    }

    /// Inverse map: vertex -> position.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.perm.len()];
        for (p, &v) in self.perm.iter().enumerate() {
            pos[v] = p;
        }
        pos
    }

    pub fn reversed(&self) -> Self {
        Self {
            perm: self.perm.iter().rev().copied().collect(),
        }
    }
}

/// Knobs for [`find_c0p_ordering_with`].
#[derive(Clone, Copy, Debug, Default)]
pub struct RecognitionOptions {
    /// Perturbs tie-breaks among valid orderings. `None` is the canonical,
    /// deterministic choice.
    pub tiebreak_seed: Option<u64>,
}

pub fn find_c0p_ordering(g: &Graph) -> Option<Ordering> {
    find_c0p_ordering_with(g, RecognitionOptions::default())
}

/// Returns a certifying ordering (universal vertices last) or `None` when
/// `g` is not a C0P-graph.
pub fn find_c0p_ordering_with(g: &Graph, opts: RecognitionOptions) -> Option<Ordering> {
    let n = g.n();
    let zero_sets: Vec<BitRow> = (0..n)
        .map(|v| g.closed_neighborhood(v).complement())
        .collect();
    let order = consecutive_ones_order(n, &zero_sets, opts.tiebreak_seed)?;

    // All-ones rows never sit inside a zero run, so moving them is free.
    let universal = g.universal_vertices();
    let perm: Vec<Vertex> = order
        .iter()
        .copied()
        .filter(|&v| !universal.contains(v))
        .chain(universal.iter())
        .collect();
    let ord = Ordering { perm };
    debug_assert_eq!(verify_c0p_ordering(&g.augmented_matrix(), &ord), Ok(true));
    Some(ord)
}

/// Checks that relabeling rows and columns of `m` by `ord` leaves every
/// column's zeros contiguous.
pub fn verify_c0p_ordering(m: &BitMatrix, ord: &Ordering) -> Result<bool> {
    Ok(m.permute_symmetric(ord)?.columns_have_consecutive_zeros())
}

/// Row-only form of the certificate check.
pub fn verify_row_permutation(m: &BitMatrix, ord: &Ordering) -> Result<bool> {
    Ok(m.permute_rows(ord)?.columns_have_consecutive_zeros())
}
