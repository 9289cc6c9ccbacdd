//! Exhaustive ground truth for small instances.

use crate::error::{Error, Result};
use crate::graph::{BitMatrix, Graph, VertexSet};
use crate::recognition::Ordering;
use crate::solver::{DominationResult, Rule};

pub const DEFAULT_CAP: usize = 20;
pub const DEFAULT_C0P_CAP: usize = 12;

pub fn brute_force_gamma(g: &Graph, k: usize) -> Result<DominationResult> {
    brute_force_gamma_capped(g, k, DEFAULT_CAP)
}

/// Minimum k-tuple dominating set by enumeration in increasing size, summed
/// over connected components.
pub fn brute_force_gamma_capped(g: &Graph, k: usize, cap: usize) -> Result<DominationResult> {
    let n = g.n();
    if n > cap.min(31) {
        return Err(Error::CapExceeded { n, cap });
    }
    if k == 0 {
        return Ok(oracle_value(VertexSet::empty()));
    }
    if n == 0 || (0..n).any(|v| g.degree(v) + 1 < k) {
        return Ok(DominationResult::Infeasible);
    }
    let mut witness = Vec::new();
    for comp in g.connected_components() {
        let members = comp.as_slice();
        let masks = local_masks(g, members);
        let best = smallest_dominating_mask(&masks, k)
            .expect("every closed neighborhood has at least k vertices");
        witness.extend(
            (0..members.len())
                .filter(|&i| best >> i & 1 == 1)
                .map(|i| members[i]),
        );
    }
    Ok(oracle_value(VertexSet::new(witness)))
}

/// All minimum k-tuple dominating sets of `g` (no component split).
pub fn minimum_ktuple_sets(g: &Graph, k: usize, cap: usize) -> Result<Vec<VertexSet>> {
    let n = g.n();
    if n > cap.min(31) {
        return Err(Error::CapExceeded { n, cap });
    }
    if k == 0 {
        return Ok(vec![VertexSet::empty()]);
    }
    if n == 0 || (0..n).any(|v| g.degree(v) + 1 < k) {
        return Ok(Vec::new());
    }
    let all: Vec<usize> = (0..n).collect();
    let masks = local_masks(g, &all);
    for size in k..=n {
        let found: Vec<VertexSet> = subsets_of_size(n, size)
            .filter(|&d| dominates(&masks, d, k))
            .map(|d| VertexSet::new((0..n).filter(|&i| d >> i & 1 == 1)))
            .collect();
        if !found.is_empty() {
            return Ok(found);
        }
    }
    Ok(Vec::new())
}

fn oracle_value(witness: VertexSet) -> DominationResult {
    DominationResult::Value {
        gamma: witness.len(),
        witness,
        rule: Rule::Oracle,
    }
}

fn local_masks(g: &Graph, members: &[usize]) -> Vec<u32> {
    members
        .iter()
        .map(|&v| {
            members
                .iter()
                .enumerate()
                .filter(|&(_, &w)| w == v || g.has_edge(v, w))
                .fold(0u32, |acc, (i, _)| acc | 1 << i)
        })
        .collect()
}

fn dominates(masks: &[u32], d: u32, k: usize) -> bool {
    masks.iter().all(|&m| (m & d).count_ones() as usize >= k)
}

fn smallest_dominating_mask(masks: &[u32], k: usize) -> Option<u32> {
    let m = masks.len();
    (k..=m).find_map(|size| subsets_of_size(m, size).find(|&d| dominates(masks, d, k)))
}

/// Subsets of `0..n` with exactly `size` members, as bit masks (Gosper).
fn subsets_of_size(n: usize, size: usize) -> impl Iterator<Item = u32> {
    let limit = 1u64 << n;
    let mut next = if size <= n {
        Some((1u64 << size) - 1)
    } else {
        None
    };
    std::iter::from_fn(move || {
        let current = next?;
        if current >= limit {
            return None;
        }
        next = if current == 0 {
            None
        } else {
            let low = current & current.wrapping_neg();
            let ripple = current + low;
            Some((((ripple ^ current) >> 2) / low) | ripple)
        };
        Some(current as u32)
    })
}

/// Backtracking search for a row order making every column's zeros
/// consecutive.
pub fn brute_force_c0p(m: &BitMatrix) -> Result<Option<Ordering>> {
    brute_force_c0p_capped(m, DEFAULT_C0P_CAP)
}

pub fn brute_force_c0p_capped(m: &BitMatrix, cap: usize) -> Result<Option<Ordering>> {
    let n = m.dim();
    if n > cap {
        return Err(Error::CapExceeded { n, cap });
    }
    let mut search = RowSearch {
        m,
        used: vec![false; n],
        prefix: Vec::with_capacity(n),
        state: vec![Run::NotStarted; n],
        zeros_left: (0..n)
            .map(|c| (0..n).filter(|&r| !m.get(r, c)).count())
            .collect(),
    };
    if search.place() {
        Ok(Some(Ordering::new(search.prefix)?))
    } else {
        Ok(None)
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Run {
    NotStarted,
    Open,
    Closed,
}

struct RowSearch<'a> {
    m: &'a BitMatrix,
    used: Vec<bool>,
    prefix: Vec<usize>,
    state: Vec<Run>,
    zeros_left: Vec<usize>,
}

impl RowSearch<'_> {
    fn place(&mut self) -> bool {
        let n = self.used.len();
        if self.prefix.len() == n {
            return true;
        }
        for row in 0..n {
            if self.used[row] {
                continue;
            }
            let saved_state = self.state.clone();
            let saved_left = self.zeros_left.clone();
            let mut ok = true;
            for col in 0..n {
                if !self.m.get(row, col) {
                    if self.state[col] == Run::Closed {
                        ok = false;
                        break;
                    }
                    self.state[col] = Run::Open;
                    self.zeros_left[col] -= 1;
                } else if self.state[col] == Run::Open {
                    self.state[col] = Run::Closed;
                    if self.zeros_left[col] > 0 {
                        ok = false;
                        break;
                    }
                }
            }
            if ok {
                self.used[row] = true;
                self.prefix.push(row);
                if self.place() {
                    return true;
                }
                self.prefix.pop();
                self.used[row] = false;
            }
            self.state = saved_state;
            self.zeros_left = saved_left;
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{cycle, example_graph, path, two_triangles};
    use crate::recognition::verify_c0p_ordering;

    #[test]
    fn gamma_examples() {
        assert_eq!(
            brute_force_gamma(&example_graph(), 3).unwrap().gamma(),
            Some(4)
        );
        assert_eq!(
            brute_force_gamma(&Graph::complete(3), 2).unwrap().gamma(),
            Some(2)
        );
        let p3 = brute_force_gamma(&path(3), 2).unwrap();
        assert_eq!(p3.gamma(), Some(3));
        assert_eq!(p3.witness().unwrap(), &VertexSet::new([0, 1, 2]));
    }

    #[test]
    fn zero_and_infeasible() {
        let g = example_graph();
        assert_eq!(brute_force_gamma(&g, 0).unwrap().gamma(), Some(0));
        assert!(brute_force_gamma(&g, 5).unwrap().is_infeasible());
        assert!(brute_force_gamma(&Graph::empty(0), 1)
            .unwrap()
            .is_infeasible());
    }

    #[test]
    fn components_add_up() {
        let g = two_triangles();
        for k in 1..=3 {
            let single = brute_force_gamma(&Graph::complete(3), k)
                .unwrap()
                .gamma()
                .unwrap();
            assert_eq!(brute_force_gamma(&g, k).unwrap().gamma(), Some(2 * single));
        }
    }

    #[test]
    fn cap_is_enforced() {
        assert_eq!(
            brute_force_gamma(&Graph::empty(21), 1),
            Err(Error::CapExceeded { n: 21, cap: 20 })
        );
        assert!(matches!(
            brute_force_c0p(&BitMatrix::identity(13)),
            Err(Error::CapExceeded { n: 13, cap: 12 })
        ));
    }

    #[test]
    fn subset_enumeration_counts() {
        assert_eq!(subsets_of_size(6, 3).count(), 20);
        assert_eq!(subsets_of_size(5, 0).collect::<Vec<_>>(), vec![0]);
        assert_eq!(subsets_of_size(4, 4).collect::<Vec<_>>(), vec![0b1111]);
        assert_eq!(subsets_of_size(3, 4).count(), 0);
    }

    #[test]
    fn c0p_examples() {
        assert_eq!(brute_force_c0p(&cycle(5).augmented_matrix()).unwrap(), None);
        let m = example_graph().augmented_matrix();
        let ord = brute_force_c0p(&m).unwrap().unwrap();
        assert_eq!(verify_c0p_ordering(&m, &ord), Ok(true));
        assert_eq!(
            brute_force_c0p(&BitMatrix::all_ones(1)).unwrap(),
            Some(Ordering::identity(1))
        );
    }

    #[test]
    fn all_minimum_sets_of_a_triangle() {
        let sets = minimum_ktuple_sets(&Graph::complete(3), 2, 12).unwrap();
        assert_eq!(sets.len(), 3);
        assert!(sets.iter().all(|s| s.len() == 2));
    }
}
