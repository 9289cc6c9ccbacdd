//! Interval models over integer positions and their maximum stable sets.

use serde::{Deserialize, Serialize};

use crate::graph::Vertex;

/// Closed integer interval `[lo, hi]` representing `vertex`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Interval {
    pub vertex: Vertex,
    pub lo: usize,
    pub hi: usize,
}

impl Interval {
    pub fn intersects(&self, other: &Interval) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    pub fn contains(&self, pos: usize) -> bool {
        self.lo <= pos && pos <= self.hi
    }

    pub fn width(&self) -> usize {
        self.hi - self.lo + 1
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntervalModel {
    pub intervals: Vec<Interval>,
    /// Vertices with an empty zero run; they intersect nothing.
    pub isolated: Vec<Vertex>,
}

impl IntervalModel {
    pub fn new(intervals: Vec<Interval>) -> Self {
        Self {
            intervals,
            isolated: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.intervals.len() + self.isolated.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn interval_of(&self, v: Vertex) -> Option<&Interval> {
        self.intervals.iter().find(|iv| iv.vertex == v)
    }

    /// Greedy sweep by right endpoint (ties: left endpoint, then vertex).
    /// Isolated vertices are always included.
    pub fn max_stable_set(&self) -> Vec<Vertex> {
        let key = |iv: &Interval| (iv.hi, iv.lo, iv.vertex);
        let mut chosen = if self.intervals.is_sorted_by_key(key) {
            greedy(self.intervals.iter())
        } else {
            let mut sorted: Vec<&Interval> = self.intervals.iter().collect();
            sorted.sort_unstable_by_key(|iv| key(iv));
            greedy(sorted.into_iter())
        };
        chosen.extend(self.isolated.iter().copied());
        chosen
    }

    pub fn stability_number(&self) -> usize {
        self.max_stable_set().len()
    }

    /// True when the intervals of `vertices` are pairwise disjoint.
    /// Vertices missing from the model are ignored.
    pub fn is_stable(&self, vertices: &[Vertex]) -> bool {
        let mut members: Vec<&Interval> = self
            .intervals
            .iter()
            .filter(|iv| vertices.contains(&iv.vertex))
            .collect();
        members.sort_unstable_by_key(|iv| (iv.lo, iv.hi));
        members.windows(2).all(|w| w[0].hi < w[1].lo)
    }
}

/// Takes every interval that starts after the last one taken; `sorted` must
/// be ordered by right endpoint.
fn greedy<'a>(sorted: impl Iterator<Item = &'a Interval>) -> Vec<Vertex> {
    let mut chosen = Vec::new();
    let mut last_hi: Option<usize> = None;
    for iv in sorted {
        if last_hi.is_none_or(|hi| iv.lo > hi) {
            chosen.push(iv.vertex);
            last_hi = Some(iv.hi);
        }
    }
    chosen
}

#[cfg(test)]
mod tests {
    use super::*;

    fn model(spans: &[(usize, usize)]) -> IntervalModel {
        IntervalModel::new(
            spans
                .iter()
                .enumerate()
                .map(|(vertex, &(lo, hi))| Interval { vertex, lo, hi })
                .collect(),
        )
    }

    fn exhaustive_alpha(m: &IntervalModel) -> usize {
        let k = m.intervals.len();
        (0u32..1 << k)
            .filter(|mask| {
                let picked: Vec<Vertex> = (0..k).filter(|i| mask >> i & 1 == 1).collect();
                m.is_stable(&picked)
            })
            .map(|mask| mask.count_ones() as usize)
            .max()
            .unwrap_or(0)
            + m.isolated.len()
    }

    #[test]
    fn small_examples() {
        assert_eq!(model(&[(1, 3), (2, 4), (5, 6)]).stability_number(), 2);
        assert_eq!(IntervalModel::default().stability_number(), 0);
        let h1 = IntervalModel::new(vec![
            Interval {
                vertex: 0,
                lo: 5,
                hi: 6,
            },
            Interval {
                vertex: 1,
                lo: 4,
                hi: 6,
            },
            Interval {
                vertex: 2,
                lo: 4,
                hi: 4,
            },
        ]);
        assert_eq!(h1.max_stable_set(), vec![2, 0]);
    }

    #[test]
    fn isolated_vertices_count() {
        let mut m = model(&[(1, 2), (2, 3)]);
        m.isolated.push(9);
        assert_eq!(m.max_stable_set(), vec![0, 9]);
    }

    use proptest::prelude::*;

    proptest! {
        #[test]
        fn greedy_matches_exhaustive(spans in prop::collection::vec((1usize..12, 0usize..5), 0..=15)) {
            let m = model(&spans.iter().map(|&(lo, w)| (lo, lo + w)).collect::<Vec<_>>());
            let chosen = m.max_stable_set();
            prop_assert!(m.is_stable(&chosen));
            prop_assert_eq!(chosen.len(), exhaustive_alpha(&m));
        }
    }
}
