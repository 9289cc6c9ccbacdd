//! Consecutive-ones orderings for a family of subsets of `0..universe`.
//!
//! Sets are grouped into overlap components (two sets overlap when they
//! intersect and neither contains the other). Inside one component the
//! arrangement of the covered elements into ordered classes is forced up to
//! reversal, so it is built incrementally in overlap-BFS order. Components
//! never overlap each other; their unions form a laminar family in which a
//! nested union always sits inside a single class of its parent, which
//! makes the final assembly a tree walk.

use std::collections::{HashSet, VecDeque};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bits::BitRow;

const UNPLACED: usize = usize::MAX;

/// Ordered partition of the elements covered by one overlap component.
struct Arrangement {
    classes: Vec<Vec<usize>>,
    class_of: Vec<usize>,
}

impl Arrangement {
    fn new(universe: usize, first: &BitRow) -> Self {
        let mut arrangement = Self {
            classes: vec![first.iter_ones().collect()],
            class_of: vec![UNPLACED; universe],
        };
        arrangement.reindex();
        arrangement
    }

    fn reindex(&mut self) {
        for (c, class) in self.classes.iter().enumerate() {
            for &x in class {
                self.class_of[x] = c;
            }
        }
    }

    /// Places `set`, which must overlap some already placed set. Returns
    /// false when no consecutive placement exists.
    fn insert(&mut self, set: &BitRow) -> bool {
        let m = self.classes.len();
        let mut inside = vec![0usize; m];
        let mut fresh = Vec::new();
        for x in set.iter_ones() {
            match self.class_of[x] {
                UNPLACED => fresh.push(x),
                c => inside[c] += 1,
            }
        }
        let Some(a) = inside.iter().position(|&c| c > 0) else {
            return false;
        };
        let b = inside.iter().rposition(|&c| c > 0).unwrap_or(a);
        let full = |c: usize| inside[c] == self.classes[c].len();
        if (a + 1..b).any(|c| !full(c)) {
            return false;
        }

        let split = |c: usize| -> (Vec<usize>, Vec<usize>) {
            self.classes[c].iter().partition(|&&x| !set.contains(x))
        };
        let mut next: Vec<Vec<usize>> = Vec::with_capacity(m + 3);
        let push_nonempty = |next: &mut Vec<Vec<usize>>, class: Vec<usize>| {
            if !class.is_empty() {
                next.push(class);
            }
        };

        if !fresh.is_empty() {
            let right_ok = b == m - 1 && (a == b || full(b));
            let left_ok = a == 0 && (a == b || full(a));
            if right_ok {
                next.extend(self.classes[..a].iter().cloned());
                let (out, within) = split(a);
                push_nonempty(&mut next, out);
                next.push(within);
                next.extend(self.classes[a + 1..=b].iter().cloned());
                next.push(fresh);
            } else if left_ok {
                next.push(fresh);
                next.extend(self.classes[..b].iter().cloned());
                let (out, within) = split(b);
                next.push(within);
                push_nonempty(&mut next, out);
                next.extend(self.classes[b + 1..].iter().cloned());
            } else {
                return false;
            }
        } else if a == b {
            // A set inside a single class cannot overlap a placed set.
            return full(a);
        } else {
            next.extend(self.classes[..a].iter().cloned());
            let (out, within) = split(a);
            push_nonempty(&mut next, out);
            next.push(within);
            next.extend(self.classes[a + 1..b].iter().cloned());
            let (out, within) = split(b);
            next.push(within);
            push_nonempty(&mut next, out);
            next.extend(self.classes[b + 1..].iter().cloned());
        }
        self.classes = next;
        self.reindex();
        true
    }
}

struct Component {
    classes: Vec<Vec<usize>>,
    union: BitRow,
    size: usize,
    set_count: usize,
}

impl Component {
    fn class_containing(&self, x: usize) -> Option<usize> {
        self.classes.iter().position(|class| class.contains(&x))
    }
}

/// Finds an ordering of `0..universe` in which every set of `sets` is a
/// contiguous block, or `None` if the family lacks the consecutive-ones
/// property. With `seed = None` the result is a deterministic function of
/// the input; a seed perturbs all free choices (class-internal order,
/// component orientation, sibling order) while keeping the result valid.
pub fn consecutive_ones_order(
    universe: usize,
    sets: &[BitRow],
    seed: Option<u64>,
) -> Option<Vec<usize>> {
    let mut rng = seed.map(ChaCha8Rng::seed_from_u64);

    let mut seen = HashSet::new();
    let mut family: Vec<(&BitRow, usize)> = sets
        .iter()
        .map(|s| (s, s.count_ones()))
        .filter(|&(s, count)| count >= 2 && count < universe && seen.insert(s))
        .collect();
    if let Some(rng) = rng.as_mut() {
        family.shuffle(rng);
    }

    let m = family.len();
    let mut overlaps = vec![Vec::new(); m];
    for i in 0..m {
        for j in i + 1..m {
            let common = family[i].0.intersection_count(family[j].0);
            if common > 0 && common < family[i].1 && common < family[j].1 {
                overlaps[i].push(j);
                overlaps[j].push(i);
            }
        }
    }

    let mut components = Vec::new();
    let mut visited = vec![false; m];
    for start in 0..m {
        if visited[start] {
            continue;
        }
        visited[start] = true;
        let mut queue = VecDeque::from([start]);
        let mut arrangement = Arrangement::new(universe, family[start].0);
        let mut union = family[start].0.clone();
        let mut set_count = 0;
        while let Some(i) = queue.pop_front() {
            set_count += 1;
            if i != start {
                if !arrangement.insert(family[i].0) {
                    return None;
                }
                union.union_with(family[i].0);
            }
            for &j in &overlaps[i] {
                if !visited[j] {
                    visited[j] = true;
                    queue.push_back(j);
                }
            }
        }
        let size = union.count_ones();
        components.push(Component {
            classes: arrangement.classes,
            union,
            size,
            set_count,
        });
    }

    // Containment forest over component unions. Equal unions only arise for
    // a single set equal to the union of another component; the singleton
    // sorts first and becomes the parent.
    let mut by_size: Vec<usize> = (0..components.len()).collect();
    by_size.sort_by_key(|&c| {
        (
            std::cmp::Reverse(components[c].size),
            components[c].set_count,
            c,
        )
    });
    let mut children: Vec<Vec<Vec<usize>>> = components
        .iter()
        .map(|c| vec![Vec::new(); c.classes.len()])
        .collect();
    let mut roots = Vec::new();
    for (pos, &c) in by_size.iter().enumerate() {
        let parent = by_size[..pos]
            .iter()
            .rev()
            .copied()
            .find(|&p| components[c].union.is_subset(&components[p].union));
        match parent {
            None => roots.push(c),
            Some(p) => {
                let mut elements = components[c].union.iter_ones();
                let first = elements.next()?;
                let class = components[p].class_containing(first)?;
                if !elements.all(|x| components[p].classes[class].contains(&x)) {
                    return None;
                }
                children[p][class].push(c);
            }
        }
    }

    let mut placed = vec![false; universe];
    let mut order = Vec::with_capacity(universe);
    if let Some(rng) = rng.as_mut() {
        roots.shuffle(rng);
    }
    for root in roots {
        emit(
            root,
            &components,
            &mut children,
            &mut placed,
            &mut order,
            &mut rng,
        );
    }
    let mut free: Vec<usize> = (0..universe).filter(|&x| !placed[x]).collect();
    if let Some(rng) = rng.as_mut() {
        free.shuffle(rng);
    }
    order.extend(free);

    debug_assert!(is_consecutive_order(&order, sets));
    is_consecutive_order(&order, sets).then_some(order)
}

fn emit(
    c: usize,
    components: &[Component],
    children: &mut [Vec<Vec<usize>>],
    placed: &mut [bool],
    order: &mut Vec<usize>,
    rng: &mut Option<ChaCha8Rng>,
) {
    let classes = &components[c].classes;
    let mut class_order: Vec<usize> = (0..classes.len()).collect();
    if let Some(rng) = rng.as_mut() {
        if rng.gen_bool(0.5) {
            class_order.reverse();
        }
    }
    for class in class_order {
        let mut kids = std::mem::take(&mut children[c][class]);
        if let Some(rng) = rng.as_mut() {
            kids.shuffle(rng);
        }
        for kid in kids {
            emit(kid, components, children, placed, order, rng);
        }
        let mut rest: Vec<usize> = classes[class]
            .iter()
            .copied()
            .filter(|&x| !placed[x])
            .collect();
        if let Some(rng) = rng.as_mut() {
            rest.shuffle(rng);
        }
        for &x in &rest {
            placed[x] = true;
        }
        order.extend(rest);
    }
}

/// True when `order` is a permutation in which every set is contiguous.
pub fn is_consecutive_order(order: &[usize], sets: &[BitRow]) -> bool {
    let n = order.len();
    let mut pos = vec![UNPLACED; n];
    for (p, &x) in order.iter().enumerate() {
        if x >= n || pos[x] != UNPLACED {
            return false;
        }
        pos[x] = p;
    }
    sets.iter().all(|set| {
        if set.len() != n {
            return false;
        }
        let (mut lo, mut hi, mut count) = (usize::MAX, 0, 0);
        for x in set.iter_ones() {
            lo = lo.min(pos[x]);
            hi = hi.max(pos[x]);
            count += 1;
        }
        count == 0 || hi - lo + 1 == count
    })
}
