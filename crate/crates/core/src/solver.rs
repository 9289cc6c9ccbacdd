//! Minimum k-tuple domination on C0P-graphs.
//!
//! The computation runs in three stages:
//!
//! 1. `k = 0` costs nothing and `k > δ(G) + 1` is infeasible.
//! 2. With `|U| ≥ k` any `k` universal vertices form an optimal set. When
//!    `|U| < k`, a universal vertex can always be swapped into an optimal
//!    set, so `γ×k(G) = γ×(k-|U|)(G - U) + |U|` and `U` joins the witness.
//! 3. On the core `G - U` (no universal vertex, two cliques `C1`, `C2`) the
//!    answer depends only on `k' = k - |U|`, the stability numbers `α1`,
//!    `α2` of the interval models and, in one case, the clique sizes:
//!
//!    | condition                              | γ×k'      |
//!    |----------------------------------------|-----------|
//!    | `α1 = α2 = 1`                          | `2k'`     |
//!    | `α1 + α2 > k'`                         | `k' + 1`  |
//!    | `α1 + α2 = k'`, `|Ci| ≥ αi + 1`        | `k' + 2`  |
//!    | otherwise, `k' ≥ 4`                    | undetermined |
//!
//!    For `k' ≤ 3` the table is complete. A subset `S ⊆ Ci` misses at most
//!    one member for every vertex of the other clique exactly when its
//!    intervals are pairwise disjoint, which is what makes stable sets of
//!    the interval models the building blocks of every witness.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::oracle;
use crate::structure::{analyze, C0PStructure};

/// Which construction produced a value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Rule {
    /// `k = 0`: the empty set.
    Empty,
    /// `k ≤ |U|`: `k` universal vertices.
    Universal,
    /// Core `k' = 1`: one vertex from each clique.
    CliquePair,
    /// Core `α1 + α2 > k'`: stable sets with `k' + 1` members in total.
    StableUnion,
    /// Core `α1 + α2 = k'`: both maximum stable sets plus one more vertex
    /// from each clique.
    StableUnionPlusTwo,
    /// Core `α1 = α2 = 1`: `k'` vertices from each clique.
    CliqueBlocks,
    /// Exhaustive search.
    Oracle,
}

impl Rule {
    pub fn as_str(self) -> &'static str {
        match self {
            Rule::Empty => "empty",
            Rule::Universal => "universal",
            Rule::CliquePair => "clique-pair",
            Rule::StableUnion => "stable-union",
            Rule::StableUnionPlusTwo => "stable-union-plus-two",
            Rule::CliqueBlocks => "clique-blocks",
            Rule::Oracle => "oracle",
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DominationResult {
    Value {
        gamma: usize,
        witness: VertexSet,
        rule: Rule,
    },
    /// `k > δ(G) + 1`; the domination number is `+∞`.
    Infeasible,
    Undetermined {
        reason: String,
    },
}

impl DominationResult {
    pub fn gamma(&self) -> Option<usize> {
        match self {
            DominationResult::Value { gamma, .. } => Some(*gamma),
            _ => None,
        }
    }

    pub fn witness(&self) -> Option<&VertexSet> {
        match self {
            DominationResult::Value { witness, .. } => Some(witness),
            _ => None,
        }
    }

    pub fn rule(&self) -> Option<Rule> {
        match self {
            DominationResult::Value { rule, .. } => Some(*rule),
            _ => None,
        }
    }

    pub fn is_infeasible(&self) -> bool {
        matches!(self, DominationResult::Infeasible)
    }

    pub fn is_undetermined(&self) -> bool {
        matches!(self, DominationResult::Undetermined { .. })
    }

    pub fn status(&self) -> &'static str {
        match self {
            DominationResult::Value { .. } => "value",
            DominationResult::Infeasible => "infeasible",
            DominationResult::Undetermined { .. } => "undetermined",
        }
    }
}

/// Closed-form core value, before any witness is built.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoreFormula {
    Value { gamma: usize, rule: Rule },
    Undetermined(&'static str),
}

impl CoreFormula {
    pub fn gamma(self) -> Option<usize> {
        match self {
            CoreFormula::Value { gamma, .. } => Some(gamma),
            CoreFormula::Undetermined(_) => None,
        }
    }
}

const OPEN_REGION: &str =
    "no closed form for 2 < alpha1 + alpha2 < k, or alpha1 + alpha2 = k with a side of size alpha_i";

/// `γ×2` of a core (no universal vertices), `αi ≥ 1`.
pub fn gamma2_core(alpha1: usize, alpha2: usize) -> usize {
    if alpha1 + alpha2 >= 3 {
        3
    } else {
        4
    }
}

/// `γ×3` of a core (no universal vertices), `αi ≥ 1`.
pub fn gamma3_core(alpha1: usize, alpha2: usize) -> usize {
    match alpha1 + alpha2 {
        s if s >= 4 => 4,
        3 => 5,
        _ => 6,
    }
}

/// Core value for arbitrary `k ≥ 1`; feasibility must already hold.
pub fn gamma_general_core(
    k: usize,
    alpha1: usize,
    alpha2: usize,
    size1: usize,
    size2: usize,
) -> CoreFormula {
    let sum = alpha1 + alpha2;
    if sum == 2 {
        CoreFormula::Value {
            gamma: 2 * k,
            rule: Rule::CliqueBlocks,
        }
    } else if sum > k {
        CoreFormula::Value {
            gamma: k + 1,
            rule: Rule::StableUnion,
        }
    } else if sum == k && size1 > alpha1 && size2 > alpha2 {
        CoreFormula::Value {
            gamma: k + 2,
            rule: Rule::StableUnionPlusTwo,
        }
    } else {
        CoreFormula::Undetermined(OPEN_REGION)
    }
}

/// Dispatches on `k'` for the core of `st`.
pub fn core_formula(st: &C0PStructure, k: usize) -> CoreFormula {
    let (a1, a2) = (st.alpha1(), st.alpha2());
    match k {
        0 => CoreFormula::Value {
            gamma: 0,
            rule: Rule::Empty,
        },
        1 => CoreFormula::Value {
            gamma: 2,
            rule: Rule::CliquePair,
        },
        2 => CoreFormula::Value {
            gamma: gamma2_core(a1, a2),
            rule: if a1 + a2 >= 3 {
                Rule::StableUnion
            } else {
                Rule::CliqueBlocks
            },
        },
        3 => CoreFormula::Value {
            gamma: gamma3_core(a1, a2),
            rule: match a1 + a2 {
                s if s >= 4 => Rule::StableUnion,
                3 => Rule::StableUnionPlusTwo,
                _ => Rule::CliqueBlocks,
            },
        },
        _ => gamma_general_core(k, a1, a2, st.c1().len(), st.c2().len()),
    }
}

/// Builds the core part of a witness (no `U` vertices) for `k'` under
/// `rule`, in clique-ordering order.
pub fn build_witness(st: &C0PStructure, k: usize, rule: Rule) -> Result<Vec<Vertex>> {
    let (c1, c2) = (st.c1(), st.c2());
    let fail = |what: &str| {
        Err(Error::ConstructionFailure(format!(
            "{rule} for k' = {k}: {what}"
        )))
    };
    let witness = match rule {
        Rule::Empty => Vec::new(),
        Rule::CliquePair => match (c1.first(), c2.first()) {
            (Some(&x), Some(&y)) => vec![x, y],
            _ => return fail("a clique is empty"),
        },
        Rule::StableUnion => {
            let mut s1 = st.stable1().to_vec();
            let mut s2 = st.stable2().to_vec();
            if s1.len() + s2.len() < k + 1 {
                return fail("stable sets are too small");
            }
            while s1.len() + s2.len() > k + 1 {
                if s1.len() >= s2.len() {
                    s1.pop();
                } else {
                    s2.pop();
                }
            }
            s1.into_iter().chain(s2).collect()
        }
        Rule::StableUnionPlusTwo => {
            let (s1, s2) = (st.stable1(), st.stable2());
            let w1 = c1.iter().find(|v| !s1.contains(v));
            let w2 = c2.iter().find(|v| !s2.contains(v));
            match (w1, w2) {
                (Some(&w1), Some(&w2)) => s1.iter().chain(s2).copied().chain([w1, w2]).collect(),
                _ => return fail("a clique has no vertex outside its stable set"),
            }
        }
        Rule::CliqueBlocks => {
            if c1.len() < k || c2.len() < k {
                return fail("a clique has fewer than k' vertices");
            }
            c1[..k].iter().chain(&c2[..k]).copied().collect()
        }
        Rule::Universal | Rule::Oracle => return fail("rule has no core construction"),
    };
    Ok(witness)
}

#[derive(Clone, Copy, Debug)]
pub struct SolveOptions {
    /// Answer undetermined cases by exhaustive search when a graph is at
    /// hand and small enough.
    pub oracle_fallback: bool,
    pub oracle_cap: usize,
}

impl Default for SolveOptions {
    fn default() -> Self {
        Self {
            oracle_fallback: false,
            oracle_cap: oracle::DEFAULT_CAP,
        }
    }
}

impl SolveOptions {
    pub fn with_fallback() -> Self {
        Self {
            oracle_fallback: true,
            ..Self::default()
        }
    }
}

/// `γ×k(g)` with a verified witness. Fails with `NotC0P` when `g` is not
/// recognized.
pub fn gamma_ktuple(g: &Graph, k: usize) -> Result<DominationResult> {
    gamma_ktuple_with(g, k, SolveOptions::default())
}

pub fn gamma_ktuple_with(g: &Graph, k: usize, opts: SolveOptions) -> Result<DominationResult> {
    let st = analyze(g)?;
    gamma_from_structure(&st, k, Some(g), opts)
}

/// Solves from a precomputed structure. When `graph` is given the witness is
/// checked against it as well as against the structure.
pub fn gamma_from_structure(
    st: &C0PStructure,
    k: usize,
    graph: Option<&Graph>,
    opts: SolveOptions,
) -> Result<DominationResult> {
    if k == 0 {
        return Ok(DominationResult::Value {
            gamma: 0,
            witness: VertexSet::empty(),
            rule: Rule::Empty,
        });
    }
    let Some(delta) = st.min_degree() else {
        return Ok(DominationResult::Infeasible);
    };
    if k > delta + 1 {
        return Ok(DominationResult::Infeasible);
    }

    let u = st.u();
    let (witness, rule, promised) = if k <= u.len() {
        (VertexSet::new(u[..k].iter().copied()), Rule::Universal, k)
    } else {
        let core_k = k - u.len();
        match core_formula(st, core_k) {
            CoreFormula::Value { gamma, rule } => {
                let core = build_witness(st, core_k, rule)?;
                (
                    VertexSet::new(core.into_iter().chain(u.iter().copied())),
                    rule,
                    gamma + u.len(),
                )
            }
            CoreFormula::Undetermined(reason) => {
                return match graph {
                    Some(g) if opts.oracle_fallback && g.n() <= opts.oracle_cap => {
                        oracle::brute_force_gamma_capped(g, k, opts.oracle_cap)
                    }
                    _ => Ok(DominationResult::Undetermined {
                        reason: reason.to_string(),
                    }),
                };
            }
        }
    };

    if witness.len() != promised {
        return Err(Error::ConstructionFailure(format!(
            "{rule} promised {promised} vertices, built {}",
            witness.len()
        )));
    }
    let valid = st.is_k_tuple_dominating(&witness, k)
        && graph.is_none_or(|g| g.is_k_tuple_dominating(&witness, k));
    if !valid {
        return Err(Error::ConstructionFailure(format!(
            "{rule} witness is not {k}-tuple dominating"
        )));
    }
    Ok(DominationResult::Value {
        gamma: promised,
        witness,
        rule,
    })
}

/// `γ×k` for `k = 1 ..= |U| + 3`, stopping before the first infeasible `k`
/// (feasibility is monotone in `k`).
pub fn gamma_range(g: &Graph) -> Result<Vec<(usize, DominationResult)>> {
    let st = analyze(g)?;
    gamma_range_from_structure(&st, Some(g), SolveOptions::default())
}

pub fn gamma_range_from_structure(
    st: &C0PStructure,
    graph: Option<&Graph>,
    opts: SolveOptions,
) -> Result<Vec<(usize, DominationResult)>> {
    let mut out = Vec::new();
    for k in 1..=st.u().len() + 3 {
        let result = gamma_from_structure(st, k, graph, opts)?;
        if result.is_infeasible() {
            break;
        }
        out.push((k, result));
    }
    Ok(out)
}
