mod common;

use ktdom_core::generator::{gen_staircase, scramble, staircase_structure, StaircaseSpec};
use ktdom_core::oracle::brute_force_gamma;
use ktdom_core::solver::{gamma_from_structure, gamma_ktuple_with};
use ktdom_core::{analyze, gamma_ktuple, Rule, SolveOptions};
use proptest::prelude::*;

/// Monotone runs over `n2` offsets built from sorted endpoint draws.
fn staircase() -> impl Strategy<Value = StaircaseSpec> {
    (1usize..=5, 1usize..=5, 0usize..=3).prop_flat_map(|(n1, n2, u)| {
        (
            prop::collection::vec(0..n2, n1),
            prop::collection::vec(0..n2, n1),
            prop::collection::vec(prop::bool::weighted(0.8), n1),
        )
            .prop_map(move |(mut lows, mut highs, present)| {
                lows.sort_unstable();
                highs.sort_unstable();
                let runs = (0..n1)
                    .map(|i| present[i].then(|| (lows[i], highs[i].max(lows[i]))))
                    .collect::<Vec<_>>();
                // Re-establish monotone right endpoints after the max.
                let mut prev = 0;
                let runs = runs
                    .into_iter()
                    .map(|r| {
                        r.map(|(lo, hi)| {
                            prev = prev.max(hi);
                            (lo, prev)
                        })
                    })
                    .collect();
                StaircaseSpec {
                    n1,
                    n2,
                    u,
                    runs,
                    seed: 0,
                }
            })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn resolved_answers_match_oracle(spec in staircase(), scramble_seed in any::<u64>()) {
        let g = scramble(&gen_staircase(&spec).unwrap(), scramble_seed);
        let delta = g.min_degree().unwrap();
        for k in 0..=delta + 2 {
            let ours = gamma_ktuple_with(&g, k, SolveOptions::with_fallback()).unwrap();
            let truth = brute_force_gamma(&g, k).unwrap();
            prop_assert_eq!(ours.status(), truth.status(), "k={}", k);
            prop_assert_eq!(ours.gamma(), truth.gamma(), "k={}", k);
            if let Some(w) = ours.witness() {
                prop_assert!(g.is_k_tuple_dominating(w, k));
            }
        }
    }

    #[test]
    fn formula_values_are_exact_or_undetermined(spec in staircase()) {
        let g = gen_staircase(&spec).unwrap();
        for k in 1..=g.min_degree().unwrap() + 1 {
            let ours = gamma_ktuple(&g, k).unwrap();
            if !ours.is_undetermined() {
                prop_assert_eq!(ours.gamma(), brute_force_gamma(&g, k).unwrap().gamma());
                prop_assert!(ours.gamma().unwrap() >= k);
            }
        }
    }

    #[test]
    fn direct_structure_agrees_with_recognized_one(spec in staircase()) {
        let g = gen_staircase(&spec).unwrap();
        let direct = staircase_structure(&spec).unwrap();
        let recognized = analyze(&g).unwrap();
        prop_assert_eq!(direct.u().len(), recognized.u().len());
        // Individual stability numbers depend on the split; their sum does not.
        prop_assert_eq!(direct.alpha1() + direct.alpha2(), recognized.alpha1() + recognized.alpha2());
        // The split into two cliques is not unique when the complement is
        // disconnected, and the open region of the general-k formula depends
        // on the split. Determined answers must agree; up to k = |U| + 3
        // every answer is determined.
        for k in 0..=g.min_degree().unwrap() + 1 {
            let x = gamma_from_structure(&direct, k, Some(&g), SolveOptions::default()).unwrap();
            let y = gamma_from_structure(&recognized, k, Some(&g), SolveOptions::default()).unwrap();
            if k <= spec.u + 3 {
                prop_assert!(!x.is_undetermined() && !y.is_undetermined());
            }
            if !x.is_undetermined() && !y.is_undetermined() {
                prop_assert_eq!(x.gamma(), y.gamma());
            }
        }
    }
}

#[test]
fn universal_rule_covers_small_k() {
    let spec = StaircaseSpec {
        n1: 3,
        n2: 3,
        u: 2,
        runs: vec![Some((0, 1)), Some((1, 1)), Some((1, 2))],
        seed: 0,
    };
    let g = common::graph(&spec);
    for k in 1..=2 {
        let r = gamma_ktuple(&g, k).unwrap();
        assert_eq!(r.gamma(), Some(k));
        assert_eq!(r.rule(), Some(Rule::Universal));
    }
    assert_eq!(gamma_ktuple(&g, 3).unwrap().gamma(), Some(4));
}
