//! Property suites: the finite-sample theorems about the six axioms, witness
//! soundness, agreement between the numeric fast path and the generic
//! relation path, quantization behavior, exact-rational identities, and
//! composite-weight algebra.

use ordinal_gate::dlo::{check_numeric, check_relation, sorted_distinct, FiniteRelation, Witness};
use ordinal_gate::ideal::{
    above_witness, below_witness, bisect_chain, density_witness, ratio, OpenInterval,
};
use ordinal_gate::plot::{build_histogram, HistogramSpec};
use ordinal_gate::simulate::{clip, round_half_even, run_simulation, SampleSet, SimulationConfig};
use ordinal_gate::stats::{composite_score, ThemeSummary};
use ordinal_gate::ThemeSpec;

use num_bigint::BigInt;
use num_traits::Pow;
use proptest::prelude::*;

fn sample(values: Vec<f64>) -> SampleSet {
    SampleSet::new("prop", values).unwrap()
}

/// Continuous-ish values: duplicates unlikely.
fn continuous_values() -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(1.0f64..5.0, 1..200)
}

/// Grid values: duplicates common, small distinct count.
fn grid_values() -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(0u32..=40, 1..50)
        .prop_map(|ks| ks.into_iter().map(|k| 1.0 + k as f64 * 0.1).collect())
}

proptest! {
    // Any finite nonempty sample decides the six axioms the same way:
    // A1-A3 pass, A4-A5 fail at the extremes, A6 fails at the first gap
    // unless the sample is constant, in which case density is vacuous.
    #[test]
    fn forced_verdict_pattern(values in continuous_values(), quantize in any::<bool>()) {
        let values: Vec<f64> = if quantize {
            values.into_iter().map(|v| round_half_even(clip(v, 1.0, 5.0), 1)).collect()
        } else {
            values
        };
        let distinct = sorted_distinct(&values);
        let verdicts = check_numeric(&sample(values)).unwrap();
        prop_assert!(verdicts[0].passed && verdicts[1].passed && verdicts[2].passed);
        prop_assert!(!verdicts[3].passed && !verdicts[4].passed);
        prop_assert_eq!(
            &verdicts[3].witness,
            &Witness::MaxElement { value: *distinct.last().unwrap() }
        );
        prop_assert_eq!(
            &verdicts[4].witness,
            &Witness::MinElement { value: distinct[0] }
        );
        if distinct.len() >= 2 {
            prop_assert!(!verdicts[5].passed);
            prop_assert_eq!(
                &verdicts[5].witness,
                &Witness::AdjacentGap { lower: distinct[0], upper: distinct[1] }
            );
        } else {
            prop_assert!(verdicts[5].passed);
            prop_assert_eq!(&verdicts[5].witness, &Witness::Vacuous);
        }
    }

    // Every failure witness replays as a genuine counterexample; every pass
    // witness does not.
    #[test]
    fn witnesses_are_sound(values in grid_values()) {
        let distinct = sorted_distinct(&values);
        let verdicts = check_numeric(&sample(values)).unwrap();
        for v in &verdicts {
            prop_assert_eq!(
                !v.passed,
                v.witness_falsifies(&distinct, |a, b| a < b),
                "{:?}", v
            );
        }
    }

    // The sorted fast path and the brute-force relation path agree verdict
    // for verdict when the relation is the natural order on the same values.
    #[test]
    fn numeric_and_relation_paths_agree(values in grid_values()) {
        let distinct = sorted_distinct(&values);
        prop_assume!(distinct.len() <= 25); // keep the cubic path cheap
        let numeric = check_numeric(&sample(values)).unwrap();
        let rel = FiniteRelation::from_strict_order(distinct.clone()).unwrap();
        let relational = check_relation(&rel).unwrap();
        for (n, r) in numeric.iter().zip(relational.iter()) {
            prop_assert_eq!(n.axiom, r.axiom);
            prop_assert_eq!(n.passed, r.passed, "{:?} vs {:?}", n, r);
            if !n.passed {
                prop_assert_eq!(&n.witness, &r.witness);
            }
        }
    }

    // Quantization: output sits on the decimal grid inside the bounds, the
    // map is idempotent and monotone.
    #[test]
    fn quantization_grid_and_monotonicity(
        a in -10.0f64..10.0,
        b in -10.0f64..10.0,
        decimals in 0u32..=4,
    ) {
        let qa = round_half_even(clip(a, 1.0, 5.0), decimals);
        let qb = round_half_even(clip(b, 1.0, 5.0), decimals);
        prop_assert!((1.0..=5.0).contains(&qa));
        let scale = 10f64.powi(decimals as i32);
        prop_assert!((qa * scale - (qa * scale).round()).abs() < 1e-6);
        prop_assert_eq!(round_half_even(qa, decimals), qa);
        if a <= b {
            prop_assert!(qa <= qb);
        }
    }

    // Simulation is a pure function of its config.
    #[test]
    fn simulation_is_deterministic(seed in any::<u32>(), n in 1usize..64) {
        let config = SimulationConfig { seed, n, ..SimulationConfig::default() };
        let a = run_simulation(&config).unwrap();
        let b = run_simulation(&config).unwrap();
        prop_assert_eq!(a, b);
    }

    // Exact rational identities: the midpoint interpolates, escape
    // witnesses stay inside, and k bisections shrink the width by exactly
    // 2^k.
    #[test]
    fn rational_witnesses_are_exact(
        na in -1000i64..1000,
        da in 1i64..1000,
        nb in -1000i64..1000,
        db in 1i64..1000,
        k in 1u32..40,
    ) {
        let x = ratio(na, da);
        let y = ratio(nb, db);
        prop_assume!(x != y);
        let (a, b) = if x < y { (x, y) } else { (y, x) };
        let mid = density_witness(&a, &b).unwrap();
        prop_assert!(a < mid && mid < b);

        let iv = OpenInterval::new(a.clone(), b.clone()).unwrap();
        let up = above_witness(&mid, &iv).unwrap();
        let down = below_witness(&mid, &iv).unwrap();
        prop_assert!(mid < up && iv.contains(&up));
        prop_assert!(down < mid && iv.contains(&down));

        let chain = bisect_chain(&a, &b, k).unwrap();
        prop_assert_eq!(chain.len(), k as usize + 1);
        let two_k = ordinal_gate::Rational::from(BigInt::from(2).pow(k));
        prop_assert_eq!(chain.last().unwrap().width() * two_k, &b - &a);
        for w in chain.windows(2) {
            prop_assert_eq!(w[1].width() * ratio(2, 1), w[0].width());
        }
    }

    // Inverse-variance weights: in (0, 1], sum to one, invariant under
    // rescaling all dispersions, and ordered opposite to the dispersions.
    #[test]
    fn composite_weight_algebra(
        sigmas in prop::collection::vec((0.01f64..10.0, -5.0f64..5.0), 1..8),
        scale in 0.1f64..10.0,
    ) {
        let specs: Vec<ThemeSpec> = sigmas
            .iter()
            .enumerate()
            .map(|(i, (s, m))| ThemeSpec::new(format!("t{i}"), *m, *s).unwrap())
            .collect();
        let summaries: Vec<ThemeSummary> = specs
            .iter()
            .map(|t| ThemeSummary {
                theme: t.name.clone(),
                n: 1,
                mean: t.mean,
                std: t.std,
                min: t.mean,
                max: t.mean,
            })
            .collect();
        let composite = composite_score(&summaries, &specs).unwrap();
        let total: f64 = composite.weights.iter().map(|w| w.weight).sum();
        prop_assert!((total - 1.0).abs() < 1e-12);
        for w in &composite.weights {
            prop_assert!(w.weight > 0.0 && w.weight <= 1.0 + 1e-15);
        }

        let scaled_specs: Vec<ThemeSpec> = specs
            .iter()
            .map(|t| ThemeSpec::new(t.name.clone(), t.mean, t.std * scale).unwrap())
            .collect();
        let scaled = composite_score(&summaries, &scaled_specs).unwrap();
        for (w, s) in composite.weights.iter().zip(&scaled.weights) {
            prop_assert!((w.weight - s.weight).abs() < 1e-9, "{} vs {}", w.weight, s.weight);
        }

        for (wi, si) in composite.weights.iter().zip(&specs) {
            for (wj, sj) in composite.weights.iter().zip(&specs) {
                if si.std < sj.std {
                    prop_assert!(wi.weight >= wj.weight);
                }
            }
        }

        // The score is a convex combination of the means.
        let lo = summaries.iter().map(|s| s.mean).fold(f64::INFINITY, f64::min);
        let hi = summaries.iter().map(|s| s.mean).fold(f64::NEG_INFINITY, f64::max);
        prop_assert!(composite.score >= lo - 1e-9 && composite.score <= hi + 1e-9);
    }

    // Histogram counts are conserved and density mass is one.
    #[test]
    fn histogram_conservation(
        values in prop::collection::vec(-100.0f64..100.0, 1..400),
        bins in 1usize..60,
    ) {
        let s = sample(values.clone());
        let counts = build_histogram(&s, &HistogramSpec { bins, density: false }).unwrap();
        let total: f64 = counts.heights.iter().sum();
        prop_assert_eq!(total, values.len() as f64);
        prop_assert!(counts.heights.iter().all(|&h| h >= 0.0));
        let dense = build_histogram(&s, &HistogramSpec { bins, density: true }).unwrap();
        prop_assert!((dense.mass() - 1.0).abs() < 1e-9);
    }
}
