//! A constructive model in which all six order axioms genuinely hold: the
//! rationals strictly between two endpoints, under exact arithmetic.
//!
//! The finite checks in [`crate::dlo`] necessarily fail A4–A6; this module is
//! the contrast. Witnesses are produced by closed-form functions — midpoints
//! for density and for escaping toward the missing endpoints — and verified
//! with exact rational comparisons (cross-multiplication via `BigRational`'s
//! `Ord`), never with floating point. Iterated bisection shows there is no
//! smallest positive width: after `k` steps the width is exactly
//! `(b - a) / 2^k`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

use crate::dlo::{AxiomId, AxiomVerdict, Witness};
use crate::rng::Mt19937;
use crate::simulate::{clip, round_half_even, SampleSet, SimulateError};

/// Exact rational number, always normalized: gcd(numer, denom) = 1 and
/// denom > 0. Backed by `num_rational::BigRational`, which maintains exactly
/// that invariant.
pub type Rational = BigRational;

/// Convenience constructor from an integer pair. Panics on zero denominator;
/// use [`parse_rational`] for fallible input.
pub fn ratio(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

#[derive(Debug, Error)]
pub enum IdealError {
    #[error("invalid interval: need lo < hi, got ({lo}, {hi})")]
    EmptyInterval { lo: Rational, hi: Rational },
    #[error("witness arguments must satisfy a < b, got a = {a}, b = {b}")]
    NotOrdered { a: Rational, b: Rational },
    #[error("{value} is not strictly inside ({lo}, {hi})")]
    OutsideInterval {
        value: Rational,
        lo: Rational,
        hi: Rational,
    },
    #[error("probe count must be at least 1")]
    NoProbes,
    #[error("cannot parse {input:?} as a rational number")]
    Parse { input: String },
    #[error(transparent)]
    Simulate(#[from] SimulateError),
}

/// Parse "p/q", an integer, or a plain decimal ("4.0535") into an exact
/// rational. Decimals are exact: 4.0535 becomes 8107/2000.
pub fn parse_rational(input: &str) -> Result<Rational, IdealError> {
    let trimmed = input.trim();
    let err = || IdealError::Parse {
        input: input.to_string(),
    };
    if trimmed.is_empty() {
        return Err(err());
    }
    if let Some((p, q)) = trimmed.split_once('/') {
        let numer: BigInt = p.trim().parse().map_err(|_| err())?;
        let denom: BigInt = q.trim().parse().map_err(|_| err())?;
        if denom.is_zero() {
            return Err(err());
        }
        return Ok(Rational::new(numer, denom));
    }
    let (sign, digits) = match trimmed.strip_prefix('-') {
        Some(rest) => (-1, rest),
        None => (1, trimmed.strip_prefix('+').unwrap_or(trimmed)),
    };
    let (whole, frac) = match digits.split_once('.') {
        Some((w, f)) => (w, f),
        None => (digits, ""),
    };
    if whole.is_empty() && frac.is_empty() {
        return Err(err());
    }
    let digits_only = |s: &str| !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit());
    if !(whole.is_empty() || digits_only(whole)) || !(frac.is_empty() || digits_only(frac)) {
        return Err(err());
    }
    let whole_int: BigInt = if whole.is_empty() {
        BigInt::zero()
    } else {
        whole.parse().map_err(|_| err())?
    };
    let scale = BigInt::from(10u32).pow(frac.len() as u32);
    let frac_int: BigInt = if frac.is_empty() {
        BigInt::zero()
    } else {
        frac.parse().map_err(|_| err())?
    };
    let magnitude = Rational::new(whole_int * &scale + frac_int, scale);
    Ok(if sign < 0 { -magnitude } else { magnitude })
}

/// The open interval (lo, hi) over the rationals — the carrier of the model.
/// Both endpoints are excluded, which is what makes A4 and A5 satisfiable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OpenInterval {
    lo: Rational,
    hi: Rational,
}

impl OpenInterval {
    pub fn new(lo: Rational, hi: Rational) -> Result<Self, IdealError> {
        if lo < hi {
            Ok(OpenInterval { lo, hi })
        } else {
            Err(IdealError::EmptyInterval { lo, hi })
        }
    }

    /// The unit-scale model used throughout: (1, 5).
    pub fn likert() -> Self {
        OpenInterval {
            lo: ratio(1, 1),
            hi: ratio(5, 1),
        }
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    /// Strict membership.
    pub fn contains(&self, x: &Rational) -> bool {
        self.lo < *x && *x < self.hi
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }
}

fn half() -> Rational {
    Rational::new(BigInt::one(), BigInt::from(2))
}

/// Exact midpoint (a + b) / 2, the density witness: a < result < b.
pub fn density_witness(a: &Rational, b: &Rational) -> Result<Rational, IdealError> {
    if a >= b {
        return Err(IdealError::NotOrdered {
            a: a.clone(),
            b: b.clone(),
        });
    }
    Ok((a + b) * half())
}

/// A point strictly above `a` but still inside the interval: (a + hi) / 2.
pub fn above_witness(a: &Rational, iv: &OpenInterval) -> Result<Rational, IdealError> {
    if !iv.contains(a) {
        return Err(IdealError::OutsideInterval {
            value: a.clone(),
            lo: iv.lo.clone(),
            hi: iv.hi.clone(),
        });
    }
    Ok((a + &iv.hi) * half())
}

/// A point strictly below `a` but still inside the interval: (lo + a) / 2.
pub fn below_witness(a: &Rational, iv: &OpenInterval) -> Result<Rational, IdealError> {
    if !iv.contains(a) {
        return Err(IdealError::OutsideInterval {
            value: a.clone(),
            lo: iv.lo.clone(),
            hi: iv.hi.clone(),
        });
    }
    Ok((&iv.lo + a) * half())
}

/// Nested left-half bisection starting from (a, b): the returned chain holds
/// the initial interval followed by one interval per step, k + 1 in total,
/// and the i-th interval has width exactly (b - a) / 2^i.
pub fn bisect_chain(a: &Rational, b: &Rational, k: u32) -> Result<Vec<OpenInterval>, IdealError> {
    let first = OpenInterval::new(a.clone(), b.clone())?;
    let mut chain = Vec::with_capacity(k as usize + 1);
    chain.push(first);
    for _ in 0..k {
        let last = chain.last().expect("nonempty");
        let mid = density_witness(&last.lo, &last.hi)?;
        chain.push(OpenInterval::new(last.lo.clone(), mid)?);
    }
    Ok(chain)
}

/// Deterministic rational probes strictly inside the interval:
/// `lo + width * k / 10^6` with `k` drawn from [`Mt19937`] in 1..10^6.
/// Repeats are possible and harmless — the axiom sweeps work on the
/// resulting finite set.
pub fn sample_probes(iv: &OpenInterval, probes: usize, seed: u32) -> Vec<Rational> {
    const GRID: u32 = 1_000_000;
    let mut rng = Mt19937::new(seed);
    let width = iv.width();
    (0..probes)
        .map(|_| {
            let k = rng.next_u32() % (GRID - 1) + 1;
            let t = Rational::new(BigInt::from(k), BigInt::from(GRID));
            &iv.lo + &width * t
        })
        .collect()
}

/// Check all six axioms over the interval model against a finite probe set.
///
/// A1–A3 are swept over the probes with exact comparisons: sorted distinct
/// probes must form a strict chain (consecutive-triple transitivity carries
/// the rest for a total order) and every distinct pair must satisfy
/// trichotomy. A4–A6 are where the model differs from any finite sample:
/// each probe's closed-form witness is computed and its defining
/// inequalities re-verified exactly, so no probe can be extremal and no
/// ordered pair is a gap.
pub fn verify_ideal_axioms(
    iv: &OpenInterval,
    probes: usize,
    seed: u32,
) -> Result<[AxiomVerdict<Rational>; 6], IdealError> {
    if probes == 0 {
        return Err(IdealError::NoProbes);
    }
    let points = sample_probes(iv, probes, seed);
    let mut distinct: Vec<Rational> = points.clone();
    distinct.sort_unstable();
    distinct.dedup();
    let n = points.len();
    let m = distinct.len();

    let verdict = |axiom, witness, checked| AxiomVerdict::<Rational> {
        axiom,
        passed: !matches!(
            witness,
            Witness::SelfLoop { .. }
                | Witness::BrokenTriple { .. }
                | Witness::IncomparablePair { .. }
                | Witness::MaxElement { .. }
                | Witness::MinElement { .. }
                | Witness::AdjacentGap { .. }
        ),
        witness,
        checked,
    };

    // A1: x < x is decided by exact comparison for every probe.
    let mut a1 = verdict(
        AxiomId::Irreflexivity,
        Witness::Exhaustive { count: n },
        n,
    );
    for (i, p) in points.iter().enumerate() {
        if p < p {
            a1 = verdict(
                AxiomId::Irreflexivity,
                Witness::SelfLoop { value: p.clone() },
                i + 1,
            );
            break;
        }
    }

    // A2: strict chain plus consecutive triples over the sorted distinct
    // probes.
    let triples = m.saturating_sub(2);
    let mut a2 = verdict(
        AxiomId::Transitivity,
        Witness::Exhaustive { count: triples },
        triples,
    );
    for (i, w) in distinct.windows(3).enumerate() {
        if w[0] < w[1] && w[1] < w[2] && w[0] >= w[2] {
            a2 = verdict(
                AxiomId::Transitivity,
                Witness::BrokenTriple {
                    a: w[0].clone(),
                    b: w[1].clone(),
                    c: w[2].clone(),
                },
                i + 1,
            );
            break;
        }
    }

    // A3: trichotomy for every unordered pair of distinct probes.
    let pair_count = m * m.saturating_sub(1) / 2;
    let mut a3 = verdict(
        AxiomId::Comparability,
        Witness::Exhaustive { count: pair_count },
        pair_count,
    );
    let mut examined = 0;
    'a3: for i in 0..m {
        for j in i + 1..m {
            examined += 1;
            let ordered = (distinct[i] < distinct[j]) ^ (distinct[j] < distinct[i]);
            if !ordered || distinct[i] == distinct[j] {
                a3 = verdict(
                    AxiomId::Comparability,
                    Witness::IncomparablePair {
                        a: distinct[i].clone(),
                        b: distinct[j].clone(),
                    },
                    examined,
                );
                break 'a3;
            }
        }
    }

    // A4/A5: every probe has a strictly larger and a strictly smaller point
    // inside the interval, produced in closed form and re-verified exactly.
    let mut a4 = verdict(AxiomId::NoGreatest, Witness::Exhaustive { count: n }, n);
    for (i, p) in points.iter().enumerate() {
        let up = above_witness(p, iv)?;
        if !(*p < up && iv.contains(&up)) {
            a4 = verdict(
                AxiomId::NoGreatest,
                Witness::MaxElement { value: p.clone() },
                i + 1,
            );
            break;
        }
    }
    let mut a5 = verdict(AxiomId::NoLeast, Witness::Exhaustive { count: n }, n);
    for (i, p) in points.iter().enumerate() {
        let down = below_witness(p, iv)?;
        if !(down < *p && iv.contains(&down)) {
            a5 = verdict(
                AxiomId::NoLeast,
                Witness::MinElement { value: p.clone() },
                i + 1,
            );
            break;
        }
    }

    // A6: the midpoint of every consecutive distinct pair interpolates; that
    // covers all pairs, since any wider pair contains a consecutive one.
    let gaps = m.saturating_sub(1);
    let mut a6 = if m < 2 {
        verdict(AxiomId::Density, Witness::Vacuous, 0)
    } else {
        verdict(AxiomId::Density, Witness::Exhaustive { count: gaps }, gaps)
    };
    for (i, w) in distinct.windows(2).enumerate() {
        let mid = density_witness(&w[0], &w[1])?;
        if !(w[0] < mid && mid < w[1]) {
            a6 = verdict(
                AxiomId::Density,
                Witness::AdjacentGap {
                    lower: w[0].clone(),
                    upper: w[1].clone(),
                },
                i + 1,
            );
            break;
        }
    }

    Ok([a1, a2, a3, a4, a5, a6])
}

/// Project exact probes into the finite measurement pipeline: convert to
/// f64, clip to [lo, hi], and round half-even to `decimals` places. The
/// result is a [`SampleSet`] that the finite checker can run on — the same
/// points that satisfy all six axioms exactly will then fail A4–A6, which is
/// the whole contrast between the model and any finite reading of it.
pub fn quantized_projection(
    points: &[Rational],
    lo: f64,
    hi: f64,
    decimals: u32,
) -> Result<SampleSet, IdealError> {
    let values: Vec<f64> = points
        .iter()
        .map(|p| {
            let x = p.to_f64().unwrap_or_else(|| {
                // Bounded probes always convert; fall back through parts.
                p.numer().to_f64().unwrap() / p.denom().to_f64().unwrap()
            });
            round_half_even(clip(x, lo, hi), decimals)
        })
        .collect();
    Ok(SampleSet::new("quantized projection", values)?)
}

/// Exact width of the final interval after `k` bisections, for reporting:
/// equals width(initial) / 2^k with no rounding anywhere.
pub fn final_width(chain: &[OpenInterval]) -> Option<Rational> {
    chain.last().map(OpenInterval::width)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Pow;

    fn r(n: i64, d: i64) -> Rational {
        ratio(n, d)
    }

    #[test]
    fn parses_fraction_integer_and_decimal_forms() {
        assert_eq!(parse_rational("3/4").unwrap(), r(3, 4));
        assert_eq!(parse_rational("-3/4").unwrap(), r(-3, 4));
        assert_eq!(parse_rational("6/8").unwrap(), r(3, 4));
        assert_eq!(parse_rational("5").unwrap(), r(5, 1));
        assert_eq!(parse_rational("4.0535").unwrap(), r(8107, 2000));
        assert_eq!(parse_rational("-0.25").unwrap(), r(-1, 4));
        assert_eq!(parse_rational(".5").unwrap(), r(1, 2));
        assert_eq!(parse_rational("2.").unwrap(), r(2, 1));
        assert_eq!(parse_rational(" 1/3 ").unwrap(), r(1, 3));
        for bad in ["", ".", "1/0", "1.2.3", "a", "1/a", "--1", "1e3"] {
            assert!(parse_rational(bad).is_err(), "{bad:?} should not parse");
        }
    }

    #[test]
    fn rationals_stay_normalized() {
        let x = r(40670, 20000);
        assert_eq!(x.numer(), &BigInt::from(4067));
        assert_eq!(x.denom(), &BigInt::from(2000));
        let y = Rational::new(BigInt::from(1), BigInt::from(-2));
        assert!(y.denom() > &BigInt::zero());
        assert_eq!(y, r(-1, 2));
    }

    #[test]
    fn interval_membership_is_strict() {
        let iv = OpenInterval::likert();
        assert!(!iv.contains(&r(1, 1)));
        assert!(!iv.contains(&r(5, 1)));
        assert!(iv.contains(&r(10001, 10000)));
        assert!(iv.contains(&r(49999, 10000)));
        assert_eq!(iv.width(), r(4, 1));
        assert!(OpenInterval::new(r(2, 1), r(2, 1)).is_err());
        assert!(OpenInterval::new(r(3, 1), r(2, 1)).is_err());
    }

    #[test]
    fn density_witness_is_the_exact_midpoint() {
        assert_eq!(density_witness(&r(1, 1), &r(5, 1)).unwrap(), r(3, 1));
        // An adjacent pair from the head rows of the generated data:
        // (4.0535, 4.0794) interpolates at 81329/20000 exactly.
        let a = parse_rational("4.0535").unwrap();
        let b = parse_rational("4.0794").unwrap();
        let mid = density_witness(&a, &b).unwrap();
        assert_eq!(mid, r(81329, 20000));
        assert!(a < mid && mid < b);
        assert!(density_witness(&a, &a).is_err());
        assert!(density_witness(&b, &a).is_err());
    }

    #[test]
    fn escape_witnesses_stay_inside() {
        let iv = OpenInterval::likert();
        let a = r(49999, 10000);
        let up = above_witness(&a, &iv).unwrap();
        assert_eq!(up, r(99999, 20000));
        assert!(a < up && iv.contains(&up));
        let down = below_witness(&a, &iv).unwrap();
        assert_eq!(down, r(59999, 20000));
        assert!(down < a && iv.contains(&down));
        assert!(above_witness(&r(5, 1), &iv).is_err());
        assert!(below_witness(&r(1, 1), &iv).is_err());
    }

    #[test]
    fn bisection_chain_has_exact_halving_widths() {
        let chain = bisect_chain(&r(1, 1), &r(5, 1), 2).unwrap();
        assert_eq!(chain.len(), 3);
        assert_eq!(chain[0], OpenInterval::new(r(1, 1), r(5, 1)).unwrap());
        assert_eq!(chain[1], OpenInterval::new(r(1, 1), r(3, 1)).unwrap());
        assert_eq!(chain[2], OpenInterval::new(r(1, 1), r(2, 1)).unwrap());
        let widths: Vec<Rational> = chain.iter().map(OpenInterval::width).collect();
        assert_eq!(widths, vec![r(4, 1), r(2, 1), r(1, 1)]);

        let chain = bisect_chain(&r(0, 1), &r(1, 1), 3).unwrap();
        assert_eq!(final_width(&chain).unwrap(), r(1, 8));

        // width * 2^k recovers b - a exactly, arbitrarily deep.
        let k = 80u32;
        let chain = bisect_chain(&r(1, 1), &r(5, 1), k).unwrap();
        assert_eq!(chain.len(), k as usize + 1);
        let two_k = Rational::from(BigInt::from(2).pow(k));
        assert_eq!(final_width(&chain).unwrap() * two_k, r(4, 1));

        assert!(bisect_chain(&r(2, 1), &r(2, 1), 1).is_err());
    }

    #[test]
    fn probes_are_strictly_inside_and_deterministic() {
        let iv = OpenInterval::likert();
        let a = sample_probes(&iv, 200, 42);
        let b = sample_probes(&iv, 200, 42);
        assert_eq!(a, b);
        assert!(a.iter().all(|p| iv.contains(p)));
        let c = sample_probes(&iv, 200, 43);
        assert_ne!(a, c);
        // Denominators stay on the 10^6 grid (divisors of it after
        // reduction, for integer endpoints).
        for p in &a {
            assert!(BigInt::from(1_000_000) % p.denom() == BigInt::zero());
        }
    }

    #[test]
    fn ideal_axioms_all_pass() {
        let iv = OpenInterval::likert();
        let verdicts = verify_ideal_axioms(&iv, 64, 42).unwrap();
        for v in &verdicts {
            assert!(v.passed, "{:?}", v);
            assert!(v.witness == Witness::Vacuous || !v.witness.is_counterexample());
        }
        assert_eq!(verdicts[0].checked, 64);
        assert!(verify_ideal_axioms(&iv, 0, 42).is_err());
        // A different interval works the same way.
        let iv = OpenInterval::new(r(-7, 2), r(22, 7)).unwrap();
        let verdicts = verify_ideal_axioms(&iv, 32, 7).unwrap();
        assert!(verdicts.iter().all(|v| v.passed));
    }

    #[test]
    fn single_probe_still_passes_everything() {
        let iv = OpenInterval::likert();
        let verdicts = verify_ideal_axioms(&iv, 1, 42).unwrap();
        assert!(verdicts.iter().all(|v| v.passed));
        // Density is vacuous with one distinct point.
        assert_eq!(verdicts[5].witness, Witness::Vacuous);
    }

    #[test]
    fn quantized_projection_restores_finite_failures() {
        let iv = OpenInterval::likert();
        let points = sample_probes(&iv, 64, 42);
        let sample = quantized_projection(&points, 1.0, 5.0, 4).unwrap();
        let verdicts = crate::dlo::check_numeric(&sample).unwrap();
        let passed: Vec<bool> = verdicts.iter().map(|v| v.passed).collect();
        assert_eq!(passed, [true, true, true, false, false, false]);
    }

    #[test]
    fn projection_rounds_and_clips() {
        let points = vec![r(81329, 20000), r(9, 1), r(-3, 1)];
        let sample = quantized_projection(&points, 1.0, 5.0, 4).unwrap();
        // 81329/20000 = 4.06645; scaled by 10^4 the product is exactly
        // 40664.5, and ties-to-even picks the even neighbor 40664.
        assert_eq!(sample.values(), &[4.0664, 5.0, 1.0]);
    }
}
