//! The six axioms of a dense linear order without endpoints, evaluated over
//! finite structures with a concrete witness for every verdict.
//!
//! Two evaluation paths produce identical verdicts:
//!
//! * [`check_numeric`] — f64 samples under the usual `<`. Sorting makes the
//!   quantifier sweeps linear instead of cubic: for a total order,
//!   transitivity over all triples follows from transitivity over
//!   consecutive sorted triples, and comparability over all pairs follows
//!   from comparability of adjacent distinct values.
//! * [`check_relation`] — an explicit finite relation given as pairs, checked
//!   by direct enumeration of the quantifiers. No order assumptions, so this
//!   path can detect broken triples and incomparable pairs that the numeric
//!   path rules out by construction.
//!
//! Every failed verdict carries a counterexample that can be replayed against
//! the axiom with [`AxiomVerdict::witness_falsifies`]; every pass records the
//! exhaustiveness of the sweep.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::simulate::SampleSet;

/// The axioms, in the order they appear in every verdict table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum AxiomId {
    #[serde(rename = "A1")]
    Irreflexivity,
    #[serde(rename = "A2")]
    Transitivity,
    #[serde(rename = "A3")]
    Comparability,
    #[serde(rename = "A4")]
    NoGreatest,
    #[serde(rename = "A5")]
    NoLeast,
    #[serde(rename = "A6")]
    Density,
}

impl AxiomId {
    pub const ALL: [AxiomId; 6] = [
        AxiomId::Irreflexivity,
        AxiomId::Transitivity,
        AxiomId::Comparability,
        AxiomId::NoGreatest,
        AxiomId::NoLeast,
        AxiomId::Density,
    ];

    /// Short code used in table headers and JSON: "A1" through "A6".
    pub fn code(self) -> &'static str {
        match self {
            AxiomId::Irreflexivity => "A1",
            AxiomId::Transitivity => "A2",
            AxiomId::Comparability => "A3",
            AxiomId::NoGreatest => "A4",
            AxiomId::NoLeast => "A5",
            AxiomId::Density => "A6",
        }
    }

    pub fn title(self) -> &'static str {
        match self {
            AxiomId::Irreflexivity => "irreflexivity",
            AxiomId::Transitivity => "transitivity",
            AxiomId::Comparability => "total comparability",
            AxiomId::NoGreatest => "no greatest element",
            AxiomId::NoLeast => "no least element",
            AxiomId::Density => "density",
        }
    }
}

impl fmt::Display for AxiomId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

/// Evidence attached to a verdict. Failure witnesses are counterexamples;
/// `Vacuous` and `Exhaustive` document why a pass holds.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness<T> {
    /// An element below itself (refutes A1).
    SelfLoop { value: T },
    /// a < b and b < c but not a < c (refutes A2).
    BrokenTriple { a: T, b: T, c: T },
    /// Distinct elements with neither a < b nor b < a (refutes A3).
    IncomparablePair { a: T, b: T },
    /// An element with nothing above it (refutes A4).
    MaxElement { value: T },
    /// An element with nothing below it (refutes A5).
    MinElement { value: T },
    /// lower < upper with nothing strictly between (refutes A6).
    AdjacentGap { lower: T, upper: T },
    /// The axiom's antecedent never fired, so it holds trivially.
    Vacuous,
    /// Every instance was examined and none violated the axiom.
    Exhaustive { count: usize },
}

impl<T> Witness<T> {
    /// True for the counterexample variants.
    pub fn is_counterexample(&self) -> bool {
        !matches!(self, Witness::Vacuous | Witness::Exhaustive { .. })
    }

    pub fn map<U>(self, f: &mut impl FnMut(T) -> U) -> Witness<U> {
        match self {
            Witness::SelfLoop { value } => Witness::SelfLoop { value: f(value) },
            Witness::BrokenTriple { a, b, c } => Witness::BrokenTriple {
                a: f(a),
                b: f(b),
                c: f(c),
            },
            Witness::IncomparablePair { a, b } => Witness::IncomparablePair { a: f(a), b: f(b) },
            Witness::MaxElement { value } => Witness::MaxElement { value: f(value) },
            Witness::MinElement { value } => Witness::MinElement { value: f(value) },
            Witness::AdjacentGap { lower, upper } => Witness::AdjacentGap {
                lower: f(lower),
                upper: f(upper),
            },
            Witness::Vacuous => Witness::Vacuous,
            Witness::Exhaustive { count } => Witness::Exhaustive { count },
        }
    }
}

/// Outcome of evaluating one axiom over one structure.
///
/// Invariant, enforced at construction: `passed` is false exactly when the
/// witness is a counterexample. `checked` counts the instances the sweep
/// examined before settling the verdict.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AxiomVerdict<T> {
    pub axiom: AxiomId,
    pub passed: bool,
    pub witness: Witness<T>,
    pub checked: usize,
}

impl<T> AxiomVerdict<T> {
    fn new(axiom: AxiomId, witness: Witness<T>, checked: usize) -> Self {
        let passed = !witness.is_counterexample();
        AxiomVerdict {
            axiom,
            passed,
            witness,
            checked,
        }
    }

    pub fn map<U>(self, mut f: impl FnMut(T) -> U) -> AxiomVerdict<U> {
        AxiomVerdict {
            axiom: self.axiom,
            passed: self.passed,
            witness: self.witness.map(&mut f),
            checked: self.checked,
        }
    }

    /// Replay a failure witness against the axiom it claims to refute, over
    /// `universe` under the strict order `less`. Returns true when the
    /// witness genuinely falsifies the axiom; pass witnesses return false.
    pub fn witness_falsifies(&self, universe: &[T], less: impl Fn(&T, &T) -> bool) -> bool
    where
        T: PartialEq,
    {
        match &self.witness {
            Witness::SelfLoop { value } => less(value, value),
            Witness::BrokenTriple { a, b, c } => less(a, b) && less(b, c) && !less(a, c),
            Witness::IncomparablePair { a, b } => a != b && !less(a, b) && !less(b, a),
            Witness::MaxElement { value } => {
                universe.contains(value) && !universe.iter().any(|u| less(value, u))
            }
            Witness::MinElement { value } => {
                universe.contains(value) && !universe.iter().any(|u| less(u, value))
            }
            Witness::AdjacentGap { lower, upper } => {
                less(lower, upper) && !universe.iter().any(|u| less(lower, u) && less(u, upper))
            }
            Witness::Vacuous | Witness::Exhaustive { .. } => false,
        }
    }
}

/// Verdicts for one named structure, always all six axioms in `AxiomId::ALL`
/// order.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MatrixRow {
    pub name: String,
    pub verdicts: [AxiomVerdict<f64>; 6],
}

/// One row per checked structure; render with [`render_matrix`] or serialize
/// to JSON as-is.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AxiomMatrix {
    pub rows: Vec<MatrixRow>,
}

#[derive(Debug, Error)]
pub enum DloError {
    #[error("sample {theme:?} is empty; axiom evaluation needs at least one value")]
    EmptySample { theme: String },
    #[error("relation pair references {element}, which is not in the domain")]
    UnknownElement { element: String },
    #[error("relation domain lists {element} more than once")]
    DuplicateElement { element: String },
}

// The one `<` used by every numeric sweep, so each axiom is evaluated
// against literally the same order.
fn lt(a: f64, b: f64) -> bool {
    a < b
}

/// Distinct values in ascending order. Equal floats collapse to one element
/// (-0.0 and 0.0 compare equal and denote the same point of the order).
pub fn sorted_distinct(values: &[f64]) -> Vec<f64> {
    let mut v = values.to_vec();
    v.sort_unstable_by(f64::total_cmp);
    v.dedup();
    v
}

/// Evaluate all six axioms over a finite sample under the numeric `<`.
///
/// Verdicts for a nonempty sample are forced by finiteness: A1–A3 hold (the
/// reals are a total order), A4 and A5 fail at the extremes, and A6 fails at
/// the first adjacent pair of distinct values unless all values are equal,
/// which makes density vacuous. The sweeps still run; the theorems are why
/// their outcomes are predictable, not a shortcut past checking.
pub fn check_numeric(sample: &SampleSet) -> Result<[AxiomVerdict<f64>; 6], DloError> {
    if sample.is_empty() {
        return Err(DloError::EmptySample {
            theme: sample.theme.clone(),
        });
    }
    let values = sample.values();
    let n = values.len();
    let distinct = sorted_distinct(values);
    let m = distinct.len();

    // A1: no value below itself.
    let a1 = match values.iter().position(|&x| lt(x, x)) {
        Some(i) => AxiomVerdict::new(
            AxiomId::Irreflexivity,
            Witness::SelfLoop { value: values[i] },
            i + 1,
        ),
        None => AxiomVerdict::new(AxiomId::Irreflexivity, Witness::Exhaustive { count: n }, n),
    };

    // A2: consecutive sorted triples carry transitivity for a total order.
    let triples = m.saturating_sub(2);
    let mut a2 = AxiomVerdict::new(
        AxiomId::Transitivity,
        Witness::Exhaustive { count: triples },
        triples,
    );
    for (i, w) in distinct.windows(3).enumerate() {
        if lt(w[0], w[1]) && lt(w[1], w[2]) && !lt(w[0], w[2]) {
            a2 = AxiomVerdict::new(
                AxiomId::Transitivity,
                Witness::BrokenTriple {
                    a: w[0],
                    b: w[1],
                    c: w[2],
                },
                i + 1,
            );
            break;
        }
    }

    // A3: adjacent distinct values must be strictly ordered; equal values
    // are comparable by equality, so the chain settles every pair.
    let pairs = m.saturating_sub(1);
    let mut a3 = AxiomVerdict::new(
        AxiomId::Comparability,
        Witness::Exhaustive { count: pairs },
        pairs,
    );
    for (i, w) in distinct.windows(2).enumerate() {
        if !lt(w[0], w[1]) && !lt(w[1], w[0]) {
            a3 = AxiomVerdict::new(
                AxiomId::Comparability,
                Witness::IncomparablePair { a: w[0], b: w[1] },
                i + 1,
            );
            break;
        }
    }

    // A4/A5: a finite nonempty set always has extremes.
    let max = *distinct.last().expect("nonempty");
    let min = distinct[0];
    let a4 = AxiomVerdict::new(AxiomId::NoGreatest, Witness::MaxElement { value: max }, n);
    let a5 = AxiomVerdict::new(AxiomId::NoLeast, Witness::MinElement { value: min }, n);

    // A6: with two or more distinct values, the first adjacent pair in sorted
    // order is a gap — nothing in the sample sits strictly between.
    let a6 = if m < 2 {
        AxiomVerdict::new(AxiomId::Density, Witness::Vacuous, 0)
    } else {
        AxiomVerdict::new(
            AxiomId::Density,
            Witness::AdjacentGap {
                lower: distinct[0],
                upper: distinct[1],
            },
            m - 1,
        )
    };

    Ok([a1, a2, a3, a4, a5, a6])
}

/// An explicit strict-order candidate: a finite domain plus the set of pairs
/// for which `a < b` is asserted. Nothing is assumed about the pairs — this
/// is the structure to test, not a known order.
#[derive(Debug, Clone)]
pub struct FiniteRelation<E> {
    domain: Vec<E>,
    adjacency: Vec<bool>,
}

impl<E: Clone + PartialEq + fmt::Debug> FiniteRelation<E> {
    pub fn new(
        domain: Vec<E>,
        pairs: impl IntoIterator<Item = (E, E)>,
    ) -> Result<Self, DloError> {
        for (i, e) in domain.iter().enumerate() {
            if domain[..i].contains(e) {
                return Err(DloError::DuplicateElement {
                    element: format!("{e:?}"),
                });
            }
        }
        let n = domain.len();
        let mut adjacency = vec![false; n * n];
        for (a, b) in pairs {
            let ia = Self::index_of(&domain, &a)?;
            let ib = Self::index_of(&domain, &b)?;
            adjacency[ia * n + ib] = true;
        }
        Ok(FiniteRelation { domain, adjacency })
    }

    /// The natural strict order on the domain, materialized as explicit
    /// pairs. Useful as a ground-truth structure for agreement tests.
    pub fn from_strict_order(domain: Vec<E>) -> Result<Self, DloError>
    where
        E: PartialOrd,
    {
        let pairs: Vec<(E, E)> = domain
            .iter()
            .flat_map(|a| {
                domain
                    .iter()
                    .filter(move |b| a < b)
                    .map(move |b| (a.clone(), b.clone()))
            })
            .collect();
        Self::new(domain, pairs)
    }

    fn index_of(domain: &[E], e: &E) -> Result<usize, DloError> {
        domain
            .iter()
            .position(|d| d == e)
            .ok_or_else(|| DloError::UnknownElement {
                element: format!("{e:?}"),
            })
    }

    pub fn domain(&self) -> &[E] {
        &self.domain
    }

    pub fn holds(&self, a: usize, b: usize) -> bool {
        self.adjacency[a * self.domain.len() + b]
    }
}

/// Evaluate all six axioms by direct enumeration of the quantifiers, in
/// domain order. Cubic in the domain size for A2; intended for small explicit
/// structures, not bulk samples.
pub fn check_relation<E: Clone + PartialEq + fmt::Debug>(
    rel: &FiniteRelation<E>,
) -> Result<[AxiomVerdict<E>; 6], DloError> {
    let n = rel.domain.len();
    if n == 0 {
        return Err(DloError::EmptySample {
            theme: "relation".into(),
        });
    }
    let dom = &rel.domain;

    let a1 = match (0..n).find(|&a| rel.holds(a, a)) {
        Some(a) => AxiomVerdict::new(
            AxiomId::Irreflexivity,
            Witness::SelfLoop {
                value: dom[a].clone(),
            },
            a + 1,
        ),
        None => AxiomVerdict::new(AxiomId::Irreflexivity, Witness::Exhaustive { count: n }, n),
    };

    let mut a2 = None;
    let mut checked = 0;
    'a2: for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                checked += 1;
                if rel.holds(a, b) && rel.holds(b, c) && !rel.holds(a, c) {
                    a2 = Some(AxiomVerdict::new(
                        AxiomId::Transitivity,
                        Witness::BrokenTriple {
                            a: dom[a].clone(),
                            b: dom[b].clone(),
                            c: dom[c].clone(),
                        },
                        checked,
                    ));
                    break 'a2;
                }
            }
        }
    }
    let a2 = a2.unwrap_or_else(|| {
        AxiomVerdict::new(
            AxiomId::Transitivity,
            Witness::Exhaustive { count: checked },
            checked,
        )
    });

    let mut a3 = None;
    let mut checked = 0;
    'a3: for a in 0..n {
        for b in a + 1..n {
            checked += 1;
            if !rel.holds(a, b) && !rel.holds(b, a) {
                a3 = Some(AxiomVerdict::new(
                    AxiomId::Comparability,
                    Witness::IncomparablePair {
                        a: dom[a].clone(),
                        b: dom[b].clone(),
                    },
                    checked,
                ));
                break 'a3;
            }
        }
    }
    let a3 = a3.unwrap_or_else(|| {
        AxiomVerdict::new(
            AxiomId::Comparability,
            Witness::Exhaustive { count: checked },
            checked,
        )
    });

    let no_extreme = |above: bool| -> AxiomVerdict<E> {
        let (axiom, make) = if above {
            (AxiomId::NoGreatest, true)
        } else {
            (AxiomId::NoLeast, false)
        };
        for (i, a) in dom.iter().enumerate() {
            let escapes = (0..n).any(|b| if make { rel.holds(i, b) } else { rel.holds(b, i) });
            if !escapes {
                let witness = if make {
                    Witness::MaxElement { value: a.clone() }
                } else {
                    Witness::MinElement { value: a.clone() }
                };
                return AxiomVerdict::new(axiom, witness, i + 1);
            }
        }
        AxiomVerdict::new(axiom, Witness::Exhaustive { count: n }, n)
    };
    let a4 = no_extreme(true);
    let a5 = no_extreme(false);

    let mut a6 = None;
    let mut related = 0;
    'a6: for a in 0..n {
        for b in 0..n {
            if !rel.holds(a, b) {
                continue;
            }
            related += 1;
            if !(0..n).any(|c| rel.holds(a, c) && rel.holds(c, b)) {
                a6 = Some(AxiomVerdict::new(
                    AxiomId::Density,
                    Witness::AdjacentGap {
                        lower: dom[a].clone(),
                        upper: dom[b].clone(),
                    },
                    related,
                ));
                break 'a6;
            }
        }
    }
    let a6 = a6.unwrap_or_else(|| {
        let witness = if related == 0 {
            Witness::Vacuous
        } else {
            Witness::Exhaustive { count: related }
        };
        AxiomVerdict::new(AxiomId::Density, witness, related)
    });

    Ok([a1, a2, a3, a4, a5, a6])
}

/// Run [`check_numeric`] over every sample and collect the verdict matrix.
pub fn check_all(samples: &[SampleSet]) -> Result<AxiomMatrix, DloError> {
    let rows = samples
        .iter()
        .map(|s| {
            Ok(MatrixRow {
                name: s.theme.clone(),
                verdicts: check_numeric(s)?,
            })
        })
        .collect::<Result<Vec<_>, DloError>>()?;
    Ok(AxiomMatrix { rows })
}

/// Plain-text verdict table: one row per structure, `True`/`False` per axiom.
pub fn render_matrix(matrix: &AxiomMatrix) -> String {
    let name_width = matrix
        .rows
        .iter()
        .map(|r| r.name.len())
        .max()
        .unwrap_or(0)
        .max("Theme".len());
    let mut out = String::new();
    out.push_str(&format!("{:<name_width$}", "Theme"));
    for axiom in AxiomId::ALL {
        out.push_str(&format!("  {:>6}", axiom.code()));
    }
    out.push('\n');
    for row in &matrix.rows {
        out.push_str(&format!("{:<name_width$}", row.name));
        for verdict in &row.verdicts {
            let cell = if verdict.passed { "True" } else { "False" };
            out.push_str(&format!("  {cell:>6}"));
        }
        out.push('\n');
    }
    out
}
