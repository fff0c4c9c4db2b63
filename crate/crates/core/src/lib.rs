//! Monte Carlo Likert simulation with an order-theoretic gate.
//!
//! The library regenerates the survey-style datasets bit-for-bit (a
//! NumPy-legacy-compatible generator drives Gaussian theme scores that are
//! clipped to [1, 5] and rounded half-even to four decimals), then asks a
//! precise question of the result: which axioms of a dense linear order
//! without endpoints survive in a finite sample? The finite checks return
//! concrete witnesses either way; the exact-rational interval model shows
//! the same axioms all holding once the finiteness is removed; and the
//! stats/plot modules produce the composite score and the figure data that
//! summarize the contrast.
//!
//! Modules:
//! * [`rng`] — MT19937 with NumPy-compatible doubles and Gaussian draws.
//! * [`simulate`] — theme specs, clip/round quantization, dataset generation.
//! * [`dataset`] — CSV interchange for generated samples.
//! * [`dlo`] — the six axioms over finite samples and explicit relations.
//! * [`ideal`] — exact rationals on an open interval, where all six hold.
//! * [`stats`] — summaries and the inverse-variance composite.
//! * [`plot`] — histogram, continuity curve, tangents, SVG and CSV series.

pub mod dataset;
pub mod dlo;
pub mod ideal;
pub mod plot;
pub mod rng;
pub mod simulate;
pub mod stats;

pub use dataset::{read_dataset, write_dataset, DatasetError};
pub use dlo::{
    check_all, check_numeric, check_relation, render_matrix, sorted_distinct, AxiomId,
    AxiomMatrix, AxiomVerdict, DloError, FiniteRelation, MatrixRow, Witness,
};
pub use ideal::{
    above_witness, below_witness, bisect_chain, density_witness, parse_rational, quantized_projection,
    sample_probes, verify_ideal_axioms, IdealError, OpenInterval, Rational,
};
pub use plot::{
    aggregate_scores, build_histogram, emit_plot, figure_bundle, kant_curve, kant_series,
    kant_slope, render_svg, tangent_line, CurveSeries, Histogram, HistogramSpec, PlotBundle,
    PlotError, Tangent,
};
pub use rng::Mt19937;
pub use simulate::{
    clip, default_themes, round_half_even, run_simulation, SampleSet, SimulateError,
    SimulationConfig, ThemeSpec,
};
pub use stats::{
    composite_score, specs_from_summaries, summarize, Composite, StatsError, ThemeSummary,
    WeightEntry,
};
