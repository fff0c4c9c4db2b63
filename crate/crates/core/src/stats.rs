//! Per-theme summaries and the inverse-variance composite score.
//!
//! Weights are proportional to 1/sigma^2, taken from the declared theme
//! dispersions rather than the realized sample — the theme with the
//! tightest spread dominates the composite. `composite_score` accepts any
//! (summary, spec) pairing whose names line up, so the CLI can weight either
//! by the declared dispersions or by dispersions re-fitted from the sample.

use serde::Serialize;
use thiserror::Error;

use crate::simulate::{SampleSet, ThemeSpec};

/// Realized statistics for one theme's sample. `std` is the n-1 sample
/// standard deviation; a singleton sample has zero spread by convention.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ThemeSummary {
    pub theme: String,
    pub n: usize,
    pub mean: f64,
    pub std: f64,
    pub min: f64,
    pub max: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WeightEntry {
    pub theme: String,
    pub weight: f64,
}

/// Inverse-variance composite: normalized weights and the weighted mean
/// score they induce.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Composite {
    pub score: f64,
    pub weights: Vec<WeightEntry>,
}

#[derive(Debug, Error)]
pub enum StatsError {
    #[error("sample {theme:?} is empty; summary statistics need at least one value")]
    EmptySample { theme: String },
    #[error("theme {theme:?} has zero dispersion; inverse-variance weights are undefined")]
    ZeroSigma { theme: String },
    #[error("summaries and specs do not line up: {detail}")]
    Mismatch { detail: String },
}

/// Summarize one sample: mean, n-1 standard deviation, extremes.
pub fn summarize(sample: &SampleSet) -> Result<ThemeSummary, StatsError> {
    let values = sample.values();
    if values.is_empty() {
        return Err(StatsError::EmptySample {
            theme: sample.theme.clone(),
        });
    }
    let n = values.len();
    let mean = values.iter().sum::<f64>() / n as f64;
    let std = if n == 1 {
        0.0
    } else {
        let ss = values.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>();
        (ss / (n - 1) as f64).sqrt()
    };
    let (mut min, mut max) = (values[0], values[0]);
    for &v in values {
        if v < min {
            min = v;
        }
        if v > max {
            max = v;
        }
    }
    Ok(ThemeSummary {
        theme: sample.theme.clone(),
        n,
        mean,
        std,
        min,
        max,
    })
}

/// Inverse-variance composite of the summarized means.
///
/// The i-th weight is (1/sigma_i^2) / sum_j (1/sigma_j^2) with sigma taken
/// from `specs`; the score is the weighted sum of the realized means in
/// `summaries`. Names must match pairwise, in order, so a weight can never
/// silently apply to the wrong theme.
pub fn composite_score(
    summaries: &[ThemeSummary],
    specs: &[ThemeSpec],
) -> Result<Composite, StatsError> {
    if summaries.is_empty() {
        return Err(StatsError::Mismatch {
            detail: "no themes to combine".into(),
        });
    }
    if summaries.len() != specs.len() {
        return Err(StatsError::Mismatch {
            detail: format!("{} summaries vs {} specs", summaries.len(), specs.len()),
        });
    }
    for (summary, spec) in summaries.iter().zip(specs) {
        if summary.theme != spec.name {
            return Err(StatsError::Mismatch {
                detail: format!(
                    "summary {:?} paired with spec {:?}",
                    summary.theme, spec.name
                ),
            });
        }
        if !(spec.std > 0.0) {
            return Err(StatsError::ZeroSigma {
                theme: spec.name.clone(),
            });
        }
    }
    let inverse: Vec<f64> = specs.iter().map(|s| 1.0 / (s.std * s.std)).collect();
    let total: f64 = inverse.iter().sum();
    let weights: Vec<WeightEntry> = summaries
        .iter()
        .zip(&inverse)
        .map(|(summary, inv)| WeightEntry {
            theme: summary.theme.clone(),
            weight: inv / total,
        })
        .collect();
    let score = summaries
        .iter()
        .zip(&weights)
        .map(|(summary, w)| summary.mean * w.weight)
        .sum();
    Ok(Composite { score, weights })
}

/// Declared specs rebuilt from realized sample statistics, for weighting a
/// composite by what the data actually shows. Fails downstream (not here) if
/// a realized dispersion is zero.
pub fn specs_from_summaries(summaries: &[ThemeSummary]) -> Vec<ThemeSpec> {
    summaries
        .iter()
        .map(|s| ThemeSpec {
            name: s.theme.clone(),
            mean: s.mean,
            std: s.std,
        })
        .collect()
}
