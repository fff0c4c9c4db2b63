//! Synthetic Likert dataset generation: theme-major normal draws from one
//! seeded stream, clipped to the scale bounds, rounded to a fixed number of
//! decimals.
//!
//! Draw order is part of the contract. All `n` draws for the first theme are
//! taken from the stream before the second theme begins, so a dataset is a
//! pure function of `(seed, themes, n)` and every run regenerates it
//! byte-identically.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::rng::Mt19937;

/// Name and distribution parameters of one perception theme.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ThemeSpec {
    pub name: String,
    pub mean: f64,
    pub std: f64,
}

impl ThemeSpec {
    pub fn new(name: impl Into<String>, mean: f64, std: f64) -> Result<Self, SimulateError> {
        let spec = ThemeSpec {
            name: name.into(),
            mean,
            std,
        };
        spec.validate()?;
        Ok(spec)
    }

    fn validate(&self) -> Result<(), SimulateError> {
        if !self.mean.is_finite() {
            return Err(SimulateError::InvalidTheme {
                name: self.name.clone(),
                reason: format!("mean must be finite, got {}", self.mean),
            });
        }
        if !(self.std >= 0.0 && self.std.is_finite()) {
            return Err(SimulateError::InvalidTheme {
                name: self.name.clone(),
                reason: format!("standard deviation must be finite and nonnegative, got {}", self.std),
            });
        }
        Ok(())
    }
}

/// Full description of one simulation run. `Default` is the built-in
/// configuration: the three standard themes, 10,000 students, seed 42,
/// bounds [1, 5], four decimals.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SimulationConfig {
    pub themes: Vec<ThemeSpec>,
    pub n: usize,
    pub seed: u32,
    pub lo: f64,
    pub hi: f64,
    pub decimals: u32,
}

impl Default for SimulationConfig {
    fn default() -> Self {
        SimulationConfig {
            themes: default_themes(),
            n: 10_000,
            seed: 42,
            lo: 1.0,
            hi: 5.0,
            decimals: 4,
        }
    }
}

impl SimulationConfig {
    pub fn validate(&self) -> Result<(), SimulateError> {
        if self.themes.is_empty() {
            return Err(SimulateError::InvalidConfig(
                "at least one theme is required".into(),
            ));
        }
        for theme in &self.themes {
            theme.validate()?;
        }
        for (i, a) in self.themes.iter().enumerate() {
            if self.themes[..i].iter().any(|b| b.name == a.name) {
                return Err(SimulateError::InvalidConfig(format!(
                    "duplicate theme name {:?}",
                    a.name
                )));
            }
        }
        if self.n == 0 {
            return Err(SimulateError::InvalidConfig(
                "student count must be at least 1".into(),
            ));
        }
        if !(self.lo < self.hi) {
            return Err(SimulateError::InvalidConfig(format!(
                "scale bounds must satisfy lo < hi, got [{}, {}]",
                self.lo, self.hi
            )));
        }
        Ok(())
    }
}

/// The three built-in theme parameter pairs.
pub fn default_themes() -> Vec<ThemeSpec> {
    vec![
        ThemeSpec {
            name: "Ease of Use & Learnability".into(),
            mean: 4.1169,
            std: 0.2709,
        },
        ThemeSpec {
            name: "System Efficiency & Learning Burden".into(),
            mean: 4.1240,
            std: 0.0910,
        },
        ThemeSpec {
            name: "Perceived Complexity & Integration".into(),
            mean: 3.7100,
            std: 0.2160,
        },
    ]
}

/// Finite multiset of scores for one theme, in generation order.
///
/// Values produced by [`run_simulation`] lie in `[lo, hi]` and carry at most
/// `decimals` fractional digits; both hold by construction rather than by a
/// decimal type. Construction only rejects non-finite values, so sample sets
/// read back from external files are representable too.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SampleSet {
    pub theme: String,
    values: Vec<f64>,
}

impl SampleSet {
    pub fn new(theme: impl Into<String>, values: Vec<f64>) -> Result<Self, SimulateError> {
        let theme = theme.into();
        if let Some(index) = values.iter().position(|v| !v.is_finite()) {
            return Err(SimulateError::NonFiniteValue { theme, index });
        }
        Ok(SampleSet { theme, values })
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

#[derive(Debug, Error)]
pub enum SimulateError {
    #[error("theme {name:?}: {reason}")]
    InvalidTheme { name: String, reason: String },
    #[error("invalid simulation config: {0}")]
    InvalidConfig(String),
    #[error("sample {theme:?} contains a non-finite value at index {index}")]
    NonFiniteValue { theme: String, index: usize },
}

/// Saturate `x` at the scale bounds. NaN passes through untouched, matching
/// `min(hi, max(lo, x))` under IEEE comparison semantics.
pub fn clip(x: f64, lo: f64, hi: f64) -> f64 {
    if x < lo {
        lo
    } else if x > hi {
        hi
    } else {
        x
    }
}

/// Round to the nearest multiple of `10^-decimals`, ties to even.
///
/// Performed as scale/rint/unscale on binary doubles — the reference
/// runtime's behavior — not as decimal string rounding.
pub fn round_half_even(x: f64, decimals: u32) -> f64 {
    let scale = 10f64.powi(decimals as i32);
    (x * scale).round_ties_even() / scale
}

/// Generate one [`SampleSet`] per theme from a single seeded stream, in
/// config order: draw `n` normals per theme (theme-major), clip, then round.
pub fn run_simulation(config: &SimulationConfig) -> Result<Vec<SampleSet>, SimulateError> {
    config.validate()?;
    let mut rng = Mt19937::new(config.seed);
    let mut out = Vec::with_capacity(config.themes.len());
    for theme in &config.themes {
        let mut values = Vec::with_capacity(config.n);
        for _ in 0..config.n {
            let raw = rng.next_normal(theme.mean, theme.std);
            values.push(round_half_even(
                clip(raw, config.lo, config.hi),
                config.decimals,
            ));
        }
        out.push(SampleSet::new(theme.name.clone(), values)?);
    }
    Ok(out)
}
