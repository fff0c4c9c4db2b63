//! Shared fixtures for the criterion benches.

use ordinal_gate::simulate::{run_simulation, SampleSet, SimulationConfig};

/// The default three-theme dataset (n = 10,000 per theme, seed 42).
pub fn default_sets() -> Vec<SampleSet> {
    run_simulation(&SimulationConfig::default()).expect("default config is valid")
}
