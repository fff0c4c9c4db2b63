//! The two paths with stated runtime budgets (well under a second each):
//! dataset generation and the axiom-verdict matrix.

use criterion::{criterion_group, criterion_main, Criterion};

use ordinal_gate::dlo::{check_all, check_numeric};
use ordinal_gate::simulate::{run_simulation, SimulationConfig};
use ordinal_gate_bench::default_sets;

fn simulate_default(c: &mut Criterion) {
    let config = SimulationConfig::default();
    c.bench_function("simulate 3x10000", |b| {
        b.iter(|| run_simulation(&config).unwrap())
    });
}

fn check_one_theme(c: &mut Criterion) {
    let sets = default_sets();
    c.bench_function("check_numeric 10000", |b| {
        b.iter(|| check_numeric(&sets[0]).unwrap())
    });
}

fn check_matrix(c: &mut Criterion) {
    let sets = default_sets();
    c.bench_function("check_all 3x10000", |b| {
        b.iter(|| check_all(&sets).unwrap())
    });
}

criterion_group!(benches, simulate_default, check_one_theme, check_matrix);
criterion_main!(benches);
