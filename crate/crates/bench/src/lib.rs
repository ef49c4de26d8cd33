//! Shared fixtures for the benchmarks.

use secmod_core::FinModule;

/// Modules with lattices from a handful of nodes up to a few hundred.
pub const FIXTURES: &[(&str, &[u64])] = &[
    ("Z360", &[360]),
    ("Z6+Z10", &[6, 10]),
    ("Z2^2+Z4", &[2, 2, 4]),
    ("Z4+Z8", &[4, 8]),
    ("Z2^3+Z6", &[2, 2, 2, 6]),
];

pub fn fixtures() -> Vec<(&'static str, FinModule)> {
    FIXTURES
        .iter()
        .map(|&(name, f)| (name, FinModule::new(None, f).expect("fixture module")))
        .collect()
}
