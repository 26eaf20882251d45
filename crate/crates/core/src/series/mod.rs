//! Short- and long-time structure of `S(t)`: Taylor coefficients from
//! operator moments, asymptotic fits of the kernel determinant, and the
//! decay-rate law of spin helices.

mod asymptotics;
mod taylor;

pub use asymptotics::{
    decay_rate, default_fit_window, fit_asymptotics, fitted_decay_rate, helix_amplitude, unwrap_phases,
    AsymptoticFit, DEFAULT_FIT_RANK,
};
pub use taylor::{
    coefficient_mismatch, moment_table, reference_coefficient, reference_taylor, stable_pattern_check,
    taylor_coefficients, MomentTable, StablePatternReport, TaylorTable, MOMENT_MAX_QUBITS,
};
