//! Relaxation of the transverse helix amplitude `S(t)`: exact finite-size
//! determinants and the thermodynamic-limit Bessel-kernel determinant.

mod finite;
mod kernel;

pub use finite::{dispersion, finite_helix_profile, phi_entry, phi_matrix, s_finite, FiniteDecayRequest};
pub use kernel::{
    a_matrix, auto_rank, helix_profile, kernel_consistency, kernel_k, s_infinite, s_rank_one_closed_form, validity_horizon, Kernel,
    KernelDeterminant, KernelDiagonal, KernelRequest, S_FLUSH_BELOW,
};
