//! The chiral basis and XX eigenstates built on it.
//!
//! A chiral basis vector is a product of transverse qubit states whose
//! polarization turns by `+pi/2` from each site to the next, except at kinks
//! where it turns by `-pi/2`. Site `k` carries `psi_k(u + 2j)` with `j` the
//! number of kinks on links before it, and the vector carries the prefactor
//! `(-i)^{sum n_k}`. These vectors diagonalize `V` with eigenvalue `N - 2M`.
//!
//! Labels stay integer-valued; the phase prefactor is applied only when a
//! vector is materialized.

mod eigen;
mod kinks;
mod momenta;

pub use eigen::{
    build_all_eigenstates, build_xx_eigenstate, check_sigma_x_diagonal, enumerate_eigenstate_labels,
    labels_with_kinks, overlap_with_omega, SigmaXReport,
};
pub use kinks::{
    admissible_kink_numbers, build_chiral_state, chiral_spinor, chiral_vacuum_expansion, enumerate_chiral_basis,
    enumerate_kink_configs, kinks_admissible,
    ChiralLabel, Chirality, KinkConfig,
};
pub use momenta::{sector_lattice, slater_amplitude, MomentumTuple, Sector, SlaterAmplitude, LATTICE_TOLERANCE};
