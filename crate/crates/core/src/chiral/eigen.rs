//! XX eigenstates as Slater sums over chiral basis vectors.

use num_complex::Complex64;
use rayon::prelude::*;

use super::kinks::{
    admissible_kink_numbers, build_chiral_state, chiral_spinor, combinations, kinks_admissible, minus_i_power,
    ChiralLabel, KinkConfig,
};
use super::momenta::{sector_lattice, MomentumTuple, Sector};
use crate::error::{Error, Result};
use crate::exact::{Pauli, StateVector};

/// `|mu_M(p)> = sum_{n_1 < .. < n_M} chi_n(p) (|u; n> - e^{i p_1 N} |u + 2; n>)`.
///
/// `e^{i p_1 N}` is the sector sign, which also fixes the `M = 0` pair.
pub fn build_xx_eigenstate(momenta: &MomentumTuple, u_base: f64) -> Result<StateVector> {
    let n = momenta.n_qubits();
    let m = momenta.len();
    if !kinks_admissible(n, m) {
        return Err(Error::KinkParity { n_qubits: n, n_kinks: m });
    }
    let partner = -momenta.sector().sign();
    let mut state = StateVector::zeros(n)?;
    for positions in combinations(n, m) {
        let chi = momenta.amplitude(&positions)?;
        let config = KinkConfig::new(n, u_base, positions)?;
        let first = build_chiral_state(&ChiralLabel::new(config.clone()))?;
        let second = build_chiral_state(&ChiralLabel::new(config.shifted(2.0)))?;
        state.add_scaled(chi, &first);
        state.add_scaled(chi * partner, &second);
    }
    Ok(state)
}

/// Every eigenstate label of a ring: admissible `M`, both sectors, strictly
/// increasing tuples. There are `2^N` of them.
pub fn enumerate_eigenstate_labels(n_qubits: usize) -> Result<Vec<MomentumTuple>> {
    if n_qubits == 0 || !n_qubits.is_multiple_of(2) {
        return Err(Error::InvalidQubitCount(n_qubits, "must be even"));
    }
    Ok(admissible_kink_numbers(n_qubits)
        .flat_map(|m| labels_with_kinks(n_qubits, m))
        .collect())
}

/// All eigenstates of the ring with their energies, in label order.
pub fn build_all_eigenstates(n_qubits: usize, u_base: f64) -> Result<Vec<(MomentumTuple, StateVector)>> {
    enumerate_eigenstate_labels(n_qubits)?
        .into_par_iter()
        .map(|label| {
            let v = build_xx_eigenstate(&label, u_base)?;
            Ok((label, v))
        })
        .collect()
}

/// `<Omega | u; n>` from per-site overlaps, without building vectors.
fn omega_overlap_with_chiral(config: &KinkConfig) -> Complex64 {
    let n = config.n_qubits();
    let scale = std::f64::consts::FRAC_1_SQRT_2;
    let mut product = minus_i_power(config.kink_positions().iter().sum());
    for k in 1..=n {
        let [a, b] = chiral_spinor(k, config.site_offset(k));
        product *= (a + b) * scale;
    }
    product
}

/// `<Omega | mu_M(p)>` at `u = 1`. Vanishes unless `M = N / 2`.
pub fn overlap_with_omega(momenta: &MomentumTuple) -> Result<Complex64> {
    let n = momenta.n_qubits();
    let m = momenta.len();
    if !kinks_admissible(n, m) {
        return Err(Error::KinkParity { n_qubits: n, n_kinks: m });
    }
    let partner = -momenta.sector().sign();
    let mut total = Complex64::new(0.0, 0.0);
    for positions in combinations(n, m) {
        let chi = momenta.amplitude(&positions)?;
        let config = KinkConfig::new(n, 1.0, positions)?;
        total += chi * (omega_overlap_with_chiral(&config) + partner * omega_overlap_with_chiral(&config.shifted(2.0)));
    }
    Ok(total)
}

/// Outcome of checking that `sigma_1^x` is diagonal on the chiral basis.
#[derive(Debug, Clone, PartialEq)]
pub struct SigmaXReport {
    pub n_qubits: usize,
    pub u_offset: f64,
    pub vectors_checked: usize,
    /// `max || sigma_1^x v - lambda v ||` with `lambda = <v|sigma_1^x|v>`.
    pub max_residual: f64,
    /// Vectors whose eigenvalue differs from `kappa`.
    pub sign_mismatches: usize,
}

impl SigmaXReport {
    pub fn is_diagonal(&self, tolerance: f64) -> bool {
        self.max_residual < tolerance
    }
}

/// Applies `sigma_1^x` to every chiral basis vector built from base offsets
/// `u_offset` and `u_offset + 2`.
pub fn check_sigma_x_diagonal(n_qubits: usize, u_offset: f64) -> Result<SigmaXReport> {
    let mut max_residual = 0.0_f64;
    let mut sign_mismatches = 0;
    let mut checked = 0;
    for m in admissible_kink_numbers(n_qubits) {
        for positions in combinations(n_qubits, m) {
            for base in [u_offset, u_offset + 2.0] {
                let config = KinkConfig::new(n_qubits, base, positions.clone())?;
                let v = build_chiral_state(&ChiralLabel::new(config.clone()))?;
                let image = v.apply_pauli(1, Pauli::X);
                let lambda = v.inner(&image);
                let mut residual = image.clone();
                residual.add_scaled(-lambda, &v);
                max_residual = max_residual.max(residual.norm());
                if let Some(kappa) = config.chirality() {
                    if (lambda.re - kappa.sign()).abs() > 1e-12 {
                        sign_mismatches += 1;
                    }
                }
                checked += 1;
            }
        }
    }
    Ok(SigmaXReport {
        n_qubits,
        u_offset,
        vectors_checked: checked,
        max_residual,
        sign_mismatches,
    })
}

/// Momentum tuples of a given `M` on both sector lattices.
pub fn labels_with_kinks(n_qubits: usize, n_kinks: usize) -> Vec<MomentumTuple> {
    let mut out = Vec::new();
    for sector in [Sector::Periodic, Sector::Antiperiodic] {
        let lattice = sector_lattice(n_qubits, sector);
        for idx in combinations(n_qubits, n_kinks) {
            let p: Vec<f64> = idx.iter().map(|&i| lattice[i - 1]).collect();
            if let Ok(t) = MomentumTuple::new(n_qubits, sector, &p) {
                out.push(t);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::build_xx_hamiltonian;

    #[test]
    fn label_count_is_hilbert_dimension() {
        for n in [4, 6, 8] {
            assert_eq!(enumerate_eigenstate_labels(n).unwrap().len(), 1 << n);
        }
    }

    #[test]
    fn eigen_equation() {
        for n in [4, 6] {
            let h = build_xx_hamiltonian(n).unwrap();
            for (label, v) in build_all_eigenstates(n, 1.0).unwrap() {
                let hv = h.apply(&v).unwrap();
                let mut r = hv.clone();
                r.add_scaled(Complex64::new(-label.energy(), 0.0), &v);
                assert!(r.norm() < 1e-10, "{label:?}");
                assert!((v.norm() - 1.0).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn one_kink_ansatz() {
        // (2N)^{-1/2} sum_n e^{ipn} (|+;n> - e^{ipN} |-;n>), basis vectors carrying (-i)^n
        let n = 6;
        let lattice = sector_lattice(n, Sector::Antiperiodic);
        for &p in &lattice {
            let label = MomentumTuple::new(n, Sector::Antiperiodic, &[p]).unwrap();
            let mu = build_xx_eigenstate(&label, 1.0).unwrap();
            let mut ansatz = StateVector::zeros(n).unwrap();
            for site in 1..=n {
                let plus = build_chiral_state(&ChiralLabel::new(KinkConfig::new(n, 1.0, vec![site]).unwrap())).unwrap();
                let minus = build_chiral_state(&ChiralLabel::new(KinkConfig::new(n, 3.0, vec![site]).unwrap())).unwrap();
                let w = Complex64::from_polar(1.0, p * site as f64) / (2.0 * n as f64).sqrt();
                ansatz.add_scaled(w, &plus);
                ansatz.add_scaled(w * Complex64::from_polar(-1.0, p * n as f64), &minus);
            }
            assert!(mu.max_abs_diff(&ansatz) < 1e-13);
        }
    }

    #[test]
    fn omega_overlap_matches_dense_inner_product() {
        for n in [4, 6] {
            let omega = StateVector::omega(n).unwrap();
            for (label, v) in build_all_eigenstates(n, 1.0).unwrap() {
                let fast = overlap_with_omega(&label).unwrap();
                let dense = omega.inner(&v);
                assert!((fast - dense).norm() < 1e-13);
            }
        }
    }

    #[test]
    fn sigma_x_diagonal_at_unit_offset() {
        let r = check_sigma_x_diagonal(4, 1.0).unwrap();
        assert_eq!(r.vectors_checked, 16);
        assert!(r.is_diagonal(1e-13));
        assert_eq!(r.sign_mismatches, 0);
        let r = check_sigma_x_diagonal(6, 1.0).unwrap();
        assert_eq!(r.vectors_checked, 64);
        assert!(r.is_diagonal(1e-13));
        assert_eq!(r.sign_mismatches, 0);
    }

    #[test]
    fn sigma_x_not_diagonal_at_even_offset() {
        let r = check_sigma_x_diagonal(4, 2.0).unwrap();
        assert!(!r.is_diagonal(1e-3));
    }
}
