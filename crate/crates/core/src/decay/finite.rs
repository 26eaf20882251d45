//! `S_N(t) = Re det Phi^(N)(t)` for a periodic ring of `N` qubits.

use std::f64::consts::TAU;

use num_complex::Complex64;

use crate::chiral::{sector_lattice, Sector};
use crate::error::{Error, Result};
use crate::numerics::{det_complex, ComplexMatrix};

/// Dispersion `eps_p = 4 cos p`.
#[inline]
pub fn dispersion(p: f64) -> f64 {
    4.0 * p.cos()
}

fn check_size(n_qubits: usize) -> Result<()> {
    if !n_qubits.is_multiple_of(2) {
        return Err(Error::InvalidQubitCount(n_qubits, "must be even"));
    }
    if n_qubits < 4 {
        return Err(Error::InvalidQubitCount(n_qubits, "must be at least 4"));
    }
    Ok(())
}

fn check_index(n_qubits: usize, index: usize, name: &str) -> Result<()> {
    if index == 0 || index > n_qubits / 2 {
        return Err(Error::IndexRange(format!("{name} = {index} outside 1..={}", n_qubits / 2)));
    }
    Ok(())
}

/// One entry `Phi^(N)_{m,n}(t)` by direct double sum over `p in B_+`, `q in B_-`.
pub fn phi_entry(n_qubits: usize, m: usize, n: usize, t: f64) -> Result<Complex64> {
    check_size(n_qubits)?;
    check_index(n_qubits, m, "m")?;
    check_index(n_qubits, n, "n")?;
    let plus = sector_lattice(n_qubits, Sector::Periodic);
    let minus = sector_lattice(n_qubits, Sector::Antiperiodic);
    let one = Complex64::new(1.0, 0.0);
    let mut total = Complex64::new(0.0, 0.0);
    for &p in &plus {
        for &q in &minus {
            let numerator = (one + Complex64::from_polar(1.0, -p))
                * (one + Complex64::from_polar(1.0, q))
                * Complex64::from_polar(
                    1.0,
                    2.0 * (m as f64 * p - n as f64 * q) + t * (dispersion(p) - dispersion(q)),
                );
            total += numerator / (Complex64::from_polar(1.0, p - q) - one);
        }
    }
    Ok(total / (n_qubits * n_qubits) as f64)
}

/// The full `N/2 x N/2` matrix `Phi^(N)(t)`, assembled as `L C R / N^2` from
/// the momentum factor tables (`L_{m p}`, `C_{p q} = 1/(e^{i(p-q)} - 1)`, `R_{q n}`).
pub fn phi_matrix(n_qubits: usize, t: f64) -> Result<ComplexMatrix> {
    check_size(n_qubits)?;
    let half = n_qubits / 2;
    let plus = sector_lattice(n_qubits, Sector::Periodic);
    let minus = sector_lattice(n_qubits, Sector::Antiperiodic);
    let one = Complex64::new(1.0, 0.0);

    let left = ComplexMatrix::from_fn(half, n_qubits, |row, k| {
        let m = (row + 1) as f64;
        let p = plus[k];
        (one + Complex64::from_polar(1.0, -p)) * Complex64::from_polar(1.0, 2.0 * m * p + t * dispersion(p))
    });
    let cauchy = ComplexMatrix::from_fn(n_qubits, n_qubits, |i, j| {
        one / (Complex64::from_polar(1.0, plus[i] - minus[j]) - one)
    });
    let right = ComplexMatrix::from_fn(n_qubits, half, |k, col| {
        let n = (col + 1) as f64;
        let q = minus[k];
        (one + Complex64::from_polar(1.0, q)) * Complex64::from_polar(1.0, -(2.0 * n * q + t * dispersion(q)))
    });
    let scale = Complex64::new(1.0 / (n_qubits * n_qubits) as f64, 0.0);
    Ok(left * cauchy * right * scale)
}

/// `S_N(t) = Re det Phi^(N)(t)`.
pub fn s_finite(n_qubits: usize, t: f64) -> Result<f64> {
    Ok(det_complex(&phi_matrix(n_qubits, t)?).re)
}

/// `(<sigma_n^x>, <sigma_n^y>, <sigma_n^z>)` for `n = 1..=N` of the helix with
/// `Q = 2 pi q_index / N`, from `S_N(t cos Q)`.
pub fn finite_helix_profile(n_qubits: usize, q_index: i64, t: f64) -> Result<Vec<(f64, f64, f64)>> {
    let q = TAU * q_index as f64 / n_qubits as f64;
    let s = s_finite(n_qubits, t * q.cos())?;
    Ok((1..=n_qubits)
        .map(|n| {
            let phase = q * n as f64;
            (s * phase.cos(), s * phase.sin(), 0.0)
        })
        .collect())
}

/// `(N, t)` pair for the finite-size determinant.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FiniteDecayRequest {
    pub n_qubits: usize,
    pub t: f64,
}

impl FiniteDecayRequest {
    pub fn new(n_qubits: usize, t: f64) -> Result<Self> {
        check_size(n_qubits)?;
        Ok(Self { n_qubits, t })
    }

    pub fn evaluate(&self) -> Result<f64> {
        s_finite(self.n_qubits, self.t)
    }
}
