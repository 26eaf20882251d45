use std::f64::consts::TAU;

use num_complex::Complex64;

use super::pauli::Pauli;
use crate::error::{Error, Result};

/// Smallest chain handled by the dense engine.
pub const MIN_QUBITS: usize = 4;
/// Largest chain handled by the dense engine.
pub const MAX_QUBITS: usize = 14;

pub(crate) fn check_qubits(n_qubits: usize) -> Result<()> {
    if !n_qubits.is_multiple_of(2) {
        return Err(Error::InvalidQubitCount(n_qubits, "must be even"));
    }
    if n_qubits < MIN_QUBITS {
        return Err(Error::InvalidQubitCount(n_qubits, "must be at least 4"));
    }
    if n_qubits > MAX_QUBITS {
        return Err(Error::BudgetExceeded {
            n: n_qubits,
            max: MAX_QUBITS,
        });
    }
    Ok(())
}

/// Amplitudes of an `N`-qubit ring state over the computational basis.
///
/// Basis index bit `n - 1` holds site `n`; bit value 0 is spin up `(1, 0)`.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    n_qubits: usize,
    amplitudes: Vec<Complex64>,
}

impl StateVector {
    /// Wraps raw amplitudes without normalizing them.
    pub fn from_amplitudes(n_qubits: usize, amplitudes: Vec<Complex64>) -> Result<Self> {
        check_qubits(n_qubits)?;
        if amplitudes.len() != 1 << n_qubits {
            return Err(Error::Dimension {
                expected: 1 << n_qubits,
                found: amplitudes.len(),
            });
        }
        Ok(Self {
            n_qubits,
            amplitudes,
        })
    }

    pub fn zeros(n_qubits: usize) -> Result<Self> {
        Self::from_amplitudes(n_qubits, vec![Complex64::new(0.0, 0.0); 1 << n_qubits])
    }

    /// Tensor product of one two-component spinor per site, `sites[0]` for site 1.
    pub fn product(sites: &[[Complex64; 2]]) -> Result<Self> {
        let n_qubits = sites.len();
        check_qubits(n_qubits)?;
        let mut amplitudes = vec![Complex64::new(1.0, 0.0)];
        // site n becomes bit n - 1, so the highest site is the outermost factor
        for spinor in sites {
            let half = amplitudes.len();
            let mut next = Vec::with_capacity(2 * half);
            next.extend(amplitudes.iter().map(|a| a * spinor[0]));
            next.extend(amplitudes.iter().map(|a| a * spinor[1]));
            amplitudes = next;
            debug_assert_eq!(amplitudes.len(), 2 * half);
        }
        Ok(Self {
            n_qubits,
            amplitudes,
        })
    }

    /// The homogeneous `+x` state `|Omega>`.
    pub fn omega(n_qubits: usize) -> Result<Self> {
        Self::helix(n_qubits, 0)
    }

    /// Spin helix `|Psi_Q>` with `Q = 2 pi q_index / N`: site `n` carries
    /// `(1, e^{i n Q}) / sqrt 2`.
    pub fn helix(n_qubits: usize, q_index: i64) -> Result<Self> {
        check_qubits(n_qubits)?;
        let q = TAU * q_index as f64 / n_qubits as f64;
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let sites: Vec<_> = (1..=n_qubits)
            .map(|n| [Complex64::new(s, 0.0), Complex64::from_polar(s, n as f64 * q)])
            .collect();
        Self::product(&sites)
    }

    /// Spin helix for a wavevector given directly; `Q N` must be a multiple of `2 pi`.
    pub fn helix_from_wavevector(n_qubits: usize, q: f64) -> Result<Self> {
        let q_index = q * n_qubits as f64 / TAU;
        if !q_index.is_finite() || (q_index - q_index.round()).abs() > 1e-10 {
            return Err(Error::Commensurability(format!(
                "Q = {q} gives Q N / 2 pi = {q_index} on N = {n_qubits}"
            )));
        }
        Self::helix(n_qubits, q_index.round() as i64)
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn dimension(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn amplitudes_mut(&mut self) -> &mut [Complex64] {
        &mut self.amplitudes
    }

    pub fn into_amplitudes(self) -> Vec<Complex64> {
        self.amplitudes
    }

    pub fn norm(&self) -> f64 {
        self.amplitudes.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn normalized(mut self) -> Self {
        let n = self.norm();
        if n > 0.0 {
            for a in &mut self.amplitudes {
                *a /= n;
            }
        }
        self
    }

    /// `<self|other>`.
    pub fn inner(&self, other: &Self) -> Complex64 {
        assert_eq!(self.dimension(), other.dimension(), "inner product of mismatched states");
        self.amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    /// `self + factor * other`, in place.
    pub fn add_scaled(&mut self, factor: Complex64, other: &Self) {
        assert_eq!(self.dimension(), other.dimension());
        for (a, b) in self.amplitudes.iter_mut().zip(&other.amplitudes) {
            *a += factor * b;
        }
    }

    pub fn scale(&mut self, factor: Complex64) {
        for a in &mut self.amplitudes {
            *a *= factor;
        }
    }

    /// `sigma_site^p |self>`.
    pub fn apply_pauli(&self, site: usize, p: Pauli) -> Self {
        assert!((1..=self.n_qubits).contains(&site), "site {site} out of range");
        let mask = 1usize << (site - 1);
        let mut out = vec![Complex64::new(0.0, 0.0); self.dimension()];
        for (i, &a) in self.amplitudes.iter().enumerate() {
            let (bit, f) = p.act(i & mask != 0);
            let j = if bit { i | mask } else { i & !mask };
            out[j] += f * a;
        }
        Self {
            n_qubits: self.n_qubits,
            amplitudes: out,
        }
    }

    /// `<self| sigma_site^p |self>`.
    pub fn expectation(&self, site: usize, p: Pauli) -> Complex64 {
        assert!((1..=self.n_qubits).contains(&site), "site {site} out of range");
        let mask = 1usize << (site - 1);
        let mut total = Complex64::new(0.0, 0.0);
        for (i, &a) in self.amplitudes.iter().enumerate() {
            let (bit, f) = p.act(i & mask != 0);
            let j = if bit { i | mask } else { i & !mask };
            total += self.amplitudes[j].conj() * f * a;
        }
        total
    }

    /// Largest entrywise deviation `max_i |self_i - other_i|`.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn omega_is_uniform() {
        let s = StateVector::omega(4).unwrap();
        for a in s.amplitudes() {
            assert!((a - Complex64::new(0.25, 0.0)).norm() < 1e-15);
        }
        assert!((s.norm() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn helix_marginals() {
        let s = StateVector::helix(4, 1).unwrap();
        for n in 1..=4 {
            let want = (std::f64::consts::FRAC_PI_2 * n as f64).cos();
            let got = s.expectation(n, Pauli::X);
            assert!((got.re - want).abs() < 1e-14 && got.im.abs() < 1e-14);
        }
    }

    #[test]
    fn size_validation() {
        assert!(StateVector::omega(5).is_err());
        assert!(StateVector::omega(2).is_err());
        assert!(matches!(StateVector::omega(16), Err(Error::BudgetExceeded { .. })));
        assert!(StateVector::from_amplitudes(4, vec![Complex64::new(0.0, 0.0); 15]).is_err());
    }

    #[test]
    fn commensurability() {
        assert!(StateVector::helix_from_wavevector(8, std::f64::consts::FRAC_PI_4).is_ok());
        assert!(StateVector::helix_from_wavevector(8, 0.3).is_err());
    }

    #[test]
    fn bit_layout() {
        // site 1 down, rest up -> index 1
        let up = [Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)];
        let down = [Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0)];
        let s = StateVector::product(&[down, up, up, up]).unwrap();
        assert_eq!(s.amplitudes()[1], Complex64::new(1.0, 0.0));
    }
}
