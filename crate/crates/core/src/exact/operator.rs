use nalgebra::DMatrix;
use num_complex::Complex64;

use super::pauli::PauliSum;
use super::state::{check_qubits, StateVector};
use crate::error::{Error, Result};

/// Largest chain for which a full `2^N x 2^N` matrix is materialized.
pub const DENSE_OPERATOR_MAX_QUBITS: usize = 12;

const HERMITIAN_TOLERANCE: f64 = 1e-13;

/// Full matrix of an operator on an `N`-qubit ring.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseOperator {
    n_qubits: usize,
    matrix: DMatrix<Complex64>,
    hermitian: bool,
}

impl DenseOperator {
    pub fn from_matrix(n_qubits: usize, matrix: DMatrix<Complex64>) -> Result<Self> {
        check_qubits(n_qubits)?;
        let dim = 1usize << n_qubits;
        if matrix.nrows() != dim || matrix.ncols() != dim {
            return Err(Error::Dimension {
                expected: dim,
                found: matrix.nrows().max(matrix.ncols()),
            });
        }
        let hermitian = hermitian_deviation(&matrix) < HERMITIAN_TOLERANCE;
        Ok(Self {
            n_qubits,
            matrix,
            hermitian,
        })
    }

    pub fn from_terms(terms: &PauliSum) -> Result<Self> {
        check_qubits(terms.n_qubits)?;
        if terms.n_qubits > DENSE_OPERATOR_MAX_QUBITS {
            return Err(Error::BudgetExceeded {
                n: terms.n_qubits,
                max: DENSE_OPERATOR_MAX_QUBITS,
            });
        }
        let dim = terms.dimension();
        let mut matrix = DMatrix::zeros(dim, dim);
        for col in 0..dim {
            for term in &terms.terms {
                let (row, a) = term.act_on_basis(col);
                matrix[(row, col)] += a;
            }
        }
        Self::from_matrix(terms.n_qubits, matrix)
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn dimension(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.matrix
    }

    pub fn is_hermitian(&self) -> bool {
        self.hermitian
    }

    /// `max |A_ij - conj(A_ji)|`.
    pub fn hermitian_deviation(&self) -> f64 {
        hermitian_deviation(&self.matrix)
    }

    pub fn trace(&self) -> Complex64 {
        self.matrix.trace()
    }

    /// `[self, other]`.
    pub fn commutator(&self, other: &Self) -> DMatrix<Complex64> {
        &self.matrix * &other.matrix - &other.matrix * &self.matrix
    }

    pub fn apply(&self, state: &StateVector) -> Result<StateVector> {
        if state.dimension() != self.dimension() {
            return Err(Error::Dimension {
                expected: self.dimension(),
                found: state.dimension(),
            });
        }
        let out: Vec<Complex64> = (0..self.dimension())
            .map(|i| {
                self.matrix
                    .row(i)
                    .iter()
                    .zip(state.amplitudes())
                    .map(|(m, a)| m * a)
                    .sum()
            })
            .collect();
        StateVector::from_amplitudes(self.n_qubits, out)
    }

    /// `<state| self |state>`.
    pub fn expectation(&self, state: &StateVector) -> Result<Complex64> {
        Ok(state.inner(&self.apply(state)?))
    }
}

/// XX Hamiltonian `H = sum_n (sigma^x_n sigma^x_{n+1} + sigma^y_n sigma^y_{n+1})`
/// on a ring of `n_qubits` (even, at least 4).
pub fn build_xx_hamiltonian(n_qubits: usize) -> Result<DenseOperator> {
    DenseOperator::from_terms(&PauliSum::xx_ring(n_qubits))
}

/// The chirality operator `V`, whose eigenstates are the chiral basis.
pub fn build_v_operator(n_qubits: usize) -> Result<DenseOperator> {
    DenseOperator::from_terms(&PauliSum::chirality(n_qubits))
}

fn hermitian_deviation(m: &DMatrix<Complex64>) -> f64 {
    let n = m.nrows();
    let mut worst = 0.0_f64;
    for i in 0..n {
        for j in i..n {
            worst = worst.max((m[(i, j)] - m[(j, i)].conj()).norm());
        }
    }
    worst
}

#[cfg(test)]
mod tests {
    use super::*;

    fn max_abs(m: &DMatrix<Complex64>) -> f64 {
        m.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    #[test]
    fn hamiltonian_is_hermitian_and_traceless() {
        for n in [4, 6, 8] {
            let h = build_xx_hamiltonian(n).unwrap();
            assert!(h.is_hermitian());
            assert!(h.trace().norm() < 1e-14);
        }
    }

    #[test]
    fn v_is_hermitian() {
        for n in [4, 6, 8] {
            let v = build_v_operator(n).unwrap();
            assert!(v.hermitian_deviation() < 1e-15);
        }
    }

    #[test]
    fn v_commutes_with_h() {
        for n in [4, 6, 8] {
            let h = build_xx_hamiltonian(n).unwrap();
            let v = build_v_operator(n).unwrap();
            assert!(max_abs(&h.commutator(&v)) < 1e-13, "N = {n}");
        }
    }

    #[test]
    fn rejects_bad_sizes() {
        assert!(build_xx_hamiltonian(5).is_err());
        assert!(build_xx_hamiltonian(2).is_err());
        assert!(build_v_operator(7).is_err());
        assert!(matches!(build_xx_hamiltonian(14), Err(Error::BudgetExceeded { .. })));
    }

    #[test]
    fn non_hermitian_flag() {
        let mut m = DMatrix::zeros(16, 16);
        m[(0, 1)] = Complex64::new(1.0, 0.0);
        assert!(!DenseOperator::from_matrix(4, m).unwrap().is_hermitian());
    }
}
