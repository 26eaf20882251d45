use rayon::prelude::*;

use super::operator::DenseOperator;
use super::pauli::{Pauli, PauliSum};
use super::spectral::SpectralDecomposition;
use super::state::{check_qubits, StateVector};
use crate::error::{Error, Result};
use crate::timeseries::TimeSeries;

/// Spin component measured by [`one_point_profile`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    X,
    Y,
    Z,
}

impl From<Axis> for Pauli {
    fn from(a: Axis) -> Self {
        match a {
            Axis::X => Pauli::X,
            Axis::Y => Pauli::Y,
            Axis::Z => Pauli::Z,
        }
    }
}

/// Time evolution with a cached eigendecomposition.
#[derive(Debug, Clone)]
pub struct Evolver {
    spectrum: SpectralDecomposition,
}

impl Evolver {
    pub fn new(hamiltonian: &DenseOperator) -> Result<Self> {
        Ok(Self {
            spectrum: SpectralDecomposition::from_dense(hamiltonian)?,
        })
    }

    /// XX ring built from Pauli terms; works up to the 14-qubit budget.
    pub fn xx_ring(n_qubits: usize) -> Result<Self> {
        Ok(Self {
            spectrum: SpectralDecomposition::from_terms(&PauliSum::xx_ring(n_qubits))?,
        })
    }

    pub fn spectrum(&self) -> &SpectralDecomposition {
        &self.spectrum
    }

    pub fn evolve(&self, state: &StateVector, t: f64) -> Result<StateVector> {
        self.spectrum.evolve(state, t)
    }

    /// `<sigma_n^axis(t)>` for `n = 1..=N`.
    pub fn profile(&self, initial: &StateVector, t: f64, axis: Axis) -> Result<Vec<f64>> {
        let psi = self.evolve(initial, t)?;
        Ok(profile_of(&psi, axis))
    }
}

fn profile_of(psi: &StateVector, axis: Axis) -> Vec<f64> {
    (1..=psi.n_qubits()).map(|n| psi.expectation(n, axis.into()).re).collect()
}

/// `exp(-i H t) |state>`. Decomposes `hamiltonian` on every call; use
/// [`Evolver`] to reuse the decomposition.
pub fn evolve(state: &StateVector, hamiltonian: &DenseOperator, t: f64) -> Result<StateVector> {
    if state.dimension() != hamiltonian.dimension() {
        return Err(Error::Dimension {
            expected: hamiltonian.dimension(),
            found: state.dimension(),
        });
    }
    Evolver::new(hamiltonian)?.evolve(state, t)
}

/// `<sigma_n^axis(t)>`, `n = 1..=N`, starting from `initial`.
pub fn one_point_profile(initial: &StateVector, hamiltonian: &DenseOperator, t: f64, axis: Axis) -> Result<Vec<f64>> {
    if !t.is_finite() {
        return Err(Error::InvalidArgument(format!("time {t} is not finite")));
    }
    Ok(profile_of(&evolve(initial, hamiltonian, t)?, axis))
}

/// Brute-force `S_N(t) = <Omega| e^{iHt} sigma_1^x e^{-iHt} |Omega>` on a grid.
pub fn oracle_sn(n_qubits: usize, t_grid: &[f64]) -> Result<TimeSeries> {
    check_qubits(n_qubits)?;
    let evolver = Evolver::xx_ring(n_qubits)?;
    let omega = StateVector::omega(n_qubits)?;
    let values: Vec<f64> = t_grid
        .par_iter()
        .map(|&t| {
            let psi = evolver.evolve(&omega, t)?;
            let s = psi.expectation(1, Pauli::X);
            debug_assert!(s.im.abs() < 1e-12);
            Ok(s.re)
        })
        .collect::<Result<_>>()?;
    Ok(TimeSeries::for_system_size(n_qubits, t_grid.iter().copied().zip(values).collect()))
}
