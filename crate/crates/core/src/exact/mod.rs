//! Dense states and operators on small rings, exact evolution and the
//! brute-force `S_N(t)` oracle.

mod operator;
mod oracle;
mod pauli;
mod spectral;
mod state;

pub use operator::{build_v_operator, build_xx_hamiltonian, DenseOperator, DENSE_OPERATOR_MAX_QUBITS};
pub use oracle::{evolve, one_point_profile, oracle_sn, Axis, Evolver};
pub use pauli::{Pauli, PauliSum, PauliTerm};
pub use spectral::{SpectralBlock, SpectralDecomposition};
pub use state::{StateVector, MAX_QUBITS, MIN_QUBITS};
