use thiserror::Error;

/// Errors raised across the library.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("number of qubits {0} is invalid: {1}")]
    InvalidQubitCount(usize, &'static str),

    #[error("system size N = {n} exceeds the dense budget of {max} qubits")]
    BudgetExceeded { n: usize, max: usize },

    #[error("{n_kinks} kinks is not admissible on a ring of {n_qubits} qubits (need N - 2M = 0 mod 4)")]
    KinkParity { n_qubits: usize, n_kinks: usize },

    #[error("invalid kink positions: {0}")]
    KinkPositions(String),

    #[error("invalid momenta: {0}")]
    Momenta(String),

    #[error("wavevector index must satisfy Q N = 0 mod 2 pi: {0}")]
    Commensurability(String),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    Dimension { expected: usize, found: usize },

    #[error("operator is not Hermitian (max deviation {0:e})")]
    NotHermitian(f64),

    #[error("index out of range: {0}")]
    IndexRange(String),

    #[error("Bessel argument outside supported domain: order {order}, x {x}")]
    BesselDomain { order: i64, x: f64 },

    #[error("degenerate fit: {0}")]
    DegenerateFit(String),

    #[error("fit window ({lo}, {hi}) outside the validity region of rank {rank} (t_m = {t_m})")]
    FitWindow { lo: f64, hi: f64, rank: usize, t_m: f64 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
