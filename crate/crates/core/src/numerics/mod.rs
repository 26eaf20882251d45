//! Special functions and determinant kernels shared by the decay engines.

mod bessel;
mod fit;
mod linalg;

pub use bessel::{bessel_j, bessel_j_sequence, BesselTable, MAX_ARGUMENT, MAX_ORDER};
pub use fit::{fit_line, LineFit};
pub use linalg::{det_complex, logdet_complex, wrap_phase, ComplexMatrix, LogDeterminant};
