//! Chiral qubit basis and transverse spin-helix relaxation in the XX chain.
//!
//! The chiral basis is built from transverse spin helices carrying kinks
//! (links where the in-plane polarization turns backwards). It diagonalizes the
//! operator `V`, which commutes with the periodic XX Hamiltonian, and makes
//! `sigma_1^x` diagonal. On top of it this crate provides:
//!
//! - [`exact`]: dense states and operators, exact time evolution and the
//!   brute-force oracle `S_N(t) = <Omega| sigma_1^x(t) |Omega>`.
//! - [`chiral`]: kink configurations, chiral basis vectors, Slater amplitudes
//!   and the complete set of XX eigenstates labelled by chiral quasi-momenta.
//! - [`numerics`]: integer-order Bessel functions, complex (log-)determinants
//!   and least-squares lines.
//! - [`decay`]: the finite-size determinant `S_N(t) = Re det Phi^(N)(t)` and the
//!   Bessel-kernel determinant `S(r, t) = |det A(t)|^2`.
//! - [`series`]: Taylor coefficients from operator moments, the asymptotic
//!   fit of `det A(t)` and the decay-rate law `gamma(Q) = (8/pi)|cos Q|`.
//! - [`cli`]: data emission for the `chiralix` binary and the validation suite.
//!
//! Sites are numbered `1..=N` in every public function; site `n` is stored in
//! bit `n - 1` of a computational-basis index, and bit value 0 is spin up
//! `(1, 0)`.
//!
//! ```
//! use chiralix::decay::{s_finite, s_infinite};
//!
//! let s8 = s_finite(8, 0.5).unwrap();
//! let s = s_infinite(8, 0.5);
//! assert!((s8 - s).abs() < 1e-3);
//! ```

pub mod chiral;
pub mod cli;
pub mod decay;
pub mod error;
pub mod exact;
pub mod numerics;
pub mod timeseries;
pub mod series;

pub use error::{Error, Result};
pub use num_complex::Complex64;
