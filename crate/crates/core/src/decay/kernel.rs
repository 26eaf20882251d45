//! Thermodynamic limit: the Bessel kernel `K_{m,n}(t)` and
//! `S(r, t) = |det_{m,n <= r} A_{m,n}(t)|^2` with
//! `A_{m,n} = delta_{m,n} + K_{m,n} + K_{m,1-n}`.
//!
//! The diagonal of the kernel is taken with the identity removed:
//! `K_{n,n} = -(J_{2n-1}^2 + 2 sum_{j >= 2n} J_j^2)`, all at argument `4t`.
//! This is the large-`N` limit of `Phi^(N)_{n,n} - 1`; written as a tail sum
//! it has no cancellation.

use num_complex::Complex64;

use super::finite::phi_matrix;
use crate::error::{Error, Result};
use crate::numerics::{logdet_complex, BesselTable, ComplexMatrix, LogDeterminant};

/// Values of `S` below this are reported as zero (use the log instead).
pub const S_FLUSH_BELOW: f64 = 1e-290;

/// How the diagonal `K_{n,n}` is evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum KernelDiagonal {
    /// `-(J_{2n-1}^2 + 2 sum_{j >= 2n} J_j^2)`; `K(0) = 0`, `A(0) = I`.
    #[default]
    Regularized,
    /// `-J_0^2 + J_{2n-1}^2 + 2 sum_{j=0}^{2n-2} J_j^2` taken literally. It
    /// still contains the identity, so `A(0) = 2I` and `S(r, 0) = 4^r`. Kept
    /// as a negative control for the validation suite.
    Literal,
}

/// Bessel kernel at a fixed time, valid for `1 <= m <= max_index` and
/// `|n| <= max_index`.
#[derive(Debug, Clone)]
pub struct Kernel {
    t: f64,
    max_index: usize,
    bessel: BesselTable,
    diagonal: KernelDiagonal,
}

impl Kernel {
    pub fn new(max_index: usize, t: f64) -> Self {
        Self::with_diagonal(max_index, t, KernelDiagonal::Regularized)
    }

    pub fn with_diagonal(max_index: usize, t: f64, diagonal: KernelDiagonal) -> Self {
        let x = 4.0 * t;
        let ax = x.abs();
        // orders reach 2 * max_index; the diagonal tail runs until J_j(x) is negligible
        let order = 2 * max_index + 2 + (ax + 10.0 * ax.cbrt() + 40.0).ceil() as usize;
        Self {
            t,
            max_index,
            bessel: BesselTable::new(order, x),
            diagonal,
        }
    }

    pub fn t(&self) -> f64 {
        self.t
    }

    #[inline]
    fn j(&self, order: i64) -> f64 {
        self.bessel.get(order)
    }

    /// `K_{m,n}(t)`.
    pub fn entry(&self, m: i64, n: i64) -> Result<Complex64> {
        if m < 1 || m as usize > self.max_index || n.unsigned_abs() as usize > self.max_index {
            return Err(Error::IndexRange(format!(
                "K_({m},{n}) outside the table of size {}",
                self.max_index
            )));
        }
        Ok(self.entry_unchecked(m, n))
    }

    fn entry_unchecked(&self, m: i64, n: i64) -> Complex64 {
        let t = self.t;
        if m == n {
            let v = match self.diagonal {
                KernelDiagonal::Regularized => {
                    let edge = self.j(2 * n - 1);
                    -(edge * edge + 2.0 * self.bessel.tail_sum_sq((2 * n) as usize))
                }
                KernelDiagonal::Literal => {
                    let j0 = self.j(0);
                    let edge = self.j(2 * n - 1);
                    let body: f64 = (0..=(2 * n - 2)).map(|j| self.j(j).powi(2)).sum();
                    -j0 * j0 + edge * edge + 2.0 * body
                }
            };
            return Complex64::new(v, 0.0);
        }
        let j = |k: i64| self.j(k);
        let d = (m - n) as f64;
        let real = t / d * (j(2 * m) * j(2 * n - 1) - j(2 * n) * j(2 * m - 1))
            + t / d * (j(2 * m - 1) * j(2 * n - 2) - j(2 * n - 1) * j(2 * m - 2));
        let imag = t / (d - 0.5) * (j(2 * m - 2) * j(2 * n) - j(2 * n - 1) * j(2 * m - 1))
            - t / (d + 0.5) * (j(2 * m - 1) * j(2 * n - 1) - j(2 * n - 2) * j(2 * m));
        Complex64::new(real, imag)
    }

    /// `A(t)` of size `rank <= max_index`.
    pub fn a_matrix(&self, rank: usize) -> ComplexMatrix {
        assert!(rank <= self.max_index, "rank {rank} exceeds kernel table {}", self.max_index);
        ComplexMatrix::from_fn(rank, rank, |row, col| {
            let m = row as i64 + 1;
            let n = col as i64 + 1;
            let delta = if m == n { 1.0 } else { 0.0 };
            Complex64::new(delta, 0.0) + self.entry_unchecked(m, n) + self.entry_unchecked(m, 1 - n)
        })
    }
}

/// `K_{m,n}(t)` for `m >= 1` and any integer `n`.
pub fn kernel_k(m: i64, n: i64, t: f64) -> Result<Complex64> {
    if m < 1 {
        return Err(Error::IndexRange(format!("kernel row m = {m} must be >= 1")));
    }
    let size = m.max(n.abs()).max(1) as usize;
    Kernel::new(size, t).entry(m, n)
}

/// `A(t)` truncated to `rank x rank`.
pub fn a_matrix(rank: usize, t: f64) -> Result<ComplexMatrix> {
    check_rank(rank)?;
    Ok(Kernel::new(rank, t).a_matrix(rank))
}

fn check_rank(rank: usize) -> Result<()> {
    if rank == 0 {
        return Err(Error::InvalidArgument("kernel rank must be at least 1".into()));
    }
    Ok(())
}

/// `det A(t)` in log domain, with `S = |det A|^2` derived from it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KernelDeterminant {
    pub rank: usize,
    pub t: f64,
    pub det: LogDeterminant,
}

impl KernelDeterminant {
    pub fn new(rank: usize, t: f64) -> Result<Self> {
        Self::with_diagonal(rank, t, KernelDiagonal::Regularized)
    }

    pub fn with_diagonal(rank: usize, t: f64, diagonal: KernelDiagonal) -> Result<Self> {
        check_rank(rank)?;
        let a = Kernel::with_diagonal(rank, t, diagonal).a_matrix(rank);
        Ok(Self {
            rank,
            t,
            det: logdet_complex(&a),
        })
    }

    /// `S(r, t)`, flushed to zero below [`S_FLUSH_BELOW`].
    pub fn s(&self) -> f64 {
        let s = (2.0 * self.det.log_magnitude).exp();
        if s < S_FLUSH_BELOW {
            0.0
        } else {
            s
        }
    }

    /// `log10 S(r, t)`, finite far below the range of `f64`.
    pub fn log10_s(&self) -> f64 {
        2.0 * self.det.log10_magnitude()
    }
}

/// `S(r, t) = |det A(t)|^2`.
pub fn s_infinite(rank: usize, t: f64) -> f64 {
    KernelDeterminant::new(rank.max(1), t)
        .expect("rank clamped to >= 1")
        .s()
}

/// Empirical horizon `t_m(r) = r / 2.2 - 0.19` below which rank `r` reproduces `S(t)`.
pub fn validity_horizon(rank: usize) -> f64 {
    rank as f64 / 2.2 - 0.19
}

/// Smallest rank whose horizon exceeds `|t| + margin`.
pub fn auto_rank(t: f64, margin: f64) -> usize {
    let bound = 2.2 * (t.abs() + margin + 0.19);
    ((bound.floor() as i64) + 1).max(1) as usize
}

/// Rank-one closed form `g_0^2 + 4 t^2 (g_0 + g_1/3)^2`, `g_n = J_n^2(4t) + J_{n+1}^2(4t)`.
pub fn s_rank_one_closed_form(t: f64) -> f64 {
    let b = BesselTable::new(3, 4.0 * t);
    let g = |n: i64| b.get(n).powi(2) + b.get(n + 1).powi(2);
    g(0).powi(2) + 4.0 * t * t * (g(0) + g(1) / 3.0).powi(2)
}

/// Transverse profile `(<sigma_n^x>, <sigma_n^y>, <sigma_n^z>)` of a helix with
/// wavevector `Q = pi * q_over_pi` in the thermodynamic limit, using
/// `S(rank, t cos Q)`.
pub fn helix_profile(q_over_pi: f64, n: i64, t: f64, rank: usize) -> (f64, f64, f64) {
    let q = std::f64::consts::PI * q_over_pi;
    let s = s_infinite(rank, t * q.cos());
    let phase = q * n as f64;
    (s * phase.cos(), s * phase.sin(), 0.0)
}

/// `max |(-1)^{m-n} Phi^(N)_{m,n}(t) - delta_{m,n} - K_{m,n}(t)|` over
/// `m, n <= max_index` and the given times.
pub fn kernel_consistency(n_qubits: usize, max_index: usize, times: &[f64], diagonal: KernelDiagonal) -> Result<f64> {
    if max_index == 0 || max_index > n_qubits / 2 {
        return Err(Error::IndexRange(format!(
            "kernel block {max_index} does not fit in N = {n_qubits}"
        )));
    }
    let mut worst = 0.0_f64;
    for &t in times {
        let phi = phi_matrix(n_qubits, t)?;
        let kernel = Kernel::with_diagonal(max_index, t, diagonal);
        for m in 1..=max_index {
            for n in 1..=max_index {
                let sign = if (m + n) % 2 == 0 { 1.0 } else { -1.0 };
                let delta = if m == n { 1.0 } else { 0.0 };
                let k = kernel.entry(m as i64, n as i64)?;
                worst = worst.max((phi[(m - 1, n - 1)] * sign - delta - k).norm());
            }
        }
    }
    Ok(worst)
}

/// `(rank, t)` pair for the Bessel-kernel determinant.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KernelRequest {
    pub rank: usize,
    pub t: f64,
}

impl KernelRequest {
    pub fn new(rank: usize, t: f64) -> Result<Self> {
        check_rank(rank)?;
        Ok(Self { rank, t })
    }

    pub fn evaluate(&self) -> Result<KernelDeterminant> {
        KernelDeterminant::new(self.rank, self.t)
    }
}
