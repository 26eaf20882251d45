//! Complex determinants by partially pivoted elimination.

use nalgebra::DMatrix;
use num_complex::Complex64;

/// Square complex matrix; `nrows()` is its rank.
pub type ComplexMatrix = DMatrix<Complex64>;

/// `log|det|` and `arg det`, for determinants outside the range of `f64`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogDeterminant {
    /// Natural log of `|det|`; `-inf` for a singular matrix.
    pub log_magnitude: f64,
    /// `arg det` in `(-pi, pi]`.
    pub phase: f64,
}

impl LogDeterminant {
    pub fn is_singular(&self) -> bool {
        self.log_magnitude == f64::NEG_INFINITY
    }

    /// `exp(log_magnitude + i phase)`; underflows to zero gracefully.
    pub fn value(&self) -> Complex64 {
        Complex64::from_polar(self.log_magnitude.exp(), self.phase)
    }

    pub fn log10_magnitude(&self) -> f64 {
        self.log_magnitude / std::f64::consts::LN_10
    }
}

/// Row-echelon reduction with partial pivoting, calling `visit` with each
/// pivot. Returns the permutation parity (`true` for odd) or `None` when a
/// zero pivot column is met.
fn eliminate(matrix: &ComplexMatrix, mut visit: impl FnMut(Complex64)) -> Option<bool> {
    assert!(matrix.is_square(), "determinant of a non-square matrix");
    let n = matrix.nrows();
    let mut a = matrix.clone();
    let mut odd = false;

    for k in 0..n {
        let (pivot_row, pivot_abs) = (k..n)
            .map(|i| (i, a[(i, k)].norm()))
            .fold((k, -1.0), |best, cur| if cur.1 > best.1 { cur } else { best });
        if pivot_abs == 0.0 {
            return None;
        }
        if pivot_row != k {
            a.swap_rows(pivot_row, k);
            odd = !odd;
        }
        let pivot = a[(k, k)];
        visit(pivot);
        let inv = pivot.inv();
        for i in (k + 1)..n {
            let factor = a[(i, k)] * inv;
            if factor == Complex64::new(0.0, 0.0) {
                continue;
            }
            for j in (k + 1)..n {
                let u = a[(k, j)];
                a[(i, j)] -= factor * u;
            }
        }
    }
    Some(odd)
}

/// Determinant of a square complex matrix. A singular matrix gives 0.
pub fn det_complex(matrix: &ComplexMatrix) -> Complex64 {
    let mut product = Complex64::new(1.0, 0.0);
    match eliminate(matrix, |p| product *= p) {
        Some(true) => -product,
        Some(false) => product,
        None => Complex64::new(0.0, 0.0),
    }
}

/// Determinant in log domain, accumulating `ln|pivot|` and `arg pivot`.
pub fn logdet_complex(matrix: &ComplexMatrix) -> LogDeterminant {
    let mut log_magnitude = 0.0;
    let mut phase = 0.0;
    match eliminate(matrix, |p| {
        log_magnitude += p.norm().ln();
        phase += p.arg();
    }) {
        Some(odd) => {
            if odd {
                phase += std::f64::consts::PI;
            }
            LogDeterminant {
                log_magnitude,
                phase: wrap_phase(phase),
            }
        }
        None => LogDeterminant {
            log_magnitude: f64::NEG_INFINITY,
            phase: 0.0,
        },
    }
}

/// Maps an angle to `(-pi, pi]`.
pub fn wrap_phase(angle: f64) -> f64 {
    use std::f64::consts::{PI, TAU};
    let mut a = angle.rem_euclid(TAU);
    if a > PI {
        a -= TAU;
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    // Laplace expansion along the first row; independent of elimination.
    fn cofactor_det(m: &ComplexMatrix) -> Complex64 {
        let n = m.nrows();
        if n == 1 {
            return m[(0, 0)];
        }
        let mut total = c(0.0, 0.0);
        for col in 0..n {
            let minor = m.clone().remove_row(0).remove_column(col);
            let sign = if col % 2 == 0 { 1.0 } else { -1.0 };
            total += m[(0, col)] * cofactor_det(&minor) * sign;
        }
        total
    }

    fn pseudo_random_matrix(n: usize, seed: u64) -> ComplexMatrix {
        let mut state = seed;
        let mut next = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((state >> 11) as f64 / (1u64 << 53) as f64) * 2.0 - 1.0
        };
        ComplexMatrix::from_fn(n, n, |_, _| c(next(), next()))
    }

    #[test]
    fn identity_and_diagonal() {
        assert_eq!(det_complex(&ComplexMatrix::identity(5, 5)), c(1.0, 0.0));
        let d = ComplexMatrix::from_diagonal(&nalgebra::DVector::from_vec(vec![c(2.0, 0.0), c(0.0, 3.0)]));
        assert!((det_complex(&d) - c(0.0, 6.0)).norm() < 1e-15);

        let ld = logdet_complex(&ComplexMatrix::identity(4, 4));
        assert_eq!(ld.log_magnitude, 0.0);
        assert_eq!(ld.phase, 0.0);
    }

    #[test]
    fn closed_forms_small_rank() {
        let a = ComplexMatrix::from_row_slice(1, 1, &[c(0.3, -1.2)]);
        assert_eq!(det_complex(&a), c(0.3, -1.2));
        let b = ComplexMatrix::from_row_slice(2, 2, &[c(1.0, 2.0), c(-0.5, 0.1), c(3.0, 0.0), c(0.2, -0.7)]);
        let want = b[(0, 0)] * b[(1, 1)] - b[(0, 1)] * b[(1, 0)];
        assert!((det_complex(&b) - want).norm() < 1e-15);
    }

    #[test]
    fn matches_cofactor_expansion() {
        for seed in 1..6 {
            let m = pseudo_random_matrix(6, seed);
            let want = cofactor_det(&m);
            let got = det_complex(&m);
            assert!((got - want).norm() / want.norm() < 1e-11, "seed {seed}");
        }
    }

    #[test]
    fn tiny_diagonal_in_log_domain() {
        let d = ComplexMatrix::from_diagonal_element(2, 2, c(1e-160, 0.0));
        let ld = logdet_complex(&d);
        assert!((ld.log_magnitude - 2.0 * (1e-160_f64).ln()).abs() < 1e-10);
        assert!((ld.log_magnitude + 736.827).abs() < 1e-2);
        // the plain product is subnormal at best
        assert!(det_complex(&d).norm() < f64::MIN_POSITIVE);
    }

    #[test]
    fn singular_gives_zero() {
        let m = ComplexMatrix::from_row_slice(2, 2, &[c(1.0, 1.0), c(2.0, 2.0), c(1.0, 1.0), c(2.0, 2.0)]);
        assert_eq!(det_complex(&m), c(0.0, 0.0));
        assert!(logdet_complex(&m).is_singular());
    }

    #[test]
    fn multiplicative_and_phase_consistent() {
        for n in 1..=8 {
            let a = pseudo_random_matrix(n, 10 + n as u64);
            let b = pseudo_random_matrix(n, 100 + n as u64);
            let lhs = det_complex(&(&a * &b));
            let rhs = det_complex(&a) * det_complex(&b);
            assert!((lhs - rhs).norm() / rhs.norm() < 1e-10, "rank {n}");

            let ld = logdet_complex(&a);
            let d = det_complex(&a);
            assert!((wrap_phase(ld.phase - d.arg())).abs() < 1e-10);
            assert!((ld.log_magnitude - d.norm().ln()).abs() < 1e-10);
        }
    }
}
