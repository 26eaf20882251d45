//! Taylor coefficients of `S_N(t) = <Omega| e^{iHt} sigma_1^x e^{-iHt} |Omega>`
//! from operator moments.
//!
//! `C_N(n) = sum_{a+b=n} i^a (-i)^b / (a! b!) <H^a Omega| sigma_1^x |H^b Omega>`.
//! The vectors `H^k Omega` are built by repeated matrix-free application.
//! Moments entering the coefficients use `H - <H>`: the shift cancels in
//! `S_N(t)` and keeps the alternating sums from losing digits at high order.

use num_complex::Complex64;
use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{Pauli, PauliSum, StateVector, DENSE_OPERATOR_MAX_QUBITS};

/// Largest ring accepted by the moment recursion.
pub const MOMENT_MAX_QUBITS: usize = DENSE_OPERATOR_MAX_QUBITS;

/// `M_ab = <H^a Omega| sigma_1^x |H^b Omega>` for `a, b <= max_power`.
#[derive(Debug, Clone, PartialEq)]
pub struct MomentTable {
    pub n_qubits: usize,
    /// Constant subtracted from `H` before taking powers.
    pub shift: f64,
    pub entries: Vec<Vec<Complex64>>,
}

impl MomentTable {
    pub fn max_power(&self) -> usize {
        self.entries.len() - 1
    }

    pub fn get(&self, a: usize, b: usize) -> Complex64 {
        self.entries[a][b]
    }

    /// Largest `|Im M_ab|` and `|M_ab - M_ba|`.
    pub fn asymmetry(&self) -> (f64, f64) {
        let k = self.entries.len();
        let mut imag = 0.0_f64;
        let mut skew = 0.0_f64;
        for a in 0..k {
            for b in 0..k {
                imag = imag.max(self.entries[a][b].im.abs());
                skew = skew.max((self.entries[a][b] - self.entries[b][a]).norm());
            }
        }
        (imag, skew)
    }
}

fn check_budget(n_qubits: usize) -> Result<()> {
    if n_qubits > MOMENT_MAX_QUBITS {
        return Err(Error::BudgetExceeded {
            n: n_qubits,
            max: MOMENT_MAX_QUBITS,
        });
    }
    StateVector::zeros(n_qubits).map(|_| ())
}

fn build_moments(n_qubits: usize, max_power: usize, centered: bool) -> Result<MomentTable> {
    check_budget(n_qubits)?;
    let h = PauliSum::xx_ring(n_qubits);
    let omega = StateVector::omega(n_qubits)?;
    let shift = if centered {
        omega.inner(&StateVector::from_amplitudes(n_qubits, h.apply(omega.amplitudes()))?).re
    } else {
        0.0
    };

    let mut powers = Vec::with_capacity(max_power + 1);
    powers.push(omega);
    for k in 1..=max_power {
        let prev = &powers[k - 1];
        let mut next = StateVector::from_amplitudes(n_qubits, h.apply(prev.amplitudes()))?;
        next.add_scaled(Complex64::new(-shift, 0.0), prev);
        powers.push(next);
    }
    let flipped: Vec<StateVector> = powers.iter().map(|v| v.apply_pauli(1, Pauli::X)).collect();
    let entries = powers
        .iter()
        .map(|left| flipped.iter().map(|right| left.inner(right)).collect())
        .collect();
    Ok(MomentTable {
        n_qubits,
        shift,
        entries,
    })
}

/// Raw moments of the XX ring from the uniform `+x` state.
pub fn moment_table(n_qubits: usize, max_power: usize) -> Result<MomentTable> {
    build_moments(n_qubits, max_power, false)
}

/// `C_N(n)` for `n = 0..=max_order`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TaylorTable {
    pub n_qubits: usize,
    pub max_order: usize,
    pub coefficients: Vec<f64>,
    /// Largest `|Im C_N(n)|` discarded, relative to the summed term magnitudes.
    pub imaginary_residue: f64,
}

impl TaylorTable {
    pub fn coefficient(&self, order: usize) -> Option<f64> {
        self.coefficients.get(order).copied()
    }

    /// Truncated series at `t`.
    pub fn evaluate(&self, t: f64) -> f64 {
        self.coefficients.iter().rev().fold(0.0, |acc, c| acc * t + c)
    }
}

pub fn taylor_coefficients(n_qubits: usize, max_order: usize) -> Result<TaylorTable> {
    let moments = build_moments(n_qubits, max_order, true)?;
    // i^a (-i)^b / (a! b!) = i^{a-b} / (a! b!)
    let mut inv_factorial = vec![1.0_f64; max_order + 1];
    for k in 1..=max_order {
        inv_factorial[k] = inv_factorial[k - 1] / k as f64;
    }
    let i_power = |k: i64| match k.rem_euclid(4) {
        0 => Complex64::new(1.0, 0.0),
        1 => Complex64::new(0.0, 1.0),
        2 => Complex64::new(-1.0, 0.0),
        _ => Complex64::new(0.0, -1.0),
    };
    let mut coefficients = Vec::with_capacity(max_order + 1);
    let mut imaginary_residue = 0.0_f64;
    for n in 0..=max_order {
        let mut c = Complex64::new(0.0, 0.0);
        let mut scale = 0.0;
        for a in 0..=n {
            let b = n - a;
            let term = i_power(a as i64 - b as i64) * (inv_factorial[a] * inv_factorial[b]) * moments.get(a, b);
            scale += term.norm();
            c += term;
        }
        imaginary_residue = imaginary_residue.max(c.im.abs() / scale.max(1.0));
        coefficients.push(c.re);
    }
    Ok(TaylorTable {
        n_qubits,
        max_order,
        coefficients,
        imaginary_residue,
    })
}

/// Printed thermodynamic-limit coefficients of `t^0, t^2, .., t^18`.
pub fn reference_taylor() -> Vec<(usize, Ratio<i64>)> {
    let r = Ratio::new;
    vec![
        (0, r(1, 1)),
        (2, r(-4, 1)),
        (4, r(32, 3)),
        (6, r(-64, 3)),
        (8, r(512, 15)),
        (10, r(-2048, 45)),
        (12, r(4096 * 179, 14175)),
        (14, r(-65536 * 11, 14175)),
        (16, r(65536 * 2987, 4465125)),
        (18, r(-262144 * 572, 4465125)),
    ]
}

/// Reference coefficient of `t^order` as `f64`; `None` past the printed range.
pub fn reference_coefficient(order: usize) -> Option<f64> {
    if order > 18 {
        return None;
    }
    if order % 2 == 1 {
        return Some(0.0);
    }
    reference_taylor()
        .into_iter()
        .find(|&(n, _)| n == order)
        .map(|(_, q)| *q.numer() as f64 / *q.denom() as f64)
}

/// Relative difference, absolute below magnitude 1 so vanishing odd orders compare sanely.
pub fn coefficient_mismatch(a: f64, b: f64) -> f64 {
    (a - b).abs() / a.abs().max(b.abs()).max(1.0)
}

/// Comparison of `C_N` against `C_{N+2}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StablePatternReport {
    pub n_qubits: usize,
    /// Orders `0..=claimed_through` are expected to agree (`2N - 4`).
    pub claimed_through: usize,
    pub orders_compared: usize,
    /// Largest relative mismatch over the claimed window.
    pub max_mismatch: f64,
    /// First order at which the two rings disagree.
    pub first_violation: Option<usize>,
}

impl StablePatternReport {
    pub fn holds(&self, tolerance: f64) -> bool {
        self.max_mismatch < tolerance && self.first_violation.is_none_or(|n| n > self.claimed_through)
    }
}

/// Checks `C_{N+2}(n) = C_N(n)` for `n <= 2N - 4` and looks a few orders past it.
pub fn stable_pattern_check(n_qubits: usize) -> Result<StablePatternReport> {
    const TOLERANCE: f64 = 1e-8;
    let claimed = 2 * n_qubits - 4;
    let orders = claimed + 4;
    let small = taylor_coefficients(n_qubits, orders)?;
    let large = taylor_coefficients(n_qubits + 2, orders)?;
    let mut max_mismatch = 0.0_f64;
    let mut first_violation = None;
    for n in 0..=orders {
        let d = coefficient_mismatch(small.coefficients[n], large.coefficients[n]);
        if n <= claimed {
            max_mismatch = max_mismatch.max(d);
        }
        if d > TOLERANCE && first_violation.is_none() {
            first_violation = Some(n);
        }
    }
    Ok(StablePatternReport {
        n_qubits,
        claimed_through: claimed,
        orders_compared: orders + 1,
        max_mismatch,
        first_violation,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn low_orders() {
        for n in [4, 6, 8] {
            let c = taylor_coefficients(n, 4).unwrap();
            assert!((c.coefficients[0] - 1.0).abs() < 1e-12);
            assert!(c.coefficients[1].abs() < 1e-9);
            assert!((c.coefficients[2] + 4.0).abs() < 1e-10, "N = {n}: {:?}", c.coefficients);
            assert!(c.imaginary_residue < 1e-9);
        }
    }

    #[test]
    fn moments_real_and_symmetric() {
        let m = moment_table(6, 8).unwrap();
        let (imag, skew) = m.asymmetry();
        assert!(imag < 1e-10 && skew < 1e-10);
        assert_eq!(m.max_power(), 8);
    }

    #[test]
    fn reference_values() {
        assert_eq!(reference_taylor().len(), 10);
        assert_eq!(reference_coefficient(10), Some(-2048.0 / 45.0));
        assert_eq!(reference_coefficient(3), Some(0.0));
        assert_eq!(reference_coefficient(20), None);
        let (n, q) = reference_taylor()[9];
        assert_eq!(n, 18);
        assert_eq!(q, Ratio::new(-(1 << 18) * 572, 4465125));
    }

    #[test]
    fn stable_pattern_at_six() {
        let r = stable_pattern_check(6).unwrap();
        assert!(r.holds(1e-8), "{r:?}");
        assert!(r.first_violation.is_some());
    }

    #[test]
    fn budget() {
        assert!(matches!(taylor_coefficients(14, 2), Err(Error::BudgetExceeded { .. })));
        assert!(taylor_coefficients(5, 2).is_err());
    }
}
