//! Integer-order Bessel functions of the first kind.
//!
//! All orders `J_0(x) ..= J_max(x)` are produced by one downward (Miller)
//! recurrence pass started well above both `max` and `x`. The unnormalized
//! sequence is fixed up with two classical sums: `J_0 + 2 sum J_{2k} = 1`
//! determines the sign and `J_0^2 + 2 sum J_k^2 = 1` the magnitude. The
//! second sum has no cancellation, which keeps the absolute error near
//! machine precision across the whole order/argument plane we use.

use crate::error::{Error, Result};

/// Largest order accepted by [`bessel_j`].
pub const MAX_ORDER: i64 = 500;
/// Largest argument accepted by [`bessel_j`].
pub const MAX_ARGUMENT: f64 = 800.0;

const RESCALE_ABOVE: f64 = 1e100;
const RESCALE_BY: f64 = 1e-100;

/// `J_order(x)` for integer order and `0 <= x <= 800`.
///
/// Negative orders use `J_{-k}(x) = (-1)^k J_k(x)`.
pub fn bessel_j(order: i64, x: f64) -> Result<f64> {
    if order.abs() > MAX_ORDER || !(0.0..=MAX_ARGUMENT).contains(&x) || !x.is_finite() {
        return Err(Error::BesselDomain { order, x });
    }
    let table = BesselTable::new(order.unsigned_abs() as usize, x);
    Ok(table.get(order))
}

/// `J_0(x), J_1(x), ..., J_max_order(x)` in one pass. `x` must be finite and
/// nonnegative.
pub fn bessel_j_sequence(max_order: usize, x: f64) -> Vec<f64> {
    debug_assert!(x.is_finite() && x >= 0.0);
    let mut out = vec![0.0; max_order + 1];
    if x == 0.0 {
        out[0] = 1.0;
        return out;
    }

    let base = (max_order as f64).max(x.ceil());
    let start = (base + (160.0 * base.max(1.0)).sqrt()).ceil() as usize + 20;

    // f_{k+1}, f_k with f_{start+1} = 0, f_start = tiny
    let mut upper = 0.0_f64;
    let mut current = 1e-30_f64;
    let mut sum_sq = 0.0_f64;
    let mut even_sum = 0.0_f64;

    let accumulate = |k: usize, f: f64, sum_sq: &mut f64, even_sum: &mut f64| {
        if k == 0 {
            *sum_sq += f * f;
            *even_sum += f;
        } else {
            *sum_sq += 2.0 * f * f;
            if k.is_multiple_of(2) {
                *even_sum += 2.0 * f;
            }
        }
    };

    accumulate(start, current, &mut sum_sq, &mut even_sum);
    if start <= max_order {
        out[start] = current;
    }
    for k in (1..=start).rev() {
        let lower = (2.0 * k as f64 / x) * current - upper;
        upper = current;
        current = lower;
        let idx = k - 1;
        if idx <= max_order {
            out[idx] = current;
        }
        accumulate(idx, current, &mut sum_sq, &mut even_sum);

        if current.abs() > RESCALE_ABOVE {
            current *= RESCALE_BY;
            upper *= RESCALE_BY;
            sum_sq *= RESCALE_BY * RESCALE_BY;
            even_sum *= RESCALE_BY;
            for v in out.iter_mut().skip(idx) {
                *v *= RESCALE_BY;
            }
        }
    }

    let scale = even_sum.signum() / sum_sq.sqrt();
    for v in &mut out {
        *v *= scale;
    }
    out
}

/// Bessel values `J_k(x)` for `|k| <= max_order` at one fixed argument.
///
/// Negative arguments are served through `J_k(-x) = (-1)^k J_k(x)`.
#[derive(Debug, Clone)]
pub struct BesselTable {
    x: f64,
    values: Vec<f64>,
}

impl BesselTable {
    pub fn new(max_order: usize, x: f64) -> Self {
        Self {
            x,
            values: bessel_j_sequence(max_order, x.abs()),
        }
    }

    pub fn argument(&self) -> f64 {
        self.x
    }

    pub fn max_order(&self) -> usize {
        self.values.len() - 1
    }

    /// `J_k(x)`; panics if `|k|` exceeds the table.
    #[inline]
    pub fn get(&self, order: i64) -> f64 {
        let k = order.unsigned_abs() as usize;
        let v = self.values[k];
        // odd k flips sign for k < 0 and for x < 0; both together cancel
        let flip = k % 2 == 1 && ((order < 0) != (self.x < 0.0));
        if flip {
            -v
        } else {
            v
        }
    }

    /// `sum_{j >= from} J_j(x)^2`, using the values held by the table.
    pub fn tail_sum_sq(&self, from: usize) -> f64 {
        self.values.iter().skip(from).rev().map(|v| v * v).sum()
    }
}
