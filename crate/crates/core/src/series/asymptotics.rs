//! Long-time behaviour of the kernel determinant and the helix decay rate.
//!
//! For `t >> 1`, `det A(t) ~ a_0 e^{2it} e^{-4t/pi}`, so `S(t) ~ a_0^2 e^{-8t/pi}`.

use std::f64::consts::{FRAC_1_PI, PI};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::decay::{auto_rank, s_infinite, validity_horizon, KernelDeterminant};
use crate::error::{Error, Result};
use crate::numerics::{fit_line, wrap_phase};

pub const DEFAULT_FIT_RANK: usize = 64;
const FIT_SAMPLES: usize = 33;

/// Straight-line fits of `log|det A|` and `arg det A` on a time window.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AsymptoticFit {
    pub rank: usize,
    /// `a_0 = exp(intercept)` of `log|det A|`.
    pub amplitude: f64,
    /// `-slope` of `log|det A|`.
    pub rate: f64,
    /// Slope of the unwrapped phase.
    pub phase_rate: f64,
    pub fit_window: (f64, f64),
    /// RMS residual of the log-magnitude fit.
    pub residual: f64,
}

impl AsymptoticFit {
    /// Amplitude of the `S`-level asymptote, `a_0^2`.
    pub fn s_amplitude(&self) -> f64 {
        self.amplitude * self.amplitude
    }

    /// Rate of the `S`-level asymptote, twice the determinant rate.
    pub fn s_rate(&self) -> f64 {
        2.0 * self.rate
    }
}

/// `[6, min(15, t_m(rank) - 1)]`.
pub fn default_fit_window(rank: usize) -> (f64, f64) {
    (6.0, 15.0_f64.min(validity_horizon(rank) - 1.0))
}

fn linspace(lo: f64, hi: f64, count: usize) -> Vec<f64> {
    (0..count)
        .map(|i| lo + (hi - lo) * i as f64 / (count - 1) as f64)
        .collect()
}

/// Adds multiples of `2 pi` so consecutive phases differ by less than `pi`.
pub fn unwrap_phases(phases: &[f64]) -> Vec<f64> {
    let mut out = Vec::with_capacity(phases.len());
    let mut offset = 0.0;
    for (i, &p) in phases.iter().enumerate() {
        if i > 0 {
            let jump = wrap_phase(p - phases[i - 1]) - (p - phases[i - 1]);
            offset += jump;
        }
        out.push(p + offset);
    }
    out
}

pub fn fit_asymptotics(rank_cap: usize, t_window: (f64, f64)) -> Result<AsymptoticFit> {
    let (lo, hi) = t_window;
    let t_m = validity_horizon(rank_cap);
    if !(lo.is_finite() && hi.is_finite()) || lo < 0.0 || lo >= hi || hi >= t_m {
        return Err(Error::FitWindow {
            lo,
            hi,
            rank: rank_cap,
            t_m,
        });
    }
    let times = linspace(lo, hi, FIT_SAMPLES);
    let dets: Vec<KernelDeterminant> = times
        .par_iter()
        .map(|&t| KernelDeterminant::new(rank_cap, t))
        .collect::<Result<_>>()?;
    let log_mag: Vec<f64> = dets.iter().map(|d| d.det.log_magnitude).collect();
    let phases = unwrap_phases(&dets.iter().map(|d| d.det.phase).collect::<Vec<_>>());

    let magnitude = fit_line(&times, &log_mag)?;
    let phase = fit_line(&times, &phases)?;
    Ok(AsymptoticFit {
        rank: rank_cap,
        amplitude: magnitude.intercept.exp(),
        rate: -magnitude.slope,
        phase_rate: phase.slope,
        fit_window: (lo, hi),
        residual: magnitude.residual,
    })
}

/// `gamma(Q) = (8 / pi) |cos Q|` with `Q = pi * q_over_pi`.
pub fn decay_rate(q_over_pi: f64) -> f64 {
    8.0 * FRAC_1_PI * cos_pi(q_over_pi).abs()
}

/// `cos(pi x)`, exactly zero at half-integers.
fn cos_pi(x: f64) -> f64 {
    if (x - 0.5).rem_euclid(1.0) == 0.0 {
        0.0
    } else {
        (PI * x).cos()
    }
}

/// Decay rate read off `ln S(r, t cos Q)` on a time window, with the rank
/// chosen so the whole window lies inside the validity horizon.
pub fn fitted_decay_rate(q_over_pi: f64, t_window: (f64, f64)) -> Result<f64> {
    let (lo, hi) = t_window;
    if !(lo.is_finite() && hi.is_finite()) || lo < 0.0 || lo >= hi {
        return Err(Error::InvalidArgument(format!("bad fit window [{lo}, {hi}]")));
    }
    let c = cos_pi(q_over_pi);
    let rank = auto_rank(hi * c.abs(), 1.0).max(8);
    let times = linspace(lo, hi, 17);
    let log_s: Vec<f64> = times
        .par_iter()
        .map(|&t| {
            let kd = KernelDeterminant::new(rank, t * c)?;
            Ok(2.0 * kd.det.log_magnitude)
        })
        .collect::<Result<_>>()?;
    // adding 0.0 turns -0.0 into 0.0 for frozen profiles
    Ok(-fit_line(&times, &log_s)?.slope + 0.0)
}

/// `(Q/pi, S)` helper: `S(r, t cos Q)` at the auto rank.
pub fn helix_amplitude(q_over_pi: f64, t: f64) -> f64 {
    let tc = t * cos_pi(q_over_pi);
    s_infinite(auto_rank(tc, 1.0), tc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_form_rates() {
        assert!((decay_rate(0.0) - 8.0 / PI).abs() < 1e-15);
        assert_eq!(decay_rate(0.5), 0.0);
        assert_eq!(decay_rate(-0.5), 0.0);
        assert!((decay_rate(0.25) - 8.0 / PI * 0.5_f64.sqrt()).abs() < 1e-15);
        assert!((decay_rate(1.0) - 8.0 / PI).abs() < 1e-15);
    }

    #[test]
    fn unwrap() {
        let raw: Vec<f64> = (0..40).map(|i| wrap_phase(0.5 * i as f64)).collect();
        let u = unwrap_phases(&raw);
        for (i, p) in u.iter().enumerate() {
            assert!((p - 0.5 * i as f64).abs() < 1e-12);
        }
    }

    #[test]
    fn window_outside_validity_rejected() {
        assert!(matches!(fit_asymptotics(16, (6.0, 14.0)), Err(Error::FitWindow { .. })));
        assert!(fit_asymptotics(64, (8.0, 6.0)).is_err());
        assert_eq!(default_fit_window(64), (6.0, 15.0));
    }

    #[test]
    fn frozen_profile_has_zero_rate() {
        assert_eq!(fitted_decay_rate(0.5, (6.0, 14.0)).unwrap(), 0.0);
    }
}
