//! One line per acceptance criterion; exits nonzero if any fails.

use std::f64::consts::PI;
use std::time::Instant;

use chiralix::chiral::{
    build_all_eigenstates, build_chiral_state, chiral_vacuum_expansion, enumerate_chiral_basis, overlap_with_omega,
    ChiralLabel, KinkConfig,
};
use chiralix::decay::{auto_rank, finite_helix_profile, kernel_consistency, s_finite, s_infinite, KernelDiagonal};
use chiralix::exact::{build_v_operator, build_xx_hamiltonian, oracle_sn, Axis, Evolver, Pauli, StateVector};
use chiralix::series::{
    coefficient_mismatch, decay_rate, fit_asymptotics, fitted_decay_rate, reference_taylor, stable_pattern_check,
    taylor_coefficients,
};
use chiralix::Complex64;

struct Outcome {
    passed: bool,
    summary: String,
}

fn outcome(passed: bool, summary: impl Into<String>) -> Outcome {
    Outcome {
        passed,
        summary: summary.into(),
    }
}

fn linspace(lo: f64, hi: f64, count: usize) -> Vec<f64> {
    (0..count)
        .map(|i| lo + (hi - lo) * i as f64 / (count - 1) as f64)
        .collect()
}

fn oracle_equivalence() -> chiralix::Result<Outcome> {
    let grid = linspace(0.0, 4.0, 40);
    let mut worst = 0.0_f64;
    for n in [4, 6, 8, 10] {
        for (t, s) in oracle_sn(n, &grid)?.points {
            worst = worst.max((s_finite(n, t)? - s).abs());
        }
    }
    Ok(outcome(worst < 1e-9, format!("max |S_N - oracle| = {worst:.2e} (tol 1e-9)")))
}

fn chiral_structure() -> chiralix::Result<Outcome> {
    let mut gram = 0.0_f64;
    let mut v_wrong = 0;
    let mut residual = 0.0_f64;
    let mut complete = true;
    for n in [4, 6] {
        let basis = enumerate_chiral_basis(n)?;
        complete &= basis.len() == 1 << n;
        for (i, (_, a)) in basis.iter().enumerate() {
            for (_, b) in basis.iter().skip(i + 1) {
                gram = gram.max(a.inner(b).norm());
            }
            gram = gram.max((a.norm() - 1.0).abs());
        }
        let v = build_v_operator(n)?;
        for (config, state) in &basis {
            let lambda = state.inner(&v.apply(state)?).re;
            if lambda.round() as i64 != config.v_eigenvalue() {
                v_wrong += 1;
            }
        }
        let h = build_xx_hamiltonian(n)?;
        let states = build_all_eigenstates(n, 1.0)?;
        complete &= states.len() == 1 << n;
        for (label, mu) in &states {
            let mut r = h.apply(mu)?;
            r.add_scaled(Complex64::new(-label.energy(), 0.0), mu);
            residual = residual.max(r.norm());
        }
    }
    let passed = gram < 1e-11 && v_wrong == 0 && residual < 1e-10 && complete;
    Ok(outcome(
        passed,
        format!("gram {gram:.2e} (tol 1e-11), V mismatches {v_wrong}, eigen residual {residual:.2e} (tol 1e-10), complete {complete}"),
    ))
}

fn vacuum_expansion() -> chiralix::Result<Outcome> {
    let mut worst = 0.0_f64;
    for n in [4, 8] {
        let plus = build_chiral_state(&ChiralLabel::new(KinkConfig::new(n, 1.0, vec![])?))?;
        worst = worst.max(plus.max_abs_diff(&chiral_vacuum_expansion(n)?));
    }
    Ok(outcome(worst < 1e-13, format!("max amplitude deviation {worst:.2e} (tol 1e-13)")))
}

fn sigma_x_blocks() -> chiralix::Result<Outcome> {
    let mut worst = 0.0_f64;
    for n in [4, 6] {
        let states = build_all_eigenstates(n, 1.0)?;
        let flipped: Vec<StateVector> = states.iter().map(|(_, v)| v.apply_pauli(1, Pauli::X)).collect();
        for (la, va) in &states {
            for (b, (lb, _)) in states.iter().enumerate() {
                if la.len() != lb.len() {
                    worst = worst.max(va.inner(&flipped[b]).norm());
                }
            }
        }
    }
    Ok(outcome(worst < 1e-11, format!("max |<mu_M'|sigma_1^x|mu_M>|, M != M' = {worst:.2e} (tol 1e-11)")))
}

fn selection_rule() -> chiralix::Result<Outcome> {
    let mut worst = 0.0_f64;
    let mut weight_error = 0.0_f64;
    for n in [4, 6] {
        let omega = StateVector::omega(n)?;
        let mut weight = 0.0;
        for (label, mu) in build_all_eigenstates(n, 1.0)? {
            let dense = omega.inner(&mu);
            if label.len() != n / 2 {
                worst = worst.max(dense.norm()).max(overlap_with_omega(&label)?.norm());
            } else {
                weight += dense.norm_sqr();
            }
        }
        weight_error = weight_error.max((weight - 1.0).abs());
    }
    Ok(outcome(
        worst < 1e-12,
        format!("max |<Omega|mu_M>|, M != N/2 = {worst:.2e} (tol 1e-12); weight outside M = N/2 {weight_error:.1e}"),
    ))
}

fn kernel_check() -> chiralix::Result<Outcome> {
    let worst = kernel_consistency(400, 6, &[0.25, 1.0, 2.0], KernelDiagonal::Regularized)?;
    Ok(outcome(worst < 1e-5, format!("N = 400, m, n <= 6: max deviation {worst:.2e} (tol 1e-5)")))
}

fn paper_values() -> chiralix::Result<Outcome> {
    let s50 = s_infinite(111, 50.0);
    let rel = (s50 - 7.64483e-56).abs() / 7.64483e-56;
    let s2 = s_infinite(auto_rank(2.0, 1.0), 2.0);
    let stability = linspace(0.0, 2.0, 201)
        .into_iter()
        .map(|t| (s_infinite(4, t) - s_infinite(16, t)).abs())
        .fold(0.0, f64::max);
    let passed = rel < 1e-4 && (s2 - 0.0093).abs() < 2e-4 && stability < 1e-5;
    Ok(outcome(
        passed,
        format!(
            "S(111, 50) = {s50:.6e} (rel {rel:.1e}, tol 1e-4); S(auto, 2) = {s2:.6} (tol 2e-4); max |S(4,t) - S(16,t)| = {stability:.2e} (tol 1e-5)"
        ),
    ))
}

fn taylor() -> chiralix::Result<Outcome> {
    let c12 = taylor_coefficients(12, 18)?;
    let reference = reference_taylor()
        .into_iter()
        .map(|(n, q)| coefficient_mismatch(c12.coefficients[n], *q.numer() as f64 / *q.denom() as f64))
        .fold(0.0, f64::max);
    let mut stable = 0.0_f64;
    for n in [6, 8] {
        stable = stable.max(stable_pattern_check(n)?.max_mismatch);
    }
    Ok(outcome(
        reference < 1e-8 && stable < 1e-8,
        format!("C_12 vs series {reference:.2e}, C_N+2 vs C_N {stable:.2e} (tol 1e-8)"),
    ))
}

fn asymptotics() -> chiralix::Result<Outcome> {
    let fit = fit_asymptotics(64, (6.0, 14.0))?;
    let rate = (fit.rate - 4.0 / PI).abs();
    let a0 = (fit.amplitude - 1.2295).abs();
    let a0sq = (fit.s_amplitude() - 1.5117).abs();
    Ok(outcome(
        rate < 1e-3 && a0 < 1e-3 && a0sq < 2e-3,
        format!(
            "rate {:.6} (off {rate:.1e}, tol 1e-3), a_0 {:.6} (off {a0:.1e}, tol 1e-3), a_0^2 {:.6} (off {a0sq:.1e}, tol 2e-3)",
            fit.rate,
            fit.amplitude,
            fit.s_amplitude()
        ),
    ))
}

fn rate_law() -> chiralix::Result<Outcome> {
    let mut worst = 0.0_f64;
    for q in [0.0, 0.125, 0.25, 0.375] {
        worst = worst.max((fitted_decay_rate(q, (6.0, 14.0))? - decay_rate(q)).abs());
    }
    let frozen = fitted_decay_rate(0.5, (6.0, 14.0))?;
    Ok(outcome(
        worst < 1e-2 && frozen == 0.0 && decay_rate(0.5) == 0.0,
        format!("max |gamma_fit - 8|cos Q|/pi| = {worst:.2e} (tol 1e-2); gamma(pi/2) = {frozen}"),
    ))
}

fn self_similarity() -> chiralix::Result<Outcome> {
    let n = 8;
    let evolver = Evolver::xx_ring(n)?;
    let psi = StateVector::helix(n, 1)?;
    let mut worst = 0.0_f64;
    for t in [0.3, 0.9, 1.7] {
        let predicted = finite_helix_profile(n, 1, t)?;
        let x = evolver.profile(&psi, t, Axis::X)?;
        let y = evolver.profile(&psi, t, Axis::Y)?;
        let z = evolver.profile(&psi, t, Axis::Z)?;
        for site in 0..n {
            worst = worst
                .max((predicted[site].0 - x[site]).abs())
                .max((predicted[site].1 - y[site]).abs())
                .max(z[site].abs());
        }
    }
    Ok(outcome(worst < 1e-10, format!("N = 8, Q = pi/4: max profile deviation {worst:.2e} (tol 1e-10)")))
}

type Criterion = fn() -> chiralix::Result<Outcome>;

fn main() {
    let criteria: [(&str, Criterion); 11] = [
        ("oracle equivalence", oracle_equivalence),
        ("chiral basis structure", chiral_structure),
        ("chiral vacuum expansion", vacuum_expansion),
        ("sigma_1^x block structure", sigma_x_blocks),
        ("selection rule", selection_rule),
        ("kernel consistency", kernel_check),
        ("paper-value regression", paper_values),
        ("Taylor series", taylor),
        ("asymptotics", asymptotics),
        ("decay-rate law", rate_law),
        ("self-similarity", self_similarity),
    ];
    let mut failures = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = check().unwrap_or_else(|e| outcome(false, format!("error: {e}")));
        let secs = start.elapsed().as_secs_f64();
        if !result.passed {
            failures += 1;
        }
        println!(
            "criterion {:>2} {} {name}: {} [{secs:.2} s]",
            i + 1,
            if result.passed { "PASS" } else { "FAIL" },
            result.summary
        );
    }
    println!("{} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures > 0 {
        std::process::exit(1);
    }
}
