//! Every helix profile follows from one scalar function:
//! `<sigma_n^x(t)>_Q = S(t cos Q) cos(Qn)`, `<sigma_n^y(t)>_Q = S(t cos Q) sin(Qn)`.
//!
//! ```text
//! cargo run --release --example helix_profile
//! ```

use chiralix::decay::{finite_helix_profile, helix_profile};
use chiralix::exact::{Axis, Evolver, StateVector};

pub fn run_example() -> chiralix::Result<()> {
    let n = 8;
    let q_index = 1;
    let evolver = Evolver::xx_ring(n)?;
    let psi = StateVector::helix(n, q_index)?;
    let t = 0.9;
    let x = evolver.profile(&psi, t, Axis::X)?;
    let y = evolver.profile(&psi, t, Axis::Y)?;
    let predicted = finite_helix_profile(n, q_index, t)?;
    println!("N = {n}, Q = pi/4, t = {t}: exact evolution vs S_N(t cos Q)");
    for site in 0..n {
        println!(
            "  n = {}  x {:+.10} / {:+.10}   y {:+.10} / {:+.10}",
            site + 1,
            x[site],
            predicted[site].0,
            y[site],
            predicted[site].1
        );
    }

    println!("infinite ring, site n = 3:");
    for q in [0.0, 0.25, 0.5] {
        let (px, py, _) = helix_profile(q, 3, 2.0, 12);
        println!("  Q/pi = {q:.2}  t = 2  x = {px:+.6}  y = {py:+.6}");
    }
    Ok(())
}

fn main() -> chiralix::Result<()> {
    run_example()
}
