//! Brute-force reference: evolve the uniform `+x` state of a small ring and
//! read off `S_N(t) = <sigma_1^x(t)>`.
//!
//! ```text
//! cargo run --release --example exact_oracle
//! ```

use chiralix::exact::{build_xx_hamiltonian, oracle_sn, Evolver, StateVector};

pub fn run_example() -> chiralix::Result<()> {
    let n = 8;
    let h = build_xx_hamiltonian(n)?;
    let evolver = Evolver::new(&h)?;
    let blocks = evolver.spectrum().blocks().len();
    println!("N = {n}: H splits into {blocks} blocks");

    let omega = StateVector::omega(n)?;
    let late = evolver.evolve(&omega, 3.0)?;
    println!("norm after t = 3: {:.15}", late.norm());

    let grid: Vec<f64> = (0..=8).map(|i| 0.25 * i as f64).collect();
    let series = oracle_sn(n, &grid)?;
    for (t, s) in &series.points {
        println!("  t = {t:.2}  S_8 = {s:+.12}");
    }
    Ok(())
}

fn main() -> chiralix::Result<()> {
    run_example()
}
