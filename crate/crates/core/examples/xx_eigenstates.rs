//! XX eigenstates as Slater sums over kink configurations.
//!
//! ```text
//! cargo run --example xx_eigenstates
//! ```

use chiralix::chiral::{build_all_eigenstates, overlap_with_omega};
use chiralix::exact::build_xx_hamiltonian;
use chiralix::Complex64;

pub fn run_example() -> chiralix::Result<()> {
    let n = 6;
    let h = build_xx_hamiltonian(n)?;
    let states = build_all_eigenstates(n, 1.0)?;
    let mut worst = 0.0_f64;
    let mut weight = 0.0;
    for (label, v) in &states {
        let mut r = h.apply(v)?;
        r.add_scaled(Complex64::new(-label.energy(), 0.0), v);
        worst = worst.max(r.norm());
        weight += overlap_with_omega(label)?.norm_sqr();
    }
    println!("N = {n}: {} eigenstates, max |H mu - E mu| = {worst:.1e}", states.len());
    println!("sum |<Omega|mu>|^2 = {weight:.12}");

    println!("states overlapping Omega (all carry M = N/2 = {} kinks):", n / 2);
    for (label, _) in states.iter().filter(|(l, _)| overlap_with_omega(l).is_ok_and(|z| z.norm() > 1e-12)) {
        println!(
            "  M = {} {:?} p = {:?}  E = {:+.4}  <Omega|mu> = {:.4}",
            label.len(),
            label.sector(),
            label.momenta().iter().map(|p| format!("{p:.3}")).collect::<Vec<_>>(),
            label.energy(),
            overlap_with_omega(label)?
        );
    }
    Ok(())
}

fn main() -> chiralix::Result<()> {
    run_example()
}
