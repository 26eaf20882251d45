//! Numerical building blocks: Bessel functions by downward recurrence and
//! log-domain complex determinants.
//!
//! ```text
//! cargo run --example bessel_and_determinants
//! ```

use chiralix::numerics::{bessel_j, logdet_complex, BesselTable, ComplexMatrix};
use chiralix::Complex64;

pub fn run_example() -> chiralix::Result<()> {
    for (order, x) in [(0, 1.0), (1, 10.0), (5, 0.5), (-3, 7.0), (40, 200.0)] {
        println!("J_{order}({x}) = {:+.15e}", bessel_j(order, x)?);
    }
    let table = BesselTable::new(300, 200.0);
    let norm = table.get(0).powi(2) + 2.0 * table.tail_sum_sq(1);
    println!("J_0^2 + 2 sum J_k^2 at x = 200: {norm:.15}");

    // a diagonal far below the range of f64 when multiplied out
    let m = ComplexMatrix::from_fn(40, 40, |i, j| {
        if i == j {
            Complex64::from_polar(1e-10, 0.1 * i as f64)
        } else {
            Complex64::new(0.0, 0.0)
        }
    });
    let d = logdet_complex(&m);
    println!("log10 |det| = {:.6}, phase = {:.6}", d.log10_magnitude(), d.phase);
    Ok(())
}

fn main() -> chiralix::Result<()> {
    run_example()
}
