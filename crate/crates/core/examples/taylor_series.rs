//! Taylor coefficients of `S_N(t)` from operator moments, the stable pattern
//! across ring sizes and the thermodynamic series.
//!
//! ```text
//! cargo run --release --example taylor_series
//! ```

use chiralix::series::{reference_taylor, stable_pattern_check, taylor_coefficients};

pub fn run_example() -> chiralix::Result<()> {
    let c12 = taylor_coefficients(12, 18)?;
    println!("{:>3} {:>22} {:>22}", "n", "C_12(n)", "reference");
    for (n, q) in reference_taylor() {
        println!("{n:>3} {:>22.12} {:>22}", c12.coefficients[n], q.to_string());
    }
    for n in [4, 6, 8] {
        let r = stable_pattern_check(n)?;
        println!(
            "C_{}(n) = C_{n}(n) through n = {}: max mismatch {:.1e}, first difference at n = {:?}",
            n + 2,
            r.claimed_through,
            r.max_mismatch,
            r.first_violation
        );
    }
    Ok(())
}

fn main() -> chiralix::Result<()> {
    run_example()
}
