//! Long-time asymptotics of the kernel determinant and the decay-rate law
//! `gamma(Q) = (8 / pi) |cos Q|`.
//!
//! ```text
//! cargo run --release --example asymptotics
//! ```

use chiralix::series::{decay_rate, fit_asymptotics, fitted_decay_rate, DEFAULT_FIT_RANK};

pub fn run_example() -> chiralix::Result<()> {
    let fit = fit_asymptotics(DEFAULT_FIT_RANK, (6.0, 14.0))?;
    println!("det A(t) ~ a_0 e^(i w t) e^(-k t) on t in {:?}, rank {}", fit.fit_window, fit.rank);
    println!("  a_0 = {:.6}   k = {:.6} (4/pi = {:.6})   w = {:.6}", fit.amplitude, fit.rate, 4.0 / std::f64::consts::PI, fit.phase_rate);
    println!("  S(t) ~ {:.5} e^(-{:.5} t)", fit.s_amplitude(), fit.s_rate());

    println!("{:>6} {:>12} {:>12}", "Q/pi", "fitted", "8|cos Q|/pi");
    for i in 0..=8 {
        let x = i as f64 / 16.0;
        println!("{x:>6.4} {:>12.6} {:>12.6}", fitted_decay_rate(x, (6.0, 14.0))?, decay_rate(x));
    }
    Ok(())
}

fn main() -> chiralix::Result<()> {
    run_example()
}
