//! Thermodynamic-limit decay from the Bessel-kernel determinant, deep into
//! the exponential tail where `S` is tracked through its logarithm.
//!
//! ```text
//! cargo run --release --example kernel_decay
//! ```

use chiralix::decay::{auto_rank, s_infinite, s_rank_one_closed_form, validity_horizon, KernelDeterminant};

pub fn run_example() -> chiralix::Result<()> {
    println!("rank-one approximation for small t:");
    for t in [0.1, 0.3, 0.5] {
        println!(
            "  t = {t:.1}  closed form {:.8}  S(1, t) {:.8}  S(16, t) {:.8}",
            s_rank_one_closed_form(t),
            s_infinite(1, t),
            s_infinite(16, t)
        );
    }

    println!("long times, rank chosen from the validity horizon:");
    for t in [2.0, 5.0, 10.0, 25.0, 50.0] {
        let r = auto_rank(t, 1.0);
        let kd = KernelDeterminant::new(r, t)?;
        println!(
            "  t = {t:>4}  r = {r:>3} (t_m = {:>6.2})  S = {:.6e}  log10 S = {:.6}",
            validity_horizon(r),
            kd.s(),
            kd.log10_s()
        );
    }
    let s50 = KernelDeterminant::new(111, 50.0)?;
    println!("S(r = 111, t = 50) = {:.6e}", s50.s());
    Ok(())
}

fn main() -> chiralix::Result<()> {
    run_example()
}
