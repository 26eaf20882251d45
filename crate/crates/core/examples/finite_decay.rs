//! Finite-ring relaxation `S_N(t) = Re det Phi^(N)(t)` for growing `N`,
//! approaching the thermodynamic curve.
//!
//! ```text
//! cargo run --release --example finite_decay
//! ```

use chiralix::decay::{auto_rank, s_finite, s_infinite};

pub fn run_example() -> chiralix::Result<()> {
    let sizes = [6, 10, 20, 40];
    print!("{:>6}", "t");
    for n in sizes {
        print!("{:>16}", format!("S_{n}"));
    }
    println!("{:>16}", "S(t)");
    for i in 0..=10 {
        let t = 0.3 * i as f64;
        print!("{t:>6.2}");
        for n in sizes {
            print!("{:>16.10}", s_finite(n, t)?);
        }
        println!("{:>16.10}", s_infinite(auto_rank(t, 1.0), t));
    }
    Ok(())
}

fn main() -> chiralix::Result<()> {
    run_example()
}
