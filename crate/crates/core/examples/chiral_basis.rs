//! Chiral basis of a small ring: kink configurations, `V` eigenvalues and
//! the vacuum written out in the computational basis.
//!
//! ```text
//! cargo run --example chiral_basis
//! ```

use chiralix::chiral::{admissible_kink_numbers, chiral_vacuum_expansion, enumerate_chiral_basis, ChiralLabel, KinkConfig};
use chiralix::exact::{build_v_operator, Pauli};

pub fn run_example() -> chiralix::Result<()> {
    let n = 4;
    let basis = enumerate_chiral_basis(n)?;
    let v = build_v_operator(n)?;
    println!("N = {n}: {} basis vectors, admissible M = {:?}", basis.len(), admissible_kink_numbers(n).collect::<Vec<_>>());
    for (config, state) in &basis {
        let lambda = state.inner(&v.apply(state)?);
        println!(
            "  u = {} kinks {:?}  V = {:+.1}  (N - 2M = {:+})",
            config.u_offset(),
            config.kink_positions(),
            lambda.re + 0.0,
            config.v_eigenvalue()
        );
    }

    let plus = chiralix::chiral::build_chiral_state(&ChiralLabel::new(KinkConfig::new(n, 1.0, vec![])?))?;
    println!("vacuum |+> vs computational expansion: {:.1e}", plus.max_abs_diff(&chiral_vacuum_expansion(n)?));
    for site in 1..=n {
        println!(
            "  site {site}: <x> = {:+.3}, <y> = {:+.3}",
            plus.expectation(site, Pauli::X).re,
            plus.expectation(site, Pauli::Y).re
        );
    }
    Ok(())
}

fn main() -> chiralix::Result<()> {
    run_example()
}
