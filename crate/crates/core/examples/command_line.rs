//! The command-line front end driven from code: every subcommand of the
//! `chiralix` binary is available through `chiralix::cli::run`.
//!
//! ```text
//! cargo run --release --example command_line
//! ```

use chiralix::cli::{self, EXIT_OK};

pub fn run_example() -> chiralix::Result<()> {
    let code = cli::run(["chiralix", "infinite", "--t-max", "2", "--dt", "0.5"]);
    assert_eq!(code, EXIT_OK);
    let code = cli::run(["chiralix", "taylor", "-n", "8", "--order", "12"]);
    assert_eq!(code, EXIT_OK);
    let code = cli::run(["chiralix", "validate", "quick"]);
    println!("validate quick exited with {code}");
    Ok(())
}

fn main() -> chiralix::Result<()> {
    run_example()
}
