//! Drive the library the way the `rootsep` binary does: build a run
//! configuration programmatically and collect machine-readable output.
//!
//! ```sh
//! cargo run --release -p rootsep --example batch_reports
//! ```

use clap::Parser;
use rootsep::cli::{self, Cli};

fn run(args: &[&str]) -> (String, i32) {
    let cli = Cli::try_parse_from(args).expect("valid arguments");
    let outcome = cli::run(&cli).expect("run succeeds");
    (String::from_utf8(outcome.output).unwrap(), outcome.code)
}

fn main() {
    // A separation report as JSON with exact decimal enclosures.
    let (json, code) = run(&["rootsep", "exponent", "2,-8,7,0,4,1"]);
    assert_eq!(code, 0);
    println!("exponent report:\n{json}");

    // A family sweep as CSV, ready for a plotting pipeline.
    let (csv, code) = run(&[
        "rootsep", "family", "p", "--n-min", "10", "--n-max", "14", "--format", "csv",
    ]);
    assert_eq!(code, 0);
    println!("family sweep:\n{csv}");

    // The log-log fit over a geometric n ladder.
    let (fit, code) = run(&[
        "rootsep", "family", "p", "--n-set", "10,20,40,80", "--fit", "--format", "csv",
    ]);
    assert_eq!(code, 0);
    println!("fit:\n{fit}");

    // Property verification: exit code 0 iff every suite passed.
    let (verify, code) = run(&[
        "rootsep", "verify", "all", "--samples", "300", "--format", "csv",
    ]);
    println!("verify:\n{verify}");
    assert_eq!(code, 0, "all property suites pass");
}
