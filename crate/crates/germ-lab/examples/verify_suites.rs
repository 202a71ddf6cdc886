//! Runs every verification suite at reduced bounds and prints the
//! report table. The full-bound run is the acceptance gate
//! (`cargo test --test acceptance`); this example finishes in a couple
//! of seconds.
//!
//! Run with `cargo run --example verify_suites`.

use germ_lab::output;
use germ_lab::verify::{run_all, SUITES};

fn main() -> germ_lab::Result<()> {
    println!("available suites:");
    for (name, default_bound, what) in SUITES {
        println!("  {name:<26} default bound {default_bound:>4}  {what}");
    }

    let reports = run_all(Some(40), 2)?;
    println!("\n{}", output::verify_table(&reports));
    assert!(reports.iter().all(|r| r.passed()));
    println!("all suites passed at bound 40");
    Ok(())
}
