//! Resolving `x^k1 − y^k2 = 0` step by step, and checking the engine
//! against the literal chart-substitution oracle.
//!
//! Run with `cargo run --example resolve_singularity`.

use germ_lab::blowup::{charts, delta, delta_rel, quotient_resolution, resolve, ResolutionState};
use germ_lab::output;

fn main() -> germ_lab::Result<()> {
    // one blowup at a time
    let mut state = ResolutionState::initial(5, 3)?;
    println!("resolving x^5 - y^3:");
    while !state.is_terminal() {
        let before = state.exponents;
        state = state.blow_up_once()?;
        let t = state.trace.last().unwrap();
        println!(
            "  blowup {}: exponents ({},{}) label {} swapped {}  self-intersections {:?}",
            state.blowup_count(),
            before.0,
            before.1,
            t.label,
            t.swapped,
            state.self_intersections
        );
    }

    // the assembled resolution
    let r = resolve(5, 3)?;
    println!("\n{}", output::resolution_table(&r, false));
    println!("{}", output::resolution_dot(&r));

    // the chart oracle re-derives the whole process from polynomial
    // substitution and must agree
    for k1 in 1..=12i64 {
        for k2 in 1..=k1 {
            if germ_lab::orbit::Orbit::new(k1, k2).is_ok() {
                charts::agree_with_engine(k1, k2)?;
            }
        }
    }
    println!("chart oracle agrees with the engine for every coprime pair with k1 <= 12");

    // cyclic-quotient invariants
    println!("\nquotient chains and blowup counts:");
    for (k, q) in [(5, 2), (5, 3), (15, 13)] {
        println!(
            "  type ({k},{q}): chain {}, delta {}",
            quotient_resolution(k, q)?,
            delta(k, q)?
        );
    }
    println!("  relative: delta_rel(15, 13, 5) = {}", delta_rel(15, 13, 5)?);
    Ok(())
}
