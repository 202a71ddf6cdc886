//! Walks the coprime-pair orbit tree: levels, root paths, and the
//! additive Euclid algorithm.
//!
//! Run with `cargo run --example orbit_tree`.

use germ_lab::orbit::{self, Action, Orbit};

fn main() -> germ_lab::Result<()> {
    // the first few levels, breadth-first
    println!("orbit tree by level (α-child first):");
    for (i, level) in orbit::levels_up_to(6)?.iter().enumerate() {
        let row: Vec<String> = level.iter().map(|o| o.to_string()).collect();
        println!("  level {:>2}: {}", i + 1, row.join(" "));
    }

    // every coprime pair has a unique root path
    for (k1, k2) in [(5, 3), (8, 3), (12, 7), (300, 299)] {
        let o = Orbit::new(k1, k2)?;
        let path = orbit::path_to_root(&o)?;
        println!(
            "\n{o}: level {}, {} Euclid steps, word {path}",
            o.level()?,
            orbit::n_euclid(k1, k2)?
        );
        // replay it
        let mut cur = Orbit::base();
        let mut walk = vec![cur.to_string()];
        for &letter in &path.0 {
            cur = orbit::apply_action(&cur, letter)?;
            walk.push(cur.to_string());
        }
        if walk.len() <= 12 {
            println!("  replay: {}", walk.join(" -> "));
        }
        assert_eq!(cur, o);
    }

    // the two actions are inverted by the Euclid step
    let o = Orbit::new(7, 5)?;
    let child = orbit::apply_action(&o, Action::B)?;
    let (back, step) = orbit::euclid_step(&child)?;
    println!("\nβ{o} = {child}; Euclid step {step} returns to {back}");
    Ok(())
}
