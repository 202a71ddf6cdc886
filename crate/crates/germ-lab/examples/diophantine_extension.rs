//! Decorated orbits and the eight-component extension: the unique way
//! to complete a bounded solution of `k1·k2 − k1·q2 − k2·q1 = 1` to the
//! full system.
//!
//! Run with `cargo run --example diophantine_extension`.

use germ_lab::diophantine::{
    apply_h, extend_to_8, extend_to_8_brute, pr1_inverse, pr_inverse, solve_aux, HGen,
};
use germ_lab::orbit::Orbit;

fn main() -> germ_lab::Result<()> {
    // every orbit carries exactly one decoration
    println!("decorations (unique per orbit):");
    for (k1, k2) in [(2, 1), (5, 3), (8, 3), (8, 5), (13, 5)] {
        let d = pr_inverse(&Orbit::new(k1, k2)?)?;
        println!("  {{{k1},{k2}}} -> {d}");
    }

    // the decoration can also be recovered from its left column alone
    let lifted = pr1_inverse(6, 1)?;
    println!("\nleft column (6,1) lifts to {lifted}");

    // the group action walks the solution lattice
    let s = pr_inverse(&Orbit::new(5, 3)?)?.as_sol();
    let up = apply_h(&s, HGen::H1)?;
    let swapped = apply_h(&s, HGen::H2)?;
    println!("\nH1{s} = {up},  H2{s} = {swapped}");

    // the extension: auxiliary pair, then closed forms, confirmed by
    // the exhaustive scan
    for s in [s, apply_h(&pr_inverse(&Orbit::new(3, 2)?)?.as_sol(), HGen::H2)?] {
        let aux = solve_aux(&s)?;
        let ext = extend_to_8(&s)?;
        let brute = extend_to_8_brute(&s)?;
        println!(
            "\n{s}: (a1,a2) = ({},{})  ->  (q3,q4,m1,m2) = ({},{},{},{})",
            aux.a1, aux.a2, ext.q3, ext.q4, ext.m1, ext.m2
        );
        println!(
            "  exhaustive scan finds {} solution(s); sum identity m1+m2+q3 = {} = k1+k2-1",
            brute.len(),
            ext.m1 + ext.m2 + ext.q3
        );
        assert_eq!(brute, vec![ext]);
    }
    Ok(())
}
