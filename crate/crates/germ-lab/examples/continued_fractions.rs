//! Minus continued fractions, continuants, and the center identity of
//! orbit chains.
//!
//! Run with `cargo run --example continued_fractions`.

use germ_lab::chains::{
    chain_to_fraction, continuant, hj_expand, is_positive_definite, orbit_chain, pi1_order,
    row_expansion_check,
};
use germ_lab::diophantine::pr_inverse;
use germ_lab::orbit::Orbit;

fn main() -> germ_lab::Result<()> {
    println!("minus continued fractions (all weights >= 2):");
    for (k, q) in [(5, 3), (5, 2), (12, 5), (17, 6), (30, 11)] {
        let c = hj_expand(k, q)?;
        println!(
            "  {k}/{q} = {c}   continuant {}, tail {}",
            continuant(&c.weights)?,
            continuant(&c.weights[1..])?
        );
        assert_eq!(chain_to_fraction(&c)?, (k, q));
    }

    // an all-2 chain of length n has continuant n+1
    let twos = hj_expand(7, 6)?;
    println!("\n7/6 = {twos}  (cyclic group order {})", pi1_order(&twos)?);
    assert!(is_positive_definite(&twos));

    // orbit chains: reversed left expansion ⊕ [1] ⊕ right expansion,
    // always of continuant exactly 1
    println!("\norbit chains and the center identity:");
    for (k1, k2) in [(2, 1), (5, 3), (8, 5), (13, 8)] {
        let d = pr_inverse(&Orbit::new(k1, k2)?)?;
        let chain = orbit_chain(&d)?;
        println!(
            "  {d}: weights {:?}, center at {}, determinant {}",
            chain.weights(),
            chain.center_index() + 1,
            row_expansion_check(&chain)?
        );
    }
    Ok(())
}
