//! Continuants, minus continued fractions, and weighted chains.
//!
//! The continuant of a weight list `u1..un` is the determinant of the
//! tridiagonal matrix with the `u_i` on the diagonal and ±1 off it,
//! computed by the recurrence `D_n = u_n·D_{n−1} − D_{n−2}` with
//! `D_0 = 1`, `D_{−1} = 0`. It is invariant under reversing the list.
//!
//! A coprime pair `k > q >= 1` has a unique expansion
//!
//! ```text
//! k/q = w1 − 1/(w2 − 1/(… − 1/wn)),   all wi >= 2,
//! ```
//!
//! whose weight chain satisfies `continuant(w) = k` and
//! `continuant(w[1..]) = q`. These chains are the building blocks of the
//! resolution graphs: a decorated orbit `{k1/q1, k2/q2}` assembles into a
//! centered chain  `reverse(Γ_{k1/q1}) ⊕ [1] ⊕ Γ_{k2/q2}` whose
//! continuant is exactly 1.

use serde::{Deserialize, Serialize};
use std::fmt;

use crate::arith::{coprime, mul, sub};
use crate::diophantine::DecoratedOrbit;
use crate::error::{Error, Result};

/// Ordered list of integer vertex weights; the first entry is the origin.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct WeightedChain {
    pub weights: Vec<i64>,
}

impl fmt::Display for WeightedChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, w) in self.weights.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{w}")?;
        }
        write!(f, "]")
    }
}

impl WeightedChain {
    pub fn new(weights: Vec<i64>) -> Self {
        WeightedChain { weights }
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn reversed(&self) -> Self {
        let mut w = self.weights.clone();
        w.reverse();
        WeightedChain { weights: w }
    }
}

/// `D_n` of the weight list (empty list gives 1).
pub fn continuant(weights: &[i64]) -> Result<i64> {
    let mut prev = 0i64; // D_{-1}
    let mut cur = 1i64; // D_0
    for &w in weights {
        let next = sub(mul(w, cur)?, prev)?;
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// All leading-minor continuants `D_1..D_n`.
pub fn prefix_continuants(weights: &[i64]) -> Result<Vec<i64>> {
    let mut out = Vec::with_capacity(weights.len());
    let mut prev = 0i64;
    let mut cur = 1i64;
    for &w in weights {
        let next = sub(mul(w, cur)?, prev)?;
        prev = cur;
        cur = next;
        out.push(cur);
    }
    Ok(out)
}

/// Minus-continued-fraction expansion of `k/q` with all weights >= 2.
///
/// Greedy rule: `w = ceil(k/q)`, then `(k, q) <- (q, w·q − k)` until the
/// remainder vanishes.
pub fn hj_expand(k: i64, q: i64) -> Result<WeightedChain> {
    if !(k > q && q >= 1) {
        return Err(Error::invalid(format!("need k > q >= 1, got ({k},{q})")));
    }
    if !coprime(k, q) {
        return Err(Error::invalid(format!("({k},{q}) is not coprime")));
    }
    let (mut k, mut q) = (k, q);
    let mut weights = Vec::new();
    while q > 0 {
        let w = (k + q - 1) / q; // ceil(k/q)
        weights.push(w);
        (k, q) = (q, sub(mul(w, q)?, k)?);
    }
    Ok(WeightedChain::new(weights))
}

/// Recovers `(k, q)` from an all-weights-≥2 chain; inverse of
/// [`hj_expand`] (the expansion with all weights >= 2 is unique).
pub fn chain_to_fraction(c: &WeightedChain) -> Result<(i64, i64)> {
    if let Some(&w) = c.weights.iter().find(|&&w| w < 2) {
        return Err(Error::invalid(format!("weight {w} < 2; not a fraction chain")));
    }
    if c.is_empty() {
        return Err(Error::invalid("empty chain has no fraction"));
    }
    let k = continuant(&c.weights)?;
    let q = continuant(&c.weights[1..])?;
    debug_assert_eq!(&hj_expand(k, q)?, c);
    Ok((k, q))
}

/// A chain split as `left ⊕ [center] ⊕ right`; the partial continuants
/// around the center drive the row-expansion identity.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CenteredChain {
    pub left: WeightedChain,
    pub center_weight: i64,
    pub right: WeightedChain,
}

impl fmt::Display for CenteredChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ⊕ [{}] ⊕ {}", self.left, self.center_weight, self.right)
    }
}

impl CenteredChain {
    pub fn new(left: WeightedChain, center_weight: i64, right: WeightedChain) -> Self {
        CenteredChain { left, center_weight, right }
    }

    /// Full weight list, origin first.
    pub fn weights(&self) -> Vec<i64> {
        let mut w = self.left.weights.clone();
        w.push(self.center_weight);
        w.extend_from_slice(&self.right.weights);
        w
    }

    /// Zero-based index of the center in [`Self::weights`].
    pub fn center_index(&self) -> usize {
        self.left.len()
    }

    pub fn len(&self) -> usize {
        self.left.len() + 1 + self.right.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `d_lt,i`: continuant of the left part with `i` vertices dropped
    /// next to the center.
    pub fn d_lt(&self, i: usize) -> Result<i64> {
        let n = self.left.len();
        if i > n {
            return Ok(0); // D_{-1} convention
        }
        continuant(&self.left.weights[..n - i])
    }

    /// `d_rt,i`: continuant of the right part with `i` vertices dropped
    /// next to the center.
    pub fn d_rt(&self, i: usize) -> Result<i64> {
        let n = self.right.len();
        if i > n {
            return Ok(0);
        }
        continuant(&self.right.weights[i..])
    }
}

/// Assembles the centered chain of a decorated orbit:
/// `reverse(Γ_{k1/q1}) ⊕ [1] ⊕ Γ_{k2/q2}`, with an empty side for each
/// `(1,0)` column. The orientation is pinned by the partial continuants:
/// `d_lt,0 = k1`, `d_lt,1 = q1`, `d_rt,0 = k2`, `d_rt,1 = q2`.
pub fn orbit_chain(o: &DecoratedOrbit) -> Result<CenteredChain> {
    let side = |(k, q): (i64, i64)| -> Result<WeightedChain> {
        if (k, q) == (1, 0) {
            Ok(WeightedChain::default())
        } else {
            hj_expand(k, q)
        }
    };
    let chain = CenteredChain::new(side(o.left())?.reversed(), 1, side(o.right())?);
    debug_assert_eq!(chain.d_lt(0)?, o.left().0);
    debug_assert_eq!(chain.d_lt(1)?, o.left().1);
    debug_assert_eq!(chain.d_rt(0)?, o.right().0);
    debug_assert_eq!(chain.d_rt(1)?, o.right().1);
    Ok(chain)
}

/// Evaluates the center-row expansion
/// `w0·d_lt,0·d_rt,0 − d_rt,0·d_lt,1 − d_lt,0·d_rt,1` and the direct
/// continuant; errors if they disagree, returns the common value.
pub fn row_expansion_check(c: &CenteredChain) -> Result<i64> {
    let direct = continuant(&c.weights())?;
    let expanded = sub(
        sub(
            mul(c.center_weight, mul(c.d_lt(0)?, c.d_rt(0)?)?)?,
            mul(c.d_rt(0)?, c.d_lt(1)?)?,
        )?,
        mul(c.d_lt(0)?, c.d_rt(1)?)?,
    )?;
    if direct != expanded {
        return Err(Error::inconsistent(format!(
            "row expansion {expanded} != continuant {direct} on {c}"
        )));
    }
    Ok(direct)
}

/// Order of the local cyclic fundamental group of a chain of rational
/// curves: `|continuant|`.
pub fn pi1_order(c: &WeightedChain) -> Result<i64> {
    Ok(continuant(&c.weights)?.abs())
}

/// Sylvester test: positive definite iff every leading minor is positive.
pub fn is_positive_definite(c: &WeightedChain) -> bool {
    match prefix_continuants(&c.weights) {
        Ok(minors) => minors.iter().all(|&d| d > 0),
        Err(_) => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diophantine::pr_inverse;
    use crate::orbit::Orbit;
    use proptest::prelude::*;

    fn chain(w: &[i64]) -> WeightedChain {
        WeightedChain::new(w.to_vec())
    }

    #[test]
    fn continuant_examples() {
        assert_eq!(continuant(&[2, 3]).unwrap(), 5);
        assert_eq!(continuant(&[]).unwrap(), 1);
        assert_eq!(continuant(&[2, 2, 2]).unwrap(), 4);
    }

    #[test]
    fn hj_examples() {
        assert_eq!(hj_expand(5, 3).unwrap(), chain(&[2, 3]));
        assert_eq!(hj_expand(7, 1).unwrap(), chain(&[7]));
        assert_eq!(hj_expand(3, 2).unwrap(), chain(&[2, 2]));
        assert!(hj_expand(3, 3).is_err());
        assert!(hj_expand(6, 4).is_err());
        assert!(hj_expand(2, 3).is_err());
    }

    #[test]
    fn fraction_examples() {
        assert_eq!(chain_to_fraction(&chain(&[2, 3])).unwrap(), (5, 3));
        assert_eq!(chain_to_fraction(&chain(&[3])).unwrap(), (3, 1));
        assert_eq!(chain_to_fraction(&chain(&[3, 2])).unwrap(), (5, 2));
        assert!(chain_to_fraction(&chain(&[1, 2])).is_err());
    }

    #[test]
    fn orbit_chain_examples() {
        let o = pr_inverse(&Orbit::new(5, 2).unwrap()).unwrap();
        let c = orbit_chain(&o).unwrap();
        assert_eq!(c.left, chain(&[2, 3])); // reversed hj(5,2) = reversed [3,2]
        assert_eq!(c.d_lt(0).unwrap(), 5);
        assert_eq!(c.d_lt(1).unwrap(), 2);

        let base = orbit_chain(&DecoratedOrbit::base()).unwrap();
        assert_eq!(base.weights(), vec![1]);

        let c = orbit_chain(&pr_inverse(&Orbit::new(5, 3).unwrap()).unwrap()).unwrap();
        assert_eq!(c.weights(), vec![3, 2, 1, 3]);
        assert_eq!(c.center_index(), 2);
        assert_eq!(continuant(&c.weights()).unwrap(), 1);
    }

    #[test]
    fn row_expansion_examples() {
        let c = orbit_chain(&pr_inverse(&Orbit::new(5, 3).unwrap()).unwrap()).unwrap();
        assert_eq!(row_expansion_check(&c).unwrap(), 1);
        let c = orbit_chain(&pr_inverse(&Orbit::new(2, 1).unwrap()).unwrap()).unwrap();
        assert_eq!(row_expansion_check(&c).unwrap(), 1);
        let single = CenteredChain::new(WeightedChain::default(), 7, WeightedChain::default());
        assert_eq!(row_expansion_check(&single).unwrap(), 7);
    }

    #[test]
    fn pi1_examples() {
        assert_eq!(pi1_order(&chain(&[2, 3])).unwrap(), 5);
        assert_eq!(pi1_order(&chain(&[1])).unwrap(), 1);
        assert_eq!(pi1_order(&chain(&[2, 2, 2, 2])).unwrap(), 5);
    }

    #[test]
    fn definiteness_examples() {
        assert!(is_positive_definite(&chain(&[2, 3])));
        assert!(!is_positive_definite(&chain(&[1, 1])));
        assert!(is_positive_definite(&chain(&[])));
    }

    #[test]
    fn minors_increase_for_weights_at_least_two() {
        for k in 2..=80i64 {
            for q in 1..k {
                if crate::arith::coprime(k, q) {
                    let c = hj_expand(k, q).unwrap();
                    let minors = prefix_continuants(&c.weights).unwrap();
                    let mut prev = 0;
                    for &d in &minors {
                        assert!(d > prev, "minors not increasing for ({k},{q})");
                        prev = d;
                    }
                }
            }
        }
    }

    proptest! {
        #[test]
        fn reversal_invariance(ws in proptest::collection::vec(-6i64..=6, 0..=10)) {
            let rev: Vec<i64> = ws.iter().rev().copied().collect();
            prop_assert_eq!(continuant(&ws).unwrap(), continuant(&rev).unwrap());
        }

        #[test]
        fn hj_round_trip(k in 2i64..400, q_seed in 1i64..400) {
            let q = 1 + q_seed % (k - 1);
            prop_assume!(crate::arith::coprime(k, q));
            let c = hj_expand(k, q).unwrap();
            prop_assert!(c.weights.iter().all(|&w| w >= 2));
            prop_assert_eq!(chain_to_fraction(&c).unwrap(), (k, q));
            prop_assert_eq!(continuant(&c.weights[1..]).unwrap(), q);
        }
    }
}
