//! Coprime pairs, the additive Euclid algorithm, and the rooted orbit tree.
//!
//! An [`Orbit`] is an unordered coprime pair `{k1, k2}`, stored with
//! `k1 >= k2`. Two expanding actions generate every orbit from `{1,1}`:
//!
//! ```text
//! α: {k1, k2} -> {k1+k2, k2}        β: {k1, k2} -> {k1+k2, k1}
//! ```
//!
//! Their inverses are the two steps of the additive Euclid algorithm
//! (`ε1` subtracts and keeps the order, `ε2` subtracts and swaps), so the
//! orbits form an infinite binary tree rooted just below `{1,1}` at the
//! sentinel `{1,0}`. Vertex levels, root paths, and breadth-first level
//! enumeration all live here.

use serde::{Deserialize, Serialize};
use std::fmt;

use crate::arith::{add, coprime};
use crate::error::{Error, Result};

/// Unordered coprime pair `{k1, k2}`, normalized so `k1 >= k2`.
///
/// `{1, 0}` is the root sentinel of the tree and is only constructible
/// through [`Orbit::root`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawOrbit", into = "RawOrbit")]
pub struct Orbit {
    k1: i64,
    k2: i64,
}

#[derive(Serialize, Deserialize)]
struct RawOrbit {
    k1: i64,
    k2: i64,
}

impl TryFrom<RawOrbit> for Orbit {
    type Error = Error;
    fn try_from(raw: RawOrbit) -> Result<Self> {
        if (raw.k1, raw.k2) == (1, 0) {
            return Ok(Orbit::root());
        }
        Orbit::new(raw.k1, raw.k2)
    }
}

impl From<Orbit> for RawOrbit {
    fn from(o: Orbit) -> Self {
        RawOrbit { k1: o.k1, k2: o.k2 }
    }
}

impl fmt::Display for Orbit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.k1, self.k2)
    }
}

impl Orbit {
    /// Normalizes the pair and checks coprimality. Rejects `{1,0}`.
    pub fn new(a: i64, b: i64) -> Result<Self> {
        let (k1, k2) = if a >= b { (a, b) } else { (b, a) };
        if k2 < 1 {
            return Err(Error::invalid(format!(
                "orbit components must be positive, got {{{k1},{k2}}} (the root {{1,0}} is only constructible via Orbit::root)"
            )));
        }
        if !coprime(k1, k2) {
            return Err(Error::invalid(format!("{{{k1},{k2}}} is not coprime")));
        }
        Ok(Orbit { k1, k2 })
    }

    /// The root sentinel `{1,0}`.
    pub const fn root() -> Self {
        Orbit { k1: 1, k2: 0 }
    }

    /// The base orbit `{1,1}`, the deepest genuine orbit of the tree.
    pub const fn base() -> Self {
        Orbit { k1: 1, k2: 1 }
    }

    pub fn k1(&self) -> i64 {
        self.k1
    }

    pub fn k2(&self) -> i64 {
        self.k2
    }

    pub fn is_root(&self) -> bool {
        *self == Orbit::root()
    }

    pub fn is_base(&self) -> bool {
        *self == Orbit::base()
    }

    /// Tree level: `n_euclid + 1`. The base `{1,1}` has level 1.
    pub fn level(&self) -> Result<u32> {
        Ok(n_euclid(self.k1, self.k2)? + 1)
    }
}

/// The two expanding actions on orbits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Action {
    /// α: `{k1,k2} -> {k1+k2, k2}`
    A,
    /// β: `{k1,k2} -> {k1+k2, k1}`
    B,
}

/// Edge labels of the Euclid steps (the inverses of [`Action::A`] and
/// [`Action::B`] respectively).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum EuclidStep {
    /// ε1: subtract, order preserved (`k1 >= 2*k2`).
    E1,
    /// ε2: subtract, components swap (`k1 <= 2*k2`).
    E2,
}

impl fmt::Display for Action {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Action::A => write!(f, "A"),
            Action::B => write!(f, "B"),
        }
    }
}

impl fmt::Display for EuclidStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EuclidStep::E1 => write!(f, "ε1"),
            EuclidStep::E2 => write!(f, "ε2"),
        }
    }
}

impl EuclidStep {
    /// The action this step inverts.
    pub fn inverse_action(self) -> Action {
        match self {
            EuclidStep::E1 => Action::A,
            EuclidStep::E2 => Action::B,
        }
    }
}

/// Word over `{A, B}`; replaying it from `{1,1}` walks down the tree.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct TreePath(pub Vec<Action>);

impl fmt::Display for TreePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "ε");
        }
        for a in &self.0 {
            write!(f, "{a}")?;
        }
        Ok(())
    }
}

impl TreePath {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Replays the word from `{1,1}`.
    pub fn replay(&self) -> Result<Orbit> {
        let mut o = Orbit::base();
        for &letter in &self.0 {
            o = apply_action(&o, letter)?;
        }
        Ok(o)
    }
}

/// Applies α or β. The root `{1,0}` is rejected.
pub fn apply_action(o: &Orbit, letter: Action) -> Result<Orbit> {
    if o.is_root() {
        return Err(Error::invalid("actions are not defined on the root {1,0}"));
    }
    let sum = add(o.k1, o.k2)?;
    let other = match letter {
        Action::A => o.k2,
        Action::B => o.k1,
    };
    Orbit::new(sum, other)
}

/// One step of the additive Euclid algorithm, with its edge label.
///
/// Terminal orbits (`{1,1}` and `{1,0}`) are rejected. At the boundary
/// `k1 = 2*k2` (only `{2,1}`) both rules lead to `{1,1}`; the edge is
/// labeled `ε1` so that `{1,1}` ends an ε1-edge, matching the tree's
/// fixed bottom rung.
pub fn euclid_step(o: &Orbit) -> Result<(Orbit, EuclidStep)> {
    if o.is_root() || o.is_base() {
        return Err(Error::invalid(format!("{o} is terminal for the Euclid algorithm")));
    }
    let diff = o.k1 - o.k2;
    let step = if o.k1 >= 2 * o.k2 { EuclidStep::E1 } else { EuclidStep::E2 };
    // Normalization makes ε1 and ε2 produce the same orbit; only the
    // label differs, and it is pinned by the comparison above.
    Ok((Orbit::new(diff, o.k2)?, step))
}

/// Number of additive Euclid steps from `{k1,k2}` down to `{1,1}`.
pub fn n_euclid(k1: i64, k2: i64) -> Result<u32> {
    let mut o = Orbit::new(k1, k2)?;
    let mut n = 0u32;
    while !o.is_base() {
        o = euclid_step(&o)?.0;
        n += 1;
    }
    Ok(n)
}

/// The unique word replaying to `o` from `{1,1}`: the Euclid edge labels
/// read from `o` down to `{1,1}`, reversed and inverted.
pub fn path_to_root(o: &Orbit) -> Result<TreePath> {
    if o.is_root() {
        return Err(Error::invalid("the root {1,0} has no replay word"));
    }
    let mut letters = Vec::new();
    let mut cur = *o;
    while !cur.is_base() {
        let (next, step) = euclid_step(&cur)?;
        letters.push(step.inverse_action());
        cur = next;
    }
    letters.reverse();
    Ok(TreePath(letters))
}

/// All orbits at tree level `level`, in breadth-first order with the
/// α-child before the β-child.
///
/// Level 1 is `[{1,1}]`, level 2 is `[{2,1}]` (the two actions agree on
/// `{1,1}`), and each deeper level doubles: `2^(level-2)` orbits.
pub fn enumerate_to_level(level: u32) -> Result<Vec<Orbit>> {
    if level == 0 {
        return Err(Error::invalid("levels start at 1"));
    }
    let mut current = vec![Orbit::base()];
    for l in 2..=level {
        let mut next = Vec::with_capacity(current.len() * 2);
        for o in &current {
            next.push(apply_action(o, Action::A)?);
            if l > 2 {
                next.push(apply_action(o, Action::B)?);
            }
            // at l = 2 the α- and β-children of {1,1} coincide
        }
        current = next;
    }
    Ok(current)
}

/// Breadth-first levels 1..=level, for the tree views.
pub fn levels_up_to(level: u32) -> Result<Vec<Vec<Orbit>>> {
    (1..=level).map(enumerate_to_level).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn orbit(k1: i64, k2: i64) -> Orbit {
        Orbit::new(k1, k2).unwrap()
    }

    #[test]
    fn apply_action_examples() {
        assert_eq!(apply_action(&Orbit::base(), Action::A).unwrap(), orbit(2, 1));
        assert_eq!(apply_action(&orbit(3, 2), Action::B).unwrap(), orbit(5, 3));
        assert_eq!(apply_action(&orbit(2, 1), Action::B).unwrap(), orbit(3, 2));
        assert!(apply_action(&Orbit::root(), Action::A).is_err());
    }

    #[test]
    fn euclid_step_examples() {
        assert_eq!(euclid_step(&orbit(5, 3)).unwrap(), (orbit(3, 2), EuclidStep::E2));
        assert_eq!(euclid_step(&orbit(7, 2)).unwrap(), (orbit(5, 2), EuclidStep::E1));
        // boundary k1 = 2*k2, tie-break to ε1
        assert_eq!(euclid_step(&orbit(2, 1)).unwrap(), (Orbit::base(), EuclidStep::E1));
        assert!(euclid_step(&Orbit::base()).is_err());
        assert!(euclid_step(&Orbit::root()).is_err());
    }

    #[test]
    fn n_euclid_examples() {
        assert_eq!(n_euclid(1, 1).unwrap(), 0);
        assert_eq!(n_euclid(5, 3).unwrap(), 3);
        assert_eq!(n_euclid(2, 1).unwrap(), 1);
        assert!(n_euclid(6, 4).is_err());
    }

    #[test]
    fn path_examples() {
        use Action::*;
        assert_eq!(path_to_root(&orbit(2, 1)).unwrap(), TreePath(vec![A]));
        assert_eq!(path_to_root(&orbit(5, 2)).unwrap(), TreePath(vec![A, B, A]));
        assert_eq!(path_to_root(&orbit(5, 3)).unwrap(), TreePath(vec![A, B, B]));
        assert_eq!(path_to_root(&Orbit::base()).unwrap(), TreePath(vec![]));
    }

    // Independent oracle for the level sets: replay every word of the
    // given length whose first letter is A ({1,1} has a single child).
    fn level_by_replay(level: u32) -> Vec<Orbit> {
        assert!(level >= 1);
        if level == 1 {
            return vec![Orbit::base()];
        }
        let n = level - 1;
        let mut out = Vec::new();
        for mask in 0..(1u64 << (n - 1)) {
            let mut word = vec![Action::A];
            for bit in 0..(n - 1) {
                word.push(if mask >> (n - 2 - bit) & 1 == 0 { Action::A } else { Action::B });
            }
            out.push(TreePath(word).replay().unwrap());
        }
        out
    }

    #[test]
    fn enumerate_level_examples() {
        assert!(enumerate_to_level(0).is_err());
        assert_eq!(enumerate_to_level(1).unwrap(), vec![Orbit::base()]);
        assert_eq!(enumerate_to_level(2).unwrap(), vec![orbit(2, 1)]);
        // level 4, frozen from the replay oracle: AAA, AAB, ABA, ABB
        let l4: HashSet<_> = enumerate_to_level(4).unwrap().into_iter().collect();
        let expected: HashSet<_> =
            [orbit(4, 1), orbit(4, 3), orbit(5, 2), orbit(5, 3)].into_iter().collect();
        assert_eq!(l4, expected);
        assert_eq!(l4.len(), 4);
    }

    #[test]
    fn enumerate_matches_replay_oracle() {
        for level in 1..=10 {
            let bfs = enumerate_to_level(level).unwrap();
            let oracle = level_by_replay(level);
            assert_eq!(bfs, oracle, "level {level}");
            // distinct orbits, all at the right level
            let set: HashSet<_> = bfs.iter().collect();
            assert_eq!(set.len(), bfs.len());
            for o in &bfs {
                assert_eq!(o.level().unwrap(), level);
            }
        }
    }

    #[test]
    fn replay_round_trip_small_sweep() {
        for k1 in 1..=60 {
            for k2 in 1..=k1 {
                if crate::arith::coprime(k1, k2) {
                    let o = orbit(k1, k2);
                    let path = path_to_root(&o).unwrap();
                    assert_eq!(path.replay().unwrap(), o);
                    assert_eq!(path.len() as u32, n_euclid(k1, k2).unwrap());
                }
            }
        }
    }

    #[test]
    fn euclid_inverts_actions() {
        for level in 2..=9 {
            for o in enumerate_to_level(level).unwrap() {
                for letter in [Action::A, Action::B] {
                    let child = apply_action(&o, letter).unwrap();
                    let (back, step) = euclid_step(&child).unwrap();
                    assert_eq!(back, o);
                    if !o.is_base() {
                        assert_eq!(step.inverse_action(), letter);
                    }
                }
            }
        }
    }

    #[test]
    fn orbit_json_round_trip() {
        for o in [Orbit::root(), Orbit::base(), orbit(8, 3)] {
            let s = serde_json::to_string(&o).unwrap();
            assert_eq!(serde_json::from_str::<Orbit>(&s).unwrap(), o);
        }
        assert!(serde_json::from_str::<Orbit>("{\"k1\":6,\"k2\":4}").is_err());
    }
}
