//! The solution lattice of `k1·k2 − k1·q2 − k2·q1 = 1` and its extensions.
//!
//! A [`DioSol4`] is an integer solution of that equation. The bounded
//! solutions (`0 <= q1 < k1`, `0 <= q2 < k2`, both `k` positive) decorate
//! the orbit tree: each orbit `{k1,k2}` carries a unique decoration
//! `{k1/q1, k2/q2}` ([`DecoratedOrbit`]), and forgetting or re-deriving
//! the decoration ([`pr`], [`pr_inverse`], [`pr1_inverse`]) is a
//! bijection. A GL(4,ℤ) action ([`apply_h`]) generates the whole lattice
//! from `(1,1,0,0)`.
//!
//! On top of that sits a second, cubic system. For every bounded solution
//! with `min(k1,k2) >= 2` there is exactly one extension
//! `(q3, q4, m1, m2)` ([`ExtSol8`]) satisfying
//!
//! ```text
//! k1·k2·(k1+k2) − k1·k2·q3 − q4·(k1+k2) = 1
//! q4 = k1·m1 + q1 = k2·m2 + q2
//! ```
//!
//! within the bounds `m1, m2 >= 0`, `0 < q3 < k1+k2`, `0 < q4 < k1·k2`.
//! The extension is computed through an auxiliary pair ([`AuxSol`])
//! solving `k1·a2 − k2·a1 = q1 − q2` in the box `(0,k1] × (0,k2]`, and the
//! identity `m1 + m2 + q3 = k1 + k2 − 1` always holds.

use serde::{Deserialize, Serialize};
use std::fmt;

use crate::arith::{add, coprime, mul, sub};
use crate::error::{Error, Result};
use crate::orbit::{self, Action, EuclidStep, Orbit};

/// Integer solution of `k1·k2 − k1·q2 − k2·q1 = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawSol4", into = "RawSol4")]
pub struct DioSol4 {
    pub k1: i64,
    pub k2: i64,
    pub q1: i64,
    pub q2: i64,
}

#[derive(Serialize, Deserialize)]
struct RawSol4 {
    k1: i64,
    k2: i64,
    q1: i64,
    q2: i64,
}

impl TryFrom<RawSol4> for DioSol4 {
    type Error = Error;
    fn try_from(r: RawSol4) -> Result<Self> {
        DioSol4::new(r.k1, r.k2, r.q1, r.q2)
    }
}

impl From<DioSol4> for RawSol4 {
    fn from(s: DioSol4) -> Self {
        RawSol4 { k1: s.k1, k2: s.k2, q1: s.q1, q2: s.q2 }
    }
}

impl fmt::Display for DioSol4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.k1, self.k2, self.q1, self.q2)
    }
}

/// Residual of the defining equation; zero iff the tuple is a solution.
pub fn eq1_residual(k1: i64, k2: i64, q1: i64, q2: i64) -> Result<i64> {
    let lhs = sub(sub(mul(k1, k2)?, mul(k1, q2)?)?, mul(k2, q1)?)?;
    sub(lhs, 1)
}

impl DioSol4 {
    /// Checks the defining equation.
    pub fn new(k1: i64, k2: i64, q1: i64, q2: i64) -> Result<Self> {
        if eq1_residual(k1, k2, q1, q2)? != 0 {
            return Err(Error::invalid(format!(
                "({k1},{k2},{q1},{q2}) does not satisfy k1*k2 - k1*q2 - k2*q1 = 1"
            )));
        }
        Ok(DioSol4 { k1, k2, q1, q2 })
    }

    /// Bounded solution: positive `k`s and `0 <= q_i < k_i`.
    pub fn is_bounded(&self) -> bool {
        self.k1 > 0
            && self.k2 > 0
            && (0..self.k1).contains(&self.q1)
            && (0..self.k2).contains(&self.q2)
    }

    /// Bounded with `min(k1,k2) >= 2`: the domain of the cubic extension.
    pub fn is_extendable(&self) -> bool {
        self.is_bounded() && self.k1.min(self.k2) >= 2
    }

    pub fn as_tuple(&self) -> (i64, i64, i64, i64) {
        (self.k1, self.k2, self.q1, self.q2)
    }
}

/// Generators of the GL(4,ℤ) action preserving the solution set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum HGen {
    /// `(k1,k2,q1,q2) -> (k1+k2, k2, k2+q1-q2, q2)`
    H1,
    /// Inverse of `H1`: `(k1-k2, k2, q1+q2-k2, q2)`
    H1Inv,
    /// Component swap `(k2, k1, q2, q1)`
    H2,
}

/// Applies one generator; both input and output satisfy the equation.
pub fn apply_h(s: &DioSol4, gen: HGen) -> Result<DioSol4> {
    let (k1, k2, q1, q2) = s.as_tuple();
    let (a, b, c, d) = match gen {
        HGen::H1 => (add(k1, k2)?, k2, sub(add(k2, q1)?, q2)?, q2),
        HGen::H1Inv => (sub(k1, k2)?, k2, sub(add(q1, q2)?, k2)?, q2),
        HGen::H2 => (k2, k1, q2, q1),
    };
    DioSol4::new(a, b, c, d)
}

/// Swap-orbit of a bounded solution, normalized so `k1 >= k2`.
///
/// Written `{k1/q1, k2/q2}`. The tree of decorated orbits is isomorphic
/// to the plain orbit tree; `{1/0, 1/0}` sits over `{1,1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawDecorated", into = "RawDecorated")]
pub struct DecoratedOrbit {
    k1: i64,
    q1: i64,
    k2: i64,
    q2: i64,
}

#[derive(Serialize, Deserialize)]
struct RawDecorated {
    k1: i64,
    q1: i64,
    k2: i64,
    q2: i64,
}

impl TryFrom<RawDecorated> for DecoratedOrbit {
    type Error = Error;
    fn try_from(r: RawDecorated) -> Result<Self> {
        DecoratedOrbit::new(r.k1, r.q1, r.k2, r.q2)
    }
}

impl From<DecoratedOrbit> for RawDecorated {
    fn from(o: DecoratedOrbit) -> Self {
        RawDecorated { k1: o.k1, q1: o.q1, k2: o.k2, q2: o.q2 }
    }
}

impl fmt::Display for DecoratedOrbit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}/{},{}/{}}}", self.k1, self.q1, self.k2, self.q2)
    }
}

impl DecoratedOrbit {
    /// Normalizes to `k1 >= k2` and validates the underlying solution.
    pub fn new(k1: i64, q1: i64, k2: i64, q2: i64) -> Result<Self> {
        let ((k1, q1), (k2, q2)) =
            if k1 >= k2 { ((k1, q1), (k2, q2)) } else { ((k2, q2), (k1, q1)) };
        let sol = DioSol4::new(k1, k2, q1, q2)?;
        if !sol.is_bounded() {
            return Err(Error::invalid(format!(
                "{{{k1}/{q1},{k2}/{q2}}} is outside the bounded solution set"
            )));
        }
        Ok(DecoratedOrbit { k1, q1, k2, q2 })
    }

    /// `{1/0, 1/0}`, the decoration of `{1,1}`.
    pub const fn base() -> Self {
        DecoratedOrbit { k1: 1, q1: 0, k2: 1, q2: 0 }
    }

    pub fn left(&self) -> (i64, i64) {
        (self.k1, self.q1)
    }

    pub fn right(&self) -> (i64, i64) {
        (self.k2, self.q2)
    }

    pub fn as_sol(&self) -> DioSol4 {
        DioSol4 { k1: self.k1, k2: self.k2, q1: self.q1, q2: self.q2 }
    }
}

/// Forgets the decoration.
pub fn pr(o: &DecoratedOrbit) -> Orbit {
    Orbit::new(o.k1, o.k2).expect("decorated orbits project to coprime pairs")
}

/// Projects to the left column `{k1, q1}` (the root `{1/0,1/0}` maps to `{1,0}`).
pub fn pr1(o: &DecoratedOrbit) -> Orbit {
    if *o == DecoratedOrbit::base() {
        return Orbit::root();
    }
    Orbit::new(o.k1, o.q1).expect("k1 and q1 of a decorated orbit are coprime")
}

/// Applies α or β on decorations; commutes with [`pr`].
pub fn decorated_action(o: &DecoratedOrbit, letter: Action) -> Result<DecoratedOrbit> {
    let (k1, q1) = o.left();
    let (k2, q2) = o.right();
    let sum = add(k1, k2)?;
    match letter {
        Action::A => DecoratedOrbit::new(sum, sub(add(k2, q1)?, q2)?, k2, q2),
        Action::B => DecoratedOrbit::new(sum, sub(add(k1, q2)?, q1)?, k1, q1),
    }
}

/// One Euclid step on decorations, with the same tie-break as the plain
/// tree (`{2/1,1/0}` steps to `{1/0,1/0}` by ε1).
pub fn decorated_euclid_step(o: &DecoratedOrbit) -> Result<(DecoratedOrbit, EuclidStep)> {
    if *o == DecoratedOrbit::base() {
        return Err(Error::invalid("{1/0,1/0} is terminal"));
    }
    let (k1, q1) = o.left();
    let (k2, q2) = o.right();
    let step = if k1 >= 2 * k2 { EuclidStep::E1 } else { EuclidStep::E2 };
    let next = DecoratedOrbit::new(sub(k1, k2)?, sub(add(q1, q2)?, k2)?, k2, q2)?;
    Ok((next, step))
}

/// The unique decoration over an orbit, computed by replaying the orbit's
/// root path on the decorated tree (which simultaneously exercises the
/// tree isomorphism).
pub fn pr_inverse(o: &Orbit) -> Result<DecoratedOrbit> {
    let path = orbit::path_to_root(o)?;
    let mut cur = DecoratedOrbit::base();
    for &letter in &path.0 {
        cur = decorated_action(&cur, letter)?;
    }
    debug_assert_eq!(pr(&cur), *o);
    Ok(cur)
}

/// The unique decorated orbit whose left column is `(k1, q1)`, by the
/// modular construction: `k2` is the unique residue in `(0, k1)` with
/// `q1·k2 + 1 ≡ 0 (mod k1)`, and `q2 = k2 − (q1·k2 + 1)/k1`.
pub fn pr1_inverse(k1: i64, q1: i64) -> Result<DecoratedOrbit> {
    if !(k1 > q1 && q1 >= 1) {
        return Err(Error::invalid(format!("need k1 > q1 >= 1, got ({k1},{q1})")));
    }
    if !coprime(k1, q1) {
        return Err(Error::invalid(format!("({k1},{q1}) is not coprime")));
    }
    let mut k2 = 0;
    for cand in 1..k1 {
        if (mul(q1, cand)? + 1) % k1 == 0 {
            k2 = cand;
            break;
        }
    }
    if k2 == 0 {
        return Err(Error::inconsistent(format!(
            "no k2 < {k1} with q1*k2 + 1 divisible by k1; q1 = {q1}"
        )));
    }
    let n = (mul(q1, k2)? + 1) / k1;
    DecoratedOrbit::new(k1, q1, k2, sub(k2, n)?)
}

/// Auxiliary pair for the cubic extension: `k1·a2 − k2·a1 = q1 − q2`
/// with `0 < a1 <= k1`, `0 < a2 <= k2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuxSol {
    pub base: DioSol4,
    pub a1: i64,
    pub a2: i64,
}

/// Solves for the unique auxiliary pair of an extendable solution.
///
/// Three cases: equal `q`s give `(k1, k2)` directly; otherwise a modular
/// inversion on the side of the larger `q`.
pub fn solve_aux(s: &DioSol4) -> Result<AuxSol> {
    if !s.is_extendable() {
        return Err(Error::invalid(format!(
            "{s} is not a bounded solution with min(k1,k2) >= 2"
        )));
    }
    let (k1, k2, q1, q2) = s.as_tuple();
    // modular inversion by scan; finds the unique representative in range
    let scan = |modulus: i64, coeff: i64, offset: i64| -> Result<Option<i64>> {
        for a in 1..modulus {
            if add(mul(coeff, a)?, offset)? % modulus == 0 {
                return Ok(Some(a));
            }
        }
        Ok(None)
    };
    let (a1, a2) = if q1 == q2 {
        (k1, k2)
    } else if q1 > q2 {
        let b1 = q1 - q2;
        let a1 = scan(k1, k2, b1)?
            .ok_or_else(|| Error::inconsistent(format!("no a1 for {s}")))?;
        (a1, (mul(k2, a1)? + b1) / k1)
    } else {
        let b2 = q2 - q1;
        let a2 = scan(k2, k1, b2)?
            .ok_or_else(|| Error::inconsistent(format!("no a2 for {s}")))?;
        ((mul(k1, a2)? + b2) / k2, a2)
    };
    let sol = AuxSol { base: *s, a1, a2 };
    if !aux_holds(&sol)? {
        return Err(Error::inconsistent(format!("constructed ({a1},{a2}) fails for {s}")));
    }
    Ok(sol)
}

/// Checks `k1·a2 − k2·a1 = q1 − q2` and the box bounds.
pub fn aux_holds(sol: &AuxSol) -> Result<bool> {
    let (k1, k2, q1, q2) = sol.base.as_tuple();
    Ok(sub(mul(k1, sol.a2)?, mul(k2, sol.a1)?)? == q1 - q2
        && (1..=k1).contains(&sol.a1)
        && (1..=k2).contains(&sol.a2))
}

/// Exhaustive box scan for the auxiliary pair; the independent route
/// used by the verification suites.
pub fn solve_aux_brute(s: &DioSol4) -> Result<Vec<(i64, i64)>> {
    let (k1, k2, q1, q2) = s.as_tuple();
    let mut found = Vec::new();
    for a1 in 1..=k1 {
        for a2 in 1..=k2 {
            if sub(mul(k1, a2)?, mul(k2, a1)?)? == q1 - q2 {
                found.push((a1, a2));
            }
        }
    }
    Ok(found)
}

/// Full eight-component solution of the quadratic-plus-cubic system.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawSol8", into = "RawSol8")]
pub struct ExtSol8 {
    pub k1: i64,
    pub k2: i64,
    pub q1: i64,
    pub q2: i64,
    pub q3: i64,
    pub q4: i64,
    pub m1: i64,
    pub m2: i64,
}

#[derive(Serialize, Deserialize)]
struct RawSol8 {
    k1: i64,
    k2: i64,
    q1: i64,
    q2: i64,
    q3: i64,
    q4: i64,
    m1: i64,
    m2: i64,
}

impl TryFrom<RawSol8> for ExtSol8 {
    type Error = Error;
    fn try_from(r: RawSol8) -> Result<Self> {
        let ext =
            ExtSol8 { k1: r.k1, k2: r.k2, q1: r.q1, q2: r.q2, q3: r.q3, q4: r.q4, m1: r.m1, m2: r.m2 };
        ext.validate()?;
        Ok(ext)
    }
}

impl From<ExtSol8> for RawSol8 {
    fn from(e: ExtSol8) -> Self {
        RawSol8 { k1: e.k1, k2: e.k2, q1: e.q1, q2: e.q2, q3: e.q3, q4: e.q4, m1: e.m1, m2: e.m2 }
    }
}

impl fmt::Display for ExtSol8 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({},{},{},{},{},{},{},{})",
            self.k1, self.k2, self.q1, self.q2, self.q3, self.q4, self.m1, self.m2
        )
    }
}

impl ExtSol8 {
    pub fn base(&self) -> DioSol4 {
        DioSol4 { k1: self.k1, k2: self.k2, q1: self.q1, q2: self.q2 }
    }

    /// Residual of the cubic equation
    /// `k1·k2·(k1+k2) − k1·k2·q3 − q4·(k1+k2) − 1`.
    pub fn eq2_residual(&self) -> Result<i64> {
        let kk = mul(self.k1, self.k2)?;
        let s = add(self.k1, self.k2)?;
        sub(sub(sub(mul(kk, s)?, mul(kk, self.q3)?)?, mul(self.q4, s)?)?, 1)
    }

    /// Both arms of `q4 = k1·m1 + q1 = k2·m2 + q2`.
    pub fn eq3_residuals(&self) -> Result<(i64, i64)> {
        Ok((
            sub(self.q4, add(mul(self.k1, self.m1)?, self.q1)?)?,
            sub(self.q4, add(mul(self.k2, self.m2)?, self.q2)?)?,
        ))
    }

    fn validate(&self) -> Result<()> {
        DioSol4::new(self.k1, self.k2, self.q1, self.q2)?;
        if self.eq2_residual()? != 0 {
            return Err(Error::invalid(format!("{self}: cubic equation fails")));
        }
        let (r1, r2) = self.eq3_residuals()?;
        if (r1, r2) != (0, 0) {
            return Err(Error::invalid(format!("{self}: linear decomposition fails")));
        }
        let bounds = self.k1.min(self.k2) >= 2
            && self.m1 >= 0
            && self.m2 >= 0
            && (1..add(self.k1, self.k2)?).contains(&self.q3)
            && (1..mul(self.k1, self.k2)?).contains(&self.q4);
        if !bounds {
            return Err(Error::invalid(format!("{self}: outside the bounded region")));
        }
        Ok(())
    }

    /// `m1 + m2 + q3 − (k1 + k2 − 1)`; always zero.
    pub fn sum_identity_residual(&self) -> Result<i64> {
        sub(add(add(self.m1, self.m2)?, self.q3)?, sub(add(self.k1, self.k2)?, 1)?)
    }
}

/// Extends an extendable solution to its unique eight-component form.
///
/// Closed forms through the auxiliary pair: `q3 = a1 + a2 − 1`,
/// `m1 = k2 − a2`, `m2 = k1 − a1`, `q4 = k1·m1 + q1`. They are the unique
/// bounded solution of the defining system, which [`extend_to_8_brute`]
/// confirms independently.
pub fn extend_to_8(s: &DioSol4) -> Result<ExtSol8> {
    let aux = solve_aux(s)?;
    let (k1, k2, q1, q2) = s.as_tuple();
    let q3 = sub(add(aux.a1, aux.a2)?, 1)?;
    let m1 = sub(k2, aux.a2)?;
    let m2 = sub(k1, aux.a1)?;
    let q4 = add(mul(k1, m1)?, q1)?;
    let ext = ExtSol8 { k1, k2, q1, q2, q3, q4, m1, m2 };
    ext.validate()?;
    if ext.sum_identity_residual()? != 0 {
        return Err(Error::inconsistent(format!("{ext}: m1+m2+q3 != k1+k2-1")));
    }
    Ok(ext)
}

/// Exhaustive scan over `0 < q4 < k1·k2` (which determines everything
/// else); the independent route for the verification suites.
pub fn extend_to_8_brute(s: &DioSol4) -> Result<Vec<ExtSol8>> {
    if !s.is_extendable() {
        return Err(Error::invalid(format!("{s} is not extendable")));
    }
    let (k1, k2, q1, q2) = s.as_tuple();
    let kk = mul(k1, k2)?;
    let ksum = add(k1, k2)?;
    let mut found = Vec::new();
    for q4 in 1..kk {
        if (q4 - q1) % k1 != 0 || (q4 - q2) % k2 != 0 {
            continue;
        }
        let (m1, m2) = ((q4 - q1) / k1, (q4 - q2) / k2);
        if m1 < 0 || m2 < 0 {
            continue;
        }
        // solve the cubic equation for q3 and check integrality + bounds
        let num = sub(sub(mul(kk, ksum)?, mul(q4, ksum)?)?, 1)?;
        if num % kk != 0 {
            continue;
        }
        let q3 = num / kk;
        if !(1..ksum).contains(&q3) {
            continue;
        }
        found.push(ExtSol8 { k1, k2, q1, q2, q3, q4, m1, m2 });
    }
    Ok(found)
}

/// Walks the decorated tree breadth-first up to `level`, returning each
/// level's decorated orbits (child order α before β).
pub fn decorated_levels(level: u32) -> Result<Vec<Vec<DecoratedOrbit>>> {
    if level == 0 {
        return Err(Error::invalid("levels start at 1"));
    }
    let mut levels = vec![vec![DecoratedOrbit::base()]];
    for l in 2..=level {
        let prev = levels.last().unwrap();
        let mut next = Vec::with_capacity(prev.len() * 2);
        for o in prev {
            next.push(decorated_action(o, Action::A)?);
            if l > 2 {
                next.push(decorated_action(o, Action::B)?);
            }
        }
        levels.push(next);
    }
    Ok(levels)
}
