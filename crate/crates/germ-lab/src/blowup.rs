//! Resolution of `x^k1 − y^k2 = 0` by iterated point blowups.
//!
//! The engine works on integer data only: the proper transform of the
//! binomial stays a binomial through every blowup, so a state is an
//! exponent pair plus bookkeeping of which exceptional components pass
//! through the current center. One blowup:
//!
//! * creates a new component with self-intersection −1,
//! * drops the self-intersection of every component through the center
//!   by one and attaches them to the new component,
//! * separates the two old components if the center was their
//!   intersection point,
//! * replaces the exponent pair `(a, b)` by `{a−b, b}`, reordered so the
//!   larger exponent comes first; whether the reorder happened is
//!   recorded, and that distinction is exactly the ε1/ε2 edge label.
//!
//! The pair `(1,1)` marks the final blowup: after it the transform meets
//! the last component transversally at a free point and the branch
//! vertex attaches there. Smooth germs `x^k − y` are run through the
//! same convention (their transforms are treated as still in need of
//! resolution until the `(1,1)` stage has been blown up), which keeps
//! `blowup count = n_euclid + 1` uniform.
//!
//! [`charts`] re-derives all of this from literal two-chart polynomial
//! substitution and is diffed against the engine by the verification
//! suites.

use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::fmt;

use crate::arith::{coprime, sub};
use crate::chains::{self, CenteredChain, WeightedChain};
use crate::diophantine::DioSol4;
use crate::error::{Error, Result};
use crate::matrix::IntMatrix;
use crate::orbit::EuclidStep;

pub mod charts;

/// Component index; components are numbered in creation order starting
/// at 0 (so component `i` is the exceptional curve of blowup `i+1`).
pub type ComponentId = usize;

/// The evolving configuration during a resolution.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResolutionState {
    /// Self-intersection of each component, indexed by creation order.
    pub self_intersections: Vec<i64>,
    /// Unordered intersection pairs between components.
    pub adjacency: BTreeSet<(ComponentId, ComponentId)>,
    /// Components through the current center: the coordinate-axis curves
    /// `{x = 0}` and `{y = 0}` at that point, when they are tracked
    /// exceptional components.
    pub through: (Option<ComponentId>, Option<ComponentId>),
    /// Exponent pair of the proper transform, larger first.
    pub exponents: (i64, i64),
    /// Set once the transform meets the exceptional locus transversally:
    /// the component carrying the branch vertex.
    pub attach: Option<ComponentId>,
    /// One record per blowup performed so far.
    pub trace: Vec<TraceStep>,
}

/// What one blowup did.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceStep {
    /// Exponent pair before the blowup.
    pub exponents: (i64, i64),
    /// Edge label: ε1 when `a >= 2b` (no reorder after subtracting),
    /// ε2 otherwise. The final `(1,1)` blowup is an ε2 edge.
    pub label: EuclidStep,
    /// Tracked components through the blown-up point.
    pub through: (Option<ComponentId>, Option<ComponentId>),
    /// Whether the exponent pair was reordered after subtracting.
    pub swapped: bool,
}

impl ResolutionState {
    /// Initial state for the curve `x^k1 − y^k2`, `k1 >= k2 >= 1` coprime.
    pub fn initial(k1: i64, k2: i64) -> Result<Self> {
        if !(k1 >= k2 && k2 >= 1) {
            return Err(Error::invalid(format!("need k1 >= k2 >= 1, got ({k1},{k2})")));
        }
        if !coprime(k1, k2) {
            return Err(Error::invalid(format!("({k1},{k2}) is not coprime")));
        }
        Ok(ResolutionState {
            self_intersections: Vec::new(),
            adjacency: BTreeSet::new(),
            through: (None, None),
            exponents: (k1, k2),
            attach: None,
            trace: Vec::new(),
        })
    }

    pub fn is_terminal(&self) -> bool {
        self.attach.is_some()
    }

    pub fn blowup_count(&self) -> usize {
        self.self_intersections.len()
    }

    /// Performs one blowup; terminal states are rejected.
    pub fn blow_up_once(&self) -> Result<ResolutionState> {
        if self.is_terminal() {
            return Err(Error::invalid("resolution already terminal"));
        }
        let mut next = self.clone();
        let (a, b) = self.exponents;
        let new_id: ComponentId = next.self_intersections.len();
        next.self_intersections.push(-1);

        let (x_curve, y_curve) = self.through;
        for c in [x_curve, y_curve].into_iter().flatten() {
            next.self_intersections[c] -= 1;
            next.adjacency.insert(ordered(c, new_id));
        }
        if let (Some(cx), Some(cy)) = (x_curve, y_curve) {
            // blowing up their intersection point separates them
            next.adjacency.remove(&ordered(cx, cy));
        }

        let label = if (a, b) == (1, 1) {
            EuclidStep::E2
        } else if a >= 2 * b {
            EuclidStep::E1
        } else {
            EuclidStep::E2
        };

        if (a, b) == (1, 1) {
            // transform now meets the new component transversally at a
            // free point; the branch vertex lives there
            next.attach = Some(new_id);
            next.through = (None, None);
            next.trace.push(TraceStep {
                exponents: (a, b),
                label,
                through: self.through,
                swapped: false,
            });
            return Ok(next);
        }

        // the transform passes through (new component) ∩ (old y-curve)
        let reduced = sub(a, b)?;
        let swapped = reduced < b;
        next.exponents = if swapped { (b, reduced) } else { (reduced, b) };
        next.through =
            if swapped { (y_curve, Some(new_id)) } else { (Some(new_id), y_curve) };
        next.trace.push(TraceStep { exponents: (a, b), label, through: self.through, swapped });
        Ok(next)
    }
}

fn ordered(a: ComponentId, b: ComponentId) -> (ComponentId, ComponentId) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Dual graph of a finished resolution: the weighted chain (weights are
/// negated self-intersections) plus the unweighted branch vertex on the
/// center.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResolutionGraph {
    pub chain: CenteredChain,
    /// Index of the chain vertex carrying the branch vertex; always the
    /// center (the unique weight-1 vertex).
    pub branch_vertex_at: usize,
    /// Chain position `i` holds the component with this id.
    pub component_order: Vec<ComponentId>,
}

/// The four boundary continuants of a finished resolution, read off the
/// chain around its center: `(d_lt0, d_rt0, d_lt1, d_rt1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SbarRecord {
    pub d_lt0: i64,
    pub d_rt0: i64,
    pub d_lt1: i64,
    pub d_rt1: i64,
}

impl fmt::Display for SbarRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.d_lt0, self.d_rt0, self.d_lt1, self.d_rt1)
    }
}

impl SbarRecord {
    /// As a bounded Diophantine solution `(k1,k2,q1,q2)`; membership is
    /// part of the record's contract.
    pub fn as_sol(&self) -> Result<DioSol4> {
        let s = DioSol4::new(self.d_lt0, self.d_rt0, self.d_lt1, self.d_rt1)?;
        if !s.is_bounded() {
            return Err(Error::inconsistent(format!("{self} is not a bounded solution")));
        }
        Ok(s)
    }
}

/// A finished resolution: graph, boundary continuants, and the step
/// trace.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Resolution {
    pub k1: i64,
    pub k2: i64,
    pub graph: ResolutionGraph,
    pub sbar: SbarRecord,
    pub trace: Vec<TraceStep>,
    pub state: ResolutionState,
}

impl Resolution {
    pub fn blowup_count(&self) -> usize {
        self.trace.len()
    }

    /// `true` when the chain is the degenerate one (center at the end;
    /// equivalently all non-final weights are 2; equivalently `k2 = 1`).
    pub fn is_degenerate(&self) -> bool {
        self.graph.chain.right.is_empty()
    }

    /// Intersection matrix of the exceptional components in chain order.
    pub fn intersection_matrix(&self) -> IntMatrix {
        let diag: Vec<i64> = self.graph.chain.weights().iter().map(|&w| -w).collect();
        IntMatrix::tridiagonal(&diag, 1)
    }
}

/// Runs the engine to the end and assembles the dual graph.
pub fn resolve(k1: i64, k2: i64) -> Result<Resolution> {
    let mut state = ResolutionState::initial(k1, k2)?;
    while !state.is_terminal() {
        state = state.blow_up_once()?;
    }
    let graph = extract_graph(&state)?;
    let sbar = sbar(&state)?;
    Ok(Resolution { k1, k2, trace: state.trace.clone(), graph, sbar, state })
}

/// Reads the chain out of a terminal state: components form a path with
/// the first-created component at the origin end and the last-created
/// (the −1 curve, carrying the branch vertex) at the center.
fn extract_graph(state: &ResolutionState) -> Result<ResolutionGraph> {
    let n = state.self_intersections.len();
    let attach = state
        .attach
        .ok_or_else(|| Error::invalid("graph extraction needs a terminal state"))?;
    let mut neighbors: Vec<Vec<ComponentId>> = vec![Vec::new(); n];
    for &(a, b) in &state.adjacency {
        neighbors[a].push(b);
        neighbors[b].push(a);
    }
    let order = if n == 1 {
        vec![0]
    } else {
        if neighbors[0].len() != 1 {
            return Err(Error::inconsistent("first component is not a chain end"));
        }
        let mut order = vec![0];
        let mut prev = usize::MAX;
        let mut cur = 0;
        while order.len() < n {
            let next = *neighbors[cur]
                .iter()
                .find(|&&c| c != prev)
                .ok_or_else(|| Error::inconsistent("exceptional curve is not a chain"))?;
            order.push(next);
            prev = cur;
            cur = next;
        }
        order
    };
    let weights: Vec<i64> = order.iter().map(|&c| -state.self_intersections[c]).collect();
    let center = order
        .iter()
        .position(|&c| c == attach)
        .ok_or_else(|| Error::inconsistent("branch component missing from chain"))?;
    if weights[center] != 1 {
        return Err(Error::inconsistent("branch vertex not on the −1 component"));
    }
    if weights.iter().enumerate().any(|(i, &w)| i != center && w < 2) {
        return Err(Error::inconsistent("off-center weight below 2"));
    }
    let chain = CenteredChain::new(
        WeightedChain::new(weights[..center].to_vec()),
        1,
        WeightedChain::new(weights[center + 1..].to_vec()),
    );
    Ok(ResolutionGraph { chain, branch_vertex_at: center, component_order: order })
}

/// Boundary continuants of a terminal state, with the degenerate
/// conventions `(d_lt0, 1, d_lt1, 0)` for an end-center chain and
/// `(1,1,0,0)` for the single-blowup chain.
pub fn sbar(state: &ResolutionState) -> Result<SbarRecord> {
    let graph = extract_graph(state)?;
    let c = &graph.chain;
    let record = SbarRecord {
        d_lt0: c.d_lt(0)?,
        d_rt0: c.d_rt(0)?,
        d_lt1: c.d_lt(1)?,
        d_rt1: c.d_rt(1)?,
    };
    record.as_sol()?;
    Ok(record)
}

/// Minimal-resolution chain of the cyclic quotient singularity of type
/// `(k, q)`: the minus-continued-fraction chain of `k/q`.
pub fn quotient_resolution(k: i64, q: i64) -> Result<WeightedChain> {
    let chain = chains::hj_expand(k, q)?;
    debug_assert_eq!(chains::pi1_order(&chain)?, k);
    Ok(chain)
}

/// Number of blowups at the moving point needed to regularize the
/// degree-`k` cyclic quotient map of type `(k, q)` along a section:
/// exactly `q`. The complement identity `delta(k,q) + delta(k,k−q) = k`
/// holds for all coprime pairs.
pub fn delta(k: i64, q: i64) -> Result<i64> {
    if !(k > q && q >= 1) || !coprime(k, q) {
        return Err(Error::invalid(format!("need coprime k > q >= 1, got ({k},{q})")));
    }
    Ok(q)
}

/// Relative count for a partial quotient: with `k = k1·k2`
/// (`gcd(k1,k2) = 1`) and `q = m1·k1 + q1`, `0 <= q1 < k1`, returns `m1`.
///
/// The self-intersection ledger `−k + q = k1·(−k2 + m1) + q1` is the
/// bookkeeping form of the same statement.
pub fn delta_rel(k: i64, q: i64, k1: i64) -> Result<i64> {
    if k1 < 1 || k % k1 != 0 {
        return Err(Error::invalid(format!("{k1} does not divide {k}")));
    }
    let k2 = k / k1;
    if !coprime(k1, k2) {
        return Err(Error::invalid(format!("cofactor {k2} shares a factor with {k1}")));
    }
    if !(k > q && q >= 1) || !coprime(k, q) {
        return Err(Error::invalid(format!("need coprime k > q >= 1, got ({k},{q})")));
    }
    let q1 = q % k1;
    let m1 = (q - q1) / k1;
    debug_assert_eq!(-k + q, k1 * (-k2 + m1) + q1);
    Ok(m1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diophantine::pr_inverse;
    use crate::orbit::{EuclidStep::{E1, E2}, Orbit};

    #[test]
    fn resolve_basic_examples() {
        let r = resolve(1, 1).unwrap();
        assert_eq!(r.blowup_count(), 1);
        assert_eq!(r.graph.chain.weights(), vec![1]);
        assert_eq!(r.sbar, SbarRecord { d_lt0: 1, d_rt0: 1, d_lt1: 0, d_rt1: 0 });

        let r = resolve(2, 1).unwrap();
        assert_eq!(r.blowup_count(), 2);
        assert_eq!(r.graph.chain.weights(), vec![2, 1]);
        assert!(r.is_degenerate());
        assert_eq!(r.sbar, SbarRecord { d_lt0: 2, d_rt0: 1, d_lt1: 1, d_rt1: 0 });

        let r = resolve(5, 3).unwrap();
        assert_eq!(r.blowup_count(), 4);
        assert_eq!(r.graph.chain.weights(), vec![3, 2, 1, 3]);
        assert_eq!(r.graph.branch_vertex_at, 2);
        assert_eq!(r.sbar, SbarRecord { d_lt0: 5, d_rt0: 3, d_lt1: 3, d_rt1: 1 });
        assert_eq!(
            r.trace.iter().map(|t| t.label).collect::<Vec<_>>(),
            vec![E2, E2, E1, E2]
        );
    }

    #[test]
    fn blow_up_once_examples() {
        let s = ResolutionState::initial(5, 3).unwrap();
        let s1 = s.blow_up_once().unwrap();
        assert_eq!(s1.exponents, (3, 2)); // subtract then reorder
        assert!(s1.trace[0].swapped);
        assert_eq!(s1.self_intersections, vec![-1]);

        let s = ResolutionState::initial(2, 1).unwrap();
        let s1 = s.blow_up_once().unwrap();
        assert_eq!(s1.exponents, (1, 1));
        assert!(!s1.trace[0].swapped);

        let done = resolve(3, 2).unwrap().state;
        assert!(done.blow_up_once().is_err());
    }

    #[test]
    fn last_component_is_minus_one() {
        for (k1, k2) in [(1, 1), (2, 1), (7, 1), (5, 3), (8, 5), (12, 7)] {
            let r = resolve(k1, k2).unwrap();
            let last = r.state.self_intersections.len() - 1;
            assert_eq!(r.state.self_intersections[last], -1);
            assert_eq!(r.state.attach, Some(last));
        }
    }

    #[test]
    fn eight_five_walkthrough() {
        // worked out by hand through the charts
        let r = resolve(8, 5).unwrap();
        assert_eq!(r.graph.chain.weights(), vec![3, 3, 1, 2, 3]);
        assert_eq!(r.graph.component_order, vec![0, 2, 4, 3, 1]);
        assert_eq!(r.sbar, SbarRecord { d_lt0: 8, d_rt0: 5, d_lt1: 3, d_rt1: 3 });
    }

    #[test]
    fn graph_matches_fraction_prediction_small() {
        for k1 in 1..=40i64 {
            for k2 in 1..=k1 {
                if !coprime(k1, k2) {
                    continue;
                }
                let r = resolve(k1, k2).unwrap();
                let predicted =
                    chains::orbit_chain(&pr_inverse(&Orbit::new(k1, k2).unwrap()).unwrap())
                        .unwrap();
                assert_eq!(r.graph.chain, predicted, "({k1},{k2})");
                assert_eq!(
                    r.blowup_count() as u32,
                    crate::orbit::n_euclid(k1, k2).unwrap() + 1
                );
            }
        }
    }

    #[test]
    fn intersection_matrix_is_unimodular_negative_definite() {
        for (k1, k2) in [(1, 1), (4, 1), (5, 2), (9, 7), (11, 4)] {
            let r = resolve(k1, k2).unwrap();
            let m = r.intersection_matrix();
            assert!(m.is_negative_definite().unwrap());
            assert_eq!(m.determinant().unwrap().abs(), 1);
        }
    }

    #[test]
    fn quotient_and_delta_examples() {
        assert_eq!(quotient_resolution(5, 3).unwrap().weights, vec![2, 3]);
        assert_eq!(quotient_resolution(2, 1).unwrap().weights, vec![2]);
        assert_eq!(quotient_resolution(5, 2).unwrap().weights, vec![3, 2]);

        assert_eq!(delta(5, 2).unwrap(), 2);
        assert_eq!(delta(5, 3).unwrap(), 3);
        assert_eq!(delta(5, 2).unwrap() + delta(5, 3).unwrap(), 5);
        assert_eq!(delta(7, 1).unwrap(), 1);

        assert_eq!(delta_rel(6, 5, 2).unwrap(), 2);
        assert_eq!(delta_rel(6, 1, 2).unwrap(), 0);
        assert_eq!(delta_rel(15, 13, 5).unwrap(), 2);
        // trivial divisor: the relative count is the absolute one
        assert_eq!(delta_rel(6, 5, 1).unwrap(), delta(6, 5).unwrap());
        assert!(delta_rel(15, 13, 4).is_err()); // 4 does not divide 15
        assert!(delta_rel(12, 5, 2).is_err()); // cofactor 6 not coprime to 2
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            // randomized larger pairs than the deterministic sweeps
            #[test]
            fn engine_matches_prediction(k1 in 2i64..1200, shift in 1i64..1200) {
                let k2 = 1 + shift % (k1 - 1).max(1);
                prop_assume!(coprime(k1, k2));
                let (k1, k2) = if k1 >= k2 { (k1, k2) } else { (k2, k1) };
                let r = resolve(k1, k2).unwrap();
                let predicted =
                    chains::orbit_chain(&pr_inverse(&Orbit::new(k1, k2).unwrap()).unwrap())
                        .unwrap();
                prop_assert_eq!(&r.graph.chain, &predicted);
                prop_assert_eq!(
                    r.blowup_count() as u32,
                    crate::orbit::n_euclid(k1, k2).unwrap() + 1
                );
                prop_assert_eq!(r.sbar.as_sol().unwrap().as_tuple().0, k1);
            }
        }
    }

    #[test]
    fn degeneracy_iff_smooth_side() {
        for k1 in 1..=30i64 {
            for k2 in 1..=k1 {
                if coprime(k1, k2) {
                    let r = resolve(k1, k2).unwrap();
                    assert_eq!(r.is_degenerate(), k2 == 1, "({k1},{k2})");
                    // degenerate chains are all 2s before the final 1
                    if r.is_degenerate() {
                        let w = r.graph.chain.weights();
                        assert!(w[..w.len() - 1].iter().all(|&x| x == 2));
                    }
                }
            }
        }
    }
}
