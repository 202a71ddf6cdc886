//! # germ-lab
//!
//! Exact-arithmetic toolkit for the combinatorics of binomial plane-curve
//! singularities `x^k1 − y^k2 = 0` with coprime exponents: how such a
//! singularity resolves, what invariants the resolution carries, and
//! which symmetric-group monodromy data live over it.
//!
//! Everything is integer arithmetic with overflow detection (no floats,
//! no randomness), and every nontrivial identity is cross-checked by an
//! independent route in [`verify`].
//!
//! ## Modules
//!
//! | module | contents |
//! |--------|----------|
//! | [`orbit`] | coprime pairs, the two expanding actions, the additive Euclid algorithm, the rooted orbit tree |
//! | [`diophantine`] | the solution lattice of `k1·k2 − k1·q2 − k2·q1 = 1`, decorated orbits, projections with constructive inverses, the eight-component extension |
//! | [`chains`] | continuants, minus continued fractions, weighted and centered chains |
//! | [`blowup`] | the blowup engine for `x^k1 − y^k2`, dual resolution graphs, cyclic-quotient invariants, the chart-substitution oracle |
//! | [`monodromy`] | local fundamental-group presentations, admissible permutation triples, the smoothness ledger, the germ classifier |
//! | [`verify`] | batch suites replaying every identity over configurable bounds |
//! | [`output`] | table / JSON / DOT rendering for the CLI and the examples |
//!
//! ## Quick example
//!
//! ```rust
//! use germ_lab::{blowup, chains, diophantine, orbit};
//!
//! // the dual graph of x^5 − y^3 ...
//! let r = blowup::resolve(5, 3).unwrap();
//! assert_eq!(r.graph.chain.weights(), vec![3, 2, 1, 3]);
//!
//! // ... is predicted exactly by the continued-fraction chain of the
//! // orbit's decoration
//! let o = orbit::Orbit::new(5, 3).unwrap();
//! let decorated = diophantine::pr_inverse(&o).unwrap();
//! assert_eq!(decorated.to_string(), "{5/3,3/1}");
//! assert_eq!(chains::orbit_chain(&decorated).unwrap(), r.graph.chain);
//! ```
//!
//! The `germ-lab` binary exposes the same functionality as subcommands
//! (`tree`, `dio`, `hj`, `resolve`, `classify`, `verify`); the crate's
//! `examples/` directory walks through each capability.

pub mod error;

mod arith;

pub mod blowup;
pub mod chains;
pub mod diophantine;
pub mod matrix;
pub mod monodromy;
pub mod orbit;
pub mod output;
pub mod verify;

pub use error::{Error, Result};
