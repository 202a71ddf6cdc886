//! Batch cross-verification suites.
//!
//! Every identity the library rests on is replayed here over
//! configurable bounds, always through two independent routes (closed
//! form vs exhaustive scan, recurrence vs dense determinant, engine vs
//! chart substitution, formula layer vs monodromy enumeration). A suite
//! returns a [`VerifyReport`]; an empty failure list is the pass
//! condition.

use serde::{Deserialize, Serialize};
use std::time::Instant;

use crate::arith::coprime;
use crate::blowup::{self, charts};
use crate::chains::{
    self, chain_to_fraction, continuant, hj_expand, is_positive_definite, orbit_chain,
    prefix_continuants, row_expansion_check,
};
use crate::diophantine::{
    self, apply_h, decorated_levels, extend_to_8, extend_to_8_brute, pr, pr1, pr1_inverse,
    pr_inverse, solve_aux, solve_aux_brute, DecoratedOrbit, HGen,
};
use crate::error::{Error, Result};
use crate::matrix::IntMatrix;
use crate::monodromy::{
    self, datum_ledger, degree_two_count, excluded_tags,
    family_matches, for_each_permutation, smooth_classes, subcase_tag, symm_classify,
    LocalPi1Data, Perm,
};
use crate::orbit::{self, apply_action, euclid_step, n_euclid, path_to_root, Action, EuclidStep, Orbit};

/// Maximum number of failure details kept per report (the count is
/// always exact).
const MAX_FAILURE_DETAILS: usize = 25;

/// A single failed case: the inputs and both computed sides.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub case: String,
    pub detail: String,
}

/// Outcome of one suite run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub suite: String,
    pub bound: i64,
    pub cases: u64,
    pub failure_count: u64,
    /// First few failures, in sweep order.
    pub failures: Vec<Failure>,
    pub wall_ms: u64,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.failure_count == 0
    }
}

struct SuiteRun {
    cases: u64,
    failure_count: u64,
    failures: Vec<Failure>,
}

impl SuiteRun {
    fn new() -> Self {
        SuiteRun { cases: 0, failure_count: 0, failures: Vec::new() }
    }

    fn check(&mut self, ok: bool, case: &str, detail: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failure_count += 1;
            if self.failures.len() < MAX_FAILURE_DETAILS {
                self.failures.push(Failure { case: case.to_string(), detail: detail() });
            }
        }
    }

    fn finish(self, suite: &str, bound: i64, start: Instant) -> VerifyReport {
        VerifyReport {
            suite: suite.to_string(),
            bound,
            cases: self.cases,
            failure_count: self.failure_count,
            failures: self.failures,
            wall_ms: start.elapsed().as_millis() as u64,
        }
    }
}

/// Suite names in canonical order, with their default bounds.
pub const SUITES: &[(&str, i64, &str)] = &[
    ("orbit-tree", 300, "root-path replay, levels, freeness, step inverses (bound = max k1)"),
    ("projections", 300, "decoration bijections and the group action (bound = max k1)"),
    ("chain-identities", 500, "continued fractions, continuants, determinants (bound = max k)"),
    ("dio-extension", 100, "auxiliary pair and eight-component extension vs brute force (bound = max k1)"),
    ("resolution", 100, "blowup engine vs fraction prediction and chart oracle (bound = max k1)"),
    ("quotient-delta", 200, "quotient chains and blowup-count invariants (bound = max k)"),
    ("classification", 12, "germ families vs exhaustive monodromy enumeration (bound = max k1+k2, clamped to 16)"),
    ("transposition-generation", 7, "two-generator criterion in full symmetric groups (bound = max degree, clamped to 7)"),
];

pub fn suite_names() -> Vec<&'static str> {
    SUITES.iter().map(|&(n, _, _)| n).collect()
}

pub fn default_bound(name: &str) -> Option<i64> {
    SUITES.iter().find(|&&(n, _, _)| n == name).map(|&(_, b, _)| b)
}

/// Runs one suite; `bound` falls back to the suite default.
/// `monodromy` is accepted as an alias for the classification suite.
pub fn run_suite(name: &str, bound: Option<i64>) -> Result<VerifyReport> {
    let name = if name == "monodromy" { "classification" } else { name };
    let default =
        default_bound(name).ok_or_else(|| Error::UnknownSuite(name.to_string()))?;
    let bound = bound.unwrap_or(default).max(1);
    match name {
        "orbit-tree" => suite_orbit_tree(bound),
        "projections" => suite_projections(bound),
        "chain-identities" => suite_chain_identities(bound),
        "dio-extension" => suite_dio_extension(bound),
        "resolution" => suite_resolution(bound),
        "quotient-delta" => suite_quotient_delta(bound),
        "classification" => suite_classification(bound.min(16)),
        "transposition-generation" => suite_transposition_generation(bound.min(7)),
        _ => Err(Error::UnknownSuite(name.to_string())),
    }
}

/// Runs every suite, optionally fanning out over `threads` workers.
/// Reports come back sorted in canonical suite order regardless of
/// scheduling.
pub fn run_all(bound: Option<i64>, threads: usize) -> Result<Vec<VerifyReport>> {
    let names = suite_names();
    if threads <= 1 {
        return names.iter().map(|n| run_suite(n, bound)).collect();
    }
    let queue = std::sync::Mutex::new(names.iter().cloned().enumerate().collect::<Vec<_>>());
    let results = std::sync::Mutex::new(vec![None; names.len()]);
    std::thread::scope(|scope| {
        for _ in 0..threads.min(names.len()) {
            scope.spawn(|| loop {
                let job = queue.lock().unwrap().pop();
                let Some((idx, name)) = job else { break };
                let report = run_suite(name, bound);
                results.lock().unwrap()[idx] = Some(report);
            });
        }
    });
    results
        .into_inner()
        .unwrap()
        .into_iter()
        .map(|r| r.expect("all suites scheduled"))
        .collect()
}

fn coprime_pairs(max_k1: i64) -> Vec<(i64, i64)> {
    let mut out = Vec::new();
    for k1 in 1..=max_k1 {
        for k2 in 1..=k1 {
            if coprime(k1, k2) {
                out.push((k1, k2));
            }
        }
    }
    out
}

// ---------------------------------------------------------------------

fn suite_orbit_tree(bound: i64) -> Result<VerifyReport> {
    let start = Instant::now();
    let mut run = SuiteRun::new();

    for (k1, k2) in coprime_pairs(bound) {
        let o = Orbit::new(k1, k2)?;
        let path = path_to_root(&o)?;
        let replayed = path.replay()?;
        run.check(replayed == o, &format!("replay {o}"), || {
            format!("path {path} replays to {replayed}")
        });
        let n = n_euclid(k1, k2)?;
        run.check(path.len() as u32 == n, &format!("path length {o}"), || {
            format!("path length {} vs n_euclid {n}", path.len())
        });
        run.check(o.level()? == n + 1, &format!("level {o}"), || {
            format!("level {} vs n_euclid+1 {}", o.level().unwrap(), n + 1)
        });
    }

    // freeness: all orbits across levels 1..=14 are pairwise distinct
    let levels = orbit::levels_up_to(14)?;
    let mut seen = std::collections::HashSet::new();
    for (i, level) in levels.iter().enumerate() {
        let expected = if i == 0 { 1 } else { 1usize << i.saturating_sub(1) };
        run.check(level.len() == expected, &format!("level {} width", i + 1), || {
            format!("{} orbits vs expected {expected}", level.len())
        });
        for o in level {
            run.check(seen.insert(*o), &format!("freeness {o}"), || {
                format!("{o} reached twice")
            });
        }
    }

    // the Euclid step is a two-sided inverse of the actions
    for level in orbit::levels_up_to(12)? {
        for o in level {
            for letter in [Action::A, Action::B] {
                let child = apply_action(&o, letter)?;
                let (back, step) = euclid_step(&child)?;
                run.check(back == o, &format!("inverse {o}:{letter}"), || {
                    format!("{child} steps back to {back}")
                });
                if !o.is_base() {
                    run.check(
                        step.inverse_action() == letter,
                        &format!("label {o}:{letter}"),
                        || format!("step {step} inverts to {}", step.inverse_action()),
                    );
                }
            }
        }
    }

    Ok(run.finish("orbit-tree", bound, start))
}

// ---------------------------------------------------------------------

fn suite_projections(bound: i64) -> Result<VerifyReport> {
    let start = Instant::now();
    let mut run = SuiteRun::new();

    let levels = decorated_levels(20)?;
    let mut pr1_images = std::collections::HashSet::new();
    for level in &levels {
        for o in level {
            let base = pr(o);
            let again = pr_inverse(&base)?;
            run.check(again == *o, &format!("pr_inverse∘pr {o}"), || {
                format!("{base} decorates to {again}")
            });
            let (k1, q1) = o.left();
            let (k2, q2) = o.right();
            run.check(
                coprime(k1, k2)
                    && (q1 == 0 || coprime(k1, q1))
                    && (q2 == 0 || coprime(k2, q2)),
                &format!("column coprimality {o}"),
                || format!("{o} has a common factor in a column"),
            );
            if *o != DecoratedOrbit::base() {
                run.check(
                    k2 <= q1 + q2 && q1 + q2 < k1,
                    &format!("bounds {o}"),
                    || format!("k2={k2} q1+q2={} k1={k1}", q1 + q2),
                );
                let p1 = pr1(o);
                run.check(pr1_images.insert(p1), &format!("pr1 injective {o}"), || {
                    format!("pr1 image {p1} repeated")
                });
                let back = pr1_inverse(p1.k1(), p1.k2())?;
                run.check(back == *o, &format!("pr1_inverse∘pr1 {o}"), || {
                    format!("({},{}) lifts to {back}", p1.k1(), p1.k2())
                });
            }
        }
    }

    // commutation of decoration with the actions, and the decorated
    // Euclid step as a two-sided inverse
    for level in &levels[..12.min(levels.len())] {
        for o in level {
            for letter in [Action::A, Action::B] {
                let child = diophantine::decorated_action(o, letter)?;
                let lhs = pr(&child);
                let rhs = apply_action(&pr(o), letter)?;
                run.check(lhs == rhs, &format!("commute {o}:{letter}"), || {
                    format!("{lhs} vs {rhs}")
                });
                let (back, _) = diophantine::decorated_euclid_step(&child)?;
                run.check(back == *o, &format!("decorated inverse {o}:{letter}"), || {
                    format!("{child} steps back to {back}")
                });
            }
        }
    }

    // the group generators preserve the equation and invert each other,
    // over every bounded solution with k1 up to 200 (not just the
    // shallow tree levels: the decoration of any coprime pair)
    for (k1, k2) in coprime_pairs(bound.min(200)) {
        let o = pr_inverse(&Orbit::new(k1, k2)?)?;
        for s in [o.as_sol(), apply_h(&o.as_sol(), HGen::H2)?] {
            for gen in [HGen::H1, HGen::H2, HGen::H1Inv] {
                if gen == HGen::H1Inv && s.k1 == s.k2 {
                    continue; // would leave the positive quadrant
                }
                let moved = apply_h(&s, gen);
                run.check(moved.is_ok(), &format!("h-action {s}:{gen:?}"), || {
                    format!("{:?}", moved.as_ref().err())
                });
            }
            let round = apply_h(&apply_h(&s, HGen::H1)?, HGen::H1Inv)?;
            run.check(round == s, &format!("h1 inverse {s}"), || format!("{round} vs {s}"));
        }
    }

    // the modular lift hits every coprime column
    for k1 in 2..=bound {
        for q1 in 1..k1 {
            if !coprime(k1, q1) {
                continue;
            }
            let lifted = pr1_inverse(k1, q1)?;
            run.check(
                lifted.left() == (k1, q1),
                &format!("pr1_inverse({k1},{q1})"),
                || format!("left column {:?}", lifted.left()),
            );
        }
    }

    Ok(run.finish("projections", bound, start))
}

// ---------------------------------------------------------------------

fn suite_chain_identities(bound: i64) -> Result<VerifyReport> {
    let start = Instant::now();
    let mut run = SuiteRun::new();

    // expansion round-trips and minor monotonicity
    for k in 2..=bound {
        for q in 1..k {
            if !coprime(k, q) {
                continue;
            }
            let c = hj_expand(k, q)?;
            run.check(c.weights.iter().all(|&w| w >= 2), &format!("weights {k}/{q}"), || {
                format!("{c}")
            });
            let back = chain_to_fraction(&c)?;
            run.check(back == (k, q), &format!("round-trip {k}/{q}"), || {
                format!("{c} reads back as {back:?}")
            });
            let rev = continuant(&c.reversed().weights)?;
            run.check(rev == k, &format!("reversal {k}/{q}"), || {
                format!("reversed continuant {rev}")
            });
            let minors = prefix_continuants(&c.weights)?;
            run.check(
                minors.windows(2).all(|w| w[0] < w[1]) && minors.first().is_none_or(|&d| d > 0),
                &format!("minors {k}/{q}"),
                || format!("{minors:?}"),
            );
        }
    }

    // center identity on the decorated sweep
    for level in decorated_levels(20)? {
        for o in level {
            let chain = orbit_chain(&o)?;
            let value = row_expansion_check(&chain)?;
            run.check(value == 1, &format!("center identity {o}"), || {
                format!("chain {chain} has determinant {value}")
            });
        }
    }

    // dense-determinant cross-checks on short chains
    let mut test_chains: Vec<Vec<i64>> = Vec::new();
    for k in 2..=40i64 {
        for q in 1..k {
            if coprime(k, q) {
                let c = hj_expand(k, q)?;
                if c.len() <= 12 {
                    test_chains.push(c.weights);
                }
            }
        }
    }
    for n in 1..=12usize {
        test_chains.push(vec![2; n]);
    }
    // arbitrary integer weights, including non-definite ones
    let grid = [-2i64, 0, 1, 3];
    for n in 1..=4usize {
        let mut idx = vec![0usize; n];
        loop {
            test_chains.push(idx.iter().map(|&i| grid[i]).collect());
            let mut carry = n;
            for pos in (0..n).rev() {
                idx[pos] += 1;
                if idx[pos] < grid.len() {
                    carry = pos;
                    break;
                }
                idx[pos] = 0;
            }
            if carry == n {
                break;
            }
        }
    }
    for ws in &test_chains {
        let d = continuant(ws)?;
        let plus = IntMatrix::tridiagonal(ws, 1).determinant()?;
        let minus = IntMatrix::tridiagonal(ws, -1).determinant()?;
        run.check(plus == d && minus == d, &format!("tridiagonal {ws:?}"), || {
            format!("dets {plus}/{minus} vs continuant {d}")
        });
        let negated: Vec<i64> = ws.iter().map(|&w| -w).collect();
        let neg = IntMatrix::tridiagonal(&negated, 1).determinant()?;
        let sign = if ws.len() % 2 == 0 { 1 } else { -1 };
        run.check(neg == sign * d, &format!("sign rule {ws:?}"), || {
            format!("negated det {neg} vs {}", sign * d)
        });
        // Sylvester route for definiteness
        let chain = chains::WeightedChain::new(ws.clone());
        let by_minors = (1..=ws.len()).all(|k| {
            IntMatrix::tridiagonal(&ws[..k], 1).determinant().is_ok_and(|d| d > 0)
        });
        run.check(
            is_positive_definite(&chain) == by_minors,
            &format!("definiteness {ws:?}"),
            || "prefix continuants disagree with dense minors".to_string(),
        );
    }

    Ok(run.finish("chain-identities", bound, start))
}

// ---------------------------------------------------------------------

fn suite_dio_extension(bound: i64) -> Result<VerifyReport> {
    let start = Instant::now();
    let mut run = SuiteRun::new();

    for (k1, k2) in coprime_pairs(bound) {
        if k2 < 2 || k1 == k2 {
            continue;
        }
        let o = pr_inverse(&Orbit::new(k1, k2)?)?;
        for s in [o.as_sol(), apply_h(&o.as_sol(), HGen::H2)?] {
            let aux = solve_aux(&s)?;
            let brute = solve_aux_brute(&s)?;
            run.check(brute == vec![(aux.a1, aux.a2)], &format!("aux {s}"), || {
                format!("closed form ({},{}) vs scan {brute:?}", aux.a1, aux.a2)
            });
            let ext = extend_to_8(&s)?;
            let brute = extend_to_8_brute(&s)?;
            run.check(brute == vec![ext], &format!("extension {s}"), || {
                format!("closed form {ext} vs scan count {}", brute.len())
            });
            run.check(
                ext.sum_identity_residual()? == 0,
                &format!("sum identity {s}"),
                || format!("{ext}"),
            );
        }
    }

    Ok(run.finish("dio-extension", bound, start))
}

// ---------------------------------------------------------------------

fn suite_resolution(bound: i64) -> Result<VerifyReport> {
    let start = Instant::now();
    let mut run = SuiteRun::new();

    for (k1, k2) in coprime_pairs(bound) {
        let r = blowup::resolve(k1, k2)?;
        let decorated = pr_inverse(&Orbit::new(k1, k2)?)?;
        let predicted = orbit_chain(&decorated)?;
        run.check(r.graph.chain == predicted, &format!("dual graph ({k1},{k2})"), || {
            format!("engine {:?} vs prediction {:?}", r.graph.chain.weights(), predicted.weights())
        });
        let n = n_euclid(k1, k2)?;
        run.check(
            r.blowup_count() as u32 == n + 1,
            &format!("blowup count ({k1},{k2})"),
            || format!("{} vs {}", r.blowup_count(), n + 1),
        );

        // trace labels: the root-path letters reversed, then the final ε2
        let path = path_to_root(&Orbit::new(k1, k2)?)?;
        let mut expected: Vec<EuclidStep> = path
            .0
            .iter()
            .rev()
            .map(|&a| match a {
                Action::A => EuclidStep::E1,
                Action::B => EuclidStep::E2,
            })
            .collect();
        expected.push(EuclidStep::E2);
        let got: Vec<EuclidStep> = r.trace.iter().map(|t| t.label).collect();
        run.check(got == expected, &format!("trace ({k1},{k2})"), || {
            format!("{got:?} vs {expected:?}")
        });

        // boundary data: a bounded solution equal to the decoration
        let sbar_sol = r.sbar.as_sol();
        run.check(sbar_sol.is_ok(), &format!("sbar membership ({k1},{k2})"), || {
            format!("{}", r.sbar)
        });
        if let Ok(s) = sbar_sol {
            run.check(s == decorated.as_sol(), &format!("sbar value ({k1},{k2})"), || {
                format!("{s} vs {}", decorated.as_sol())
            });
        }
        if r.blowup_count() >= 2 {
            run.check(
                r.sbar.d_lt0 > r.sbar.d_rt0,
                &format!("left dominates ({k1},{k2})"),
                || format!("{}", r.sbar),
            );
        }

        // Mumford side: negative definite, unimodular
        let m = r.intersection_matrix();
        run.check(
            m.is_negative_definite()? && m.determinant()?.abs() == 1,
            &format!("intersection matrix ({k1},{k2})"),
            || format!("det {}", m.determinant().unwrap()),
        );

        run.check(
            r.is_degenerate() == (k2 == 1),
            &format!("degeneracy ({k1},{k2})"),
            || format!("degenerate={} k2={k2}", r.is_degenerate()),
        );

        if k1 <= bound.min(12) {
            let agreement = charts::agree_with_engine(k1, k2);
            run.check(agreement.is_ok(), &format!("chart oracle ({k1},{k2})"), || {
                format!("{:?}", agreement.err())
            });
        }
    }

    Ok(run.finish("resolution", bound, start))
}

// ---------------------------------------------------------------------

fn suite_quotient_delta(bound: i64) -> Result<VerifyReport> {
    let start = Instant::now();
    let mut run = SuiteRun::new();

    for k in 2..=bound {
        for q in 1..k {
            if !coprime(k, q) {
                continue;
            }
            run.check(blowup::delta(k, q)? == q, &format!("delta({k},{q})"), String::new);
            run.check(
                blowup::delta(k, q)? + blowup::delta(k, k - q)? == k,
                &format!("delta sum ({k},{q})"),
                || {
                    format!(
                        "{} + {} != {k}",
                        blowup::delta(k, q).unwrap(),
                        blowup::delta(k, k - q).unwrap()
                    )
                },
            );
            let chain = blowup::quotient_resolution(k, q)?;
            run.check(
                chain == hj_expand(k, q)? && chains::pi1_order(&chain)? == k,
                &format!("quotient chain ({k},{q})"),
                || format!("{chain}"),
            );
        }
    }

    // relative counts and the self-intersection ledger
    let rel_bound = bound.min(120);
    for k in 2..=rel_bound {
        for k1 in 1..=k {
            if k % k1 != 0 || !coprime(k1, k / k1) {
                continue;
            }
            let k2 = k / k1;
            for q in 1..k {
                if !coprime(k, q) {
                    continue;
                }
                let m1 = blowup::delta_rel(k, q, k1)?;
                let q1 = q % k1;
                run.check(
                    q == m1 * k1 + q1 && (0..k2).contains(&m1),
                    &format!("delta_rel({k},{q},{k1}) decomposition"),
                    || format!("m1 = {m1}"),
                );
                run.check(
                    -k + q == k1 * (-k2 + m1) + q1,
                    &format!("delta_rel({k},{q},{k1}) ledger"),
                    || format!("m1 = {m1}, q1 = {q1}"),
                );
            }
        }
    }

    Ok(run.finish("quotient-delta", bound, start))
}

// ---------------------------------------------------------------------

/// Expected class count of one (pair, degree) cell from the formula
/// layer: one class for each family forcing that degree, none otherwise.
fn expected_cell_count(k1: i64, k2: i64, d: i64) -> Result<u32> {
    if d == 2 {
        return Ok(degree_two_count(k1, k2));
    }
    let mut n = 0;
    for (family, degree) in family_matches(k1, k2)? {
        if family != monodromy::Family::Double && degree == d {
            n += 1;
        }
    }
    Ok(n)
}

fn suite_classification(bound: i64) -> Result<VerifyReport> {
    let start = Instant::now();
    let mut run = SuiteRun::new();
    let cap = monodromy::DEFAULT_DEGREE_CAP;

    for k1 in 1..=bound {
        for k2 in 1..=k1.min(bound - k1) {
            if !coprime(k1, k2) {
                continue;
            }
            let mu = k2;
            let data = LocalPi1Data::from_pair(k1, k2)?;
            // every admissible degree, plus the range above the bound
            // where no class may survive
            for d in 2..=(cap as i64) {
                let expected = if d <= mu + 1 { expected_cell_count(k1, k2, d)? } else { 0 };
                let computed = if d == 2 {
                    if mu >= 2 {
                        // the ledger is a valid criterion here and must
                        // agree with the smooth-branch rule (no
                        // singular-branch pair carries a double cover)
                        monodromy::degree_two_smooth_classes(&data)?.len() as u32
                    } else {
                        degree_two_count(k1, k2)
                    }
                } else {
                    smooth_classes(&data, d as usize, cap)?.len() as u32
                };
                run.check(
                    computed == expected,
                    &format!("cell ({k1},{k2})@{d}"),
                    || format!("enumeration finds {computed}, families predict {expected}"),
                );
            }
            // classifier consistency
            let c = monodromy::classify(k1, k2)?;
            let want = u32::from(c.family != monodromy::Family::None);
            run.check(
                c.class_count == want && c.cross_checked,
                &format!("classify ({k1},{k2})"),
                || format!("family {} count {}", c.family, c.class_count),
            );
        }
    }

    // the three named examples
    let c = monodromy::classify(3, 2)?;
    run.check(
        c.family == monodromy::Family::N && c.degree == Some(3) && c.class_count == 1,
        "example (3,2)",
        || format!("{} @ {:?} × {}", c.family, c.degree, c.class_count),
    );
    let c = monodromy::classify(6, 5)?;
    run.check(
        c.family == monodromy::Family::O && c.degree == Some(5) && c.class_count == 1,
        "example (6,5)",
        || format!("{} @ {:?} × {}", c.family, c.degree, c.class_count),
    );
    let c = monodromy::classify(5, 3)?;
    run.check(
        c.family == monodromy::Family::None && c.class_count == 0,
        "example (5,3)",
        || format!("{} × {}", c.family, c.class_count),
    );

    Ok(run.finish("classification", bound, start))
}

// ---------------------------------------------------------------------

fn suite_transposition_generation(bound: i64) -> Result<VerifyReport> {
    let start = Instant::now();
    let mut run = SuiteRun::new();
    let d_max = bound.clamp(2, 7) as usize;

    // two-generator criterion, exhaustively per degree
    for d in 2..=d_max {
        let mut transpositions = Vec::new();
        for i in 0..d {
            for j in i + 1..d {
                transpositions.push(Perm::transposition(d, i, j)?);
            }
        }
        let mut all: Vec<Perm> = Vec::new();
        for_each_permutation(d, |p| all.push(p.clone()));
        for g1 in &all {
            for t in &transpositions {
                let v = symm_classify(g1, t)?;
                if !v.generates {
                    run.cases += 1;
                    continue;
                }
                run.check(
                    v.cycle_count <= 2,
                    &format!("cycle bound d={d} g1={g1} t={t}"),
                    || format!("{} cycles", v.cycle_count),
                );
                if v.cycle_count == 2 {
                    run.check(
                        v.product_cycle_lengths == vec![d],
                        &format!("product d={d} g1={g1} t={t}"),
                        || format!("{:?}", v.product_cycle_lengths),
                    );
                } else {
                    run.check(
                        v.reverse_product_cycle_lengths.len() == 2,
                        &format!("split d={d} g1={g1} t={t}"),
                        || format!("{:?}", v.reverse_product_cycle_lengths),
                    );
                }
            }
        }
    }

    // tag exclusions and forced shapes over the classification sweep
    let excluded = excluded_tags();
    let allowed: Vec<String> =
        vec!["(2,1)_{2_0}".into(), "(1,2)_{1_1}".into(), "(1,2)_{0_1}".into()];
    for k1 in 1..=12i64 {
        for k2 in 1..=k1.min(12 - k1) {
            if !coprime(k1, k2) {
                continue;
            }
            let data = LocalPi1Data::from_pair(k1, k2)?;
            for d in 3..=(k2 + 1).min(8) {
                for w in smooth_classes(&data, d as usize, 8)? {
                    let tag = subcase_tag(&w, &data)?;
                    run.check(
                        !excluded.contains(&tag) && allowed.contains(&tag.to_string()),
                        &format!("tag ({k1},{k2})@{d}"),
                        || format!("witness carries {tag}"),
                    );
                    // degree bound and generation, asserted not assumed
                    run.check(
                        d <= k2 + 1
                            && monodromy::generates_symmetric_with_transposition(&w.a, &w.t)?,
                        &format!("degree/generation ({k1},{k2})@{d}"),
                        || format!("degree {d} vs bound {}", k2 + 1),
                    );
                    // coprimality-forced shape in the product family
                    if tag.to_string() == "(2,1)_{2_0}" {
                        let lens = w.a.cycle_lengths();
                        run.check(
                            lens.len() == 2
                                && (lens[0] * lens[1]) as i64 == data.k_lt
                                && d == data.k_rt,
                            &format!("forced equalities ({k1},{k2})@{d}"),
                            || format!("cycles {lens:?} vs k_lt {}", data.k_lt),
                        );
                        let ledger = datum_ledger(&w, &data)?;
                        run.check(
                            ledger.center_self_intersection == -1,
                            &format!("ledger ({k1},{k2})@{d}"),
                            || format!("{}", ledger.center_self_intersection),
                        );
                    }
                }
            }
        }
    }

    // degrees above the bound stay empty (checked numerically up to the
    // enumeration cap)
    for (k1, k2) in [(3i64, 2i64), (4, 3), (5, 2), (6, 5), (5, 4), (9, 2)] {
        let data = LocalPi1Data::from_pair(k1, k2)?;
        for d in (k2 + 2)..=8 {
            if d < 3 {
                continue;
            }
            let n = smooth_classes(&data, d as usize, 8)?.len();
            run.check(n == 0, &format!("above bound ({k1},{k2})@{d}"), || {
                format!("{n} classes above the degree bound")
            });
        }
    }

    Ok(run.finish("transposition-generation", bound, start))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_suite_is_rejected() {
        assert!(matches!(run_suite("nope", None), Err(Error::UnknownSuite(_))));
    }

    #[test]
    fn small_bounds_pass() {
        for (name, _, _) in SUITES {
            let report = run_suite(name, Some(8)).unwrap();
            assert!(report.passed(), "{name}: {:?}", report.failures);
            assert!(report.cases > 0, "{name} ran nothing");
        }
    }

    #[test]
    fn run_all_is_ordered_and_parallel_agrees() {
        let seq = run_all(Some(6), 1).unwrap();
        let par = run_all(Some(6), 4).unwrap();
        let names: Vec<_> = seq.iter().map(|r| r.suite.clone()).collect();
        assert_eq!(names, suite_names());
        for (a, b) in seq.iter().zip(&par) {
            assert_eq!(a.suite, b.suite);
            assert_eq!(a.cases, b.cases);
            assert_eq!(a.failure_count, b.failure_count);
        }
    }

    #[test]
    fn report_json_round_trip() {
        let r = run_suite("quotient-delta", Some(12)).unwrap();
        let s = serde_json::to_string(&r).unwrap();
        assert_eq!(serde_json::from_str::<VerifyReport>(&s).unwrap(), r);
    }
}
