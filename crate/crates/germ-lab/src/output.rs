//! Rendering helpers shared by the CLI binary and the examples: plain
//! tables, JSON documents, and Graphviz DOT for the tree and the chain
//! graphs.

use serde::Serialize;
use serde_json::json;

use crate::blowup::Resolution;
use crate::chains::WeightedChain;
use crate::diophantine::{AuxSol, DioSol4, ExtSol8};
use crate::error::Result;
use crate::monodromy::GermClass;
use crate::orbit::{self, EuclidStep, Orbit};
use crate::verify::VerifyReport;

/// Output formats of the CLI.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Table,
    Json,
    Dot,
}

pub fn to_json_pretty<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("library types serialize")
}

fn dot_escape(s: &str) -> String {
    s.replace('"', "\\\"")
}

/// DOT rendering of the orbit tree up to a level: edges carry the
/// Euclid-step labels and point toward the root.
pub fn tree_dot(level: u32) -> Result<String> {
    let mut out = String::from("digraph orbit_tree {\n  rankdir=RL;\n");
    out.push_str("  \"{1,0}\" [shape=box];\n");
    out.push_str(&format!("  \"{}\" -> \"{}\" [label=\"{}\"];\n", Orbit::base(), Orbit::root(), EuclidStep::E2));
    for lvl in orbit::levels_up_to(level)? {
        for o in lvl {
            if o.is_base() {
                continue;
            }
            let (parent, step) = orbit::euclid_step(&o)?;
            out.push_str(&format!(
                "  \"{}\" -> \"{}\" [label=\"{}\"];\n",
                dot_escape(&o.to_string()),
                dot_escape(&parent.to_string()),
                step
            ));
        }
    }
    out.push_str("}\n");
    Ok(out)
}

/// Table of the tree levels with decorations.
pub fn tree_table(level: u32) -> Result<String> {
    let mut out = String::from("level  orbits\n");
    for (i, lvl) in orbit::levels_up_to(level)?.iter().enumerate() {
        let row: Vec<String> = lvl
            .iter()
            .map(|o| {
                let d = crate::diophantine::pr_inverse(o).expect("tree orbits decorate");
                format!("{d}")
            })
            .collect();
        out.push_str(&format!("{:>5}  {}\n", i + 1, row.join(" ")));
    }
    Ok(out)
}

/// JSON document of the tree levels.
pub fn tree_json(level: u32) -> Result<String> {
    let levels = orbit::levels_up_to(level)?;
    let doc: Vec<serde_json::Value> = levels
        .iter()
        .enumerate()
        .map(|(i, lvl)| {
            json!({
                "level": i + 1,
                "orbits": lvl,
            })
        })
        .collect();
    Ok(to_json_pretty(&doc))
}

/// DOT rendering of a plain weighted chain.
pub fn chain_dot(chain: &WeightedChain, name: &str) -> String {
    let mut out = format!("graph {name} {{\n  rankdir=LR;\n");
    for (i, w) in chain.weights.iter().enumerate() {
        out.push_str(&format!("  v{} [label=\"{}\"];\n", i + 1, w));
    }
    for i in 1..chain.len() {
        out.push_str(&format!("  v{i} -- v{};\n", i + 1));
    }
    out.push_str("}\n");
    out
}

/// JSON for an expansion of `k/q`.
pub fn hj_json(k: i64, q: i64, chain: &WeightedChain) -> Result<String> {
    let check_full = crate::chains::continuant(&chain.weights)?;
    let check_tail = crate::chains::continuant(&chain.weights[1.min(chain.len())..])?;
    Ok(to_json_pretty(&json!({
        "k": k,
        "q": q,
        "weights": chain.weights,
        "checks": [
            {"name": "continuant equals k", "lhs": check_full, "rhs": k, "ok": check_full == k},
            {"name": "tail continuant equals q", "lhs": check_tail, "rhs": q, "ok": check_tail == q},
        ],
    })))
}

/// DOT rendering of a resolution graph: the weighted chain plus the
/// double-circled, unweighted branch vertex on the center.
pub fn resolution_dot(r: &Resolution) -> String {
    let weights = r.graph.chain.weights();
    let mut out = String::from("graph resolution {\n  rankdir=LR;\n");
    out.push_str("  b [shape=doublecircle, label=\"b\"];\n");
    for (i, w) in weights.iter().enumerate() {
        out.push_str(&format!("  v{} [label=\"{}\"];\n", i + 1, w));
    }
    for i in 1..weights.len() {
        out.push_str(&format!("  v{i} -- v{};\n", i + 1));
    }
    out.push_str(&format!("  b -- v{};\n", r.graph.branch_vertex_at + 1));
    out.push_str("}\n");
    out
}

/// JSON for a resolution, with or without the step trace.
pub fn resolution_json(r: &Resolution, with_trace: bool) -> String {
    let mut doc = json!({
        "k1": r.k1,
        "k2": r.k2,
        "weights": r.graph.chain.weights(),
        "center_index": r.graph.branch_vertex_at + 1,
        "blowups": r.blowup_count(),
        "sbar": [r.sbar.d_lt0, r.sbar.d_rt0, r.sbar.d_lt1, r.sbar.d_rt1],
        "degenerate": r.is_degenerate(),
    });
    if with_trace {
        doc["trace"] = serde_json::to_value(&r.trace).expect("trace serializes");
    }
    to_json_pretty(&doc)
}

pub fn resolution_table(r: &Resolution, with_trace: bool) -> String {
    let mut out = format!(
        "curve x^{} - y^{}\nblowups      {}\nchain        {:?} (center at position {})\nboundary     {}\ndegenerate   {}\n",
        r.k1,
        r.k2,
        r.blowup_count(),
        r.graph.chain.weights(),
        r.graph.branch_vertex_at + 1,
        r.sbar,
        r.is_degenerate(),
    );
    if with_trace {
        out.push_str("trace\n");
        for (i, t) in r.trace.iter().enumerate() {
            out.push_str(&format!(
                "  {:>3}  exponents ({},{})  label {}  swapped {}\n",
                i + 1,
                t.exponents.0,
                t.exponents.1,
                t.label,
                t.swapped
            ));
        }
    }
    out
}

/// JSON for a solved tuple including the residual checks.
pub fn dio_solution_json(s: &DioSol4, aux: Option<&AuxSol>) -> Result<String> {
    let res = crate::diophantine::eq1_residual(s.k1, s.k2, s.q1, s.q2)?;
    let mut doc = json!({
        "k1": s.k1, "k2": s.k2, "q1": s.q1, "q2": s.q2,
        "bounded": s.is_bounded(),
        "extendable": s.is_extendable(),
        "checks": [
            {"name": "defining equation residual", "value": res, "ok": res == 0},
        ],
    });
    if let Some(a) = aux {
        doc["aux"] = json!({"a1": a.a1, "a2": a.a2});
    }
    Ok(to_json_pretty(&doc))
}

/// JSON for a decorated orbit produced by the left-column lift,
/// including the residual check.
pub fn decorated_json(d: &crate::diophantine::DecoratedOrbit) -> Result<String> {
    let (k1, q1) = d.left();
    let (k2, q2) = d.right();
    let res = crate::diophantine::eq1_residual(k1, k2, q1, q2)?;
    Ok(to_json_pretty(&json!({
        "k1": k1, "q1": q1, "k2": k2, "q2": q2,
        "checks": [
            {"name": "defining equation residual", "value": res, "ok": res == 0},
        ],
    })))
}

/// JSON for an eight-component extension including every residual.
pub fn extension_json(e: &ExtSol8) -> Result<String> {
    let (r3a, r3b) = e.eq3_residuals()?;
    Ok(to_json_pretty(&json!({
        "k1": e.k1, "k2": e.k2, "q1": e.q1, "q2": e.q2,
        "q3": e.q3, "q4": e.q4, "m1": e.m1, "m2": e.m2,
        "checks": [
            {"name": "cubic residual", "value": e.eq2_residual()?, "ok": e.eq2_residual()? == 0},
            {"name": "left decomposition residual", "value": r3a, "ok": r3a == 0},
            {"name": "right decomposition residual", "value": r3b, "ok": r3b == 0},
            {"name": "sum identity residual", "value": e.sum_identity_residual()?, "ok": e.sum_identity_residual()? == 0},
        ],
    })))
}

/// JSON for a germ classification.
pub fn classification_json(c: &GermClass, with_witness: bool) -> String {
    let mut doc = json!({
        "k1": c.k1,
        "k2": c.k2,
        "family": c.family.to_string(),
        "degree": c.degree,
        "mu": c.mu,
        "class_count": c.class_count,
        "cross_checked": c.cross_checked,
        "subcase": c.subcase.map(|t| t.to_string()),
    });
    if with_witness {
        if let Some(w) = &c.witness {
            doc["witness"] = json!({
                "a": w.a.cycle_notation(),
                "t": w.t.cycle_notation(),
                "b": w.b.cycle_notation(),
            });
        }
    }
    to_json_pretty(&doc)
}

pub fn classification_table(c: &GermClass, with_witness: bool) -> String {
    let degree =
        c.degree.map(|d| d.to_string()).unwrap_or_else(|| "-".to_string());
    let mut out = format!(
        "pair ({},{})\nfamily        {}\ndegree        {}\nmultiplicity  {}\nclasses       {}{}\n",
        c.k1,
        c.k2,
        c.family,
        degree,
        c.mu,
        c.class_count,
        if c.cross_checked { "" } else { " (not cross-checked)" },
    );
    if let Some(tag) = c.subcase {
        out.push_str(&format!("subcase       {tag}\n"));
    }
    if with_witness {
        if let Some(w) = &c.witness {
            out.push_str(&format!(
                "witness       a = {}, t = {}, b = {}\n",
                w.a.cycle_notation(),
                w.t.cycle_notation(),
                w.b.cycle_notation()
            ));
        }
    }
    out
}

pub fn verify_table(reports: &[VerifyReport]) -> String {
    let mut out = String::from("suite                      bound   cases  failures  ms\n");
    for r in reports {
        out.push_str(&format!(
            "{:<26} {:>5} {:>7} {:>9} {:>5}\n",
            r.suite, r.bound, r.cases, r.failure_count, r.wall_ms
        ));
        for f in &r.failures {
            out.push_str(&format!("    FAIL {}: {}\n", f.case, f.detail));
        }
    }
    out
}
