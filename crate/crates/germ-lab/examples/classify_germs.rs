//! The germ classifier: which covers branch at `x^k1 − y^k2`, at which
//! degree, and with what monodromy.
//!
//! Run with `cargo run --example classify_germs`.

use germ_lab::monodromy::{
    classify, classify_all, enumerate_monodromy, smoothness_test, subcase_tag, LocalPi1Data,
};
use germ_lab::output;

fn main() -> germ_lab::Result<()> {
    // the three headline cases
    for (k1, k2) in [(3, 2), (6, 5), (5, 3)] {
        let c = classify(k1, k2)?;
        println!("{}", output::classification_table(&c, true));
    }

    // a pair can carry germs of two different degrees
    println!("every family matching (6,5):");
    for c in classify_all(6, 5)? {
        println!(
            "  family {} at degree {:?}: {} class(es)",
            c.family, c.degree, c.class_count
        );
    }

    // under the hood: enumerate admissible triples, then filter by the
    // smoothness ledger
    let data = LocalPi1Data::from_pair(8, 3)?;
    println!(
        "\n(8,3): boundary quotients ({},{}) and ({},{}), degree bound {}",
        data.k_lt, data.q_lt, data.k_rt, data.q_rt, data.degree_bound
    );
    for d in 3..=4usize {
        let admissible = enumerate_monodromy(d, data.k_lt, data.k_rt)?;
        let mut lines = Vec::new();
        for datum in &admissible {
            let smooth = smoothness_test(datum, &data)?;
            let tag = subcase_tag(datum, &data)?;
            lines.push(format!(
                "    {} tag {tag} smooth {smooth}",
                datum.a.cycle_notation()
            ));
        }
        println!("  degree {d}: {} admissible class(es)", admissible.len());
        for l in lines {
            println!("{l}");
        }
    }

    // sweep a small table
    println!("\nclassification of all pairs with k1+k2 <= 12:");
    println!("  pair      family  degree  classes");
    for k1 in 1..=11i64 {
        for k2 in 1..=k1.min(12 - k1) {
            if let Ok(c) = classify(k1, k2) {
                println!(
                    "  ({:>2},{:>2})  {:>6}  {:>6}  {:>7}",
                    k1,
                    k2,
                    c.family.to_string(),
                    c.degree.map(|d| d.to_string()).unwrap_or_else(|| "-".into()),
                    c.class_count
                );
            }
        }
    }
    Ok(())
}
