//! Tallies which local-structure templates occur on diameter paths of the
//! sweep survivors and of generated family instances.
//!
//! Usage: cargo run --release -p ricci-core --example pattern_census [n_max]

use std::collections::BTreeMap;

use ricci_core::classify::{forbidden_pair_check, WindowOutcome};
use ricci_core::enumerate::{verify_classification, EnumerationConfig};
use ricci_core::families::*;
use ricci_core::graph::all_diameter_paths;
use ricci_core::patterns::case_id;
use ricci_core::Graph;

fn tally(name: &str, g: &Graph, census: &mut BTreeMap<(String, String), BTreeMap<String, usize>>) {
    let dist = g.distances();
    for p in all_diameter_paths(g, &dist) {
        let r = forbidden_pair_check(g, &dist, &p).unwrap();
        for w in &r.windows {
            let key = match &w.outcome {
                WindowOutcome::Matched(l) => l.iter().collect::<String>(),
                WindowOutcome::ForbiddenPair => {
                    println!("FORBIDDEN {name} path {:?} i={}", r.path, w.i);
                    "FORBIDDEN".into()
                }
                WindowOutcome::NoPattern => {
                    println!("NOPATTERN {name} path {:?} i={} {}", r.path, w.i, case_id(w.pair));
                    "NONE".into()
                }
            };
            let kind: String = name.split(['(', ' ', '{']).take(3).collect::<Vec<_>>().join(" ");
            *census.entry((case_id(w.pair), key)).or_default().entry(kind).or_insert(0) += 1;
        }
    }
}

fn main() {
    let n_max: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(12);
    let mut census = BTreeMap::new();
    let report = verify_classification(n_max, &EnumerationConfig::default()).unwrap();
    for (g, c) in &report.survivors {
        tally(&format!("{c:?}").replace("Family(", ""), g, &mut census);
    }
    for g in &report.unrecognized {
        tally(&format!("unrecognized {:?}", g.edges()), g, &mut census);
    }
    for k in 6..=12 {
        tally("prism", &gen_prism(k).unwrap(), &mut census);
        tally("mobius", &gen_mobius(k).unwrap(), &mut census);
    }
    let cat = end_form_catalog();
    for l in &cat {
        for r in &cat {
            for twist in [false, true] {
                let spec = QuasiLadderSpec { core_rungs: 7, left: l.id, right: r.id, twist };
                tally(&format!("{spec:?}"), &gen_quasi_ladder(&spec).unwrap(), &mut census);
            }
        }
    }
    for ((case, labels), n) in census {
        println!("{case:22} {labels:6} {n:?}");
    }
}
