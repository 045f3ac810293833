//! The eight acceptance criteria, each at exact rational equality.
//!
//! Prints one `PASS`/`FAIL` line per criterion and fails if any criterion
//! fails. Run with `--nocapture` to see the lines on success.

#[path = "../../core/tests/support/simplex.rs"]
mod simplex;

use std::collections::BTreeMap;
use std::time::Instant;

use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use ricci::graph6::emit_graph6;
use ricci::parallel;
use ricci_core::classify::{forbidden_pair_check, propagation_check, Classification};
use ricci_core::curvature::{min_curvature, wasserstein, ProbabilityMeasure};
use ricci_core::enumerate::{EnumerationConfig, VerificationReport};
use ricci_core::families::*;
use ricci_core::graph::all_diameter_paths;
use ricci_core::harmonic::liouville_window_check;
use ricci_core::patterns::builtin_cases;
use ricci_core::rational::{frac, int, to_pq};
use ricci_core::{Graph, Rational, WeightScheme};

type Outcome = Result<String, String>;

fn cfg(n: usize) -> EnumerationConfig {
    let jobs = std::thread::available_parallelism().map_or(1, |n| n.get());
    EnumerationConfig { n_max: n, parallelism: jobs, ..EnumerationConfig::default() }
}

fn family_instances() -> Vec<(String, Graph)> {
    let mut out = vec![];
    for edges in 1..=29 {
        out.push((format!("P{}", edges + 1), gen_path(edges).unwrap()));
    }
    for n in 3..=30 {
        out.push((format!("C{n}"), gen_cycle(n).unwrap()));
    }
    for k in 3..=15 {
        out.push((format!("prism({k})"), gen_prism(k).unwrap()));
        out.push((format!("mobius({k})"), gen_mobius(k).unwrap()));
    }
    out.push(("particular".into(), gen_particular().unwrap()));
    let cat = end_form_catalog();
    for core_rungs in 6..=12 {
        for l in &cat {
            for r in &cat {
                for twist in [false, true] {
                    let spec = QuasiLadderSpec { core_rungs, left: l.id, right: r.id, twist };
                    out.push((format!("{spec:?}"), gen_quasi_ladder(&spec).unwrap()));
                }
            }
        }
    }
    out
}

fn criterion_1(instances: &[(String, Graph)]) -> Outcome {
    let mut bad = vec![];
    for (name, g) in instances {
        let dist = g.distances();
        if min_curvature(g, &dist).is_some_and(|k| k.is_negative()) {
            bad.push(name.clone());
        }
    }
    let mut kinds = vec![WindowKind::Line, WindowKind::HalfLine, WindowKind::Ladder];
    kinds.extend(end_form_catalog().iter().map(|f| WindowKind::QuasiLadder(f.id)));
    for kind in &kinds {
        let w = gen_infinite_window(*kind, 20).unwrap();
        match window_min_interior_curvature(&w) {
            Some(k) if !k.is_negative() => {}
            other => bad.push(format!("window {kind:?}: {other:?}")),
        }
    }
    if bad.is_empty() {
        Ok(format!("{} finite instances and {} windows, min curvature >= 0", instances.len(), kinds.len()))
    } else {
        Err(format!("negative curvature on {bad:?}"))
    }
}

fn criterion_2() -> Outcome {
    let r = parallel::cross_check_engines_par(9, &cfg(9)).map_err(|e| e.to_string())?;
    if r.discrepancies.is_empty() {
        Ok(format!("{} graphs, {} edges, transport = limit everywhere", r.graphs, r.edges))
    } else {
        let d = &r.discrepancies[0];
        Err(format!(
            "{} discrepancies, first on {} edge {:?}: {} vs {}",
            r.discrepancies.len(),
            emit_graph6(&d.graph),
            d.edge,
            to_pq(&d.left),
            to_pq(&d.right)
        ))
    }
}

fn criterion_3() -> Outcome {
    let r = parallel::verify_scheme_equivalence_par(10, &cfg(10)).map_err(|e| e.to_string())?;
    if r.counterexamples.is_empty() && r.scaling_failures.is_empty() {
        Ok(format!("{} graphs, signs agree, equal-degree edges scale by the degree", r.graphs))
    } else {
        Err(format!(
            "{} sign counterexamples, {} scaling failures; first: {:?}",
            r.counterexamples.len(),
            r.scaling_failures.len(),
            r.counterexamples.first().or(r.scaling_failures.first().map(|x| &x.0)).map(emit_graph6)
        ))
    }
}

fn criterion_4(r: &VerificationReport) -> Outcome {
    let found = |n: usize, want: &FamilyDescriptor| {
        r.survivors.iter().any(|(g, c)| g.n() == n && *c == Classification::Family(want.clone()))
    };
    let particular = found(10, &FamilyDescriptor::Particular);
    let c12 = found(12, &FamilyDescriptor::Cycle { n: 12 });
    let per_n: BTreeMap<usize, usize> = r.levels.iter().map(|l| (l.n, l.after_filter)).collect();
    let summary = format!("survivors by n {per_n:?}");
    if r.unrecognized.is_empty() && particular && c12 {
        Ok(format!("{summary}, all classified, particular graph at n=10, C12 at n=12"))
    } else {
        let unrec: Vec<String> =
            r.unrecognized.iter().map(|g| format!("{} (n={}, edges {:?})", emit_graph6(g), g.n(), g.edges())).collect();
        Err(format!("{summary}; particular at 10: {particular}; C12 at 12: {c12}; unrecognized: {unrec:?}"))
    }
}

fn criterion_5(survivors: &[Graph], instances: &[(String, Graph)]) -> Outcome {
    let cases = builtin_cases();
    let mut graphs: Vec<(String, &Graph)> = survivors.iter().map(|g| (emit_graph6(g), g)).collect();
    graphs.extend(instances.iter().map(|(name, g)| (name.clone(), g)));
    let (mut checked, mut paths) = (0, 0);
    let mut violations = vec![];
    let mut excluded = vec![];
    for (name, g) in graphs {
        let dist = g.distances();
        if dist.diameter() < 6 {
            continue;
        }
        checked += 1;
        for p in all_diameter_paths(g, &dist) {
            paths += 1;
            let r = forbidden_pair_check(g, &dist, &p).unwrap();
            if !r.is_clean() || !propagation_check(g, &dist, &p).unwrap() {
                violations.push(format!("{name} path {:?}", r.path));
            } else if !r.clean_without_excluded(&cases) {
                excluded.push(format!("{name} path {:?}", r.path));
            }
        }
    }
    let summary = format!("{checked} graphs, {paths} diameter paths");
    if violations.is_empty() && excluded.is_empty() {
        Ok(format!("{summary}, no violations, no forbidden pairs, no excluded configuration"))
    } else {
        excluded.dedup_by(|a, b| a.split(' ').next() == b.split(' ').next());
        Err(format!(
            "{summary}; {} windows unmatched or forbidden: {violations:?}; excluded configurations present on {excluded:?}",
            violations.len()
        ))
    }
}

fn criterion_6() -> Outcome {
    let (r, fails) = parallel::verify_ollivier_par(10, &cfg(10), &end_form_catalog()).map_err(|e| e.to_string())?;
    let survivors = r.survivors.len();
    if r.unrecognized.is_empty() && fails.is_empty() {
        Ok(format!("{survivors} normalized survivors all in the Ollivier list, implication holds on every edge"))
    } else {
        Err(format!(
            "unrecognized {:?}; implication failures {:?}",
            r.unrecognized.iter().map(emit_graph6).collect::<Vec<_>>(),
            fails.iter().map(|(g, e)| (emit_graph6(g), *e)).collect::<Vec<_>>()
        ))
    }
}

fn criterion_7() -> Outcome {
    // iterate z_{n+1} = 4 z_n - z_{n-1} from 1, 4 by hand
    let mut z = vec![int(1), int(4)];
    while z.len() < 21 {
        let k = z.len();
        z.push(int(4) * &z[k - 1] - &z[k - 2]);
    }
    if z[2..5] != [int(15), int(56), int(209)] {
        return Err(format!("hand iteration gave {:?}", &z[2..5]));
    }
    let mut notes = vec![];
    for width in [12, 20] {
        let r = liouville_window_check(width).map_err(|e| e.to_string())?;
        let growth = r.z.windows(2).skip(1).all(|w| w[1] >= int(3) * &w[0]);
        if !(r.holds() && r.z_recurrence && r.h_recurrence && r.growth == Some(true) && growth) {
            return Err(format!("width {width}: {r:?}"));
        }
        if r.z[..] != z[..r.z.len()] || r.z[4] != int(209) {
            return Err(format!("width {width}: solver z {:?}", r.z.iter().map(to_pq).collect::<Vec<_>>()));
        }
        notes.push(format!("width {width}: z_4 = {}", to_pq(&r.z[4])));
    }
    Ok(notes.join(", "))
}

fn random_connected(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
    for _ in 0..rng.gen_range(0..=n) {
        let (a, b) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if a != b && !edges.contains(&(a.min(b), a.max(b))) {
            edges.push((a.min(b), a.max(b)));
        }
    }
    Graph::from_edges(n, &edges, WeightScheme::Combinatorial).unwrap()
}

fn random_measure(rng: &mut ChaCha8Rng, n: usize) -> Vec<(usize, Rational)> {
    let k = rng.gen_range(1..=n.min(6));
    let mut points: Vec<usize> = (0..n).collect();
    for i in 0..k {
        let j = rng.gen_range(i..n);
        points.swap(i, j);
    }
    let weights: Vec<i64> = (0..k).map(|_| rng.gen_range(1..=12)).collect();
    let total: i64 = weights.iter().sum();
    points[..k].iter().zip(&weights).map(|(&p, &w)| (p, frac(w, total))).collect()
}

fn criterion_8() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for i in 0..200 {
        let n = rng.gen_range(2..=9);
        let g = random_connected(&mut rng, n);
        let dist = g.distances();
        let (a, b) = (random_measure(&mut rng, n), random_measure(&mut rng, n));
        let mu = ProbabilityMeasure::new(a.iter().cloned().collect()).unwrap();
        let nu = ProbabilityMeasure::new(b.iter().cloned().collect()).unwrap();
        let (w, plan) = wasserstein(&dist, &mu, &nu).map_err(|e| e.to_string())?;
        let lp = simplex::transport_cost(&a, &b, |x, y| dist.get(x, y) as i64);
        if w != lp || !plan.is_coupling() || plan.cost(&dist) != w || w.is_negative() || (a == b && !w.is_zero()) {
            return Err(format!("instance {i}: flow {} vs LP {}", to_pq(&w), to_pq(&lp)));
        }
    }
    Ok("200 seeded instances, flow cost = LP optimum, plans are couplings".into())
}

#[test]
fn acceptance() {
    let mut lines = vec![];
    let mut record = |id: usize, name: &str, started: Instant, outcome: Outcome| {
        let secs = started.elapsed().as_secs_f64();
        let line = match outcome {
            Ok(d) => format!("criterion {id} {name}: PASS ({d}) [{secs:.1}s]"),
            Err(d) => format!("criterion {id} {name}: FAIL ({d}) [{secs:.1}s]"),
        };
        println!("{line}");
        lines.push(line);
    };

    let instances = family_instances();
    let t = Instant::now();
    record(1, "family nonnegativity", t, criterion_1(&instances));
    let t = Instant::now();
    record(2, "engine equivalence", t, criterion_2());
    let t = Instant::now();
    record(3, "scheme equivalence", t, criterion_3());
    let t = Instant::now();
    let sweep = parallel::verify_classification_par(12, &cfg(12), &end_form_catalog());
    let survivors: Vec<Graph> =
        sweep.as_ref().map(|r| r.survivors.iter().map(|s| s.0.clone()).collect()).unwrap_or_default();
    record(4, "desk-scale classification", t, sweep.as_ref().map_err(|e| e.to_string()).and_then(criterion_4));
    let t = Instant::now();
    record(5, "local-structure soundness", t, criterion_5(&survivors, &instances));
    let t = Instant::now();
    record(6, "Ollivier variant", t, criterion_6());
    let t = Instant::now();
    record(7, "Liouville skeleton", t, criterion_7());
    let t = Instant::now();
    record(8, "Wasserstein correctness", t, criterion_8());

    let failed: Vec<&String> = lines.iter().filter(|l| l.contains(": FAIL")).collect();
    assert!(failed.is_empty(), "{} of 8 criteria failed", failed.len());
}
