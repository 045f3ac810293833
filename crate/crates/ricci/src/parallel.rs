//! Multi-threaded verification drivers.
//!
//! Children of each parent are generated on a worker pool and the level is
//! sorted by canonical form afterwards, so any interleaving yields the same
//! level and the same report as the sequential drivers in `ricci-core`.

use num_traits::Signed;
use rayon::prelude::*;
use ricci_core::canon::BitGraph;
use ricci_core::classify::{classify_with, Classification};
use ricci_core::curvature::{is_nonneg_curved, kappa_lly, kappa_ollivier, Engine};
use ricci_core::enumerate::{
    children, compare_schemes, cross_check_graph, CrossCheckReport, EnumerateError, EnumerationConfig, LevelCounts,
    SchemeReport, VerificationReport,
};
use ricci_core::families::{ollivier_family_member_with, EndForm};
use ricci_core::{Graph, WeightScheme};

pub fn pool(jobs: usize) -> rayon::ThreadPool {
    rayon::ThreadPoolBuilder::new().num_threads(jobs.max(1)).build().expect("thread pool")
}

fn check(cfg: &EnumerationConfig, n_max: usize) -> Result<(), EnumerateError> {
    if cfg.max_degree == 0 {
        return Err(EnumerateError::BadConfig("max_degree must be at least 1"));
    }
    if n_max == 0 {
        return Err(EnumerateError::BadConfig("n_max must be at least 1"));
    }
    if n_max > cfg.resource_bound {
        return Err(EnumerateError::ResourceExceeded { requested: n_max, bound: cfg.resource_bound });
    }
    Ok(())
}

pub fn next_level_par(level: &[BitGraph], max_degree: usize) -> Vec<BitGraph> {
    let mut all: Vec<_> = level.par_iter().flat_map_iter(|p| children(p, max_degree)).collect();
    all.par_sort_by(|a, b| a.0.cmp(&b.0));
    all.into_iter().map(|(_, g)| g).collect()
}

pub fn levels_par(n_max: usize, max_degree: usize, mut visit: impl FnMut(usize, &[BitGraph])) {
    if n_max == 0 {
        return;
    }
    let mut level = vec![BitGraph::empty(1)];
    visit(1, &level);
    for n in 2..=n_max {
        level = next_level_par(&level, max_degree);
        visit(n, &level);
    }
}

enum Outcome {
    Skipped,
    Kept { key: String, graph: Graph, class: Classification, recognized: bool },
}

fn classify_one(bg: &BitGraph, scheme: WeightScheme, catalog: &[EndForm]) -> Outcome {
    let g = bg.to_graph(WeightScheme::Combinatorial).expect("enumerated graphs are connected");
    let dist = g.distances();
    if dist.diameter() < 6 {
        return Outcome::Skipped;
    }
    let nonneg = match scheme {
        WeightScheme::Normalized => {
            is_nonneg_curved(&g.with_scheme(WeightScheme::Normalized), &dist, Engine::Ollivier).expect("edges")
        }
        _ => is_nonneg_curved(&g, &dist, Engine::Auto).expect("edges"),
    };
    if !nonneg {
        return Outcome::Skipped;
    }
    let class = classify_with(&g, catalog).unwrap_or(Classification::Unrecognized);
    let (key, recognized) = match &class {
        Classification::Family(d) if scheme != WeightScheme::Normalized || ollivier_family_member_with(d, catalog) => {
            (d.kind().name().to_string(), true)
        }
        _ => ("Unrecognized".to_string(), false),
    };
    Outcome::Kept { key, graph: g, class, recognized }
}

/// Catalog-aware, parallel counterpart of `ricci_core::enumerate::classify_level`.
pub fn classify_level_par(
    n: usize,
    graphs: &[BitGraph],
    scheme: WeightScheme,
    catalog: &[EndForm],
) -> (LevelCounts, Vec<Graph>, Vec<(Graph, Classification)>) {
    let outcomes: Vec<Outcome> = graphs.par_iter().map(|bg| classify_one(bg, scheme, catalog)).collect();
    let mut counts = LevelCounts { n, generated: graphs.len(), ..LevelCounts::default() };
    let mut unrecognized = vec![];
    let mut survivors = vec![];
    for o in outcomes {
        let Outcome::Kept { key, graph, class, recognized } = o else { continue };
        counts.after_filter += 1;
        *counts.by_kind.entry(key).or_insert(0) += 1;
        if !recognized {
            unrecognized.push(graph.clone());
        }
        survivors.push((graph, class));
    }
    (counts, unrecognized, survivors)
}

pub fn verify_classification_par(
    n_max: usize,
    cfg: &EnumerationConfig,
    catalog: &[EndForm],
) -> Result<VerificationReport, EnumerateError> {
    check(cfg, n_max)?;
    let mut report = VerificationReport { task: "classification".into(), n_max, ..Default::default() };
    pool(cfg.parallelism).install(|| {
        levels_par(n_max, cfg.max_degree, |n, graphs| {
            let (counts, unrec, surv) = classify_level_par(n, graphs, WeightScheme::Combinatorial, catalog);
            report.levels.push(counts);
            report.unrecognized.extend(unrec);
            report.survivors.extend(surv);
        })
    });
    Ok(report)
}

pub type ImplicationFailures = Vec<(Graph, (usize, usize))>;

pub fn verify_ollivier_par(
    n_max: usize,
    cfg: &EnumerationConfig,
    catalog: &[EndForm],
) -> Result<(VerificationReport, ImplicationFailures), EnumerateError> {
    check(cfg, n_max)?;
    let mut report = VerificationReport { task: "ollivier".into(), n_max, ..Default::default() };
    let mut failures = vec![];
    pool(cfg.parallelism).install(|| {
        levels_par(n_max, cfg.max_degree, |n, graphs| {
            let found: Vec<ImplicationFailures> = graphs
                .par_iter()
                .map(|bg| {
                    let g = bg.to_graph(WeightScheme::Normalized).expect("connected");
                    let dist = g.distances();
                    g.edges()
                        .into_iter()
                        .filter(|&(u, v)| {
                            !kappa_ollivier(&g, &dist, u, v).expect("edge").is_negative()
                                && kappa_lly(&g, &dist, u, v).expect("edge").value.is_negative()
                        })
                        .map(|e| (g.clone(), e))
                        .collect()
                })
                .collect();
            failures.extend(found.into_iter().flatten());
            let (counts, unrec, surv) = classify_level_par(n, graphs, WeightScheme::Normalized, catalog);
            report.levels.push(counts);
            report.unrecognized.extend(unrec);
            report.survivors.extend(surv);
        })
    });
    Ok((report, failures))
}

pub fn cross_check_engines_par(n_max: usize, cfg: &EnumerationConfig) -> Result<CrossCheckReport, EnumerateError> {
    check(cfg, n_max)?;
    let mut report = CrossCheckReport { n_max, ..Default::default() };
    pool(cfg.parallelism).install(|| {
        levels_par(n_max, cfg.max_degree, |_, graphs| {
            let per: Vec<_> = graphs
                .par_iter()
                .map(|bg| {
                    let g = bg.to_graph(WeightScheme::Combinatorial).expect("connected");
                    let dist = g.distances();
                    (g.edge_count(), cross_check_graph(&g, &dist))
                })
                .collect();
            for (edges, d) in per {
                report.graphs += 1;
                report.edges += edges;
                report.discrepancies.extend(d);
            }
        })
    });
    Ok(report)
}

pub fn verify_scheme_equivalence_par(n_max: usize, cfg: &EnumerationConfig) -> Result<SchemeReport, EnumerateError> {
    check(cfg, n_max)?;
    let mut report = SchemeReport { n_max, ..Default::default() };
    pool(cfg.parallelism).install(|| {
        levels_par(n_max, cfg.max_degree, |_, graphs| {
            let per: Vec<_> = graphs
                .par_iter()
                .map(|bg| {
                    let g = bg.to_graph(WeightScheme::Combinatorial).expect("connected");
                    let cmp = compare_schemes(&g);
                    (g, cmp)
                })
                .collect();
            for (g, cmp) in per {
                report.graphs += 1;
                if !cmp.signs_agree() {
                    report.counterexamples.push(g.clone());
                }
                report.scaling_failures.extend(cmp.scaling_failures.iter().map(|&e| (g.clone(), e)));
                report.pendant_failures.extend(cmp.pendant_failures.iter().map(|&e| (g.clone(), e)));
            }
        })
    });
    Ok(report)
}
