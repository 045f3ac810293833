//! Isomorph-free generation of connected graphs with bounded degree, and the
//! exhaustive verification harness built on it.
//!
//! Generation is canonical augmentation by vertex addition. A child is built
//! from a parent by adding one vertex joined to a nonempty set of parent
//! vertices with spare degree. It is kept only when the added vertex lies in
//! the automorphism orbit of the child's canonically chosen non-cut vertex,
//! so every isomorphism class has exactly one accepted parent; siblings are
//! deduplicated by canonical form.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::Signed;

use crate::canon::{canonical_labeling, equitable_cells, same_orbit, BitGraph, CanonicalForm};
use crate::classify::{classify, ollivier_family_member, Classification, FamilyKind};
use crate::curvature::{edge_curvature, is_nonneg_curved, kappa_lly, kappa_ollivier, kappa_transport, Engine};
use crate::graph::{DistanceMatrix, Graph, WeightScheme};
use crate::rational::{int, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumerationConfig {
    pub n_max: usize,
    pub max_degree: usize,
    pub min_diameter: Option<u32>,
    pub require_kappa_nonneg: bool,
    pub scheme: WeightScheme,
    /// Worker count for drivers that parallelize over parents.
    pub parallelism: usize,
    /// Largest `n_max` accepted by the verification tasks.
    pub resource_bound: usize,
}

impl Default for EnumerationConfig {
    fn default() -> Self {
        EnumerationConfig {
            n_max: 12,
            max_degree: 3,
            min_diameter: None,
            require_kappa_nonneg: false,
            scheme: WeightScheme::Combinatorial,
            parallelism: 1,
            resource_bound: 14,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EnumerateError {
    ResourceExceeded { requested: usize, bound: usize },
    BadConfig(&'static str),
}

impl fmt::Display for EnumerateError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EnumerateError::ResourceExceeded { requested, bound } => {
                write!(f, "n_max = {requested} exceeds the configured bound {bound}")
            }
            EnumerateError::BadConfig(why) => write!(f, "invalid enumeration config: {why}"),
        }
    }
}

fn non_cut(g: &BitGraph) -> Vec<bool> {
    let n = g.n();
    if n <= 2 {
        return vec![true; n];
    }
    (0..n)
        .map(|v| {
            let start = if v == 0 { 1 } else { 0 };
            let mut seen = vec![false; n];
            seen[v] = true;
            seen[start] = true;
            let mut stack = vec![start];
            let mut count = 2;
            while let Some(x) = stack.pop() {
                for y in g.neighbors(x) {
                    if !seen[y] {
                        seen[y] = true;
                        count += 1;
                        stack.push(y);
                    }
                }
            }
            count == n
        })
        .collect()
}

/// Whether the last vertex of `child` is an acceptable augmentation, i.e. in
/// the orbit of the canonically chosen non-cut vertex.
fn is_canonical_augmentation(child: &BitGraph) -> bool {
    let new = child.n() - 1;
    let free = non_cut(child);
    let cells = equitable_cells(child);
    let Some(cell) = cells.iter().rev().find(|c| c.iter().any(|&v| free[v])) else {
        return false;
    };
    if !cell.contains(&new) {
        return false;
    }
    let candidates: Vec<usize> = cell.iter().copied().filter(|&v| free[v]).collect();
    if candidates.len() == 1 {
        return true;
    }
    let lab = canonical_labeling(child, None);
    let chosen = *lab.order.iter().rev().find(|v| candidates.contains(v)).expect("candidate in order");
    chosen == new || same_orbit(child, new, chosen)
}

fn subsets_up_to(items: &[usize], k: usize, out: &mut Vec<Vec<usize>>) {
    fn rec(items: &[usize], k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if !cur.is_empty() {
            out.push(cur.clone());
        }
        if cur.len() == k {
            return;
        }
        for i in start..items.len() {
            cur.push(items[i]);
            rec(items, k, i + 1, cur, out);
            cur.pop();
        }
    }
    rec(items, k, 0, &mut Vec::new(), out);
}

/// Canonical children of one canonical parent, sorted by canonical form.
pub fn children(parent: &BitGraph, max_degree: usize) -> Vec<(CanonicalForm, BitGraph)> {
    let spare: Vec<usize> = (0..parent.n()).filter(|&v| parent.degree(v) < max_degree).collect();
    let mut attach = Vec::new();
    subsets_up_to(&spare, max_degree, &mut attach);
    let mut seen: BTreeMap<CanonicalForm, BitGraph> = BTreeMap::new();
    for set in attach {
        let child = parent.with_new_vertex(&set);
        if !is_canonical_augmentation(&child) {
            continue;
        }
        let lab = canonical_labeling(&child, None);
        seen.entry(lab.form).or_insert_with(|| child.relabeled(&lab.order));
    }
    seen.into_iter().collect()
}

/// The next level from a full level, sorted by canonical form.
pub fn next_level(level: &[BitGraph], max_degree: usize) -> Vec<BitGraph> {
    let mut all: Vec<(CanonicalForm, BitGraph)> = level.iter().flat_map(|p| children(p, max_degree)).collect();
    all.sort_by(|a, b| a.0.cmp(&b.0));
    all.into_iter().map(|(_, g)| g).collect()
}

/// Every connected graph on `n` vertices with maximum degree at most
/// `max_degree`, one per isomorphism class, canonically labeled and sorted.
pub fn enumerate_connected(n: usize, max_degree: usize) -> Vec<BitGraph> {
    let mut out = Vec::new();
    enumerate_levels(n, max_degree, |level, graphs| {
        if level == n {
            out = graphs.to_vec();
        }
    });
    out
}

/// Connected subcubic graphs on `n` vertices.
pub fn enumerate_subcubic(n: usize) -> Vec<BitGraph> {
    enumerate_connected(n, 3)
}

/// Calls `visit(n, graphs)` for every level `1 ≤ n ≤ n_max`.
pub fn enumerate_levels(n_max: usize, max_degree: usize, mut visit: impl FnMut(usize, &[BitGraph])) {
    if n_max == 0 {
        return;
    }
    let mut level = vec![BitGraph::empty(1)];
    visit(1, &level);
    for n in 2..=n_max {
        level = next_level(&level, max_degree);
        visit(n, &level);
    }
}

fn check_bound(cfg: &EnumerationConfig, n_max: usize) -> Result<(), EnumerateError> {
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

/// Per-order counts of a verification run.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LevelCounts {
    pub n: usize,
    pub generated: usize,
    pub after_filter: usize,
    pub by_kind: BTreeMap<String, usize>,
}

/// Outcome of a classification sweep. `unrecognized` empty means the
/// classification holds at this scale.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerificationReport {
    pub task: String,
    pub n_max: usize,
    pub levels: Vec<LevelCounts>,
    pub unrecognized: Vec<Graph>,
    /// Graphs that passed the filter, with their classification.
    pub survivors: Vec<(Graph, Classification)>,
}

impl VerificationReport {
    pub fn verified(&self) -> bool {
        self.unrecognized.is_empty()
    }
}

/// Processes the graphs of one level for the classification sweep.
pub fn classify_level(
    n: usize,
    graphs: &[BitGraph],
    scheme: WeightScheme,
) -> (LevelCounts, Vec<Graph>, Vec<(Graph, Classification)>) {
    let mut counts = LevelCounts { n, generated: graphs.len(), ..LevelCounts::default() };
    let mut unrecognized = Vec::new();
    let mut survivors = Vec::new();
    for bg in graphs {
        let g = bg.to_graph(WeightScheme::Combinatorial).expect("enumerated graphs are connected");
        let dist = g.distances();
        if dist.diameter() < 6 {
            continue;
        }
        let nonneg = match scheme {
            WeightScheme::Normalized => {
                let gn = g.with_scheme(WeightScheme::Normalized);
                is_nonneg_curved(&gn, &dist, Engine::Ollivier).expect("edges are adjacent")
            }
            _ => is_nonneg_curved(&g, &dist, Engine::Auto).expect("edges are adjacent"),
        };
        if !nonneg {
            continue;
        }
        counts.after_filter += 1;
        let class = classify(&g);
        let key = match &class {
            Ok(Classification::Family(d)) if scheme != WeightScheme::Normalized || ollivier_family_member(d) => {
                String::from(d.kind().name())
            }
            Ok(Classification::Family(_)) | Ok(Classification::Unrecognized) | Err(_) => {
                unrecognized.push(g.clone());
                String::from("Unrecognized")
            }
        };
        *counts.by_kind.entry(key).or_insert(0) += 1;
        survivors.push((g, class.unwrap_or(Classification::Unrecognized)));
    }
    (counts, unrecognized, survivors)
}

/// Every connected subcubic graph with `n ≤ n_max`, diameter ≥ 6 and
/// nonnegative curvature must be recognized as one of the classified families.
pub fn verify_classification(n_max: usize, cfg: &EnumerationConfig) -> Result<VerificationReport, EnumerateError> {
    check_bound(cfg, n_max)?;
    let mut report = VerificationReport { task: String::from("classification"), n_max, ..Default::default() };
    enumerate_levels(n_max, cfg.max_degree, |n, graphs| {
        let (counts, unrec, surv) = classify_level(n, graphs, WeightScheme::Combinatorial);
        report.levels.push(counts);
        report.unrecognized.extend(unrec);
        report.survivors.extend(surv);
    });
    Ok(report)
}

/// Every connected subcubic normalized graph with `n ≤ n_max`, diameter ≥ 6
/// and `κ^O ≥ 0` on all edges must fall in the Ollivier family list, and
/// `κ^O ≥ 0 ⇒ κ ≥ 0` must hold on every edge tested.
pub fn verify_ollivier_classification(
    n_max: usize,
    cfg: &EnumerationConfig,
) -> Result<(VerificationReport, Vec<(Graph, (usize, usize))>), EnumerateError> {
    check_bound(cfg, n_max)?;
    let mut report = VerificationReport { task: String::from("ollivier"), n_max, ..Default::default() };
    let mut implication_failures = Vec::new();
    enumerate_levels(n_max, cfg.max_degree, |n, graphs| {
        for bg in graphs {
            let g = bg.to_graph(WeightScheme::Normalized).expect("connected");
            let dist = g.distances();
            for (u, v) in g.edges() {
                let ko = kappa_ollivier(&g, &dist, u, v).expect("normalized edge");
                if !ko.is_negative() && kappa_lly(&g, &dist, u, v).expect("edge").value.is_negative() {
                    implication_failures.push((g.clone(), (u, v)));
                }
            }
        }
        let (counts, unrec, surv) = classify_level(n, graphs, WeightScheme::Normalized);
        report.levels.push(counts);
        report.unrecognized.extend(unrec);
        report.survivors.extend(surv);
    });
    Ok((report, implication_failures))
}

/// One disagreement between two curvature computations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Discrepancy {
    pub graph: Graph,
    pub edge: (usize, usize),
    pub left: Rational,
    pub right: Rational,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CrossCheckReport {
    pub n_max: usize,
    pub graphs: usize,
    pub edges: usize,
    pub discrepancies: Vec<Discrepancy>,
}

/// Transport formula versus optimal-transport limit on one graph.
pub fn cross_check_graph(g: &Graph, dist: &DistanceMatrix) -> Vec<Discrepancy> {
    let mut out = Vec::new();
    for (u, v) in g.edges() {
        let a = kappa_transport(g, dist, u, v).expect("combinatorial edge").value;
        let b = kappa_lly(g, dist, u, v).expect("edge").value;
        if a != b {
            out.push(Discrepancy { graph: g.clone(), edge: (u, v), left: a, right: b });
        }
    }
    out
}

/// `kappa_transport = kappa_lly` on every edge of every connected subcubic graph with `n ≤ n_max`.
pub fn cross_check_engines(n_max: usize, cfg: &EnumerationConfig) -> Result<CrossCheckReport, EnumerateError> {
    check_bound(cfg, n_max)?;
    let mut report = CrossCheckReport { n_max, ..Default::default() };
    enumerate_levels(n_max, cfg.max_degree, |_, graphs| {
        for bg in graphs {
            let g = bg.to_graph(WeightScheme::Combinatorial).expect("connected");
            let dist = g.distances();
            report.graphs += 1;
            report.edges += g.edge_count();
            report.discrepancies.extend(cross_check_graph(&g, &dist));
        }
    });
    Ok(report)
}

/// Result of comparing the combinatorial and normalized schemes on one graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchemeComparison {
    pub min_combinatorial: Option<Rational>,
    pub min_normalized: Option<Rational>,
    /// Equal-degree edges where `κ_C ≠ deg·κ_N`.
    pub scaling_failures: Vec<(usize, usize)>,
    /// Pendant edges with a negative curvature in either scheme.
    pub pendant_failures: Vec<(usize, usize)>,
}

impl SchemeComparison {
    pub fn signs_agree(&self) -> bool {
        let nonneg = |m: &Option<Rational>| m.as_ref().is_none_or(|k| !k.is_negative());
        nonneg(&self.min_combinatorial) == nonneg(&self.min_normalized)
    }
}

pub fn compare_schemes(g: &Graph) -> SchemeComparison {
    let gc = g.with_scheme(WeightScheme::Combinatorial);
    let gn = g.with_scheme(WeightScheme::Normalized);
    let dist = gc.distances();
    let mut min_c: Option<Rational> = None;
    let mut min_n: Option<Rational> = None;
    let mut scaling_failures = Vec::new();
    let mut pendant_failures = Vec::new();
    for (u, v) in gc.edges() {
        let kc = edge_curvature(&gc, &dist, u, v, Engine::Transport).expect("edge").value;
        let kn = edge_curvature(&gn, &dist, u, v, Engine::OtLimit).expect("edge").value;
        let (du, dv) = (gc.degree(u), gc.degree(v));
        if du == dv && kc != &kn * int(du as i64) {
            scaling_failures.push((u, v));
        }
        if (du == 1 || dv == 1) && (kc.is_negative() || kn.is_negative()) {
            pendant_failures.push((u, v));
        }
        if min_c.as_ref().is_none_or(|m| &kc < m) {
            min_c = Some(kc);
        }
        if min_n.as_ref().is_none_or(|m| &kn < m) {
            min_n = Some(kn);
        }
    }
    SchemeComparison { min_combinatorial: min_c, min_normalized: min_n, scaling_failures, pendant_failures }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SchemeReport {
    pub n_max: usize,
    pub graphs: usize,
    /// Graphs where `κ(G_C) ≥ 0` and `κ(G_N) ≥ 0` disagree.
    pub counterexamples: Vec<Graph>,
    pub scaling_failures: Vec<(Graph, (usize, usize))>,
    pub pendant_failures: Vec<(Graph, (usize, usize))>,
}

/// Sign equivalence of the two schemes on all connected subcubic graphs with `n ≤ n_max`.
pub fn verify_scheme_equivalence(n_max: usize, cfg: &EnumerationConfig) -> Result<SchemeReport, EnumerateError> {
    check_bound(cfg, n_max)?;
    let mut report = SchemeReport { n_max, ..Default::default() };
    enumerate_levels(n_max, cfg.max_degree, |_, graphs| {
        for bg in graphs {
            let g = bg.to_graph(WeightScheme::Combinatorial).expect("connected");
            let cmp = compare_schemes(&g);
            report.graphs += 1;
            if !cmp.signs_agree() {
                report.counterexamples.push(g.clone());
            }
            report.scaling_failures.extend(cmp.scaling_failures.iter().map(|&e| (g.clone(), e)));
            report.pendant_failures.extend(cmp.pendant_failures.iter().map(|&e| (g.clone(), e)));
        }
    });
    Ok(report)
}

/// Canonical forms of a level; used to assert the absence of duplicates.
pub fn distinct_forms(graphs: &[BitGraph]) -> usize {
    graphs.iter().map(|g| canonical_labeling(g, None).form).collect::<BTreeSet<_>>().len()
}

/// Only used to keep the per-kind key stable in reports.
pub fn kind_key(kind: FamilyKind) -> &'static str {
    kind.name()
}
