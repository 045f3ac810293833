//! Machine-readable reports. Rationals are always `"p/q"` strings.

use std::collections::BTreeMap;

use ricci_core::classify::{Classification, LocalStructureReport, WindowOutcome};
use ricci_core::curvature::{CurvatureValue, Witness};
use ricci_core::enumerate::{CrossCheckReport, LevelCounts, SchemeReport, VerificationReport};
use ricci_core::harmonic::{LiouvilleReport, VertexFunction};
use ricci_core::patterns::case_id;
use ricci_core::rational::to_pq;
use ricci_core::{Graph, Rational};
use serde::Serialize;

use crate::formats::DescriptorJson;
use crate::graph6::emit_graph6;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum WitnessJson {
    /// Nonzero entries `[x, y, mass]` of a transport plan.
    Plan {
        entries: Vec<(usize, usize, String)>,
    },
    Bijection {
        pairs: Vec<(usize, usize)>,
        domain_pool: Vec<usize>,
        range_pool: Vec<usize>,
    },
}

impl From<&Witness> for WitnessJson {
    fn from(w: &Witness) -> Self {
        match w {
            Witness::Plan(p) => {
                WitnessJson::Plan { entries: p.entries.iter().map(|(&(x, y), m)| (x, y, to_pq(m))).collect() }
            }
            Witness::Bijection(b) => WitnessJson::Bijection {
                pairs: b.pairs.clone(),
                domain_pool: b.domain_pool.clone(),
                range_pool: b.range_pool.clone(),
            },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EdgeRow {
    pub u: usize,
    pub v: usize,
    pub kappa: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CurvatureReport {
    pub n: usize,
    pub scheme: String,
    pub engine: String,
    pub edges: Vec<EdgeRow>,
    pub min: Option<String>,
    pub nonneg: bool,
}

impl CurvatureReport {
    pub fn new(g: &Graph, engine: &str, values: &[((usize, usize), CurvatureValue)], witnesses: bool) -> Self {
        let min: Option<&Rational> = values.iter().map(|(_, c)| &c.value).min();
        CurvatureReport {
            n: g.n(),
            scheme: g.scheme().name().into(),
            engine: engine.into(),
            edges: values
                .iter()
                .map(|((u, v), c)| EdgeRow {
                    u: *u,
                    v: *v,
                    kappa: to_pq(&c.value),
                    witness: if witnesses { c.witness.as_ref().map(WitnessJson::from) } else { None },
                })
                .collect(),
            nonneg: min.is_none_or(|m| *m >= Rational::from_integer(0.into())),
            min: min.map(to_pq),
        }
    }

    /// `u,v,kappa` rows; witnesses are JSON-only.
    pub fn to_csv(&self) -> Result<String, csv::Error> {
        let mut w = csv::Writer::from_writer(vec![]);
        w.write_record(["u", "v", "kappa"])?;
        for e in &self.edges {
            w.write_record([e.u.to_string(), e.v.to_string(), e.kappa.clone()])?;
        }
        let bytes = w.into_inner().map_err(|e| e.into_error())?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassifyReport {
    pub graph6: String,
    pub in_class: bool,
    pub reason: Option<String>,
    pub family: Option<DescriptorJson>,
}

impl ClassifyReport {
    pub fn new(g: &Graph, result: &Result<Classification, ricci_core::classify::ClassifyError>) -> Self {
        let (in_class, reason, family) = match result {
            Ok(Classification::Family(d)) => (true, None, Some(DescriptorJson::from(d))),
            Ok(Classification::Unrecognized) => (true, None, Some(DescriptorJson::Unrecognized)),
            Err(e) => (false, Some(e.to_string()), None),
        };
        ClassifyReport { graph6: emit_graph6(g), in_class, reason, family }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LevelJson {
    pub n: usize,
    pub generated: usize,
    pub after_filter: usize,
    pub by_kind: BTreeMap<String, usize>,
}

impl From<&LevelCounts> for LevelJson {
    fn from(l: &LevelCounts) -> Self {
        LevelJson { n: l.n, generated: l.generated, after_filter: l.after_filter, by_kind: l.by_kind.clone() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SurvivorJson {
    pub graph6: String,
    pub family: DescriptorJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationJson {
    pub task: String,
    pub n_max: usize,
    pub verified: bool,
    pub levels: Vec<LevelJson>,
    pub unrecognized: Vec<String>,
    pub survivors: Vec<SurvivorJson>,
    /// Ollivier task only: edges with `κ^O ≥ 0` but `κ < 0`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub implication_failures: Option<Vec<(String, (usize, usize))>>,
}

impl ClassificationJson {
    pub fn new(r: &VerificationReport, implication_failures: Option<&[(Graph, (usize, usize))]>) -> Self {
        ClassificationJson {
            task: r.task.clone(),
            n_max: r.n_max,
            verified: r.verified() && implication_failures.is_none_or(<[_]>::is_empty),
            levels: r.levels.iter().map(LevelJson::from).collect(),
            unrecognized: r.unrecognized.iter().map(emit_graph6).collect(),
            survivors: r
                .survivors
                .iter()
                .map(|(g, c)| SurvivorJson {
                    graph6: emit_graph6(g),
                    family: match c {
                        Classification::Family(d) => DescriptorJson::from(d),
                        Classification::Unrecognized => DescriptorJson::Unrecognized,
                    },
                })
                .collect(),
            implication_failures: implication_failures.map(|f| f.iter().map(|(g, e)| (emit_graph6(g), *e)).collect()),
        }
    }

    /// graph6 lines for the sidecar file: unrecognized graphs first, then survivors.
    pub fn sidecar(&self) -> String {
        self.unrecognized.iter().chain(self.survivors.iter().map(|s| &s.graph6)).map(|s| format!("{s}\n")).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiscrepancyJson {
    pub graph6: String,
    pub edge: (usize, usize),
    pub transport: String,
    pub ot_limit: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EnginesJson {
    pub task: String,
    pub n_max: usize,
    pub verified: bool,
    pub graphs: usize,
    pub edges: usize,
    pub discrepancies: Vec<DiscrepancyJson>,
}

impl From<&CrossCheckReport> for EnginesJson {
    fn from(r: &CrossCheckReport) -> Self {
        EnginesJson {
            task: "engines".into(),
            n_max: r.n_max,
            verified: r.discrepancies.is_empty(),
            graphs: r.graphs,
            edges: r.edges,
            discrepancies: r
                .discrepancies
                .iter()
                .map(|d| DiscrepancyJson {
                    graph6: emit_graph6(&d.graph),
                    edge: d.edge,
                    transport: to_pq(&d.left),
                    ot_limit: to_pq(&d.right),
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SchemeJson {
    pub task: String,
    pub n_max: usize,
    pub verified: bool,
    pub graphs: usize,
    pub counterexamples: Vec<String>,
    pub scaling_failures: Vec<(String, (usize, usize))>,
    pub pendant_failures: Vec<(String, (usize, usize))>,
}

impl From<&SchemeReport> for SchemeJson {
    fn from(r: &SchemeReport) -> Self {
        let tag = |v: &[(Graph, (usize, usize))]| v.iter().map(|(g, e)| (emit_graph6(g), *e)).collect();
        SchemeJson {
            task: "scheme-equivalence".into(),
            n_max: r.n_max,
            verified: r.counterexamples.is_empty() && r.scaling_failures.is_empty() && r.pendant_failures.is_empty(),
            graphs: r.graphs,
            counterexamples: r.counterexamples.iter().map(emit_graph6).collect(),
            scaling_failures: tag(&r.scaling_failures),
            pendant_failures: tag(&r.pendant_failures),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LiouvilleJson {
    pub width: usize,
    pub holds: bool,
    pub z: Vec<String>,
    pub h: Vec<String>,
    pub solver_matches: bool,
    pub z_recurrence: bool,
    pub h_recurrence: bool,
    pub monotone: Option<bool>,
    pub growth: Option<bool>,
}

impl From<&LiouvilleReport> for LiouvilleJson {
    fn from(r: &LiouvilleReport) -> Self {
        LiouvilleJson {
            width: r.width,
            holds: r.holds(),
            z: r.z.iter().map(to_pq).collect(),
            h: r.h.iter().map(to_pq).collect(),
            solver_matches: r.solver_matches,
            z_recurrence: r.z_recurrence,
            h_recurrence: r.h_recurrence,
            monotone: r.monotone,
            growth: r.growth,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WindowJson {
    pub i: usize,
    pub case: String,
    pub outcome: String,
    pub labels: Vec<char>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PathJson {
    pub path: Vec<usize>,
    pub clean: bool,
    pub clean_without_excluded: bool,
    pub propagation: bool,
    pub windows: Vec<WindowJson>,
}

impl PathJson {
    pub fn new(r: &LocalStructureReport, clean_without_excluded: bool, propagation: bool) -> Self {
        PathJson {
            path: r.path.clone(),
            clean: r.is_clean(),
            clean_without_excluded,
            propagation,
            windows: r
                .windows
                .iter()
                .map(|w| {
                    let (outcome, labels) = match &w.outcome {
                        WindowOutcome::Matched(l) => ("matched", l.clone()),
                        WindowOutcome::ForbiddenPair => ("forbidden_pair", vec![]),
                        WindowOutcome::NoPattern => ("no_pattern", vec![]),
                    };
                    WindowJson { i: w.i, case: case_id(w.pair), outcome: outcome.into(), labels }
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LocalStructureJson {
    pub graph6: String,
    pub diameter: u32,
    pub clean: bool,
    pub paths: Vec<PathJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HarmonicSolutionJson {
    pub values: Vec<String>,
    pub interior: Vec<usize>,
    pub harmonic: bool,
}

impl HarmonicSolutionJson {
    pub fn new(f: &VertexFunction, interior: Vec<usize>, harmonic: bool) -> Self {
        HarmonicSolutionJson { values: f.values.iter().map(to_pq).collect(), interior, harmonic }
    }
}
