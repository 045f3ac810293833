//! Subcommands of the `ricci` binary.
//!
//! Exit codes: 0 success, 1 verification failure, 2 input error,
//! 3 configuration error.

use std::collections::BTreeMap;
use std::io::Read;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ricci_core::classify::{classify_with, forbidden_pair_check_with, matches_spec, propagation_check, Classification};
use ricci_core::curvature::{edge_curvatures, Engine};
use ricci_core::enumerate::EnumerationConfig;
use ricci_core::families::{gen_infinite_window_with, EndForm, FamilyDescriptor, QuasiLadderSpec, WindowKind};
use ricci_core::graph::all_diameter_paths;
use ricci_core::harmonic::{
    is_harmonic_at, liouville_window_check_with, solve_harmonic, HarmonicError, HarmonicProblem, LiouvilleSeeds,
};
use ricci_core::rational::parse_pq;
use ricci_core::{Graph, WeightScheme};
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::data::{load_cases, load_end_forms};
use crate::formats::{parse_edge_json, parse_form_ref, DescriptorJson, EdgeList};
use crate::graph6::{emit_graph6, parse_graph6};
use crate::manifest::RunManifest;
use crate::parallel;
use crate::report::*;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_CONFIG: i32 = 3;

#[derive(Debug)]
pub enum CliError {
    Input(String),
    Config(String),
}

impl CliError {
    pub fn code(&self) -> i32 {
        match self {
            CliError::Input(_) => EXIT_INPUT,
            CliError::Config(_) => EXIT_CONFIG,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Input(m) => write!(f, "input error: {m}"),
            CliError::Config(m) => write!(f, "configuration error: {m}"),
        }
    }
}

fn input<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Input(e.to_string())
}

fn config<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Config(e.to_string())
}

#[derive(Debug, Parser)]
#[command(name = "ricci", version, about = "Exact discrete Ricci curvature on subcubic graphs")]
pub struct Cli {
    /// Write the run manifest here instead of stderr.
    #[arg(long, global = true)]
    pub manifest: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Per-edge curvature table.
    Curvature(CurvatureArgs),
    /// Build a family member.
    Generate(GenerateArgs),
    /// Recognize the family of a graph.
    Classify(InputArgs),
    /// Exhaustive verification runs.
    Verify(VerifyArgs),
    /// Ladder-window recurrence checks.
    Liouville(LiouvilleArgs),
    /// Window-by-window local structure along every diameter path.
    LocalStructure(InputArgs),
    /// Solve a Dirichlet problem exactly.
    Harmonic(HarmonicArgs),
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// graph6 or JSON edge list; `-` reads stdin.
    #[arg(long = "in")]
    pub input: String,
    /// Output file; stdout when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SchemeArg {
    Combinatorial,
    Normalized,
}

impl From<SchemeArg> for WeightScheme {
    fn from(s: SchemeArg) -> Self {
        match s {
            SchemeArg::Combinatorial => WeightScheme::Combinatorial,
            SchemeArg::Normalized => WeightScheme::Normalized,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum EngineArg {
    Auto,
    Transport,
    OtLimit,
    Ollivier,
}

impl From<EngineArg> for Engine {
    fn from(e: EngineArg) -> Self {
        match e {
            EngineArg::Auto => Engine::Auto,
            EngineArg::Transport => Engine::Transport,
            EngineArg::OtLimit => Engine::OtLimit,
            EngineArg::Ollivier => Engine::Ollivier,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TableFormat {
    Json,
    Csv,
}

#[derive(Debug, Args)]
pub struct CurvatureArgs {
    #[command(flatten)]
    pub io: InputArgs,
    /// Overrides the scheme of a JSON input; graph6 inputs default to combinatorial.
    #[arg(long, value_enum)]
    pub scheme: Option<SchemeArg>,
    #[arg(long, value_enum, default_value = "auto")]
    pub engine: EngineArg,
    #[arg(long, value_enum, default_value = "json")]
    pub format: TableFormat,
    /// Include transport plans or bijections in the JSON report.
    #[arg(long)]
    pub witness: bool,
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    #[command(subcommand)]
    pub family: FamilyArg,
    /// graph6 output; stdout when absent.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Descriptor JSON output; defaults to `<out>.json` when `--out` is set.
    #[arg(long, global = true)]
    pub descriptor: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum FamilyArg {
    Path {
        #[arg(long)]
        edges: usize,
    },
    Cycle {
        #[arg(long)]
        n: usize,
    },
    Prism {
        #[arg(long)]
        k: usize,
    },
    Mobius {
        #[arg(long)]
        k: usize,
    },
    Particular,
    QuasiLadder {
        #[arg(long)]
        core: usize,
        /// Left end form, e.g. `L1`.
        #[arg(long)]
        left: String,
        /// Right end form, e.g. `R3`.
        #[arg(long)]
        right: String,
        #[arg(long)]
        twist: bool,
    },
    /// Finite window of an infinite family: `a` line, `b` half-line,
    /// `c` ladder, `d`..`j` one-ended quasi-ladder with end form 1..7.
    Window {
        #[arg(long)]
        family: char,
        #[arg(long)]
        width: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Task {
    Classification,
    SchemeEquivalence,
    Engines,
    Ollivier,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub task: Task,
    /// Largest vertex count; defaults to 12, 10, 9 and 10 for the four tasks.
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
    /// Weight scheme for the classification tasks; must be normalized for `ollivier`.
    #[arg(long, value_enum)]
    pub scheme: Option<SchemeArg>,
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// graph6 lines of unrecognized graphs, then survivors.
    #[arg(long)]
    pub sidecar: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct LiouvilleArgs {
    #[arg(long)]
    pub width: usize,
    #[arg(long, default_value = "1/1")]
    pub z0: String,
    #[arg(long, default_value = "4/1")]
    pub z1: String,
    #[arg(long, default_value = "0/1")]
    pub h0: String,
    #[arg(long, default_value = "1/1")]
    pub h1: String,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct HarmonicArgs {
    /// `{"graph": {...edge list...}, "boundary": {"v": "p/q", ...}}`; `-` reads stdin.
    #[arg(long = "in")]
    pub input: String,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Deserialize)]
pub struct HarmonicProblemJson {
    pub graph: EdgeList,
    pub boundary: BTreeMap<String, String>,
}

struct Run {
    manifest: RunManifest,
}

impl Run {
    fn read(&mut self, path: &str) -> Result<String, CliError> {
        let text = if path == "-" {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s).map_err(input)?;
            s
        } else {
            std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{path}: {e}")))?
        };
        self.manifest.add_input(path, text.as_bytes());
        Ok(text)
    }

    fn write(&mut self, out: Option<&PathBuf>, text: &str) -> Result<(), CliError> {
        match out {
            Some(p) => {
                std::fs::write(p, text).map_err(|e| CliError::Input(format!("{}: {e}", p.display())))?;
                self.manifest.add_output(&p.display().to_string());
            }
            None => {
                print!("{text}");
                self.manifest.add_output("-");
            }
        }
        Ok(())
    }

    fn graph(&mut self, path: &str, scheme: Option<WeightScheme>) -> Result<Graph, CliError> {
        let text = self.read(path)?;
        let g = if text.trim_start().starts_with('{') {
            parse_edge_json(&text).map_err(input)?
        } else {
            parse_graph6(&text, WeightScheme::Combinatorial).map_err(input)?
        };
        Ok(match scheme {
            Some(s) => g.with_scheme(s),
            None => g,
        })
    }
}

fn catalog() -> Result<Vec<EndForm>, CliError> {
    load_end_forms().map_err(config)
}

fn json_line<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("reports serialize") + "\n"
}

/// Runs one parsed command line and returns the exit code.
pub fn run(cli: Cli) -> i32 {
    let mut state = Run { manifest: RunManifest::new(subcommand_name(&cli.command), config_echo(&cli.command)) };
    let result = dispatch(&mut state, &cli.command);
    let code = match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("{e}");
            e.code()
        }
    };
    if code == EXIT_OK || code == EXIT_FAILED {
        let text = state.manifest.to_json();
        match &cli.manifest {
            Some(p) => {
                if let Err(e) = std::fs::write(p, text + "\n") {
                    eprintln!("manifest {}: {e}", p.display());
                    return EXIT_INPUT;
                }
            }
            None => eprintln!("{text}"),
        }
    }
    code
}

fn subcommand_name(c: &Command) -> &'static str {
    match c {
        Command::Curvature(_) => "curvature",
        Command::Generate(_) => "generate",
        Command::Classify(_) => "classify",
        Command::Verify(_) => "verify",
        Command::Liouville(_) => "liouville",
        Command::LocalStructure(_) => "local-structure",
        Command::Harmonic(_) => "harmonic",
    }
}

fn config_echo(c: &Command) -> serde_json::Value {
    let data_dir = std::env::var(crate::data::DATA_DIR_VAR).ok();
    let body = match c {
        Command::Curvature(a) => {
            json!({"in": a.io.input, "scheme": a.scheme, "engine": a.engine, "format": a.format, "witness": a.witness})
        }
        Command::Generate(a) => json!({"family": format!("{:?}", a.family)}),
        Command::Classify(a) | Command::LocalStructure(a) => json!({"in": a.input}),
        Command::Verify(a) => json!({"task": a.task, "n": a.n, "jobs": a.jobs, "scheme": a.scheme}),
        Command::Liouville(a) => json!({"width": a.width, "z0": a.z0, "z1": a.z1, "h0": a.h0, "h1": a.h1}),
        Command::Harmonic(a) => json!({"in": a.input}),
    };
    json!({"args": body, "data_dir": data_dir})
}

fn dispatch(run: &mut Run, c: &Command) -> Result<i32, CliError> {
    match c {
        Command::Curvature(a) => cmd_curvature(run, a),
        Command::Generate(a) => cmd_generate(run, a),
        Command::Classify(a) => cmd_classify(run, a),
        Command::Verify(a) => cmd_verify(run, a),
        Command::Liouville(a) => cmd_liouville(run, a),
        Command::LocalStructure(a) => cmd_local_structure(run, a),
        Command::Harmonic(a) => cmd_harmonic(run, a),
    }
}

fn engine_name(e: EngineArg) -> &'static str {
    match e {
        EngineArg::Auto => "auto",
        EngineArg::Transport => "transport",
        EngineArg::OtLimit => "ot-limit",
        EngineArg::Ollivier => "ollivier",
    }
}

fn cmd_curvature(run: &mut Run, a: &CurvatureArgs) -> Result<i32, CliError> {
    let g = run.graph(&a.io.input, a.scheme.map(Into::into))?;
    match (a.engine, g.scheme()) {
        (EngineArg::Ollivier, WeightScheme::Normalized) => {}
        (EngineArg::Ollivier, s) => {
            return Err(CliError::Config(format!("the ollivier engine needs the normalized scheme, not {}", s.name())))
        }
        (EngineArg::Transport, s) if s != WeightScheme::Combinatorial => {
            return Err(CliError::Config(format!(
                "the transport engine needs the combinatorial scheme, not {}",
                s.name()
            )))
        }
        _ => {}
    }
    let dist = g.distances();
    let values = edge_curvatures(&g, &dist, a.engine.into()).map_err(config)?;
    let report = CurvatureReport::new(&g, engine_name(a.engine), &values, a.witness);
    let text = match a.format {
        TableFormat::Json => json_line(&report),
        TableFormat::Csv => report.to_csv().map_err(input)?,
    };
    run.write(a.io.out.as_ref(), &text)?;
    Ok(EXIT_OK)
}

fn descriptor_of(f: &FamilyArg) -> Result<FamilyDescriptor, CliError> {
    Ok(match f {
        FamilyArg::Path { edges } => FamilyDescriptor::Path { edges: *edges },
        FamilyArg::Cycle { n } => FamilyDescriptor::Cycle { n: *n },
        FamilyArg::Prism { k } => FamilyDescriptor::Prism { k: *k },
        FamilyArg::Mobius { k } => FamilyDescriptor::MobiusLadder { k: *k },
        FamilyArg::Particular => FamilyDescriptor::Particular,
        FamilyArg::QuasiLadder { core, left, right, twist } => FamilyDescriptor::QuasiLadder(QuasiLadderSpec {
            core_rungs: *core,
            left: parse_form_ref(left, 'L').map_err(input)?,
            right: parse_form_ref(right, 'R').map_err(input)?,
            twist: *twist,
        }),
        FamilyArg::Window { family, width } => FamilyDescriptor::InfiniteWindow {
            kind: WindowKind::from_letter(*family)
                .ok_or_else(|| CliError::Input(format!("unknown infinite family {family:?}")))?,
            width: *width,
        },
    })
}

fn cmd_generate(run: &mut Run, a: &GenerateArgs) -> Result<i32, CliError> {
    let cat = catalog()?;
    let d = descriptor_of(&a.family)?;
    let g = match &d {
        FamilyDescriptor::InfiniteWindow { kind, width } => {
            gen_infinite_window_with(*kind, *width, &cat).map_err(input)?.graph
        }
        other => other.generate_with(&cat).map_err(input)?,
    };
    if let FamilyDescriptor::QuasiLadder(spec) = &d {
        if !matches_spec(&g, spec, &cat) {
            return Err(CliError::Config(format!("generated instance does not match {spec:?}")));
        }
    }
    run.write(a.out.as_ref(), &(emit_graph6(&g) + "\n"))?;
    let desc = json!({"n": g.n(), "edges": g.edge_count(), "descriptor": DescriptorJson::from(&d)});
    let target = a.descriptor.clone().or_else(|| a.out.as_ref().map(|p| p.with_extension("json")));
    if let Some(p) = target {
        run.write(Some(&p), &json_line(&desc))?;
    }
    Ok(EXIT_OK)
}

fn cmd_classify(run: &mut Run, a: &InputArgs) -> Result<i32, CliError> {
    let cat = catalog()?;
    let g = run.graph(&a.input, Some(WeightScheme::Combinatorial))?;
    let result = classify_with(&g, &cat);
    let report = ClassifyReport::new(&g, &result);
    run.write(a.out.as_ref(), &json_line(&report))?;
    Ok(if matches!(result, Ok(Classification::Unrecognized)) { EXIT_FAILED } else { EXIT_OK })
}

fn cmd_verify(run: &mut Run, a: &VerifyArgs) -> Result<i32, CliError> {
    let scheme = a.scheme.map(WeightScheme::from);
    match (a.task, scheme) {
        (Task::Ollivier, Some(WeightScheme::Combinatorial)) => {
            return Err(CliError::Config("the ollivier task runs on the normalized scheme".into()))
        }
        (Task::Classification, Some(WeightScheme::Normalized)) => {
            return Err(CliError::Config("the classification task runs on the combinatorial scheme".into()))
        }
        (Task::Engines | Task::SchemeEquivalence, Some(_)) => {
            return Err(CliError::Config("this task compares schemes itself; drop --scheme".into()))
        }
        _ => {}
    }
    let n = a.n.unwrap_or(match a.task {
        Task::Classification => 12,
        Task::SchemeEquivalence | Task::Ollivier => 10,
        Task::Engines => 9,
    });
    let cfg = EnumerationConfig { n_max: n, parallelism: a.jobs, ..EnumerationConfig::default() };
    let (text, sidecar, verified) = match a.task {
        Task::Classification => {
            let r = parallel::verify_classification_par(n, &cfg, &catalog()?).map_err(config)?;
            let j = ClassificationJson::new(&r, None);
            (json_line(&j), Some(j.sidecar()), j.verified)
        }
        Task::Ollivier => {
            let (r, fails) = parallel::verify_ollivier_par(n, &cfg, &catalog()?).map_err(config)?;
            let j = ClassificationJson::new(&r, Some(&fails));
            (json_line(&j), Some(j.sidecar()), j.verified)
        }
        Task::Engines => {
            let j = EnginesJson::from(&parallel::cross_check_engines_par(n, &cfg).map_err(config)?);
            let side: String = j.discrepancies.iter().map(|d| format!("{}\n", d.graph6)).collect();
            (json_line(&j), Some(side), j.verified)
        }
        Task::SchemeEquivalence => {
            let j = SchemeJson::from(&parallel::verify_scheme_equivalence_par(n, &cfg).map_err(config)?);
            let side: String = j.counterexamples.iter().map(|g| format!("{g}\n")).collect();
            (json_line(&j), Some(side), j.verified)
        }
    };
    run.write(a.out.as_ref(), &text)?;
    if let (Some(p), Some(s)) = (&a.sidecar, sidecar) {
        run.write(Some(p), &s)?;
    }
    Ok(if verified { EXIT_OK } else { EXIT_FAILED })
}

fn cmd_liouville(run: &mut Run, a: &LiouvilleArgs) -> Result<i32, CliError> {
    let q = |s: &str| parse_pq(s).map_err(input);
    let seeds = LiouvilleSeeds { z0: q(&a.z0)?, z1: q(&a.z1)?, h0: q(&a.h0)?, h1: q(&a.h1)? };
    let report = liouville_window_check_with(a.width, &seeds).map_err(|e| match e {
        HarmonicError::BadParam(_) => input(e),
        other => config(other),
    })?;
    let j = LiouvilleJson::from(&report);
    run.write(a.out.as_ref(), &json_line(&j))?;
    Ok(if j.holds { EXIT_OK } else { EXIT_FAILED })
}

fn cmd_local_structure(run: &mut Run, a: &InputArgs) -> Result<i32, CliError> {
    let cases = load_cases().map_err(config)?;
    let g = run.graph(&a.input, Some(WeightScheme::Combinatorial))?;
    let dist = g.distances();
    let mut paths = vec![];
    for p in all_diameter_paths(&g, &dist) {
        let r = forbidden_pair_check_with(&g, &dist, &p, &cases).map_err(input)?;
        let prop = propagation_check(&g, &dist, &p).map_err(input)?;
        paths.push(PathJson::new(&r, r.clean_without_excluded(&cases), prop));
    }
    let clean = paths.iter().all(|p| p.clean && p.propagation);
    let j = LocalStructureJson { graph6: emit_graph6(&g), diameter: dist.diameter(), clean, paths };
    run.write(a.out.as_ref(), &json_line(&j))?;
    Ok(if clean { EXIT_OK } else { EXIT_FAILED })
}

pub fn parse_harmonic_problem(text: &str) -> Result<HarmonicProblem, CliError> {
    let raw: HarmonicProblemJson = serde_json::from_str(text).map_err(input)?;
    let g = raw.graph.to_graph().map_err(input)?;
    let mut boundary = BTreeMap::new();
    for (v, x) in &raw.boundary {
        let v: usize = v.parse().map_err(|_| CliError::Input(format!("boundary key {v:?} is not a vertex")))?;
        boundary.insert(v, parse_pq(x).map_err(input)?);
    }
    HarmonicProblem::new(g, boundary).map_err(input)
}

fn cmd_harmonic(run: &mut Run, a: &HarmonicArgs) -> Result<i32, CliError> {
    let text = run.read(&a.input)?;
    let problem = parse_harmonic_problem(&text)?;
    let f = match solve_harmonic(&problem) {
        Ok(f) => f,
        Err(HarmonicError::MaxPrincipleViolated) => {
            eprintln!("solution violates the maximum principle");
            return Ok(EXIT_FAILED);
        }
        Err(e) => return Err(input(e)),
    };
    let interior = problem.interior();
    let harmonic = interior.iter().all(|&u| is_harmonic_at(&problem.graph, &f, u));
    run.write(a.out.as_ref(), &json_line(&HarmonicSolutionJson::new(&f, interior, harmonic)))?;
    Ok(if harmonic { EXIT_OK } else { EXIT_FAILED })
}
