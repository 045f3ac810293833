//! The end-form catalog and the local-structure case table as JSON data.
//!
//! Bundled copies are compiled in; `RICCI_DATA_DIR` points at a directory
//! holding replacement `end_forms.json` / `local_patterns.json` files.

use std::collections::{BTreeMap, BTreeSet};
use std::path::PathBuf;

use ricci_core::classify::rooted_form;
use ricci_core::families::EndForm;
use ricci_core::patterns::{case_id, parse_state_tag, PatternCase, PatternTemplate, Role};
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub const DATA_DIR_VAR: &str = "RICCI_DATA_DIR";
pub const END_FORMS_FILE: &str = "end_forms.json";
pub const PATTERNS_FILE: &str = "local_patterns.json";

const BUNDLED_END_FORMS: &str = include_str!("../data/end_forms.json");
const BUNDLED_PATTERNS: &str = include_str!("../data/local_patterns.json");

#[derive(Debug, Error)]
pub enum DataError {
    #[error("reading {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("invalid data: {0}")]
    Invalid(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EndFormJson {
    pub id: usize,
    pub vertices: usize,
    pub edges: Vec<[usize; 2]>,
    pub attach: [Option<usize>; 2],
    pub ollivier_nonneg: bool,
}

impl From<&EndForm> for EndFormJson {
    fn from(f: &EndForm) -> Self {
        EndFormJson {
            id: f.id,
            vertices: f.vertices,
            edges: f.edges.iter().map(|&(a, b)| [a, b]).collect(),
            attach: [f.attach.0, f.attach.1],
            ollivier_nonneg: f.ollivier_nonneg,
        }
    }
}

impl From<&EndFormJson> for EndForm {
    fn from(f: &EndFormJson) -> Self {
        EndForm {
            id: f.id,
            vertices: f.vertices,
            edges: f.edges.iter().map(|e| (e[0], e[1])).collect(),
            attach: (f.attach[0], f.attach[1]),
            ollivier_nonneg: f.ollivier_nonneg,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TemplateJson {
    pub label: char,
    pub free: Vec<(String, i64)>,
    pub edges: Vec<[String; 2]>,
    pub excluded: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseJson {
    pub forbidden: bool,
    pub templates: Vec<TemplateJson>,
}

pub fn end_forms_to_json(forms: &[EndForm]) -> String {
    let v: Vec<EndFormJson> = forms.iter().map(EndFormJson::from).collect();
    serde_json::to_string_pretty(&v).expect("serializable") + "\n"
}

pub fn cases_to_json(cases: &[PatternCase]) -> String {
    let m: BTreeMap<String, CaseJson> = cases
        .iter()
        .map(|c| {
            let templates = c
                .templates
                .iter()
                .map(|t| TemplateJson {
                    label: t.label,
                    free: t.free.iter().map(|&(r, o)| (r.name().to_string(), o)).collect(),
                    edges: t.edges.iter().map(|&(a, b)| [a.name().to_string(), b.name().to_string()]).collect(),
                    excluded: t.excluded,
                })
                .collect();
            (c.id(), CaseJson { forbidden: c.forbidden, templates })
        })
        .collect();
    serde_json::to_string_pretty(&m).expect("serializable") + "\n"
}

/// Parses and validates a catalog: ids unique, every form structurally
/// sound, no two forms equal as rooted templates.
pub fn parse_end_forms(text: &str) -> Result<Vec<EndForm>, DataError> {
    let raw: Vec<EndFormJson> = serde_json::from_str(text)?;
    let forms: Vec<EndForm> = raw.iter().map(EndForm::from).collect();
    let mut ids = BTreeSet::new();
    let mut shapes = BTreeMap::new();
    for f in &forms {
        if !ids.insert(f.id) {
            return Err(DataError::Invalid(format!("duplicate end form id {}", f.id)));
        }
        f.check().map_err(|e| DataError::Invalid(format!("end form {}: {e}", f.id)))?;
        if let Some(other) = shapes.insert(rooted_form(f.vertices, &f.edges, f.attach), f.id) {
            return Err(DataError::Invalid(format!("end forms {other} and {} coincide", f.id)));
        }
    }
    Ok(forms)
}

fn role(s: &str) -> Result<Role, DataError> {
    Role::parse(s).ok_or_else(|| DataError::Invalid(format!("unknown role {s:?}")))
}

fn pair_from_id(id: &str) -> Result<(ricci_core::state::State, ricci_core::state::State), DataError> {
    let bad = || DataError::Invalid(format!("bad case id {id:?}"));
    let rest = id.strip_prefix("case_").ok_or_else(bad)?;
    let (a, b) = rest.split_once('_').ok_or_else(bad)?;
    Ok((parse_state_tag(a).ok_or_else(bad)?, parse_state_tag(b).ok_or_else(bad)?))
}

/// Parses a case table; all 16 state pairs must be present.
pub fn parse_cases(text: &str) -> Result<Vec<PatternCase>, DataError> {
    let raw: BTreeMap<String, CaseJson> = serde_json::from_str(text)?;
    let mut cases = Vec::new();
    for (id, c) in &raw {
        let pair = pair_from_id(id)?;
        let mut templates = Vec::new();
        for t in &c.templates {
            let free = t.free.iter().map(|(r, o)| Ok((role(r)?, *o))).collect::<Result<Vec<_>, DataError>>()?;
            if free.iter().any(|(r, _)| !matches!(r, Role::W | Role::W2)) {
                return Err(DataError::Invalid(format!("{id}: only w and w2 can be free")));
            }
            let edges = t.edges.iter().map(|[a, b]| Ok((role(a)?, role(b)?))).collect::<Result<Vec<_>, DataError>>()?;
            templates.push(PatternTemplate { label: t.label, free, edges, excluded: t.excluded });
        }
        if c.forbidden != templates.is_empty() {
            return Err(DataError::Invalid(format!("{id}: forbidden pairs have no templates and vice versa")));
        }
        cases.push(PatternCase { pair, forbidden: c.forbidden, templates });
    }
    let pairs: BTreeSet<String> = cases.iter().map(|c| case_id(c.pair)).collect();
    if pairs.len() != 16 {
        return Err(DataError::Invalid(format!("expected 16 state pairs, found {}", pairs.len())));
    }
    Ok(cases)
}

fn read_override(file: &str) -> Result<Option<String>, DataError> {
    let Some(dir) = std::env::var_os(DATA_DIR_VAR) else { return Ok(None) };
    let path = PathBuf::from(dir).join(file);
    std::fs::read_to_string(&path).map(Some).map_err(|source| DataError::Io { path, source })
}

pub fn load_end_forms() -> Result<Vec<EndForm>, DataError> {
    parse_end_forms(&read_override(END_FORMS_FILE)?.unwrap_or_else(|| BUNDLED_END_FORMS.to_string()))
}

pub fn load_cases() -> Result<Vec<PatternCase>, DataError> {
    parse_cases(&read_override(PATTERNS_FILE)?.unwrap_or_else(|| BUNDLED_PATTERNS.to_string()))
}

pub fn bundled_end_forms() -> &'static str {
    BUNDLED_END_FORMS
}

pub fn bundled_cases() -> &'static str {
    BUNDLED_PATTERNS
}
