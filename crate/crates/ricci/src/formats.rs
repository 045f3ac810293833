//! JSON encodings: edge lists, exact rationals as `"p/q"` strings and family
//! descriptors.

use ricci_core::families::{FamilyDescriptor, QuasiLadderSpec, WindowKind};
use ricci_core::rational::{parse_pq, to_pq};
use ricci_core::{Graph, GraphError, Rational, WeightScheme};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unknown weight scheme {0:?}")]
    Scheme(String),
    #[error("graph: {0}")]
    Graph(GraphError),
    #[error("{0}")]
    Invalid(String),
}

pub fn scheme_name(s: WeightScheme) -> &'static str {
    s.name()
}

pub fn parse_scheme(s: &str) -> Result<WeightScheme, FormatError> {
    match s {
        "combinatorial" => Ok(WeightScheme::Combinatorial),
        "normalized" => Ok(WeightScheme::Normalized),
        other => Err(FormatError::Scheme(other.to_string())),
    }
}

/// `{"n": .., "edges": [[u, v], ..], "scheme": ..}`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeList {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    #[serde(default = "default_scheme")]
    pub scheme: String,
}

fn default_scheme() -> String {
    "combinatorial".into()
}

impl EdgeList {
    pub fn from_graph(g: &Graph) -> Self {
        EdgeList {
            n: g.n(),
            edges: g.edges().into_iter().map(|(u, v)| [u, v]).collect(),
            scheme: g.scheme().name().into(),
        }
    }

    pub fn to_graph(&self) -> Result<Graph, FormatError> {
        let edges: Vec<(usize, usize)> = self.edges.iter().map(|e| (e[0], e[1])).collect();
        Graph::from_edges(self.n, &edges, parse_scheme(&self.scheme)?).map_err(FormatError::Graph)
    }
}

pub fn parse_edge_json(text: &str) -> Result<Graph, FormatError> {
    serde_json::from_str::<EdgeList>(text)?.to_graph()
}

pub fn emit_edge_json(g: &Graph) -> String {
    serde_json::to_string(&EdgeList::from_graph(g)).expect("edge lists serialize")
}

/// Serde adapter for rationals as `"p/q"` strings.
pub mod pq {
    use super::*;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&to_pq(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        parse_pq(&s).map_err(serde::de::Error::custom)
    }
}

pub mod opt_pq {
    use super::*;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
        match r {
            Some(r) => s.serialize_some(&to_pq(r)),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Rational>, D::Error> {
        Option::<String>::deserialize(d)?.map(|s| parse_pq(&s).map_err(serde::de::Error::custom)).transpose()
    }
}

/// Left and right end forms are written `L<id>` and `R<id>` on the command
/// line and in descriptors.
pub fn parse_form_ref(s: &str, side: char) -> Result<usize, FormatError> {
    let bad = || FormatError::Invalid(format!("end form {s:?} should look like {side}1"));
    let rest = s.strip_prefix(side).or_else(|| s.strip_prefix(side.to_ascii_lowercase())).ok_or_else(bad)?;
    rest.parse().map_err(|_| bad())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum DescriptorJson {
    Path {
        edges: usize,
    },
    Cycle {
        n: usize,
    },
    Prism {
        k: usize,
    },
    MobiusLadder {
        k: usize,
    },
    Particular,
    QuasiLadder {
        core: usize,
        left: String,
        right: String,
        #[serde(default)]
        twist: bool,
    },
    InfiniteWindow {
        family: char,
        width: usize,
    },
    Unrecognized,
}

impl From<&FamilyDescriptor> for DescriptorJson {
    fn from(d: &FamilyDescriptor) -> Self {
        match *d {
            FamilyDescriptor::Path { edges } => DescriptorJson::Path { edges },
            FamilyDescriptor::Cycle { n } => DescriptorJson::Cycle { n },
            FamilyDescriptor::Prism { k } => DescriptorJson::Prism { k },
            FamilyDescriptor::MobiusLadder { k } => DescriptorJson::MobiusLadder { k },
            FamilyDescriptor::Particular => DescriptorJson::Particular,
            FamilyDescriptor::QuasiLadder(s) => DescriptorJson::QuasiLadder {
                core: s.core_rungs,
                left: format!("L{}", s.left),
                right: format!("R{}", s.right),
                twist: s.twist,
            },
            FamilyDescriptor::InfiniteWindow { kind, width } => {
                DescriptorJson::InfiniteWindow { family: kind.letter(), width }
            }
        }
    }
}

impl DescriptorJson {
    /// `None` for [`DescriptorJson::Unrecognized`].
    pub fn to_descriptor(&self) -> Result<Option<FamilyDescriptor>, FormatError> {
        Ok(Some(match self {
            DescriptorJson::Path { edges } => FamilyDescriptor::Path { edges: *edges },
            DescriptorJson::Cycle { n } => FamilyDescriptor::Cycle { n: *n },
            DescriptorJson::Prism { k } => FamilyDescriptor::Prism { k: *k },
            DescriptorJson::MobiusLadder { k } => FamilyDescriptor::MobiusLadder { k: *k },
            DescriptorJson::Particular => FamilyDescriptor::Particular,
            DescriptorJson::QuasiLadder { core, left, right, twist } => {
                FamilyDescriptor::QuasiLadder(QuasiLadderSpec {
                    core_rungs: *core,
                    left: parse_form_ref(left, 'L')?,
                    right: parse_form_ref(right, 'R')?,
                    twist: *twist,
                })
            }
            DescriptorJson::InfiniteWindow { family, width } => FamilyDescriptor::InfiniteWindow {
                kind: WindowKind::from_letter(*family)
                    .ok_or_else(|| FormatError::Invalid(format!("unknown infinite family {family:?}")))?,
                width: *width,
            },
            DescriptorJson::Unrecognized => return Ok(None),
        }))
    }
}
