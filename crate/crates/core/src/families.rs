//! Generators for the classified families of subcubic graphs with
//! nonnegative curvature and large diameter, the quasi-ladder end-form
//! catalog, and finite windows of the infinite families.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::curvature::{edge_curvature, is_nonneg_curved, Engine};
use crate::graph::{Graph, GraphError, WeightScheme};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilyError {
    BadParam(String),
    /// A generated graph failed its own checks; the payload says which.
    SelfValidationFailed(String),
}

impl fmt::Display for FamilyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyError::BadParam(m) => write!(f, "bad parameter: {m}"),
            FamilyError::SelfValidationFailed(m) => write!(f, "self-validation failed: {m}"),
        }
    }
}

fn bad(msg: &str) -> FamilyError {
    FamilyError::BadParam(String::from(msg))
}

fn build(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::with_degree_cap(n, edges, WeightScheme::Combinatorial, 3).expect("generator produced an invalid graph")
}

/// Path with `edges` edges (so `edges + 1` vertices).
pub fn gen_path(edges: usize) -> Result<Graph, FamilyError> {
    if edges == 0 {
        return Err(bad("path needs at least one edge"));
    }
    let e: Vec<_> = (0..edges).map(|i| (i, i + 1)).collect();
    Ok(build(edges + 1, &e))
}

pub fn gen_cycle(n: usize) -> Result<Graph, FamilyError> {
    if n < 3 {
        return Err(bad("cycle needs at least 3 vertices"));
    }
    let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Ok(build(n, &e))
}

/// `C_k × K_2`: outer cycle `0..k`, inner cycle `k..2k`, rungs `i ∼ i+k`.
pub fn gen_prism(k: usize) -> Result<Graph, FamilyError> {
    if k < 3 {
        return Err(bad("prism needs k >= 3"));
    }
    let mut e = Vec::new();
    for i in 0..k {
        e.push((i, (i + 1) % k));
        e.push((k + i, k + (i + 1) % k));
        e.push((i, k + i));
    }
    Ok(build(2 * k, &e))
}

/// `C_{2k}` plus the `k` antipodal chords.
pub fn gen_mobius(k: usize) -> Result<Graph, FamilyError> {
    if k < 3 {
        return Err(bad("Möbius ladder needs k >= 3"));
    }
    let n = 2 * k;
    let mut e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    e.extend((0..k).map(|i| (i, i + k)));
    Ok(build(n, &e))
}

/// The exceptional 10-vertex graph: path `v_0..v_6` (vertices 0..6) with
/// `u_1, u_3, u_5` (7, 8, 9) hanging off `v_1, v_3, v_5` and joined as a path
/// `u_1 u_3 u_5`.
pub fn gen_particular() -> Result<Graph, FamilyError> {
    let mut e: Vec<_> = (0..6).map(|i| (i, i + 1)).collect();
    e.extend([(1, 7), (3, 8), (5, 9), (7, 8), (8, 9)]);
    let g = build(10, &e);
    let dist = g.distances();
    if dist.diameter() != 6 {
        return Err(FamilyError::SelfValidationFailed(String::from("particular graph: diameter is not 6")));
    }
    if !is_nonneg_curved(&g, &dist, Engine::Transport).expect("edges") {
        return Err(FamilyError::SelfValidationFailed(String::from("particular graph: negative edge")));
    }
    Ok(g)
}

/// A cap attached to one end rung `(x, y)` of a ladder core. Its vertices are
/// numbered `0..vertices`; `attach = (a, b)` joins `x ∼ a` and `y ∼ b`, and
/// `a = b` is allowed. The empty form is the bare rung end.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EndForm {
    pub id: usize,
    pub vertices: usize,
    pub edges: Vec<(usize, usize)>,
    pub attach: (Option<usize>, Option<usize>),
    /// Whether quasi-ladders with this cap keep `κ^O ≥ 0` on normalized graphs.
    pub ollivier_nonneg: bool,
}

impl EndForm {
    pub fn is_bare(&self) -> bool {
        self.vertices == 0
    }

    /// The same cap with the roles of the two rails exchanged.
    pub fn swapped(&self) -> EndForm {
        EndForm { attach: (self.attach.1, self.attach.0), ..self.clone() }
    }

    /// Structural sanity: indices in range, simple, every cap vertex
    /// reachable from an attachment point, degrees at most 3 once attached.
    pub fn check(&self) -> Result<(), FamilyError> {
        let m = self.vertices;
        let (a, b) = self.attach;
        if m == 0 {
            return if a.is_none() && b.is_none() && self.edges.is_empty() {
                Ok(())
            } else {
                Err(bad("empty end form cannot have edges or attachments"))
            };
        }
        if a.is_none() && b.is_none() {
            return Err(bad("end form has no attachment"));
        }
        let mut deg = vec![0usize; m];
        let mut seen = BTreeSet::new();
        for &(u, v) in &self.edges {
            if u >= m || v >= m || u == v || !seen.insert((u.min(v), u.max(v))) {
                return Err(bad("end form edge list is not simple"));
            }
            deg[u] += 1;
            deg[v] += 1;
        }
        for x in [a, b].into_iter().flatten() {
            if x >= m {
                return Err(bad("attachment index out of range"));
            }
            deg[x] += 1;
        }
        if deg.iter().any(|&d| d > 3) {
            return Err(bad("end form exceeds degree 3"));
        }
        let mut reach = vec![false; m];
        let mut stack: Vec<usize> = [a, b].into_iter().flatten().collect();
        for &s in &stack {
            reach[s] = true;
        }
        while let Some(x) = stack.pop() {
            for &(u, v) in &self.edges {
                let y = if u == x {
                    v
                } else if v == x {
                    u
                } else {
                    continue;
                };
                if !reach[y] {
                    reach[y] = true;
                    stack.push(y);
                }
            }
        }
        if reach.iter().all(|&r| r) {
            Ok(())
        } else {
            Err(bad("end form has a vertex not connected to the ladder"))
        }
    }
}

struct FormData {
    vertices: usize,
    edges: &'static [(usize, usize)],
    attach: (Option<usize>, Option<usize>),
    ollivier_nonneg: bool,
}

/// Caps up to exchanging the rails, found by attaching every small subcubic
/// graph to the end of a long ladder and keeping those with `κ ≥ 0`.
const BUILTIN_FORMS: &[FormData] = &[
    // bare rung
    FormData { vertices: 0, edges: &[], attach: (None, None), ollivier_nonneg: true },
    // pendant vertex on one corner
    FormData { vertices: 1, edges: &[], attach: (Some(0), None), ollivier_nonneg: true },
    // pendant vertex on both corners
    FormData { vertices: 2, edges: &[], attach: (Some(0), Some(1)), ollivier_nonneg: true },
    // apex closing a triangle over the end rung
    FormData { vertices: 1, edges: &[], attach: (Some(0), Some(0)), ollivier_nonneg: true },
    // triangle apex carrying a pendant vertex
    FormData { vertices: 2, edges: &[(0, 1)], attach: (Some(0), Some(0)), ollivier_nonneg: true },
    // path of three closing a pentagon over the end rung
    FormData { vertices: 3, edges: &[(0, 1), (1, 2)], attach: (Some(0), Some(2)), ollivier_nonneg: false },
    // pentagon whose middle vertex carries a pendant vertex
    FormData { vertices: 4, edges: &[(0, 1), (1, 2), (1, 3)], attach: (Some(0), Some(2)), ollivier_nonneg: false },
];

/// The builtin end-form catalog; ids start at 1.
pub fn end_form_catalog() -> Vec<EndForm> {
    BUILTIN_FORMS
        .iter()
        .enumerate()
        .map(|(i, f)| EndForm {
            id: i + 1,
            vertices: f.vertices,
            edges: f.edges.to_vec(),
            attach: f.attach,
            ollivier_nonneg: f.ollivier_nonneg,
        })
        .collect()
}

/// Ladder core of `core_rungs` rungs capped by two end forms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QuasiLadderSpec {
    pub core_rungs: usize,
    /// Catalog id of the left cap.
    pub left: usize,
    /// Catalog id of the right cap.
    pub right: usize,
    /// Attach the right cap with the rails exchanged.
    pub twist: bool,
}

/// Vertex numbering of [`attach_caps`]: rail vertices `x_i = 2i`,
/// `y_i = 2i + 1`, then the left cap, then the right cap.
pub fn ladder_vertex(rail: usize, i: usize) -> usize {
    2 * i + rail
}

/// Builds a ladder of `rungs` rungs with `left` on rung 0 and `right` on the
/// last rung, without any curvature check. `right` attaches with `x ∼ a`
/// unless `twist`.
pub fn attach_caps(rungs: usize, left: &EndForm, right: &EndForm, twist: bool) -> Result<Graph, GraphError> {
    let mut edges = Vec::new();
    for i in 0..rungs {
        edges.push((ladder_vertex(0, i), ladder_vertex(1, i)));
        if i + 1 < rungs {
            edges.push((ladder_vertex(0, i), ladder_vertex(0, i + 1)));
            edges.push((ladder_vertex(1, i), ladder_vertex(1, i + 1)));
        }
    }
    let mut n = 2 * rungs;
    let mut place = |form: &EndForm, rung: usize, swap: bool, edges: &mut Vec<(usize, usize)>| {
        let base = n;
        edges.extend(form.edges.iter().map(|&(u, v)| (base + u, base + v)));
        let (a, b) = if swap { (form.attach.1, form.attach.0) } else { form.attach };
        if let Some(a) = a {
            edges.push((ladder_vertex(0, rung), base + a));
        }
        if let Some(b) = b {
            edges.push((ladder_vertex(1, rung), base + b));
        }
        n += form.vertices;
    };
    place(left, 0, false, &mut edges);
    place(right, rungs - 1, twist, &mut edges);
    Graph::with_degree_cap(n, &edges, WeightScheme::Combinatorial, 3)
}

fn lookup(catalog: &[EndForm], id: usize) -> Result<&EndForm, FamilyError> {
    catalog.iter().find(|f| f.id == id).ok_or_else(|| FamilyError::BadParam(alloc::format!("unknown end form {id}")))
}

pub fn gen_quasi_ladder(spec: &QuasiLadderSpec) -> Result<Graph, FamilyError> {
    gen_quasi_ladder_with(spec, &end_form_catalog())
}

pub fn gen_quasi_ladder_with(spec: &QuasiLadderSpec, catalog: &[EndForm]) -> Result<Graph, FamilyError> {
    if spec.core_rungs < 2 {
        return Err(bad("quasi-ladder core needs at least 2 rungs"));
    }
    let (l, r) = (lookup(catalog, spec.left)?, lookup(catalog, spec.right)?);
    l.check()?;
    r.check()?;
    let g = attach_caps(spec.core_rungs, l, r, spec.twist)
        .map_err(|e| FamilyError::SelfValidationFailed(alloc::format!("{e}")))?;
    let dist = g.distances();
    if !is_nonneg_curved(&g, &dist, Engine::Transport).expect("edges") {
        return Err(FamilyError::SelfValidationFailed(alloc::format!(
            "quasi-ladder L{} R{} core {} has a negative edge",
            spec.left,
            spec.right,
            spec.core_rungs
        )));
    }
    Ok(g)
}

/// The infinite families, by their letter in the classification list.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum WindowKind {
    /// (a) line infinite in both directions.
    Line,
    /// (b) line infinite in one direction.
    HalfLine,
    /// (c) ladder infinite in both directions.
    Ladder,
    /// (d)..(j) one-sided ladder with the end form of the given catalog id.
    QuasiLadder(usize),
}

impl WindowKind {
    pub fn letter(self) -> char {
        match self {
            WindowKind::Line => 'a',
            WindowKind::HalfLine => 'b',
            WindowKind::Ladder => 'c',
            WindowKind::QuasiLadder(i) => (b'c' + i as u8) as char,
        }
    }

    pub fn from_letter(c: char) -> Option<WindowKind> {
        match c {
            'a' => Some(WindowKind::Line),
            'b' => Some(WindowKind::HalfLine),
            'c' => Some(WindowKind::Ladder),
            'd'..='z' => Some(WindowKind::QuasiLadder((c as u8 - b'c') as usize)),
            _ => None,
        }
    }
}

/// A finite piece of an infinite family. `interior[j]` refers to
/// `graph.edges()[j]` and holds when both endpoints are at least 4 hops
/// from every truncated vertex, so its curvature equals the infinite value.
#[derive(Clone, Debug)]
pub struct Window {
    pub graph: Graph,
    pub boundary: Vec<usize>,
    pub interior: Vec<bool>,
}

impl Window {
    pub fn interior_edges(&self) -> Vec<(usize, usize)> {
        self.graph.edges().into_iter().zip(&self.interior).filter(|(_, &i)| i).map(|(e, _)| e).collect()
    }
}

/// Truncation of an infinite family. `width` counts path vertices for lines
/// and rungs for ladders.
pub fn gen_infinite_window(kind: WindowKind, width: usize) -> Result<Window, FamilyError> {
    gen_infinite_window_with(kind, width, &end_form_catalog())
}

pub fn gen_infinite_window_with(kind: WindowKind, width: usize, catalog: &[EndForm]) -> Result<Window, FamilyError> {
    if width < 8 {
        return Err(bad("window width must be at least 8"));
    }
    let bare = EndForm { id: 0, vertices: 0, edges: Vec::new(), attach: (None, None), ollivier_nonneg: true };
    let (graph, boundary) = match kind {
        WindowKind::Line => (gen_path(width - 1)?, vec![0, width - 1]),
        WindowKind::HalfLine => (gen_path(width - 1)?, vec![width - 1]),
        WindowKind::Ladder => {
            let g = attach_caps(width, &bare, &bare, false).expect("ladder");
            (g, vec![0, 1, 2 * width - 2, 2 * width - 1])
        }
        WindowKind::QuasiLadder(id) => {
            let form = lookup(catalog, id)?;
            form.check()?;
            let g = attach_caps(width, form, &bare, false)
                .map_err(|e| FamilyError::SelfValidationFailed(alloc::format!("{e}")))?;
            (g, vec![2 * width - 2, 2 * width - 1])
        }
    };
    let far: Vec<bool> = {
        let mut d = vec![u32::MAX; graph.n()];
        for &b in &boundary {
            for (x, dx) in graph.bfs(b).into_iter().enumerate() {
                d[x] = d[x].min(dx);
            }
        }
        d.into_iter().map(|x| x >= 4).collect()
    };
    let interior = graph.edges().into_iter().map(|(u, v)| far[u] && far[v]).collect();
    Ok(Window { graph, boundary, interior })
}

/// Minimum curvature over the interior edges of a window.
pub fn window_min_interior_curvature(w: &Window) -> Option<crate::rational::Rational> {
    let dist = w.graph.distances();
    w.interior_edges()
        .into_iter()
        .map(|(u, v)| edge_curvature(&w.graph, &dist, u, v, Engine::Transport).expect("edge").value)
        .min()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FamilyKind {
    Path,
    Cycle,
    Prism,
    MobiusLadder,
    Particular,
    QuasiLadder,
    InfiniteWindow,
}

impl FamilyKind {
    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::Path => "Path",
            FamilyKind::Cycle => "Cycle",
            FamilyKind::Prism => "Prism",
            FamilyKind::MobiusLadder => "MobiusLadder",
            FamilyKind::Particular => "Particular",
            FamilyKind::QuasiLadder => "QuasiLadder",
            FamilyKind::InfiniteWindow => "InfiniteWindow",
        }
    }
}

/// A family member with its parameters.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FamilyDescriptor {
    Path { edges: usize },
    Cycle { n: usize },
    Prism { k: usize },
    MobiusLadder { k: usize },
    Particular,
    QuasiLadder(QuasiLadderSpec),
    InfiniteWindow { kind: WindowKind, width: usize },
}

impl FamilyDescriptor {
    pub fn kind(&self) -> FamilyKind {
        match self {
            FamilyDescriptor::Path { .. } => FamilyKind::Path,
            FamilyDescriptor::Cycle { .. } => FamilyKind::Cycle,
            FamilyDescriptor::Prism { .. } => FamilyKind::Prism,
            FamilyDescriptor::MobiusLadder { .. } => FamilyKind::MobiusLadder,
            FamilyDescriptor::Particular => FamilyKind::Particular,
            FamilyDescriptor::QuasiLadder(_) => FamilyKind::QuasiLadder,
            FamilyDescriptor::InfiniteWindow { .. } => FamilyKind::InfiniteWindow,
        }
    }

    pub fn generate(&self) -> Result<Graph, FamilyError> {
        self.generate_with(&end_form_catalog())
    }

    pub fn generate_with(&self, catalog: &[EndForm]) -> Result<Graph, FamilyError> {
        match *self {
            FamilyDescriptor::Path { edges } => gen_path(edges),
            FamilyDescriptor::Cycle { n } => gen_cycle(n),
            FamilyDescriptor::Prism { k } => gen_prism(k),
            FamilyDescriptor::MobiusLadder { k } => gen_mobius(k),
            FamilyDescriptor::Particular => gen_particular(),
            FamilyDescriptor::QuasiLadder(spec) => gen_quasi_ladder_with(&spec, catalog),
            FamilyDescriptor::InfiniteWindow { kind, width } => {
                Ok(gen_infinite_window_with(kind, width, catalog)?.graph)
            }
        }
    }
}

/// Whether a family member belongs to the smaller list of graphs with
/// nonnegative Ollivier curvature (finite members only).
pub fn ollivier_family_member_with(d: &FamilyDescriptor, catalog: &[EndForm]) -> bool {
    match d {
        FamilyDescriptor::Path { .. }
        | FamilyDescriptor::Cycle { .. }
        | FamilyDescriptor::Prism { .. }
        | FamilyDescriptor::MobiusLadder { .. } => true,
        FamilyDescriptor::Particular | FamilyDescriptor::InfiniteWindow { .. } => false,
        FamilyDescriptor::QuasiLadder(s) => {
            [s.left, s.right].iter().all(|&id| catalog.iter().any(|f| f.id == id && f.ollivier_nonneg))
        }
    }
}

pub fn ollivier_family_member(d: &FamilyDescriptor) -> bool {
    ollivier_family_member_with(d, &end_form_catalog())
}
