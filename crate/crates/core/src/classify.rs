//! Membership in the class of subcubic graphs with nonnegative curvature and
//! diameter at least 6, the local-structure checker along geodesic paths,
//! geodesic cycles, and the family recognizer.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::Signed;

pub use crate::canon::{canonical_form, isomorphic, CanonicalForm};
use crate::canon::{canonical_labeling, BitGraph};
use crate::curvature::{is_nonneg_curved, min_curvature, Engine};
use crate::families::{
    attach_caps, end_form_catalog, gen_mobius, gen_particular, gen_prism, EndForm, FamilyDescriptor, QuasiLadderSpec,
};
pub use crate::families::{ollivier_family_member, ollivier_family_member_with, FamilyKind};
use crate::graph::{is_geodesic_cycle, DistanceMatrix, GeodesicPath, Graph, GraphError};
use crate::patterns::{builtin_cases, case_id, PatternCase, PatternTemplate, Role};
use crate::rational::Rational;
use crate::state::{state_function, State, StateAssignment};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassGMembership {
    pub max_degree_ok: bool,
    /// `None` only for the one-vertex graph.
    pub min_curvature: Option<Rational>,
    pub diameter: u32,
    pub in_g: bool,
}

pub fn membership_g(g: &Graph) -> ClassGMembership {
    let dist = g.distances();
    let max_degree_ok = g.max_degree() <= 3;
    let min_curvature = min_curvature(g, &dist);
    let diameter = dist.diameter();
    let nonneg = min_curvature.as_ref().is_none_or(|k| !k.is_negative());
    ClassGMembership { max_degree_ok, min_curvature, diameter, in_g: max_degree_ok && nonneg && diameter >= 6 }
}

/// Cheaper yes/no version of [`membership_g`].
pub fn in_class_g(g: &Graph, dist: &DistanceMatrix) -> bool {
    g.max_degree() <= 3 && dist.diameter() >= 6 && is_nonneg_curved(g, dist, Engine::Auto).expect("edges")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClassifyError {
    NotInClassG(ClassGMembership),
    Graph(GraphError),
    BadPartition(&'static str),
}

impl fmt::Display for ClassifyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassifyError::NotInClassG(m) => write!(
                f,
                "graph is not in the class (max degree ok: {}, diameter {}, nonnegative: {})",
                m.max_degree_ok,
                m.diameter,
                m.min_curvature.as_ref().is_none_or(|k| !k.is_negative())
            ),
            ClassifyError::Graph(e) => write!(f, "{e}"),
            ClassifyError::BadPartition(why) => write!(f, "invalid partition: {why}"),
        }
    }
}

impl From<GraphError> for ClassifyError {
    fn from(e: GraphError) -> Self {
        ClassifyError::Graph(e)
    }
}

// ---------------------------------------------------------------------------
// local structure

/// Outcome for one window `v_i..v_{i+3}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WindowOutcome {
    /// Labels of every template present.
    Matched(Vec<char>),
    /// The pair is one of the impossible ones.
    ForbiddenPair,
    /// Allowed pair, but no template is present.
    NoPattern,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WindowReport {
    pub i: usize,
    pub pair: (State, State),
    pub outcome: WindowOutcome,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalStructureReport {
    pub path: Vec<usize>,
    pub windows: Vec<WindowReport>,
}

impl LocalStructureReport {
    pub fn violations(&self) -> impl Iterator<Item = &WindowReport> {
        self.windows.iter().filter(|w| !matches!(w.outcome, WindowOutcome::Matched(_)))
    }

    pub fn is_clean(&self) -> bool {
        self.violations().next().is_none()
    }

    /// Every matched window also matches a template not marked excluded.
    pub fn clean_without_excluded(&self, cases: &[PatternCase]) -> bool {
        self.windows.iter().all(|w| match &w.outcome {
            WindowOutcome::Matched(labels) => {
                let case = cases.iter().find(|c| c.pair == w.pair).expect("case table covers all pairs");
                labels.iter().any(|l| case.templates.iter().any(|t| t.label == *l && !t.excluded))
            }
            _ => false,
        })
    }

    /// Window results keyed by case id, for reporting.
    pub fn by_case(&self) -> BTreeMap<String, usize> {
        let mut m = BTreeMap::new();
        for w in &self.windows {
            *m.entry(case_id(w.pair)).or_insert(0) += 1;
        }
        m
    }
}

struct WindowRoles {
    p: usize,
    a: usize,
    b: usize,
    q: usize,
    ua: Option<usize>,
    ub: Option<usize>,
    base: i64,
}

fn template_present(g: &Graph, dist: &DistanceMatrix, root: usize, roles: &WindowRoles, t: &PatternTemplate) -> bool {
    let fixed = |r: Role| -> Option<usize> {
        match r {
            Role::P => Some(roles.p),
            Role::A => Some(roles.a),
            Role::B => Some(roles.b),
            Role::Q => Some(roles.q),
            Role::UA => roles.ua,
            Role::UB => roles.ub,
            Role::W | Role::W2 => None,
        }
    };
    let taken: Vec<usize> =
        [Role::P, Role::A, Role::B, Role::Q, Role::UA, Role::UB].into_iter().filter_map(fixed).collect();
    // candidates for each free role
    let level_of = |role: Role| t.free.iter().find(|(r, _)| *r == role).map(|&(_, o)| roles.base + o);
    let candidates = |role: Role| -> Vec<usize> {
        match level_of(role) {
            None => vec![usize::MAX],
            Some(level) => (0..g.n()).filter(|&x| dist.get(root, x) as i64 == level && !taken.contains(&x)).collect(),
        }
    };
    for w in candidates(Role::W) {
        for w2 in candidates(Role::W2) {
            if w != usize::MAX && w == w2 {
                continue;
            }
            let resolve = |r: Role| match r {
                Role::W => (w != usize::MAX).then_some(w),
                Role::W2 => (w2 != usize::MAX).then_some(w2),
                other => fixed(other),
            };
            let ok = t.edges.iter().all(|&(x, y)| match (resolve(x), resolve(y)) {
                (Some(x), Some(y)) => g.adjacent(x, y),
                _ => false,
            });
            if ok {
                return true;
            }
        }
    }
    false
}

/// Checks every window of `path` against the case table.
pub fn forbidden_pair_check_with(
    g: &Graph,
    dist: &DistanceMatrix,
    path: &GeodesicPath,
    cases: &[PatternCase],
) -> Result<LocalStructureReport, GraphError> {
    let states = state_function(g, dist, path)?;
    let vs = path.vertices();
    let l = vs.len() - 1;
    let mut windows = Vec::new();
    for i in 0..l.saturating_sub(2) {
        let (Some(sa), Some(sb)) = (states.state(i + 1), states.state(i + 2)) else { continue };
        let case = cases.iter().find(|c| c.pair == (sa, sb)).expect("case table covers all pairs");
        let outcome = if case.forbidden {
            WindowOutcome::ForbiddenPair
        } else {
            let roles = WindowRoles {
                p: vs[i],
                a: vs[i + 1],
                b: vs[i + 2],
                q: vs[i + 3],
                ua: states.extra[i + 1],
                ub: states.extra[i + 2],
                base: i as i64,
            };
            let labels: Vec<char> = case
                .templates
                .iter()
                .filter(|t| template_present(g, dist, states.root, &roles, t))
                .map(|t| t.label)
                .collect();
            if labels.is_empty() {
                WindowOutcome::NoPattern
            } else {
                WindowOutcome::Matched(labels)
            }
        };
        windows.push(WindowReport { i, pair: (sa, sb), outcome });
    }
    Ok(LocalStructureReport { path: vs.to_vec(), windows })
}

pub fn forbidden_pair_check(
    g: &Graph,
    dist: &DistanceMatrix,
    path: &GeodesicPath,
) -> Result<LocalStructureReport, GraphError> {
    forbidden_pair_check_with(g, dist, path, &builtin_cases())
}

/// A 3⁺ state forces 3⁺ on every earlier interior vertex, and a 3⁻ state at
/// index ≥ 2 forces 3⁻ on every later interior vertex.
pub fn propagation_check(g: &Graph, dist: &DistanceMatrix, path: &GeodesicPath) -> Result<bool, GraphError> {
    let s = state_function(g, dist, path)?;
    Ok(propagation_holds(&s))
}

pub fn propagation_holds(s: &StateAssignment) -> bool {
    let l = s.labels.len() - 1;
    let at = |j: usize| s.state(j);
    for i in 1..l {
        if at(i) == Some(State::ThreePlus) && (1..i).any(|j| at(j) != Some(State::ThreePlus)) {
            return false;
        }
        if i >= 2 && at(i) == Some(State::ThreeMinus) && (i + 1..l).any(|j| at(j) != Some(State::ThreeMinus)) {
            return false;
        }
    }
    true
}

// ---------------------------------------------------------------------------
// geodesic cycles

/// Every geodesic cycle of length at least `min_len`, each listed once
/// (rotated to start at its smallest vertex, direction with the smaller
/// second vertex).
pub fn geodesic_cycles(g: &Graph, dist: &DistanceMatrix, min_len: usize) -> Vec<Vec<usize>> {
    let max_len = 2 * dist.diameter() as usize + 1;
    let mut out = Vec::new();
    for s in 0..g.n() {
        let mut path = vec![s];
        let mut on = vec![false; g.n()];
        on[s] = true;
        extend_cycle(g, dist, s, min_len.max(3), max_len, &mut path, &mut on, &mut out);
    }
    out
}

#[allow(clippy::too_many_arguments)]
fn extend_cycle(
    g: &Graph,
    dist: &DistanceMatrix,
    s: usize,
    min_len: usize,
    max_len: usize,
    path: &mut Vec<usize>,
    on: &mut Vec<bool>,
    out: &mut Vec<Vec<usize>>,
) {
    let last = *path.last().expect("nonempty");
    for &x in g.neighbors(last) {
        if x == s && path.len() >= min_len && path[1] < path[path.len() - 1] {
            if is_geodesic_cycle(g, dist, path).unwrap_or(false) {
                out.push(path.clone());
            }
            continue;
        }
        if x <= s || on[x] || path.len() >= max_len {
            continue;
        }
        // a geodesic cycle of length L has geodesic arcs up to ⌊L/2⌋ ≥ ⌊min_len/2⌋
        let k = path.len();
        let reach = (min_len / 2).min(k);
        if (1..=reach).any(|t| dist.get(path[k - t], x) as usize != t) {
            continue;
        }
        path.push(x);
        on[x] = true;
        extend_cycle(g, dist, s, min_len, max_len, path, on, out);
        on[x] = false;
        path.pop();
    }
}

/// Shortest closed walk through `c1`, then `a`, then `c2`, then `b`, for a
/// partition `V = A ⊔ B ⊔ C_1 ⊔ C_2` with no `A`–`B` or `C_1`–`C_2` edges,
/// complete `C_1`, `C_2`, and connected `A ∪ C`, `B ∪ C`. The result is a
/// cycle, and a geodesic one.
pub fn find_geodesic_cycle(
    g: &Graph,
    a: &[usize],
    b: &[usize],
    c1: &[usize],
    c2: &[usize],
) -> Result<Vec<usize>, ClassifyError> {
    let n = g.n();
    let mut part = vec![u8::MAX; n];
    for (tag, set) in [(0u8, a), (1, b), (2, c1), (3, c2)] {
        for &v in set {
            if v >= n {
                return Err(ClassifyError::Graph(GraphError::VertexOutOfRange { vertex: v, n }));
            }
            if part[v] != u8::MAX {
                return Err(ClassifyError::BadPartition("sets overlap"));
            }
            part[v] = tag;
        }
    }
    if part.contains(&u8::MAX) {
        return Err(ClassifyError::BadPartition("sets do not cover the vertex set"));
    }
    if c1.is_empty() || c2.is_empty() {
        return Err(ClassifyError::BadPartition("C_1 and C_2 must be nonempty"));
    }
    for (u, v) in g.edges() {
        let pair = (part[u].min(part[v]), part[u].max(part[v]));
        if pair == (0, 1) || pair == (2, 3) {
            return Err(ClassifyError::BadPartition("forbidden edge between A and B or C_1 and C_2"));
        }
    }
    for c in [c1, c2] {
        if c.iter().any(|&x| c.iter().any(|&y| x != y && !g.adjacent(x, y))) {
            return Err(ClassifyError::BadPartition("C_i is not complete"));
        }
    }
    // shortest C_1 → C_2 path with interior in `side`, as a vertex list
    let crossing = |side: u8, from: &[usize], to: u8| -> Option<Vec<Vec<usize>>> {
        let mut paths = Vec::new();
        for &s in from {
            let mut prev = vec![usize::MAX; n];
            let mut seen = vec![false; n];
            seen[s] = true;
            let mut queue = alloc::collections::VecDeque::from([s]);
            while let Some(x) = queue.pop_front() {
                if part[x] == to {
                    continue;
                }
                for &y in g.neighbors(x) {
                    if !seen[y] && (part[y] == side || part[y] == to) {
                        seen[y] = true;
                        prev[y] = x;
                        queue.push_back(y);
                    }
                }
            }
            for t in (0..n).filter(|&t| part[t] == to && seen[t]) {
                let mut p = vec![t];
                while *p.last().expect("nonempty") != s {
                    p.push(prev[*p.last().expect("nonempty")]);
                }
                p.reverse();
                paths.push(p);
            }
        }
        (!paths.is_empty()).then_some(paths)
    };
    let forward = crossing(0, c1, 3).ok_or(ClassifyError::BadPartition("A ∪ C is not connected"))?;
    let backward = crossing(1, c2, 2).ok_or(ClassifyError::BadPartition("B ∪ C is not connected"))?;
    let mut best: Option<Vec<usize>> = None;
    for pa in &forward {
        for pb in &backward {
            let (a_end, b_start) = (pa[pa.len() - 1], pb[0]);
            let (b_end, a_start) = (pb[pb.len() - 1], pa[0]);
            let mut cyc = pa.clone();
            if a_end == b_start {
                cyc.pop();
            }
            cyc.extend(pb.iter().copied());
            if b_end == a_start {
                cyc.pop();
            }
            if best.as_ref().is_none_or(|b| cyc.len() < b.len()) {
                best = Some(cyc);
            }
        }
    }
    Ok(best.expect("at least one pair of crossings"))
}

// ---------------------------------------------------------------------------
// recognizer

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Classification {
    Family(FamilyDescriptor),
    Unrecognized,
}

/// Recognizes a graph of the class; `NotInClassG` when it is not a member.
pub fn classify(g: &Graph) -> Result<Classification, ClassifyError> {
    classify_with(g, &end_form_catalog())
}

pub fn classify_with(g: &Graph, catalog: &[EndForm]) -> Result<Classification, ClassifyError> {
    let dist = g.distances();
    if !in_class_g(g, &dist) {
        return Err(ClassifyError::NotInClassG(membership_g(g)));
    }
    Ok(recognize(g, catalog).map_or(Classification::Unrecognized, Classification::Family))
}

/// Structural recognition without the membership check.
pub fn recognize(g: &Graph, catalog: &[EndForm]) -> Option<FamilyDescriptor> {
    let n = g.n();
    if g.max_degree() <= 2 {
        return Some(if g.edge_count() == n {
            FamilyDescriptor::Cycle { n }
        } else {
            FamilyDescriptor::Path { edges: n - 1 }
        });
    }
    if (0..n).all(|v| g.degree(v) == 3) && n.is_multiple_of(2) && n >= 6 {
        let k = n / 2;
        let form = canonical_form(g);
        if canonical_form(&gen_prism(k).expect("k >= 3")) == form {
            return Some(FamilyDescriptor::Prism { k });
        }
        if canonical_form(&gen_mobius(k).expect("k >= 3")) == form {
            return Some(FamilyDescriptor::MobiusLadder { k });
        }
    }
    if n == 10 && isomorphic(g, &gen_particular().expect("particular graph validates")) {
        return Some(FamilyDescriptor::Particular);
    }
    recognize_quasi_ladder(g, catalog).map(FamilyDescriptor::QuasiLadder)
}

/// A ladder core `(x_1, y_1), …, (x_k, y_k)`.
type Core = Vec<(usize, usize)>;

fn ladder_cores(g: &Graph) -> Vec<Core> {
    let mut found: BTreeSet<Core> = BTreeSet::new();
    let mut stack: Vec<Core> = Vec::new();
    for (u, v) in g.edges() {
        stack.push(vec![(u, v)]);
        stack.push(vec![(v, u)]);
    }
    while let Some(core) = stack.pop() {
        let &(x, y) = core.last().expect("nonempty");
        let used = |z: usize| core.iter().any(|&(a, b)| a == z || b == z);
        let mut extended = false;
        for &x2 in g.neighbors(x) {
            if used(x2) {
                continue;
            }
            for &y2 in g.neighbors(y) {
                if y2 != x2 && !used(y2) && g.adjacent(x2, y2) {
                    let mut next = core.clone();
                    next.push((x2, y2));
                    stack.push(next);
                    extended = true;
                }
            }
        }
        if !extended && core.len() >= 2 {
            // keep one orientation per core
            let rev: Core = core.iter().rev().copied().collect();
            let swapped: Core = core.iter().map(|&(a, b)| (b, a)).collect();
            let rev_swapped: Core = rev.iter().map(|&(a, b)| (b, a)).collect();
            let key = [core.clone(), rev, swapped, rev_swapped].into_iter().min().expect("four orientations");
            found.insert(key);
        }
    }
    let mut cores: Vec<Core> = found.into_iter().collect();
    cores.sort_by(|a, b| b.len().cmp(&a.len()).then(a.cmp(b)));
    cores
}

/// Rooted form of a cap: the cap vertices plus two marked roots standing for
/// the end rung, `X ∼ a` and `Y ∼ b`.
pub fn rooted_form(vertices: usize, edges: &[(usize, usize)], attach: (Option<usize>, Option<usize>)) -> CanonicalForm {
    let (x, y) = (vertices, vertices + 1);
    let mut all: Vec<(usize, usize)> = edges.to_vec();
    if let Some(a) = attach.0 {
        all.push((x, a));
    }
    if let Some(b) = attach.1 {
        all.push((y, b));
    }
    let bg = BitGraph::from_edges(vertices + 2, &all);
    let mut colors = vec![0u32; vertices + 2];
    colors[x] = 1;
    colors[y] = 2;
    canonical_labeling(&bg, Some(&colors)).form
}

/// Catalog id and whether the rails are exchanged, for a cap given by its
/// rooted form.
fn match_cap(form: &CanonicalForm, catalog: &[EndForm]) -> Option<(usize, bool)> {
    for f in catalog {
        if &rooted_form(f.vertices, &f.edges, f.attach) == form {
            return Some((f.id, false));
        }
        if &rooted_form(f.vertices, &f.edges, (f.attach.1, f.attach.0)) == form {
            return Some((f.id, true));
        }
    }
    None
}

/// Splits `g` into a ladder core and two caps and looks both caps up.
pub fn recognize_quasi_ladder(g: &Graph, catalog: &[EndForm]) -> Option<QuasiLadderSpec> {
    for core in ladder_cores(g) {
        if let Some(spec) = decompose(g, &core, catalog) {
            return Some(spec);
        }
    }
    None
}

fn decompose(g: &Graph, core: &Core, catalog: &[EndForm]) -> Option<QuasiLadderSpec> {
    let n = g.n();
    let k = core.len();
    let mut in_core = vec![false; n];
    for &(x, y) in core {
        in_core[x] = true;
        in_core[y] = true;
    }
    let core_edges = g.edges().into_iter().filter(|&(u, v)| in_core[u] && in_core[v]).count();
    if core_edges != 3 * k - 2 {
        return None;
    }
    // label the rest by the end it hangs from
    let mut side = vec![u8::MAX; n];
    for (tag, &(x, y)) in [(0u8, &core[0]), (1, &core[k - 1])] {
        for r in [x, y] {
            for &s in g.neighbors(r) {
                if in_core[s] {
                    continue;
                }
                let mut stack = vec![s];
                while let Some(z) = stack.pop() {
                    if side[z] == tag {
                        continue;
                    }
                    if side[z] != u8::MAX {
                        return None;
                    }
                    side[z] = tag;
                    stack.extend(g.neighbors(z).iter().copied().filter(|&w| !in_core[w]));
                }
            }
        }
    }
    // interior rungs touch nothing outside the core
    for &(x, y) in &core[1..k - 1] {
        if g.degree(x) != 3 || g.degree(y) != 3 {
            return None;
        }
    }
    let cap = |tag: u8, (x, y): (usize, usize)| -> Option<(usize, bool)> {
        let members: Vec<usize> = (0..n).filter(|&z| side[z] == tag).collect();
        let index: BTreeMap<usize, usize> = members.iter().enumerate().map(|(i, &z)| (z, i)).collect();
        let edges: Vec<(usize, usize)> =
            g.edges().into_iter().filter_map(|(u, v)| Some((*index.get(&u)?, *index.get(&v)?))).collect();
        let outside = |r: usize| -> Option<Option<usize>> {
            let ext: Vec<usize> = g.neighbors(r).iter().copied().filter(|z| !in_core[*z]).collect();
            match ext.as_slice() {
                [] => Some(None),
                [z] => Some(Some(index[z])),
                _ => None,
            }
        };
        let attach = (outside(x)?, outside(y)?);
        match_cap(&rooted_form(members.len(), &edges, attach), catalog)
    };
    let (left, l_swap) = cap(0, core[0])?;
    let (right, r_swap) = cap(1, core[k - 1])?;
    Some(QuasiLadderSpec { core_rungs: k, left, right, twist: l_swap != r_swap })
}

/// Whether `g` is isomorphic to the quasi-ladder built from `spec`, ignoring
/// curvature (used to confirm decompositions).
pub fn matches_spec(g: &Graph, spec: &QuasiLadderSpec, catalog: &[EndForm]) -> bool {
    let find = |id: usize| catalog.iter().find(|f| f.id == id);
    match (find(spec.left), find(spec.right)) {
        (Some(l), Some(r)) => attach_caps(spec.core_rungs, l, r, spec.twist).is_ok_and(|h| isomorphic(g, &h)),
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{gen_cycle, gen_path};
    use crate::graph::{all_diameter_paths, WeightScheme};

    #[test]
    fn membership_examples() {
        assert!(membership_g(&gen_path(6).unwrap()).in_g);
        assert!(membership_g(&gen_cycle(12).unwrap()).in_g);
        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)], WeightScheme::Combinatorial)
            .unwrap();
        let m = membership_g(&k4);
        assert!(!m.in_g);
        assert_eq!(m.diameter, 1);
    }

    #[test]
    fn classify_basic_families() {
        assert_eq!(classify(&gen_cycle(14).unwrap()), Ok(Classification::Family(FamilyDescriptor::Cycle { n: 14 })));
        assert_eq!(classify(&gen_path(8).unwrap()), Ok(Classification::Family(FamilyDescriptor::Path { edges: 8 })));
        assert_eq!(classify(&gen_prism(10).unwrap()), Ok(Classification::Family(FamilyDescriptor::Prism { k: 10 })));
        assert_eq!(
            classify(&gen_mobius(12).unwrap()),
            Ok(Classification::Family(FamilyDescriptor::MobiusLadder { k: 12 }))
        );
        assert_eq!(classify(&gen_particular().unwrap()), Ok(Classification::Family(FamilyDescriptor::Particular)));
    }

    #[test]
    fn path_windows_are_two_two() {
        let g = gen_path(8).unwrap();
        let d = g.distances();
        let p = GeodesicPath::new(&d, &g, (0..9).collect()).unwrap();
        let r = forbidden_pair_check(&g, &d, &p).unwrap();
        assert!(r.is_clean());
        assert!(r.windows.iter().all(|w| w.pair == (State::Two, State::Two)));
    }

    #[test]
    fn forbidden_pair_fires_on_negative_control() {
        // v_0..v_4 with u_2 ∼ v_2 hanging outward: (2, 3⁺) at i = 0
        let g = Graph::from_edges(7, &[(0, 1), (1, 2), (2, 3), (3, 4), (2, 5), (5, 6)], WeightScheme::Combinatorial)
            .unwrap();
        let d = g.distances();
        let p = GeodesicPath::new(&d, &g, alloc::vec![0, 1, 2, 3, 4]).unwrap();
        let r = forbidden_pair_check(&g, &d, &p).unwrap();
        assert_eq!(r.windows[0].outcome, WindowOutcome::ForbiddenPair);
    }

    #[test]
    fn geodesic_cycles_of_prism() {
        let g = gen_prism(7).unwrap();
        let d = g.distances();
        let cycles = geodesic_cycles(&g, &d, 7);
        assert_eq!(cycles.len(), 2);
        assert!(cycles.iter().all(|c| c.len() == 7));
        let c12 = gen_cycle(12).unwrap();
        assert_eq!(geodesic_cycles(&c12, &c12.distances(), 8).len(), 1);
    }

    #[test]
    fn lemma_cycle_from_partition() {
        // C_10 split into two arcs through two single-vertex cliques
        let g = gen_cycle(10).unwrap();
        let c = find_geodesic_cycle(&g, &[1, 2, 3, 4], &[6, 7, 8, 9], &[0], &[5]).unwrap();
        assert_eq!(c.len(), 10);
        assert!(is_geodesic_cycle(&g, &g.distances(), &c).unwrap());
        assert!(matches!(
            find_geodesic_cycle(&g, &[1, 2, 3, 4], &[6, 7, 8], &[0], &[5]),
            Err(ClassifyError::BadPartition(_))
        ));
    }

    #[test]
    fn particular_graph_diameter_paths_are_clean() {
        let g = gen_particular().unwrap();
        let d = g.distances();
        for p in all_diameter_paths(&g, &d) {
            assert!(forbidden_pair_check(&g, &d, &p).unwrap().is_clean());
            assert!(propagation_check(&g, &d, &p).unwrap());
        }
    }
}
