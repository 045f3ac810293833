//! Undirected simple connected graphs with vertex and edge weights, hop
//! distances and geodesic paths.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Signed};

use crate::rational::{int, Rational};

/// How vertex weights `m` and edge weights `w` are assigned.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum WeightScheme {
    /// `w ≡ 1`, `m ≡ 1`.
    Combinatorial,
    /// `w ≡ 1`, `m(u) = deg(u)`.
    Normalized,
    /// Arbitrary positive rational weights.
    GeneralWeighted,
}

impl WeightScheme {
    pub fn name(self) -> &'static str {
        match self {
            WeightScheme::Combinatorial => "combinatorial",
            WeightScheme::Normalized => "normalized",
            WeightScheme::GeneralWeighted => "general",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphError {
    Empty,
    VertexOutOfRange { vertex: usize, n: usize },
    SelfLoop(usize),
    DuplicateEdge(usize, usize),
    Disconnected,
    DegreeOverflow { vertex: usize, degree: usize, cap: usize },
    NonPositiveWeight,
    MissingWeight(usize, usize),
    NotAdjacent(usize, usize),
    NotGeodesic,
    NotACycle,
    DisconnectedSubset,
    DegreeTooHigh(usize),
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::Empty => write!(f, "graph has no vertices"),
            GraphError::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range for {n} vertices")
            }
            GraphError::SelfLoop(v) => write!(f, "self-loop at vertex {v}"),
            GraphError::DuplicateEdge(u, v) => write!(f, "duplicate edge {u}-{v}"),
            GraphError::Disconnected => write!(f, "graph is disconnected"),
            GraphError::DegreeOverflow { vertex, degree, cap } => {
                write!(f, "vertex {vertex} has degree {degree} above cap {cap}")
            }
            GraphError::NonPositiveWeight => write!(f, "weights must be positive"),
            GraphError::MissingWeight(u, v) => write!(f, "no weight given for edge {u}-{v}"),
            GraphError::NotAdjacent(u, v) => write!(f, "vertices {u} and {v} are not adjacent"),
            GraphError::NotGeodesic => write!(f, "path is not geodesic"),
            GraphError::NotACycle => write!(f, "vertex sequence is not a cycle"),
            GraphError::DisconnectedSubset => write!(f, "vertex subset induces a disconnected subgraph"),
            GraphError::DegreeTooHigh(v) => write!(f, "vertex {v} has degree above 3"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Weights {
    Unit,
    Normalized,
    General { edge: BTreeMap<(usize, usize), Rational>, vertex: Vec<Rational> },
}

/// A connected simple graph. Immutable after construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    weights: Weights,
}

fn key(u: usize, v: usize) -> (usize, usize) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

impl Graph {
    /// Builds a validated graph on vertices `0..n`.
    pub fn from_edges(n: usize, edges: &[(usize, usize)], scheme: WeightScheme) -> Result<Graph, GraphError> {
        Self::build(n, edges, scheme, None)
    }

    /// Like [`Graph::from_edges`] but rejects any vertex of degree above `cap`.
    pub fn with_degree_cap(
        n: usize,
        edges: &[(usize, usize)],
        scheme: WeightScheme,
        cap: usize,
    ) -> Result<Graph, GraphError> {
        Self::build(n, edges, scheme, Some(cap))
    }

    fn build(
        n: usize,
        edges: &[(usize, usize)],
        scheme: WeightScheme,
        cap: Option<usize>,
    ) -> Result<Graph, GraphError> {
        let adj = adjacency(n, edges)?;
        if let Some(cap) = cap {
            if let Some((vertex, nb)) = adj.iter().enumerate().find(|(_, nb)| nb.len() > cap) {
                return Err(GraphError::DegreeOverflow { vertex, degree: nb.len(), cap });
            }
        }
        let weights = match scheme {
            WeightScheme::Combinatorial => Weights::Unit,
            WeightScheme::Normalized => Weights::Normalized,
            WeightScheme::GeneralWeighted => Weights::General {
                edge: edges.iter().map(|&(u, v)| (key(u, v), Rational::one())).collect(),
                vertex: vec![Rational::one(); n],
            },
        };
        Ok(Graph { adj, weights })
    }

    /// A general weighted graph; `edges` carry `w`, `vertex_weights` is `m`.
    pub fn weighted(
        n: usize,
        edges: &[(usize, usize, Rational)],
        vertex_weights: Vec<Rational>,
    ) -> Result<Graph, GraphError> {
        let plain: Vec<(usize, usize)> = edges.iter().map(|(u, v, _)| (*u, *v)).collect();
        let adj = adjacency(n, &plain)?;
        if vertex_weights.len() != n {
            return Err(GraphError::VertexOutOfRange { vertex: vertex_weights.len(), n });
        }
        if vertex_weights.iter().any(|m| !m.is_positive()) || edges.iter().any(|e| !e.2.is_positive()) {
            return Err(GraphError::NonPositiveWeight);
        }
        let edge = edges.iter().map(|(u, v, w)| (key(*u, *v), w.clone())).collect();
        Ok(Graph { adj, weights: Weights::General { edge, vertex: vertex_weights } })
    }

    /// Same topology under another weight scheme (general weights reset to 1).
    pub fn with_scheme(&self, scheme: WeightScheme) -> Graph {
        let edges = self.edges();
        Graph::from_edges(self.n(), &edges, scheme).expect("topology already validated")
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn scheme(&self) -> WeightScheme {
        match self.weights {
            Weights::Unit => WeightScheme::Combinatorial,
            Weights::Normalized => WeightScheme::Normalized,
            Weights::General { .. } => WeightScheme::GeneralWeighted,
        }
    }

    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.adj[u]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (u, nb) in self.adj.iter().enumerate() {
            out.extend(nb.iter().filter(|&&v| v > u).map(|&v| (u, v)));
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Edge weight `w(u, v)`; callers guarantee `u ∼ v`.
    pub fn w(&self, u: usize, v: usize) -> Rational {
        match &self.weights {
            Weights::Unit | Weights::Normalized => Rational::one(),
            Weights::General { edge, .. } => edge[&key(u, v)].clone(),
        }
    }

    /// Vertex weight `m(u)`.
    pub fn m(&self, u: usize) -> Rational {
        match &self.weights {
            Weights::Unit => Rational::one(),
            Weights::Normalized => int(self.degree(u) as i64),
            Weights::General { vertex, .. } => vertex[u].clone(),
        }
    }

    /// `Deg(u) = Σ_{v∼u} w(u,v)/m(u)`.
    pub fn weighted_degree(&self, u: usize) -> Rational {
        match &self.weights {
            Weights::Unit => int(self.degree(u) as i64),
            Weights::Normalized => Rational::one(),
            Weights::General { .. } => {
                let total: Rational = self.adj[u].iter().map(|&v| self.w(u, v)).sum();
                total / self.m(u)
            }
        }
    }

    /// Hop distances from `src`.
    pub fn bfs(&self, src: usize) -> Vec<u32> {
        bfs_in(&self.adj, src, None)
    }

    pub fn distances(&self) -> DistanceMatrix {
        all_pairs_distances(self)
    }

    /// Relabels vertices: new id of old vertex `v` is `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        let edges: Vec<(usize, usize)> = self.edges().iter().map(|&(u, v)| (perm[u], perm[v])).collect();
        match &self.weights {
            Weights::General { edge, vertex } => {
                let wedges: Vec<(usize, usize, Rational)> =
                    edge.iter().map(|(&(u, v), w)| (perm[u], perm[v], w.clone())).collect();
                let mut m = vec![Rational::one(); self.n()];
                for (v, w) in vertex.iter().enumerate() {
                    m[perm[v]] = w.clone();
                }
                Graph::weighted(self.n(), &wedges, m).expect("relabeling keeps validity")
            }
            _ => Graph::from_edges(self.n(), &edges, self.scheme()).expect("relabeling keeps validity"),
        }
    }
}

fn adjacency(n: usize, edges: &[(usize, usize)]) -> Result<Vec<Vec<usize>>, GraphError> {
    if n == 0 {
        return Err(GraphError::Empty);
    }
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        for x in [u, v] {
            if x >= n {
                return Err(GraphError::VertexOutOfRange { vertex: x, n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if adj[u].contains(&v) {
            return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
        }
        adj[u].push(v);
        adj[v].push(u);
    }
    for nb in adj.iter_mut() {
        nb.sort_unstable();
    }
    if bfs_in(&adj, 0, None).contains(&u32::MAX) {
        return Err(GraphError::Disconnected);
    }
    Ok(adj)
}

/// BFS restricted to `allowed` when given; unreachable vertices get `u32::MAX`.
pub(crate) fn bfs_in(adj: &[Vec<usize>], src: usize, allowed: Option<&[bool]>) -> Vec<u32> {
    let mut dist = vec![u32::MAX; adj.len()];
    let mut queue = VecDeque::new();
    dist[src] = 0;
    queue.push_back(src);
    while let Some(x) = queue.pop_front() {
        for &y in &adj[x] {
            if dist[y] == u32::MAX && allowed.is_none_or(|a| a[y]) {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
        }
    }
    dist
}

/// Symmetric matrix of hop counts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistanceMatrix {
    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.d[u * self.n + v]
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn row(&self, u: usize) -> &[u32] {
        &self.d[u * self.n..(u + 1) * self.n]
    }

    pub fn diameter(&self) -> u32 {
        self.d.iter().copied().max().unwrap_or(0)
    }

    pub fn eccentricity(&self, u: usize) -> u32 {
        self.row(u).iter().copied().max().unwrap_or(0)
    }

    /// `d(A, B)`: least distance between the two sets.
    pub fn set_distance(&self, a: &[usize], b: &[usize]) -> Option<u32> {
        a.iter().flat_map(|&x| b.iter().map(move |&y| (x, y))).map(|(x, y)| self.get(x, y)).min()
    }
}

pub fn all_pairs_distances(g: &Graph) -> DistanceMatrix {
    let n = g.n();
    let mut d = Vec::with_capacity(n * n);
    for u in 0..n {
        d.extend(g.bfs(u));
    }
    DistanceMatrix { n, d }
}

/// A path `v_0 … v_l` with `d(v_i, v_j) = |i − j|`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct GeodesicPath {
    vertices: Vec<usize>,
}

impl GeodesicPath {
    pub fn new(dist: &DistanceMatrix, g: &Graph, vertices: Vec<usize>) -> Result<Self, GraphError> {
        if vertices.is_empty() {
            return Err(GraphError::NotGeodesic);
        }
        if let Some(&v) = vertices.iter().find(|&&v| v >= g.n()) {
            return Err(GraphError::VertexOutOfRange { vertex: v, n: g.n() });
        }
        for w in vertices.windows(2) {
            if !g.adjacent(w[0], w[1]) {
                return Err(GraphError::NotGeodesic);
            }
        }
        let l = vertices.len() - 1;
        if dist.get(vertices[0], vertices[l]) as usize != l {
            return Err(GraphError::NotGeodesic);
        }
        Ok(GeodesicPath { vertices })
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.len() <= 1
    }

    pub fn root(&self) -> usize {
        self.vertices[0]
    }

    pub fn reversed(&self) -> GeodesicPath {
        let mut vertices = self.vertices.clone();
        vertices.reverse();
        GeodesicPath { vertices }
    }
}

/// Lexicographically smallest vertex sequence among all geodesics of length `diam(G)`.
pub fn diameter_path(g: &Graph, dist: &DistanceMatrix) -> GeodesicPath {
    let diam = dist.diameter();
    let start = (0..g.n()).find(|&s| dist.eccentricity(s) == diam).expect("non-empty graph");
    let mut targets: Vec<usize> = (0..g.n()).filter(|&t| dist.get(start, t) == diam).collect();
    let mut path = vec![start];
    let mut cur = start;
    for step in 1..=diam {
        let remaining = diam - step;
        let next = g
            .neighbors(cur)
            .iter()
            .copied()
            .find(|&x| targets.iter().any(|&t| dist.get(x, t) == remaining))
            .expect("a geodesic always continues");
        targets.retain(|&t| dist.get(next, t) == remaining);
        path.push(next);
        cur = next;
    }
    GeodesicPath { vertices: path }
}

/// Every geodesic path of length `diam(G)` (both orientations).
pub fn all_diameter_paths(g: &Graph, dist: &DistanceMatrix) -> Vec<GeodesicPath> {
    let diam = dist.diameter();
    let mut out = Vec::new();
    for s in 0..g.n() {
        for t in 0..g.n() {
            if dist.get(s, t) == diam {
                let mut prefix = vec![s];
                extend_geodesics(g, dist, t, &mut prefix, &mut out);
            }
        }
    }
    out
}

fn extend_geodesics(
    g: &Graph,
    dist: &DistanceMatrix,
    target: usize,
    prefix: &mut Vec<usize>,
    out: &mut Vec<GeodesicPath>,
) {
    let cur = *prefix.last().expect("non-empty prefix");
    if cur == target {
        out.push(GeodesicPath { vertices: prefix.clone() });
        return;
    }
    let want = dist.get(cur, target) - 1;
    for &x in g.neighbors(cur) {
        if dist.get(x, target) == want {
            prefix.push(x);
            extend_geodesics(g, dist, target, prefix, out);
            prefix.pop();
        }
    }
}

/// Whether `cycle` (closed up implicitly) has `d_C = d_G` on all vertex pairs.
pub fn is_geodesic_cycle(g: &Graph, dist: &DistanceMatrix, cycle: &[usize]) -> Result<bool, GraphError> {
    let len = cycle.len();
    if len < 3 || cycle.iter().any(|&v| v >= g.n()) {
        return Err(GraphError::NotACycle);
    }
    let mut seen = vec![false; g.n()];
    for &v in cycle {
        if core::mem::replace(&mut seen[v], true) {
            return Err(GraphError::NotACycle);
        }
    }
    for i in 0..len {
        if !g.adjacent(cycle[i], cycle[(i + 1) % len]) {
            return Err(GraphError::NotACycle);
        }
    }
    for i in 0..len {
        for j in i + 1..len {
            let along = (j - i).min(len - (j - i)) as u32;
            if dist.get(cycle[i], cycle[j]) != along {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Whether the subgraph induced by `subset` preserves all pairwise distances.
pub fn is_geodesic_subgraph(g: &Graph, dist: &DistanceMatrix, subset: &[usize]) -> Result<bool, GraphError> {
    let mut inside = vec![false; g.n()];
    for &v in subset {
        if v >= g.n() {
            return Err(GraphError::VertexOutOfRange { vertex: v, n: g.n() });
        }
        inside[v] = true;
    }
    let Some(&first) = subset.first() else {
        return Err(GraphError::DisconnectedSubset);
    };
    let probe = bfs_in(&g.adj, first, Some(&inside));
    if subset.iter().any(|&v| probe[v] == u32::MAX) {
        return Err(GraphError::DisconnectedSubset);
    }
    for &u in subset {
        let local = bfs_in(&g.adj, u, Some(&inside));
        if subset.iter().any(|&v| local[v] != dist.get(u, v)) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Vertices whose removal leaves the graph connected.
pub fn non_cut_vertices(g: &Graph) -> Vec<usize> {
    let n = g.n();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut keep = vec![true; n];
    let mut out = Vec::new();
    for v in 0..n {
        keep[v] = false;
        let src = if v == 0 { 1 } else { 0 };
        let d = bfs_in(&g.adj, src, Some(&keep));
        if (0..n).all(|x| x == v || d[x] != u32::MAX) {
            out.push(v);
        }
        keep[v] = true;
    }
    out
}
