//! Graph Laplacian, exact Dirichlet problems and the ladder recurrences
//! behind the Liouville argument for quasi-ladders.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Signed, Zero};

use crate::families::ladder_vertex;
use crate::graph::{Graph, GraphError, WeightScheme};
use crate::rational::{int, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HarmonicError {
    SingularSystem,
    EmptyBoundary,
    VertexOutOfRange(usize),
    /// The solution leaves the range of the boundary data.
    MaxPrincipleViolated,
    BadParam(&'static str),
    Graph(GraphError),
}

impl fmt::Display for HarmonicError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HarmonicError::SingularSystem => {
                write!(f, "singular system: some interior vertex does not reach the boundary")
            }
            HarmonicError::EmptyBoundary => write!(f, "boundary is empty"),
            HarmonicError::VertexOutOfRange(v) => write!(f, "vertex {v} out of range"),
            HarmonicError::MaxPrincipleViolated => write!(f, "solution leaves the range of the boundary data"),
            HarmonicError::BadParam(why) => write!(f, "{why}"),
            HarmonicError::Graph(e) => write!(f, "{e}"),
        }
    }
}

impl From<GraphError> for HarmonicError {
    fn from(e: GraphError) -> Self {
        HarmonicError::Graph(e)
    }
}

/// A rational value on every vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexFunction {
    pub values: Vec<Rational>,
}

impl VertexFunction {
    pub fn constant(n: usize, c: Rational) -> Self {
        VertexFunction { values: vec![c; n] }
    }

    pub fn get(&self, v: usize) -> &Rational {
        &self.values[v]
    }
}

/// `Δf(u) = (1/m(u)) Σ_{v∼u} w(u,v)(f(v) − f(u))`.
pub fn laplacian(g: &Graph, f: &VertexFunction, u: usize) -> Rational {
    let fu = &f.values[u];
    let s: Rational = g.neighbors(u).iter().map(|&v| g.w(u, v) * (&f.values[v] - fu)).sum();
    s / g.m(u)
}

pub fn is_harmonic_at(g: &Graph, f: &VertexFunction, u: usize) -> bool {
    laplacian(g, f, u).is_zero()
}

#[derive(Clone, Debug)]
pub struct HarmonicProblem {
    pub graph: Graph,
    pub boundary: BTreeMap<usize, Rational>,
}

impl HarmonicProblem {
    pub fn new(graph: Graph, boundary: BTreeMap<usize, Rational>) -> Result<Self, HarmonicError> {
        if boundary.is_empty() {
            return Err(HarmonicError::EmptyBoundary);
        }
        if let Some(&v) = boundary.keys().find(|&&v| v >= graph.n()) {
            return Err(HarmonicError::VertexOutOfRange(v));
        }
        Ok(HarmonicProblem { graph, boundary })
    }

    pub fn interior(&self) -> Vec<usize> {
        (0..self.graph.n()).filter(|v| !self.boundary.contains_key(v)).collect()
    }
}

/// Solves `Δf = 0` on the interior with the given boundary values by exact
/// Gaussian elimination, then checks the maximum principle.
pub fn solve_harmonic(p: &HarmonicProblem) -> Result<VertexFunction, HarmonicError> {
    let g = &p.graph;
    let interior = p.interior();
    let k = interior.len();
    let mut index = vec![usize::MAX; g.n()];
    for (i, &v) in interior.iter().enumerate() {
        index[v] = i;
    }
    // row i: Σ_v w(u,v) f(u) − Σ_{v interior} w(u,v) f(v) = Σ_{v boundary} w(u,v) b(v)
    let mut a = vec![vec![Rational::zero(); k + 1]; k];
    for (i, &u) in interior.iter().enumerate() {
        for &v in g.neighbors(u) {
            let w = g.w(u, v);
            a[i][i] += &w;
            match p.boundary.get(&v) {
                Some(b) => a[i][k] += &w * b,
                None => a[i][index[v]] -= &w,
            }
        }
    }
    let x = gauss(a, k)?;
    let mut values: Vec<Rational> = vec![Rational::zero(); g.n()];
    for (v, b) in &p.boundary {
        values[*v] = b.clone();
    }
    for (i, &u) in interior.iter().enumerate() {
        values[u] = x[i].clone();
    }
    let lo = p.boundary.values().min().expect("boundary is non-empty");
    let hi = p.boundary.values().max().expect("boundary is non-empty");
    if values.iter().any(|v| v < lo || v > hi) {
        return Err(HarmonicError::MaxPrincipleViolated);
    }
    Ok(VertexFunction { values })
}

fn gauss(mut a: Vec<Vec<Rational>>, k: usize) -> Result<Vec<Rational>, HarmonicError> {
    for col in 0..k {
        let pivot = (col..k).find(|&r| !a[r][col].is_zero()).ok_or(HarmonicError::SingularSystem)?;
        a.swap(col, pivot);
        let inv = Rational::one() / &a[col][col];
        for c in col..=k {
            a[col][c] = &a[col][c] * &inv;
        }
        for r in 0..k {
            if r != col && !a[r][col].is_zero() {
                let factor = a[r][col].clone();
                for c in col..=k {
                    let delta = &factor * &a[col][c];
                    a[r][c] -= delta;
                }
            }
        }
    }
    Ok(a.into_iter().map(|row| row[k].clone()).collect())
}

/// Iterates `s_{n+1} = c·s_n − s_{n−1}` from two seeds, `len` terms in all.
fn linear_recurrence(c: i64, s0: Rational, s1: Rational, len: usize) -> Vec<Rational> {
    let mut s = vec![s0, s1];
    while s.len() < len {
        let n = s.len();
        let next = int(c) * &s[n - 1] - &s[n - 2];
        s.push(next);
    }
    s.truncate(len);
    s
}

/// Rung differences `z_n = g(x_n) − g(y_n)` of a harmonic function on a ladder.
pub fn z_sequence(z0: Rational, z1: Rational, len: usize) -> Vec<Rational> {
    linear_recurrence(4, z0, z1, len)
}

/// Rung sums `h_n = g(x_n) + g(y_n)`.
pub fn h_sequence(h0: Rational, h1: Rational, len: usize) -> Vec<Rational> {
    linear_recurrence(2, h0, h1, len)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiouvilleSeeds {
    pub z0: Rational,
    pub z1: Rational,
    pub h0: Rational,
    pub h1: Rational,
}

impl Default for LiouvilleSeeds {
    fn default() -> Self {
        LiouvilleSeeds { z0: int(1), z1: int(4), h0: int(0), h1: int(1) }
    }
}

#[derive(Clone, Debug)]
pub struct LiouvilleReport {
    pub width: usize,
    /// Rung differences and sums read off the solved function.
    pub z: Vec<Rational>,
    pub h: Vec<Rational>,
    /// Solver output equals the values predicted by the recurrences.
    pub solver_matches: bool,
    /// `4z_n = z_{n−1} + z_{n+1}` at every interior rung.
    pub z_recurrence: bool,
    /// `2h_n = h_{n−1} + h_{n+1}` at every interior rung.
    pub h_recurrence: bool,
    /// `z_n ≥ z_{n−1}` for all n; only checked when `z_1 ≥ z_0 > 0`.
    pub monotone: Option<bool>,
    /// `z_{n+1} ≥ 3z_n` for n ≥ 1 and `z_n ≥ z_1·3^{n−1}`; same condition.
    pub growth: Option<bool>,
}

impl LiouvilleReport {
    pub fn holds(&self) -> bool {
        self.solver_matches
            && self.z_recurrence
            && self.h_recurrence
            && self.monotone != Some(false)
            && self.growth != Some(false)
    }
}

/// The ladder `x_0..x_N`, `y_0..y_N` with `x_n = 2n`, `y_n = 2n + 1`.
pub fn ladder_window(width: usize) -> Result<Graph, HarmonicError> {
    let mut edges = Vec::new();
    for n in 0..=width {
        edges.push((ladder_vertex(0, n), ladder_vertex(1, n)));
        if n < width {
            edges.push((ladder_vertex(0, n), ladder_vertex(0, n + 1)));
            edges.push((ladder_vertex(1, n), ladder_vertex(1, n + 1)));
        }
    }
    Ok(Graph::from_edges(2 * (width + 1), &edges, WeightScheme::Combinatorial)?)
}

pub fn liouville_window_check(width: usize) -> Result<LiouvilleReport, HarmonicError> {
    liouville_window_check_with(width, &LiouvilleSeeds::default())
}

/// Solves the Dirichlet problem on a ladder window with data on the two end
/// rungs taken from the recurrences, and checks the solved function against
/// the rung recurrences and the growth bounds.
pub fn liouville_window_check_with(width: usize, seeds: &LiouvilleSeeds) -> Result<LiouvilleReport, HarmonicError> {
    if width < 4 {
        return Err(HarmonicError::BadParam("window width must be at least 4"));
    }
    let g = ladder_window(width)?;
    let zs = z_sequence(seeds.z0.clone(), seeds.z1.clone(), width + 1);
    let hs = h_sequence(seeds.h0.clone(), seeds.h1.clone(), width + 1);
    let half = Rational::new(1.into(), 2.into());
    let gx = |n: usize| (&hs[n] + &zs[n]) * &half;
    let gy = |n: usize| (&hs[n] - &zs[n]) * &half;
    let mut boundary = BTreeMap::new();
    for n in [0, width] {
        boundary.insert(ladder_vertex(0, n), gx(n));
        boundary.insert(ladder_vertex(1, n), gy(n));
    }
    let f = solve_harmonic(&HarmonicProblem::new(g.clone(), boundary)?)?;
    let x = |n: usize| f.get(ladder_vertex(0, n));
    let y = |n: usize| f.get(ladder_vertex(1, n));
    let z: Vec<Rational> = (0..=width).map(|n| x(n) - y(n)).collect();
    let h: Vec<Rational> = (0..=width).map(|n| x(n) + y(n)).collect();

    let solver_matches = (0..=width).all(|n| *x(n) == gx(n) && *y(n) == gy(n));
    let interior = 1..width;
    let z_recurrence = interior.clone().all(|n| int(4) * &z[n] == &z[n - 1] + &z[n + 1]);
    let h_recurrence = interior.clone().all(|n| int(2) * &h[n] == &h[n - 1] + &h[n + 1]);
    let growing = z[1] >= z[0] && z[0].is_positive();
    let monotone = growing.then(|| (1..=width).all(|n| z[n] >= z[n - 1]));
    let growth = growing.then(|| {
        let mut bound = z[1].clone();
        (1..width).all(|n| {
            bound *= int(3);
            z[n + 1] >= int(3) * &z[n] && z[n + 1] >= bound
        })
    });
    Ok(LiouvilleReport { width, z, h, solver_matches, z_recurrence, h_recurrence, monotone, growth })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::gen_path;
    use crate::rational::frac;

    #[test]
    fn laplacian_examples() {
        let g = gen_path(4).unwrap();
        let c = VertexFunction::constant(5, frac(7, 3));
        assert!((0..5).all(|u| laplacian(&g, &c, u).is_zero()));
        let id = VertexFunction { values: (0..5).map(int).collect() };
        assert!((1..4).all(|u| is_harmonic_at(&g, &id, u)));

        let ladder = ladder_window(4).unwrap();
        let mut values = vec![int(0); ladder.n()];
        values[ladder_vertex(0, 2)] = int(1);
        let f = VertexFunction { values };
        assert_eq!(laplacian(&ladder, &f, ladder_vertex(0, 1)), int(1));
    }

    #[test]
    fn path_interpolation() {
        let g = gen_path(4).unwrap();
        let p = HarmonicProblem::new(g, [(0, int(0)), (4, int(4))].into_iter().collect()).unwrap();
        let f = solve_harmonic(&p).unwrap();
        assert_eq!(f.values, (0..5).map(int).collect::<Vec<_>>());
    }

    #[test]
    fn all_boundary_echo() {
        let g = gen_path(2).unwrap();
        let b: BTreeMap<usize, Rational> = [(0, int(5)), (1, frac(-1, 2)), (2, int(3))].into_iter().collect();
        let f = solve_harmonic(&HarmonicProblem::new(g, b).unwrap()).unwrap();
        assert_eq!(f.values, vec![int(5), frac(-1, 2), int(3)]);
    }

    #[test]
    fn empty_boundary_rejected() {
        let g = gen_path(2).unwrap();
        assert_eq!(HarmonicProblem::new(g, BTreeMap::new()).unwrap_err(), HarmonicError::EmptyBoundary);
    }

    #[test]
    fn recurrence_examples() {
        assert_eq!(z_sequence(int(0), int(1), 5), [0, 1, 4, 15, 56].map(int));
        assert_eq!(z_sequence(int(1), int(4), 5), [1, 4, 15, 56, 209].map(int));
        assert!(z_sequence(int(0), int(0), 8).iter().all(Zero::is_zero));
        assert_eq!(h_sequence(int(0), int(1), 6), (0..6).map(int).collect::<Vec<_>>());
    }

    #[test]
    fn ladder_window_checks() {
        for w in [4, 12, 20] {
            let r = liouville_window_check(w).unwrap();
            assert!(r.holds(), "width {w}: {r:?}");
            assert_eq!(r.growth, Some(true));
        }
        assert!(matches!(liouville_window_check(3), Err(HarmonicError::BadParam(_))));
        let flat = LiouvilleSeeds { z0: int(2), z1: int(2), h0: int(1), h1: int(1) };
        let r = liouville_window_check_with(8, &flat).unwrap();
        assert!(r.holds());
        assert_eq!(r.growth, Some(true));
        let decaying = LiouvilleSeeds { z0: int(1), z1: int(0), h0: int(0), h1: int(0) };
        let r = liouville_window_check_with(6, &decaying).unwrap();
        assert!(r.holds());
        assert_eq!(r.growth, None);
    }
}
