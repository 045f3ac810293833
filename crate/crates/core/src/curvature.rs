//! Exact Wasserstein distances and the curvature engines.
//!
//! Two independent routes compute the Lin-Lu-Yau-Ollivier curvature of an
//! edge: [`kappa_lly`] evaluates `κ_ε/ε` through exact optimal transport and
//! certifies that `ε` lies on the first linear piece; [`kappa_transport`]
//! uses the combinatorial transport formula (partial bijections between the
//! private neighborhoods). They must agree on every combinatorial graph.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::flow::{min_cost_transport, FlowError};
use crate::graph::{DistanceMatrix, Graph, WeightScheme};
use crate::rational::{int, Rational};

/// Cap on the number of `ε` halvings in [`kappa_lly`].
pub const MAX_HALVINGS: u32 = 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CurvatureError {
    EpsilonOutOfRange,
    MassMismatch,
    NotAdjacent(usize, usize),
    SameVertex(usize),
    WrongScheme(WeightScheme),
    NoConvergence,
    Overflow,
}

impl fmt::Display for CurvatureError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurvatureError::EpsilonOutOfRange => write!(f, "epsilon outside [0, 1/Deg(u)]"),
            CurvatureError::MassMismatch => write!(f, "measures do not have equal total mass"),
            CurvatureError::NotAdjacent(u, v) => write!(f, "vertices {u} and {v} are not adjacent"),
            CurvatureError::SameVertex(u) => write!(f, "curvature needs two distinct vertices, got {u} twice"),
            CurvatureError::WrongScheme(s) => write!(f, "operation not defined for the {} scheme", s.name()),
            CurvatureError::NoConvergence => {
                write!(f, "no linear segment found after {MAX_HALVINGS} halvings")
            }
            CurvatureError::Overflow => write!(f, "scaled transport problem exceeds 128-bit integers"),
        }
    }
}

/// A finitely supported probability measure on the vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProbabilityMeasure {
    mass: BTreeMap<usize, Rational>,
}

impl ProbabilityMeasure {
    /// Zero masses are dropped. Fails unless masses are nonnegative and sum to 1.
    pub fn new(mass: BTreeMap<usize, Rational>) -> Result<Self, CurvatureError> {
        if mass.values().any(Signed::is_negative) {
            return Err(CurvatureError::MassMismatch);
        }
        let total: Rational = mass.values().cloned().sum();
        if !total.is_one() {
            return Err(CurvatureError::MassMismatch);
        }
        Ok(ProbabilityMeasure { mass: mass.into_iter().filter(|(_, m)| !m.is_zero()).collect() })
    }

    pub fn point(v: usize) -> Self {
        let mut mass = BTreeMap::new();
        mass.insert(v, Rational::one());
        ProbabilityMeasure { mass }
    }

    pub fn mass(&self, v: usize) -> Rational {
        self.mass.get(&v).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn support(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.mass.iter().map(|(&v, m)| (v, m))
    }
}

/// `μ_u^ε`: mass `1 − ε·Deg(u)` at `u`, `ε·w(u,v)/m(u)` at each neighbor `v`.
pub fn measure_mu(g: &Graph, u: usize, eps: &Rational) -> Result<ProbabilityMeasure, CurvatureError> {
    let deg = g.weighted_degree(u);
    let stay = Rational::one() - eps * &deg;
    if eps.is_negative() || stay.is_negative() {
        return Err(CurvatureError::EpsilonOutOfRange);
    }
    let mut mass = BTreeMap::new();
    if !stay.is_zero() {
        mass.insert(u, stay);
    }
    let mu = g.m(u);
    for &v in g.neighbors(u) {
        let m = eps * g.w(u, v) / &mu;
        if !m.is_zero() {
            mass.insert(v, m);
        }
    }
    Ok(ProbabilityMeasure { mass })
}

/// A coupling between two measures.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransportPlan {
    pub entries: BTreeMap<(usize, usize), Rational>,
    pub source: ProbabilityMeasure,
    pub target: ProbabilityMeasure,
}

impl TransportPlan {
    pub fn cost(&self, dist: &DistanceMatrix) -> Rational {
        self.entries.iter().map(|(&(x, y), m)| m * int(dist.get(x, y) as i64)).sum()
    }

    /// Row sums equal source masses and column sums equal target masses.
    pub fn is_coupling(&self) -> bool {
        if self.entries.values().any(Signed::is_negative) {
            return false;
        }
        let mut rows: BTreeMap<usize, Rational> = BTreeMap::new();
        let mut cols: BTreeMap<usize, Rational> = BTreeMap::new();
        for (&(x, y), m) in &self.entries {
            *rows.entry(x).or_insert_with(Rational::zero) += m;
            *cols.entry(y).or_insert_with(Rational::zero) += m;
        }
        rows.retain(|_, m| !m.is_zero());
        cols.retain(|_, m| !m.is_zero());
        rows == self.source.mass && cols == self.target.mass
    }
}

fn lcm_of_denominators<'a>(values: impl Iterator<Item = &'a Rational>) -> BigInt {
    values.fold(BigInt::one(), |acc, r| acc.lcm(r.denom()))
}

/// Exact `W(μ, ν)` with an optimal coupling as witness.
///
/// Masses are scaled by the common denominator and the resulting integer
/// transportation problem is solved by min-cost flow with hop-distance costs.
pub fn wasserstein(
    dist: &DistanceMatrix,
    mu: &ProbabilityMeasure,
    nu: &ProbabilityMeasure,
) -> Result<(Rational, TransportPlan), CurvatureError> {
    let src: Vec<(usize, &Rational)> = mu.support().collect();
    let dst: Vec<(usize, &Rational)> = nu.support().collect();
    if src.iter().chain(&dst).any(|(v, _)| *v >= dist.n()) {
        return Err(CurvatureError::MassMismatch);
    }
    let scale = lcm_of_denominators(src.iter().chain(&dst).map(|(_, m)| *m));
    let to_units = |m: &Rational| -> Result<i128, CurvatureError> {
        (m.numer() * (&scale / m.denom())).to_i128().ok_or(CurvatureError::Overflow)
    };
    let supply = src.iter().map(|(_, m)| to_units(m)).collect::<Result<Vec<_>, _>>()?;
    let demand = dst.iter().map(|(_, m)| to_units(m)).collect::<Result<Vec<_>, _>>()?;
    let cost: Vec<Vec<i64>> =
        src.iter().map(|(x, _)| dst.iter().map(|(y, _)| dist.get(*x, *y) as i64).collect()).collect();
    let t = min_cost_transport(&supply, &demand, &cost).map_err(|e| match e {
        FlowError::Unbalanced | FlowError::Negative => CurvatureError::MassMismatch,
    })?;
    let scale_r = Rational::from_integer(scale);
    let mut entries = BTreeMap::new();
    for (i, (x, _)) in src.iter().enumerate() {
        for (j, (y, _)) in dst.iter().enumerate() {
            if t.plan[i][j] != 0 {
                entries.insert((*x, *y), Rational::from_integer(BigInt::from(t.plan[i][j])) / &scale_r);
            }
        }
    }
    let value = Rational::from_integer(BigInt::from(t.cost)) / scale_r;
    Ok((value, TransportPlan { entries, source: mu.clone(), target: nu.clone() }))
}

/// `κ_ε(u,v) = 1 − W(μ_u^ε, μ_v^ε)/d(u,v)`; defined for any pair of distinct vertices.
pub fn kappa_eps(
    g: &Graph,
    dist: &DistanceMatrix,
    u: usize,
    v: usize,
    eps: &Rational,
) -> Result<Rational, CurvatureError> {
    kappa_eps_with_plan(g, dist, u, v, eps).map(|(k, _)| k)
}

fn kappa_eps_with_plan(
    g: &Graph,
    dist: &DistanceMatrix,
    u: usize,
    v: usize,
    eps: &Rational,
) -> Result<(Rational, TransportPlan), CurvatureError> {
    if u == v {
        return Err(CurvatureError::SameVertex(u));
    }
    let mu = measure_mu(g, u, eps)?;
    let nu = measure_mu(g, v, eps)?;
    let (w, plan) = wasserstein(dist, &mu, &nu)?;
    let d = int(dist.get(u, v) as i64);
    Ok((Rational::one() - w / d, plan))
}

/// Ollivier curvature `κ^O = κ_1` of a normalized graph.
pub fn kappa_ollivier(g: &Graph, dist: &DistanceMatrix, u: usize, v: usize) -> Result<Rational, CurvatureError> {
    if g.scheme() != WeightScheme::Normalized {
        return Err(CurvatureError::WrongScheme(g.scheme()));
    }
    kappa_eps(g, dist, u, v, &Rational::one())
}

/// An injective map from part of `B_u^v` into `B_v^u`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialBijection {
    pub pairs: Vec<(usize, usize)>,
    /// `B_u^v`
    pub domain_pool: Vec<usize>,
    /// `B_v^u`
    pub range_pool: Vec<usize>,
}

impl PartialBijection {
    /// `#D(φ)^c + #R(φ)^c + Σ_{w∈D(φ)} [d(w, φ(w)) − 1]`.
    pub fn cost(&self, dist: &DistanceMatrix) -> i64 {
        let unmatched = (self.domain_pool.len() - self.pairs.len()) + (self.range_pool.len() - self.pairs.len());
        unmatched as i64 + self.pairs.iter().map(|&(a, b)| dist.get(a, b) as i64 - 1).sum::<i64>()
    }

    pub fn is_injective(&self) -> bool {
        let mut dom: Vec<usize> = self.pairs.iter().map(|p| p.0).collect();
        let mut rng: Vec<usize> = self.pairs.iter().map(|p| p.1).collect();
        dom.sort_unstable();
        rng.sort_unstable();
        let before = (dom.len(), rng.len());
        dom.dedup();
        rng.dedup();
        before == (dom.len(), rng.len())
            && dom.iter().all(|x| self.domain_pool.contains(x))
            && rng.iter().all(|y| self.range_pool.contains(y))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    Plan(TransportPlan),
    Bijection(PartialBijection),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurvatureValue {
    pub value: Rational,
    pub witness: Option<Witness>,
}

/// The three neighborhoods of the transport formula.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeBalls {
    /// `B_1(u) ∩ B_1(v)`
    pub common: Vec<usize>,
    /// `B_1(u) ∖ B_1(v)`
    pub only_u: Vec<usize>,
    /// `B_1(v) ∖ B_1(u)`
    pub only_v: Vec<usize>,
}

pub fn edge_balls(g: &Graph, u: usize, v: usize) -> EdgeBalls {
    let ball = |x: usize| -> Vec<usize> {
        let mut b: Vec<usize> = g.neighbors(x).to_vec();
        b.push(x);
        b.sort_unstable();
        b
    };
    let (bu, bv) = (ball(u), ball(v));
    EdgeBalls {
        common: bu.iter().copied().filter(|x| bv.contains(x)).collect(),
        only_u: bu.iter().copied().filter(|x| !bv.contains(x)).collect(),
        only_v: bv.iter().copied().filter(|x| !bu.contains(x)).collect(),
    }
}

/// Curvature of an edge of a combinatorial graph via the transport formula.
pub fn kappa_transport(g: &Graph, dist: &DistanceMatrix, u: usize, v: usize) -> Result<CurvatureValue, CurvatureError> {
    if g.scheme() != WeightScheme::Combinatorial {
        return Err(CurvatureError::WrongScheme(g.scheme()));
    }
    if !g.adjacent(u, v) {
        return Err(CurvatureError::NotAdjacent(u, v));
    }
    let balls = edge_balls(g, u, v);
    let best = if balls.only_u.len() <= 3 && balls.only_v.len() <= 3 {
        best_bijection_enumerated(dist, &balls.only_u, &balls.only_v)
    } else {
        best_bijection_assignment(dist, &balls.only_u, &balls.only_v)?
    };
    let value = int(balls.common.len() as i64 - best.cost(dist));
    Ok(CurvatureValue { value, witness: Some(Witness::Bijection(best)) })
}

fn best_bijection_enumerated(dist: &DistanceMatrix, a: &[usize], b: &[usize]) -> PartialBijection {
    fn walk(
        dist: &DistanceMatrix,
        a: &[usize],
        b: &[usize],
        i: usize,
        used: &mut [bool],
        cur: &mut Vec<(usize, usize)>,
        best: &mut Option<(i64, Vec<(usize, usize)>)>,
    ) {
        if i == a.len() {
            let unmatched = (a.len() - cur.len() + b.len() - cur.len()) as i64;
            let cost = unmatched + cur.iter().map(|&(x, y)| dist.get(x, y) as i64 - 1).sum::<i64>();
            if best.as_ref().is_none_or(|(c, _)| cost < *c) {
                *best = Some((cost, cur.clone()));
            }
            return;
        }
        walk(dist, a, b, i + 1, used, cur, best);
        for j in 0..b.len() {
            if !used[j] {
                used[j] = true;
                cur.push((a[i], b[j]));
                walk(dist, a, b, i + 1, used, cur, best);
                cur.pop();
                used[j] = false;
            }
        }
    }
    let mut best = None;
    walk(dist, a, b, 0, &mut vec![false; b.len()], &mut Vec::new(), &mut best);
    let (_, pairs) = best.expect("the empty map is always a candidate");
    PartialBijection { pairs, domain_pool: a.to_vec(), range_pool: b.to_vec() }
}

/// Exact assignment for large private neighborhoods. Matching a pair costs
/// `d − 1 ≤ 2`, never more than leaving both ends unmatched, so a maximum
/// matching of the smaller side is optimal.
fn best_bijection_assignment(
    dist: &DistanceMatrix,
    a: &[usize],
    b: &[usize],
) -> Result<PartialBijection, CurvatureError> {
    let (small, large, flipped) = if a.len() <= b.len() { (a, b, false) } else { (b, a, true) };
    let mut supply = vec![1i128; small.len()];
    supply.push((large.len() - small.len()) as i128);
    let demand = vec![1i128; large.len()];
    let mut cost: Vec<Vec<i64>> =
        small.iter().map(|&x| large.iter().map(|&y| dist.get(x, y) as i64 - 1).collect()).collect();
    cost.push(vec![1; large.len()]);
    let t = min_cost_transport(&supply, &demand, &cost).map_err(|_| CurvatureError::Overflow)?;
    let mut pairs = Vec::new();
    for (i, &x) in small.iter().enumerate() {
        for (j, &y) in large.iter().enumerate() {
            if t.plan[i][j] == 1 {
                pairs.push(if flipped { (y, x) } else { (x, y) });
            }
        }
    }
    Ok(PartialBijection { pairs, domain_pool: a.to_vec(), range_pool: b.to_vec() })
}

/// `κ(u,v) = lim_{ε→0⁺} κ_ε(u,v)/ε` for an edge, computed exactly.
///
/// `ε ↦ κ_ε` is concave, piecewise linear and vanishes at 0, so equal slopes
/// `κ_ε/ε` at `ε` and `ε/2` certify linearity on `(0, ε]`.
pub fn kappa_lly(g: &Graph, dist: &DistanceMatrix, u: usize, v: usize) -> Result<CurvatureValue, CurvatureError> {
    if !g.adjacent(u, v) {
        return Err(CurvatureError::NotAdjacent(u, v));
    }
    let mut bound = g.max_degree() as i64;
    for x in [u, v] {
        let deg = g.weighted_degree(x);
        bound = bound.max(deg.ceil().to_integer().to_i64().unwrap_or(i64::MAX - 1));
    }
    let mut eps = Rational::new(BigInt::one(), BigInt::from(bound + 1));
    let (k, mut plan) = kappa_eps_with_plan(g, dist, u, v, &eps)?;
    let mut slope = k / &eps;
    for _ in 0..MAX_HALVINGS {
        let half = &eps / int(2);
        let (k_half, plan_half) = kappa_eps_with_plan(g, dist, u, v, &half)?;
        let slope_half = k_half / &half;
        if slope_half == slope {
            return Ok(CurvatureValue { value: slope, witness: Some(Witness::Plan(plan)) });
        }
        eps = half;
        slope = slope_half;
        plan = plan_half;
    }
    Err(CurvatureError::NoConvergence)
}

/// Evidence from the sufficient negativity condition: with
/// `N_w = B_1(w) ∖ {u, v}`, `|N_u| + |N_v| ≥ 3` and `d(N_u, N_v) ≥ 3`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NegativeCertificate {
    pub n_u: Vec<usize>,
    pub n_v: Vec<usize>,
    pub distance: u32,
}

/// A certificate that `κ(u,v) < 0`, when the cheap sufficient condition holds.
/// `None` says nothing about the sign.
pub fn negative_test(
    g: &Graph,
    dist: &DistanceMatrix,
    u: usize,
    v: usize,
) -> Result<Option<NegativeCertificate>, CurvatureError> {
    if !g.adjacent(u, v) {
        return Err(CurvatureError::NotAdjacent(u, v));
    }
    let others = |x: usize| -> Vec<usize> { g.neighbors(x).iter().copied().filter(|&y| y != u && y != v).collect() };
    let (n_u, n_v) = (others(u), others(v));
    if n_u.len() + n_v.len() < 3 {
        return Ok(None);
    }
    let distance = dist.set_distance(&n_u, &n_v).unwrap_or(u32::MAX);
    Ok((distance >= 3).then_some(NegativeCertificate { n_u, n_v, distance }))
}

/// Which engine computes edge curvature.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Engine {
    /// Transport formula for combinatorial graphs, optimal-transport limit otherwise.
    Auto,
    Transport,
    OtLimit,
    /// `κ^O = κ_1`, normalized graphs only.
    Ollivier,
}

pub fn edge_curvature(
    g: &Graph,
    dist: &DistanceMatrix,
    u: usize,
    v: usize,
    engine: Engine,
) -> Result<CurvatureValue, CurvatureError> {
    match engine {
        Engine::Auto if g.scheme() == WeightScheme::Combinatorial => kappa_transport(g, dist, u, v),
        Engine::Auto | Engine::OtLimit => kappa_lly(g, dist, u, v),
        Engine::Transport => kappa_transport(g, dist, u, v),
        Engine::Ollivier => {
            if !g.adjacent(u, v) {
                return Err(CurvatureError::NotAdjacent(u, v));
            }
            if g.scheme() != WeightScheme::Normalized {
                return Err(CurvatureError::WrongScheme(g.scheme()));
            }
            let (value, plan) = kappa_eps_with_plan(g, dist, u, v, &Rational::one())?;
            Ok(CurvatureValue { value, witness: Some(Witness::Plan(plan)) })
        }
    }
}

/// Curvature of every edge, in [`Graph::edges`] order.
pub fn edge_curvatures(
    g: &Graph,
    dist: &DistanceMatrix,
    engine: Engine,
) -> Result<Vec<((usize, usize), CurvatureValue)>, CurvatureError> {
    g.edges().into_iter().map(|(u, v)| Ok(((u, v), edge_curvature(g, dist, u, v, engine)?))).collect()
}

/// `κ(G) = min over edges`; `None` for the single-vertex graph.
pub fn min_curvature(g: &Graph, dist: &DistanceMatrix) -> Option<Rational> {
    g.edges()
        .into_iter()
        .map(|(u, v)| edge_curvature(g, dist, u, v, Engine::Auto).expect("edges are adjacent pairs").value)
        .min()
}

/// Whether every edge has `κ ≥ 0` under `engine`, stopping at the first
/// negative edge. Combinatorial graphs are screened with [`negative_test`].
pub fn is_nonneg_curved(g: &Graph, dist: &DistanceMatrix, engine: Engine) -> Result<bool, CurvatureError> {
    let edges = g.edges();
    if g.scheme() == WeightScheme::Combinatorial && matches!(engine, Engine::Auto | Engine::Transport) {
        for &(u, v) in &edges {
            if negative_test(g, dist, u, v)?.is_some() {
                return Ok(false);
            }
        }
    }
    for (u, v) in edges {
        if edge_curvature(g, dist, u, v, engine)?.value.is_negative() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Exact `(ε, κ_ε)` samples along an edge.
pub fn curvature_profile(
    g: &Graph,
    dist: &DistanceMatrix,
    u: usize,
    v: usize,
    samples: &[Rational],
) -> Result<Vec<(Rational, Rational)>, CurvatureError> {
    samples.iter().map(|e| Ok((e.clone(), kappa_eps(g, dist, u, v, e)?))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::from_edges(n, edges, WeightScheme::Combinatorial).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        graph(n, &e)
    }

    fn t_graph() -> Graph {
        // u=0, v=1, a=2, b=3 hang off u, c=4 hangs off v
        graph(5, &[(0, 1), (0, 2), (0, 3), (1, 4)])
    }

    #[test]
    fn measure_shapes() {
        let star = graph(4, &[(0, 1), (0, 2), (0, 3)]);
        let mu = measure_mu(&star, 0, &frac(1, 4)).unwrap();
        assert!((0..4).all(|x| mu.mass(x) == frac(1, 4)));
        let norm = star.with_scheme(WeightScheme::Normalized);
        let mu = measure_mu(&norm, 0, &int(1)).unwrap();
        assert_eq!(mu.mass(0), int(0));
        assert_eq!(mu.mass(2), frac(1, 3));
        assert_eq!(measure_mu(&star, 0, &int(0)).unwrap(), ProbabilityMeasure::point(0));
        assert_eq!(measure_mu(&star, 0, &frac(1, 2)), Err(CurvatureError::EpsilonOutOfRange));
        assert_eq!(measure_mu(&star, 0, &frac(-1, 2)), Err(CurvatureError::EpsilonOutOfRange));
    }

    #[test]
    fn wasserstein_trivial_cases() {
        let c6 = cycle(6);
        let d = c6.distances();
        let mu = measure_mu(&c6, 0, &frac(1, 3)).unwrap();
        assert_eq!(wasserstein(&d, &mu, &mu).unwrap().0, int(0));
        let (w, plan) = wasserstein(&d, &ProbabilityMeasure::point(0), &ProbabilityMeasure::point(3)).unwrap();
        assert_eq!(w, int(3));
        assert!(plan.is_coupling());
        assert_eq!(plan.cost(&d), w);
    }

    #[test]
    fn kappa_eps_basics() {
        let c6 = cycle(6);
        let d = c6.distances();
        assert_eq!(kappa_eps(&c6, &d, 0, 1, &int(0)).unwrap(), int(0));
        assert_eq!(kappa_eps(&c6, &d, 0, 1, &frac(1, 3)).unwrap(), int(0));
        assert_eq!(kappa_eps(&c6, &d, 0, 0, &frac(1, 3)), Err(CurvatureError::SameVertex(0)));
        // non-adjacent pairs are allowed here
        assert!(kappa_eps(&c6, &d, 0, 3, &frac(1, 3)).is_ok());
    }

    #[test]
    fn lly_small_cycles_and_triangle() {
        for (n, expect) in [(6, 0), (5, 1), (3, 3), (4, 2)] {
            let c = cycle(n);
            let d = c.distances();
            assert_eq!(kappa_lly(&c, &d, 0, 1).unwrap().value, int(expect), "C_{n}");
            assert_eq!(kappa_transport(&c, &d, 0, 1).unwrap().value, int(expect), "C_{n}");
        }
    }

    #[test]
    fn transport_examples() {
        let t = t_graph();
        let d = t.distances();
        let k = kappa_transport(&t, &d, 0, 1).unwrap();
        assert_eq!(k.value, int(-1));
        let Some(Witness::Bijection(phi)) = k.witness else { panic!("bijection witness") };
        assert!(phi.is_injective());
        assert_eq!(int(2 - phi.cost(&d)), k.value);
        let p3 = graph(3, &[(0, 1), (1, 2)]);
        let d = p3.distances();
        assert_eq!(kappa_transport(&p3, &d, 0, 1).unwrap().value, int(1));
        let k2 = graph(2, &[(0, 1)]);
        let d = k2.distances();
        assert_eq!(kappa_transport(&k2, &d, 0, 1).unwrap().value, int(2));
        assert_eq!(kappa_lly(&k2, &d, 0, 1).unwrap().value, int(2));
    }

    #[test]
    fn transport_two_three_case_reads_off_distance() {
        // v0 v1 v2 v3 with v2's extra neighbor u2 adjacent to v0
        let g = graph(5, &[(0, 1), (1, 2), (2, 3), (2, 4), (4, 0)]);
        let d = g.distances();
        let expected = (2 - d.get(0, 3) as i64).max(2 - d.get(0, 4) as i64);
        assert_eq!(expected, 1);
        assert_eq!(kappa_transport(&g, &d, 1, 2).unwrap().value, int(expected));
    }

    #[test]
    fn transport_wrong_scheme_and_not_adjacent() {
        let c = cycle(5);
        let d = c.distances();
        assert_eq!(kappa_transport(&c, &d, 0, 2), Err(CurvatureError::NotAdjacent(0, 2)));
        let n = c.with_scheme(WeightScheme::Normalized);
        assert_eq!(kappa_transport(&n, &d, 0, 1), Err(CurvatureError::WrongScheme(WeightScheme::Normalized)));
        assert_eq!(kappa_ollivier(&c, &d, 0, 1), Err(CurvatureError::WrongScheme(WeightScheme::Combinatorial)));
    }

    #[test]
    fn assignment_path_matches_enumeration() {
        // K_{1,1} core with four private leaves on each side
        let mut edges = alloc::vec![(0, 1)];
        for i in 0..4 {
            edges.push((0, 2 + i));
            edges.push((1, 6 + i));
        }
        edges.push((2, 6));
        let g = graph(10, &edges);
        let d = g.distances();
        let balls = edge_balls(&g, 0, 1);
        let a = best_bijection_assignment(&d, &balls.only_u, &balls.only_v).unwrap();
        // cost: leaf 2 → leaf 6 costs 0, the other three pairs cost 2 each
        assert_eq!(a.cost(&d), 6);
        let value = kappa_transport(&g, &d, 0, 1).unwrap().value;
        assert_eq!(value, int(2 - 6));
        assert_eq!(kappa_lly(&g, &d, 0, 1).unwrap().value, value);
    }

    #[test]
    fn negative_test_examples() {
        let t = t_graph();
        let d = t.distances();
        let cert = negative_test(&t, &d, 0, 1).unwrap().expect("certificate");
        assert_eq!(cert.n_u.len() + cert.n_v.len(), 3);
        assert_eq!(cert.distance, 3);
        let c6 = cycle(6);
        let d = c6.distances();
        assert_eq!(negative_test(&c6, &d, 0, 1).unwrap(), None);
        let k3 = cycle(3);
        let d = k3.distances();
        assert_eq!(negative_test(&k3, &d, 0, 1).unwrap(), None);
    }

    #[test]
    fn min_curvature_examples() {
        let p8 = graph(8, &(0..7).map(|i| (i, i + 1)).collect::<Vec<_>>());
        assert_eq!(min_curvature(&p8, &p8.distances()), Some(int(0)));
        let t = t_graph();
        assert_eq!(min_curvature(&t, &t.distances()), Some(int(-1)));
        assert!(!is_nonneg_curved(&t, &t.distances(), Engine::Auto).unwrap());
        let single = graph(1, &[]);
        assert_eq!(min_curvature(&single, &single.distances()), None);
    }

    #[test]
    fn profile_of_triangle_is_linear() {
        let k3 = cycle(3);
        let d = k3.distances();
        let prof = curvature_profile(&k3, &d, 0, 1, &[frac(1, 6), frac(1, 3)]).unwrap();
        for (e, k) in &prof {
            assert_eq!(k / e, int(3));
        }
        assert_eq!(curvature_profile(&k3, &d, 0, 1, &[int(0)]).unwrap(), alloc::vec![(int(0), int(0))]);
        assert_eq!(curvature_profile(&k3, &d, 0, 1, &[int(1)]), Err(CurvatureError::EpsilonOutOfRange));
    }

    #[test]
    fn general_weighted_kappa_eps() {
        let g = Graph::weighted(3, &[(0, 1, int(2)), (1, 2, int(1))], alloc::vec![int(2), int(3), int(1)]).unwrap();
        let d = g.distances();
        // Deg(0) = 1, Deg(1) = 1, Deg(2) = 1
        assert!(kappa_eps(&g, &d, 0, 1, &frac(1, 2)).is_ok());
        assert!(kappa_lly(&g, &d, 0, 1).is_ok());
    }
}
