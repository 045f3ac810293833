mod support;

use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use ricci_core::curvature::*;
use ricci_core::enumerate::enumerate_subcubic;
use ricci_core::families::{gen_mobius, gen_prism};
use ricci_core::rational::{frac, int};
use ricci_core::{DistanceMatrix, Graph, Rational, WeightScheme};
use support::gen::{graph_with_perm, permuted, subcubic_graph};
use support::simplex::transport_cost;

/// Lazy walk measure written out directly from the weights.
fn lazy_measure(g: &Graph, u: usize, eps: &Rational) -> Vec<(usize, Rational)> {
    let m = g.m(u);
    let mut out = vec![];
    let mut moved = Rational::zero();
    for &v in g.neighbors(u) {
        let p = eps * g.w(u, v) / &m;
        moved += &p;
        out.push((v, p));
    }
    out.push((u, Rational::one() - moved));
    out
}

fn lp_kappa_eps(g: &Graph, dist: &DistanceMatrix, u: usize, v: usize, eps: &Rational) -> Rational {
    let w = transport_cost(&lazy_measure(g, u, eps), &lazy_measure(g, v, eps), |x, y| dist.get(x, y) as i64);
    Rational::one() - w / int(dist.get(u, v) as i64)
}

/// Limit curvature from the LP: slopes at two small step sizes must agree,
/// which by concavity through the origin pins the limit.
fn lp_kappa(g: &Graph, dist: &DistanceMatrix, u: usize, v: usize) -> Rational {
    let e1 = frac(1, 8);
    let e2 = frac(1, 16);
    let s1 = lp_kappa_eps(g, dist, u, v, &e1) / &e1;
    let s2 = lp_kappa_eps(g, dist, u, v, &e2) / &e2;
    assert_eq!(s1, s2, "slopes disagree on edge {u}-{v}");
    s1
}

fn config() -> ProptestConfig {
    ProptestConfig { cases: 64, ..ProptestConfig::default() }
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn engines_agree_with_lp_oracle(g in subcubic_graph(2..=8)) {
        let dist = g.distances();
        for (u, v) in g.edges() {
            let t = kappa_transport(&g, &dist, u, v).unwrap().value;
            let l = kappa_lly(&g, &dist, u, v).unwrap().value;
            prop_assert_eq!(&t, &l);
            prop_assert_eq!(t, lp_kappa(&g, &dist, u, v));
        }
    }

    #[test]
    fn normalized_lly_agrees_with_lp_oracle(g in subcubic_graph(2..=8)) {
        let g = g.with_scheme(WeightScheme::Normalized);
        let dist = g.distances();
        for (u, v) in g.edges() {
            prop_assert_eq!(kappa_lly(&g, &dist, u, v).unwrap().value, lp_kappa(&g, &dist, u, v));
        }
    }

    #[test]
    fn wasserstein_couplings_are_feasible_and_optimal(
        g in subcubic_graph(3..=9),
        raw in proptest::collection::vec((0usize..64, 1i64..9), 1..=6),
        raw2 in proptest::collection::vec((0usize..64, 1i64..9), 1..=6),
    ) {
        let dist = g.distances();
        let mk = |raw: &[(usize, i64)]| {
            let mut m: BTreeMap<usize, Rational> = BTreeMap::new();
            let total: i64 = raw.iter().map(|r| r.1).sum();
            for &(v, w) in raw {
                *m.entry(v % g.n()).or_insert_with(Rational::zero) += frac(w, total);
            }
            m
        };
        let (a, b) = (mk(&raw), mk(&raw2));
        let mu = ProbabilityMeasure::new(a.clone()).unwrap();
        let nu = ProbabilityMeasure::new(b.clone()).unwrap();
        let (w, plan) = wasserstein(&dist, &mu, &nu).unwrap();
        prop_assert!(plan.is_coupling());
        prop_assert_eq!(plan.cost(&dist), w.clone());
        let a: Vec<_> = a.into_iter().collect();
        let b: Vec<_> = b.into_iter().collect();
        prop_assert_eq!(w, transport_cost(&a, &b, |x, y| dist.get(x, y) as i64));
    }

    #[test]
    fn scaling_and_pendant_identities(g in subcubic_graph(2..=9)) {
        let n = g.with_scheme(WeightScheme::Normalized);
        let dist = g.distances();
        for (u, v) in g.edges() {
            let kc = kappa_transport(&g, &dist, u, v).unwrap().value;
            let kn = kappa_lly(&n, &dist, u, v).unwrap().value;
            if g.degree(u) == g.degree(v) {
                prop_assert_eq!(&kc, &(int(g.degree(u) as i64) * &kn));
            }
            if g.degree(u) == 1 || g.degree(v) == 1 {
                prop_assert!(!kc.is_negative() && !kn.is_negative());
            }
        }
    }

    #[test]
    fn ollivier_nonneg_implies_lly_nonneg(g in subcubic_graph(2..=9)) {
        let n = g.with_scheme(WeightScheme::Normalized);
        let dist = n.distances();
        for (u, v) in n.edges() {
            if !kappa_ollivier(&n, &dist, u, v).unwrap().is_negative() {
                prop_assert!(!kappa_lly(&n, &dist, u, v).unwrap().value.is_negative());
            }
        }
    }

    #[test]
    fn kappa_eps_is_concave(g in subcubic_graph(2..=8)) {
        let dist = g.distances();
        let grid: Vec<Rational> = (0..=4).map(|k| frac(k, 12)).collect();
        for (u, v) in g.edges() {
            let ks: Vec<Rational> = grid.iter().map(|e| kappa_eps(&g, &dist, u, v, e).unwrap()).collect();
            prop_assert!(ks[0].is_zero());
            for w in ks.windows(3) {
                prop_assert!(!(&w[0] + &w[2] - int(2) * &w[1]).is_positive());
            }
        }
    }

    #[test]
    fn negative_certificates_are_sound(g in subcubic_graph(2..=10)) {
        let dist = g.distances();
        for (u, v) in g.edges() {
            if negative_test(&g, &dist, u, v).unwrap().is_some() {
                prop_assert!(kappa_transport(&g, &dist, u, v).unwrap().value.is_negative());
            }
        }
    }

    #[test]
    fn curvature_is_label_invariant((g, perm) in graph_with_perm(2..=10)) {
        let h = permuted(&g, &perm);
        let (dg, dh) = (g.distances(), h.distances());
        for (u, v) in g.edges() {
            prop_assert_eq!(
                kappa_transport(&g, &dg, u, v).unwrap().value,
                kappa_transport(&h, &dh, perm[u], perm[v]).unwrap().value
            );
        }
    }
}

#[test]
fn degree_two_three_criterion_exhaustive() {
    let mut checked = 0;
    for n in 3..=9 {
        for bg in enumerate_subcubic(n) {
            let g = bg.to_graph(WeightScheme::Combinatorial).unwrap();
            let dist = g.distances();
            for (a, b) in g.edges() {
                for (u, v) in [(a, b), (b, a)] {
                    if g.degree(u) != 2 || g.degree(v) != 3 {
                        continue;
                    }
                    let u1 = *g.neighbors(u).iter().find(|&&x| x != v).unwrap();
                    let vs: Vec<usize> = g.neighbors(v).iter().copied().filter(|&x| x != u).collect();
                    let far = vs.iter().all(|&x| dist.get(u1, x) == 3);
                    let negative = kappa_transport(&g, &dist, u, v).unwrap().value.is_negative();
                    assert_eq!(negative, far, "edges {:?}", g.edges());
                    checked += 1;
                }
            }
        }
    }
    assert!(checked > 1000);
}

#[test]
fn prism_and_mobius_curvatures_match_lp() {
    for k in 3..=8 {
        for (name, g) in [("prism", gen_prism(k).unwrap()), ("mobius", gen_mobius(k).unwrap())] {
            let dist = g.distances();
            let mut values: Vec<Rational> = vec![];
            for (u, v) in g.edges() {
                let t = kappa_transport(&g, &dist, u, v).unwrap().value;
                assert_eq!(t, lp_kappa(&g, &dist, u, v), "{name}({k}) edge {u}-{v}");
                if !values.contains(&t) {
                    values.push(t);
                }
            }
            assert!(values.len() <= 2, "{name}({k}): {values:?}");
            assert!(values.iter().all(|x| !x.is_negative()), "{name}({k})");
        }
    }
}

#[test]
fn known_values() {
    // K4 edges: all four vertices are common to both balls.
    let k4 =
        Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)], WeightScheme::Combinatorial).unwrap();
    let d = k4.distances();
    assert_eq!(kappa_transport(&k4, &d, 0, 1).unwrap().value, int(4));
    assert_eq!(lp_kappa(&k4, &d, 0, 1), int(4));
    // long cycles are flat
    let c = Graph::from_edges(9, &(0..9).map(|i| (i, (i + 1) % 9)).collect::<Vec<_>>(), WeightScheme::Combinatorial)
        .unwrap();
    let d = c.distances();
    assert_eq!(lp_kappa(&c, &d, 0, 1), int(0));
}
