//! Random connected subcubic graphs for property tests.

#![allow(dead_code)]

use proptest::prelude::*;
use ricci_core::{Graph, WeightScheme};

/// A random tree of maximum degree 3 on `n` vertices plus extra edges that
/// keep every degree at most 3.
pub fn subcubic_edges(n_range: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = (usize, Vec<(usize, usize)>)> {
    n_range
        .prop_flat_map(|n| {
            (Just(n), proptest::collection::vec(any::<u32>(), n), proptest::collection::vec((0..n, 0..n), 0..2 * n))
        })
        .prop_map(|(n, picks, extra)| {
            let mut deg = vec![0usize; n];
            let mut edges = Vec::new();
            for v in 1..n {
                let open: Vec<usize> = (0..v).filter(|&u| deg[u] < 3).collect();
                let u = open[picks[v] as usize % open.len()];
                edges.push((u, v));
                deg[u] += 1;
                deg[v] += 1;
            }
            for (u, v) in extra {
                let (u, v) = (u.min(v), u.max(v));
                if u != v && deg[u] < 3 && deg[v] < 3 && !edges.contains(&(u, v)) {
                    edges.push((u, v));
                    deg[u] += 1;
                    deg[v] += 1;
                }
            }
            (n, edges)
        })
}

pub fn subcubic_graph(n_range: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = Graph> {
    subcubic_edges(n_range).prop_map(|(n, e)| Graph::from_edges(n, &e, WeightScheme::Combinatorial).unwrap())
}

/// A graph with a random permutation applied to its labels.
pub fn permuted(g: &Graph, perm: &[usize]) -> Graph {
    let e: Vec<(usize, usize)> = g.edges().into_iter().map(|(u, v)| (perm[u], perm[v])).collect();
    Graph::from_edges(g.n(), &e, g.scheme()).unwrap()
}

pub fn graph_with_perm(n_range: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    subcubic_graph(n_range).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), Just((0..n).collect::<Vec<usize>>()).prop_shuffle())
    })
}
