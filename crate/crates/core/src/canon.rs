//! Canonical labeling by partition refinement and backtracking.
//!
//! Vertices are ordered by an equitable ordered partition; non-discrete
//! partitions are split by individualizing each vertex of the first smallest
//! non-singleton cell. Each leaf yields the upper triangle of the relabeled
//! adjacency matrix; the largest one is the canonical form. Automorphisms
//! discovered on the way (leaves with equal certificates) prune sibling
//! branches lying in the same orbit of the prefix stabilizer.

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{Graph, GraphError, WeightScheme};

/// Dense adjacency bit matrix, the working representation for canonical
/// labeling and enumeration.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitGraph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

impl BitGraph {
    pub fn empty(n: usize) -> BitGraph {
        let words = n.div_ceil(64).max(1);
        BitGraph { n, words, rows: vec![0; n * words] }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> BitGraph {
        let mut g = BitGraph::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn from_graph(g: &Graph) -> BitGraph {
        BitGraph::from_edges(g.n(), &g.edges())
    }

    pub fn to_graph(&self, scheme: WeightScheme) -> Result<Graph, GraphError> {
        Graph::from_edges(self.n, &self.edges(), scheme)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has(&self, u: usize, v: usize) -> bool {
        self.rows[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        self.rows[u * self.words + v / 64] |= 1 << (v % 64);
        self.rows[v * self.words + u / 64] |= 1 << (u % 64);
    }

    pub fn row(&self, u: usize) -> &[u64] {
        &self.rows[u * self.words..(u + 1) * self.words]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.row(u).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&v| self.has(u, v))
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.has(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Adds a vertex adjacent to `attach`.
    pub fn with_new_vertex(&self, attach: &[usize]) -> BitGraph {
        let mut g = BitGraph::empty(self.n + 1);
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        for &a in attach {
            g.add_edge(a, self.n);
        }
        g
    }

    /// Relabels so that canonical position `i` holds vertex `order[i]`.
    pub fn relabeled(&self, order: &[usize]) -> BitGraph {
        let mut pos = vec![0; self.n];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let edges: Vec<(usize, usize)> = self.edges().into_iter().map(|(u, v)| (pos[u], pos[v])).collect();
        BitGraph::from_edges(self.n, &edges)
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(x) = stack.pop() {
            for y in self.neighbors(x) {
                if !seen[y] {
                    seen[y] = true;
                    count += 1;
                    stack.push(y);
                }
            }
        }
        count == self.n
    }
}

/// Complete isomorphism invariant: vertex count, optional vertex colors in
/// canonical order, then the relabeled upper triangle.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(pub Vec<u8>);

#[derive(Clone, Debug)]
pub struct Labeling {
    /// `order[i]` is the vertex placed at canonical position `i`.
    pub order: Vec<usize>,
    pub form: CanonicalForm,
    /// Automorphisms met during the search (not necessarily generators).
    pub automorphisms: Vec<Vec<usize>>,
}

const MAX_STORED_AUTOMORPHISMS: usize = 128;

struct Search<'a> {
    g: &'a BitGraph,
    best: Option<(Vec<u64>, Vec<usize>)>,
    first: Option<(Vec<u64>, Vec<usize>)>,
    autos: Vec<Vec<usize>>,
}

fn certificate(g: &BitGraph, order: &[usize]) -> Vec<u64> {
    let n = order.len();
    let mut bits = vec![0u64; (n * n.saturating_sub(1) / 2).div_ceil(64).max(1)];
    let mut k = 0;
    for i in 0..n {
        let row = g.row(order[i]);
        for &vj in &order[i + 1..] {
            if row[vj / 64] >> (vj % 64) & 1 == 1 {
                bits[k / 64] |= 1 << (63 - k % 64);
            }
            k += 1;
        }
    }
    bits
}

/// Refines an ordered partition to the coarsest equitable refinement. Split
/// cells are ordered by neighbor count, keeping the result label-invariant.
fn refine(g: &BitGraph, cells: &mut Vec<Vec<usize>>) {
    let words = g.words;
    let mut counts = vec![0u32; g.n];
    loop {
        let mut changed = false;
        let mut s = 0;
        while s < cells.len() {
            let mut mask = vec![0u64; words];
            for &v in &cells[s] {
                mask[v / 64] |= 1 << (v % 64);
            }
            let mut c = 0;
            while c < cells.len() {
                if cells[c].len() == 1 {
                    c += 1;
                    continue;
                }
                for &v in &cells[c] {
                    counts[v] = g.row(v).iter().zip(&mask).map(|(a, b)| (a & b).count_ones()).sum();
                }
                let first = counts[cells[c][0]];
                if cells[c].iter().all(|&v| counts[v] == first) {
                    c += 1;
                    continue;
                }
                let mut cell = core::mem::take(&mut cells[c]);
                cell.sort_by_key(|&v| (counts[v], v));
                let mut parts: Vec<Vec<usize>> = Vec::new();
                let mut last = None;
                for v in cell {
                    if last != Some(counts[v]) {
                        parts.push(Vec::new());
                        last = Some(counts[v]);
                    }
                    parts.last_mut().expect("just pushed").push(v);
                }
                let added = parts.len();
                cells.splice(c..=c, parts);
                c += added;
                changed = true;
            }
            s += 1;
        }
        if !changed {
            break;
        }
    }
}

impl Search<'_> {
    fn run(&mut self, mut cells: Vec<Vec<usize>>, prefix: &mut Vec<usize>) {
        refine(self.g, &mut cells);
        let target =
            cells.iter().enumerate().filter(|(_, c)| c.len() > 1).min_by_key(|(i, c)| (c.len(), *i)).map(|(i, _)| i);
        let Some(t) = target else {
            let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
            self.leaf(order);
            return;
        };
        let cell = cells[t].clone();
        let mut explored: Vec<usize> = Vec::new();
        for &v in &cell {
            if !explored.is_empty() && self.same_orbit_as_any(prefix, v, &explored) {
                continue;
            }
            explored.push(v);
            let mut next = cells.clone();
            let rest: Vec<usize> = cell.iter().copied().filter(|&x| x != v).collect();
            next.splice(t..=t, [vec![v], rest]);
            prefix.push(v);
            self.run(next, prefix);
            prefix.pop();
        }
    }

    fn same_orbit_as_any(&self, prefix: &[usize], v: usize, explored: &[usize]) -> bool {
        let n = self.g.n;
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut any = false;
        for a in &self.autos {
            if prefix.iter().all(|&p| a[p] == p) {
                any = true;
                for x in 0..n {
                    let (rx, ry) = (find(&mut parent, x), find(&mut parent, a[x]));
                    if rx != ry {
                        parent[rx] = ry;
                    }
                }
            }
        }
        if !any {
            return false;
        }
        let rv = find(&mut parent, v);
        explored.iter().any(|&w| find(&mut parent, w) == rv)
    }

    fn leaf(&mut self, order: Vec<usize>) {
        let cert = certificate(self.g, &order);
        let record = |reference: &(Vec<u64>, Vec<usize>), autos: &mut Vec<Vec<usize>>| {
            if reference.0 == cert && autos.len() < MAX_STORED_AUTOMORPHISMS {
                let mut gamma = vec![0; order.len()];
                for (i, &v) in reference.1.iter().enumerate() {
                    gamma[v] = order[i];
                }
                if gamma.iter().enumerate().any(|(i, &x)| i != x) && !autos.contains(&gamma) {
                    autos.push(gamma);
                }
            }
        };
        if let Some(first) = &self.first {
            record(first, &mut self.autos);
        } else {
            self.first = Some((cert.clone(), order.clone()));
        }
        match &self.best {
            Some(best) if best.0 > cert => {}
            Some(best) if best.0 == cert => record(best, &mut self.autos),
            _ => self.best = Some((cert, order)),
        }
    }
}

/// Canonical labeling; `colors` (when given) is preserved: only
/// color-respecting relabelings are considered.
pub fn canonical_labeling(g: &BitGraph, colors: Option<&[u32]>) -> Labeling {
    let n = g.n;
    let mut cells: Vec<Vec<usize>> = Vec::new();
    match colors {
        Some(colors) => {
            let mut values: Vec<u32> = colors.to_vec();
            values.sort_unstable();
            values.dedup();
            for c in values {
                cells.push((0..n).filter(|&v| colors[v] == c).collect());
            }
        }
        None if n > 0 => cells.push((0..n).collect()),
        None => {}
    }
    let mut search = Search { g, best: None, first: None, autos: Vec::new() };
    if n == 0 {
        return Labeling { order: Vec::new(), form: CanonicalForm(vec![0, 0, 0, 0]), automorphisms: Vec::new() };
    }
    search.run(cells, &mut Vec::new());
    let (cert, order) = search.best.expect("at least one leaf");
    let mut bytes = Vec::with_capacity(4 + cert.len() * 8);
    bytes.extend_from_slice(&(n as u32).to_le_bytes());
    if let Some(colors) = colors {
        for &v in &order {
            bytes.extend_from_slice(&colors[v].to_le_bytes());
        }
    }
    for w in &cert {
        bytes.extend_from_slice(&w.to_be_bytes());
    }
    Labeling { order, form: CanonicalForm(bytes), automorphisms: search.autos }
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    canonical_labeling(&BitGraph::from_graph(g), None).form
}

pub fn isomorphic(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n() && a.edge_count() == b.edge_count() && canonical_form(a) == canonical_form(b)
}

/// The canonically relabeled graph.
pub fn canonical_graph(g: &BitGraph) -> BitGraph {
    let lab = canonical_labeling(g, None);
    g.relabeled(&lab.order)
}

/// Whether `u` and `v` lie in the same automorphism orbit.
pub fn same_orbit(g: &BitGraph, u: usize, v: usize) -> bool {
    if u == v {
        return true;
    }
    let mark = |x: usize| -> Vec<u32> { (0..g.n).map(|y| u32::from(y != x)).collect() };
    canonical_labeling(g, Some(&mark(u))).form == canonical_labeling(g, Some(&mark(v))).form
}

/// Color classes of the equitable refinement of the unit partition, in
/// canonical cell order.
pub fn equitable_cells(g: &BitGraph) -> Vec<Vec<usize>> {
    if g.n == 0 {
        return Vec::new();
    }
    let mut cells = vec![(0..g.n).collect::<Vec<_>>()];
    refine(g, &mut cells);
    cells
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle_edges(n: usize) -> Vec<(usize, usize)> {
        (0..n).map(|i| (i, (i + 1) % n)).collect()
    }

    #[test]
    fn relabeled_cycles_agree() {
        let a = BitGraph::from_edges(6, &cycle_edges(6));
        let perm = [3, 0, 5, 1, 4, 2];
        let edges: Vec<_> = cycle_edges(6).into_iter().map(|(u, v)| (perm[u], perm[v])).collect();
        let b = BitGraph::from_edges(6, &edges);
        assert_eq!(canonical_labeling(&a, None).form, canonical_labeling(&b, None).form);
    }

    #[test]
    fn prism_three_differs_from_k33() {
        let prism = BitGraph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)]);
        let k33 = BitGraph::from_edges(6, &[(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)]);
        assert_ne!(canonical_labeling(&prism, None).form, canonical_labeling(&k33, None).form);
    }

    #[test]
    fn canonical_graph_is_fixed_point() {
        let g = BitGraph::from_edges(7, &[(0, 1), (1, 2), (2, 3), (3, 0), (3, 4), (4, 5), (5, 6)]);
        let c = canonical_graph(&g);
        assert_eq!(canonical_graph(&c), c);
    }

    #[test]
    fn orbits_on_path() {
        let p = BitGraph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]);
        assert!(same_orbit(&p, 0, 4));
        assert!(same_orbit(&p, 1, 3));
        assert!(!same_orbit(&p, 0, 1));
        assert!(!same_orbit(&p, 2, 3));
    }

    #[test]
    fn petersen_like_symmetric_graph_terminates() {
        // Petersen graph: large automorphism group, refinement gives one cell
        let outer = cycle_edges(5);
        let mut edges = outer.clone();
        for i in 0..5 {
            edges.push((i, 5 + i));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        let g = BitGraph::from_edges(10, &edges);
        let lab = canonical_labeling(&g, None);
        assert_eq!(lab.order.len(), 10);
        let perm = [9, 2, 7, 4, 0, 1, 8, 3, 6, 5];
        let h_edges: Vec<_> = edges.iter().map(|&(u, v)| (perm[u], perm[v])).collect();
        let h = BitGraph::from_edges(10, &h_edges);
        assert_eq!(canonical_labeling(&h, None).form, lab.form);
    }
}
