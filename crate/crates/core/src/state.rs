//! The state function along a geodesic path in a subcubic graph.
//!
//! Each interior vertex `v_i` of a geodesic `v_0 … v_l` has at most one neighbor
//! off the path (its extra neighbor `u_i`). The state records whether `u_i`
//! is closer to, level with, or farther from the root `v_0` than `v_i`.

use alloc::vec::Vec;
use core::fmt;

use crate::graph::{DistanceMatrix, GeodesicPath, Graph, GraphError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum State {
    Two,
    ThreeMinus,
    ThreeZero,
    ThreePlus,
}

impl State {
    pub fn label(self) -> &'static str {
        match self {
            State::Two => "2",
            State::ThreeMinus => "3-",
            State::ThreeZero => "30",
            State::ThreePlus => "3+",
        }
    }

    /// Level offset of the extra neighbor relative to the labeled vertex.
    pub fn offset(self) -> Option<i64> {
        match self {
            State::Two => None,
            State::ThreeMinus => Some(-1),
            State::ThreeZero => Some(0),
            State::ThreePlus => Some(1),
        }
    }
}

impl fmt::Display for State {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// States of `v_1 … v_{l−1}`; index `i` in the vectors refers to path position `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StateAssignment {
    pub root: usize,
    /// `labels[i]` for `1 ≤ i ≤ l−1`; positions 0 and `l` hold `None`.
    pub labels: Vec<Option<State>>,
    /// Extra neighbor `u_i` of `v_i`, when it has one.
    pub extra: Vec<Option<usize>>,
}

impl StateAssignment {
    pub fn state(&self, i: usize) -> Option<State> {
        self.labels.get(i).copied().flatten()
    }

    /// Interior states in path order.
    pub fn interior(&self) -> Vec<State> {
        self.labels.iter().filter_map(|s| *s).collect()
    }
}

pub fn state_function(g: &Graph, dist: &DistanceMatrix, path: &GeodesicPath) -> Result<StateAssignment, GraphError> {
    if let Some(v) = (0..g.n()).find(|&v| g.degree(v) > 3) {
        return Err(GraphError::DegreeTooHigh(v));
    }
    let vs = path.vertices();
    let l = vs.len() - 1;
    for i in 0..=l {
        for j in i + 1..=l {
            if dist.get(vs[i], vs[j]) as usize != j - i {
                return Err(GraphError::NotGeodesic);
            }
        }
    }
    let root = vs[0];
    let mut labels = alloc::vec![None; l + 1];
    let mut extra = alloc::vec![None; l + 1];
    for i in 1..l {
        let v = vs[i];
        let u = g.neighbors(v).iter().copied().find(|&x| x != vs[i - 1] && x != vs[i + 1]);
        labels[i] = Some(match u {
            None => State::Two,
            Some(u) => {
                let (ru, rv) = (dist.get(root, u), dist.get(root, v));
                if ru < rv {
                    State::ThreeMinus
                } else if ru == rv {
                    State::ThreeZero
                } else {
                    State::ThreePlus
                }
            }
        });
        extra[i] = u;
    }
    Ok(StateAssignment { root, labels, extra })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::WeightScheme;

    #[test]
    fn path_interior_is_all_two() {
        let edges: Vec<_> = (0..6).map(|i| (i, i + 1)).collect();
        let g = Graph::from_edges(7, &edges, WeightScheme::Combinatorial).unwrap();
        let d = g.distances();
        let p = GeodesicPath::new(&d, &g, (0..7).collect()).unwrap();
        let s = state_function(&g, &d, &p).unwrap();
        assert_eq!(s.interior(), alloc::vec![State::Two; 5]);
        assert_eq!(s.state(0), None);
    }

    #[test]
    fn chord_back_to_root_is_three_minus() {
        // v0..v3 = 0..3, u2 = 4 with u2 ∼ v2 and u2 ∼ v0
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (4, 2), (4, 0)], WeightScheme::Combinatorial).unwrap();
        let d = g.distances();
        let p = GeodesicPath::new(&d, &g, alloc::vec![0, 1, 2, 3]).unwrap();
        let s = state_function(&g, &d, &p).unwrap();
        assert_eq!(s.state(2), Some(State::ThreeMinus));
        assert_eq!(s.extra[2], Some(4));
        assert_eq!(s.state(1), Some(State::Two));
    }

    #[test]
    fn degree_four_rejected() {
        let g = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4)], WeightScheme::Combinatorial).unwrap();
        let d = g.distances();
        let p = GeodesicPath::new(&d, &g, alloc::vec![1, 0, 2]).unwrap();
        assert_eq!(state_function(&g, &d, &p), Err(GraphError::DegreeTooHigh(0)));
    }
}
