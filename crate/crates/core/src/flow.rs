//! Integer min-cost transportation by successive shortest paths.
//!
//! The network is tiny in every use here (supports of lazy random-walk
//! measures, at most a handful of points), so Bellman-Ford on the residual
//! graph is plenty.

use alloc::vec;
use alloc::vec::Vec;

#[derive(Clone, Debug)]
struct Arc {
    to: usize,
    cap: i128,
    cost: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FlowError {
    /// Total supply differs from total demand.
    Unbalanced,
    Negative,
}

/// Optimal transportation plan between integer supplies and demands.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Transport {
    /// `plan[i][j]` units shipped from source `i` to sink `j`.
    pub plan: Vec<Vec<i128>>,
    pub cost: i128,
}

/// Minimizes `Σ plan[i][j]·cost[i][j]` subject to row sums `supply` and
/// column sums `demand`. Every source may ship to every sink.
pub fn min_cost_transport(supply: &[i128], demand: &[i128], cost: &[Vec<i64>]) -> Result<Transport, FlowError> {
    if supply.iter().chain(demand).any(|&x| x < 0) {
        return Err(FlowError::Negative);
    }
    if supply.iter().sum::<i128>() != demand.iter().sum::<i128>() {
        return Err(FlowError::Unbalanced);
    }
    let (m, n) = (supply.len(), demand.len());
    let source = m + n;
    let sink = source + 1;
    let mut arcs: Vec<Arc> = Vec::new();
    let mut out: Vec<Vec<usize>> = vec![Vec::new(); m + n + 2];
    let mut add = |arcs: &mut Vec<Arc>, from: usize, to: usize, cap: i128, cost: i64| {
        out[from].push(arcs.len());
        arcs.push(Arc { to, cap, cost });
        out[to].push(arcs.len());
        arcs.push(Arc { to: from, cap: 0, cost: -cost });
    };
    let total: i128 = supply.iter().sum();
    for (i, &s) in supply.iter().enumerate() {
        add(&mut arcs, source, i, s, 0);
    }
    let mut cell = vec![vec![0usize; n]; m];
    for i in 0..m {
        for j in 0..n {
            cell[i][j] = arcs.len();
            add(&mut arcs, i, m + j, total, cost[i][j]);
        }
    }
    for (j, &d) in demand.iter().enumerate() {
        add(&mut arcs, m + j, sink, d, 0);
    }

    let nodes = m + n + 2;
    let mut shipped = 0i128;
    let mut total_cost = 0i128;
    while shipped < total {
        // Bellman-Ford from the super source over residual arcs.
        let mut dist = vec![i64::MAX; nodes];
        let mut via = vec![usize::MAX; nodes];
        dist[source] = 0;
        for _ in 0..nodes {
            let mut changed = false;
            for x in 0..nodes {
                if dist[x] == i64::MAX {
                    continue;
                }
                for &a in &out[x] {
                    let arc = &arcs[a];
                    if arc.cap > 0 && dist[x] + arc.cost < dist[arc.to] {
                        dist[arc.to] = dist[x] + arc.cost;
                        via[arc.to] = a;
                        changed = true;
                    }
                }
            }
            if !changed {
                break;
            }
        }
        if dist[sink] == i64::MAX {
            return Err(FlowError::Unbalanced);
        }
        let mut push = total - shipped;
        let mut x = sink;
        while x != source {
            let a = via[x];
            push = push.min(arcs[a].cap);
            x = arcs[a ^ 1].to;
        }
        let mut x = sink;
        while x != source {
            let a = via[x];
            arcs[a].cap -= push;
            arcs[a ^ 1].cap += push;
            x = arcs[a ^ 1].to;
        }
        shipped += push;
        total_cost += push * dist[sink] as i128;
    }
    let plan = (0..m).map(|i| (0..n).map(|j| arcs[cell[i][j] ^ 1].cap).collect()).collect();
    Ok(Transport { plan, cost: total_cost })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_and_forced() {
        let t = min_cost_transport(&[5], &[5], &[vec![3]]).unwrap();
        assert_eq!(t.cost, 15);
        assert_eq!(t.plan, vec![vec![5]]);
    }

    #[test]
    fn picks_cheap_diagonal() {
        let cost = vec![vec![0, 2], vec![2, 0]];
        let t = min_cost_transport(&[1, 2], &[1, 2], &cost).unwrap();
        assert_eq!(t.cost, 0);
    }

    #[test]
    fn needs_rerouting() {
        // greedy on cell (0,0) would be suboptimal
        let cost = vec![vec![1, 2], vec![1, 10]];
        let t = min_cost_transport(&[1, 1], &[1, 1], &cost).unwrap();
        assert_eq!(t.cost, 3);
        assert_eq!(t.plan, vec![vec![0, 1], vec![1, 0]]);
    }

    #[test]
    fn unbalanced_rejected() {
        assert_eq!(min_cost_transport(&[1], &[2], &[vec![0]]), Err(FlowError::Unbalanced));
    }
}
