//! Weak reachability.
//!
//! `u` is weakly `r`-reachable from `v` under `L` when some directed path of
//! length at most `r` runs from `u` to `v` or from `v` to `u` and `u` is the
//! `L`-minimum of that path.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::graph::Digraph;
use crate::order::LinearOrder;
use crate::vertex_set::VertexSet;

/// `WReach_r[G, L, v]`, by a bounded walk search from `v` that tracks the
/// running minimum. Every running minimum seen along a walk of length at
/// most `r` is weakly reachable, and every weakly reachable vertex shows up
/// as such a minimum.
pub fn wreach(g: &Digraph, order: &LinearOrder, v: usize, r: usize) -> VertexSet {
    let mut result = VertexSet::new(g.n());
    result.insert(v);
    for forward in [true, false] {
        // (vertex, running minimum) -> smallest depth at which it was seen
        let mut best: HashMap<(usize, usize), usize> = HashMap::new();
        let mut stack = vec![(v, v, 0usize)];
        best.insert((v, v), 0);
        while let Some((x, min, depth)) = stack.pop() {
            if depth >= r {
                continue;
            }
            let next = if forward { g.out_neighbors(x) } else { g.in_neighbors(x) };
            for &y in next {
                let m = if order.less(y, min) { y } else { min };
                result.insert(m);
                let d = depth + 1;
                match best.get(&(y, m)) {
                    Some(&seen) if seen <= d => {}
                    _ => {
                        best.insert((y, m), d);
                        stack.push((y, m, d));
                    }
                }
            }
        }
    }
    result
}

/// Weak reachability sets of all vertices at once. Runs a breadth-first
/// search from every `u` through vertices above `u` in both arc
/// directions; each vertex reached this way has `u` in its set.
pub fn wreach_all(g: &Digraph, order: &LinearOrder, r: usize) -> Vec<VertexSet> {
    let n = g.n();
    let reached: Vec<Vec<usize>> = (0..n).into_par_iter().map(|u| reach_above(g, order, u, r)).collect();
    let mut sets = vec![VertexSet::new(n); n];
    for (u, targets) in reached.into_iter().enumerate() {
        for v in targets {
            sets[v].insert(u);
        }
    }
    sets
}

/// Vertices joined to `u` by a directed path (either direction) of length at
/// most `r` whose vertices all lie at or above `u`.
fn reach_above(g: &Digraph, order: &LinearOrder, u: usize, r: usize) -> Vec<usize> {
    let pu = order.position(u);
    let mut seen = VertexSet::new(g.n());
    seen.insert(u);
    for forward in [true, false] {
        let mut visited = VertexSet::new(g.n());
        visited.insert(u);
        let mut frontier = vec![u];
        for _ in 0..r {
            let mut next = Vec::new();
            for &x in &frontier {
                let nbrs = if forward { g.out_neighbors(x) } else { g.in_neighbors(x) };
                for &y in nbrs {
                    if order.position(y) > pu && visited.insert(y) {
                        next.push(y);
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            seen.extend(next.iter().copied());
            frontier = next;
        }
    }
    seen.to_vec()
}

/// `max_v |WReach_r[G, L, v]|`; `0` on the empty graph.
pub fn wcol_of_order(g: &Digraph, order: &LinearOrder, r: usize) -> usize {
    wreach_all(g, order, r).iter().map(VertexSet::len).max().unwrap_or(0)
}

/// `wcol_∞` of a fixed order: radius `n` covers every path.
pub fn wcol_infty(g: &Digraph, order: &LinearOrder) -> usize {
    wcol_of_order(g, order, g.n())
}
