//! Strongly connected distance-`r` dominating sets.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Digraph;
use crate::scc::scc;
use crate::vertex_set::VertexSet;

use super::redblue::redblue_dominate_approx;

#[derive(Clone, Debug, Serialize)]
pub struct ScdsOutcome {
    pub solution: VertexSet,
    pub k_guess: usize,
    pub center: usize,
}

fn strongly_connected_in(g: &Digraph, s: &VertexSet) -> bool {
    let (h, _) = g.induced_subgraph(s);
    scc(&h).components.len() <= 1
}

/// For growing `k`, tries every center `v`: dominate everything from the
/// strong `k`-ball of `v`, then join each chosen vertex to `v` by shortest
/// paths both ways. The smallest result for the first successful `k` wins.
pub fn scds_approx(g: &Digraph, r: usize, seed: u64) -> Result<ScdsOutcome> {
    let n = g.n();
    if n == 0 {
        return Err(Error::arg("graph is empty"));
    }
    if scc(g).components.len() != 1 {
        return Err(Error::Infeasible("graph is not strongly connected".into()));
    }
    let everything = VertexSet::full(n);
    let from: Vec<Vec<Option<usize>>> = g.vertices().map(|v| g.distances_from(v, n)).collect();
    let to: Vec<Vec<Option<usize>>> = g.vertices().map(|v| g.distances_to(v, n)).collect();
    for k in 1..=n {
        let mut best: Option<ScdsOutcome> = None;
        for v in 0..n {
            let ball = VertexSet::from_iter_n(
                n,
                (0..n).filter(|&u| from[v][u].is_some_and(|d| d <= k) && to[v][u].is_some_and(|d| d <= k)),
            );
            if g.out_ball_of_set(&ball, r).len() != n {
                continue;
            }
            let stream = seed ^ (v as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15);
            let d = redblue_dominate_approx(g, &everything, &ball, r, stream)?.solution;
            let mut s = VertexSet::new(n);
            s.insert(v);
            for w in d.iter() {
                let there = g.shortest_path(v, w).expect("graph is strongly connected");
                let back = g.shortest_path(w, v).expect("graph is strongly connected");
                s.extend(there.into_iter().chain(back));
            }
            if !strongly_connected_in(g, &s) || g.out_ball_of_set(&s, r).len() != n {
                return Err(Error::internal("connected dominating set failed validation"));
            }
            if best.as_ref().is_none_or(|b| s.len() < b.solution.len()) {
                best = Some(ScdsOutcome { solution: s, k_guess: k, center: v });
            }
        }
        if let Some(b) = best {
            return Ok(b);
        }
    }
    Err(Error::internal("no center dominates the graph"))
}
