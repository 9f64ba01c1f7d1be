//! Dominating sets versus scattered sets.

use serde::Serialize;

use crate::coloring::{compute_wcol_order, wreach_all};
use crate::error::{Error, Result};
use crate::graph::Digraph;
use crate::vertex_set::VertexSet;

use super::tree::{build, is_scattered, max_left_chain};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DualityResult {
    /// A set `D` with `X ⊆ N^+_r(D)`.
    Dominating(VertexSet),
    /// `k + 1` members of `X`, pairwise without a common `r`-dominator.
    Scattered(Vec<usize>),
}

/// Everything the greedy pass produced, before deciding which side to
/// report.
#[derive(Clone, Debug, Serialize)]
pub struct GreedyDual {
    pub dominator: VertexSet,
    /// Greedily picked undominated vertices, in order.
    pub picked: Vec<usize>,
    /// Longest left chain of the independence tree of `picked`.
    pub chain: Vec<usize>,
    pub guarantee: usize,
    pub tree_nodes: usize,
    pub tree_height: usize,
    pub tree_right_chain: usize,
}

/// Walks a good weak `2r`-coloring order; every still undominated vertex of
/// `X` is picked and its weak `2r`-reachability set joins the dominator.
/// The picked vertices are then fed into an independence tree whose longest
/// left chain is scattered.
pub fn greedy_dual(g: &Digraph, x: &VertexSet, r: usize) -> Result<GreedyDual> {
    let n = g.n();
    if x.universe() != n {
        return Err(Error::arg("vertex set does not match the graph"));
    }
    let found = compute_wcol_order(g, 2 * r)?;
    let reach2 = wreach_all(g, &found.order, 2 * r);
    let mut open = x.clone();
    let mut dominator = VertexSet::new(n);
    let mut picked = Vec::new();
    for &v in found.order.as_slice() {
        if !open.contains(v) {
            continue;
        }
        picked.push(v);
        dominator.union_with(&reach2[v]);
        open.difference_with(&g.out_ball_of_set(&reach2[v], r));
    }
    if !x.is_subset(&g.out_ball_of_set(&dominator, r)) {
        return Err(Error::internal("greedy dominator misses a vertex"));
    }
    let picked_set = VertexSet::from_iter_n(n, picked.iter().copied());
    let reach1 = wreach_all(g, &found.order, r);
    for (u, ball) in g.out_balls(r).iter().enumerate() {
        let hits = ball.intersection_count(&picked_set);
        if hits > reach1[u].len() {
            return Err(Error::internal(format!(
                "vertex {u} dominates {hits} picked vertices but weakly reaches only {}",
                reach1[u].len()
            )));
        }
    }
    let tree = build(&g.in_balls(r), &picked);
    tree.check_size_law().map_err(Error::Internal)?;
    let chain = max_left_chain(&tree);
    if !is_scattered(g, &chain, r) {
        return Err(Error::internal("left chain is not scattered"));
    }
    Ok(GreedyDual {
        dominator,
        picked,
        chain,
        guarantee: found.bound,
        tree_nodes: tree.len(),
        tree_height: tree.height(),
        tree_right_chain: tree.max_right_chain(),
    })
}

/// Either a dominator of `X` or a certificate that none of size `k` exists.
pub fn dominator_or_scattered(g: &Digraph, x: &VertexSet, r: usize, k: usize) -> Result<(DualityResult, GreedyDual)> {
    let run = greedy_dual(g, x, r)?;
    let result = if run.chain.len() > k {
        let w = run.chain[..=k].to_vec();
        if !w.iter().all(|&v| x.contains(v)) || !is_scattered(g, &w, r) {
            return Err(Error::internal("scattered witness failed validation"));
        }
        DualityResult::Scattered(w)
    } else {
        DualityResult::Dominating(run.dominator.clone())
    };
    Ok((result, run))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::{apex_crown, bidirected_star};

    #[test]
    fn empty_target() {
        let g = bidirected_star(3);
        let (res, _) = dominator_or_scattered(&g, &VertexSet::new(4), 1, 1).unwrap();
        assert_eq!(res, DualityResult::Dominating(VertexSet::new(4)));
    }

    #[test]
    fn edgeless_is_scattered() {
        let g = Digraph::empty(5);
        let (res, _) = dominator_or_scattered(&g, &VertexSet::full(5), 1, 2).unwrap();
        assert!(matches!(res, DualityResult::Scattered(w) if w.len() == 3));
    }

    #[test]
    fn apex_crown_branch_validates() {
        let g = apex_crown(6).unwrap();
        let all = VertexSet::full(g.n());
        match dominator_or_scattered(&g, &all, 1, 1).unwrap().0 {
            DualityResult::Dominating(d) => assert_eq!(g.out_ball_of_set(&d, 1).len(), g.n()),
            DualityResult::Scattered(w) => assert!(is_scattered(&g, &w, 1)),
        }
    }
}
