//! Dreyfus–Wagner style subset dynamic program for node-weighted directed
//! Steiner arborescences.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::error::{check_cap, Result};
use crate::graph::Digraph;
use crate::vertex_set::VertexSet;

/// Default cap on the number of source terminals.
pub const SUBSET_CAP: usize = 16;

const INF: u32 = u32::MAX / 4;

#[derive(Clone, Copy)]
enum Step {
    None,
    Base,
    Split(usize),
    Arc(usize),
}

/// Minimum-size set `S` of non-terminals such that `G[{root} ∪ T ∪ S]` has a
/// path from `root` to every vertex of `sources`, or `None` when the minimum
/// exceeds `budget` or no such set exists.
pub fn dst_exact_subset(
    g: &Digraph,
    root: usize,
    terminals: &VertexSet,
    sources: &VertexSet,
    budget: usize,
) -> Result<Option<VertexSet>> {
    dst_exact_subset_capped(g, root, terminals, sources, budget, SUBSET_CAP)
}

pub fn dst_exact_subset_capped(
    g: &Digraph,
    root: usize,
    terminals: &VertexSet,
    sources: &VertexSet,
    budget: usize,
    cap: usize,
) -> Result<Option<VertexSet>> {
    let n = g.n();
    let targets: Vec<usize> = sources.iter().collect();
    check_cap("source terminals", targets.len(), cap.min(24))?;
    if targets.is_empty() {
        return Ok(Some(VertexSet::new(n)));
    }
    // Shortcut every source terminal to the non-terminals it reaches through
    // terminals only.
    let mut pred: Vec<Vec<usize>> = g.vertices().map(|v| g.in_neighbors(v).to_vec()).collect();
    for &t in &targets {
        let mut seen = VertexSet::new(n);
        seen.insert(t);
        let mut stack = vec![t];
        while let Some(x) = stack.pop() {
            for &y in g.out_neighbors(x) {
                if terminals.contains(y) {
                    if seen.insert(y) {
                        stack.push(y);
                    }
                } else if x != t && !g.has_arc(t, y) && y != t && !pred[y].contains(&t) {
                    pred[y].push(t);
                }
            }
        }
    }
    let cost = |v: usize| -> u32 { u32::from(v != root && !terminals.contains(v)) };

    let k = targets.len();
    let full = (1usize << k) - 1;
    let mut dp = vec![vec![INF; n]; full + 1];
    let mut how = vec![vec![Step::None; n]; full + 1];
    for (i, &t) in targets.iter().enumerate() {
        dp[1 << i][t] = 0;
        how[1 << i][t] = Step::Base;
    }
    for mask in 1..=full {
        if mask.count_ones() > 1 {
            for v in 0..n {
                let mut sub = (mask - 1) & mask;
                while sub > 0 {
                    let other = mask ^ sub;
                    if sub < other {
                        let c = dp[sub][v].saturating_add(dp[other][v]).saturating_sub(cost(v));
                        if c < dp[mask][v] {
                            dp[mask][v] = c;
                            how[mask][v] = Step::Split(sub);
                        }
                    }
                    sub = (sub - 1) & mask;
                }
            }
        }
        // dp[mask][u] <= cost(u) + dp[mask][w] for arcs u -> w
        let mut heap: BinaryHeap<Reverse<(u32, usize)>> =
            (0..n).filter(|&v| dp[mask][v] < INF).map(|v| Reverse((dp[mask][v], v))).collect();
        while let Some(Reverse((c, w))) = heap.pop() {
            if c > dp[mask][w] {
                continue;
            }
            for &u in &pred[w] {
                let nc = c + cost(u);
                if nc < dp[mask][u] {
                    dp[mask][u] = nc;
                    how[mask][u] = Step::Arc(w);
                    heap.push(Reverse((nc, u)));
                }
            }
        }
    }
    if dp[full][root] as usize > budget {
        return Ok(None);
    }
    let mut solution = VertexSet::new(n);
    let mut todo = vec![(full, root)];
    while let Some((mask, v)) = todo.pop() {
        if cost(v) == 1 {
            solution.insert(v);
        }
        match how[mask][v] {
            Step::Base | Step::None => {}
            Step::Split(sub) => {
                todo.push((sub, v));
                todo.push((mask ^ sub, v));
            }
            Step::Arc(w) => todo.push((mask, w)),
        }
    }
    Ok(Some(solution))
}
