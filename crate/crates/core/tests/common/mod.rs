#![allow(dead_code)]

use proptest::prelude::*;
use sparse_digraph::instances::random_digraph;
use sparse_digraph::Digraph;

/// Random digraph with `lo..=hi` vertices and up to `factor * n` arcs.
pub fn digraph(lo: usize, hi: usize, factor: usize) -> impl Strategy<Value = Digraph> {
    (lo..=hi, any::<u64>(), 0usize..=100).prop_map(move |(n, seed, fill)| {
        let cap = n * (n - 1);
        let m = (factor * n * fill / 100).min(cap);
        random_digraph(n, m, seed).expect("arc count within range")
    })
}

/// Distances by repeated boolean matrix products.
pub fn matrix_distances(g: &Digraph) -> Vec<Vec<Option<usize>>> {
    let n = g.n();
    let mut dist = vec![vec![None; n]; n];
    for v in 0..n {
        dist[v][v] = Some(0);
    }
    let mut reach: Vec<Vec<bool>> = (0..n).map(|u| (0..n).map(|v| u == v).collect()).collect();
    for step in 1..n.max(1) {
        let mut next = reach.clone();
        for u in 0..n {
            for w in 0..n {
                if reach[u][w] {
                    for &v in g.out_neighbors(w) {
                        next[u][v] = true;
                    }
                }
            }
        }
        for u in 0..n {
            for v in 0..n {
                if next[u][v] && dist[u][v].is_none() {
                    dist[u][v] = Some(step);
                }
            }
        }
        reach = next;
    }
    dist
}

/// Longest directed path (in arcs) by exhaustive search.
pub fn longest_path(g: &Digraph) -> usize {
    fn go(g: &Digraph, v: usize, seen: &mut Vec<bool>) -> usize {
        seen[v] = true;
        let best = g
            .out_neighbors(v)
            .iter()
            .filter(|&&w| !seen[w])
            .copied()
            .collect::<Vec<_>>()
            .into_iter()
            .map(|w| 1 + go(g, w, seen))
            .max()
            .unwrap_or(0);
        seen[v] = false;
        best
    }
    g.vertices().map(|v| go(g, v, &mut vec![false; g.n()])).max().unwrap_or(0)
}

/// Random digraph made strongly connected by a spanning cycle.
pub fn strongly_connected(n: usize, m: usize, seed: u64) -> Digraph {
    let base = random_digraph(n, m, seed).expect("arc count within range");
    Digraph::from_arcs_lossy(n, base.arcs().chain((0..n).map(|i| (i, (i + 1) % n))))
}
