//! Exact weak coloring numbers and admissibility for small graphs.

use crate::error::{check_cap, Result};
use crate::graph::Digraph;
use crate::order::LinearOrder;

use super::wreach::wcol_of_order;

/// Default vertex cap for the exhaustive searches.
pub const EXACT_CAP: usize = 9;

fn masks(g: &Digraph) -> (Vec<u32>, Vec<u32>) {
    let out = g.vertices().map(|v| g.out_neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w)).collect();
    let inn = g.vertices().map(|v| g.in_neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w)).collect();
    (out, inn)
}

/// Vertices joined to `u` by a path (either direction) of length `<= r` that
/// stays inside `allowed`.
fn reach_within(adj: &[u32], adj_rev: &[u32], u: usize, r: usize, allowed: u32) -> u32 {
    let mut total = 1u32 << u;
    for a in [adj, adj_rev] {
        let mut seen = 1u32 << u;
        let mut frontier = seen;
        for _ in 0..r {
            let mut next = 0u32;
            let mut f = frontier;
            while f != 0 {
                let x = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= a[x];
            }
            next &= allowed & !seen;
            if next == 0 {
                break;
            }
            seen |= next;
            frontier = next;
        }
        total |= seen;
    }
    total
}

struct WcolSearch<'a> {
    n: usize,
    r: usize,
    out: &'a [u32],
    inn: &'a [u32],
    best: usize,
    best_seq: Vec<usize>,
}

impl WcolSearch<'_> {
    // Places vertices from the L-smallest upward. Placing `u` next makes `u`
    // weakly reachable from exactly the unplaced vertices it reaches through
    // unplaced vertices, so per-vertex counts only grow.
    fn go(&mut self, placed: u32, seq: &mut Vec<usize>, counts: &mut [usize], worst: usize) {
        if worst >= self.best {
            return;
        }
        if seq.len() == self.n {
            self.best = worst;
            self.best_seq = seq.clone();
            return;
        }
        let free = !placed & ((1u32 << self.n) - 1);
        let mut f = free;
        while f != 0 {
            let u = f.trailing_zeros() as usize;
            f &= f - 1;
            let hit = reach_within(self.out, self.inn, u, self.r, free);
            let mut h = hit;
            let mut w = worst;
            while h != 0 {
                let v = h.trailing_zeros() as usize;
                h &= h - 1;
                counts[v] += 1;
                w = w.max(counts[v]);
            }
            seq.push(u);
            self.go(placed | 1 << u, seq, counts, w);
            seq.pop();
            let mut h = hit;
            while h != 0 {
                let v = h.trailing_zeros() as usize;
                h &= h - 1;
                counts[v] -= 1;
            }
        }
    }
}

/// Exact `wcol_r(G)` with a witness order, by branch and bound over all
/// orders. `cap` bounds `n`.
pub fn wcol_exact_capped(g: &Digraph, r: usize, cap: usize) -> Result<(usize, LinearOrder)> {
    check_cap("vertices for exact wcol", g.n(), cap.min(31))?;
    let n = g.n();
    if n == 0 {
        return Ok((0, LinearOrder::identity(0)));
    }
    let (out, inn) = masks(g);
    let start = LinearOrder::identity(n);
    let mut search = WcolSearch {
        n,
        r,
        out: &out,
        inn: &inn,
        best: wcol_of_order(g, &start, r) + 1,
        best_seq: start.as_slice().to_vec(),
    };
    search.go(0, &mut Vec::with_capacity(n), &mut vec![0; n], 0);
    let order = LinearOrder::from_sequence(search.best_seq)?;
    Ok((search.best, order))
}

pub fn wcol_exact(g: &Digraph, r: usize) -> Result<(usize, LinearOrder)> {
    wcol_exact_capped(g, r, EXACT_CAP)
}

/// Exact `wcol_∞(G)`, i.e. `wcol_n(G)`.
pub fn wcol_infty_exact(g: &Digraph) -> Result<(usize, LinearOrder)> {
    wcol_exact(g, g.n())
}

/// Admissibility of `v` when exactly the vertices flagged by `smaller` lie
/// below it. Candidate paths leave `v` (or enter it), pass only through
/// vertices above `v`, and stop at the first smaller vertex; a maximum
/// family of them sharing only `v` is found by exhaustive packing.
fn adm_with(g: &Digraph, v: usize, r: usize, smaller: &dyn Fn(usize) -> bool) -> usize {
    let mut paths: Vec<Vec<usize>> = Vec::new();
    for forward in [true, false] {
        let mut stack: Vec<(usize, Vec<usize>)> = vec![(v, Vec::new())];
        while let Some((x, body)) = stack.pop() {
            if body.len() >= r {
                continue;
            }
            let nbrs = if forward { g.out_neighbors(x) } else { g.in_neighbors(x) };
            for &y in nbrs {
                if y == v || body.contains(&y) {
                    continue;
                }
                let mut next = body.clone();
                next.push(y);
                if smaller(y) {
                    next.sort_unstable();
                    paths.push(next);
                } else {
                    stack.push((y, next));
                }
            }
        }
    }
    paths.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    paths.dedup();
    // A path whose vertex set contains another candidate's is never needed.
    let mut minimal: Vec<Vec<usize>> = Vec::new();
    for p in paths {
        if !minimal.iter().any(|q| q.iter().all(|x| p.binary_search(x).is_ok())) {
            minimal.push(p);
        }
    }
    let mut used = vec![false; g.n()];
    let mut best = 0;
    pack(&minimal, 0, &mut used, 0, &mut best);
    best
}

fn pack(paths: &[Vec<usize>], i: usize, used: &mut [bool], taken: usize, best: &mut usize) {
    *best = (*best).max(taken);
    if i == paths.len() || taken + (paths.len() - i) <= *best {
        return;
    }
    let p = &paths[i];
    if p.iter().all(|&x| !used[x]) {
        for &x in p {
            used[x] = true;
        }
        pack(paths, i + 1, used, taken + 1, best);
        for &x in p {
            used[x] = false;
        }
    }
    pack(paths, i + 1, used, taken, best);
}

/// Maximum number of paths of length `<= r` between `v` and `L`-smaller
/// vertices (each path directed either way) that pairwise meet only in `v`.
pub fn adm_of_order(g: &Digraph, order: &LinearOrder, v: usize, r: usize) -> usize {
    adm_with(g, v, r, &|w| order.less(w, v))
}

/// `max_v adm_of_order(G, L, v, r)`.
pub fn adm_of_order_max(g: &Digraph, order: &LinearOrder, r: usize) -> usize {
    g.vertices().map(|v| adm_of_order(g, order, v, r)).max().unwrap_or(0)
}

/// Exact `adm_r(G)` with a witness order. The admissibility of `v` depends
/// only on the set of vertices below it, so a dynamic program over prefixes
/// replaces the enumeration of all orders.
pub fn adm_exact_capped(g: &Digraph, r: usize, cap: usize) -> Result<(usize, LinearOrder)> {
    check_cap("vertices for exact adm", g.n(), cap.min(20))?;
    let n = g.n();
    let full = (1usize << n) - 1;
    let mut best = vec![usize::MAX; 1 << n];
    let mut parent = vec![usize::MAX; 1 << n];
    best[0] = 0;
    for mask in 0..=full {
        if best[mask] == usize::MAX {
            continue;
        }
        for v in 0..n {
            if mask & 1 << v != 0 {
                continue;
            }
            let a = adm_with(g, v, r, &|w| mask & 1 << w != 0);
            let cand = best[mask].max(a);
            let next = mask | 1 << v;
            if cand < best[next] {
                best[next] = cand;
                parent[next] = v;
            }
        }
    }
    let mut seq = Vec::with_capacity(n);
    let mut mask = full;
    while mask != 0 {
        let v = parent[mask];
        seq.push(v);
        mask &= !(1 << v);
    }
    seq.reverse();
    Ok((best[full], LinearOrder::from_sequence(seq)?))
}

pub fn adm_exact(g: &Digraph, r: usize) -> Result<(usize, LinearOrder)> {
    adm_exact_capped(g, r, EXACT_CAP)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::instances::{directed_path, random_digraph};

    #[test]
    fn paths_have_log_tree_depth() {
        for (n, want) in [(1, 1), (3, 2), (7, 3)] {
            let g = directed_path(n).unwrap();
            assert_eq!(wcol_infty_exact(&g).unwrap().0, want);
        }
    }

    #[test]
    fn single_arc() {
        let g = Digraph::from_arcs(2, [(0, 1)]).unwrap();
        assert_eq!(wcol_exact(&g, 1).unwrap().0, 2);
    }

    #[test]
    fn witness_attains_value() {
        for seed in 0..10 {
            let g = random_digraph(7, 10, seed).unwrap();
            for r in 1..3 {
                let (w, l) = wcol_exact(&g, r).unwrap();
                assert_eq!(wcol_of_order(&g, &l, r), w);
                let (a, l) = adm_exact(&g, r).unwrap();
                assert_eq!(adm_of_order_max(&g, &l, r), a);
            }
        }
    }

    #[test]
    fn in_star_admissibility() {
        // arcs leaf -> center, center placed last
        let g = Digraph::from_arcs(5, (1..5).map(|l| (l, 0))).unwrap();
        let l = LinearOrder::from_sequence(vec![1, 2, 3, 4, 0]).unwrap();
        assert_eq!(adm_of_order(&g, &l, 0, 1), 4);
        assert_eq!(adm_of_order(&Digraph::empty(3), &LinearOrder::identity(3), 1, 2), 0);
    }

    #[test]
    fn over_cap() {
        let g = Digraph::empty(10);
        assert!(matches!(wcol_exact(&g, 1), Err(Error::SizeCap { .. })));
        assert!(matches!(adm_exact(&g, 1), Err(Error::SizeCap { .. })));
    }
}
