//! Brute-force reference implementations. Slow and deliberately naive;
//! they only rely on adjacency lists and plain breadth-first search.

use std::collections::VecDeque;

use crate::error::{check_cap, Error, Result};
use crate::graph::Digraph;
use crate::order::LinearOrder;
use crate::steiner::DstInstance;
use crate::vertex_set::VertexSet;

pub const GAMMA_CAP: usize = 16;
pub const DST_CAP: usize = 12;
pub const DST_BUDGET_CAP: usize = 4;

/// Vertices within `r` steps of some source, following `forward` arcs or
/// reversed ones, restricted to `allowed`.
fn ball(g: &Digraph, sources: &[usize], r: usize, forward: bool, allowed: Option<&VertexSet>) -> Vec<bool> {
    let mut dist = vec![usize::MAX; g.n()];
    let mut queue = VecDeque::new();
    for &s in sources {
        dist[s] = 0;
        queue.push_back(s);
    }
    while let Some(u) = queue.pop_front() {
        if dist[u] == r {
            continue;
        }
        let nbrs = if forward { g.out_neighbors(u) } else { g.in_neighbors(u) };
        for &w in nbrs {
            if dist[w] == usize::MAX && allowed.is_none_or(|a| a.contains(w)) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    dist.into_iter().map(|d| d != usize::MAX).collect()
}

/// Calls `f` on every `size`-subset of `items` in lexicographic order until
/// it returns `true`.
fn for_each_subset(items: &[usize], size: usize, mut f: impl FnMut(&[usize]) -> bool) -> bool {
    if size > items.len() {
        return false;
    }
    let mut idx: Vec<usize> = (0..size).collect();
    let mut chosen: Vec<usize> = Vec::with_capacity(size);
    loop {
        chosen.clear();
        chosen.extend(idx.iter().map(|&i| items[i]));
        if f(&chosen) {
            return true;
        }
        let mut i = size;
        loop {
            if i == 0 {
                return false;
            }
            i -= 1;
            if idx[i] != i + items.len() - size {
                break;
            }
            if i == 0 {
                return false;
            }
        }
        idx[i] += 1;
        for j in i + 1..size {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

fn target_or_all(g: &Digraph, x: Option<&VertexSet>) -> Vec<usize> {
    x.map_or_else(|| g.vertices().collect(), VertexSet::to_vec)
}

/// `X ⊆ N^+_r(D)`.
pub fn verify_dominating(g: &Digraph, d: &VertexSet, r: usize, x: &VertexSet) -> bool {
    let seen = ball(g, &d.to_vec(), r, true, None);
    x.iter().all(|v| seen[v])
}

/// No vertex has two members of `w` in its `r`-out-ball.
pub fn verify_scattered(g: &Digraph, w: &[usize], r: usize) -> bool {
    for u in g.vertices() {
        let seen = ball(g, &[u], r, true, None);
        if w.iter().filter(|&&v| seen[v]).count() > 1 {
            return false;
        }
    }
    let mut sorted = w.to_vec();
    sorted.sort_unstable();
    sorted.windows(2).all(|p| p[0] != p[1])
}

/// `G[S]` is strongly connected (the empty set counts as connected).
pub fn verify_strongly_connected(g: &Digraph, s: &VertexSet) -> bool {
    let Some(first) = s.first() else { return true };
    let fwd = ball(g, &[first], usize::MAX, true, Some(s));
    let bwd = ball(g, &[first], usize::MAX, false, Some(s));
    s.iter().all(|v| fwd[v] && bwd[v])
}

/// Some smallest dominator of `X` if one has at most `k` vertices.
/// Branches on the candidates of an undominated vertex with the fewest of
/// them, pruning with the covering bound.
pub fn gamma_at_most(g: &Digraph, r: usize, x: Option<&VertexSet>, k: usize) -> Option<VertexSet> {
    let n = g.n();
    let balls: Vec<VertexSet> = g
        .vertices()
        .map(|v| {
            let seen = ball(g, &[v], r, true, None);
            VertexSet::from_iter_n(n, (0..n).filter(|&u| seen[u]))
        })
        .collect();
    let mut dominators: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (v, b) in balls.iter().enumerate() {
        for t in b.iter() {
            dominators[t].push(v);
        }
    }
    let open = x.cloned().unwrap_or_else(|| VertexSet::full(n));
    let mut chosen = Vec::new();
    for budget in 0..=k.min(n) {
        if search(&balls, &dominators, &open, budget, &mut chosen) {
            return Some(VertexSet::from_iter_n(n, chosen));
        }
    }
    None
}

fn search(
    balls: &[VertexSet],
    dominators: &[Vec<usize>],
    open: &VertexSet,
    budget: usize,
    chosen: &mut Vec<usize>,
) -> bool {
    if open.is_empty() {
        return true;
    }
    if budget == 0 {
        return false;
    }
    let best = balls.iter().map(|b| b.intersection_count(open)).max().unwrap_or(0);
    if best == 0 || open.len().div_ceil(best) > budget {
        return false;
    }
    let t = open.iter().min_by_key(|&t| dominators[t].len()).expect("open is nonempty");
    for &u in &dominators[t] {
        chosen.push(u);
        if search(balls, dominators, &open.difference(&balls[u]), budget - 1, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

/// `γ_r(G, X)` with a minimum dominator; `X` defaults to `V(G)`.
pub fn gamma_r_exact(g: &Digraph, r: usize, x: Option<&VertexSet>) -> Result<(usize, VertexSet)> {
    check_cap("vertices for exact domination", g.n(), GAMMA_CAP)?;
    let d = gamma_at_most(g, r, x, g.n()).ok_or_else(|| Error::internal("V(G) always dominates"))?;
    Ok((d.len(), d))
}

/// Every minimum dominator of `X`.
pub fn minimum_dominators(g: &Digraph, r: usize, x: &VertexSet) -> Result<Vec<VertexSet>> {
    let (size, _) = gamma_r_exact(g, r, Some(x))?;
    let all: Vec<usize> = g.vertices().collect();
    let mut out = Vec::new();
    for_each_subset(&all, size, |d| {
        let d = VertexSet::from_iter_n(g.n(), d.iter().copied());
        if verify_dominating(g, &d, r, x) {
            out.push(d);
        }
        false
    });
    Ok(out)
}

/// Some scattered subset of `X` with exactly `size` members.
pub fn scattered_of_size(g: &Digraph, r: usize, x: Option<&VertexSet>, size: usize) -> Option<Vec<usize>> {
    let cands = target_or_all(g, x);
    let in_balls: Vec<Vec<bool>> = g.vertices().map(|v| ball(g, &[v], r, false, None)).collect();
    let clash = |a: usize, b: usize| g.vertices().any(|u| in_balls[a][u] && in_balls[b][u]);
    let mut found = None;
    for_each_subset(&cands, size, |w| {
        let ok = (0..w.len()).all(|i| (i + 1..w.len()).all(|j| !clash(w[i], w[j])));
        if ok {
            found = Some(w.to_vec());
        }
        ok
    });
    found
}

/// `α_r(G, X)` with a maximum scattered subset of `X`.
pub fn alpha_r_exact(g: &Digraph, r: usize, x: Option<&VertexSet>) -> Result<(usize, Vec<usize>)> {
    check_cap("vertices for exact scattering", g.n(), GAMMA_CAP)?;
    let most = target_or_all(g, x).len();
    for size in (0..=most).rev() {
        if let Some(w) = scattered_of_size(g, r, x, size) {
            return Ok((size, w));
        }
    }
    Ok((0, Vec::new()))
}

/// Minimum Steiner set by enumeration, or `None` above the budget.
pub fn dst_exact_enum(inst: &DstInstance) -> Result<Option<VertexSet>> {
    let g = &inst.graph;
    check_cap("vertices for exact Steiner enumeration", g.n(), DST_CAP)?;
    check_cap("budget for exact Steiner enumeration", inst.budget, DST_BUDGET_CAP)?;
    let free: Vec<usize> = g.vertices().filter(|&v| v != inst.root && !inst.terminals.contains(v)).collect();
    for size in 0..=inst.budget {
        let mut found = None;
        for_each_subset(&free, size, |s| {
            let mut allowed = inst.terminals.clone();
            allowed.insert(inst.root);
            allowed.extend(s.iter().copied());
            let seen = ball(g, &[inst.root], usize::MAX, true, Some(&allowed));
            if inst.terminals.iter().all(|t| seen[t]) {
                found = Some(VertexSet::from_iter_n(g.n(), s.iter().copied()));
                true
            } else {
                false
            }
        });
        if found.is_some() {
            return Ok(found);
        }
    }
    Ok(None)
}

/// Minimum `D ⊆ B` dominating `R`, searching sizes up to `max_k`.
pub fn redblue_exact(g: &Digraph, r: usize, red: &VertexSet, blue: &VertexSet, max_k: usize) -> Option<VertexSet> {
    let blues = blue.to_vec();
    let balls: Vec<Vec<bool>> = g.vertices().map(|v| ball(g, &[v], r, true, None)).collect();
    for size in 0..=max_k.min(blues.len()) {
        let mut found = None;
        for_each_subset(&blues, size, |d| {
            let ok = red.iter().all(|t| d.iter().any(|&v| balls[v][t]));
            if ok {
                found = Some(VertexSet::from_iter_n(g.n(), d.iter().copied()));
            }
            ok
        });
        if found.is_some() {
            return found;
        }
    }
    None
}

/// Minimum set of non-terminals `S` with `G[T ∪ S]` strongly connected.
pub fn scss_exact(g: &Digraph, terminals: &VertexSet, max_k: usize) -> Option<VertexSet> {
    let free: Vec<usize> = g.vertices().filter(|&v| !terminals.contains(v)).collect();
    for size in 0..=max_k.min(free.len()) {
        let mut found = None;
        for_each_subset(&free, size, |s| {
            let mut all = terminals.clone();
            all.extend(s.iter().copied());
            let ok = verify_strongly_connected(g, &all);
            if ok {
                found = Some(VertexSet::from_iter_n(g.n(), s.iter().copied()));
            }
            ok
        });
        if found.is_some() {
            return found;
        }
    }
    None
}

/// Minimum strongly connected distance-`r` dominating set of size at most
/// `max_k`.
pub fn scds_exact(g: &Digraph, r: usize, max_k: usize) -> Option<VertexSet> {
    let all: Vec<usize> = g.vertices().collect();
    let everything = VertexSet::full(g.n());
    for size in 1..=max_k.min(all.len()) {
        let mut found = None;
        for_each_subset(&all, size, |s| {
            let s = VertexSet::from_iter_n(g.n(), s.iter().copied());
            let ok = verify_strongly_connected(g, &s) && verify_dominating(g, &s, r, &everything);
            if ok {
                found = Some(s);
            }
            ok
        });
        if found.is_some() {
            return found;
        }
    }
    None
}

/// Every simple directed path with at most `r` arcs starting at `v`
/// (`forward`) or ending at `v` (reversed), as vertex lists starting at `v`.
pub fn paths_from(g: &Digraph, v: usize, r: usize, forward: bool) -> Vec<Vec<usize>> {
    let mut out = vec![vec![v]];
    let mut stack = vec![vec![v]];
    while let Some(p) = stack.pop() {
        if p.len() > r {
            continue;
        }
        let last = *p.last().expect("nonempty");
        let nbrs = if forward { g.out_neighbors(last) } else { g.in_neighbors(last) };
        for &w in nbrs {
            if !p.contains(&w) {
                let mut q = p.clone();
                q.push(w);
                out.push(q.clone());
                stack.push(q);
            }
        }
    }
    out
}

/// Weak reachability by listing every path of length at most `r` at `v`.
pub fn wreach_by_paths(g: &Digraph, order: &LinearOrder, v: usize, r: usize) -> VertexSet {
    let mut out = VertexSet::new(g.n());
    for forward in [true, false] {
        for p in paths_from(g, v, r, forward) {
            let end = *p.last().expect("nonempty");
            if p.iter().all(|&x| !order.less(x, end)) {
                out.insert(end);
            }
        }
    }
    out
}

/// `wcol_r` by trying every order (`n <= 8`).
pub fn wcol_by_permutations(g: &Digraph, r: usize) -> Result<usize> {
    check_cap("vertices for permutation enumeration", g.n(), 8)?;
    let mut seq: Vec<usize> = g.vertices().collect();
    let mut best = usize::MAX;
    permute(&mut seq, 0, &mut |s| {
        let l = LinearOrder::from_sequence(s.to_vec()).expect("permutation");
        let w = g.vertices().map(|v| wreach_by_paths(g, &l, v, r).len()).max().unwrap_or(0);
        best = best.min(w);
    });
    Ok(if g.n() == 0 { 0 } else { best })
}

fn permute(seq: &mut Vec<usize>, k: usize, f: &mut dyn FnMut(&[usize])) {
    if k == seq.len() {
        f(seq);
        return;
    }
    for i in k..seq.len() {
        seq.swap(k, i);
        permute(seq, k + 1, f);
        seq.swap(k, i);
    }
}

/// `M_r(u, X)` by path listing.
pub fn projection_by_paths(g: &Digraph, u: usize, x: &VertexSet, r: usize) -> VertexSet {
    let mut out = VertexSet::new(g.n());
    for forward in [true, false] {
        for p in paths_from(g, u, r, forward) {
            let end = *p.last().expect("nonempty");
            if p.len() > 1 && x.contains(end) && p[1..p.len() - 1].iter().all(|&y| !x.contains(y)) {
                out.insert(end);
            }
        }
    }
    out
}
