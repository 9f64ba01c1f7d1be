//! Exhaustive shallow minor tests and minor densities for small digraphs.
//!
//! A directed model maps every vertex of `H` to a branch set of `G` and every
//! arc of `H` to an arc of `G` between the corresponding branch sets. Inside
//! a branch set every in-vertex must reach every out-vertex, some vertex
//! must reach all out-vertices and some vertex must be reached from all
//! in-vertices, each by a path of length at most `r` inside the set.

use num_rational::Ratio;
use serde::Serialize;

use crate::error::{check_cap, Error, Result};
use crate::graph::Digraph;
use crate::instances::crown;
use crate::vertex_set::VertexSet;

/// Default vertex cap for minor testing.
pub const MINOR_CAP: usize = 12;
/// Default vertex cap for exact grads.
pub const GRAD_CAP: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DirectedModel {
    pub depth: usize,
    /// Branch set of every vertex of `H`, sorted.
    pub branch_sets: Vec<Vec<usize>>,
    /// `(arc of H, arc of G)` pairs, in the order of `H.arcs()`.
    pub arc_images: Vec<((usize, usize), (usize, usize))>,
    pub sources: Vec<usize>,
    pub sinks: Vec<usize>,
}

fn adjacency_masks(g: &Digraph) -> (Vec<u32>, Vec<u32>) {
    let out = g.vertices().map(|v| g.out_neighbors(v).iter().fold(0, |m, &w| m | 1u32 << w)).collect();
    let inn = g.vertices().map(|v| g.in_neighbors(v).iter().fold(0, |m, &w| m | 1u32 << w)).collect();
    (out, inn)
}

fn bits(mut m: u32) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (m != 0).then(|| {
            let b = m.trailing_zeros() as usize;
            m &= m - 1;
            b
        })
    })
}

/// Vertices reached from `x` within `r` steps inside `set`.
fn reach(adj: &[u32], x: usize, r: usize, set: u32) -> u32 {
    let mut seen = 1u32 << x;
    let mut frontier = seen;
    for _ in 0..r {
        let next = bits(frontier).fold(0, |m, y| m | adj[y]) & set & !seen;
        if next == 0 {
            break;
        }
        seen |= next;
        frontier = next;
    }
    seen
}

/// Source and sink witnessing that a branch set with the given in- and
/// out-vertices satisfies the depth-`r` conditions.
fn branch_witness(out: &[u32], inn: &[u32], set: u32, ins: u32, outs: u32, r: usize) -> Option<(usize, usize)> {
    for i in bits(ins) {
        if reach(out, i, r, set) & outs != outs {
            return None;
        }
    }
    let source = if outs == 0 {
        Some(set.trailing_zeros() as usize)
    } else if ins != 0 {
        Some(ins.trailing_zeros() as usize)
    } else {
        bits(set).find(|&s| reach(out, s, r, set) & outs == outs)
    }?;
    let sink = if ins == 0 {
        set.trailing_zeros() as usize
    } else if outs != 0 {
        outs.trailing_zeros() as usize
    } else {
        bits(set).find(|&t| reach(inn, t, r, set) & ins == ins)?
    };
    Some((source, sink))
}

fn is_weakly_connected(out: &[u32], inn: &[u32], set: u32) -> bool {
    if set == 0 {
        return false;
    }
    let start = set.trailing_zeros() as usize;
    let mut seen = 1u32 << start;
    let mut frontier = seen;
    while frontier != 0 {
        let next = bits(frontier).fold(0, |m, y| m | out[y] | inn[y]) & set & !seen;
        seen |= next;
        frontier = next;
    }
    seen == set
}

/// Weakly connected vertex sets of `G`, smallest first. With `r = 0` a
/// branch set can always be shrunk to a single vertex.
fn candidate_sets(out: &[u32], inn: &[u32], n: usize, r: usize) -> Vec<u32> {
    if r == 0 {
        return (0..n).map(|v| 1u32 << v).collect();
    }
    let mut sets: Vec<u32> = (1u32..1 << n).filter(|&s| is_weakly_connected(out, inn, s)).collect();
    sets.sort_by_key(|&s| (s.count_ones(), s));
    sets
}

struct ModelSearch<'a> {
    out: Vec<u32>,
    inn: Vec<u32>,
    full: u32,
    r: usize,
    cands: Vec<u32>,
    order: Vec<usize>,
    h_arcs: Vec<(usize, usize)>,
    /// Arcs of `H` whose later-placed endpoint is `order[i]`.
    arcs_at: Vec<Vec<usize>>,
    need_out: Vec<bool>,
    need_in: Vec<bool>,
    branch: Vec<u32>,
    ins: Vec<u32>,
    outs: Vec<u32>,
    images: Vec<(usize, usize)>,
    _h: &'a Digraph,
}

impl ModelSearch<'_> {
    fn ok(&self, v: usize) -> bool {
        branch_witness(&self.out, &self.inn, self.branch[v], self.ins[v], self.outs[v], self.r).is_some()
    }

    fn place(&mut self, i: usize) -> bool {
        if i == self.order.len() {
            return true;
        }
        let v = self.order[i];
        let used = self.branch.iter().fold(0, |m, &b| m | b);
        let free = self.full & !used;
        let later = (self.order.len() - i - 1) as u32;
        for c in 0..self.cands.len() {
            let b = self.cands[c];
            if b & used != 0 || b.count_ones() + later > free.count_ones() {
                continue;
            }
            let leaves = bits(b).fold(0, |m, x| m | self.out[x]) & !b;
            let enters = bits(b).fold(0, |m, x| m | self.inn[x]) & !b;
            if (self.need_out[v] && leaves & free == 0 && leaves & used == 0)
                || (self.need_in[v] && enters & free == 0 && enters & used == 0)
            {
                continue;
            }
            self.branch[v] = b;
            if self.assign(i, 0) {
                return true;
            }
            self.branch[v] = 0;
        }
        false
    }

    fn assign(&mut self, i: usize, j: usize) -> bool {
        if j == self.arcs_at[i].len() {
            return self.place(i + 1);
        }
        let e = self.arcs_at[i][j];
        let (a, b) = self.h_arcs[e];
        let (ba, bb) = (self.branch[a], self.branch[b]);
        for x in bits(ba) {
            for y in bits(self.out[x] & bb) {
                let (old_out, old_in) = (self.outs[a], self.ins[b]);
                self.outs[a] |= 1 << x;
                self.ins[b] |= 1 << y;
                self.images[e] = (x, y);
                if self.ok(a) && self.ok(b) && self.assign(i, j + 1) {
                    return true;
                }
                self.outs[a] = old_out;
                self.ins[b] = old_in;
            }
        }
        false
    }
}

/// Searches for a depth-`r` model of `H` in `G` over all branch-set
/// assignments. Refuses graphs `G` above `cap` vertices.
pub fn is_depth_r_minor_capped(h: &Digraph, g: &Digraph, r: usize, cap: usize) -> Result<Option<DirectedModel>> {
    check_cap("vertices for minor search", g.n(), cap.min(24))?;
    let (n, hn) = (g.n(), h.n());
    if hn > n {
        return Ok(None);
    }
    let (out, inn) = adjacency_masks(g);
    // place H breadth-first so that arcs get fixed early
    let mut order = Vec::with_capacity(hn);
    let mut seen = vec![false; hn];
    let mut starts: Vec<usize> = h.vertices().collect();
    starts.sort_by_key(|&v| std::cmp::Reverse(h.out_degree(v) + h.in_degree(v)));
    for s in starts {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            order.push(x);
            for y in h.underlying_neighbors(x) {
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
    }
    let mut rank = vec![0; hn];
    for (i, &v) in order.iter().enumerate() {
        rank[v] = i;
    }
    let h_arcs: Vec<(usize, usize)> = h.arcs().collect();
    let mut arcs_at = vec![Vec::new(); hn];
    for (e, &(a, b)) in h_arcs.iter().enumerate() {
        arcs_at[rank[a].max(rank[b])].push(e);
    }
    let mut search = ModelSearch {
        cands: candidate_sets(&out, &inn, n, r),
        full: if n == 32 { u32::MAX } else { (1u32 << n) - 1 },
        out,
        inn,
        r,
        order,
        arcs_at,
        need_out: h.vertices().map(|v| h.out_degree(v) > 0).collect(),
        need_in: h.vertices().map(|v| h.in_degree(v) > 0).collect(),
        branch: vec![0; hn],
        ins: vec![0; hn],
        outs: vec![0; hn],
        images: vec![(0, 0); h_arcs.len()],
        h_arcs,
        _h: h,
    };
    if !search.place(0) {
        return Ok(None);
    }
    let mut sources = Vec::with_capacity(hn);
    let mut sinks = Vec::with_capacity(hn);
    for v in 0..hn {
        let (s, t) = branch_witness(&search.out, &search.inn, search.branch[v], search.ins[v], search.outs[v], r)
            .ok_or_else(|| Error::internal("accepted branch set lost its witness"))?;
        sources.push(s);
        sinks.push(t);
    }
    let model = DirectedModel {
        depth: r,
        branch_sets: search.branch.iter().map(|&b| bits(b).collect()).collect(),
        arc_images: search.h_arcs.iter().copied().zip(search.images.iter().copied()).collect(),
        sources,
        sinks,
    };
    check_model(h, g, &model).map_err(Error::Internal)?;
    Ok(Some(model))
}

pub fn is_depth_r_minor(h: &Digraph, g: &Digraph, r: usize) -> Result<Option<DirectedModel>> {
    is_depth_r_minor_capped(h, g, r, MINOR_CAP)
}

/// Validates a model against every condition, using plain breadth-first
/// search inside induced branch sets.
pub fn check_model(h: &Digraph, g: &Digraph, model: &DirectedModel) -> std::result::Result<(), String> {
    let (hn, n, r) = (h.n(), g.n(), model.depth);
    if model.branch_sets.len() != hn || model.sources.len() != hn || model.sinks.len() != hn {
        return Err("model does not cover every vertex of H".into());
    }
    let mut owner = vec![usize::MAX; n];
    for (v, set) in model.branch_sets.iter().enumerate() {
        if set.is_empty() {
            return Err(format!("branch set of {v} is empty"));
        }
        for &x in set {
            if x >= n || owner[x] != usize::MAX {
                return Err(format!("vertex {x} is reused or out of range"));
            }
            owner[x] = v;
        }
    }
    let h_arcs: Vec<(usize, usize)> = h.arcs().collect();
    if model.arc_images.len() != h_arcs.len() {
        return Err("arc images do not match the arcs of H".into());
    }
    let mut ins = vec![Vec::new(); hn];
    let mut outs = vec![Vec::new(); hn];
    for (&(e, (x, y)), &want) in model.arc_images.iter().zip(&h_arcs) {
        if e != want || !g.has_arc(x, y) || owner[x] != e.0 || owner[y] != e.1 {
            return Err(format!("bad image ({x},{y}) for arc {e:?}"));
        }
        outs[e.0].push(x);
        ins[e.1].push(y);
    }
    for v in 0..hn {
        let keep = VertexSet::from_iter_n(n, model.branch_sets[v].iter().copied());
        let (sub, old_of) = g.induced_subgraph(&keep);
        let local = |x: usize| old_of.iter().position(|&o| o == x).expect("member of the branch set");
        let within = |from: usize, to: usize| sub.distances_from(local(from), r)[local(to)].is_some();
        for &i in &ins[v] {
            for &o in &outs[v] {
                if !within(i, o) {
                    return Err(format!("in-vertex {i} does not reach out-vertex {o} within {r}"));
                }
            }
        }
        let (s, t) = (model.sources[v], model.sinks[v]);
        if !keep.contains(s) || !keep.contains(t) {
            return Err(format!("source or sink of {v} outside its branch set"));
        }
        if outs[v].iter().any(|&o| !within(s, o)) {
            return Err(format!("source {s} misses an out-vertex"));
        }
        if ins[v].iter().any(|&i| !within(i, t)) {
            return Err(format!("sink {t} is not reached from every in-vertex"));
        }
    }
    Ok(())
}

pub fn contains_crown(g: &Digraph, q: usize, r: usize) -> Result<bool> {
    Ok(is_depth_r_minor(&crown(q)?, g, r)?.is_some())
}

/// Most arcs a minor on the given blocks can have: every ordered block
/// pair joined by an arc of `G` is a candidate, and images are chosen so
/// that all blocks stay valid.
fn max_arcs_on_blocks(out: &[u32], inn: &[u32], blocks: &[u32], r: usize) -> usize {
    let p = blocks.len();
    let mut pairs: Vec<(usize, usize, Vec<(usize, usize)>)> = Vec::new();
    for i in 0..p {
        for j in 0..p {
            if i == j {
                continue;
            }
            let imgs: Vec<(usize, usize)> =
                bits(blocks[i]).flat_map(|x| bits(out[x] & blocks[j]).map(move |y| (x, y))).collect();
            if !imgs.is_empty() {
                pairs.push((i, j, imgs));
            }
        }
    }
    if blocks.iter().all(|b| b.count_ones() == 1) {
        return pairs.len();
    }
    struct St<'a> {
        out: &'a [u32],
        inn: &'a [u32],
        blocks: &'a [u32],
        r: usize,
        pairs: &'a [(usize, usize, Vec<(usize, usize)>)],
        ins: Vec<u32>,
        outs: Vec<u32>,
        best: usize,
    }
    fn go(st: &mut St, k: usize, taken: usize) {
        if taken + (st.pairs.len() - k) <= st.best {
            return;
        }
        if k == st.pairs.len() {
            st.best = taken;
            return;
        }
        let (i, j, ref imgs) = st.pairs[k];
        for &(x, y) in imgs {
            let (oo, oi) = (st.outs[i], st.ins[j]);
            st.outs[i] |= 1 << x;
            st.ins[j] |= 1 << y;
            let fine = branch_witness(st.out, st.inn, st.blocks[i], st.ins[i], st.outs[i], st.r).is_some()
                && branch_witness(st.out, st.inn, st.blocks[j], st.ins[j], st.outs[j], st.r).is_some();
            if fine {
                go(st, k + 1, taken + 1);
            }
            st.outs[i] = oo;
            st.ins[j] = oi;
            if st.best == st.pairs.len() {
                return;
            }
        }
        go(st, k + 1, taken);
    }
    let mut st = St { out, inn, blocks, r, pairs: &pairs, ins: vec![0; p], outs: vec![0; p], best: 0 };
    go(&mut st, 0, 0);
    st.best
}

/// `∇_r(G)`: the largest arc density of a depth-`r` minor, by enumerating
/// every family of disjoint weakly connected branch sets.
pub fn grad_capped(g: &Digraph, r: usize, cap: usize) -> Result<Ratio<u64>> {
    check_cap("vertices for exact grad", g.n(), cap.min(12))?;
    let n = g.n();
    let (out, inn) = adjacency_masks(g);
    let cands = candidate_sets(&out, &inn, n, r);
    let mut best = Ratio::from_integer(0u64);
    // families are built with blocks in increasing order of their lowest vertex
    fn rec(
        out: &[u32],
        inn: &[u32],
        cands: &[u32],
        r: usize,
        used: u32,
        next: usize,
        n: usize,
        blocks: &mut Vec<u32>,
        best: &mut Ratio<u64>,
    ) {
        if !blocks.is_empty() {
            let p = blocks.len() as u64;
            if Ratio::from_integer(p - 1) > *best {
                let arcs = max_arcs_on_blocks(out, inn, blocks, r) as u64;
                let d = Ratio::new(arcs, p);
                if d > *best {
                    *best = d;
                }
            }
        }
        for low in next..n {
            if used & 1 << low != 0 {
                continue;
            }
            for &c in cands {
                if c.trailing_zeros() as usize == low && c & used == 0 {
                    blocks.push(c);
                    rec(out, inn, cands, r, used | c, low + 1, n, blocks, best);
                    blocks.pop();
                }
            }
        }
    }
    rec(&out, &inn, &cands, r, 0, 0, n, &mut Vec::new(), &mut best);
    Ok(best)
}

pub fn grad(g: &Digraph, r: usize) -> Result<Ratio<u64>> {
    grad_capped(g, r, GRAD_CAP)
}

/// Best density seen while repeatedly deleting a vertex of minimum total
/// degree. Every intermediate graph is a subgraph, so this bounds `∇_r`
/// from below for every `r`.
pub fn grad_lower_bound(g: &Digraph) -> Ratio<u64> {
    let n = g.n();
    let mut alive = vec![true; n];
    let mut deg: Vec<usize> = g.vertices().map(|v| g.out_degree(v) + g.in_degree(v)).collect();
    let mut arcs = g.m() as u64;
    let mut best = Ratio::from_integer(0u64);
    for left in (1..=n as u64).rev() {
        let d = Ratio::new(arcs, left);
        if d > best {
            best = d;
        }
        let v = (0..n).filter(|&v| alive[v]).min_by_key(|&v| (deg[v], v)).expect("a vertex is left");
        alive[v] = false;
        for &w in g.out_neighbors(v).iter().chain(g.in_neighbors(v)) {
            if alive[w] {
                deg[w] -= 1;
                arcs -= 1;
            }
        }
    }
    best
}

/// `∇~_r(G)`: the largest arc density of a topological minor whose arcs map
/// to internally disjoint paths of length at most `max(2r, 1)`.
pub fn top_grad_capped(g: &Digraph, r: usize, cap: usize) -> Result<Ratio<u64>> {
    check_cap("vertices for exact top-grad", g.n(), cap.min(12))?;
    let n = g.n();
    let (out, _) = adjacency_masks(g);
    let max_len = (2 * r).max(1);
    let mut best = Ratio::from_integer(0u64);
    for principals in 1u32..(1u32 << n) {
        let p = principals.count_ones() as u64;
        if Ratio::from_integer(p - 1) <= best {
            continue;
        }
        // candidate paths per ordered principal pair, as internal-vertex masks
        let mut pairs: Vec<Vec<u32>> = Vec::new();
        let mut direct = 0usize;
        for a in bits(principals) {
            for b in bits(principals) {
                if a == b {
                    continue;
                }
                if out[a] & 1 << b != 0 {
                    direct += 1;
                    continue;
                }
                let mut paths = Vec::new();
                let mut stack = vec![(a, 0u32, 0usize)];
                while let Some((x, inner, len)) = stack.pop() {
                    if len == max_len {
                        continue;
                    }
                    for y in bits(out[x]) {
                        if y == b && len + 1 >= 2 {
                            paths.push(inner);
                        } else if principals & 1 << y == 0 && inner & 1 << y == 0 && len + 1 < max_len {
                            stack.push((y, inner | 1 << y, len + 1));
                        }
                    }
                }
                paths.sort_unstable_by_key(|m| (m.count_ones(), *m));
                paths.dedup();
                if !paths.is_empty() {
                    pairs.push(paths);
                }
            }
        }
        fn pack(pairs: &[Vec<u32>], k: usize, used: u32, taken: usize, best: &mut usize) {
            if taken + pairs.len() - k <= *best {
                return;
            }
            if k == pairs.len() {
                *best = taken;
                return;
            }
            for &m in &pairs[k] {
                if m & used == 0 {
                    pack(pairs, k + 1, used | m, taken + 1, best);
                }
            }
            pack(pairs, k + 1, used, taken, best);
        }
        let mut extra = 0;
        pack(&pairs, 0, 0, 0, &mut extra);
        let d = Ratio::new((direct + extra) as u64, p);
        if d > best {
            best = d;
        }
    }
    Ok(best)
}

pub fn top_grad(g: &Digraph, r: usize) -> Result<Ratio<u64>> {
    top_grad_capped(g, r, GRAD_CAP)
}
