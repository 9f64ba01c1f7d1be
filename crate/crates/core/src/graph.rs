//! The `Digraph` type and distance-bounded neighborhoods.
//!
//! Vertices are dense indices `0..n`. Arcs are ordered pairs without
//! self-loops or duplicates; an antiparallel pair `(u,v)`, `(v,u)` is two
//! distinct arcs. Adjacency lists are kept sorted so membership tests are
//! binary searches.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Digraph {
    out_adj: Vec<Vec<usize>>,
    in_adj: Vec<Vec<usize>>,
    m: usize,
}

impl Digraph {
    pub fn empty(n: usize) -> Self {
        Digraph { out_adj: vec![Vec::new(); n], in_adj: vec![Vec::new(); n], m: 0 }
    }

    /// Builds a digraph, rejecting self-loops, duplicate arcs and
    /// out-of-range endpoints.
    pub fn from_arcs(n: usize, arcs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Digraph::empty(n);
        for (u, v) in arcs {
            if u >= n || v >= n {
                return Err(Error::arg(format!("arc ({u},{v}) out of range for n={n}")));
            }
            if u == v {
                return Err(Error::arg(format!("self-loop at {u}")));
            }
            g.out_adj[u].push(v);
            g.in_adj[v].push(u);
            g.m += 1;
        }
        for list in g.out_adj.iter_mut().chain(g.in_adj.iter_mut()) {
            list.sort_unstable();
        }
        for (u, list) in g.out_adj.iter().enumerate() {
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::arg(format!("duplicate arc ({u},{})", w[0])));
            }
        }
        Ok(g)
    }

    /// Like `from_arcs` but silently drops self-loops and duplicates.
    pub fn from_arcs_lossy(n: usize, arcs: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut all: Vec<(usize, usize)> = arcs.into_iter().filter(|&(u, v)| u != v).collect();
        all.sort_unstable();
        all.dedup();
        Digraph::from_arcs(n, all).expect("cleaned arc list is valid")
    }

    pub fn n(&self) -> usize {
        self.out_adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn out_neighbors(&self, v: usize) -> &[usize] {
        &self.out_adj[v]
    }

    pub fn in_neighbors(&self, v: usize) -> &[usize] {
        &self.in_adj[v]
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out_adj[v].len()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.in_adj[v].len()
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.out_adj[u].binary_search(&v).is_ok()
    }

    /// All arcs in lexicographic order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.out_adj.iter().enumerate().flat_map(|(u, list)| list.iter().map(move |&v| (u, v)))
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n()
    }

    /// Neighbors in the underlying undirected graph, sorted, each once.
    pub fn underlying_neighbors(&self, v: usize) -> Vec<usize> {
        let (a, b) = (&self.out_adj[v], &self.in_adj[v]);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            let next = match (a.get(i), b.get(j)) {
                (Some(&x), Some(&y)) if x == y => {
                    i += 1;
                    j += 1;
                    x
                }
                (Some(&x), Some(&y)) if x < y => {
                    i += 1;
                    x
                }
                (Some(_), Some(&y)) => {
                    j += 1;
                    y
                }
                (Some(&x), None) => {
                    i += 1;
                    x
                }
                (None, Some(&y)) => {
                    j += 1;
                    y
                }
                (None, None) => unreachable!(),
            };
            out.push(next);
        }
        out
    }

    /// Unordered pairs `{u,v}` (as `u < v`) joined by at least one arc.
    pub fn underlying_edges(&self) -> Vec<(usize, usize)> {
        let mut edges: Vec<(usize, usize)> = self.arcs().map(|(u, v)| (u.min(v), u.max(v))).collect();
        edges.sort_unstable();
        edges.dedup();
        edges
    }

    /// The digraph with every arc reversed.
    pub fn reverse(&self) -> Digraph {
        Digraph { out_adj: self.in_adj.clone(), in_adj: self.out_adj.clone(), m: self.m }
    }

    /// `G - X` keeping vertex indices: every arc touching `removed` is dropped,
    /// the removed vertices stay as isolated vertices.
    pub fn without_vertices(&self, removed: &VertexSet) -> Digraph {
        Digraph::from_arcs(self.n(), self.arcs().filter(|&(u, v)| !removed.contains(u) && !removed.contains(v)))
            .expect("subgraph of a valid digraph")
    }

    /// Induced subgraph `G[S]`, relabelled to `0..|S|` in increasing order.
    /// The returned vector maps new indices to old ones.
    pub fn induced_subgraph(&self, keep: &VertexSet) -> (Digraph, Vec<usize>) {
        let old_of: Vec<usize> = keep.iter().collect();
        let mut new_of = vec![usize::MAX; self.n()];
        for (i, &v) in old_of.iter().enumerate() {
            new_of[v] = i;
        }
        let arcs =
            self.arcs().filter(|&(u, v)| keep.contains(u) && keep.contains(v)).map(|(u, v)| (new_of[u], new_of[v]));
        let g = Digraph::from_arcs(old_of.len(), arcs).expect("induced subgraph is valid");
        (g, old_of)
    }

    /// Adds `extra` fresh isolated vertices after the existing ones.
    pub fn with_extra_vertices(&self, extra: usize) -> Digraph {
        let mut g = self.clone();
        g.out_adj.extend(std::iter::repeat_with(Vec::new).take(extra));
        g.in_adj.extend(std::iter::repeat_with(Vec::new).take(extra));
        g
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::arg(format!("vertex {v} out of range for n={}", self.n())))
        }
    }

    /// `N^+_r(v)`: vertices reachable from `v` by a directed path of length
    /// at most `r`. Always contains `v`.
    pub fn out_ball(&self, v: usize, r: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(bounded_bfs(&self.out_adj, v, r).0)
    }

    /// `N^-_r(v)`: vertices that reach `v` within `r` steps.
    pub fn in_ball(&self, v: usize, r: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(bounded_bfs(&self.in_adj, v, r).0)
    }

    /// Out-balls of every vertex.
    pub fn out_balls(&self, r: usize) -> Vec<VertexSet> {
        self.vertices().map(|v| bounded_bfs(&self.out_adj, v, r).0).collect()
    }

    /// In-balls of every vertex.
    pub fn in_balls(&self, r: usize) -> Vec<VertexSet> {
        self.vertices().map(|v| bounded_bfs(&self.in_adj, v, r).0).collect()
    }

    /// `N^+_r(S)`: union of out-balls.
    pub fn out_ball_of_set(&self, set: &VertexSet, r: usize) -> VertexSet {
        multi_source_bfs(&self.out_adj, set.iter(), r).0
    }

    /// Directed distances from `v`, `None` beyond `r` (or unreachable).
    pub fn distances_from(&self, v: usize, r: usize) -> Vec<Option<usize>> {
        bounded_bfs(&self.out_adj, v, r).1
    }

    /// Directed distances towards `v`: entry `u` is `dist(u, v)` when at most `r`.
    pub fn distances_to(&self, v: usize, r: usize) -> Vec<Option<usize>> {
        bounded_bfs(&self.in_adj, v, r).1
    }

    /// Shortest directed path `from -> to` as a vertex list, if any.
    pub fn shortest_path(&self, from: usize, to: usize) -> Option<Vec<usize>> {
        let n = self.n();
        let mut parent = vec![usize::MAX; n];
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([from]);
        seen[from] = true;
        while let Some(u) = queue.pop_front() {
            if u == to {
                let mut path = vec![to];
                let mut x = to;
                while x != from {
                    x = parent[x];
                    path.push(x);
                }
                path.reverse();
                return Some(path);
            }
            for &w in &self.out_adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = u;
                    queue.push_back(w);
                }
            }
        }
        None
    }

    /// Vertices reachable from `v` (unbounded).
    pub fn reachable_from(&self, v: usize) -> VertexSet {
        bounded_bfs(&self.out_adj, v, usize::MAX).0
    }

    /// Maximum out-degree.
    pub fn max_out_degree(&self) -> usize {
        self.out_adj.iter().map(Vec::len).max().unwrap_or(0)
    }
}

/// Level-bounded BFS over the given adjacency.
pub(crate) fn bounded_bfs(adj: &[Vec<usize>], src: usize, r: usize) -> (VertexSet, Vec<Option<usize>>) {
    multi_source_bfs(adj, std::iter::once(src), r)
}

fn multi_source_bfs(
    adj: &[Vec<usize>],
    sources: impl IntoIterator<Item = usize>,
    r: usize,
) -> (VertexSet, Vec<Option<usize>>) {
    let n = adj.len();
    let mut seen = VertexSet::new(n);
    let mut dist = vec![None; n];
    let mut queue = VecDeque::new();
    for s in sources {
        if seen.insert(s) {
            dist[s] = Some(0);
            queue.push_back(s);
        }
    }
    while let Some(u) = queue.pop_front() {
        let du = dist[u].unwrap();
        if du >= r {
            continue;
        }
        for &w in &adj[u] {
            if seen.insert(w) {
                dist[w] = Some(du + 1);
                queue.push_back(w);
            }
        }
    }
    (seen, dist)
}

/// Serializes as `{"n": .., "arcs": [[u, v], ..]}`.
impl serde::Serialize for Digraph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Digraph", 2)?;
        st.serialize_field("n", &self.n())?;
        st.serialize_field("arcs", &self.arcs().collect::<Vec<_>>())?;
        st.end()
    }
}
