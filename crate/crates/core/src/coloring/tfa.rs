//! Transitive fraternal augmentations and the orders extracted from them.

use std::collections::{BTreeSet, HashMap, HashSet};

use serde::Serialize;

use crate::degeneracy::{adjacency_of_edges, degeneracy, peel};
use crate::error::{Error, Result};
use crate::graph::Digraph;
use crate::order::LinearOrder;

/// Layered arc sets `E_1, ..., E_r` over the vertices of a base graph.
/// `layers[i]` holds `E_{i+1}`.
#[derive(Clone, Debug, Serialize)]
pub struct Augmentation {
    pub n: usize,
    pub layers: Vec<Vec<(usize, usize)>>,
}

impl Augmentation {
    pub fn depth(&self) -> usize {
        self.layers.len()
    }

    /// All arcs tagged with their 1-based layer index.
    pub fn labeled_arcs(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        self.layers.iter().enumerate().flat_map(|(i, l)| l.iter().map(move |&(u, v)| (u, v, i + 1)))
    }

    /// The union of all layers.
    pub fn union_graph(&self) -> Result<Digraph> {
        Digraph::from_arcs(self.n, self.labeled_arcs().map(|(u, v, _)| (u, v)))
            .map_err(|e| Error::internal(format!("augmentation layers overlap: {e}")))
    }
}

/// Bounded distances from every vertex; `None` beyond `r`.
fn distance_table(g: &Digraph, r: usize) -> Vec<HashMap<usize, usize>> {
    g.vertices()
        .map(|u| g.distances_from(u, r).into_iter().enumerate().filter_map(|(v, d)| d.map(|d| (v, d))).collect())
        .collect()
}

fn close(dist: &[HashMap<usize, usize>], u: usize, v: usize, len: usize) -> bool {
    let within = |a: usize, b: usize| dist[a].get(&b).is_some_and(|&d| d <= len);
    within(u, v) || within(v, u)
}

fn key(u: usize, v: usize) -> (usize, usize) {
    (u.min(v), u.max(v))
}

/// Depth-`r` transitive fraternal augmentation. `E_1` is the degeneracy
/// orientation of `G`; each later layer collects the fraternal and
/// transitive pairs of earlier layers whose endpoints are close in `G` and
/// not yet joined, oriented along a min-degree peeling of the new edges.
pub fn tfa_augment(g: &Digraph, r: usize) -> Result<Augmentation> {
    if r == 0 {
        return Err(Error::arg("augmentation depth must be at least 1"));
    }
    let n = g.n();
    let dist = distance_table(g, r);
    let e1: Vec<(usize, usize)> = degeneracy(g).orientation.arcs().collect();
    let mut present: HashSet<(usize, usize)> = e1.iter().map(|&(u, v)| key(u, v)).collect();
    let mut out: Vec<Vec<Vec<usize>>> = Vec::new();
    let mut inn: Vec<Vec<Vec<usize>>> = Vec::new();
    let mut layers: Vec<Vec<(usize, usize)>> = Vec::new();
    let mut push_layer =
        |layer: Vec<(usize, usize)>, out: &mut Vec<Vec<Vec<usize>>>, inn: &mut Vec<Vec<Vec<usize>>>| {
            let mut o = vec![Vec::new(); n];
            let mut i = vec![Vec::new(); n];
            for &(u, v) in &layer {
                o[u].push(v);
                i[v].push(u);
            }
            out.push(o);
            inn.push(i);
            layers.push(layer);
        };
    push_layer(e1, &mut out, &mut inn);

    for len in 2..=r {
        let mut fresh: BTreeSet<(usize, usize)> = BTreeSet::new();
        for j1 in 1..len {
            let j2 = len - j1;
            let (o1, o2, i1) = (&out[j1 - 1], &out[j2 - 1], &inn[j1 - 1]);
            for w in 0..n {
                // fraternal: (w,u) in E_j1, (w,v) in E_j2
                for &u in &o1[w] {
                    for &v in &o2[w] {
                        if u != v && !present.contains(&key(u, v)) && close(&dist, u, v, len) {
                            fresh.insert(key(u, v));
                        }
                    }
                }
                // transitive: (u,w) in E_j1, (w,x) in E_j2
                for &u in &i1[w] {
                    for &x in &o2[w] {
                        if u != x && !present.contains(&key(u, x)) && close(&dist, u, x, len) {
                            fresh.insert(key(u, x));
                        }
                    }
                }
            }
        }
        let edges: Vec<(usize, usize)> = fresh.into_iter().collect();
        let layer = peel(&adjacency_of_edges(n, &edges)).orient(&edges);
        present.extend(edges);
        push_layer(layer, &mut out, &mut inn);
    }
    Ok(Augmentation { n, layers })
}

/// Checks every defining condition of a depth-`r` augmentation directly,
/// returning a description of the first violation.
pub fn check_augmentation(g: &Digraph, aug: &Augmentation) -> std::result::Result<(), String> {
    let n = g.n();
    let r = aug.depth();
    if aug.n != n {
        return Err(format!("augmentation has {} vertices, graph has {n}", aug.n));
    }
    if r == 0 {
        return Err("augmentation has no layers".into());
    }
    let mut layer_of: HashMap<(usize, usize), usize> = HashMap::new();
    for (u, v, i) in aug.labeled_arcs() {
        if u >= n || v >= n || u == v {
            return Err(format!("bad arc ({u},{v}) in E_{i}"));
        }
        if layer_of.contains_key(&(v, u)) {
            return Err(format!("antiparallel pair ({u},{v})"));
        }
        if layer_of.insert((u, v), i).is_some() {
            return Err(format!("arc ({u},{v}) appears twice"));
        }
    }
    // E_1 re-orients E(G)
    let e1: HashSet<(usize, usize)> = aug.layers[0].iter().copied().collect();
    for (u, v) in g.arcs() {
        if !(e1.contains(&(u, v)) || e1.contains(&(v, u))) {
            return Err(format!("graph arc ({u},{v}) missing from E_1"));
        }
    }
    for &(u, v) in &e1 {
        if !(g.has_arc(u, v) || g.has_arc(v, u)) {
            return Err(format!("E_1 arc ({u},{v}) is not a graph arc"));
        }
    }
    // arcs of E_i join vertices at distance <= i
    let dist: Vec<Vec<Option<usize>>> = g.vertices().map(|u| g.distances_from(u, r)).collect();
    let near =
        |u: usize, v: usize, len: usize| dist[u][v].is_some_and(|d| d <= len) || dist[v][u].is_some_and(|d| d <= len);
    for (u, v, i) in aug.labeled_arcs() {
        if !near(u, v, i) {
            return Err(format!("E_{i} arc ({u},{v}) has no path of length <= {i}"));
        }
    }
    let joined_by = |u: usize, v: usize, len: usize| {
        layer_of.get(&(u, v)).or_else(|| layer_of.get(&(v, u))).is_some_and(|&k| k <= len)
    };
    let arcs: Vec<(usize, usize, usize)> = aug.labeled_arcs().collect();
    for &(a, b, i) in &arcs {
        for &(c, d, j) in &arcs {
            if i + j > r {
                continue;
            }
            // fraternal: common tail
            if a == c && b != d && near(b, d, i + j) && !joined_by(b, d, i + j) {
                return Err(format!("fraternal pair ({a},{b}) in E_{i}, ({c},{d}) in E_{j} not closed"));
            }
            // transitive: head of the first is the tail of the second
            if b == c && a != d && near(a, d, i + j) && !joined_by(a, d, i + j) {
                return Err(format!("transitive pair ({a},{b}) in E_{i}, ({c},{d}) in E_{j} not closed"));
            }
        }
    }
    Ok(())
}

/// An order extracted from an augmentation, with its certificate.
#[derive(Clone, Debug, Serialize)]
pub struct AugmentedOrder {
    pub order: LinearOrder,
    /// Every vertex has at most `c` smaller neighbours in the augmentation.
    pub c: usize,
    /// Maximum out-degree of the augmentation.
    pub d: usize,
    /// `(d + 1) c + 1`.
    pub bound: usize,
}

pub fn order_from_augmentation(g: &Digraph, aug: &Augmentation) -> Result<AugmentedOrder> {
    if aug.n != g.n() {
        return Err(Error::arg("augmentation does not match the graph"));
    }
    let h = aug.union_graph()?;
    let adj: Vec<Vec<usize>> = h.vertices().map(|v| h.underlying_neighbors(v)).collect();
    let peeling = peel(&adj);
    let c = peeling.degeneracy;
    let d = h.max_out_degree();
    Ok(AugmentedOrder { order: peeling.order(), c, d, bound: (d + 1) * c + 1 })
}

/// An order whose weak `r`-coloring number is at most `guarantee`.
pub fn compute_wcol_order(g: &Digraph, r: usize) -> Result<AugmentedOrder> {
    if r == 0 {
        return Ok(AugmentedOrder { order: LinearOrder::identity(g.n()), c: 0, d: 0, bound: 1 });
    }
    let aug = tfa_augment(g, r)?;
    order_from_augmentation(g, &aug)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::wcol_of_order;
    use crate::instances::{apex_crown, directed_path, random_digraph};

    #[test]
    fn edgeless_layers_are_empty() {
        let g = Digraph::empty(4);
        let aug = tfa_augment(&g, 3).unwrap();
        assert!(aug.layers.iter().all(Vec::is_empty));
        assert_eq!(compute_wcol_order(&g, 3).unwrap().bound, 1);
        assert!(tfa_augment(&g, 0).is_err());
    }

    #[test]
    fn path_gains_shortcut() {
        let g = directed_path(3).unwrap();
        let aug = tfa_augment(&g, 2).unwrap();
        assert_eq!(aug.layers[1].len(), 1);
        let (u, v) = aug.layers[1][0];
        assert_eq!(key(u, v), (0, 2));
        check_augmentation(&g, &aug).unwrap();
    }

    #[test]
    fn checker_rejects_missing_closure() {
        let g = directed_path(3).unwrap();
        let mut aug = tfa_augment(&g, 2).unwrap();
        aug.layers[1].clear();
        assert!(check_augmentation(&g, &aug).is_err());
    }

    #[test]
    fn guarantees_hold() {
        let mut graphs = vec![(directed_path(16).unwrap(), 4), (apex_crown(5).unwrap(), 2)];
        for seed in 0..5 {
            graphs.push((random_digraph(30, 60, seed).unwrap(), 1 + seed as usize % 3));
        }
        for (g, r) in graphs {
            let aug = tfa_augment(&g, r).unwrap();
            check_augmentation(&g, &aug).unwrap();
            let o = order_from_augmentation(&g, &aug).unwrap();
            assert!(wcol_of_order(&g, &o.order, r) <= o.bound);
        }
    }
}
