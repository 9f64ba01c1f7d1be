//! Min-degree peeling of the underlying undirected graph.

use std::collections::BTreeSet;

use crate::graph::Digraph;
use crate::order::LinearOrder;

/// Outcome of peeling an undirected graph.
#[derive(Clone, Debug)]
pub struct Peeling {
    /// Largest degree a vertex had at the moment it was removed.
    pub degeneracy: usize,
    /// Vertices in removal order.
    pub removal: Vec<usize>,
}

impl Peeling {
    /// Reverse removal order: every vertex has at most `degeneracy`
    /// neighbors before it.
    pub fn order(&self) -> LinearOrder {
        let mut seq = self.removal.clone();
        seq.reverse();
        LinearOrder::from_sequence(seq).expect("removal sequence is a permutation")
    }

    /// Orients each edge from the endpoint removed first to the one removed
    /// later, so out-degrees are bounded by the degeneracy.
    pub fn orient(&self, edges: &[(usize, usize)]) -> Vec<(usize, usize)> {
        let mut rank = vec![0; self.removal.len()];
        for (i, &v) in self.removal.iter().enumerate() {
            rank[v] = i;
        }
        edges.iter().map(|&(u, v)| if rank[u] < rank[v] { (u, v) } else { (v, u) }).collect()
    }
}

/// Repeatedly removes a vertex of minimum remaining degree, smallest index
/// first among ties. `adj` must be symmetric without duplicates.
pub fn peel(adj: &[Vec<usize>]) -> Peeling {
    let n = adj.len();
    let mut deg: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut queue: BTreeSet<(usize, usize)> = (0..n).map(|v| (deg[v], v)).collect();
    let mut removed = vec![false; n];
    let mut removal = Vec::with_capacity(n);
    let mut degeneracy = 0;
    while let Some((d, v)) = queue.pop_first() {
        degeneracy = degeneracy.max(d);
        removed[v] = true;
        removal.push(v);
        for &w in &adj[v] {
            if !removed[w] {
                queue.remove(&(deg[w], w));
                deg[w] -= 1;
                queue.insert((deg[w], w));
            }
        }
    }
    Peeling { degeneracy, removal }
}

/// Symmetric adjacency lists for an undirected edge list on `n` vertices.
pub fn adjacency_of_edges(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    for list in &mut adj {
        list.sort_unstable();
        list.dedup();
    }
    adj
}

#[derive(Clone, Debug)]
pub struct Degeneracy {
    pub d: usize,
    /// Every vertex has at most `d` underlying neighbors before it.
    pub order: LinearOrder,
    /// Re-orientation of the underlying graph with out-degree at most `d`;
    /// arcs point towards vertices earlier in `order`.
    pub orientation: Digraph,
}

/// Degeneracy of the underlying undirected graph of `g`.
pub fn degeneracy(g: &Digraph) -> Degeneracy {
    let adj: Vec<Vec<usize>> = g.vertices().map(|v| g.underlying_neighbors(v)).collect();
    let peeling = peel(&adj);
    let oriented = peeling.orient(&g.underlying_edges());
    Degeneracy {
        d: peeling.degeneracy,
        order: peeling.order(),
        orientation: Digraph::from_arcs(g.n(), oriented).expect("orientation is simple"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edgeless_and_clique() {
        assert_eq!(degeneracy(&Digraph::empty(5)).d, 0);
        let k4 =
            Digraph::from_arcs(4, (0..4).flat_map(|u| (0..4).filter(move |&v| v != u).map(move |v| (u, v)))).unwrap();
        let deg = degeneracy(&k4);
        assert_eq!(deg.d, 3);
        assert_eq!(deg.orientation.m(), 6);
        assert!(deg.orientation.max_out_degree() <= 3);
    }

    #[test]
    fn ties_go_to_smallest_index() {
        let g = Digraph::from_arcs(3, [(0, 1), (1, 2)]).unwrap();
        let p = peel(&g.vertices().map(|v| g.underlying_neighbors(v)).collect::<Vec<_>>());
        assert_eq!(p.removal, vec![0, 1, 2]);
    }
}
