//! Strongly connected components and block contraction.

use crate::error::{Error, Result};
use crate::graph::{bounded_bfs, Digraph};
use crate::vertex_set::VertexSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SccDecomposition {
    /// Component index of every vertex.
    pub component_of: Vec<usize>,
    /// Members of each component, sorted. Components are listed in reverse
    /// topological order of the condensation (sinks first).
    pub components: Vec<Vec<usize>>,
    /// Largest directed distance between two members, measured inside the
    /// component.
    pub diameters: Vec<usize>,
}

impl SccDecomposition {
    pub fn max_diameter(&self) -> usize {
        self.diameters.iter().copied().max().unwrap_or(0)
    }
}

/// Tarjan's algorithm, iterative.
pub fn scc(g: &Digraph) -> SccDecomposition {
    let n = g.n();
    const UNSEEN: usize = usize::MAX;
    let mut index = vec![UNSEEN; n];
    let mut low = vec![0usize; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    let mut component_of = vec![UNSEEN; n];
    let mut components: Vec<Vec<usize>> = Vec::new();
    let mut counter = 0;

    for root in 0..n {
        if index[root] != UNSEEN {
            continue;
        }
        // (vertex, next out-neighbor slot)
        let mut call: Vec<(usize, usize)> = vec![(root, 0)];
        index[root] = counter;
        low[root] = counter;
        counter += 1;
        stack.push(root);
        on_stack[root] = true;
        while let Some(&mut (v, ref mut slot)) = call.last_mut() {
            if let Some(&w) = g.out_neighbors(v).get(*slot) {
                *slot += 1;
                if index[w] == UNSEEN {
                    index[w] = counter;
                    low[w] = counter;
                    counter += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
                continue;
            }
            call.pop();
            if let Some(&(parent, _)) = call.last() {
                low[parent] = low[parent].min(low[v]);
            }
            if low[v] == index[v] {
                let id = components.len();
                let mut members = Vec::new();
                loop {
                    let w = stack.pop().unwrap();
                    on_stack[w] = false;
                    component_of[w] = id;
                    members.push(w);
                    if w == v {
                        break;
                    }
                }
                members.sort_unstable();
                components.push(members);
            }
        }
    }

    let diameters = components.iter().map(|members| component_diameter(g, members)).collect();
    SccDecomposition { component_of, components, diameters }
}

fn component_diameter(g: &Digraph, members: &[usize]) -> usize {
    if members.len() <= 1 {
        return 0;
    }
    let keep = VertexSet::from_iter_n(g.n(), members.iter().copied());
    let (sub, _) = g.induced_subgraph(&keep);
    let adj: Vec<Vec<usize>> = sub.vertices().map(|v| sub.out_neighbors(v).to_vec()).collect();
    (0..sub.n())
        .map(|v| {
            bounded_bfs(&adj, v, usize::MAX).1.into_iter().map(|d| d.expect("strongly connected")).max().unwrap_or(0)
        })
        .max()
        .unwrap_or(0)
}

/// Result of contracting disjoint vertex blocks.
#[derive(Clone, Debug)]
pub struct Contraction {
    pub graph: Digraph,
    /// New vertex of every old vertex.
    pub mapping: Vec<usize>,
    /// Old vertices of every new vertex, sorted.
    pub blocks: Vec<Vec<usize>>,
}

/// Contracts every block to a single vertex. Vertices outside all blocks
/// stay as singletons. New vertices are numbered by the smallest old vertex
/// they contain. Arcs inside a block vanish, parallel arcs merge.
pub fn contract(g: &Digraph, partition: &[Vec<usize>]) -> Result<Contraction> {
    let n = g.n();
    let mut block_of = vec![usize::MAX; n];
    for (b, block) in partition.iter().enumerate() {
        for &v in block {
            if v >= n {
                return Err(Error::arg(format!("vertex {v} out of range for n={n}")));
            }
            if block_of[v] != usize::MAX {
                return Err(Error::arg(format!("vertex {v} appears in two blocks")));
            }
            block_of[v] = b;
        }
    }
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut mapping = vec![usize::MAX; n];
    for v in 0..n {
        if mapping[v] != usize::MAX {
            continue;
        }
        let id = blocks.len();
        let members = if block_of[v] == usize::MAX {
            vec![v]
        } else {
            let mut b = partition[block_of[v]].clone();
            b.sort_unstable();
            b
        };
        for &u in &members {
            mapping[u] = id;
        }
        blocks.push(members);
    }
    let graph = Digraph::from_arcs_lossy(blocks.len(), g.arcs().map(|(u, v)| (mapping[u], mapping[v])));
    Ok(Contraction { graph, mapping, blocks })
}

/// Contracts every strongly connected component.
pub fn condensation(g: &Digraph) -> Contraction {
    let d = scc(g);
    contract(g, &d.components).expect("components are disjoint")
}

/// Directed-cycle test by Kahn's algorithm.
pub fn is_acyclic(g: &Digraph) -> bool {
    let mut indeg: Vec<usize> = g.vertices().map(|v| g.in_degree(v)).collect();
    let mut queue: Vec<usize> = g.vertices().filter(|&v| indeg[v] == 0).collect();
    let mut seen = 0;
    while let Some(v) = queue.pop() {
        seen += 1;
        for &w in g.out_neighbors(v) {
            indeg[w] -= 1;
            if indeg[w] == 0 {
                queue.push(w);
            }
        }
    }
    seen == g.n()
}
