//! Directed Steiner trees and strongly connected Steiner subgraphs.

mod exact;
mod fpt;

use crate::error::{Error, Result};
use crate::graph::Digraph;
use crate::scc::{contract, scc};
use crate::vertex_set::VertexSet;

pub use exact::{dst_exact_subset, dst_exact_subset_capped, SUBSET_CAP};
pub use fpt::{dst_fpt, dst_fpt_with, node_bound, scss_2approx, DstOutcome, FptOptions};

/// Find a set `S` of at most `budget` non-terminals such that every
/// terminal is reachable from `root` inside `G[{root} ∪ T ∪ S]`.
#[derive(Clone, Debug)]
pub struct DstInstance {
    pub graph: Digraph,
    pub root: usize,
    pub terminals: VertexSet,
    pub budget: usize,
}

impl DstInstance {
    pub fn new(graph: Digraph, root: usize, terminals: VertexSet, budget: usize) -> Result<Self> {
        let n = graph.n();
        if root >= n {
            return Err(Error::arg(format!("root {root} out of range for n={n}")));
        }
        if terminals.universe() != n {
            return Err(Error::arg("terminal set does not match the graph"));
        }
        if terminals.contains(root) {
            return Err(Error::arg("the root cannot be a terminal"));
        }
        Ok(DstInstance { graph, root, terminals, budget })
    }

    /// Whether `s` is a solution, ignoring the budget.
    pub fn accepts(&self, s: &VertexSet) -> bool {
        is_steiner_set(&self.graph, self.root, &self.terminals, s)
    }
}

/// `s` avoids the root and the terminals, and the root reaches every
/// terminal inside `G[{root} ∪ T ∪ s]`.
pub fn is_steiner_set(g: &Digraph, root: usize, terminals: &VertexSet, s: &VertexSet) -> bool {
    if s.contains(root) || s.intersects(terminals) {
        return false;
    }
    let mut keep = terminals.union(s);
    keep.insert(root);
    let mut seen = VertexSet::new(g.n());
    seen.insert(root);
    let mut stack = vec![root];
    while let Some(x) = stack.pop() {
        for &y in g.out_neighbors(x) {
            if keep.contains(y) && seen.insert(y) {
                stack.push(y);
            }
        }
    }
    terminals.is_subset(&seen)
}

/// Terminals without an in-arc from another terminal. Reaching all of them
/// reaches every terminal, since each terminal is reachable inside `G[T]`
/// from one of them.
pub fn source_terminals(g: &Digraph, terminals: &VertexSet) -> VertexSet {
    VertexSet::from_iter_n(
        g.n(),
        terminals.iter().filter(|&t| !g.in_neighbors(t).iter().any(|&u| terminals.contains(u))),
    )
}

/// An instance with the strong components of `G[T]` contracted.
#[derive(Clone, Debug)]
pub struct Contracted {
    pub instance: DstInstance,
    /// New vertex of every old vertex.
    pub mapping: Vec<usize>,
    /// Old vertices of every new vertex.
    pub blocks: Vec<Vec<usize>>,
    /// Largest diameter of a contracted component.
    pub s: usize,
}

impl Contracted {
    /// Maps a solution of the contracted instance back. Non-terminals are
    /// never merged, so this is a relabelling.
    pub fn lift(&self, s: &VertexSet) -> VertexSet {
        VertexSet::from_iter_n(self.mapping.len(), s.iter().map(|x| self.blocks[x][0]))
    }
}

pub fn preprocess_contract(inst: &DstInstance) -> Contracted {
    let (gt, old_of) = inst.graph.induced_subgraph(&inst.terminals);
    let comps = scc(&gt);
    let partition: Vec<Vec<usize>> =
        comps.components.iter().filter(|c| c.len() > 1).map(|c| c.iter().map(|&x| old_of[x]).collect()).collect();
    let c = contract(&inst.graph, &partition).expect("components are disjoint");
    let n = c.graph.n();
    let terminals = VertexSet::from_iter_n(n, inst.terminals.iter().map(|t| c.mapping[t]));
    let instance = DstInstance::new(c.graph, c.mapping[inst.root], terminals, inst.budget)
        .expect("contraction keeps the root apart from the terminals");
    Contracted { instance, mapping: c.mapping, blocks: c.blocks, s: comps.max_diameter() }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(n: usize, items: &[usize]) -> VertexSet {
        VertexSet::from_iter_n(n, items.iter().copied())
    }

    #[test]
    fn instance_validation() {
        let g = Digraph::from_arcs(3, [(0, 1), (1, 2)]).unwrap();
        assert!(DstInstance::new(g.clone(), 1, set(3, &[1, 2]), 0).is_err());
        assert!(DstInstance::new(g.clone(), 5, set(3, &[2]), 0).is_err());
        let inst = DstInstance::new(g, 0, set(3, &[2]), 1).unwrap();
        assert!(inst.accepts(&set(3, &[1])));
        assert!(!inst.accepts(&set(3, &[])));
    }

    #[test]
    fn sources_of_terminal_paths() {
        let g = Digraph::from_arcs(4, [(1, 2), (2, 3)]).unwrap();
        assert_eq!(source_terminals(&g, &set(4, &[1, 2, 3])).to_vec(), vec![1]);
        assert_eq!(source_terminals(&g, &set(4, &[1, 3])).to_vec(), vec![1, 3]);
    }

    #[test]
    fn contraction_of_terminal_cycle() {
        // root 0 -> 1, terminals 1 -> 2 -> 3 -> 1
        let g = Digraph::from_arcs(4, [(0, 1), (1, 2), (2, 3), (3, 1)]).unwrap();
        let inst = DstInstance::new(g, 0, set(4, &[1, 2, 3]), 0).unwrap();
        let c = preprocess_contract(&inst);
        assert_eq!(c.s, 2);
        assert_eq!(c.instance.graph.n(), 2);
        assert_eq!(c.instance.terminals.len(), 1);
    }

    #[test]
    fn acyclic_terminals_untouched() {
        let g = Digraph::from_arcs(3, [(0, 1), (1, 2)]).unwrap();
        let inst = DstInstance::new(g.clone(), 0, set(3, &[1, 2]), 0).unwrap();
        let c = preprocess_contract(&inst);
        assert_eq!(c.s, 0);
        assert_eq!(c.instance.graph, g);
    }
}
