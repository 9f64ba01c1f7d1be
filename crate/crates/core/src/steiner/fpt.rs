//! Bounded search tree for directed Steiner trees on sparse digraphs.

use serde::Serialize;

use crate::degeneracy::degeneracy;
use crate::error::{Error, Result};
use crate::graph::Digraph;
use crate::vertex_set::VertexSet;

use super::exact::dst_exact_subset_capped;
use super::{is_steiner_set, preprocess_contract, source_terminals, DstInstance, SUBSET_CAP};

#[derive(Clone, Debug)]
pub struct FptOptions {
    /// Degree threshold; defaults to twice the degeneracy of the contracted
    /// graph.
    pub d: Option<usize>,
    pub subset_cap: usize,
}

impl Default for FptOptions {
    fn default() -> Self {
        FptOptions { d: None, subset_cap: SUBSET_CAP }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct DstOutcome {
    /// A minimum-size solution in the original vertex numbering.
    pub solution: Option<VertexSet>,
    pub nodes_expanded: u64,
    /// Nodes of the search tree for each budget tried, from 0 upwards.
    pub tree_sizes: Vec<u64>,
    pub d: usize,
    /// Largest diameter of a strong component of `G[T]`.
    pub s: usize,
}

struct Search<'a> {
    g: &'a Digraph,
    root: usize,
    terminals: &'a VertexSet,
    sources: &'a VertexSet,
    k: usize,
    d: usize,
    subset_cap: usize,
    nodes: u64,
}

impl Search<'_> {
    /// Looks for a solution of size `<= k` containing `y` and avoiding
    /// `removed`.
    fn run(&mut self, y: &VertexSet, removed: &VertexSet) -> Result<Option<VertexSet>> {
        let n = self.g.n();
        if y.len() > self.k {
            return Ok(None);
        }
        let ky = self.k - y.len();
        let mut dominated = VertexSet::new(n);
        for x in y.iter().chain([self.root]) {
            dominated.extend(self.g.out_neighbors(x).iter().copied());
        }
        let open = self.sources.difference(&dominated);
        let free = |v: usize| v != self.root && !self.terminals.contains(v) && !y.contains(v) && !removed.contains(v);
        let high: Vec<usize> = (0..n)
            .filter(|&v| free(v))
            .filter(|&v| self.g.out_neighbors(v).iter().filter(|&&t| open.contains(t)).count() > self.d)
            .collect();
        let mut t_high = VertexSet::new(n);
        for &s in &high {
            t_high.extend(self.g.out_neighbors(s).iter().copied().filter(|&t| open.contains(t)));
        }
        let t_low = open.difference(&t_high);
        if t_low.len() > self.d * ky {
            return Ok(None);
        }
        self.nodes += 1;
        if high.is_empty() || ky == 0 {
            return self.leaf(y, removed, &open, ky);
        }
        // a high terminal with the fewest high in-neighbours
        let (v, cands) = t_high
            .iter()
            .map(|t| {
                let c: Vec<usize> = self.g.in_neighbors(t).iter().copied().filter(|u| high.contains(u)).collect();
                (t, c)
            })
            .min_by_key(|(t, c)| (c.len(), *t))
            .expect("high vertices dominate some open terminal");
        if cands.len() > self.d {
            return Err(Error::internal(format!(
                "terminal {v} has {} high in-neighbours, threshold {}",
                cands.len(),
                self.d
            )));
        }
        for &s in &cands {
            let mut y2 = y.clone();
            y2.insert(s);
            if let Some(sol) = self.run(&y2, removed)? {
                return Ok(Some(sol));
            }
        }
        let mut removed2 = removed.clone();
        removed2.extend(cands.iter().copied());
        self.run(y, &removed2)
    }

    /// Exact solve: `Y` joins the terminals and must be reached along with
    /// every open source terminal.
    fn leaf(&self, y: &VertexSet, removed: &VertexSet, open: &VertexSet, ky: usize) -> Result<Option<VertexSet>> {
        let g = self.g.without_vertices(removed);
        let terminals = self.terminals.union(y);
        let targets = open.union(y);
        let found = dst_exact_subset_capped(&g, self.root, &terminals, &targets, ky, self.subset_cap)?;
        Ok(found.map(|s| s.union(y)))
    }
}

/// `(d+1)^(k(d+1))`, saturating.
pub fn node_bound(d: usize, k: usize) -> u64 {
    let e = u32::try_from(k * (d + 1)).unwrap_or(u32::MAX);
    (d as u64 + 1).saturating_pow(e)
}

pub fn dst_fpt(inst: &DstInstance) -> Result<DstOutcome> {
    dst_fpt_with(inst, &FptOptions::default())
}

/// Contracts the terminal components, then runs the bounded search for
/// budgets `0, 1, ..., k` so that the first solution found is minimum.
pub fn dst_fpt_with(inst: &DstInstance, opts: &FptOptions) -> Result<DstOutcome> {
    let c = preprocess_contract(inst);
    let g = &c.instance.graph;
    let d = opts.d.unwrap_or_else(|| 2 * degeneracy(g).d);
    let sources = source_terminals(g, &c.instance.terminals);
    let mut tree_sizes = Vec::new();
    for k in 0..=inst.budget {
        let mut search = Search {
            g,
            root: c.instance.root,
            terminals: &c.instance.terminals,
            sources: &sources,
            k,
            d,
            subset_cap: opts.subset_cap,
            nodes: 0,
        };
        let found = search.run(&VertexSet::new(g.n()), &VertexSet::new(g.n()))?;
        if search.nodes > node_bound(d, k) {
            return Err(Error::internal(format!("search tree has {} nodes, bound {}", search.nodes, node_bound(d, k))));
        }
        tree_sizes.push(search.nodes);
        if let Some(s) = found {
            if !c.instance.accepts(&s) || s.len() > k {
                return Err(Error::internal("search returned an invalid Steiner set"));
            }
            let lifted = c.lift(&s);
            if !inst.accepts(&lifted) {
                return Err(Error::internal("lifted Steiner set is invalid"));
            }
            return Ok(DstOutcome {
                solution: Some(lifted),
                nodes_expanded: tree_sizes.iter().sum(),
                tree_sizes,
                d,
                s: c.s,
            });
        }
    }
    Ok(DstOutcome { solution: None, nodes_expanded: tree_sizes.iter().sum(), tree_sizes, d, s: c.s })
}

/// Two Steiner arborescences, one out of and one into a fixed terminal,
/// whose union strongly connects the terminals with at most twice the
/// optimum number of extra vertices.
pub fn scss_2approx(g: &Digraph, terminals: &VertexSet, k: usize) -> Result<Option<VertexSet>> {
    let t = terminals.first().ok_or_else(|| Error::arg("terminal set is empty"))?;
    let mut rest = terminals.clone();
    rest.remove(t);
    let forward = dst_fpt(&DstInstance::new(g.clone(), t, rest.clone(), k)?)?;
    let Some(s1) = forward.solution else { return Ok(None) };
    let backward = dst_fpt(&DstInstance::new(g.reverse(), t, rest.clone(), k)?)?;
    let Some(s2) = backward.solution else { return Ok(None) };
    let s = s1.union(&s2);
    if !is_steiner_set(g, t, &rest, &s) || !is_steiner_set(&g.reverse(), t, &rest, &s) {
        return Err(Error::internal("steiner union does not strongly connect the terminals"));
    }
    Ok(Some(s))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::bidirected_star;

    fn set(n: usize, items: &[usize]) -> VertexSet {
        VertexSet::from_iter_n(n, items.iter().copied())
    }

    #[test]
    fn reachable_terminals_need_nothing() {
        let g = Digraph::from_arcs(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let inst = DstInstance::new(g, 0, set(4, &[1, 2, 3]), 0).unwrap();
        let out = dst_fpt(&inst).unwrap();
        assert!(out.solution.unwrap().is_empty());
    }

    #[test]
    fn minimum_is_returned() {
        // two routes to terminal 4: 0->1->4 and 0->2->3->4
        let g = Digraph::from_arcs(5, [(0, 1), (1, 4), (0, 2), (2, 3), (3, 4)]).unwrap();
        let inst = DstInstance::new(g, 0, set(5, &[4]), 3).unwrap();
        assert_eq!(dst_fpt(&inst).unwrap().solution.unwrap().to_vec(), vec![1]);
    }

    #[test]
    fn star_center() {
        let g = bidirected_star(4);
        let t = set(5, &[1, 2, 3, 4]);
        assert_eq!(scss_2approx(&g, &t, 1).unwrap().unwrap().to_vec(), vec![0]);
        assert!(scss_2approx(&g, &t, 0).unwrap().is_none());
        assert!(scss_2approx(&g, &VertexSet::new(5), 1).is_err());
    }

    #[test]
    fn strongly_connected_terminals() {
        let g = Digraph::from_arcs(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        assert!(scss_2approx(&g, &set(3, &[0, 1, 2]), 0).unwrap().unwrap().is_empty());
    }
}
