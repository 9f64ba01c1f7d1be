//! Distance profiles, neighbourhood complexity, VC dimension and
//! approximate distance-`r` domination.

mod redblue;
mod scds;

use std::collections::HashSet;

use crate::error::{check_cap, Result};
use crate::graph::Digraph;
use crate::vertex_set::VertexSet;

pub use redblue::{greedy_hitting_set, redblue_dominate_approx, RedBlueOutcome};
pub use scds::{scds_approx, ScdsOutcome};

/// Vertex cap for the exact VC dimension search.
pub const VC_CAP: usize = 20;

/// Entry `i` is `dist(a_i, v)` when it is at most `r`, `None` otherwise.
pub fn distance_vector(g: &Digraph, v: usize, a: &[usize], r: usize) -> Vec<Option<usize>> {
    let to_v = g.distances_to(v, r);
    a.iter().map(|&x| to_v[x]).collect()
}

/// Number of distinct traces `N^-_r(v) ∩ X` over all vertices `v`.
pub fn neighborhood_complexity(g: &Digraph, x: &VertexSet, r: usize) -> usize {
    let traces: HashSet<VertexSet> = g.in_balls(r).into_iter().map(|b| b.intersection(x)).collect();
    traces.len()
}

/// A family of subsets of `0..ground`, deduplicated.
#[derive(Clone, Debug)]
pub struct SetSystem {
    pub ground: usize,
    pub sets: Vec<VertexSet>,
}

impl SetSystem {
    pub fn new(ground: usize, sets: impl IntoIterator<Item = VertexSet>) -> Self {
        let mut seen = HashSet::new();
        let sets = sets
            .into_iter()
            .map(|s| {
                let mut t = VertexSet::new(ground);
                t.extend(s.iter().filter(|&v| v < ground));
                t
            })
            .filter(|s| seen.insert(s.clone()))
            .collect();
        SetSystem { ground, sets }
    }

    /// Whether every subset of `x` is cut out by some member.
    pub fn shatters(&self, x: &[usize]) -> bool {
        if x.len() >= usize::BITS as usize - 1 || 1usize << x.len() > self.sets.len() {
            return false;
        }
        let traces: HashSet<usize> = self
            .sets
            .iter()
            .map(|s| x.iter().enumerate().filter(|(_, &v)| s.contains(v)).fold(0, |m, (i, _)| m | 1 << i))
            .collect();
        traces.len() == 1 << x.len()
    }

    /// Largest shattered set with a witness. Shattered sets are closed
    /// under taking subsets, so they are grown level by level from the
    /// shattered sets one size smaller.
    pub fn vc_dimension(&self) -> (usize, Vec<usize>) {
        if self.sets.is_empty() {
            return (0, Vec::new());
        }
        let mut level: Vec<Vec<usize>> = vec![Vec::new()];
        loop {
            let mut next = Vec::new();
            for x in &level {
                let start = x.last().map_or(0, |&v| v + 1);
                for v in start..self.ground {
                    let mut y = x.clone();
                    y.push(v);
                    if self.shatters(&y) {
                        next.push(y);
                    }
                }
            }
            if next.is_empty() {
                let w = level.swap_remove(0);
                return (w.len(), w);
            }
            level = next;
        }
    }
}

/// VC dimension of `{N^-_r(v) : v ∈ V(G)}` over `V(G)`.
pub fn vc_dimension_distance_r(g: &Digraph, r: usize) -> Result<(usize, Vec<usize>)> {
    check_cap("vertices for VC dimension", g.n(), VC_CAP)?;
    Ok(SetSystem::new(g.n(), g.in_balls(r)).vc_dimension())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::{bidirected_clique, directed_path};

    #[test]
    fn vectors() {
        let g = directed_path(3).unwrap();
        assert_eq!(distance_vector(&g, 2, &[0, 1], 1), vec![None, Some(1)]);
        assert_eq!(distance_vector(&g, 1, &[1], 1), vec![Some(0)]);
    }

    #[test]
    fn complexity() {
        let g = Digraph::empty(5);
        assert_eq!(neighborhood_complexity(&g, &VertexSet::new(5), 2), 1);
        assert_eq!(neighborhood_complexity(&g, &VertexSet::full(5), 2), 5);
    }

    #[test]
    fn vc_small_cases() {
        assert_eq!(vc_dimension_distance_r(&Digraph::empty(4), 1).unwrap().0, 1);
        assert_eq!(vc_dimension_distance_r(&bidirected_clique(4).unwrap(), 1).unwrap().0, 0);
        assert!(vc_dimension_distance_r(&Digraph::empty(21), 1).is_err());
    }

    #[test]
    fn vc_of_all_subsets() {
        let sets = (0..8usize).map(|m| VertexSet::from_iter_n(3, (0..3).filter(|i| m & 1 << i != 0)));
        let (d, w) = SetSystem::new(3, sets).vc_dimension();
        assert_eq!((d, w), (3, vec![0, 1, 2]));
    }
}
