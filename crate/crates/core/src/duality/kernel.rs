//! Domination cores and the distance-`r` dominating set kernel.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::coloring::{compute_wcol_order, wreach_all};
use crate::domination::distance_vector;
use crate::error::{Error, Result};
use crate::graph::Digraph;
use crate::vertex_set::VertexSet;

use super::closure::xi_estimate;
use super::dual::{dominator_or_scattered, greedy_dual, DualityResult};

/// How `reduce_core` decides that it has found a removable vertex.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CoreMode {
    /// Thresholds from the worst-case analysis. They exceed any desk-scale
    /// input, so in practice the core stays whole.
    Proven,
    /// Any scattered chain with a distance-profile class above `k + 1` is
    /// used; the removal argument only needs such a class.
    #[default]
    Observed,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum ReduceOutcome {
    /// `k + 1` vertices of the core without a common `r`-dominator.
    NoInstance {
        witness: Vec<usize>,
    },
    Removable {
        z: usize,
        iterations: usize,
        x_size: usize,
        class_size: usize,
    },
    AlreadySmall {
        iterations: usize,
    },
}

fn saturating_pow(base: u128, exp: usize) -> u128 {
    (0..exp).fold(1u128, |acc, _| acc.saturating_mul(base))
}

/// `q(x) = (k+1) ((r+2) c x)^c`.
pub fn q_threshold(k: usize, r: usize, c: usize, x: usize) -> u128 {
    let base = ((r + 2) as u128).saturating_mul(c as u128).saturating_mul(x as u128);
    (k as u128 + 1).saturating_mul(saturating_pow(base, c))
}

/// Core size below which `reduce_core` in proven mode stops:
/// `q(((r-1) ξ + 1) c k) (k+2)`.
pub fn small_core_threshold(k: usize, r: usize, c: usize, xi: usize) -> u128 {
    let x = r.saturating_sub(1).saturating_mul(xi).saturating_add(1).saturating_mul(c).saturating_mul(k);
    q_threshold(k, r, c, x).saturating_mul(k as u128 + 2)
}

/// Classes of `w` with equal distance vectors towards `x`; returns the
/// first class (by smallest member) with more than `k + 1` members.
fn big_class(g: &Digraph, w: &[usize], x: &VertexSet, r: usize, k: usize) -> Option<Vec<usize>> {
    let targets = x.to_vec();
    let mut classes: BTreeMap<Vec<Option<usize>>, Vec<usize>> = BTreeMap::new();
    for &u in w {
        classes.entry(distance_vector(g, u, &targets, r)).or_default().push(u);
    }
    classes
        .into_values()
        .filter(|c| c.len() > k + 1)
        .map(|mut c| {
            c.sort_unstable();
            c
        })
        .min_by_key(|c| c[0])
}

/// Looks for a vertex `z` of the core `Z` such that `Z - z` is still a core
/// for deciding `γ_r(G) <= k`.
pub fn reduce_core(g: &Digraph, z: &VertexSet, r: usize, k: usize, mode: CoreMode) -> Result<ReduceOutcome> {
    let n = g.n();
    let found = compute_wcol_order(g, r)?;
    let c = found.bound;
    if mode == CoreMode::Proven && (z.len() as u128) <= small_core_threshold(k, r, c, xi_estimate(g)) {
        return Ok(ReduceOutcome::AlreadySmall { iterations: 0 });
    }
    let reach = wreach_all(g, &found.order, r);
    let mut y = match dominator_or_scattered(g, z, r, k)?.0 {
        DualityResult::Scattered(w) => return Ok(ReduceOutcome::NoInstance { witness: w }),
        DualityResult::Dominating(d) => d,
    };
    let mut prev_x: Option<VertexSet> = None;
    for iteration in 1.. {
        let mut x = VertexSet::new(n);
        for v in y.iter() {
            x.union_with(&reach[v]);
        }
        if iteration > c || prev_x.as_ref() == Some(&x) {
            return match mode {
                CoreMode::Proven => {
                    Err(Error::internal(format!("core reduction did not finish within {c} iterations")))
                }
                CoreMode::Observed => Ok(ReduceOutcome::AlreadySmall { iterations: iteration - 1 }),
            };
        }
        let rest = z.difference(&x);
        let h = g.without_vertices(&x);
        let run = greedy_dual(&h, &rest, r)?;
        let w = &run.chain;
        let trigger = match mode {
            CoreMode::Proven => (w.len() as u128) > q_threshold(k, r, c, x.len()),
            CoreMode::Observed => true,
        };
        if trigger {
            match big_class(g, w, &x, r, k) {
                Some(class) => {
                    return Ok(ReduceOutcome::Removable {
                        z: class[0],
                        iterations: iteration,
                        x_size: x.len(),
                        class_size: class.len(),
                    })
                }
                None if mode == CoreMode::Proven => {
                    return Err(Error::internal("large scattered set without a large profile class"))
                }
                None => {}
            }
        }
        y = x.union(&run.dominator);
        prev_x = Some(x);
    }
    unreachable!("the iteration loop only exits by returning")
}

#[derive(Clone, Debug, Serialize)]
pub struct RemovalRecord {
    pub z: usize,
    pub iterations: usize,
    pub x_size: usize,
    pub class_size: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct DominationCore {
    pub core: VertexSet,
    pub removed: Vec<RemovalRecord>,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum CoreOutcome {
    NoInstance { witness: Vec<usize> },
    Core(DominationCore),
}

/// Shrinks the trivial core `V(G)` one vertex at a time.
pub fn domination_core(g: &Digraph, r: usize, k: usize, mode: CoreMode) -> Result<CoreOutcome> {
    let mut core = VertexSet::full(g.n());
    let mut removed = Vec::new();
    loop {
        match reduce_core(g, &core, r, k, mode)? {
            ReduceOutcome::NoInstance { witness } => return Ok(CoreOutcome::NoInstance { witness }),
            ReduceOutcome::AlreadySmall { .. } => return Ok(CoreOutcome::Core(DominationCore { core, removed })),
            ReduceOutcome::Removable { z, iterations, x_size, class_size } => {
                if !core.remove(z) {
                    return Err(Error::internal(format!("removed vertex {z} was not in the core")));
                }
                removed.push(RemovalRecord { z, iterations, x_size, class_size });
            }
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Kernel {
    /// Standard-form instance: dominate all of it with `budget` vertices.
    pub graph: Digraph,
    pub budget: usize,
    /// Whether the input was recognised as a no-instance.
    pub infeasible: bool,
    pub core: Option<VertexSet>,
    /// Original vertices kept in the annotated subgraph, in their new order.
    pub kept: Vec<usize>,
    pub removed: Vec<RemovalRecord>,
    pub witness: Option<Vec<usize>>,
}

/// Core, one representative per class of `N^+_r(v) ∩ Z` with shortest
/// paths to its core vertices, then the translation to a plain instance:
/// fresh `w`, `w'` with an `r`-path `w -> w'` and an `r`-path from `w` to
/// every kept vertex outside the core; the budget grows by one.
pub fn kernelize(g: &Digraph, r: usize, k: usize, mode: CoreMode) -> Result<Kernel> {
    if r == 0 {
        return Err(Error::arg("kernelization needs radius at least 1"));
    }
    let n = g.n();
    let dc = match domination_core(g, r, k, mode)? {
        CoreOutcome::NoInstance { witness } => {
            return Ok(Kernel {
                graph: Digraph::empty(1),
                budget: 0,
                infeasible: true,
                core: None,
                kept: Vec::new(),
                removed: Vec::new(),
                witness: Some(witness),
            })
        }
        CoreOutcome::Core(dc) => dc,
    };
    let z = &dc.core;
    let mut keep = z.clone();
    let mut reps: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    for v in 0..n {
        let trace = g.out_ball(v, r)?.intersection(z).to_vec();
        reps.entry(trace).or_insert(v);
    }
    for (trace, &rep) in &reps {
        keep.insert(rep);
        for &t in trace {
            let path = g.shortest_path(rep, t).ok_or_else(|| Error::internal("dominated core vertex unreachable"))?;
            keep.extend(path);
        }
    }
    let (sub, old_of) = g.induced_subgraph(&keep);
    let base = sub.n();
    let outside: Vec<usize> = (0..base).filter(|&i| !z.contains(old_of[i])).collect();
    let extra = 2 + (r - 1) * (1 + outside.len());
    let mut arcs: Vec<(usize, usize)> = sub.arcs().collect();
    let w = base;
    let w2 = base + 1;
    let mut next = base + 2;
    let mut path_to = |target: usize, arcs: &mut Vec<(usize, usize)>| {
        let mut at = w;
        for _ in 1..r {
            arcs.push((at, next));
            at = next;
            next += 1;
        }
        arcs.push((at, target));
    };
    path_to(w2, &mut arcs);
    for &v in &outside {
        path_to(v, &mut arcs);
    }
    let graph = Digraph::from_arcs(base + extra, arcs)?;
    Ok(Kernel {
        graph,
        budget: k + 1,
        infeasible: false,
        core: Some(dc.core),
        kept: old_of,
        removed: dc.removed,
        witness: None,
    })
}
