//! Projections onto a vertex set and closures that keep them small.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Digraph;
use crate::minors::grad_lower_bound;
use crate::vertex_set::VertexSet;

/// Members of `X` reached from `u` along out-arcs or in-arcs within `r`
/// steps without passing through `X`, together with the non-`X` vertices
/// the search went through.
fn projection_region(g: &Digraph, u: usize, x: &VertexSet, r: usize, blocked: &VertexSet) -> (VertexSet, VertexSet) {
    let n = g.n();
    let mut hit = VertexSet::new(n);
    let mut region = VertexSet::new(n);
    region.insert(u);
    for forward in [true, false] {
        let mut seen = VertexSet::new(n);
        seen.insert(u);
        let mut frontier = vec![u];
        for _ in 0..r {
            let mut next = Vec::new();
            for &a in &frontier {
                let nbrs = if forward { g.out_neighbors(a) } else { g.in_neighbors(a) };
                for &b in nbrs {
                    if blocked.contains(b) || !seen.insert(b) {
                        continue;
                    }
                    if x.contains(b) {
                        hit.insert(b);
                    } else {
                        region.insert(b);
                        next.push(b);
                    }
                }
            }
            frontier = next;
        }
    }
    (hit, region)
}

/// `M_r(u, X)`: vertices of `X` joined to `u` by a path of length at most
/// `r` (either direction) whose inner vertices avoid `X`.
pub fn projection(g: &Digraph, u: usize, x: &VertexSet, r: usize) -> Result<VertexSet> {
    if u >= g.n() {
        return Err(Error::arg(format!("vertex {u} out of range")));
    }
    if x.contains(u) {
        return Err(Error::arg(format!("vertex {u} lies in the projection target")));
    }
    Ok(projection_region(g, u, x, r, &VertexSet::new(g.n())).0)
}

#[derive(Clone, Debug, Serialize)]
pub struct Closure {
    pub set: VertexSet,
    /// Projection cap that was met.
    pub xi: usize,
    /// Number of times the cap was doubled.
    pub retries: usize,
}

/// Initial projection cap `max(1, ⌈2 ∇⌉)` from a lower bound on the grad.
pub fn xi_estimate(g: &Digraph) -> usize {
    ((grad_lower_bound(g) * 2).ceil().to_integer() as usize).max(1)
}

/// Size budget `(r-1) ξ |X|` of a closure.
fn budget(r: usize, xi: usize, x: usize) -> usize {
    r.saturating_sub(1) * xi * x
}

/// Greedy closure: while some vertex outside `X ∪ C` projects onto more
/// than `ξ` vertices of `X` in `G - C`, add the vertex lying in the most
/// such projection regions. `ξ` starts at `⌈2 ∇⌉` for a lower bound `∇`
/// on the grad and doubles whenever the size budget is exceeded.
pub fn closure(g: &Digraph, x: &VertexSet, r: usize) -> Result<Closure> {
    let n = g.n();
    let mut xi = xi_estimate(g);
    let mut retries = 0;
    loop {
        if let Some(set) = closure_with(g, x, r, xi) {
            check_closure(g, x, r, xi, &set).map_err(Error::Internal)?;
            return Ok(Closure { set, xi, retries });
        }
        if xi > n {
            return Err(Error::internal("no projection cap yields a closure"));
        }
        xi *= 2;
        retries += 1;
    }
}

fn closure_with(g: &Digraph, x: &VertexSet, r: usize, xi: usize) -> Option<VertexSet> {
    let n = g.n();
    let cap = budget(r, xi, x.len());
    let mut c = VertexSet::new(n);
    loop {
        let mut score = vec![0usize; n];
        let mut any = false;
        for u in 0..n {
            if x.contains(u) || c.contains(u) {
                continue;
            }
            let (hit, region) = projection_region(g, u, x, r, &c);
            if hit.len() > xi {
                any = true;
                for v in region.iter() {
                    score[v] += 1;
                }
            }
        }
        if !any {
            return Some(c);
        }
        if c.len() == cap {
            return None;
        }
        let best = (0..n).filter(|&v| score[v] > 0).max_by_key(|&v| (score[v], std::cmp::Reverse(v)))?;
        c.insert(best);
    }
}

/// The three closure properties.
pub fn check_closure(
    g: &Digraph,
    x: &VertexSet,
    r: usize,
    xi: usize,
    c: &VertexSet,
) -> std::result::Result<(), String> {
    if c.intersects(x) {
        return Err("closure meets X".into());
    }
    if c.len() > budget(r, xi, x.len()) {
        return Err(format!("closure has {} vertices, budget {}", c.len(), budget(r, xi, x.len())));
    }
    let h = g.without_vertices(c);
    for u in g.vertices().filter(|&u| !x.contains(u) && !c.contains(u)) {
        let p = projection_region(&h, u, x, r, c).0;
        if p.len() > xi {
            return Err(format!("vertex {u} still projects onto {} vertices", p.len()));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::directed_path;

    #[test]
    fn projections() {
        let g = directed_path(3).unwrap();
        let x = VertexSet::from_iter_n(3, [0, 2]);
        assert_eq!(projection(&g, 1, &x, 1).unwrap().to_vec(), vec![0, 2]);
        assert!(projection(&g, 1, &VertexSet::new(3), 2).unwrap().is_empty());
        assert!(projection(&g, 0, &x, 1).is_err());
    }

    #[test]
    fn edgeless_closure_is_empty() {
        let g = Digraph::empty(5);
        let c = closure(&g, &VertexSet::from_iter_n(5, [0, 1]), 2).unwrap();
        assert!(c.set.is_empty());
    }

    #[test]
    fn star_hub_is_cut() {
        // leaves 1..=6 -> hub 0 -> 7; X = leaves; vertex 7 sees all leaves through 0
        let mut arcs: Vec<(usize, usize)> = (1..=6).map(|l| (l, 0)).collect();
        arcs.push((0, 7));
        let g = Digraph::from_arcs(8, arcs).unwrap();
        let x = VertexSet::from_iter_n(8, 1..=6);
        let c = closure(&g, &x, 2).unwrap();
        check_closure(&g, &x, 2, c.xi, &c.set).unwrap();
    }
}
