//! Low directed tree-depth colorings.

use serde::Serialize;

use crate::error::{check_cap, Error, Result};
use crate::graph::Digraph;
use crate::order::LinearOrder;

use super::tfa::compute_wcol_order;
use super::wreach::wreach_all;

/// Default cap on `p`; the radius is `2^p`.
pub const DEPTH_CAP: usize = 5;

#[derive(Clone, Debug, Serialize)]
pub struct LowTreedepthColoring {
    pub colors: Vec<usize>,
    pub num_colors: usize,
    pub order: LinearOrder,
    /// Bound on the weak `2^p`-coloring number of `order`.
    pub guarantee: usize,
}

/// Greedy coloring along a good weak `2^p`-coloring order: each vertex takes
/// the smallest color unused by the other members of its weak reachability
/// set.
pub fn low_treedepth_coloring_capped(g: &Digraph, p: usize, cap: usize) -> Result<LowTreedepthColoring> {
    if p == 0 {
        return Err(Error::arg("coloring depth p must be at least 1"));
    }
    check_cap("coloring depth p", p, cap)?;
    let radius = 1usize << p;
    let found = compute_wcol_order(g, radius)?;
    let reach = wreach_all(g, &found.order, radius);
    let mut colors = vec![usize::MAX; g.n()];
    for &v in found.order.as_slice() {
        let taken: Vec<usize> = reach[v].iter().filter(|&u| u != v).map(|u| colors[u]).collect();
        colors[v] = (0..).find(|c| !taken.contains(c)).expect("colors are unbounded");
    }
    let num_colors = colors.iter().map(|&c| c + 1).max().unwrap_or(0);
    Ok(LowTreedepthColoring { colors, num_colors, order: found.order, guarantee: found.bound })
}

pub fn low_treedepth_coloring(g: &Digraph, p: usize) -> Result<LowTreedepthColoring> {
    low_treedepth_coloring_capped(g, p, DEPTH_CAP)
}
