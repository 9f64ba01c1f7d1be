//! Distance-`r` red-blue domination by iterative reweighting of hitting-set
//! samples.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::coloring::compute_wcol_order;
use crate::error::{Error, Result};
use crate::graph::Digraph;
use crate::vertex_set::VertexSet;

use super::{vc_dimension_distance_r, SetSystem, VC_CAP};

#[derive(Clone, Debug, Serialize)]
pub struct RedBlueOutcome {
    pub solution: VertexSet,
    /// Size guess at which the reweighting succeeded, if it did.
    pub k_guess: Option<usize>,
    /// Whether the greedy set cover fallback produced the answer.
    pub fallback: bool,
}

/// Smallest-first greedy hitting set; `None` if some member is empty.
pub fn greedy_hitting_set(universe: usize, family: &[VertexSet]) -> Option<VertexSet> {
    if family.iter().any(VertexSet::is_empty) {
        return None;
    }
    let mut open: Vec<&VertexSet> = family.iter().collect();
    let mut chosen = VertexSet::new(universe);
    while !open.is_empty() {
        let mut hits = vec![0usize; universe];
        for s in &open {
            for v in s.iter() {
                hits[v] += 1;
            }
        }
        let best = (0..universe).max_by_key(|&v| (hits[v], std::cmp::Reverse(v)))?;
        chosen.insert(best);
        open.retain(|s| !s.contains(best));
    }
    Some(chosen)
}

/// Drops redundant elements: least useful first (fewest members hit, then
/// lightest, then smallest index).
fn prune(family: &[VertexSet], hitting: &mut VertexSet, weight: &dyn Fn(usize) -> f64) {
    let mut order: Vec<usize> = hitting.iter().collect();
    let coverage = |v: usize| family.iter().filter(|s| s.contains(v)).count();
    order.sort_by(|&a, &b| coverage(a).cmp(&coverage(b)).then(weight(a).total_cmp(&weight(b))).then(a.cmp(&b)));
    for v in order {
        hitting.remove(v);
        if !family.iter().all(|s| s.intersects(hitting)) {
            hitting.insert(v);
        }
    }
}

fn vc_estimate(g: &Digraph, r: usize) -> Result<usize> {
    let c = compute_wcol_order(g, r)?.bound;
    let bound = (r + 2) * (2 * c) * (2 * c);
    let est = if g.n() <= VC_CAP { vc_dimension_distance_r(g, r)?.0.min(bound) } else { bound };
    Ok(est.max(1))
}

/// A set `D ⊆ B` with `R ⊆ N^+_r(D)`. Hitting sets of `{N^-_r(v) ∩ B : v ∈ R}`
/// are searched with doubling size guesses `k'`; for each guess the blue
/// weights are doubled on the first member a weighted ε-net misses.
pub fn redblue_dominate_approx(
    g: &Digraph,
    red: &VertexSet,
    blue: &VertexSet,
    r: usize,
    seed: u64,
) -> Result<RedBlueOutcome> {
    let n = g.n();
    if red.universe() != n || blue.universe() != n {
        return Err(Error::arg("red/blue sets do not match the graph"));
    }
    let family = SetSystem::new(n, red.iter().map(|v| g.in_ball(v, r).expect("in range").intersection(blue))).sets;
    if family.iter().any(VertexSet::is_empty) {
        return Err(Error::Infeasible("some red vertex has no blue vertex within distance r".into()));
    }
    let finish = |d: VertexSet, k_guess, fallback| -> Result<RedBlueOutcome> {
        if !d.is_subset(blue) || !red.is_subset(&g.out_ball_of_set(&d, r)) {
            return Err(Error::internal("red-blue output does not dominate the red set"));
        }
        Ok(RedBlueOutcome { solution: d, k_guess, fallback })
    };
    if family.is_empty() {
        return finish(VertexSet::new(n), Some(0), false);
    }
    let blues: Vec<usize> = blue.iter().collect();
    let delta = vc_estimate(g, r)? as f64;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut kp = 1usize;
    while kp <= blues.len() {
        let mut weight = vec![1.0f64; n];
        let eps = 1.0 / (2.0 * kp as f64);
        let t = 8.0 * delta / eps;
        let sample_size = (t * t.ln()).ceil() as usize;
        let rounds = (4.0 * kp as f64 * (n as f64 / kp as f64 + 2.0).log2()).ceil() as usize;
        for _ in 0..rounds {
            let mut prefix = Vec::with_capacity(blues.len());
            let mut total = 0.0;
            for &b in &blues {
                total += weight[b];
                prefix.push(total);
            }
            let mut net = VertexSet::new(n);
            for draw in 0..sample_size {
                // once every blue vertex is in, further draws change nothing
                if draw % blues.len() == 0 && net.len() == blues.len() {
                    break;
                }
                let u = rng.gen::<f64>() * total;
                let i = prefix.partition_point(|&p| p <= u).min(blues.len() - 1);
                net.insert(blues[i]);
            }
            match family.iter().find(|s| !s.intersects(&net)) {
                None => {
                    prune(&family, &mut net, &|v| weight[v]);
                    return finish(net, Some(kp), false);
                }
                Some(missed) => {
                    for v in missed.iter() {
                        weight[v] *= 2.0;
                    }
                    let max = blues.iter().map(|&b| weight[b]).fold(0.0, f64::max);
                    if max > 1e200 {
                        for w in &mut weight {
                            *w /= 1e200;
                        }
                    }
                }
            }
        }
        kp *= 2;
    }
    let mut d = greedy_hitting_set(n, &family).expect("members are nonempty");
    prune(&family, &mut d, &|_| 1.0);
    finish(d, None, true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::{bidirected_star, random_digraph};

    #[test]
    fn single_dominator() {
        let g = bidirected_star(6);
        let out = redblue_dominate_approx(&g, &VertexSet::full(7), &VertexSet::full(7), 1, 3).unwrap();
        assert_eq!(out.solution.to_vec(), vec![0]);
    }

    #[test]
    fn empty_red() {
        let g = bidirected_star(3);
        let out = redblue_dominate_approx(&g, &VertexSet::new(4), &VertexSet::full(4), 1, 0).unwrap();
        assert!(out.solution.is_empty());
    }

    #[test]
    fn infeasible() {
        let g = Digraph::empty(3);
        let blue = VertexSet::from_iter_n(3, [0]);
        let res = redblue_dominate_approx(&g, &VertexSet::full(3), &blue, 2, 0);
        assert!(matches!(res, Err(Error::Infeasible(_))));
    }

    #[test]
    fn random_outputs_dominate() {
        for seed in 0..10 {
            let g = random_digraph(25, 60, seed).unwrap();
            let out = redblue_dominate_approx(&g, &VertexSet::full(25), &VertexSet::full(25), 2, seed).unwrap();
            assert!(g.out_ball_of_set(&out.solution, 2).len() == 25);
        }
    }
}
