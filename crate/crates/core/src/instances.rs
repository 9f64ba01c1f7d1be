//! Generators for the named digraph families and seeded random digraphs.
//!
//! Vertex numbering of the crown `S_q`: principal vertices `v_1..v_q` are
//! `0..q`; subdivision vertices `v_ij` (`i < j`) follow in lexicographic
//! order of `(i, j)`. `apex_crown` appends the apex as the last vertex.

use std::fmt;

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Digraph;

/// Directed path `0 -> 1 -> ... -> n-1`.
pub fn directed_path(n: usize) -> Result<Digraph> {
    if n == 0 {
        return Err(Error::arg("directed path needs at least one vertex"));
    }
    Digraph::from_arcs(n, (1..n).map(|i| (i - 1, i)))
}

fn crown_arcs(q: usize) -> Vec<(usize, usize)> {
    let mut arcs = Vec::with_capacity(q * (q - 1));
    let mut sub = q;
    for i in 0..q {
        for j in i + 1..q {
            arcs.push((sub, i));
            arcs.push((sub, j));
            sub += 1;
        }
    }
    arcs
}

/// Index of the subdivision vertex `v_ij` (0-based `i < j`) in `crown(q)`.
pub fn crown_subdivision_vertex(q: usize, i: usize, j: usize) -> usize {
    assert!(i < j && j < q);
    // pairs (a, b) with a < i come first: sum_{a<i} (q-1-a)
    q + i * (2 * q - i - 1) / 2 + (j - i - 1)
}

/// Crown `S_q`: the 1-subdivision of `K_q` with arcs leaving the
/// subdivision vertices.
pub fn crown(q: usize) -> Result<Digraph> {
    if q < 2 {
        return Err(Error::arg("crown order must be at least 2"));
    }
    Digraph::from_arcs(q + q * (q - 1) / 2, crown_arcs(q))
}

/// Crown `S_n` plus an apex with an arc to every subdivision vertex.
pub fn apex_crown(n: usize) -> Result<Digraph> {
    if n < 2 {
        return Err(Error::arg("apex crown order must be at least 2"));
    }
    let subdivisions = n * (n - 1) / 2;
    let apex = n + subdivisions;
    let mut arcs = crown_arcs(n);
    arcs.extend((n..apex).map(|w| (apex, w)));
    Digraph::from_arcs(apex + 1, arcs)
}

/// Every ordered pair of distinct vertices.
pub fn bidirected_clique(n: usize) -> Result<Digraph> {
    if n == 0 {
        return Err(Error::arg("clique needs at least one vertex"));
    }
    Digraph::from_arcs(n, (0..n).flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v))))
}

/// Center `0` joined both ways to leaves `1..=leaves`.
pub fn bidirected_star(leaves: usize) -> Digraph {
    Digraph::from_arcs(leaves + 1, (1..=leaves).flat_map(|l| [(0, l), (l, 0)])).expect("star is simple")
}

/// `m` distinct arcs drawn uniformly without replacement. Identical
/// `(n, m, seed)` give identical graphs.
pub fn random_digraph(n: usize, m: usize, seed: u64) -> Result<Digraph> {
    let pairs = n * n.saturating_sub(1);
    if m > pairs {
        return Err(Error::arg(format!("{m} arcs requested but only {pairs} ordered pairs exist")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut picked: Vec<usize> = sample(&mut rng, pairs, m).into_vec();
    picked.sort_unstable();
    let arcs = picked.into_iter().map(|idx| {
        let u = idx / (n - 1);
        let k = idx % (n - 1);
        (u, if k < u { k } else { k + 1 })
    });
    Digraph::from_arcs(n, arcs)
}

/// Seeded Steiner instance on a random digraph: root `0`, `terminals`
/// further vertices drawn at random, and when `cycle` holds, a directed
/// cycle through the first `min(3, terminals)` of them so that `G[T]` has a
/// nontrivial strong component.
pub fn random_dst_instance(
    n: usize,
    m: usize,
    terminals: usize,
    budget: usize,
    cycle: bool,
    seed: u64,
) -> Result<crate::steiner::DstInstance> {
    if terminals + 1 > n {
        return Err(Error::arg(format!("{terminals} terminals do not fit beside a root in {n} vertices")));
    }
    let base = random_digraph(n, m, seed)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
    let mut picked: Vec<usize> = sample(&mut rng, n - 1, terminals).into_iter().map(|i| i + 1).collect();
    picked.sort_unstable();
    let mut arcs: Vec<(usize, usize)> = base.arcs().collect();
    let ring = terminals.min(3);
    if cycle && ring >= 2 {
        arcs.extend((0..ring).map(|i| (picked[i], picked[(i + 1) % ring])));
    }
    let g = Digraph::from_arcs_lossy(n, arcs);
    let t = crate::vertex_set::VertexSet::from_iter_n(n, picked);
    crate::steiner::DstInstance::new(g, 0, t, budget)
}

/// Seeded red-blue instance `(G, R, B)` on a random digraph: `hubs` blue
/// vertices are drawn first and the red vertices are drawn from their
/// `r`-out-balls, so `B` dominates `R` with at most `hubs` vertices.
pub fn random_redblue(
    n: usize,
    m: usize,
    r: usize,
    hubs: usize,
    seed: u64,
) -> Result<(Digraph, crate::vertex_set::VertexSet, crate::vertex_set::VertexSet)> {
    use crate::vertex_set::VertexSet;
    if hubs == 0 || hubs > n {
        return Err(Error::arg(format!("{hubs} hubs do not fit in {n} vertices")));
    }
    let g = random_digraph(n, m, seed)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xb1e);
    let order = sample(&mut rng, n, n).into_vec();
    let hub_set = VertexSet::from_iter_n(n, order[..hubs].iter().copied());
    let blue = VertexSet::from_iter_n(n, order[..hubs + (n - hubs) / 2].iter().copied());
    let reach = g.out_ball_of_set(&hub_set, r);
    let red = VertexSet::from_iter_n(n, reach.iter().filter(|&v| !(v as u64 ^ seed).is_multiple_of(3)));
    Ok((g, red, blue))
}

/// A reproducible description of an instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum InstanceRecipe {
    Path { n: usize },
    Crown { q: usize },
    ApexCrown { n: usize },
    Random { n: usize, m: usize, seed: u64 },
    BidirectedClique { n: usize },
}

impl InstanceRecipe {
    pub fn build(&self) -> Result<Digraph> {
        match *self {
            InstanceRecipe::Path { n } => directed_path(n),
            InstanceRecipe::Crown { q } => crown(q),
            InstanceRecipe::ApexCrown { n } => apex_crown(n),
            InstanceRecipe::Random { n, m, seed } => random_digraph(n, m, seed),
            InstanceRecipe::BidirectedClique { n } => bidirected_clique(n),
        }
    }
}

impl fmt::Display for InstanceRecipe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InstanceRecipe::Path { n } => write!(f, "path n={n}"),
            InstanceRecipe::Crown { q } => write!(f, "crown q={q}"),
            InstanceRecipe::ApexCrown { n } => write!(f, "apex-crown n={n}"),
            InstanceRecipe::Random { n, m, seed } => write!(f, "random n={n} m={m} seed={seed}"),
            InstanceRecipe::BidirectedClique { n } => write!(f, "bidirected-clique n={n}"),
        }
    }
}
