mod common;

use common::digraph;
use proptest::prelude::*;
use sparse_digraph::duality::{
    closure, domination_core, dominator_or_scattered, independence_tree, kernelize, max_left_chain, projection,
    reduce_core, CoreMode, CoreOutcome, DualityResult, IndependenceTree, ReduceOutcome,
};
use sparse_digraph::instances::{apex_crown, random_digraph};
use sparse_digraph::oracles::{
    gamma_at_most, minimum_dominators, projection_by_paths, verify_dominating, verify_scattered,
};
use sparse_digraph::{Digraph, VertexSet};

/// Reference insertion: parent and side of every inserted vertex.
fn reference_tree(g: &Digraph, seq: &[usize], r: usize) -> Vec<Option<(usize, bool)>> {
    let mut parent: Vec<Option<(usize, bool)>> = Vec::new();
    for (i, &v) in seq.iter().enumerate() {
        if i == 0 {
            parent.push(None);
            continue;
        }
        let mut at = 0;
        loop {
            let right = !verify_scattered(g, &[seq[at], v], r) || seq[at] == v;
            let child = (0..i).find(|&j| parent[j] == Some((at, right)));
            match child {
                Some(c) => at = c,
                None => {
                    parent.push(Some((at, right)));
                    break;
                }
            }
        }
    }
    parent
}

fn in_left_subtree(parent: &[Option<(usize, bool)>], a: usize, b: usize) -> bool {
    let mut at = b;
    while let Some((p, right)) = parent[at] {
        if p == a {
            return !right;
        }
        at = p;
    }
    false
}

/// Longest set of nodes on one root-leaf path, pairwise in each other's
/// left subtrees, by trying every subset of every path.
fn brute_left_chain(parent: &[Option<(usize, bool)>]) -> usize {
    let n = parent.len();
    let leaves = (0..n).filter(|&v| !parent.iter().any(|p| p.is_some_and(|(q, _)| q == v)));
    let mut best = 0;
    for leaf in leaves {
        let mut path = vec![leaf];
        while let Some((p, _)) = parent[*path.last().unwrap()] {
            path.push(p);
        }
        path.reverse();
        for mask in 1u64..1 << path.len() {
            let picked: Vec<usize> = (0..path.len()).filter(|&i| mask >> i & 1 == 1).map(|i| path[i]).collect();
            let ok =
                (0..picked.len()).all(|i| (i + 1..picked.len()).all(|j| in_left_subtree(parent, picked[i], picked[j])));
            if ok {
                best = best.max(picked.len());
            }
        }
    }
    best
}

fn tree_matches(tree: &IndependenceTree, parent: &[Option<(usize, bool)>]) -> bool {
    tree.len() == parent.len()
        && tree.nodes.iter().enumerate().all(|(i, node)| {
            node.left.is_none_or(|c| parent[c] == Some((i, false)))
                && node.right.is_none_or(|c| parent[c] == Some((i, true)))
        })
}

#[test]
fn trees_match_reference_insertion() {
    for seed in 0..25 {
        let g = random_digraph(30, 30 + seed as usize % 20, seed).unwrap();
        let seq: Vec<usize> = (0..30).filter(|v| !(v * 7 + seed as usize).is_multiple_of(3)).collect();
        for r in 1..=2 {
            let tree = independence_tree(&g, &seq, r).unwrap();
            let parent = reference_tree(&g, &seq, r);
            assert!(tree_matches(&tree, &parent));
            tree.check_size_law().unwrap();
            let chain = max_left_chain(&tree);
            assert_eq!(chain.len(), brute_left_chain(&parent));
            assert!(verify_scattered(&g, &chain, r));
        }
    }
}

#[test]
fn projections_match_path_listing() {
    for seed in 0..20 {
        let g = random_digraph(12, 20, seed).unwrap();
        let x = VertexSet::from_iter_n(12, (0..12).filter(|v| (v + seed as usize).is_multiple_of(3)));
        for u in (0..12).filter(|&u| !x.contains(u)) {
            for r in 1..=3 {
                assert_eq!(projection(&g, u, &x, r).unwrap(), projection_by_paths(&g, u, &x, r));
            }
        }
    }
}

#[test]
fn closures_cap_projections() {
    for seed in 0..20 {
        let n = 10 + seed as usize % 11;
        let g = random_digraph(n, 2 * n, seed).unwrap();
        let x = VertexSet::from_iter_n(n, (0..n).filter(|v| (v + seed as usize).is_multiple_of(4)));
        for r in 1..=2 {
            let c = closure(&g, &x, r).unwrap();
            assert!(!c.set.intersects(&x));
            assert!(c.set.len() <= (r - 1) * c.xi * x.len());
            let rest = g.without_vertices(&c.set);
            for u in (0..n).filter(|&u| !x.contains(u) && !c.set.contains(u)) {
                assert!(projection_by_paths(&rest, u, &x, r).len() <= c.xi);
            }
        }
    }
}

#[test]
fn duality_branches_against_oracles() {
    let mut scattered = 0;
    for seed in 0..40 {
        let n = 8 + seed as usize % 7;
        let g = random_digraph(n, n + seed as usize % n, seed).unwrap();
        let x = VertexSet::full(n);
        for r in 1..=2 {
            let k = 1 + seed as usize % 3;
            let (res, run) = dominator_or_scattered(&g, &x, r, k).unwrap();
            assert!(verify_dominating(&g, &run.dominator, r, &x));
            match res {
                DualityResult::Dominating(d) => assert!(verify_dominating(&g, &d, r, &x)),
                DualityResult::Scattered(w) => {
                    assert_eq!(w.len(), k + 1);
                    assert!(verify_scattered(&g, &w, r));
                    assert!(gamma_at_most(&g, r, Some(&x), k).is_none());
                    scattered += 1;
                }
            }
        }
    }
    assert!(scattered > 0);
    let g = apex_crown(6).unwrap();
    match dominator_or_scattered(&g, &VertexSet::full(g.n()), 1, 1).unwrap().0 {
        DualityResult::Dominating(d) => assert!(verify_dominating(&g, &d, 1, &VertexSet::full(g.n()))),
        DualityResult::Scattered(w) => assert!(verify_scattered(&g, &w, 1) && w.len() == 2),
    }
}

/// Every minimum dominator of `z` dominates everything, provided a small
/// enough one exists.
fn is_core(g: &Digraph, z: &VertexSet, r: usize, k: usize) -> bool {
    if gamma_at_most(g, r, Some(z), k).is_none() {
        return true;
    }
    let all = VertexSet::full(g.n());
    minimum_dominators(g, r, z).unwrap().iter().all(|d| verify_dominating(g, d, r, &all))
}

/// Adds arcs from vertex 0 to every third vertex and from vertex 1 to the
/// rest, so that two vertices dominate and large equal-profile classes
/// appear.
fn with_hubs(g: &Digraph, seed: u64) -> Digraph {
    let n = g.n();
    let hub = |v: usize| if (v + seed as usize).is_multiple_of(3) { 0 } else { 1 };
    Digraph::from_arcs_lossy(n, g.arcs().chain((2..n).map(|v| (hub(v), v))))
}

#[test]
fn removed_vertices_keep_the_core() {
    let mut removals = 0;
    for seed in 0..40 {
        let n = 10 + seed as usize % 5;
        let g = with_hubs(&random_digraph(n, n / 2 + seed as usize % n, seed).unwrap(), seed);
        for k in 1..=2 {
            let full = VertexSet::full(n);
            if let ReduceOutcome::Removable { z, .. } = reduce_core(&g, &full, 1, k, CoreMode::Observed).unwrap() {
                let mut rest = full.clone();
                rest.remove(z);
                assert!(is_core(&g, &rest, 1, k), "seed {seed} k {k} z {z}");
                removals += 1;
            }
            match domination_core(&g, 1, k, CoreMode::Observed).unwrap() {
                CoreOutcome::Core(dc) => assert!(is_core(&g, &dc.core, 1, k)),
                CoreOutcome::NoInstance { witness } => {
                    assert!(verify_scattered(&g, &witness, 1));
                    assert!(witness.len() > k);
                }
            }
        }
    }
    assert!(removals > 0);
}

#[test]
fn named_cores() {
    let star = Digraph::from_arcs(7, (1..7).map(|l| (0, l))).unwrap();
    let g = apex_crown(6).unwrap();
    for (g, k) in [(&star, 1), (&g, 3)] {
        match domination_core(g, 1, k, CoreMode::Observed).unwrap() {
            CoreOutcome::Core(dc) => assert!(is_core(g, &dc.core, 1, k)),
            CoreOutcome::NoInstance { .. } => panic!("instance has a small dominator"),
        }
    }
    match reduce_core(&Digraph::empty(5), &VertexSet::full(5), 1, 2, CoreMode::Observed).unwrap() {
        ReduceOutcome::NoInstance { witness } => {
            assert!(witness.len() == 3 && verify_scattered(&Digraph::empty(5), &witness, 1))
        }
        other => panic!("unexpected {other:?}"),
    }
}

#[test]
fn kernels_preserve_decisions() {
    for seed in 0..30 {
        let n = 8 + seed as usize % 7;
        let g = random_digraph(n, n / 2 + seed as usize % (2 * n), seed).unwrap();
        let g = if seed % 2 == 0 { with_hubs(&g, seed) } else { g };
        let r = 1 + seed as usize % 2;
        let k = 1 + seed as usize % 3;
        let before = gamma_at_most(&g, r, None, k).is_some();
        let kernel = kernelize(&g, r, k, CoreMode::Observed).unwrap();
        let after = gamma_at_most(&kernel.graph, r, None, kernel.budget).is_some();
        assert_eq!(before, after, "seed {seed}");
        assert_eq!(kernel.infeasible, kernel.witness.is_some());
        if kernel.infeasible {
            assert!(!before);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn chains_are_scattered(g in digraph(1, 20, 2), r in 1usize..3) {
        let seq: Vec<usize> = g.vertices().collect();
        let tree = independence_tree(&g, &seq, r).unwrap();
        prop_assert!(tree.check_size_law().is_ok());
        prop_assert!(verify_scattered(&g, &max_left_chain(&tree), r));
    }
}
