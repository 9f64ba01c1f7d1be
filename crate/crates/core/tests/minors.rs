mod common;

use common::digraph;
use num_rational::Ratio;
use proptest::prelude::*;
use sparse_digraph::instances::{apex_crown, bidirected_clique, crown, directed_path, random_digraph};
use sparse_digraph::minors::{check_model, contains_crown, grad, grad_lower_bound, is_depth_r_minor, top_grad};
use sparse_digraph::Digraph;

/// Injective arc-preserving maps, i.e. subgraph containment.
fn embeds(h: &Digraph, g: &Digraph) -> bool {
    fn go(h: &Digraph, g: &Digraph, image: &mut Vec<usize>) -> bool {
        let i = image.len();
        if i == h.n() {
            return true;
        }
        for x in g.vertices() {
            if image.contains(&x) {
                continue;
            }
            let fits = h.arcs().all(|(a, b)| {
                let map = |v: usize| if v == i { Some(x) } else { image.get(v).copied() };
                match (map(a), map(b)) {
                    (Some(p), Some(q)) if a == i || b == i => g.has_arc(p, q),
                    _ => true,
                }
            });
            if fits {
                image.push(x);
                if go(h, g, image) {
                    return true;
                }
                image.pop();
            }
        }
        false
    }
    go(h, g, &mut Vec::new())
}

#[test]
fn depth_zero_minors_are_subgraphs() {
    let patterns = [
        Digraph::from_arcs(3, [(0, 1), (1, 2), (2, 0)]).unwrap(),
        Digraph::from_arcs(3, [(0, 1), (0, 2)]).unwrap(),
        Digraph::from_arcs(3, [(0, 1), (1, 0), (1, 2)]).unwrap(),
        Digraph::from_arcs(4, [(0, 1), (1, 2), (2, 3)]).unwrap(),
    ];
    for seed in 0..15 {
        let g = random_digraph(7, 8 + seed as usize % 8, seed).unwrap();
        for h in &patterns {
            let found = is_depth_r_minor(h, &g, 0).unwrap();
            assert_eq!(found.is_some(), embeds(h, &g), "seed {seed}");
            if let Some(m) = found {
                check_model(h, &g, &m).unwrap();
            }
        }
    }
}

#[test]
fn named_crown_cases() {
    assert!(contains_crown(&apex_crown(4).unwrap(), 4, 0).unwrap());
    assert!(contains_crown(&crown(3).unwrap(), 3, 0).unwrap());
    let sub = is_depth_r_minor(&crown(3).unwrap(), &apex_crown(3).unwrap(), 0).unwrap().unwrap();
    check_model(&crown(3).unwrap(), &apex_crown(3).unwrap(), &sub).unwrap();
    for r in 0..=3 {
        assert!(!contains_crown(&directed_path(8).unwrap(), 3, r).unwrap());
    }
}

#[test]
fn subdivided_triangle_is_recovered() {
    let g = Digraph::from_arcs(6, [(0, 3), (3, 1), (1, 4), (4, 2), (2, 5), (5, 0)]).unwrap();
    assert!(top_grad(&g, 1).unwrap() >= Ratio::from_integer(1));
    let tri = Digraph::from_arcs(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
    assert_eq!(grad(&tri, 0).unwrap(), Ratio::from_integer(1));
    assert_eq!(grad_lower_bound(&bidirected_clique(4).unwrap()), Ratio::from_integer(3));
}

#[test]
fn reversal_keeps_grad() {
    for seed in 0..8 {
        let g = random_digraph(6, 7 + seed as usize % 5, seed).unwrap();
        for r in 0..=1 {
            assert_eq!(grad(&g, r).unwrap(), grad(&g.reverse(), r).unwrap());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn densities_are_ordered(g in digraph(1, 6, 2)) {
        let n = g.n() as u64;
        let g0 = grad(&g, 0).unwrap();
        let g1 = grad(&g, 1).unwrap();
        prop_assert!(g0 >= Ratio::new(g.m() as u64, n));
        prop_assert!(g0 <= g1);
        prop_assert!(grad_lower_bound(&g) <= g0);
        prop_assert!(top_grad(&g, 1).unwrap() <= g1);
        let fewer = Digraph::from_arcs(g.n(), g.arcs().skip(1)).unwrap();
        prop_assert!(grad(&fewer, 1).unwrap() <= g1);
    }

    #[test]
    fn found_models_validate(g in digraph(3, 8, 2), h in digraph(2, 3, 2), r in 0usize..3) {
        if let Some(m) = is_depth_r_minor(&h, &g, r).unwrap() {
            prop_assert!(check_model(&h, &g, &m).is_ok());
            prop_assert!(is_depth_r_minor(&h, &g, r + 1).unwrap().is_some());
        }
    }
}
