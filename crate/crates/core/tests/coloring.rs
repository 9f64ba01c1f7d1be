mod common;

use common::{digraph, longest_path};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sparse_digraph::coloring::{
    adm_exact, adm_of_order, check_augmentation, compute_wcol_order, low_treedepth_coloring, order_from_augmentation,
    tfa_augment, wcol_exact, wcol_infty_exact, wcol_of_order, wreach, wreach_all,
};
use sparse_digraph::instances::{apex_crown, bidirected_star, directed_path, random_digraph};
use sparse_digraph::oracles::{paths_from, wcol_by_permutations, wreach_by_paths};
use sparse_digraph::{Digraph, LinearOrder, VertexSet};

fn shuffled(n: usize, seed: u64) -> LinearOrder {
    let mut seq: Vec<usize> = (0..n).collect();
    seq.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    LinearOrder::from_sequence(seq).unwrap()
}

fn order_strategy(n: usize) -> impl Strategy<Value = LinearOrder> {
    any::<u64>().prop_map(move |seed| shuffled(n, seed))
}

fn graph_and_order(lo: usize, hi: usize) -> impl Strategy<Value = (Digraph, LinearOrder)> {
    digraph(lo, hi, 3).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), order_strategy(n))
    })
}

fn covered(h: &Digraph, u: usize, v: usize) -> bool {
    h.has_arc(u, v) || h.has_arc(v, u) || h.out_neighbors(u).iter().any(|&w| h.has_arc(v, w))
}

// A valid depth-3 augmentation that leaves the ends of a 3-path unjoined:
// E_1 turns the arc 11 -> 9 into 9 -> 11, so 0 -> 9 -> 11 is a transitive
// pair whose ends are at distance 3, more than the pair's depth allows.
#[test]
fn three_step_paths_can_escape_the_augmentation() {
    let out: [&[usize]; 12] = [&[9], &[], &[], &[], &[6, 9], &[4], &[2, 5], &[6], &[2, 9, 11], &[8], &[], &[9]];
    let g = Digraph::from_arcs(12, out.iter().enumerate().flat_map(|(u, vs)| vs.iter().map(move |&v| (u, v)))).unwrap();
    let aug = tfa_augment(&g, 3).unwrap();
    check_augmentation(&g, &aug).unwrap();
    assert!(!covered(&aug.union_graph().unwrap(), 0, 11));
    let ord = order_from_augmentation(&g, &aug).unwrap();
    assert!(wcol_of_order(&g, &ord.order, 3) <= ord.bound);
}

#[test]
fn middle_first_on_a_path() {
    let g = directed_path(3).unwrap();
    let l = LinearOrder::from_sequence(vec![1, 0, 2]).unwrap();
    assert_eq!(wreach(&g, &l, 2, 2).to_vec(), vec![1, 2]);
    assert_eq!(wreach(&g, &l, 0, 1).to_vec(), vec![0, 1]);
    assert_eq!(wreach_by_paths(&g, &l, 2, 2).to_vec(), vec![1, 2]);
}

#[test]
fn exact_matches_permutation_oracle() {
    for seed in 0..12 {
        let g = random_digraph(6, 5 + seed as usize % 8, seed).unwrap();
        for r in 1..=3 {
            assert_eq!(wcol_exact(&g, r).unwrap().0, wcol_by_permutations(&g, r).unwrap());
        }
    }
}

#[test]
fn sampled_orders_never_beat_exact() {
    for seed in 0..15 {
        let g = random_digraph(8, 12, seed).unwrap();
        for r in 1..=3 {
            let (best, witness) = wcol_exact(&g, r).unwrap();
            assert_eq!(wcol_of_order(&g, &witness, r), best);
            for s in 0..10 {
                assert!(wcol_of_order(&g, &shuffled(8, s), r) >= best);
            }
        }
    }
}

#[test]
fn exact_values_shrink_on_subgraphs() {
    for seed in 0..10 {
        let g = random_digraph(7, 12, seed).unwrap();
        let drop = VertexSet::from_iter_n(7, [seed as usize % 7]);
        let (h, _) = g.induced_subgraph(&drop.complement());
        let fewer = Digraph::from_arcs(7, g.arcs().skip(2)).unwrap();
        for r in 1..=2 {
            let (w, _) = wcol_exact(&g, r).unwrap();
            let (a, _) = adm_exact(&g, r).unwrap();
            for sub in [&h, &fewer] {
                assert!(wcol_exact(sub, r).unwrap().0 <= w);
                assert!(adm_exact(sub, r).unwrap().0 <= a);
            }
        }
    }
}

// The trivial path at v is not counted by `adm`, so the classical bound
// reads with `adm + 1`.
#[test]
fn wcol_is_bounded_by_admissibility() {
    for seed in 0..40 {
        let n = 3 + seed as usize % 5;
        let g = random_digraph(n, (seed as usize * 7) % (n * (n - 1) + 1), seed).unwrap();
        for r in 1..=3 {
            let (w, _) = wcol_exact(&g, r).unwrap();
            let (a, _) = adm_exact(&g, r).unwrap();
            assert!(w <= 2 * (a + 1).pow(r as u32), "seed {seed} r {r}: wcol {w} adm {a}");
        }
    }
}

#[test]
fn in_star_admissibility_counts_leaves() {
    let g = bidirected_star(4).reverse();
    let l = LinearOrder::from_sequence(vec![1, 2, 3, 4, 0]).unwrap();
    assert_eq!(adm_of_order(&g, &l, 0, 1), 4);
    assert_eq!(adm_of_order(&Digraph::empty(3), &LinearOrder::identity(3), 2, 2), 0);
}

#[test]
fn tree_depth_caps_directed_paths() {
    for seed in 0..12 {
        let g = random_digraph(7, 6 + seed as usize % 6, seed).unwrap();
        let (c, _) = wcol_infty_exact(&g).unwrap();
        assert!(longest_path(&g) + 2 <= 1 << c);
    }
}

#[test]
fn augmentations_pass_the_checker() {
    for seed in 0..30 {
        let n = 10 + seed as usize % 21;
        let g = random_digraph(n, n + (seed as usize * 5) % (2 * n), seed).unwrap();
        for r in 1..=3 {
            let aug = tfa_augment(&g, r).unwrap();
            check_augmentation(&g, &aug).unwrap();
            let ord = order_from_augmentation(&g, &aug).unwrap();
            assert!(wcol_of_order(&g, &ord.order, r) <= ord.bound);
        }
    }
}

#[test]
fn named_guarantees_hold() {
    let cases = [(directed_path(8).unwrap(), 3), (directed_path(16).unwrap(), 4), (apex_crown(5).unwrap(), 2)];
    for (g, r) in cases {
        let ord = compute_wcol_order(&g, r).unwrap();
        assert!(wcol_of_order(&g, &ord.order, r) <= ord.bound);
    }
    assert_eq!(compute_wcol_order(&Digraph::empty(5), 2).unwrap().bound, 1);
}

#[test]
fn augmentation_degree_against_optimal_orders() {
    for seed in 0..15 {
        let g = random_digraph(8, 10 + seed as usize % 6, seed).unwrap();
        for r in 1..=3 {
            let (c, l) = wcol_exact(&g, r).unwrap();
            let aug = tfa_augment(&g, r).unwrap();
            let h = aug.union_graph().unwrap();
            let f = |i: u32| 4u64.pow(i - 1) * (2 * c as u64).pow(1 << (i - 1));
            assert!(h.max_out_degree() as u64 <= f(r as u32), "seed {seed} r {r}");
            // pairs oriented differently in the augmentation and in the
            // weak reachability relation of an optimal order
            for i in 1..=r {
                let e = Digraph::from_arcs_lossy(8, aug.layers[..i].iter().flatten().copied());
                let wr = wreach_all(&g, &l, i);
                let fi = Digraph::from_arcs_lossy(
                    8,
                    g.vertices().flat_map(|v| wr[v].iter().filter(move |&u| u != v).map(move |u| (v, u))),
                );
                for v in g.vertices() {
                    let mismatched = g
                        .vertices()
                        .filter(|&u| u != v)
                        .filter(|&u| e.has_arc(u, v) != fi.has_arc(u, v) || e.has_arc(v, u) != fi.has_arc(v, u))
                        .count();
                    assert!(mismatched as u64 <= f(i as u32), "seed {seed} r {r} i {i} v {v}");
                }
            }
        }
    }
}

#[test]
fn single_color_classes_are_trivial() {
    for seed in 0..20 {
        let g = random_digraph(12, 18, seed).unwrap();
        for p in 1..=2 {
            let col = low_treedepth_coloring(&g, p).unwrap();
            assert!(col.num_colors <= col.guarantee);
            for color in 0..col.num_colors {
                let keep = VertexSet::from_iter_n(12, (0..12).filter(|&v| col.colors[v] == color));
                let (h, old) = g.induced_subgraph(&keep);
                assert!(wcol_of_order(&h, &col.order.restrict(&old), 1 << p) <= 1);
            }
        }
    }
}

#[test]
fn few_color_classes_exclude_long_paths() {
    let mut graphs: Vec<Digraph> =
        (0..40).map(|s| random_digraph(6 + s as usize % 10, 12 + s as usize % 9, s).unwrap()).collect();
    graphs.push(directed_path(15).unwrap());
    for g in &graphs {
        for p in 1..=2usize {
            let col = low_treedepth_coloring(g, p).unwrap();
            for mask in 1u32..1 << col.num_colors {
                if mask.count_ones() as usize > p {
                    continue;
                }
                let keep = VertexSet::from_iter_n(g.n(), g.vertices().filter(|&v| mask >> col.colors[v] & 1 == 1));
                let (h, _) = g.induced_subgraph(&keep);
                assert!(longest_path(&h) < 1 << p);
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn wreach_matches_path_listing((g, l) in graph_and_order(1, 10), r in 0usize..4) {
        let all = wreach_all(&g, &l, r);
        for v in g.vertices() {
            let want = wreach_by_paths(&g, &l, v, r);
            prop_assert_eq!(&wreach(&g, &l, v, r), &want);
            prop_assert_eq!(&all[v], &want);
        }
    }

    #[test]
    fn wreach_grows_with_radius((g, l) in graph_and_order(1, 12), r in 0usize..4) {
        for v in g.vertices() {
            prop_assert!(wreach(&g, &l, v, r).is_subset(&wreach(&g, &l, v, r + 1)));
        }
    }

    #[test]
    fn paths_are_separated((g, l) in graph_and_order(1, 9), r in 1usize..4) {
        let sets = wreach_all(&g, &l, r);
        for u in g.vertices() {
            for p in paths_from(&g, u, r, true) {
                let v = *p.last().unwrap();
                prop_assert!(p.iter().any(|&x| sets[u].contains(x) && sets[v].contains(x)));
            }
        }
    }

    #[test]
    fn augmentations_cover_two_step_paths(g in digraph(2, 12, 2), r in 2usize..4) {
        let aug = tfa_augment(&g, r).unwrap();
        prop_assert!(check_augmentation(&g, &aug).is_ok());
        let h = aug.union_graph().unwrap();
        for u in g.vertices() {
            for p in paths_from(&g, u, 2, true).into_iter().filter(|p| p.len() > 1) {
                prop_assert!(covered(&h, u, *p.last().unwrap()), "path {:?}", p);
            }
        }
    }

    #[test]
    fn order_bound_holds(g in digraph(1, 30, 3), r in 1usize..4) {
        let ord = compute_wcol_order(&g, r).unwrap();
        prop_assert!(wcol_of_order(&g, &ord.order, r) <= ord.bound);
    }
}
