//! The acceptance suite: eleven criteria, each a self-contained check with
//! a wall-clock limit, shared by the `acceptance` test target and
//! `sdg selftest`.

use std::time::{Duration, Instant};

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sparse_digraph::coloring::{
    adm_exact, check_augmentation, order_from_augmentation, tfa_augment, wcol_exact, wcol_of_order,
};
use sparse_digraph::domination::{neighborhood_complexity, redblue_dominate_approx, vc_dimension_distance_r};
use sparse_digraph::duality::{dominator_or_scattered, kernelize, CoreMode, DualityResult};
use sparse_digraph::instances::{apex_crown, directed_path, random_digraph, random_dst_instance, random_redblue};
use sparse_digraph::oracles::{
    dst_exact_enum, gamma_at_most, scattered_of_size, scss_exact, verify_dominating, verify_scattered,
    verify_strongly_connected,
};
use sparse_digraph::scc::scc;
use sparse_digraph::steiner::{dst_fpt, node_bound, scss_2approx};
use sparse_digraph::{Digraph, LinearOrder, VertexSet};

pub type Check = fn() -> Result<String, String>;

pub struct Criterion {
    pub id: usize,
    pub name: &'static str,
    pub limit: Duration,
    pub check: Check,
}

#[derive(Clone, Debug, serde::Serialize)]
pub struct Verdict {
    pub id: usize,
    pub name: &'static str,
    pub pass: bool,
    pub seconds: f64,
    pub limit_seconds: f64,
    pub detail: String,
}

impl Verdict {
    pub fn line(&self) -> String {
        format!(
            "criterion {:>2} {} {:<34} {:>8.2}s/{:.0}s  {}",
            self.id,
            if self.pass { "PASS" } else { "FAIL" },
            self.name,
            self.seconds,
            self.limit_seconds,
            self.detail
        )
    }
}

pub fn criteria() -> Vec<Criterion> {
    let c = |id, name, secs, check| Criterion { id, name, limit: Duration::from_secs(secs), check };
    vec![
        c(1, "apex-crown counterexample", 10, apex_crown_values),
        c(2, "directed tree-depth of paths", 60, path_tree_depth),
        c(3, "augmentation order guarantee", 120, augmentation_orders),
        c(4, "neighborhood complexity", 120, complexity_bound),
        c(5, "distance-r VC bound", 300, vc_bound),
        c(6, "directed Steiner tree", 300, steiner_against_oracle),
        c(7, "SCSS factor two", 300, scss_factor),
        c(8, "red-blue approximation", 180, redblue_ratio),
        c(9, "duality pipeline", 180, duality_pipeline),
        c(10, "kernel soundness", 300, kernel_soundness),
        c(11, "monotonicity", 60, monotonicity),
    ]
}

pub fn run(criterion: &Criterion) -> Verdict {
    let start = Instant::now();
    let outcome = std::panic::catch_unwind(criterion.check).unwrap_or_else(|e| {
        let msg = e
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_else(|| "panic".into());
        Err(format!("panicked: {msg}"))
    });
    let elapsed = start.elapsed();
    let (mut pass, mut detail) = match outcome {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    if elapsed > criterion.limit {
        pass = false;
        detail = format!("over time limit; {detail}");
    }
    Verdict {
        id: criterion.id,
        name: criterion.name,
        pass,
        seconds: elapsed.as_secs_f64(),
        limit_seconds: criterion.limit.as_secs_f64(),
        detail,
    }
}

pub fn run_all() -> Vec<Verdict> {
    criteria().iter().map(run).collect()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err(e: sparse_digraph::Error) -> String {
    e.to_string()
}

/// The seeded random corpus: 100 digraphs with `5..=40` vertices and at
/// most `3n` arcs.
pub fn corpus() -> Vec<Digraph> {
    (0..100u64)
        .map(|i| {
            let n = 5 + (i as usize * 7) % 36;
            let m = (n * (1 + i as usize % 3)).min(3 * n).min(n * (n - 1));
            random_digraph(n, m, 1000 + i).expect("arc count within range")
        })
        .collect()
}

fn random_subset(n: usize, size: usize, seed: u64) -> VertexSet {
    VertexSet::from_iter_n(n, sample(&mut ChaCha8Rng::seed_from_u64(seed), n, size.min(n)))
}

fn apex_crown_values() -> Result<String, String> {
    for n in 4..=12 {
        let g = apex_crown(n).map_err(err)?;
        let gamma = n.div_ceil(2) + 1;
        let d = gamma_at_most(&g, 1, None, gamma + 1).ok_or(format!("n={n}: no dominator of size {}", gamma + 1))?;
        ensure(d.len() == gamma, || format!("n={n}: gamma_1 = {}, expected {gamma}", d.len()))?;
        ensure(scattered_of_size(&g, 1, None, 2).is_some(), || format!("n={n}: alpha_1 < 2"))?;
        ensure(scattered_of_size(&g, 1, None, 3).is_none(), || format!("n={n}: alpha_1 > 2"))?;
    }
    Ok("gamma_1 = ceil(n/2)+1 and alpha_1 = 2 for n = 4..12".into())
}

fn path_tree_depth() -> Result<String, String> {
    for n in 1..=8usize {
        let (w, l) = wcol_exact(&directed_path(n).map_err(err)?, n).map_err(err)?;
        let want = (usize::BITS - n.leading_zeros()) as usize; // ceil(log2(n+1))
        ensure(w == want, || format!("n={n}: wcol_inf = {w}, expected {want}"))?;
        ensure(wcol_of_order(&directed_path(n).map_err(err)?, &l, n) == w, || {
            format!("n={n}: witness order disagrees")
        })?;
    }
    Ok("wcol_n(P_n) = ceil(log2(n+1)) for n = 1..8".into())
}

fn augmentation_orders() -> Result<String, String> {
    let mut worst = 0f64;
    for (i, g) in corpus().iter().enumerate() {
        for r in 1..=3 {
            let aug = tfa_augment(g, r).map_err(err)?;
            check_augmentation(g, &aug).map_err(|e| format!("graph {i} r={r}: {e}"))?;
            let ord = order_from_augmentation(g, &aug).map_err(err)?;
            let w = wcol_of_order(g, &ord.order, r);
            ensure(w <= ord.bound, || format!("graph {i} r={r}: wcol {w} above bound {}", ord.bound))?;
            worst = worst.max(w as f64 / ord.bound as f64);
        }
    }
    Ok(format!("300 runs; largest wcol/bound ratio {worst:.2}"))
}

fn complexity_bound() -> Result<String, String> {
    let mut checks = 0;
    for (i, g) in corpus().iter().enumerate() {
        for r in 1..=3 {
            let c = sparse_digraph::coloring::compute_wcol_order(g, r).map_err(err)?.bound;
            for s in 0..3u64 {
                let size = 1 + (i + s as usize) % 10;
                let x = random_subset(g.n(), size, i as u64 * 31 + s);
                let nu = neighborhood_complexity(g, &x, r);
                let bound = (((r + 2) * c * x.len()) as f64).powi(c as i32);
                ensure(nu as f64 <= bound, || format!("graph {i} r={r}: nu {nu} above bound {bound}"))?;
                checks += 1;
            }
        }
    }
    Ok(format!("{checks} subsets within ((r+2) c |X|)^c"))
}

fn vc_bound() -> Result<String, String> {
    let small: Vec<Digraph> = corpus().into_iter().filter(|g| g.n() <= 8).collect();
    ensure(!small.is_empty(), || "no small instances in the corpus".into())?;
    let mut worst = 0;
    for g in &small {
        for r in 1..=3 {
            let (c, _) = wcol_exact(g, r).map_err(err)?;
            let (vc, _) = vc_dimension_distance_r(g, r).map_err(err)?;
            ensure(vc <= (r + 2) * 4 * c * c, || format!("VC {vc} above bound for c={c}"))?;
            worst = worst.max(vc);
        }
    }
    Ok(format!("{} instances; largest VC dimension {worst}", small.len()))
}

fn steiner_against_oracle() -> Result<String, String> {
    let mut cyclic = 0;
    let mut feasible = 0;
    for i in 0..50u64 {
        let n = 6 + i as usize % 6;
        let inst =
            random_dst_instance(n, n + (i as usize * 3) % (2 * n), 2 + i as usize % 3, (i % 4) as usize, i % 3 == 0, i)
                .map_err(err)?;
        let (h, _) = inst.graph.induced_subgraph(&inst.terminals);
        if scc(&h).components.iter().any(|c| c.len() > 1) {
            cyclic += 1;
        }
        let want = dst_exact_enum(&inst).map_err(err)?;
        let got = dst_fpt(&inst).map_err(err)?;
        ensure(got.solution.as_ref().map(VertexSet::len) == want.as_ref().map(VertexSet::len), || {
            format!("instance {i}: fpt {:?} vs oracle {:?}", got.solution, want)
        })?;
        if let Some(s) = &got.solution {
            ensure(inst.accepts(s) && s.len() <= inst.budget, || format!("instance {i}: invalid solution"))?;
            feasible += 1;
        }
        for (k, &nodes) in got.tree_sizes.iter().enumerate() {
            ensure(nodes <= node_bound(got.d, k), || format!("instance {i}: {nodes} nodes at budget {k}"))?;
        }
    }
    ensure(cyclic >= 10, || format!("only {cyclic} instances with terminal cycles"))?;
    Ok(format!("50 instances agree ({feasible} feasible, {cyclic} with terminal cycles)"))
}

fn scss_factor() -> Result<String, String> {
    let mut done = 0;
    let mut worst = 0f64;
    for i in 0..400u64 {
        if done == 25 {
            break;
        }
        let n = 6 + i as usize % 5;
        let inst = random_dst_instance(n, 2 * n + i as usize % n, 3, 3, i % 2 == 0, 7000 + i).map_err(err)?;
        let mut t = inst.terminals.clone();
        t.insert(inst.root);
        let Some(opt) = scss_exact(&inst.graph, &t, 3) else { continue };
        let got =
            scss_2approx(&inst.graph, &t, 3).map_err(err)?.ok_or(format!("instance {i}: feasible but no answer"))?;
        ensure(got.len() <= 2 * opt.len(), || format!("instance {i}: {} vs opt {}", got.len(), opt.len()))?;
        ensure(verify_strongly_connected(&inst.graph, &t.union(&got)), || {
            format!("instance {i}: not strongly connected")
        })?;
        if !opt.is_empty() {
            worst = worst.max(got.len() as f64 / opt.len() as f64);
        }
        done += 1;
    }
    ensure(done == 25, || format!("only {done} feasible instances generated"))?;
    Ok(format!("25 instances; largest ratio {worst:.2}"))
}

fn redblue_ratio() -> Result<String, String> {
    let mut done = 0;
    let mut worst = 0f64;
    for i in 0..200u64 {
        if done == 30 {
            break;
        }
        let n = 15 + i as usize % 26;
        let r = 1 + i as usize % 2;
        let (g, red, blue) =
            random_redblue(n, n + (i as usize * 5) % (2 * n), r, 1 + i as usize % 4, 9000 + i).map_err(err)?;
        let Some(opt) = sparse_digraph::oracles::redblue_exact(&g, r, &red, &blue, 4) else { continue };
        let out = redblue_dominate_approx(&g, &red, &blue, r, i).map_err(err)?;
        ensure(out.solution.is_subset(&blue) && verify_dominating(&g, &out.solution, r, &red), || {
            format!("instance {i}: invalid dominator")
        })?;
        let k = opt.len().max(1) as f64;
        let gate = 8.0 * k * (k + 2.0).log2();
        ensure(out.solution.len() as f64 <= gate, || {
            format!("instance {i}: size {} above {gate:.1}", out.solution.len())
        })?;
        worst = worst.max(out.solution.len() as f64 / k);
        done += 1;
    }
    ensure(done == 30, || format!("only {done} feasible instances generated"))?;
    Ok(format!("30 instances; largest |D|/k {worst:.2} (8 k log2(k+2) is an engineering gate)"))
}

fn duality_pipeline() -> Result<String, String> {
    let (mut scattered, mut dominating) = (0, 0);
    for i in 0..30u64 {
        let n = 8 + i as usize % 7;
        let g = random_digraph(n, n + (i as usize * 3) % (2 * n), 500 + i).map_err(err)?;
        let x = VertexSet::full(n);
        let r = 1 + i as usize % 2;
        let k = 1 + i as usize % 3;
        let (res, run) = dominator_or_scattered(&g, &x, r, k).map_err(err)?;
        let h = run.tree_height as f64;
        ensure(run.tree_nodes as f64 <= h.powi(run.tree_right_chain as i32 + 2), || {
            format!("instance {i}: tree size law")
        })?;
        match res {
            DualityResult::Dominating(d) => {
                ensure(verify_dominating(&g, &d, r, &x), || format!("instance {i}: dominating branch invalid"))?;
                dominating += 1;
            }
            DualityResult::Scattered(w) => {
                ensure(w.len() == k + 1 && verify_scattered(&g, &w, r), || {
                    format!("instance {i}: scattered branch invalid")
                })?;
                ensure(gamma_at_most(&g, r, None, k).is_none(), || format!("instance {i}: scattered but gamma <= k"))?;
                scattered += 1;
            }
        }
    }
    Ok(format!("30 instances ({dominating} dominating, {scattered} scattered)"))
}

/// Adds arcs from vertex 0 to everything else, so that large classes of
/// interchangeable vertices appear and cores actually shrink.
fn with_hub(g: &Digraph) -> Digraph {
    Digraph::from_arcs_lossy(g.n(), g.arcs().chain((1..g.n()).map(|v| (0, v))))
}

fn kernel_soundness() -> Result<String, String> {
    let (mut yes, mut shrunk) = (0, 0);
    for i in 0..20u64 {
        let n = 8 + i as usize % 7;
        let g = if i % 2 == 0 {
            with_hub(&random_digraph(n, n / 2, 300 + i).map_err(err)?)
        } else {
            random_digraph(n, n / 2 + (i as usize * 5) % (2 * n), 300 + i).map_err(err)?
        };
        let r = 1 + i as usize % 2;
        let k = 1 + i as usize % 3;
        let before = gamma_at_most(&g, r, None, k).is_some();
        let kernel = kernelize(&g, r, k, CoreMode::Observed).map_err(err)?;
        let after = gamma_at_most(&kernel.graph, r, None, kernel.budget).is_some();
        ensure(before == after, || format!("instance {i}: original {before}, kernel {after}"))?;
        yes += before as usize;
        shrunk += !kernel.removed.is_empty() as usize;
    }
    Ok(format!("20 instances agree ({yes} yes-instances, {shrunk} with a reduced core)"))
}

fn monotonicity() -> Result<String, String> {
    let corpus = corpus();
    let mut exact = 0;
    for (i, g) in corpus.iter().enumerate() {
        let n = g.n();
        let outs = g.out_balls(2);
        let ins = g.in_balls(2);
        for u in 0..n {
            for v in 0..n {
                ensure(outs[v].contains(u) == ins[u].contains(v), || {
                    format!("graph {i}: ball duality fails at {u},{v}")
                })?;
            }
        }
        let keep = random_subset(n, n * 2 / 3, i as u64);
        let (h, old) = g.induced_subgraph(&keep);
        let l = LinearOrder::identity(n);
        for r in 1..=3 {
            ensure(wcol_of_order(&h, &l.restrict(&old), r) <= wcol_of_order(g, &l, r), || {
                format!("graph {i}: wcol grows on a subgraph")
            })?;
        }
        if n <= 8 {
            for r in 1..=2 {
                let (w, _) = wcol_exact(g, r).map_err(err)?;
                let (a, _) = adm_exact(g, r).map_err(err)?;
                ensure(wcol_exact(&h, r).map_err(err)?.0 <= w, || format!("graph {i}: exact wcol grows"))?;
                ensure(adm_exact(&h, r).map_err(err)?.0 <= a, || format!("graph {i}: exact adm grows"))?;
            }
            exact += 1;
        }
    }
    Ok(format!("{} graphs; exact wcol/adm on {exact} small ones", corpus.len()))
}
