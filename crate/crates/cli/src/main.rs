mod report;

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};
use sparse_digraph::coloring::{
    check_augmentation, compute_wcol_order, low_treedepth_coloring_capped, tfa_augment, wcol_exact_capped,
    wcol_of_order, wreach_all, DEPTH_CAP,
};
use sparse_digraph::domination::{redblue_dominate_approx, scds_approx};
use sparse_digraph::duality::{
    dominator_or_scattered, kernelize, q_threshold, small_core_threshold, xi_estimate, CoreMode, DualityResult,
};
use sparse_digraph::instances::{random_dst_instance, InstanceRecipe};
use sparse_digraph::minors::{check_model, is_depth_r_minor_capped, MINOR_CAP};
use sparse_digraph::steiner::{dst_fpt, scss_2approx, DstInstance};
use sparse_digraph::{instances, io, oracles, Digraph, Error, VertexSet};

use report::{Format, RunReport, Timing};

/// Largest input on which `kernel` and `domset` consult the exact oracle.
const ORACLE_N: usize = 64;

#[derive(Parser)]
#[command(name = "sdg", version, about = "Structural algorithms for sparse digraphs")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// Worker threads; results do not depend on it.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print an instance in the digraph text format.
    Gen {
        #[command(subcommand)]
        family: Family,
    },
    /// Weak coloring orders and low tree-depth colorings.
    Wcol {
        file: PathBuf,
        #[arg(long, default_value_t = 2)]
        radius: usize,
        /// Brute force over orders (capped by --max-n).
        #[arg(long, conflicts_with_all = ["tfa", "coloring"])]
        exact: bool,
        /// Order from transitive fraternal augmentation (the default).
        #[arg(long, conflicts_with = "coloring")]
        tfa: bool,
        /// Colouring with low tree-depth classes for depth parameter p.
        #[arg(long, value_name = "P")]
        coloring: Option<usize>,
        #[arg(long, default_value_t = 10)]
        max_n: usize,
        /// Largest accepted p for --coloring.
        #[arg(long, default_value_t = DEPTH_CAP)]
        max_p: usize,
    },
    /// Shallow minor containment.
    Minor {
        file: PathBuf,
        #[arg(long, default_value_t = 0)]
        depth: usize,
        /// Look for the crown on q branch vertices.
        #[arg(long, conflicts_with = "pattern")]
        crown: Option<usize>,
        /// Look for the digraph in this file.
        #[arg(long)]
        pattern: Option<PathBuf>,
        #[arg(long, default_value_t = MINOR_CAP)]
        max_n: usize,
    },
    /// Directed Steiner tree on an instance file.
    Dst {
        file: PathBuf,
        /// Enumeration oracle.
        #[arg(long, conflicts_with_all = ["fpt", "scss"])]
        exact: bool,
        /// Bounded search tree (the default).
        #[arg(long, conflicts_with = "scss")]
        fpt: bool,
        /// Strongly connect root and terminals, within twice the optimum.
        #[arg(long)]
        scss: bool,
    },
    /// Distance-r domination.
    Domset {
        file: PathBuf,
        #[arg(long, default_value_t = 1)]
        radius: usize,
        /// Vertices that must be dominated (default: all).
        #[arg(long)]
        red: Option<PathBuf>,
        /// Vertices allowed in the solution (default: all).
        #[arg(long)]
        blue: Option<PathBuf>,
        /// Strongly connected dominating set.
        #[arg(long, conflicts_with_all = ["red", "blue"])]
        scds: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Domination core and kernel for `γ_r <= k`.
    Kernel {
        file: PathBuf,
        #[arg(long, default_value_t = 1)]
        radius: usize,
        #[arg(long)]
        budget: usize,
        #[arg(long, value_enum, default_value_t = ModeArg::Observed)]
        mode: ModeArg,
        /// Include the core's vertices in the report.
        #[arg(long)]
        emit_core: bool,
        /// Write the kernel digraph to this file.
        #[arg(long, value_name = "FILE")]
        emit_kernel: Option<PathBuf>,
    },
    /// Brute-force reference computations.
    Oracle {
        #[command(subcommand)]
        op: OracleOp,
    },
    /// Run the acceptance suite.
    Selftest,
}

#[derive(Subcommand)]
enum Family {
    Path {
        n: usize,
    },
    Crown {
        q: usize,
    },
    ApexCrown {
        n: usize,
    },
    BidirectedClique {
        n: usize,
    },
    Random {
        n: usize,
        m: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Random Steiner instance rooted at 0.
    Dst {
        n: usize,
        m: usize,
        terminals: usize,
        budget: usize,
        /// Put a directed cycle through the first terminals.
        #[arg(long)]
        cycle: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum OracleOp {
    /// Minimum distance-r dominating set.
    Gamma(RadiusArgs),
    /// Maximum distance-r scattered set.
    Alpha(RadiusArgs),
    /// Distance-r domination with an explicit dominator-or-scattered answer.
    Duality {
        #[command(flatten)]
        base: RadiusArgs,
        #[arg(long)]
        budget: usize,
    },
    /// Weak coloring number over all orders.
    Wcol(RadiusArgs),
    /// Minimum Steiner set by enumeration.
    Dst { file: PathBuf },
    /// Minimum strongly connecting set for root and terminals.
    Scss {
        file: PathBuf,
        #[arg(long, default_value_t = 6)]
        max_k: usize,
    },
    /// Minimum red-blue dominating set.
    Redblue {
        #[command(flatten)]
        base: RadiusArgs,
        #[arg(long)]
        red: PathBuf,
        #[arg(long)]
        blue: PathBuf,
        #[arg(long, default_value_t = 6)]
        max_k: usize,
    },
    /// Minimum strongly connected dominating set.
    Scds {
        #[command(flatten)]
        base: RadiusArgs,
        #[arg(long, default_value_t = 6)]
        max_k: usize,
    },
}

#[derive(Args)]
struct RadiusArgs {
    file: PathBuf,
    #[arg(long, default_value_t = 1)]
    radius: usize,
    /// Restrict to this vertex list.
    #[arg(long)]
    set: Option<PathBuf>,
    /// Lift the size cap (gamma and alpha only; may be slow).
    #[arg(long)]
    slow: bool,
}

#[derive(Clone, Copy, clap::ValueEnum)]
enum ModeArg {
    Observed,
    Proven,
}

/// Result payload before it is wrapped into a report.
struct Outcome {
    parameters: Value,
    seed: Option<u64>,
    result: Value,
    validators: BTreeMap<String, bool>,
    negative: bool,
}

impl Outcome {
    fn new(parameters: Value, result: Value) -> Self {
        Outcome { parameters, seed: None, result, validators: BTreeMap::new(), negative: false }
    }

    fn check(mut self, name: &str, ok: bool) -> Self {
        self.validators.insert(name.to_string(), ok);
        self
    }

    fn negative(mut self, negative: bool) -> Self {
        self.negative = negative;
        self
    }
}

enum Failure {
    Lib(Error),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Lib(Error::Infeasible(_)) => 1,
            Failure::Lib(Error::Argument(_) | Error::Parse { .. }) | Failure::Io(_) => 2,
            Failure::Lib(Error::SizeCap { .. }) => 3,
            Failure::Lib(Error::Internal(_)) => 4,
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Lib(e) => e.to_string(),
            Failure::Io(msg) => msg.clone(),
        }
    }
}

type Run = Result<Outcome, Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Io(format!("cannot read {}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<Digraph, Failure> {
    Ok(io::parse_digraph(&read(path)?)?)
}

fn load_dst(path: &Path) -> Result<DstInstance, Failure> {
    Ok(io::parse_dst_instance(&read(path)?)?)
}

fn load_set(path: Option<&PathBuf>, n: usize) -> Result<VertexSet, Failure> {
    match path {
        Some(p) => Ok(io::parse_vertex_list(&read(p)?, n)?),
        None => Ok(VertexSet::full(n)),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            eprintln!("error: --jobs must be positive");
            return ExitCode::from(2);
        }
        let _ = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global();
    }
    let (name, started) = (command_name(&cli.command), Instant::now());
    let outcome = match cli.command {
        Command::Gen { family } => return generate(family),
        Command::Wcol { file, radius, exact, tfa: _, coloring, max_n, max_p } => {
            wcol(&file, radius, exact, coloring, max_n, max_p)
        }
        Command::Minor { file, depth, crown, pattern, max_n } => minor(&file, depth, crown, pattern.as_deref(), max_n),
        Command::Dst { file, exact, fpt: _, scss } => dst(&file, exact, scss),
        Command::Domset { file, radius, red, blue, scds, seed } => {
            domset(&file, radius, red.as_ref(), blue.as_ref(), scds, seed)
        }
        Command::Kernel { file, radius, budget, mode, emit_core, emit_kernel } => {
            kernel(&file, radius, budget, mode, emit_core, emit_kernel.as_deref())
        }
        Command::Oracle { op } => oracle(op),
        Command::Selftest => selftest(),
    };
    let outcome = match outcome {
        Ok(o) => o,
        Err(f) => {
            eprintln!("error: {}", f.message());
            return ExitCode::from(f.code());
        }
    };
    let report = RunReport {
        schema: 1,
        subcommand: name.to_string(),
        parameters: outcome.parameters,
        seed: outcome.seed,
        result: outcome.result,
        validators: outcome.validators,
        timing: Timing { seconds: started.elapsed().as_secs_f64() },
    };
    print!("{}", report.render(cli.format));
    if !report.valid() {
        eprintln!("error: a validator rejected the result");
        ExitCode::from(4)
    } else if outcome.negative {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Gen { .. } => "gen",
        Command::Wcol { .. } => "wcol",
        Command::Minor { .. } => "minor",
        Command::Dst { .. } => "dst",
        Command::Domset { .. } => "domset",
        Command::Kernel { .. } => "kernel",
        Command::Oracle { .. } => "oracle",
        Command::Selftest => "selftest",
    }
}

fn generate(family: Family) -> ExitCode {
    let text = match family {
        Family::Dst { n, m, terminals, budget, cycle, seed } => {
            random_dst_instance(n, m, terminals, budget, cycle, seed).map(|inst| {
                let recipe = format!("dst n={n} m={m} terminals={terminals} budget={budget} cycle={cycle} seed={seed}");
                io::write_dst_instance(&inst, &[recipe])
            })
        }
        family => {
            let recipe = match family {
                Family::Path { n } => InstanceRecipe::Path { n },
                Family::Crown { q } => InstanceRecipe::Crown { q },
                Family::ApexCrown { n } => InstanceRecipe::ApexCrown { n },
                Family::BidirectedClique { n } => InstanceRecipe::BidirectedClique { n },
                Family::Random { n, m, seed } => InstanceRecipe::Random { n, m, seed },
                Family::Dst { .. } => unreachable!(),
            };
            recipe.build().map(|g| io::write_digraph(&g, &[recipe.to_string()]))
        }
    };
    match text {
        Ok(t) => {
            print!("{t}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            let f = Failure::Lib(e);
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}

fn wcol(file: &Path, r: usize, exact: bool, coloring: Option<usize>, max_n: usize, max_p: usize) -> Run {
    let g = load_graph(file)?;
    if let Some(p) = coloring {
        let col = low_treedepth_coloring_capped(&g, p, max_p)?;
        let proper = g.arcs().all(|(u, v)| col.colors[u] != col.colors[v]);
        let params = json!({"file": file, "coloring": p});
        let result = json!({
            "mode": "coloring",
            "colors": col.colors,
            "num_colors": col.num_colors,
            "order": col.order.as_slice(),
            "guarantee": col.guarantee,
        });
        return Ok(Outcome::new(params, result)
            .check("proper", proper)
            .check("within_guarantee", col.num_colors <= col.guarantee));
    }
    let params = json!({"file": file, "radius": r, "mode": if exact { "exact" } else { "tfa" }});
    let (order, claimed, extra) = if exact {
        let (w, order) = wcol_exact_capped(&g, r, max_n)?;
        (order, w, json!({}))
    } else {
        let found = compute_wcol_order(&g, r)?;
        let extra = json!({"c": found.c, "d": found.d});
        (found.order, found.bound, extra)
    };
    let sizes: Vec<usize> = wreach_all(&g, &order, r).iter().map(VertexSet::len).collect();
    let recomputed = wcol_of_order(&g, &order, r);
    let mut result = json!({
        "order": order.as_slice(),
        "wreach_sizes": sizes,
        "wcol": recomputed,
        "guarantee": claimed,
    });
    if let (Value::Object(map), Value::Object(more)) = (&mut result, extra) {
        map.extend(more);
    }
    let mut out = Outcome::new(params, result);
    if exact {
        out = out.check("exact_value", recomputed == claimed);
    } else {
        let aug = tfa_augment(&g, r)?;
        out = out
            .check("augmentation", check_augmentation(&g, &aug).is_ok())
            .check("within_guarantee", recomputed <= claimed);
    }
    Ok(out)
}

fn minor(file: &Path, r: usize, crown: Option<usize>, pattern: Option<&Path>, max_n: usize) -> Run {
    let g = load_graph(file)?;
    let h = match (crown, pattern) {
        (Some(q), None) => instances::crown(q)?,
        (None, Some(p)) => load_graph(p)?,
        _ => return Err(Failure::Io("exactly one of --crown or --pattern is required".into())),
    };
    let model = is_depth_r_minor_capped(&h, &g, r, max_n)?;
    let params = json!({"file": file, "depth": r, "crown": crown, "pattern": pattern});
    let result = json!({
        "found": model.is_some(),
        "witness": model.as_ref().map(|m| &m.branch_sets),
    });
    let valid = model.as_ref().is_none_or(|m| check_model(&h, &g, m).is_ok());
    Ok(Outcome::new(params, result).check("model", valid).negative(model.is_none()))
}

fn dst(file: &Path, exact: bool, scss: bool) -> Run {
    let inst = load_dst(file)?;
    let mode = if exact {
        "exact"
    } else if scss {
        "scss"
    } else {
        "fpt"
    };
    let params = json!({"file": file, "mode": mode});
    if scss {
        let mut t = inst.terminals.clone();
        t.insert(inst.root);
        let got = scss_2approx(&inst.graph, &t, inst.budget)?;
        let valid = got.as_ref().is_none_or(|s| oracles::verify_strongly_connected(&inst.graph, &t.union(s)));
        let within = got.as_ref().is_none_or(|s| s.len() <= 2 * inst.budget);
        let result = json!({"feasible": got.is_some(), "solution": got});
        return Ok(Outcome::new(params, result)
            .check("strongly_connected", valid)
            .check("within_twice_budget", within)
            .negative(got.is_none()));
    }
    let (solution, nodes, d, s) = if exact {
        (oracles::dst_exact_enum(&inst)?, None, None, None)
    } else {
        let o = dst_fpt(&inst)?;
        (o.solution, Some(o.nodes_expanded), Some(o.d), Some(o.s))
    };
    let valid = solution.as_ref().is_none_or(|sol| inst.accepts(sol));
    let result = json!({
        "feasible": solution.is_some(),
        "solution": solution,
        "nodes_expanded": nodes,
        "d": d,
        "s": s,
    });
    Ok(Outcome::new(params, result).check("steiner_set", valid).negative(solution.is_none()))
}

fn domset(file: &Path, r: usize, red: Option<&PathBuf>, blue: Option<&PathBuf>, scds: bool, seed: u64) -> Run {
    let g = load_graph(file)?;
    let n = g.n();
    let params = json!({"file": file, "radius": r, "red": red, "blue": blue, "scds": scds});
    let mut out = if scds {
        let o = scds_approx(&g, r, seed)?;
        let ok = oracles::verify_dominating(&g, &o.solution, r, &VertexSet::full(n))
            && oracles::verify_strongly_connected(&g, &o.solution);
        let ratio = (n <= ORACLE_N / 4)
            .then(|| oracles::scds_exact(&g, r, o.solution.len()))
            .flatten()
            .map(|opt| o.solution.len() as f64 / opt.len() as f64);
        let result = json!({
            "solution": o.solution,
            "valid": ok,
            "k_guess": o.k_guess,
            "center": o.center,
            "ratio_vs_oracle": ratio,
        });
        Outcome::new(params, result).check("strongly_connected_dominating", ok)
    } else {
        let (red, blue) = (load_set(red, n)?, load_set(blue, n)?);
        let o = redblue_dominate_approx(&g, &red, &blue, r, seed)?;
        let ok = o.solution.is_subset(&blue) && oracles::verify_dominating(&g, &o.solution, r, &red);
        let ratio = if red.len() == n && blue.len() == n && n <= ORACLE_N {
            oracles::gamma_at_most(&g, r, None, o.solution.len())
        } else if n <= ORACLE_N / 4 {
            oracles::redblue_exact(&g, r, &red, &blue, o.solution.len())
        } else {
            None
        }
        .map(|opt| if opt.is_empty() { 1.0 } else { o.solution.len() as f64 / opt.len() as f64 });
        let result = json!({
            "solution": o.solution,
            "valid": ok,
            "k_guess": o.k_guess,
            "fallback": o.fallback,
            "ratio_vs_oracle": ratio,
        });
        Outcome::new(params, result).check("dominating", ok)
    };
    out.seed = Some(seed);
    Ok(out)
}

fn kernel(file: &Path, r: usize, k: usize, mode: ModeArg, emit_core: bool, emit_kernel: Option<&Path>) -> Run {
    let g = load_graph(file)?;
    let mode = match mode {
        ModeArg::Observed => CoreMode::Observed,
        ModeArg::Proven => CoreMode::Proven,
    };
    let kern = kernelize(&g, r, k, mode)?;
    if let Some(path) = emit_kernel {
        let note = format!("kernel radius={r} budget={}", kern.budget);
        fs::write(path, io::write_digraph(&kern.graph, &[note]))
            .map_err(|e| Failure::Io(format!("cannot write {}: {e}", path.display())))?;
    }
    let c = compute_wcol_order(&g, r)?.bound;
    let xi = xi_estimate(&g);
    let decision = if kern.infeasible {
        Some(false)
    } else {
        (kern.graph.n() <= ORACLE_N).then(|| oracles::gamma_at_most(&kern.graph, r, None, kern.budget).is_some())
    };
    let truth = (g.n() <= ORACLE_N).then(|| oracles::gamma_at_most(&g, r, None, k).is_some());
    let iterations: usize = kern.removed.iter().map(|rec| rec.iterations).sum();
    let params = json!({"file": file, "radius": r, "budget": k, "mode": mode});
    let result = json!({
        "core_size": kern.core.as_ref().map(VertexSet::len),
        "core": if emit_core { kern.core.as_ref() } else { None },
        "removed": kern.removed,
        "iterations": iterations,
        "thresholds": {
            "c": c,
            "xi": xi,
            "q_of_one": q_threshold(k, r, c, 1).to_string(),
            "small_core": small_core_threshold(k, r, c, xi).to_string(),
        },
        "kernel_n": kern.graph.n(),
        "kernel_m": kern.graph.m(),
        "kernel_budget": kern.budget,
        "infeasible": kern.infeasible,
        "witness": kern.witness,
        "decision": decision,
    });
    let witness_ok = kern.witness.as_ref().is_none_or(|w| oracles::verify_scattered(&g, w, r) && w.len() > k);
    let mut out = Outcome::new(params, result).check("witness_scattered", witness_ok);
    if let (Some(d), Some(t)) = (decision, truth) {
        out = out.check("decision_matches_input", d == t);
    }
    Ok(out.negative(decision == Some(false)))
}

fn oracle(op: OracleOp) -> Run {
    Ok(match op {
        OracleOp::Gamma(a) => {
            let g = load_graph(&a.file)?;
            let x = load_set(a.set.as_ref(), g.n())?;
            let (size, d) = if a.slow {
                let d = (0..=g.n())
                    .find_map(|k| oracles::gamma_at_most(&g, a.radius, Some(&x), k))
                    .ok_or_else(|| Error::Internal("the full vertex set failed to dominate".into()))?;
                (d.len(), d)
            } else {
                oracles::gamma_r_exact(&g, a.radius, Some(&x))?
            };
            let ok = oracles::verify_dominating(&g, &d, a.radius, &x);
            let params = json!({"op": "gamma", "file": a.file, "radius": a.radius, "set": a.set});
            Outcome::new(params, json!({"value": size, "witness": d})).check("dominating", ok)
        }
        OracleOp::Alpha(a) => {
            let g = load_graph(&a.file)?;
            let x = load_set(a.set.as_ref(), g.n())?;
            let (size, mut w) = if a.slow {
                let mut best = Vec::new();
                while let Some(w) = oracles::scattered_of_size(&g, a.radius, Some(&x), best.len() + 1) {
                    best = w;
                }
                (best.len(), best)
            } else {
                oracles::alpha_r_exact(&g, a.radius, Some(&x))?
            };
            w.sort_unstable();
            let ok = oracles::verify_scattered(&g, &w, a.radius);
            let params = json!({"op": "alpha", "file": a.file, "radius": a.radius, "set": a.set});
            Outcome::new(params, json!({"value": size, "witness": w})).check("scattered", ok)
        }
        OracleOp::Duality { base: a, budget } => {
            let g = load_graph(&a.file)?;
            let x = load_set(a.set.as_ref(), g.n())?;
            let (res, _) = dominator_or_scattered(&g, &x, a.radius, budget)?;
            let params = json!({"op": "duality", "file": a.file, "radius": a.radius, "set": a.set, "budget": budget});
            match res {
                DualityResult::Dominating(d) => {
                    let ok = oracles::verify_dominating(&g, &d, a.radius, &x);
                    Outcome::new(params, json!({"kind": "dominating", "witness": d})).check("dominating", ok)
                }
                DualityResult::Scattered(mut w) => {
                    w.sort_unstable();
                    let ok = oracles::verify_scattered(&g, &w, a.radius) && w.len() > budget;
                    Outcome::new(params, json!({"kind": "scattered", "witness": w})).check("scattered", ok)
                }
            }
        }
        OracleOp::Wcol(a) => {
            let g = load_graph(&a.file)?;
            let w = oracles::wcol_by_permutations(&g, a.radius)?;
            let params = json!({"op": "wcol", "file": a.file, "radius": a.radius});
            Outcome::new(params, json!({"value": w}))
        }
        OracleOp::Dst { file } => {
            let inst = load_dst(&file)?;
            let sol = oracles::dst_exact_enum(&inst)?;
            let ok = sol.as_ref().is_none_or(|s| inst.accepts(s));
            let params = json!({"op": "dst", "file": file});
            Outcome::new(params, json!({"feasible": sol.is_some(), "solution": sol}))
                .check("steiner_set", ok)
                .negative(sol.is_none())
        }
        OracleOp::Scss { file, max_k } => {
            let inst = load_dst(&file)?;
            let mut t = inst.terminals.clone();
            t.insert(inst.root);
            let sol = oracles::scss_exact(&inst.graph, &t, max_k);
            let ok = sol.as_ref().is_none_or(|s| oracles::verify_strongly_connected(&inst.graph, &t.union(s)));
            let params = json!({"op": "scss", "file": file, "max_k": max_k});
            Outcome::new(params, json!({"feasible": sol.is_some(), "solution": sol}))
                .check("strongly_connected", ok)
                .negative(sol.is_none())
        }
        OracleOp::Redblue { base: a, red, blue, max_k } => {
            let g = load_graph(&a.file)?;
            let (rs, bs) = (load_set(Some(&red), g.n())?, load_set(Some(&blue), g.n())?);
            let sol = oracles::redblue_exact(&g, a.radius, &rs, &bs, max_k);
            let ok = sol.as_ref().is_none_or(|d| oracles::verify_dominating(&g, d, a.radius, &rs));
            let params =
                json!({"op": "redblue", "file": a.file, "radius": a.radius, "red": red, "blue": blue, "max_k": max_k});
            Outcome::new(params, json!({"feasible": sol.is_some(), "solution": sol}))
                .check("dominating", ok)
                .negative(sol.is_none())
        }
        OracleOp::Scds { base: a, max_k } => {
            let g = load_graph(&a.file)?;
            let sol = oracles::scds_exact(&g, a.radius, max_k);
            let ok = sol.as_ref().is_none_or(|s| {
                oracles::verify_strongly_connected(&g, s)
                    && oracles::verify_dominating(&g, s, a.radius, &VertexSet::full(g.n()))
            });
            let params = json!({"op": "scds", "file": a.file, "radius": a.radius, "max_k": max_k});
            Outcome::new(params, json!({"feasible": sol.is_some(), "solution": sol}))
                .check("strongly_connected_dominating", ok)
                .negative(sol.is_none())
        }
    })
}

fn selftest() -> Run {
    let verdicts = acceptance::run_all();
    for v in &verdicts {
        eprintln!("{}", v.line());
    }
    let failed = verdicts.iter().filter(|v| !v.pass).count();
    let result = json!({
        "passed": verdicts.len() - failed,
        "failed": failed,
        "criteria": verdicts
            .iter()
            .map(|v| json!({"id": v.id, "name": v.name, "pass": v.pass, "detail": v.detail}))
            .collect::<Vec<_>>(),
    });
    Ok(Outcome::new(json!({}), result).negative(failed > 0))
}
