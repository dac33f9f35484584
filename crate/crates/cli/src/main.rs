use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use ods_core::adversaries::AdversaryKind;
use ods_core::charging::{
    charge_one_structure, classify_heavy_light, concentration, heavy_ratio_within_bound, spread_bounded_degree,
    spread_even,
};
use ods_core::classes::{is_tree, GraphClass};
use ods_core::harness::{random_connected_order, sweep, ExperimentConfig, OrderPolicy, CSV_COLUMNS};
use ods_core::opt::{brute_force_opt_capped, normalize_opt_no_leaves, tree_opt, DEFAULT_OPT_CAP};
use ods_core::ratio::{self, int, ratio};
use ods_core::revelation::InstanceJson;
use ods_core::{run_algorithm, AlgorithmSpec, Graph, GraphJson, OnlineInstance, VertexSet};

#[derive(Parser)]
#[command(name = "ods", version, about = "Online dominating set games, adversaries and audits")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Play an algorithm over an instance and emit the trace.
    Run(RunArgs),
    /// Let an adaptive adversary build an instance against an algorithm.
    Adversary(AdversaryArgs),
    /// Exact minimum dominating set of an instance.
    Opt(OptArgs),
    /// Check an instance against a graph class recognizer.
    Check(CheckArgs),
    /// Run an algorithm and audit the charging scheme on its trace.
    Audit(AuditArgs),
    /// Seeded random sweep with ratio tables.
    Sweep(SweepArgs),
}

#[derive(Args)]
struct AlgorithmArgs {
    /// greedy, k-dominate, <k>-dominate, accept-all or scripted.
    #[arg(long, default_value = "greedy")]
    algorithm: String,
    /// Threshold for k-dominate.
    #[arg(long)]
    k: Option<usize>,
    /// Decisions for the scripted algorithm, e.g. 1,0,1.
    #[arg(long)]
    script: Option<String>,
}

impl AlgorithmArgs {
    fn spec(&self) -> Result<AlgorithmSpec> {
        algorithm_spec(&self.algorithm, self.k, self.script.as_deref())
    }
}

#[derive(Args)]
struct InstanceArgs {
    /// Instance JSON: {"n": .., "edges": [[u, v], ..], "order": [..]}.
    #[arg(long)]
    instance: PathBuf,
    /// Order to use when the instance has none, or to replace its order.
    #[arg(long)]
    order_policy: Option<OrderPolicy>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct RunArgs {
    #[command(flatten)]
    input: InstanceArgs,
    #[command(flatten)]
    algorithm: AlgorithmArgs,
    /// Trace output path (default: standard output).
    #[arg(long, alias = "out")]
    trace: Option<PathBuf>,
}

#[derive(Args)]
struct AdversaryArgs {
    /// tree, cactus, delta, claw, threshold, planar-bipartite or sp.
    #[arg(long)]
    class: String,
    #[arg(long)]
    param: usize,
    #[command(flatten)]
    algorithm: AlgorithmArgs,
    /// Where to write the constructed instance.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    trace: Option<PathBuf>,
    /// Report output path (default: standard output).
    #[arg(long)]
    report: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum OptMethod {
    Auto,
    Brute,
    Tree,
}

#[derive(Args)]
struct OptArgs {
    #[arg(long)]
    instance: PathBuf,
    #[arg(long, value_enum, default_value = "auto")]
    method: OptMethod,
    #[arg(long, default_value_t = DEFAULT_OPT_CAP)]
    opt_cap: usize,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct CheckArgs {
    #[arg(long)]
    instance: PathBuf,
    /// tree, cactus, bounded, claw-free, threshold, planar-bipartite or sp.
    #[arg(long)]
    class: String,
    /// Δ for bounded, t for claw-free.
    #[arg(long)]
    param: Option<usize>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Scheme {
    Even,
    BoundedDegree,
}

#[derive(Args)]
struct AuditArgs {
    #[command(flatten)]
    input: InstanceArgs,
    #[command(flatten)]
    algorithm: AlgorithmArgs,
    #[arg(long, value_enum, default_value = "even")]
    scheme: Scheme,
    /// tree or cactus bound the even-scheme concentration by 2 and 5/2.
    #[arg(long)]
    class: Option<String>,
    /// Δ for the bounded-degree scheme (default: the instance's max degree).
    #[arg(long)]
    param: Option<usize>,
    #[arg(long, default_value_t = DEFAULT_OPT_CAP)]
    opt_cap: usize,
    #[arg(long, alias = "out")]
    report: Option<PathBuf>,
}

#[derive(Args)]
struct SweepArgs {
    /// tree, cactus, bounded or claw-free.
    #[arg(long)]
    class: String,
    /// Δ for bounded, t for claw-free.
    #[arg(long)]
    param: Option<usize>,
    /// Repeatable; defaults to greedy, 2-dominate and accept-all.
    #[arg(long)]
    algorithm: Vec<String>,
    /// Sets k for every k-dominate entry.
    #[arg(long)]
    k: Option<usize>,
    #[arg(long, default_value_t = 100)]
    runs: usize,
    #[arg(long, default_value_t = 3)]
    n_min: usize,
    #[arg(long, default_value_t = 16)]
    n_max: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Repeatable; defaults to all three policies in rotation.
    #[arg(long)]
    order_policy: Vec<OrderPolicy>,
    #[arg(long, default_value_t = DEFAULT_OPT_CAP)]
    opt_cap: usize,
    /// CSV table path.
    #[arg(long)]
    out: Option<PathBuf>,
    /// JSON report path (default: standard output when no CSV path is given).
    #[arg(long)]
    report: Option<PathBuf>,
}

/// Outcome of a subcommand that parsed its input: passed checks or not.
enum Verdict {
    Pass,
    Fail,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match dispatch(cli.command) {
        Ok(Verdict::Pass) => ExitCode::SUCCESS,
        Ok(Verdict::Fail) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn dispatch(command: Command) -> Result<Verdict> {
    match command {
        Command::Run(a) => cmd_run(a),
        Command::Adversary(a) => cmd_adversary(a),
        Command::Opt(a) => cmd_opt(a),
        Command::Check(a) => cmd_check(a),
        Command::Audit(a) => cmd_audit(a),
        Command::Sweep(a) => cmd_sweep(a),
    }
}

fn algorithm_spec(name: &str, k: Option<usize>, script: Option<&str>) -> Result<AlgorithmSpec> {
    let spec = match name {
        "scripted" => {
            let script = script.ok_or_else(|| anyhow!("--algorithm scripted needs --script"))?;
            AlgorithmSpec::Scripted { script: parse_script(script)? }
        }
        other => {
            if script.is_some() {
                bail!("--script only applies to --algorithm scripted");
            }
            match (other.parse::<AlgorithmSpec>()?, k) {
                (AlgorithmSpec::KDominate { .. }, Some(k)) => AlgorithmSpec::KDominate { k },
                (_, Some(_)) => bail!("--k only applies to k-dominate"),
                (spec, None) => spec,
            }
        }
    };
    spec.validate()?;
    Ok(spec)
}

fn parse_script(s: &str) -> Result<Vec<bool>> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .enumerate()
        .map(|(i, t)| match t {
            "1" | "true" | "y" => Ok(true),
            "0" | "false" | "n" => Ok(false),
            other => Err(anyhow!("--script entry {i}: expected 0 or 1, got {other:?}")),
        })
        .collect()
}

fn read_instance_json(path: &Path) -> Result<InstanceJson> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))
}

fn read_graph(path: &Path) -> Result<Graph> {
    let json = read_instance_json(path)?;
    graph_of(&json, path)
}

fn graph_of(json: &InstanceJson, path: &Path) -> Result<Graph> {
    Graph::from_json(&GraphJson { n: json.n, edges: json.edges.clone() })
        .with_context(|| format!("invalid graph in {}", path.display()))
}

fn load_instance(args: &InstanceArgs) -> Result<OnlineInstance> {
    let json = read_instance_json(&args.instance)?;
    let g = graph_of(&json, &args.instance)?;
    let order = match (args.order_policy, json.order) {
        (Some(policy), _) => random_connected_order(&g, args.seed, policy),
        (None, Some(order)) => order,
        (None, None) => random_connected_order(&g, args.seed, OrderPolicy::Bfs),
    };
    OnlineInstance::new(g, order).with_context(|| format!("field `order` in {}", args.instance.display()))
}

fn emit<T: Serialize>(value: &T, path: Option<&Path>) -> Result<()> {
    let text = serde_json::to_string_pretty(value)?;
    match path {
        Some(p) => fs::write(p, text + "\n").with_context(|| format!("writing {}", p.display())),
        None => {
            let mut out = std::io::stdout().lock();
            writeln!(out, "{text}")?;
            Ok(())
        }
    }
}

fn cmd_run(a: RunArgs) -> Result<Verdict> {
    let instance = load_instance(&a.input)?;
    let spec = a.algorithm.spec()?;
    let trace = run_algorithm(&instance, &spec)?;
    eprintln!("{spec}: n={} ALG={} feasible={}", trace.n(), trace.alg_size(), trace.feasible);
    emit(&trace.to_json(), a.trace.as_deref())?;
    Ok(Verdict::Pass)
}

fn cmd_adversary(a: AdversaryArgs) -> Result<Verdict> {
    let kind: AdversaryKind = a.class.parse()?;
    let spec = a.algorithm.spec()?;
    let outcome = kind.run_spec(a.param, &spec)?;
    let report = outcome.report(&spec.name());
    if let Some(p) = &a.out {
        emit(&outcome.instance().to_json(), Some(p))?;
    }
    if let Some(p) = &a.trace {
        emit(&outcome.trace.to_json(), Some(p))?;
    }
    emit(&report, a.report.as_deref())?;
    let ratio = report.ratio.as_ref().map(ratio::render).unwrap_or_else(|| "infeasible".into());
    eprintln!(
        "{} adversary, param {}, vs {}: n={} ALG={} witness={} ratio={} guarantee={}",
        kind.name(),
        a.param,
        spec,
        report.n,
        report.alg,
        report.opt_witness,
        ratio,
        ratio::render(&report.guaranteed_ratio),
    );
    Ok(if report.audit.passed() { Verdict::Pass } else { Verdict::Fail })
}

fn cmd_opt(a: OptArgs) -> Result<Verdict> {
    let g = read_graph(&a.instance)?;
    let opt = match a.method {
        OptMethod::Tree => tree_opt(&g)?,
        OptMethod::Auto if is_tree(&g) => tree_opt(&g)?,
        OptMethod::Auto | OptMethod::Brute => brute_force_opt_capped(&g, a.opt_cap)?,
    };
    emit(&json!({ "opt": opt, "size": opt.len() }), a.out.as_deref())?;
    Ok(Verdict::Pass)
}

fn cmd_check(a: CheckArgs) -> Result<Verdict> {
    let g = read_graph(&a.instance)?;
    let class = GraphClass::parse(&a.class, a.param)?;
    let member = class.recognize(&g);
    let result = if member { "pass" } else { "fail" };
    emit(&json!({ "class": class.certificate(), "member": member, "result": result }), a.out.as_deref())?;
    eprintln!("{result}");
    Ok(if member { Verdict::Pass } else { Verdict::Fail })
}

fn cmd_audit(a: AuditArgs) -> Result<Verdict> {
    let instance = load_instance(&a.input)?;
    let spec = a.algorithm.spec()?;
    let trace = run_algorithm(&instance, &spec)?;
    let g = instance.graph();
    let class = a.class.as_deref().map(|c| GraphClass::parse(c, a.param)).transpose()?;
    if let Some(c) = class {
        if !c.recognize(g) {
            bail!("instance is not in class {c}");
        }
    }
    let opt: VertexSet = if is_tree(g) { tree_opt(g)? } else { brute_force_opt_capped(g, a.opt_cap)? };
    let mut report = json!({
        "algorithm": spec.name(),
        "n": trace.n(),
        "alg": trace.alg_size(),
        "feasible": trace.feasible,
        "opt": opt,
    });
    let mut checks: Vec<bool> = vec![trace.feasible];
    match a.scheme {
        Scheme::Even => {
            report["scheme"] = json!("even");
            match spread_even(&trace) {
                Err(e) => {
                    report["error"] = json!(e.to_string());
                    checks.push(false);
                }
                Ok(map) => {
                    let reference = match class {
                        Some(GraphClass::Tree) if g.n() >= 3 => normalize_opt_no_leaves(g, &opt)?,
                        _ => opt.clone(),
                    };
                    let conc = concentration(&map, g, &reference)?;
                    let bound = match class {
                        Some(GraphClass::Tree) => Some(int(2)),
                        Some(GraphClass::Cactus) => Some(ratio(5, 2)),
                        _ => None,
                    };
                    let structure = charge_one_structure(&map, &trace);
                    let conserved = map.conserved(&trace);
                    checks.push(conserved);
                    checks.push(structure.passed());
                    report["conserved"] = json!(conserved);
                    report["total"] = json!(ratio::render(&map.total()));
                    report["reference_opt"] = json!(reference);
                    report["concentration"] = json!(ratio::render(&conc));
                    if let Some(b) = &bound {
                        let ok = conc <= *b;
                        checks.push(ok);
                        report["concentration_bound"] = json!(ratio::render(b));
                        report["within_bound"] = json!(ok);
                    }
                    report["charges"] = Value::Array(map.charge.iter().map(|c| json!(ratio::render(c))).collect());
                    report["charge_one"] = serde_json::to_value(&structure)?;
                }
            }
        }
        Scheme::BoundedDegree => {
            let delta = a.param.unwrap_or_else(|| g.max_degree());
            if g.max_degree() > delta {
                bail!("instance has max degree {} > {delta}", g.max_degree());
            }
            if delta == 0 {
                bail!("bounded-degree audit needs Δ >= 1");
            }
            report["scheme"] = json!("bounded-degree");
            report["delta"] = json!(delta);
            let partition = classify_heavy_light(&trace, delta);
            let heavy_ok = partition.heavy_within_bound();
            let heavy_ratio_ok = heavy_ratio_within_bound(&partition, opt.len(), delta);
            let spread = spread_bounded_degree(&trace, &opt, &partition)?;
            let conserved = spread.stranded.is_empty() && spread.conserved(&trace);
            let per_opt_ok = spread.within_three_sqrt_delta(delta);
            checks.extend([heavy_ok, heavy_ratio_ok, conserved, per_opt_ok]);
            report["partition"] = serde_json::to_value(&partition)?;
            report["heavy_within_bound"] = json!(heavy_ok);
            report["heavy_ratio_within_bound"] = json!(heavy_ratio_ok);
            report["charge"] = serde_json::to_value(&spread)?;
            report["max_charge"] = json!(ratio::render(&spread.max_charge()));
            report["conserved"] = json!(conserved);
            report["within_three_sqrt_delta"] = json!(per_opt_ok);
            report["max_light_sources"] = json!(spread.max_light_sources());
        }
    }
    let passed = checks.iter().all(|&c| c);
    report["passed"] = json!(passed);
    emit(&report, a.report.as_deref())?;
    eprintln!("audit {}", if passed { "passed" } else { "failed" });
    Ok(if passed { Verdict::Pass } else { Verdict::Fail })
}

fn cmd_sweep(a: SweepArgs) -> Result<Verdict> {
    let class = GraphClass::parse(&a.class, a.param)?;
    let algorithms = if a.algorithm.is_empty() {
        AlgorithmSpec::stock()
    } else {
        a.algorithm.iter().map(|name| algorithm_spec(name, a.k, None)).collect::<Result<_>>()?
    };
    let mut config = ExperimentConfig::new(class, a.n_min, a.n_max, algorithms).with_seed(a.seed).with_runs(a.runs);
    config.opt_cap = a.opt_cap;
    if !a.order_policy.is_empty() {
        config.policies = a.order_policy.clone();
    }
    let report = sweep(&config)?;
    if let Some(p) = &a.out {
        let mut w = csv::Writer::from_path(p).with_context(|| format!("writing {}", p.display()))?;
        if report.runs.is_empty() {
            w.write_record(CSV_COLUMNS)?;
        }
        for row in report.csv_rows() {
            w.serialize(row)?;
        }
        w.flush()?;
    }
    if a.report.is_some() || a.out.is_none() {
        emit(&report, a.report.as_deref())?;
    }
    for agg in &report.aggregates {
        eprintln!(
            "{}: {} feasible, {} infeasible, max ratio {}",
            agg.algorithm,
            agg.count,
            agg.infeasible,
            agg.max_ratio.as_ref().map(ratio::render).unwrap_or_else(|| "-".into())
        );
    }
    Ok(Verdict::Pass)
}
