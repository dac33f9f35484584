//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line per
//! criterion, then reruns the whole suite to confirm byte-identical reports.
//! Exits nonzero if any criterion fails.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::process::ExitCode;
use std::time::Instant;

use num_rational::BigRational;
use ods_core::adversaries::{AdversaryKind, AdversaryOutcome};
use ods_core::charging::{
    charge_one_structure, classify_heavy_light, concentration, spread_bounded_degree, spread_even,
};
use ods_core::classes::{
    euler_planar_bipartite_bound, is_bipartite, is_cactus, is_k1t_free, is_threshold, is_tree, treewidth_at_most_2,
    GraphClass,
};
use ods_core::harness::{sweep_runs, ExperimentConfig, OrderPolicy, RatioReport, RunOutcome};
use ods_core::opt::{brute_force_opt, brute_force_opt_capped, min_cover, normalize_opt_no_leaves, tree_opt};
use ods_core::ratio::{int, ratio, render};
use ods_core::revelation::{EdgeKind, GameTrace};
use ods_core::{validate_order, AlgorithmSpec, Graph, Vertex, VertexSet};

const SEED: u64 = 20_240_601;
/// Brute-force cap for adversary outputs checked against exact γ.
const ADVERSARY_CAP: usize = 40;

struct Verdict {
    passed: bool,
    summary: String,
    failures: Vec<String>,
}

impl Verdict {
    fn new() -> Self {
        Verdict { passed: true, summary: String::new(), failures: Vec::new() }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.passed = false;
            if self.failures.len() < 5 {
                self.failures.push(what());
            }
        }
    }
}

/// Everything the later criteria reuse, plus a transcript for the
/// determinism check.
#[derive(Default)]
struct Collected {
    tree_runs: Vec<RunOutcome>,
    cactus_runs: Vec<RunOutcome>,
    /// (label, algorithm, trace) for every game played.
    traces: Vec<(String, AlgorithmSpec, GameTrace)>,
    transcript: String,
}

impl Collected {
    fn record_sweep(&mut self, label: &str, config: &ExperimentConfig, runs: &[RunOutcome]) -> RatioReport {
        let report = RatioReport::from_runs(config, runs);
        writeln!(self.transcript, "{label}\n{}", report.to_json_pretty()).unwrap();
        for run in runs {
            for (spec, trace) in &run.traces {
                self.traces.push((format!("{label} run {}", run.index), spec.clone(), trace.clone()));
            }
        }
        report
    }

    fn record_adversary(&mut self, label: &str, spec: &AlgorithmSpec, out: &AdversaryOutcome) {
        let report = serde_json::to_string(&out.report(&spec.name())).unwrap();
        let instance = serde_json::to_string(&out.instance().to_json()).unwrap();
        writeln!(self.transcript, "{label}\n{report}\n{instance}").unwrap();
        self.traces.push((label.to_string(), spec.clone(), out.trace.clone()));
    }
}

fn two_dominate() -> AlgorithmSpec {
    AlgorithmSpec::KDominate { k: 2 }
}

fn run_sweep(
    class: GraphClass,
    n_min: usize,
    n_max: usize,
    algs: Vec<AlgorithmSpec>,
    runs: usize,
    seed: u64,
) -> (ExperimentConfig, Vec<RunOutcome>) {
    let config = ExperimentConfig::new(class, n_min, n_max, algs).with_seed(seed).with_runs(runs);
    let outcomes = sweep_runs(&config).expect("sweep runs");
    (config, outcomes)
}

fn adversary(kind: AdversaryKind, param: usize, spec: &AlgorithmSpec) -> AdversaryOutcome {
    kind.run_spec(param, spec).unwrap_or_else(|e| panic!("{kind} adversary param {param} vs {spec}: {e}"))
}

/// Exact γ: the tree DP on trees, brute force otherwise.
fn gamma(g: &Graph) -> Option<usize> {
    if is_tree(g) {
        return Some(tree_opt(g).unwrap().len());
    }
    brute_force_opt_capped(g, ADVERSARY_CAP).ok().map(|s| s.len())
}

fn dominates(g: &Graph, s: &VertexSet) -> bool {
    let mut covered = vec![false; g.n()];
    for &v in s {
        covered[v] = true;
        for &u in g.neighbors(v) {
            covered[u] = true;
        }
    }
    covered.into_iter().all(|c| c)
}

fn policies_used(runs: &[RunOutcome]) -> BTreeSet<OrderPolicy> {
    runs.iter().map(|r| r.policy).collect()
}

fn criterion_1(c: &mut Collected) -> Verdict {
    let mut v = Verdict::new();
    let (config, runs) = run_sweep(GraphClass::Tree, 3, 20, vec![two_dominate()], 1200, SEED);
    let report = c.record_sweep("trees/2-dominate", &config, &runs);
    v.check(policies_used(&runs).len() == 3, || "not all order policies used".into());
    let mut cross_checked = 0;
    for run in &runs {
        let g = run.instance.graph();
        let (_, trace) = &run.traces[0];
        v.check(trace.feasible, || format!("run {} infeasible", run.index));
        v.check(dominates(g, &run.opt), || format!("run {}: tree optimum does not dominate", run.index));
        v.check(trace.alg_size() <= 2 * run.opt.len(), || {
            format!("run {}: ALG {} > 2 * {}", run.index, trace.alg_size(), run.opt.len())
        });
        if g.n() <= 16 {
            cross_checked += 1;
            let brute = brute_force_opt(g).unwrap().len();
            v.check(brute == run.opt.len(), || {
                format!("run {}: tree DP {} vs brute {}", run.index, run.opt.len(), brute)
            });
        }
    }
    let max = report.aggregate("2-dominate").and_then(|a| a.max_ratio.clone()).unwrap();
    v.check(max <= int(2), || format!("max ratio {}", render(&max)));
    v.summary =
        format!("{} trees, max ratio {}, {} cross-checked by brute force", runs.len(), render(&max), cross_checked);
    c.tree_runs = runs;
    v
}

fn criterion_2(c: &mut Collected) -> Verdict {
    let mut v = Verdict::new();
    let bound = ratio(97, 50);
    let mut worst: Option<BigRational> = None;
    for spec in AlgorithmSpec::stock() {
        let out = adversary(AdversaryKind::Tree, 50, &spec);
        c.record_adversary(&format!("tree adversary k=50 vs {spec}"), &spec, &out);
        let g = &out.trace.graph;
        v.check(out.trace.feasible, || format!("{spec}: infeasible"));
        v.check(is_tree(g), || format!("{spec}: output is not a tree"));
        v.check(dominates(g, &out.opt_witness), || format!("{spec}: witness does not dominate"));
        let r = ratio(out.alg_size(), out.opt_witness.len());
        v.check(r >= bound, || format!("{spec}: ratio {} < 97/50", render(&r)));
        worst = Some(worst.map_or(r.clone(), |w: BigRational| w.min(r)));
    }
    let mut small = 0;
    for k in 4..=6 {
        for spec in AlgorithmSpec::stock() {
            let out = adversary(AdversaryKind::Tree, k, &spec);
            c.record_adversary(&format!("tree adversary k={k} vs {spec}"), &spec, &out);
            let g = &out.trace.graph;
            let exact = tree_opt(g).unwrap().len();
            let brute = brute_force_opt(g).map(|s| s.len());
            v.check(brute == Ok(exact), || format!("k={k} {spec}: tree DP {exact} vs brute {brute:?}"));
            v.check(out.opt_witness.len() <= exact + 1, || {
                format!("k={k} {spec}: witness {} vs γ {exact}", out.opt_witness.len())
            });
            small += 1;
        }
    }
    v.summary =
        format!("k=50 worst ratio {} >= 97/50; {small} small instances within +1 of γ", render(&worst.unwrap()));
    v
}

fn criterion_3(c: &mut Collected) -> Verdict {
    let mut v = Verdict::new();
    let (config, runs) = run_sweep(GraphClass::Cactus, 3, 20, vec![two_dominate()], 600, SEED + 1);
    let report = c.record_sweep("cacti/2-dominate", &config, &runs);
    for run in &runs {
        let (_, trace) = &run.traces[0];
        v.check(trace.feasible, || format!("run {} infeasible", run.index));
        v.check(2 * trace.alg_size() <= 5 * run.opt.len(), || {
            format!("run {}: ALG {} > 5/2 * {}", run.index, trace.alg_size(), run.opt.len())
        });
    }
    let max = report.aggregate("2-dominate").and_then(|a| a.max_ratio.clone()).unwrap();
    let mut regions = 0;
    for spec in [AlgorithmSpec::AcceptAll, AlgorithmSpec::Greedy] {
        for rounds in 1..=5 {
            let out = adversary(AdversaryKind::Cactus, rounds, &spec);
            c.record_adversary(&format!("cactus adversary rounds={rounds} vs {spec}"), &spec, &out);
            let g = &out.trace.graph;
            v.check(is_cactus(g), || format!("{spec} rounds={rounds}: output is not a cactus"));
            v.check(dominates(g, &out.opt_witness), || format!("{spec} rounds={rounds}: witness does not dominate"));
            let counted: Vec<_> = out.regions.iter().filter(|r| r.counted).collect();
            v.check(!counted.is_empty(), || format!("{spec} rounds={rounds}: no counted regions"));
            for r in counted {
                regions += 1;
                let alg = r.vertices.iter().filter(|x| out.trace.selected.contains(x)).count();
                let opt = min_cover(g, &r.must_dominate).unwrap().len();
                v.check(2 * alg >= 5 * opt, || format!("{spec} rounds={rounds} {}: {alg}/{opt} < 5/2", r.label));
            }
        }
    }
    v.summary =
        format!("{} cacti, max ratio {}; {regions} adversary regions at ratio >= 5/2", runs.len(), render(&max));
    c.cactus_runs = runs;
    v
}

fn criterion_4(c: &mut Collected) -> Verdict {
    let mut v = Verdict::new();
    let mut max_tree = int(0);
    let mut max_cactus = int(0);
    let groups: [(&str, &Vec<RunOutcome>, BigRational); 2] =
        [("tree", &c.tree_runs, int(2)), ("cactus", &c.cactus_runs, ratio(5, 2))];
    for (label, runs, bound) in groups {
        for run in runs {
            let g = run.instance.graph();
            let (_, trace) = &run.traces[0];
            let map = match spread_even(trace) {
                Ok(m) => m,
                Err(e) => {
                    v.check(false, || format!("{label} run {}: {e}", run.index));
                    continue;
                }
            };
            v.check(map.total() == int(trace.alg_size()), || {
                format!("{label} run {}: charge not conserved", run.index)
            });
            let reference =
                if label == "tree" { normalize_opt_no_leaves(g, &run.opt).unwrap() } else { run.opt.clone() };
            v.check(reference.len() == run.opt.len(), || {
                format!("{label} run {}: normalization changed |OPT|", run.index)
            });
            let conc = concentration(&map, g, &reference).unwrap();
            v.check(conc <= bound, || format!("{label} run {}: concentration {}", run.index, render(&conc)));
            let structure = charge_one_structure(&map, trace);
            v.check(structure.passed(), || format!("{label} run {}: {:?}", run.index, structure.describe()));
            let slot = if label == "tree" { &mut max_tree } else { &mut max_cactus };
            if conc > *slot {
                *slot = conc;
            }
        }
    }
    // conservation on every other trace the even scheme applies to
    let mut others = 0;
    for (label, spec, trace) in &c.traces {
        if *spec == AlgorithmSpec::AcceptAll || !trace.feasible {
            continue;
        }
        others += 1;
        match spread_even(trace) {
            Ok(map) => v.check(map.total() == int(trace.alg_size()), || format!("{label}: charge not conserved")),
            Err(e) => v.check(false, || format!("{label}: {e}")),
        }
    }
    v.summary = format!(
        "max concentration {} on trees, {} on cacti; conservation exact on {others} traces",
        render(&max_tree),
        render(&max_cactus)
    );
    v
}

fn criterion_5(c: &mut Collected) -> Verdict {
    let mut v = Verdict::new();
    let mut total_runs = 0;
    let mut worst_charge = String::new();
    for (delta, root) in [(4usize, 2usize), (9, 3), (16, 4)] {
        let alg = AlgorithmSpec::KDominate { k: root };
        assert_eq!(alg, AlgorithmSpec::sqrt_dominate(delta));
        let (config, runs) =
            run_sweep(GraphClass::MaxDegree(delta), 3, 20, vec![alg.clone()], 300, SEED + delta as u64);
        c.record_sweep(&format!("bounded Δ={delta}/{alg}"), &config, &runs);
        let mut max_charge = int(0);
        for run in &runs {
            total_runs += 1;
            let (_, trace) = &run.traces[0];
            let (a, g) = (trace.alg_size(), run.opt.len());
            v.check(trace.feasible, || format!("Δ={delta} run {} infeasible", run.index));
            v.check(a * a <= 9 * delta * g * g, || format!("Δ={delta} run {}: ALG {a} > 3√Δ * {g}", run.index));
            let partition = classify_heavy_light(trace, delta);
            v.check(partition.heavy.len() <= trace.n() / root, || {
                format!("Δ={delta} run {}: |H| = {} > n/{root}", run.index, partition.heavy.len())
            });
            let spread = spread_bounded_degree(trace, &run.opt, &partition).unwrap();
            v.check(spread.stranded.is_empty(), || {
                format!("Δ={delta} run {}: stranded {:?}", run.index, spread.stranded)
            });
            v.check(spread.total() == int(a), || format!("Δ={delta} run {}: charge not conserved", run.index));
            for (&o, ch) in &spread.opt_charge {
                v.check(ch * ch <= int(9 * delta), || {
                    format!("Δ={delta} run {}: OPT vertex {o} holds {}", run.index, render(ch))
                });
                if *ch > max_charge {
                    max_charge = ch.clone();
                }
            }
        }
        write!(worst_charge, " Δ={delta}:{}", render(&max_charge)).unwrap();
        for spec in [AlgorithmSpec::Greedy, AlgorithmSpec::AcceptAll, alg] {
            let out = adversary(AdversaryKind::Delta, delta, &spec);
            c.record_adversary(&format!("delta adversary Δ={delta} vs {spec}"), &spec, &out);
            let g = &out.trace.graph;
            v.check(g.max_degree() <= delta, || format!("Δ={delta} {spec}: degree {}", g.max_degree()));
            v.check(dominates(g, &out.opt_witness), || format!("Δ={delta} {spec}: witness does not dominate"));
            v.check(out.trace.feasible && 2 * out.alg_size() >= root * out.opt_witness.len(), || {
                format!("Δ={delta} {spec}: ALG {} witness {} below √Δ/2", out.alg_size(), out.opt_witness.len())
            });
        }
    }
    v.summary = format!(
        "{total_runs} bounded-degree runs within 3√Δ; max per-OPT charge{worst_charge}; adversary ratios >= √Δ/2"
    );
    v
}

fn criterion_6(c: &mut Collected) -> Verdict {
    let mut v = Verdict::new();
    let mut total = 0;
    for t in 3..=5 {
        let (config, runs) =
            run_sweep(GraphClass::K1tFree(t), 3, 16, vec![AlgorithmSpec::Greedy], 300, SEED + 100 + t as u64);
        c.record_sweep(&format!("K1,{t}-free/greedy"), &config, &runs);
        for run in &runs {
            total += 1;
            let g = run.instance.graph();
            let (_, trace) = &run.traces[0];
            let sel: Vec<Vertex> = trace.selected.iter().copied().collect();
            let independent = sel.iter().enumerate().all(|(i, &a)| sel[i + 1..].iter().all(|&b| !g.has_edge(a, b)));
            v.check(independent, || format!("t={t} run {}: greedy output not independent", run.index));
            v.check(trace.alg_size() <= (t - 1) * run.opt.len(), || {
                format!("t={t} run {}: ALG {} > {} * {}", run.index, trace.alg_size(), t - 1, run.opt.len())
            });
        }
        for spec in AlgorithmSpec::stock() {
            let out = adversary(AdversaryKind::Claw, t, &spec);
            c.record_adversary(&format!("claw adversary t={t} vs {spec}"), &spec, &out);
            let g = &out.trace.graph;
            v.check(is_k1t_free(g, t).unwrap(), || format!("t={t} {spec}: output has an induced K1,{t}"));
            v.check(dominates(g, &out.opt_witness), || format!("t={t} {spec}: witness does not dominate"));
            v.check(out.trace.feasible && out.alg_size() >= (t - 1) * out.opt_witness.len(), || {
                format!("t={t} {spec}: ALG {} witness {}", out.alg_size(), out.opt_witness.len())
            });
        }
    }
    v.summary = format!("{total} claw-free greedy runs independent and within (t-1)γ; adversary ratios >= t-1");
    v
}

fn criterion_7(c: &mut Collected) -> Verdict {
    let mut v = Verdict::new();
    let mut brute_checked = 0;
    for k in 3..=10 {
        for spec in [AlgorithmSpec::Greedy, two_dominate(), AlgorithmSpec::AcceptAll] {
            let out = adversary(AdversaryKind::Threshold, k, &spec);
            c.record_adversary(&format!("threshold adversary k={k} vs {spec}"), &spec, &out);
            let g = &out.trace.graph;
            let (a, n) = (out.alg_size(), g.n());
            v.check(out.trace.feasible && a * a >= n, || format!("k={k} {spec}: ALG {a} < √{n}"));
            v.check(is_threshold(g), || format!("k={k} {spec}: output is not a threshold graph"));
            v.check(out.opt_witness.len() == 1 && dominates(g, &out.opt_witness), || {
                format!("k={k} {spec}: witness {:?}", out.opt_witness)
            });
            if k <= 5 {
                brute_checked += 1;
                let exact = brute_force_opt(g).map(|s| s.len());
                v.check(exact == Ok(1), || format!("k={k} {spec}: brute γ {exact:?}"));
            }
        }
    }
    v.summary = format!("k=3..10 all ALG >= √n with γ = 1; {brute_checked} outputs brute-forced");
    v
}

fn criterion_8(c: &mut Collected) -> Verdict {
    let mut v = Verdict::new();
    let mut worst: Vec<String> = Vec::new();
    for kind in [AdversaryKind::PlanarBipartite, AdversaryKind::Sp] {
        let class_ok = |g: &Graph| match kind {
            AdversaryKind::PlanarBipartite => is_bipartite(g) && euler_planar_bipartite_bound(g),
            _ => treewidth_at_most_2(g),
        };
        let mut low: Option<BigRational> = None;
        for spec in AlgorithmSpec::stock() {
            let out = adversary(kind, 10, &spec);
            c.record_adversary(&format!("{kind} adversary k=10 vs {spec}"), &spec, &out);
            let g = &out.trace.graph;
            v.check(class_ok(g), || format!("{kind} {spec}: class check failed"));
            v.check(dominates(g, &out.opt_witness), || format!("{kind} {spec}: witness does not dominate"));
            v.check(out.trace.feasible && out.alg_size() >= 5 * out.opt_witness.len(), || {
                format!("{kind} {spec}: ALG {} witness {}", out.alg_size(), out.opt_witness.len())
            });
            let r = ratio(out.alg_size(), out.opt_witness.len());
            low = Some(low.map_or(r.clone(), |l: BigRational| l.min(r)));
            for k in kind.min_param()..=3 {
                let small = adversary(kind, k, &spec);
                c.record_adversary(&format!("{kind} adversary k={k} vs {spec}"), &spec, &small);
                let sg = &small.trace.graph;
                v.check(class_ok(sg), || format!("{kind} k={k} {spec}: class check failed"));
                match gamma(sg) {
                    Some(exact) => v.check(small.opt_witness.len() <= exact + 1, || {
                        format!("{kind} k={k} {spec}: witness {} vs γ {exact}", small.opt_witness.len())
                    }),
                    None => v.check(false, || format!("{kind} k={k} {spec}: n = {} too large for brute force", sg.n())),
                }
            }
        }
        worst.push(format!("{kind} min ratio {}", render(&low.unwrap())));
    }
    v.summary = format!("k=10: {}; small witnesses within +1 of γ", worst.join(", "));
    v
}

/// Recomputes the revelation structure from the graph and order alone.
fn engine_violations(trace: &GameTrace) -> Vec<String> {
    let g = &trace.graph;
    let mut out = Vec::new();
    let n = g.n();
    let mut pos = vec![usize::MAX; n];
    for (i, &v) in trace.order.iter().enumerate() {
        pos[v] = i;
    }
    for v in g.vertices() {
        let first = g.neighbors(v).iter().copied().filter(|&u| pos[u] < pos[v]).min_by_key(|&u| pos[u]);
        let expected = if pos[v] == 0 { None } else { first };
        if trace.parent[v] != expected {
            out.push(format!("vertex {v}: parent {:?}, expected {expected:?}", trace.parent[v]));
        }
        if pos[v] > 0 && expected.is_none() {
            out.push(format!("vertex {v} has no earlier neighbor"));
        }
    }
    let mut cross = vec![0usize; n];
    for (u, v) in g.edges() {
        let tree_edge = trace.parent[u] == Some(v) || trace.parent[v] == Some(u);
        let kind = trace.edge_kinds.get(&(u.min(v), u.max(v))).copied();
        let expected = if tree_edge { EdgeKind::Tree } else { EdgeKind::Cross };
        if kind != Some(expected) {
            out.push(format!("edge {u}-{v}: {kind:?}, expected {expected:?}"));
        }
        if !tree_edge {
            cross[u] += 1;
            cross[v] += 1;
        }
    }
    if is_tree(g) && cross.iter().any(|&c| c > 0) {
        out.push("cross edge on a tree".into());
    }
    if is_cactus(g) && cross.iter().any(|&c| c > 1) {
        out.push("vertex with two cross edges on a cactus".into());
    }
    let mut dominated = vec![false; n];
    let mut seen = BTreeSet::new();
    for (i, s) in trace.steps.iter().enumerate() {
        let closed = g.closed_neighbors(s.vertex);
        let x: Vec<Vertex> = closed.iter().copied().filter(|&u| !dominated[u]).collect();
        let mut recorded = s.undominated_closed.clone();
        recorded.sort_unstable();
        if recorded != x {
            out.push(format!("step {}: X = {recorded:?}, expected {x:?}", i + 1));
        }
        // v_i saves w when v_i is the last of N[w] to arrive and nothing in N[w] was chosen earlier
        let saves: Vec<Vertex> = g
            .vertices()
            .filter(|&w| {
                let nw = g.closed_neighbors(w);
                !dominated[w] && nw.contains(&s.vertex) && nw.iter().all(|&u| pos[u] <= i)
            })
            .collect();
        let mut recorded_saves = s.saves.clone();
        recorded_saves.sort_unstable();
        if recorded_saves != saves {
            out.push(format!("step {}: saves {recorded_saves:?}, expected {saves:?}", i + 1));
        }
        if s.selected() {
            for &u in &x {
                if !seen.insert(u) {
                    out.push(format!("X sets of selected steps overlap at {u}"));
                }
            }
            for u in closed {
                dominated[u] = true;
            }
        }
    }
    if let Err(e) = validate_order(g, &trace.order) {
        out.push(format!("order invalid: {e}"));
    }
    out
}

fn criterion_9(c: &mut Collected) -> Verdict {
    let mut v = Verdict::new();
    let (mut trees, mut cacti) = (0, 0);
    for (label, _, trace) in &c.traces {
        trees += usize::from(is_tree(&trace.graph));
        cacti += usize::from(is_cactus(&trace.graph));
        let bad = engine_violations(trace);
        v.check(bad.is_empty(), || format!("{label}: {}", bad.join("; ")));
    }
    v.summary = format!("{} traces checked ({trees} trees, {cacti} cacti)", c.traces.len());
    v
}

type Criterion = (usize, &'static str, fn(&mut Collected) -> Verdict);

const CRITERIA: [Criterion; 9] = [
    (1, "tree upper bound", criterion_1),
    (2, "tree lower bound", criterion_2),
    (3, "cactus bounds", criterion_3),
    (4, "charging audits", criterion_4),
    (5, "bounded degree", criterion_5),
    (6, "claw-free", criterion_6),
    (7, "threshold", criterion_7),
    (8, "planar bipartite and series-parallel", criterion_8),
    (9, "engine invariants", criterion_9),
];

fn run_suite() -> (Vec<(usize, &'static str, Verdict, f64)>, String) {
    let mut collected = Collected::default();
    let mut results = Vec::new();
    for (id, name, f) in CRITERIA {
        let start = Instant::now();
        let verdict = f(&mut collected);
        results.push((id, name, verdict, start.elapsed().as_secs_f64()));
    }
    (results, collected.transcript)
}

fn line(id: usize, name: &str, passed: bool, summary: &str, secs: f64) -> String {
    format!("{} criterion {id:>2} ({name}): {summary} [{secs:.1}s]", if passed { "PASS" } else { "FAIL" })
}

fn main() -> ExitCode {
    // the custom harness gets libtest flags such as --list; answer them quietly
    if std::env::args().any(|a| a == "--list") {
        return ExitCode::SUCCESS;
    }
    let (results, transcript) = run_suite();
    let mut all = true;
    for (id, name, v, secs) in &results {
        println!("{}", line(*id, name, v.passed, &v.summary, *secs));
        for f in &v.failures {
            println!("      {f}");
        }
        all &= v.passed;
    }
    let start = Instant::now();
    let (again, transcript2) = run_suite();
    let same_verdicts = results.iter().zip(&again).all(|(a, b)| a.2.passed == b.2.passed && a.2.summary == b.2.summary);
    let identical = transcript == transcript2 && same_verdicts;
    let summary = format!(
        "rerun with seed {SEED} reproduced {} report bytes {}",
        transcript.len(),
        if identical { "exactly" } else { "with differences" }
    );
    println!("{}", line(10, "determinism", identical, &summary, start.elapsed().as_secs_f64()));
    all &= identical;
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
