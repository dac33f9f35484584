//! Seeded experiment sweeps: random class members, random connected
//! orders, every configured algorithm, exact optima, ratio tables.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::generate::{random_bounded, random_cactus, random_k1t_free, random_tree, GenerateError};
use super::order::{connected_order_with, OrderPolicy};
use crate::algorithms::{run_algorithm, AlgorithmError, AlgorithmSpec};
use crate::classes::GraphClass;
use crate::graph::{Graph, VertexSet};
use crate::opt::{brute_force_opt_capped, tree_opt, OptError, DEFAULT_OPT_CAP};
use crate::ratio::{self, int};
use crate::revelation::{GameTrace, OnlineInstance, OrderError};

#[derive(Debug, Error)]
pub enum SweepError {
    #[error("invalid config: {0}")]
    Config(String),
    #[error("n_max = {n_max} exceeds the brute-force cap {cap}")]
    CapExceeded { n_max: usize, cap: usize },
    #[error("run {run}: generated graph failed the {class} recognizer")]
    ClassViolation { run: usize, class: String },
    #[error(transparent)]
    Generate(#[from] GenerateError),
    #[error(transparent)]
    Opt(#[from] OptError),
    #[error(transparent)]
    Order(#[from] OrderError),
    #[error(transparent)]
    Algorithm(#[from] AlgorithmError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    pub class: GraphClass,
    pub n_min: usize,
    pub n_max: usize,
    pub algorithms: Vec<AlgorithmSpec>,
    pub seed: u64,
    pub runs: usize,
    /// Run `i` uses `policies[i % len]`.
    pub policies: Vec<OrderPolicy>,
    pub opt_cap: usize,
}

impl ExperimentConfig {
    pub fn new(class: GraphClass, n_min: usize, n_max: usize, algorithms: Vec<AlgorithmSpec>) -> Self {
        ExperimentConfig {
            class,
            n_min,
            n_max,
            algorithms,
            seed: 0,
            runs: 100,
            policies: OrderPolicy::ALL.to_vec(),
            opt_cap: DEFAULT_OPT_CAP,
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_runs(mut self, runs: usize) -> Self {
        self.runs = runs;
        self
    }

    pub fn validate(&self) -> Result<(), SweepError> {
        let bad = |msg: &str| Err(SweepError::Config(msg.to_string()));
        if self.n_min == 0 || self.n_min > self.n_max {
            return bad("need 1 <= n_min <= n_max");
        }
        if self.algorithms.is_empty() {
            return bad("no algorithms");
        }
        if self.policies.is_empty() {
            return bad("no order policies");
        }
        for a in &self.algorithms {
            a.validate()?;
            if matches!(a, AlgorithmSpec::Scripted { .. }) {
                return bad("scripted algorithms need a fixed instance");
            }
        }
        if !matches!(
            self.class,
            GraphClass::Tree | GraphClass::Cactus | GraphClass::MaxDegree(_) | GraphClass::K1tFree(_)
        ) {
            return Err(GenerateError::Unsupported(self.class.to_string()).into());
        }
        if self.class != GraphClass::Tree && self.n_max > self.opt_cap {
            return Err(SweepError::CapExceeded { n_max: self.n_max, cap: self.opt_cap });
        }
        Ok(())
    }
}

pub fn generate_member<R: Rng + ?Sized>(class: GraphClass, n: usize, rng: &mut R) -> Result<Graph, GenerateError> {
    match class {
        GraphClass::Tree => random_tree(n, rng),
        GraphClass::Cactus => random_cactus(n, rng),
        GraphClass::MaxDegree(delta) => random_bounded(n, delta, rng),
        GraphClass::K1tFree(t) => random_k1t_free(n, t, rng),
        other => Err(GenerateError::Unsupported(other.to_string())),
    }
}

/// Short class tag for tables.
pub fn class_tag(class: GraphClass) -> &'static str {
    match class {
        GraphClass::Tree => "tree",
        GraphClass::Cactus => "cactus",
        GraphClass::MaxDegree(_) => "bounded",
        GraphClass::K1tFree(_) => "claw-free",
        GraphClass::Threshold => "threshold",
        GraphClass::PlanarBipartite => "planar-bipartite",
        GraphClass::TreewidthTwo => "sp",
    }
}

pub fn class_param(class: GraphClass) -> Option<usize> {
    match class {
        GraphClass::MaxDegree(p) | GraphClass::K1tFree(p) => Some(p),
        _ => None,
    }
}

/// Everything one run produced, traces included.
#[derive(Debug, Clone)]
pub struct RunOutcome {
    pub index: usize,
    pub policy: OrderPolicy,
    pub instance: OnlineInstance,
    pub opt: VertexSet,
    pub traces: Vec<(AlgorithmSpec, GameTrace)>,
}

/// Optimum used by sweeps: the tree DP on trees, brute force elsewhere.
pub fn exact_opt(g: &Graph, class: GraphClass, cap: usize) -> Result<VertexSet, OptError> {
    if class == GraphClass::Tree {
        tree_opt(g)
    } else {
        brute_force_opt_capped(g, cap)
    }
}

/// Run `index` draws from its own ChaCha stream, so results do not depend
/// on which thread ran it.
pub fn run_one(config: &ExperimentConfig, index: usize) -> Result<RunOutcome, SweepError> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    rng.set_stream(index as u64);
    let n = rng.gen_range(config.n_min..=config.n_max);
    let policy = config.policies[index % config.policies.len()];
    let graph = generate_member(config.class, n, &mut rng)?;
    if !config.class.recognize(&graph) {
        return Err(SweepError::ClassViolation { run: index, class: config.class.to_string() });
    }
    let order = connected_order_with(&graph, &mut rng, policy);
    let opt = exact_opt(&graph, config.class, config.opt_cap)?;
    let instance = OnlineInstance::new(graph, order)?;
    let traces = config
        .algorithms
        .iter()
        .map(|a| Ok((a.clone(), run_algorithm(&instance, a)?)))
        .collect::<Result<Vec<_>, SweepError>>()?;
    Ok(RunOutcome { index, policy, instance, opt, traces })
}

pub fn sweep_runs(config: &ExperimentConfig) -> Result<Vec<RunOutcome>, SweepError> {
    config.validate()?;
    (0..config.runs).into_par_iter().map(|i| run_one(config, i)).collect()
}

pub fn sweep(config: &ExperimentConfig) -> Result<RatioReport, SweepError> {
    Ok(RatioReport::from_runs(config, &sweep_runs(config)?))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunRecord {
    pub run: usize,
    pub order_policy: OrderPolicy,
    pub class: String,
    pub n: usize,
    pub param: Option<usize>,
    pub algorithm: String,
    pub alg_size: usize,
    pub opt_size: usize,
    /// `None` for infeasible runs.
    #[serde(with = "ratio::as_opt_string")]
    pub ratio: Option<BigRational>,
    pub feasible: bool,
    pub certificate: String,
}

/// One CSV line; the column set is fixed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CsvRow {
    pub class: String,
    pub n: usize,
    pub param: Option<usize>,
    pub algorithm: String,
    pub alg_size: usize,
    pub opt_size: usize,
    pub ratio_num: Option<String>,
    pub ratio_den: Option<String>,
    pub feasible: bool,
    pub certificate: String,
}

pub const CSV_COLUMNS: [&str; 10] =
    ["class", "n", "param", "algorithm", "alg_size", "opt_size", "ratio_num", "ratio_den", "feasible", "certificate"];

impl RunRecord {
    pub fn csv_row(&self) -> CsvRow {
        CsvRow {
            class: self.class.clone(),
            n: self.n,
            param: self.param,
            algorithm: self.algorithm.clone(),
            alg_size: self.alg_size,
            opt_size: self.opt_size,
            ratio_num: self.ratio.as_ref().map(|r| r.numer().to_string()),
            ratio_den: self.ratio.as_ref().map(|r| r.denom().to_string()),
            feasible: self.feasible,
            certificate: self.certificate.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Aggregate {
    pub algorithm: String,
    /// Feasible runs only.
    pub count: usize,
    pub infeasible: usize,
    #[serde(with = "ratio::as_opt_string")]
    pub max_ratio: Option<BigRational>,
    #[serde(with = "ratio::as_opt_string")]
    pub mean_ratio: Option<BigRational>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RatioReport {
    pub config: ExperimentConfig,
    pub runs: Vec<RunRecord>,
    pub aggregates: Vec<Aggregate>,
}

impl RatioReport {
    pub fn from_runs(config: &ExperimentConfig, outcomes: &[RunOutcome]) -> Self {
        let mut sorted: Vec<&RunOutcome> = outcomes.iter().collect();
        sorted.sort_by_key(|o| o.index);
        let mut runs = Vec::new();
        for o in sorted {
            for (spec, trace) in &o.traces {
                let opt_size = o.opt.len();
                runs.push(RunRecord {
                    run: o.index,
                    order_policy: o.policy,
                    class: class_tag(config.class).to_string(),
                    n: o.instance.n(),
                    param: class_param(config.class),
                    algorithm: spec.name(),
                    alg_size: trace.alg_size(),
                    opt_size,
                    ratio: trace.feasible.then(|| ratio::ratio(trace.alg_size(), opt_size)),
                    feasible: trace.feasible,
                    certificate: config.class.certificate(),
                });
            }
        }
        let aggregates = config
            .algorithms
            .iter()
            .map(|spec| {
                let name = spec.name();
                let mine: Vec<&RunRecord> = runs.iter().filter(|r| r.algorithm == name).collect();
                let ratios: Vec<&BigRational> = mine.iter().filter_map(|r| r.ratio.as_ref()).collect();
                let sum = ratios.iter().fold(BigRational::zero(), |acc, r| acc + *r);
                Aggregate {
                    algorithm: name,
                    count: ratios.len(),
                    infeasible: mine.len() - ratios.len(),
                    max_ratio: ratios.iter().max().map(|r| (*r).clone()),
                    mean_ratio: (!ratios.is_empty()).then(|| sum / int(ratios.len())),
                }
            })
            .collect();
        RatioReport { config: config.clone(), runs, aggregates }
    }

    pub fn aggregate(&self, algorithm: &str) -> Option<&Aggregate> {
        self.aggregates.iter().find(|a| a.algorithm == algorithm)
    }

    pub fn csv_rows(&self) -> Vec<CsvRow> {
        self.runs.iter().map(RunRecord::csv_row).collect()
    }

    /// Runs grouped by algorithm name.
    pub fn by_algorithm(&self) -> BTreeMap<&str, Vec<&RunRecord>> {
        let mut out: BTreeMap<&str, Vec<&RunRecord>> = BTreeMap::new();
        for r in &self.runs {
            out.entry(r.algorithm.as_str()).or_default().push(r);
        }
        out
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports always serialize")
    }
}
