//! Online decision rules.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::ratio::ceil_sqrt;
use crate::revelation::{EngineError, GameTrace, OnlineInstance, Session, StepView};

/// A decision source. It sees the engine's view of the pending vertex and
/// answers select (`true`) or reject.
pub trait OnlineAlgorithm {
    fn decide(&mut self, view: &StepView<'_>) -> bool;
}

impl<F: FnMut(&StepView<'_>) -> bool> OnlineAlgorithm for F {
    fn decide(&mut self, view: &StepView<'_>) -> bool {
        self(view)
    }
}

/// Select iff the pending vertex is undominated.
pub fn greedy_decide(view: &StepView<'_>) -> bool {
    view.is_undominated(view.vertex())
}

/// Select iff the pending vertex has at least `k` undominated neighbors, or
/// it saves some vertex (possibly itself).
pub fn k_dominate_decide(view: &StepView<'_>, k: usize) -> bool {
    view.undominated_neighbors() >= k || !view.saves().is_empty()
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgorithmError {
    #[error("k must be at least 1")]
    ZeroK,
    #[error("script has {got} decisions but the instance has {n} vertices")]
    ScriptLength { got: usize, n: usize },
    #[error("unknown algorithm {0:?} (expected greedy, k-dominate, accept-all or scripted)")]
    Unknown(String),
    #[error(transparent)]
    Engine(#[from] EngineError),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum AlgorithmSpec {
    Greedy,
    KDominate {
        k: usize,
    },
    AcceptAll,
    /// Decision `i` answers step `i + 1`; steps past the end are rejected.
    Scripted {
        script: Vec<bool>,
    },
}

impl AlgorithmSpec {
    /// `⌈√Δ⌉`-DOMINATE, the bounded-degree parameterization.
    pub fn sqrt_dominate(delta: usize) -> Self {
        AlgorithmSpec::KDominate { k: ceil_sqrt(delta).max(1) }
    }

    pub fn validate(&self) -> Result<(), AlgorithmError> {
        match self {
            AlgorithmSpec::KDominate { k: 0 } => Err(AlgorithmError::ZeroK),
            _ => Ok(()),
        }
    }

    /// Greedy, 2-dominate and accept-all: the algorithms the lower-bound
    /// checks run against.
    pub fn stock() -> Vec<AlgorithmSpec> {
        vec![AlgorithmSpec::Greedy, AlgorithmSpec::KDominate { k: 2 }, AlgorithmSpec::AcceptAll]
    }

    pub fn name(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for AlgorithmSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgorithmSpec::Greedy => f.write_str("greedy"),
            AlgorithmSpec::KDominate { k } => write!(f, "{k}-dominate"),
            AlgorithmSpec::AcceptAll => f.write_str("accept-all"),
            AlgorithmSpec::Scripted { script } => write!(f, "scripted({})", script.len()),
        }
    }
}

/// Parses `greedy`, `accept-all`, `k-dominate` (k = 2), or `<k>-dominate`.
impl FromStr for AlgorithmSpec {
    type Err = AlgorithmError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let spec = match s {
            "greedy" => AlgorithmSpec::Greedy,
            "accept-all" | "accept_all" => AlgorithmSpec::AcceptAll,
            "k-dominate" | "k_dominate" => AlgorithmSpec::KDominate { k: 2 },
            other => match other.strip_suffix("-dominate").map(str::parse::<usize>) {
                Some(Ok(k)) => AlgorithmSpec::KDominate { k },
                _ => return Err(AlgorithmError::Unknown(s.to_string())),
            },
        };
        spec.validate()?;
        Ok(spec)
    }
}

impl OnlineAlgorithm for AlgorithmSpec {
    fn decide(&mut self, view: &StepView<'_>) -> bool {
        match self {
            AlgorithmSpec::Greedy => greedy_decide(view),
            AlgorithmSpec::KDominate { k } => k_dominate_decide(view, *k),
            AlgorithmSpec::AcceptAll => true,
            AlgorithmSpec::Scripted { script } => script.get(view.step() - 1).copied().unwrap_or(false),
        }
    }
}

/// Plays `alg` over the whole instance.
pub fn run_with(instance: &OnlineInstance, alg: &mut dyn OnlineAlgorithm) -> Result<GameTrace, EngineError> {
    let mut session = Session::new(instance);
    for _ in 0..instance.n() {
        session.reveal_next()?;
        let d = alg.decide(&session.view().expect("reveal leaves a pending step"));
        session.apply_decision(d)?;
    }
    session.finalize()
}

pub fn run_algorithm(instance: &OnlineInstance, spec: &AlgorithmSpec) -> Result<GameTrace, AlgorithmError> {
    spec.validate()?;
    if let AlgorithmSpec::Scripted { script } = spec {
        if script.len() != instance.n() {
            return Err(AlgorithmError::ScriptLength { got: script.len(), n: instance.n() });
        }
    }
    Ok(run_with(instance, &mut spec.clone())?)
}
