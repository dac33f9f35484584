//! Adaptive adversaries. Each one grows the input while the algorithm plays,
//! choosing how to continue from the decisions seen so far, and at the end
//! returns the finished instance, the trace and an explicit dominating set
//! (the OPT witness) that bounds the optimum from above.

mod cactus;
mod claw;
mod delta;
mod planar;
mod series_parallel;
mod threshold;
mod tree;

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algorithms::{AlgorithmSpec, OnlineAlgorithm};
use crate::classes::GraphClass;
use crate::graph::{Vertex, VertexSet};
use crate::opt::{min_cover, OptError};
use crate::ratio::{self, ratio};
use crate::revelation::{validate_order, EngineError, Game, GameTrace, OnlineInstance};

pub use cactus::cactus_adversary;
pub use claw::claw_adversary;
pub use delta::delta_adversary;
pub use planar::planar_bipartite_adversary;
pub use series_parallel::sp_adversary;
pub use threshold::{threshold_adversary, threshold_build};
pub use tree::tree_adversary;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AdversaryError {
    #[error("{kind} adversary needs {requirement}, got {param}")]
    Param { kind: AdversaryKind, requirement: &'static str, param: usize },
    #[error("unknown adversary {0:?}")]
    Unknown(String),
    #[error(transparent)]
    Engine(#[from] EngineError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum AdversaryKind {
    Tree,
    Cactus,
    Delta,
    Claw,
    Threshold,
    PlanarBipartite,
    Sp,
}

impl AdversaryKind {
    pub const ALL: [AdversaryKind; 7] = [
        AdversaryKind::Tree,
        AdversaryKind::Cactus,
        AdversaryKind::Delta,
        AdversaryKind::Claw,
        AdversaryKind::Threshold,
        AdversaryKind::PlanarBipartite,
        AdversaryKind::Sp,
    ];

    pub fn name(self) -> &'static str {
        match self {
            AdversaryKind::Tree => "tree",
            AdversaryKind::Cactus => "cactus",
            AdversaryKind::Delta => "delta",
            AdversaryKind::Claw => "claw",
            AdversaryKind::Threshold => "threshold",
            AdversaryKind::PlanarBipartite => "planar-bipartite",
            AdversaryKind::Sp => "sp",
        }
    }

    /// Smallest parameter the construction accepts.
    pub fn min_param(self) -> usize {
        match self {
            AdversaryKind::Tree | AdversaryKind::Delta => 4,
            AdversaryKind::Cactus => 1,
            AdversaryKind::Claw | AdversaryKind::Threshold => 3,
            AdversaryKind::PlanarBipartite | AdversaryKind::Sp => 2,
        }
    }

    pub fn run(self, param: usize, alg: &mut dyn OnlineAlgorithm) -> Result<AdversaryOutcome, AdversaryError> {
        match self {
            AdversaryKind::Tree => tree_adversary(alg, param),
            AdversaryKind::Cactus => cactus_adversary(alg, param),
            AdversaryKind::Delta => delta_adversary(alg, param),
            AdversaryKind::Claw => claw_adversary(alg, param),
            AdversaryKind::Threshold => threshold_adversary(alg, param),
            AdversaryKind::PlanarBipartite => planar_bipartite_adversary(alg, param, 1),
            AdversaryKind::Sp => sp_adversary(alg, param),
        }
    }

    /// Runs against a stock algorithm. A scripted algorithm answers steps
    /// beyond its script with a rejection.
    pub fn run_spec(self, param: usize, spec: &AlgorithmSpec) -> Result<AdversaryOutcome, AdversaryError> {
        self.run(param, &mut spec.clone())
    }
}

impl fmt::Display for AdversaryKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for AdversaryKind {
    type Err = AdversaryError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "tree" => AdversaryKind::Tree,
            "cactus" => AdversaryKind::Cactus,
            "delta" | "bounded" => AdversaryKind::Delta,
            "claw" | "claw-free" => AdversaryKind::Claw,
            "threshold" => AdversaryKind::Threshold,
            "planar-bipartite" | "bipartite" => AdversaryKind::PlanarBipartite,
            "sp" | "series-parallel" => AdversaryKind::Sp,
            other => return Err(AdversaryError::Unknown(other.to_string())),
        })
    }
}

fn check_param(kind: AdversaryKind, param: usize, ok: bool, requirement: &'static str) -> Result<(), AdversaryError> {
    if ok {
        Ok(())
    } else {
        Err(AdversaryError::Param { kind, requirement, param })
    }
}

/// A piece of the final graph with its own ALG/OPT accounting.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Region {
    pub label: String,
    /// Vertices whose selection counts toward ALG in this region.
    pub vertices: VertexSet,
    /// Vertices the region's OPT share must dominate.
    pub must_dominate: VertexSet,
    /// The region's share of the OPT witness.
    pub opt: VertexSet,
    /// Whether the region enters the per-region ratio check.
    pub counted: bool,
}

impl Region {
    pub fn alg_count(&self, trace: &GameTrace) -> usize {
        self.vertices.intersection(&trace.selected).count()
    }
}

#[derive(Debug, Clone)]
pub struct AdversaryOutcome {
    pub kind: AdversaryKind,
    pub param: usize,
    pub class: GraphClass,
    pub trace: GameTrace,
    pub opt_witness: VertexSet,
    pub guaranteed_ratio: BigRational,
    pub regions: Vec<Region>,
}

/// Result of checking an outcome against its claims.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutcomeAudit {
    pub witness_dominating: bool,
    pub class_member: bool,
    pub order_valid: bool,
    /// `None` when the algorithm was infeasible and no ratio is defined.
    pub meets_guarantee: Option<bool>,
    /// Labels of counted regions whose ALG/OPT falls below 5/2.
    pub weak_regions: Vec<String>,
}

impl OutcomeAudit {
    pub fn passed(&self) -> bool {
        self.witness_dominating
            && self.class_member
            && self.order_valid
            && self.meets_guarantee != Some(false)
            && self.weak_regions.is_empty()
    }
}

/// Flat, serializable summary of an adversary run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdversaryReport {
    pub class: AdversaryKind,
    pub param: usize,
    pub algorithm: String,
    pub n: usize,
    pub alg: usize,
    pub opt_witness: usize,
    pub witness: Vec<Vertex>,
    pub feasible: bool,
    #[serde(with = "ratio::as_opt_string")]
    pub ratio: Option<BigRational>,
    #[serde(with = "ratio::as_string")]
    pub guaranteed_ratio: BigRational,
    pub certificate: String,
    pub audit: OutcomeAudit,
}

impl AdversaryOutcome {
    pub fn instance(&self) -> OnlineInstance {
        self.trace.instance()
    }

    pub fn alg_size(&self) -> usize {
        self.trace.alg_size()
    }

    /// ALG / |witness|, or `None` for an infeasible run.
    pub fn ratio(&self) -> Option<BigRational> {
        self.trace.feasible.then(|| ratio(self.alg_size(), self.opt_witness.len()))
    }

    /// Counted regions whose ALG share is below 5/2 of their exact cover
    /// number. Only meaningful for feasible runs.
    pub fn weak_regions(&self) -> Vec<String> {
        if !self.trace.feasible {
            return Vec::new();
        }
        self.regions
            .iter()
            .filter(|r| r.counted)
            .filter(|r| {
                let opt = min_cover(&self.trace.graph, &r.must_dominate).map(|c| c.len()).unwrap_or(usize::MAX);
                2 * r.alg_count(&self.trace) < 5 * opt
            })
            .map(|r| r.label.clone())
            .collect()
    }

    pub fn audit(&self) -> OutcomeAudit {
        let g = &self.trace.graph;
        OutcomeAudit {
            witness_dominating: g.is_dominating(&self.opt_witness).unwrap_or(false),
            class_member: self.class.recognize(g),
            order_valid: validate_order(g, &self.trace.order).is_ok(),
            meets_guarantee: self.ratio().map(|r| r >= self.guaranteed_ratio),
            weak_regions: self.weak_regions(),
        }
    }

    pub fn report(&self, algorithm: &str) -> AdversaryReport {
        AdversaryReport {
            class: self.kind,
            param: self.param,
            algorithm: algorithm.to_string(),
            n: self.trace.n(),
            alg: self.alg_size(),
            opt_witness: self.opt_witness.len(),
            witness: self.opt_witness.iter().copied().collect(),
            feasible: self.trace.feasible,
            ratio: self.ratio(),
            guaranteed_ratio: self.guaranteed_ratio.clone(),
            certificate: self.class.certificate(),
            audit: self.audit(),
        }
    }

    /// Exact cover number of each region, for cross-checking region OPT shares.
    pub fn region_covers(&self) -> Result<Vec<usize>, OptError> {
        self.regions.iter().map(|r| min_cover(&self.trace.graph, &r.must_dominate).map(|c| c.len())).collect()
    }
}

/// Lazily built input. Vertices are allocated on demand; edges may only be
/// added between vertices that have not been revealed yet, so every reveal
/// hands the engine a final neighbor list.
pub(crate) struct Arena<'a> {
    game: Game,
    adj: Vec<BTreeSet<Vertex>>,
    alg: &'a mut dyn OnlineAlgorithm,
}

impl<'a> Arena<'a> {
    pub(crate) fn new(alg: &'a mut dyn OnlineAlgorithm) -> Self {
        Arena { game: Game::new(), adj: Vec::new(), alg }
    }

    pub(crate) fn fresh(&mut self) -> Vertex {
        self.adj.push(BTreeSet::new());
        self.adj.len() - 1
    }

    pub(crate) fn link(&mut self, u: Vertex, v: Vertex) {
        assert!(!self.game.is_revealed(u) && !self.game.is_revealed(v), "edge {{{u}, {v}}} touches a revealed vertex");
        assert_ne!(u, v);
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    /// `count` fresh vertices, each joined to `v`.
    pub(crate) fn children(&mut self, v: Vertex, count: usize) -> Vec<Vertex> {
        (0..count)
            .map(|_| {
                let c = self.fresh();
                self.link(v, c);
                c
            })
            .collect()
    }

    /// Joins every pair of `vs` that is not yet adjacent.
    pub(crate) fn clique(&mut self, vs: &[Vertex]) {
        for (i, &u) in vs.iter().enumerate() {
            for &v in &vs[i + 1..] {
                if !self.is_adjacent(u, v) {
                    self.link(u, v);
                }
            }
        }
    }

    pub(crate) fn is_adjacent(&self, u: Vertex, v: Vertex) -> bool {
        self.adj[u].contains(&v)
    }

    /// Reveals `v` with its current neighbor list and returns the decision.
    pub(crate) fn reveal(&mut self, v: Vertex) -> Result<bool, AdversaryError> {
        let nbrs: Vec<Vertex> = self.adj[v].iter().copied().collect();
        self.game.reveal(v, &nbrs)?;
        let d = self.alg.decide(&self.game.view().expect("reveal leaves a pending step"));
        self.game.decide(d)?;
        Ok(d)
    }

    pub(crate) fn reveal_all(&mut self, vs: &[Vertex]) -> Result<(), AdversaryError> {
        for &v in vs {
            self.reveal(v)?;
        }
        Ok(())
    }

    pub(crate) fn is_revealed(&self, v: Vertex) -> bool {
        self.game.is_revealed(v)
    }

    /// Visible vertices that have not been revealed, in id order.
    pub(crate) fn pending_visible(&self) -> Vec<Vertex> {
        (0..self.adj.len()).filter(|&v| self.game.is_visible(v) && !self.game.is_revealed(v)).collect()
    }

    pub(crate) fn finish(self) -> Result<GameTrace, AdversaryError> {
        Ok(self.game.finalize()?)
    }
}
