//! Charging audits on finished traces.
//!
//! Two schemes are checked. The even scheme gives each selected vertex one
//! unit and spreads it evenly over the vertices it newly dominated; trees
//! and cacti keep the charge on any OPT vertex's closed neighborhood small.
//! The bounded-degree scheme moves all charge onto OPT vertices through
//! heavy and light selections. All arithmetic is exact.

use std::collections::{BTreeMap, BTreeSet};

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, Vertex, VertexSet};
use crate::opt::OptError;
use crate::ratio::{self, ceil_sqrt, int, ratio};
use crate::revelation::GameTrace;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ChargeError {
    #[error("step {step} selected {vertex} but dominated nothing new")]
    EmptyCharge { step: usize, vertex: Vertex },
    #[error("vertex {vertex} is charged by both {first} and {second}")]
    ChargedTwice { vertex: Vertex, first: Vertex, second: Vertex },
    #[error("reference set is not dominating")]
    NotDominating,
    #[error(transparent)]
    Opt(#[from] OptError),
}

/// Charge per vertex after spreading, with the vertex each charge came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChargeMap {
    pub charge: Vec<BigRational>,
    pub source: Vec<Option<Vertex>>,
}

impl ChargeMap {
    pub fn total(&self) -> BigRational {
        self.charge.iter().fold(BigRational::zero(), |acc, c| acc + c)
    }

    /// Total charge equals the number of selected vertices.
    pub fn conserved(&self, trace: &GameTrace) -> bool {
        self.total() == int(trace.alg_size())
    }

    /// `ch*(N[v])`.
    pub fn closed_charge(&self, g: &Graph, v: Vertex) -> BigRational {
        g.closed_neighbors(v).iter().fold(BigRational::zero(), |acc, &u| acc + &self.charge[u])
    }

    pub fn charge_one(&self) -> Vec<Vertex> {
        let one = BigRational::one();
        (0..self.charge.len()).filter(|&v| self.charge[v] == one).collect()
    }
}

/// Each selected `v_i` gives `1 / |X_i|` to every vertex of `X_i`. The
/// `X_i` must be nonempty and pairwise disjoint.
pub fn spread_even(trace: &GameTrace) -> Result<ChargeMap, ChargeError> {
    let n = trace.n();
    let mut charge = vec![BigRational::zero(); n];
    let mut source: Vec<Option<Vertex>> = vec![None; n];
    for step in trace.steps.iter().filter(|s| s.selected()) {
        let x = &step.undominated_closed;
        if x.is_empty() {
            return Err(ChargeError::EmptyCharge { step: step.step, vertex: step.vertex });
        }
        let share = ratio(1, x.len());
        for &u in x {
            if let Some(first) = source[u] {
                return Err(ChargeError::ChargedTwice { vertex: u, first, second: step.vertex });
            }
            source[u] = Some(step.vertex);
            charge[u] = share.clone();
        }
    }
    Ok(ChargeMap { charge, source })
}

/// Largest `ch*(N[v])` over `v` in `opt`.
pub fn concentration(map: &ChargeMap, g: &Graph, opt: &VertexSet) -> Result<BigRational, ChargeError> {
    if !g.is_dominating(opt).map_err(OptError::from)? {
        return Err(ChargeError::NotDominating);
    }
    Ok(opt.iter().map(|&v| map.closed_charge(g, v)).max().unwrap_or_else(BigRational::zero))
}

/// Structure of the charge-1 vertices: no two adjacent, no two with a
/// common neighbor, at most one in any closed neighborhood.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChargeOneReport {
    pub charge_one: Vec<Vertex>,
    pub adjacent_pairs: Vec<(Vertex, Vertex)>,
    pub shared_neighbors: Vec<(Vertex, Vertex, Vertex)>,
    pub crowded_neighborhoods: Vec<Vertex>,
}

impl ChargeOneReport {
    pub fn violations(&self) -> usize {
        self.adjacent_pairs.len() + self.shared_neighbors.len() + self.crowded_neighborhoods.len()
    }

    pub fn passed(&self) -> bool {
        self.violations() == 0
    }

    pub fn describe(&self) -> Vec<String> {
        let mut out = Vec::new();
        for (u, v) in &self.adjacent_pairs {
            out.push(format!("charge-1 vertices {u} and {v} are adjacent"));
        }
        for (u, v, w) in &self.shared_neighbors {
            out.push(format!("charge-1 vertices {u} and {v} share neighbor {w}"));
        }
        for v in &self.crowded_neighborhoods {
            out.push(format!("N[{v}] holds more than one charge-1 vertex"));
        }
        out
    }
}

pub fn charge_one_structure(map: &ChargeMap, trace: &GameTrace) -> ChargeOneReport {
    let g = &trace.graph;
    let ones = map.charge_one();
    let is_one: BTreeSet<Vertex> = ones.iter().copied().collect();
    let mut report = ChargeOneReport { charge_one: ones.clone(), ..Default::default() };
    for (i, &u) in ones.iter().enumerate() {
        for &v in &ones[i + 1..] {
            if g.has_edge(u, v) {
                report.adjacent_pairs.push((u, v));
            }
            for &w in g.neighbors(u) {
                if g.has_edge(w, v) {
                    report.shared_neighbors.push((u, v, w));
                }
            }
        }
    }
    for v in g.vertices() {
        if g.closed_neighbors(v).iter().filter(|u| is_one.contains(u)).count() > 1 {
            report.crowded_neighborhoods.push(v);
        }
    }
    report
}

/// Selected vertices split by how many undominated neighbors they had when
/// chosen.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HeavyLightPartition {
    pub heavy: VertexSet,
    pub light: VertexSet,
    /// `⌈√Δ⌉`.
    pub threshold: usize,
    /// `⌊n / ⌈√Δ⌉⌋`.
    pub heavy_bound: usize,
}

impl HeavyLightPartition {
    pub fn heavy_within_bound(&self) -> bool {
        self.heavy.len() <= self.heavy_bound
    }
}

/// Heavy iff `|N(v_i) ∩ U_i| >= ⌈√Δ⌉`.
pub fn classify_heavy_light(trace: &GameTrace, delta: usize) -> HeavyLightPartition {
    let threshold = ceil_sqrt(delta).max(1);
    let mut heavy = VertexSet::new();
    let mut light = VertexSet::new();
    for s in trace.steps.iter().filter(|s| s.selected()) {
        if s.undominated_open_count() >= threshold {
            heavy.insert(s.vertex);
        } else {
            light.insert(s.vertex);
        }
    }
    HeavyLightPartition { heavy, light, threshold, heavy_bound: trace.n() / threshold }
}

/// Charge moved onto OPT vertices by the three bounded-degree rules.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundedDegreeCharge {
    #[serde(with = "charge_table")]
    pub opt_charge: BTreeMap<Vertex, BigRational>,
    /// Light selected vertices that sent charge to each OPT vertex (an OPT
    /// vertex that is itself light and selected counts itself).
    pub light_sources: BTreeMap<Vertex, VertexSet>,
    /// Light selections outside OPT with an empty save set; their unit of
    /// charge has nowhere to go.
    pub stranded: Vec<Vertex>,
}

mod charge_table {
    use std::collections::BTreeMap;

    use num_rational::BigRational;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    use crate::graph::Vertex;

    pub fn serialize<S: Serializer>(m: &BTreeMap<Vertex, BigRational>, s: S) -> Result<S::Ok, S::Error> {
        let flat: BTreeMap<Vertex, String> = m.iter().map(|(&v, r)| (v, crate::ratio::render(r))).collect();
        flat.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BTreeMap<Vertex, BigRational>, D::Error> {
        let flat = BTreeMap::<Vertex, String>::deserialize(d)?;
        flat.into_iter()
            .map(|(v, s)| {
                crate::ratio::parse(&s)
                    .map(|r| (v, r))
                    .ok_or_else(|| serde::de::Error::custom(format!("not a rational: {s:?}")))
            })
            .collect()
    }
}

impl BoundedDegreeCharge {
    pub fn total(&self) -> BigRational {
        self.opt_charge.values().fold(BigRational::zero(), |acc, c| acc + c)
    }

    pub fn conserved(&self, trace: &GameTrace) -> bool {
        self.total() == int(trace.alg_size())
    }

    pub fn max_charge(&self) -> BigRational {
        self.opt_charge.values().max().cloned().unwrap_or_else(BigRational::zero)
    }

    /// Every OPT vertex holds at most `3√Δ`.
    pub fn within_three_sqrt_delta(&self, delta: usize) -> bool {
        self.opt_charge.values().all(|c| ratio::le_scaled_sqrt(c, &int(3), delta))
    }

    pub fn max_light_sources(&self) -> usize {
        self.light_sources.values().map(BTreeSet::len).max().unwrap_or(0)
    }
}

/// Rule 1: a selected OPT vertex keeps its unit. Rule 2: a heavy vertex
/// outside OPT splits its unit evenly over OPT. Rule 3: a light vertex
/// outside OPT splits its unit over the vertices it saved, each share going
/// to the saved vertex if it is in OPT, else to its earliest-revealed OPT
/// neighbor.
pub fn spread_bounded_degree(
    trace: &GameTrace,
    opt: &VertexSet,
    partition: &HeavyLightPartition,
) -> Result<BoundedDegreeCharge, ChargeError> {
    let g = &trace.graph;
    if opt.is_empty() || !g.is_dominating(opt).map_err(OptError::from)? {
        return Err(ChargeError::NotDominating);
    }
    let positions = trace.positions();
    let mut opt_charge: BTreeMap<Vertex, BigRational> = opt.iter().map(|&v| (v, BigRational::zero())).collect();
    let mut light_sources: BTreeMap<Vertex, VertexSet> = opt.iter().map(|&v| (v, VertexSet::new())).collect();
    let mut stranded = Vec::new();
    let opt_of = |w: Vertex| -> Vertex {
        if opt.contains(&w) {
            w
        } else {
            *g.neighbors(w)
                .iter()
                .filter(|u| opt.contains(u))
                .min_by_key(|&&u| positions[u])
                .expect("opt dominates every vertex")
        }
    };

    for step in trace.steps.iter().filter(|s| s.selected()) {
        let v = step.vertex;
        if opt.contains(&v) {
            *opt_charge.get_mut(&v).expect("opt vertex") += BigRational::one();
            if partition.light.contains(&v) {
                light_sources.get_mut(&v).expect("opt vertex").insert(v);
            }
        } else if partition.heavy.contains(&v) {
            let share = ratio(1, opt.len());
            for c in opt_charge.values_mut() {
                *c += &share;
            }
        } else if step.saves.is_empty() {
            stranded.push(v);
        } else {
            let share = ratio(1, step.saves.len());
            for &w in &step.saves {
                let target = opt_of(w);
                *opt_charge.get_mut(&target).expect("opt vertex") += &share;
                light_sources.get_mut(&target).expect("opt vertex").insert(v);
            }
        }
    }
    Ok(BoundedDegreeCharge { opt_charge, light_sources, stranded })
}

/// `|H| / |OPT| <= √Δ + 1/√Δ`.
pub fn heavy_ratio_within_bound(partition: &HeavyLightPartition, opt_size: usize, delta: usize) -> bool {
    ratio::le_sqrt_plus_inverse(&ratio(partition.heavy.len(), opt_size), delta)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algorithms::{run_algorithm, AlgorithmSpec};
    use crate::revelation::OnlineInstance;

    fn trace(g: Graph, order: &[Vertex], spec: AlgorithmSpec) -> GameTrace {
        run_algorithm(&OnlineInstance::new(g, order.to_vec()).unwrap(), &spec).unwrap()
    }

    #[test]
    fn p2_even_spread() {
        let t = trace(Graph::path(2), &[0, 1], AlgorithmSpec::KDominate { k: 2 });
        let map = spread_even(&t).unwrap();
        assert_eq!(map.charge, vec![ratio(1, 2), ratio(1, 2)]);
        assert!(map.conserved(&t));
        assert_eq!(concentration(&map, &t.graph, &VertexSet::from([1])).unwrap(), int(1));
        let report = charge_one_structure(&map, &t);
        assert!(report.charge_one.is_empty() && report.passed());
    }

    #[test]
    fn star_center_spreads_over_everything() {
        let t = trace(Graph::star(4), &[0, 1, 2, 3, 4], AlgorithmSpec::KDominate { k: 2 });
        let map = spread_even(&t).unwrap();
        assert!(map.charge.iter().all(|c| *c == ratio(1, 5)));
        assert_eq!(map.total(), int(1));
    }

    #[test]
    fn accept_all_has_empty_charges() {
        let t = trace(Graph::path(2), &[0, 1], AlgorithmSpec::AcceptAll);
        assert_eq!(spread_even(&t), Err(ChargeError::EmptyCharge { step: 2, vertex: 1 }));
    }

    #[test]
    fn concentration_needs_dominating_reference() {
        let t = trace(Graph::path(3), &[0, 1, 2], AlgorithmSpec::Greedy);
        let map = spread_even(&t).unwrap();
        assert_eq!(concentration(&map, &t.graph, &VertexSet::from([0])), Err(ChargeError::NotDominating));
    }

    #[test]
    fn heavy_light_examples() {
        let t = trace(Graph::star(9), &(0..10).collect::<Vec<_>>(), AlgorithmSpec::sqrt_dominate(9));
        let p = classify_heavy_light(&t, 9);
        assert_eq!(p.heavy, VertexSet::from([0]));
        assert!(p.light.is_empty() && p.heavy_within_bound());

        let t = trace(Graph::path(2), &[0, 1], AlgorithmSpec::sqrt_dominate(4));
        let p = classify_heavy_light(&t, 4);
        assert_eq!(p.light, VertexSet::from([1]));
        let opt = VertexSet::from([1]);
        let spread = spread_bounded_degree(&t, &opt, &p).unwrap();
        assert_eq!(spread.opt_charge[&1], int(1));
        assert!(spread.conserved(&t) && spread.stranded.is_empty());
        assert_eq!(spread.light_sources[&1], VertexSet::from([1]));
    }

    #[test]
    fn light_charge_routes_to_earliest_opt_neighbor() {
        // path 0-1-2-3-4 revealed left to right, 2-dominate selects 1 and 4
        let t = trace(Graph::path(5), &[0, 1, 2, 3, 4], AlgorithmSpec::KDominate { k: 2 });
        assert_eq!(t.selected, VertexSet::from([1, 4]));
        let p = classify_heavy_light(&t, 4);
        let opt = VertexSet::from([1, 3]);
        let spread = spread_bounded_degree(&t, &opt, &p).unwrap();
        assert!(spread.conserved(&t));
        // vertex 4 saves 3 and itself; 3 is in OPT and 4's only OPT neighbor is 3
        assert_eq!(spread.opt_charge[&3], int(1));
        assert_eq!(spread.opt_charge[&1], int(1));
    }
}
