//! The online game.
//!
//! Vertices are revealed one at a time together with their complete
//! neighbor lists; each revealed vertex must already be visible (adjacent to
//! something revealed earlier), which is exactly the connected-prefix rule.
//! After every reveal the decision source answers select / reject, and the
//! next reveal is refused until it has.
//!
//! The engine owns every derived quantity: visibility, the revelation tree
//! (parent pointers, tree and cross edges), the undominated visible set
//! `U_i`, and the save set `s(v_i)`. Decision sources only ever see a
//! read-only [`StepView`].
//!
//! Steps are numbered from 1; step `i` reveals `order[i - 1]`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, GraphError, Vertex, VertexSet};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EngineError {
    #[error("step {step} is still waiting for a decision")]
    DecisionPending { step: usize },
    #[error("no revealed vertex is waiting for a decision")]
    NoPendingVertex,
    #[error("vertex {0} is not visible and cannot be revealed")]
    NotVisible(Vertex),
    #[error("vertex {0} was already revealed")]
    AlreadyRevealed(Vertex),
    #[error("neighbor list of {vertex} is malformed: {reason}")]
    BadNeighborhood { vertex: Vertex, reason: String },
    #[error("neighbor list of {vertex} disagrees with earlier reveals about {other}")]
    Inconsistent { vertex: Vertex, other: Vertex },
    #[error("game is complete")]
    GameComplete,
    #[error("game is incomplete: {0}")]
    Incomplete(String),
    #[error("step {step} out of range (1..={max})")]
    StepOutOfRange { step: usize, max: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OrderError {
    #[error("order is not a permutation of 0..{n}")]
    NotPermutation { n: usize },
    #[error("prefix of length {index} induces a disconnected subgraph")]
    Disconnected { index: usize },
}

/// Checks that every prefix of `order` induces a connected subgraph.
/// On failure reports the first offending prefix length (1-based).
pub fn validate_order(g: &Graph, order: &[Vertex]) -> Result<(), OrderError> {
    let n = g.n();
    let mut seen = vec![false; n];
    if order.len() != n {
        return Err(OrderError::NotPermutation { n });
    }
    for &v in order {
        if v >= n || std::mem::replace(&mut seen[v], true) {
            return Err(OrderError::NotPermutation { n });
        }
    }
    let mut revealed = vec![false; n];
    for (i, &v) in order.iter().enumerate() {
        // a prefix stays connected iff each new vertex touches an earlier one
        if i > 0 && !g.neighbors(v).iter().any(|&u| revealed[u]) {
            return Err(OrderError::Disconnected { index: i + 1 });
        }
        revealed[v] = true;
    }
    Ok(())
}

/// A graph together with a revelation order whose prefixes are connected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OnlineInstance {
    graph: Graph,
    order: Vec<Vertex>,
}

/// `{"n": .., "edges": [[u, v], ..], "order": [..]}`. `order` may be
/// omitted when a caller supplies an order policy instead.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct InstanceJson {
    pub n: usize,
    pub edges: Vec<[Vertex; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<Vec<Vertex>>,
}

impl OnlineInstance {
    pub fn new(graph: Graph, order: Vec<Vertex>) -> Result<Self, OrderError> {
        validate_order(&graph, &order)?;
        Ok(OnlineInstance { graph, order })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn order(&self) -> &[Vertex] {
        &self.order
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn to_json(&self) -> InstanceJson {
        let g = self.graph.to_json();
        InstanceJson { n: g.n, edges: g.edges, order: Some(self.order.clone()) }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum EdgeKind {
    Tree,
    Cross,
}

/// Everything the engine derived at one step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StepRecord {
    pub step: usize,
    pub vertex: Vertex,
    /// `N(v_i)`, sorted.
    pub neighbors: Vec<Vertex>,
    /// `C_i = V_i \ V_{i-1}`.
    pub newly_visible: Vec<Vertex>,
    /// `N[v_i] ∩ U_i`; for selected steps this is the charged set `X_i`.
    pub undominated_closed: Vec<Vertex>,
    /// `s(v_i)`.
    pub saves: Vec<Vertex>,
    /// `None` while the decision is pending.
    pub decision: Option<bool>,
}

impl StepRecord {
    pub fn selected(&self) -> bool {
        self.decision == Some(true)
    }

    /// `|N(v_i) ∩ U_i|`: undominated neighbors, excluding `v_i` itself.
    pub fn undominated_open_count(&self) -> usize {
        self.undominated_closed.iter().filter(|&&u| u != self.vertex).count()
    }
}

/// The evolving game state. Vertex ids may be introduced lazily (as
/// adversaries do); storage grows to fit.
#[derive(Debug, Clone, Default)]
pub struct Game {
    adjacency: Vec<Option<Vec<Vertex>>>,
    listed_by: Vec<Vec<Vertex>>,
    position: Vec<Option<usize>>,
    visible: Vec<bool>,
    parent: Vec<Option<Vertex>>,
    selected: Vec<bool>,
    dominated: Vec<bool>,
    edge_kinds: BTreeMap<(Vertex, Vertex), EdgeKind>,
    steps: Vec<StepRecord>,
    visible_count: usize,
    pending: bool,
}

fn edge_key(u: Vertex, v: Vertex) -> (Vertex, Vertex) {
    (u.min(v), u.max(v))
}

impl Game {
    pub fn new() -> Self {
        Self::default()
    }

    fn grow(&mut self, v: Vertex) {
        if v >= self.adjacency.len() {
            let len = v + 1;
            self.adjacency.resize(len, None);
            self.listed_by.resize(len, Vec::new());
            self.position.resize(len, None);
            self.visible.resize(len, false);
            self.parent.resize(len, None);
            self.selected.resize(len, false);
            self.dominated.resize(len, false);
        }
    }

    /// Current step number (number of reveals so far).
    pub fn step(&self) -> usize {
        self.steps.len()
    }

    pub fn is_pending(&self) -> bool {
        self.pending
    }

    pub fn is_revealed(&self, v: Vertex) -> bool {
        self.position.get(v).is_some_and(Option::is_some)
    }

    pub fn is_visible(&self, v: Vertex) -> bool {
        self.visible.get(v).copied().unwrap_or(false)
    }

    pub fn is_selected(&self, v: Vertex) -> bool {
        self.selected.get(v).copied().unwrap_or(false)
    }

    /// Dominated after the most recent decision (`D_{i-1}` while a decision
    /// is pending, `D_i` afterwards).
    pub fn is_dominated(&self, v: Vertex) -> bool {
        self.dominated.get(v).copied().unwrap_or(false)
    }

    pub fn position(&self, v: Vertex) -> Option<usize> {
        self.position.get(v).copied().flatten()
    }

    pub fn parent(&self, v: Vertex) -> Option<Vertex> {
        self.parent.get(v).copied().flatten()
    }

    pub fn revealed_neighbors(&self, v: Vertex) -> Option<&[Vertex]> {
        self.adjacency.get(v).and_then(|a| a.as_deref())
    }

    pub fn steps(&self) -> &[StepRecord] {
        &self.steps
    }

    pub fn edge_kind(&self, u: Vertex, v: Vertex) -> Option<EdgeKind> {
        self.edge_kinds.get(&edge_key(u, v)).copied()
    }

    fn collect(&self, flags: &[bool]) -> VertexSet {
        flags.iter().enumerate().filter(|(_, &b)| b).map(|(v, _)| v).collect()
    }

    /// `R_i`.
    pub fn revealed_set(&self) -> VertexSet {
        self.position.iter().enumerate().filter(|(_, p)| p.is_some()).map(|(v, _)| v).collect()
    }

    /// `V_i`.
    pub fn visible_set(&self) -> VertexSet {
        self.collect(&self.visible)
    }

    /// `S_i` (or `S_{i-1}` while pending).
    pub fn selected_set(&self) -> VertexSet {
        self.collect(&self.selected)
    }

    /// `D_i` (or `D_{i-1}` while pending).
    pub fn dominated_set(&self) -> VertexSet {
        self.collect(&self.dominated)
    }

    /// Visible but not dominated. While a decision is pending this is `U_i`.
    pub fn undominated_visible(&self) -> VertexSet {
        (0..self.visible.len()).filter(|&v| self.visible[v] && !self.dominated[v]).collect()
    }

    /// Reveals `v` with its complete neighbor list.
    pub fn reveal(&mut self, v: Vertex, neighbors: &[Vertex]) -> Result<&StepRecord, EngineError> {
        if self.pending {
            return Err(EngineError::DecisionPending { step: self.step() });
        }
        if self.is_revealed(v) {
            return Err(EngineError::AlreadyRevealed(v));
        }
        if !self.steps.is_empty() && !self.is_visible(v) {
            if self.is_complete() {
                return Err(EngineError::GameComplete);
            }
            return Err(EngineError::NotVisible(v));
        }
        let mut nbrs = neighbors.to_vec();
        nbrs.sort_unstable();
        if nbrs.windows(2).any(|w| w[0] == w[1]) {
            return Err(EngineError::BadNeighborhood { vertex: v, reason: "duplicate neighbor".into() });
        }
        if nbrs.contains(&v) {
            return Err(EngineError::BadNeighborhood { vertex: v, reason: "self-loop".into() });
        }
        self.grow(v);
        if let Some(&max) = nbrs.last() {
            self.grow(max);
        }
        // earlier reveals fixed some of v's edges; they must match exactly
        for &u in &nbrs {
            if self.is_revealed(u) && !self.listed_by[v].contains(&u) {
                return Err(EngineError::Inconsistent { vertex: v, other: u });
            }
        }
        if let Some(&u) = self.listed_by[v].iter().find(|u| !nbrs.contains(u)) {
            return Err(EngineError::Inconsistent { vertex: v, other: u });
        }

        let step = self.steps.len() + 1;
        self.position[v] = Some(step);
        self.adjacency[v] = Some(nbrs.clone());
        let mut newly_visible = Vec::new();
        if !self.visible[v] {
            self.visible[v] = true;
            self.visible_count += 1;
            newly_visible.push(v);
        }
        for &u in &nbrs {
            self.listed_by[u].push(v);
            if !self.visible[u] {
                self.visible[u] = true;
                self.visible_count += 1;
                self.parent[u] = Some(v);
                newly_visible.push(u);
                self.edge_kinds.insert(edge_key(u, v), EdgeKind::Tree);
            } else {
                self.edge_kinds.entry(edge_key(u, v)).or_insert(EdgeKind::Cross);
            }
        }
        newly_visible.sort_unstable();

        let mut closed = nbrs.clone();
        closed.push(v);
        closed.sort_unstable();
        let undominated_closed: Vec<Vertex> = closed.iter().copied().filter(|&u| !self.dominated[u]).collect();
        let saves = closed.iter().copied().filter(|&w| self.is_saved_by(w, v)).collect();

        self.steps.push(StepRecord {
            step,
            vertex: v,
            neighbors: nbrs,
            newly_visible,
            undominated_closed,
            saves,
            decision: None,
        });
        self.pending = true;
        Ok(self.steps.last().expect("just pushed"))
    }

    /// `v` is the last vertex of `N[w]` to be revealed and nothing else in
    /// `N[w]` has been selected.
    fn is_saved_by(&self, w: Vertex, v: Vertex) -> bool {
        let Some(adj) = self.revealed_neighbors(w) else { return false };
        adj.iter().all(|&x| self.is_revealed(x))
            && !(w != v && self.selected[w])
            && adj.iter().all(|&x| x == v || !self.selected[x])
    }

    /// Read-only view of the pending step for a decision source.
    pub fn view(&self) -> Option<StepView<'_>> {
        self.pending.then(|| StepView { game: self, record: self.steps.last().expect("pending step") })
    }

    /// Irrevocably records the decision for the pending vertex.
    pub fn decide(&mut self, select: bool) -> Result<(), EngineError> {
        if !self.pending {
            return Err(EngineError::NoPendingVertex);
        }
        let record = self.steps.last_mut().expect("pending step");
        record.decision = Some(select);
        if select {
            let v = record.vertex;
            self.selected[v] = true;
            self.dominated[v] = true;
            for &u in &record.neighbors {
                self.dominated[u] = true;
            }
        }
        self.pending = false;
        Ok(())
    }

    /// No pending decision and nothing visible is left unrevealed.
    pub fn is_complete(&self) -> bool {
        !self.pending && !self.steps.is_empty() && self.visible_count == self.steps.len()
    }

    /// Save set of step `j` (1-based), available as soon as `v_j` is revealed.
    pub fn saved_by(&self, j: usize) -> Result<&[Vertex], EngineError> {
        if j == 0 || j > self.steps.len() {
            return Err(EngineError::StepOutOfRange { step: j, max: self.steps.len() });
        }
        Ok(&self.steps[j - 1].saves)
    }

    /// Materializes the final graph and closes the game.
    pub fn finalize(self) -> Result<GameTrace, EngineError> {
        if self.pending {
            return Err(EngineError::DecisionPending { step: self.step() });
        }
        if !self.is_complete() {
            return Err(EngineError::Incomplete(format!(
                "{} of {} visible vertices revealed",
                self.steps.len(),
                self.visible_count
            )));
        }
        if let Some(v) = self.position.iter().position(Option::is_none) {
            return Err(EngineError::Incomplete(format!("vertex id {v} never revealed")));
        }
        let adj: Vec<Vec<Vertex>> = self.adjacency.into_iter().map(|a| a.unwrap_or_default()).collect();
        let graph = Graph::from_adjacency(adj)?;
        let selected: VertexSet = self.selected.iter().enumerate().filter(|(_, &b)| b).map(|(v, _)| v).collect();
        let feasible = graph.is_dominating(&selected)?;
        let order = self.steps.iter().map(|s| s.vertex).collect();
        Ok(GameTrace {
            graph,
            order,
            steps: self.steps,
            parent: self.parent,
            edge_kinds: self.edge_kinds,
            selected,
            feasible,
        })
    }
}

/// What a decision source may look at when `v_i` is pending.
#[derive(Debug, Clone, Copy)]
pub struct StepView<'a> {
    game: &'a Game,
    record: &'a StepRecord,
}

impl<'a> StepView<'a> {
    pub fn step(&self) -> usize {
        self.record.step
    }

    pub fn vertex(&self) -> Vertex {
        self.record.vertex
    }

    pub fn neighbors(&self) -> &'a [Vertex] {
        &self.record.neighbors
    }

    /// Membership in `U_i`.
    pub fn is_undominated(&self, u: Vertex) -> bool {
        self.game.is_visible(u) && !self.game.is_dominated(u)
    }

    /// `|N(v_i) ∩ U_i|`.
    pub fn undominated_neighbors(&self) -> usize {
        self.record.undominated_open_count()
    }

    /// `N[v_i] ∩ U_i`.
    pub fn undominated_closed(&self) -> &'a [Vertex] {
        &self.record.undominated_closed
    }

    /// `s(v_i)`.
    pub fn saves(&self) -> &'a [Vertex] {
        &self.record.saves
    }

    pub fn newly_visible(&self) -> &'a [Vertex] {
        &self.record.newly_visible
    }

    pub fn game(&self) -> &'a Game {
        self.game
    }
}

/// Drives a [`Game`] over a fixed instance.
#[derive(Debug)]
pub struct Session<'a> {
    instance: &'a OnlineInstance,
    game: Game,
}

impl<'a> Session<'a> {
    pub fn new(instance: &'a OnlineInstance) -> Self {
        Session { instance, game: Game::new() }
    }

    pub fn game(&self) -> &Game {
        &self.game
    }

    /// Reveals the next vertex of the order with its full neighbor list.
    pub fn reveal_next(&mut self) -> Result<&StepRecord, EngineError> {
        let i = self.game.step();
        if self.game.is_pending() {
            return Err(EngineError::DecisionPending { step: i });
        }
        let Some(&v) = self.instance.order.get(i) else {
            return Err(EngineError::GameComplete);
        };
        self.game.reveal(v, self.instance.graph.neighbors(v))
    }

    pub fn view(&self) -> Option<StepView<'_>> {
        self.game.view()
    }

    pub fn apply_decision(&mut self, select: bool) -> Result<(), EngineError> {
        self.game.decide(select)
    }

    pub fn saved_by(&self, j: usize) -> Result<&[Vertex], EngineError> {
        self.game.saved_by(j)
    }

    pub fn is_done(&self) -> bool {
        self.game.step() == self.instance.n() && !self.game.is_pending()
    }

    pub fn finalize(self) -> Result<GameTrace, EngineError> {
        if !self.is_done() {
            return Err(EngineError::Incomplete(format!(
                "{} of {} vertices decided",
                self.game.steps().iter().filter(|s| s.decision.is_some()).count(),
                self.instance.n()
            )));
        }
        self.game.finalize()
    }
}

/// A finished game.
#[derive(Debug, Clone)]
pub struct GameTrace {
    pub graph: Graph,
    pub order: Vec<Vertex>,
    pub steps: Vec<StepRecord>,
    pub parent: Vec<Option<Vertex>>,
    pub edge_kinds: BTreeMap<(Vertex, Vertex), EdgeKind>,
    pub selected: VertexSet,
    pub feasible: bool,
}

/// `{"decisions": [..], "selected": [..], "feasible": .., "saves": [[j, [..]], ..],
/// "x_sets": [[i, [..]], ..]}`; step numbers are 1-based.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct TraceJson {
    pub decisions: Vec<bool>,
    pub selected: Vec<Vertex>,
    pub feasible: bool,
    pub saves: Vec<(usize, Vec<Vertex>)>,
    pub x_sets: Vec<(usize, Vec<Vertex>)>,
}

impl GameTrace {
    pub fn instance(&self) -> OnlineInstance {
        OnlineInstance { graph: self.graph.clone(), order: self.order.clone() }
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn alg_size(&self) -> usize {
        self.selected.len()
    }

    pub fn decisions(&self) -> Vec<bool> {
        self.steps.iter().map(StepRecord::selected).collect()
    }

    /// Reveal step (1-based) of every vertex.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.n()];
        for s in &self.steps {
            pos[s.vertex] = s.step;
        }
        pos
    }

    pub fn step_of(&self, v: Vertex) -> &StepRecord {
        &self.steps[self.positions()[v] - 1]
    }

    /// `(i, X_i)` for every selected step.
    pub fn x_sets(&self) -> Vec<(usize, Vec<Vertex>)> {
        self.steps.iter().filter(|s| s.selected()).map(|s| (s.step, s.undominated_closed.clone())).collect()
    }

    /// `(j, s(v_j))` for every step with a nonempty save set.
    pub fn save_events(&self) -> Vec<(usize, Vec<Vertex>)> {
        self.steps.iter().filter(|s| !s.saves.is_empty()).map(|s| (s.step, s.saves.clone())).collect()
    }

    pub fn cross_edges(&self) -> Vec<(Vertex, Vertex)> {
        self.edge_kinds.iter().filter(|(_, &k)| k == EdgeKind::Cross).map(|(&e, _)| e).collect()
    }

    pub fn cross_degree(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n()];
        for (u, v) in self.cross_edges() {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    pub fn to_json(&self) -> TraceJson {
        TraceJson {
            decisions: self.decisions(),
            selected: self.selected.iter().copied().collect(),
            feasible: self.feasible,
            saves: self.save_events(),
            x_sets: self.x_sets(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn session_play(instance: &OnlineInstance, decisions: &[bool]) -> GameTrace {
        let mut s = Session::new(instance);
        for &d in decisions {
            s.reveal_next().unwrap();
            s.apply_decision(d).unwrap();
        }
        s.finalize().unwrap()
    }

    #[test]
    fn validate_order_examples() {
        let p3 = Graph::path(3);
        assert_eq!(validate_order(&p3, &[1, 0, 2]), Ok(()));
        assert_eq!(validate_order(&p3, &[0, 2, 1]), Err(OrderError::Disconnected { index: 2 }));
        assert_eq!(validate_order(&p3, &[0, 0, 1]), Err(OrderError::NotPermutation { n: 3 }));
        assert_eq!(validate_order(&p3, &[0, 1]), Err(OrderError::NotPermutation { n: 3 }));
    }

    #[test]
    fn first_reveal_makes_neighbors_children() {
        let inst = OnlineInstance::new(Graph::star(3), vec![0, 1, 2, 3]).unwrap();
        let mut s = Session::new(&inst);
        let rec = s.reveal_next().unwrap().clone();
        assert_eq!(rec.newly_visible, vec![0, 1, 2, 3]);
        for leaf in 1..=3 {
            assert_eq!(s.game().parent(leaf), Some(0));
        }
        assert_eq!(s.game().visible_set(), (0..4).collect());
    }

    #[test]
    fn second_reveal_of_p3_adds_nothing() {
        let inst = OnlineInstance::new(Graph::path(3), vec![1, 0, 2]).unwrap();
        let mut s = Session::new(&inst);
        s.reveal_next().unwrap();
        s.apply_decision(false).unwrap();
        let rec = s.reveal_next().unwrap();
        assert_eq!(rec.vertex, 0);
        assert!(rec.newly_visible.is_empty());
    }

    #[test]
    fn selecting_center_dominates_star() {
        let inst = OnlineInstance::new(Graph::star(3), vec![0, 1, 2, 3]).unwrap();
        let mut s = Session::new(&inst);
        s.reveal_next().unwrap();
        s.apply_decision(true).unwrap();
        assert_eq!(s.game().dominated_set(), (0..4).collect());
        for _ in 1..4 {
            let rec = s.reveal_next().unwrap();
            assert!(rec.saves.is_empty());
            s.apply_decision(false).unwrap();
        }
        assert!(s.finalize().unwrap().feasible);
    }

    #[test]
    fn state_machine_rejects_out_of_turn_calls() {
        let inst = OnlineInstance::new(Graph::path(2), vec![0, 1]).unwrap();
        let mut s = Session::new(&inst);
        assert_eq!(s.apply_decision(true), Err(EngineError::NoPendingVertex));
        s.reveal_next().unwrap();
        assert_eq!(s.reveal_next().unwrap_err(), EngineError::DecisionPending { step: 1 });
        s.apply_decision(false).unwrap();
        assert_eq!(s.apply_decision(false), Err(EngineError::NoPendingVertex));
        s.reveal_next().unwrap();
        s.apply_decision(false).unwrap();
        assert!(matches!(s.reveal_next(), Err(EngineError::GameComplete)));
    }

    #[test]
    fn p2_save_sets() {
        let inst = OnlineInstance::new(Graph::path(2), vec![0, 1]).unwrap();
        let mut s = Session::new(&inst);
        s.reveal_next().unwrap();
        assert!(s.saved_by(1).unwrap().is_empty());
        s.apply_decision(false).unwrap();
        s.reveal_next().unwrap();
        assert_eq!(s.saved_by(2).unwrap(), &[0, 1]);
        assert!(s.saved_by(3).is_err());
        s.apply_decision(false).unwrap();
        let trace = s.finalize().unwrap();
        assert!(!trace.feasible);
        assert!(trace.selected.is_empty());
    }

    #[test]
    fn single_vertex_saves_itself() {
        let inst = OnlineInstance::new(Graph::from_edges(1, &[]).unwrap(), vec![0]).unwrap();
        let mut s = Session::new(&inst);
        let rec = s.reveal_next().unwrap();
        assert_eq!(rec.saves, vec![0]);
        s.apply_decision(true).unwrap();
        let t = s.finalize().unwrap();
        assert!(t.feasible);
        assert!(t.edge_kinds.is_empty());
    }

    #[test]
    fn finalize_refuses_incomplete_game() {
        let inst = OnlineInstance::new(Graph::path(3), vec![0, 1, 2]).unwrap();
        let mut s = Session::new(&inst);
        s.reveal_next().unwrap();
        s.apply_decision(true).unwrap();
        assert!(matches!(s.finalize(), Err(EngineError::Incomplete(_))));
    }

    #[test]
    fn cycle_gets_one_cross_edge() {
        let inst = OnlineInstance::new(Graph::cycle(4), vec![0, 1, 2, 3]).unwrap();
        let t = session_play(&inst, &[true, false, true, false]);
        assert_eq!(t.cross_edges(), vec![(2, 3)]);
        assert_eq!(t.parent[2], Some(1));
        assert_eq!(t.parent[3], Some(0));
    }

    #[test]
    fn lazy_reveals_are_checked_for_consistency() {
        let mut g = Game::new();
        g.reveal(0, &[1, 2]).unwrap();
        g.decide(false).unwrap();
        assert!(matches!(g.reveal(5, &[]), Err(EngineError::NotVisible(5))));
        // 1 must list 0 as a neighbor
        assert!(matches!(g.reveal(1, &[2]), Err(EngineError::Inconsistent { vertex: 1, other: 0 })));
        g.reveal(1, &[0, 2]).unwrap();
        g.decide(false).unwrap();
        assert!(matches!(g.reveal(2, &[0]), Err(EngineError::Inconsistent { vertex: 2, other: 1 })));
        assert!(matches!(g.reveal(2, &[0, 1, 1]), Err(EngineError::BadNeighborhood { .. })));
        g.reveal(2, &[0, 1]).unwrap();
        assert_eq!(g.view().unwrap().saves(), &[0, 1, 2]);
        g.decide(true).unwrap();
        let t = g.finalize().unwrap();
        assert!(t.feasible);
        assert_eq!(t.cross_edges(), vec![(1, 2)]);
    }

    #[test]
    fn trace_json_shape() {
        let inst = OnlineInstance::new(Graph::path(2), vec![0, 1]).unwrap();
        let t = session_play(&inst, &[false, true]);
        let json = serde_json::to_value(t.to_json()).unwrap();
        assert_eq!(
            json,
            serde_json::json!({
                "decisions": [false, true],
                "selected": [1],
                "feasible": true,
                "saves": [[2, [0, 1]]],
                "x_sets": [[2, [0, 1]]],
            })
        );
    }
}
