//! Graph class recognizers.
//!
//! Planarity is only approximated: bipartite planar graphs are checked by a
//! 2-coloring plus the edge bound `|E| <= 2n - 4`, which every bipartite
//! planar graph on at least three vertices satisfies.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, Vertex};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ClassError {
    #[error("K_{{1,t}}-freeness needs t >= 3, got {0}")]
    ClawTooSmall(usize),
    #[error("unknown graph class `{0}`")]
    Unknown(String),
    #[error("class `{0}` needs a numeric parameter")]
    MissingParam(&'static str),
}

pub fn is_tree(g: &Graph) -> bool {
    g.is_connected() && g.edge_count() + 1 == g.n()
}

/// Blocks (biconnected components) as edge lists. Bridges appear as
/// single-edge blocks; isolated vertices contribute nothing.
pub fn biconnected_components(g: &Graph) -> Vec<Vec<(Vertex, Vertex)>> {
    const UNSEEN: usize = usize::MAX;
    let n = g.n();
    let mut disc = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut clock = 0;
    let mut edge_stack: Vec<(Vertex, Vertex)> = Vec::new();
    let mut blocks = Vec::new();

    for root in 0..n {
        if disc[root] != UNSEEN {
            continue;
        }
        disc[root] = clock;
        low[root] = clock;
        clock += 1;
        // (vertex, parent, next neighbor index)
        let mut stack: Vec<(Vertex, Option<Vertex>, usize)> = vec![(root, None, 0)];
        while let Some(top) = stack.len().checked_sub(1) {
            let (u, parent, idx) = stack[top];
            if idx < g.degree(u) {
                stack[top].2 += 1;
                let v = g.neighbors(u)[idx];
                if Some(v) == parent {
                    continue;
                }
                if disc[v] == UNSEEN {
                    edge_stack.push((u, v));
                    disc[v] = clock;
                    low[v] = clock;
                    clock += 1;
                    stack.push((v, Some(u), 0));
                } else if disc[v] < disc[u] {
                    edge_stack.push((u, v));
                    low[u] = low[u].min(disc[v]);
                }
            } else {
                stack.pop();
                if let Some(p) = parent {
                    low[p] = low[p].min(low[u]);
                    if low[u] >= disc[p] {
                        let mut block = Vec::new();
                        while let Some(e) = edge_stack.pop() {
                            block.push(e);
                            if e == (p, u) {
                                break;
                            }
                        }
                        blocks.push(block);
                    }
                }
            }
        }
    }
    blocks
}

/// Connected, and every block is a single edge or a simple cycle.
pub fn is_cactus(g: &Graph) -> bool {
    if !g.is_connected() {
        return false;
    }
    biconnected_components(g).iter().all(|block| {
        let vertices: BTreeSet<Vertex> = block.iter().flat_map(|&(u, v)| [u, v]).collect();
        // a 2-connected block with as many edges as vertices is a cycle
        block.len() == 1 || block.len() == vertices.len()
    })
}

pub fn max_degree(g: &Graph) -> usize {
    g.max_degree()
}

/// Searches every neighborhood for `t` pairwise non-adjacent vertices.
pub fn is_k1t_free(g: &Graph, t: usize) -> Result<bool, ClassError> {
    if t < 3 {
        return Err(ClassError::ClawTooSmall(t));
    }
    Ok(g.vertices().all(|v| find_independent_in_neighborhood(g, v, t).is_none()))
}

/// Returns `t` pairwise non-adjacent neighbors of `v`, if any exist.
pub fn find_independent_in_neighborhood(g: &Graph, v: Vertex, t: usize) -> Option<Vec<Vertex>> {
    fn extend(g: &Graph, pool: &[Vertex], chosen: &mut Vec<Vertex>, t: usize) -> bool {
        if chosen.len() == t {
            return true;
        }
        for (i, &c) in pool.iter().enumerate() {
            if pool.len() - i < t - chosen.len() {
                return false;
            }
            if chosen.iter().all(|&x| !g.has_edge(x, c)) {
                chosen.push(c);
                if extend(g, &pool[i + 1..], chosen, t) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    let pool = g.neighbors(v);
    if pool.len() < t {
        return None;
    }
    let mut chosen = Vec::with_capacity(t);
    extend(g, pool, &mut chosen, t).then_some(chosen)
}

/// Repeatedly deletes a vertex that is isolated or adjacent to every other
/// remaining vertex; threshold graphs are exactly those that empty out.
pub fn is_threshold(g: &Graph) -> bool {
    threshold_elimination_order(g).is_some()
}

/// The deletion sequence used by [`is_threshold`], reversed into a
/// construction order: each entry says whether the vertex was added as an
/// isolated vertex (`false`) or joined to everything before it (`true`).
pub fn threshold_elimination_order(g: &Graph) -> Option<Vec<(Vertex, bool)>> {
    let n = g.n();
    let mut alive = vec![true; n];
    let mut degree: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let mut remaining = n;
    let mut removed = Vec::with_capacity(n);
    while remaining > 0 {
        let pick = (0..n).find(|&v| alive[v] && (degree[v] == 0 || degree[v] + 1 == remaining))?;
        let joined = degree[pick] > 0;
        alive[pick] = false;
        remaining -= 1;
        for &w in g.neighbors(pick) {
            if alive[w] {
                degree[w] -= 1;
            }
        }
        removed.push((pick, joined));
    }
    removed.reverse();
    Some(removed)
}

pub fn bipartition(g: &Graph) -> Option<Vec<bool>> {
    let n = g.n();
    let mut color: Vec<Option<bool>> = vec![None; n];
    for start in 0..n {
        if color[start].is_some() {
            continue;
        }
        color[start] = Some(false);
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            let cu = color[u].expect("colored on push");
            for &v in g.neighbors(u) {
                match color[v] {
                    None => {
                        color[v] = Some(!cu);
                        queue.push_back(v);
                    }
                    Some(cv) if cv == cu => return None,
                    Some(_) => {}
                }
            }
        }
    }
    Some(color.into_iter().map(|c| c.unwrap_or(false)).collect())
}

pub fn is_bipartite(g: &Graph) -> bool {
    bipartition(g).is_some()
}

/// `|E| <= 2n - 4` for `n >= 3`. Necessary for bipartite planarity only.
pub fn euler_planar_bipartite_bound(g: &Graph) -> bool {
    g.n() < 3 || g.edge_count() + 4 <= 2 * g.n()
}

/// Reduction test: delete vertices of degree at most one and bypass
/// vertices of degree two (joining their neighbors, merging parallel
/// edges). A graph has treewidth at most two iff this empties it down to a
/// single vertex per component.
pub fn treewidth_at_most_2(g: &Graph) -> bool {
    let n = g.n();
    let mut adj: Vec<BTreeSet<Vertex>> = g.vertices().map(|v| g.neighbors(v).iter().copied().collect()).collect();
    let mut alive = vec![true; n];
    let mut remaining = n;
    let mut queue: VecDeque<Vertex> = (0..n).filter(|&v| adj[v].len() <= 2).collect();
    while let Some(v) = queue.pop_front() {
        if !alive[v] || adj[v].len() > 2 || remaining <= 1 {
            continue;
        }
        let nbrs: Vec<Vertex> = adj[v].iter().copied().collect();
        alive[v] = false;
        remaining -= 1;
        for &w in &nbrs {
            adj[w].remove(&v);
        }
        if let [a, b] = nbrs[..] {
            adj[a].insert(b);
            adj[b].insert(a);
        }
        for &w in &nbrs {
            if adj[w].len() <= 2 {
                queue.push_back(w);
            }
        }
    }
    // isolated leftovers from disconnected inputs are trivially fine
    let leftover: Vec<Vertex> = (0..n).filter(|&v| alive[v]).collect();
    leftover.len() <= 1 || leftover.iter().all(|&v| adj[v].is_empty())
}

/// Graph classes the adversaries and the harness certify against.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GraphClass {
    Tree,
    Cactus,
    MaxDegree(usize),
    K1tFree(usize),
    Threshold,
    PlanarBipartite,
    TreewidthTwo,
}

impl GraphClass {
    pub fn recognize(&self, g: &Graph) -> bool {
        match *self {
            GraphClass::Tree => is_tree(g),
            GraphClass::Cactus => is_cactus(g),
            GraphClass::MaxDegree(delta) => g.max_degree() <= delta,
            GraphClass::K1tFree(t) => is_k1t_free(g, t).unwrap_or(false),
            GraphClass::Threshold => is_threshold(g),
            GraphClass::PlanarBipartite => is_bipartite(g) && euler_planar_bipartite_bound(g),
            GraphClass::TreewidthTwo => treewidth_at_most_2(g),
        }
    }

    /// Short tag naming what the recognizer actually certified.
    pub fn certificate(&self) -> String {
        match *self {
            GraphClass::Tree => "tree".into(),
            GraphClass::Cactus => "cactus".into(),
            GraphClass::MaxDegree(d) => format!("max_degree<={d}"),
            GraphClass::K1tFree(t) => format!("k1t_free(t={t})"),
            GraphClass::Threshold => "threshold".into(),
            GraphClass::PlanarBipartite => "bipartite+euler".into(),
            GraphClass::TreewidthTwo => "tw<=2".into(),
        }
    }

    /// Parses a CLI class name; `param` supplies Δ or t where needed.
    pub fn parse(name: &str, param: Option<usize>) -> Result<Self, ClassError> {
        Ok(match name {
            "tree" => GraphClass::Tree,
            "cactus" => GraphClass::Cactus,
            "bounded" | "delta" | "max-degree" => {
                GraphClass::MaxDegree(param.ok_or(ClassError::MissingParam("bounded"))?)
            }
            "claw-free" | "claw" | "k1t-free" => {
                let t = param.ok_or(ClassError::MissingParam("claw-free"))?;
                if t < 3 {
                    return Err(ClassError::ClawTooSmall(t));
                }
                GraphClass::K1tFree(t)
            }
            "threshold" => GraphClass::Threshold,
            "planar-bipartite" | "bipartite" => GraphClass::PlanarBipartite,
            "sp" | "tw2" | "series-parallel" => GraphClass::TreewidthTwo,
            other => return Err(ClassError::Unknown(other.to_string())),
        })
    }
}

impl fmt::Display for GraphClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.certificate())
    }
}

impl FromStr for GraphClass {
    type Err = ClassError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        GraphClass::parse(s, None)
    }
}
