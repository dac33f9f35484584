//! Seeded random members of the graph classes the sweeps cover.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::Rng;
use thiserror::Error;

use crate::classes::find_independent_in_neighborhood;
use crate::graph::{Graph, Vertex};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GenerateError {
    #[error("n must be at least 1")]
    Empty,
    #[error("no connected graph on {n} vertices has max degree <= {delta}")]
    DegreeTooSmall { n: usize, delta: usize },
    #[error("claw parameter t must be at least 3, got {0}")]
    ClawTooSmall(usize),
    #[error("no random generator for class {0}")]
    Unsupported(String),
}

/// Edge set under construction.
struct Builder {
    adj: Vec<BTreeSet<Vertex>>,
}

impl Builder {
    fn new(n: usize) -> Self {
        Builder { adj: vec![BTreeSet::new(); n] }
    }

    fn add(&mut self, u: Vertex, v: Vertex) -> bool {
        if u == v || self.adj[u].contains(&v) {
            return false;
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        true
    }

    fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    fn graph(&self) -> Graph {
        let edges: Vec<(Vertex, Vertex)> = self
            .adj
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
            .collect();
        Graph::from_edges(self.adj.len(), &edges).expect("generators only build connected simple graphs")
    }
}

/// Uniform labelled tree via a random Prüfer sequence.
pub fn random_tree<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<Graph, GenerateError> {
    Ok(tree_builder(n, rng)?.graph())
}

fn tree_builder<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<Builder, GenerateError> {
    if n == 0 {
        return Err(GenerateError::Empty);
    }
    let mut b = Builder::new(n);
    if n == 1 {
        return Ok(b);
    }
    if n == 2 {
        b.add(0, 1);
        return Ok(b);
    }
    let code: Vec<Vertex> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &c in &code {
        degree[c] += 1;
    }
    let mut leaves: BTreeSet<Vertex> = (0..n).filter(|&v| degree[v] == 1).collect();
    for &c in &code {
        let leaf = leaves.pop_first().expect("Prüfer decoding always has a leaf");
        b.add(leaf, c);
        degree[c] -= 1;
        if degree[c] == 1 {
            leaves.insert(c);
        }
    }
    let rest: Vec<Vertex> = leaves.into_iter().collect();
    b.add(rest[0], rest[1]);
    Ok(b)
}

/// Random tree plus chords closing cycles along tree paths. Each tree edge
/// joins at most one cycle and chords never lie on tree paths, so every
/// edge ends up on at most one cycle.
pub fn random_cactus<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<Graph, GenerateError> {
    let mut b = tree_builder(n, rng)?;
    if n < 3 {
        return Ok(b.graph());
    }
    let tree: Vec<Vec<Vertex>> = b.adj.iter().map(|s| s.iter().copied().collect()).collect();
    let (parent, depth) = root_tree(&tree);
    let mut on_cycle = vec![false; n]; // tree edge (v, parent[v]) keyed by v
    let attempts = rng.gen_range(0..=n);
    for _ in 0..attempts {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u == v || b.adj[u].contains(&v) {
            continue;
        }
        let path = tree_path_edges(&parent, &depth, u, v);
        if path.iter().any(|&e| on_cycle[e]) {
            continue;
        }
        for e in path {
            on_cycle[e] = true;
        }
        b.add(u, v);
    }
    Ok(b.graph())
}

fn root_tree(tree: &[Vec<Vertex>]) -> (Vec<Vertex>, Vec<usize>) {
    let n = tree.len();
    let mut parent = vec![0; n];
    let mut depth = vec![0; n];
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(u) = stack.pop() {
        for &w in &tree[u] {
            if !seen[w] {
                seen[w] = true;
                parent[w] = u;
                depth[w] = depth[u] + 1;
                stack.push(w);
            }
        }
    }
    (parent, depth)
}

/// Tree edges on the path between `u` and `v`, each named by its lower end.
fn tree_path_edges(parent: &[Vertex], depth: &[usize], mut u: Vertex, mut v: Vertex) -> Vec<Vertex> {
    let mut edges = Vec::new();
    while u != v {
        if depth[u] >= depth[v] {
            edges.push(u);
            u = parent[u];
        } else {
            edges.push(v);
            v = parent[v];
        }
    }
    edges
}

/// Random connected graph with max degree at most `delta`: a random
/// degree-capped spanning tree, then random extra edges between vertices
/// that still have room.
pub fn random_bounded<R: Rng + ?Sized>(n: usize, delta: usize, rng: &mut R) -> Result<Graph, GenerateError> {
    if n == 0 {
        return Err(GenerateError::Empty);
    }
    if (delta == 0 && n > 1) || (delta == 1 && n > 2) {
        return Err(GenerateError::DegreeTooSmall { n, delta });
    }
    let mut labels: Vec<Vertex> = (0..n).collect();
    labels.shuffle(rng);
    let mut b = Builder::new(n);
    for i in 1..n {
        let open: Vec<Vertex> = labels[..i].iter().copied().filter(|&v| b.degree(v) < delta).collect();
        let target = *open.choose(rng).expect("a tree with delta >= 2 always has a vertex of degree < 2");
        b.add(labels[i], target);
    }
    let extra = rng.gen_range(0..=n);
    for _ in 0..extra {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if b.degree(u) < delta && b.degree(v) < delta {
            b.add(u, v);
        }
    }
    Ok(b.graph())
}

/// Random connected K_{1,t}-free graph: a random tree with a few random
/// extra edges, then while some vertex has `t` independent neighbors one
/// random pair of them is joined.
pub fn random_k1t_free<R: Rng + ?Sized>(n: usize, t: usize, rng: &mut R) -> Result<Graph, GenerateError> {
    if t < 3 {
        return Err(GenerateError::ClawTooSmall(t));
    }
    let mut b = tree_builder(n, rng)?;
    for _ in 0..rng.gen_range(0..=n / 2) {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        b.add(u, v);
    }
    loop {
        let g = b.graph();
        let mut centers: Vec<Vertex> = g.vertices().collect();
        centers.shuffle(rng);
        let claw = centers.into_iter().find_map(|v| find_independent_in_neighborhood(&g, v, t));
        match claw {
            None => return Ok(g),
            Some(leaves) => {
                let i = rng.gen_range(0..leaves.len());
                let mut j = rng.gen_range(0..leaves.len() - 1);
                if j >= i {
                    j += 1;
                }
                b.add(leaves[i], leaves[j]);
            }
        }
    }
}
