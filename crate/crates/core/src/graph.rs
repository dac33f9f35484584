//! Immutable simple undirected graphs over dense vertex ids `0..n`.

use std::collections::{BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub type Vertex = usize;

/// A set of vertex ids, kept sorted so iteration order is deterministic.
pub type VertexSet = BTreeSet<Vertex>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph must have at least one vertex")]
    Empty,
    #[error("edges[{index}]: vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange { index: usize, vertex: Vertex, n: usize },
    #[error("edges[{index}]: self-loop on vertex {vertex}")]
    SelfLoop { index: usize, vertex: Vertex },
    #[error("edges[{index}]: duplicate edge {{{u}, {v}}}")]
    DuplicateEdge { index: usize, u: Vertex, v: Vertex },
    #[error("adjacency is not symmetric at {{{u}, {v}}}")]
    Asymmetric { u: Vertex, v: Vertex },
    #[error("graph is disconnected: vertex {vertex} unreachable from 0")]
    Disconnected { vertex: Vertex },
    #[error("vertex {vertex} out of range for n = {n}")]
    OutOfRange { vertex: Vertex, n: usize },
}

/// Connected simple undirected graph. Neighbor lists are sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    edge_count: usize,
}

/// On-disk form: `{"n": .., "edges": [[u, v], ..]}` with `u < v`, sorted.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[Vertex; 2]>,
}

impl Graph {
    /// Builds a graph from an edge list, rejecting loops, duplicates and
    /// disconnected inputs.
    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self, GraphError> {
        let g = Self::from_edges_unchecked_connectivity(n, edges)?;
        g.ensure_connected()?;
        Ok(g)
    }

    /// Same as [`Graph::from_edges`] but allows disconnected graphs. Only the
    /// generators and recognizer tests need this.
    pub fn from_edges_unchecked_connectivity(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        let mut adj = vec![Vec::new(); n];
        let mut seen = BTreeSet::new();
        for (index, &(u, v)) in edges.iter().enumerate() {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { index, vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop { index, vertex: u });
            }
            let key = (u.min(v), u.max(v));
            if !seen.insert(key) {
                return Err(GraphError::DuplicateEdge { index, u: key.0, v: key.1 });
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { adj, edge_count: seen.len() })
    }

    /// Builds a graph from per-vertex neighbor lists, checking symmetry.
    pub fn from_adjacency(adj: Vec<Vec<Vertex>>) -> Result<Self, GraphError> {
        let n = adj.len();
        let mut edges = Vec::new();
        for (u, list) in adj.iter().enumerate() {
            for &v in list {
                if v >= n {
                    return Err(GraphError::OutOfRange { vertex: v, n });
                }
                if !adj[v].contains(&u) {
                    return Err(GraphError::Asymmetric { u, v });
                }
                if u < v {
                    edges.push((u, v));
                } else if u == v {
                    return Err(GraphError::SelfLoop { index: edges.len(), vertex: u });
                }
            }
        }
        Self::from_edges(n, &edges)
    }

    pub fn from_json(json: &GraphJson) -> Result<Self, GraphError> {
        let edges: Vec<_> = json.edges.iter().map(|e| (e[0], e[1])).collect();
        Self::from_edges(json.n, &edges)
    }

    pub fn to_json(&self) -> GraphJson {
        GraphJson { n: self.n(), edges: self.edges().map(|(u, v)| [u, v]).collect() }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn check_set(&self, s: &VertexSet) -> Result<(), GraphError> {
        match s.iter().find(|&&v| v >= self.n()) {
            Some(&vertex) => Err(GraphError::OutOfRange { vertex, n: self.n() }),
            None => Ok(()),
        }
    }

    /// `N[S]`: `S` together with every vertex adjacent to it.
    pub fn closed_neighborhood(&self, s: &VertexSet) -> Result<VertexSet, GraphError> {
        self.check_set(s)?;
        let mut out = s.clone();
        for &u in s {
            out.extend(self.adj[u].iter().copied());
        }
        Ok(out)
    }

    /// Closed neighborhood of a single vertex as a sorted vector.
    pub fn closed_neighbors(&self, v: Vertex) -> Vec<Vertex> {
        let mut out = Vec::with_capacity(self.adj[v].len() + 1);
        let pos = self.adj[v].partition_point(|&u| u < v);
        out.extend_from_slice(&self.adj[v][..pos]);
        out.push(v);
        out.extend_from_slice(&self.adj[v][pos..]);
        out
    }

    pub fn is_dominating(&self, d: &VertexSet) -> Result<bool, GraphError> {
        self.check_set(d)?;
        let mut dominated = vec![false; self.n()];
        for &u in d {
            dominated[u] = true;
            for &w in &self.adj[u] {
                dominated[w] = true;
            }
        }
        Ok(dominated.into_iter().all(|b| b))
    }

    pub fn is_independent(&self, s: &VertexSet) -> bool {
        s.iter().all(|&u| self.adj[u].iter().all(|v| !s.contains(v)))
    }

    pub fn is_connected(&self) -> bool {
        self.ensure_connected().is_ok()
    }

    fn ensure_connected(&self) -> Result<(), GraphError> {
        let mut seen = vec![false; self.n()];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
        }
        match seen.iter().position(|&b| !b) {
            Some(vertex) => Err(GraphError::Disconnected { vertex }),
            None => Ok(()),
        }
    }

    /// True iff the subgraph induced on `vertices` is connected (empty sets
    /// count as connected).
    pub fn induces_connected(&self, vertices: &[Vertex]) -> bool {
        let Some(&first) = vertices.first() else { return true };
        let inside: BTreeSet<Vertex> = vertices.iter().copied().collect();
        let mut seen = BTreeSet::from([first]);
        let mut stack = vec![first];
        while let Some(u) = stack.pop() {
            for &v in &self.adj[u] {
                if inside.contains(&v) && seen.insert(v) {
                    stack.push(v);
                }
            }
        }
        seen.len() == inside.len()
    }
}

// Small named graphs used throughout tests and examples.
impl Graph {
    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).expect("path is a valid graph")
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        edges.push((0, n - 1));
        Graph::from_edges(n, &edges).expect("cycle is a valid graph")
    }

    /// `K_{1,leaves}` with center 0.
    pub fn star(leaves: usize) -> Graph {
        let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        Graph::from_edges(leaves + 1, &edges).expect("star is a valid graph")
    }

    pub fn complete(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        Graph::from_edges(n, &edges).expect("complete graph is valid")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[Vertex]) -> VertexSet {
        v.iter().copied().collect()
    }

    #[test]
    fn closed_neighborhood_examples() {
        assert_eq!(Graph::star(3).closed_neighborhood(&set(&[0])).unwrap(), set(&[0, 1, 2, 3]));
        assert!(Graph::cycle(5).closed_neighborhood(&set(&[])).unwrap().is_empty());
        assert_eq!(Graph::path(4).closed_neighborhood(&set(&[1])).unwrap(), set(&[0, 1, 2]));
        assert!(matches!(
            Graph::path(4).closed_neighborhood(&set(&[4])),
            Err(GraphError::OutOfRange { vertex: 4, .. })
        ));
    }

    #[test]
    fn is_dominating_examples() {
        assert!(Graph::star(3).is_dominating(&set(&[0])).unwrap());
        assert!(!Graph::path(4).is_dominating(&set(&[0])).unwrap());
        assert!(Graph::path(4).is_dominating(&set(&[1, 3])).unwrap());
    }

    #[test]
    fn rejects_malformed_edge_lists() {
        assert_eq!(Graph::from_edges(0, &[]), Err(GraphError::Empty));
        assert!(matches!(Graph::from_edges(2, &[(0, 0)]), Err(GraphError::SelfLoop { .. })));
        assert!(matches!(Graph::from_edges(2, &[(0, 1), (1, 0)]), Err(GraphError::DuplicateEdge { index: 1, .. })));
        assert!(matches!(Graph::from_edges(3, &[(0, 1)]), Err(GraphError::Disconnected { vertex: 2 })));
        assert!(matches!(Graph::from_edges(2, &[(0, 2)]), Err(GraphError::VertexOutOfRange { vertex: 2, .. })));
    }

    #[test]
    fn json_is_sorted_and_round_trips() {
        let g = Graph::from_edges(4, &[(3, 2), (0, 1), (2, 1)]).unwrap();
        let json = g.to_json();
        assert_eq!(json.edges, vec![[0, 1], [1, 2], [2, 3]]);
        assert_eq!(Graph::from_json(&json).unwrap(), g);
    }

    #[test]
    fn single_vertex_graph() {
        let g = Graph::from_edges(1, &[]).unwrap();
        assert_eq!(g.max_degree(), 0);
        assert!(g.is_dominating(&set(&[0])).unwrap());
        assert!(!g.is_dominating(&set(&[])).unwrap());
    }

    #[test]
    fn closed_neighbors_sorted() {
        let g = Graph::star(3);
        assert_eq!(g.closed_neighbors(2), vec![0, 2]);
        assert_eq!(g.closed_neighbors(0), vec![0, 1, 2, 3]);
    }
}
