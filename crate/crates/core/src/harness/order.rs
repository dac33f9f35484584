//! Seeded connected revelation orders.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::graph::{Graph, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum OrderPolicy {
    Bfs,
    Dfs,
    RandomConnected,
}

impl OrderPolicy {
    pub const ALL: [OrderPolicy; 3] = [OrderPolicy::Bfs, OrderPolicy::Dfs, OrderPolicy::RandomConnected];

    pub fn name(self) -> &'static str {
        match self {
            OrderPolicy::Bfs => "bfs",
            OrderPolicy::Dfs => "dfs",
            OrderPolicy::RandomConnected => "random-connected",
        }
    }
}

impl fmt::Display for OrderPolicy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for OrderPolicy {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "bfs" => Ok(OrderPolicy::Bfs),
            "dfs" => Ok(OrderPolicy::Dfs),
            "random-connected" | "random" => Ok(OrderPolicy::RandomConnected),
            other => Err(format!("unknown order policy {other:?} (expected bfs, dfs or random-connected)")),
        }
    }
}

pub fn random_connected_order(g: &Graph, seed: u64, policy: OrderPolicy) -> Vec<Vertex> {
    connected_order_with(g, &mut ChaCha8Rng::seed_from_u64(seed), policy)
}

/// Random start vertex; BFS and DFS visit neighbors in shuffled order, and
/// the random-connected policy picks uniformly from the current frontier.
pub fn connected_order_with<R: Rng + ?Sized>(g: &Graph, rng: &mut R, policy: OrderPolicy) -> Vec<Vertex> {
    let n = g.n();
    let start = rng.gen_range(0..n);
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let shuffled = |v: Vertex, rng: &mut R| {
        let mut ns = g.neighbors(v).to_vec();
        ns.shuffle(rng);
        ns
    };
    match policy {
        OrderPolicy::Bfs => {
            let mut queue = VecDeque::from([start]);
            seen[start] = true;
            while let Some(u) = queue.pop_front() {
                order.push(u);
                for w in shuffled(u, rng) {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
        }
        OrderPolicy::Dfs => {
            let mut stack = vec![start];
            while let Some(u) = stack.pop() {
                if seen[u] {
                    continue;
                }
                seen[u] = true;
                order.push(u);
                for w in shuffled(u, rng) {
                    if !seen[w] {
                        stack.push(w);
                    }
                }
            }
        }
        OrderPolicy::RandomConnected => {
            let mut frontier = vec![start];
            let mut in_frontier = vec![false; n];
            in_frontier[start] = true;
            while !frontier.is_empty() {
                let u = frontier.swap_remove(rng.gen_range(0..frontier.len()));
                seen[u] = true;
                order.push(u);
                for &w in g.neighbors(u) {
                    if !seen[w] && !in_frontier[w] {
                        in_frontier[w] = true;
                        frontier.push(w);
                    }
                }
            }
        }
    }
    order
}
