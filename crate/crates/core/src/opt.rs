//! Exact offline minimum dominating sets and the combinatorial bounds that
//! go with them.

use thiserror::Error;

use crate::classes::{is_k1t_free, is_tree};
use crate::graph::{Graph, GraphError, Vertex, VertexSet};

/// Default vertex cap for exhaustive search.
pub const DEFAULT_OPT_CAP: usize = 26;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OptError {
    #[error("instance has {n} vertices, above the exhaustive-search cap of {cap}")]
    TooLarge { n: usize, cap: usize },
    #[error("input is not a tree")]
    NotATree,
    #[error("set is not dominating")]
    NotDominating,
    #[error("set is not a minimum dominating set (leaf exchange shrank it)")]
    NotMinimum,
    #[error("normalization needs n >= 3, got {0}")]
    TooSmall(usize),
    #[error("Δ must be at least 1")]
    BadDelta,
    #[error("set is not independent")]
    NotIndependent,
    #[error("graph is not K_{{1,{0}}}-free")]
    NotClawFree(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Minimum dominating set by exhaustive search, capped at `cap` vertices.
///
/// Sizes are tried in increasing order; within one size candidate sets are
/// enumerated in lexicographic order of their sorted members, so the first
/// hit is the lexicographically smallest minimum set. Branches are cut when
/// the lowest undominated vertex can no longer be reached by any later pick,
/// or when the remaining picks cannot cover what is left.
pub fn brute_force_opt_capped(g: &Graph, cap: usize) -> Result<VertexSet, OptError> {
    let n = g.n();
    if n > cap || n > 64 {
        return Err(OptError::TooLarge { n, cap: cap.min(64) });
    }
    let closed: Vec<u64> =
        g.vertices().map(|v| g.closed_neighbors(v).iter().fold(0u64, |m, &u| m | (1 << u))).collect();
    let max_in_closed: Vec<Vertex> = g.vertices().map(|v| *g.closed_neighbors(v).last().unwrap()).collect();
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let max_cover = g.max_degree() as u32 + 1;

    struct Search<'a> {
        n: usize,
        closed: &'a [u64],
        max_in_closed: &'a [Vertex],
        full: u64,
        max_cover: u32,
        chosen: Vec<Vertex>,
    }

    impl Search<'_> {
        fn run(&mut self, start: Vertex, remaining: usize, dominated: u64) -> bool {
            if dominated == self.full {
                return true;
            }
            if remaining == 0 {
                return false;
            }
            let open = (self.full & !dominated).count_ones();
            if (remaining as u32).saturating_mul(self.max_cover) < open {
                return false;
            }
            let lowest = (!dominated & self.full).trailing_zeros() as usize;
            let last = self.max_in_closed[lowest];
            for c in start..self.n {
                if c > last {
                    break;
                }
                self.chosen.push(c);
                if self.run(c + 1, remaining - 1, dominated | self.closed[c]) {
                    return true;
                }
                self.chosen.pop();
            }
            false
        }
    }

    let mut search = Search { n, closed: &closed, max_in_closed: &max_in_closed, full, max_cover, chosen: Vec::new() };
    let lower = berge_bound(n, g.max_degree().max(1)).unwrap_or(1);
    for size in lower..=n {
        search.chosen.clear();
        if search.run(0, size, 0) {
            return Ok(search.chosen.iter().copied().collect());
        }
    }
    unreachable!("V itself dominates")
}

pub fn brute_force_opt(g: &Graph) -> Result<VertexSet, OptError> {
    brute_force_opt_capped(g, DEFAULT_OPT_CAP)
}

/// Smallest set of vertices (anywhere in `g`) whose closed neighborhoods
/// cover `targets`. Branches on the lowest uncovered target, so it is exact
/// and fast for the handful of targets it is used with.
pub fn min_cover(g: &Graph, targets: &VertexSet) -> Result<VertexSet, OptError> {
    g.check_set(targets)?;
    let list: Vec<Vertex> = targets.iter().copied().collect();
    if list.len() > 64 {
        return Err(OptError::TooLarge { n: list.len(), cap: 64 });
    }
    let index = |v: Vertex| list.binary_search(&v).ok();
    let full = if list.len() == 64 { u64::MAX } else { (1u64 << list.len()) - 1 };
    let covers = |c: Vertex| g.closed_neighbors(c).into_iter().filter_map(index).fold(0u64, |m, i| m | (1 << i));

    fn go(
        g: &Graph,
        list: &[Vertex],
        covers: &dyn Fn(Vertex) -> u64,
        full: u64,
        covered: u64,
        budget: usize,
        chosen: &mut Vec<Vertex>,
    ) -> bool {
        if covered == full {
            return true;
        }
        if budget == 0 {
            return false;
        }
        let lowest = list[(!covered & full).trailing_zeros() as usize];
        for c in g.closed_neighbors(lowest) {
            chosen.push(c);
            if go(g, list, covers, full, covered | covers(c), budget - 1, chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }

    let mut chosen = Vec::new();
    for budget in 0..=list.len() {
        chosen.clear();
        if go(g, &list, &covers, full, 0, budget, &mut chosen) {
            return Ok(chosen.into_iter().collect());
        }
    }
    unreachable!("the targets cover themselves")
}

/// Domination number of a tree via the selected / dominated-by-child /
/// waiting-for-parent dynamic program.
pub fn tree_opt(g: &Graph) -> Result<VertexSet, OptError> {
    if !is_tree(g) {
        return Err(OptError::NotATree);
    }
    let n = g.n();
    const INF: usize = usize::MAX / 4;
    // BFS order from root 0; children are processed before parents in reverse.
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    parent[0] = 0;
    order.push(0);
    let mut head = 0;
    while head < order.len() {
        let u = order[head];
        head += 1;
        for &v in g.neighbors(u) {
            if parent[v] == usize::MAX {
                parent[v] = u;
                order.push(v);
            }
        }
    }
    let parent = &parent;
    let children = |u: Vertex| {
        let p = parent[u];
        g.neighbors(u).iter().copied().filter(move |&c| c != p || u == 0)
    };

    // selected[v]: v in the set.
    // covered[v]: v not in the set, dominated by some child.
    // waiting[v]: v not in the set, not dominated within its subtree.
    let mut selected = vec![0usize; n];
    let mut covered = vec![0usize; n];
    let mut waiting = vec![0usize; n];
    for &u in order.iter().rev() {
        let mut sel = 1;
        let mut wait = 0usize;
        let mut base = 0usize;
        let mut best_extra = INF;
        for c in children(u) {
            sel += selected[c].min(covered[c]).min(waiting[c]);
            wait = (wait + covered[c]).min(INF);
            let m = selected[c].min(covered[c]);
            base += m;
            best_extra = best_extra.min(selected[c] - m);
        }
        selected[u] = sel;
        waiting[u] = wait;
        covered[u] = if best_extra >= INF { INF } else { base + best_extra };
    }

    #[derive(Clone, Copy, PartialEq)]
    enum State {
        Selected,
        Covered,
        Waiting,
    }
    let mut state = vec![State::Waiting; n];
    state[0] = if selected[0] <= covered[0] { State::Selected } else { State::Covered };
    let mut out = VertexSet::new();
    for &u in &order {
        match state[u] {
            State::Selected => {
                out.insert(u);
                for c in children(u) {
                    let best = selected[c].min(covered[c]).min(waiting[c]);
                    state[c] = if selected[c] == best {
                        State::Selected
                    } else if covered[c] == best {
                        State::Covered
                    } else {
                        State::Waiting
                    };
                }
            }
            State::Waiting => {
                for c in children(u) {
                    state[c] = State::Covered;
                }
            }
            State::Covered => {
                // one child must be selected; pick the cheapest forcing one
                let kids: Vec<Vertex> = children(u).collect();
                let forced = kids
                    .iter()
                    .copied()
                    .min_by_key(|&c| (selected[c] - selected[c].min(covered[c]), c))
                    .expect("covered state needs a child");
                for c in kids {
                    state[c] = if c == forced || selected[c] <= covered[c] { State::Selected } else { State::Covered };
                }
            }
        }
    }
    debug_assert_eq!(out.len(), selected[0].min(covered[0]));
    Ok(out)
}

/// Exchanges every degree-one vertex of a minimum dominating set for its
/// only neighbor.
pub fn normalize_opt_no_leaves(g: &Graph, opt: &VertexSet) -> Result<VertexSet, OptError> {
    if g.n() < 3 {
        return Err(OptError::TooSmall(g.n()));
    }
    if !g.is_dominating(opt)? {
        return Err(OptError::NotDominating);
    }
    let out: VertexSet = opt.iter().map(|&v| if g.degree(v) == 1 { g.neighbors(v)[0] } else { v }).collect();
    if out.len() != opt.len() {
        return Err(OptError::NotMinimum);
    }
    debug_assert!(g.is_dominating(&out).unwrap_or(false));
    Ok(out)
}

/// `⌈n / (Δ + 1)⌉`, a lower bound on the domination number of any graph
/// with maximum degree at most Δ.
pub fn berge_bound(n: usize, delta: usize) -> Result<usize, OptError> {
    if delta < 1 {
        return Err(OptError::BadDelta);
    }
    Ok(n.div_ceil(delta + 1))
}

/// Confirms `γ(g) >= ⌈|i| / (t - 1)⌉` for an independent set `i` of a
/// `K_{1,t}`-free graph, using the exact optimum.
pub fn independent_set_bound_check(g: &Graph, i: &VertexSet, t: usize) -> Result<bool, OptError> {
    g.check_set(i)?;
    if !g.is_independent(i) {
        return Err(OptError::NotIndependent);
    }
    if !is_k1t_free(g, t).map_err(|_| OptError::NotClawFree(t))? {
        return Err(OptError::NotClawFree(t));
    }
    let gamma = brute_force_opt(g)?.len();
    Ok(gamma >= i.len().div_ceil(t - 1))
}
