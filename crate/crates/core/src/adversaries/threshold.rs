use crate::algorithms::OnlineAlgorithm;
use crate::classes::GraphClass;
use crate::graph::{Graph, Vertex, VertexSet};
use crate::ratio::{ceil_sqrt, int};

use super::{check_param, AdversaryError, AdversaryKind, AdversaryOutcome, Arena};

/// Same skeleton as the claw construction with `k - 1` root children and `k`
/// fresh children for every revealed root child, but nothing below the root
/// children is ever joined into a clique. Every revealed root child is
/// adjacent to all visible vertices, so each prefix is a threshold graph and
/// a single vertex dominates the result. ALG >= √n.
///
/// The guarantee is stored as `⌈√n⌉`; with a one-vertex witness the ratio
/// is ALG itself, and an integer is at least √n exactly when it is at least
/// `⌈√n⌉`.
pub fn threshold_adversary(alg: &mut dyn OnlineAlgorithm, k: usize) -> Result<AdversaryOutcome, AdversaryError> {
    check_param(AdversaryKind::Threshold, k, k >= 3, "k >= 3")?;
    let mut arena = Arena::new(alg);
    let root = arena.fresh();
    let cs = arena.children(root, k - 1);
    if !arena.reveal(root)? {
        arena.reveal_all(&cs)?;
        return finish(arena, k, root);
    }

    let mut dominator = root;
    for (j, &c) in cs.iter().enumerate() {
        if j == 0 {
            for &other in &cs[1..] {
                arena.link(c, other);
            }
        } else {
            for v in arena.pending_visible() {
                if v != c && !arena.is_adjacent(c, v) {
                    arena.link(c, v);
                }
            }
        }
        let kids = arena.children(c, k);
        let selected = arena.reveal(c)?;
        dominator = c;
        if !selected {
            arena.reveal_all(&kids)?;
            break;
        }
    }
    // the unrevealed root children form a clique with the rest of N[root]
    let open: Vec<Vertex> = cs.iter().copied().filter(|&c| !arena.is_revealed(c)).collect();
    arena.clique(&open);
    let rest = arena.pending_visible();
    arena.reveal_all(&rest)?;
    finish(arena, k, dominator)
}

fn finish(arena: Arena<'_>, k: usize, dominator: Vertex) -> Result<AdversaryOutcome, AdversaryError> {
    let trace = arena.finish()?;
    let n = trace.n();
    Ok(AdversaryOutcome {
        kind: AdversaryKind::Threshold,
        param: k,
        class: GraphClass::Threshold,
        trace,
        opt_witness: VertexSet::from([dominator]),
        guaranteed_ratio: int(ceil_sqrt(n)),
        regions: Vec::new(),
    })
}

/// The near-clique with independent sets: a clique on `u, v_1, .., v_k`
/// (ids `0..=k`), then for each `i` a set of `js[i - 1]` independent vertices
/// adjacent exactly to `v_i, .., v_k`.
pub fn threshold_build(k: usize, js: &[usize]) -> Result<Graph, AdversaryError> {
    check_param(AdversaryKind::Threshold, k, k >= 2 && js.len() == k, "k >= 2 and one set size per clique vertex")?;
    let mut edges = Vec::new();
    for u in 0..=k {
        for v in u + 1..=k {
            edges.push((u, v));
        }
    }
    let mut next = k + 1;
    for (i, &count) in js.iter().enumerate() {
        for _ in 0..count {
            for v in i + 1..=k {
                edges.push((v, next));
            }
            next += 1;
        }
    }
    Ok(Graph::from_edges(next, &edges).expect("construction is a connected simple graph"))
}
