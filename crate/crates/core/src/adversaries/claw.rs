use crate::algorithms::OnlineAlgorithm;
use crate::classes::GraphClass;
use crate::graph::{Vertex, VertexSet};
use crate::ratio::int;

use super::{check_param, AdversaryError, AdversaryKind, AdversaryOutcome, Arena};

/// Root with `t - 1` children. A rejected root leaves a star. Otherwise the
/// children are revealed in turn, each adjacent to everything visible (the
/// first one to its siblings only) plus fresh children: `t - 2` for the first,
/// `t - 3` after that. The first rejected child gets leaves, and everything
/// else closes into cliques, so the rejected child alone dominates. If the
/// first `t - 2` children are all selected, their children form a clique
/// and the last of them dominates. The result is K_{1,t}-free and
/// ALG/OPT >= t - 1.
pub fn claw_adversary(alg: &mut dyn OnlineAlgorithm, t: usize) -> Result<AdversaryOutcome, AdversaryError> {
    check_param(AdversaryKind::Claw, t, t >= 3, "t >= 3")?;
    let mut arena = Arena::new(alg);
    let root = arena.fresh();
    let cs = arena.children(root, t - 1);
    if !arena.reveal(root)? {
        arena.reveal_all(&cs)?;
        return finish(arena, t, VertexSet::from([root]));
    }

    let mut grandchildren: Vec<Vertex> = Vec::new();
    let mut dominator = None;
    for (j, &c) in cs.iter().enumerate().take(t - 2) {
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
        let kids = arena.children(c, if j == 0 { t - 2 } else { t - 3 });
        if !arena.reveal(c)? {
            arena.reveal_all(&kids)?;
            close(&mut arena, &cs, &grandchildren)?;
            return finish(arena, t, VertexSet::from([c]));
        }
        grandchildren.extend(kids);
        dominator = Some(c);
    }
    close(&mut arena, &cs, &grandchildren)?;
    let last = dominator.expect("t >= 3 runs at least one child");
    finish(arena, t, VertexSet::from([last]))
}

/// Joins the unrevealed children into a clique with the revealed ones (the
/// revealed ones are already adjacent to everything), turns the collected
/// grandchildren into a clique, and reveals whatever is left.
fn close(arena: &mut Arena<'_>, cs: &[Vertex], grandchildren: &[Vertex]) -> Result<(), AdversaryError> {
    let open: Vec<Vertex> = cs.iter().copied().filter(|&c| !arena.is_revealed(c)).collect();
    arena.clique(&open);
    arena.clique(grandchildren);
    let rest = arena.pending_visible();
    arena.reveal_all(&rest)
}

fn finish(arena: Arena<'_>, t: usize, witness: VertexSet) -> Result<AdversaryOutcome, AdversaryError> {
    let trace = arena.finish()?;
    Ok(AdversaryOutcome {
        kind: AdversaryKind::Claw,
        param: t,
        class: GraphClass::K1tFree(t),
        trace,
        opt_witness: witness,
        guaranteed_ratio: int(t - 1),
        regions: Vec::new(),
    })
}
