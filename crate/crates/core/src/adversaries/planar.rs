use crate::algorithms::OnlineAlgorithm;
use crate::classes::GraphClass;
use crate::graph::{Vertex, VertexSet};
use crate::ratio::ratio;

use super::{check_param, AdversaryError, AdversaryKind, AdversaryOutcome, Arena};

/// A path of `k` vertices, revealed in order, each with `k` pendants; odd
/// path vertices share a hub `odd`, even ones a hub `even`. Pendants of a
/// rejected path vertex stay leaves. Pendants of a selected odd vertex join
/// `even` and those of a selected even vertex join `odd`, so the two hubs
/// plus the rejected path vertices dominate. When every path vertex was
/// selected and `extensions` remain, `odd` gets one more neighbor that
/// starts the same trap again. The result is planar and bipartite and
/// ALG/OPT >= k / 2.
pub fn planar_bipartite_adversary(
    alg: &mut dyn OnlineAlgorithm,
    k: usize,
    extensions: usize,
) -> Result<AdversaryOutcome, AdversaryError> {
    check_param(AdversaryKind::PlanarBipartite, k, k >= 2, "k >= 2")?;
    let mut arena = Arena::new(alg);
    let mut witness = VertexSet::new();
    let mut start = arena.fresh();
    let mut levels_left = extensions;
    loop {
        let (odd, even, rejected, all_selected) = level(&mut arena, start, k)?;
        witness.extend([odd, even]);
        witness.extend(rejected);
        let extend = all_selected && levels_left > 0;
        let next = extend.then(|| arena.children(odd, 1)[0]);
        arena.reveal(odd)?;
        arena.reveal(even)?;
        match next {
            Some(v) => {
                levels_left -= 1;
                start = v;
            }
            None => break,
        }
    }
    let trace = arena.finish()?;
    Ok(AdversaryOutcome {
        kind: AdversaryKind::PlanarBipartite,
        param: k,
        class: GraphClass::PlanarBipartite,
        trace,
        opt_witness: witness,
        guaranteed_ratio: ratio(k, 2),
        regions: Vec::new(),
    })
}

/// Runs one trap starting at the visible vertex `first` and reveals all
/// pendants. Leaves both hubs unrevealed. Returns the hubs, the rejected path
/// vertices, and whether the whole path was selected.
fn level(
    arena: &mut Arena<'_>,
    first: Vertex,
    k: usize,
) -> Result<(Vertex, Vertex, Vec<Vertex>, bool), AdversaryError> {
    let odd = arena.fresh();
    let even = arena.fresh();
    let mut path = vec![first];
    let mut pendants = Vec::new();
    let mut decisions = Vec::new();
    for i in 0..k {
        let v = path[i];
        if i + 1 < k {
            path.extend(arena.children(v, 1));
        }
        pendants.push(arena.children(v, k));
        // path positions are 1-based: even index here is an odd position
        arena.link(v, if i % 2 == 0 { odd } else { even });
        decisions.push(arena.reveal(v)?);
    }
    let mut rejected = Vec::new();
    for i in 0..k {
        if decisions[i] {
            let hub = if i % 2 == 0 { even } else { odd };
            for &p in &pendants[i] {
                arena.link(p, hub);
            }
        } else {
            rejected.push(path[i]);
        }
        arena.reveal_all(&pendants[i])?;
    }
    Ok((odd, even, rejected, decisions.iter().all(|&d| d)))
}
