use crate::algorithms::OnlineAlgorithm;
use crate::classes::GraphClass;
use crate::graph::VertexSet;
use crate::ratio::ratio;

use super::{check_param, AdversaryError, AdversaryKind, AdversaryOutcome, Arena};

/// Source with `k` children, each revealed with `k` children of its own
/// (the middle layer). Middle vertices under a rejected child each get a
/// private pendant; those under a selected child all join a common sink.
/// Pendants are revealed in ascending order, each joined to the sink, and
/// the sink comes last. The result has treewidth at most 2 and
/// ALG/OPT >= k / 2.
///
/// The witness is the sink, the source and the rejected children; the
/// source is dropped when every child was rejected, since the children
/// then dominate it.
pub fn sp_adversary(alg: &mut dyn OnlineAlgorithm, k: usize) -> Result<AdversaryOutcome, AdversaryError> {
    check_param(AdversaryKind::Sp, k, k >= 2, "k >= 2")?;
    let mut arena = Arena::new(alg);
    let source = arena.fresh();
    let cs = arena.children(source, k);
    arena.reveal(source)?;
    let mut middles = Vec::with_capacity(k);
    let mut selected = Vec::with_capacity(k);
    for &c in &cs {
        middles.push(arena.children(c, k));
        selected.push(arena.reveal(c)?);
    }

    let sink = arena.fresh();
    let mut pendants = Vec::new();
    for (i, layer) in middles.iter().enumerate() {
        for &d in layer {
            if selected[i] {
                arena.link(d, sink);
            } else {
                let f = arena.children(d, 1)[0];
                arena.link(f, sink);
                pendants.push(f);
            }
            arena.reveal(d)?;
        }
    }
    arena.reveal_all(&pendants)?;
    arena.reveal(sink)?;

    let mut witness = VertexSet::from([sink]);
    witness.extend(cs.iter().zip(&selected).filter(|(_, &s)| !s).map(|(&c, _)| c));
    if selected.iter().any(|&s| s) {
        witness.insert(source);
    }
    let trace = arena.finish()?;
    Ok(AdversaryOutcome {
        kind: AdversaryKind::Sp,
        param: k,
        class: GraphClass::TreewidthTwo,
        trace,
        opt_witness: witness,
        guaranteed_ratio: ratio(k, 2),
        regions: Vec::new(),
    })
}
