use crate::algorithms::OnlineAlgorithm;
use crate::classes::GraphClass;
use crate::graph::VertexSet;
use crate::ratio::{exact_sqrt, ratio};

use super::{check_param, AdversaryError, AdversaryKind, AdversaryOutcome, Arena};

/// Root with `delta` children, each revealed with `√delta` children. The
/// grandchildren under rejected children stay leaves. The grandchildren
/// under selected children are cut, in reveal order, into groups of
/// `delta`, and each group shares one fresh neighbor. Maximum degree stays
/// at `delta` and ALG/OPT >= √delta / 2.
pub fn delta_adversary(alg: &mut dyn OnlineAlgorithm, delta: usize) -> Result<AdversaryOutcome, AdversaryError> {
    let root_of = exact_sqrt(delta);
    check_param(AdversaryKind::Delta, delta, delta >= 4 && root_of.is_some(), "a perfect square >= 4")?;
    let r = root_of.expect("checked above");

    let mut arena = Arena::new(alg);
    let root = arena.fresh();
    let top = arena.children(root, delta);
    arena.reveal(root)?;

    let mut witness = VertexSet::from([root]);
    let mut grouped = Vec::new();
    for &c in &top {
        let kids = arena.children(c, r);
        if arena.reveal(c)? {
            grouped.extend(kids);
        } else {
            arena.reveal_all(&kids)?;
            witness.insert(c);
        }
    }
    for part in grouped.chunks(delta) {
        let hub = arena.fresh();
        for &x in part {
            arena.link(x, hub);
        }
        arena.reveal_all(part)?;
        arena.reveal(hub)?;
        witness.insert(hub);
    }

    let trace = arena.finish()?;
    Ok(AdversaryOutcome {
        kind: AdversaryKind::Delta,
        param: delta,
        class: GraphClass::MaxDegree(delta),
        trace,
        opt_witness: witness,
        guaranteed_ratio: ratio(r, 2),
        regions: Vec::new(),
    })
}
