use crate::algorithms::OnlineAlgorithm;
use crate::classes::GraphClass;
use crate::graph::VertexSet;
use crate::ratio::ratio;

use super::{check_param, AdversaryError, AdversaryKind, AdversaryOutcome, Arena};

/// Root with `k` children; below each child a chain of vertices with two
/// children each keeps growing while the algorithm keeps selecting, for at
/// most `k` selections. Once a chain stops, the last chain vertex gets two
/// leaves and the spare child of every selected chain vertex becomes a
/// support vertex with one leaf. After a chain reaches `k` selections the
/// remaining root children are leaves. Forces ALG/OPT >= 2 - 3/k.
pub fn tree_adversary(alg: &mut dyn OnlineAlgorithm, k: usize) -> Result<AdversaryOutcome, AdversaryError> {
    check_param(AdversaryKind::Tree, k, k >= 4, "k >= 4")?;
    let mut arena = Arena::new(alg);
    let root = arena.fresh();
    let top = arena.children(root, k);
    arena.reveal(root)?;

    let mut witness = VertexSet::from([root]);
    let mut finished_long_chain = false;
    for &start in &top {
        if finished_long_chain {
            arena.reveal(start)?;
            continue;
        }
        // chain[i] is revealed with children (next, spare)
        let mut chain = vec![start];
        let mut spares = Vec::new();
        let mut selections = 0;
        let last = loop {
            let x = *chain.last().expect("chain is never empty");
            let kids = arena.children(x, 2);
            if !arena.reveal(x)? {
                break (x, kids);
            }
            selections += 1;
            if selections == k {
                finished_long_chain = true;
                break (x, kids);
            }
            chain.push(kids[0]);
            spares.push(kids[1]);
        };
        let (tail, tail_kids) = last;
        arena.reveal_all(&tail_kids)?;
        for &s in &spares {
            let leaf = arena.children(s, 1);
            arena.reveal(s)?;
            arena.reveal_all(&leaf)?;
        }
        witness.insert(tail);
        witness.extend(spares);
    }

    let trace = arena.finish()?;
    Ok(AdversaryOutcome {
        kind: AdversaryKind::Tree,
        param: k,
        class: GraphClass::Tree,
        trace,
        opt_witness: witness,
        guaranteed_ratio: ratio(2 * k - 3, k),
        regions: Vec::new(),
    })
}
