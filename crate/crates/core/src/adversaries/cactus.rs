use crate::algorithms::OnlineAlgorithm;
use crate::classes::GraphClass;
use crate::graph::{Vertex, VertexSet};
use crate::ratio::ratio;

use super::{check_param, AdversaryError, AdversaryKind, AdversaryOutcome, Arena, Region};

struct Builder<'a> {
    arena: Arena<'a>,
    regions: Vec<Region>,
}

fn set(vs: &[Vertex]) -> VertexSet {
    vs.iter().copied().collect()
}

impl Builder<'_> {
    fn region(&mut self, label: String, vertices: &[Vertex], must_dominate: &[Vertex], opt: &[Vertex], counted: bool) {
        self.regions.push(Region {
            label,
            vertices: set(vertices),
            must_dominate: set(must_dominate),
            opt: set(opt),
            counted,
        });
    }

    /// Root with two children. Rejected: both children stay leaves and the
    /// root alone dominates. Selected: the children become adjacent and one
    /// of them gets a pendant, so that child dominates. Returns the gadget's
    /// vertices and its OPT vertex.
    fn gadget(&mut self, root: Vertex) -> Result<(Vec<Vertex>, Vertex), AdversaryError> {
        let kids = self.arena.children(root, 2);
        if !self.arena.reveal(root)? {
            self.arena.reveal_all(&kids)?;
            return Ok((vec![root, kids[0], kids[1]], root));
        }
        self.arena.link(kids[0], kids[1]);
        let pendant = self.arena.children(kids[1], 1)[0];
        self.arena.reveal_all(&[kids[0], kids[1], pendant])?;
        Ok((vec![root, kids[0], kids[1], pendant], kids[1]))
    }

    /// The first round below a root child `c`. Returns the selected vertex
    /// the trap continues from, with its two unrevealed children.
    fn first_round(&mut self, child: usize, c: Vertex) -> Result<Option<(Vertex, [Vertex; 2])>, AdversaryError> {
        let label = format!("child {child} round 1");
        let kids = self.arena.children(c, 3);
        if !self.arena.reveal(c)? {
            self.arena.reveal_all(&kids)?;
            let all = [c, kids[0], kids[1], kids[2]];
            self.region(label, &all, &all, &[c], true);
            return Ok(None);
        }
        let [c1, c2, c3] = [kids[0], kids[1], kids[2]];
        self.arena.link(c1, c2);
        let below = self.arena.children(c1, 2);
        if !self.arena.reveal(c1)? {
            self.arena.reveal_all(&below)?;
            self.arena.reveal(c2)?;
            let (g, g_opt) = self.gadget(c3)?;
            let mut all = vec![c, c1, c2, below[0], below[1]];
            all.extend(g);
            self.region(label, &all, &all, &[c1, g_opt], true);
            return Ok(None);
        }
        let (g2, opt2) = self.gadget(c2)?;
        let (g3, opt3) = self.gadget(c3)?;
        // c is dominated by the root of the whole input; c1 carries on
        let mut covered = g2.clone();
        covered.extend(&g3);
        let mut all = covered.clone();
        all.push(c);
        self.region(label, &all, &covered, &[opt2, opt3], true);
        Ok(Some((c1, [below[0], below[1]])))
    }

    /// A later round at a selected vertex `r` whose two children are still
    /// unrevealed.
    fn round(
        &mut self,
        label: String,
        r: Vertex,
        [a1, a2]: [Vertex; 2],
    ) -> Result<Option<(Vertex, [Vertex; 2])>, AdversaryError> {
        self.arena.link(a1, a2);
        let b = self.arena.children(a1, 2);
        let (b1, b2) = (b[0], b[1]);
        if !self.arena.reveal(a1)? {
            self.arena.reveal_all(&[b1, b2, a2])?;
            let all = [r, a1, a2, b1, b2];
            self.region(label, &all, &all, &[a1], true);
            return Ok(None);
        }
        self.arena.link(b1, b2);
        let e = self.arena.children(b1, 2);
        let selected = self.arena.reveal(b1)?;
        let leaf = self.arena.children(a2, 1)[0];
        if !selected {
            self.arena.reveal_all(&[e[0], e[1], a2, leaf, b2])?;
            let all = [r, a1, a2, leaf, b1, b2, e[0], e[1]];
            self.region(label, &all, &all, &[b1, a2], true);
            return Ok(None);
        }
        self.arena.reveal_all(&[a2, leaf])?;
        let (g, g_opt) = self.gadget(b2)?;
        let mut covered = vec![r, a1, a2, leaf];
        covered.extend(g);
        self.region(label, &covered, &covered, &[a2, g_opt], true);
        Ok(Some((b1, [e[0], e[1]])))
    }
}

/// Root with `rounds` children. Below each child the trap from the cactus
/// lower bound runs for up to `rounds` rounds; every round that ends leaves
/// a region where ALG pays at least 5 for every 2 of OPT (or 3 for 1). A
/// child whose trap survives all rounds closes with its last selected vertex
/// dominating two leaves, and the remaining root children become leaves.
///
/// The recorded guarantee is `5k / (2k + 2)` for `k = rounds`: the regions
/// give at least 5/2 each and the root plus one closing vertex are the only
/// OPT vertices outside them.
pub fn cactus_adversary(alg: &mut dyn OnlineAlgorithm, rounds: usize) -> Result<AdversaryOutcome, AdversaryError> {
    check_param(AdversaryKind::Cactus, rounds, rounds >= 1, "rounds >= 1")?;
    let mut b = Builder { arena: Arena::new(alg), regions: Vec::new() };
    let root = b.arena.fresh();
    let top = b.arena.children(root, rounds);
    b.arena.reveal(root)?;

    let mut trap_closed = false;
    for (i, &c) in top.iter().enumerate() {
        if trap_closed {
            b.arena.reveal(c)?;
            continue;
        }
        let mut state = b.first_round(i + 1, c)?;
        let mut round = 1;
        while let Some((r, kids)) = state {
            if round == rounds {
                b.arena.reveal_all(&kids)?;
                let all = [r, kids[0], kids[1]];
                b.region(format!("child {} closing", i + 1), &all, &all, &[r], false);
                trap_closed = true;
                break;
            }
            round += 1;
            state = b.round(format!("child {} round {round}", i + 1), r, kids)?;
        }
    }

    let mut witness = VertexSet::from([root]);
    for r in &b.regions {
        witness.extend(&r.opt);
    }
    let trace = b.arena.finish()?;
    Ok(AdversaryOutcome {
        kind: AdversaryKind::Cactus,
        param: rounds,
        class: GraphClass::Cactus,
        trace,
        opt_witness: witness,
        guaranteed_ratio: ratio(5 * rounds, 2 * rounds + 2),
        regions: b.regions,
    })
}
