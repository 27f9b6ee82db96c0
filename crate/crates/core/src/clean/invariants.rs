use super::{verify_certificate, IdealTree};
use crate::error::Result;
use crate::ideal::MonomialIdeal;

/// `pd(S/I)`, `reg(S/I)` and `depth(S/I) = n - pd`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct HomologicalInvariants {
    pub pd: usize,
    pub reg: u64,
    pub depth: usize,
}

impl HomologicalInvariants {
    pub fn new(n: usize, pd: usize, reg: u64) -> Self {
        HomologicalInvariants {
            pd,
            reg,
            depth: n.saturating_sub(pd),
        }
    }
}

/// Invariants read off a certificate: a prime `P` gives `pd = |P|`, `reg = 0`, and a node
/// with cleaner `u` takes `pd = max(pd(I + Su), pd(I : u))` and
/// `reg = max(reg(I + Su), reg(I : u) + deg u)`.
pub fn invariants_from_certificate(
    ideal: &MonomialIdeal,
    tree: &IdealTree,
) -> Result<HomologicalInvariants> {
    verify_certificate(ideal, tree, ideal.n())?;
    let (pd, reg) = recurse(ideal, tree);
    Ok(HomologicalInvariants::new(ideal.n(), pd, reg))
}

fn recurse(ideal: &MonomialIdeal, tree: &IdealTree) -> (usize, u64) {
    match tree {
        IdealTree::Leaf(p) => (p.vars().len(), 0),
        IdealTree::Node {
            cleaner,
            colon,
            sum,
        } => {
            let (pc, rc) = recurse(&ideal.colon_unchecked(cleaner), colon);
            let (ps, rs) = recurse(&ideal.add_unchecked(cleaner), sum);
            (pc.max(ps), rs.max(rc + cleaner.degree()))
        }
    }
}
