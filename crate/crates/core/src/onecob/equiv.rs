use crate::finset::FinMap;
use crate::relabel;

use super::{Cobordism1, Sign, SignedSet};

/// Component-relabeling invariant: non-loop components ordered by their
/// smallest boundary point (incoming before outgoing), plus the loop count.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CanonicalForm1 {
    pub source: SignedSet,
    pub target: SignedSet,
    pub components: Vec<(Vec<usize>, Vec<usize>)>,
    pub loops: usize,
}

impl CanonicalForm1 {
    pub fn of(c: &Cobordism1) -> Self {
        let m = c.source().len();
        let mut loops = 0;
        let mut components = Vec::new();
        for comp in c.components() {
            if comp.inputs.is_empty() && comp.outputs.is_empty() {
                loops += 1;
            } else {
                components.push((comp.inputs, comp.outputs));
            }
        }
        components.sort_by_key(|(ins, outs)| ins.first().copied().unwrap_or_else(|| m + outs[0]));
        Self { source: c.source().clone(), target: c.target().clone(), components, loops }
    }
}

/// Sign-preserving boundary permutations and a component bijection
/// relating two oriented cobordisms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaxEquivalence1Witness {
    pub phi: FinMap,
    pub psi: FinMap,
    pub chi: FinMap,
}

impl LaxEquivalence1Witness {
    pub fn holds(&self, c1: &Cobordism1, c2: &Cobordism1) -> bool {
        let (m, n) = (c1.source(), c1.target());
        let signs_kept = (0..m.len()).all(|x| m.sign(x) == c2.source().sign(self.phi.apply(x)))
            && (0..n.len()).all(|y| n.sign(y) == c2.target().sign(self.psi.apply(y)));
        let ok_in = (0..m.len()).all(|x| self.chi.apply(c1.l_in().apply(x)) == c2.l_in().apply(self.phi.apply(x)));
        let ok_out = (0..n.len()).all(|y| self.chi.apply(c1.l_out().apply(y)) == c2.l_out().apply(self.psi.apply(y)));
        self.phi.is_bijective() && self.psi.is_bijective() && self.chi.is_bijective() && signs_kept && ok_in && ok_out
    }
}

/// Searches for an equivalence up to sign-preserving boundary permutations.
pub fn lax_equivalent1(c1: &Cobordism1, c2: &Cobordism1) -> Option<LaxEquivalence1Witness> {
    let same_profile = |a: &SignedSet, b: &SignedSet| a.len() == b.len() && a.count(Sign::Plus) == b.count(Sign::Plus);
    if !same_profile(c1.source(), c2.source())
        || !same_profile(c1.target(), c2.target())
        || c1.comp_count() != c2.comp_count()
        || c1.loops() != c2.loops()
    {
        return None;
    }
    let labels = |s: &SignedSet| -> Vec<u8> { s.signs().iter().map(|&x| x as u8).collect() };
    let signatures = |c: &Cobordism1| -> Vec<(usize, usize)> {
        c.components().into_iter().map(|k| (k.inputs.len(), k.outputs.len())).collect()
    };
    let (in1, out1, in2, out2) = (labels(c1.source()), labels(c1.target()), labels(c2.source()), labels(c2.target()));
    let (sig1, sig2) = (signatures(c1), signatures(c2));
    let found = relabel::search(
        &relabel::Side { l_in: c1.l_in(), l_out: c1.l_out(), in_labels: &in1, out_labels: &out1, signatures: &sig1 },
        &relabel::Side { l_in: c2.l_in(), l_out: c2.l_out(), in_labels: &in2, out_labels: &out2, signatures: &sig2 },
    )?;

    let mut chi = found.chi;
    let mut free: Vec<usize> = {
        let mut hit = vec![false; c2.comp_count()];
        for &t in chi.iter().filter(|&&t| t != usize::MAX) {
            hit[t] = true;
        }
        (0..c2.comp_count()).filter(|&t| !hit[t]).collect()
    };
    free.reverse();
    for slot in chi.iter_mut().filter(|t| **t == usize::MAX) {
        *slot = free.pop()?;
    }
    let witness = LaxEquivalence1Witness {
        phi: FinMap::new(found.phi, c1.source().len()).ok()?,
        psi: FinMap::new(found.psi, c1.target().len()).ok()?,
        chi: FinMap::new(chi, c1.comp_count()).ok()?,
    };
    debug_assert!(witness.holds(c1, c2));
    Some(witness)
}
