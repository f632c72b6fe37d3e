use crate::finset::FinMap;
use crate::relabel;

use super::{Cobordism2, Genus};

/// Component-relabeling invariant of a 2-cobordism with fixed boundaries.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm2 {
    pub m: usize,
    pub n: usize,
    /// `(inputs, outputs, genus)` ordered by smallest boundary index, with
    /// incoming circles counted before outgoing ones.
    pub boundary_components: Vec<(Vec<usize>, Vec<usize>, Genus)>,
    pub closed_genera: Vec<Genus>,
}

impl CanonicalForm2 {
    pub fn of(c: &Cobordism2) -> Self {
        let m = c.m();
        let mut boundary_components = Vec::new();
        let mut closed_genera = Vec::new();
        for comp in c.components() {
            if comp.inputs.is_empty() && comp.outputs.is_empty() {
                closed_genera.push(comp.genus);
            } else {
                boundary_components.push((comp.inputs, comp.outputs, comp.genus));
            }
        }
        boundary_components.sort_by_key(|(ins, outs, _)| ins.first().copied().unwrap_or_else(|| m + outs[0]));
        closed_genera.sort_unstable();
        Self { m, n: c.n(), boundary_components, closed_genera }
    }
}

/// Boundary permutations `phi`, `psi` and component bijection `chi` with
/// `chi⁻¹ ∘ l_m' ∘ phi = l_m`, `chi⁻¹ ∘ l_n' ∘ psi = l_n` and `g' ∘ chi = g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaxEquivalence2Witness {
    pub phi: FinMap,
    pub psi: FinMap,
    pub chi: FinMap,
}

impl LaxEquivalence2Witness {
    pub fn holds(&self, c1: &Cobordism2, c2: &Cobordism2) -> bool {
        let ok_in = (0..c1.m()).all(|x| self.chi.apply(c1.l_in.apply(x)) == c2.l_in.apply(self.phi.apply(x)));
        let ok_out = (0..c1.n()).all(|y| self.chi.apply(c1.l_out.apply(y)) == c2.l_out.apply(self.psi.apply(y)));
        let ok_genus = (0..c1.comp_count()).all(|c| c2.genus[self.chi.apply(c)] == c1.genus[c]);
        self.phi.is_bijective() && self.psi.is_bijective() && self.chi.is_bijective() && ok_in && ok_out && ok_genus
    }
}

/// Searches for a boundary-permuting equivalence between `c1` and `c2`.
pub fn lax_equivalent(c1: &Cobordism2, c2: &Cobordism2) -> Option<LaxEquivalence2Witness> {
    if c1.m() != c2.m() || c1.n() != c2.n() || c1.comp_count() != c2.comp_count() {
        return None;
    }
    let signatures = |c: &Cobordism2| -> Vec<(usize, usize, Genus)> {
        c.components().into_iter().map(|k| (k.inputs.len(), k.outputs.len(), k.genus)).collect()
    };
    let (sig1, sig2) = (signatures(c1), signatures(c2));
    let in_labels = vec![0; c1.m()];
    let out_labels = vec![0; c1.n()];
    let side1 = relabel::Side {
        l_in: &c1.l_in,
        l_out: &c1.l_out,
        in_labels: &in_labels,
        out_labels: &out_labels,
        signatures: &sig1,
    };
    let side2 = relabel::Side { l_in: &c2.l_in, l_out: &c2.l_out, signatures: &sig2, ..side1 };
    let found = relabel::search(&side1, &side2)?;

    // closed surfaces pair off by genus
    let mut closed1 = c1.closed_surfaces();
    let mut closed2 = c2.closed_surfaces();
    if closed1.len() != closed2.len() {
        return None;
    }
    closed1.sort_by_key(|&c| c1.genus[c]);
    closed2.sort_by_key(|&c| c2.genus[c]);
    let mut chi = found.chi;
    for (&a, &b) in closed1.iter().zip(&closed2) {
        if c1.genus[a] != c2.genus[b] {
            return None;
        }
        chi[a] = b;
    }
    let witness = LaxEquivalence2Witness {
        phi: FinMap::new(found.phi, c1.m()).ok()?,
        psi: FinMap::new(found.psi, c1.n()).ok()?,
        chi: FinMap::new(chi, c1.comp_count()).ok()?,
    };
    debug_assert!(witness.holds(c1, c2));
    Some(witness)
}
