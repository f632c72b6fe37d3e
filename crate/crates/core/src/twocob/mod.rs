//! The category 2-Cob in its combinatorial presentation.
//!
//! A cobordism `m -> n` is a finite set of connected components, each with
//! a genus, together with the maps sending every incoming and outgoing
//! boundary circle to the component it bounds. Composition glues along the
//! shared boundary by a pushout of component sets; each glued component
//! gains one handle per gluing circle beyond those needed to connect it.

mod canonical;
mod factor;

pub use canonical::{lax_equivalent, CanonicalForm2, LaxEquivalence2Witness};
pub use factor::{align_factorizations, factorize, lift, Factorization2};

use crate::error::{Error, Result};
use crate::finset::{self, disjoint_union_map, find_lift, FinMap, PushoutResult, Span};
use crate::ofs::{Factorization, Morphism};

pub type Genus = u64;

/// A 2-cobordism `{m, n, C, l_m, l_n, g}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cobordism2 {
    l_in: FinMap,
    l_out: FinMap,
    genus: Vec<Genus>,
}

/// The pushout data behind a composite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompositionWitness {
    pub pushout: PushoutResult,
    pub middle: usize,
    /// Middle circles into the first factor's components.
    pub middle_attach_left: FinMap,
    /// Middle circles into the second factor's components.
    pub middle_attach_right: FinMap,
}

/// One row of the `C2[m,n | (g; in{..}; out{..}), ..]` listing.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Component2 {
    pub inputs: Vec<usize>,
    pub outputs: Vec<usize>,
    pub genus: Genus,
}

impl Component2 {
    pub fn new(inputs: &[usize], outputs: &[usize], genus: Genus) -> Self {
        Self { inputs: inputs.to_vec(), outputs: outputs.to_vec(), genus }
    }

    pub fn closed(genus: Genus) -> Self {
        Self::new(&[], &[], genus)
    }
}

impl Cobordism2 {
    pub fn new(l_in: FinMap, l_out: FinMap, genus: Vec<Genus>) -> Result<Self> {
        let c = Self { l_in, l_out, genus };
        c.validate().map_err(Error::Invalid)?;
        Ok(c)
    }

    /// Skips validation; pair with [`Cobordism2::validate`].
    pub fn new_unchecked(l_in: FinMap, l_out: FinMap, genus: Vec<Genus>) -> Self {
        Self { l_in, l_out, genus }
    }

    /// Builds a cobordism from a component listing. Every boundary index
    /// must appear in exactly one component.
    pub fn from_components(m: usize, n: usize, components: &[Component2]) -> Result<Self> {
        let mut l_in = vec![usize::MAX; m];
        let mut l_out = vec![usize::MAX; n];
        let mut problems = Vec::new();
        for (c, comp) in components.iter().enumerate() {
            attach(&mut l_in, &comp.inputs, c, "in", &mut problems);
            attach(&mut l_out, &comp.outputs, c, "out", &mut problems);
        }
        unattached(&l_in, "in", &mut problems);
        unattached(&l_out, "out", &mut problems);
        if !problems.is_empty() {
            return Err(Error::Invalid(problems));
        }
        let count = components.len();
        Self::new(FinMap::new(l_in, count)?, FinMap::new(l_out, count)?, components.iter().map(|c| c.genus).collect())
    }

    pub fn m(&self) -> usize {
        self.l_in.dom()
    }

    pub fn n(&self) -> usize {
        self.l_out.dom()
    }

    pub fn comp_count(&self) -> usize {
        self.genus.len()
    }

    pub fn l_in(&self) -> &FinMap {
        &self.l_in
    }

    pub fn l_out(&self) -> &FinMap {
        &self.l_out
    }

    pub fn genus(&self) -> &[Genus] {
        &self.genus
    }

    /// Component listing in component order.
    pub fn components(&self) -> Vec<Component2> {
        let ins = self.l_in.fibers();
        let outs = self.l_out.fibers();
        ins.into_iter()
            .zip(outs)
            .zip(&self.genus)
            .map(|((inputs, outputs), &genus)| Component2 { inputs, outputs, genus })
            .collect()
    }

    pub fn validate(&self) -> Result<(), Vec<String>> {
        let mut problems = Vec::new();
        let count = self.comp_count();
        for (name, map) in [("l_m", &self.l_in), ("l_n", &self.l_out)] {
            if map.cod() != count {
                problems.push(format!("{name} has codomain {} but there are {count} components", map.cod()));
            }
            for (i, &c) in map.table().iter().enumerate() {
                if c >= count {
                    problems.push(format!("non-total map: {name}[{i}] = {c} >= {count}"));
                }
            }
        }
        if problems.is_empty() {
            Ok(())
        } else {
            Err(problems)
        }
    }

    pub fn identity(n: usize) -> Self {
        Self { l_in: FinMap::identity(n), l_out: FinMap::identity(n), genus: vec![0; n] }
    }

    /// Genus-zero tubes carrying incoming circle `i` to outgoing circle
    /// `tau(i)`. `tau` must be a bijection.
    pub fn permutation(tau: &FinMap) -> Option<Self> {
        let inv = tau.inverse()?;
        Some(Self { l_in: FinMap::identity(tau.dom()), l_out: inv, genus: vec![0; tau.dom()] })
    }

    /// `eta(n): 0 -> 2n`, `n` genus-zero components each bounding
    /// outgoing circles `x` and `x + n`.
    pub fn eta(n: usize) -> Self {
        Self {
            l_in: FinMap::empty(n),
            l_out: FinMap::new_unchecked((0..2 * n).map(|x| x % n).collect(), n),
            genus: vec![0; n],
        }
    }

    /// Mirror image of [`Cobordism2::eta`]: `2n -> 0`.
    pub fn epsilon(n: usize) -> Self {
        let eta = Self::eta(n);
        Self { l_in: eta.l_out, l_out: eta.l_in, genus: eta.genus }
    }

    /// Components bounded by no circle.
    pub fn closed_surfaces(&self) -> Vec<usize> {
        let ins = self.l_in.image_mask();
        let outs = self.l_out.image_mask();
        (0..self.comp_count()).filter(|&c| !ins[c] && !outs[c]).collect()
    }

    /// `l_n` injective and `l_n` lifts through `l_m`.
    pub fn is_cofibration(&self) -> bool {
        self.l_out.is_injective() && find_lift(&self.l_in, &self.l_out).is_some()
    }

    /// `l_m` injective, `l_n` surjective and genus zero on the image of `l_m`.
    pub fn is_fibration(&self) -> bool {
        self.l_in.is_injective() && self.l_out.is_surjective() && self.l_in.table().iter().all(|&c| self.genus[c] == 0)
    }

    pub fn compose(&self, next: &Self) -> Result<(Self, CompositionWitness)> {
        compose(self, next)
    }

    /// Diagrammatic composite without the witness.
    pub fn then(&self, next: &Self) -> Result<Self> {
        compose(self, next).map(|(c, _)| c)
    }

    pub fn disjoint_union(&self, other: &Self) -> Self {
        disjoint_union(self, other)
    }

    pub fn canonical_form(&self) -> CanonicalForm2 {
        CanonicalForm2::of(self)
    }

    /// Equal up to relabeling components, with boundaries fixed.
    pub fn strict_equals(&self, other: &Self) -> bool {
        self.m() == other.m() && self.n() == other.n() && self.canonical_form() == other.canonical_form()
    }

    /// Renumbers components by `chi: C -> C'` (a bijection).
    pub fn relabel_components(&self, chi: &FinMap) -> Option<Self> {
        if chi.dom() != self.comp_count() || !chi.is_bijective() {
            return None;
        }
        let mut genus = vec![0; self.comp_count()];
        for (c, &g) in self.genus.iter().enumerate() {
            genus[chi.apply(c)] = g;
        }
        Some(Self { l_in: self.l_in.then(chi).ok()?, l_out: self.l_out.then(chi).ok()?, genus })
    }
}

fn attach(table: &mut [usize], indices: &[usize], component: usize, side: &str, problems: &mut Vec<String>) {
    for &i in indices {
        match table.get_mut(i) {
            None => problems.push(format!(
                "{side}-index {i} of component {component} is out of range (boundary has {} circles)",
                table.len()
            )),
            Some(slot) if *slot != usize::MAX => problems.push(format!("{side}-index {i} appears twice")),
            Some(slot) => *slot = component,
        }
    }
}

fn unattached(table: &[usize], side: &str, problems: &mut Vec<String>) {
    for (i, &c) in table.iter().enumerate() {
        if c == usize::MAX {
            problems.push(format!("{side}-index {i} is not attached to any component"));
        }
    }
}

/// Glues `phi: X -> Y` to `psi: Y -> Z` along `Y`.
///
/// For a class `x` of the pushout,
/// `g(x) = 1 + Σ_{a ↦ x} (g₁(a) − 1) + Σ_{b ↦ x} (g₂(b) − 1) + #{middle circles over x}`.
pub fn compose(phi: &Cobordism2, psi: &Cobordism2) -> Result<(Cobordism2, CompositionWitness)> {
    if phi.n() != psi.m() {
        return Err(Error::BoundaryMismatch(format!(
            "first cobordism has {} outgoing circles, second has {} incoming",
            phi.n(),
            psi.m()
        )));
    }
    let span = Span::new(phi.l_out.clone(), psi.l_in.clone())?;
    let po = finset::pushout(&span);

    let mut acc = vec![1i128; po.size];
    for (a, &g) in phi.genus.iter().enumerate() {
        acc[po.into_left.apply(a)] += g as i128 - 1;
    }
    for (b, &g) in psi.genus.iter().enumerate() {
        acc[po.into_right.apply(b)] += g as i128 - 1;
    }
    for &a in phi.l_out.table() {
        acc[po.into_left.apply(a)] += 1;
    }
    let genus = acc
        .into_iter()
        .map(|g| {
            if g < 0 {
                Err(Error::Internal(format!("negative genus {g} in composite")))
            } else {
                Genus::try_from(g).map_err(|_| Error::GenusOverflow)
            }
        })
        .collect::<Result<Vec<_>>>()?;

    let composite = Cobordism2 { l_in: phi.l_in.then(&po.into_left)?, l_out: psi.l_out.then(&po.into_right)?, genus };
    let witness = CompositionWitness {
        middle: phi.n(),
        middle_attach_left: span.left,
        middle_attach_right: span.right,
        pushout: po,
    };
    Ok((composite, witness))
}

pub fn disjoint_union(c1: &Cobordism2, c2: &Cobordism2) -> Cobordism2 {
    let mut genus = c1.genus.clone();
    genus.extend_from_slice(&c2.genus);
    Cobordism2 { l_in: disjoint_union_map(&c1.l_in, &c2.l_in), l_out: disjoint_union_map(&c1.l_out, &c2.l_out), genus }
}

pub fn strict_equals(c1: &Cobordism2, c2: &Cobordism2) -> bool {
    c1.strict_equals(c2)
}

impl Morphism for Cobordism2 {
    type Object = usize;

    fn source(&self) -> usize {
        self.m()
    }

    fn target(&self) -> usize {
        self.n()
    }

    fn object_len(object: &usize) -> usize {
        *object
    }

    fn then(&self, next: &Self) -> Result<Self> {
        Cobordism2::then(self, next)
    }

    fn strict_equals(&self, other: &Self) -> bool {
        Cobordism2::strict_equals(self, other)
    }

    fn is_cofibration(&self) -> bool {
        Cobordism2::is_cofibration(self)
    }

    fn is_fibration(&self) -> bool {
        Cobordism2::is_fibration(self)
    }

    fn factorize(&self) -> Result<Factorization<Self>> {
        factorize(self)
    }

    fn permutation(from: &usize, to: &usize, tau: &FinMap) -> Option<Self> {
        if tau.dom() != *from || tau.cod() != *to {
            return None;
        }
        Cobordism2::permutation(tau)
    }

    fn target_key(&self, z: usize) -> Vec<usize> {
        let c = self.l_out.apply(z);
        (0..self.m()).filter(|&x| self.l_in.apply(x) == c).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c2(m: usize, n: usize, comps: &[Component2]) -> Cobordism2 {
        Cobordism2::from_components(m, n, comps).unwrap()
    }

    fn comp(inputs: &[usize], outputs: &[usize], genus: Genus) -> Component2 {
        Component2::new(inputs, outputs, genus)
    }

    #[test]
    fn validate_examples() {
        assert!(Cobordism2::identity(3).validate().is_ok());
        let bad = Cobordism2::new_unchecked(FinMap::new_unchecked(vec![0, 2], 2), FinMap::identity(2), vec![0, 0]);
        let problems = bad.validate().unwrap_err();
        assert_eq!(problems.len(), 1);
        assert!(problems[0].starts_with("non-total map"), "{problems:?}");
        assert!(c2(0, 0, &[Component2::closed(5)]).validate().is_ok());
    }

    #[test]
    fn from_components_diagnostics() {
        let err = Cobordism2::from_components(1, 2, &[comp(&[0], &[1, 1], 0)]).unwrap_err();
        let Error::Invalid(problems) = err else { panic!() };
        assert!(problems.contains(&"out-index 1 appears twice".to_string()));
        assert!(problems.contains(&"out-index 0 is not attached to any component".to_string()));
    }

    #[test]
    fn identity_is_unit() {
        assert_eq!(Cobordism2::identity(0).comp_count(), 0);
        let id2 = Cobordism2::identity(2);
        assert!(id2.then(&id2).unwrap().strict_equals(&id2));
        let phi = c2(2, 3, &[comp(&[0, 1], &[0, 1, 2], 3)]);
        assert!(id2.then(&phi).unwrap().strict_equals(&phi));
        assert!(phi.then(&Cobordism2::identity(3)).unwrap().strict_equals(&phi));
    }

    #[test]
    fn merge_split_genus_four() {
        let phi = c2(2, 3, &[comp(&[0, 1], &[0, 1, 2], 3)]);
        let psi = c2(3, 2, &[comp(&[0, 1], &[0], 0), comp(&[2], &[1], 0)]);
        let (c, w) = phi.compose(&psi).unwrap();
        assert!(c.strict_equals(&c2(2, 2, &[comp(&[0, 1], &[0, 1], 4)])));
        assert_eq!(w.middle, 3);
        assert_eq!(w.pushout.size, 1);
    }

    #[test]
    fn closed_genus_three() {
        let phi = c2(0, 3, &[comp(&[], &[0, 1, 2], 1)]);
        let psi = c2(3, 0, &[comp(&[0, 1, 2], &[], 0)]);
        let c = phi.then(&psi).unwrap();
        assert!(c.strict_equals(&c2(0, 0, &[Component2::closed(3)])));
    }

    #[test]
    fn compose_rejects_mismatch() {
        let err = Cobordism2::identity(2).then(&Cobordism2::identity(3)).unwrap_err();
        assert!(matches!(err, Error::BoundaryMismatch(_)));
    }

    #[test]
    fn closed_surface_examples() {
        assert!(Cobordism2::identity(4).closed_surfaces().is_empty());
        assert_eq!(c2(0, 0, &[Component2::closed(2)]).closed_surfaces(), vec![0]);
        let c = c2(1, 0, &[comp(&[0], &[], 0), Component2::closed(7)]);
        assert_eq!(c.closed_surfaces(), vec![1]);
    }

    #[test]
    fn class_predicates() {
        let id = Cobordism2::identity(3);
        assert!(id.is_cofibration() && id.is_fibration());

        let merge = c2(2, 1, &[comp(&[0, 1], &[0], 0)]);
        assert!(merge.is_cofibration() && !merge.is_fibration());
        let closed = c2(0, 0, &[Component2::closed(2)]);
        assert!(closed.is_cofibration());
        let cup = c2(0, 1, &[comp(&[], &[0], 0)]);
        assert!(!cup.is_cofibration());

        let split = c2(1, 2, &[comp(&[0], &[0, 1], 0)]);
        assert!(split.is_fibration() && !split.is_cofibration());
        let creation = c2(0, 1, &[comp(&[], &[0], 5)]);
        assert!(creation.is_fibration());
        let handle = c2(1, 1, &[comp(&[0], &[0], 1)]);
        assert!(!handle.is_fibration());
        assert!(!c2(0, 0, &[Component2::closed(0)]).is_fibration());
    }

    #[test]
    fn permutations_are_in_both_classes() {
        let tau = FinMap::new(vec![2, 0, 1], 3).unwrap();
        let p = Cobordism2::permutation(&tau).unwrap();
        assert!(p.is_cofibration() && p.is_fibration());
        assert!(Cobordism2::permutation(&FinMap::new(vec![0, 0], 2).unwrap()).is_none());
    }

    #[test]
    fn disjoint_union_examples() {
        let phi = c2(2, 3, &[comp(&[0, 1], &[0, 1, 2], 3)]);
        assert_eq!(phi.disjoint_union(&Cobordism2::identity(0)), phi);
        assert_eq!(Cobordism2::identity(2).disjoint_union(&Cobordism2::identity(3)), Cobordism2::identity(5));
        let psi = c2(3, 2, &[comp(&[0, 1], &[0], 0), comp(&[2], &[1], 0)]);
        let lhs = phi.disjoint_union(&phi).then(&psi.disjoint_union(&psi)).unwrap();
        let rhs = phi.then(&psi).unwrap().disjoint_union(&phi.then(&psi).unwrap());
        assert!(lhs.strict_equals(&rhs));
    }

    #[test]
    fn eta_epsilon() {
        assert_eq!(Cobordism2::eta(0), Cobordism2::identity(0));
        assert!(Cobordism2::eta(1).strict_equals(&c2(0, 2, &[comp(&[], &[0, 1], 0)])));
        assert!(Cobordism2::epsilon(1).strict_equals(&c2(2, 0, &[comp(&[0, 1], &[], 0)])));
    }

    #[test]
    fn snake_identity() {
        for n in 0..=5 {
            let left = Cobordism2::identity(n).disjoint_union(&Cobordism2::eta(n));
            let right = Cobordism2::epsilon(n).disjoint_union(&Cobordism2::identity(n));
            let (c, w) = left.compose(&right).unwrap();
            assert!(c.strict_equals(&Cobordism2::identity(n)), "n = {n}");
            // every class glues two parts from each side along three circles
            for x in 0..w.pushout.size {
                let parts_a = w.pushout.into_left.table().iter().filter(|&&y| y == x).count();
                let parts_b = w.pushout.into_right.table().iter().filter(|&&y| y == x).count();
                let circles =
                    w.middle_attach_left.table().iter().filter(|&&a| w.pushout.into_left.apply(a) == x).count();
                assert_eq!((parts_a + parts_b, circles), (4, 3));
                assert_eq!(1 - 4 + 3, c.genus()[x] as i64);
            }
        }
    }

    #[test]
    fn relabel_components_preserves_strict_equality() {
        let c = c2(2, 1, &[comp(&[0], &[], 1), comp(&[1], &[0], 2), Component2::closed(4)]);
        let chi = FinMap::new(vec![2, 0, 1], 3).unwrap();
        let r = c.relabel_components(&chi).unwrap();
        assert_ne!(r, c);
        assert!(r.strict_equals(&c));
    }
}
