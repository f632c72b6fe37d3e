//! The category 1-Cob⁺ of oriented 1-cobordisms between signed point sets.
//!
//! A cobordism `m -> n` is a component set `C` with attachment maps from
//! both boundaries. Every component is one of five kinds: a cap joining two
//! incoming points of opposite sign, a cup joining two outgoing points of
//! opposite sign, a strand joining an incoming and an outgoing point of the
//! same sign (positive or negative), or a closed loop.

mod equiv;
mod execution;
mod factor;
mod functor;

pub use equiv::{lax_equivalent1, CanonicalForm1, LaxEquivalence1Witness};
pub use execution::{compose_execution, from_matching, to_matching, MatchingView};
pub use factor::{factorize1, lift1, Factorization1};
pub use functor::{is_cofibration1, is_fibration1, phi_to_2cob};

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::finset::{self, disjoint_union_map, FinMap, Span};
use crate::ofs::{Factorization, Morphism};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Self {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Sign {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "+" => Ok(Sign::Plus),
            // accept the typographic minus as well
            "-" | "\u{2212}" => Ok(Sign::Minus),
            other => Err(Error::Invalid(vec![format!("unknown sign {other:?}")])),
        }
    }
}

/// A finite set of points, each carrying a sign.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedSet {
    signs: Vec<Sign>,
}

impl SignedSet {
    pub fn new(signs: Vec<Sign>) -> Self {
        Self { signs }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// Parses a compact sign string such as `"+-+-"`.
    pub fn parse(s: &str) -> Result<Self> {
        s.chars().map(|c| c.to_string().parse()).collect::<Result<Vec<_>>>().map(Self::new)
    }

    pub fn len(&self) -> usize {
        self.signs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.signs.is_empty()
    }

    pub fn sign(&self, i: usize) -> Sign {
        self.signs[i]
    }

    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }

    pub fn count(&self, sign: Sign) -> usize {
        self.signs.iter().filter(|&&s| s == sign).count()
    }

    pub fn concat(&self, other: &Self) -> Self {
        let mut signs = self.signs.clone();
        signs.extend_from_slice(&other.signs);
        Self { signs }
    }
}

impl fmt::Display for SignedSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, s) in self.signs.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{s}")?;
        }
        write!(f, ")")
    }
}

/// A boundary point of a 1-cobordism.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum End {
    In(usize),
    Out(usize),
}

/// The five admissible component shapes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ComponentKind {
    /// Two incoming points of opposite sign.
    Cap,
    /// Two outgoing points of opposite sign.
    Cup,
    /// A positive incoming point joined to a positive outgoing point.
    PlusStrand,
    /// A negative incoming point joined to a negative outgoing point.
    MinusStrand,
    Loop,
}

/// One row of a component listing: the boundary points on it.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Component1 {
    pub inputs: Vec<usize>,
    pub outputs: Vec<usize>,
}

impl Component1 {
    pub fn new(inputs: &[usize], outputs: &[usize]) -> Self {
        Self { inputs: inputs.to_vec(), outputs: outputs.to_vec() }
    }
}

/// An oriented 1-cobordism `{m, n, C, l_m, l_n}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cobordism1 {
    source: SignedSet,
    target: SignedSet,
    comp_count: usize,
    l_in: FinMap,
    l_out: FinMap,
}

impl Cobordism1 {
    pub fn new(source: SignedSet, target: SignedSet, l_in: FinMap, l_out: FinMap) -> Result<Self> {
        let c = Self::new_unchecked(source, target, l_in, l_out);
        c.validate().map_err(Error::Invalid)?;
        Ok(c)
    }

    pub fn new_unchecked(source: SignedSet, target: SignedSet, l_in: FinMap, l_out: FinMap) -> Self {
        let comp_count = l_in.cod();
        Self { source, target, comp_count, l_in, l_out }
    }

    /// Builds a cobordism from its non-loop components plus a loop count.
    pub fn from_components(
        source: SignedSet,
        target: SignedSet,
        components: &[Component1],
        loops: usize,
    ) -> Result<Self> {
        let mut l_in = vec![usize::MAX; source.len()];
        let mut l_out = vec![usize::MAX; target.len()];
        let mut problems = Vec::new();
        for (c, comp) in components.iter().enumerate() {
            if comp.inputs.is_empty() && comp.outputs.is_empty() {
                problems.push(format!("component {c} has no boundary points; list it as a loop"));
            }
            attach(&mut l_in, &comp.inputs, c, "in", &mut problems);
            attach(&mut l_out, &comp.outputs, c, "out", &mut problems);
        }
        for (side, table) in [("in", &l_in), ("out", &l_out)] {
            for (i, &c) in table.iter().enumerate() {
                if c == usize::MAX {
                    problems.push(format!("{side}-index {i} is not attached to any component"));
                }
            }
        }
        if !problems.is_empty() {
            return Err(Error::Invalid(problems));
        }
        let count = components.len() + loops;
        Self::new(source, target, FinMap::new(l_in, count)?, FinMap::new(l_out, count)?)
    }

    /// Builds a cobordism from a list of joined point pairs plus loops.
    pub fn from_pairs(source: SignedSet, target: SignedSet, pairs: &[(End, End)], loops: usize) -> Result<Self> {
        let components: Vec<Component1> = pairs
            .iter()
            .map(|&(a, b)| {
                let mut comp = Component1::default();
                for end in [a, b] {
                    match end {
                        End::In(i) => comp.inputs.push(i),
                        End::Out(j) => comp.outputs.push(j),
                    }
                }
                comp
            })
            .collect();
        Self::from_components(source, target, &components, loops)
    }

    pub fn source(&self) -> &SignedSet {
        &self.source
    }

    pub fn target(&self) -> &SignedSet {
        &self.target
    }

    pub fn comp_count(&self) -> usize {
        self.comp_count
    }

    pub fn l_in(&self) -> &FinMap {
        &self.l_in
    }

    pub fn l_out(&self) -> &FinMap {
        &self.l_out
    }

    pub fn components(&self) -> Vec<Component1> {
        let ins = self.l_in.fibers();
        let outs = self.l_out.fibers();
        ins.into_iter().zip(outs).map(|(inputs, outputs)| Component1 { inputs, outputs }).collect()
    }

    /// Kinds of all components, or every component that fits none.
    pub fn classify(&self) -> Result<Vec<ComponentKind>, Vec<String>> {
        self.validate_maps()?;
        let mut kinds = Vec::with_capacity(self.comp_count);
        let mut problems = Vec::new();
        for (c, comp) in self.components().iter().enumerate() {
            match self.kind_of(comp) {
                Ok(kind) => kinds.push(kind),
                Err(why) => problems.push(format!("component {c} violates the oriented matching rule: {why}")),
            }
        }
        if problems.is_empty() {
            Ok(kinds)
        } else {
            Err(problems)
        }
    }

    fn kind_of(&self, comp: &Component1) -> Result<ComponentKind, String> {
        let ins: Vec<Sign> = comp.inputs.iter().map(|&i| self.source.sign(i)).collect();
        let outs: Vec<Sign> = comp.outputs.iter().map(|&j| self.target.sign(j)).collect();
        match (ins.as_slice(), outs.as_slice()) {
            ([], []) => Ok(ComponentKind::Loop),
            ([a, b], []) if a != b => Ok(ComponentKind::Cap),
            ([], [a, b]) if a != b => Ok(ComponentKind::Cup),
            ([Sign::Plus], [Sign::Plus]) => Ok(ComponentKind::PlusStrand),
            ([Sign::Minus], [Sign::Minus]) => Ok(ComponentKind::MinusStrand),
            ([a, _], []) => Err(format!("two in-points of the same sign {a}")),
            ([], [a, _]) => Err(format!("two out-points of the same sign {a}")),
            ([a], [b]) => Err(format!("strand joins in-sign {a} to out-sign {b}")),
            _ => Err(format!("{} in-points and {} out-points on one component", ins.len(), outs.len())),
        }
    }

    fn validate_maps(&self) -> Result<(), Vec<String>> {
        let mut problems = Vec::new();
        for (name, map, side) in [("l_m", &self.l_in, &self.source), ("l_n", &self.l_out, &self.target)] {
            if map.dom() != side.len() {
                problems.push(format!("{name} has domain {} but the boundary has {} points", map.dom(), side.len()));
            }
            if map.cod() != self.comp_count {
                problems.push(format!(
                    "{name} has codomain {} but there are {} components",
                    map.cod(),
                    self.comp_count
                ));
            }
            for (i, &c) in map.table().iter().enumerate() {
                if c >= self.comp_count {
                    problems.push(format!("non-total map: {name}[{i}] = {c} >= {}", self.comp_count));
                }
            }
        }
        if problems.is_empty() {
            Ok(())
        } else {
            Err(problems)
        }
    }

    pub fn validate(&self) -> Result<(), Vec<String>> {
        self.classify().map(|_| ())
    }

    pub fn identity(s: &SignedSet) -> Self {
        identity1(s)
    }

    /// Strands sending point `i` of `from` to point `tau(i)` of `to`; `None`
    /// unless `tau` is a sign-preserving bijection.
    pub fn permutation(from: &SignedSet, to: &SignedSet, tau: &FinMap) -> Option<Self> {
        if tau.dom() != from.len() || tau.cod() != to.len() || !tau.is_bijective() {
            return None;
        }
        if (0..from.len()).any(|i| from.sign(i) != to.sign(tau.apply(i))) {
            return None;
        }
        Some(Self::new_unchecked(from.clone(), to.clone(), FinMap::identity(from.len()), tau.inverse()?))
    }

    /// Number of closed loops.
    pub fn loops(&self) -> usize {
        let ins = self.l_in.image_mask();
        let outs = self.l_out.image_mask();
        (0..self.comp_count).filter(|&c| !ins[c] && !outs[c]).count()
    }

    pub fn then(&self, next: &Self) -> Result<Self> {
        compose_pushout(self, next)
    }

    pub fn disjoint_union(&self, other: &Self) -> Self {
        disjoint_union1(self, other)
    }

    pub fn canonical_form(&self) -> CanonicalForm1 {
        CanonicalForm1::of(self)
    }

    pub fn strict_equals(&self, other: &Self) -> bool {
        self.source == other.source && self.target == other.target && self.canonical_form() == other.canonical_form()
    }
}

fn attach(table: &mut [usize], indices: &[usize], component: usize, side: &str, problems: &mut Vec<String>) {
    for &i in indices {
        match table.get_mut(i) {
            None => problems.push(format!(
                "{side}-index {i} of component {component} is out of range (boundary has {} points)",
                table.len()
            )),
            Some(slot) if *slot != usize::MAX => problems.push(format!("{side}-index {i} appears twice")),
            Some(slot) => *slot = component,
        }
    }
}

/// Point `i` of `s` joined to point `i` of a copy of `s`.
pub fn identity1(s: &SignedSet) -> Cobordism1 {
    Cobordism1::new_unchecked(s.clone(), s.clone(), FinMap::identity(s.len()), FinMap::identity(s.len()))
}

pub fn disjoint_union1(c1: &Cobordism1, c2: &Cobordism1) -> Cobordism1 {
    Cobordism1::new_unchecked(
        c1.source.concat(&c2.source),
        c1.target.concat(&c2.target),
        disjoint_union_map(&c1.l_in, &c2.l_in),
        disjoint_union_map(&c1.l_out, &c2.l_out),
    )
}

fn check_composable(phi: &Cobordism1, psi: &Cobordism1) -> Result<()> {
    if phi.target != psi.source {
        return Err(Error::BoundaryMismatch(format!(
            "first cobordism ends at {} but second starts at {}",
            phi.target, psi.source
        )));
    }
    Ok(())
}

/// Glues along the shared signed boundary: the component set is the
/// pushout of `A <- k -> B`, and loops are the classes no outer point
/// reaches.
pub fn compose_pushout(phi: &Cobordism1, psi: &Cobordism1) -> Result<Cobordism1> {
    check_composable(phi, psi)?;
    let po = finset::pushout(&Span::new(phi.l_out.clone(), psi.l_in.clone())?);
    let c = Cobordism1::new_unchecked(
        phi.source.clone(),
        psi.target.clone(),
        phi.l_in.then(&po.into_left)?,
        psi.l_out.then(&po.into_right)?,
    );
    c.validate().map_err(|p| Error::Internal(format!("composite is not oriented: {}", p.join("; "))))?;
    Ok(c)
}

pub fn loops(c: &Cobordism1) -> usize {
    c.loops()
}

pub fn strict_equals1(c1: &Cobordism1, c2: &Cobordism1) -> bool {
    c1.strict_equals(c2)
}

impl Morphism for Cobordism1 {
    type Object = SignedSet;

    fn source(&self) -> SignedSet {
        self.source.clone()
    }

    fn target(&self) -> SignedSet {
        self.target.clone()
    }

    fn object_len(object: &SignedSet) -> usize {
        object.len()
    }

    fn then(&self, next: &Self) -> Result<Self> {
        compose_pushout(self, next)
    }

    fn strict_equals(&self, other: &Self) -> bool {
        Cobordism1::strict_equals(self, other)
    }

    fn is_cofibration(&self) -> bool {
        is_cofibration1(self)
    }

    fn is_fibration(&self) -> bool {
        is_fibration1(self)
    }

    fn factorize(&self) -> Result<Factorization<Self>> {
        factorize1(self)
    }

    fn permutation(from: &SignedSet, to: &SignedSet, tau: &FinMap) -> Option<Self> {
        Cobordism1::permutation(from, to, tau)
    }

    fn target_key(&self, z: usize) -> Vec<usize> {
        let c = self.l_out.apply(z);
        let mut key = vec![self.target.sign(z) as usize];
        key.extend((0..self.source.len()).filter(|&x| self.l_in.apply(x) == c));
        key
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use End::{In, Out};

    pub(crate) fn signed(s: &str) -> SignedSet {
        SignedSet::parse(s).unwrap()
    }

    pub(crate) fn cup() -> Cobordism1 {
        Cobordism1::from_pairs(signed(""), signed("+-"), &[(Out(0), Out(1))], 0).unwrap()
    }

    pub(crate) fn cap() -> Cobordism1 {
        Cobordism1::from_pairs(signed("+-"), signed(""), &[(In(0), In(1))], 0).unwrap()
    }

    /// The bottom half of the worked composite: `(+,-,+,-) -> (+,+,-,+,-,-,+,-)`.
    pub(crate) fn worked_first() -> Cobordism1 {
        Cobordism1::from_pairs(
            signed("+-+-"),
            signed("++-+--+-"),
            &[(In(0), Out(0)), (In(1), Out(5)), (In(2), In(3)), (Out(1), Out(2)), (Out(3), Out(4)), (Out(6), Out(7))],
            0,
        )
        .unwrap()
    }

    pub(crate) fn worked_second() -> Cobordism1 {
        Cobordism1::from_pairs(
            signed("++-+--+-"),
            signed("++--"),
            &[(In(0), Out(0)), (In(1), Out(1)), (In(2), In(3)), (In(4), Out(2)), (In(5), Out(3)), (In(6), In(7))],
            0,
        )
        .unwrap()
    }

    pub(crate) fn worked_composite() -> Cobordism1 {
        Cobordism1::from_pairs(
            signed("+-+-"),
            signed("++--"),
            &[(In(0), Out(0)), (In(1), Out(3)), (In(2), In(3)), (Out(1), Out(2))],
            1,
        )
        .unwrap()
    }

    #[test]
    fn validate_examples() {
        assert!(identity1(&signed("+")).validate().is_ok());
        let bad =
            Cobordism1::new_unchecked(signed("++"), signed(""), FinMap::new(vec![0, 0], 1).unwrap(), FinMap::empty(1));
        let problems = bad.validate().unwrap_err();
        assert_eq!(problems.len(), 1);
        assert!(problems[0].contains("two in-points of the same sign +"), "{problems:?}");
        assert!(worked_first().validate().is_ok());
    }

    #[test]
    fn classify_kinds() {
        let kinds = worked_composite().classify().unwrap();
        assert_eq!(
            kinds,
            vec![
                ComponentKind::PlusStrand,
                ComponentKind::MinusStrand,
                ComponentKind::Cap,
                ComponentKind::Cup,
                ComponentKind::Loop
            ]
        );
    }

    #[test]
    fn worked_composition() {
        let c = compose_pushout(&worked_first(), &worked_second()).unwrap();
        assert!(c.strict_equals(&worked_composite()));
        assert_eq!(c.loops(), 1);
    }

    #[test]
    fn cup_then_cap_is_a_loop() {
        let c = compose_pushout(&cup(), &cap()).unwrap();
        assert!(c.source().is_empty() && c.target().is_empty());
        assert_eq!(c.loops(), 1);
    }

    #[test]
    fn identity_laws() {
        assert_eq!(identity1(&SignedSet::empty()).comp_count(), 0);
        let s = signed("+--+");
        let id = identity1(&s);
        assert!(id.then(&id).unwrap().strict_equals(&id));
        let c = worked_first();
        assert!(identity1(c.source()).then(&c).unwrap().strict_equals(&c));
        assert!(c.then(&identity1(c.target())).unwrap().strict_equals(&c));
    }

    #[test]
    fn compose_rejects_sign_mismatch() {
        let err = identity1(&signed("+-")).then(&identity1(&signed("-+"))).unwrap_err();
        assert!(matches!(err, Error::BoundaryMismatch(_)));
    }

    #[test]
    fn loops_examples() {
        assert_eq!(identity1(&signed("+-")).loops(), 0);
        let three = Cobordism1::from_components(SignedSet::empty(), SignedSet::empty(), &[], 3).unwrap();
        assert_eq!(three.loops(), 3);
        assert_eq!(worked_composite().loops(), 1);
    }

    #[test]
    fn interchange() {
        let (a, b) = (worked_first(), worked_second());
        let lhs = a.disjoint_union(&cup()).then(&b.disjoint_union(&cap())).unwrap();
        let rhs = a.then(&b).unwrap().disjoint_union(&cup().then(&cap()).unwrap());
        assert!(lhs.strict_equals(&rhs));
    }

    #[test]
    fn permutation_requires_signs() {
        let s = signed("+-");
        let swap = FinMap::new(vec![1, 0], 2).unwrap();
        assert!(Cobordism1::permutation(&s, &s, &swap).is_none());
        let p = Cobordism1::permutation(&s, &signed("-+"), &swap).unwrap();
        assert!(p.validate().is_ok());
    }

    #[test]
    fn parse_signs() {
        assert_eq!(signed("+\u{2212}").signs(), &[Sign::Plus, Sign::Minus]);
        assert!(SignedSet::parse("+x").is_err());
    }
}
