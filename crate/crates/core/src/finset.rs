//! Finite index sets `{0, .., n-1}`, total maps between them, and the
//! pushouts and pullbacks used to glue cobordisms together.
//!
//! Every result carries a canonical labeling so that equal inputs give
//! identical outputs, not merely isomorphic ones:
//!
//! * pushout classes are numbered by their smallest representative in
//!   `A ⊔ B`, with the elements of `A` listed first;
//! * pullback elements are the pairs `(a, b)` in lexicographic order;
//! * lifts pick the smallest preimage of each point.

use std::fmt;

use crate::error::{Error, Result};

/// A total function `{0..dom} -> {0..cod}` stored as its table of values.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FinMap {
    cod: usize,
    tab: Vec<usize>,
}

impl fmt::Debug for FinMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}:{}->{}", self.tab, self.tab.len(), self.cod)
    }
}

impl FinMap {
    pub fn new(tab: Vec<usize>, cod: usize) -> Result<Self> {
        if let Some((index, &value)) = tab.iter().enumerate().find(|(_, &v)| v >= cod) {
            return Err(Error::NotTotal { index, value, cod });
        }
        Ok(Self { cod, tab })
    }

    /// Builds a map without checking totality. Only for constructing
    /// deliberately malformed data for validators.
    pub fn new_unchecked(tab: Vec<usize>, cod: usize) -> Self {
        Self { cod, tab }
    }

    pub fn identity(n: usize) -> Self {
        Self { cod: n, tab: (0..n).collect() }
    }

    /// The unique map out of the empty set.
    pub fn empty(cod: usize) -> Self {
        Self { cod, tab: Vec::new() }
    }

    pub fn dom(&self) -> usize {
        self.tab.len()
    }

    pub fn cod(&self) -> usize {
        self.cod
    }

    pub fn table(&self) -> &[usize] {
        &self.tab
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.tab[i]
    }

    pub fn is_total(&self) -> bool {
        self.tab.iter().all(|&v| v < self.cod)
    }

    /// Diagrammatic composite: first `self`, then `next`.
    pub fn then(&self, next: &FinMap) -> Result<FinMap> {
        compose_maps(self, next)
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.cod];
        self.tab.iter().all(|&v| !std::mem::replace(&mut seen[v], true))
    }

    pub fn is_surjective(&self) -> bool {
        self.image_mask().into_iter().all(|hit| hit)
    }

    pub fn is_bijective(&self) -> bool {
        self.dom() == self.cod && self.is_injective()
    }

    /// `mask[y]` is true iff `y` is in the image.
    pub fn image_mask(&self) -> Vec<bool> {
        let mut mask = vec![false; self.cod];
        for &v in &self.tab {
            mask[v] = true;
        }
        mask
    }

    /// Preimage lists, each sorted ascending.
    pub fn fibers(&self) -> Vec<Vec<usize>> {
        let mut fibers = vec![Vec::new(); self.cod];
        for (i, &v) in self.tab.iter().enumerate() {
            fibers[v].push(i);
        }
        fibers
    }

    /// Inverse of a bijection.
    pub fn inverse(&self) -> Option<FinMap> {
        if !self.is_bijective() {
            return None;
        }
        let mut inv = vec![0; self.cod];
        for (i, &v) in self.tab.iter().enumerate() {
            inv[v] = i;
        }
        Some(FinMap { cod: self.dom(), tab: inv })
    }
}

/// `result[i] = g[f[i]]`.
pub fn compose_maps(f: &FinMap, g: &FinMap) -> Result<FinMap> {
    if f.cod != g.dom() {
        return Err(Error::BoundaryMismatch(format!("cannot compose map into {} with map out of {}", f.cod, g.dom())));
    }
    Ok(FinMap { cod: g.cod, tab: f.tab.iter().map(|&i| g.tab[i]).collect() })
}

pub fn is_injective(f: &FinMap) -> bool {
    f.is_injective()
}

pub fn is_surjective(f: &FinMap) -> bool {
    f.is_surjective()
}

/// A span `A <- k -> B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Span {
    pub left: FinMap,
    pub right: FinMap,
}

impl Span {
    pub fn new(left: FinMap, right: FinMap) -> Result<Self> {
        if left.dom() != right.dom() {
            return Err(Error::BoundaryMismatch(format!("span legs have domains {} and {}", left.dom(), right.dom())));
        }
        Ok(Self { left, right })
    }

    pub fn apex(&self) -> usize {
        self.left.dom()
    }
}

/// A cospan `A -> D <- B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cospan {
    pub left: FinMap,
    pub right: FinMap,
}

impl Cospan {
    pub fn new(left: FinMap, right: FinMap) -> Result<Self> {
        if left.cod() != right.cod() {
            return Err(Error::BoundaryMismatch(format!(
                "cospan legs have codomains {} and {}",
                left.cod(),
                right.cod()
            )));
        }
        Ok(Self { left, right })
    }
}

/// The apex `C` of a pushout together with `A -> C` and `B -> C`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PushoutResult {
    pub size: usize,
    pub into_left: FinMap,
    pub into_right: FinMap,
}

/// The apex `k` of a pullback together with `k -> A` and `k -> B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PullbackResult {
    pub size: usize,
    pub proj_left: FinMap,
    pub proj_right: FinMap,
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        Self { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        // keep the smaller index as root
        if ra < rb {
            self.parent[rb] = ra;
        } else if rb < ra {
            self.parent[ra] = rb;
        }
    }
}

/// `(A ⊔ B) / ~` where `left(z) ~ right(z)`, with classes numbered by
/// their smallest member.
pub fn pushout(span: &Span) -> PushoutResult {
    let a = span.left.cod();
    let b = span.right.cod();
    let mut uf = UnionFind::new(a + b);
    for z in 0..span.apex() {
        uf.union(span.left.apply(z), a + span.right.apply(z));
    }
    let mut label = vec![usize::MAX; a + b];
    let mut size = 0;
    let mut class = Vec::with_capacity(a + b);
    for x in 0..a + b {
        let root = uf.find(x);
        if label[root] == usize::MAX {
            label[root] = size;
            size += 1;
        }
        class.push(label[root]);
    }
    let into_right = class.split_off(a);
    PushoutResult {
        size,
        into_left: FinMap { cod: size, tab: class },
        into_right: FinMap { cod: size, tab: into_right },
    }
}

/// `{(a, b) : left(a) = right(b)}` in lexicographic order.
pub fn pullback(cospan: &Cospan) -> PullbackResult {
    let fibers = cospan.right.fibers();
    let mut proj_left = Vec::new();
    let mut proj_right = Vec::new();
    for a in 0..cospan.left.dom() {
        for &b in &fibers[cospan.left.apply(a)] {
            proj_left.push(a);
            proj_right.push(b);
        }
    }
    let size = proj_left.len();
    PullbackResult {
        size,
        proj_left: FinMap { cod: cospan.left.dom(), tab: proj_left },
        proj_right: FinMap { cod: cospan.right.dom(), tab: proj_right },
    }
}

/// Whether `square` (an apex with maps from `A` and `B`) is a pushout of
/// `span`. Compared against the canonical pushout: the comparison map out
/// of the canonical apex is forced by joint surjectivity, so the square is
/// a pushout iff that map is a well-defined bijection.
pub fn is_pushout_square(span: &Span, square: &PushoutResult) -> Result<bool> {
    let PushoutResult { size, into_left, into_right } = square;
    if into_left.dom() != span.left.cod()
        || into_right.dom() != span.right.cod()
        || into_left.cod() != *size
        || into_right.cod() != *size
    {
        return Err(Error::BoundaryMismatch("square does not fit the span".into()));
    }
    if span.left.then(into_left)? != span.right.then(into_right)? {
        return Err(Error::NonCommutingSquare);
    }
    let canon = pushout(span);
    if canon.size != *size {
        return Ok(false);
    }
    let mut cmp = vec![usize::MAX; canon.size];
    let pairs = canon
        .into_left
        .table()
        .iter()
        .zip(into_left.table())
        .chain(canon.into_right.table().iter().zip(into_right.table()));
    for (&from, &to) in pairs {
        if cmp[from] == usize::MAX {
            cmp[from] = to;
        } else if cmp[from] != to {
            return Ok(false);
        }
    }
    Ok(FinMap { cod: *size, tab: cmp }.is_bijective())
}

/// Whether `square` (an apex with projections to `A` and `B`) is a
/// pullback of `cospan`: the induced map into the canonical pullback must
/// be a bijection.
pub fn is_pullback_square(cospan: &Cospan, square: &PullbackResult) -> Result<bool> {
    let PullbackResult { size, proj_left, proj_right } = square;
    if proj_left.cod() != cospan.left.dom()
        || proj_right.cod() != cospan.right.dom()
        || proj_left.dom() != *size
        || proj_right.dom() != *size
    {
        return Err(Error::BoundaryMismatch("square does not fit the cospan".into()));
    }
    if proj_left.then(&cospan.left)? != proj_right.then(&cospan.right)? {
        return Err(Error::NonCommutingSquare);
    }
    let canon = pullback(cospan);
    if canon.size != *size {
        return Ok(false);
    }
    let canon_pairs: Vec<(usize, usize)> =
        (0..canon.size).map(|i| (canon.proj_left.apply(i), canon.proj_right.apply(i))).collect();
    let mut seen = vec![false; canon.size];
    for x in 0..*size {
        let pair = (proj_left.apply(x), proj_right.apply(x));
        match canon_pairs.binary_search(&pair) {
            Ok(i) if !seen[i] => seen[i] = true,
            _ => return Ok(false),
        }
    }
    Ok(true)
}

/// Finds `u: n -> m` with `f ∘ u = h` (diagrammatically `u` then `f`),
/// taking the smallest preimage of each point.
pub fn find_lift(f: &FinMap, h: &FinMap) -> Option<FinMap> {
    if f.cod() != h.cod() {
        return None;
    }
    let mut first = vec![usize::MAX; f.cod()];
    for (i, &v) in f.table().iter().enumerate().rev() {
        first[v] = i;
    }
    let tab = h.table().iter().map(|&v| (first[v] != usize::MAX).then_some(first[v])).collect::<Option<Vec<_>>>()?;
    Some(FinMap { cod: f.dom(), tab })
}

/// Block sum `f1 ⊔ f2`.
pub fn disjoint_union_map(f1: &FinMap, f2: &FinMap) -> FinMap {
    let mut tab = f1.tab.clone();
    tab.extend(f2.tab.iter().map(|&v| v + f1.cod));
    FinMap { cod: f1.cod + f2.cod, tab }
}

pub fn disjoint_union_span(s1: &Span, s2: &Span) -> Span {
    Span { left: disjoint_union_map(&s1.left, &s2.left), right: disjoint_union_map(&s1.right, &s2.right) }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn map(tab: &[usize], cod: usize) -> FinMap {
        FinMap::new(tab.to_vec(), cod).unwrap()
    }

    #[test]
    fn compose_examples() {
        let id3 = FinMap::identity(3);
        assert_eq!(compose_maps(&id3, &id3).unwrap(), id3);
        assert_eq!(compose_maps(&map(&[0, 0], 1), &map(&[2], 3)).unwrap(), map(&[2, 2], 3));
        let swap = map(&[1, 0], 2);
        assert_eq!(compose_maps(&swap, &swap).unwrap(), FinMap::identity(2));
        assert!(matches!(compose_maps(&swap, &id3), Err(Error::BoundaryMismatch(_))));
    }

    #[test]
    fn rejects_non_total() {
        assert_eq!(FinMap::new(vec![0, 3], 2), Err(Error::NotTotal { index: 1, value: 3, cod: 2 }));
    }

    #[test]
    fn injective_surjective() {
        let id = FinMap::identity(4);
        assert!(id.is_injective() && id.is_surjective());
        let collapse = map(&[0, 0], 1);
        assert!(!collapse.is_injective() && collapse.is_surjective());
        let empty = FinMap::empty(2);
        assert!(empty.is_injective() && !empty.is_surjective());
    }

    #[test]
    fn pushout_examples() {
        let span = Span::new(FinMap::identity(1), FinMap::identity(1)).unwrap();
        let p = pushout(&span);
        assert_eq!(p.size, 1);
        assert_eq!(p.into_left, FinMap::identity(1));
        assert_eq!(p.into_right, FinMap::identity(1));

        // classes {A0,B1}, {A1}, {B0}
        let span = Span::new(map(&[0], 2), map(&[1], 2)).unwrap();
        let p = pushout(&span);
        assert_eq!(p.size, 3);
        assert_eq!(p.into_left, map(&[0, 1], 3));
        assert_eq!(p.into_right, map(&[2, 0], 3));
    }

    #[test]
    fn snake_span_mods_out() {
        // n = 2; the middle is n ⊔ n ⊔ n indexed (i-1)*n + x
        let n = 2;
        let b: Vec<usize> = (0..3 * n).map(|j| if j < n { j } else { j % n + n }).collect();
        let c: Vec<usize> = (0..3 * n).map(|j| if j >= 2 * n { j % n } else { j % n + n }).collect();
        let span = Span::new(map(&b, 2 * n), map(&c, 2 * n)).unwrap();
        let p = pushout(&span);
        assert_eq!(p.size, n);
        for x in 0..2 * n {
            assert_eq!(p.into_left.apply(x), x % n);
            assert_eq!(p.into_right.apply(x), x % n);
        }
    }

    #[test]
    fn pullback_examples() {
        let inj = map(&[0, 2], 3);
        let pb = pullback(&Cospan::new(inj.clone(), inj).unwrap());
        assert_eq!(pb.size, 2);
        assert_eq!(pb.proj_left, FinMap::identity(2));
        assert_eq!(pb.proj_right, FinMap::identity(2));

        let pb = pullback(&Cospan::new(map(&[0, 1], 3), map(&[1, 2], 3)).unwrap());
        assert_eq!(pb.size, 1);
        assert_eq!((pb.proj_left.apply(0), pb.proj_right.apply(0)), (1, 0));

        let pb = pullback(&Cospan::new(FinMap::empty(1), FinMap::identity(1)).unwrap());
        assert_eq!(pb.size, 0);
    }

    #[test]
    fn pushout_square_checks() {
        let span = Span::new(map(&[0], 2), map(&[1], 2)).unwrap();
        let canon = pushout(&span);
        assert!(is_pushout_square(&span, &canon).unwrap());

        // apex of size 4 that still commutes: A0 and B1 glued, rest free
        let bigger = PushoutResult { size: 4, into_left: map(&[0, 1], 4), into_right: map(&[2, 0], 4) };
        assert!(!is_pushout_square(&span, &bigger).unwrap());

        let broken = PushoutResult { size: 3, into_left: map(&[0, 1], 3), into_right: map(&[2, 1], 3) };
        assert_eq!(is_pushout_square(&span, &broken), Err(Error::NonCommutingSquare));
    }

    #[test]
    fn injective_pushout_is_pullback() {
        let span = Span::new(map(&[1], 2), map(&[0], 3)).unwrap();
        let p = pushout(&span);
        assert!(p.into_left.is_injective() && p.into_right.is_injective());
        let cospan = Cospan::new(p.into_left.clone(), p.into_right.clone()).unwrap();
        let square = PullbackResult { size: span.apex(), proj_left: span.left.clone(), proj_right: span.right.clone() };
        assert!(is_pullback_square(&cospan, &square).unwrap());
    }

    #[test]
    fn lift_examples() {
        let h = map(&[2, 0, 2], 3);
        assert_eq!(find_lift(&FinMap::identity(3), &h), Some(h));
        assert_eq!(find_lift(&map(&[0, 0], 1), &map(&[0], 1)), Some(map(&[0], 2)));
        assert_eq!(find_lift(&FinMap::empty(1), &map(&[0], 1)), None);
    }

    #[test]
    fn disjoint_union_examples() {
        let id1 = FinMap::identity(1);
        assert_eq!(disjoint_union_map(&id1, &id1), FinMap::identity(2));
        assert_eq!(disjoint_union_map(&map(&[0, 0], 1), &FinMap::empty(1)), map(&[0, 0], 2));

        let s1 = Span::new(id1.clone(), id1.clone()).unwrap();
        let s2 = Span::new(map(&[0], 2), map(&[1], 2)).unwrap();
        let (p1, p2) = (pushout(&s1), pushout(&s2));
        let joint = pushout(&disjoint_union_span(&s1, &s2));
        assert_eq!(joint.size, p1.size + p2.size);
        assert_eq!(joint.into_left, disjoint_union_map(&p1.into_left, &p2.into_left));
        assert_eq!(joint.into_right, disjoint_union_map(&p1.into_right, &p2.into_right));
    }
}
