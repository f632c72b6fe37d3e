//! Orthogonal factorization machinery shared by 2-Cob and 1-Cob⁺.
//!
//! Both categories expose the same surface through [`Morphism`]: a
//! composite, a strict equality, the two class predicates, the canonical
//! (cofibration, fibration) factorization and permutation morphisms on an
//! object. Alignment of factorizations and the diagonal fill-in are then
//! written once.

use std::fmt;

use crate::error::{Error, Result};
use crate::finset::FinMap;

/// A morphism in a cobordism category with a (cofibration, fibration)
/// factorization system. Composition is written diagrammatically:
/// `f.then(g)` is "first `f`, then `g`".
pub trait Morphism: Clone + fmt::Debug + Sized {
    type Object: Clone + PartialEq + fmt::Debug;

    fn source(&self) -> Self::Object;
    fn target(&self) -> Self::Object;
    fn object_len(object: &Self::Object) -> usize;

    fn then(&self, next: &Self) -> Result<Self>;
    fn strict_equals(&self, other: &Self) -> bool;
    fn is_cofibration(&self) -> bool;
    fn is_fibration(&self) -> bool;
    fn factorize(&self) -> Result<Factorization<Self>>;

    /// The permutation morphism `from -> to` sending point `i` to point
    /// `tau(i)`, or `None` when `tau` is not an isomorphism of objects.
    fn permutation(from: &Self::Object, to: &Self::Object, tau: &FinMap) -> Option<Self>;

    /// An invariant of outgoing point `z` that any permutation relabeling of
    /// the target must preserve: the sorted incoming points on its
    /// component, plus whatever labels the object carries.
    fn target_key(&self, z: usize) -> Vec<usize>;
}

/// A cofibration followed by a fibration through a shared middle object.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization<C> {
    pub cofib: C,
    pub fib: C,
}

impl<C: Morphism> Factorization<C> {
    pub fn middle(&self) -> C::Object {
        self.cofib.target()
    }

    pub fn composite(&self) -> Result<C> {
        self.cofib.then(&self.fib)
    }

    /// Both classes hold and the pieces compose back to `whole`.
    pub fn verify(&self, whole: &C) -> bool {
        self.cofib.is_cofibration() && self.fib.is_fibration() && self.composite().is_ok_and(|c| c.strict_equals(whole))
    }
}

/// The unique bijection `tau: K1 -> K2` of middles with
/// `f1.cofib ; perm(tau) = f2.cofib` and `perm(tau) ; f2.fib = f1.fib`.
pub fn align_factorizations<C: Morphism>(f1: &Factorization<C>, f2: &Factorization<C>) -> Result<FinMap> {
    let (k1, k2) = (f1.middle(), f2.middle());
    let size = C::object_len(&k1);
    if size != C::object_len(&k2) {
        return Err(Error::NoAlignment);
    }
    let keys2: Vec<_> = (0..size).map(|z| f2.cofib.target_key(z)).collect();
    let candidates: Vec<Vec<usize>> = (0..size)
        .map(|z| {
            let key = f1.cofib.target_key(z);
            (0..size).filter(|&w| keys2[w] == key).collect()
        })
        .collect();

    let mut search = AlignSearch {
        f1,
        f2,
        k1: &k1,
        k2: &k2,
        candidates: &candidates,
        tau: Vec::with_capacity(size),
        used: vec![false; size],
        found: Vec::new(),
    };
    search.run();
    match search.found.len() {
        0 => Err(Error::NoAlignment),
        1 => Ok(search.found.pop().unwrap()),
        _ => Err(Error::MultipleAlignments),
    }
}

struct AlignSearch<'a, C: Morphism> {
    f1: &'a Factorization<C>,
    f2: &'a Factorization<C>,
    k1: &'a C::Object,
    k2: &'a C::Object,
    candidates: &'a [Vec<usize>],
    tau: Vec<usize>,
    used: Vec<bool>,
    found: Vec<FinMap>,
}

impl<C: Morphism> AlignSearch<'_, C> {
    fn run(&mut self) {
        if self.found.len() > 1 {
            return;
        }
        let z = self.tau.len();
        if z == self.candidates.len() {
            let tau = FinMap::new_unchecked(self.tau.clone(), z);
            if self.accepts(&tau) {
                self.found.push(tau);
            }
            return;
        }
        for i in 0..self.candidates[z].len() {
            let w = self.candidates[z][i];
            if self.used[w] {
                continue;
            }
            self.used[w] = true;
            self.tau.push(w);
            self.run();
            self.tau.pop();
            self.used[w] = false;
        }
    }

    fn accepts(&self, tau: &FinMap) -> bool {
        let Some(perm) = C::permutation(self.k1, self.k2, tau) else {
            return false;
        };
        let cofib_ok = self.f1.cofib.then(&perm).is_ok_and(|c| c.strict_equals(&self.f2.cofib));
        cofib_ok && perm.then(&self.f2.fib).is_ok_and(|f| f.strict_equals(&self.f1.fib))
    }
}

/// Diagonal fill-in for a commuting square
///
/// ```text
///   X --u--> X'
///   |        |
///   e        m
///   v        v
///   Y --v--> Y'
/// ```
///
/// with `e` a cofibration and `m` a fibration: the unique `w: Y -> X'`
/// with `e ; w = u` and `w ; m = v`.
pub fn lift<C: Morphism>(e: &C, m: &C, u: &C, v: &C) -> Result<C> {
    if !e.is_cofibration() {
        return Err(Error::ClassPrecondition("left map is not a cofibration".into()));
    }
    if !m.is_fibration() {
        return Err(Error::ClassPrecondition("right map is not a fibration".into()));
    }
    if !e.then(v)?.strict_equals(&u.then(m)?) {
        return Err(Error::NonCommutingSquare);
    }

    // u = q ; p and v = s ; r
    let Factorization { cofib: q, fib: p } = u.factorize()?;
    let Factorization { cofib: s, fib: r } = v.factorize()?;
    // two factorizations of the diagonal e ; v = u ; m
    let via_v = Factorization { cofib: e.then(&s)?, fib: r };
    let via_u = Factorization { cofib: q, fib: p.then(m)? };
    let tau = align_factorizations(&via_v, &via_u)?;
    let perm = C::permutation(&via_v.middle(), &via_u.middle(), &tau)
        .ok_or_else(|| Error::Internal("alignment is not an isomorphism".into()))?;
    let w = s.then(&perm)?.then(&p)?;

    if !e.then(&w)?.strict_equals(u) || !w.then(m)?.strict_equals(v) {
        return Err(Error::Internal("lift does not fill the square".into()));
    }
    Ok(w)
}
