use crate::error::{Error, Result};
use crate::finset::FinMap;
use crate::ofs::{self, Factorization};

use super::Cobordism2;

pub type Factorization2 = Factorization<Cobordism2>;

/// The (cofibration, fibration) factorization through the middle
/// `k = im(l_m) ∩ im(l_n)`.
///
/// The cofibration keeps every component touched by incoming circles plus
/// the closed surfaces, with their full genus. The fibration keeps the
/// components touched by outgoing circles; those it shares with the
/// cofibration through `k` are genus-zero tubes, the rest keep their genus.
pub fn factorize(c: &Cobordism2) -> Result<Factorization2> {
    c.validate().map_err(Error::Invalid)?;
    let count = c.comp_count();
    let ins = c.l_in().image_mask();
    let outs = c.l_out().image_mask();

    let middle: Vec<usize> = (0..count).filter(|&x| ins[x] && outs[x]).collect();
    let (a_index, a_comps) = reindex(count, |x| ins[x] || !outs[x]);
    let (b_index, b_comps) = reindex(count, |x| outs[x]);

    let cofib = Cobordism2::new(
        FinMap::new(c.l_in().table().iter().map(|&x| a_index[x]).collect(), a_comps.len())?,
        FinMap::new(middle.iter().map(|&x| a_index[x]).collect(), a_comps.len())?,
        a_comps.iter().map(|&x| c.genus()[x]).collect(),
    )?;
    let fib = Cobordism2::new(
        FinMap::new(middle.iter().map(|&x| b_index[x]).collect(), b_comps.len())?,
        FinMap::new(c.l_out().table().iter().map(|&x| b_index[x]).collect(), b_comps.len())?,
        b_comps.iter().map(|&x| if ins[x] { 0 } else { c.genus()[x] }).collect(),
    )?;
    Ok(Factorization { cofib, fib })
}

/// Positions of the kept components, in original order.
fn reindex(count: usize, keep: impl Fn(usize) -> bool) -> (Vec<usize>, Vec<usize>) {
    let mut index = vec![usize::MAX; count];
    let mut kept = Vec::new();
    for x in (0..count).filter(|&x| keep(x)) {
        index[x] = kept.len();
        kept.push(x);
    }
    (index, kept)
}

/// The unique middle bijection relating two factorizations of the same
/// cobordism.
pub fn align_factorizations(f1: &Factorization2, f2: &Factorization2) -> Result<FinMap> {
    ofs::align_factorizations(f1, f2)
}

/// The unique `w: Y -> X'` with `e ; w = u` and `w ; m = v`.
pub fn lift(e: &Cobordism2, m: &Cobordism2, u: &Cobordism2, v: &Cobordism2) -> Result<Cobordism2> {
    ofs::lift(e, m, u, v)
}
