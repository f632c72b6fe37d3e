use crate::error::{Error, Result};
use crate::finset::FinMap;
use crate::ofs::{self, Factorization};

use super::{Cobordism1, Sign, SignedSet};

pub type Factorization1 = Factorization<Cobordism1>;

/// Splits off the through-strands: the middle has one point per strand,
/// signed like its ends. Caps and loops go to the first factor, cups to
/// the second.
pub fn factorize1(c: &Cobordism1) -> Result<Factorization1> {
    c.validate().map_err(Error::Invalid)?;
    let count = c.comp_count();
    let ins = c.l_in().image_mask();
    let outs = c.l_out().image_mask();

    let middle: Vec<usize> = (0..count).filter(|&x| ins[x] && outs[x]).collect();
    let mut sign_of = vec![Sign::Plus; count];
    for (i, &x) in c.l_in().table().iter().enumerate() {
        sign_of[x] = c.source().sign(i);
    }
    let k = SignedSet::new(middle.iter().map(|&x| sign_of[x]).collect());

    let (a_index, a_len) = reindex(count, |x| ins[x] || !outs[x]);
    let (b_index, b_len) = reindex(count, |x| outs[x]);
    let cofib = Cobordism1::new(
        c.source().clone(),
        k.clone(),
        FinMap::new(c.l_in().table().iter().map(|&x| a_index[x]).collect(), a_len)?,
        FinMap::new(middle.iter().map(|&x| a_index[x]).collect(), a_len)?,
    )?;
    let fib = Cobordism1::new(
        k,
        c.target().clone(),
        FinMap::new(middle.iter().map(|&x| b_index[x]).collect(), b_len)?,
        FinMap::new(c.l_out().table().iter().map(|&x| b_index[x]).collect(), b_len)?,
    )?;
    Ok(Factorization { cofib, fib })
}

fn reindex(count: usize, keep: impl Fn(usize) -> bool) -> (Vec<usize>, usize) {
    let mut index = vec![usize::MAX; count];
    let mut next = 0;
    for x in (0..count).filter(|&x| keep(x)) {
        index[x] = next;
        next += 1;
    }
    (index, next)
}

/// The unique `w: Y -> X'` with `e ; w = u` and `w ; m = v`.
pub fn lift1(e: &Cobordism1, m: &Cobordism1, u: &Cobordism1, v: &Cobordism1) -> Result<Cobordism1> {
    ofs::lift(e, m, u, v)
}
