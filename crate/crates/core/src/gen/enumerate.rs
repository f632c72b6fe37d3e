//! Exhaustive enumeration of tiny cobordisms and of all factorizations of a
//! given cobordism.

use itertools::Itertools;

use crate::finset::FinMap;
use crate::ofs::Factorization;
use crate::onecob::{is_cofibration1, is_fibration1, Cobordism1, Factorization1, Sign, SignedSet};
use crate::twocob::{Cobordism2, Component2, Factorization2, Genus};

/// All set partitions of `0..n`, blocks ordered by their smallest element.
pub fn set_partitions(n: usize) -> Vec<Vec<Vec<usize>>> {
    fn grow(i: usize, n: usize, blocks: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
        if i == n {
            out.push(blocks.clone());
            return;
        }
        for b in 0..blocks.len() {
            blocks[b].push(i);
            grow(i + 1, n, blocks, out);
            blocks[b].pop();
        }
        blocks.push(vec![i]);
        grow(i + 1, n, blocks, out);
        blocks.pop();
    }
    let mut out = Vec::new();
    grow(0, n, &mut Vec::new(), &mut out);
    out
}

/// Every tuple in `0..=max` of length `len` (one empty tuple when `len` is 0).
pub fn genus_tuples(len: usize, max: Genus) -> Vec<Vec<Genus>> {
    if len == 0 {
        return vec![vec![]];
    }
    (0..len).map(|_| 0..=max).multi_cartesian_product().collect()
}

#[derive(Clone, Copy, Debug)]
pub struct Bounds2 {
    /// Components including closed surfaces.
    pub max_components: usize,
    pub max_genus: Genus,
    pub max_closed: usize,
}

/// One representative of every strict-equality class of cobordisms
/// `m -> n` within the bounds.
pub fn cobordisms2(m: usize, n: usize, b: &Bounds2) -> Vec<Cobordism2> {
    let mut out = Vec::new();
    for blocks in set_partitions(m + n) {
        if blocks.len() > b.max_components {
            continue;
        }
        let room = (b.max_components - blocks.len()).min(b.max_closed);
        for genera in genus_tuples(blocks.len(), b.max_genus) {
            let base: Vec<Component2> = blocks
                .iter()
                .zip(&genera)
                .map(|(block, &g)| {
                    let (ins, outs): (Vec<usize>, Vec<usize>) = block.iter().partition(|&&p| p < m);
                    let outs: Vec<usize> = outs.iter().map(|p| p - m).collect();
                    Component2::new(&ins, &outs, g)
                })
                .collect();
            for closed in 0..=room {
                for gs in (0..=b.max_genus).combinations_with_replacement(closed) {
                    let mut comps = base.clone();
                    comps.extend(gs.into_iter().map(Component2::closed));
                    out.push(Cobordism2::from_components(m, n, &comps).expect("enumerated cobordism is valid"));
                }
            }
        }
    }
    out
}

pub fn signed_sets(len: usize) -> Vec<SignedSet> {
    (0..1usize << len)
        .map(|bits| {
            SignedSet::new((0..len).map(|i| if bits >> i & 1 == 0 { Sign::Plus } else { Sign::Minus }).collect())
        })
        .collect()
}

/// Every oriented cobordism `m -> n` with exactly `loops` loops, one per
/// strict-equality class.
pub fn cobordisms1(m: &SignedSet, n: &SignedSet, loops: usize) -> Vec<Cobordism1> {
    use crate::onecob::{from_matching, MatchingView};
    let sources = m.count(Sign::Plus) + n.count(Sign::Minus);
    let sinks = m.count(Sign::Minus) + n.count(Sign::Plus);
    if sources != sinks {
        return Vec::new();
    }
    (0..sources)
        .permutations(sources)
        .map(|tab| {
            let view = MatchingView { bijection: FinMap::new_unchecked(tab, sinks), loops };
            from_matching(&view, m, n).expect("enumerated matching is valid")
        })
        .collect()
}

#[derive(Clone, Debug)]
struct Piece {
    owner: usize,
    points: Vec<usize>,
}

/// Ways to split each owner's points into pieces.
fn piece_choices(owners: &[Vec<usize>]) -> Vec<Vec<Piece>> {
    let per_owner: Vec<Vec<Vec<Piece>>> = owners
        .iter()
        .enumerate()
        .filter(|(_, points)| !points.is_empty())
        .map(|(owner, points)| {
            set_partitions(points.len())
                .into_iter()
                .map(|blocks| {
                    blocks
                        .iter()
                        .map(|block| Piece { owner, points: block.iter().map(|&i| points[i]).collect() })
                        .collect::<Vec<Piece>>()
                })
                .collect()
        })
        .collect();
    if per_owner.is_empty() {
        return vec![vec![]];
    }
    per_owner.into_iter().multi_cartesian_product().map(|parts| parts.concat()).collect()
}

/// Ordered lists of `(cofibration piece, fibration piece)` pairs, each
/// piece used at most once, pairs within one owner.
fn middles(a: &[Piece], b: &[Piece], max: usize) -> Vec<Vec<(usize, usize)>> {
    fn extend(a: &[Piece], b: &[Piece], max: usize, cur: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
        out.push(cur.clone());
        if cur.len() == max {
            return;
        }
        for i in 0..a.len() {
            if cur.iter().any(|&(x, _)| x == i) {
                continue;
            }
            for j in 0..b.len() {
                if b[j].owner != a[i].owner || cur.iter().any(|&(_, y)| y == j) {
                    continue;
                }
                cur.push((i, j));
                extend(a, b, max, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    extend(a, b, max, &mut Vec::new(), &mut out);
    out
}

/// Every way to write `total` as an ordered sum of `slots` naturals.
fn compositions(total: Genus, slots: usize) -> Vec<Vec<Genus>> {
    if slots == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in 0..=total {
        for mut rest in compositions(total - first, slots - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Whether the pieces of one owner are connected through the middle.
fn connected(owner: usize, a: &[Piece], b: &[Piece], mid: &[(usize, usize)]) -> bool {
    let mine_a: Vec<usize> = (0..a.len()).filter(|&i| a[i].owner == owner).collect();
    let mine_b: Vec<usize> = (0..b.len()).filter(|&j| b[j].owner == owner).collect();
    let total = mine_a.len() + mine_b.len();
    // nodes: cofibration pieces as `i`, fibration pieces as `a.len() + j`
    let mut seen = vec![false; a.len() + b.len()];
    let mut stack = vec![mine_a.first().copied().unwrap_or_else(|| a.len() + mine_b[0])];
    let mut reached = 0;
    while let Some(node) = stack.pop() {
        if std::mem::replace(&mut seen[node], true) {
            continue;
        }
        reached += 1;
        for &(i, j) in mid {
            if node == i {
                stack.push(a.len() + j);
            } else if node == a.len() + j {
                stack.push(i);
            }
        }
    }
    reached == total
}

/// Every factorization of `c` into a cofibration then a fibration with at
/// most `max_middle` middle circles, each middle numbering listed
/// separately.
///
/// Gluing only merges components, so each factor component lies inside one
/// component `X` of `c`. The pieces inside `X` must be connected through
/// the middle, and by the genus formula their genera sum to
/// `g(X) - (s - t + 1)` for `s` middle circles and `t` pieces; the search
/// enumerates exactly those.
pub fn factorizations2(c: &Cobordism2, max_middle: usize) -> Vec<Factorization2> {
    let comps = c.components();
    let closed: Vec<Genus> = c.closed_surfaces().iter().map(|&x| c.genus()[x]).collect();
    let ins: Vec<Vec<usize>> = comps.iter().map(|k| k.inputs.clone()).collect();
    let outs: Vec<Vec<usize>> = comps.iter().map(|k| k.outputs.clone()).collect();
    let owners: Vec<usize> = (0..comps.len()).filter(|&x| !ins[x].is_empty() || !outs[x].is_empty()).collect();
    let mut found = Vec::new();
    for a in piece_choices(&ins) {
        for b in piece_choices(&outs) {
            'mid: for mid in middles(&a, &b, max_middle) {
                // genus slots: every cofibration piece and every unmatched fibration piece
                let mut per_owner = Vec::with_capacity(owners.len());
                for &x in &owners {
                    if !connected(x, &a, &b, &mid) {
                        continue 'mid;
                    }
                    let slots_a: Vec<usize> = (0..a.len()).filter(|&i| a[i].owner == x).collect();
                    let slots_b: Vec<usize> =
                        (0..b.len()).filter(|&j| b[j].owner == x && mid.iter().all(|&(_, y)| y != j)).collect();
                    let t = (slots_a.len() + (0..b.len()).filter(|&j| b[j].owner == x).count()) as i128;
                    let s = mid.iter().filter(|&&(i, _)| a[i].owner == x).count() as i128;
                    let budget = comps[x].genus as i128 - (s - t + 1);
                    if budget < 0 {
                        continue 'mid;
                    }
                    let splits = compositions(budget as Genus, slots_a.len() + slots_b.len());
                    per_owner
                        .push(splits.into_iter().map(|g| (slots_a.clone(), slots_b.clone(), g)).collect::<Vec<_>>());
                }
                let choices: Vec<Vec<_>> = if per_owner.is_empty() {
                    vec![vec![]]
                } else {
                    per_owner.into_iter().multi_cartesian_product().collect()
                };
                for choice in choices {
                    let mut a_genus = vec![0; a.len()];
                    let mut b_genus = vec![0; b.len()];
                    for (slots_a, slots_b, g) in &choice {
                        for (k, &i) in slots_a.iter().enumerate() {
                            a_genus[i] = g[k];
                        }
                        for (k, &j) in slots_b.iter().enumerate() {
                            b_genus[j] = g[slots_a.len() + k];
                        }
                    }
                    let Some(f) = assemble2(c, &a, &a_genus, &b, &b_genus, &mid, &closed) else { continue };
                    if f.cofib.is_cofibration()
                        && f.fib.is_fibration()
                        && f.composite().is_ok_and(|whole| whole.strict_equals(c))
                    {
                        found.push(f);
                    }
                }
            }
        }
    }
    found
}

fn assemble2(
    c: &Cobordism2,
    a: &[Piece],
    a_genus: &[Genus],
    b: &[Piece],
    b_genus: &[Genus],
    mid: &[(usize, usize)],
    closed: &[Genus],
) -> Option<Factorization2> {
    let mut a_in = vec![0; c.m()];
    for (i, p) in a.iter().enumerate() {
        p.points.iter().for_each(|&x| a_in[x] = i);
    }
    let mut b_out = vec![0; c.n()];
    for (j, p) in b.iter().enumerate() {
        p.points.iter().for_each(|&y| b_out[y] = j);
    }
    let a_count = a.len() + closed.len();
    let mut all_a_genus = a_genus.to_vec();
    all_a_genus.extend_from_slice(closed);
    let cofib = Cobordism2::new(
        FinMap::new(a_in, a_count).ok()?,
        FinMap::new(mid.iter().map(|&(i, _)| i).collect(), a_count).ok()?,
        all_a_genus,
    )
    .ok()?;
    let fib = Cobordism2::new(
        FinMap::new(mid.iter().map(|&(_, j)| j).collect(), b.len()).ok()?,
        FinMap::new(b_out, b.len()).ok()?,
        b_genus.to_vec(),
    )
    .ok()?;
    Some(Factorization { cofib, fib })
}

/// Every factorization of `c` through a signed middle of at most
/// `max_middle` points.
pub fn factorizations1(c: &Cobordism1, max_middle: usize) -> Vec<Factorization1> {
    let mut found = Vec::new();
    for len in 0..=max_middle {
        for k in signed_sets(len) {
            let fibs: Vec<Cobordism1> = cobordisms1(&k, c.target(), 0).into_iter().filter(is_fibration1).collect();
            if fibs.is_empty() {
                continue;
            }
            for cofib in cobordisms1(c.source(), &k, c.loops()).into_iter().filter(is_cofibration1) {
                for fib in &fibs {
                    if cofib.then(fib).is_ok_and(|whole| whole.strict_equals(c)) {
                        found.push(Factorization { cofib: cofib.clone(), fib: fib.clone() });
                    }
                }
            }
        }
    }
    found
}
