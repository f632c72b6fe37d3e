//! Oriented cobordisms as a bijection `m₊ + n₋ -> m₋ + n₊` plus a loop
//! count, and composition by the execution formula.
//!
//! The block form of the execution formula composes the four pieces of each
//! bijection with iterated passes through the middle. Here that iteration is
//! realized by following paths: starting from an outer point, alternately
//! cross the first and second cobordism until an outer point is reached.
//! Middle points never reached from outside lie on new loops.

use crate::error::{Error, Result};
use crate::finset::FinMap;

use super::{check_composable, Cobordism1, Component1, End, Sign, SignedSet};

/// The bijection from sources (`m₊` then `n₋`, each in index order) to
/// sinks (`m₋` then `n₊`), and the number of loops.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchingView {
    pub bijection: FinMap,
    pub loops: usize,
}

/// Sources `m₊ + n₋` and sinks `m₋ + n₊` of a boundary, in index order.
fn terminals(m: &SignedSet, n: &SignedSet) -> (Vec<End>, Vec<End>) {
    let side = |s: &SignedSet, sign: Sign, wrap: fn(usize) -> End| -> Vec<End> {
        (0..s.len()).filter(|&i| s.sign(i) == sign).map(wrap).collect()
    };
    let mut sources = side(m, Sign::Plus, End::In);
    sources.extend(side(n, Sign::Minus, End::Out));
    let mut sinks = side(m, Sign::Minus, End::In);
    sinks.extend(side(n, Sign::Plus, End::Out));
    (sources, sinks)
}

/// For every boundary point, the other boundary point on its component.
struct Partners {
    of_in: Vec<Option<End>>,
    of_out: Vec<Option<End>>,
}

impl Partners {
    fn of(c: &Cobordism1) -> Self {
        let mut of_in = vec![None; c.source().len()];
        let mut of_out = vec![None; c.target().len()];
        for comp in c.components() {
            let ends: Vec<End> =
                comp.inputs.iter().map(|&i| End::In(i)).chain(comp.outputs.iter().map(|&j| End::Out(j))).collect();
            if let [a, b] = ends[..] {
                for (x, y) in [(a, b), (b, a)] {
                    match x {
                        End::In(i) => of_in[i] = Some(y),
                        End::Out(j) => of_out[j] = Some(y),
                    }
                }
            }
        }
        Self { of_in, of_out }
    }

    fn get(&self, end: End) -> Result<End> {
        let p = match end {
            End::In(i) => self.of_in[i],
            End::Out(j) => self.of_out[j],
        };
        p.ok_or_else(|| Error::Internal(format!("boundary point {end:?} has no partner")))
    }
}

/// Position of each sink in the sink list.
struct SinkIndex {
    of_in: Vec<Option<usize>>,
    of_out: Vec<Option<usize>>,
}

impl SinkIndex {
    fn new(sinks: &[End], m: usize, n: usize) -> Self {
        let (mut of_in, mut of_out) = (vec![None; m], vec![None; n]);
        for (pos, &e) in sinks.iter().enumerate() {
            match e {
                End::In(i) => of_in[i] = Some(pos),
                End::Out(j) => of_out[j] = Some(pos),
            }
        }
        Self { of_in, of_out }
    }

    fn get(&self, e: End) -> Option<usize> {
        match e {
            End::In(i) => self.of_in[i],
            End::Out(j) => self.of_out[j],
        }
    }
}

pub fn to_matching(c: &Cobordism1) -> Result<MatchingView> {
    c.validate().map_err(Error::Invalid)?;
    let (sources, sinks) = terminals(c.source(), c.target());
    let index = SinkIndex::new(&sinks, c.source().len(), c.target().len());
    let sink_pos = |e: End| index.get(e);
    let partners = Partners::of(c);
    let tab = sources
        .iter()
        .map(|&s| {
            let p = partners.get(s)?;
            sink_pos(p).ok_or_else(|| Error::Internal(format!("{s:?} is paired with source {p:?}")))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(MatchingView { bijection: FinMap::new(tab, sinks.len())?, loops: c.loops() })
}

pub fn from_matching(view: &MatchingView, m: &SignedSet, n: &SignedSet) -> Result<Cobordism1> {
    let (sources, sinks) = terminals(m, n);
    if view.bijection.dom() != sources.len() || view.bijection.cod() != sinks.len() || !view.bijection.is_bijective() {
        return Err(Error::InfeasibleSignProfile(format!(
            "matching is not a bijection from {} sources onto {} sinks",
            sources.len(),
            sinks.len()
        )));
    }
    let components: Vec<Component1> =
        sources.iter().enumerate().map(|(i, &s)| component_of(s, sinks[view.bijection.apply(i)])).collect();
    Cobordism1::from_components(m.clone(), n.clone(), &components, view.loops)
}

fn component_of(a: End, b: End) -> Component1 {
    let mut comp = Component1::default();
    for e in [a, b] {
        match e {
            End::In(i) => comp.inputs.push(i),
            End::Out(j) => comp.outputs.push(j),
        }
    }
    comp.inputs.sort_unstable();
    comp.outputs.sort_unstable();
    comp
}

/// Composite of `phi: m -> k` and `psi: k -> n` by path following.
pub fn compose_execution(phi: &Cobordism1, psi: &Cobordism1) -> Result<Cobordism1> {
    check_composable(phi, psi)?;
    phi.validate().map_err(Error::Invalid)?;
    psi.validate().map_err(Error::Invalid)?;
    let (first, second) = (Partners::of(phi), Partners::of(psi));
    let middle = phi.target().len();
    let mut visited = vec![false; middle];

    // Outer points: `End::In` of phi and `End::Out` of psi.
    let mut cross = |start: End| -> Result<End> {
        let mut here = match start {
            End::In(_) => first.get(start)?,
            End::Out(_) => second.get(start)?,
        };
        // here is a point reached through phi (In/Out of phi) or psi
        let mut in_phi = matches!(start, End::In(_));
        loop {
            match (in_phi, here) {
                (true, End::In(i)) => return Ok(End::In(i)),
                (false, End::Out(j)) => return Ok(End::Out(j)),
                (true, End::Out(z)) | (false, End::In(z)) => {
                    if std::mem::replace(&mut visited[z], true) {
                        return Err(Error::Internal(format!("middle point {z} crossed twice")));
                    }
                    here = if in_phi { second.get(End::In(z))? } else { first.get(End::Out(z))? };
                    in_phi = !in_phi;
                }
            }
        }
    };

    let (m, n) = (phi.source(), psi.target());
    let (sources, sinks) = terminals(m, n);
    let index = SinkIndex::new(&sinks, m.len(), n.len());
    let mut reached = vec![false; sinks.len()];
    let mut components = Vec::with_capacity(sources.len());
    for &s in &sources {
        let t = cross(s)?;
        let pos = index.get(t).ok_or_else(|| Error::Internal(format!("path from {s:?} ends at source {t:?}")))?;
        if std::mem::replace(&mut reached[pos], true) {
            return Err(Error::Internal(format!("sink {t:?} reached twice")));
        }
        components.push(component_of(s, t));
    }

    // every unvisited middle point lies on a cycle confined to the middle
    let mut new_loops = 0;
    for start in 0..middle {
        if visited[start] {
            continue;
        }
        new_loops += 1;
        let mut z = start;
        loop {
            visited[z] = true;
            let End::In(w) = second.get(End::In(z))? else {
                return Err(Error::Internal(format!("middle point {z} escapes through the second factor")));
            };
            visited[w] = true;
            let End::Out(next) = first.get(End::Out(w))? else {
                return Err(Error::Internal(format!("middle point {w} escapes through the first factor")));
            };
            if next == start {
                break;
            }
            if visited[next] {
                return Err(Error::Internal(format!("middle point {next} crossed twice")));
            }
            z = next;
        }
    }

    Cobordism1::from_components(m.clone(), n.clone(), &components, phi.loops() + psi.loops() + new_loops)
}
