//! Seeded random generators for cobordisms, class-constrained cobordisms and
//! planted lifting squares, plus exhaustive enumerators for tiny instances.
//!
//! Every generator draws from a [`ChaCha8Rng`] seeded from
//! [`GenParams::seed`], so equal inputs give equal outputs on every
//! platform.

pub mod enumerate;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::finset::FinMap;
use crate::onecob::{from_matching, Cobordism1, Component1, MatchingView, Sign, SignedSet};
use crate::twocob::{Cobordism2, Component2, Genus};

#[derive(Clone, Debug, PartialEq)]
pub struct GenParams {
    /// Upper bound on circles (or points) per generated boundary.
    pub max_circles: usize,
    pub max_components: usize,
    pub max_genus: Genus,
    /// Chance of each extra closed surface or loop; clamped to `[0, 1]`.
    pub loop_rate: f64,
    pub seed: u64,
}

impl Default for GenParams {
    fn default() -> Self {
        Self { max_circles: 4, max_components: 4, max_genus: 2, loop_rate: 0.2, seed: 0 }
    }
}

impl GenParams {
    pub fn with_seed(&self, seed: u64) -> Self {
        Self { seed, ..self.clone() }
    }
}

/// A commuting square `e ; v = u ; m` together with its planted diagonal
/// `w`, so that `u = e ; w` and `v = w ; m`.
#[derive(Clone, Debug)]
pub struct Square<C> {
    pub e: C,
    pub m: C,
    pub u: C,
    pub v: C,
    pub w: C,
}

pub type Square2 = Square<Cobordism2>;
pub type Square1 = Square<Cobordism1>;

/// A stream of samples sharing one random state.
pub struct Generator {
    rng: ChaCha8Rng,
    params: GenParams,
}

impl Generator {
    pub fn new(params: GenParams) -> Self {
        Self { rng: ChaCha8Rng::seed_from_u64(params.seed), params }
    }

    pub fn params(&self) -> &GenParams {
        &self.params
    }

    /// A boundary size in `0..=max_circles`.
    pub fn size(&mut self) -> usize {
        self.rng.random_range(0..=self.params.max_circles)
    }

    fn genus(&mut self) -> Genus {
        self.rng.random_range(0..=self.params.max_genus)
    }

    fn coin(&mut self) -> bool {
        self.rng.random_bool(0.5)
    }

    fn extra(&mut self, already: usize) -> usize {
        let rate = self.params.loop_rate.clamp(0.0, 1.0);
        let mut count = 0;
        while already + count < self.params.max_components.max(1) && self.rng.random_bool(rate) {
            count += 1;
        }
        count
    }

    /// Splits `0..points` into `k` nonempty groups, `1 <= k <= points`.
    fn groups(&mut self, points: usize, k: usize) -> Vec<Vec<usize>> {
        let mut order: Vec<usize> = (0..points).collect();
        order.shuffle(&mut self.rng);
        let mut groups = vec![Vec::new(); k];
        for (pos, &p) in order.iter().enumerate() {
            let g = if pos < k { pos } else { self.rng.random_range(0..k) };
            groups[g].push(p);
        }
        for g in &mut groups {
            g.sort_unstable();
        }
        groups
    }

    fn group_count(&mut self, points: usize) -> usize {
        if points == 0 {
            0
        } else {
            self.rng.random_range(1..=points.min(self.params.max_components.max(1)))
        }
    }

    fn permuted(&mut self, len: usize) -> Vec<usize> {
        let mut p: Vec<usize> = (0..len).collect();
        p.shuffle(&mut self.rng);
        p
    }

    /// A random total map `dom -> cod`; `cod` must be positive unless `dom` is 0.
    pub fn map(&mut self, dom: usize, cod: usize) -> FinMap {
        let tab = (0..dom).map(|_| self.rng.random_range(0..cod)).collect();
        FinMap::new_unchecked(tab, cod)
    }

    /// A random injection `dom -> cod`, `dom <= cod`.
    pub fn injection(&mut self, dom: usize, cod: usize) -> FinMap {
        let mut tab = self.permuted(cod);
        tab.truncate(dom);
        FinMap::new_unchecked(tab, cod)
    }

    fn closed_surfaces(&mut self, comps: &mut Vec<Component2>) {
        for _ in 0..self.extra(comps.len()) {
            let g = self.genus();
            comps.push(Component2::closed(g));
        }
    }

    pub fn cobordism2(&mut self, m: usize, n: usize) -> Cobordism2 {
        let k = self.group_count(m + n);
        let mut comps = Vec::new();
        for group in self.groups(m + n, k) {
            let (ins, outs): (Vec<usize>, Vec<usize>) = group.into_iter().partition(|&p| p < m);
            let outs: Vec<usize> = outs.into_iter().map(|p| p - m).collect();
            let g = self.genus();
            comps.push(Component2::new(&ins, &outs, g));
        }
        self.closed_surfaces(&mut comps);
        build2(m, n, &comps)
    }

    pub fn any_cobordism2(&mut self) -> Cobordism2 {
        let (m, n) = (self.size(), self.size());
        self.cobordism2(m, n)
    }

    /// A cofibration out of `m` circles: every component has at most one
    /// outgoing circle, and none has only outgoing circles.
    pub fn cofibration2(&mut self, m: usize) -> Cobordism2 {
        let k = self.group_count(m);
        let groups = self.groups(m, k);
        let with_out: Vec<bool> = groups.iter().map(|_| self.coin()).collect();
        let n = with_out.iter().filter(|&&b| b).count();
        let slots = self.permuted(n);
        let mut next = 0;
        let mut comps = Vec::new();
        for (group, out) in groups.into_iter().zip(with_out) {
            let outs = if out {
                next += 1;
                vec![slots[next - 1]]
            } else {
                vec![]
            };
            let g = self.genus();
            comps.push(Component2::new(&group, &outs, g));
        }
        self.closed_surfaces(&mut comps);
        build2(m, n, &comps)
    }

    /// A cofibration into `n` circles, from at least `n` circles.
    pub fn cofibration2_onto(&mut self, n: usize) -> Cobordism2 {
        let x = self.rng.random_range(n..=n.max(self.params.max_circles));
        let surplus = x - n;
        let caps = if surplus == 0 {
            0
        } else {
            let least = usize::from(n == 0);
            self.rng.random_range(least..=surplus.min(self.params.max_components).max(least))
        };
        let inputs = self.permuted(x);
        let mut groups: Vec<Vec<usize>> = (0..n + caps).map(|_| Vec::new()).collect();
        for (pos, &i) in inputs.iter().enumerate() {
            let g = if pos < n + caps { pos } else { self.rng.random_range(0..n + caps) };
            groups[g].push(i);
        }
        let mut comps = Vec::new();
        for (g, mut ins) in groups.into_iter().enumerate() {
            ins.sort_unstable();
            let outs: Vec<usize> = if g < n { vec![g] } else { vec![] };
            let genus = self.genus();
            comps.push(Component2::new(&ins, &outs, genus));
        }
        self.closed_surfaces(&mut comps);
        build2(x, n, &comps)
    }

    /// A fibration into `n` circles: genus-zero splittings and creations.
    pub fn fibration2(&mut self, n: usize) -> Cobordism2 {
        let k = self.group_count(n);
        let groups = self.groups(n, k);
        let with_in: Vec<bool> = groups.iter().map(|_| self.coin()).collect();
        let m = with_in.iter().filter(|&&b| b).count();
        let slots = self.permuted(m);
        let mut next = 0;
        let mut comps = Vec::new();
        for (group, inp) in groups.into_iter().zip(with_in) {
            if inp {
                next += 1;
                comps.push(Component2::new(&[slots[next - 1]], &group, 0));
            } else {
                let g = self.genus();
                comps.push(Component2::new(&[], &group, g));
            }
        }
        build2(m, n, &comps)
    }

    /// A fibration out of `m` circles, into at least `m` circles.
    pub fn fibration2_from(&mut self, m: usize) -> Cobordism2 {
        let y = self.rng.random_range(m..=m.max(self.params.max_circles));
        let surplus = y - m;
        let creations = if surplus == 0 {
            0
        } else {
            let least = usize::from(m == 0);
            self.rng.random_range(least..=surplus.min(self.params.max_components).max(least))
        };
        let outputs = self.permuted(y);
        let mut groups: Vec<Vec<usize>> = (0..m + creations).map(|_| Vec::new()).collect();
        if m + creations > 0 {
            for (pos, &o) in outputs.iter().enumerate() {
                let g = if pos < m + creations { pos } else { self.rng.random_range(0..m + creations) };
                groups[g].push(o);
            }
        }
        let mut comps = Vec::new();
        for (g, mut outs) in groups.into_iter().enumerate() {
            outs.sort_unstable();
            if g < m {
                comps.push(Component2::new(&[g], &outs, 0));
            } else {
                let genus = self.genus();
                comps.push(Component2::new(&[], &outs, genus));
            }
        }
        build2(m, y, &comps)
    }

    /// A planted square; identities on the empty boundary when
    /// `max_circles` is zero.
    pub fn square2(&mut self) -> Square2 {
        if self.params.max_circles == 0 {
            let id = Cobordism2::identity(0);
            return Square { e: id.clone(), m: id.clone(), u: id.clone(), v: id.clone(), w: id };
        }
        let (y, x) = (self.size(), self.size());
        let w = self.cobordism2(y, x);
        let e = self.cofibration2_onto(y);
        let m = self.fibration2_from(x);
        let u = e.then(&w).expect("planted square composes");
        let v = w.then(&m).expect("planted square composes");
        Square { e, m, u, v, w }
    }

    pub fn signed_set(&mut self, len: usize) -> SignedSet {
        SignedSet::new((0..len).map(|_| if self.coin() { Sign::Plus } else { Sign::Minus }).collect())
    }

    /// A random target admitting a cobordism out of `m`.
    pub fn signed_target_for(&mut self, m: &SignedSet) -> SignedSet {
        let diff = m.count(Sign::Plus) as i64 - m.count(Sign::Minus) as i64;
        let (plus, minus) = self.balanced_counts(diff);
        self.arrange(plus, minus)
    }

    /// A random source admitting a cobordism into `n`.
    pub fn signed_source_for(&mut self, n: &SignedSet) -> SignedSet {
        let diff = n.count(Sign::Plus) as i64 - n.count(Sign::Minus) as i64;
        let (plus, minus) = self.balanced_counts(diff);
        self.arrange(plus, minus)
    }

    /// Counts with `plus - minus = diff` and total at most `max_circles`
    /// when possible.
    fn balanced_counts(&mut self, diff: i64) -> (usize, usize) {
        let least = diff.unsigned_abs() as usize;
        let most = self.params.max_circles.max(least);
        let steps = (most - least) / 2;
        let len = least + 2 * self.rng.random_range(0..=steps);
        let plus = ((len as i64 + diff) / 2) as usize;
        (plus, len - plus)
    }

    fn arrange(&mut self, plus: usize, minus: usize) -> SignedSet {
        let mut signs: Vec<Sign> =
            std::iter::repeat_n(Sign::Plus, plus).chain(std::iter::repeat_n(Sign::Minus, minus)).collect();
        signs.shuffle(&mut self.rng);
        SignedSet::new(signs)
    }

    /// A boundary pair admitting a cobordism.
    pub fn signed_pair(&mut self) -> (SignedSet, SignedSet) {
        let len = self.size();
        let m = self.signed_set(len);
        let n = self.signed_target_for(&m);
        (m, n)
    }

    fn loops(&mut self) -> usize {
        self.extra(0)
    }

    pub fn cobordism1(&mut self, m: &SignedSet, n: &SignedSet) -> Result<Cobordism1> {
        let sources = m.count(Sign::Plus) + n.count(Sign::Minus);
        let sinks = m.count(Sign::Minus) + n.count(Sign::Plus);
        if sources != sinks {
            return Err(Error::InfeasibleSignProfile(format!("{m} -> {n} has {sources} sources but {sinks} sinks")));
        }
        let tab = self.permuted(sources);
        let view = MatchingView { bijection: FinMap::new(tab, sinks)?, loops: self.loops() };
        from_matching(&view, m, n)
    }

    pub fn any_cobordism1(&mut self) -> Cobordism1 {
        let (m, n) = self.signed_pair();
        self.cobordism1(&m, &n).expect("balanced profile")
    }

    /// Cap and strand groups over `s`: pairs of opposite-sign points plus
    /// the remaining singletons, in shuffled order.
    fn caps_and_strands(&mut self, s: &SignedSet) -> (Vec<(usize, usize)>, Vec<usize>) {
        let mut plus: Vec<usize> = (0..s.len()).filter(|&i| s.sign(i) == Sign::Plus).collect();
        let mut minus: Vec<usize> = (0..s.len()).filter(|&i| s.sign(i) == Sign::Minus).collect();
        plus.shuffle(&mut self.rng);
        minus.shuffle(&mut self.rng);
        let caps = self.rng.random_range(0..=plus.len().min(minus.len()));
        let pairs = plus.iter().zip(&minus).take(caps).map(|(&a, &b)| (a.min(b), a.max(b))).collect();
        let mut strands: Vec<usize> = plus[caps..].iter().chain(&minus[caps..]).copied().collect();
        strands.shuffle(&mut self.rng);
        (pairs, strands)
    }

    /// A cofibration (no cups) out of `m`.
    pub fn cofibration1(&mut self, m: &SignedSet) -> Cobordism1 {
        let (caps, strands) = self.caps_and_strands(m);
        let n = SignedSet::new(strands.iter().map(|&i| m.sign(i)).collect());
        let mut comps: Vec<Component1> = caps.iter().map(|&(a, b)| Component1::new(&[a, b], &[])).collect();
        comps.extend(strands.iter().enumerate().map(|(j, &i)| Component1::new(&[i], &[j])));
        let loops = self.loops();
        Cobordism1::from_components(m.clone(), n, &comps, loops).expect("cofibration is valid")
    }

    /// A fibration (no caps, no loops) into `n`.
    pub fn fibration1(&mut self, n: &SignedSet) -> Cobordism1 {
        let (cups, strands) = self.caps_and_strands(n);
        let m = SignedSet::new(strands.iter().map(|&j| n.sign(j)).collect());
        let mut comps: Vec<Component1> = cups.iter().map(|&(a, b)| Component1::new(&[], &[a, b])).collect();
        comps.extend(strands.iter().enumerate().map(|(i, &j)| Component1::new(&[i], &[j])));
        Cobordism1::from_components(m, n.clone(), &comps, 0).expect("fibration is valid")
    }

    /// A cofibration into `n`: strands onto `n` plus extra caps.
    pub fn cofibration1_onto(&mut self, n: &SignedSet) -> Cobordism1 {
        let (source, comps) = self.strands_with_pairs(n);
        let loops = self.loops();
        Cobordism1::from_components(source, n.clone(), &comps, loops).expect("cofibration is valid")
    }

    /// A fibration out of `m`: strands from `m` plus extra cups.
    pub fn fibration1_from(&mut self, m: &SignedSet) -> Cobordism1 {
        let (target, comps) = self.strands_with_pairs(m);
        let comps: Vec<Component1> =
            comps.into_iter().map(|c| Component1 { inputs: c.outputs, outputs: c.inputs }).collect();
        Cobordism1::from_components(m.clone(), target, &comps, 0).expect("fibration is valid")
    }

    /// A shuffled copy `s'` of `s` plus some `(+,-)` pairs, listed as
    /// components with the `s'` side in `inputs` and the `s` side in
    /// `outputs`.
    fn strands_with_pairs(&mut self, s: &SignedSet) -> (SignedSet, Vec<Component1>) {
        let room = self.params.max_circles.saturating_sub(s.len()) / 2;
        let pairs = self.rng.random_range(0..=room);
        let len = s.len() + 2 * pairs;
        let slots = self.permuted(len);
        let mut signs = vec![Sign::Plus; len];
        let mut comps = Vec::new();
        for j in 0..s.len() {
            signs[slots[j]] = s.sign(j);
            comps.push(Component1::new(&[slots[j]], &[j]));
        }
        for p in 0..pairs {
            let (a, b) = (slots[s.len() + 2 * p], slots[s.len() + 2 * p + 1]);
            signs[b] = Sign::Minus;
            comps.push(Component1::new(&[a.min(b), a.max(b)], &[]));
        }
        (SignedSet::new(signs), comps)
    }

    pub fn square1(&mut self) -> Square1 {
        if self.params.max_circles == 0 {
            let id = Cobordism1::identity(&SignedSet::empty());
            return Square { e: id.clone(), m: id.clone(), u: id.clone(), v: id.clone(), w: id };
        }
        let (y, x) = self.signed_pair();
        let w = self.cobordism1(&y, &x).expect("balanced profile");
        let e = self.cofibration1_onto(&y);
        let m = self.fibration1_from(&x);
        let u = e.then(&w).expect("planted square composes");
        let v = w.then(&m).expect("planted square composes");
        Square { e, m, u, v, w }
    }
}

fn build2(m: usize, n: usize, comps: &[Component2]) -> Cobordism2 {
    Cobordism2::from_components(m, n, comps).expect("generated cobordism is valid")
}

pub fn gen_cobordism2(m: usize, n: usize, p: &GenParams) -> Cobordism2 {
    Generator::new(p.clone()).cobordism2(m, n)
}

pub fn gen_cofibration2(m: usize, p: &GenParams) -> Cobordism2 {
    Generator::new(p.clone()).cofibration2(m)
}

pub fn gen_fibration2(n: usize, p: &GenParams) -> Cobordism2 {
    Generator::new(p.clone()).fibration2(n)
}

pub fn gen_square2(p: &GenParams) -> Square2 {
    Generator::new(p.clone()).square2()
}

pub fn gen_cobordism1(m: &SignedSet, n: &SignedSet, p: &GenParams) -> Result<Cobordism1> {
    Generator::new(p.clone()).cobordism1(m, n)
}

pub fn gen_square1(p: &GenParams) -> Square1 {
    Generator::new(p.clone()).square1()
}
