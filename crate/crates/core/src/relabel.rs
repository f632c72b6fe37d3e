//! Backtracking search for boundary permutations relating two cobordisms.
//!
//! Incoming points are assigned first, then outgoing ones. Each choice must
//! keep the boundary labels equal (signs, for oriented cobordisms) and must
//! extend the partial component bijection consistently, pairing only
//! components with equal signatures. Components bounded by nothing are left
//! for the caller to pair.

use crate::finset::FinMap;

pub(crate) struct Side<'a, S> {
    pub l_in: &'a FinMap,
    pub l_out: &'a FinMap,
    pub in_labels: &'a [u8],
    pub out_labels: &'a [u8],
    pub signatures: &'a [S],
}

pub(crate) struct Found {
    pub phi: Vec<usize>,
    pub psi: Vec<usize>,
    /// `usize::MAX` on components not reached from the boundary.
    pub chi: Vec<usize>,
}

pub(crate) fn search<S: PartialEq>(a: &Side<'_, S>, b: &Side<'_, S>) -> Option<Found> {
    if a.l_in.dom() != b.l_in.dom() || a.l_out.dom() != b.l_out.dom() || a.signatures.len() != b.signatures.len() {
        return None;
    }
    let count = a.signatures.len();
    let mut s = Search {
        a,
        b,
        phi: Vec::with_capacity(a.l_in.dom()),
        psi: Vec::with_capacity(a.l_out.dom()),
        used_in: vec![false; a.l_in.dom()],
        used_out: vec![false; a.l_out.dom()],
        chi: vec![usize::MAX; count],
        chi_inv: vec![usize::MAX; count],
    };
    s.run().then_some(Found { phi: s.phi, psi: s.psi, chi: s.chi })
}

struct Search<'a, 'b, S> {
    a: &'b Side<'a, S>,
    b: &'b Side<'a, S>,
    phi: Vec<usize>,
    psi: Vec<usize>,
    used_in: Vec<bool>,
    used_out: Vec<bool>,
    chi: Vec<usize>,
    chi_inv: Vec<usize>,
}

impl<S: PartialEq> Search<'_, '_, S> {
    fn run(&mut self) -> bool {
        let incoming = self.phi.len() < self.a.l_in.dom();
        if !incoming && self.psi.len() == self.a.l_out.dom() {
            return true;
        }
        let (map_a, map_b, labels_a, labels_b, x) = if incoming {
            (self.a.l_in, self.b.l_in, self.a.in_labels, self.b.in_labels, self.phi.len())
        } else {
            (self.a.l_out, self.b.l_out, self.a.out_labels, self.b.out_labels, self.psi.len())
        };
        let source = map_a.apply(x);
        for (y, label) in labels_b.iter().enumerate() {
            let used = if incoming { self.used_in[y] } else { self.used_out[y] };
            if used || labels_a[x] != *label {
                continue;
            }
            let target = map_b.apply(y);
            let fresh = self.chi[source] == usize::MAX;
            if fresh {
                if self.chi_inv[target] != usize::MAX || self.a.signatures[source] != self.b.signatures[target] {
                    continue;
                }
                self.chi[source] = target;
                self.chi_inv[target] = source;
            } else if self.chi[source] != target {
                continue;
            }
            self.push(incoming, y);
            if self.run() {
                return true;
            }
            self.pop(incoming, y);
            if fresh {
                self.chi[source] = usize::MAX;
                self.chi_inv[target] = usize::MAX;
            }
        }
        false
    }

    fn push(&mut self, incoming: bool, y: usize) {
        if incoming {
            self.used_in[y] = true;
            self.phi.push(y);
        } else {
            self.used_out[y] = true;
            self.psi.push(y);
        }
    }

    fn pop(&mut self, incoming: bool, y: usize) {
        if incoming {
            self.used_in[y] = false;
            self.phi.pop();
        } else {
            self.used_out[y] = false;
            self.psi.pop();
        }
    }
}
