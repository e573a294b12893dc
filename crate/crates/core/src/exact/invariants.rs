//! Invariants and coinvariants of finite group actions in characteristic zero.
//!
//! `V^G → V_G` sends `v` to `(1/|G|)[v]`; the inverse sends `[v]` to the sum of
//! the elements of the orbit of `v`. Classes are represented by their normal
//! form modulo `span{v − v·g}`.

use std::collections::BTreeMap;

use super::lin::Lin;
use super::linalg::Echelon;
use super::perm::Perm;
use super::scalar::Q;

/// A right action of a finite group given by one matrix per group element.
#[derive(Clone, Debug)]
pub struct Representation {
    pub dim: usize,
    pub elements: Vec<Perm>,
    pub matrices: Vec<BTreeMap<usize, Lin<usize>>>,
}

impl Representation {
    pub fn new<F: Fn(&Perm, usize) -> Lin<usize>>(dim: usize, elements: Vec<Perm>, act: F) -> Self {
        let matrices = elements.iter().map(|g| (0..dim).map(|i| (i, act(g, i))).collect()).collect();
        Representation { dim, elements, matrices }
    }

    pub fn act(&self, g: usize, v: &Lin<usize>) -> Lin<usize> {
        v.map(|i| self.matrices[g].get(i).cloned().unwrap_or_default())
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    fn relations(&self) -> Echelon<usize> {
        let mut e = Echelon::new();
        for g in 0..self.order() {
            for i in 0..self.dim {
                let mut r = Lin::basis(i);
                r -= &self.act(g, &Lin::basis(i));
                e.insert(&r);
            }
        }
        e
    }

    /// Canonical representative of the coinvariant class of `v`.
    pub fn class(&self, v: &Lin<usize>) -> Lin<usize> {
        self.relations().reduce(v)
    }

    pub fn orbit_sum(&self, v: &Lin<usize>) -> Lin<usize> {
        let mut out = Lin::zero();
        for g in 0..self.order() {
            out += self.act(g, v);
        }
        out
    }

    pub fn is_invariant(&self, v: &Lin<usize>) -> bool {
        (0..self.order()).all(|g| self.act(g, v) == *v)
    }

    pub fn invariants_to_coinvariants(&self, v: &Lin<usize>) -> Lin<usize> {
        let c = Q::from_integer((self.order() as i64).into());
        self.class(v).scaled(&(Q::from_integer(1.into()) / c))
    }

    pub fn coinvariants_to_invariants(&self, class: &Lin<usize>) -> Lin<usize> {
        self.orbit_sum(class)
    }

    pub fn coinvariant_dim(&self) -> usize {
        self.dim - self.relations().rank()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::perm::all_perms;
    use crate::exact::scalar::{q, qr};

    fn regular_s2() -> Representation {
        // basis e = m_id, e·(12) = m_(12)
        Representation::new(2, all_perms(2), |g, i| Lin::basis(if g.is_identity() { i } else { 1 - i }))
    }

    #[test]
    fn regular_rep_orbit_sum() {
        let r = regular_s2();
        let e = Lin::basis(0);
        let inv = r.coinvariants_to_invariants(&r.class(&e));
        assert_eq!(inv, [(0, q(1)), (1, q(1))].into_iter().collect());
        let back = r.invariants_to_coinvariants(&inv);
        assert_eq!(back, r.class(&e));
        assert_eq!(r.class(&Lin::basis(1)), r.class(&e));
        assert_eq!(r.class(&inv), r.class(&e).scaled(&q(2)));
        let _ = qr(1, 2);
    }

    #[test]
    fn trivial_action_round_trip() {
        let r = Representation::new(1, all_perms(3), |_, i| Lin::basis(i));
        let v = Lin::basis(0);
        let c = r.invariants_to_coinvariants(&v);
        assert_eq!(c, v.scaled(&qr(1, 6)));
        assert_eq!(r.coinvariants_to_invariants(&c), v);
    }

    #[test]
    fn sign_rep_has_no_coinvariants_for_n2() {
        let r = Representation::new(1, all_perms(2), |g, i| Lin::term(i, q(g.sign())));
        assert_eq!(r.coinvariant_dim(), 0);
    }
}
