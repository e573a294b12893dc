//! Arity-wise tensor products of operads.

use crate::exact::scalar::sign_q;
use crate::exact::{Lin, Perm};

use super::Operad;

/// `A ⊗_H B` with `(a₁⊗b₁)∘_i(a₂⊗b₂) = (−1)^{|b₁||a₂|}(a₁∘_ia₂)⊗(b₁∘_ib₂)`.
#[derive(Clone, Debug)]
pub struct Hadamard<A, B> {
    pub a: A,
    pub b: B,
}

impl<A: Operad, B: Operad> Hadamard<A, B> {
    pub fn new(a: A, b: B) -> Self {
        Hadamard { a, b }
    }

    pub fn pair(x: &Lin<A::E>, y: &Lin<B::E>) -> Lin<(A::E, B::E)> {
        x.tensor(y)
    }
}

impl<A: Operad, B: Operad> Operad for Hadamard<A, B> {
    type E = (A::E, B::E);
    fn name(&self) -> String {
        format!("{}⊗{}", self.a.name(), self.b.name())
    }
    fn symmetric(&self) -> bool {
        self.a.symmetric() && self.b.symmetric()
    }
    fn arity(&self, e: &Self::E) -> usize {
        self.a.arity(&e.0)
    }
    fn degree(&self, e: &Self::E) -> i64 {
        self.a.degree(&e.0) + self.b.degree(&e.1)
    }
    fn unit(&self) -> Lin<Self::E> {
        self.a.unit().tensor(&self.b.unit())
    }
    fn compose(&self, x: &Self::E, i: usize, y: &Self::E) -> Lin<Self::E> {
        let s = sign_q(self.b.degree(&x.1) * self.a.degree(&y.0));
        let l = self.a.compose(&x.0, i, &y.0);
        if l.is_zero() {
            return Lin::zero();
        }
        l.tensor(&self.b.compose(&x.1, i, &y.1)).scaled(&s)
    }
    fn act(&self, x: &Self::E, s: &Perm) -> Lin<Self::E> {
        self.a.act(&x.0, s).tensor(&self.b.act(&x.1, s))
    }
    fn diff(&self, x: &Self::E) -> Lin<Self::E> {
        let mut out = self.a.diff(&x.0).tensor(&Lin::basis(x.1.clone()));
        let s = sign_q(self.a.degree(&x.0));
        out.add_scaled(&Lin::basis(x.0.clone()).tensor(&self.b.diff(&x.1)), &s);
        out
    }
    fn basis(&self, n: usize) -> Vec<Self::E> {
        let bb = self.b.basis(n);
        let mut out = Vec::new();
        for x in self.a.basis(n) {
            for y in &bb {
                out.push((x.clone(), y.clone()));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::scalar::q;
    use crate::operad::{check_axioms, check_morphism, Ass, Com, Susp};

    #[test]
    fn suspensions_axioms() {
        check_axioms(&Hadamard::new(Susp::s(), Com), 5).unwrap();
        check_axioms(&Hadamard::new(Susp::s(), Ass), 4).unwrap();
        check_axioms(&Hadamard::new(Susp::s(), Susp::s_inv()), 5).unwrap();
    }

    #[test]
    fn com_is_hadamard_unit() {
        let h = Hadamard::new(Com, Ass);
        check_morphism(&h, &Ass, |(_, p)| Lin::basis(p.clone()), 4).unwrap();
        check_morphism(&Ass, &h, |p| Lin::basis((p.len_hint(), p.clone())), 4).unwrap();
    }

    #[test]
    fn s_tensor_s_inv_is_trivial() {
        let h = Hadamard::new(Susp::s(), Susp::s_inv());
        for n in 1..=6 {
            assert_eq!(h.degree(&(n, n)), 0);
            for p in crate::exact::all_perms(n.min(4)) {
                let p = if n > 4 { p.block_sum(&Perm::identity(n - 4)) } else { p };
                assert_eq!(h.act(&(n, n), &p), Lin::term((n, n), q(1)));
            }
        }
        // the naive identification needs the twist (−1)^{(n−1)(n−2)/2}
        assert!(check_morphism(&h, &Com, |(n, _)| Lin::basis(*n), 3).is_err());
        let c = |n: usize| crate::exact::sign_q(((n - 1) * (n.max(2) - 2) / 2) as i64);
        check_morphism(&h, &Com, |(n, _)| Lin::term(*n, c(*n)), 5).unwrap();
    }

    trait LenHint {
        fn len_hint(&self) -> usize;
    }
    impl LenHint for Perm {
        fn len_hint(&self) -> usize {
            self.n()
        }
    }
}
