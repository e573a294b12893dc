//! The convolution operad `hom(C, P)`.
//!
//! A basis element `(c, p)` is the map sending the basis element `c` to `p`
//! and every other basis element of `C` to zero. Composition decomposes by
//! `Δ_(i)` and composes in `P`:
//! `(f ∘_i g)(c) = Σ (−1)^{|g||c'|} f(c') ∘_i g(c'')`. Invariants are
//! identified with a subspace and passed to coinvariants by taking classes,
//! which on this basis means no averaging factor ever appears.

use std::sync::Arc;

use crate::exact::scalar::sign_q;
use num_traits::Zero;

use crate::exact::{Lin, Perm};

use super::dual::Cooperad;
use super::Operad;

pub struct Convolution<C: Cooperad, P: Operad> {
    pub c: Arc<C>,
    pub p: Arc<P>,
}

impl<C: Cooperad, P: Operad> Convolution<C, P> {
    pub fn new(c: Arc<C>, p: Arc<P>) -> Self {
        Convolution { c, p }
    }

    /// Evaluates a combination of basis maps on `x ∈ C`.
    pub fn apply(&self, f: &Lin<(C::E, P::E)>, x: &Lin<C::E>) -> Lin<P::E> {
        let mut out = Lin::zero();
        for ((c, p), k) in f {
            let v = x.coeff(c);
            if !v.is_zero() {
                out.add_term(p.clone(), k * v);
            }
        }
        out
    }

    /// The map `c ↦ g(c)` on the given basis elements.
    pub fn from_fn<F: Fn(&C::E) -> Lin<P::E>>(&self, cs: &[C::E], g: F) -> Lin<(C::E, P::E)> {
        let mut out = Lin::zero();
        for c in cs {
            for (p, k) in &g(c) {
                out.add_term((c.clone(), p.clone()), k.clone());
            }
        }
        out
    }
}

impl<C: Cooperad, P: Operad> Operad for Convolution<C, P> {
    type E = (C::E, P::E);

    fn name(&self) -> String {
        format!("hom({}, {})", self.c.name(), self.p.name())
    }
    fn symmetric(&self) -> bool {
        self.p.symmetric()
    }
    fn arity(&self, e: &Self::E) -> usize {
        self.c.arity(&e.0)
    }
    fn degree(&self, e: &Self::E) -> i64 {
        self.p.degree(&e.1) - self.c.degree(&e.0)
    }
    fn unit(&self) -> Lin<Self::E> {
        self.c.counit().tensor(&self.p.unit())
    }
    fn compose(&self, a: &Self::E, i: usize, b: &Self::E) -> Lin<Self::E> {
        let cs = self.c.decompose_transpose(&a.0, i, &b.0);
        if cs.is_zero() {
            return Lin::zero();
        }
        let s = sign_q(self.degree(b) * self.c.degree(&a.0));
        let ps = self.p.compose(&a.1, i, &b.1);
        cs.tensor(&ps).scaled(&s)
    }
    fn act(&self, a: &Self::E, s: &Perm) -> Lin<Self::E> {
        // (f^σ)(c) = f(c^{σ⁻¹})^σ
        let cs = self.c.act_transpose(&a.0, &s.inverse());
        cs.tensor(&self.p.act(&a.1, s))
    }
    fn diff(&self, a: &Self::E) -> Lin<Self::E> {
        // ∂f = d_P f − (−1)^{|f|} f d_C
        let mut out = Lin::basis(a.0.clone()).tensor(&self.p.diff(&a.1));
        let pre = self.c.diff_transpose(&a.0).tensor(&Lin::basis(a.1.clone()));
        out.add_scaled(&pre, &-sign_q(self.degree(a)));
        out
    }
    fn basis(&self, n: usize) -> Vec<Self::E> {
        let pb = self.p.basis(n);
        let mut out = Vec::new();
        for c in self.c.basis(n) {
            for p in &pb {
                out.push((c.clone(), p.clone()));
            }
        }
        out
    }
}
