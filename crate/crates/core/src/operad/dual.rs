//! Cooperads through their infinitesimal decompositions, and the dual
//! cooperad of a finite operad.
//!
//! Convolution operads only ever need the transposes of the structure maps
//! (which `c` decompose into a given `a ⊗ b`), so each cooperad provides both.

use std::fmt::Debug;
use std::sync::Arc;

use crate::exact::scalar::sign_q;
use num_traits::Zero;

use crate::exact::{Lin, Perm};

use super::{transpositions, AxiomFailure, Operad};

pub trait Cooperad: Send + Sync {
    type E: Clone + Ord + Debug + Send + Sync;

    fn name(&self) -> String;
    fn symmetric(&self) -> bool {
        true
    }
    fn arity(&self, c: &Self::E) -> usize;
    fn degree(&self, c: &Self::E) -> i64;
    /// `Σ ε(c) c` over the arity-one basis.
    fn counit(&self) -> Lin<Self::E>;
    fn basis(&self, n: usize) -> Vec<Self::E>;
    /// `Δ_(i)` into arities `(arity(c) − n + 1, n)`.
    fn decompose(&self, c: &Self::E, i: usize, n: usize) -> Lin<(Self::E, Self::E)>;
    /// `Σ_c ⟨Δ_(i)(c), a ⊗ b⟩ c`.
    fn decompose_transpose(&self, a: &Self::E, i: usize, b: &Self::E) -> Lin<Self::E>;
    fn act(&self, c: &Self::E, s: &Perm) -> Lin<Self::E>;
    /// `Σ_{c'} ⟨c'^s, c⟩ c'`.
    fn act_transpose(&self, c: &Self::E, s: &Perm) -> Lin<Self::E>;
    fn diff(&self, _c: &Self::E) -> Lin<Self::E> {
        Lin::zero()
    }
    /// `Σ_{c'} ⟨d c', c⟩ c'`.
    fn diff_transpose(&self, _c: &Self::E) -> Lin<Self::E> {
        Lin::zero()
    }
}

/// `O^∨` for `O` finite in each arity; basis element `o` stands for `o^∨`.
/// `Δ_(i)(φ) = Σ (−1)^{|a||b|} φ(a ∘_i b) a^∨ ⊗ b^∨`.
#[derive(Clone, Debug)]
pub struct DualCooperad<O: Operad> {
    pub op: Arc<O>,
}

impl<O: Operad> DualCooperad<O> {
    pub fn new(op: Arc<O>) -> Self {
        DualCooperad { op }
    }
}

impl<O: Operad> Cooperad for DualCooperad<O> {
    type E = O::E;

    fn name(&self) -> String {
        format!("{}^∨", self.op.name())
    }
    fn symmetric(&self) -> bool {
        self.op.symmetric()
    }
    fn arity(&self, c: &O::E) -> usize {
        self.op.arity(c)
    }
    fn degree(&self, c: &O::E) -> i64 {
        -self.op.degree(c)
    }
    fn counit(&self) -> Lin<O::E> {
        self.op.unit()
    }
    fn basis(&self, n: usize) -> Vec<O::E> {
        self.op.basis(n)
    }
    fn decompose(&self, c: &O::E, i: usize, n: usize) -> Lin<(O::E, O::E)> {
        let m = self.op.arity(c) + 1 - n;
        let mut out = Lin::zero();
        for a in self.op.basis(m) {
            for b in self.op.basis(n) {
                let k = self.op.compose(&a, i, &b).coeff(c);
                if !k.is_zero() {
                    let s = sign_q(self.op.degree(&a) * self.op.degree(&b));
                    out.add_term((a.clone(), b), k * s);
                }
            }
        }
        out
    }
    fn decompose_transpose(&self, a: &O::E, i: usize, b: &O::E) -> Lin<O::E> {
        self.op.compose(a, i, b).scaled(&sign_q(self.op.degree(a) * self.op.degree(b)))
    }
    fn act(&self, c: &O::E, s: &Perm) -> Lin<O::E> {
        // (φ^σ)(x) = φ(x^{σ⁻¹})
        let si = s.inverse();
        let mut out = Lin::zero();
        for o in self.op.basis(self.op.arity(c)) {
            out.add_term(o.clone(), self.op.act(&o, &si).coeff(c));
        }
        out
    }
    fn act_transpose(&self, c: &O::E, s: &Perm) -> Lin<O::E> {
        self.op.act(c, &s.inverse())
    }
    fn diff(&self, c: &O::E) -> Lin<O::E> {
        // (dφ)(x) = −(−1)^{|φ|} φ(dx)
        let mut out = Lin::zero();
        let s = -sign_q(-self.op.degree(c));
        for o in self.op.basis(self.op.arity(c)) {
            out.add_term(o.clone(), self.op.diff(&o).coeff(c) * &s);
        }
        out
    }
    fn diff_transpose(&self, c: &O::E) -> Lin<O::E> {
        self.op.diff(c).scaled(&sign_q(self.op.degree(c)))
    }
}

/// Checks that the transposed maps agree with the direct ones on all basis
/// elements of arity at most `cap`.
pub fn check_transposes<C: Cooperad + ?Sized>(c: &C, cap: usize) -> Result<(), AxiomFailure> {
    let fail = |axiom: &'static str, detail: String| Err(AxiomFailure { axiom, detail });
    for n in 1..=cap {
        let b = c.basis(n);
        for x in &b {
            for s in transpositions(n) {
                let t = c.act_transpose(x, &s);
                for y in &b {
                    if c.act(y, &s).coeff(x) != t.coeff(y) {
                        return fail("action transpose", format!("{:?} {:?}", x, y));
                    }
                }
            }
            let dt = c.diff_transpose(x);
            for y in c.basis(n) {
                if c.diff(&y).coeff(x) != dt.coeff(&y) {
                    return fail("differential transpose", format!("{:?}", x));
                }
            }
            for k in 1..=n {
                let m = n + 1 - k;
                for i in 0..m {
                    let d = c.decompose(x, i, k);
                    for (ab, coeff) in &d {
                        if c.decompose_transpose(&ab.0, i, &ab.1).coeff(x) != *coeff {
                            return fail("decomposition transpose", format!("{:?} at {} into {:?}", x, i, ab));
                        }
                    }
                    for a in c.basis(m) {
                        for bb in c.basis(k) {
                            let t = c.decompose_transpose(&a, i, &bb);
                            if t.coeff(x) != d.coeff(&(a.clone(), bb.clone())) {
                                return fail("decomposition transpose", format!("{:?} from {:?},{:?}", x, a, bb));
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

/// The operad structure carried by the transposed maps: `C^∨` with the
/// decomposition's own signs. Axioms for it are coassociativity of `C`.
pub struct Transposed<C: Cooperad> {
    pub c: Arc<C>,
}

impl<C: Cooperad> Operad for Transposed<C> {
    type E = C::E;
    fn name(&self) -> String {
        format!("({})^t", self.c.name())
    }
    fn symmetric(&self) -> bool {
        self.c.symmetric()
    }
    fn arity(&self, e: &C::E) -> usize {
        self.c.arity(e)
    }
    fn degree(&self, e: &C::E) -> i64 {
        self.c.degree(e)
    }
    fn unit(&self) -> Lin<C::E> {
        self.c.counit()
    }
    fn compose(&self, a: &C::E, i: usize, b: &C::E) -> Lin<C::E> {
        self.c.decompose_transpose(a, i, b)
    }
    fn act(&self, a: &C::E, s: &Perm) -> Lin<C::E> {
        // right action on the dual side: transpose of σ⁻¹
        self.c.act_transpose(a, &s.inverse())
    }
    fn diff(&self, a: &C::E) -> Lin<C::E> {
        self.c.diff_transpose(a)
    }
    fn basis(&self, n: usize) -> Vec<C::E> {
        self.c.basis(n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::GradedSpace;
    use crate::operad::{check_axioms, Ass, EndOp, Hadamard, Susp};
    use std::collections::BTreeMap;

    #[test]
    fn dual_of_suspended_ass() {
        let d = DualCooperad::new(Arc::new(Hadamard::new(Susp::s(), Ass)));
        check_transposes(&d, 4).unwrap();
        check_axioms(&Transposed { c: Arc::new(d) }, 4).unwrap();
    }

    #[test]
    fn dual_of_dg_endomorphisms() {
        let mut dv = BTreeMap::new();
        dv.insert(0, Lin::basis(1));
        let v = GradedSpace::new("V", vec![("a1".into(), 1), ("a0".into(), 0)]).with_differential(dv).unwrap();
        let d = DualCooperad::new(Arc::new(EndOp::new(Arc::new(v))));
        check_transposes(&d, 3).unwrap();
        check_axioms(&Transposed { c: Arc::new(d) }, 3).unwrap();
    }
}
