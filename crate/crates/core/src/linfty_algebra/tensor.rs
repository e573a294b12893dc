//! `A ⊗^Ψ C` and `f ⊗^Ψ g` written directly on the suspensions, for strict
//! `A` over `Com`, `Ass` or `As` and the identity morphism `Ψ`.
//!
//! Through `s(a⊗c) ↦ (−1)^{|a|} a⊗sc` and the Koszul rule, an operation
//! `φ` of degree `|φ|` on `sC` becomes
//! `s(a₁⊗c₁)…s(a_n⊗c_n) ↦ (−1)^{Σ_{i<j}|sc_i||a_j| + |φ|Σ|a_i|} s(μ_n(a)⊗φ(sc))`,
//! symmetrized over `S_n` when `A` is associative and the result is `L∞`.

use std::sync::Arc;

use crate::exact::perm::koszul_exponent;
use crate::exact::scalar::sign_q;
use crate::exact::{all_perms, GradedSpace, Lin};

use super::algebra::Table;
use super::cofree::Kind;
use super::homotopy::HomotopyAlgebra;
use super::morphism::InfinityMorphism;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Flavor {
    Com,
    Ass,
    AsNs,
}

impl Flavor {
    /// The kind of `A ⊗ C`.
    pub fn result(self) -> Kind {
        match self {
            Flavor::AsNs => Kind::Ass,
            _ => Kind::Lie,
        }
    }

    /// The kind of `C`.
    pub fn coefficients(self) -> Kind {
        match self {
            Flavor::Com => Kind::Lie,
            _ => Kind::Ass,
        }
    }
}

/// A strict algebra with a degree 0 product, no differential assumed.
#[derive(Clone, Debug)]
pub struct Strict {
    pub flavor: Flavor,
    pub v: Arc<GradedSpace>,
    pub product: Table,
}

impl Strict {
    pub fn new(flavor: Flavor, v: Arc<GradedSpace>, product: Table) -> Self {
        Strict { flavor, v, product }
    }

    /// `μ_n(a₁,…,a_n)`, bracketed to the left.
    pub fn mu(&self, ins: &[usize]) -> Lin<usize> {
        let mut acc = Lin::basis(ins[0]);
        for &x in &ins[1..] {
            let mut next = Lin::zero();
            for (a, c) in &acc {
                if let Some(v) = self.product.get(&vec![*a, x]) {
                    next.add_scaled(v, c);
                }
            }
            acc = next;
        }
        acc
    }
}

/// The non-symmetrized transfer of `φ` along `A`.
fn along(a: &Strict, c: &GradedSpace, dout: usize, phi: &dyn Fn(&[usize]) -> Lin<usize>, dphi: i64, w: &[usize]) -> Lin<usize> {
    let dc = c.dim();
    let ai: Vec<usize> = w.iter().map(|x| x / dc).collect();
    let ci: Vec<usize> = w.iter().map(|x| x % dc).collect();
    let mut e = 0i64;
    let mut sa = 0i64;
    for j in 0..w.len() {
        let dj = a.v.degree(ai[j]);
        sa += dj;
        for &c_i in &ci[..j] {
            e += (c.degree(c_i) + 1) * dj;
        }
    }
    e += dphi * sa;
    let m = a.mu(&ai);
    if m.is_zero() {
        return m;
    }
    let p = phi(&ci);
    let mut out = Lin::zero();
    for (x, k) in &m {
        for (y, l) in &p {
            out.add_term(x * dout + y, k * l);
        }
    }
    out.scaled(&sign_q(e))
}

/// The family `φ` of degree `dphi` on `sC`, moved to `s(A⊗C)`.
pub fn transport(a: &Strict, c: &GradedSpace, dout: usize, phi: &dyn Fn(&[usize]) -> Lin<usize>, dphi: i64, w: &[usize]) -> Lin<usize> {
    if a.flavor != Flavor::Ass || w.len() == 1 {
        return along(a, c, dout, phi, dphi, w);
    }
    let dc = c.dim();
    let degs: Vec<i64> = w.iter().map(|x| a.v.degree(x / dc) + c.degree(x % dc) + 1).collect();
    let mut out = Lin::zero();
    for s in all_perms(w.len()) {
        let u = s.act_on(w);
        out.add_scaled(&along(a, c, dout, phi, dphi, &u), &sign_q(koszul_exponent(&s, &degs)));
    }
    out
}

/// `A ⊗^Ψ C` for `Ψ` the identity of `Com`, `Ass` or `As`.
pub fn tensor_algebra(a: &Strict, c: &HomotopyAlgebra) -> HomotopyAlgebra {
    assert_eq!(c.kind, a.flavor.coefficients());
    let v = Arc::new(GradedSpace::tensor(&a.v, &c.v));
    let q = |u: &[usize]| c.q(u);
    HomotopyAlgebra::from_shifted(a.flavor.result(), v, c.cap, |w| transport(a, &c.v, c.dim(), &q, -1, w))
}

/// `f ⊗^Ψ g` for a strict map `f : A → A'` (given on basis vectors) and an
/// ∞-morphism `g : C → C'`.
pub fn tensor_morphism<F>(a: &Strict, a2: &Strict, f: F, g: &InfinityMorphism) -> InfinityMorphism
where
    F: Fn(usize) -> Lin<usize> + Sync,
{
    assert_eq!(g.kind, a.flavor.coefficients());
    let src = Arc::new(GradedSpace::tensor(&a.v, &g.src));
    let tgt = Arc::new(GradedSpace::tensor(&a2.v, &g.tgt));
    let dc2 = g.tgt.dim();
    let comp = |u: &[usize]| g.comp(u);
    InfinityMorphism::from_fn(a.flavor.result(), src, tgt, g.cap, |w| {
        let t = transport(a, &g.src, dc2, &comp, 0, w);
        let mut out = Lin::zero();
        for (x, k) in &t {
            let (ai, ci) = (x / dc2, x % dc2);
            for (b, l) in &f(ai) {
                out.add_term(b * dc2 + ci, k * l);
            }
        }
        out
    })
}
