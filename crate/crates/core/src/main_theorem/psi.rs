//! `Ψ_n = Σ_i p_i ⊗ q_i^∨ ∈ P(n) ⊗ Q(n)^∨` and the two identities that make
//! such a family the same thing as a morphism of dg operads.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::Rng;
use rayon::prelude::*;

use crate::exact::scalar::sign_q;
use crate::exact::shift::pairing_sign;
use crate::exact::{enumerate_shuffles, Lin, Perm, Q};
use crate::operad::{act_lin, gamma, transpositions, Operad};

use super::OperadMorphism;

/// A composition pattern `(k; n_1,…,n_k; σ)` with `σ ∈ Sh(n_1,…,n_k)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct CompShape {
    pub k: usize,
    pub arities: Vec<usize>,
    pub sigma: Perm,
}

pub struct PsiElements<QO: Operad, P: Operad> {
    pub q: Arc<QO>,
    pub p: Arc<P>,
    pub cap: usize,
    /// `(p, q)` stands for `p ⊗ q^∨`.
    pub parts: BTreeMap<usize, Lin<(P::E, QO::E)>>,
}

impl<QO: Operad + 'static, P: Operad + 'static> Clone for PsiElements<QO, P> {
    fn clone(&self) -> Self {
        PsiElements { q: self.q.clone(), p: self.p.clone(), cap: self.cap, parts: self.parts.clone() }
    }
}

/// Ordered compositions of `n` into `k` positive parts.
fn compositions(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return if n == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in 1..=n.saturating_sub(k - 1) {
        for mut rest in compositions(n - first, k - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn tuples<T: Clone>(lists: &[Vec<T>]) -> Vec<Vec<T>> {
    let mut out = vec![vec![]];
    for l in lists {
        let mut next = Vec::with_capacity(out.len() * l.len());
        for t in &out {
            for x in l {
                let mut t = t.clone();
                t.push(x.clone());
                next.push(t);
            }
        }
        out = next;
    }
    out
}

impl<QO: Operad + 'static, P: Operad + 'static> PsiElements<QO, P> {
    /// `p_i(n) := Ψ(q_i(n))` on the basis of `Q(n)`, `1 ≤ n ≤ cap`.
    pub fn from_morphism(psi: &OperadMorphism<QO, P>, cap: usize) -> Self {
        let mut parts = BTreeMap::new();
        for n in 1..=cap {
            let mut v = Lin::zero();
            for qb in psi.src.basis(n) {
                for (p, c) in &psi.apply(&qb) {
                    v.add_term((p.clone(), qb.clone()), c.clone());
                }
            }
            parts.insert(n, v);
        }
        PsiElements { q: psi.src.clone(), p: psi.tgt.clone(), cap, parts }
    }

    /// `Ψ(q) = Σ_i ⟨q_i^∨, q⟩ p_i`.
    pub fn reconstruct(&self, x: &QO::E) -> Lin<P::E> {
        let n = self.q.arity(x);
        let mut out = Lin::zero();
        if let Some(v) = self.parts.get(&n) {
            for ((p, qb), c) in v {
                if qb == x {
                    out.add_term(p.clone(), c.clone());
                }
            }
        }
        out
    }

    fn columns(&self) -> BTreeMap<QO::E, Lin<P::E>> {
        let mut cols: BTreeMap<QO::E, Lin<P::E>> = BTreeMap::new();
        for v in self.parts.values() {
            for ((p, qb), c) in v {
                cols.entry(qb.clone()).or_default().add_term(p.clone(), c.clone());
            }
        }
        cols
    }

    /// The reconstructed map as an operad morphism.
    pub fn to_morphism(&self, name: &str) -> OperadMorphism<QO, P> {
        let cols = self.columns();
        OperadMorphism::new(name, self.q.clone(), self.p.clone(), move |x| cols.get(x).cloned().unwrap_or_default())
    }

    /// Arities where `Ψ_n` is not invariant under the diagonal action, the
    /// action on `Q(n)^∨` being `⟨(q^∨)^σ, x⟩ = ⟨q^∨, x^{σ⁻¹}⟩`.
    pub fn invariance_failures(&self) -> Vec<usize> {
        if !self.q.symmetric() {
            return vec![];
        }
        let mut bad = Vec::new();
        for (&n, v) in &self.parts {
            let qb = self.q.basis(n);
            let ok = transpositions(n).iter().all(|s| {
                let inv = s.inverse();
                let moved: Vec<(QO::E, Lin<QO::E>)> = qb.iter().map(|y| (y.clone(), self.q.act(y, &inv))).collect();
                let mut out = Lin::zero();
                for ((p, x), c) in v {
                    let ps = self.p.act(p, s);
                    for (y, ys) in &moved {
                        let k = ys.coeff(x);
                        if !k.is_zero() {
                            for (pp, cp) in &ps {
                                out.add_term((pp.clone(), y.clone()), c * cp * &k);
                            }
                        }
                    }
                }
                out == *v
            });
            if !ok {
                bad.push(n);
            }
        }
        bad
    }

    /// `d^∨(q^∨) = −(−1)^{|q^∨|} q^∨ ∘ d`.
    fn dual_diff(&self, x: &QO::E) -> Lin<QO::E> {
        let n = self.q.arity(x);
        let s = -sign_q(-self.q.degree(x));
        let mut out = Lin::zero();
        for y in self.q.basis(n) {
            let k = self.q.diff(&y).coeff(x);
            if !k.is_zero() {
                out.add_term(y, &s * k);
            }
        }
        out
    }

    /// Arities where `Σ d(p_i)⊗q_i^∨ + (−1)^{|p_i|} p_i⊗d^∨(q_i^∨) ≠ 0`.
    pub fn eq1_failures(&self) -> Vec<usize> {
        let mut bad = Vec::new();
        for (&n, v) in &self.parts {
            let mut out: Lin<(P::E, QO::E)> = Lin::zero();
            for ((p, x), c) in v {
                for (dp, k) in &self.p.diff(p) {
                    out.add_term((dp.clone(), x.clone()), c * k);
                }
                let s = sign_q(self.p.degree(p));
                for (dx, k) in &self.dual_diff(x) {
                    out.add_term((p.clone(), dx.clone()), c * k * &s);
                }
            }
            if !out.is_zero() {
                bad.push(n);
            }
        }
        bad
    }

    /// All composition patterns of total arity `n`.
    pub fn shapes(&self, n: usize) -> Vec<CompShape> {
        let mut out = Vec::new();
        for k in 1..=n {
            for ar in compositions(n, k) {
                if self.q.symmetric() {
                    for sh in enumerate_shuffles(&ar) {
                        out.push(CompShape { k, arities: ar.clone(), sigma: sh.perm });
                    }
                } else {
                    out.push(CompShape { k, arities: ar.clone(), sigma: Perm::identity(n) });
                }
            }
        }
        out
    }

    /// Both sides of the composition identity on one pattern, keyed by
    /// `(p, [q, q_1, …, q_k])` for `p ⊗ (q^∨ ⊗ (q_1^∨ ⊗ … ⊗ q_k^∨)^σ)`.
    #[allow(clippy::type_complexity)]
    pub fn eq2_sides(&self, shape: &CompShape) -> (Lin<(P::E, Vec<QO::E>)>, Lin<(P::E, Vec<QO::E>)>) {
        let n: usize = shape.arities.iter().sum();
        let cols = self.columns();
        let col = |x: &QO::E| cols.get(x).cloned().unwrap_or_default();
        let mut lists = vec![self.q.basis(shape.k)];
        for &m in &shape.arities {
            lists.push(self.q.basis(m));
        }
        let psi_n = self.parts.get(&n).cloned().unwrap_or_default();
        let mut lhs = Lin::zero();
        let mut rhs = Lin::zero();
        for t in tuples(&lists) {
            let degs: Vec<i64> = t.iter().map(|x| self.q.degree(x)).collect();
            let ddegs: Vec<i64> = degs.iter().map(|d| -d).collect();
            // Δ^{k,n₁,…,σ}(q^∨) has coefficient ⟨q^∨, γ(t)^σ⟩ / ⟨t^∨, t⟩ at t^∨
            let ps = crate::exact::q(pairing_sign(&ddegs, &degs));
            let ys: Vec<Lin<QO::E>> = t[1..].iter().map(|x| Lin::basis(x.clone())).collect();
            let g = act_lin(self.q.as_ref(), &gamma(self.q.as_ref(), &Lin::basis(t[0].clone()), &ys), &shape.sigma);
            for ((p, x), c) in &psi_n {
                let k = g.coeff(x);
                if !k.is_zero() {
                    lhs.add_term((p.clone(), t.clone()), c * k * &ps);
                }
            }
            // ε = |q|Σ|q_j| + Σ_{j<j'}|q_j||q_j'|
            let mut eps = 0;
            for a in 0..degs.len() {
                for b in a + 1..degs.len() {
                    eps += degs[a] * degs[b];
                }
            }
            let ps_imgs: Vec<Lin<P::E>> = t[1..].iter().map(&col).collect();
            let gp = act_lin(self.p.as_ref(), &gamma(self.p.as_ref(), &col(&t[0]), &ps_imgs), &shape.sigma);
            let s = sign_q(eps);
            for (p, c) in &gp {
                rhs.add_term((p.clone(), t.clone()), c * &s);
            }
        }
        (lhs, rhs)
    }

    /// Patterns of arity at most `cap` where the composition identity fails;
    /// with `first_only` the search stops at the first failure.
    pub fn eq2_failures(&self, first_only: bool) -> Vec<CompShape> {
        let mut bad = Vec::new();
        for n in 1..=self.cap {
            let shapes = self.shapes(n);
            let mut fails: Vec<CompShape> = shapes
                .par_iter()
                .filter(|s| {
                    let (l, r) = self.eq2_sides(s);
                    l != r
                })
                .cloned()
                .collect();
            fails.sort();
            bad.extend(fails);
            if first_only && !bad.is_empty() {
                bad.truncate(1);
                return bad;
            }
        }
        bad
    }

    pub fn is_valid(&self) -> bool {
        self.invariance_failures().is_empty() && self.eq1_failures().is_empty() && self.eq2_failures(true).is_empty()
    }

    /// Changes one coefficient of the matrix of some `Ψ_n`, `n ≥ 2`, by a
    /// nonzero rational; returns the arity and the changed entry.
    pub fn mutate<R: Rng>(&mut self, rng: &mut R) -> (usize, P::E, QO::E, Q) {
        loop {
            let n = rng.gen_range(2..=self.cap);
            let (Some(x), Some(p)) = (self.q.basis(n).choose(rng).cloned(), self.p.basis(n).choose(rng).cloned()) else {
                continue;
            };
            if self.p.degree(&p) != self.q.degree(&x) {
                continue;
            }
            let num: i64 = rng.gen_range(1..=9) * if rng.gen_bool(0.5) { 1 } else { -1 };
            let den: i64 = rng.gen_range(1..=4);
            let c = crate::exact::qr(num, den);
            self.parts.entry(n).or_default().add_term((p.clone(), x.clone()), c.clone());
            return (n, p, x, c);
        }
    }
}
