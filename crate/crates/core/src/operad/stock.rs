//! Operads with closed-form structure constants.

use std::sync::Arc;

use crate::exact::perm::{all_perms, koszul_exponent, Perm};
use crate::exact::scalar::{q, sign_q};
use crate::exact::{GradedSpace, Lin};

use super::Operad;

/// `Com`: one operation `μ_n` in each arity, trivial action.
#[derive(Clone, Debug, Default)]
pub struct Com;

impl Operad for Com {
    type E = usize;
    fn name(&self) -> String {
        "Com".into()
    }
    fn arity(&self, e: &usize) -> usize {
        *e
    }
    fn degree(&self, _: &usize) -> i64 {
        0
    }
    fn unit(&self) -> Lin<usize> {
        Lin::basis(1)
    }
    fn compose(&self, a: &usize, _: usize, b: &usize) -> Lin<usize> {
        Lin::basis(a + b - 1)
    }
    fn act(&self, a: &usize, _: &Perm) -> Lin<usize> {
        Lin::basis(*a)
    }
    fn basis(&self, n: usize) -> Vec<usize> {
        if n == 0 {
            vec![]
        } else {
            vec![n]
        }
    }
}

/// Non-symmetric `As`: one operation `m_n` per arity.
#[derive(Clone, Debug, Default)]
pub struct AsNs;

impl Operad for AsNs {
    type E = usize;
    fn name(&self) -> String {
        "As".into()
    }
    fn symmetric(&self) -> bool {
        false
    }
    fn arity(&self, e: &usize) -> usize {
        *e
    }
    fn degree(&self, _: &usize) -> i64 {
        0
    }
    fn unit(&self) -> Lin<usize> {
        Lin::basis(1)
    }
    fn compose(&self, a: &usize, _: usize, b: &usize) -> Lin<usize> {
        Lin::basis(a + b - 1)
    }
    fn act(&self, a: &usize, s: &Perm) -> Lin<usize> {
        assert!(s.is_identity(), "As has no symmetric group action");
        Lin::basis(*a)
    }
    fn basis(&self, n: usize) -> Vec<usize> {
        if n == 0 {
            vec![]
        } else {
            vec![n]
        }
    }
}

/// `Ass(n) = k[S_n]`; `m_σ` is `(a_1,…,a_n) ↦ a_{σ⁻¹(1)}⋯a_{σ⁻¹(n)}`.
#[derive(Clone, Debug, Default)]
pub struct Ass;

impl Ass {
    /// The word `σ⁻¹(1)…σ⁻¹(n)` read by `m_σ`.
    pub fn word(s: &Perm) -> Vec<usize> {
        s.inverse().images().to_vec()
    }

    pub fn from_word(w: &[usize]) -> Perm {
        Perm::new(w.to_vec()).expect("word is a permutation").inverse()
    }
}

impl Operad for Ass {
    type E = Perm;
    fn name(&self) -> String {
        "Ass".into()
    }
    fn arity(&self, e: &Perm) -> usize {
        e.n()
    }
    fn degree(&self, _: &Perm) -> i64 {
        0
    }
    fn unit(&self) -> Lin<Perm> {
        Lin::basis(Perm::identity(1))
    }
    fn compose(&self, a: &Perm, i: usize, b: &Perm) -> Lin<Perm> {
        let n = b.n();
        let wb = Ass::word(b);
        let mut w = Vec::with_capacity(a.n() + n - 1);
        for &x in &Ass::word(a) {
            if x < i {
                w.push(x);
            } else if x == i {
                w.extend(wb.iter().map(|y| y + i));
            } else {
                w.push(x + n - 1);
            }
        }
        Lin::basis(Ass::from_word(&w))
    }
    fn act(&self, a: &Perm, s: &Perm) -> Lin<Perm> {
        Lin::basis(a.compose(s))
    }
    fn basis(&self, n: usize) -> Vec<Perm> {
        if n == 0 {
            vec![]
        } else {
            all_perms(n)
        }
    }
}

/// `End_{k s^k}` for `k = ±1`: `S` (k = 1) and `S⁻¹` (k = −1).
/// `S_m ∘_i S_n = (−1)^{(n−1)(i−1)} S_{m+n−1}` and `S_n^σ = sgn(σ) S_n`.
#[derive(Clone, Debug)]
pub struct Susp {
    pub k: i64,
}

impl Susp {
    pub fn s() -> Susp {
        Susp { k: 1 }
    }
    pub fn s_inv() -> Susp {
        Susp { k: -1 }
    }
}

impl Operad for Susp {
    type E = usize;
    fn name(&self) -> String {
        if self.k == 1 {
            "S".into()
        } else {
            "S^-1".into()
        }
    }
    fn arity(&self, e: &usize) -> usize {
        *e
    }
    fn degree(&self, e: &usize) -> i64 {
        self.k * (1 - *e as i64)
    }
    fn unit(&self) -> Lin<usize> {
        Lin::basis(1)
    }
    fn compose(&self, a: &usize, i: usize, b: &usize) -> Lin<usize> {
        Lin::term(a + b - 1, sign_q((*b as i64 - 1) * i as i64))
    }
    fn act(&self, a: &usize, s: &Perm) -> Lin<usize> {
        Lin::term(*a, q(s.sign()))
    }
    fn basis(&self, n: usize) -> Vec<usize> {
        if n == 0 {
            vec![]
        } else {
            vec![n]
        }
    }
}

/// Basis element `E^o_{a_1…a_n}` of `End_V(n)`: sends `x_{a_1}⊗…⊗x_{a_n}` to `x_o`.
pub type EndKey = (usize, Vec<usize>);

/// The endomorphism operad `End_V(n) = hom(V^{⊗n}, V)`.
#[derive(Clone, Debug)]
pub struct EndOp {
    pub v: Arc<GradedSpace>,
    /// transpose of the differential: `d_t[b]` lists `(c, coeff)` with `d(x_c) ∋ coeff·x_b`
    d_t: Vec<Vec<(usize, crate::exact::Q)>>,
}

impl EndOp {
    pub fn new(v: Arc<GradedSpace>) -> EndOp {
        let mut d_t = vec![Vec::new(); v.dim()];
        for c in 0..v.dim() {
            for (b, coeff) in &v.d_vec(&Lin::basis(c)) {
                d_t[*b].push((c, coeff.clone()));
            }
        }
        EndOp { v, d_t }
    }

    pub fn deg_in(&self, ins: &[usize]) -> i64 {
        ins.iter().map(|&j| self.v.degree(j)).sum()
    }

    /// Applies a combination of basis maps to a basis tensor.
    pub fn apply(&self, f: &Lin<EndKey>, ins: &[usize]) -> Lin<usize> {
        let mut out = Lin::zero();
        for ((o, a), c) in f {
            if a.as_slice() == ins {
                out.add_term(*o, c.clone());
            }
        }
        out
    }

    /// Applies `f` to a combination of basis tensors.
    pub fn apply_lin(&self, f: &Lin<EndKey>, x: &Lin<Vec<usize>>) -> Lin<usize> {
        let mut out = Lin::zero();
        for (ins, c) in x {
            out.add_scaled(&self.apply(f, ins), c);
        }
        out
    }

    /// Builds an element of `End_V(n)` from its values on basis tensors.
    pub fn from_fn<F: Fn(&[usize]) -> Lin<usize>>(&self, n: usize, f: F) -> Lin<EndKey> {
        let mut out = Lin::zero();
        for ins in tuples(self.v.dim(), n) {
            for (o, c) in &f(&ins) {
                out.add_term((*o, ins.clone()), c.clone());
            }
        }
        out
    }
}

/// All `n`-tuples over `0..d` in lexicographic order.
pub fn tuples(d: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        let mut next = Vec::with_capacity(out.len() * d);
        for t in &out {
            for j in 0..d {
                let mut u = t.clone();
                u.push(j);
                next.push(u);
            }
        }
        out = next;
    }
    out
}

impl Operad for EndOp {
    type E = EndKey;
    fn name(&self) -> String {
        format!("End_{}", self.v.name)
    }
    fn arity(&self, e: &EndKey) -> usize {
        e.1.len()
    }
    fn degree(&self, e: &EndKey) -> i64 {
        self.v.degree(e.0) - self.deg_in(&e.1)
    }
    fn unit(&self) -> Lin<EndKey> {
        self.identity()
    }
    fn compose(&self, a: &EndKey, i: usize, b: &EndKey) -> Lin<EndKey> {
        if a.1[i] != b.0 {
            return Lin::zero();
        }
        let mut ins = a.1[..i].to_vec();
        ins.extend_from_slice(&b.1);
        ins.extend_from_slice(&a.1[i + 1..]);
        let s = self.degree(b) * self.deg_in(&a.1[..i]);
        Lin::term((a.0, ins), sign_q(s))
    }
    fn act(&self, a: &EndKey, s: &Perm) -> Lin<EndKey> {
        // f^σ(x_c) = f(σ·x_c); nonzero iff σ·c = a
        let c = s.inverse().act_on(&a.1);
        let degs: Vec<i64> = c.iter().map(|&j| self.v.degree(j)).collect();
        Lin::term((a.0, c), sign_q(koszul_exponent(s, &degs)))
    }
    fn diff(&self, a: &EndKey) -> Lin<EndKey> {
        let mut out = Lin::zero();
        for (o2, c) in &self.v.d_vec(&Lin::basis(a.0)) {
            out.add_term((*o2, a.1.clone()), c.clone());
        }
        // − (−1)^{|f|} f∘d
        let fs = -sign_q(self.degree(a));
        let mut pre = 0i64;
        for k in 0..a.1.len() {
            for (c, coeff) in &self.d_t[a.1[k]] {
                let mut ins = a.1.clone();
                ins[k] = *c;
                let sign = sign_q(pre);
                out.add_term((a.0, ins), &fs * &sign * coeff);
            }
            pre += self.v.degree(a.1[k]);
        }
        // the sign of d on x_c uses degrees of x_c, which agree with a before slot k
        out
    }
    fn basis(&self, n: usize) -> Vec<EndKey> {
        let d = self.v.dim();
        let mut out = Vec::new();
        for ins in tuples(d, n) {
            for o in 0..d {
                out.push((o, ins.clone()));
            }
        }
        out
    }
}

impl EndOp {
    pub fn identity(&self) -> Lin<EndKey> {
        (0..self.v.dim()).map(|j| ((j, vec![j]), q(1))).collect()
    }
}
