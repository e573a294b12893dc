//! Operads given by partial compositions on an explicit basis.
//!
//! Slots are 0-based in code: `compose(a, i, b)` is `a ∘_{i+1} b`. The right
//! action follows `(x^σ)^τ = x^{στ}` and a permutation acts on tensors on the
//! left, the factor at position `i` landing at `σ(i)`.

pub mod hadamard;
pub mod presented;
pub mod stock;
pub mod dual;
pub mod convolution;
pub mod json;

use std::fmt::Debug;

use crate::exact::{all_perms, Lin, Perm};

pub use hadamard::Hadamard;
pub use stock::{Ass, AsNs, Com, EndOp, Susp};

pub trait Operad: Send + Sync {
    type E: Clone + Ord + Debug + Send + Sync;

    fn name(&self) -> String;
    fn symmetric(&self) -> bool {
        true
    }
    fn arity(&self, e: &Self::E) -> usize;
    fn degree(&self, e: &Self::E) -> i64;
    fn unit(&self) -> Lin<Self::E>;
    fn compose(&self, a: &Self::E, i: usize, b: &Self::E) -> Lin<Self::E>;
    fn act(&self, a: &Self::E, s: &Perm) -> Lin<Self::E>;
    fn diff(&self, _a: &Self::E) -> Lin<Self::E> {
        Lin::zero()
    }
    /// Basis of arity `n`; for quasi-free operads this is weight-truncated.
    fn basis(&self, n: usize) -> Vec<Self::E>;
}

impl<O: Operad + ?Sized> Operad for std::sync::Arc<O> {
    type E = O::E;
    fn name(&self) -> String {
        (**self).name()
    }
    fn symmetric(&self) -> bool {
        (**self).symmetric()
    }
    fn arity(&self, e: &O::E) -> usize {
        (**self).arity(e)
    }
    fn degree(&self, e: &O::E) -> i64 {
        (**self).degree(e)
    }
    fn unit(&self) -> Lin<O::E> {
        (**self).unit()
    }
    fn compose(&self, a: &O::E, i: usize, b: &O::E) -> Lin<O::E> {
        (**self).compose(a, i, b)
    }
    fn act(&self, a: &O::E, s: &Perm) -> Lin<O::E> {
        (**self).act(a, s)
    }
    fn diff(&self, a: &O::E) -> Lin<O::E> {
        (**self).diff(a)
    }
    fn basis(&self, n: usize) -> Vec<O::E> {
        (**self).basis(n)
    }
}

pub fn compose_lin<O: Operad + ?Sized>(op: &O, a: &Lin<O::E>, i: usize, b: &Lin<O::E>) -> Lin<O::E> {
    a.bilinear(b, |x, y| op.compose(x, i, y))
}

pub fn act_lin<O: Operad + ?Sized>(op: &O, a: &Lin<O::E>, s: &Perm) -> Lin<O::E> {
    if s.is_identity() {
        return a.clone();
    }
    a.map(|x| op.act(x, s))
}

pub fn diff_lin<O: Operad + ?Sized>(op: &O, a: &Lin<O::E>) -> Lin<O::E> {
    a.map(|x| op.diff(x))
}

/// Degree of a homogeneous combination, `None` for zero.
pub fn lin_degree<O: Operad + ?Sized>(op: &O, a: &Lin<O::E>) -> Option<i64> {
    a.keys().next().map(|k| op.degree(k))
}

pub fn lin_arity<O: Operad + ?Sized>(op: &O, a: &Lin<O::E>) -> Option<usize> {
    a.keys().next().map(|k| op.arity(k))
}

/// `γ(x; y_1,…,y_k)` composed left to right, no relabelling of leaves.
pub fn gamma<O: Operad + ?Sized>(op: &O, x: &Lin<O::E>, ys: &[Lin<O::E>]) -> Lin<O::E> {
    let mut acc = x.clone();
    let mut pos = 0;
    for y in ys {
        let ar = match lin_arity(op, y) {
            Some(a) => a,
            None => return Lin::zero(),
        };
        acc = compose_lin(op, &acc, pos, y);
        pos += ar;
    }
    acc
}

/// The permutation `σ ∈ S_{m+n−1}` with `μ^σ ∘_i ν = (μ ∘_{σ(i)} ν)^{σ'}`.
pub fn expand_at(s: &Perm, i: usize, n: usize) -> Perm {
    let m = s.n();
    let si = s.apply(i);
    let src = |k: usize| if k < i { k } else { k + n - 1 };
    let tgt = |j: usize| if j < si { j } else { j + n - 1 };
    let mut img = vec![0; m + n - 1];
    for k in 0..m {
        if k == i {
            for r in 0..n {
                img[i + r] = si + r;
            }
        } else {
            img[src(k)] = tgt(s.apply(k));
        }
    }
    Perm::new(img).expect("block expansion is bijective")
}

/// `id_{i} ⊕ τ ⊕ id` acting on `m + n − 1` inputs.
pub fn embed_at(t: &Perm, i: usize, m: usize) -> Perm {
    let n = t.n();
    let mut img: Vec<usize> = (0..m + n - 1).collect();
    for r in 0..n {
        img[i + r] = i + t.apply(r);
    }
    Perm::new(img).expect("embedding is bijective")
}

/// Which axiom failed, with the arities involved.
#[derive(Debug, Clone, PartialEq)]
pub struct AxiomFailure {
    pub axiom: &'static str,
    pub detail: String,
}

fn fail(axiom: &'static str, detail: String) -> Result<(), AxiomFailure> {
    Err(AxiomFailure { axiom, detail })
}

/// Exhaustive check of unit, sequential and parallel associativity,
/// equivariance and the derivation rule on all basis triples with total
/// arity at most `cap`. Arity-one basis elements are included.
pub fn check_axioms<O: Operad + ?Sized>(op: &O, cap: usize) -> Result<(), AxiomFailure> {
    let bases: Vec<Vec<O::E>> = (0..=cap).map(|n| if n == 0 { vec![] } else { op.basis(n) }).collect();
    let id = op.unit();
    for n in 1..=cap {
        for x in &bases[n] {
            let lx = Lin::basis(x.clone());
            if compose_lin(op, &id, 0, &lx) != lx {
                return fail("unit", format!("{:?}", x));
            }
            for i in 0..n {
                if compose_lin(op, &lx, i, &id) != lx {
                    return fail("unit", format!("{:?} slot {}", x, i));
                }
            }
        }
    }
    for m in 1..=cap {
        for n in 1..=cap + 1 - m {
            for l in &bases[m] {
                for mu in &bases[n] {
                    let ll = Lin::basis(l.clone());
                    let lm = Lin::basis(mu.clone());
                    // derivation
                    for i in 0..m {
                        let lhs = diff_lin(op, &op.compose(l, i, mu));
                        let mut rhs = compose_lin(op, &op.diff(l), i, &lm);
                        let s = crate::exact::sign_q(op.degree(l));
                        rhs.add_scaled(&compose_lin(op, &ll, i, &op.diff(mu)), &s);
                        if lhs != rhs {
                            return fail("derivation", format!("{:?} ∘{} {:?}", l, i + 1, mu));
                        }
                    }
                    for p in 1..=cap + 2 - m - n {
                        for nu in &bases[p] {
                            let lnu = Lin::basis(nu.clone());
                            for i in 0..m {
                                for j in 0..n {
                                    let lhs = compose_lin(op, &op.compose(l, i, mu), i + j, &lnu);
                                    let rhs = compose_lin(op, &ll, i, &op.compose(mu, j, nu));
                                    if lhs != rhs {
                                        return fail("sequential", format!("{:?},{:?},{:?} at {},{}", l, mu, nu, i, j));
                                    }
                                }
                                for k in i + 1..m {
                                    let lhs = compose_lin(op, &op.compose(l, i, mu), k + n - 1, &lnu);
                                    let s = crate::exact::sign_q(op.degree(mu) * op.degree(nu));
                                    let rhs = compose_lin(op, &op.compose(l, k, nu), i, &lm).scaled(&s);
                                    if lhs != rhs {
                                        return fail("parallel", format!("{:?},{:?},{:?} at {},{}", l, mu, nu, i, k));
                                    }
                                }
                            }
                        }
                    }
                    if op.symmetric() && m + n - 1 <= cap {
                        for i in 0..m {
                            for s in transpositions(m) {
                                let lhs = compose_lin(op, &op.act(l, &s), i, &lm);
                                let rhs = act_lin(op, &op.compose(l, s.apply(i), mu), &expand_at(&s, i, n));
                                if lhs != rhs {
                                    return fail("equivariance", format!("{:?}^{:?} ∘{} {:?}", l, s, i + 1, mu));
                                }
                            }
                            for t in transpositions(n) {
                                let lhs = compose_lin(op, &ll, i, &op.act(mu, &t));
                                let rhs = act_lin(op, &op.compose(l, i, mu), &embed_at(&t, i, m));
                                if lhs != rhs {
                                    return fail("equivariance", format!("{:?} ∘{} {:?}^{:?}", l, i + 1, mu, t));
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    if op.symmetric() {
        for n in 1..=cap {
            for x in &bases[n] {
                for s in transpositions(n) {
                    let lhs = diff_lin(op, &op.act(x, &s));
                    let rhs = act_lin(op, &op.diff(x), &s);
                    if lhs != rhs {
                        return fail("differential equivariance", format!("{:?}", x));
                    }
                }
                if n <= 4 {
                    for s in all_perms(n) {
                        for t in transpositions(n) {
                            let lhs = act_lin(op, &op.act(x, &s), &t);
                            let rhs = op.act(x, &s.compose(&t));
                            if lhs != rhs {
                                return fail("right action", format!("{:?}", x));
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

/// Adjacent transpositions, generating `S_n`.
pub fn transpositions(n: usize) -> Vec<Perm> {
    (0..n.saturating_sub(1)).map(|i| Perm::transposition(n, i, i + 1)).collect()
}

/// Checks that `f` preserves units, compositions, actions and differentials
/// on all source basis pairs of total arity at most `cap`.
pub fn check_morphism<A, B, F>(src: &A, tgt: &B, f: F, cap: usize) -> Result<(), AxiomFailure>
where
    A: Operad + ?Sized,
    B: Operad + ?Sized,
    F: Fn(&A::E) -> Lin<B::E>,
{
    let fl = |v: &Lin<A::E>| v.map(|x| f(x));
    if fl(&src.unit()) != tgt.unit() {
        return fail("morphism unit", String::new());
    }
    for m in 1..=cap {
        let bm = src.basis(m);
        for x in &bm {
            if fl(&src.diff(x)) != diff_lin(tgt, &f(x)) {
                return fail("morphism differential", format!("{:?}", x));
            }
            if src.symmetric() {
                for s in transpositions(m) {
                    if fl(&src.act(x, &s)) != act_lin(tgt, &f(x), &s) {
                        return fail("morphism action", format!("{:?}", x));
                    }
                }
            }
            for n in 1..=cap + 1 - m {
                for y in src.basis(n) {
                    for i in 0..m {
                        let lhs = fl(&src.compose(x, i, &y));
                        let rhs = compose_lin(tgt, &f(x), i, &f(&y));
                        if lhs != rhs {
                            return fail("morphism composition", format!("{:?} ∘{} {:?}", x, i + 1, y));
                        }
                    }
                }
            }
        }
    }
    Ok(())
}
