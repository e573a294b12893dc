//! Algebras over an operad as morphisms `P → End_A`.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::Zero;

use crate::barcobar::resolution::Resolution;
use crate::exact::scalar::{qone, sign_q};
use crate::exact::{GradedSpace, Lin, Perm};
use crate::main_theorem::{from_generators, MPsi, OperadMorphism};
use crate::operad::presented::PresentedOperad;
use crate::operad::stock::EndKey;
use crate::operad::{act_lin, AsNs, Ass, AxiomFailure, Com, EndOp, Hadamard, Operad};
use crate::tree::{Gen, Tree};

/// Structure constants of one operation: input basis tuple to output vector.
pub type Table = BTreeMap<Vec<usize>, Lin<usize>>;

pub fn table_of(op: &Lin<EndKey>) -> Table {
    let mut t: Table = BTreeMap::new();
    for ((o, ins), c) in op {
        t.entry(ins.clone()).or_default().add_term(*o, c.clone());
    }
    t.retain(|_, v| !v.is_zero());
    t
}

pub fn end_of(t: &Table) -> Lin<EndKey> {
    let mut out = Lin::zero();
    for (ins, v) in t {
        for (o, c) in v {
            out.add_term((*o, ins.clone()), c.clone());
        }
    }
    out
}

/// Multilinear evaluation of a table on vectors.
pub fn eval_table(t: &Table, xs: &[Lin<usize>]) -> Lin<usize> {
    let mut out = Lin::zero();
    for (ins, val) in t {
        if ins.len() != xs.len() {
            continue;
        }
        let mut c = qone();
        for (k, x) in xs.iter().enumerate() {
            c *= x.coeff(&ins[k]);
            if c.is_zero() {
                break;
            }
        }
        if !c.is_zero() {
            out.add_scaled(val, &c);
        }
    }
    out
}

/// `ρ : P → End_A`.
pub struct PAlgebra<P: Operad> {
    pub rho: OperadMorphism<P, EndOp>,
}

impl<P: Operad> Clone for PAlgebra<P> {
    fn clone(&self) -> Self {
        PAlgebra { rho: self.rho.clone() }
    }
}

impl<P: Operad + 'static> PAlgebra<P> {
    pub fn new(rho: OperadMorphism<P, EndOp>) -> Self {
        PAlgebra { rho }
    }

    pub fn end(&self) -> &Arc<EndOp> {
        &self.rho.tgt
    }

    pub fn carrier(&self) -> &Arc<GradedSpace> {
        &self.rho.tgt.v
    }

    pub fn op(&self, x: &P::E) -> Lin<EndKey> {
        self.rho.apply(x)
    }

    pub fn check(&self, cap: usize) -> Result<(), AxiomFailure> {
        self.rho.check(cap)
    }

    /// The `O`-algebra `ρ ∘ m`.
    pub fn pull_back<O: Operad + 'static>(&self, m: &OperadMorphism<O, P>) -> PAlgebra<O> {
        PAlgebra { rho: self.rho.after(m) }
    }
}

/// Iterated left products `m(m(x₁,x₂),x₃)…` of a degree 0 binary table.
fn iterated(t: &Table, ins: &[usize]) -> Lin<usize> {
    let mut acc = Lin::basis(ins[0]);
    for &x in &ins[1..] {
        let mut next = Lin::zero();
        for (a, c) in &acc {
            if let Some(v) = t.get(&vec![*a, x]) {
                next.add_scaled(v, c);
            }
        }
        acc = next;
    }
    acc
}

fn end_space(v: Arc<GradedSpace>) -> Arc<EndOp> {
    Arc::new(EndOp::new(v))
}

/// A commutative algebra from its (degree 0, graded commutative) product.
pub fn commutative(v: Arc<GradedSpace>, m: &Table) -> PAlgebra<Com> {
    let end = end_space(v);
    let e = end.clone();
    let m = m.clone();
    PAlgebra::new(OperadMorphism::new("ρ", Arc::new(Com), end, move |n: &usize| e.from_fn(*n, |ins| iterated(&m, ins))))
}

/// An associative algebra: `m_σ ↦ (m_n)^σ`.
pub fn associative(v: Arc<GradedSpace>, m: &Table) -> PAlgebra<Ass> {
    let end = end_space(v);
    let e = end.clone();
    let m = m.clone();
    PAlgebra::new(OperadMorphism::new("ρ", Arc::new(Ass), end, move |s: &Perm| {
        act_lin(e.as_ref(), &e.from_fn(s.n(), |ins| iterated(&m, ins)), s)
    }))
}

pub fn associative_ns(v: Arc<GradedSpace>, m: &Table) -> PAlgebra<AsNs> {
    let end = end_space(v);
    let e = end.clone();
    let m = m.clone();
    PAlgebra::new(OperadMorphism::new("ρ", Arc::new(AsNs), end, move |n: &usize| e.from_fn(*n, |ins| iterated(&m, ins))))
}

/// An algebra over a presented operad with one binary generator.
pub fn binary(op: Arc<PresentedOperad>, v: Arc<GradedSpace>, b: &Table) -> PAlgebra<PresentedOperad> {
    let end = end_space(v);
    let img = end_of(b);
    PAlgebra::new(from_generators("ρ", op, end, move |_| img.clone()))
}

/// `f ⊗ g ∈ End_{A⊗C}` for `f ∈ End_A`, `g ∈ End_C`: on
/// `(a₁⊗c₁)…(a_n⊗c_n)` it is `(−1)^{|g|Σ|a_i| + Σ_{i<j}|c_i||a_j|} f(a)⊗g(c)`.
pub fn end_tensor(ea: &EndOp, ec: &EndOp, f: &EndKey, g: &EndKey) -> Lin<EndKey> {
    let (va, vc) = (&ea.v, &ec.v);
    let dc = vc.dim();
    let n = f.1.len();
    let dg = ec.degree(g);
    let mut e = 0i64;
    let mut sa = 0i64;
    for j in 0..n {
        let a = va.degree(f.1[j]);
        sa += a;
        for i in 0..j {
            e += vc.degree(g.1[i]) * a;
        }
    }
    e += dg * sa;
    let ins = (0..n).map(|k| f.1[k] * dc + g.1[k]).collect();
    Lin::term((f.0 * dc + g.0, ins), sign_q(e))
}

pub fn end_tensor_lin(ea: &EndOp, ec: &EndOp, f: &Lin<EndKey>, g: &Lin<EndKey>) -> Lin<EndKey> {
    f.bilinear(g, |x, y| end_tensor(ea, ec, x, y))
}

/// The operad map `End_A ⊗_H End_C → End_{A⊗C}`.
pub fn end_tensor_morphism(ea: Arc<EndOp>, ec: Arc<EndOp>) -> OperadMorphism<Hadamard<Arc<EndOp>, Arc<EndOp>>, EndOp> {
    let ac = end_space(Arc::new(GradedSpace::tensor(&ea.v, &ec.v)));
    let h = Arc::new(Hadamard::new(ea.clone(), ec.clone()));
    OperadMorphism::new("⊗", h, ac, move |(f, g): &(EndKey, EndKey)| end_tensor(&ea, &ec, f, g))
}

/// `A ⊗ C` as an algebra over `P ⊗_H Q`.
pub fn hadamard_algebra<P: Operad + 'static, Q: Operad + 'static>(
    a: &PAlgebra<P>,
    c: &PAlgebra<Q>,
) -> PAlgebra<Hadamard<Arc<P>, Arc<Q>>> {
    let (ra, rc) = (a.rho.clone(), c.rho.clone());
    let ac = end_space(Arc::new(GradedSpace::tensor(a.carrier(), c.carrier())));
    let h = Arc::new(Hadamard::new(a.rho.src.clone(), c.rho.src.clone()));
    PAlgebra::new(OperadMorphism::new("ρ⊗ρ", h, ac, move |(p, q): &(P::E, Q::E)| {
        end_tensor_lin(ra.tgt.as_ref(), rc.tgt.as_ref(), &ra.apply(p), &rc.apply(q))
    }))
}

/// `A ⊗^Ψ C`: the pull-back of `A ⊗ C` along `M_Ψ`, where `C` is an
/// algebra over the same resolution `Q^!_∞` that `M_Ψ` lands in.
pub fn tensor_structure<S, QO, P>(a: &PAlgebra<P>, c: &PAlgebra<Resolution<Arc<QO>>>, m: &MPsi<S, QO, P>) -> PAlgebra<Resolution<S>>
where
    S: Operad + 'static,
    QO: Operad + 'static,
    P: Operad + 'static,
{
    let ac = end_space(Arc::new(GradedSpace::tensor(a.carrier(), c.carrier())));
    let (ra, rc) = (a.rho.clone(), c.rho.clone());
    let mut on_gens: BTreeMap<Gen, Lin<EndKey>> = BTreeMap::new();
    for (g, v) in &m.on_gens {
        let mut out = Lin::zero();
        for ((p, t), k) in v {
            out.add_scaled(&end_tensor_lin(ra.tgt.as_ref(), rc.tgt.as_ref(), &ra.apply(p), &rc.apply(t)), k);
        }
        on_gens.insert(*g, out);
    }
    let src = m.src.clone();
    let s2 = src.clone();
    let e = ac.clone();
    PAlgebra::new(OperadMorphism::new("ρ_Ψ", src, ac, move |t: &Tree<Gen>| {
        s2.free.extend(e.as_ref(), t, 0, |g| on_gens.get(g).cloned().unwrap_or_default())
    }))
}
