//! Passing between algebras over a resolution `Ω((S⊗Q)^∨)` and classical
//! operations: `ℓ_n = κ_n ρ(g_n)` for the generator `g_n` sitting over the
//! identity ordering, and `ρ(g_σ) = (−1)^σ ρ(g_id)^σ` for the others.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::barcobar::resolution::{kappa, Resolution};
use crate::exact::scalar::q;
use crate::exact::{Lin, Perm};
use crate::main_theorem::OperadMorphism;
use crate::operad::presented::PresentedOperad;
use crate::operad::stock::EndKey;
use crate::operad::{act_lin, AsNs, Ass, Com, EndOp, Operad};
use crate::tree::{Gen, Tree};

use super::algebra::{end_of, table_of, PAlgebra};
use super::cofree::Kind;
use super::homotopy::HomotopyAlgebra;

/// Operads whose basis elements in each arity are either unique or indexed
/// by orderings of the inputs.
pub trait Orderings: Operad {
    fn ordering(&self, e: &Self::E) -> Option<Perm>;
}

impl Orderings for Com {
    fn ordering(&self, e: &usize) -> Option<Perm> {
        Some(Perm::identity(*e))
    }
}

impl Orderings for AsNs {
    fn ordering(&self, e: &usize) -> Option<Perm> {
        Some(Perm::identity(*e))
    }
}

impl Orderings for Ass {
    fn ordering(&self, e: &Perm) -> Option<Perm> {
        Some(e.clone())
    }
}

impl Orderings for PresentedOperad {
    fn ordering(&self, e: &Tree<Gen>) -> Option<Perm> {
        let n = e.arity();
        (self.basis(n).len() == 1).then(|| Perm::identity(n))
    }
}

impl<O: Orderings + ?Sized> Orderings for Arc<O> {
    fn ordering(&self, e: &O::E) -> Option<Perm> {
        (**self).ordering(e)
    }
}

/// Classical operations of an algebra over a resolution.
pub fn from_algebra<O>(kind: Kind, alg: &PAlgebra<Resolution<O>>, cap: usize) -> HomotopyAlgebra
where
    O: Orderings + 'static,
{
    let res = alg.rho.src.clone();
    let mut ops = BTreeMap::new();
    for n in 2..=cap.min(res.arity_cap) {
        let g = res
            .free
            .gens
            .basis(n)
            .into_iter()
            .find(|g| res.c.op.b.ordering(&res.elem(g).1).is_some_and(|s| s.is_identity()))
            .expect("a generator over the identity ordering");
        let v = alg.op(&res.free.corolla(g)).scaled(&kappa(n));
        ops.insert(n, table_of(&v));
    }
    HomotopyAlgebra::new(kind, alg.carrier().clone(), cap, ops)
}

/// The algebra over a resolution with the given classical operations.
pub fn to_algebra<O>(h: &HomotopyAlgebra, res: Arc<Resolution<O>>) -> PAlgebra<Resolution<O>>
where
    O: Orderings + 'static,
{
    let end = Arc::new(EndOp::new(h.v.clone()));
    let mut on_gens: BTreeMap<Gen, Lin<EndKey>> = BTreeMap::new();
    for (g, (_, x)) in &res.elems {
        let n = g.0;
        let Some(t) = h.ops.get(&n) else { continue };
        let s = res.c.op.b.ordering(x).expect("generators indexed by orderings");
        let base = end_of(t).scaled(&kappa(n));
        on_gens.insert(*g, act_lin(end.as_ref(), &base, &s).scaled(&q(s.sign())));
    }
    let r = res.clone();
    let e = end.clone();
    PAlgebra::new(OperadMorphism::new("ρ", res, end, move |t: &Tree<Gen>| {
        r.free.extend(e.as_ref(), t, 0, |g| on_gens.get(g).cloned().unwrap_or_default())
    }))
}

/// The generators of the resolution where `ρ` fails to commute with the
/// differentials.
pub fn operad_failures<O: Operad + 'static>(alg: &PAlgebra<Resolution<O>>, cap: usize) -> Vec<Gen> {
    let res = alg.rho.src.clone();
    let f: BTreeMap<Gen, Lin<EndKey>> =
        res.elems.keys().filter(|g| g.0 <= cap).map(|g| (*g, alg.op(&res.free.corolla(*g)))).collect();
    crate::barcobar::twisting::chain_failures(res.as_ref(), alg.end().as_ref(), &f, cap)
}
