//! The morphisms `M̄_Ψ : L∞ → hom(B(S⊗Q), P)` and `M_Ψ : L∞ → P ⊗ Ω((S⊗Q)^∨)`
//! induced by an operad morphism `Ψ : Q → P`, the elements `Ψ_n`, and the
//! Manin morphisms of the binary quadratic case.

pub mod construction;
pub mod manin;
pub mod psi;

use std::sync::Arc;

use crate::exact::{Lin, Perm};
use crate::operad::presented::{self, PresentedOperad};
use crate::operad::{check_morphism, AsNs, Ass, AxiomFailure, Com, Operad};
use crate::tree::{Gen, Tree};

pub use construction::{MBar, MPsi};
pub use manin::{manin_morphism, ManinMorphism};
pub use psi::PsiElements;

type MapFn<Q, P> = dyn Fn(&<Q as Operad>::E) -> Lin<<P as Operad>::E> + Send + Sync;

/// A degree-0 map of operads given on basis elements.
pub struct OperadMorphism<Q: Operad, P: Operad> {
    pub name: String,
    pub src: Arc<Q>,
    pub tgt: Arc<P>,
    map: Arc<MapFn<Q, P>>,
}

impl<Q: Operad, P: Operad> Clone for OperadMorphism<Q, P> {
    fn clone(&self) -> Self {
        OperadMorphism { name: self.name.clone(), src: self.src.clone(), tgt: self.tgt.clone(), map: self.map.clone() }
    }
}

impl<Q: Operad + 'static, P: Operad + 'static> OperadMorphism<Q, P> {
    pub fn new<F>(name: &str, src: Arc<Q>, tgt: Arc<P>, f: F) -> Self
    where
        F: Fn(&Q::E) -> Lin<P::E> + Send + Sync + 'static,
    {
        OperadMorphism { name: name.to_string(), src, tgt, map: Arc::new(f) }
    }

    pub fn apply(&self, x: &Q::E) -> Lin<P::E> {
        (self.map)(x)
    }

    pub fn apply_lin(&self, x: &Lin<Q::E>) -> Lin<P::E> {
        x.map(|e| (self.map)(e))
    }

    /// Units, compositions, actions and differentials up to arity `cap`.
    pub fn check(&self, cap: usize) -> Result<(), AxiomFailure> {
        check_morphism(self.src.as_ref(), self.tgt.as_ref(), |x| self.apply(x), cap)
    }

    /// `self ∘ theta`.
    pub fn after<R: Operad + 'static>(&self, theta: &OperadMorphism<R, Q>) -> OperadMorphism<R, P> {
        let (f, g) = (self.map.clone(), theta.map.clone());
        OperadMorphism::new(&format!("{}∘{}", self.name, theta.name), theta.src.clone(), self.tgt.clone(), move |x| {
            g(x).map(|y| f(y))
        })
    }
}

pub fn identity<O: Operad + 'static>(name: &str, op: Arc<O>) -> OperadMorphism<O, O> {
    OperadMorphism::new(name, op.clone(), op, |x| Lin::basis(x.clone()))
}

pub fn id_com() -> OperadMorphism<Com, Com> {
    identity("id_com", Arc::new(Com))
}

pub fn id_ass() -> OperadMorphism<Ass, Ass> {
    identity("id_ass", Arc::new(Ass))
}

pub fn id_as() -> OperadMorphism<AsNs, AsNs> {
    identity("id_as", Arc::new(AsNs))
}

pub fn id_lie(cap: usize) -> OperadMorphism<PresentedOperad, PresentedOperad> {
    identity("id_lie", Arc::new(presented::lie(cap)))
}

/// `u : Ass → Com`, `m_σ ↦ μ_n`.
pub fn forget() -> OperadMorphism<Ass, Com> {
    OperadMorphism::new("u", Arc::new(Ass), Arc::new(Com), |s: &Perm| Lin::basis(s.n()))
}

/// `a : Lie → Ass`, `b ↦ m_id − m_(12)`.
pub fn antisymmetrization(cap: usize) -> OperadMorphism<PresentedOperad, Ass> {
    let lie = Arc::new(presented::lie(cap));
    let l = lie.clone();
    let b = Lin::basis(Perm::identity(2)) - Lin::basis(Perm::transposition(2, 0, 1));
    OperadMorphism::new("a", lie, Arc::new(Ass), move |t: &Tree<Gen>| l.free.extend(&Ass, t, 0, |_| b.clone()))
}

/// A morphism out of a presented operad, given on its generators.
pub fn from_generators<P, F>(name: &str, src: Arc<PresentedOperad>, tgt: Arc<P>, on_gens: F) -> OperadMorphism<PresentedOperad, P>
where
    P: Operad + 'static,
    F: Fn(&str) -> Lin<P::E> + Send + Sync + 'static,
{
    let s = src.clone();
    let t = tgt.clone();
    OperadMorphism::new(name, src, tgt, move |x: &Tree<Gen>| {
        s.free.extend(t.as_ref(), x, 0, |g| on_gens(s.data.gens.label(g)))
    })
}

/// `u` on the presentation of `Ass` by `m = m_id` and `m' = m_(12)`.
pub fn forget_presented(cap: usize) -> OperadMorphism<PresentedOperad, Com> {
    from_generators("u", Arc::new(presented::ass(cap)), Arc::new(Com), |_| Lin::basis(2))
}

/// `a` into the presentation of `Ass`.
pub fn antisymmetrization_presented(cap: usize) -> OperadMorphism<PresentedOperad, PresentedOperad> {
    let ass = Arc::new(presented::ass(cap));
    let m = Lin::basis(ass.generator("m")) - Lin::basis(ass.generator("m'"));
    from_generators("a", Arc::new(presented::lie(cap)), ass, move |_| m.clone())
}

pub fn id_presented(name: &str, cap: usize) -> Option<OperadMorphism<PresentedOperad, PresentedOperad>> {
    let op = presented::stock(name, cap)?;
    Some(identity(&format!("id_{}", name.to_lowercase()), op))
}

#[cfg(test)]
mod tests;
