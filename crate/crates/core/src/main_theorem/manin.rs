//! Binary quadratic case: `m_Ψ : Lie → P ⊗ Q^!`, `b ↦ Σ_f Ψ(f) ⊗ f'`.

use std::sync::Arc;

use crate::barcobar::resolution::{koszul_dual_of, presented_resolution, resolution_map, Resolution};
use crate::exact::Lin;
use crate::operad::presented::{self, PresentedOperad};
use crate::operad::{Hadamard, Operad};
use crate::tree::{Gen, Tree};

use super::construction::MPsi;
use super::{from_generators, OperadMorphism};

pub type ManinTarget<P> = Hadamard<Arc<P>, Arc<PresentedOperad>>;

pub struct ManinMorphism<P: Operad> {
    pub psi: OperadMorphism<PresentedOperad, P>,
    /// `Lie = Com^!`, generated by `m'`.
    pub lie: Arc<PresentedOperad>,
    pub dual: Arc<PresentedOperad>,
    pub target: Arc<ManinTarget<P>>,
    pub morphism: OperadMorphism<PresentedOperad, ManinTarget<P>>,
}

/// The image of the Lie bracket under `m_Ψ`.
fn bracket_image<P: Operad + 'static>(psi: &OperadMorphism<PresentedOperad, P>, dual: &PresentedOperad) -> Lin<(P::E, Tree<Gen>)> {
    let q = psi.src.as_ref();
    let mut v = Lin::zero();
    for f in q.data.gens.basis(2) {
        let fd = dual.generator(&format!("{}'", q.data.gens.label(&f)));
        for (p, c) in &psi.apply(&q.free.corolla(f)) {
            v.add_term((p.clone(), fd.clone()), c.clone());
        }
    }
    v
}

pub fn manin_morphism<P: Operad + 'static>(psi: &OperadMorphism<PresentedOperad, P>) -> ManinMorphism<P> {
    let cap = psi.src.cap;
    let lie = Arc::new(koszul_dual_of(&presented::com(cap)));
    let dual = Arc::new(koszul_dual_of(&psi.src));
    let target = Arc::new(Hadamard::new(psi.tgt.clone(), dual.clone()));
    let b = bracket_image(psi, &dual);
    let morphism = from_generators(&format!("m_{}", psi.name), lie.clone(), target.clone(), move |_| b.clone());
    ManinMorphism { psi: psi.clone(), lie, dual, target, morphism }
}

impl<P: Operad + 'static> ManinMorphism<P> {
    /// The Jacobi relations of `Lie` pushed through `m_Ψ`; all zero when the
    /// bracket image satisfies Jacobi in `P ⊗ Q^!`.
    pub fn jacobi_images(&self) -> Vec<Lin<(P::E, Tree<Gen>)>> {
        let b = bracket_image(&self.psi, &self.dual);
        self.lie
            .data
            .relations
            .iter()
            .map(|r| {
                let mut out = Lin::zero();
                for (t, c) in r {
                    out.add_scaled(&self.lie.free.extend(self.target.as_ref(), t, 0, |_| b.clone()), c);
                }
                out
            })
            .collect()
    }

    pub fn is_morphism(&self, cap: usize) -> bool {
        self.jacobi_images().iter().all(|v| v.is_zero()) && self.morphism.check(cap).is_ok()
    }

    /// `m_Ψ = (Ψ ⊗ 1) m_Q` on the bracket.
    pub fn factors_through_identity(&self) -> bool {
        let q = self.psi.src.clone();
        let idq = super::identity("id", q);
        let mq = bracket_image(&idq, &self.dual);
        super::construction::push_tensor(&self.psi, &mq) == bracket_image(&self.psi, &self.dual)
    }

    /// Generators of `L∞` where the two ways round the square
    /// `L∞ → P ⊗ Q^!_∞ → P ⊗ Q^!` and `L∞ → Lie → P ⊗ Q^!` disagree.
    pub fn square_failures(&self, arity_cap: usize, weight_cap: usize) -> Vec<Gen> {
        let linf = Arc::new(presented_resolution(Arc::new(presented::com(arity_cap)), arity_cap, weight_cap));
        let to_lie = resolution_map(&linf, &self.lie);
        let m = MPsi::build(linf.clone(), &self.psi, arity_cap, weight_cap);
        let res: &Resolution<Arc<PresentedOperad>> = m.res.as_ref();
        let to_dual = resolution_map(res, &self.dual);
        let r = |t: &Tree<Gen>| res.free.extend(self.dual.as_ref(), t, 0, |g| to_dual.get(g).cloned().unwrap_or_default());
        let mut bad = Vec::new();
        for n in 2..=arity_cap {
            for g in linf.free.gens.basis(n) {
                let mut top = Lin::zero();
                for ((p, t), c) in &m.on_gens[&g] {
                    for (x, k) in &r(t) {
                        top.add_term((p.clone(), x.clone()), c * k);
                    }
                }
                let low = to_lie.get(&g).cloned().unwrap_or_default();
                let mut bottom = Lin::zero();
                for (t, c) in &low {
                    bottom.add_scaled(&self.morphism.apply(t), c);
                }
                if top != bottom {
                    bad.push(g);
                }
            }
        }
        bad
    }
}
