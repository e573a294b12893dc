//! Koszul resolutions `Q^!_∞ = Ω((S ⊗ Q)^∨)` and their canonical maps.
//!
//! The generator `s⁻¹(S_n ⊗ q)^∨` is stored as is; the element written
//! `s⁻¹S_n⁻¹q^∨` differs from it by `κ_n = (−1)^{n(n−1)/2}`, the sign of the
//! identification `S⁻¹ ≅ (S⁻¹)^c`. So `ℓ_n = κ_n s⁻¹(S_n ⊗ μ_n)^∨`.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::exact::scalar::sign_q;
use crate::exact::{Lin, Q};
use crate::operad::dual::DualCooperad;
use crate::operad::presented::{koszul_dual, PresentError, PresentedOperad, QuadraticData};
use crate::operad::{AsNs, Ass, Com, Hadamard, Operad, Susp};
use crate::tree::{Gen, SMod, Tree};

use super::cobar::Cobar;
use super::BarCobarError;

pub type SQ<Q> = Hadamard<Susp, Q>;
pub type Resolution<Q> = Cobar<DualCooperad<SQ<Q>>>;

pub fn kappa(n: usize) -> Q {
    sign_q((n * (n.saturating_sub(1)) / 2) as i64)
}

pub fn resolution<O, F>(q: O, arity_cap: usize, weight_cap: usize, label: F) -> Result<Resolution<O>, BarCobarError>
where
    O: Operad + 'static,
    F: Fn(&O::E) -> String,
{
    let sq = Arc::new(Hadamard::new(Susp::s(), q));
    Cobar::new(Arc::new(DualCooperad::new(sq)), arity_cap, weight_cap, |(_, e)| label(e))
}

/// `L∞ = Ω((S ⊗ Com)^∨)`.
pub fn l_infinity(arity_cap: usize, weight_cap: usize) -> Resolution<Com> {
    resolution(Com, arity_cap, weight_cap, |n| format!("l{}", n)).expect("Com is reduced")
}

/// `A∞ = Ω((S ⊗ As)^∨)` in the non-symmetric world.
pub fn a_infinity(arity_cap: usize, weight_cap: usize) -> Resolution<AsNs> {
    resolution(AsNs, arity_cap, weight_cap, |n| format!("a{}", n)).expect("As is reduced")
}

/// `Ass_∞ = Ω((S ⊗ Ass)^∨)`.
pub fn ass_infinity(arity_cap: usize, weight_cap: usize) -> Resolution<Ass> {
    resolution(Ass, arity_cap, weight_cap, |s| {
        format!("m{}", s.one_based().iter().map(|i| i.to_string()).collect::<String>())
    })
    .expect("Ass is reduced")
}

/// `C∞ = Ω((S ⊗ Lie)^∨)`.
pub fn c_infinity(arity_cap: usize, weight_cap: usize) -> Resolution<Arc<PresentedOperad>> {
    let lie = Arc::new(crate::operad::presented::lie(arity_cap));
    presented_resolution(lie, arity_cap, weight_cap)
}

pub fn presented_resolution(q: Arc<PresentedOperad>, arity_cap: usize, weight_cap: usize) -> Resolution<Arc<PresentedOperad>> {
    let qq = q.clone();
    resolution(q, arity_cap, weight_cap, move |t| format!("g{}", crate::tree::to_json(t, &|g: &Gen| qq.data.gens.label(g).to_string())))
        .expect("presented operads are reduced")
}

/// `ℓ_n` (or `a_n`) for a resolution whose arity-`n` generator is unique.
pub fn top_generator<O: Operad + 'static>(res: &Resolution<O>, n: usize) -> Lin<Tree<Gen>> {
    let b = res.free.gens.basis(n);
    assert_eq!(b.len(), 1, "arity {} has {} generators", n, b.len());
    Lin::term(res.free.corolla(b[0]), kappa(n))
}

/// The quadratic part of the differential in arity 3: `H₀` of the
/// resolution is the operad on the binary generators with these relations.
pub fn h0_data<O: Operad + 'static>(res: &Resolution<O>) -> QuadraticData {
    let gens2: BTreeMap<usize, Vec<_>> = [(2, res.free.gens.gens[&2].clone())].into_iter().collect();
    let full = res.free.gens.clone();
    let gens = SMod::new("H0", full.symmetric, gens2, move |g, s| full.act(g, s));
    let relations = res.free.gens.basis(3).iter().map(|g| res.free.dgen[g].clone()).collect();
    QuadraticData { gens, relations }
}

pub fn h0<O: Operad + 'static>(res: &Resolution<O>, cap: usize) -> Result<PresentedOperad, PresentError> {
    PresentedOperad::new(&format!("H0({})", res.name()), h0_data(res), cap)
}

/// The canonical map `Q^!_∞ → Q^!` on generators: `κ₂ s⁻¹(S₂ ⊗ f)^∨ ↦ f'`
/// for the generators `f` of `Q`, everything of arity at least 3 to zero.
pub fn resolution_map(res: &Resolution<Arc<PresentedOperad>>, dual: &PresentedOperad) -> BTreeMap<Gen, Lin<Tree<Gen>>> {
    let q = &res.c.op.b;
    let mut out = BTreeMap::new();
    for g in res.free.gens.basis(2) {
        let (_, t) = res.elem(&g);
        let Tree::Node(f, _) = t else { unreachable!() };
        let label = format!("{}'", q.data.gens.label(f));
        out.insert(g, Lin::term(dual.generator(&label), kappa(2)));
    }
    out
}

pub fn koszul_dual_of(q: &PresentedOperad) -> PresentedOperad {
    koszul_dual(q, &format!("{}^!", q.name)).expect("stock operads have Koszul duals")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Perm;
    use crate::operad::diff_lin;

    fn displayed_coefficient(n1: usize, n2: usize, j: usize, rho: &Perm) -> Q {
        // (−1)^{(j−1)(n₂−1)+σ+n₁} with j 1-based
        sign_q((j * (n2 - 1) + n1) as i64) * crate::exact::q(rho.sign())
    }

    #[test]
    fn linfty_differential_matches_closed_form() {
        let l = l_infinity(6, 2);
        for n in 2..=6 {
            let d = diff_lin(&l, &top_generator(&l, n));
            let mut expected = Lin::zero();
            for (shape, j, rho) in crate::barcobar::cobar::two_vertex_shapes(n, false) {
                let Tree::Node(_, ch) = &shape else { unreachable!() };
                let (n1, n2) = (ch.len(), ch[j].arity());
                let g1 = l.free.gens.basis(n1)[0];
                let g2 = l.free.gens.basis(n2)[0];
                let t = shape.with_labels(&[g1, g2]);
                expected.add_term(t, displayed_coefficient(n1, n2, j, &rho) * kappa(n1) * kappa(n2));
            }
            assert_eq!(d, expected, "d(l{})", n);
        }
    }
}
