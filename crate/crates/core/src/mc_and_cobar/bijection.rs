//! Maurer–Cartan elements of `hom^Ψ(D, A)` against dg algebra morphisms
//! `Ω̂_ψ(s⁻¹D) → A`, by restriction to and extension from generators.
//! Only the algebra side is realized; the coalgebra side `B_ψA` is not.

use serde::Serialize;

use crate::exact::Lin;
use crate::linfty_algebra::cofree::Word;
use crate::linfty_algebra::hom::{hom_structure, CCoalgebra};
use crate::linfty_algebra::tensor::{tensor_algebra, Strict};
use crate::linfty_algebra::HomotopyAlgebra;

use super::cobar::CompleteCobar;
use super::twisting::value;

/// A morphism out of the cobar construction, by its values on the
/// monomials up to the cap.
pub type MonomialMap = Vec<(Word, Lin<usize>)>;

/// `φ ↦ F`, the multiplicative extension of `sφ`.
pub fn extension(cobar: &CompleteCobar, dco: &CCoalgebra, a: &Strict, phi: &Lin<usize>) -> MonomialMap {
    let f: Vec<Lin<usize>> = (0..dco.dim()).map(|k| value(dco, phi, k)).collect();
    cobar.basis().into_iter().map(|m| {
        let v = cobar.extend(a, &f, &m);
        (m, v)
    }).collect()
}

/// `F ↦ φ`, reading `F` on the generators.
pub fn restriction(dco: &CCoalgebra, map: &MonomialMap) -> Lin<usize> {
    let dd = dco.dim();
    let mut phi = Lin::zero();
    for (m, v) in map {
        if m.len() == 1 {
            for (o, c) in v {
                phi.add_term(o * dd + m[0], c.clone());
            }
        }
    }
    phi
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct BijectionReport {
    pub candidates: usize,
    pub mc_elements: usize,
    pub morphisms: usize,
    /// candidates where "MC" and "morphism" disagree
    pub disagreements: Vec<usize>,
    /// candidates where a round trip is not the identity
    pub round_trip_failures: Vec<usize>,
}

impl BijectionReport {
    pub fn holds(&self) -> bool {
        self.disagreements.is_empty() && self.round_trip_failures.is_empty()
    }
}

/// Runs both directions on every candidate `φ`: MC in `hom^Ψ(D, A)` iff
/// the extension is a dg morphism; restriction after extension and
/// extension after restriction are identities.
pub fn mc_bijections(dco: &CCoalgebra, a: &Strict, weight_cap: usize, candidates: &[Lin<usize>]) -> BijectionReport {
    let hom = hom_structure(dco, a);
    certify(&hom, dco, a, weight_cap, candidates)
}

/// The tensor form: `x ∈ A ⊗ C` against morphisms out of `Ω̂_ψ(s⁻¹C^∨)`,
/// through `hom(C^∨, A) ≅ A ⊗ C` (same index `a·dim C + c`).
pub fn tensor_bijections(a: &Strict, c: &HomotopyAlgebra, weight_cap: usize, candidates: &[Lin<usize>]) -> BijectionReport {
    let dco = CCoalgebra::dual_of(c);
    let t = tensor_algebra(a, c);
    certify(&t, &dco, a, weight_cap, candidates)
}

fn certify(alg: &HomotopyAlgebra, dco: &CCoalgebra, a: &Strict, weight_cap: usize, candidates: &[Lin<usize>]) -> BijectionReport {
    let cobar = CompleteCobar::new(dco, a.flavor, weight_cap, true);
    let mut r = BijectionReport { candidates: candidates.len(), ..Default::default() };
    for (i, phi) in candidates.iter().enumerate() {
        let mc = alg.mc_residual(phi).is_zero();
        let f: Vec<Lin<usize>> = (0..dco.dim()).map(|k| value(dco, phi, k)).collect();
        let morphism = cobar.morphism_failures(a, &f).is_empty();
        r.mc_elements += usize::from(mc);
        r.morphisms += usize::from(morphism);
        if mc != morphism {
            r.disagreements.push(i);
        }
        let ext = extension(&cobar, dco, a, phi);
        let back = restriction(dco, &ext);
        if back != *phi || extension(&cobar, dco, a, &back) != ext {
            r.round_trip_failures.push(i);
        }
    }
    r
}
