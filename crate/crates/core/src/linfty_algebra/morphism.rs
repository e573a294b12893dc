//! ∞-morphisms as coalgebra maps between bar constructions, stored by their
//! corestrictions `F_n : (sV)^{⊗n} → sW`.

use std::collections::BTreeMap;
use std::sync::Arc;


use rayon::prelude::*;

use crate::exact::{GradedSpace, Lin};
use crate::operad::stock::tuples;

use super::algebra::Table;
use super::cofree::{self, Kind, Word};
use super::homotopy::HomotopyAlgebra;

#[derive(Clone, Debug, PartialEq)]
pub struct InfinityMorphism {
    pub kind: Kind,
    pub src: Arc<GradedSpace>,
    pub tgt: Arc<GradedSpace>,
    pub cap: usize,
    /// `F_n` on basis tuples of `sV`, `1 ≤ n ≤ cap`
    pub comps: BTreeMap<usize, Table>,
}

fn deg_shift(v: &GradedSpace) -> Vec<i64> {
    (0..v.dim()).map(|i| v.degree(i) + 1).collect()
}

impl InfinityMorphism {
    pub fn from_fn<F>(kind: Kind, src: Arc<GradedSpace>, tgt: Arc<GradedSpace>, cap: usize, f: F) -> Self
    where
        F: Fn(&[usize]) -> Lin<usize> + Sync,
    {
        let mut comps = BTreeMap::new();
        for n in 1..=cap {
            let t: Table = tuples(src.dim(), n)
                .into_par_iter()
                .filter_map(|ins| {
                    let v = f(&ins);
                    (!v.is_zero()).then_some((ins, v))
                })
                .collect();
            comps.insert(n, t);
        }
        InfinityMorphism { kind, src, tgt, cap, comps }
    }

    pub fn identity(kind: Kind, v: Arc<GradedSpace>, cap: usize) -> Self {
        Self::strict(kind, v.clone(), v, cap, |x| Lin::basis(x))
    }

    /// A chain map, given on basis vectors; it is its own shifted component.
    pub fn strict<F>(kind: Kind, src: Arc<GradedSpace>, tgt: Arc<GradedSpace>, cap: usize, f: F) -> Self
    where
        F: Fn(usize) -> Lin<usize> + Sync,
    {
        Self::from_fn(kind, src, tgt, cap, |w| if w.len() == 1 { f(w[0]) } else { Lin::zero() })
    }

    pub fn comp(&self, w: &[usize]) -> Lin<usize> {
        self.comps.get(&w.len()).and_then(|t| t.get(w)).cloned().unwrap_or_default()
    }

    /// The first component as a map of the unshifted spaces.
    pub fn linear_part(&self, x: usize) -> Lin<usize> {
        self.comp(&[x])
    }

    pub fn is_strict(&self) -> bool {
        self.comps.iter().all(|(n, t)| *n == 1 || t.is_empty())
    }

    /// The coalgebra map on a word.
    pub fn apply(&self, w: &[usize]) -> Lin<Word> {
        cofree::coalgebra_map(self.kind, &deg_shift(&self.src), &deg_shift(&self.tgt), |u| self.comp(u), w)
    }

    /// `pr₁(F∘D)(w) − pr₁(D'∘F)(w)`.
    pub fn defect(&self, a: &HomotopyAlgebra, b: &HomotopyAlgebra, w: &[usize]) -> Lin<usize> {
        let lhs = cofree::corestrict(&a.coder(w), |u| self.comp(u));
        let rhs = cofree::corestrict(&self.apply(w), |u| b.q(u));
        lhs - rhs
    }

    /// Words of length at most `len` where `F` fails to commute with the
    /// coderivations.
    pub fn failures(&self, a: &HomotopyAlgebra, b: &HomotopyAlgebra, len: usize) -> Vec<Word> {
        let ws = cofree::words(self.kind, &deg_shift(&self.src), len.min(self.cap));
        let mut bad: Vec<Word> = ws.into_par_iter().filter(|w| !self.defect(a, b, w).is_zero()).collect();
        bad.sort();
        bad
    }

    /// `g ∘ self`.
    pub fn then(&self, g: &InfinityMorphism) -> InfinityMorphism {
        assert_eq!(self.kind, g.kind);
        let cap = self.cap.min(g.cap);
        InfinityMorphism::from_fn(self.kind, self.src.clone(), g.tgt.clone(), cap, |w| {
            cofree::corestrict(&self.apply(w), |u| g.comp(u))
        })
    }

    /// Arities `1..=cap` where the components differ.
    pub fn differing_arities(&self, other: &InfinityMorphism, cap: usize) -> Vec<usize> {
        (1..=cap)
            .filter(|n| self.comps.get(n).cloned().unwrap_or_default() != other.comps.get(n).cloned().unwrap_or_default())
            .collect()
    }
}

impl InfinityMorphism {
    /// The inverse of an ∞-morphism of `V` to itself whose first component
    /// is the identity.
    pub fn inverse(&self) -> InfinityMorphism {
        assert_eq!(self.src.basis, self.tgt.basis);
        let mut inv = InfinityMorphism::identity(self.kind, self.src.clone(), 1);
        inv.cap = self.cap;
        for n in 2..=self.cap {
            let t: Table = tuples(self.src.dim(), n)
                .into_par_iter()
                .filter_map(|w| {
                    let mut out = Lin::zero();
                    for (z, c) in &self.apply(&w) {
                        if z.len() < n {
                            out.add_scaled(&inv.comp(z), &-c.clone());
                        }
                    }
                    (!out.is_zero()).then_some((w, out))
                })
                .collect();
            inv.comps.insert(n, t);
        }
        inv
    }
}

impl HomotopyAlgebra {
    /// The structure `G D G⁻¹` on the same space, for `G` with identity
    /// first component; `G` is then an ∞-isomorphism onto it.
    pub fn push_forward(&self, g: &InfinityMorphism) -> HomotopyAlgebra {
        let inv = g.inverse();
        let cap = self.cap.min(g.cap);
        HomotopyAlgebra::from_shifted(self.kind, self.v.clone(), cap, |w| {
            let mut out = Lin::zero();
            for (u, c) in &inv.apply(w) {
                out.add_scaled(&cofree::corestrict(&self.coder(u), |z| g.comp(z)), c);
            }
            out
        })
    }
}

/// Random components of degree 0 with identity first component, symmetric in
/// the `Lie` case; `density` is the chance that an allowed entry is nonzero.
pub fn random_components<R: rand::Rng>(kind: Kind, v: Arc<GradedSpace>, cap: usize, density: f64, rng: &mut R) -> InfinityMorphism {
    let deg = deg_shift(&v);
    let mut chosen: BTreeMap<Word, Lin<usize>> = BTreeMap::new();
    for w in cofree::words(kind, &deg, cap) {
        if w.len() < 2 {
            continue;
        }
        let d: i64 = w.iter().map(|&x| deg[x]).sum();
        let mut val = Lin::zero();
        for o in 0..v.dim() {
            if deg[o] == d && rng.gen_bool(density) {
                val.add_term(o, crate::exact::qr(rng.gen_range(-3..=3), rng.gen_range(1..=2)));
            }
        }
        if !val.is_zero() {
            chosen.insert(w, val);
        }
    }
    InfinityMorphism::from_fn(kind, v.clone(), v, cap, |w| {
        if w.len() == 1 {
            return Lin::basis(w[0]);
        }
        match cofree::normalize(kind, &deg, w) {
            Some((s, e)) => chosen.get(&s).map(|x| x.scaled(&e)).unwrap_or_default(),
            None => Lin::zero(),
        }
    })
}
