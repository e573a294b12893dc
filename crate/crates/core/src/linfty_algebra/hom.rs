//! `hom^Ψ(D, A)` for a finite-dimensional coalgebra `D` over `B(S⊗Q)`.
//!
//! `D` is stored by its decomposition maps `Δ_n(d) = Σ c·d_{w₁}⊗…⊗d_{w_n}`
//! (weight one, identity ordering; the other orderings follow by
//! symmetry). The operations are the convolution ones,
//! `ℓ_n(φ₁,…,φ_n) = μ_n ∘ (φ₁⊗…⊗φ_n) ∘ Δ_n`, antisymmetrized when `A` is
//! associative and the result is `L∞`.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use crate::exact::perm::koszul_exponent;
use crate::exact::scalar::{q, sign_q};
use crate::exact::shift::pairing_sign;
use crate::exact::{all_perms, GradedSpace, Lin, Q};
use crate::operad::stock::tuples;

use super::algebra::Table;
use super::cofree::{Kind, Word};
use super::homotopy::HomotopyAlgebra;
use super::tensor::{Flavor, Strict};

#[derive(Clone, Debug)]
pub struct CCoalgebra {
    pub kind: Kind,
    pub d: Arc<GradedSpace>,
    pub cap: usize,
    /// `Δ_n(d_k)` for `2 ≤ n ≤ cap`
    pub delta: BTreeMap<usize, BTreeMap<usize, Lin<Word>>>,
}

impl CCoalgebra {
    /// `D = E^∨`, with dual basis `d_k(e_j) = δ_{jk}`, `|d_k| = −|e_k|`.
    /// Every map is dualized by `f^∨(ξ) = (−1)^{|f||ξ|}ξ∘f`, so `d_D = d_E^∨`
    /// and `Δ_n = ℓ_n^∨`, expanded in the basis `d_w` dual to `e_w` under
    /// the Koszul pairing.
    pub fn dual_of(e: &HomotopyAlgebra) -> CCoalgebra {
        let degs: Vec<i64> = (0..e.dim()).map(|i| -e.v.degree(i)).collect();
        let mut diff: BTreeMap<usize, Lin<usize>> = BTreeMap::new();
        for (j, col) in &e.v.diff {
            for (k, c) in col {
                // (d_D d_k)(e_j) = (−1)^{|d_k|} d_k(d e_j)
                diff.entry(*k).or_default().add_term(*j, c * sign_q(degs[*k]));
            }
        }
        let basis = (0..e.dim()).map(|i| (format!("{}^∨", e.v.label(i)), degs[i])).collect();
        let d = Arc::new(GradedSpace::new(&format!("{}^∨", e.v.name), basis).with_differential(diff).expect("dual differential"));
        let mut delta = BTreeMap::new();
        for (n, t) in &e.ops {
            let mut dn: BTreeMap<usize, Lin<Word>> = BTreeMap::new();
            for (w, val) in t {
                let ed: Vec<i64> = w.iter().map(|&x| e.v.degree(x)).collect();
                let dd: Vec<i64> = w.iter().map(|&x| degs[x]).collect();
                let p = q(pairing_sign(&dd, &ed));
                for (k, c) in val {
                    // Δ(d_k)(e_w) = d_k(ℓ_n(e_w))
                    dn.entry(*k).or_default().add_term(w.clone(), c * &p);
                }
            }
            delta.insert(*n, dn);
        }
        CCoalgebra { kind: e.kind, d, cap: e.cap, delta }
    }

    /// The base field in degree `deg` with zero decompositions.
    pub fn trivial(kind: Kind, deg: i64, cap: usize) -> CCoalgebra {
        CCoalgebra { kind, d: Arc::new(GradedSpace::from_degrees("k", &[deg])), cap, delta: BTreeMap::new() }
    }

    pub fn dim(&self) -> usize {
        self.d.dim()
    }
}

/// The graded space `hom(D, A)` with basis `E_{a,k} : d_k ↦ a` at index
/// `a·dim D + k` and differential `∂φ = d_Aφ − (−1)^{|φ|}φ d_D`.
pub fn hom_space(dco: &CCoalgebra, a: &GradedSpace) -> GradedSpace {
    let dd = dco.dim();
    let mut basis = Vec::new();
    for i in 0..a.dim() {
        for k in 0..dd {
            basis.push((format!("{}←{}", a.label(i), dco.d.label(k)), a.degree(i) - dco.d.degree(k)));
        }
    }
    let mut diff: BTreeMap<usize, Lin<usize>> = BTreeMap::new();
    for i in 0..a.dim() {
        for k in 0..dd {
            let x = i * dd + k;
            let deg = a.degree(i) - dco.d.degree(k);
            let mut col = Lin::zero();
            for (j, c) in &a.d_vec(&Lin::basis(i)) {
                col.add_term(j * dd + k, c.clone());
            }
            // (φ∘d_D)(d_m) = φ(d_D d_m): picks the m with d_k in d_D(d_m)
            for m in 0..dd {
                let c = dco.d.d_vec(&Lin::basis(m)).coeff(&k);
                if c != q(0) {
                    col.add_term(i * dd + m, -sign_q(deg) * c);
                }
            }
            if !col.is_zero() {
                diff.insert(x, col);
            }
        }
    }
    GradedSpace::new(&format!("hom({},{})", dco.d.name, a.name), basis).with_differential(diff).expect("hom differential")
}

/// `hom^Ψ(D, A)` for `Ψ` the identity of `Com`, `Ass` or `As`.
pub fn hom_structure(dco: &CCoalgebra, a: &Strict) -> HomotopyAlgebra {
    assert_eq!(dco.kind, a.flavor.coefficients());
    let v = Arc::new(hom_space(dco, &a.v));
    let dd = dco.dim();
    let mut ops = BTreeMap::new();
    for (&n, dn) in &dco.delta {
        // Δ_n read backwards: for each word, the `(k, c)` with `d_k ↦ c·w`
        let mut by_word: BTreeMap<&Word, Vec<(usize, &Q)>> = BTreeMap::new();
        for (k, w_lin) in dn {
            for (w, c) in w_lin {
                by_word.entry(w).or_default().push((*k, c));
            }
        }
        let mut sorted_words: BTreeSet<Word> = BTreeSet::new();
        for w in by_word.keys() {
            let mut w = (*w).clone();
            w.sort();
            sorted_words.insert(w);
        }
        // the convolution operation on basis maps
        let conv = |ins: &[usize]| -> Lin<usize> {
            let mut out = Lin::zero();
            let w: Word = ins.iter().map(|x| x % dd).collect();
            let Some(hits) = by_word.get(&w) else { return out };
            // the operation, of degree n − 2, passes φ₁⊗…⊗φ_n, which then
            // meets d_{w₁}⊗…⊗d_{w_n}
            let phi_deg: Vec<i64> = ins.iter().map(|&x| v.degree(x)).collect();
            let wd: Vec<i64> = w.iter().map(|&x| dco.d.degree(x)).collect();
            let s = q(pairing_sign(&phi_deg, &wd)) * sign_q((n as i64 - 2) * phi_deg.iter().sum::<i64>());
            let ai: Vec<usize> = ins.iter().map(|x| x / dd).collect();
            let prod = a.mu(&ai);
            for (k, c) in hits {
                for (o, m) in &prod {
                    out.add_term(o * dd + k, *c * &s * m);
                }
            }
            out
        };
        let mut t: Table = BTreeMap::new();
        for ins in tuples(v.dim(), n) {
            let mut w: Word = ins.iter().map(|x| x % dd).collect();
            w.sort();
            if !sorted_words.contains(&w) {
                continue;
            }
            let val = if a.flavor == Flavor::Ass {
                let degs: Vec<i64> = ins.iter().map(|&x| v.degree(x)).collect();
                let mut acc = Lin::zero();
                for s in all_perms(n) {
                    // ℓ(x) = Σ_σ sgn(σ)·(Koszul sign) m(σ·x)
                    let e = koszul_exponent(&s, &degs) + s.inversions() as i64;
                    acc.add_scaled(&conv(&s.act_on(&ins)), &sign_q(e));
                }
                acc
            } else {
                conv(&ins)
            };
            if !val.is_zero() {
                t.insert(ins, val);
            }
        }
        ops.insert(n, t);
    }
    HomotopyAlgebra::new(a.flavor.result(), v, dco.cap, ops)
}
