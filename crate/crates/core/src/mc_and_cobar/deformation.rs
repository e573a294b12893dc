//! The deformation complex `hom^P(sB_πX, Y)` of morphisms of `Com`,
//! `Ass` or `As` algebras, on the weight `≤ 1` part of the relative bar
//! construction.
//!
//! `B_πX` has `X` in weight 0 and `(sμ_k; x₁…x_k)`, `2 ≤ k ≤ cap`, in
//! weight 1, with `d(sμ_k; x) = γ_X(μ_k; x)` (so that the projection onto
//! `X` is the universal twisting morphism). The weight-one decomposition
//! is `sμ_k ⊗ Σ_σ σ·(x₁⊗…⊗x_k)`. Weight `≤ 1` is a dg subcoalgebra, so
//! its deformation complex classifies the morphisms
//! `Ω_π(F₁B_πX) → Y`: a degree 0 map `g : X → Y` together with arbitrary
//! values on weight 1, subject to `g` preserving all products of at most
//! `cap` factors.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::exact::scalar::sign_q;
use crate::exact::{all_perms, koszul_exponent, GradedSpace, Lin};
use crate::linfty_algebra::cofree::{Kind, Word};
use crate::linfty_algebra::hom::{hom_structure, CCoalgebra};
use crate::linfty_algebra::tensor::{Flavor, Strict};
use crate::linfty_algebra::HomotopyAlgebra;

use super::twisting::q0_sign;

/// `D = sF₁B_πX`: index `i < dim X` is `sx_i`, the rest are the weight one
/// words in the returned order.
pub fn relative_bar(x: &Strict, cap: usize) -> (CCoalgebra, Vec<Word>) {
    assert!(!x.v.has_differential(), "X without differential");
    let n = x.v.dim();
    let xdeg = |w: &[usize]| -> i64 { w.iter().map(|&i| x.v.degree(i)).sum() };
    let mut words: Vec<Word> = (0..n).map(|i| vec![i]).collect();
    let mut layer: Vec<Word> = vec![vec![]];
    for k in 1..=cap {
        let mut next = vec![];
        for w in &layer {
            for g in 0..n {
                let keep = x.flavor != Flavor::Com || w.last().map_or(true, |&l| l < g || (l == g && x.v.degree(g) % 2 == 0));
                if keep {
                    next.push([w.clone(), vec![g]].concat());
                }
            }
        }
        if k >= 2 {
            words.extend(next.iter().cloned());
        }
        layer = next;
    }
    let basis: Vec<(String, i64)> = words
        .iter()
        .map(|w| {
            let body: Vec<&str> = w.iter().map(|&i| x.v.label(i)).collect();
            if w.len() == 1 {
                (format!("s{}", body[0]), xdeg(w) + 1)
            } else {
                (format!("s(sμ{};{})", w.len(), body.join(",")), xdeg(w) + 2)
            }
        })
        .collect();
    // d(s b) = −s d_B b
    let mut diff: BTreeMap<usize, Lin<usize>> = BTreeMap::new();
    for (j, w) in words.iter().enumerate().skip(n) {
        let g = x.mu(w);
        if !g.is_zero() {
            diff.insert(j, -g);
        }
    }
    let d = Arc::new(GradedSpace::new(&format!("sB({})", x.v.name), basis).with_differential(diff).expect("bar differential"));
    let kind = x.flavor.coefficients();
    let mut delta: BTreeMap<usize, BTreeMap<usize, Lin<Word>>> = BTreeMap::new();
    for (j, w) in words.iter().enumerate().skip(n) {
        let k = w.len();
        let degs: Vec<i64> = w.iter().map(|&i| x.v.degree(i)).collect();
        let orderings: Vec<_> = match kind {
            Kind::Lie => all_perms(k),
            Kind::Ass => vec![crate::exact::Perm::identity(k)],
        };
        let entry = delta.entry(k).or_default().entry(j).or_default();
        for s in orderings {
            let u = s.act_on(w);
            // Δ_D(k)(y) = λ q₀ ⊗ sx_{u₁}⊗…, λ the desuspension sign on D
            let n_ = k as i64;
            let eps: i64 = u.iter().enumerate().map(|(i, &t)| (n_ - 1 - i as i64) * (x.v.degree(t) + 1)).sum();
            let lambda = sign_q(eps + 1 + n_ * (n_ - 1) / 2);
            entry.add_term(u, sign_q(koszul_exponent(&s, &degs)) * lambda * q0_sign(k));
        }
    }
    delta.retain(|_, m| {
        m.retain(|_, v| !v.is_zero());
        !m.is_empty()
    });
    (CCoalgebra { kind, d, cap, delta }, words)
}

/// The deformation complex of morphisms `X → Y`.
pub fn deformation_complex(x: &Strict, y: &Strict, cap: usize) -> HomotopyAlgebra {
    assert_eq!(x.flavor, y.flavor);
    let (dco, _) = relative_bar(x, cap);
    hom_structure(&dco, y)
}

/// The element of the deformation complex attached to a linear map
/// `g : X → Y` (given on basis vectors): `sx ↦ g(x)`, zero on weight 1.
pub fn element_of(x: &Strict, cap: usize, g: &[Lin<usize>]) -> Lin<usize> {
    let (dco, _) = relative_bar(x, cap);
    let dd = dco.dim();
    let mut phi = Lin::zero();
    for (i, gi) in g.iter().enumerate() {
        for (o, c) in gi {
            phi.add_term(o * dd + i, c.clone());
        }
    }
    phi
}

/// `g(x₁⋯x_k) = g(x₁)⋯g(x_k)` on every tuple of basis vectors with
/// `2 ≤ k ≤ cap`, checked directly.
pub fn preserves_products(x: &Strict, y: &Strict, cap: usize, g: &[Lin<usize>]) -> bool {
    let apply = |v: &Lin<usize>| -> Lin<usize> {
        let mut out = Lin::zero();
        for (i, c) in v {
            out.add_scaled(&g[*i], c);
        }
        out
    };
    (2..=cap).all(|k| {
        crate::operad::stock::tuples(x.v.dim(), k).into_iter().all(|w| {
            let lhs = apply(&x.mu(&w));
            let parts: Vec<Lin<usize>> = w.iter().map(|&i| g[i].clone()).collect();
            lhs == super::twisting::mu_lin(y, &parts)
        })
    })
}
