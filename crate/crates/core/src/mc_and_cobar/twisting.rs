//! Twisting maps relative to `ψ = π^*Ψ` for `Ψ` the identity of `Com`,
//! `Ass` or `As`, and the two residuals of a degree `−1` map `φ : D → A`.
//!
//! A map `s⁻¹D → A` is stored like an element of `hom(D, A)`: coefficient
//! of `a` at `s⁻¹d_k` under index `a·dim D + k`. With `sφ(s⁻¹x) = φ(x)`
//! for `|φ| = −1` the two storages of `φ` and `sφ` coincide.
//!
//! `⋆(sφ)` reads `Δ̄_{s⁻¹D}(n)(s⁻¹x) = (−1)^{n|q₀|+ε+1+n(n−1)/2} sq₀ ⊗
//! s⁻¹x₁⊗…⊗s⁻¹x_n` off the stored decomposition of `D` (see [`q0_sign`]),
//! applies `Ψ` and `γ_A`, and passes from invariants to coinvariants by
//! `v ↦ [v]/|G|`.
//! In the `Com` case that is `1/n!` times the sum over all tuples; in the
//! `Ass` case the `n!` orderings of `Ass(n)` give equal classes, so the
//! factor cancels against them and the stored (identity ordering) tensor
//! is evaluated once; the `As` case has no group.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;
use thiserror::Error;

use crate::exact::scalar::{factorial, q, sign_q};
use crate::exact::{Lin, Q};
use crate::linfty_algebra::hom::{hom_structure, CCoalgebra};
use crate::linfty_algebra::tensor::{Flavor, Strict};
use crate::linfty_algebra::{HomotopyAlgebra, Kind};

#[derive(Debug, Error, PartialEq)]
pub enum StarError {
    #[error("A is not known to be nilpotent and D is not conilpotent; the sum need not terminate")]
    NonTerminating,
}

/// `φ(d_k)` as a vector of `A`.
pub fn value(dco: &CCoalgebra, phi: &Lin<usize>, k: usize) -> Lin<usize> {
    let dd = dco.dim();
    phi.iter().filter(|(x, _)| *x % dd == k).map(|(x, c)| (x / dd, c.clone())).collect()
}

/// `μ_n` of a strict algebra on vectors.
pub fn mu_lin(a: &Strict, xs: &[Lin<usize>]) -> Lin<usize> {
    let mut acc: Vec<(Vec<usize>, Q)> = vec![(vec![], q(1))];
    for x in xs {
        acc = acc.iter().flat_map(|(w, c)| x.iter().map(move |(k, v)| ([w.clone(), vec![*k]].concat(), c * v))).collect();
    }
    let mut out = Lin::zero();
    for (w, c) in acc {
        out.add_scaled(&a.mu(&w), &c);
    }
    out
}

/// The iterated decomposition terminates: no basis vector reappears in its
/// own decompositions.
pub fn is_conilpotent(dco: &CCoalgebra) -> bool {
    let mut edges: BTreeMap<usize, BTreeSet<usize>> = BTreeMap::new();
    for dn in dco.delta.values() {
        for (k, t) in dn {
            for (w, _) in t {
                edges.entry(*k).or_default().extend(w.iter().copied());
            }
        }
    }
    // Kahn's algorithm on the decomposition graph
    let n = dco.dim();
    let mut indeg = vec![0usize; n];
    for ts in edges.values() {
        for &t in ts {
            indeg[t] += 1;
        }
    }
    let mut stack: Vec<usize> = (0..n).filter(|&i| indeg[i] == 0).collect();
    let mut seen = 0;
    while let Some(v) = stack.pop() {
        seen += 1;
        for &t in edges.get(&v).into_iter().flatten() {
            indeg[t] -= 1;
            if indeg[t] == 0 {
                stack.push(t);
            }
        }
    }
    seen == n
}

/// The weight-one element `q₀` of `B(S⊗Q)(n)` the stored decomposition is
/// written against is `κ_{n−1} = (−1)^{(n−1)(n−2)/2}` times the suspended
/// generator. With the bare generator `Ω̂` fails `d² = 0`.
pub fn q0_sign(n: usize) -> Q {
    sign_q(((n - 1) * (n - 2) / 2) as i64)
}

/// The factor of the invariants-to-coinvariants passage.
pub fn coinvariant_factor(flavor: Flavor, n: usize) -> Q {
    match flavor {
        Flavor::Com => q(1) / factorial(n),
        Flavor::Ass | Flavor::AsNs => q(1),
    }
}

/// The sign of the component `s⁻¹x_{w₁}⊗…⊗s⁻¹x_{w_n}` of `Δ̄_{s⁻¹D}(n)`:
/// `(−1)^{n|q₀|+ε+1+n(n−1)/2}` with `|q₀| = 0` and `ε` the Koszul sign of
/// `(s⁻¹)^{⊗n}`.
pub fn desuspension_sign(dco: &CCoalgebra, w: &[usize]) -> Q {
    let n = w.len() as i64;
    let eps: i64 = w.iter().enumerate().map(|(i, &x)| (n - 1 - i as i64) * dco.d.degree(x)).sum();
    sign_q(eps + 1 + n * (n - 1) / 2)
}

/// `⋆^{(n)}(sφ)`, one entry per arity.
pub fn star_alpha(dco: &CCoalgebra, a: &Strict, nilpotent: bool, phi: &Lin<usize>) -> Result<BTreeMap<usize, Lin<usize>>, StarError> {
    if !nilpotent && !is_conilpotent(dco) {
        return Err(StarError::NonTerminating);
    }
    assert_eq!(dco.kind, a.flavor.coefficients());
    let dd = dco.dim();
    let vals: Vec<Lin<usize>> = (0..dd).map(|k| value(dco, phi, k)).collect();
    let mut out = BTreeMap::new();
    for (&n, dn) in &dco.delta {
        let f = coinvariant_factor(a.flavor, n) * q0_sign(n);
        let mut acc = Lin::zero();
        for (k, t) in dn {
            for (w, c) in t {
                let xs: Vec<Lin<usize>> = w.iter().map(|&j| vals[j].clone()).collect();
                if xs.iter().any(|x| x.is_zero()) {
                    continue;
                }
                let m = mu_lin(a, &xs);
                for (o, v) in &m {
                    acc.add_term(o * dd + k, &f * c * desuspension_sign(dco, w) * v);
                }
            }
        }
        out.insert(n, acc);
    }
    Ok(out)
}

/// `∂(sφ)` on `s⁻¹D`: `d_A sφ − sφ d_{s⁻¹D}` with `d_{s⁻¹D} = −s⁻¹d_D s`.
pub fn linear_part(dco: &CCoalgebra, a: &Strict, phi: &Lin<usize>) -> Lin<usize> {
    let dd = dco.dim();
    let mut out = Lin::zero();
    for k in 0..dd {
        for (o, v) in &a.v.d_vec(&value(dco, phi, k)) {
            out.add_term(o * dd + k, v.clone());
        }
        let dx = dco.d.d_vec(&Lin::basis(k));
        for (j, c) in &dx {
            for (o, v) in &value(dco, phi, *j) {
                out.add_term(o * dd + k, c * v);
            }
        }
    }
    out
}

/// Both sides of the correspondence for one `φ`, split by arity (arity 1
/// is the differential).
#[derive(Clone, Debug, Serialize)]
pub struct Residuals {
    pub mc: BTreeMap<usize, Lin<usize>>,
    pub tw: BTreeMap<usize, Lin<usize>>,
}

impl Residuals {
    pub fn mc_total(&self) -> Lin<usize> {
        self.mc.values().fold(Lin::zero(), |acc, x| acc + x.clone())
    }

    pub fn tw_total(&self) -> Lin<usize> {
        self.tw.values().fold(Lin::zero(), |acc, x| acc + x.clone())
    }

    pub fn vanish_together(&self) -> bool {
        self.mc_total().is_zero() == self.tw_total().is_zero()
    }

    /// Arities where `Tw(sφ)(s⁻¹x)` and `MC(φ)(x)` differ; `Tw = −s MC`
    /// and `(sψ)(s⁻¹x) = −ψ(x)` for `|ψ| = −2` make them equal.
    pub fn differing_arities(&self) -> Vec<usize> {
        let keys: BTreeSet<usize> = self.mc.keys().chain(self.tw.keys()).copied().collect();
        keys.into_iter().filter(|n| self.mc.get(n).cloned().unwrap_or_default() != self.tw.get(n).cloned().unwrap_or_default()).collect()
    }
}

/// The MC residual of `φ` in `hom^Ψ(D, A)` (`ℓ_n/n!` for `L∞`) and the
/// twisting residual of `sφ`.
pub fn mc_tw_equivalence(dco: &CCoalgebra, a: &Strict, phi: &Lin<usize>) -> Residuals {
    let hom = hom_structure(dco, a);
    mc_tw_with(&hom, dco, a, phi)
}

/// Same, with the hom algebra already built.
pub fn mc_tw_with(hom: &HomotopyAlgebra, dco: &CCoalgebra, a: &Strict, phi: &Lin<usize>) -> Residuals {
    let mut mc = BTreeMap::new();
    mc.insert(1, hom.v.d_vec(phi));
    for n in 2..=hom.cap {
        let mut t = hom.op_lin(&vec![phi.clone(); n]);
        if hom.kind == Kind::Lie {
            t = t.scaled(&(q(1) / factorial(n)));
        }
        mc.insert(n, t);
    }
    let mut tw = star_alpha(dco, a, true, phi).expect("nilpotent target");
    tw.insert(1, linear_part(dco, a, phi));
    mc.retain(|_, v| !v.is_zero());
    tw.retain(|_, v| !v.is_zero());
    Residuals { mc, tw }
}
