//! The complete cobar construction `Ω̂_ψ(s⁻¹D)` for `Ψ` the identity of
//! `Com`, `Ass` or `As`: the free (complete) algebra on the generators
//! `g_k = s⁻¹d_k`, kept up to a weight cap, with `d = d₁ + d₂`.
//!
//! `d₁` extends `d_{s⁻¹D} = −s⁻¹d_D s` as a derivation and `−d₂` extends
//! `s⁻¹D → P̂(s⁻¹D)`, `s⁻¹x ↦ Σ_n ψ(Δ̄_{s⁻¹D}(n)(s⁻¹x))`. A monomial is a
//! word in the generators, sorted with Koszul signs in the `Com` case.
//!
//! A dg algebra morphism into a nilpotent `A` is the multiplicative
//! extension of its values on generators; it commutes with `d` on all
//! monomials iff it does on generators. Both are checked here, on every
//! monomial up to the cap, which is exact once the cap reaches the
//! nilpotency of `A`.

use serde::Serialize;

use crate::exact::scalar::sign_q;
use crate::exact::{Lin, Q};
use crate::linfty_algebra::cofree::{push_word, Kind, Word};
use crate::linfty_algebra::hom::CCoalgebra;
use crate::linfty_algebra::tensor::{Flavor, Strict};

use super::twisting::{coinvariant_factor, desuspension_sign, mu_lin, q0_sign};

#[derive(Clone, Debug)]
pub struct CompleteCobar {
    pub flavor: Flavor,
    /// `|s⁻¹d_k| = |d_k| − 1`
    pub degrees: Vec<i64>,
    pub weight_cap: usize,
    /// `d₁(g_k)`, linear in the generators
    pub d1: Vec<Lin<usize>>,
    /// `d₂(g_k)`, monomials of length at least 2
    pub d2: Vec<Lin<Word>>,
}

impl CompleteCobar {
    /// `twisted = false` is the cobar construction along `α = 0`.
    pub fn new(dco: &CCoalgebra, flavor: Flavor, weight_cap: usize, twisted: bool) -> Self {
        Self::normalized(dco, flavor, weight_cap, twisted, q0_sign)
    }

    /// With the constant `c_n` in place of [`q0_sign`].
    pub fn normalized<F: Fn(usize) -> Q>(dco: &CCoalgebra, flavor: Flavor, weight_cap: usize, twisted: bool, c: F) -> Self {
        assert_eq!(dco.kind, flavor.coefficients());
        let dd = dco.dim();
        let degrees: Vec<i64> = (0..dd).map(|k| dco.d.degree(k) - 1).collect();
        let d1 = (0..dd).map(|k| -dco.d.d_vec(&Lin::basis(k))).collect();
        let kind = monomial_kind(flavor);
        let mut d2 = vec![Lin::zero(); dd];
        if twisted {
            for (&n, dn) in &dco.delta {
                if n > weight_cap {
                    continue;
                }
                let f = coinvariant_factor(flavor, n) * c(n);
                for (k, t) in dn {
                    for (w, x) in t {
                        let coef = -(&f * x * desuspension_sign(dco, w));
                        push_word(&mut d2[*k], kind, &degrees, w, &coef);
                    }
                }
            }
        }
        CompleteCobar { flavor, degrees, weight_cap, d1, d2 }
    }

    fn kind(&self) -> Kind {
        monomial_kind(self.flavor)
    }

    /// All monomials of length `1..=cap`.
    pub fn basis(&self) -> Vec<Word> {
        let n = self.degrees.len();
        let mut out = vec![];
        let mut layer: Vec<Word> = vec![vec![]];
        for _ in 0..self.weight_cap {
            let mut next = vec![];
            for w in &layer {
                for g in 0..n {
                    let u = [w.clone(), vec![g]].concat();
                    let keep = match self.kind() {
                        Kind::Ass => true,
                        Kind::Lie => w.last().map_or(true, |&l| l < g || (l == g && self.degrees[g] % 2 == 0)),
                    };
                    if keep {
                        next.push(u);
                    }
                }
            }
            out.extend(next.iter().cloned());
            layer = next;
        }
        out
    }

    /// `d` on a monomial, dropping monomials above the cap.
    pub fn d(&self, m: &[usize]) -> Lin<Word> {
        let mut out = Lin::zero();
        let mut pre = 0i64;
        for j in 0..m.len() {
            let s = sign_q(pre);
            let mut emit = |mid: &[usize], c: &Q| {
                let w = [&m[..j], mid, &m[j + 1..]].concat();
                if w.len() <= self.weight_cap {
                    push_word(&mut out, self.kind(), &self.degrees, &w, &(c * &s));
                }
            };
            for (g, c) in &self.d1[m[j]] {
                emit(&[*g], c);
            }
            for (u, c) in &self.d2[m[j]] {
                emit(u, c);
            }
            pre += self.degrees[m[j]];
        }
        out
    }

    pub fn d_lin(&self, v: &Lin<Word>) -> Lin<Word> {
        let mut out = Lin::zero();
        for (w, c) in v {
            out.add_scaled(&self.d(w), c);
        }
        out
    }

    /// Monomials with `d²` nonzero below the cap.
    pub fn square_failures(&self) -> Vec<Word> {
        self.basis().into_iter().filter(|m| !self.d_lin(&self.d(m)).is_zero()).collect()
    }

    /// The algebra map with the given values on generators, on a monomial.
    pub fn extend(&self, a: &Strict, f: &[Lin<usize>], m: &[usize]) -> Lin<usize> {
        let xs: Vec<Lin<usize>> = m.iter().map(|&g| f[g].clone()).collect();
        mu_lin(a, &xs)
    }

    pub fn extend_lin(&self, a: &Strict, f: &[Lin<usize>], v: &Lin<Word>) -> Lin<usize> {
        let mut out = Lin::zero();
        for (w, c) in v {
            out.add_scaled(&self.extend(a, f, w), c);
        }
        out
    }

    /// Monomials on which the extension of `f` fails to commute with the
    /// differentials.
    pub fn morphism_failures(&self, a: &Strict, f: &[Lin<usize>]) -> Vec<Word> {
        self.basis()
            .into_iter()
            .filter(|m| self.extend_lin(a, f, &self.d(m)) != a.v.d_vec(&self.extend(a, f, m)))
            .collect()
    }

    /// Is the extension a chain map; only generators are tested.
    pub fn is_morphism_on_generators(&self, a: &Strict, f: &[Lin<usize>]) -> bool {
        (0..self.degrees.len()).all(|g| self.extend_lin(a, f, &self.d(&[g])) == a.v.d_vec(&f[g]))
    }
}

pub fn monomial_kind(flavor: Flavor) -> Kind {
    match flavor {
        Flavor::Com => Kind::Lie,
        Flavor::Ass | Flavor::AsNs => Kind::Ass,
    }
}

/// A summary for reports.
#[derive(Clone, Debug, Serialize)]
pub struct CobarReport {
    pub generators: usize,
    pub monomials: usize,
    pub square_failures: usize,
}

impl CompleteCobar {
    pub fn report(&self) -> CobarReport {
        CobarReport { generators: self.degrees.len(), monomials: self.basis().len(), square_failures: self.square_failures().len() }
    }
}
