//! The perturbation lemma on the truncated bar construction. The tensor
//! trick homotopy
//! `H(x₁…x_n) = Σ_j ±ip(x₁)…ip(x_{j−1}) h(x_j) x_{j+1}…x_n`
//! (symmetrized in the `Lie` case) perturbed by the higher operations gives
//! `p_∞ = P − P A H` and `i_∞ = I − H A I` with
//! `A = Σ_k (−1)^k δ(Hδ)^k`. This needs the side conditions.

use crate::exact::{all_perms, Lin, Q};
use crate::linfty_algebra::cofree::{self, coderivation, normalize_lin, product, Kind, Word};
use crate::linfty_algebra::morphism::InfinityMorphism;
use crate::linfty_algebra::HomotopyAlgebra;

use super::Retraction;

pub struct Perturbation<'a> {
    pub alg: &'a HomotopyAlgebra,
    pub r: &'a Retraction,
    bdeg: Vec<i64>,
    cdeg: Vec<i64>,
}

fn factorial(n: usize) -> Q {
    Q::from_integer((1..=n as i64).product::<i64>().into())
}

impl<'a> Perturbation<'a> {
    pub fn new(alg: &'a HomotopyAlgebra, r: &'a Retraction) -> Self {
        let bdeg = alg.shifted_degrees();
        let cdeg = (0..r.c.dim()).map(|k| r.c.degree(k) + 1).collect();
        Perturbation { alg, r, bdeg, cdeg }
    }

    fn kind(&self) -> Kind {
        self.alg.kind
    }

    /// The coderivation of the operations of arity at least 2.
    fn delta(&self, v: &Lin<Word>) -> Lin<Word> {
        let mut out = Lin::zero();
        for (w, c) in v {
            let d = coderivation(self.kind(), &self.bdeg, |u| if u.len() < 2 { Lin::zero() } else { self.alg.q(u) }, w);
            out.add_scaled(&d, c);
        }
        out
    }

    /// `H` on a tuple, not normalized.
    fn h_tensor(&self, w: &[usize]) -> Lin<Word> {
        let ip = |x: usize| self.r.i.apply(&self.r.p.apply(&Lin::basis(x)));
        let mut out = Lin::zero();
        let mut pre = 0i64;
        for j in 0..w.len() {
            let mut parts: Vec<Lin<usize>> = w[..j].iter().map(|&x| ip(x)).collect();
            parts.push(self.r.h.apply(&Lin::basis(w[j])));
            parts.extend(w[j + 1..].iter().map(|&x| Lin::basis(x)));
            out.add_scaled(&product(Kind::Ass, &self.bdeg, &parts), &crate::exact::sign_q(pre));
            pre += self.bdeg[w[j]];
        }
        out
    }

    fn h(&self, v: &Lin<Word>) -> Lin<Word> {
        let mut out = Lin::zero();
        for (w, c) in v {
            match self.kind() {
                Kind::Ass => out.add_scaled(&self.h_tensor(w), c),
                Kind::Lie => {
                    // average over the symmetric group, apply, project back
                    let n = w.len();
                    let degs: Vec<i64> = w.iter().map(|&x| self.bdeg[x]).collect();
                    let mut t = Lin::zero();
                    for s in all_perms(n) {
                        let e = crate::exact::koszul_exponent(&s, &degs);
                        let u = s.act_on(w);
                        t.add_scaled(&self.h_tensor(&u), &crate::exact::sign_q(e));
                    }
                    let t = normalize_lin(Kind::Lie, &self.bdeg, &t);
                    out.add_scaled(&t, &(c / factorial(n)));
                }
            }
        }
        out
    }

    /// `pr₁ A` on a vector of words.
    fn a1(&self, v: &Lin<Word>) -> Lin<usize> {
        let mut out = Lin::zero();
        let mut x = v.clone();
        let mut sign = Q::from_integer(1.into());
        while !x.is_zero() {
            let dx = self.delta(&x);
            out.add_scaled(&cofree::corestrict(&dx, |u| if u.len() == 1 { Lin::basis(u[0]) } else { Lin::zero() }), &sign);
            // drop words of length 1: H then δ cannot reach length 1 from them
            let dx = dx.filter(|w| w.len() > 1);
            x = self.h(&dx);
            sign = -sign;
        }
        out
    }

    fn normalized(&self, w: &[usize]) -> Lin<Word> {
        let mut v = Lin::zero();
        cofree::push_word(&mut v, self.kind(), &self.bdeg, w, &Q::from_integer(1.into()));
        v
    }

    /// `p_∞ : B ⇝ C`.
    pub fn p_inf(&self) -> InfinityMorphism {
        let r = self.r;
        InfinityMorphism::from_fn(self.kind(), r.b.clone(), r.c.clone(), self.alg.cap, |w| {
            if w.len() == 1 {
                return r.p.apply(&Lin::basis(w[0]));
            }
            let hw = self.h(&self.normalized(w));
            -r.p.apply(&self.a1(&hw))
        })
    }

    /// `I` applied to a tuple of `C`, as words of `B`.
    fn i_word(&self, w: &[usize]) -> Lin<Word> {
        let parts: Vec<Lin<usize>> = w.iter().map(|&x| self.r.i.apply(&Lin::basis(x))).collect();
        product(self.kind(), &self.bdeg, &parts)
    }

    /// `i_∞ = I − H A I`, corestricted.
    pub fn i_inf(&self) -> InfinityMorphism {
        let r = self.r;
        InfinityMorphism::from_fn(self.kind(), r.c.clone(), r.b.clone(), self.alg.cap, |w| {
            if w.len() == 1 {
                return r.i.apply(&Lin::basis(w[0]));
            }
            -r.h.apply(&self.a1(&self.i_word(w)))
        })
    }

    /// The perturbed structure `P A I` on `C`.
    pub fn structure(&self) -> HomotopyAlgebra {
        let r = self.r;
        let _ = &self.cdeg;
        HomotopyAlgebra::from_shifted(self.kind(), r.c.clone(), self.alg.cap, |w| r.p.apply(&self.a1(&self.i_word(w))))
    }
}
