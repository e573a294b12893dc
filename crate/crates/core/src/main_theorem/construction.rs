//! `M̄_Ψ` into the convolution operad and `M_Ψ` into the Hadamard product
//! with the Koszul resolution, with the comparison between the two.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::Zero;

use crate::barcobar::resolution::{a_infinity, kappa, l_infinity, resolution, Resolution, SQ};
use crate::barcobar::twisting::chain_failures;
use crate::barcobar::Bar;
use crate::exact::scalar::sign_q;
use crate::exact::Lin;
use crate::operad::convolution::Convolution;
use crate::operad::dual::Cooperad;
use crate::operad::{AsNs, Com, Hadamard, Operad, Susp};
use crate::tree::{eval_tree, tree_double, Gen, Tree};

use super::psi::PsiElements;
use super::OperadMorphism;

pub type BarSQ<QO> = Bar<SQ<Arc<QO>>>;
pub type ConvSQ<QO, P> = Convolution<BarSQ<QO>, P>;
pub type TensorRes<QO, P> = Hadamard<Arc<P>, Arc<Resolution<Arc<QO>>>>;

/// `(−1)^{n−1+n(n−1)/2}`, the value of `M̄_Ψ(ℓ_n)` on `sS_n q` relative to `Ψ(q)`.
pub fn generator_sign(n: usize) -> crate::exact::Q {
    sign_q((n - 1 + n * (n - 1) / 2) as i64)
}

fn top_gen<S: Operad + 'static>(src: &Resolution<S>, n: usize) -> Gen {
    let b = src.free.gens.basis(n);
    assert_eq!(b.len(), 1, "source must have one generator per arity");
    b[0]
}

pub fn bar_sq<QO: Operad + 'static>(q: Arc<QO>, arity_cap: usize, weight_cap: usize) -> BarSQ<QO> {
    let sq = Arc::new(Hadamard::new(Susp::s(), q));
    Bar::new(sq, arity_cap, weight_cap, |(n, x)| format!("S{}⊗{:?}", n, x)).expect("Q is augmented")
}

pub fn resolution_of<QO: Operad + 'static>(q: Arc<QO>, arity_cap: usize, weight_cap: usize) -> Resolution<Arc<QO>> {
    resolution(q, arity_cap, weight_cap, |x| format!("{:?}", x)).expect("Q is augmented")
}

/// `M̄_Ψ : L∞ → hom(B(S⊗Q), P)` (or `A∞` in the non-symmetric case).
pub struct MBar<S: Operad, QO: Operad + 'static, P: Operad> {
    pub src: Arc<Resolution<S>>,
    pub bar: Arc<BarSQ<QO>>,
    pub conv: Arc<ConvSQ<QO, P>>,
    pub on_gens: BTreeMap<Gen, Lin<(Tree<Gen>, P::E)>>,
}

pub fn mbar_psi<QO: Operad + 'static, P: Operad + 'static>(
    psi: &OperadMorphism<QO, P>,
    arity_cap: usize,
    weight_cap: usize,
) -> MBar<Com, QO, P> {
    MBar::build(Arc::new(l_infinity(arity_cap, weight_cap)), psi, arity_cap, weight_cap)
}

pub fn mbar_psi_ns<QO: Operad + 'static, P: Operad + 'static>(
    psi: &OperadMorphism<QO, P>,
    arity_cap: usize,
    weight_cap: usize,
) -> MBar<AsNs, QO, P> {
    MBar::build(Arc::new(a_infinity(arity_cap, weight_cap)), psi, arity_cap, weight_cap)
}

impl<S: Operad + 'static, QO: Operad + 'static, P: Operad + 'static> MBar<S, QO, P> {
    pub fn build(src: Arc<Resolution<S>>, psi: &OperadMorphism<QO, P>, arity_cap: usize, weight_cap: usize) -> Self {
        let bar = Arc::new(bar_sq(psi.src.clone(), arity_cap, weight_cap));
        let conv = Arc::new(Convolution::new(bar.clone(), psi.tgt.clone()));
        let mut on_gens = BTreeMap::new();
        for n in 2..=arity_cap {
            // ℓ_n = κ_n g_n
            let s = kappa(n) * generator_sign(n);
            let mut v = Lin::zero();
            for x in psi.src.basis(n) {
                let c = bar.corolla_of(&(n, x.clone()));
                for (p, k) in &psi.apply(&x) {
                    v.add_term((c.clone(), p.clone()), k * &s);
                }
            }
            on_gens.insert(top_gen(&src, n), v);
        }
        MBar { src, bar, conv, on_gens }
    }

    /// `M̄_Ψ(ℓ_n)` for the normalized generator `ℓ_n = κ_n g_n`.
    pub fn of_top(&self, n: usize) -> Lin<(Tree<Gen>, P::E)> {
        self.on_gens[&top_gen(&self.src, n)].scaled(&kappa(n))
    }

    pub fn apply(&self, x: &Lin<Tree<Gen>>) -> Lin<(Tree<Gen>, P::E)> {
        let mut out = Lin::zero();
        for (t, c) in x {
            out.add_scaled(&self.src.free.extend(self.conv.as_ref(), t, 0, |g| self.on_gens[g].clone()), c);
        }
        out
    }

    /// Generators `g` with `M̄(dg) ≠ ∂M̄(g)`, arity at most `cap`.
    pub fn chain_failures(&self, cap: usize) -> Vec<Gen> {
        chain_failures(&self.src, self.conv.as_ref(), &self.on_gens, cap)
    }

    /// `B(S⊗Θ)^* f = f ∘ B(S⊗Θ)`, on the bar basis of `S⊗R` up to `cap`.
    pub fn pull_back<R: Operad + 'static>(
        &self,
        theta: &OperadMorphism<R, QO>,
        bar_r: &BarSQ<R>,
        f: &Lin<(Tree<Gen>, P::E)>,
        cap: usize,
    ) -> Lin<(Tree<Gen>, P::E)> {
        let label = |g: &Gen| -> Lin<Gen> {
            let (n, r) = &bar_r.elems[g];
            theta.apply(r).map_keys(|x| self.bar.index[&(*n, x.clone())])
        };
        let mut out = Lin::zero();
        for n in 1..=cap {
            for c in bar_r.basis(n) {
                let mut img: Lin<Vec<Gen>> = Lin::basis(vec![]);
                for g in c.labels() {
                    img = img.bilinear(&label(&g), |a, b| {
                        let mut a = a.clone();
                        a.push(*b);
                        Lin::basis(a)
                    });
                }
                let img = img.map_keys(|ls| c.with_labels(ls));
                for (p, k) in &self.conv.apply(f, &img) {
                    out.add_term((c.clone(), p.clone()), k.clone());
                }
            }
        }
        out
    }
}

/// `Ψ_* f = Ψ ∘ f`.
pub fn push_forward<C: Ord + Clone, QO: Operad + 'static, P: Operad + 'static>(
    psi: &OperadMorphism<QO, P>,
    f: &Lin<(C, QO::E)>,
) -> Lin<(C, P::E)> {
    let mut out = Lin::zero();
    for ((c, q), k) in f {
        for (p, kp) in &psi.apply(q) {
            out.add_term((c.clone(), p.clone()), k * kp);
        }
    }
    out
}

/// `M_Ψ : L∞ → P ⊗ Ω((S⊗Q)^∨)`.
pub struct MPsi<S: Operad, QO: Operad + 'static, P: Operad> {
    pub src: Arc<Resolution<S>>,
    pub res: Arc<Resolution<Arc<QO>>>,
    pub target: Arc<TensorRes<QO, P>>,
    pub psi: PsiElements<QO, P>,
    pub on_gens: BTreeMap<Gen, Lin<(P::E, Tree<Gen>)>>,
}

pub fn m_psi<QO: Operad + 'static, P: Operad + 'static>(
    psi: &OperadMorphism<QO, P>,
    arity_cap: usize,
    weight_cap: usize,
) -> MPsi<Com, QO, P> {
    MPsi::build(Arc::new(l_infinity(arity_cap, weight_cap)), psi, arity_cap, weight_cap)
}

pub fn m_psi_ns<QO: Operad + 'static, P: Operad + 'static>(
    psi: &OperadMorphism<QO, P>,
    arity_cap: usize,
    weight_cap: usize,
) -> MPsi<AsNs, QO, P> {
    MPsi::build(Arc::new(a_infinity(arity_cap, weight_cap)), psi, arity_cap, weight_cap)
}

impl<S: Operad + 'static, QO: Operad + 'static, P: Operad + 'static> MPsi<S, QO, P> {
    pub fn build(src: Arc<Resolution<S>>, psi: &OperadMorphism<QO, P>, arity_cap: usize, weight_cap: usize) -> Self {
        let res = Arc::new(resolution_of(psi.src.clone(), arity_cap, weight_cap));
        let target = Arc::new(Hadamard::new(psi.tgt.clone(), res.clone()));
        let elems = PsiElements::from_morphism(psi, arity_cap);
        let mut on_gens = BTreeMap::new();
        for n in 2..=arity_cap {
            // ℓ_n ↦ Σ (−1)^{n|p_i|} p_i ⊗ s⁻¹S_n⁻¹q_i^∨, and s⁻¹S_n⁻¹q^∨ = κ_n g(q);
            // the two κ_n cancel on g_n = κ_n ℓ_n
            let mut v = Lin::zero();
            for ((p, x), c) in &elems.parts[&n] {
                let g = res.generator(&(n, x.clone()));
                v.add_term((p.clone(), g), c * sign_q(n as i64 * psi.tgt.degree(p)));
            }
            on_gens.insert(top_gen(&src, n), v);
        }
        MPsi { src, res, target, psi: elems, on_gens }
    }

    /// `s⁻¹S_n⁻¹q^∨` as an element of the resolution.
    pub fn bar_generator(&self, n: usize, x: &QO::E) -> Lin<Tree<Gen>> {
        Lin::term(self.res.generator(&(n, x.clone())), kappa(n))
    }

    pub fn of_top(&self, n: usize) -> Lin<(P::E, Tree<Gen>)> {
        self.on_gens[&top_gen(&self.src, n)].scaled(&kappa(n))
    }

    /// The unique extension to trees, by the free operad structure.
    pub fn apply(&self, x: &Lin<Tree<Gen>>) -> Lin<(P::E, Tree<Gen>)> {
        let mut out = Lin::zero();
        for (t, c) in x {
            out.add_scaled(&self.src.free.extend(self.target.as_ref(), t, 0, |g| self.on_gens[g].clone()), c);
        }
        out
    }

    /// The explicit description: decorate every vertex, split the tree of
    /// pairs into a pair of trees by `Φ`, then compose the `P` side.
    pub fn recipe(&self, t: &Tree<Gen>) -> Lin<(P::E, Tree<Gen>)> {
        let labs = t.labels();
        let mut decorations: Lin<Vec<(P::E, Gen)>> = Lin::basis(vec![]);
        for g in &labs {
            let v: Lin<(P::E, Gen)> = self.on_gens[g].map_keys(|(p, c)| (p.clone(), *c.root_label().expect("corolla")));
            decorations = decorations.bilinear(&v, |a, b| {
                let mut a = a.clone();
                a.push(b.clone());
                Lin::basis(a)
            });
        }
        let mut out = Lin::zero();
        for (pairs, c) in &decorations {
            let tp = t.with_labels(pairs);
            let p = self.target.a.as_ref();
            let (ta, tb, e) = tree_double(&tp, |x: &P::E| p.degree(x), |g: &Gen| self.res.free.gens.degree(g));
            let images: Vec<Lin<P::E>> = ta.labels().into_iter().map(Lin::basis).collect();
            let composed = eval_tree(p, &ta, &images);
            let s = c * sign_q(e);
            for (x, k) in &composed {
                out.add_term((x.clone(), tb.clone()), k * &s);
            }
        }
        out
    }

    pub fn chain_failures(&self, cap: usize) -> Vec<Gen> {
        chain_failures(&self.src, self.target.as_ref(), &self.on_gens, cap)
    }

    /// `Ω((S⊗Θ)^∨)` on a tree of the resolution of `Q`, landing in that of `R`:
    /// `s⁻¹(S_n⊗q)^∨ ↦ Σ_r ⟨q^∨, Θ(r)⟩ s⁻¹(S_n⊗r)^∨`.
    pub fn omega_dual<R: Operad + 'static>(
        &self,
        theta: &OperadMorphism<R, QO>,
        res_r: &Resolution<Arc<R>>,
        t: &Tree<Gen>,
    ) -> Lin<Tree<Gen>> {
        self.res.free.extend(res_r, t, 0, |g| {
            let (n, x) = &self.res.elems[g];
            let mut v = Lin::zero();
            for r in theta.src.basis(*n) {
                let k = theta.apply(&r).coeff(x);
                if !k.is_zero() {
                    v.add_term(res_r.generator(&(*n, r)), k);
                }
            }
            v
        })
    }

    /// `hom(B(S⊗Q), P) → P ⊗ Ω((S⊗Q)^∨)`: a basis map `(c, p)` goes to
    /// `p ⊗ c^∨`, and `(s x_1 ⊗ … ⊗ s x_k)^∨ = (−1)^{Σ_{i<j}|sx_i||sx_j|} Π(sx_i)^∨`
    /// with `(s x)^∨ = (−1)^{|x|} s⁻¹x^∨`.
    pub fn from_convolution(&self, bar: &BarSQ<QO>, f: &Lin<(Tree<Gen>, P::E)>) -> Lin<(P::E, Tree<Gen>)> {
        let mut out = Lin::zero();
        for ((c, p), k) in f {
            let labs = c.labels();
            let degs: Vec<i64> = labs.iter().map(|g| bar.free.gens.degree(g)).collect();
            let mut e: i64 = degs.iter().map(|d| d - 1).sum();
            for i in 0..degs.len() {
                for j in i + 1..degs.len() {
                    e += degs[i] * degs[j];
                }
            }
            let new: Vec<Gen> = labs.iter().map(|g| self.res.gen_of(&bar.elems[g])).collect();
            out.add_term((p.clone(), c.with_labels(&new)), k * sign_q(e));
        }
        out
    }
}

/// `(Ψ ⊗ 1)` on `Q ⊗ X`.
pub fn push_tensor<X: Ord + Clone, QO: Operad + 'static, P: Operad + 'static>(
    psi: &OperadMorphism<QO, P>,
    f: &Lin<(QO::E, X)>,
) -> Lin<(P::E, X)> {
    let mut out = Lin::zero();
    for ((q, x), k) in f {
        for (p, kp) in &psi.apply(q) {
            out.add_term((p.clone(), x.clone()), k * kp);
        }
    }
    out
}
