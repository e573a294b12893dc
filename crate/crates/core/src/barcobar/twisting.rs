//! Twisting morphisms `C → P`, the canonical ones, and the bijections with
//! operad maps `ΩC → P` and cooperad maps `C → BP`.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::Zero;

use crate::exact::scalar::qone;
use crate::exact::Lin;
use crate::operad::convolution::Convolution;
use crate::operad::dual::{Cooperad, Transposed};
use crate::operad::{diff_lin, Operad};
use crate::tree::free::decorate;
use crate::tree::{eval_tree, shapes_on, Gen, Tree};

use super::bar::Bar;
use super::cobar::Cobar;

/// `f ⋆ g` in arity `n` for families `f`, `g` of invariant elements:
/// the sum over two-vertex trees of `f` at the root composed with `g`.
pub fn pre_lie<O: Operad + ?Sized>(
    op: &O,
    f: &BTreeMap<usize, Lin<O::E>>,
    g: &BTreeMap<usize, Lin<O::E>>,
    n: usize,
) -> Lin<O::E> {
    let leaves: Vec<usize> = (0..n).collect();
    let mut out = Lin::zero();
    for shape in shapes_on(&leaves, 2, &|k| k >= 2, !op.symmetric()) {
        if shape.weight() != 2 {
            continue;
        }
        let Tree::Node(_, ch) = &shape else { continue };
        let n1 = ch.len();
        let n2 = ch.iter().find(|c| matches!(c, Tree::Node(..))).unwrap().arity();
        let (Some(a), Some(b)) = (f.get(&n1), g.get(&n2)) else { continue };
        out.add_scaled(&eval_tree(op, &shape, &[a.clone(), b.clone()]), &qone());
    }
    out
}

/// A degree −1 element of the convolution operad, one part per arity.
pub struct Twisting<C: Cooperad, P: Operad> {
    pub conv: Arc<Convolution<C, P>>,
    pub parts: BTreeMap<usize, Lin<(C::E, P::E)>>,
}

impl<C: Cooperad, P: Operad> Twisting<C, P> {
    pub fn new(c: Arc<C>, p: Arc<P>) -> Self {
        Twisting { conv: Arc::new(Convolution::new(c, p)), parts: BTreeMap::new() }
    }

    /// Defines the part of arity `n` by values on the basis of `C(n)`.
    pub fn set<F: Fn(&C::E) -> Lin<P::E>>(&mut self, n: usize, f: F) {
        let cs = self.conv.c.basis(n);
        let v = self.conv.from_fn(&cs, f);
        self.parts.insert(n, v);
    }

    pub fn apply(&self, x: &C::E) -> Lin<P::E> {
        match self.parts.get(&self.conv.c.arity(x)) {
            Some(f) => self.conv.apply(f, &Lin::basis(x.clone())),
            None => Lin::zero(),
        }
    }

    /// `∂α + α ⋆ α` in arity `n`.
    pub fn mc_defect(&self, n: usize) -> Lin<(C::E, P::E)> {
        let mut out = pre_lie(self.conv.as_ref(), &self.parts, &self.parts, n);
        if let Some(a) = self.parts.get(&n) {
            out.add_scaled(&diff_lin(self.conv.as_ref(), a), &qone());
        }
        out
    }

    /// Arities `2..=cap` where the Maurer–Cartan equation fails.
    pub fn mc_failures(&self, cap: usize) -> Vec<usize> {
        (2..=cap).filter(|&n| !self.mc_defect(n).is_zero()).collect()
    }

    pub fn is_equivariant(&self, cap: usize) -> bool {
        self.parts.iter().filter(|(n, _)| **n <= cap).all(|(n, a)| {
            crate::operad::transpositions(*n).iter().all(|s| crate::operad::act_lin(self.conv.as_ref(), a, s) == *a)
        })
    }
}

/// `π : B(P) → P`, projection onto weight one followed by desuspension.
pub fn canonical_pi<O: Operad + 'static>(bar: Arc<Bar<O>>) -> Twisting<Bar<O>, O> {
    let p = bar.op.clone();
    let mut t = Twisting::new(bar.clone(), p);
    for n in 2..=bar.arity_cap {
        let b = bar.clone();
        t.set(n, move |c| match c {
            Tree::Node(g, ch) if ch.iter().all(|x| matches!(x, Tree::Leaf(_))) => Lin::basis(b.elems[g].clone()),
            _ => Lin::zero(),
        });
    }
    t
}

/// `ι : C → ΩC`, the inclusion of generators `x ↦ s⁻¹x`.
pub fn canonical_iota<C: Cooperad + 'static>(cobar: Arc<Cobar<C>>) -> Twisting<C, Cobar<C>> {
    let mut t = Twisting::new(cobar.c.clone(), cobar.clone());
    for n in 2..=cobar.arity_cap {
        let cb = cobar.clone();
        t.set(n, move |x| Lin::basis(cb.generator(x)));
    }
    t
}

/// The operad map `ΩC → P` of a twisting morphism: `s⁻¹x ↦ α(x)`.
pub fn morphism_of<C: Cooperad + 'static, P: Operad>(cobar: &Cobar<C>, alpha: &Twisting<C, P>) -> BTreeMap<Gen, Lin<P::E>> {
    cobar.elems.iter().map(|(g, x)| (*g, alpha.apply(x))).collect()
}

/// The twisting morphism `f ∘ ι` of an operad map given on generators.
pub fn twisting_of<C: Cooperad + 'static, P: Operad>(cobar: &Cobar<C>, p: Arc<P>, f: &BTreeMap<Gen, Lin<P::E>>) -> Twisting<C, P> {
    let mut t = Twisting::new(cobar.c.clone(), p);
    for n in 2..=cobar.arity_cap {
        t.set(n, |x| f.get(&cobar.gen_of(x)).cloned().unwrap_or_else(Lin::zero));
    }
    t
}

/// Arities in which the map `ΩC → P` given on generators fails to commute
/// with the differentials on generators.
pub fn chain_failures<C: Cooperad + 'static, P: Operad>(cobar: &Cobar<C>, p: &P, f: &BTreeMap<Gen, Lin<P::E>>, cap: usize) -> Vec<Gen> {
    let img = |g: &Gen| f.get(g).cloned().unwrap_or_else(Lin::zero);
    let mut bad = Vec::new();
    for (g, dg) in &cobar.free.dgen {
        if g.0 > cap {
            continue;
        }
        let mut lhs = Lin::zero();
        for (t, c) in dg {
            lhs.add_scaled(&cobar.free.extend(p, t, 0, img), c);
        }
        if lhs != diff_lin(p, &img(g)) {
            bad.push(*g);
        }
    }
    bad
}

/// The cooperad map `C → BP` of a twisting morphism, on `x ∈ C(n)`:
/// `Σ_T (sα)^{⊗T}(Δ_T x)` over trees within the weight cap of `bar`.
pub fn bar_morphism_of<C, O>(alpha: &Twisting<C, O>, bar: &Bar<O>, x: &C::E) -> Lin<Tree<Gen>>
where
    C: Cooperad + 'static,
    O: Operad + 'static,
{
    let c = alpha.conv.c.clone();
    let n = c.arity(x);
    if n == 1 {
        return c.counit().map(|_| Lin::basis(Tree::Leaf(0)));
    }
    // decorated trees of C̄, the iterated decomposition read off the transposes
    let cgens = super::bar::basis_smod(c.as_ref(), bar.arity_cap);
    let bases: BTreeMap<usize, Vec<C::E>> = (2..=bar.arity_cap).map(|k| (k, c.basis(k))).collect();
    let tr = Transposed { c: c.clone() };
    let leaves: Vec<usize> = (0..n).collect();
    let mut out = Lin::zero();
    for shape in shapes_on(&leaves, bar.weight_cap(), &|k| k >= 2 && k <= bar.arity_cap, !c.symmetric()) {
        let mut decs = Vec::new();
        decorate(&shape, &cgens, &mut decs);
        for t in decs {
            let labs = t.labels();
            let elems: Vec<C::E> = labs.iter().map(|g| bases[&g.0][g.1].clone()).collect();
            let images: Vec<Lin<C::E>> = elems.iter().map(|e| Lin::basis(e.clone())).collect();
            let k = eval_tree(&tr, &t, &images).coeff(x);
            if k.is_zero() {
                continue;
            }
            // (sα)^{⊗T} has degree 0: no Koszul signs
            let mut acc: Lin<Vec<Gen>> = Lin::basis(vec![]);
            for e in &elems {
                let v = alpha.apply(e).map_keys(|p| bar.index[p]);
                acc = acc.bilinear(&v, |a, g| {
                    let mut a = a.clone();
                    a.push(*g);
                    Lin::basis(a)
                });
            }
            for (ls, cc) in &acc {
                out.add_term(t.with_labels(ls), &k * cc);
            }
        }
    }
    out
}
