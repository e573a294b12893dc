//! `Ω(C) = (T(s⁻¹C̄), d₁ + d₂)`, weight-truncated.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::exact::scalar::sign_q;
use crate::exact::{Lin, Perm};
use crate::operad::dual::Cooperad;
use crate::operad::Operad;
use crate::tree::free::GenInfo;
use crate::tree::{shapes_on, FreeOperad, Gen, SMod, Tree};

use super::BarCobarError;

pub struct Cobar<C: Cooperad> {
    pub c: Arc<C>,
    pub arity_cap: usize,
    pub free: FreeOperad,
    pub elems: BTreeMap<Gen, C::E>,
    pub index: BTreeMap<C::E, Gen>,
}

/// Canonical two-vertex shapes on `n` leaves with the slot `j` of the upper
/// vertex and the leaf reading `ρ`, so that the tree is `(x ∘_j y)^{ρ⁻¹}`.
pub fn two_vertex_shapes(n: usize, planar: bool) -> Vec<(Tree<()>, usize, Perm)> {
    let leaves: Vec<usize> = (0..n).collect();
    let mut out = Vec::new();
    for shape in shapes_on(&leaves, 2, &|k| k >= 2, planar) {
        if shape.weight() != 2 {
            continue;
        }
        let Tree::Node(_, ch) = &shape else { continue };
        let j = ch.iter().position(|c| matches!(c, Tree::Node(..))).unwrap();
        let reading = Perm::new(shape.leaves()).unwrap();
        out.push((shape, j, reading));
    }
    out
}

impl<C: Cooperad + 'static> Cobar<C> {
    pub fn new<F: Fn(&C::E) -> String>(c: Arc<C>, arity_cap: usize, weight_cap: usize, label: F) -> Result<Self, BarCobarError> {
        let cu = c.counit();
        let b1 = c.basis(1);
        if !c.basis(0).is_empty() || b1.len() != 1 || cu != Lin::basis(b1[0].clone()) {
            return Err(BarCobarError::NotConilpotent(c.name()));
        }
        let mut gens = BTreeMap::new();
        let mut elems = BTreeMap::new();
        let mut index = BTreeMap::new();
        for n in 2..=arity_cap {
            let b = c.basis(n);
            gens.insert(n, b.iter().map(|e| GenInfo { label: label(e), degree: c.degree(e) - 1 }).collect());
            for (k, e) in b.into_iter().enumerate() {
                elems.insert((n, k), e.clone());
                index.insert(e, (n, k));
            }
        }
        let (cc, el, ix) = (c.clone(), elems.clone(), index.clone());
        let smod = SMod::new(&format!("s^-1({})", c.name()), c.symmetric(), gens, move |g, s| {
            cc.act(&el[g], s).map_keys(|e| ix[e])
        });
        let mut dgen = BTreeMap::new();
        for n in 2..=arity_cap {
            let shapes = two_vertex_shapes(n, !c.symmetric());
            for k in 0..smod.basis(n).len() {
                let g = (n, k);
                let x = &elems[&g];
                let mut d = Lin::zero();
                // d₁(s⁻¹x) = −s⁻¹(dx)
                for (y, coeff) in &c.diff(x) {
                    d.add_term(Tree::corolla(index[y], n), -coeff.clone());
                }
                // d₂(s⁻¹x) = −Σ (−1)^{|x₁|} s⁻¹x₁ ∘ s⁻¹x₂ over two-vertex trees
                if weight_cap >= 2 {
                    for (shape, j, reading) in &shapes {
                        let Tree::Node(_, ch) = shape else { continue };
                        let n2 = ch[*j].arity();
                        let moved = if reading.is_identity() { Lin::basis(x.clone()) } else { c.act(x, reading) };
                        for (xr, cr) in &moved {
                            for ((x1, x2), c12) in &c.decompose(xr, *j, n2) {
                                let t = shape.with_labels(&[index[x1], index[x2]]);
                                d.add_term(t, -(cr * c12) * sign_q(c.degree(x1)));
                            }
                        }
                    }
                }
                dgen.insert(g, d);
            }
        }
        let free = FreeOperad::with_differential(smod, weight_cap, dgen);
        Ok(Cobar { c, arity_cap, free, elems, index })
    }

    pub fn weight_cap(&self) -> usize {
        self.free.weight_cap
    }

    /// The generator `s⁻¹x` as a corolla.
    pub fn generator(&self, x: &C::E) -> Tree<Gen> {
        self.free.corolla(self.index[x])
    }

    pub fn gen_of(&self, x: &C::E) -> Gen {
        self.index[x]
    }

    pub fn elem(&self, g: &Gen) -> &C::E {
        &self.elems[g]
    }
}

impl<C: Cooperad + 'static> Operad for Cobar<C> {
    type E = Tree<Gen>;
    fn name(&self) -> String {
        format!("Ω({})", self.c.name())
    }
    fn symmetric(&self) -> bool {
        self.free.symmetric()
    }
    fn arity(&self, e: &Tree<Gen>) -> usize {
        e.arity()
    }
    fn degree(&self, e: &Tree<Gen>) -> i64 {
        self.free.tree_degree(e)
    }
    fn unit(&self) -> Lin<Tree<Gen>> {
        self.free.unit()
    }
    fn compose(&self, a: &Tree<Gen>, i: usize, b: &Tree<Gen>) -> Lin<Tree<Gen>> {
        self.free.compose(a, i, b)
    }
    fn act(&self, a: &Tree<Gen>, s: &Perm) -> Lin<Tree<Gen>> {
        self.free.act(a, s)
    }
    fn diff(&self, a: &Tree<Gen>) -> Lin<Tree<Gen>> {
        self.free.diff(a)
    }
    fn basis(&self, n: usize) -> Vec<Tree<Gen>> {
        if n > self.arity_cap {
            return vec![];
        }
        self.free.basis(n)
    }
}
