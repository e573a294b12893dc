//! `B(P) = (T^c(sP̄), d₁ + d₂)`, weight-truncated.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use crate::exact::scalar::sign_q;
use crate::exact::{Lin, Perm};
use crate::operad::dual::Cooperad;
use crate::operad::{transpositions, Operad};
use crate::tree::free::{decorate, GenInfo};
use crate::tree::{eval_tree, reorder_exponent, split_at, FreeOperad, Gen, SMod, Tree};

use super::BarCobarError;

pub struct Bar<O: Operad> {
    pub op: Arc<O>,
    pub arity_cap: usize,
    /// Trees on the suspended generators; used for bases, grafting and the action.
    pub free: FreeOperad,
    pub elems: BTreeMap<Gen, O::E>,
    pub index: BTreeMap<O::E, Gen>,
    monomial: bool,
    two_vertex: BTreeMap<usize, Vec<Tree<Gen>>>,
}

/// Generators `s x` (or `s⁻¹ x`) for the basis of `op` in arities `2..=cap`.
pub(crate) fn shifted_gens<O, F>(op: &Arc<O>, cap: usize, shift: i64, label: F) -> (SMod, BTreeMap<Gen, O::E>, BTreeMap<O::E, Gen>)
where
    O: Operad + 'static,
    F: Fn(&O::E) -> String,
{
    let mut gens = BTreeMap::new();
    let mut elems = BTreeMap::new();
    let mut index = BTreeMap::new();
    for n in 2..=cap {
        let b = op.basis(n);
        gens.insert(n, b.iter().map(|e| GenInfo { label: label(e), degree: op.degree(e) + shift }).collect());
        for (k, e) in b.into_iter().enumerate() {
            elems.insert((n, k), e.clone());
            index.insert(e, (n, k));
        }
    }
    let (o, el, ix) = (op.clone(), elems.clone(), index.clone());
    let smod = SMod::new(&format!("s^{}({})", shift, op.name()), op.symmetric(), gens, move |g, s| {
        o.act(&el[g], s).map_keys(|e| ix[e])
    });
    (smod, elems, index)
}

/// The basis of a cooperad in arities `2..=cap` as generators (no action);
/// enough to enumerate decorated trees.
pub(crate) fn basis_smod<C: Cooperad + ?Sized>(c: &C, cap: usize) -> SMod {
    let gens = (2..=cap)
        .map(|n| (n, c.basis(n).iter().map(|e| GenInfo { label: format!("{:?}", e), degree: c.degree(e) }).collect()))
        .collect();
    SMod::new(&c.name(), c.symmetric(), gens, |g, _| Lin::basis(*g))
}

/// Whether every transposition acts on the generators by signed permutations.
pub(crate) fn is_monomial(gens: &SMod, cap: usize) -> bool {
    if !gens.symmetric {
        return true;
    }
    (2..=cap).all(|n| {
        gens.basis(n).iter().all(|g| transpositions(n).iter().all(|s| {
            let v = gens.act(g, s);
            v.len() == 1 && v.iter().all(|(_, c)| crate::exact::scalar::is_sign(c))
        }))
    })
}

/// Canonical two-vertex trees on `n` leaves decorated by `gens`.
pub(crate) fn two_vertex_trees(gens: &SMod, n: usize) -> Vec<Tree<Gen>> {
    let leaves: Vec<usize> = (0..n).collect();
    let allowed = |k: usize| gens.gens.get(&k).is_some_and(|v| !v.is_empty());
    let mut out = Vec::new();
    for shape in crate::tree::shapes_on(&leaves, 2, &allowed, !gens.symmetric) {
        if shape.weight() == 2 {
            decorate(&shape, gens, &mut out);
        }
    }
    out
}

impl<O: Operad + 'static> Bar<O> {
    pub fn new<F: Fn(&O::E) -> String>(op: Arc<O>, arity_cap: usize, weight_cap: usize, label: F) -> Result<Self, BarCobarError> {
        let u = op.unit();
        if !op.basis(0).is_empty() || op.basis(1).len() != 1 || u.len() != 1 || u.first().map(|(k, _)| k) != op.basis(1).first() {
            return Err(BarCobarError::NotAugmented(op.name()));
        }
        let (gens, elems, index) = shifted_gens(&op, arity_cap, 1, |e| format!("s{}", label(e)));
        let monomial = is_monomial(&gens, arity_cap);
        let two_vertex = (3..=arity_cap).map(|n| (n, two_vertex_trees(&gens, n))).collect();
        let free = FreeOperad::new(gens, weight_cap);
        Ok(Bar { op, arity_cap, free, elems, index, monomial, two_vertex })
    }

    pub fn weight_cap(&self) -> usize {
        self.free.weight_cap
    }

    fn deg(&self, g: &Gen) -> i64 {
        self.free.gens.degree(g)
    }

    /// The weight-one tree `s x`.
    pub fn corolla_of(&self, x: &O::E) -> Tree<Gen> {
        self.free.corolla(self.index[x])
    }

    /// `d₁`: the internal differential, `d(s x) = −s(dx)`, as a coderivation.
    fn d1(&self, t: &Tree<Gen>) -> Lin<Tree<Gen>> {
        let labs = t.labels();
        let mut out = Lin::zero();
        let mut before = 0;
        for (v, g) in labs.iter().enumerate() {
            let dx = self.op.diff(&self.elems[g]);
            if !dx.is_zero() {
                for (e, c) in &dx {
                    let mut l = labs.clone();
                    l[v] = self.index[e];
                    out.add_term(t.with_labels(&l), -c * sign_q(before));
                }
            }
            before += self.deg(g);
        }
        out
    }

    /// `d₂`: contracts each inner edge, `sμ ⊗ sν ↦ (−1)^{|μ|} s(μ ∘ ν)`.
    fn d2(&self, t: &Tree<Gen>) -> Lin<Tree<Gen>> {
        let tagged = t.tagged();
        let canon: Vec<usize> = tagged.labels().into_iter().map(|(_, k)| k).collect();
        let pre = t.labels_preorder();
        let mut out = Lin::zero();
        let mut edges = Vec::new();
        collect_edges(&tagged, &mut edges);
        for (u, v) in edges {
            // move v right after u in the tensor
            let mut moved: Vec<usize> = canon.iter().copied().filter(|&k| k != v).collect();
            let pu = moved.iter().position(|&k| k == u).unwrap();
            moved.insert(pu + 1, v);
            let e1 = reorder_exponent(&canon, &moved, |k| self.deg(&pre[*k]));
            // the degree −1 map passes the labels in front of the pair
            let e0: i64 = moved[..pu].iter().map(|k| self.deg(&pre[*k])).sum();
            let (local, merged_children) = local_edge(&tagged, u, v);
            let xu = &self.elems[&pre[u]];
            let xv = &self.elems[&pre[v]];
            let val = eval_tree(self.op.as_ref(), &local, &[Lin::basis(xu.clone()), Lin::basis(xv.clone())]);
            if val.is_zero() {
                continue;
            }
            let du = self.op.degree(xu);
            let merged_deg = du + self.op.degree(xv) + 1;
            let mut seq = moved.clone();
            seq.remove(pu + 1);
            for (x, c) in &val {
                let g = self.index[x];
                let nt = replace_vertex(&tagged, u, &(g, u), &merged_children);
                let to: Vec<usize> = nt.labels().into_iter().map(|(_, k)| k).collect();
                let e2 = reorder_exponent(&seq, &to, |k| if *k == u { merged_deg } else { self.deg(&pre[*k]) });
                out.add_term(nt.map_labels(&mut |(l, _)| *l), c * sign_q(e0 + e1 + e2 + du));
            }
        }
        out
    }

    fn act_candidates(&self, c: &Tree<Gen>, s: &Perm) -> Lin<Tree<Gen>> {
        let mut shapes = BTreeSet::new();
        for (t, _) in &self.free.act(c, &s.inverse()) {
            shapes.insert(t.shape());
        }
        let mut out = Lin::zero();
        for sh in shapes {
            let mut cands = Vec::new();
            decorate(&sh, &self.free.gens, &mut cands);
            for cand in cands {
                let k = self.free.act(&cand, s).coeff(c);
                out.add_term(cand, k);
            }
        }
        out
    }
}

/// Inner edges as `(parent tag, child tag)`.
fn collect_edges(t: &Tree<(Gen, usize)>, out: &mut Vec<(usize, usize)>) {
    if let Tree::Node((_, u), ch) = t {
        for c in ch {
            if let Tree::Node((_, v), _) = c {
                out.push((*u, *v));
            }
            collect_edges(c, out);
        }
    }
}

fn find_tag(t: &Tree<(Gen, usize)>, tag: usize) -> Option<&Tree<(Gen, usize)>> {
    match t {
        Tree::Node((_, k), ch) => {
            if *k == tag {
                return Some(t);
            }
            ch.iter().find_map(|c| find_tag(c, tag))
        }
        Tree::Leaf(_) => None,
    }
}

/// The two-vertex tree of an edge `u → v` with local leaves ranked by the
/// smallest leaf of each input, and the inputs of the merged vertex in order.
fn local_edge(t: &Tree<(Gen, usize)>, u: usize, v: usize) -> (Tree<Gen>, Vec<Tree<(Gen, usize)>>) {
    let Some(Tree::Node((gu, _), ch)) = find_tag(t, u) else { unreachable!() };
    let mut inputs: Vec<Tree<(Gen, usize)>> = Vec::new();
    let mut gv = None;
    for c in ch {
        match c {
            Tree::Node((g, k), cc) if *k == v => {
                gv = Some(*g);
                inputs.extend(cc.iter().cloned());
            }
            _ => inputs.push(c.clone()),
        }
    }
    inputs.sort_by_key(|c| c.min_leaf());
    let rank = |c: &Tree<(Gen, usize)>| inputs.iter().position(|x| x.min_leaf() == c.min_leaf()).unwrap();
    let local = Tree::Node(
        *gu,
        ch.iter()
            .map(|c| match c {
                Tree::Node((_, k), cc) if *k == v => Tree::Node(gv.unwrap(), cc.iter().map(|x| Tree::Leaf(rank(x))).collect()),
                _ => Tree::Leaf(rank(c)),
            })
            .collect(),
    );
    (local, inputs)
}

fn replace_vertex(t: &Tree<(Gen, usize)>, tag: usize, label: &(Gen, usize), children: &[Tree<(Gen, usize)>]) -> Tree<(Gen, usize)> {
    match t {
        Tree::Leaf(j) => Tree::Leaf(*j),
        Tree::Node((g, k), ch) => {
            if *k == tag {
                Tree::Node(*label, children.to_vec())
            } else {
                Tree::Node((*g, *k), ch.iter().map(|c| replace_vertex(c, tag, label, children)).collect())
            }
        }
    }
}

/// All ways to blow the vertex `tag` of `t` up into the two-vertex tree `local`.
fn expand_vertex(t: &Tree<(Gen, usize)>, tag: usize, local: &Tree<Gen>) -> Tree<Gen> {
    match t {
        Tree::Leaf(j) => Tree::Leaf(*j),
        Tree::Node((g, k), ch) => {
            let ch: Vec<Tree<Gen>> = ch.iter().map(|c| expand_vertex(c, tag, local)).collect();
            if *k == tag {
                fn sub(l: &Tree<Gen>, ch: &[Tree<Gen>]) -> Tree<Gen> {
                    match l {
                        Tree::Leaf(r) => ch[*r].clone(),
                        Tree::Node(g, cc) => Tree::Node(*g, cc.iter().map(|c| sub(c, ch)).collect()),
                    }
                }
                sub(local, &ch)
            } else {
                Tree::Node(*g, ch)
            }
        }
    }
}

impl<O: Operad + 'static> Cooperad for Bar<O> {
    type E = Tree<Gen>;

    fn name(&self) -> String {
        format!("B({})", self.op.name())
    }
    fn symmetric(&self) -> bool {
        self.op.symmetric()
    }
    fn arity(&self, c: &Tree<Gen>) -> usize {
        c.arity()
    }
    fn degree(&self, c: &Tree<Gen>) -> i64 {
        self.free.tree_degree(c)
    }
    fn counit(&self) -> Lin<Tree<Gen>> {
        Lin::basis(Tree::Leaf(0))
    }
    fn basis(&self, n: usize) -> Vec<Tree<Gen>> {
        if n > self.arity_cap {
            return vec![];
        }
        self.free.basis(n)
    }
    fn decompose(&self, c: &Tree<Gen>, i: usize, n: usize) -> Lin<(Tree<Gen>, Tree<Gen>)> {
        match split_at(c, i, n, |g| self.deg(g)) {
            Some((a, b, e)) => Lin::term((a, b), sign_q(e)),
            None => Lin::zero(),
        }
    }
    fn decompose_transpose(&self, a: &Tree<Gen>, i: usize, b: &Tree<Gen>) -> Lin<Tree<Gen>> {
        self.free.compose(a, i, b)
    }
    fn act(&self, c: &Tree<Gen>, s: &Perm) -> Lin<Tree<Gen>> {
        self.free.act(c, s)
    }
    fn act_transpose(&self, c: &Tree<Gen>, s: &Perm) -> Lin<Tree<Gen>> {
        if self.monomial {
            // signed permutation matrices are orthogonal
            return self.free.act(c, &s.inverse());
        }
        self.act_candidates(c, s)
    }
    fn diff(&self, c: &Tree<Gen>) -> Lin<Tree<Gen>> {
        let mut out = self.d1(c);
        out.add_scaled(&self.d2(c), &crate::exact::scalar::qone());
        out
    }
    fn diff_transpose(&self, c: &Tree<Gen>) -> Lin<Tree<Gen>> {
        let mut cands = BTreeSet::new();
        // d₁ keeps the shape
        let mut same = Vec::new();
        decorate(&c.shape(), &self.free.gens, &mut same);
        cands.extend(same);
        if c.weight() < self.weight_cap() {
            let tagged = c.tagged();
            for tag in 0..c.weight() {
                let Some(Tree::Node(_, ch)) = find_tag(&tagged, tag) else { continue };
                if let Some(locals) = self.two_vertex.get(&ch.len()) {
                    for l in locals {
                        cands.insert(expand_vertex(&tagged, tag, l));
                    }
                }
            }
        }
        let mut out = Lin::zero();
        for cand in cands {
            let k = self.diff(&cand).coeff(c);
            out.add_term(cand, k);
        }
        out
    }
}
