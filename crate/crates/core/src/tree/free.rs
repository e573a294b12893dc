//! Generating S-modules and the free (quasi-free) operad on them.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::exact::scalar::sign_q;
use crate::exact::{Lin, Perm};
use crate::operad::Operad;

use super::{act_tree, eval_tree, graft, shapes_on, Tree};

/// A generator: `(arity, index)`.
pub type Gen = (usize, usize);

type GenAction = Arc<dyn Fn(&Gen, &Perm) -> Lin<Gen> + Send + Sync>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenInfo {
    pub label: String,
    pub degree: i64,
}

/// A finite S-module given by a basis per arity and the action on it.
#[derive(Clone)]
pub struct SMod {
    pub name: String,
    pub symmetric: bool,
    pub gens: BTreeMap<usize, Vec<GenInfo>>,
    act: GenAction,
}

impl fmt::Debug for SMod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SMod").field("name", &self.name).field("gens", &self.gens).finish()
    }
}

impl SMod {
    pub fn new<F>(name: &str, symmetric: bool, gens: BTreeMap<usize, Vec<GenInfo>>, act: F) -> SMod
    where
        F: Fn(&Gen, &Perm) -> Lin<Gen> + Send + Sync + 'static,
    {
        SMod { name: name.to_string(), symmetric, gens, act: Arc::new(act) }
    }

    /// The basis of `op` in the given arities, with the induced action.
    pub fn from_operad<O>(op: Arc<O>, arities: &[usize], label: impl Fn(&O::E) -> String) -> SMod
    where
        O: Operad + 'static,
    {
        let mut gens = BTreeMap::new();
        let mut index: BTreeMap<O::E, Gen> = BTreeMap::new();
        let mut elems: BTreeMap<Gen, O::E> = BTreeMap::new();
        for &n in arities {
            let b = op.basis(n);
            let infos = b.iter().map(|e| GenInfo { label: label(e), degree: op.degree(e) }).collect();
            for (k, e) in b.into_iter().enumerate() {
                index.insert(e.clone(), (n, k));
                elems.insert((n, k), e);
            }
            gens.insert(n, infos);
        }
        let symmetric = op.symmetric();
        let name = op.name();
        SMod::new(&name, symmetric, gens, move |g, s| op.act(&elems[g], s).map_keys(|e| index[e]))
    }

    pub fn degree(&self, g: &Gen) -> i64 {
        self.gens[&g.0][g.1].degree
    }

    pub fn label(&self, g: &Gen) -> &str {
        &self.gens[&g.0][g.1].label
    }

    pub fn act(&self, g: &Gen, s: &Perm) -> Lin<Gen> {
        if s.is_identity() {
            return Lin::basis(*g);
        }
        (self.act)(g, s)
    }

    pub fn basis(&self, n: usize) -> Vec<Gen> {
        self.gens.get(&n).map(|v| (0..v.len()).map(|k| (n, k)).collect()).unwrap_or_default()
    }

    pub fn find(&self, label: &str) -> Option<Gen> {
        self.gens.iter().find_map(|(n, v)| v.iter().position(|g| g.label == label).map(|k| (*n, k)))
    }
}

/// Trees on `gens` with at most `weight_cap` vertices; compositions beyond the
/// cap vanish. An optional differential on generators makes it quasi-free.
#[derive(Clone, Debug)]
pub struct FreeOperad {
    pub gens: SMod,
    pub weight_cap: usize,
    pub dgen: BTreeMap<Gen, Lin<Tree<Gen>>>,
}

impl FreeOperad {
    pub fn new(gens: SMod, weight_cap: usize) -> FreeOperad {
        FreeOperad { gens, weight_cap, dgen: BTreeMap::new() }
    }

    pub fn with_differential(gens: SMod, weight_cap: usize, dgen: BTreeMap<Gen, Lin<Tree<Gen>>>) -> FreeOperad {
        FreeOperad { gens, weight_cap, dgen }
    }

    pub fn corolla(&self, g: Gen) -> Tree<Gen> {
        Tree::corolla(g, g.0)
    }

    pub fn tree_degree(&self, t: &Tree<Gen>) -> i64 {
        t.labels().iter().map(|g| self.gens.degree(g)).sum()
    }

    /// Extends `f` (of degree `df`) on generators to trees, evaluating in `op`.
    pub fn extend<O: Operad + ?Sized, F: Fn(&Gen) -> Lin<O::E>>(&self, op: &O, t: &Tree<Gen>, df: i64, f: F) -> Lin<O::E> {
        let labs = t.labels();
        let mut e = 0;
        let mut before = 0;
        for g in &labs {
            e += df * before;
            before += self.gens.degree(g);
        }
        let images: Vec<Lin<O::E>> = labs.iter().map(&f).collect();
        eval_tree(op, t, &images).scaled(&sign_q(e))
    }

    pub fn to_json(&self, t: &Tree<Gen>) -> serde_json::Value {
        super::to_json(t, &|g: &Gen| self.gens.label(g).to_string())
    }
}

impl Operad for FreeOperad {
    type E = Tree<Gen>;

    fn name(&self) -> String {
        format!("T({})", self.gens.name)
    }

    fn symmetric(&self) -> bool {
        self.gens.symmetric
    }

    fn arity(&self, e: &Tree<Gen>) -> usize {
        e.arity()
    }

    fn degree(&self, e: &Tree<Gen>) -> i64 {
        self.tree_degree(e)
    }

    fn unit(&self) -> Lin<Tree<Gen>> {
        Lin::basis(Tree::Leaf(0))
    }

    fn compose(&self, a: &Tree<Gen>, i: usize, b: &Tree<Gen>) -> Lin<Tree<Gen>> {
        if a.weight() + b.weight() > self.weight_cap {
            return Lin::zero();
        }
        let (t, e) = graft(a, i, b, |g| self.gens.degree(g));
        Lin::term(t, sign_q(e))
    }

    fn act(&self, a: &Tree<Gen>, s: &Perm) -> Lin<Tree<Gen>> {
        if s.is_identity() {
            return Lin::basis(a.clone());
        }
        act_tree(a, s, |g| self.gens.degree(g), |g, p| self.gens.act(g, p))
    }

    fn diff(&self, a: &Tree<Gen>) -> Lin<Tree<Gen>> {
        if self.dgen.is_empty() {
            return Lin::zero();
        }
        let labs = a.labels();
        let mut out = Lin::zero();
        let mut before = 0;
        for v in 0..labs.len() {
            if let Some(dv) = self.dgen.get(&labs[v]) {
                let images: Vec<Lin<Tree<Gen>>> = labs
                    .iter()
                    .enumerate()
                    .map(|(u, g)| if u == v { dv.clone() } else { Lin::basis(self.corolla(*g)) })
                    .collect();
                out.add_scaled(&eval_tree(self, a, &images), &sign_q(before));
            }
            before += self.gens.degree(&labs[v]);
        }
        out
    }

    fn basis(&self, n: usize) -> Vec<Tree<Gen>> {
        let leaves: Vec<usize> = (0..n).collect();
        let allowed = |k: usize| self.gens.gens.get(&k).is_some_and(|v| !v.is_empty());
        let mut out = Vec::new();
        for shape in shapes_on(&leaves, self.weight_cap, &allowed, !self.gens.symmetric) {
            decorate(&shape, &self.gens, &mut out);
        }
        out.sort();
        out
    }
}

/// All decorations of a shape by generator basis elements.
pub fn decorate(shape: &Tree<()>, gens: &SMod, out: &mut Vec<Tree<Gen>>) {
    // arities in canonical order
    let arities: Vec<usize> = {
        let t = shape.map_labels(&mut |_| 0usize);
        fn fill(t: &Tree<usize>) -> Tree<usize> {
            match t {
                Tree::Leaf(j) => Tree::Leaf(*j),
                Tree::Node(_, ch) => Tree::Node(ch.len(), ch.iter().map(fill).collect()),
            }
        }
        fill(&t).labels()
    };
    let mut combos: Vec<Vec<Gen>> = vec![vec![]];
    for a in arities {
        let b = gens.basis(a);
        combos = combos
            .into_iter()
            .flat_map(|c| {
                b.iter().map(move |g| {
                    let mut c = c.clone();
                    c.push(*g);
                    c
                })
            })
            .collect();
    }
    for c in combos {
        out.push(shape.with_labels(&c));
    }
}
