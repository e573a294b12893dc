//! Rooted trees with labelled leaves, the atoms of free operads and cofree cooperads.
//!
//! A tree is canonical when the children of every vertex are sorted by their
//! smallest leaf. The tensor of vertex labels is read in the order
//! (depth, smallest leaf); every Koszul sign in this module comes from
//! reordering that tensor.

pub mod free;

use std::fmt::Debug;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::exact::perm::{koszul_exponent_by_keys, Perm};
use crate::exact::scalar::sign_q;
use crate::exact::Lin;
use crate::operad::{act_lin, gamma, Operad};

pub use free::{FreeOperad, Gen, SMod};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub enum Tree<L> {
    Leaf(usize),
    Node(L, Vec<Tree<L>>),
}

impl<L: Clone + Ord + Debug> Tree<L> {
    pub fn corolla(l: L, n: usize) -> Tree<L> {
        Tree::Node(l, (0..n).map(Tree::Leaf).collect())
    }

    pub fn arity(&self) -> usize {
        match self {
            Tree::Leaf(_) => 1,
            Tree::Node(_, ch) => ch.iter().map(|c| c.arity()).sum(),
        }
    }

    pub fn weight(&self) -> usize {
        match self {
            Tree::Leaf(_) => 0,
            Tree::Node(_, ch) => 1 + ch.iter().map(|c| c.weight()).sum::<usize>(),
        }
    }

    pub fn min_leaf(&self) -> usize {
        match self {
            Tree::Leaf(j) => *j,
            Tree::Node(_, ch) => ch.iter().map(|c| c.min_leaf()).min().unwrap(),
        }
    }

    /// Leaf labels read from left to right.
    pub fn leaves(&self) -> Vec<usize> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves(&self, out: &mut Vec<usize>) {
        match self {
            Tree::Leaf(j) => out.push(*j),
            Tree::Node(_, ch) => ch.iter().for_each(|c| c.collect_leaves(out)),
        }
    }

    pub fn root_label(&self) -> Option<&L> {
        match self {
            Tree::Leaf(_) => None,
            Tree::Node(l, _) => Some(l),
        }
    }

    pub fn map_labels<M, F: FnMut(&L) -> M>(&self, f: &mut F) -> Tree<M> {
        match self {
            Tree::Leaf(j) => Tree::Leaf(*j),
            Tree::Node(l, ch) => {
                let m = f(l);
                Tree::Node(m, ch.iter().map(|c| c.map_labels(f)).collect())
            }
        }
    }

    pub fn map_leaves<F: Fn(usize) -> usize>(&self, f: &F) -> Tree<L> {
        match self {
            Tree::Leaf(j) => Tree::Leaf(f(*j)),
            Tree::Node(l, ch) => Tree::Node(l.clone(), ch.iter().map(|c| c.map_leaves(f)).collect()),
        }
    }

    pub fn is_canonical(&self) -> bool {
        match self {
            Tree::Leaf(_) => true,
            Tree::Node(_, ch) => {
                ch.windows(2).all(|w| w[0].min_leaf() < w[1].min_leaf()) && ch.iter().all(|c| c.is_canonical())
            }
        }
    }

    /// Leaves form an interval at every vertex, read in increasing order.
    pub fn is_planar(&self) -> bool {
        let l = self.leaves();
        l.windows(2).all(|w| w[0] + 1 == w[1])
    }

    /// Labels in canonical (depth, smallest leaf) order.
    pub fn labels(&self) -> Vec<L> {
        let mut v: Vec<(usize, usize, L)> = Vec::new();
        fn walk<L: Clone + Ord + Debug>(t: &Tree<L>, depth: usize, v: &mut Vec<(usize, usize, L)>) {
            if let Tree::Node(l, ch) = t {
                v.push((depth, t.min_leaf(), l.clone()));
                for c in ch {
                    walk(c, depth + 1, v);
                }
            }
        }
        walk(self, 0, &mut v);
        v.sort_by(|a, b| (a.0, a.1).cmp(&(b.0, b.1)));
        v.into_iter().map(|x| x.2).collect()
    }

    /// Labels in preorder (vertex before its children, children left to right).
    pub fn labels_preorder(&self) -> Vec<L> {
        let mut out = Vec::new();
        fn walk<L: Clone>(t: &Tree<L>, out: &mut Vec<L>) {
            if let Tree::Node(l, ch) = t {
                out.push(l.clone());
                ch.iter().for_each(|c| walk(c, out));
            }
        }
        walk(self, &mut out);
        out
    }

    /// Replaces labels, taken in canonical order.
    pub fn with_labels<M: Clone + Ord + Debug>(&self, labels: &[M]) -> Tree<M> {
        let tagged = self.tagged();
        let order = tagged.labels();
        // order[k] = (label, preorder tag); assign labels[k] to that tag
        let mut by_tag: Vec<Option<M>> = vec![None; order.len()];
        for (k, (_, tag)) in order.iter().enumerate() {
            by_tag[*tag] = Some(labels[k].clone());
        }
        tagged.map_labels(&mut |(_, tag)| by_tag[*tag].clone().unwrap())
    }

    /// Tags each label with its preorder position.
    pub fn tagged(&self) -> Tree<(L, usize)> {
        let mut k = 0;
        fn walk<L: Clone>(t: &Tree<L>, k: &mut usize) -> Tree<(L, usize)> {
            match t {
                Tree::Leaf(j) => Tree::Leaf(*j),
                Tree::Node(l, ch) => {
                    let me = *k;
                    *k += 1;
                    Tree::Node((l.clone(), me), ch.iter().map(|c| walk(c, k)).collect())
                }
            }
        }
        walk(self, &mut k)
    }

    pub fn shape(&self) -> Tree<()> {
        self.map_labels(&mut |_| ())
    }
}

/// Koszul exponent of passing from the order of `tags_from` to `tags_to`.
/// Both list the same distinct tags; `deg(tag)` gives degrees.
pub fn reorder_exponent<T: Ord + Clone, D: Fn(&T) -> i64>(tags_from: &[T], tags_to: &[T], deg: D) -> i64 {
    let pos: std::collections::BTreeMap<&T, usize> = tags_to.iter().enumerate().map(|(i, t)| (t, i)).collect();
    let targets: Vec<usize> = tags_from.iter().map(|t| pos[t]).collect();
    let degs: Vec<i64> = tags_from.iter().map(|t| deg(t)).collect();
    koszul_exponent_by_keys(&targets, &degs)
}

/// `t1 ∘_i t2` by grafting; returns the canonical tree and the Koszul sign
/// of moving the labels of `t1 ⊗ t2` into canonical order.
pub fn graft<L: Clone + Ord + Debug, D: Fn(&L) -> i64>(t1: &Tree<L>, i: usize, t2: &Tree<L>, deg: D) -> (Tree<L>, i64) {
    let n = t2.arity();
    let a: Tree<(L, usize)> = t1.tagged();
    let w1 = t1.weight();
    let b: Tree<(L, usize)> = t2.tagged().map_labels(&mut |(l, k)| (l.clone(), k + w1));
    let b = b.map_leaves(&|j| j + i);
    fn ins<L: Clone + Ord + Debug>(t: &Tree<L>, i: usize, n: usize, b: &Tree<L>) -> Tree<L> {
        match t {
            Tree::Leaf(j) if *j == i => b.clone(),
            Tree::Leaf(j) if *j > i => Tree::Leaf(j + n - 1),
            Tree::Leaf(j) => Tree::Leaf(*j),
            Tree::Node(l, ch) => Tree::Node(l.clone(), ch.iter().map(|c| ins(c, i, n, b)).collect()),
        }
    }
    let g = ins(&a, i, n, &b);
    let from: Vec<usize> = (0..w1 + t2.weight()).collect();
    let to: Vec<usize> = g.labels().into_iter().map(|(_, k)| k).collect();
    let labels_from: Vec<L> = {
        let mut v = t1.labels_preorder();
        v.extend(t2.labels_preorder());
        v
    };
    // preorder tags of t1 then t2, but the tensor order of each factor is canonical
    let c1: Vec<usize> = t1.tagged().labels().into_iter().map(|(_, k)| k).collect();
    let c2: Vec<usize> = t2.tagged().labels().into_iter().map(|(_, k)| k + w1).collect();
    let mut canon_from = c1;
    canon_from.extend(c2);
    let e = reorder_exponent(&canon_from, &to, |k| deg(&labels_from[*k]));
    let _ = from;
    (g.map_labels(&mut |(l, _)| l.clone()), e)
}

/// Sorts children by smallest leaf at every vertex, returning for each
/// preorder tag the permutation `π` (new slot `j` held old slot `π(j)`).
fn sort_children<L: Clone + Ord + Debug>(t: &Tree<(L, usize)>, perms: &mut Vec<(usize, Perm)>) -> Tree<(L, usize)> {
    match t {
        Tree::Leaf(j) => Tree::Leaf(*j),
        Tree::Node((l, tag), ch) => {
            let ch: Vec<Tree<(L, usize)>> = ch.iter().map(|c| sort_children(c, perms)).collect();
            let mut idx: Vec<usize> = (0..ch.len()).collect();
            idx.sort_by_key(|&k| ch[k].min_leaf());
            let pi = Perm::new(idx.clone()).unwrap();
            perms.push((*tag, pi));
            Tree::Node((l.clone(), *tag), idx.iter().map(|&k| ch[k].clone()).collect())
        }
    }
}

/// The right action `t^σ`: leaf `j` becomes `σ⁻¹(j)`, children are re-sorted,
/// each reordered vertex label `x` becomes `x^π`, and the label tensor picks up
/// the Koszul sign of its new canonical order.
pub fn act_tree<L, D, A>(t: &Tree<L>, s: &Perm, deg: D, label_act: A) -> Lin<Tree<L>>
where
    L: Clone + Ord + Debug,
    D: Fn(&L) -> i64,
    A: Fn(&L, &Perm) -> Lin<L>,
{
    let sinv = s.inverse();
    let tagged = t.tagged().map_leaves(&|j| sinv.apply(j));
    let from: Vec<usize> = t.tagged().labels().into_iter().map(|(_, k)| k).collect();
    let mut perms = Vec::new();
    let sorted = sort_children(&tagged, &mut perms);
    let to: Vec<usize> = sorted.labels().into_iter().map(|(_, k)| k).collect();
    let pre = t.labels_preorder();
    let e = reorder_exponent(&from, &to, |k| deg(&pre[*k]));
    // expand label actions
    let mut choices: Vec<Lin<L>> = vec![Lin::zero(); pre.len()];
    for (tag, pi) in perms {
        choices[tag] = if pi.is_identity() { Lin::basis(pre[tag].clone()) } else { label_act(&pre[tag], &pi) };
    }
    let mut acc: Lin<Vec<L>> = Lin::basis(Vec::new());
    for c in &choices {
        acc = acc.bilinear(c, |v, l| {
            let mut v = v.clone();
            v.push(l.clone());
            Lin::basis(v)
        });
    }
    let mut out = Lin::zero();
    for (labs, coeff) in &acc {
        let tr = sorted.map_labels(&mut |(_, tag)| labs[*tag].clone());
        out.add_term(tr, coeff * sign_q(e));
    }
    out
}

/// Monadic evaluation: the vertex labels replaced by `images` (canonical
/// order), composed in `op` following the tree. The images are moved into
/// preorder with their Koszul sign and composed left to right.
pub fn eval_tree<O: Operad + ?Sized, L: Clone + Ord + Debug>(op: &O, t: &Tree<L>, images: &[Lin<O::E>]) -> Lin<O::E> {
    if let Tree::Leaf(_) = t {
        return op.unit();
    }
    let mut degs = Vec::with_capacity(images.len());
    for im in images {
        match im.keys().next() {
            None => return Lin::zero(),
            Some(k) => degs.push(op.degree(k)),
        }
    }
    let tagged = t.tagged();
    let canon: Vec<usize> = tagged.labels().into_iter().map(|(_, k)| k).collect();
    // images by preorder tag
    let mut by_tag: Vec<Option<(&Lin<O::E>, i64)>> = vec![None; images.len()];
    for (pos, tag) in canon.iter().enumerate() {
        by_tag[*tag] = Some((&images[pos], degs[pos]));
    }
    let pre: Vec<usize> = (0..images.len()).collect();
    let e = reorder_exponent(&canon, &pre, |k| by_tag[*k].unwrap().1);
    fn planar<O: Operad + ?Sized, L: Clone + Ord + Debug>(
        op: &O,
        t: &Tree<(L, usize)>,
        by_tag: &[Option<(&Lin<O::E>, i64)>],
    ) -> Lin<O::E> {
        match t {
            Tree::Leaf(_) => op.unit(),
            Tree::Node((_, tag), ch) => {
                let ys: Vec<Lin<O::E>> = ch.iter().map(|c| planar(op, c, by_tag)).collect();
                gamma(op, by_tag[*tag].unwrap().0, &ys)
            }
        }
    }
    let p = planar(op, &tagged, &by_tag);
    let reading = Perm::new(t.leaves()).expect("leaves are a permutation");
    act_lin(op, &p, &reading.inverse()).scaled(&sign_q(e))
}

/// Splits `t` as `t' ∘_i t''` with `t''` of arity `n`. Returns
/// `(t', t'', sign)` or `None` when no vertex carries exactly the block of
/// leaves `i..i+n`. The unit is the leaf `Leaf(0)`.
pub fn split_at<L: Clone + Ord + Debug, D: Fn(&L) -> i64>(
    t: &Tree<L>,
    i: usize,
    n: usize,
    deg: D,
) -> Option<(Tree<L>, Tree<L>, i64)> {
    let total = t.arity();
    if n == 1 {
        return Some((t.clone(), Tree::Leaf(0), 0));
    }
    if n == total && i == 0 {
        return Some((Tree::Leaf(0), t.clone(), 0));
    }
    let tagged = t.tagged();
    fn leafset<L: Clone + Ord + Debug>(t: &Tree<L>) -> Vec<usize> {
        let mut l = t.leaves();
        l.sort();
        l
    }
    let block: Vec<usize> = (i..i + n).collect();
    fn find<L: Clone + Ord + Debug>(t: &Tree<(L, usize)>, block: &[usize]) -> Option<Tree<(L, usize)>> {
        if let Tree::Node(_, ch) = t {
            if leafset(t) == block {
                return Some(t.clone());
            }
            for c in ch {
                if let Some(s) = find(c, block) {
                    return Some(s);
                }
            }
        }
        None
    }
    let sub = find(&tagged, &block)?;
    fn cut<L: Clone + Ord + Debug>(t: &Tree<(L, usize)>, sub: &Tree<(L, usize)>, i: usize, n: usize) -> Tree<(L, usize)> {
        if t == sub {
            return Tree::Leaf(i);
        }
        match t {
            Tree::Leaf(j) if *j > i => Tree::Leaf(j - (n - 1)),
            Tree::Leaf(j) => Tree::Leaf(*j),
            Tree::Node(l, ch) => Tree::Node(l.clone(), ch.iter().map(|c| cut(c, sub, i, n)).collect()),
        }
    }
    let upper = cut(&tagged, &sub, i, n);
    let lower = sub.map_leaves(&|j| j - i);
    let pre = t.labels_preorder();
    let from: Vec<usize> = tagged.labels().into_iter().map(|(_, k)| k).collect();
    let mut to: Vec<usize> = upper.labels().into_iter().map(|(_, k)| k).collect();
    to.extend(lower.labels().into_iter().map(|(_, k)| k));
    let e = reorder_exponent(&from, &to, |k| deg(&pre[*k]));
    Some((upper.map_labels(&mut |(l, _)| l.clone()), lower.map_labels(&mut |(l, _)| l.clone()), e))
}

/// Admissible cuts: an upper part containing the root (possibly empty) and
/// the forest of subtrees hanging below it. Returns `(upper, lower)` with the
/// upper part as a tree whose leaves are the roots of `lower` (and original leaves).
pub fn admissible_cuts<L: Clone + Ord + Debug>(t: &Tree<L>) -> Vec<(Option<Tree<()>>, Vec<Tree<L>>)> {
    // represent choices by the set of kept vertices: upward closed
    fn rec<L: Clone + Ord + Debug>(t: &Tree<L>) -> Vec<(Option<Tree<()>>, Vec<Tree<L>>)> {
        match t {
            Tree::Leaf(j) => vec![(None, vec![Tree::Leaf(*j)])],
            Tree::Node(_, ch) => {
                // either cut above this vertex, or keep it and recurse
                let mut out = vec![(None, vec![t.clone()])];
                let mut combos: Vec<(Vec<Tree<()>>, Vec<Tree<L>>)> = vec![(vec![], vec![])];
                for c in ch {
                    let sub = rec(c);
                    let mut next = Vec::new();
                    for (ups, lows) in &combos {
                        for (u, l) in &sub {
                            let mut ups = ups.clone();
                            ups.push(u.clone().unwrap_or(Tree::Leaf(c.min_leaf())));
                            let mut lows = lows.clone();
                            lows.extend(l.iter().cloned());
                            next.push((ups, lows));
                        }
                    }
                    combos = next;
                }
                for (ups, lows) in combos {
                    out.push((Some(Tree::Node((), ups)), lows));
                }
                out
            }
        }
    }
    rec(t)
}

/// Φ: a tree labelled by pairs goes to the pair of trees, with the sign of
/// separating `(m₁⊗n₁)⊗(m₂⊗n₂)⊗…` into `(m₁⊗m₂⊗…)⊗(n₁⊗n₂⊗…)`.
pub fn tree_double<A, B, DA, DB>(t: &Tree<(A, B)>, deg_a: DA, deg_b: DB) -> (Tree<A>, Tree<B>, i64)
where
    A: Clone + Ord + Debug,
    B: Clone + Ord + Debug,
    DA: Fn(&A) -> i64,
    DB: Fn(&B) -> i64,
{
    let labs = t.labels();
    let mut e = 0;
    for i in 0..labs.len() {
        for j in i + 1..labs.len() {
            e += deg_b(&labs[i].1) * deg_a(&labs[j].0);
        }
    }
    (t.map_labels(&mut |(a, _)| a.clone()), t.map_labels(&mut |(_, b)| b.clone()), e)
}

/// The switch map on a fixed shape: inverse of [`tree_double`].
pub fn switch_map<A, B, DA, DB>(ta: &Tree<A>, tb: &Tree<B>, deg_a: DA, deg_b: DB) -> Option<(Tree<(A, B)>, i64)>
where
    A: Clone + Ord + Debug,
    B: Clone + Ord + Debug,
    DA: Fn(&A) -> i64,
    DB: Fn(&B) -> i64,
{
    if ta.shape() != tb.shape() {
        return None;
    }
    let la = ta.labels();
    let lb = tb.labels();
    let pairs: Vec<(A, B)> = la.into_iter().zip(lb).collect();
    let t = ta.with_labels(&pairs);
    let (_, _, e) = tree_double(&t, deg_a, deg_b);
    Some((t, e))
}

/// Nested list form: a leaf is its 1-based label, a vertex is `[label, children…]`.
pub fn to_json<L, F: Fn(&L) -> String>(t: &Tree<L>, name: &F) -> Value {
    match t {
        Tree::Leaf(j) => json!(j + 1),
        Tree::Node(l, ch) => {
            let mut v = vec![json!(name(l))];
            v.extend(ch.iter().map(|c| to_json(c, name)));
            Value::Array(v)
        }
    }
}

pub fn from_json<L: Clone + Ord + Debug, F: Fn(&str) -> Option<L>>(v: &Value, parse: &F) -> Option<Tree<L>> {
    match v {
        Value::Number(n) => n.as_u64().filter(|&k| k >= 1).map(|k| Tree::Leaf(k as usize - 1)),
        Value::Array(items) if !items.is_empty() => {
            let l = parse(items[0].as_str()?)?;
            let ch: Option<Vec<Tree<L>>> = items[1..].iter().map(|c| from_json(c, parse)).collect();
            Some(Tree::Node(l, ch?))
        }
        _ => None,
    }
}

/// All canonical tree shapes on the leaf set `leaves`, at most `max_w` vertices.
/// `allowed(k)` says whether vertices of arity `k` exist; `planar` keeps only
/// shapes whose vertices carry intervals of leaves.
pub fn shapes_on(leaves: &[usize], max_w: usize, allowed: &dyn Fn(usize) -> bool, planar: bool) -> Vec<Tree<()>> {
    let mut out = Vec::new();
    if leaves.len() == 1 {
        out.push(Tree::Leaf(leaves[0]));
    }
    if max_w == 0 {
        return out;
    }
    for k in 1..=leaves.len() {
        if !allowed(k) {
            continue;
        }
        for blocks in set_partitions(leaves, k, planar) {
            // distribute the remaining weight budget
            let mut partial: Vec<(Vec<Tree<()>>, usize)> = vec![(vec![], 0)];
            for b in &blocks {
                let mut next = Vec::new();
                for (ts, used) in &partial {
                    let budget = max_w - 1 - used;
                    for s in shapes_on(b, budget, allowed, planar) {
                        let w = s.weight();
                        let mut ts = ts.clone();
                        ts.push(s);
                        next.push((ts, used + w));
                    }
                }
                partial = next;
            }
            for (ts, _) in partial {
                out.push(Tree::Node((), ts));
            }
        }
    }
    out
}

/// Set partitions of `items` into exactly `k` blocks, blocks sorted by smallest
/// element (and contiguous intervals only when `planar`).
pub fn set_partitions(items: &[usize], k: usize, planar: bool) -> Vec<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    if planar {
        // compositions of the interval
        fn rec(items: &[usize], k: usize, cur: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
            if k == 0 {
                if items.is_empty() {
                    out.push(cur.clone());
                }
                return;
            }
            for len in 1..=items.len() {
                cur.push(items[..len].to_vec());
                rec(&items[len..], k - 1, cur, out);
                cur.pop();
            }
        }
        rec(items, k, &mut vec![], &mut out);
        return out;
    }
    fn rec(items: &[usize], idx: usize, k: usize, cur: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
        if idx == items.len() {
            if cur.len() == k {
                out.push(cur.clone());
            }
            return;
        }
        let remaining = items.len() - idx;
        for b in 0..cur.len() {
            cur[b].push(items[idx]);
            rec(items, idx + 1, k, cur, out);
            cur[b].pop();
        }
        if cur.len() < k && remaining >= k - cur.len() {
            cur.push(vec![items[idx]]);
            rec(items, idx + 1, k, cur, out);
            cur.pop();
        }
    }
    rec(items, 0, k, &mut vec![], &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::scalar::{factorial, q};
    use num_traits::Zero;

    /// EGF oracle: number of trees on `n` labelled leaves with `w` vertices,
    /// all of arity ≥ 2, via `A = x + t(e^A − 1 − A)` solved by iteration on
    /// truncated bivariate series.
    fn schroder_oracle(nmax: usize, wmax: usize) -> Vec<Vec<crate::exact::Q>> {
        // a[n][w] = count / n!
        let mut a = vec![vec![crate::exact::Q::zero(); wmax + 1]; nmax + 1];
        a[1][0] = q(1);
        for _ in 0..=nmax + wmax {
            // e^A − 1 − A = Σ_{k≥2} A^k / k!
            let mut pow = a.clone();
            let mut s = vec![vec![crate::exact::Q::zero(); wmax + 1]; nmax + 1];
            for k in 2..=nmax {
                // pow = A^k
                let mut next = vec![vec![crate::exact::Q::zero(); wmax + 1]; nmax + 1];
                for n1 in 0..=nmax {
                    for w1 in 0..=wmax {
                        if pow[n1][w1].is_zero() {
                            continue;
                        }
                        for n2 in 0..=nmax - n1 {
                            for w2 in 0..=wmax - w1 {
                                if !a[n2][w2].is_zero() {
                                    next[n1 + n2][w1 + w2] += &pow[n1][w1] * &a[n2][w2];
                                }
                            }
                        }
                    }
                }
                pow = next;
                let f = factorial(k);
                for n in 0..=nmax {
                    for w in 0..=wmax {
                        s[n][w] += &pow[n][w] / &f;
                    }
                }
            }
            let mut na = vec![vec![crate::exact::Q::zero(); wmax + 1]; nmax + 1];
            na[1][0] = q(1);
            for n in 0..=nmax {
                for w in 1..=wmax {
                    na[n][w] = s[n][w - 1].clone();
                }
            }
            a = na;
        }
        for n in 0..=nmax {
            for w in 0..=wmax {
                a[n][w] = &a[n][w] * factorial(n);
            }
        }
        a
    }

    #[test]
    fn tree_counts_match_oracle() {
        let oracle = schroder_oracle(6, 5);
        for n in 1..=6 {
            let leaves: Vec<usize> = (0..n).collect();
            let shapes = shapes_on(&leaves, 5, &|k| k >= 2, false);
            for w in 0..=5 {
                let c = shapes.iter().filter(|s| s.weight() == w).count();
                assert_eq!(q(c as i64), oracle[n][w], "n={} w={}", n, w);
            }
            assert!(shapes.iter().all(|s| s.is_canonical()));
        }
        // binary trees on 3 leaves: 3; planar binary on 4 leaves: Catalan 5
        let three = shapes_on(&[0, 1, 2], 2, &|k| k == 2, false);
        assert_eq!(three.len(), 3);
        let planar = shapes_on(&[0, 1, 2, 3], 3, &|k| k == 2, true);
        assert_eq!(planar.len(), 5);
    }

    #[test]
    fn ladder_has_four_cuts() {
        let ladder: Tree<u8> = Tree::Node(0, vec![Tree::Node(1, vec![Tree::Node(2, vec![Tree::Leaf(0), Tree::Leaf(1)]), Tree::Leaf(2)]), Tree::Leaf(3)]);
        assert_eq!(admissible_cuts(&ladder).len(), 4);
        let cherry: Tree<u8> =
            Tree::Node(0, vec![Tree::Node(1, vec![Tree::Leaf(0), Tree::Leaf(1)]), Tree::Node(2, vec![Tree::Leaf(2), Tree::Leaf(3)])]);
        assert_eq!(admissible_cuts(&cherry).len(), 5);
    }

    #[test]
    fn json_round_trip() {
        let t: Tree<String> = Tree::Node("b".into(), vec![Tree::Node("b".into(), vec![Tree::Leaf(0), Tree::Leaf(2)]), Tree::Leaf(1)]);
        let v = to_json(&t, &|l: &String| l.clone());
        assert_eq!(v.to_string(), r#"["b",["b",1,3],2]"#);
        assert_eq!(from_json(&v, &|s: &str| Some(s.to_string())), Some(t));
    }

    #[test]
    fn doubling_signs() {
        // two vertices with odd labels on both sides: moving n₁ past m₂ gives −1
        let t: Tree<(i64, i64)> = Tree::Node((1, 1), vec![Tree::Node((1, 1), vec![Tree::Leaf(0), Tree::Leaf(1)]), Tree::Leaf(2)]);
        let (a, b, e) = tree_double(&t, |x| *x, |y| *y);
        assert_eq!(sign_q(e), q(-1));
        let (back, e2) = switch_map(&a, &b, |x| *x, |y| *y).unwrap();
        assert_eq!(back, t);
        assert_eq!(e, e2);
        let c: Tree<(i64, i64)> = Tree::corolla((1, 1), 2);
        assert_eq!(tree_double(&c, |x| *x, |y| *y).2, 0);
    }
}
