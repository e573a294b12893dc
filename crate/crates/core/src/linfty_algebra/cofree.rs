//! Words in the cofree coalgebras `Sym^c(sV)` and `T^c(sV)`, coderivations
//! and coalgebra maps given by their corestrictions.
//!
//! A word is a list of basis indices of `sV`. In `Sym^c` words are kept
//! sorted; a repeated odd letter kills the word.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::exact::perm::koszul_exponent_by_keys;
use crate::exact::scalar::{qone, sign_q};
use crate::exact::{Lin, Q};

pub type Word = Vec<usize>;

/// `Lie`: brackets on `Sym^c(sV)`; `Ass`: products on `T^c(sV)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Kind {
    Lie,
    Ass,
}

/// Sorts a word (Koszul sign in `deg`); `None` when an odd letter repeats.
pub fn normalize(kind: Kind, deg: &[i64], w: &[usize]) -> Option<(Word, Q)> {
    if kind == Kind::Ass {
        return Some((w.to_vec(), qone()));
    }
    let keys: Vec<(usize, usize)> = w.iter().enumerate().map(|(i, &x)| (x, i)).collect();
    let degs: Vec<i64> = w.iter().map(|&x| deg[x]).collect();
    let e = koszul_exponent_by_keys(&keys, &degs);
    let mut s = w.to_vec();
    s.sort();
    if s.windows(2).any(|p| p[0] == p[1] && deg[p[0]] % 2 != 0) {
        return None;
    }
    Some((s, sign_q(e)))
}

pub fn push_word(out: &mut Lin<Word>, kind: Kind, deg: &[i64], w: &[usize], c: &Q) {
    if let Some((s, e)) = normalize(kind, deg, w) {
        out.add_term(s, c * e);
    }
}

pub fn normalize_lin(kind: Kind, deg: &[i64], v: &Lin<Word>) -> Lin<Word> {
    let mut out = Lin::zero();
    for (w, c) in v {
        push_word(&mut out, kind, deg, w, c);
    }
    out
}

/// Koszul exponent of bringing `w` into the order `first ++ rest`
/// (position lists).
fn split_exponent(deg: &[i64], w: &[usize], first: &[usize], rest: &[usize]) -> i64 {
    let mut target = vec![0usize; w.len()];
    for (r, &i) in first.iter().chain(rest.iter()).enumerate() {
        target[i] = r;
    }
    let degs: Vec<i64> = w.iter().map(|&x| deg[x]).collect();
    koszul_exponent_by_keys(&target, &degs)
}

/// Nonempty subsets of `0..n` as increasing position lists, with complements.
pub fn subsets(n: usize) -> Vec<(Vec<usize>, Vec<usize>)> {
    (1u32..(1 << n))
        .map(|m| {
            let (a, b): (Vec<usize>, Vec<usize>) = (0..n).partition(|&i| m & (1 << i) != 0);
            (a, b)
        })
        .collect()
}

/// Set partitions of `0..n`, blocks increasing and ordered by their minima.
pub fn set_partitions(n: usize) -> Vec<Vec<Vec<usize>>> {
    let mut out: Vec<Vec<Vec<usize>>> = vec![vec![]];
    for i in 0..n {
        let mut next = Vec::new();
        for p in out {
            for b in 0..p.len() {
                let mut q = p.clone();
                q[b].push(i);
                next.push(q);
            }
            let mut q = p;
            q.push(vec![i]);
            next.push(q);
        }
        out = next;
    }
    out
}

/// Compositions of `0..n` into consecutive blocks.
pub fn interval_partitions(n: usize) -> Vec<Vec<Vec<usize>>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for cuts in 0u32..(1 << (n - 1)) {
        let mut blocks = vec![vec![0]];
        for i in 1..n {
            if cuts & (1 << (i - 1)) != 0 {
                blocks.push(vec![i]);
            } else {
                blocks.last_mut().unwrap().push(i);
            }
        }
        out.push(blocks);
    }
    out
}

/// The partitions relevant to `kind`, each with the Koszul sign of
/// reordering `w` into the concatenation of its blocks.
pub fn partitions(kind: Kind, deg: &[i64], w: &[usize]) -> Vec<(Vec<Word>, Q)> {
    let n = w.len();
    let ps = match kind {
        Kind::Lie => set_partitions(n),
        Kind::Ass => interval_partitions(n),
    };
    ps.into_iter()
        .map(|bl| {
            let flat: Vec<usize> = bl.concat();
            let e = if kind == Kind::Lie { split_exponent(deg, w, &flat, &[]) } else { 0 };
            (bl.iter().map(|b| b.iter().map(|&i| w[i]).collect()).collect(), sign_q(e))
        })
        .collect()
}

/// The coderivation with corestriction `q` (odd) applied to a word.
pub fn coderivation<F>(kind: Kind, deg: &[i64], q: F, w: &[usize]) -> Lin<Word>
where
    F: Fn(&[usize]) -> Lin<usize>,
{
    let mut out = Lin::zero();
    match kind {
        Kind::Lie => {
            for (s, r) in subsets(w.len()) {
                let ws: Word = s.iter().map(|&i| w[i]).collect();
                let wr: Word = r.iter().map(|&i| w[i]).collect();
                let eps = sign_q(split_exponent(deg, w, &s, &r));
                for (o, c) in &q(&ws) {
                    let mut u = vec![*o];
                    u.extend_from_slice(&wr);
                    push_word(&mut out, kind, deg, &u, &(c * &eps));
                }
            }
        }
        Kind::Ass => {
            let n = w.len();
            let mut pre = 0i64;
            for i in 0..n {
                let eps = sign_q(pre);
                for k in 1..=n - i {
                    for (o, c) in &q(&w[i..i + k]) {
                        let mut u = w[..i].to_vec();
                        u.push(*o);
                        u.extend_from_slice(&w[i + k..]);
                        out.add_term(u, c * &eps);
                    }
                }
                pre += deg[w[i]];
            }
        }
    }
    out
}

/// Tensor (or symmetric) product of vectors, as words in the target.
pub fn product(kind: Kind, deg: &[i64], parts: &[Lin<usize>]) -> Lin<Word> {
    let mut acc: Lin<Word> = Lin::basis(vec![]);
    for p in parts {
        let mut next = Lin::zero();
        for (w, c) in &acc {
            for (x, k) in p {
                let mut u = w.clone();
                u.push(*x);
                next.add_term(u, c * k);
            }
        }
        acc = next;
        if acc.is_zero() {
            return acc;
        }
    }
    normalize_lin(kind, deg, &acc)
}

/// The coalgebra map with even corestriction `f` applied to a word.
pub fn coalgebra_map<F>(kind: Kind, deg_src: &[i64], deg_tgt: &[i64], f: F, w: &[usize]) -> Lin<Word>
where
    F: Fn(&[usize]) -> Lin<usize>,
{
    let mut out = Lin::zero();
    for (blocks, eps) in partitions(kind, deg_src, w) {
        let parts: Vec<Lin<usize>> = blocks.iter().map(|b| f(b)).collect();
        if parts.iter().any(|p| p.is_zero()) {
            continue;
        }
        out.add_scaled(&product(kind, deg_tgt, &parts), &eps);
    }
    out
}

/// All normalized words of length `1..=len` over `0..dim`.
pub fn words(kind: Kind, deg: &[i64], len: usize) -> Vec<Word> {
    let dim = deg.len();
    let mut out = Vec::new();
    let mut layer: Vec<Word> = vec![vec![]];
    for _ in 0..len {
        let mut next = Vec::new();
        for w in &layer {
            let start = if kind == Kind::Lie { w.last().copied().unwrap_or(0) } else { 0 };
            for x in start..dim {
                if kind == Kind::Lie && w.last() == Some(&x) && deg[x] % 2 != 0 {
                    continue;
                }
                let mut u = w.clone();
                u.push(x);
                next.push(u);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// `pr₁` of a vector of words under a family of corestrictions.
pub fn corestrict<F>(v: &Lin<Word>, f: F) -> Lin<usize>
where
    F: Fn(&[usize]) -> Lin<usize>,
{
    let mut out = Lin::zero();
    for (w, c) in v {
        if !c.is_zero() {
            out.add_scaled(&f(w), c);
        }
    }
    out
}
