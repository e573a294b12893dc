//! Symmetric groups, shuffles and the Koszul sign rule.
//!
//! A permutation is stored by its images on `0..n`. Composition is composition
//! of functions, so right actions satisfy `(x^s)^t = x^(s.compose(t))`.
//! The left action on tensors moves the factor in position `i` to position
//! `s(i)`, i.e. `s.(v_1 .. v_n) = ±v_{s^-1(1)} .. v_{s^-1(n)}`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::scalar::{sgn, sign_q, Q};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PermError {
    #[error("images {0:?} do not form a permutation")]
    NotBijective(Vec<usize>),
    #[error("permutation of {perm} letters applied to {degrees} degrees")]
    LengthMismatch { perm: usize, degrees: usize },
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub struct Perm(Vec<usize>);

impl Perm {
    pub fn identity(n: usize) -> Perm {
        Perm((0..n).collect())
    }

    pub fn new(images: Vec<usize>) -> Result<Perm, PermError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(PermError::NotBijective(images));
            }
            seen[i] = true;
        }
        Ok(Perm(images))
    }

    /// From 1-based images, as written in the literature.
    pub fn from_one_based(images: &[usize]) -> Result<Perm, PermError> {
        if images.contains(&0) {
            return Err(PermError::NotBijective(images.to_vec()));
        }
        Perm::new(images.iter().map(|i| i - 1).collect())
    }

    /// The transposition of positions `i` and `j` (0-based).
    pub fn transposition(n: usize, i: usize, j: usize) -> Perm {
        let mut v: Vec<usize> = (0..n).collect();
        v.swap(i, j);
        Perm(v)
    }

    /// Cycle `c[0] -> c[1] -> ... -> c[0]` (0-based letters).
    pub fn cycle(n: usize, c: &[usize]) -> Perm {
        let mut v: Vec<usize> = (0..n).collect();
        for k in 0..c.len() {
            v[c[k]] = c[(k + 1) % c.len()];
        }
        Perm(v)
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm(other.0.iter().map(|&i| self.0[i]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut v = vec![0; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            v[j] = i;
        }
        Perm(v)
    }

    pub fn inversions(&self) -> usize {
        let mut c = 0;
        for i in 0..self.0.len() {
            for j in i + 1..self.0.len() {
                if self.0[i] > self.0[j] {
                    c += 1;
                }
            }
        }
        c
    }

    pub fn sign(&self) -> i64 {
        sgn(self.inversions() as i64)
    }

    /// The permutation sorting `keys` increasingly: position `i` goes to the
    /// rank of `keys[i]`. Keys must be distinct.
    pub fn sorting<T: Ord>(keys: &[T]) -> Perm {
        let mut idx: Vec<usize> = (0..keys.len()).collect();
        idx.sort_by(|&a, &b| keys[a].cmp(&keys[b]));
        // idx[r] = position holding rank r
        Perm(idx).inverse()
    }

    /// Block sum `self ⊕ other` acting on `0..n+m`.
    pub fn block_sum(&self, other: &Perm) -> Perm {
        let n = self.n();
        let mut v = self.0.clone();
        v.extend(other.0.iter().map(|&i| i + n));
        Perm(v)
    }

    /// Rearranges `items` by the left action: the item at position `i` lands at `self(i)`.
    pub fn act_on<T: Clone>(&self, items: &[T]) -> Vec<T> {
        let mut out: Vec<Option<T>> = vec![None; items.len()];
        for (i, x) in items.iter().enumerate() {
            out[self.0[i]] = Some(x.clone());
        }
        out.into_iter().map(|x| x.unwrap()).collect()
    }

    pub fn one_based(&self) -> Vec<usize> {
        self.0.iter().map(|i| i + 1).collect()
    }
}

/// All permutations of `0..n` in lexicographic order of image sequences.
pub fn all_perms(n: usize) -> Vec<Perm> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fn rec(n: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Perm>) {
        if cur.len() == n {
            out.push(Perm(cur.clone()));
            return;
        }
        for i in 0..n {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                rec(n, cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    rec(n, &mut cur, &mut used, &mut out);
    out
}

/// Sign of the Koszul rule for the left action of `perm` on homogeneous
/// factors of the given degrees (listed in their original positions).
pub fn koszul_sign(perm: &Perm, degrees: &[i64]) -> Result<Q, PermError> {
    if perm.n() != degrees.len() {
        return Err(PermError::LengthMismatch { perm: perm.n(), degrees: degrees.len() });
    }
    Ok(sign_q(koszul_exponent(perm, degrees)))
}

/// Exponent form of [`koszul_sign`]; panics on length mismatch.
pub fn koszul_exponent(perm: &Perm, degrees: &[i64]) -> i64 {
    assert_eq!(perm.n(), degrees.len());
    let mut e = 0i64;
    for i in 0..degrees.len() {
        if degrees[i] % 2 == 0 {
            continue;
        }
        for j in i + 1..degrees.len() {
            if degrees[j] % 2 != 0 && perm.0[i] > perm.0[j] {
                e += 1;
            }
        }
    }
    e
}

/// Koszul exponent of reordering items whose target positions are given by
/// `targets` (distinct, arbitrary ordered keys).
pub fn koszul_exponent_by_keys<T: Ord>(targets: &[T], degrees: &[i64]) -> i64 {
    let mut e = 0i64;
    for i in 0..degrees.len() {
        if degrees[i] % 2 == 0 {
            continue;
        }
        for j in i + 1..degrees.len() {
            if degrees[j] % 2 != 0 && targets[i] > targets[j] {
                e += 1;
            }
        }
    }
    e
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub struct Shuffle {
    pub perm: Perm,
    pub blocks: Vec<usize>,
}

/// All `(n_1,…,n_k)`-shuffles: permutations increasing on each consecutive
/// block, in lexicographic order of image sequences.
pub fn enumerate_shuffles(blocks: &[usize]) -> Vec<Shuffle> {
    let n: usize = blocks.iter().sum();
    let mut block_of = Vec::with_capacity(n);
    for (b, &sz) in blocks.iter().enumerate() {
        block_of.extend(std::iter::repeat(b).take(sz));
    }
    // assign target positions 0..n in increasing order to blocks: a word w with
    // w[p] = block receiving target p; within a block, targets increase.
    let mut out = Vec::new();
    let mut counts = blocks.to_vec();
    let mut word = Vec::with_capacity(n);
    fn rec(counts: &mut Vec<usize>, word: &mut Vec<usize>, n: usize, out: &mut Vec<Vec<usize>>) {
        if word.len() == n {
            out.push(word.clone());
            return;
        }
        for b in 0..counts.len() {
            if counts[b] > 0 {
                counts[b] -= 1;
                word.push(b);
                rec(counts, word, n, out);
                word.pop();
                counts[b] += 1;
            }
        }
    }
    let mut words = Vec::new();
    rec(&mut counts, &mut word, n, &mut words);
    let starts: Vec<usize> = blocks
        .iter()
        .scan(0, |acc, &b| {
            let s = *acc;
            *acc += b;
            Some(s)
        })
        .collect();
    for w in words {
        let mut images = vec![0; n];
        let mut next = starts.clone();
        for (p, &b) in w.iter().enumerate() {
            images[next[b]] = p;
            next[b] += 1;
        }
        out.push(Shuffle { perm: Perm(images), blocks: blocks.to_vec() });
    }
    out.sort();
    out
}

pub fn is_shuffle(perm: &Perm, blocks: &[usize]) -> bool {
    let mut start = 0;
    for &b in blocks {
        for i in start..start + b {
            if i + 1 < start + b && perm.0[i] > perm.0[i + 1] {
                return false;
            }
        }
        start += b;
    }
    start == perm.n()
}
