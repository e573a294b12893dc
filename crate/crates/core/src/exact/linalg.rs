//! Sparse exact row reduction keyed by ordered basis labels.
//!
//! Each stored row has its largest key as pivot. Reduction eliminates pivots
//! from the top down, so the normal form of a vector is its unique
//! representative in the span of non-pivot keys.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::lin::Lin;
use super::scalar::Q;

#[derive(Clone, Debug)]
pub struct Echelon<K: Ord + Clone> {
    rows: BTreeMap<K, Lin<K>>,
}

impl<K: Ord + Clone> Default for Echelon<K> {
    fn default() -> Self {
        Echelon { rows: BTreeMap::new() }
    }
}

impl<K: Ord + Clone> Echelon<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_pivot(&self, k: &K) -> bool {
        self.rows.contains_key(k)
    }

    pub fn pivots(&self) -> impl Iterator<Item = &K> {
        self.rows.keys()
    }

    pub fn reduce(&self, v: &Lin<K>) -> Lin<K> {
        let mut v = v.clone();
        let mut bound: Option<K> = None;
        loop {
            let next = v
                .keys()
                .rev()
                .filter(|k| bound.as_ref().map_or(true, |b| *k < b))
                .find(|k| self.rows.contains_key(*k))
                .cloned();
            match next {
                None => return v,
                Some(k) => {
                    let c = v.coeff(&k);
                    let row = &self.rows[&k];
                    v.add_scaled(row, &-c);
                    bound = Some(k);
                }
            }
        }
    }

    /// Adds `v` to the span; returns false if it was already there.
    pub fn insert(&mut self, v: &Lin<K>) -> bool {
        let r = self.reduce(v);
        match r.last() {
            None => false,
            Some((k, c)) => {
                let k = k.clone();
                let inv = Q::one() / c;
                self.rows.insert(k, r.scaled(&inv));
                true
            }
        }
    }

    pub fn contains(&self, v: &Lin<K>) -> bool {
        self.reduce(v).is_zero()
    }

    /// Fully inter-reduces the stored rows.
    pub fn interreduce(&mut self) {
        let keys: Vec<K> = self.rows.keys().cloned().collect();
        for k in keys {
            let row = self.rows.remove(&k).unwrap();
            let head = Lin::term(k.clone(), row.coeff(&k));
            let tail = row.filter(|x| *x != k);
            let tail = self.reduce(&tail);
            let mut r = head;
            r += tail;
            self.rows.insert(k, r);
        }
    }
}

/// Solves `sum_j x_j cols[j] = target` for one solution, if any.
pub fn solve<K: Ord + Clone>(cols: &[Lin<K>], target: &Lin<K>) -> Option<Vec<Q>> {
    // augment each column with a tag recording its combination
    #[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
    enum Key<K> {
        Tag(usize),
        Row(K),
    }
    let mut ech: Echelon<Key<K>> = Echelon::new();
    for (j, c) in cols.iter().enumerate() {
        let mut v: Lin<Key<K>> = c.map_keys(|k| Key::Row(k.clone()));
        v.add_term(Key::Tag(j), Q::one());
        ech.insert(&v);
    }
    let t: Lin<Key<K>> = target.map_keys(|k| Key::Row(k.clone()));
    let r = ech.reduce(&t);
    if r.keys().any(|k| matches!(k, Key::Row(_))) {
        return None;
    }
    // t - r lies in the span; r = -sum x_j tag_j
    let mut x = vec![Q::zero(); cols.len()];
    for (k, c) in r.iter() {
        if let Key::Tag(j) = k {
            x[*j] = -c.clone();
        }
    }
    Some(x)
}

/// Rank of a family of vectors.
pub fn rank<K: Ord + Clone>(vecs: &[Lin<K>]) -> usize {
    let mut e = Echelon::new();
    for v in vecs {
        e.insert(v);
    }
    e.rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::scalar::q;

    #[test]
    fn normal_form_is_unique() {
        let mut e = Echelon::new();
        e.insert(&[(0, q(1)), (2, q(1))].into_iter().collect());
        e.insert(&[(1, q(2)), (2, q(1))].into_iter().collect());
        assert_eq!(e.rank(), 1 + 1);
        let v: Lin<i32> = [(2, q(3))].into_iter().collect();
        let nf = e.reduce(&v);
        assert!(nf.keys().all(|k| !e.is_pivot(k)));
        assert!(!e.insert(&[(0, q(1)), (2, q(1))].into_iter().collect()));
    }

    #[test]
    fn solve_small_system() {
        let c1: Lin<u8> = [(0, q(1)), (1, q(1))].into_iter().collect();
        let c2: Lin<u8> = [(1, q(1))].into_iter().collect();
        let t: Lin<u8> = [(0, q(2)), (1, q(5))].into_iter().collect();
        let x = solve(&[c1.clone(), c2.clone()], &t).unwrap();
        let mut back = c1.scaled(&x[0]);
        back.add_scaled(&c2, &x[1]);
        assert_eq!(back, t);
        let bad: Lin<u8> = [(2, q(1))].into_iter().collect();
        assert!(solve(&[c1, c2], &bad).is_none());
    }
}
