//! Finite formal linear combinations over `Q`, keyed by ordered basis labels.

use std::collections::btree_map;
use std::collections::BTreeMap;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Zero};

use super::scalar::Q;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Lin<K: Ord> {
    terms: BTreeMap<K, Q>,
}

impl<K: Ord> Default for Lin<K> {
    fn default() -> Self {
        Lin { terms: BTreeMap::new() }
    }
}

impl<K: Ord + Clone> Lin<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(k: K) -> Self {
        Self::term(k, Q::one())
    }

    pub fn term(k: K, c: Q) -> Self {
        let mut l = Self::zero();
        l.add_term(k, c);
        l
    }

    pub fn add_term(&mut self, k: K, c: Q) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(k) {
            btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Lin<K>, c: &Q) {
        if c.is_zero() {
            return;
        }
        for (k, v) in other.iter() {
            self.add_term(k.clone(), v * c);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, k: &K) -> Q {
        self.terms.get(k).cloned().unwrap_or_else(Q::zero)
    }

    pub fn iter(&self) -> btree_map::Iter<'_, K, Q> {
        self.terms.iter()
    }

    pub fn keys(&self) -> btree_map::Keys<'_, K, Q> {
        self.terms.keys()
    }

    pub fn into_terms(self) -> BTreeMap<K, Q> {
        self.terms
    }

    pub fn scaled(&self, c: &Q) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Lin {
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    pub fn remove(&mut self, k: &K) -> Option<Q> {
        self.terms.remove(k)
    }

    pub fn first(&self) -> Option<(&K, &Q)> {
        self.terms.iter().next()
    }

    pub fn last(&self) -> Option<(&K, &Q)> {
        self.terms.iter().next_back()
    }

    /// Linear extension of `f` on basis elements.
    pub fn map<K2: Ord + Clone, F: FnMut(&K) -> Lin<K2>>(&self, mut f: F) -> Lin<K2> {
        let mut out = Lin::zero();
        for (k, c) in self.iter() {
            out.add_scaled(&f(k), c);
        }
        out
    }

    pub fn map_keys<K2: Ord + Clone, F: FnMut(&K) -> K2>(&self, mut f: F) -> Lin<K2> {
        let mut out = Lin::zero();
        for (k, c) in self.iter() {
            out.add_term(f(k), c.clone());
        }
        out
    }

    pub fn filter<F: FnMut(&K) -> bool>(&self, mut f: F) -> Self {
        Lin {
            terms: self.terms.iter().filter(|(k, _)| f(k)).map(|(k, v)| (k.clone(), v.clone())).collect(),
        }
    }

    /// Bilinear extension of `f`.
    pub fn bilinear<K2: Ord + Clone, K3: Ord + Clone, F: FnMut(&K, &K2) -> Lin<K3>>(
        &self,
        other: &Lin<K2>,
        mut f: F,
    ) -> Lin<K3> {
        let mut out = Lin::zero();
        for (a, ca) in self.iter() {
            for (b, cb) in other.iter() {
                let c = ca * cb;
                out.add_scaled(&f(a, b), &c);
            }
        }
        out
    }

    pub fn tensor<K2: Ord + Clone>(&self, other: &Lin<K2>) -> Lin<(K, K2)> {
        self.bilinear(other, |a, b| Lin::basis((a.clone(), b.clone())))
    }
}

impl<K: Ord + Clone> FromIterator<(K, Q)> for Lin<K> {
    fn from_iter<I: IntoIterator<Item = (K, Q)>>(iter: I) -> Self {
        let mut l = Lin::zero();
        for (k, c) in iter {
            l.add_term(k, c);
        }
        l
    }
}

impl<'a, K: Ord> IntoIterator for &'a Lin<K> {
    type Item = (&'a K, &'a Q);
    type IntoIter = btree_map::Iter<'a, K, Q>;
    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}

impl<K: Ord + Clone> AddAssign<&Lin<K>> for Lin<K> {
    fn add_assign(&mut self, rhs: &Lin<K>) {
        for (k, v) in rhs.iter() {
            self.add_term(k.clone(), v.clone());
        }
    }
}

impl<K: Ord + Clone> AddAssign<Lin<K>> for Lin<K> {
    fn add_assign(&mut self, rhs: Lin<K>) {
        for (k, v) in rhs.terms {
            self.add_term(k, v);
        }
    }
}

impl<K: Ord + Clone> SubAssign<&Lin<K>> for Lin<K> {
    fn sub_assign(&mut self, rhs: &Lin<K>) {
        for (k, v) in rhs.iter() {
            self.add_term(k.clone(), -v.clone());
        }
    }
}

impl<K: Ord + Clone> Add for Lin<K> {
    type Output = Lin<K>;
    fn add(mut self, rhs: Lin<K>) -> Lin<K> {
        self += rhs;
        self
    }
}

impl<K: Ord + Clone> Sub for Lin<K> {
    type Output = Lin<K>;
    fn sub(mut self, rhs: Lin<K>) -> Lin<K> {
        self -= &rhs;
        self
    }
}

impl<K: Ord + Clone> Neg for Lin<K> {
    type Output = Lin<K>;
    fn neg(self) -> Lin<K> {
        Lin {
            terms: self.terms.into_iter().map(|(k, v)| (k, -v)).collect(),
        }
    }
}

impl<K: Ord + Clone> Mul<&Q> for Lin<K> {
    type Output = Lin<K>;
    fn mul(self, rhs: &Q) -> Lin<K> {
        self.scaled(rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::scalar::q;

    #[test]
    fn cancellation_drops_terms() {
        let mut a = Lin::term("x", q(2));
        a.add_term("y", q(1));
        a.add_term("x", q(-2));
        assert_eq!(a.len(), 1);
        assert_eq!(a.coeff(&"y"), q(1));
        assert!((a.clone() - a).is_zero());
    }

    #[test]
    fn bilinear_extension() {
        let a: Lin<u8> = [(1u8, q(1)), (2u8, q(3))].into_iter().collect();
        let b: Lin<u8> = [(5u8, q(2))].into_iter().collect();
        let t = a.tensor(&b);
        assert_eq!(t.coeff(&(2, 5)), q(6));
    }
}

impl<K: Ord + Clone + serde::Serialize> serde::Serialize for Lin<K> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = s.serialize_seq(Some(self.len()))?;
        for (k, c) in self.iter() {
            seq.serialize_element(&(k, super::scalar::fmt_q(c)))?;
        }
        seq.end()
    }
}

impl<'de, K: Ord + Clone + serde::Deserialize<'de>> serde::Deserialize<'de> for Lin<K> {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v: Vec<(K, String)> = serde::Deserialize::deserialize(d)?;
        let mut out = Lin::zero();
        for (k, c) in v {
            let c = super::scalar::parse_q(&c).ok_or_else(|| serde::de::Error::custom(format!("bad scalar {}", c)))?;
            out.add_term(k, c);
        }
        Ok(out)
    }
}
