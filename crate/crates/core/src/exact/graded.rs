//! Graded based vector spaces, sparse linear maps and the internal hom differential.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::lin::Lin;
use super::scalar::{sign_q, Q};

#[derive(Debug, Error, PartialEq)]
pub enum GradedError {
    #[error("entry {source_index}->{target_index} breaks degree {degree}")]
    Degree { source_index: usize, target_index: usize, degree: i64 },
    #[error("differential does not square to zero")]
    NotDifferential,
    #[error("index {0} out of range")]
    Range(usize),
    #[error("spaces do not match")]
    Mismatch,
}

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct GradedSpace {
    pub name: String,
    pub basis: Vec<(String, i64)>,
    /// column `j` holds `d(e_j)`
    #[serde(default)]
    pub diff: BTreeMap<usize, Lin<usize>>,
}

impl GradedSpace {
    pub fn new(name: &str, basis: Vec<(String, i64)>) -> GradedSpace {
        GradedSpace { name: name.to_string(), basis, diff: BTreeMap::new() }
    }

    pub fn from_degrees(name: &str, degrees: &[i64]) -> GradedSpace {
        let basis = degrees.iter().enumerate().map(|(i, &d)| (format!("{}{}", name, i), d)).collect();
        GradedSpace::new(name, basis)
    }

    pub fn with_differential(mut self, diff: BTreeMap<usize, Lin<usize>>) -> Result<GradedSpace, GradedError> {
        for (&j, col) in &diff {
            if j >= self.dim() {
                return Err(GradedError::Range(j));
            }
            for (&i, _) in col {
                if i >= self.dim() {
                    return Err(GradedError::Range(i));
                }
                if self.basis[i].1 != self.basis[j].1 - 1 {
                    return Err(GradedError::Degree { source_index: j, target_index: i, degree: -1 });
                }
            }
        }
        self.diff = diff.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        for j in 0..self.dim() {
            let dd = self.d_vec(&self.d_vec(&Lin::basis(j)));
            if !dd.is_zero() {
                return Err(GradedError::NotDifferential);
            }
        }
        Ok(self)
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn degree(&self, i: usize) -> i64 {
        self.basis[i].1
    }

    pub fn label(&self, i: usize) -> &str {
        &self.basis[i].0
    }

    pub fn d_vec(&self, v: &Lin<usize>) -> Lin<usize> {
        v.map(|j| self.diff.get(j).cloned().unwrap_or_default())
    }

    pub fn has_differential(&self) -> bool {
        !self.diff.is_empty()
    }

    pub fn shifted(&self, k: i64) -> GradedSpace {
        GradedSpace {
            name: format!("s^{}{}", k, self.name),
            basis: self.basis.iter().map(|(l, d)| (l.clone(), d + k)).collect(),
            diff: self.diff.clone(),
        }
    }

    /// `V ⊗ W` with basis index `i * dim W + j`, differential `d ⊗ 1 + 1 ⊗ d`.
    pub fn tensor(v: &GradedSpace, w: &GradedSpace) -> GradedSpace {
        let mut basis = Vec::with_capacity(v.dim() * w.dim());
        for (lv, dv) in &v.basis {
            for (lw, dw) in &w.basis {
                basis.push((format!("{}⊗{}", lv, lw), dv + dw));
            }
        }
        let mut diff = BTreeMap::new();
        for i in 0..v.dim() {
            for j in 0..w.dim() {
                let mut col = Lin::zero();
                for (&a, c) in v.diff.get(&i).into_iter().flat_map(|c| c.iter()) {
                    col.add_term(a * w.dim() + j, c.clone());
                }
                let s = sign_q(v.degree(i));
                for (&b, c) in w.diff.get(&j).into_iter().flat_map(|c| c.iter()) {
                    col.add_term(i * w.dim() + b, c * &s);
                }
                if !col.is_zero() {
                    diff.insert(i * w.dim() + j, col);
                }
            }
        }
        GradedSpace { name: format!("{}⊗{}", v.name, w.name), basis, diff }
    }
}

#[derive(Clone, PartialEq, Debug)]
pub struct LinearMap {
    pub source: Arc<GradedSpace>,
    pub target: Arc<GradedSpace>,
    pub degree: i64,
    /// column `j` holds the image of source basis vector `j`
    pub cols: BTreeMap<usize, Lin<usize>>,
}

impl LinearMap {
    pub fn new(
        source: Arc<GradedSpace>,
        target: Arc<GradedSpace>,
        degree: i64,
        cols: BTreeMap<usize, Lin<usize>>,
    ) -> Result<LinearMap, GradedError> {
        for (&j, col) in &cols {
            if j >= source.dim() {
                return Err(GradedError::Range(j));
            }
            for (&i, _) in col {
                if i >= target.dim() {
                    return Err(GradedError::Range(i));
                }
                if target.degree(i) != source.degree(j) + degree {
                    return Err(GradedError::Degree { source_index: j, target_index: i, degree });
                }
            }
        }
        let cols = cols.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        Ok(LinearMap { source, target, degree, cols })
    }

    pub fn from_entries(
        source: Arc<GradedSpace>,
        target: Arc<GradedSpace>,
        degree: i64,
        entries: &[(usize, usize, Q)],
    ) -> Result<LinearMap, GradedError> {
        let mut cols: BTreeMap<usize, Lin<usize>> = BTreeMap::new();
        for (t, s, c) in entries {
            cols.entry(*s).or_default().add_term(*t, c.clone());
        }
        LinearMap::new(source, target, degree, cols)
    }

    pub fn zero(source: Arc<GradedSpace>, target: Arc<GradedSpace>, degree: i64) -> LinearMap {
        LinearMap { source, target, degree, cols: BTreeMap::new() }
    }

    pub fn identity(v: Arc<GradedSpace>) -> LinearMap {
        let cols = (0..v.dim()).map(|i| (i, Lin::basis(i))).collect();
        LinearMap { source: v.clone(), target: v, degree: 0, cols }
    }

    /// The differential of `v` as a degree −1 map.
    pub fn differential(v: Arc<GradedSpace>) -> LinearMap {
        let cols = v.diff.clone();
        LinearMap { source: v.clone(), target: v, degree: -1, cols }
    }

    pub fn entry(&self, t: usize, s: usize) -> Q {
        self.cols.get(&s).map(|c| c.coeff(&t)).unwrap_or_default()
    }

    pub fn apply(&self, v: &Lin<usize>) -> Lin<usize> {
        v.map(|j| self.cols.get(j).cloned().unwrap_or_default())
    }

    pub fn is_zero(&self) -> bool {
        self.cols.is_empty()
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &LinearMap) -> Result<LinearMap, GradedError> {
        if other.target != self.source {
            return Err(GradedError::Mismatch);
        }
        let cols = other.cols.iter().map(|(&j, c)| (j, self.apply(c))).collect();
        LinearMap::new(other.source.clone(), self.target.clone(), self.degree + other.degree, cols)
    }

    pub fn add(&self, other: &LinearMap) -> Result<LinearMap, GradedError> {
        if self.source != other.source || self.target != other.target || self.degree != other.degree {
            return Err(GradedError::Mismatch);
        }
        let mut cols = self.cols.clone();
        for (&j, c) in &other.cols {
            *cols.entry(j).or_default() += c;
        }
        LinearMap::new(self.source.clone(), self.target.clone(), self.degree, cols)
    }

    pub fn scaled(&self, c: &Q) -> LinearMap {
        let cols = self.cols.iter().map(|(&j, col)| (j, col.scaled(c))).collect();
        LinearMap::new(self.source.clone(), self.target.clone(), self.degree, cols).unwrap()
    }
}

/// `∂φ = d_W φ − (−1)^{|φ|} φ d_V`.
pub fn hom_differential(phi: &LinearMap) -> LinearMap {
    let dw = LinearMap::differential(phi.target.clone());
    let dv = LinearMap::differential(phi.source.clone());
    let a = dw.compose(phi).unwrap();
    let b = phi.compose(&dv).unwrap().scaled(&-sign_q(phi.degree));
    a.add(&b).unwrap()
}

/// `(f⊗g)(x⊗y) = (−1)^{|g||x|} f(x)⊗g(y)` on the tensor product spaces.
pub fn tensor_map(f: &LinearMap, g: &LinearMap) -> LinearMap {
    let src = Arc::new(GradedSpace::tensor(&f.source, &g.source));
    let tgt = Arc::new(GradedSpace::tensor(&f.target, &g.target));
    let wd = g.source.dim();
    let td = g.target.dim();
    let mut cols = BTreeMap::new();
    for (&x, fx) in &f.cols {
        let s = sign_q(g.degree * f.source.degree(x));
        for (&y, gy) in &g.cols {
            let mut col = Lin::zero();
            for (&a, ca) in fx {
                for (&b, cb) in gy {
                    col.add_term(a * td + b, ca * cb * &s);
                }
            }
            cols.insert(x * wd + y, col);
        }
    }
    LinearMap::new(src, tgt, f.degree + g.degree, cols).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::scalar::q;

    fn two_cell() -> Arc<GradedSpace> {
        // a1 (degree 1), a0 (degree 0), d a1 = a0
        let v = GradedSpace::new("A", vec![("a1".into(), 1), ("a0".into(), 0)]);
        let mut d = BTreeMap::new();
        d.insert(0, Lin::basis(1));
        Arc::new(v.with_differential(d).unwrap())
    }

    #[test]
    fn chain_maps_are_closed() {
        let v = two_cell();
        assert!(hom_differential(&LinearMap::identity(v)).is_zero());
        let k = Arc::new(GradedSpace::new("k", vec![("x".into(), 0)]));
        assert!(hom_differential(&LinearMap::identity(k)).is_zero());
    }

    #[test]
    fn contracting_homotopy_example() {
        // φ: a0 ↦ a1 has ∂φ = dφ + φd = id
        let v = two_cell();
        let phi = LinearMap::from_entries(v.clone(), v.clone(), 1, &[(0, 1, q(1))]).unwrap();
        let dphi = hom_differential(&phi);
        assert_eq!(dphi.entry(1, 1), q(1));
        assert_eq!(dphi.entry(0, 0), q(1));
        assert!(hom_differential(&dphi).is_zero());
    }

    #[test]
    fn degree_violation_rejected() {
        let v = two_cell();
        assert!(LinearMap::from_entries(v.clone(), v, 0, &[(0, 1, q(1))]).is_err());
    }

    #[test]
    fn tensor_map_signs() {
        let x = Arc::new(GradedSpace::new("X", vec![("x".into(), 1)]));
        let y = Arc::new(GradedSpace::new("Y", vec![("y".into(), 0)]));
        let f = LinearMap::from_entries(x.clone(), y.clone(), -1, &[(0, 0, q(1))]).unwrap();
        let g = f.clone();
        let fg = tensor_map(&f, &g);
        assert_eq!(fg.entry(0, 0), q(-1));
        let id = tensor_map(&LinearMap::identity(x.clone()), &LinearMap::identity(x.clone()));
        assert_eq!(id.entry(0, 0), q(1));
    }

    #[test]
    fn tensor_differential_squares_to_zero() {
        let v = two_cell();
        let t = GradedSpace::tensor(&v, &v);
        for j in 0..t.dim() {
            assert!(t.d_vec(&t.d_vec(&Lin::basis(j))).is_zero());
        }
    }
}
