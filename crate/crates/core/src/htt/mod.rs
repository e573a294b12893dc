//! Homotopy transfer along a retraction `(i, p, h)` of chain complexes.

pub mod compare;
pub mod perturb;
pub mod transfer;

#[cfg(test)]
mod tests;

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::Serialize;
use thiserror::Error;

use crate::exact::linalg::solve;
use crate::exact::{tensor_map, Echelon, GradedSpace, Lin, LinearMap};

pub use compare::{morphism_compat, two_structures, Corpus};
pub use transfer::{transfer, Transferred};

#[derive(Debug, Error, PartialEq)]
pub enum RetractionError {
    #[error("{0} has the wrong source, target or degree")]
    Shape(&'static str),
    #[error("{0} does not commute with the differentials")]
    NotChain(&'static str),
    #[error("p i is not the identity")]
    NotSection,
    #[error("d h + h d differs from 1 − i p")]
    Homotopy,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SideConditions {
    pub hh: bool,
    pub hi: bool,
    pub ph: bool,
}

impl SideConditions {
    pub fn all(&self) -> bool {
        self.hh && self.hi && self.ph
    }
}

/// `i : C → B`, `p : B → C`, `h : B → B` with `p i = 1` and
/// `d h + h d = 1 − i p`.
#[derive(Clone, Debug)]
pub struct Retraction {
    pub b: Arc<GradedSpace>,
    pub c: Arc<GradedSpace>,
    pub i: LinearMap,
    pub p: LinearMap,
    pub h: LinearMap,
}

fn commutes(f: &LinearMap) -> bool {
    let d_src = LinearMap::differential(f.source.clone());
    let d_tgt = LinearMap::differential(f.target.clone());
    d_tgt.compose(f).unwrap() == f.compose(&d_src).unwrap()
}

impl Retraction {
    pub fn new(i: LinearMap, p: LinearMap, h: LinearMap) -> Result<Self, RetractionError> {
        let r = Retraction { b: i.target.clone(), c: i.source.clone(), i, p, h };
        r.check()?;
        Ok(r)
    }

    pub fn check(&self) -> Result<(), RetractionError> {
        let (b, c) = (&self.b, &self.c);
        if self.i.degree != 0 || self.i.source != *c || self.i.target != *b {
            return Err(RetractionError::Shape("i"));
        }
        if self.p.degree != 0 || self.p.source != *b || self.p.target != *c {
            return Err(RetractionError::Shape("p"));
        }
        if self.h.degree != 1 || self.h.source != *b || self.h.target != *b {
            return Err(RetractionError::Shape("h"));
        }
        if !commutes(&self.i) {
            return Err(RetractionError::NotChain("i"));
        }
        if !commutes(&self.p) {
            return Err(RetractionError::NotChain("p"));
        }
        if self.p.compose(&self.i).unwrap() != LinearMap::identity(c.clone()) {
            return Err(RetractionError::NotSection);
        }
        let d = LinearMap::differential(b.clone());
        let lhs = d.compose(&self.h).unwrap().add(&self.h.compose(&d).unwrap()).unwrap();
        let ip = self.i.compose(&self.p).unwrap();
        let rhs = LinearMap::identity(b.clone()).add(&ip.scaled(&crate::exact::q(-1))).unwrap();
        if lhs != rhs {
            return Err(RetractionError::Homotopy);
        }
        Ok(())
    }

    pub fn side_conditions(&self) -> SideConditions {
        SideConditions {
            hh: self.h.compose(&self.h).unwrap().is_zero(),
            hi: self.h.compose(&self.i).unwrap().is_zero(),
            ph: self.p.compose(&self.h).unwrap().is_zero(),
        }
    }

    /// `B = C`, `i = p = 1`, `h = 0`.
    pub fn trivial(v: Arc<GradedSpace>) -> Self {
        let id = LinearMap::identity(v.clone());
        Retraction { b: v.clone(), c: v.clone(), i: id.clone(), p: id, h: LinearMap::zero(v.clone(), v, 1) }
    }

    /// `(1⊗i, 1⊗p, 1⊗h)` on `A⊗B → A⊗C`; `1⊗h` picks up `(−1)^{|a|}`.
    pub fn tensor_left(a: &Arc<GradedSpace>, r: &Retraction) -> Self {
        let id = LinearMap::identity(a.clone());
        Retraction {
            b: Arc::new(GradedSpace::tensor(a, &r.b)),
            c: Arc::new(GradedSpace::tensor(a, &r.c)),
            i: tensor_map(&id, &r.i),
            p: tensor_map(&id, &r.p),
            h: tensor_map(&id, &r.h),
        }
        .shared()
    }

    // tensor_map builds fresh Arcs; make the maps share the two spaces
    fn shared(mut self) -> Self {
        self.b = self.i.target.clone();
        self.c = self.i.source.clone();
        self.p.source = self.b.clone();
        self.p.target = self.c.clone();
        self.h.source = self.b.clone();
        self.h.target = self.b.clone();
        self
    }

    /// `(i + [d,g], p, h − g p)` for a degree 1 map `g : C → B` with
    /// `p g = 0`; again a retraction, usually without the side conditions.
    pub fn perturbed(&self, g: &LinearMap) -> Result<Self, RetractionError> {
        let db = LinearMap::differential(self.b.clone());
        let dc = LinearMap::differential(self.c.clone());
        let bracket = db.compose(g).unwrap().add(&g.compose(&dc).unwrap()).unwrap();
        let i = self.i.add(&bracket).unwrap();
        let h = self.h.add(&g.compose(&self.p).unwrap().scaled(&crate::exact::q(-1))).unwrap();
        Retraction::new(i, self.p.clone(), h)
    }

    /// A Hodge decomposition `B = H ⊕ d(W) ⊕ W` onto a space of homology
    /// representatives; satisfies all side conditions.
    pub fn onto_homology(b: Arc<GradedSpace>) -> Self {
        let n = b.dim();
        let d = |j: usize| b.d_vec(&Lin::basis(j));
        // W: basis vectors with independent boundaries, greedily
        let mut ech = Echelon::new();
        let mut w = Vec::new();
        for j in 0..n {
            if ech.insert(&d(j)) {
                w.push(j);
            }
        }
        let dw: Vec<Lin<usize>> = w.iter().map(|&j| d(j)).collect();
        let mut hom = Echelon::new();
        for v in &dw {
            hom.insert(v);
        }
        let mut reps: Vec<Lin<usize>> = Vec::new();
        for j in (0..n).filter(|j| !w.contains(j)) {
            let c = solve(&dw, &d(j)).expect("boundary in the span");
            let mut z = Lin::basis(j);
            for (k, x) in w.iter().zip(&c) {
                z.add_term(*k, -x.clone());
            }
            if hom.insert(&z) {
                reps.push(z);
            }
        }
        let degs: Vec<i64> = reps.iter().map(|z| b.degree(*z.keys().next().unwrap())).collect();
        let labels: Vec<(String, i64)> = degs.iter().enumerate().map(|(k, &g)| (format!("h{}", k), g)).collect();
        let c = Arc::new(GradedSpace::new(&format!("H({})", b.name), labels));
        let nh = reps.len();
        let mut cols: Vec<Lin<usize>> = reps.clone();
        cols.extend(dw.iter().cloned());
        cols.extend(w.iter().map(|&j| Lin::basis(j)));
        let mut p_cols = BTreeMap::new();
        let mut h_cols = BTreeMap::new();
        for j in 0..n {
            let x = solve(&cols, &Lin::basis(j)).expect("a basis");
            let mut pj = Lin::zero();
            let mut hj = Lin::zero();
            for (k, c) in x.iter().enumerate() {
                if k < nh {
                    pj.add_term(k, c.clone());
                } else if k < nh + w.len() {
                    hj.add_term(w[k - nh], c.clone());
                }
            }
            p_cols.insert(j, pj);
            h_cols.insert(j, hj);
        }
        let i_cols = reps.into_iter().enumerate().collect();
        let i = LinearMap::new(c.clone(), b.clone(), 0, i_cols).unwrap();
        let p = LinearMap::new(b.clone(), c, 0, p_cols).unwrap();
        let h = LinearMap::new(b.clone(), b, 1, h_cols).unwrap();
        Retraction::new(i, p, h).expect("a Hodge decomposition is a retraction")
    }
}
