//! Filtered algebras with a nilpotent filtration `F₁ ⊇ F₂ ⊇ … ⊇ F_N = 0`
//! spanned by basis vectors, and the completed structure map on series.
//!
//! Every limit is finite: an arity `n` term with inputs in `F₁` lies in
//! `F_n`, so modulo `F_m` only the arities below `m` survive.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::Serialize;
use thiserror::Error;

use crate::exact::linalg::solve;
use crate::exact::scalar::sign_q;
use crate::exact::{Echelon, GradedSpace, Lin, Q};
use crate::linfty_algebra::algebra::Table;
use crate::linfty_algebra::cofree::{normalize, Kind, Word};
use crate::linfty_algebra::tensor::{Flavor, Strict};
use crate::linfty_algebra::HomotopyAlgebra;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Theory {
    Com,
    Lie,
    Ass,
}

#[derive(Debug, Error, PartialEq)]
pub enum FiltrationError {
    #[error("basis vector {0} has weight outside 1..depth")]
    Weight(usize),
    #[error("the product of {0:?} leaves F_{1}")]
    Product(Vec<usize>, usize),
    #[error("the differential of {0} leaves its filtration level")]
    Differential(usize),
    #[error("the partial sums do not stabilize modulo F_{0}")]
    Unstable(usize),
}

#[derive(Clone, Debug)]
pub struct FilteredAlgebra {
    pub theory: Theory,
    pub v: Arc<GradedSpace>,
    /// binary product (bracket for `Lie`) on basis vectors
    pub product: Table,
    /// basis vector `i` lies in `F_{weight[i]}`
    pub weight: Vec<usize>,
    /// `F_depth = 0`
    pub depth: usize,
}

/// The arity `n` part of a series in `P̂(A)`: coefficients times inputs.
/// The operation is the iterated product (`Com`, `Ass`) or the left-normed
/// bracket (`Lie`).
pub type Component = Vec<(Q, Vec<Lin<usize>>)>;

impl FilteredAlgebra {
    pub fn new(theory: Theory, v: Arc<GradedSpace>, product: Table, weight: Vec<usize>, depth: usize) -> Result<Self, FiltrationError> {
        let a = FilteredAlgebra { theory, v, product, weight, depth };
        a.check()?;
        Ok(a)
    }

    pub fn check(&self) -> Result<(), FiltrationError> {
        for (i, &w) in self.weight.iter().enumerate() {
            if w == 0 || w >= self.depth {
                return Err(FiltrationError::Weight(i));
            }
        }
        for (ins, out) in &self.product {
            let lvl = self.weight[ins[0]] + self.weight[ins[1]];
            if !self.in_level(out, lvl) {
                return Err(FiltrationError::Product(ins.clone(), lvl));
            }
        }
        for i in 0..self.v.dim() {
            if !self.in_level(&self.v.d_vec(&Lin::basis(i)), self.weight[i]) {
                return Err(FiltrationError::Differential(i));
            }
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.v.dim()
    }

    /// `x ∈ F_n`; everything lies in `F_n` for `n ≤ 1`, nothing nonzero in
    /// `F_depth`.
    pub fn in_level(&self, x: &Lin<usize>, n: usize) -> bool {
        x.keys().all(|&k| self.weight[k] >= n)
    }

    /// The class of `x` in `A/F_m`, on the basis vectors of weight below `m`.
    pub fn modulo(&self, x: &Lin<usize>, m: usize) -> Lin<usize> {
        x.filter(|&k| self.weight[k] < m)
    }

    pub fn mul(&self, x: &Lin<usize>, y: &Lin<usize>) -> Lin<usize> {
        let mut out = Lin::zero();
        for (i, a) in x {
            for (j, b) in y {
                if let Some(p) = self.product.get(&vec![*i, *j]) {
                    out.add_scaled(p, &(a * b));
                }
            }
        }
        out
    }

    /// The arity `n` operation on vectors.
    pub fn gamma(&self, ins: &[Lin<usize>]) -> Lin<usize> {
        let mut acc = ins[0].clone();
        for x in &ins[1..] {
            acc = self.mul(&acc, x);
        }
        acc
    }

    /// `γ̂` on a series: the compatible family of classes modulo `F_m`,
    /// `m = 1, …, N`, read off at `m = N`. Each stage only evaluates the
    /// arities below `m`; consecutive stages are checked to agree.
    pub fn gamma_hat<F>(&self, component: F) -> Result<Lin<usize>, FiltrationError>
    where
        F: Fn(usize) -> Component,
    {
        let mut stages: Vec<Lin<usize>> = vec![Lin::zero()];
        let mut partial = Lin::zero();
        for m in 2..=self.depth {
            for (c, ins) in component(m - 1) {
                partial.add_scaled(&self.gamma(&ins), &c);
            }
            let stage = self.modulo(&partial, m);
            if self.modulo(&stage, m - 1) != stages[stages.len() - 1] {
                return Err(FiltrationError::Unstable(m - 1));
            }
            stages.push(stage);
        }
        Ok(stages.pop().unwrap())
    }

    /// The same series summed directly up to arity `upto`.
    pub fn direct<F>(&self, component: F, upto: usize) -> Lin<usize>
    where
        F: Fn(usize) -> Component,
    {
        let mut out = Lin::zero();
        for n in 1..=upto {
            for (c, ins) in component(n) {
                out.add_scaled(&self.gamma(&ins), &c);
            }
        }
        out
    }

    /// The underlying strict algebra for the tensor and hom formulas.
    pub fn strict(&self, flavor: Flavor) -> Strict {
        match (self.theory, flavor) {
            (Theory::Com, Flavor::Com) | (Theory::Ass, Flavor::Ass) | (Theory::Ass, Flavor::AsNs) => {}
            _ => panic!("{:?} is not a {:?} algebra", self.theory, flavor),
        }
        Strict::new(flavor, self.v.clone(), self.product.clone())
    }

    /// A `Lie` algebra (or an associative one read through its commutator)
    /// as a strict homotopy Lie algebra.
    pub fn as_lie(&self, cap: usize) -> HomotopyAlgebra {
        let mut t = Table::new();
        for (ins, out) in &self.product {
            match self.theory {
                Theory::Lie => *t.entry(ins.clone()).or_default() += out,
                Theory::Ass => {
                    let s = -sign_q(self.v.degree(ins[0]) * self.v.degree(ins[1]));
                    *t.entry(ins.clone()).or_default() += out;
                    t.entry(vec![ins[1], ins[0]]).or_default().add_scaled(out, &s);
                }
                Theory::Com => {}
            }
        }
        t.retain(|_, v| !v.is_zero());
        HomotopyAlgebra::strict(Kind::Lie, self.v.clone(), cap, &t)
    }
}

fn names(n: usize) -> Vec<String> {
    const L: [&str; 6] = ["x", "y", "z", "u", "v", "w"];
    (0..n).map(|i| L.get(i).map(|s| s.to_string()).unwrap_or(format!("g{}", i))).collect()
}

fn all_words(n: usize, len: usize) -> Vec<Word> {
    let mut out = vec![];
    let mut layer: Vec<Word> = vec![vec![]];
    for _ in 0..len {
        layer = layer.iter().flat_map(|w| (0..n).map(move |g| [w.clone(), vec![g]].concat())).collect();
        out.extend(layer.iter().cloned());
    }
    out
}

/// The free associative algebra on generators of the given degrees, words
/// of length at most `len`; depth `len + 1`.
pub fn free_ass(degs: &[i64], len: usize) -> FilteredAlgebra {
    let words = all_words(degs.len(), len);
    let index: BTreeMap<Word, usize> = words.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
    let nm = names(degs.len());
    let basis = words.iter().map(|w| (w.iter().map(|&g| nm[g].as_str()).collect::<String>(), w.iter().map(|&g| degs[g]).sum())).collect();
    let mut product = Table::new();
    for (i, u) in words.iter().enumerate() {
        for (j, w) in words.iter().enumerate() {
            if u.len() + w.len() <= len {
                product.insert(vec![i, j], Lin::basis(index[&[u.clone(), w.clone()].concat()]));
            }
        }
    }
    let weight = words.iter().map(|w| w.len()).collect();
    FilteredAlgebra::new(Theory::Ass, Arc::new(GradedSpace::new("T", basis)), product, weight, len + 1).unwrap()
}

/// The free graded commutative algebra without unit, monomials of length at
/// most `len`.
pub fn free_com(degs: &[i64], len: usize) -> FilteredAlgebra {
    let mut monos: Vec<Word> = all_words(degs.len(), len)
        .into_iter()
        .filter(|w| w.windows(2).all(|p| p[0] < p[1] || (p[0] == p[1] && degs[p[0]] % 2 == 0)))
        .collect();
    monos.sort_by_key(|w| (w.len(), w.clone()));
    let index: BTreeMap<Word, usize> = monos.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
    let nm = names(degs.len());
    let basis = monos.iter().map(|w| (w.iter().map(|&g| nm[g].as_str()).collect::<String>(), w.iter().map(|&g| degs[g]).sum())).collect();
    let mut product = Table::new();
    for (i, u) in monos.iter().enumerate() {
        for (j, w) in monos.iter().enumerate() {
            if u.len() + w.len() > len {
                continue;
            }
            if let Some((s, c)) = normalize(Kind::Lie, degs, &[u.clone(), w.clone()].concat()) {
                product.insert(vec![i, j], Lin::term(index[&s], c));
            }
        }
    }
    let weight = monos.iter().map(|w| w.len()).collect();
    FilteredAlgebra::new(Theory::Com, Arc::new(GradedSpace::new("S", basis)), product, weight, len + 1).unwrap()
}

/// The free Lie algebra, brackets of length at most `len`, realized inside
/// the free associative algebra through `[a,b] = ab − (−1)^{|a||b|}ba`.
pub fn free_lie(degs: &[i64], len: usize) -> FilteredAlgebra {
    let t = free_ass(degs, len);
    let comm = |x: &Lin<usize>, y: &Lin<usize>, dx: i64, dy: i64| t.mul(x, y) - t.mul(y, x).scaled(&sign_q(dx * dy));
    // elements by length, as (vector in T, degree, label)
    let mut layers: Vec<Vec<(Lin<usize>, i64, String)>> = vec![vec![]];
    let nm = names(degs.len());
    layers.push((0..degs.len()).map(|g| (Lin::basis(g), degs[g], nm[g].clone())).collect());
    for l in 2..=len {
        let mut ech = Echelon::new();
        let mut layer = vec![];
        for (g, dg, ng) in layers[1].clone() {
            for (b, db, nb) in layers[l - 1].clone() {
                let c = comm(&g, &b, dg, db);
                if ech.insert(&c) {
                    layer.push((c, dg + db, format!("[{},{}]", ng, nb)));
                }
            }
        }
        layers.push(layer);
    }
    let elems: Vec<(usize, Lin<usize>, i64, String)> = layers.iter().enumerate().flat_map(|(l, v)| v.iter().map(move |(x, d, n)| (l, x.clone(), *d, n.clone()))).collect();
    let basis = elems.iter().map(|e| (e.3.clone(), e.2)).collect();
    let mut product = Table::new();
    for (i, a) in elems.iter().enumerate() {
        for (j, b) in elems.iter().enumerate() {
            let l = a.0 + b.0;
            if l > len {
                continue;
            }
            let c = comm(&a.1, &b.1, a.2, b.2);
            if c.is_zero() {
                continue;
            }
            let cols: Vec<Lin<usize>> = layers[l].iter().map(|e| e.0.clone()).collect();
            let x = solve(&cols, &c).expect("brackets of Lie elements are Lie elements");
            let off: usize = layers[..l].iter().map(|v| v.len()).sum();
            let v: Lin<usize> = x.into_iter().enumerate().map(|(k, q)| (off + k, q)).collect();
            product.insert(vec![i, j], v);
        }
    }
    let weight = elems.iter().map(|e| e.0).collect();
    FilteredAlgebra::new(Theory::Lie, Arc::new(GradedSpace::new("L", basis)), product, weight, len + 1).unwrap()
}
