//! `L∞`- and `A∞`-algebras by structure constants.
//!
//! Classical operations `ℓ_n` (or `m_n`) of degree `n − 2` are stored; the
//! suspended operations on `sV` are
//! `q_n(sx₁,…,sx_n) = κ_n (−1)^{Σ_i (n−i)|x_i|} s ℓ_n(x₁,…,x_n)` and `q₁ = sds⁻¹`.
//! All coherence conditions are read on the cofree coalgebra on `sV`.

use std::collections::BTreeMap;
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::barcobar::resolution::kappa;
use crate::exact::scalar::{factorial, fmt_q, sign_q};
use crate::exact::{GradedSpace, Lin, Q};
use crate::operad::stock::tuples;

use super::algebra::{eval_table, Table};
use super::cofree::{self, Kind, Word};

#[derive(Clone, Debug)]
pub struct HomotopyAlgebra {
    pub kind: Kind,
    pub v: Arc<GradedSpace>,
    /// highest arity carried
    pub cap: usize,
    /// classical operations of arity `2..=cap`
    pub ops: BTreeMap<usize, Table>,
}

/// `κ_n (−1)^{Σ_i (n−i)|x_i|}` for the classical degrees of the inputs.
pub fn decalage_sign(v: &GradedSpace, ins: &[usize]) -> Q {
    let n = ins.len();
    let e: i64 = ins.iter().enumerate().map(|(i, &x)| (n - 1 - i) as i64 * v.degree(x)).sum();
    kappa(n) * sign_q(e)
}

impl HomotopyAlgebra {
    pub fn new(kind: Kind, v: Arc<GradedSpace>, cap: usize, mut ops: BTreeMap<usize, Table>) -> Self {
        ops.retain(|n, t| *n >= 2 && *n <= cap && !t.is_empty());
        HomotopyAlgebra { kind, v, cap, ops }
    }

    /// Only the differential.
    pub fn abelian(kind: Kind, v: Arc<GradedSpace>, cap: usize) -> Self {
        Self::new(kind, v, cap, BTreeMap::new())
    }

    /// A dg Lie or dg associative algebra.
    pub fn strict(kind: Kind, v: Arc<GradedSpace>, cap: usize, product: &Table) -> Self {
        Self::new(kind, v, cap, [(2, product.clone())].into_iter().collect())
    }

    /// From suspended operations `q_n`, `n ≥ 2`, given on basis tuples.
    pub fn from_shifted<F>(kind: Kind, v: Arc<GradedSpace>, cap: usize, q: F) -> Self
    where
        F: Fn(&[usize]) -> Lin<usize> + Sync,
    {
        let mut ops = BTreeMap::new();
        for n in 2..=cap {
            let all = tuples(v.dim(), n);
            let t: Table = all
                .par_iter()
                .filter_map(|ins| {
                    let val = q(ins).scaled(&decalage_sign(&v, ins));
                    (!val.is_zero()).then(|| (ins.clone(), val))
                })
                .collect();
            ops.insert(n, t);
        }
        Self::new(kind, v, cap, ops)
    }

    pub fn dim(&self) -> usize {
        self.v.dim()
    }

    /// Degrees of the basis of `sV`.
    pub fn shifted_degrees(&self) -> Vec<i64> {
        (0..self.dim()).map(|i| self.v.degree(i) + 1).collect()
    }

    /// `ℓ_n` on a basis tuple.
    pub fn op(&self, ins: &[usize]) -> Lin<usize> {
        if ins.len() == 1 {
            return self.v.d_vec(&Lin::basis(ins[0]));
        }
        self.ops.get(&ins.len()).and_then(|t| t.get(ins)).cloned().unwrap_or_default()
    }

    /// `ℓ_n` on vectors.
    pub fn op_lin(&self, xs: &[Lin<usize>]) -> Lin<usize> {
        if xs.len() == 1 {
            return self.v.d_vec(&xs[0]);
        }
        match self.ops.get(&xs.len()) {
            Some(t) => eval_table(t, xs),
            None => Lin::zero(),
        }
    }

    /// `q_n` on a basis tuple of `sV`.
    pub fn q(&self, ins: &[usize]) -> Lin<usize> {
        if ins.len() == 1 {
            return self.v.d_vec(&Lin::basis(ins[0]));
        }
        let v = self.op(ins);
        if v.is_zero() {
            return v;
        }
        v.scaled(&decalage_sign(&self.v, ins))
    }

    /// The coderivation `D` of the bar construction on a word.
    pub fn coder(&self, w: &[usize]) -> Lin<Word> {
        cofree::coderivation(self.kind, &self.shifted_degrees(), |u| self.q(u), w)
    }

    /// `pr₁ D²(w)`.
    pub fn jacobi_defect(&self, w: &[usize]) -> Lin<usize> {
        cofree::corestrict(&self.coder(w), |u| self.q(u))
    }

    /// Words of length at most `len` on which `D² ≠ 0`.
    pub fn jacobi_failures(&self, len: usize) -> Vec<Word> {
        let ws = cofree::words(self.kind, &self.shifted_degrees(), len);
        let mut bad: Vec<Word> = ws.into_par_iter().filter(|w| !self.jacobi_defect(w).is_zero()).collect();
        bad.sort();
        bad
    }

    pub fn is_homotopy_algebra(&self, len: usize) -> bool {
        self.jacobi_failures(len).is_empty()
    }

    /// Graded antisymmetry of the classical brackets (`Lie` only):
    /// `ℓ(…x,y…) = −(−1)^{|x||y|} ℓ(…y,x…)`.
    pub fn symmetry_failures(&self) -> Vec<Word> {
        if self.kind != Kind::Lie {
            return vec![];
        }
        let mut bad = Vec::new();
        for n in 2..=self.cap {
            for ins in tuples(self.dim(), n) {
                for i in 0..n - 1 {
                    let mut sw = ins.clone();
                    sw.swap(i, i + 1);
                    let s = -sign_q(self.v.degree(ins[i]) * self.v.degree(ins[i + 1]));
                    if self.op(&ins) != self.op(&sw).scaled(&s) {
                        bad.push(ins.clone());
                        break;
                    }
                }
            }
        }
        bad
    }

    /// `dx + Σ_{n ≤ cap} ℓ_n(x,…,x)/n!` (`Lie`) or `dx + Σ m_n(x,…,x)` (`Ass`),
    /// truncated at the arity cap.
    pub fn mc_residual(&self, x: &Lin<usize>) -> Lin<usize> {
        let mut out = self.v.d_vec(x);
        for n in 2..=self.cap {
            let xs = vec![x.clone(); n];
            let mut t = self.op_lin(&xs);
            if self.kind == Kind::Lie {
                t = t.scaled(&(Q::from_integer(1.into()) / factorial(n)));
            }
            out += t;
        }
        out
    }

    /// Same carrier, same operations up to `cap`.
    pub fn same_structure(&self, other: &HomotopyAlgebra, cap: usize) -> bool {
        self.v.basis == other.v.basis
            && self.v.diff == other.v.diff
            && (2..=cap).all(|n| self.ops.get(&n).cloned().unwrap_or_default() == other.ops.get(&n).cloned().unwrap_or_default())
    }

    /// Arities `2..=cap` where the two structures differ.
    pub fn differing_arities(&self, other: &HomotopyAlgebra, cap: usize) -> Vec<usize> {
        (2..=cap)
            .filter(|n| self.ops.get(n).cloned().unwrap_or_default() != other.ops.get(n).cloned().unwrap_or_default())
            .collect()
    }

    /// Per arity, `(inputs, output, coefficient)` in lexicographic order.
    pub fn dump(&self) -> StructureDump {
        let mut arities = BTreeMap::new();
        for (n, t) in &self.ops {
            let mut rows = Vec::new();
            for (ins, v) in t {
                for (o, c) in v {
                    rows.push((ins.clone(), *o, fmt_q(c)));
                }
            }
            arities.insert(*n, rows);
        }
        StructureDump {
            kind: self.kind,
            basis: self.v.basis.iter().map(|(l, d)| (l.clone(), *d)).collect(),
            differential: self.v.diff.iter().map(|(j, v)| (*j, v.iter().map(|(i, c)| (*i, fmt_q(c))).collect())).collect(),
            arities,
        }
    }
}

#[derive(Serialize, Debug)]
pub struct StructureDump {
    pub kind: Kind,
    pub basis: Vec<(String, i64)>,
    pub differential: BTreeMap<usize, Vec<(usize, String)>>,
    pub arities: BTreeMap<usize, Vec<(Vec<usize>, usize, String)>>,
}
