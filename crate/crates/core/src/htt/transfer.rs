//! The tree formula: `p` at the root, `i` on the leaves, `−h` on inner
//! edges, written recursively on suspended operations.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::exact::Lin;
use crate::linfty_algebra::cofree::{partitions, Word};
use crate::linfty_algebra::morphism::InfinityMorphism;
use crate::linfty_algebra::HomotopyAlgebra;
use crate::operad::stock::tuples;

use super::Retraction;

pub struct Transferred {
    pub structure: HomotopyAlgebra,
    /// `i_∞ : C ⇝ B`.
    pub i_inf: InfinityMorphism,
    /// `Λ_n(ic₁,…,ic_n)` in `sB`, the sum of all trees before the root map.
    pub lambda: BTreeMap<Word, Lin<usize>>,
}

/// `q_n` of `alg` on vectors.
pub fn q_lin(alg: &HomotopyAlgebra, xs: &[Lin<usize>]) -> Lin<usize> {
    let mut acc: Vec<(Vec<usize>, crate::exact::Q)> = vec![(vec![], crate::exact::q(1))];
    for x in xs {
        let mut next = Vec::new();
        for (w, c) in &acc {
            for (k, v) in x {
                let mut u = w.clone();
                u.push(*k);
                next.push((u, c * v));
            }
        }
        acc = next;
    }
    let mut out = Lin::zero();
    for (w, c) in acc {
        if !c.is_zero() {
            out.add_scaled(&alg.q(&w), &c);
        }
    }
    out
}

/// `Λ` on every tuple of `C` up to the arity cap, by increasing length.
pub fn lambda(alg: &HomotopyAlgebra, r: &Retraction) -> BTreeMap<Word, Lin<usize>> {
    let cdeg: Vec<i64> = (0..r.c.dim()).map(|k| r.c.degree(k) + 1).collect();
    let mut memo: BTreeMap<Word, Lin<usize>> = BTreeMap::new();
    for n in 2..=alg.cap {
        for w in tuples(r.c.dim(), n) {
            let mut out = Lin::zero();
            for (blocks, eps) in partitions(alg.kind, &cdeg, &w) {
                // a strict algebra only sees binary trees
                if blocks.len() < 2 || !alg.ops.contains_key(&blocks.len()) {
                    continue;
                }
                let xs: Vec<Lin<usize>> = blocks
                    .iter()
                    .map(|b| if b.len() == 1 { r.i.apply(&Lin::basis(b[0])) } else { -r.h.apply(&memo[b]) })
                    .collect();
                if xs.iter().any(|x| x.is_zero()) {
                    continue;
                }
                out.add_scaled(&q_lin(alg, &xs), &eps);
            }
            memo.insert(w, out);
        }
    }
    memo
}

/// The transferred structure on `C` together with `i_∞`.
pub fn transfer(alg: &HomotopyAlgebra, r: &Retraction) -> Transferred {
    assert_eq!(*alg.v, *r.b, "the algebra lives on the source of the retraction");
    let lam = lambda(alg, r);
    let structure = HomotopyAlgebra::from_shifted(alg.kind, r.c.clone(), alg.cap, |w| r.p.apply(&lam[w]));
    let i_inf = InfinityMorphism::from_fn(alg.kind, r.c.clone(), r.b.clone(), alg.cap, |w| {
        if w.len() == 1 {
            r.i.apply(&Lin::basis(w[0]))
        } else {
            -r.h.apply(&lam[w])
        }
    });
    Transferred { structure, i_inf, lambda: lam }
}
