//! Transfer then tensor versus tensor then transfer, for `Ψ` the identity
//! of `Com`, `Ass` or `As` and a strict `A`.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::Serialize;

use crate::exact::{q, GradedSpace, Lin};
use crate::linfty_algebra::algebra::Table;
use crate::linfty_algebra::tensor::{tensor_algebra, tensor_morphism, Flavor, Strict};
use crate::linfty_algebra::{HomotopyAlgebra, Kind};

use super::perturb::Perturbation;
use super::transfer::transfer;
use super::Retraction;

/// One instance: `A` strict, `B` a dg Lie or dg associative algebra and a
/// retraction of `B` onto `C`.
#[derive(Clone, Debug)]
pub struct Corpus {
    pub name: String,
    pub a: Strict,
    pub b: HomotopyAlgebra,
    pub r: Retraction,
}

/// Path (1): transfer the strict structure of `A⊗B` along `1⊗r`.
/// Path (2): transfer `B` to `C`, then tensor with `A`.
pub fn two_structures(a: &Strict, b: &HomotopyAlgebra, r: &Retraction) -> (HomotopyAlgebra, HomotopyAlgebra) {
    let ab = tensor_algebra(a, b);
    let ra = Retraction::tensor_left(&a.v, r);
    let first = transfer(&ab, &ra).structure;
    let second = tensor_algebra(a, &transfer(b, r).structure);
    (first, second)
}

#[derive(Clone, Debug, Serialize)]
pub struct Compat {
    /// Arities where `(1⊗i)_∞` and `1⊗i_∞` differ.
    pub i_differs: Vec<usize>,
    /// Arities where `(1⊗p)_∞` and `1⊗p_∞` differ.
    pub p_differs: Vec<usize>,
    pub i_is_morphism: bool,
    pub p_is_morphism: bool,
}

impl Compat {
    pub fn holds(&self) -> bool {
        self.i_differs.is_empty() && self.p_differs.is_empty() && self.i_is_morphism && self.p_is_morphism
    }
}

pub fn morphism_compat(a: &Strict, b: &HomotopyAlgebra, r: &Retraction, cap: usize) -> Compat {
    let ab = tensor_algebra(a, b);
    let ra = Retraction::tensor_left(&a.v, r);
    let t1 = transfer(&ab, &ra);
    let t2 = transfer(b, r);
    let id = |x: usize| Lin::basis(x);
    let i2 = tensor_morphism(a, a, id, &t2.i_inf);
    let p1 = Perturbation::new(&ab, &ra).p_inf();
    let p2 = tensor_morphism(a, a, id, &Perturbation::new(b, r).p_inf());
    Compat {
        i_differs: t1.i_inf.differing_arities(&i2, cap),
        p_differs: p1.differing_arities(&p2, cap),
        i_is_morphism: t1.i_inf.failures(&t1.structure, &ab, cap).is_empty(),
        p_is_morphism: p1.failures(&ab, &t1.structure, cap).is_empty(),
    }
}

fn entries(list: &[(&[usize], usize, i64)]) -> Table {
    let mut t: Table = BTreeMap::new();
    for (ins, o, c) in list {
        t.entry(ins.to_vec()).or_default().add_term(*o, q(*c));
    }
    t
}

/// `x` (1), `y` (4), `u` (3), `v` (2), `du = v`, `x·x = v`, `u·x = y`: a dg
/// Lie algebra (and for `Ass`, the graded symmetric part read as a product)
/// whose transferred ternary operation is nonzero on `H = span{x, y}`.
pub fn four_dim(kind: Kind, cap: usize) -> HomotopyAlgebra {
    let v = GradedSpace::from_degrees("B", &[1, 4, 3, 2]);
    let v = Arc::new(v.with_differential([(2, Lin::basis(3))].into_iter().collect()).unwrap());
    let prod = match kind {
        // [x,x] = v, [u,x] = y = −(−1)^{3·1}[x,u] = [x,u]
        Kind::Lie => entries(&[(&[0, 0], 3, 1), (&[2, 0], 1, 1), (&[0, 2], 1, 1)]),
        Kind::Ass => entries(&[(&[0, 0], 3, 1), (&[2, 0], 1, 1)]),
    };
    HomotopyAlgebra::strict(kind, v, cap, &prod)
}

/// `x` (1), `u` (3), `v` (2), `du = v`, `x·x = v`.
pub fn three_dim(kind: Kind, cap: usize) -> HomotopyAlgebra {
    let v = GradedSpace::from_degrees("B", &[1, 3, 2]);
    let v = Arc::new(v.with_differential([(1, Lin::basis(2))].into_iter().collect()).unwrap());
    HomotopyAlgebra::strict(kind, v, cap, &entries(&[(&[0, 0], 2, 1)]))
}

/// `k[e]/e²`, `e` odd.
pub fn exterior(flavor: Flavor) -> Strict {
    let v = Arc::new(GradedSpace::from_degrees("A", &[0, 1]));
    Strict::new(flavor, v, entries(&[(&[0, 0], 0, 1), (&[0, 1], 1, 1), (&[1, 0], 1, 1)]))
}

/// Upper triangular `2×2` matrices, in degree 0.
pub fn triangular(flavor: Flavor) -> Strict {
    let v = Arc::new(GradedSpace::from_degrees("A", &[0, 0, 0]));
    Strict::new(flavor, v, entries(&[(&[0, 0], 0, 1), (&[0, 1], 1, 1), (&[1, 2], 1, 1), (&[2, 2], 2, 1)]))
}

/// The standard corpus for the comparison.
pub fn corpus(cap: usize) -> Vec<Corpus> {
    let mut out = Vec::new();
    for (flavor, name) in [(Flavor::Com, "id_com"), (Flavor::Ass, "id_ass"), (Flavor::AsNs, "id_as")] {
        let kind = flavor.coefficients();
        for (bname, b) in [("three", three_dim(kind, cap)), ("four", four_dim(kind, cap))] {
            let r = Retraction::onto_homology(b.v.clone());
            out.push(Corpus { name: format!("{}/{}", name, bname), a: exterior(flavor), b, r });
        }
    }
    out
}
