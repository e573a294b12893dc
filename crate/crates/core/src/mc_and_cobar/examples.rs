//! Small coalgebras and nilpotent targets for the Maurer–Cartan problems.

use std::collections::BTreeMap;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exact::scalar::{q, qr};
use crate::exact::{GradedSpace, Lin};
use crate::linfty_algebra::algebra::Table;
use crate::linfty_algebra::fixtures::dg_base;
use crate::linfty_algebra::hom::{hom_space, CCoalgebra};
use crate::linfty_algebra::morphism::random_components;
use crate::linfty_algebra::tensor::{Flavor, Strict};
use crate::linfty_algebra::{HomotopyAlgebra, Kind};

use super::filtered::{free_ass, free_com};

fn one(ins: &[usize], o: usize) -> Table {
    [(ins.to_vec(), Lin::term(o, q(1)))].into_iter().collect()
}

/// `e₀` (−1), `e₁` (−2), `ℓ_n(e₀,…,e₀) = e₁` for `n = 2, 3, 4`, and with `extra`
/// also `e₂` (−1) with `de₂ = e₁`.
pub fn small_source(kind: Kind, extra: bool) -> HomotopyAlgebra {
    let mut v = GradedSpace::from_degrees("E", if extra { &[-1, -2, -1] } else { &[-1, -2] });
    if extra {
        v = v.with_differential([(2, Lin::basis(1))].into_iter().collect()).unwrap();
    }
    let ops: BTreeMap<usize, Table> = [(2, one(&[0, 0], 1)), (3, one(&[0, 0, 0], 1)), (4, one(&[0, 0, 0, 0], 1))].into_iter().collect();
    HomotopyAlgebra::new(kind, Arc::new(v), 4, ops)
}

/// The dual coalgebra: `d₀` (1), `d₁` (2), and `d₂` (1) with `extra`.
pub fn small_coalgebra(kind: Kind, extra: bool) -> CCoalgebra {
    CCoalgebra::dual_of(&small_source(kind, extra))
}

/// The dual of a random deformation of the dg base algebra, graded and
/// with a differential.
pub fn random_source(kind: Kind, seed: u64) -> CCoalgebra {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let base = dg_base(kind, 3);
    CCoalgebra::dual_of(&base.push_forward(&random_components(kind, base.v.clone(), 3, 0.4, &mut rng)))
}

/// Free nilpotent target of the right type, words of length at most `len`.
pub fn target(flavor: Flavor, degs: &[i64], len: usize) -> Strict {
    match flavor {
        Flavor::Com => free_com(degs, len).strict(flavor),
        _ => free_ass(degs, len).strict(flavor),
    }
}

/// Indices of `hom(D, A)` in degree `−1`.
pub fn degree_minus_one(d: &CCoalgebra, a: &Strict) -> Vec<usize> {
    let h = hom_space(d, &a.v);
    (0..h.dim()).filter(|&i| h.degree(i) == -1).collect()
}

/// A random rational map of degree `−1`.
pub fn random_phi<R: Rng>(d: &CCoalgebra, a: &Strict, rng: &mut R) -> Lin<usize> {
    degree_minus_one(d, a).into_iter().map(|i| (i, qr(rng.gen_range(-4..=4), rng.gen_range(1..=3)))).collect()
}

/// All vectors on `indices` with coefficients from `values`.
pub fn grid(indices: &[usize], values: &[i64]) -> Vec<Lin<usize>> {
    let mut out: Vec<Lin<usize>> = vec![Lin::zero()];
    for &i in indices {
        out = out.iter().flat_map(|v| values.iter().map(move |&c| v.clone() + Lin::term(i, q(c)))).collect();
    }
    out
}
