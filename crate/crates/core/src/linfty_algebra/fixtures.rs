//! Small algebras shared by the tests, the verification suites and the
//! command line.

use std::collections::BTreeMap;
use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::exact::scalar::q;
use crate::exact::{GradedSpace, Lin};

use super::algebra::Table;
use super::homotopy::HomotopyAlgebra;
use super::morphism::random_components;
use super::Kind;

pub fn space(name: &str, degs: &[i64]) -> Arc<GradedSpace> {
    Arc::new(GradedSpace::from_degrees(name, degs))
}

pub fn table(entries: &[(&[usize], usize, i64)]) -> Table {
    let mut t: Table = BTreeMap::new();
    for (ins, o, c) in entries {
        t.entry(ins.to_vec()).or_default().add_term(*o, q(*c));
    }
    t
}

/// `u` odd, `ℓ₂(u,u) = v`, `ℓ₃(u,u,u) = w`.
pub fn small_linf(kind: Kind) -> HomotopyAlgebra {
    let v = space("c", &[1, 2, 4]);
    let ops = [(2, table(&[(&[0, 0], 1, 1)])), (3, table(&[(&[0, 0, 0], 2, 1)]))].into_iter().collect();
    HomotopyAlgebra::new(kind, v, 4, ops)
}

/// `k[x]/x³` with `x` in degree 0 and `k[e]` with `e` odd, `e² = 0`.
/// `L ⊗ k[t]/t²` with `t` odd, `dt = 1`, for `L = sl₂` (kind `Lie`) or
/// upper triangular `2×2` matrices (kind `Ass`).
pub fn dg_base(kind: Kind, cap: usize) -> HomotopyAlgebra {
    let small = match kind {
        // e, f, h
        Kind::Lie => table(&[(&[0, 1], 2, 1), (&[1, 0], 2, -1), (&[2, 0], 0, 2), (&[0, 2], 0, -2), (&[2, 1], 1, -2), (&[1, 2], 1, 2)]),
        // e11, e12, e22
        Kind::Ass => table(&[(&[0, 0], 0, 1), (&[0, 1], 1, 1), (&[1, 2], 1, 1), (&[2, 2], 2, 1)]),
    };
    // index 2i + k for x_i ⊗ t^k
    let v = GradedSpace::from_degrees("b", &[0, 1, 0, 1, 0, 1]);
    let d = (0..3).map(|i| (2 * i + 1, Lin::basis(2 * i))).collect();
    let v = Arc::new(v.with_differential(d).unwrap());
    let mut prod: Table = BTreeMap::new();
    for (ins, out) in &small {
        for (k1, k2) in [(0, 0), (0, 1), (1, 0)] {
            // (x⊗t^a)(y⊗t^b) = (−1)^{a|y|} xy ⊗ t^{a+b}, |y| = 0
            let val = out.map_keys(|o| 2 * o + k1 + k2);
            prod.insert(vec![2 * ins[0] + k1, 2 * ins[1] + k2], val);
        }
    }
    HomotopyAlgebra::strict(kind, v, cap, &prod)
}

pub fn truncated_polynomials() -> (Arc<GradedSpace>, Table) {
    let v = space("a", &[0, 0, 0]);
    let m = table(&[(&[0, 0], 0, 1), (&[0, 1], 1, 1), (&[1, 0], 1, 1), (&[0, 2], 2, 1), (&[2, 0], 2, 1), (&[1, 1], 2, 1)]);
    (v, m)
}

pub fn exterior() -> (Arc<GradedSpace>, Table) {
    let v = space("e", &[0, 1]);
    let m = table(&[(&[0, 0], 0, 1), (&[0, 1], 1, 1), (&[1, 0], 1, 1)]);
    (v, m)
}

/// `dg_base` pushed forward along random ∞-isomorphisms: non-strict, with
/// a differential.
pub fn deformed(kind: Kind, seed: u64) -> HomotopyAlgebra {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let c = dg_base(kind, 4);
    let g = random_components(kind, c.v.clone(), 4, 0.5, &mut rng);
    c.push_forward(&g)
}
