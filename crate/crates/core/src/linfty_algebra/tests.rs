use std::collections::BTreeMap;
use std::sync::Arc;

use crate::barcobar::resolution::{koszul_dual_of, presented_resolution, resolution_map};
use crate::exact::scalar::{q, sign_q};
use crate::exact::{GradedSpace, Lin};
use crate::main_theorem::construction::{m_psi, m_psi_ns};
use crate::main_theorem::{antisymmetrization, id_as, id_ass, id_com, OperadMorphism};
use crate::operad::presented;
use crate::operad::{check_morphism, EndOp};
use crate::tree::{Gen, Tree};

use super::algebra::*;
use super::homotopy::HomotopyAlgebra;
use super::operadic::*;
use super::Kind;

pub use super::fixtures::*;

#[test]
fn strict_lie_satisfies_jacobi() {
    // sl₂ in degree 0
    let v = space("g", &[0, 0, 0]);
    let b = table(&[(&[0, 1], 2, 1), (&[1, 0], 2, -1), (&[2, 0], 0, 2), (&[0, 2], 0, -2), (&[2, 1], 1, -2), (&[1, 2], 1, 2)]);
    let g = HomotopyAlgebra::strict(Kind::Lie, v, 3, &b);
    assert!(g.symmetry_failures().is_empty());
    assert!(g.is_homotopy_algebra(3));
    let mut bad = b.clone();
    bad.insert(vec![2, 1], Lin::term(1, q(2)));
    bad.insert(vec![1, 2], Lin::term(1, q(-2)));
    assert!(!HomotopyAlgebra::strict(Kind::Lie, g.v.clone(), 3, &bad).is_homotopy_algebra(3));
}

#[test]
fn small_examples_are_homotopy_algebras() {
    assert!(small_linf(Kind::Lie).is_homotopy_algebra(4));
    assert!(small_linf(Kind::Lie).symmetry_failures().is_empty());
    assert!(small_linf(Kind::Ass).is_homotopy_algebra(4));
}

#[test]
fn end_tensor_is_a_morphism() {
    let a = GradedSpace::from_degrees("a", &[0, 1]).with_differential([(1, Lin::basis(0))].into_iter().collect()).unwrap();
    let c = GradedSpace::from_degrees("c", &[0, -1]);
    let m = end_tensor_morphism(Arc::new(EndOp::new(Arc::new(a))), Arc::new(EndOp::new(Arc::new(c))));
    m.check(3).unwrap();
}

#[test]
fn pull_back_along_antisymmetrization() {
    let (v, m) = exterior();
    let ass = associative(v.clone(), &m);
    ass.check(3).unwrap();
    let a = antisymmetrization(3);
    let lie = ass.pull_back(&a);
    lie.check(3).unwrap();
    let b = lie.op(&a.src.free.corolla(a.src.data.gens.basis(2)[0]));
    // [x,y] = xy − (−1)^{|x||y|}yx
    let e = EndOp::new(v.clone());
    let expect = e.from_fn(2, |ins| {
        let mut out = m.get(ins).cloned().unwrap_or_default();
        let s = -sign_q(v.degree(ins[0]) * v.degree(ins[1]));
        out.add_scaled(&m.get(&vec![ins[1], ins[0]]).cloned().unwrap_or_default(), &s);
        out
    });
    assert_eq!(b, expect);
}

#[test]
fn lie_algebras_pull_back_to_strict_linfty() {
    let cap = 4;
    let lie = Arc::new(koszul_dual_of(&presented::com(cap)));
    let v = space("g", &[0, 0, 0]);
    let b = table(&[(&[0, 1], 2, 1), (&[1, 0], 2, -1), (&[2, 0], 0, 2), (&[0, 2], 0, -2), (&[2, 1], 1, -2), (&[1, 2], 1, 2)]);
    let g = binary(lie.clone(), v.clone(), &b);
    g.check(3).unwrap();
    let linf = Arc::new(presented_resolution(Arc::new(presented::com(cap)), cap, 2));
    let f = resolution_map(&linf, &lie);
    let (l, lt) = (linf.clone(), lie.clone());
    let r = OperadMorphism::new("r", linf.clone(), lie.clone(), move |t: &Tree<Gen>| {
        l.free.extend(lt.as_ref(), t, 0, |g| f.get(g).cloned().unwrap_or_default())
    });
    let pulled = g.pull_back(&r);
    assert!(operad_failures(&pulled, cap).is_empty());
    let h = from_algebra(Kind::Lie, &pulled, cap);
    assert!(h.same_structure(&HomotopyAlgebra::strict(Kind::Lie, v, cap, &b), cap));
}

#[test]
fn round_trip_through_the_resolution() {
    let h = small_linf(Kind::Lie);
    let res = Arc::new(crate::main_theorem::construction::resolution_of(Arc::new(crate::operad::Com), 4, 3));
    let alg = to_algebra(&h, res);
    assert_eq!(operad_failures(&alg, 4), vec![]);
    assert!(from_algebra(Kind::Lie, &alg, 4).same_structure(&h, 4));
    let h = small_linf(Kind::Ass);
    let res = Arc::new(crate::main_theorem::construction::resolution_of(Arc::new(crate::operad::Ass), 4, 3));
    let alg = to_algebra(&h, res);
    alg.check(3).unwrap();
    assert_eq!(operad_failures(&alg, 4), vec![]);
    assert!(from_algebra(Kind::Ass, &alg, 4).same_structure(&h, 4));
}

#[test]
fn tensor_structures_satisfy_jacobi() {
    let cap = 4;
    let (va, ma) = truncated_polynomials();
    let a = commutative(va, &ma);
    let m = m_psi(&id_com(), cap, 3);
    let c = to_algebra(&small_linf(Kind::Lie), m.res.clone());
    let t = tensor_structure(&a, &c, &m);
    let h = from_algebra(Kind::Lie, &t, cap);
    assert!(h.symmetry_failures().is_empty());
    assert_eq!(h.jacobi_failures(cap), Vec::<Vec<usize>>::new());

    let (va, ma) = exterior();
    let a = associative(va.clone(), &ma);
    let m = m_psi(&id_ass(), cap, 3);
    let c = to_algebra(&small_linf(Kind::Ass), m.res.clone());
    let h = from_algebra(Kind::Lie, &tensor_structure(&a, &c, &m), cap);
    assert!(h.symmetry_failures().is_empty());
    assert_eq!(h.jacobi_failures(cap), Vec::<Vec<usize>>::new());

    let a = associative_ns(va, &ma);
    let m = m_psi_ns(&id_as(), cap, 3);
    let c = to_algebra(&small_linf(Kind::Ass), m.res.clone());
    let h = from_algebra(Kind::Ass, &tensor_structure(&a, &c, &m), cap);
    assert_eq!(h.jacobi_failures(cap), Vec::<Vec<usize>>::new());
    let _ = check_morphism::<EndOp, EndOp, fn(&_) -> Lin<_>>;
}

mod direct {
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    use super::super::morphism::{random_components, InfinityMorphism};
    use super::super::tensor::{tensor_algebra, tensor_morphism, Flavor, Strict};
    use super::*;

    fn operadic(flavor: Flavor, a: &Strict, c: &HomotopyAlgebra, cap: usize) -> HomotopyAlgebra {
        match flavor {
            Flavor::Com => {
                let m = m_psi(&id_com(), cap, 3);
                let alg = tensor_structure(&commutative(a.v.clone(), &a.product), &to_algebra(c, m.res.clone()), &m);
                from_algebra(Kind::Lie, &alg, cap)
            }
            Flavor::Ass => {
                let m = m_psi(&id_ass(), cap, 3);
                let alg = tensor_structure(&associative(a.v.clone(), &a.product), &to_algebra(c, m.res.clone()), &m);
                from_algebra(Kind::Lie, &alg, cap)
            }
            Flavor::AsNs => {
                let m = m_psi_ns(&id_as(), cap, 3);
                let alg = tensor_structure(&associative_ns(a.v.clone(), &a.product), &to_algebra(c, m.res.clone()), &m);
                from_algebra(Kind::Ass, &alg, cap)
            }
        }
    }

    #[test]
    fn bases_are_dg_algebras() {
        assert!(dg_base(Kind::Lie, 4).is_homotopy_algebra(3));
        assert!(dg_base(Kind::Lie, 4).symmetry_failures().is_empty());
        assert!(dg_base(Kind::Ass, 4).is_homotopy_algebra(3));
    }

    #[test]
    fn push_forward_gives_homotopy_algebras() {
        for seed in 0..3 {
            let c = deformed(Kind::Lie, seed);
            assert!(c.is_homotopy_algebra(4));
            assert!(c.symmetry_failures().is_empty());
            assert!(deformed(Kind::Ass, seed).is_homotopy_algebra(4));
        }
    }

    #[test]
    fn deformed_structures_are_algebras_over_the_resolutions() {
        let c = deformed(Kind::Lie, 1);
        assert!(c.ops[&2].len() > 1 && c.ops[&3].len() > 1);
        let res = Arc::new(crate::main_theorem::construction::resolution_of(Arc::new(crate::operad::Com), 4, 3));
        let alg = to_algebra(&c, res);
        assert_eq!(operad_failures(&alg, 4), vec![]);
        assert!(from_algebra(Kind::Lie, &alg, 4).same_structure(&c, 4));
        // rescaling ℓ₃ alone breaks it
        let mut bad = c.clone();
        bad.ops.get_mut(&3).unwrap().values_mut().for_each(|v| *v = v.scaled(&q(2)));
        assert!(!bad.is_homotopy_algebra(4));
        let res = Arc::new(crate::main_theorem::construction::resolution_of(Arc::new(crate::operad::Com), 4, 3));
        assert!(!operad_failures(&to_algebra(&bad, res), 4).is_empty());
        let c = deformed(Kind::Ass, 2);
        let res = Arc::new(crate::main_theorem::construction::resolution_of(Arc::new(crate::operad::Ass), 4, 3));
        assert_eq!(operad_failures(&to_algebra(&c, res), 4), vec![]);
    }

    /// `k[e]/e²` with `e` odd and the algebra maps `e ↦ λe`.
    fn scaling(l: i64) -> impl Fn(usize) -> Lin<usize> + Sync {
        move |x| if x == 0 { Lin::basis(0) } else { Lin::term(x, q(l)) }
    }

    #[test]
    fn bifunctoriality() {
        let (ve, me) = exterior();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for (trial, flavor) in [Flavor::Com, Flavor::Com, Flavor::Ass, Flavor::Ass, Flavor::AsNs].into_iter().enumerate() {
            let a = Strict::new(flavor, ve.clone(), me.clone());
            let kind = flavor.coefficients();
            let c = deformed(kind, 20 + trial as u64);
            let g = random_components(kind, c.v.clone(), 3, 0.5, &mut rng);
            let c2 = c.push_forward(&g);
            let g2 = random_components(kind, c.v.clone(), 3, 0.5, &mut rng);
            let c3 = c2.push_forward(&g2);
            assert!(g.comps[&2].len() > 0);
            assert!(g.failures(&c, &c2, 3).is_empty());
            let (l1, l2) = (trial as i64 + 2, -(trial as i64) - 1);
            let fg = tensor_morphism(&a, &a, scaling(l1), &g);
            let fg2 = tensor_morphism(&a, &a, scaling(l2), &g2);
            let both = tensor_morphism(&a, &a, scaling(l1 * l2), &g.then(&g2));
            let (t1, t2, t3) = (tensor_algebra(&a, &c), tensor_algebra(&a, &c2), tensor_algebra(&a, &c3));
            assert!(fg.failures(&t1, &t2, 3).is_empty(), "{:?}", flavor);
            assert!(fg2.failures(&t2, &t3, 3).is_empty());
            assert_eq!(both.differing_arities(&fg.then(&fg2), 3), Vec::<usize>::new(), "{:?}", flavor);
        }
    }

    #[test]
    fn identities_and_strict_maps() {
        let (ve, me) = exterior();
        let a = Strict::new(Flavor::Com, ve.clone(), me.clone());
        let c = deformed(Kind::Lie, 3);
        let id = InfinityMorphism::identity(Kind::Lie, c.v.clone(), 3);
        let t = tensor_algebra(&a, &c);
        assert_eq!(tensor_morphism(&a, &a, |x| Lin::basis(x), &id), InfinityMorphism::identity(Kind::Lie, t.v.clone(), 3));
        // g strict: f ⊗ g strict
        let f = tensor_morphism(&a, &a, scaling(3), &id);
        assert!(f.is_strict());
        assert!(f.failures(&t, &t, 3).is_empty());
    }

    #[test]
    fn direct_tensor_matches_operadic() {
        let cap = 4;
        let (va, ma) = truncated_polynomials();
        let a = Strict::new(Flavor::Com, va, ma);
        let c = small_linf(Kind::Lie);
        let d = tensor_algebra(&a, &c);
        assert_eq!(d.differing_arities(&operadic(Flavor::Com, &a, &c, cap), cap), Vec::<usize>::new());
        let (ve, me) = exterior();
        let a = Strict::new(Flavor::Com, ve.clone(), me.clone());
        let c = deformed(Kind::Lie, 1);
        assert_eq!(tensor_algebra(&a, &c).differing_arities(&operadic(Flavor::Com, &a, &c, cap), cap), Vec::<usize>::new());
        for flavor in [Flavor::Ass, Flavor::AsNs] {
            let a = Strict::new(flavor, ve.clone(), me.clone());
            let c = deformed(Kind::Ass, 2);
            let d = tensor_algebra(&a, &c);
            assert!(d.is_homotopy_algebra(cap));
            assert_eq!(d.differing_arities(&operadic(flavor, &a, &c, cap), cap), Vec::<usize>::new(), "{:?}", flavor);
        }
    }
}

mod hom_tests {
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    use super::super::hom::*;
    use super::super::morphism::random_components;
    use super::super::tensor::{tensor_algebra, Flavor, Strict};
    use super::*;

    fn two_dim(kind: Kind) -> HomotopyAlgebra {
        // e₀ odd, e₁ even, ℓ₂(e₀,e₀) = e₁
        let v = space("E", &[1, 2]);
        HomotopyAlgebra::strict(kind, v, 4, &table(&[(&[0, 0], 1, 1)]))
    }

    #[test]
    fn hom_matches_tensor_with_the_dual() {
        let (ve, me) = exterior();
        for flavor in [Flavor::Com, Flavor::Ass, Flavor::AsNs] {
            let a = Strict::new(flavor, ve.clone(), me.clone());
            let kind = flavor.coefficients();
            let e = two_dim(kind);
            let h = hom_structure(&CCoalgebra::dual_of(&e), &a);
            let t = tensor_algebra(&a, &e);
            assert_eq!(h.v.diff, t.v.diff);
            assert_eq!(h.differing_arities(&t, 4), Vec::<usize>::new(), "{:?}", flavor);
        }
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for flavor in [Flavor::Com, Flavor::Ass] {
            let a = Strict::new(flavor, ve.clone(), me.clone());
            let kind = flavor.coefficients();
            let base = dg_base(kind, 3);
            let e = base.push_forward(&random_components(kind, base.v.clone(), 3, 0.4, &mut rng));
            let h = hom_structure(&CCoalgebra::dual_of(&e), &a);
            let t = tensor_algebra(&a, &e);
            let degs = |v: &GradedSpace| v.basis.iter().map(|b| b.1).collect::<Vec<_>>();
            assert_eq!(degs(&h.v), degs(&t.v));
            assert_eq!(h.v.diff, t.v.diff);
            assert_eq!(h.differing_arities(&t, 3), Vec::<usize>::new(), "{:?}", flavor);
            assert!(h.is_homotopy_algebra(3));
        }
    }

    #[test]
    fn trivial_coalgebra() {
        let (ve, me) = exterior();
        let a = Strict::new(Flavor::Com, ve, me);
        let h = hom_structure(&CCoalgebra::trivial(Kind::Lie, 0, 4), &a);
        assert_eq!(h.dim(), 2);
        assert!(h.ops.is_empty());
    }
}

mod classical {
    use crate::exact::all_perms;
    use crate::main_theorem::forget;

    use super::super::tensor::{tensor_algebra, Flavor, Strict};
    use super::*;

    #[test]
    fn mc_residuals() {
        let v = space("g", &[-1, -2]);
        let g = HomotopyAlgebra::strict(Kind::Lie, v.clone(), 3, &table(&[(&[0, 0], 1, 1)]));
        assert!(g.mc_residual(&Lin::zero()).is_zero());
        for t in -3..=3i64 {
            let r = g.mc_residual(&Lin::term(0, q(t)));
            assert_eq!(r, Lin::term(1, crate::exact::qr(t * t, 2)));
            assert_eq!(r.is_zero(), t == 0);
        }
        let ab = HomotopyAlgebra::abelian(Kind::Lie, v, 3);
        assert!(ab.mc_residual(&Lin::term(0, q(5))).is_zero());
        // m₂(a,a) = b, m₃(a,a,a) = c, everything else zero
        let v = space("n", &[-1, -2, -2]);
        let ops = [(2, table(&[(&[0, 0], 1, 1)])), (3, table(&[(&[0, 0, 0], 2, 1)]))].into_iter().collect();
        let n = HomotopyAlgebra::new(Kind::Ass, v, 3, ops);
        assert!(n.is_homotopy_algebra(3));
        let r = n.mc_residual(&Lin::term(0, q(2)));
        assert_eq!(r, Lin::term(1, q(4)) + Lin::term(2, q(8)));
    }

    /// `ℓ_n(a₁⊗c₁,…) = (−1)^ε μ_n(a…)⊗ℓ_n(c…)`, `ε` from moving the `c`'s
    /// past the `a`'s and `ℓ_n` past all `a`'s.
    #[test]
    fn commutative_closed_form() {
        let (ve, me) = exterior();
        let a = Strict::new(Flavor::Com, ve.clone(), me);
        let c = small_linf(Kind::Lie);
        let t = tensor_algebra(&a, &c);
        let dc = c.dim();
        let mut checked = 0;
        for n in 2..=4 {
            for (ins, out) in t.ops.get(&n).into_iter().flatten() {
                let ai: Vec<usize> = ins.iter().map(|x| x / dc).collect();
                let ci: Vec<usize> = ins.iter().map(|x| x % dc).collect();
                let mut e = (n as i64 - 2) * ai.iter().map(|&x| ve.degree(x)).sum::<i64>();
                for i in 0..n {
                    for j in i + 1..n {
                        e += c.v.degree(ci[i]) * ve.degree(ai[j]);
                    }
                }
                let mut expect = Lin::zero();
                for (x, k) in &a.mu(&ai) {
                    for (y, l) in &c.op(&ci) {
                        expect.add_term(x * dc + y, k * l * sign_q(e));
                    }
                }
                assert_eq!(*out, expect, "{:?}", ins);
                checked += 1;
            }
        }
        assert!(checked > 0);
    }

    /// `ℓ_n(x₁,…,x_n) = Σ_σ ±m_n(x_{σ(1)},…,x_{σ(n)})` with the sign of the
    /// permutation times the Koszul sign.
    fn antisymmetrize(m: &HomotopyAlgebra) -> HomotopyAlgebra {
        let dim = m.dim();
        let mut ops = BTreeMap::new();
        for n in 2..=m.cap {
            let mut tab: Table = BTreeMap::new();
            let mut ins = vec![0; n];
            loop {
                let mut v = Lin::zero();
                for s in all_perms(n) {
                    let p = s.images();
                    let mut e = 0;
                    for j in 0..n {
                        for k in j + 1..n {
                            if p[j] > p[k] {
                                e += 1 + m.v.degree(ins[p[j]]) * m.v.degree(ins[p[k]]);
                            }
                        }
                    }
                    let ys: Vec<usize> = p.iter().map(|&i| ins[i]).collect();
                    v.add_scaled(&m.op(&ys), &sign_q(e));
                }
                if !v.is_zero() {
                    tab.insert(ins.clone(), v);
                }
                let mut i = n;
                while i > 0 && ins[i - 1] + 1 == dim {
                    ins[i - 1] = 0;
                    i -= 1;
                }
                if i == 0 {
                    break;
                }
                ins[i - 1] += 1;
            }
            ops.insert(n, tab);
        }
        HomotopyAlgebra::new(Kind::Lie, m.v.clone(), m.cap, ops)
    }

    #[test]
    fn associative_structures_are_antisymmetrizations() {
        let cap = 4;
        let (ve, me) = exterior();
        let c = small_linf(Kind::Ass);
        let ns = tensor_algebra(&Strict::new(Flavor::AsNs, ve.clone(), me.clone()), &c);
        let anti = antisymmetrize(&ns);
        assert!(anti.is_homotopy_algebra(cap));
        // identity of Ass
        let sym = tensor_algebra(&Strict::new(Flavor::Ass, ve.clone(), me.clone()), &c);
        assert_eq!(sym.differing_arities(&anti, cap), Vec::<usize>::new());
        // the forgetful map Ass → Com, through the operadic pull back
        let m = m_psi(&forget(), cap, 3);
        let alg = tensor_structure(&commutative(ve.clone(), &me), &to_algebra(&c, m.res.clone()), &m);
        let u = from_algebra(Kind::Lie, &alg, cap);
        assert_eq!(u.differing_arities(&anti, cap), Vec::<usize>::new());
    }

    #[test]
    fn structure_dump_is_stable() {
        let c = small_linf(Kind::Lie);
        let a = serde_json::to_string(&c.dump()).unwrap();
        let b = serde_json::to_string(&small_linf(Kind::Lie).dump()).unwrap();
        assert_eq!(a, b);
        assert!(a.contains("[[0,0],1,\"1\"]"), "{}", a);
    }
}
