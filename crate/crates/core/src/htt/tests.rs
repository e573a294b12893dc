use std::sync::Arc;

use crate::exact::{q, GradedSpace, Lin};
use crate::linfty_algebra::morphism::InfinityMorphism;
use crate::linfty_algebra::tensor::Flavor;
use crate::linfty_algebra::{HomotopyAlgebra, Kind};

use super::compare::*;
use super::perturb::Perturbation;
use super::*;

#[test]
fn hodge_retractions() {
    for kind in [Kind::Lie, Kind::Ass] {
        for b in [three_dim(kind, 4), four_dim(kind, 4)] {
            assert!(b.is_homotopy_algebra(4));
            let r = Retraction::onto_homology(b.v.clone());
            assert_eq!(r.check(), Ok(()));
            assert!(r.side_conditions().all());
            assert_eq!(r.c.dim(), b.dim() - 2);
        }
    }
    let r = Retraction::onto_homology(four_dim(Kind::Lie, 4).v);
    let ra = Retraction::tensor_left(&exterior(Flavor::Com).v, &r);
    assert_eq!(ra.check(), Ok(()));
    assert!(ra.side_conditions().all());
}

#[test]
fn broken_retractions_are_rejected() {
    let b = four_dim(Kind::Lie, 3);
    let mut r = Retraction::onto_homology(b.v.clone());
    r.h = r.h.scaled(&q(2));
    assert_eq!(r.check(), Err(RetractionError::Homotopy));
}

#[test]
fn trivial_retraction_changes_nothing() {
    let b = four_dim(Kind::Lie, 4);
    let r = Retraction::trivial(b.v.clone());
    let t = transfer(&b, &r);
    assert!(t.structure.same_structure(&b, 4));
    assert_eq!(t.i_inf, InfinityMorphism::identity(Kind::Lie, b.v.clone(), 4));
    assert_eq!(Perturbation::new(&b, &r).p_inf(), InfinityMorphism::identity(Kind::Lie, b.v.clone(), 4));
}

/// `ℓ₃(x,y,z) = −p([h[x,y],z] + [h[y,z],x] + [h[z,x],y])` for inputs of
/// degree 0, from expanding the three binary trees by hand.
#[test]
fn ternary_bracket_by_hand() {
    // x, y, w (0), z (1), u (1), v (0), du = v, [x,y] = v, [u,w] = z
    let v = GradedSpace::from_degrees("B", &[0, 0, 0, 1, 1, 0]);
    let v = Arc::new(v.with_differential([(4, Lin::basis(5))].into_iter().collect()).unwrap());
    let mut prod = crate::linfty_algebra::algebra::Table::new();
    for (ins, o, c) in [([0, 1], 5, 1), ([1, 0], 5, -1), ([4, 2], 3, 1), ([2, 4], 3, -1)] {
        prod.entry(ins.to_vec()).or_default().add_term(o, q(c));
    }
    let b = HomotopyAlgebra::strict(Kind::Lie, v, 3, &prod);
    assert!(b.is_homotopy_algebra(3));
    let r = Retraction::onto_homology(b.v.clone());
    let t = transfer(&b, &r);
    assert!(t.structure.is_homotopy_algebra(3));
    let br = |x: &Lin<usize>, y: &Lin<usize>| b.op_lin(&[x.clone(), y.clone()]);
    let i = |k: usize| r.i.apply(&Lin::basis(k));
    let h = |x: Lin<usize>| r.h.apply(&x);
    let mut nonzero = 0;
    for ins in crate::operad::stock::tuples(r.c.dim(), 3) {
        let (x, y, z) = (i(ins[0]), i(ins[1]), i(ins[2]));
        let s = br(&h(br(&x, &y)), &z) + br(&h(br(&y, &z)), &x) + br(&h(br(&z, &x)), &y);
        let expect = -r.p.apply(&s);
        assert_eq!(t.structure.op(&ins), expect, "{:?}", ins);
        nonzero += usize::from(!expect.is_zero());
    }
    assert!(nonzero > 0);
}

#[test]
fn transferred_structures_are_homotopy_algebras() {
    for kind in [Kind::Lie, Kind::Ass] {
        let b = four_dim(kind, 4);
        let r = Retraction::onto_homology(b.v.clone());
        let t = transfer(&b, &r);
        assert!(t.structure.is_homotopy_algebra(4), "{:?}", kind);
        assert!(!t.structure.ops.get(&3).map_or(true, |x| x.is_empty()), "{:?}", kind);
        assert!(t.structure.symmetry_failures().is_empty());
        assert!(t.i_inf.failures(&t.structure, &b, 4).is_empty(), "{:?}", kind);
        // transferring again along the trivial retraction
        let again = transfer(&t.structure, &Retraction::trivial(r.c.clone()));
        assert!(again.structure.same_structure(&t.structure, 4));
    }
}

#[test]
fn perturbation_agrees_with_the_tree_formula() {
    for kind in [Kind::Lie, Kind::Ass] {
        let b = four_dim(kind, 4);
        let r = Retraction::onto_homology(b.v.clone());
        let t = transfer(&b, &r);
        let pl = Perturbation::new(&b, &r);
        assert!(pl.structure().same_structure(&t.structure, 4), "{:?}", kind);
        assert_eq!(pl.i_inf().differing_arities(&t.i_inf, 4), Vec::<usize>::new(), "{:?}", kind);
        let p = pl.p_inf();
        assert_eq!(p.linear_part(0), r.p.apply(&Lin::basis(0)));
        assert_eq!(p.failures(&b, &t.structure, 4), Vec::<Vec<usize>>::new(), "{:?}", kind);
        // p_∞ i_∞ = 1 under the side conditions
        let pi = t.i_inf.then(&p);
        assert_eq!(pi.differing_arities(&InfinityMorphism::identity(kind, r.c.clone(), 4), 4), Vec::<usize>::new());
    }
}


/// `h − g p` with `g : x ↦ v`, so `h i ≠ 0`.
fn without_side_conditions(kind: Kind) -> (HomotopyAlgebra, Retraction) {
    let b = four_dim(kind, 4);
    let r = Retraction::onto_homology(b.v.clone());
    let g = crate::exact::LinearMap::from_entries(r.c.clone(), r.b.clone(), 1, &[(3, 0, q(1))]).unwrap();
    let r2 = r.perturbed(&g).unwrap();
    assert!(!r2.side_conditions().hi);
    (b, r2)
}

#[test]
fn transfer_without_side_conditions() {
    for kind in [Kind::Lie, Kind::Ass] {
        let (b, r) = without_side_conditions(kind);
        let t = transfer(&b, &r);
        assert!(t.structure.is_homotopy_algebra(4));
        assert!(t.i_inf.failures(&t.structure, &b, 4).is_empty());
    }
}

#[test]
fn both_paths_agree() {
    for c in corpus(4) {
        let (first, second) = two_structures(&c.a, &c.b, &c.r);
        assert_eq!(first.differing_arities(&second, 4), Vec::<usize>::new(), "{}", c.name);
        assert!(first.is_homotopy_algebra(4), "{}", c.name);
        if c.name.ends_with("four") {
            assert!(first.ops.contains_key(&3), "{}", c.name);
        }
    }
    for (flavor, kind) in [(Flavor::Com, Kind::Lie), (Flavor::Ass, Kind::Ass), (Flavor::AsNs, Kind::Ass)] {
        let (b, r) = without_side_conditions(kind);
        let (first, second) = two_structures(&exterior(flavor), &b, &r);
        assert_eq!(first.differing_arities(&second, 4), Vec::<usize>::new(), "{:?}", flavor);
    }
}

#[test]
fn morphisms_agree() {
    for c in corpus(3) {
        let m = morphism_compat(&c.a, &c.b, &c.r, 3);
        assert!(m.holds(), "{} {:?}", c.name, m);
        if c.name.ends_with("four") {
            let p = Perturbation::new(&c.b, &c.r).p_inf();
            assert!(!p.comps[&2].is_empty() && !transfer(&c.b, &c.r).i_inf.comps[&2].is_empty());
        }
    }
    // outside the hypotheses of the perturbation formula: only recorded
    let (b, r) = without_side_conditions(Kind::Lie);
    let m = morphism_compat(&exterior(Flavor::Com), &b, &r, 3);
    assert!(m.i_differs.is_empty() && m.i_is_morphism);
    eprintln!("without side conditions: {:?}", m);
}
