use std::sync::Arc;

use crate::exact::scalar::{q, sign_q};
use crate::exact::Lin;
use crate::operad::dual::{check_transposes, Cooperad, Transposed};
use crate::operad::presented::{ass, com, lie, PresentedOperad};
use crate::operad::{check_axioms, AsNs, Ass, Com, Operad};
use crate::tree::{Gen, Tree};

use super::resolution::*;
use super::twisting::*;
use super::*;

fn bar_com(ac: usize, wc: usize) -> Bar<Com> {
    Bar::new(Arc::new(Com), ac, wc, |n| format!("mu{}", n)).unwrap()
}

fn bar_ass(ac: usize, wc: usize) -> Bar<Ass> {
    Bar::new(Arc::new(Ass), ac, wc, |s| format!("{:?}", s.one_based())).unwrap()
}

fn pres_label(p: &PresentedOperad) -> impl Fn(&Tree<Gen>) -> String + '_ {
    move |t| crate::tree::to_json(t, &|g: &Gen| p.data.gens.label(g).to_string()).to_string()
}

#[test]
fn bar_of_com_in_arity_two() {
    let b = bar_com(4, 3);
    let b2 = b.basis(2);
    assert_eq!(b2.len(), 1);
    assert_eq!(b.degree(&b2[0]), 1);
}

#[test]
fn bar_of_ass_dimensions_by_weight() {
    let b = bar_ass(3, 3);
    let by_w = |w: usize| b.basis(3).iter().filter(|t| t.weight() == w).count();
    assert_eq!((by_w(1), by_w(2)), (6, 12));
}

#[test]
fn bar_d2_on_two_vertex_tree() {
    // sμ ⊗ sν ↦ (−1)^{|μ|} s(μ∘ν); μ₂ has degree 0 so the sign is +
    let b = bar_com(3, 2);
    let g2 = b.index[&2];
    let t = Tree::Node(g2, vec![Tree::Node(g2, vec![Tree::Leaf(0), Tree::Leaf(1)]), Tree::Leaf(2)]);
    assert_eq!(b.diff(&t), Lin::basis(b.corolla_of(&3)));
}

#[test]
fn bar_d2_sign_with_odd_labels() {
    // in B(S ⊗ Com) the labels S₂⊗μ₂ have degree −1, so the contraction is −s(...)
    let sc = Arc::new(crate::operad::Hadamard::new(crate::operad::Susp::s(), Com));
    let b = Bar::new(sc.clone(), 3, 2, |(_, n)| format!("Sm{}", n)).unwrap();
    let g2 = b.index[&(2, 2)];
    let t = Tree::Node(g2, vec![Tree::Node(g2, vec![Tree::Leaf(0), Tree::Leaf(1)]), Tree::Leaf(2)]);
    // (S₂⊗μ₂)∘₁(S₂⊗μ₂) = S₃⊗μ₃
    assert_eq!(b.diff(&t), Lin::term(b.corolla_of(&(3, 3)), q(-1)));
}

#[test]
fn bar_differentials_square_to_zero() {
    for r in [certify_bar(&bar_com(5, 4), 5), certify_bar(&bar_ass(4, 3), 4)] {
        assert!(r.ok(), "{:?}", r.failures);
        assert!(r.checked > 0);
    }
    let asns = Bar::new(Arc::new(AsNs), 5, 4, |n| format!("m{}", n)).unwrap();
    assert!(certify_bar(&asns, 5).ok());
    let l = Arc::new(lie(4));
    let bl = Bar::new(l.clone(), 4, 3, pres_label(&lie(4))).unwrap();
    assert!(certify_bar(&bl, 4).ok());
}

#[test]
fn bar_of_dg_operad() {
    // B(L∞): both d₁ and d₂ are nonzero; arity 4 with weight 3 is untruncated
    let l = Arc::new(l_infinity(4, 3));
    let b = Bar::new(l.clone(), 4, 2, |t| l.free.to_json(t).to_string()).unwrap();
    let r = certify_bar(&b, 4);
    assert!(r.ok(), "{:?}", r.failures);
}

#[test]
fn bar_is_a_dg_cooperad() {
    let b = Arc::new(bar_ass(4, 3));
    check_transposes(b.as_ref(), 3).unwrap();
    check_axioms(&Transposed { c: b }, 4).unwrap();
    let bl = Arc::new(Bar::new(Arc::new(lie(4)), 4, 3, pres_label(&lie(4))).unwrap());
    check_transposes(bl.as_ref(), 4).unwrap();
    check_axioms(&Transposed { c: bl }, 4).unwrap();
}

#[test]
fn cobar_differentials_square_to_zero() {
    let reports = [
        certify_cobar(&l_infinity(6, 4), 6),
        certify_cobar(&a_infinity(6, 4), 6),
        certify_cobar(&ass_infinity(4, 3), 4),
        certify_cobar(&c_infinity(5, 3), 5),
    ];
    for r in &reports {
        assert!(r.ok(), "{:?}", r.failures);
        assert!(r.checked > 0 && r.skipped > 0);
    }
    // a cobar with internal differential: Ω(B(Com))
    let om = Cobar::new(Arc::new(bar_com(4, 3)), 4, 3, |t| format!("{:?}", t)).unwrap();
    let r = certify_cobar(&om, 4);
    assert!(r.ok(), "{:?}", r.failures);
}

#[test]
fn cobar_is_a_dg_operad() {
    check_axioms(&l_infinity(4, 3), 4).unwrap();
    check_axioms(&c_infinity(4, 3), 4).unwrap();
}

#[test]
fn small_arity_differentials() {
    let l = l_infinity(4, 3);
    assert!(crate::operad::diff_lin(&l, &top_generator(&l, 2)).is_zero());
    let d3 = crate::operad::diff_lin(&l, &top_generator(&l, 3));
    assert_eq!(d3.len(), 3);
    let a = a_infinity(4, 3);
    assert_eq!(crate::operad::diff_lin(&a, &top_generator(&a, 3)).len(), 2);
}

#[test]
fn canonical_twisting_morphisms() {
    let b = Arc::new(bar_ass(4, 3));
    let pi = canonical_pi(b);
    assert!(pi.is_equivariant(4));
    assert_eq!(pi.mc_failures(4), Vec::<usize>::new());
    let bc = Arc::new(bar_com(5, 4));
    assert_eq!(canonical_pi(bc).mc_failures(5), Vec::<usize>::new());

    let l = Arc::new(l_infinity(5, 4));
    let iota = canonical_iota(l);
    assert!(iota.is_equivariant(5));
    assert_eq!(iota.mc_failures(5), Vec::<usize>::new());
    let c = Arc::new(c_infinity(4, 3));
    assert_eq!(canonical_iota(c).mc_failures(4), Vec::<usize>::new());
}

#[test]
fn pi_is_projection() {
    let b = Arc::new(bar_com(4, 3));
    let pi = canonical_pi(b.clone());
    for t in b.basis(4) {
        let v = pi.apply(&t);
        if t.weight() == 1 {
            assert_eq!(v, Lin::basis(4));
        } else {
            assert!(v.is_zero());
        }
    }
}

#[test]
fn resolutions_have_the_right_h0() {
    for (qop, cap) in [(com(4), 4), (lie(4), 4), (ass(4), 4)] {
        let qop = Arc::new(qop);
        let dual = koszul_dual_of(&qop);
        let res = presented_resolution(qop.clone(), 4, 3);
        let f = resolution_map(&res, &dual);
        assert_eq!(chain_failures(&res, &dual, &f, 4), Vec::<Gen>::new(), "{}", qop.name);
        let h = h0(&res, cap).unwrap();
        for n in 1..=cap {
            assert_eq!(h.basis(n).len(), dual.basis(n).len(), "H0 of {} in arity {}", res.name(), n);
        }
        // the relations of H₀ are sent into the relations of Q^!
        for r in &h.data.relations {
            let img: Lin<Tree<Gen>> = r
                .iter()
                .map(|(t, c)| res.free.extend(&dual, t, 0, |g| f[g].clone()).scaled(c))
                .fold(Lin::zero(), |mut a, b| {
                    a.add_scaled(&b, &q(1));
                    a
                });
            assert!(img.is_zero());
        }
    }
}

#[test]
fn rosetta_round_trips() {
    let comp = Arc::new(com(4));
    let liep = Arc::new(koszul_dual_of(&comp));
    let res = presented_resolution(comp, 4, 3);
    let f = resolution_map(&res, &liep);
    let alpha = twisting_of(&res, liep.clone(), &f);
    assert_eq!(alpha.mc_failures(4), Vec::<usize>::new());
    assert!(alpha.is_equivariant(4));
    assert_eq!(morphism_of(&res, &alpha), f.iter().map(|(g, v)| (*g, v.clone())).chain(
        res.free.gens.basis(3).into_iter().chain(res.free.gens.basis(4)).map(|g| (g, Lin::zero()))
    ).collect());
    let again = twisting_of(&res, liep.clone(), &morphism_of(&res, &alpha));
    assert_eq!(again.parts, alpha.parts);

    // twice a twisting morphism into Lie is still one (α⋆α is quadratic, ∂α = 0)
    let mut f2 = f.clone();
    for v in f2.values_mut() {
        *v = v.scaled(&q(2));
    }
    assert!(twisting_of(&res, liep.clone(), &f2).mc_failures(4).is_empty());
    // but twice ι is not, and s⁻¹x ↦ 2 s⁻¹x is not a chain map
    let l = Arc::new(l_infinity(4, 3));
    let two: std::collections::BTreeMap<Gen, Lin<Tree<Gen>>> =
        l.free.gens.gens.keys().flat_map(|&n| l.free.gens.basis(n)).map(|g| (g, Lin::term(l.free.corolla(g), q(2)))).collect();
    assert_eq!(twisting_of(&l, l.clone(), &two).mc_failures(4), vec![3, 4]);
    assert!(!chain_failures(&l, l.as_ref(), &two, 4).is_empty());

    // zero twisting morphism: the map through the augmentation
    let zero = twisting_of(&res, liep.clone(), &Default::default());
    assert!(zero.mc_failures(4).is_empty());
    assert!(morphism_of(&res, &zero).values().all(|v| v.is_zero()));

    // the cooperad side: C → B(Lie)
    let bl = Bar::new(liep.clone(), 4, 3, pres_label(&liep)).unwrap();
    let c = res.c.clone();
    for n in 2..=4 {
        for x in c.basis(n) {
            let g = bar_morphism_of(&alpha, &bl, &x);
            // weight one recovers sα
            let w1: Lin<Tree<Gen>> = g.filter(|t| t.weight() == 1);
            let back = w1.map_keys(|t| match t {
                Tree::Node(gg, _) => bl.elems[gg].clone(),
                _ => unreachable!(),
            });
            assert_eq!(back, alpha.apply(&x));
            // dg: C has zero differential
            assert!(g.map(|t| bl.diff(t)).is_zero(), "d g(x) for {:?}", x);
            // compatible with decompositions
            for k in 2..n {
                for i in 0..=n - k {
                    let lhs = g.map(|t| bl.decompose(t, i, k));
                    let rhs = c.decompose(&x, i, k).map(|(a, b)| {
                        bar_morphism_of(&alpha, &bl, a).tensor(&bar_morphism_of(&alpha, &bl, b))
                    });
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }
    let alpha2 = twisting_of(&res, liep.clone(), &f2);
    let x3 = c.basis(3)[0].clone();
    assert!(bar_morphism_of(&alpha2, &bl, &x3).map(|t| bl.diff(t)).is_zero());
}

#[test]
fn kappa_values() {
    assert_eq!((kappa(2), kappa(3), kappa(4), kappa(5)), (q(-1), q(-1), q(1), q(1)));
    assert_eq!(kappa(6), sign_q(15));
}

#[test]
fn non_augmented_rejected() {
    let v = Arc::new(crate::exact::GradedSpace::from_degrees("V", &[0, 0]));
    let e = Arc::new(crate::operad::EndOp::new(v));
    assert!(matches!(Bar::new(e, 3, 2, |k| format!("{:?}", k)), Err(BarCobarError::NotAugmented(_))));
    let _ = AsNs;
}
