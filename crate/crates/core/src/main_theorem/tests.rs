use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::barcobar::resolution::{kappa, presented_resolution, resolution_map, top_generator};
use crate::exact::scalar::{q, sign_q};
use crate::exact::{all_perms, Lin, Perm};
use crate::operad::presented::{self, PresentedOperad};
use crate::operad::{act_lin, Ass, Com, Operad};
use crate::tree::{Gen, Tree};

use super::construction::*;
use super::*;

fn tree_basis<O: Operad>(op: &O, cap: usize) -> Vec<O::E> {
    (2..=cap).flat_map(|n| op.basis(n)).collect()
}

#[test]
fn chain_maps_for_the_examples() {
    let (ac, wc) = (5, 2);
    assert!(m_psi(&id_com(), ac, wc).chain_failures(ac).is_empty());
    assert!(mbar_psi(&id_com(), ac, wc).chain_failures(ac).is_empty());
    assert!(m_psi(&id_ass(), 4, wc).chain_failures(4).is_empty());
    assert!(mbar_psi(&id_ass(), 4, wc).chain_failures(4).is_empty());
    assert!(m_psi(&forget(), 4, wc).chain_failures(4).is_empty());
    assert!(mbar_psi(&forget(), 4, wc).chain_failures(4).is_empty());
    assert!(m_psi(&antisymmetrization(4), 4, wc).chain_failures(4).is_empty());
    assert!(mbar_psi(&antisymmetrization(4), 4, wc).chain_failures(4).is_empty());
    assert!(m_psi(&id_lie(4), 4, wc).chain_failures(4).is_empty());
    assert!(m_psi_ns(&id_as(), ac, wc).chain_failures(ac).is_empty());
    assert!(mbar_psi_ns(&id_as(), ac, wc).chain_failures(ac).is_empty());
}

#[test]
fn scaled_generators_are_not_chain_maps() {
    let mut m = m_psi(&id_com(), 4, 2);
    for v in m.on_gens.values_mut() {
        *v = v.scaled(&q(2));
    }
    assert!(!m.chain_failures(4).is_empty());
}

#[test]
fn recipe_matches_free_extension() {
    let m = m_psi(&forget(), 4, 3);
    for t in tree_basis(m.src.as_ref(), 4) {
        assert_eq!(m.recipe(&t), m.apply(&Lin::basis(t.clone())), "{:?}", t);
    }
    let m = m_psi(&antisymmetrization(4), 4, 3);
    for t in tree_basis(m.src.as_ref(), 4) {
        assert_eq!(m.recipe(&t), m.apply(&Lin::basis(t.clone())), "{:?}", t);
    }
    let m = m_psi_ns(&id_as(), 5, 4);
    for t in tree_basis(m.src.as_ref(), 5) {
        assert_eq!(m.recipe(&t), m.apply(&Lin::basis(t.clone())));
    }
}

#[test]
fn bar_and_cobar_forms_agree() {
    fn check<QO: Operad + 'static, P: Operad + 'static>(psi: &OperadMorphism<QO, P>, cap: usize) {
        let mb = mbar_psi(psi, cap, 3);
        let m = m_psi(psi, cap, 3);
        for t in tree_basis(m.src.as_ref(), cap) {
            let x = Lin::basis(t.clone());
            assert_eq!(m.from_convolution(&mb.bar, &mb.apply(&x)), m.apply(&x), "{} on {:?}", psi.name, t);
        }
    }
    check(&id_com(), 4);
    check(&forget(), 4);
    check(&antisymmetrization(4), 4);
}

#[test]
fn closed_forms() {
    // M_{id_Com}(ℓ_n) = μ_n ⊗ ℓ_n
    let m = m_psi(&id_com(), 5, 2);
    for n in 2..=5 {
        let l = top_generator(m.res.as_ref(), n);
        assert_eq!(m.of_top(n), l.map_keys(|t| (n, t.clone())));
    }
    // M_{id_Ass}(ℓ_n) = Σ_σ m_σ ⊗ m̄_σ = Σ_σ (−1)^σ (m_id ⊗ m̄_id)^σ
    let m = m_psi(&id_ass(), 4, 2);
    for n in 2..=4 {
        let bar = |s: &Perm| m.bar_generator(n, s);
        let direct: Lin<(Perm, Tree<Gen>)> =
            all_perms(n).iter().map(|s| bar(s).map_keys(|t| (s.clone(), t.clone()))).fold(Lin::zero(), |a, b| a + b);
        assert_eq!(m.of_top(n), direct);
        let e = Perm::identity(n);
        let base = bar(&e).map_keys(|t| (e.clone(), t.clone()));
        let mut acted = Lin::zero();
        for s in all_perms(n) {
            acted += act_lin(m.target.as_ref(), &base, &s).scaled(&sign_q(s.inversions() as i64));
        }
        assert_eq!(m.of_top(n), acted);
        // (m̄_σ)^τ = (−1)^τ m̄_{στ}
        for s in all_perms(n) {
            for t in all_perms(n) {
                let lhs = act_lin(m.res.as_ref(), &bar(&s), &t);
                assert_eq!(lhs, bar(&s.compose(&t)).scaled(&sign_q(t.inversions() as i64)));
            }
        }
    }
    // M_u(ℓ_n) = μ_n ⊗ Σ_σ (−1)^σ (m̄_e)^σ
    let m = m_psi(&forget(), 4, 2);
    for n in 2..=4 {
        let e = Perm::identity(n);
        let mut s_sum = Lin::zero();
        for s in all_perms(n) {
            s_sum += act_lin(m.res.as_ref(), &m.bar_generator(n, &e), &s).scaled(&sign_q(s.inversions() as i64));
        }
        assert_eq!(m.of_top(n), s_sum.map_keys(|t| (n, t.clone())));
    }
}

#[test]
fn composites() {
    let cap = 4;
    let a = antisymmetrization(cap);
    let u = forget();
    let ua = u.after(&a);
    // M_{ΨΘ} = (Ψ ⊗ 1) M_Θ = (1 ⊗ Ω(Θ^∨)) M_Ψ
    let m_ua = m_psi(&ua, cap, 3);
    let m_a = m_psi(&a, cap, 3);
    let m_u = m_psi(&u, cap, 3);
    for t in tree_basis(m_ua.src.as_ref(), cap) {
        let x = Lin::basis(t.clone());
        let lhs = m_ua.apply(&x);
        assert_eq!(push_tensor(&u, &m_a.apply(&x)), lhs);
        let mut pulled = Lin::zero();
        for ((p, s), c) in &m_u.apply(&x) {
            for (r, k) in &m_u.omega_dual(&a, m_a.res.as_ref(), s) {
                pulled.add_term((*p, r.clone()), c * k);
            }
        }
        assert_eq!(pulled, lhs);
    }
    // M̄_{ΨΘ} = Ψ_* M̄_Θ = M̄_Ψ ∘ B(S⊗Θ)
    let b_ua = mbar_psi(&ua, cap, 3);
    let b_a = mbar_psi(&a, cap, 3);
    let b_u = mbar_psi(&u, cap, 3);
    for n in 2..=cap {
        let g = b_ua.src.free.gens.basis(n)[0];
        assert_eq!(push_forward(&u, &b_a.on_gens[&g]), b_ua.on_gens[&g]);
        assert_eq!(b_u.pull_back(&a, &b_a.bar, &b_u.on_gens[&g], cap), b_ua.on_gens[&g]);
    }
    // M_a = (1 ⊗ i) M_{id_Ass}
    let m_ass = m_psi(&id_ass(), cap, 3);
    for n in 2..=cap {
        let mut pulled = Lin::zero();
        for ((p, s), c) in &m_ass.of_top(n) {
            for (r, k) in &m_ass.omega_dual(&a, m_a.res.as_ref(), s) {
                pulled.add_term((p.clone(), r.clone()), c * k);
            }
        }
        assert_eq!(pulled, m_a.of_top(n));
    }
}

#[test]
fn psi_elements_of_antisymmetrization() {
    let a = antisymmetrization(3);
    let e = PsiElements::from_morphism(&a, 3);
    let b = a.src.basis(2)[0].clone();
    let expect: Lin<(Perm, Tree<Gen>)> =
        Lin::basis((Perm::identity(2), b.clone())) - Lin::basis((Perm::transposition(2, 0, 1), b.clone()));
    assert_eq!(e.parts[&2], expect);
    assert!(e.is_valid());
    assert_eq!(e.to_morphism("a'").apply(&b), a.apply(&b));
}

#[test]
fn psi_identities_hold_for_morphisms() {
    for e in [
        PsiElements::from_morphism(&forget(), 4).is_valid(),
        PsiElements::from_morphism(&id_com(), 4).is_valid(),
        PsiElements::from_morphism(&id_as(), 4).is_valid(),
        PsiElements::from_morphism(&antisymmetrization(4), 4).is_valid(),
        PsiElements::from_morphism(&forget_presented(4), 4).is_valid(),
    ] {
        assert!(e);
    }
}

#[test]
fn psi_identities_in_a_dg_example() {
    let linf = Arc::new(presented_resolution(Arc::new(presented::com(3)), 3, 2));
    let lie = Arc::new(crate::barcobar::resolution::koszul_dual_of(&presented::com(3)));
    let f = resolution_map(&linf, &lie);
    let l = linf.clone();
    let lt = lie.clone();
    let to_lie = OperadMorphism::new("r", linf.clone(), lie, move |t: &Tree<Gen>| {
        l.free.extend(lt.as_ref(), t, 0, |g| f.get(g).cloned().unwrap_or_default())
    });
    to_lie.check(3).unwrap();
    assert!(PsiElements::from_morphism(&to_lie, 3).is_valid());
    // the identity of L∞ has odd elements and a nonzero differential on both sides
    let id = PsiElements::from_morphism(&identity("id", linf.clone()), 3);
    assert!(id.is_valid());
    // dropping ℓ₃ breaks the differential identity
    let drop = OperadMorphism::new("drop", linf.clone(), linf.clone(), |t: &Tree<Gen>| {
        if t.weight() == 1 && t.arity() == 3 { Lin::zero() } else { Lin::basis(t.clone()) }
    });
    assert_eq!(PsiElements::from_morphism(&drop, 3).eq1_failures(), vec![3]);
}

#[test]
fn mutations_break_the_identities() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let u = PsiElements::from_morphism(&forget(), 3);
    let c = PsiElements::from_morphism(&id_com(), 4);
    let mut broken = 0;
    for i in 0..100 {
        let ok = if i % 2 == 0 {
            let mut m = u.clone();
            m.mutate(&mut rng);
            m.is_valid()
        } else {
            let mut m = c.clone();
            m.mutate(&mut rng);
            m.is_valid()
        };
        if !ok {
            broken += 1;
        }
    }
    assert_eq!(broken, 100);
}

#[test]
fn generator_values() {
    let mb = mbar_psi(&id_com(), 4, 2);
    for n in 2..=4 {
        let c = mb.bar.corolla_of(&(n, n));
        assert_eq!(mb.of_top(n), Lin::term((c, n), generator_sign(n)));
    }
    assert_eq!((kappa(2), generator_sign(2)), (q(-1), q(1)));
}

#[test]
fn manin_morphisms() {
    let cap = 4;
    let u = forget_presented(cap);
    let mu = manin_morphism(&u);
    assert!(mu.is_morphism(cap));
    assert!(mu.factors_through_identity());
    assert!(mu.square_failures(cap, 2).is_empty());
    let a = antisymmetrization_presented(cap);
    let ma = manin_morphism(&a);
    assert!(ma.is_morphism(cap));
    assert!(ma.factors_through_identity());
    assert!(ma.square_failures(cap, 2).is_empty());
    let id: OperadMorphism<PresentedOperad, PresentedOperad> = id_presented("Ass", cap).unwrap();
    assert!(manin_morphism(&id).is_morphism(cap));
    let _ = (Ass, Com);
}

