use std::sync::Arc;

use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::barcobar::resolution::{kappa, presented_resolution, resolution_map, top_generator};
use crate::exact::scalar::{factorial, q, qr, sign_q};
use crate::exact::{all_perms, koszul_exponent, GradedSpace, Lin, Perm};
use crate::htt::compare::{corpus, exterior as exterior_strict, four_dim, morphism_compat, two_structures};
use crate::htt::transfer::transfer;
use crate::htt::Retraction;
use crate::linfty_algebra::fixtures::{deformed, exterior, space, table};
use crate::linfty_algebra::hom::{hom_structure, CCoalgebra};
use crate::linfty_algebra::morphism::random_components;
use crate::linfty_algebra::tensor::{tensor_algebra, tensor_morphism, Flavor, Strict};
use crate::linfty_algebra::{HomotopyAlgebra, Kind};
use crate::main_theorem::construction::{m_psi, m_psi_ns};
use crate::main_theorem::*;
use crate::mc_and_cobar::bijection::{mc_bijections, tensor_bijections};
use crate::mc_and_cobar::cobar::CompleteCobar;
use crate::mc_and_cobar::deformation::{deformation_complex, element_of, preserves_products};
use crate::mc_and_cobar::examples::*;
use crate::mc_and_cobar::filtered::{free_ass, free_com, free_lie, Component};
use crate::mc_and_cobar::twisting::mc_tw_with;
use crate::operad::presented::{self, PresentedOperad};
use crate::operad::{act_lin, check_axioms, AsNs, Ass, Com, Operad};
use crate::tree::Gen;

use super::{run, Assertion, Check, Config, Report};

const FLAVORS: [Flavor; 3] = [Flavor::Com, Flavor::Ass, Flavor::AsNs];

fn check<F: Fn(&Config) -> Vec<Assertion> + Send + Sync + 'static>(f: F) -> Check {
    Box::new(f)
}

/// Koszul signs against adjacent transpositions, multiplicativity and the
/// suspension signs `κ_n`.
pub fn signs(cfg: &Config) -> Report {
    let checks = vec![
        check(|cfg| {
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
            let mut bad = vec![];
            for n in 1..=cfg.arity_cap + 1 {
                for s in all_perms(n) {
                    let d: Vec<i64> = (0..n).map(|_| rng.gen_range(-2..=2)).collect();
                    // bubble the factors into place, one swap at a time
                    let mut items: Vec<(usize, i64)> = (0..n).map(|i| (s.apply(i), d[i])).collect();
                    let mut e = 0;
                    for i in 0..n {
                        for j in 0..n - 1 - i {
                            if items[j].0 > items[j + 1].0 {
                                e += items[j].1 * items[j + 1].1;
                                items.swap(j, j + 1);
                            }
                        }
                    }
                    if (e - koszul_exponent(&s, &d)).rem_euclid(2) != 0 {
                        bad.push((s.one_based(), d));
                    }
                }
            }
            vec![Assertion::empty("koszul sign against adjacent swaps", &bad)]
        }),
        check(|cfg| {
            let mut bad = vec![];
            let n = cfg.arity_cap.min(4);
            let d: Vec<i64> = (0..n as i64).map(|i| i % 3 - 1).collect();
            for s in all_perms(n) {
                for t in all_perms(n) {
                    let st = Perm::new((0..n).map(|i| s.apply(t.apply(i))).collect()).unwrap();
                    let lhs = koszul_exponent(&st, &d);
                    let rhs = koszul_exponent(&t, &d) + koszul_exponent(&s, &t.act_on(&d));
                    if (lhs - rhs).rem_euclid(2) != 0 {
                        bad.push((s.one_based(), t.one_based()));
                    }
                }
            }
            vec![Assertion::empty("koszul sign is a cocycle", &bad)]
        }),
        check(|_| {
            let c = koszul_exponent(&Perm::cycle(3, &[0, 1, 2]), &[1, 2, 1]);
            let kap: Vec<i64> = (1..=8).map(|n| kappa(n).to_i64().unwrap()).collect();
            vec![
                Assertion::new("(123) on degrees (1,2,1) is odd", c % 2 != 0, format!("exponent {}", c)),
                Assertion::new("κ_n has period 4", kap == vec![1, -1, -1, 1, 1, -1, -1, 1], format!("{:?}", kap)),
            ]
        }),
    ];
    run("signs", cfg, checks)
}

fn dims<O: Operad>(op: &O, cap: usize) -> Vec<usize> {
    (1..=cap).map(|n| op.basis(n).len()).collect()
}

fn fact(n: usize) -> usize {
    factorial(n).to_integer().to_usize().unwrap()
}

/// Dimension oracles from the quotient of the free operad and the operad
/// axioms on every stock operad.
pub fn operad_axioms(cfg: &Config) -> Report {
    let checks = vec![
        check(|cfg| {
            let cap = cfg.arity_cap.max(5);
            let com = dims(&presented::com(cap), cap);
            let lie = dims(&presented::lie(cap), cap);
            let ass = dims(&presented::ass(cap), cap);
            vec![
                Assertion::new("dim Com(n) = 1", com.iter().all(|&d| d == 1), format!("{:?}", com)),
                Assertion::new("dim Lie(n) = (n−1)!", lie == (1..=cap).map(|n| fact(n - 1)).collect::<Vec<_>>(), format!("{:?}", lie)),
                Assertion::new("dim Ass(n) = n!", ass == (1..=cap).map(fact).collect::<Vec<_>>(), format!("{:?}", ass)),
            ]
        }),
        check(|cfg| {
            let cap = cfg.arity_cap;
            let r = |name: &str, x: Result<(), crate::operad::AxiomFailure>| {
                Assertion::new(format!("axioms of {}", name), x.is_ok(), x.err().map(|e| format!("{:?}", e)).unwrap_or_default())
            };
            vec![
                r("Com", check_axioms(&Com, cap)),
                r("Ass", check_axioms(&Ass, cap)),
                r("As", check_axioms(&AsNs, cap)),
                r("Lie (presented)", check_axioms(&presented::lie(cap), cap)),
                r("Com (presented)", check_axioms(&presented::com(cap), cap)),
            ]
        }),
        check(|cfg| {
            let cap = cfg.arity_cap;
            let lie = crate::operad::json::load(&crate::operad::json::stock_spec("Lie").unwrap(), cap).unwrap();
            let d = dims(&lie, cap);
            vec![Assertion::new("Lie from its JSON presentation", d == (1..=cap).map(|n| fact(n - 1)).collect::<Vec<_>>(), format!("{:?}", d))]
        }),
    ];
    run("operad-axioms", cfg, checks)
}

fn chain<QO: Operad + 'static, P: Operad + 'static>(psi: &OperadMorphism<QO, P>, cap: usize, ns: bool) -> Assertion {
    let f = if ns { m_psi_ns(psi, cap, 2).chain_failures(cap) } else { m_psi(psi, cap, 2).chain_failures(cap) };
    Assertion::empty(format!("M_{} is a chain map up to arity {}", psi.name, cap), &f)
}

fn psi_identities<QO: Operad + 'static, P: Operad + 'static>(psi: &OperadMorphism<QO, P>, cap: usize) -> Vec<Assertion> {
    let e = PsiElements::from_morphism(psi, cap);
    vec![
        Assertion::empty(format!("Ψ_n of {} invariant", psi.name), &e.invariance_failures()),
        Assertion::empty(format!("first identity for {}", psi.name), &e.eq1_failures()),
        Assertion::empty(format!("second identity for {}, all shapes to arity {}", psi.name, cap), &e.eq2_failures(false)),
    ]
}

fn mutation_trials<QO: Operad + 'static, P: Operad + 'static>(psi: &OperadMorphism<QO, P>, cap: usize, trials: usize, rng: &mut ChaCha8Rng) -> usize {
    let e = PsiElements::from_morphism(psi, cap);
    (0..trials)
        .filter(|_| {
            let mut m = e.clone();
            m.mutate(rng);
            !m.is_valid()
        })
        .count()
}

/// Chain maps, the `Ψ_n` identities with mutation trials, and the closed forms.
pub fn main_theorem(cfg: &Config) -> Report {
    let checks = vec![
        check(|cfg| vec![chain(&id_com(), cfg.arity_cap, false), chain(&id_as(), cfg.arity_cap, true)]),
        check(|cfg| vec![chain(&id_ass(), cfg.arity_cap, false)]),
        check(|cfg| vec![chain(&forget(), cfg.arity_cap, false)]),
        check(|cfg| vec![chain(&antisymmetrization(cfg.arity_cap), cfg.arity_cap, false)]),
        check(|cfg| vec![chain(&id_lie(cfg.arity_cap), cfg.arity_cap, false)]),
        check(|cfg| {
            let mut m = m_psi(&id_com(), cfg.arity_cap.min(4), 2);
            for v in m.on_gens.values_mut() {
                *v = v.scaled(&q(2));
            }
            vec![Assertion::new("doubled M_id_com is not a chain map", !m.chain_failures(cfg.arity_cap.min(4)).is_empty(), "")]
        }),
        check(|cfg| psi_identities(&id_com(), cfg.arity_cap)),
        check(|cfg| psi_identities(&id_lie(cfg.arity_cap), cfg.arity_cap)),
        check(|cfg| psi_identities(&id_ass(), cfg.arity_cap)),
        check(|cfg| psi_identities(&forget(), cfg.arity_cap)),
        check(|cfg| psi_identities(&antisymmetrization(cfg.arity_cap), cfg.arity_cap)),
        check(|cfg| psi_identities(&id_as(), cfg.arity_cap)),
        check(|cfg| {
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
            let cap = cfg.arity_cap.min(4);
            let k = cfg.samples / 5;
            let trials = [k, k, k, k, cfg.samples - 4 * k];
            let broken = mutation_trials(&id_com(), cap, trials[0], &mut rng)
                + mutation_trials(&id_lie(cap), cap, trials[1], &mut rng)
                + mutation_trials(&id_ass(), cap.min(3), trials[2], &mut rng)
                + mutation_trials(&forget(), cap.min(3), trials[3], &mut rng)
                + mutation_trials(&antisymmetrization(cap), cap, trials[4], &mut rng);
            vec![Assertion::new("single-coefficient mutations break an identity", broken == cfg.samples, format!("{}/{}", broken, cfg.samples))]
        }),
        check(|cfg| closed_forms(cfg.arity_cap)),
    ];
    run("main-theorem", cfg, checks)
}

fn closed_forms(cap: usize) -> Vec<Assertion> {
    let mut out = vec![];
    let m = m_psi(&id_com(), cap, 2);
    let ok = (2..=cap).all(|n| m.of_top(n) == top_generator(m.res.as_ref(), n).map_keys(|t| (n, t.clone())));
    out.push(Assertion::new("M_id_com(ℓ_n) = μ_n ⊗ ℓ_n", ok, ""));

    let m = m_psi(&id_ass(), cap, 2);
    let mut ok = true;
    for n in 2..=cap {
        let e = Perm::identity(n);
        let base = m.bar_generator(n, &e).map_keys(|t| (e.clone(), t.clone()));
        let mut acted = Lin::zero();
        for s in all_perms(n) {
            acted += act_lin(m.target.as_ref(), &base, &s).scaled(&sign_q(s.inversions() as i64));
        }
        ok &= m.of_top(n) == acted;
    }
    out.push(Assertion::new("M_id_ass(ℓ_n) = Σ_σ (−1)^σ (m_id ⊗ m̄_id)^σ", ok, ""));

    let m = m_psi(&forget(), cap, 2);
    let mut ok = true;
    for n in 2..=cap {
        let e = Perm::identity(n);
        let mut s_sum = Lin::zero();
        for s in all_perms(n) {
            s_sum += act_lin(m.res.as_ref(), &m.bar_generator(n, &e), &s).scaled(&sign_q(s.inversions() as i64));
        }
        ok &= m.of_top(n) == s_sum.map_keys(|t| (n, t.clone()));
    }
    out.push(Assertion::new("M_u(ℓ_n) = μ_n ⊗ Σ_σ (−1)^σ (m̄_e)^σ", ok, ""));

    let a = antisymmetrization(cap);
    let m_a = m_psi(&a, cap, 2);
    let m_ass = m_psi(&id_ass(), cap, 2);
    let mut ok = true;
    for n in 2..=cap {
        let mut pulled = Lin::zero();
        for ((p, s), c) in &m_ass.of_top(n) {
            for (r, k) in &m_ass.omega_dual(&a, m_a.res.as_ref(), s) {
                pulled.add_term((p.clone(), r.clone()), c * k);
            }
        }
        ok &= pulled == m_a.of_top(n);
    }
    out.push(Assertion::new("M_a = (1 ⊗ i) ∘ M_id_ass", ok, ""));
    out
}

fn manin_checks<P: Operad + 'static>(psi: &OperadMorphism<PresentedOperad, P>, cap: usize, wc: usize) -> Vec<Assertion> {
    let m = manin_morphism(psi);
    vec![
        Assertion::new(format!("m_{} is an operad morphism", psi.name), m.is_morphism(cap), ""),
        Assertion::new(format!("m_{} = ({} ⊗ 1) m_Ass", psi.name, psi.name), m.factors_through_identity(), ""),
        Assertion::empty(format!("square commutes for {}", psi.name), &m.square_failures(cap, wc)),
    ]
}

/// The square of Manin morphisms and resolutions, for `u` and `a`.
pub fn manin_square(cfg: &Config) -> Report {
    let checks = vec![
        check(|cfg| manin_checks(&forget_presented(cfg.arity_cap), cfg.arity_cap, 2)),
        check(|cfg| manin_checks(&antisymmetrization_presented(cfg.arity_cap), cfg.arity_cap, 2)),
        check(|cfg| {
            // the lower route kills ℓ_{≥3}
            let cap = cfg.arity_cap;
            let linf = presented_resolution(Arc::new(presented::com(cap)), cap, 2);
            let lie = crate::barcobar::resolution::koszul_dual_of(&presented::com(cap));
            let r = resolution_map(&linf, &lie);
            let high: Vec<Gen> = (3..=cap).flat_map(|n| linf.free.gens.basis(n)).filter(|g| r.get(g).map_or(false, |v| !v.is_zero())).collect();
            let low = linf.free.gens.basis(2).iter().all(|g| r.get(g).map_or(false, |v| !v.is_zero()));
            vec![Assertion::empty("ℓ_n ↦ 0 for n ≥ 3", &high), Assertion::new("ℓ₂ ↦ the bracket", low, "")]
        }),
    ];
    run("manin-square", cfg, checks)
}

/// `k[e]/e²` with `e` odd and the algebra maps `e ↦ λe`.
fn scaling(l: i64) -> impl Fn(usize) -> Lin<usize> + Sync {
    move |x| if x == 0 { Lin::basis(0) } else { Lin::term(x, q(l)) }
}

/// `(f⊗g)(f'⊗g') = ff'⊗gg'` on random ∞-morphisms of deformed algebras.
pub fn bifunctoriality(cfg: &Config) -> Report {
    let checks = vec![check(|cfg| {
        let (ve, me) = exterior();
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        let wc = cfg.weight_cap.min(3);
        let mut out = vec![];
        let pairs = (cfg.samples / 20).max(5);
        for trial in 0..pairs {
            let flavor = FLAVORS[trial % 3];
            let a = Strict::new(flavor, ve.clone(), me.clone());
            let kind = flavor.coefficients();
            let c = deformed(kind, 20 + trial as u64);
            let g = random_components(kind, c.v.clone(), wc, 0.5, &mut rng);
            let c2 = c.push_forward(&g);
            let g2 = random_components(kind, c.v.clone(), wc, 0.5, &mut rng);
            let c3 = c2.push_forward(&g2);
            let (l1, l2) = (trial as i64 + 2, -(trial as i64) - 1);
            let fg = tensor_morphism(&a, &a, scaling(l1), &g);
            let fg2 = tensor_morphism(&a, &a, scaling(l2), &g2);
            let both = tensor_morphism(&a, &a, scaling(l1 * l2), &g.then(&g2));
            let (t1, t2, t3) = (tensor_algebra(&a, &c), tensor_algebra(&a, &c2), tensor_algebra(&a, &c3));
            let name = format!("pair {} ({:?})", trial, flavor);
            out.push(Assertion::empty(format!("{}: f⊗g is an ∞-morphism", name), &fg.failures(&t1, &t2, wc)));
            out.push(Assertion::empty(format!("{}: f'⊗g' is an ∞-morphism", name), &fg2.failures(&t2, &t3, wc)));
            out.push(Assertion::empty(format!("{}: composition law", name), &both.differing_arities(&fg.then(&fg2), wc)));
        }
        out
    })];
    run("bifunctoriality", cfg, checks)
}

/// Transfer then tensor against tensor then transfer.
pub fn htt_equality(cfg: &Config) -> Report {
    let checks = vec![
        check(|cfg| {
            let cap = cfg.arity_cap.min(4);
            corpus(cap)
                .into_iter()
                .map(|c| {
                    let (first, second) = two_structures(&c.a, &c.b, &c.r);
                    let d = first.differing_arities(&second, cap);
                    let per: Vec<String> = (2..=cap).map(|n| format!("ℓ{} {}", n, if d.contains(&n) { "differs" } else { "equal" })).collect();
                    Assertion::new(format!("{}: transferred brackets", c.name), d.is_empty(), per.join(", "))
                })
                .collect()
        }),
        check(|cfg| {
            let wc = cfg.weight_cap.min(3);
            corpus(wc)
                .into_iter()
                .map(|c| {
                    let m = morphism_compat(&c.a, &c.b, &c.r, wc);
                    Assertion::new(format!("{}: (1⊗i)_∞ and (1⊗p)_∞", c.name), m.holds(), format!("{:?}", m))
                })
                .collect()
        }),
    ];
    run("htt-equality", cfg, checks)
}

/// MC residuals against twisting residuals, arity by arity.
pub fn mc_equivalence(cfg: &Config) -> Report {
    let mut checks = vec![];
    for flavor in FLAVORS {
        checks.push(check(move |cfg| {
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
            let d = small_coalgebra(flavor.coefficients(), true);
            let a = target(flavor, &[0, 0], 3);
            let hom = hom_structure(&d, &a);
            let dd = d.dim();
            let c = d.d.d_vec(&Lin::basis(1)).coeff(&2);
            let (mut differ, mut apart, mut solutions) = (vec![], vec![], 0);
            for i in 0..cfg.samples {
                let mut phi = random_phi(&d, &a, &mut rng);
                if i % 2 == 0 {
                    // solve the equation for the value on d₂
                    phi = phi.filter(|x| x % dd == 0);
                    for (x, v) in &hom.mc_residual(&phi) {
                        phi.add_term(x + 1, -(v / &c));
                    }
                }
                let r = mc_tw_with(&hom, &d, &a, &phi);
                if !r.differing_arities().is_empty() {
                    differ.push((i, r.differing_arities()));
                }
                if !r.vanish_together() {
                    apart.push(i);
                }
                solutions += usize::from(r.mc_total().is_zero());
            }
            vec![
                Assertion::empty(format!("{:?}: residuals agree arity-wise", flavor), &differ),
                Assertion::empty(format!("{:?}: residuals vanish together", flavor), &apart),
                Assertion::new(format!("{:?}: constructed MC elements", flavor), solutions >= cfg.samples / 2, format!("{} of {}", solutions, cfg.samples)),
            ]
        }));
        checks.push(check(move |cfg| {
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed + 1);
            let d = random_source(flavor.coefficients(), cfg.seed);
            let a = target(flavor, &[-1, -2], 2);
            let hom = hom_structure(&d, &a);
            let differ: Vec<usize> =
                (0..cfg.samples / 5).filter(|_| !mc_tw_with(&hom, &d, &a, &random_phi(&d, &a, &mut rng)).differing_arities().is_empty()).collect();
            vec![Assertion::empty(format!("{:?}: graded source and target", flavor), &differ)]
        }));
        checks.push(check(move |cfg| {
            let d = random_source(flavor.coefficients(), cfg.seed);
            let c = CompleteCobar::new(&d, flavor, cfg.weight_cap.max(3), true);
            let bare = CompleteCobar::normalized(&d, flavor, cfg.weight_cap.max(3), true, |_| q(1));
            vec![
                Assertion::empty(format!("{:?}: d² = 0 on the complete cobar construction", flavor), &c.square_failures()),
                Assertion::new(format!("{:?}: without the κ_(n−1) normalization d² ≠ 0", flavor), !bare.square_failures().is_empty(), ""),
            ]
        }));
    }
    run("mc-equivalence", cfg, checks)
}

/// MC elements against dg algebra morphisms out of the complete cobar
/// construction, with round trips.
pub fn bijections(cfg: &Config) -> Report {
    let mut checks = vec![];
    for flavor in FLAVORS {
        checks.push(check(move |cfg| {
            let kind = flavor.coefficients();
            let wc = cfg.weight_cap.max(4);
            let d = small_coalgebra(kind, false);
            let a = target(flavor, &[0], 3);
            let line: Vec<Lin<usize>> = (-5..=5).map(|t| Lin::term(0, q(t))).collect();
            let r1 = mc_bijections(&d, &a, wc, &line);
            let r2 = tensor_bijections(&a, &small_source(kind, false), wc, &grid(&degree_minus_one(&d, &a), &[-1, 0, 1]));
            let d3 = small_coalgebra(kind, true);
            let r3 = mc_bijections(&d3, &a, wc, &grid(&degree_minus_one(&d3, &a), &[-1, 0, 1]));
            let show = |r: &crate::mc_and_cobar::BijectionReport| format!("{} candidates, {} MC, {} morphisms", r.candidates, r.mc_elements, r.morphisms);
            vec![
                Assertion::new(format!("{:?}: one-parameter family, MC iff t = 0", flavor), r1.holds() && r1.mc_elements == 1, show(&r1)),
                Assertion::new(format!("{:?}: two-dimensional example, tensor form", flavor), r2.holds() && r2.mc_elements > 1, show(&r2)),
                Assertion::new(format!("{:?}: with a differential on D", flavor), r3.holds() && r3.mc_elements > 1, show(&r3)),
            ]
        }));
    }
    checks.push(check(deformation_check));
    run("bijections", cfg, checks)
}

/// `x, x²` with `x·x = x²`.
pub fn truncated(flavor: Flavor) -> Strict {
    Strict::new(flavor, Arc::new(GradedSpace::from_degrees("X", &[0, 0])), table(&[(&[0, 0], 1, 1)]))
}

fn jacobi_of(name: String, h: &HomotopyAlgebra, len: usize) -> Assertion {
    Assertion::empty(name, &h.jacobi_failures(len))
}

/// The generalized Jacobi identities for every kind of structure built.
pub fn jacobi(cfg: &Config) -> Report {
    let mut checks = vec![];
    for flavor in FLAVORS {
        checks.push(check(move |cfg| {
            let len = cfg.arity_cap.min(4);
            let kind = flavor.coefficients();
            let a = exterior_strict(flavor);
            let c = deformed(kind, cfg.seed);
            let e = small_source(kind, true);
            vec![
                jacobi_of(format!("{:?}: tensor A ⊗ C", flavor), &tensor_algebra(&a, &c), len),
                jacobi_of(format!("{:?}: hom(D, A)", flavor), &hom_structure(&CCoalgebra::dual_of(&e), &a), len),
                jacobi_of(format!("{:?}: deformation complex", flavor), &deformation_complex(&truncated(flavor), &truncated(flavor), len), len),
            ]
        }));
    }
    for kind in [Kind::Lie, Kind::Ass] {
        checks.push(check(move |cfg| {
            let len = cfg.arity_cap.min(4);
            let b = four_dim(kind, len);
            let t = transfer(&b, &Retraction::onto_homology(b.v.clone()));
            vec![jacobi_of(format!("{:?}: transferred", kind), &t.structure, len)]
        }));
    }
    checks.push(check(|cfg| {
        let len = cfg.arity_cap.min(4);
        corpus(len).into_iter().map(|c| jacobi_of(format!("{}: transferred tensor", c.name), &two_structures(&c.a, &c.b, &c.r).0, len)).collect()
    }));
    checks.push(check(|cfg| {
        let len = cfg.arity_cap.min(4);
        let g = HomotopyAlgebra::strict(Kind::Lie, space("g", &[0, 0, 0]), len, &table(&[(&[0, 1], 2, 1), (&[1, 0], 2, 2)]));
        vec![Assertion::new("a non-antisymmetric bracket fails", !g.symmetry_failures().is_empty() || !g.jacobi_failures(len).is_empty(), "")]
    }));
    run("jacobi", cfg, checks)
}

/// The structure map of a complete filtered algebra against direct
/// evaluation in the nilpotent quotient.
pub fn completeness(cfg: &Config) -> Report {
    let checks = vec![check(|_| {
        let x = Lin::basis(0);
        let y = Lin::basis(1);
        let lie = free_lie(&[0, 0], 3);
        let ad = |n: usize| -> Component {
            let mut ins = vec![y.clone()];
            ins.extend(vec![x.clone(); n - 1]);
            vec![(q(1) / factorial(n - 1), ins)]
        };
        let ass = free_ass(&[0, 0], 3);
        let geo = |n: usize| -> Component { vec![(q(1), vec![x.clone() + y.clone(); n])] };
        let mixed = |n: usize| -> Component { vec![(qr(1, n as i64), vec![x.clone(); n]), (q(-1), vec![y.clone(); n])] };
        let com = free_com(&[0, 0], 3);
        let exp = |n: usize| -> Component { vec![(q(1) / factorial(n), vec![x.clone() + y.clone(); n])] };
        let cmp = |name: &str, f: &crate::mc_and_cobar::FilteredAlgebra, c: &dyn Fn(usize) -> Component| {
            let g = f.gamma_hat(c);
            let d = f.direct(c, 12);
            Assertion::new(name, g.as_ref().ok() == Some(&d) && f.check().is_ok(), format!("{:?}", g.err()))
        };
        let lie_dims = lie.dim();
        vec![
            Assertion::new("free Lie algebra of depth 3 on two generators", lie_dims == 5 && lie.as_lie(3).is_homotopy_algebra(3), format!("dim {}", lie_dims)),
            cmp("Lie: Σ ad_x^n(y)/n!", &lie, &ad),
            cmp("Ass: Σ (x+y)^n", &ass, &geo),
            cmp("Ass: Σ x^n/n − y^n", &ass, &mixed),
            cmp("Com: exp(x+y)", &com, &exp),
        ]
    })];
    run("completeness", cfg, checks)
}

/// Morphism deformation complexes: MC elements against product-preserving
/// maps on a grid.
pub fn deformation_check(cfg: &Config) -> Vec<Assertion> {
    let mut out = vec![];
    for flavor in FLAVORS {
        let x = truncated(flavor);
        let cap = cfg.arity_cap.min(3);
        let def = deformation_complex(&x, &x, cap);
        let mut disagree = vec![];
        for e in grid(&[0, 1, 2, 3], &[-1, 0, 1]) {
            let g = vec![Lin::term(0, e.coeff(&0)) + Lin::term(1, e.coeff(&1)), Lin::term(0, e.coeff(&2)) + Lin::term(1, e.coeff(&3))];
            if def.mc_residual(&element_of(&x, cap, &g)).is_zero() != preserves_products(&x, &x, cap, &g) {
                disagree.push(g);
            }
        }
        out.push(Assertion::empty(format!("{:?}: MC in the deformation complex iff algebra map", flavor), &disagree));
    }
    out
}
