//! One line per acceptance criterion. Runs without the test harness so the
//! lines show up in `cargo test` output; exits nonzero if any fails.

use std::process::ExitCode;
use std::time::Instant;

use operad_forge::verify::{run_suite, Assertion, Config, Report};

struct Criterion {
    number: usize,
    title: &'static str,
    suite: &'static str,
    deep: bool,
    /// keeps only the assertions belonging to this criterion
    select: fn(&Assertion) -> bool,
    budget_secs: Option<f64>,
}

fn all(_: &Assertion) -> bool {
    true
}

fn chain_maps(a: &Assertion) -> bool {
    a.name.contains("chain map")
}

fn psi_identities(a: &Assertion) -> bool {
    a.name.contains("identity") || a.name.contains("invariant") || a.name.contains("mutations")
}

fn closed_forms(a: &Assertion) -> bool {
    a.name.starts_with("M_") && !chain_maps(a)
}

const CRITERIA: [Criterion; 11] = [
    Criterion { number: 1, title: "dimension oracle for Com, Lie, Ass to arity 5", suite: "operad-axioms", deep: true, select: all, budget_secs: Some(30.0) },
    Criterion { number: 2, title: "M_Ψ commutes with the differentials to arity 5", suite: "main-theorem", deep: true, select: chain_maps, budget_secs: Some(300.0) },
    Criterion { number: 3, title: "the two Ψ identities, and mutations break them", suite: "main-theorem", deep: true, select: psi_identities, budget_secs: None },
    Criterion { number: 4, title: "closed forms of M_id_Com, M_id_Ass, M_u and M_a", suite: "main-theorem", deep: true, select: closed_forms, budget_secs: None },
    Criterion { number: 5, title: "Manin square for u and a", suite: "manin-square", deep: true, select: all, budget_secs: None },
    Criterion { number: 6, title: "bifunctoriality of f ⊗^Ψ g", suite: "bifunctoriality", deep: false, select: all, budget_secs: None },
    Criterion { number: 7, title: "both transfer pipelines agree", suite: "htt-equality", deep: false, select: all, budget_secs: Some(300.0) },
    Criterion { number: 8, title: "MC and twisting residuals vanish together", suite: "mc-equivalence", deep: false, select: all, budget_secs: None },
    Criterion { number: 9, title: "MC bijections round-trip", suite: "bijections", deep: false, select: all, budget_secs: None },
    Criterion { number: 10, title: "generalized Jacobi for every structure built", suite: "jacobi", deep: false, select: all, budget_secs: None },
    Criterion { number: 11, title: "complete structure maps match nilpotent evaluation", suite: "completeness", deep: false, select: all, budget_secs: None },
];

fn main() -> ExitCode {
    let default = Config::default_profile();
    let deep = Config::deep_profile();
    // suites shared by several criteria run once
    let mut cache: Vec<(&str, bool, Report)> = vec![];
    let mut failed = 0;
    for c in &CRITERIA {
        if !cache.iter().any(|(s, d, _)| *s == c.suite && *d == c.deep) {
            let t = Instant::now();
            let mut r = run_suite(c.suite, if c.deep { &deep } else { &default }).expect("known suite");
            r.seconds = t.elapsed().as_secs_f64();
            cache.push((c.suite, c.deep, r));
        }
        let r = &cache.iter().find(|(s, d, _)| *s == c.suite && *d == c.deep).unwrap().2;
        let mine: Vec<&Assertion> = r.assertions.iter().filter(|a| (c.select)(a)).collect();
        let in_time = c.budget_secs.map_or(true, |b| r.seconds < b);
        let ok = !mine.is_empty() && mine.iter().all(|a| a.passed) && in_time;
        if !ok {
            failed += 1;
        }
        println!("criterion {:>2} {}: {} ({} checks, {:.1}s)", c.number, if ok { "PASS" } else { "FAIL" }, c.title, mine.len(), r.seconds);
        for a in mine.iter().filter(|a| !a.passed) {
            println!("    failed: {} {}", a.name, a.detail);
        }
        if !in_time {
            println!("    over the {:.0}s budget", c.budget_secs.unwrap());
        }
    }
    println!("{} of {} criteria pass", CRITERIA.len() - failed, CRITERIA.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
