//! Verification suites: each runs a family of exact checks and reports one
//! assertion per check. The command line and the acceptance test both
//! drive these.

mod suites;

use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

pub use suites::*;

#[derive(Clone, Debug, Serialize)]
pub struct Config {
    pub arity_cap: usize,
    pub weight_cap: usize,
    pub seed: u64,
    pub samples: usize,
}

impl Config {
    pub fn default_profile() -> Self {
        Config { arity_cap: 4, weight_cap: 3, seed: 7, samples: 100 }
    }

    pub fn deep_profile() -> Self {
        Config { arity_cap: 5, weight_cap: 4, seed: 7, samples: 100 }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Assertion {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Assertion {
    pub fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Assertion { name: name.into(), passed, detail: detail.into() }
    }

    /// Passes when the list of failures is empty; the detail shows them.
    pub fn empty<T: std::fmt::Debug>(name: impl Into<String>, failures: &[T]) -> Self {
        let detail = if failures.is_empty() { String::new() } else { format!("{} failures, first {:?}", failures.len(), &failures[0]) };
        Assertion::new(name, failures.is_empty(), detail)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub suite: String,
    pub passed: bool,
    /// wall time; left out of the JSON so reports are byte-stable
    #[serde(skip)]
    pub seconds: f64,
    pub assertions: Vec<Assertion>,
}

type Check = Box<dyn Fn(&Config) -> Vec<Assertion> + Send + Sync>;

/// Runs independent checks in parallel and keeps their order.
pub(crate) fn run(suite: &str, cfg: &Config, checks: Vec<Check>) -> Report {
    let t = Instant::now();
    let assertions: Vec<Assertion> = checks.par_iter().flat_map_iter(|c| c(cfg)).collect();
    Report { suite: suite.to_string(), passed: assertions.iter().all(|a| a.passed), seconds: t.elapsed().as_secs_f64(), assertions }
}

pub const SUITES: [&str; 10] =
    ["signs", "operad-axioms", "main-theorem", "manin-square", "bifunctoriality", "htt-equality", "mc-equivalence", "bijections", "jacobi", "completeness"];

/// `None` for an unknown suite name.
pub fn run_suite(name: &str, cfg: &Config) -> Option<Report> {
    Some(match name {
        "signs" => signs(cfg),
        "operad-axioms" => operad_axioms(cfg),
        "main-theorem" => main_theorem(cfg),
        "manin-square" => manin_square(cfg),
        "bifunctoriality" => bifunctoriality(cfg),
        "htt-equality" => htt_equality(cfg),
        "mc-equivalence" => mc_equivalence(cfg),
        "bijections" => bijections(cfg),
        "jacobi" => jacobi(cfg),
        "completeness" => completeness(cfg),
        _ => return None,
    })
}
