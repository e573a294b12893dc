//! Bar and cobar constructions, twisting morphisms and the Koszul resolutions
//! `Q^!_∞ = Ω((S ⊗ Q)^∨)` of the stock operads.

pub mod bar;
pub mod cobar;
pub mod resolution;
pub mod twisting;

use thiserror::Error;

use crate::operad::dual::Cooperad;
use crate::operad::{diff_lin, Operad};

pub use bar::Bar;
pub use cobar::Cobar;
pub use twisting::{canonical_iota, canonical_pi, pre_lie, Twisting};

#[derive(Debug, Error, PartialEq)]
pub enum BarCobarError {
    #[error("{0} is not augmented: arity one must be spanned by the unit and arity zero empty")]
    NotAugmented(String),
    #[error("{0} is not coaugmented and conilpotent: arity one must be spanned by the counit")]
    NotConilpotent(String),
}

/// How many elements a `d² = 0` certificate looked at, and how many it had
/// to leave out because `d²` would leave the weight truncation.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct D2Report {
    pub checked: usize,
    pub skipped: usize,
    pub failures: Vec<String>,
}

impl D2Report {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn certify_cobar<C: Cooperad + 'static>(cobar: &Cobar<C>, arity_cap: usize) -> D2Report {
    let mut r = D2Report::default();
    for n in 1..=arity_cap.min(cobar.arity_cap) {
        for t in cobar.basis(n) {
            if t.weight() + 2 > cobar.weight_cap() {
                r.skipped += 1;
                continue;
            }
            r.checked += 1;
            let dd = diff_lin(cobar, &cobar.diff(&t));
            if !dd.is_zero() {
                r.failures.push(format!("{:?}", t));
            }
        }
    }
    r
}

pub fn certify_bar<O: Operad + 'static>(bar: &Bar<O>, arity_cap: usize) -> D2Report {
    let mut r = D2Report::default();
    for n in 1..=arity_cap.min(bar.arity_cap) {
        for t in bar.basis(n) {
            r.checked += 1;
            let d = bar.diff(&t);
            let dd = d.map(|x| bar.diff(x));
            if !dd.is_zero() {
                r.failures.push(format!("{:?}", t));
            }
            for (x, _) in &d {
                if x.weight() + 1 < t.weight() || x.weight() > t.weight() {
                    r.failures.push(format!("weight of d{:?}", t));
                }
            }
        }
    }
    r
}

#[cfg(test)]
mod tests;
