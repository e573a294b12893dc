//! Maurer–Cartan elements of `hom^Ψ(D, A)`, twisting maps relative to
//! `ψ = π^*Ψ`, the complete cobar construction and the deformation complex
//! of algebra morphisms.

pub mod bijection;
pub mod cobar;
pub mod deformation;
pub mod examples;
pub mod filtered;
pub mod twisting;

#[cfg(test)]
mod tests;

pub use bijection::{mc_bijections, tensor_bijections, BijectionReport};
pub use cobar::{CobarReport, CompleteCobar};
pub use deformation::{deformation_complex, element_of, preserves_products, relative_bar};
pub use filtered::{free_ass, free_com, free_lie, Component, FilteredAlgebra, FiltrationError, Theory};
pub use twisting::{mc_tw_equivalence, star_alpha, Residuals, StarError};
