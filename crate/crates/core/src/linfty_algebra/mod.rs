//! Homotopy algebras: algebras over operads as maps into endomorphism
//! operads, their classical operations, the structures `A ⊗^Ψ C` and
//! `hom^Ψ(D, A)`, ∞-morphisms and Maurer–Cartan residuals.

pub mod algebra;
pub mod cofree;
pub mod fixtures;
pub mod hom;
pub mod homotopy;
pub mod morphism;
pub mod operadic;
pub mod tensor;

pub use algebra::{PAlgebra, Table};
pub use cofree::Kind;
pub use homotopy::HomotopyAlgebra;
pub use morphism::InfinityMorphism;

#[cfg(test)]
pub(crate) mod tests;
