//! Exact truncated operadic calculus.
//!
//! Operads are stored through partial compositions on explicit bases, all
//! coefficients are exact rationals, and every identity is checked by exact
//! equality of structure constants up to configurable arity and weight caps.

pub mod barcobar;
pub mod exact;
pub mod htt;
pub mod linfty_algebra;
pub mod main_theorem;
pub mod mc_and_cobar;
pub mod operad;
pub mod tree;
pub mod verify;
