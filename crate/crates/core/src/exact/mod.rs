//! Exact scalars, graded spaces, symmetric-group combinatorics and the Koszul sign rule.

pub mod graded;
pub mod invariants;
pub mod lin;
pub mod linalg;
pub mod perm;
pub mod scalar;
pub mod shift;

pub use graded::{hom_differential, tensor_map, GradedError, GradedSpace, LinearMap};
pub use invariants::Representation;
pub use lin::Lin;
pub use linalg::Echelon;
pub use perm::{all_perms, enumerate_shuffles, koszul_exponent, koszul_sign, Perm, Shuffle};
pub use scalar::{q, qr, sgn, sign_q, Q};
