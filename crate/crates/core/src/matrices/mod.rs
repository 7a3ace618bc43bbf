//! Polynomial matrices, the banded families built from `f` and `F`, and
//! exact linear algebra over the polynomial ring.

mod builders;
mod linalg;
mod matrix;

pub use builders::{build_a, build_abar, build_b, build_m};
pub use linalg::{adjugate, adjugate_times, det, solve_square, DetMethod, MembershipCertificate, COFACTOR_MAX};
pub use matrix::{unit_vector, PolyMatrix};
