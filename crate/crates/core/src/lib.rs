//! Exact verification of a graded local cohomology module with infinitely
//! many associated primes: the banded presentation matrices, their
//! determinants, torsion and prime witnesses, and the analogous components
//! of `R/(x^n, y^n)` for a plane quartic.

pub mod arith;
pub mod cli;
pub mod cohomology;
pub mod error;
pub mod factor;
pub mod frobenius;
pub mod matrices;
pub mod presentation;

pub use error::{Error, Result};
