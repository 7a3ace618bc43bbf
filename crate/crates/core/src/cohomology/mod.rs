//! Graded pieces of `H^2` of `R = S/fS` with supports in `(u, v)`.
//!
//! The degree `-d` piece is the cokernel of multiplication by `f` between
//! inverse-polynomial pieces, i.e. `Coker A_(d-1)`. Its bidegree `(d,d)`
//! summand is presented by the square block `B_(d-1)`, whose determinant
//! supplies the torsion and prime witnesses.

mod component;
mod inverse;
mod witness;

pub use component::{bidegree, column_bidegree, component_dd, BigradedGenerator, Bidegree};
pub use inverse::{inverse_basis, matrix_of_f, mult_by_f, InverseElement, InverseMonomial};
pub use witness::{
    corollary_membership, in_irrelevant_ideal, prime_witnesses, torsion_witness, PrimeWitness,
    TorsionWitness,
};
