//! Inverse polynomials: the top local cohomology of `R_0[u, v]` with
//! supports in `(u, v)`, one graded piece at a time.

use std::collections::BTreeMap;
use std::fmt;

use crate::arith::{defining_equation, Field, MultiPoly, Var};
use crate::error::{Error, Result};
use crate::matrices::PolyMatrix;

/// `u^-alpha v^-beta` with `alpha, beta >= 1`, stored by its positive parts.
/// Within one degree the order is ascending `alpha`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct InverseMonomial {
    pub alpha: u32,
    pub beta: u32,
}

impl InverseMonomial {
    pub fn new(alpha: u32, beta: u32) -> Result<InverseMonomial> {
        if alpha == 0 || beta == 0 {
            return Err(Error::OutOfRange {
                what: "inverse exponent",
                value: 0,
                bound: ">= 1",
            });
        }
        Ok(InverseMonomial { alpha, beta })
    }

    /// `d` for a monomial living in degree `-d`.
    pub fn degree(&self) -> u32 {
        self.alpha + self.beta
    }
}

impl fmt::Display for InverseMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "u^-{}*v^-{}", self.alpha, self.beta)
    }
}

/// Ordered basis of the degree `-d` piece, `d >= 2`: `d - 1` elements.
pub fn inverse_basis(d: u32) -> Vec<InverseMonomial> {
    (1..d)
        .map(|alpha| InverseMonomial {
            alpha,
            beta: d - alpha,
        })
        .collect()
}

/// Finite `R_0`-combination of inverse monomials, `R_0 = k[x, y, s, t]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InverseElement {
    field: Field,
    terms: BTreeMap<InverseMonomial, MultiPoly>,
}

const BASE_VARS: [Var; 4] = [Var::X, Var::Y, Var::S, Var::T];

impl InverseElement {
    pub fn zero(field: Field) -> InverseElement {
        InverseElement {
            field,
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(field: Field, m: InverseMonomial) -> InverseElement {
        let mut e = InverseElement::zero(field);
        e.terms.insert(m, MultiPoly::one(field));
        e
    }

    /// Adds `coeff * m`; `coeff` must lie in `R_0`.
    pub fn add_term(&mut self, m: InverseMonomial, coeff: MultiPoly) -> Result<()> {
        if !coeff.uses_only(&BASE_VARS) {
            return Err(Error::UnexpectedVariable {
                allowed: "{x,y,s,t}".into(),
            });
        }
        let sum = match self.terms.remove(&m) {
            Some(old) => old.checked_add(&coeff)?,
            None => coeff,
        };
        if !sum.is_zero() {
            self.terms.insert(m, sum);
        }
        Ok(())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &InverseMonomial) -> MultiPoly {
        self.terms
            .get(m)
            .cloned()
            .unwrap_or_else(|| MultiPoly::zero(self.field))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&InverseMonomial, &MultiPoly)> {
        self.terms.iter()
    }

    /// Multiplication by a polynomial in `R_0[u, v]`: `u^a v^b` sends
    /// `u^-alpha v^-beta` to `u^(a-alpha) v^(b-beta)`, and the product
    /// vanishes once either exponent is no longer negative.
    pub fn mul_poly(&self, g: &MultiPoly) -> Result<InverseElement> {
        let mut out = InverseElement::zero(self.field);
        for (uv, coeff) in g.split_by(&[Var::U, Var::V]) {
            let (a, b) = (uv.exp(Var::U), uv.exp(Var::V));
            for (m, c) in &self.terms {
                if m.alpha > a && m.beta > b {
                    let target = InverseMonomial {
                        alpha: m.alpha - a,
                        beta: m.beta - b,
                    };
                    out.add_term(target, coeff.checked_mul(c)?)?;
                }
            }
        }
        Ok(out)
    }
}

impl fmt::Display for InverseElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})*{m}")?;
        }
        Ok(())
    }
}

pub fn mult_by_f(e: &InverseElement) -> Result<InverseElement> {
    e.mul_poly(&defining_equation(e.field))
}

/// Matrix of multiplication by `f` from the degree `-(d+2)` piece to the
/// degree `-d` piece, both in ascending-`alpha` order: `(d-1) x (d+1)`.
pub fn matrix_of_f(d: u32, field: Field) -> Result<PolyMatrix> {
    if d < 2 {
        return Err(Error::OutOfRange {
            what: "d",
            value: d as i64,
            bound: ">= 2",
        });
    }
    let source = inverse_basis(d + 2);
    let target = inverse_basis(d);
    let mut m = PolyMatrix::zeros(field, target.len(), source.len());
    for (j, src) in source.iter().enumerate() {
        let image = mult_by_f(&InverseElement::basis(field, *src))?;
        for (tm, c) in image.terms() {
            let i = target
                .iter()
                .position(|t| t == tm)
                .ok_or_else(|| Error::CertificateFailed(format!("{tm} outside degree -{d}")))?;
            m.set(i, j, c.clone());
        }
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrices::build_a;

    const Q: Field = Field::Rationals;

    fn inv(a: u32, b: u32) -> InverseMonomial {
        InverseMonomial::new(a, b).unwrap()
    }

    #[test]
    fn multiplication_examples() {
        let e = mult_by_f(&InverseElement::basis(Q, inv(1, 3))).unwrap();
        let mut expect = InverseElement::zero(Q);
        expect.add_term(inv(1, 1), MultiPoly::parse("s*x^2", Q).unwrap()).unwrap();
        assert_eq!(e, expect);

        let e = mult_by_f(&InverseElement::basis(Q, inv(2, 2))).unwrap();
        let mut expect = InverseElement::zero(Q);
        expect.add_term(inv(1, 1), MultiPoly::parse("-t*x*y-s*x*y", Q).unwrap()).unwrap();
        assert_eq!(e, expect);

        assert!(mult_by_f(&InverseElement::basis(Q, inv(1, 1))).unwrap().is_zero());
    }

    #[test]
    fn coefficients_stay_in_base_ring() {
        let mut e = InverseElement::zero(Q);
        assert!(e.add_term(inv(1, 1), MultiPoly::var(Q, Var::U)).is_err());
        assert!(InverseMonomial::new(0, 3).is_err());
    }

    #[test]
    fn small_matrices() {
        assert_eq!(matrix_of_f(2, Q).unwrap(), build_a(1, Q).unwrap());
        assert_eq!(matrix_of_f(3, Q).unwrap(), build_a(2, Q).unwrap());
        assert_eq!(inverse_basis(2), [inv(1, 1)]);
        assert_eq!(inverse_basis(6).len(), 5);
        assert!(matrix_of_f(1, Q).is_err());
    }
}
