//! Exact coefficient fields and polynomial arithmetic in `x, y, u, v, s, t`.

mod field;
mod monomial;
mod multipoly;
mod parse;
mod unipoly;

pub use field::{Field, Scalar};
pub use monomial::{Monomial, Var};
pub use multipoly::MultiPoly;
pub use unipoly::UniPoly;

use crate::error::{Error, Result};

fn require_positive(what: &'static str, i: u32) -> Result<()> {
    if i == 0 {
        return Err(Error::OutOfRange {
            what,
            value: 0,
            bound: ">= 1",
        });
    }
    Ok(())
}

/// `(-1)^i (t^i + s t^(i-1) + ... + s^i)`, the determinant of the tridiagonal
/// block of size `i`.
pub fn tau(i: u32, field: Field) -> Result<MultiPoly> {
    require_positive("tau index", i)?;
    let sign = if i.is_multiple_of(2) { 1 } else { -1 };
    Ok(MultiPoly::from_terms(
        field,
        (0..=i).map(|k| (sign, Monomial::from_pairs(&[(Var::S, k), (Var::T, i - k)]))),
    ))
}

/// `t^i + t^(i-1) + ... + 1`.
pub fn sigma(i: u32, field: Field) -> Result<UniPoly> {
    require_positive("sigma index", i)?;
    Ok(UniPoly::new(field, Var::T, vec![field.one(); i as usize + 1]))
}

/// `aux^deg(f) * f(var/aux)` as a bivariate form.
pub fn homogenize(f: &UniPoly, aux: Var) -> Result<MultiPoly> {
    let deg = f.degree().ok_or(Error::DivisionByZero)? as u32;
    let field = f.field();
    let mut out = MultiPoly::zero(field);
    for (k, c) in f.coeffs().iter().enumerate() {
        let m = Monomial::from_pairs(&[(f.var(), k as u32), (aux, deg - k as u32)]);
        out = &out + &MultiPoly::term(field, c.clone(), m);
    }
    Ok(out)
}

/// Sets `aux = 1` in a form homogeneous in `{aux, var}`.
pub fn dehomogenize(g: &MultiPoly, aux: Var, var: Var) -> Result<UniPoly> {
    let vars = [aux, var];
    if !g.uses_only(&vars) {
        return Err(Error::UnexpectedVariable {
            allowed: format!("{{{aux},{var}}}"),
        });
    }
    if !g.is_homogeneous_in(&vars) {
        return Err(Error::NotHomogeneous {
            vars: format!("{{{aux},{var}}}"),
        });
    }
    UniPoly::from_multi(&g.substitute(aux, &g.field().one()), var)
}

pub fn derivative(f: &UniPoly) -> UniPoly {
    f.derivative()
}

/// Monic gcd; `Error::ZeroGcd` when both inputs vanish.
pub fn gcd_univariate(a: &UniPoly, b: &UniPoly) -> Result<UniPoly> {
    a.gcd(b)
}

/// `s x^2 v^2 - (t+s) x y u v + t y^2 u^2`.
pub fn defining_equation(field: Field) -> MultiPoly {
    use Var::*;
    MultiPoly::from_terms(
        field,
        [
            (1, Monomial::from_pairs(&[(S, 1), (X, 2), (V, 2)])),
            (-1, Monomial::from_pairs(&[(T, 1), (X, 1), (Y, 1), (U, 1), (V, 1)])),
            (-1, Monomial::from_pairs(&[(S, 1), (X, 1), (Y, 1), (U, 1), (V, 1)])),
            (1, Monomial::from_pairs(&[(T, 1), (Y, 2), (U, 2)])),
        ],
    )
}
