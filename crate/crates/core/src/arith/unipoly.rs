use std::fmt;

use super::field::{Field, Scalar};
use super::monomial::{Monomial, Var};
use super::multipoly::MultiPoly;
use crate::error::{Error, Result};

/// Dense univariate polynomial, coefficients in ascending degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UniPoly {
    field: Field,
    var: Var,
    coeffs: Vec<Scalar>,
}

impl UniPoly {
    pub fn new(field: Field, var: Var, coeffs: Vec<Scalar>) -> UniPoly {
        let mut p = UniPoly { field, var, coeffs };
        p.trim();
        p
    }

    pub fn from_i64s(field: Field, var: Var, coeffs: &[i64]) -> UniPoly {
        UniPoly::new(field, var, coeffs.iter().map(|&c| field.from_i64(c)).collect())
    }

    pub fn zero(field: Field, var: Var) -> UniPoly {
        UniPoly::new(field, var, Vec::new())
    }

    pub fn one(field: Field, var: Var) -> UniPoly {
        UniPoly::new(field, var, vec![field.one()])
    }

    /// `c * var^k`.
    pub fn monomial(field: Field, var: Var, c: Scalar, k: usize) -> UniPoly {
        let mut coeffs = vec![field.zero(); k + 1];
        coeffs[k] = c;
        UniPoly::new(field, var, coeffs)
    }

    /// The variable itself.
    pub fn x(field: Field, var: Var) -> UniPoly {
        UniPoly::monomial(field, var, field.one(), 1)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Scalar::is_zero) {
            self.coeffs.pop();
        }
    }

    fn like(&self, coeffs: Vec<Scalar>) -> UniPoly {
        UniPoly::new(self.field, self.var, coeffs)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Scalar {
        self.coeffs.get(k).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coefficient(&self) -> Option<&Scalar> {
        self.coeffs.last()
    }

    fn check(&self, other: &UniPoly) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch {
                left: self.field,
                right: other.field,
            });
        }
        if self.var != other.var {
            return Err(Error::VariableMismatch {
                left: self.var.name(),
                right: other.var.name(),
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &UniPoly) -> Result<UniPoly> {
        self.check(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        Ok(self.like(
            (0..n)
                .map(|k| self.field.add(&self.coeff(k), &other.coeff(k)))
                .collect(),
        ))
    }

    pub fn checked_sub(&self, other: &UniPoly) -> Result<UniPoly> {
        self.checked_add(&other.neg())
    }

    pub fn checked_mul(&self, other: &UniPoly) -> Result<UniPoly> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(self.like(Vec::new()));
        }
        let f = self.field;
        let mut out = vec![f.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(&out[i + j], &f.mul(a, b));
            }
        }
        Ok(self.like(out))
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        self.checked_add(other).expect("compatible polynomials")
    }

    pub fn sub(&self, other: &UniPoly) -> UniPoly {
        self.checked_sub(other).expect("compatible polynomials")
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        self.checked_mul(other).expect("compatible polynomials")
    }

    pub fn neg(&self) -> UniPoly {
        self.like(self.coeffs.iter().map(|c| self.field.neg(c)).collect())
    }

    pub fn scale(&self, c: &Scalar) -> UniPoly {
        self.like(self.coeffs.iter().map(|a| self.field.mul(a, c)).collect())
    }

    pub fn pow(&self, mut e: u32) -> UniPoly {
        let mut base = self.clone();
        let mut acc = UniPoly::one(self.field, self.var);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn monic(&self) -> UniPoly {
        match self.leading_coefficient() {
            Some(lc) => self.scale(&self.field.inv(lc)),
            None => self.clone(),
        }
    }

    /// Quotient and remainder of Euclidean division.
    pub fn div_rem(&self, divisor: &UniPoly) -> Result<(UniPoly, UniPoly)> {
        self.check(divisor)?;
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let f = self.field;
        let lc_inv = f.inv(divisor.leading_coefficient().expect("nonzero"));
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((self.like(Vec::new()), self.clone()));
        }
        let mut quot = vec![f.zero(); rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            let c = f.mul(&rem[k], &lc_inv);
            if c.is_zero() {
                continue;
            }
            for (j, b) in divisor.coeffs.iter().enumerate() {
                let idx = k - dd + j;
                rem[idx] = f.sub(&rem[idx], &f.mul(&c, b));
            }
            quot[k - dd] = c;
        }
        rem.truncate(dd);
        Ok((self.like(quot), self.like(rem)))
    }

    pub fn rem(&self, divisor: &UniPoly) -> Result<UniPoly> {
        Ok(self.div_rem(divisor)?.1)
    }

    /// Exact quotient, or `None` if `divisor` does not divide `self`.
    pub fn exact_divide(&self, divisor: &UniPoly) -> Result<Option<UniPoly>> {
        let (q, r) = self.div_rem(divisor)?;
        Ok(r.is_zero().then_some(q))
    }

    /// Formal derivative; coefficients reduce in the field, so `t^p` has
    /// derivative zero over `F_p`.
    pub fn derivative(&self) -> UniPoly {
        let f = self.field;
        self.like(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| f.mul(c, &f.from_i64(k as i64)))
                .collect(),
        )
    }

    pub fn eval(&self, at: &Scalar) -> Scalar {
        let f = self.field;
        self.coeffs
            .iter()
            .rev()
            .fold(f.zero(), |acc, c| f.add(&f.mul(&acc, at), c))
    }

    /// Monic gcd by the Euclidean algorithm, normalizing each remainder to
    /// keep rational coefficients small.
    pub fn gcd(&self, other: &UniPoly) -> Result<UniPoly> {
        self.check(other)?;
        if self.is_zero() && other.is_zero() {
            return Err(Error::ZeroGcd);
        }
        let mut a = self.monic();
        let mut b = other.monic();
        while !b.is_zero() {
            let r = a.rem(&b)?.monic();
            a = b;
            b = r;
        }
        Ok(a.monic())
    }

    pub fn to_multi(&self) -> MultiPoly {
        let mut out = MultiPoly::zero(self.field);
        for (k, c) in self.coeffs.iter().enumerate() {
            let m = Monomial::from_pairs(&[(self.var, k as u32)]);
            out = &out + &MultiPoly::term(self.field, c.clone(), m);
        }
        out
    }

    /// Reads a polynomial that uses only `var`.
    pub fn from_multi(p: &MultiPoly, var: Var) -> Result<UniPoly> {
        if !p.uses_only(&[var]) {
            return Err(Error::UnexpectedVariable {
                allowed: var.to_string(),
            });
        }
        let field = p.field();
        let mut coeffs = vec![field.zero(); p.degree_in(var) as usize + 1];
        for (m, c) in p.terms() {
            coeffs[m.exp(var) as usize] = c.clone();
        }
        Ok(UniPoly::new(field, var, coeffs))
    }

    pub fn parse(s: &str, field: Field, var: Var) -> Result<UniPoly> {
        UniPoly::from_multi(&MultiPoly::parse(s, field)?, var)
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_multi())
    }
}
