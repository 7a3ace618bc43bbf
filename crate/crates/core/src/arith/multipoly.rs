use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;

use super::field::{Field, Scalar};
use super::monomial::{Monomial, Var};
use crate::error::{Error, Result};

/// Sparse polynomial in `x, y, u, v, s, t` over a [`Field`].
///
/// Terms are kept in a map keyed by the graded-lex order, so iteration runs
/// from the smallest term to the leading one. Zero coefficients are never
/// stored.
///
/// The arithmetic operators panic when the operands live over different
/// fields; the `checked_*` methods report that as [`Error::FieldMismatch`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    field: Field,
    terms: BTreeMap<Monomial, Scalar>,
}

impl MultiPoly {
    pub fn zero(field: Field) -> MultiPoly {
        MultiPoly {
            field,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(field: Field) -> MultiPoly {
        MultiPoly::constant(field, field.one())
    }

    pub fn constant(field: Field, c: Scalar) -> MultiPoly {
        MultiPoly::term(field, c, Monomial::one())
    }

    pub fn from_i64(field: Field, c: i64) -> MultiPoly {
        MultiPoly::constant(field, field.from_i64(c))
    }

    pub fn var(field: Field, v: Var) -> MultiPoly {
        MultiPoly::monomial(field, Monomial::var(v))
    }

    pub fn monomial(field: Field, m: Monomial) -> MultiPoly {
        MultiPoly::term(field, field.one(), m)
    }

    pub fn term(field: Field, c: Scalar, m: Monomial) -> MultiPoly {
        let mut p = MultiPoly::zero(field);
        p.add_term(m, c);
        p
    }

    /// Builds from `(coefficient, monomial)` pairs; repeated monomials are summed.
    pub fn from_terms(field: Field, terms: impl IntoIterator<Item = (i64, Monomial)>) -> MultiPoly {
        let mut p = MultiPoly::zero(field);
        for (c, m) in terms {
            p.add_term(m, field.from_i64(c));
        }
        p
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .is_some_and(|(m, c)| m.is_one() && c.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms from the leading one downwards.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn constant_term(&self) -> Scalar {
        self.coefficient(&Monomial::one())
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Scalar)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coefficient(&self) -> Option<&Scalar> {
        self.leading_term().map(|(_, c)| c)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.keys().map(|m| m.exp(v)).max().unwrap_or(0)
    }

    pub fn uses_only(&self, vars: &[Var]) -> bool {
        self.terms.keys().all(|m| m.uses_only(vars))
    }

    /// Homogeneous with respect to the total degree in `vars`. Zero counts.
    pub fn is_homogeneous_in(&self, vars: &[Var]) -> bool {
        let mut degs = self.terms.keys().map(|m| m.degree_in(vars));
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let field = self.field;
        match self.terms.get_mut(&m) {
            Some(existing) => {
                let sum = field.add(existing, &c);
                if sum.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    fn check_field(&self, other: &MultiPoly) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch {
                left: self.field,
                right: other.field,
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_field(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.checked_add(&other.neg_ref())
    }

    pub fn checked_mul(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_field(other)?;
        let mut out = MultiPoly::zero(self.field);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), self.field.mul(c1, c2));
            }
        }
        Ok(out)
    }

    fn neg_ref(&self) -> MultiPoly {
        MultiPoly {
            field: self.field,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (*m, self.field.neg(c)))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(self.field);
        }
        MultiPoly {
            field: self.field,
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (*m, self.field.mul(a, c)))
                .collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> MultiPoly {
        MultiPoly {
            field: self.field,
            terms: self.terms.iter().map(|(k, c)| (k.mul(m), c.clone())).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> MultiPoly {
        let mut base = self.clone();
        let mut acc = MultiPoly::one(self.field);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Exact quotient `self / divisor` in the polynomial ring, or `None` when
    /// the division leaves a remainder.
    ///
    /// Plain multivariate division by a single polynomial: the remainder is
    /// unique for a fixed term order, so the first leading term not divisible
    /// by `lt(divisor)` proves non-divisibility.
    pub fn exact_divide(&self, divisor: &MultiPoly) -> Result<Option<MultiPoly>> {
        self.check_field(divisor)?;
        let (lm, lc) = divisor.leading_term().ok_or(Error::DivisionByZero)?;
        let (lm, lc_inv) = (*lm, self.field.inv(lc));
        let mut rem = self.clone();
        let mut quot = MultiPoly::zero(self.field);
        while let Some((m, c)) = rem.leading_term() {
            let Some(qm) = m.div(&lm) else {
                return Ok(None);
            };
            let qc = self.field.mul(c, &lc_inv);
            for (dm, dc) in &divisor.terms {
                rem.add_term(dm.mul(&qm), self.field.neg(&self.field.mul(dc, &qc)));
            }
            quot.add_term(qm, qc);
        }
        Ok(Some(quot))
    }

    pub fn divides(&self, other: &MultiPoly) -> Result<bool> {
        Ok(other.exact_divide(self)?.is_some())
    }

    /// Replaces `v` by the scalar `value` throughout.
    pub fn substitute(&self, v: Var, value: &Scalar) -> MultiPoly {
        let mut out = MultiPoly::zero(self.field);
        for (m, c) in &self.terms {
            let k = m.exp(v);
            let c = self.field.mul(c, &self.field.pow(value, k as u64));
            out.add_term(m.with(v, 0), c);
        }
        out
    }

    pub fn substitute_all(&self, values: &[(Var, Scalar)]) -> MultiPoly {
        values
            .iter()
            .fold(self.clone(), |p, (v, c)| p.substitute(*v, c))
    }

    /// Groups terms by their power product in `vars`, returning the
    /// coefficient polynomials in the remaining variables.
    pub fn split_by(&self, vars: &[Var]) -> BTreeMap<Monomial, MultiPoly> {
        let mut out: BTreeMap<Monomial, MultiPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let (inside, outside) = m.split(vars);
            out.entry(inside)
                .or_insert_with(|| MultiPoly::zero(self.field))
                .add_term(outside, c.clone());
        }
        out
    }

    /// Divides by the leading coefficient. Zero stays zero.
    pub fn monic(&self) -> MultiPoly {
        match self.leading_coefficient() {
            Some(lc) => self.scale(&self.field.inv(lc)),
            None => self.clone(),
        }
    }

    /// Canonical associate: positive leading coefficient over Q (with the
    /// integer content left alone), monic over `F_p`. Returns the unit `u`
    /// with `self = u * canonical`.
    pub fn normalize(&self) -> (Scalar, MultiPoly) {
        let Some(lc) = self.leading_coefficient() else {
            return (self.field.one(), self.clone());
        };
        let unit = match self.field {
            Field::Rationals if lc.is_negative() => self.field.from_i64(-1),
            Field::Rationals => self.field.one(),
            Field::PrimeField(_) => lc.clone(),
        };
        (unit.clone(), self.scale(&self.field.inv(&unit)))
    }

    /// Parses the canonical text form, e.g. `-t^3-s*t^2+3/2*x*y`.
    pub fn parse(s: &str, field: Field) -> Result<MultiPoly> {
        super::parse::parse_poly(s, field)
    }

    pub(crate) fn from_bigint_terms(
        field: Field,
        terms: impl IntoIterator<Item = (BigInt, BigInt, Monomial)>,
    ) -> Result<MultiPoly> {
        let mut p = MultiPoly::zero(field);
        for (num, den, m) in terms {
            let c = field.from_ratio(&num, &den).ok_or(Error::DivisionByZero)?;
            p.add_term(m, c);
        }
        Ok(p)
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms().enumerate() {
            let negative = c.is_negative();
            if negative {
                write!(f, "-")?;
            } else if i > 0 {
                write!(f, "+")?;
            }
            let c = c.abs();
            if m.is_one() {
                write!(f, "{c}")?;
            } else if c.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{c}*{m}")?;
            }
        }
        Ok(())
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        self.checked_add(rhs).expect("polynomials over one field")
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self.checked_sub(rhs).expect("polynomials over one field")
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        self.checked_mul(rhs).expect("polynomials over one field")
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.neg_ref()
    }
}

impl Add for MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: MultiPoly) -> MultiPoly {
        &self + &rhs
    }
}

impl Sub for MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: MultiPoly) -> MultiPoly {
        &self - &rhs
    }
}

impl Mul for MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: MultiPoly) -> MultiPoly {
        &self * &rhs
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.neg_ref()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rationals;

    fn p(s: &str) -> MultiPoly {
        MultiPoly::parse(s, Q).unwrap()
    }

    #[test]
    fn additive_inverse() {
        assert!((p("t+s") + p("-t-s")).is_zero());
    }

    #[test]
    fn expand_product() {
        // (-t-s)(t^2+st+s^2), expanded by hand.
        let got = p("-t-s") * p("t^2+s*t+s^2");
        assert_eq!(got, p("-t^3-2*s*t^2-2*s^2*t-s^3"));
    }

    #[test]
    fn quartic_expansion() {
        let prod = p("x*y") * p("x-y") * p("s*x-t*y");
        assert_eq!(prod, p("s*x^3*y-t*x^2*y^2-s*x^2*y^2+t*x*y^3"));
    }

    #[test]
    fn exact_division() {
        let q = p("t^3-s^3").exact_divide(&p("t-s")).unwrap();
        assert_eq!(q, Some(p("t^2+s*t+s^2")));
        assert_eq!(p("1").exact_divide(&p("t")).unwrap(), None);
        assert_eq!(p("t^2+s").exact_divide(&p("t")).unwrap(), None);
        assert_eq!(p("t").exact_divide(&MultiPoly::zero(Q)), Err(Error::DivisionByZero));
    }

    #[test]
    fn field_mismatch_is_reported() {
        let a = MultiPoly::var(Q, Var::T);
        let b = MultiPoly::var(Field::PrimeField(3), Var::T);
        assert!(matches!(a.checked_add(&b), Err(Error::FieldMismatch { .. })));
        assert!(matches!(a.checked_mul(&b), Err(Error::FieldMismatch { .. })));
    }

    #[test]
    fn canonical_printing() {
        assert_eq!(p("-s^3-t^3-s^2*t-s*t^2").to_string(), "-t^3-s*t^2-s^2*t-s^3");
        assert_eq!(p("3/2*x - 1").to_string(), "3/2*x-1");
        assert_eq!(MultiPoly::zero(Q).to_string(), "0");
        let f2 = MultiPoly::parse("-t-s", Field::PrimeField(2)).unwrap();
        assert_eq!(f2.to_string(), "t+s");
        let f7 = MultiPoly::parse("-t", Field::PrimeField(7)).unwrap();
        assert_eq!(f7.to_string(), "6*t");
    }

    #[test]
    fn substitution_and_split() {
        let a = p("s*x^2-x*y*t");
        assert_eq!(a.substitute_all(&[(Var::X, Q.one()), (Var::Y, Q.one())]), p("s-t"));
        let parts = a.split_by(&[Var::X, Var::Y]);
        assert_eq!(parts.len(), 2);
        assert_eq!(parts[&Monomial::from_pairs(&[(Var::X, 2)])], p("s"));
    }

    #[test]
    fn normalization() {
        let (u, c) = p("-t-s").normalize();
        assert_eq!(u, Q.from_i64(-1));
        assert_eq!(c, p("t+s"));
        let f5 = Field::PrimeField(5);
        let (u, c) = MultiPoly::parse("2*t+s", f5).unwrap().normalize();
        assert_eq!(u, Scalar::Modular(2));
        assert_eq!(c, MultiPoly::parse("t+3*s", f5).unwrap());
    }

    #[test]
    fn powers() {
        assert_eq!(p("t+s").pow(2), p("t^2+2*s*t+s^2"));
        assert!(p("t").pow(0).is_one());
    }
}
