//! Factorization of `tau_i` and the running count of distinct irreducible
//! factors across an index set.
//!
//! Over Q the factors come from the cyclotomic decomposition of `sigma_i`;
//! over `F_p` from a full univariate factorization. In both cases the
//! dehomogenized factors are homogenized back into `k[s,t]`.

mod cyclotomic;
mod finite_field;

use std::collections::HashSet;
use std::fmt::Display;

pub use cyclotomic::{cyclotomic, divisors, factor_sigma_rational, totient};
pub use finite_field::{
    distinct_degree, equal_degree, factor_over_prime_field, separability_check,
    squarefree_decomposition, SeparabilityCertificate,
};

use crate::arith::{dehomogenize, homogenize, tau, Field, MultiPoly, Scalar, UniPoly, Var};
use crate::error::{Error, Result};

/// What a [`FactorReport`] needs from its polynomial type.
pub trait Factorable: Clone + PartialEq + Display {
    fn field(&self) -> Field;
    fn one_like(&self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn scale(&self, c: &Scalar) -> Self;
    fn degree(&self) -> u32;
    fn coprime(&self, other: &Self) -> Result<bool>;
}

impl Factorable for MultiPoly {
    fn field(&self) -> Field {
        MultiPoly::field(self)
    }

    fn one_like(&self) -> Self {
        MultiPoly::one(MultiPoly::field(self))
    }

    fn mul(&self, other: &Self) -> Self {
        self * other
    }

    fn scale(&self, c: &Scalar) -> Self {
        MultiPoly::scale(self, c)
    }

    fn degree(&self) -> u32 {
        MultiPoly::degree(self).unwrap_or(0)
    }

    /// Compared after setting `s = 1`; only meaningful for forms in `s, t`
    /// not divisible by `s`.
    fn coprime(&self, other: &Self) -> Result<bool> {
        let a = dehomogenize(self, Var::S, Var::T)?;
        let b = dehomogenize(other, Var::S, Var::T)?;
        coprime_univariate(&a, &b)
    }
}

/// Modulus for the coprimality shortcut over Q.
const SHORTCUT_PRIME: u64 = 2_147_483_647;

/// Image in `F_p[t]` (or another prime field) of an integer polynomial with leading coefficient
/// `+-1`; `None` for anything else.
fn reduce_unit_leading(f: &UniPoly, fp: Field) -> Option<UniPoly> {
    let mut coeffs = Vec::with_capacity(f.coeffs().len());
    for c in f.coeffs() {
        match c {
            Scalar::Rational(r) if r.is_integer() => coeffs.push(fp.from_bigint(r.numer())),
            _ => return None,
        }
    }
    match f.leading_coefficient() {
        Some(c) if c.abs().is_one() => Some(UniPoly::new(fp, f.var(), coeffs)),
        _ => None,
    }
}

/// Over Q, two integer polynomials with leading coefficient `+-1` that are
/// coprime modulo a prime are coprime: a common factor would be, after
/// scaling, an integer polynomial of the same degree dividing both images.
/// Every other case is decided by the exact gcd.
pub(crate) fn coprime_univariate(a: &UniPoly, b: &UniPoly) -> Result<bool> {
    if a.field() == Field::Rationals {
        let fp = Field::PrimeField(SHORTCUT_PRIME);
        if let (Some(ra), Some(rb)) = (reduce_unit_leading(a, fp), reduce_unit_leading(b, fp)) {
            if ra.gcd(&rb)?.is_one() {
                return Ok(true);
            }
        }
    }
    Ok(a.gcd(b)?.is_one())
}

/// `input = unit * prod factor^multiplicity`, with canonically normalized,
/// pairwise coprime factors sorted by degree and then by printed form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorReport<P> {
    input: P,
    unit: Scalar,
    factors: Vec<(P, u32)>,
}

impl<P: Factorable> FactorReport<P> {
    /// Sorts the factors and re-verifies the product and coprimality.
    pub fn new(input: P, unit: Scalar, mut factors: Vec<(P, u32)>) -> Result<Self> {
        factors.sort_by_cached_key(|(f, _)| (f.degree(), f.to_string()));
        let report = FactorReport {
            input,
            unit,
            factors,
        };
        if report.reassemble() != report.input {
            return Err(Error::CertificateFailed(format!(
                "factors of {} do not multiply back",
                report.input
            )));
        }
        for (i, (a, _)) in report.factors.iter().enumerate() {
            for (b, _) in &report.factors[i + 1..] {
                if !a.coprime(b)? {
                    return Err(Error::CertificateFailed(format!("{a} and {b} share a factor")));
                }
            }
        }
        Ok(report)
    }

    pub fn input(&self) -> &P {
        &self.input
    }

    pub fn unit(&self) -> &Scalar {
        &self.unit
    }

    pub fn factors(&self) -> &[(P, u32)] {
        &self.factors
    }

    pub fn reassemble(&self) -> P {
        let mut acc = self.input.one_like().scale(&self.unit);
        for (f, k) in &self.factors {
            for _ in 0..*k {
                acc = acc.mul(f);
            }
        }
        acc
    }

    /// Sum of degree times multiplicity.
    pub fn total_degree(&self) -> u32 {
        self.factors.iter().map(|(f, k)| f.degree() * k).sum()
    }
}

/// Irreducible factors of `tau_i` in `k[s,t]`, unit `(-1)^i` up to the
/// field's sign conventions.
///
/// `s` never divides `tau_i` (its `t^i` coefficient is `+-1`), so setting
/// `s = 1` preserves degrees and homogenizing the univariate factors
/// recovers a factorization of `tau_i` itself.
pub fn factor_tau(i: u32, field: Field, seed: Option<u64>) -> Result<FactorReport<MultiPoly>> {
    let input = tau(i, field)?;
    let flat = dehomogenize(&input, Var::S, Var::T)?;
    let (unit, uni_factors) = match field {
        Field::Rationals => {
            let r = factor_sigma_rational(i)?;
            let sign = field.from_i64(if i.is_multiple_of(2) { 1 } else { -1 });
            (sign, r.factors().to_vec())
        }
        Field::PrimeField(_) => factor_flat_tau_prime(i, &flat, seed)?,
    };
    let factors = uni_factors
        .iter()
        .map(|(g, k)| Ok((homogenize(g, Var::S)?, *k)))
        .collect::<Result<Vec<_>>>()?;
    FactorReport::new(input, unit, factors)
}

/// `flat = +-sigma_i` over `F_p`, split along the reductions of the
/// cyclotomic factors `Phi_d`, `d | i+1`, which are far smaller than
/// `sigma_i`. Multiplicities are then counted against `flat` itself.
fn factor_flat_tau_prime(i: u32, flat: &UniPoly, seed: Option<u64>) -> Result<(Scalar, Vec<(UniPoly, u32)>)> {
    let field = flat.field();
    let mut irreducibles: Vec<UniPoly> = Vec::new();
    for d in divisors(i + 1).into_iter().filter(|&d| d > 1) {
        let phi = reduce_unit_leading(&cyclotomic(d), field).ok_or_else(|| {
            Error::CertificateFailed(format!("Phi_{d} is not monic over the integers"))
        })?;
        let phi = UniPoly::new(field, flat.var(), phi.coeffs().to_vec());
        for (g, _) in factor_over_prime_field(&phi, seed)?.factors() {
            if !irreducibles.contains(g) {
                irreducibles.push(g.clone());
            }
        }
    }
    let mut rest = flat.clone();
    let mut factors = Vec::with_capacity(irreducibles.len());
    for g in irreducibles {
        let mut k = 0;
        while let Some(q) = rest.exact_divide(&g)? {
            rest = q;
            k += 1;
        }
        factors.push((g, k));
    }
    if rest.degree() != Some(0) {
        return Err(Error::CertificateFailed(format!("sigma_{i} has a factor outside the cyclotomic pieces")));
    }
    let unit = rest.coeff(0).clone();
    Ok((unit, factors))
}

/// Distinct irreducible factors of `{tau_i : i in index_set}`, accumulated
/// in the given order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrowthReport {
    pub index_set: Vec<u32>,
    pub per_index: Vec<FactorReport<MultiPoly>>,
    /// Factors first seen at each step.
    pub new_factors: Vec<usize>,
    /// Distinct factors seen after each step; non-decreasing.
    pub cumulative_distinct: Vec<usize>,
    distinct: Vec<MultiPoly>,
}

impl GrowthReport {
    pub fn from_reports(index_set: Vec<u32>, per_index: Vec<FactorReport<MultiPoly>>) -> GrowthReport {
        let mut seen = HashSet::new();
        let mut distinct = Vec::new();
        let mut new_factors = Vec::new();
        let mut cumulative_distinct = Vec::new();
        for report in &per_index {
            let mut fresh = 0;
            for (f, _) in report.factors() {
                if seen.insert(f.clone()) {
                    distinct.push(f.clone());
                    fresh += 1;
                }
            }
            new_factors.push(fresh);
            cumulative_distinct.push(distinct.len());
        }
        GrowthReport {
            index_set,
            per_index,
            new_factors,
            cumulative_distinct,
            distinct,
        }
    }

    /// Distinct factors in order of first appearance.
    pub fn distinct_factors(&self) -> &[MultiPoly] {
        &self.distinct
    }

    pub fn final_count(&self) -> usize {
        self.cumulative_distinct.last().copied().unwrap_or(0)
    }

    pub fn strictly_increasing(&self) -> bool {
        self.cumulative_distinct.windows(2).all(|w| w[0] < w[1])
            && self.cumulative_distinct.first().is_none_or(|&c| c > 0)
    }

    /// Pairwise gcd check over all distinct factors.
    pub fn distinct_pairwise_coprime(&self) -> Result<bool> {
        for (i, a) in self.distinct.iter().enumerate() {
            for b in &self.distinct[i + 1..] {
                if !a.coprime(b)? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

pub fn accumulate_distinct(index_set: &[u32], field: Field, seed: Option<u64>) -> Result<GrowthReport> {
    let per_index = index_set
        .iter()
        .map(|&i| factor_tau(i, field, seed))
        .collect::<Result<Vec<_>>>()?;
    Ok(GrowthReport::from_reports(index_set.to_vec(), per_index))
}

/// `p^m - 2` for some `m >= 1`.
pub fn is_separable_index(i: u32, p: u64) -> bool {
    let mut pm = p;
    while pm < i as u64 + 2 {
        pm *= p;
    }
    pm == i as u64 + 2
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rationals;

    fn mp(s: &str, field: Field) -> MultiPoly {
        MultiPoly::parse(s, field).unwrap()
    }

    #[test]
    fn tau_over_rationals() {
        let r1 = factor_tau(1, Q, None).unwrap();
        assert_eq!(r1.unit(), &Q.from_i64(-1));
        assert_eq!(r1.factors(), &[(mp("t+s", Q), 1)]);
        let r2 = factor_tau(2, Q, None).unwrap();
        assert!(r2.unit().is_one());
        assert_eq!(r2.factors(), &[(mp("t^2+s*t+s^2", Q), 1)]);
        let r3 = factor_tau(3, Q, None).unwrap();
        assert_eq!(r3.unit(), &Q.from_i64(-1));
        assert_eq!(r3.factors(), &[(mp("t+s", Q), 1), (mp("t^2+s^2", Q), 1)]);
    }

    #[test]
    fn tau_in_characteristic_two() {
        let f2 = Field::PrimeField(2);
        let r = factor_tau(1, f2, Some(0)).unwrap();
        assert!(r.unit().is_one());
        assert_eq!(r.factors(), &[(mp("t+s", f2), 1)]);
        // sigma_3 = (t+1)^3 over F_2.
        let r3 = factor_tau(3, f2, Some(0)).unwrap();
        assert_eq!(r3.factors(), &[(mp("t+s", f2), 3)]);
    }

    #[test]
    fn growth_over_rationals() {
        let g = accumulate_distinct(&(1..=20).collect::<Vec<_>>(), Q, None).unwrap();
        assert_eq!(g.final_count(), 20);
        assert!(g.strictly_increasing());
        assert!(g.distinct_pairwise_coprime().unwrap());
        let single = accumulate_distinct(&[1], Field::PrimeField(5), Some(0)).unwrap();
        assert_eq!(single.cumulative_distinct, [1]);
    }

    #[test]
    fn growth_over_f3() {
        let g = accumulate_distinct(&[1, 7, 25], Field::PrimeField(3), Some(7)).unwrap();
        assert_eq!(g.cumulative_distinct, [1, 4, 12]);
        assert_eq!(g.new_factors, [1, 3, 8]);
    }

    #[test]
    fn separable_indices() {
        assert!(is_separable_index(7, 3));
        assert!(is_separable_index(25, 3));
        assert!(is_separable_index(2, 2));
        assert!(!is_separable_index(4, 2));
        assert!(is_separable_index(1, 3));
    }
}
