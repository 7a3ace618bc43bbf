use std::collections::BTreeMap;

use super::{FactorReport, Factorable};
use crate::arith::{sigma, Field, UniPoly, Var};
use crate::error::Result;

pub fn divisors(n: u32) -> Vec<u32> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// `Phi_n` over Q, by dividing `t^n - 1` by every `Phi_e` with `e | n, e < n`.
pub fn cyclotomic(n: u32) -> UniPoly {
    assert!(n >= 1, "cyclotomic index must be positive");
    let mut cache = BTreeMap::new();
    cyclotomic_cached(n, &mut cache)
}

fn cyclotomic_cached(n: u32, cache: &mut BTreeMap<u32, UniPoly>) -> UniPoly {
    if let Some(p) = cache.get(&n) {
        return p.clone();
    }
    let q = Field::Rationals;
    let mut p = UniPoly::monomial(q, Var::T, q.one(), n as usize).sub(&UniPoly::one(q, Var::T));
    for e in divisors(n).into_iter().filter(|&e| e < n) {
        let phi = cyclotomic_cached(e, cache);
        p = p
            .exact_divide(&phi)
            .expect("same field")
            .expect("Phi_e divides t^n - 1 for e | n");
    }
    cache.insert(n, p.clone());
    p
}

/// `sigma_i = prod_{d | i+1, d > 1} Phi_d` over Q; every multiplicity is 1.
pub fn factor_sigma_rational(i: u32) -> Result<FactorReport<UniPoly>> {
    let input = sigma(i, Field::Rationals)?;
    let mut cache = BTreeMap::new();
    let factors = divisors(i + 1)
        .into_iter()
        .filter(|&d| d > 1)
        .map(|d| (cyclotomic_cached(d, &mut cache), 1))
        .collect();
    let unit = input.field().one();
    FactorReport::new(input, unit, factors)
}

/// Euler's totient by trial division, used to cross-check degrees.
pub fn totient(mut n: u32) -> u32 {
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

impl Factorable for UniPoly {
    fn field(&self) -> Field {
        UniPoly::field(self)
    }

    fn one_like(&self) -> Self {
        UniPoly::one(UniPoly::field(self), self.var())
    }

    fn mul(&self, other: &Self) -> Self {
        UniPoly::mul(self, other)
    }

    fn scale(&self, c: &crate::arith::Scalar) -> Self {
        UniPoly::scale(self, c)
    }

    fn degree(&self) -> u32 {
        UniPoly::degree(self).unwrap_or(0) as u32
    }

    fn coprime(&self, other: &Self) -> Result<bool> {
        super::coprime_univariate(self, other)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> UniPoly {
        UniPoly::parse(s, Field::Rationals, Var::T).unwrap()
    }

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic(1), q("t-1"));
        assert_eq!(cyclotomic(2), q("t+1"));
        assert_eq!(cyclotomic(3), q("t^2+t+1"));
        assert_eq!(cyclotomic(4), q("t^2+1"));
        assert_eq!(cyclotomic(6), q("t^2-t+1"));
        assert_eq!(cyclotomic(12), q("t^4-t^2+1"));
    }

    #[test]
    fn cyclotomic_degree_is_totient() {
        for n in 1..=60 {
            assert_eq!(cyclotomic(n).degree(), Some(totient(n) as usize), "n = {n}");
        }
    }

    #[test]
    fn sigma_factorizations() {
        let r2 = factor_sigma_rational(2).unwrap();
        assert_eq!(r2.factors(), &[(q("t^2+t+1"), 1)]);
        let r3 = factor_sigma_rational(3).unwrap();
        assert_eq!(r3.factors(), &[(q("t+1"), 1), (q("t^2+1"), 1)]);
        let r1 = factor_sigma_rational(1).unwrap();
        assert_eq!(r1.factors(), &[(q("t+1"), 1)]);
    }

    #[test]
    fn sigma2_has_no_rational_root() {
        // Rational root test: candidates are +-1.
        let s2 = sigma(2, Field::Rationals).unwrap();
        for r in [1, -1] {
            assert!(!s2.eval(&Field::Rationals.from_i64(r)).is_zero());
        }
    }

    #[test]
    fn divisor_lists() {
        assert_eq!(divisors(12), [1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(1), [1]);
        assert_eq!(divisors(49), [1, 7, 49]);
    }
}
