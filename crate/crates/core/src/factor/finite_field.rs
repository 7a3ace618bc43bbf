//! Factorization of univariate polynomials over `F_p`: squarefree
//! decomposition, distinct-degree splitting, then Cantor-Zassenhaus
//! equal-degree splitting.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::FactorReport;
use crate::arith::{sigma, Field, Scalar, UniPoly};
use crate::error::{Error, Result};

fn modulus(f: &UniPoly) -> Result<u64> {
    match f.field() {
        Field::PrimeField(p) => Ok(p),
        Field::Rationals => Err(Error::FieldMismatch {
            left: Field::PrimeField(0),
            right: Field::Rationals,
        }),
    }
}

fn pow_mod(base: &UniPoly, mut e: u64, m: &UniPoly) -> UniPoly {
    let mut base = base.rem(m).expect("nonzero modulus");
    let mut acc = UniPoly::one(m.field(), m.var()).rem(m).expect("nonzero modulus");
    while e > 0 {
        if e & 1 == 1 {
            acc = acc.mul(&base).rem(m).expect("nonzero modulus");
        }
        e >>= 1;
        if e > 0 {
            base = base.mul(&base).rem(m).expect("nonzero modulus");
        }
    }
    acc
}

fn exact(a: &UniPoly, b: &UniPoly) -> UniPoly {
    a.exact_divide(b)
        .expect("compatible polynomials")
        .expect("divisor is a factor")
}

/// `f(t^(1/p))` for `f` whose exponents are all multiples of `p`; the
/// Frobenius map is the identity on `F_p` coefficients.
fn pth_root(f: &UniPoly, p: u64) -> UniPoly {
    let coeffs = f.coeffs().iter().step_by(p as usize).cloned().collect();
    UniPoly::new(f.field(), f.var(), coeffs)
}

/// Squarefree decomposition of a monic polynomial in characteristic `p`.
pub fn squarefree_decomposition(f: &UniPoly) -> Result<Vec<(UniPoly, u32)>> {
    let p = modulus(f)?;
    let mut out = Vec::new();
    if f.degree().unwrap_or(0) == 0 {
        return Ok(out);
    }
    let mut c = f.gcd(&f.derivative())?;
    let mut w = exact(f, &c);
    let mut i = 1;
    while !w.is_one() {
        let y = w.gcd(&c)?;
        let z = exact(&w, &y);
        if !z.is_one() {
            out.push((z, i));
        }
        i += 1;
        w = y;
        c = exact(&c, &w);
    }
    if !c.is_one() {
        for (g, k) in squarefree_decomposition(&pth_root(&c, p))? {
            out.push((g, k * p as u32));
        }
    }
    Ok(out)
}

/// Groups the irreducible factors of a monic squarefree polynomial by degree.
pub fn distinct_degree(f: &UniPoly) -> Result<Vec<(UniPoly, usize)>> {
    let p = modulus(f)?;
    let x = UniPoly::x(f.field(), f.var());
    let mut rest = f.clone();
    let mut out = Vec::new();
    let mut h = x.rem(&rest)?;
    let mut d = 1;
    while rest.degree().unwrap_or(0) >= 2 * d {
        h = pow_mod(&h, p, &rest);
        let g = h.sub(&x).gcd(&rest)?;
        if !g.is_one() {
            rest = exact(&rest, &g);
            h = h.rem(&rest)?;
            out.push((g, d));
        }
        d += 1;
    }
    if let Some(deg) = rest.degree().filter(|&deg| deg > 0) {
        out.push((rest, deg));
    }
    Ok(out)
}

fn random_poly(field: Field, f: &UniPoly, rng: &mut ChaCha8Rng) -> UniPoly {
    let p = field.characteristic();
    let n = f.degree().expect("nonzero");
    let coeffs = (0..n).map(|_| Scalar::Modular(rng.random_range(0..p))).collect();
    UniPoly::new(field, f.var(), coeffs)
}

/// A polynomial whose gcd with `f` splits off a random subset of the
/// degree-`d` factors: `a^((p^d-1)/2) - 1` for odd `p`, the trace
/// `a + a^2 + ... + a^(2^(d-1))` for `p = 2`.
fn splitting_candidate(a: &UniPoly, d: usize, f: &UniPoly, p: u64) -> UniPoly {
    if p == 2 {
        let mut term = a.clone();
        let mut acc = a.clone();
        for _ in 1..d {
            term = term.mul(&term).rem(f).expect("nonzero modulus");
            acc = acc.add(&term);
        }
        return acc;
    }
    // (p^d - 1)/2 = (1 + p + ... + p^(d-1)) * (p - 1)/2
    let mut frob = a.clone();
    let mut norm = a.clone();
    for _ in 1..d {
        frob = pow_mod(&frob, p, f);
        norm = norm.mul(&frob).rem(f).expect("nonzero modulus");
    }
    pow_mod(&norm, (p - 1) / 2, f).sub(&UniPoly::one(f.field(), f.var()))
}

/// Splits a monic squarefree product of degree-`d` irreducibles.
pub fn equal_degree(f: &UniPoly, d: usize, rng: &mut ChaCha8Rng) -> Result<Vec<UniPoly>> {
    let p = modulus(f)?;
    let n = f.degree().unwrap_or(0);
    if n <= d {
        return Ok(vec![f.clone()]);
    }
    loop {
        let a = random_poly(f.field(), f, rng);
        if a.degree().unwrap_or(0) < 1 {
            continue;
        }
        let mut g = a.gcd(f)?;
        if g.is_one() {
            g = splitting_candidate(&a, d, f, p).gcd(f)?;
        }
        let dg = g.degree().unwrap_or(0);
        if dg > 0 && dg < n {
            let mut out = equal_degree(&g, d, rng)?;
            out.extend(equal_degree(&exact(f, &g), d, rng)?);
            return Ok(out);
        }
    }
}

/// Complete factorization into monic irreducibles over `F_p`.
///
/// The splitting RNG is seeded from `seed` when given; the report is sorted
/// canonically, so the result does not depend on the random path.
pub fn factor_over_prime_field(f: &UniPoly, seed: Option<u64>) -> Result<FactorReport<UniPoly>> {
    modulus(f)?;
    let unit = f.leading_coefficient().ok_or(Error::ZeroFactorization)?.clone();
    let mut rng = match seed {
        Some(s) => ChaCha8Rng::seed_from_u64(s),
        None => ChaCha8Rng::seed_from_u64(rand::rng().random()),
    };
    let mut factors = Vec::new();
    for (part, mult) in squarefree_decomposition(&f.monic())? {
        for (block, d) in distinct_degree(&part)? {
            for irr in equal_degree(&block, d, &mut rng)? {
                factors.push((irr, mult));
            }
        }
    }
    FactorReport::new(f.clone(), unit, factors)
}

/// Squarefreeness of `sigma_(p^m - 2)` over `F_p`, decided by its gcd with
/// the derivative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparabilityCertificate {
    pub p: u64,
    pub m: u32,
    pub index: u32,
    pub gcd: UniPoly,
    pub squarefree: bool,
    /// `sigma * (t - 1) = t^(p^m - 1) - 1` held exactly.
    pub telescoping_holds: bool,
}

pub fn separability_check(p: u64, m: u32) -> Result<SeparabilityCertificate> {
    let field = Field::prime(p)?;
    let pm = p
        .checked_pow(m)
        .filter(|&v| v <= 1 << 20)
        .ok_or(Error::OutOfRange {
            what: "p^m",
            value: i64::MAX,
            bound: "<= 2^20",
        })?;
    if pm < 3 {
        return Err(Error::OutOfRange {
            what: "p^m - 2",
            value: pm as i64 - 2,
            bound: ">= 1",
        });
    }
    let index = (pm - 2) as u32;
    let s = sigma(index, field)?;
    let gcd = s.gcd(&s.derivative())?;
    let var = s.var();
    let t_minus_1 = UniPoly::x(field, var).sub(&UniPoly::one(field, var));
    let rhs = UniPoly::monomial(field, var, field.one(), (pm - 1) as usize).sub(&UniPoly::one(field, var));
    Ok(SeparabilityCertificate {
        p,
        m,
        index,
        squarefree: gcd.is_one(),
        gcd,
        telescoping_holds: s.mul(&t_minus_1) == rhs,
    })
}
