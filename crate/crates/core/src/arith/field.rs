//! Coefficient fields: the rationals and prime fields `F_p`.
//!
//! Scalars are tagged values; arithmetic always goes through the owning
//! [`Field`] so that modular reduction uses the right modulus.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

const MAX_PRIME: u64 = 1 << 31;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    Rationals,
    PrimeField(u64),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Scalar {
    Rational(BigRational),
    Modular(u64),
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl Field {
    /// `F_p`, with primality checked by trial division.
    pub fn prime(p: u64) -> Result<Field> {
        if p >= MAX_PRIME || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Field::PrimeField(p))
    }

    pub fn characteristic(self) -> u64 {
        match self {
            Field::Rationals => 0,
            Field::PrimeField(p) => p,
        }
    }

    /// The command-line spelling: `q` or `fp:<p>`.
    pub fn label(self) -> String {
        match self {
            Field::Rationals => "q".to_string(),
            Field::PrimeField(p) => format!("fp:{p}"),
        }
    }

    pub fn zero(self) -> Scalar {
        match self {
            Field::Rationals => Scalar::Rational(BigRational::zero()),
            Field::PrimeField(_) => Scalar::Modular(0),
        }
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, n: i64) -> Scalar {
        match self {
            Field::Rationals => Scalar::Rational(BigRational::from_integer(BigInt::from(n))),
            Field::PrimeField(p) => Scalar::Modular(n.rem_euclid(p as i64) as u64),
        }
    }

    pub fn from_bigint(self, n: &BigInt) -> Scalar {
        match self {
            Field::Rationals => Scalar::Rational(BigRational::from_integer(n.clone())),
            Field::PrimeField(p) => {
                let r = n.mod_floor(&BigInt::from(p));
                Scalar::Modular(r.to_u64().expect("residue fits in u64"))
            }
        }
    }

    /// Maps `num/den` into the field; `None` when `den` vanishes in the field.
    pub fn from_ratio(self, num: &BigInt, den: &BigInt) -> Option<Scalar> {
        let d = self.from_bigint(den);
        if d.is_zero() {
            return None;
        }
        Some(self.div(&self.from_bigint(num), &d))
    }

    pub fn add(self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (Field::Rationals, Scalar::Rational(x), Scalar::Rational(y)) => Scalar::Rational(
                if x.is_integer() && y.is_integer() {
                    BigRational::from_integer(x.numer() + y.numer())
                } else {
                    x + y
                },
            ),
            (Field::PrimeField(p), Scalar::Modular(x), Scalar::Modular(y)) => {
                Scalar::Modular((x + y) % p)
            }
            _ => mismatch(self, a, b),
        }
    }

    pub fn sub(self, a: &Scalar, b: &Scalar) -> Scalar {
        self.add(a, &self.neg(b))
    }

    pub fn mul(self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (Field::Rationals, Scalar::Rational(x), Scalar::Rational(y)) => Scalar::Rational(
                if x.is_integer() && y.is_integer() {
                    BigRational::from_integer(x.numer() * y.numer())
                } else {
                    x * y
                },
            ),
            (Field::PrimeField(p), Scalar::Modular(x), Scalar::Modular(y)) => {
                Scalar::Modular(x * y % p)
            }
            _ => mismatch(self, a, b),
        }
    }

    pub fn neg(self, a: &Scalar) -> Scalar {
        match (self, a) {
            (Field::Rationals, Scalar::Rational(x)) => Scalar::Rational(-x),
            (Field::PrimeField(p), Scalar::Modular(x)) => Scalar::Modular((p - x) % p),
            _ => mismatch(self, a, a),
        }
    }

    /// Multiplicative inverse. Panics on zero; callers check first.
    pub fn inv(self, a: &Scalar) -> Scalar {
        assert!(!a.is_zero(), "inverse of zero");
        match (self, a) {
            (Field::Rationals, Scalar::Rational(x)) => Scalar::Rational(x.recip()),
            (Field::PrimeField(p), Scalar::Modular(_)) => self.pow(a, p - 2),
            _ => mismatch(self, a, a),
        }
    }

    pub fn div(self, a: &Scalar, b: &Scalar) -> Scalar {
        self.mul(a, &self.inv(b))
    }

    pub fn pow(self, a: &Scalar, mut e: u64) -> Scalar {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// True when `a` lies in this field's representation.
    pub fn owns(self, a: &Scalar) -> bool {
        match (self, a) {
            (Field::Rationals, Scalar::Rational(_)) => true,
            (Field::PrimeField(p), Scalar::Modular(x)) => *x < p,
            _ => false,
        }
    }

    /// Every element of `F_p`, in increasing order. Rationals have no such list.
    pub fn elements(self) -> Option<Vec<Scalar>> {
        match self {
            Field::Rationals => None,
            Field::PrimeField(p) => Some((0..p).map(Scalar::Modular).collect()),
        }
    }
}

fn mismatch(field: Field, a: &Scalar, b: &Scalar) -> ! {
    panic!("scalar representation does not belong to {field}: {a:?}, {b:?}")
}

impl Scalar {
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(x) => x.is_zero(),
            Scalar::Modular(x) => *x == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(x) => x.is_one(),
            Scalar::Modular(x) => *x == 1,
        }
    }

    /// Only rationals can be negative; residues are kept in `[0, p)`.
    pub fn is_negative(&self) -> bool {
        match self {
            Scalar::Rational(x) => x.is_negative(),
            Scalar::Modular(_) => false,
        }
    }

    pub fn abs(&self) -> Scalar {
        match self {
            Scalar::Rational(x) => Scalar::Rational(x.abs()),
            Scalar::Modular(x) => Scalar::Modular(*x),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "Q"),
            Field::PrimeField(p) => write!(f, "F_{p}"),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(x) => write!(f, "{x}"),
            Scalar::Modular(x) => write!(f, "{x}"),
        }
    }
}

impl FromStr for Field {
    type Err = Error;

    fn from_str(s: &str) -> Result<Field> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("q") {
            return Ok(Field::Rationals);
        }
        let rest = s
            .strip_prefix("fp:")
            .or_else(|| s.strip_prefix("FP:"))
            .ok_or_else(|| Error::Parse {
                pos: 0,
                msg: format!("field must be `q` or `fp:<prime>`, got `{s}`"),
            })?;
        let p: u64 = rest.parse().map_err(|_| Error::Parse {
            pos: 3,
            msg: format!("`{rest}` is not an integer"),
        })?;
        Field::prime(p)
    }
}
