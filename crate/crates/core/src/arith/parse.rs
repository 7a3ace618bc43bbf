//! Reader for the canonical polynomial text form.
//!
//! Grammar (whitespace ignored):
//!
//! ```text
//! poly   := [sign] term (sign term)*
//! term   := factor ('*' factor)*
//! factor := integer ['/' integer] | var ['^' integer]
//! var    := x | y | u | v | s | t
//! ```

use num_bigint::BigInt;
use num_traits::One;

use super::field::Field;
use super::monomial::{Monomial, Var};
use super::multipoly::MultiPoly;
use crate::error::{Error, Result};

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl Cursor<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected an integer");
        }
        let digits = std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii digits");
        Ok(digits.parse().expect("digits parse as BigInt"))
    }

    fn small_integer(&mut self) -> Result<u32> {
        let n = self.integer()?;
        u32::try_from(n).or_else(|_| self.err("exponent too large"))
    }
}

pub(crate) fn parse_poly(s: &str, field: Field) -> Result<MultiPoly> {
    let mut cur = Cursor {
        bytes: s.as_bytes(),
        pos: 0,
    };
    let mut terms = Vec::new();
    let mut first = true;
    loop {
        let negative = match cur.peek() {
            Some(b'+') => {
                cur.pos += 1;
                false
            }
            Some(b'-') => {
                cur.pos += 1;
                true
            }
            None if first => return cur.err("empty polynomial"),
            None => break,
            Some(_) if first => false,
            Some(c) => return cur.err(format!("expected `+` or `-`, found `{}`", c as char)),
        };
        first = false;

        let mut num = BigInt::one();
        let mut den = BigInt::one();
        let mut mono = Monomial::one();
        loop {
            match cur.peek() {
                Some(c) if c.is_ascii_digit() => {
                    num *= cur.integer()?;
                    if cur.peek() == Some(b'/') {
                        cur.pos += 1;
                        den *= cur.integer()?;
                    }
                }
                Some(c) => {
                    let Some(v) = Var::from_name(c as char) else {
                        return cur.err(format!("unexpected `{}`", c as char));
                    };
                    cur.pos += 1;
                    let mut e = 1;
                    if cur.peek() == Some(b'^') {
                        cur.pos += 1;
                        e = cur.small_integer()?;
                    }
                    mono = mono.mul(&Monomial::from_pairs(&[(v, e)]));
                }
                None => return cur.err("expected a factor"),
            }
            if cur.peek() == Some(b'*') {
                cur.pos += 1;
            } else {
                break;
            }
        }
        if negative {
            num = -num;
        }
        if field.from_ratio(&num, &den).is_none() {
            return cur.err("denominator vanishes in the field");
        }
        terms.push((num, den, mono));
    }
    MultiPoly::from_bigint_terms(field, terms)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_garbage() {
        for bad in ["", "t+", "t**s", "z", "t^", "2 t", "1/0"] {
            assert!(parse_poly(bad, Field::Rationals).is_err(), "{bad}");
        }
    }

    #[test]
    fn accepts_spacing_and_repeats() {
        let a = parse_poly(" - t * t + 2 * s ", Field::Rationals).unwrap();
        assert_eq!(a.to_string(), "-t^2+2*s");
        let b = parse_poly("t+t", Field::PrimeField(2)).unwrap();
        assert!(b.is_zero());
    }
}
