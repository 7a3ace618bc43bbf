use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

/// The six ring variables. Declaration order is the term-order priority
/// `t > s > y > x > v > u`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Var {
    T,
    S,
    Y,
    X,
    V,
    U,
}

impl Var {
    pub const ALL: [Var; 6] = [Var::T, Var::S, Var::Y, Var::X, Var::V, Var::U];

    /// Order in which factors are written inside a printed term.
    pub const PRINT_ORDER: [Var; 6] = [Var::S, Var::T, Var::X, Var::Y, Var::U, Var::V];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> char {
        match self {
            Var::T => 't',
            Var::S => 's',
            Var::Y => 'y',
            Var::X => 'x',
            Var::V => 'v',
            Var::U => 'u',
        }
    }

    pub fn from_name(c: char) -> Option<Var> {
        Var::ALL.into_iter().find(|v| v.name() == c)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// A power product in `x, y, u, v, s, t`. The all-zero exponent vector is 1.
///
/// Ordered graded-lexicographically with `t > s > y > x > v > u`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: [u32; 6],
}

impl Monomial {
    pub fn one() -> Monomial {
        Monomial::default()
    }

    pub fn var(v: Var) -> Monomial {
        Monomial::one().with(v, 1)
    }

    pub fn from_pairs(pairs: &[(Var, u32)]) -> Monomial {
        let mut m = Monomial::one();
        for &(v, e) in pairs {
            m.exps[v.index()] += e;
        }
        m
    }

    /// Returns a copy with the exponent of `v` replaced by `e`.
    pub fn with(mut self, v: Var, e: u32) -> Monomial {
        self.exps[v.index()] = e;
        self
    }

    pub fn exp(&self, v: Var) -> u32 {
        self.exps[v.index()]
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn degree_in(&self, vars: &[Var]) -> u32 {
        vars.iter().map(|&v| self.exp(v)).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = self.exps;
        for (e, o) in exps.iter_mut().zip(other.exps) {
            *e += o;
        }
        Monomial { exps }
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut exps = self.exps;
        for (e, o) in exps.iter_mut().zip(other.exps) {
            *e = e.checked_sub(o)?;
        }
        Some(Monomial { exps })
    }

    pub fn pow(&self, k: u32) -> Monomial {
        Monomial {
            exps: self.exps.map(|e| e * k),
        }
    }

    /// Variables with nonzero exponent, in term-order priority.
    pub fn support(&self) -> impl Iterator<Item = (Var, u32)> + '_ {
        Var::ALL
            .into_iter()
            .filter(|&v| self.exp(v) > 0 ).map(|v| (v, self.exp(v)))
    }

    pub fn uses_only(&self, vars: &[Var]) -> bool {
        self.support().all(|(v, _)| vars.contains(&v))
    }

    /// Splits into the part in `vars` and the part in the other variables.
    pub fn split(&self, vars: &[Var]) -> (Monomial, Monomial) {
        let mut inside = Monomial::one();
        let mut outside = *self;
        for &v in vars {
            inside.exps[v.index()] = self.exp(v);
            outside.exps[v.index()] = 0;
        }
        (inside, outside)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for v in Var::PRINT_ORDER {
            let e = self.exp(v);
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graded_lex_order() {
        let t3 = Monomial::from_pairs(&[(Var::T, 3)]);
        let st2 = Monomial::from_pairs(&[(Var::S, 1), (Var::T, 2)]);
        let s3 = Monomial::from_pairs(&[(Var::S, 3)]);
        let x4 = Monomial::from_pairs(&[(Var::X, 4)]);
        assert!(t3 > st2 && st2 > s3);
        assert!(x4 > t3);
        assert!(Monomial::var(Var::Y) > Monomial::var(Var::X));
        assert!(Monomial::var(Var::V) > Monomial::var(Var::U));
    }

    #[test]
    fn display_order() {
        let m = Monomial::from_pairs(&[(Var::V, 2), (Var::X, 2), (Var::S, 1)]);
        assert_eq!(m.to_string(), "s*x^2*v^2");
        assert_eq!(Monomial::one().to_string(), "1");
    }

    #[test]
    fn divide_and_split() {
        let m = Monomial::from_pairs(&[(Var::X, 2), (Var::S, 1)]);
        assert_eq!(m.div(&Monomial::var(Var::X)), Some(Monomial::from_pairs(&[(Var::X, 1), (Var::S, 1)])));
        assert_eq!(m.div(&Monomial::var(Var::T)), None);
        let (xy, rest) = m.split(&[Var::X, Var::Y]);
        assert_eq!(xy, Monomial::from_pairs(&[(Var::X, 2)]));
        assert_eq!(rest, Monomial::var(Var::S));
    }
}
