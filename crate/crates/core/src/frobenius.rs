//! Graded pieces of `R/(x^n, y^n)` for `R = k[x,y,s,t]/(F)` and
//! `F = xy(x-y)(sx-ty)`, graded by `deg x = deg y = 1`, `deg s = deg t = 0`.
//!
//! In degree `d` the piece is generated by `y^d, x y^(d-1), ..., x^d` (rows in
//! ascending `x`-exponent) with relations `x^a y^(d-4-a) F`. At `d = n` the
//! generators `y^n, x^n` die; at `d = n + 1` so do `x y^n, x^n y`, leaving
//! the square block `B_(n-2)`.

use std::fmt;

use crate::arith::{tau, Field, Monomial, MultiPoly, Var};
use crate::error::{Error, Result};
use crate::factor::{factor_tau, GrowthReport};
use crate::matrices::{build_b, build_m, det, DetMethod, PolyMatrix};
use crate::presentation::Presentation;

/// `s x^3 y - (t+s) x^2 y^2 + t x y^3`.
pub fn quartic(field: Field) -> MultiPoly {
    use Var::*;
    MultiPoly::from_terms(
        field,
        [
            (1, Monomial::from_pairs(&[(S, 1), (X, 3), (Y, 1)])),
            (-1, Monomial::from_pairs(&[(T, 1), (X, 2), (Y, 2)])),
            (-1, Monomial::from_pairs(&[(S, 1), (X, 2), (Y, 2)])),
            (1, Monomial::from_pairs(&[(T, 1), (X, 1), (Y, 3)])),
        ],
    )
}

/// `x * y * (x - y) * (s x - t y)`, multiplied out.
pub fn quartic_product_form(field: Field) -> MultiPoly {
    let v = |v| MultiPoly::var(field, v);
    let (x, y, s, t) = (v(Var::X), v(Var::Y), v(Var::S), v(Var::T));
    &(&(&x * &y) * &(&x - &y)) * &(&(&s * &x) - &(&t * &y))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ComponentCase {
    Below,
    AtN,
    AtNPlus1,
}

impl fmt::Display for ComponentCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ComponentCase::Below => "below",
            ComponentCase::AtN => "at_n",
            ComponentCase::AtNPlus1 => "at_n_plus_1",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobeniusComponent {
    pub n: u32,
    pub d: u32,
    pub case: ComponentCase,
    pub presentation: Presentation<Monomial>,
}

fn xy(a: u32, b: u32) -> Monomial {
    Monomial::from_pairs(&[(Var::X, a), (Var::Y, b)])
}

/// Degree-`d` piece of `k[x,y,s,t]/(F)` before any power of `x, y` is killed.
fn full_degree_piece(d: u32, field: Field) -> Result<Presentation<Monomial>> {
    let f = quartic(field);
    let generators: Vec<Monomial> = (0..=d).map(|a| xy(a, d - a)).collect();
    let mut m = PolyMatrix::zeros(field, generators.len(), d as usize - 3);
    let mut labels = Vec::new();
    for a in 0..=d - 4 {
        let multiplier = xy(a, d - 4 - a);
        for (mono, coeff) in f.mul_monomial(&multiplier).split_by(&[Var::X, Var::Y]) {
            let row = mono.exp(Var::X) as usize;
            m.set(row, a as usize, coeff);
        }
        labels.push(if multiplier.is_one() {
            "F".to_string()
        } else {
            format!("{multiplier}*F")
        });
    }
    if m != build_m(d, field)? {
        return Err(Error::CertificateFailed(format!("degree {d} relations differ from M_{d}")));
    }
    Presentation::new(generators, labels, m)
}

/// `T_d` for `n > 5` and `4 < d <= n + 1`.
pub fn component_t(n: u32, d: u32, field: Field) -> Result<FrobeniusComponent> {
    if n <= 5 {
        return Err(Error::OutOfRange {
            what: "n",
            value: n as i64,
            bound: ">= 6",
        });
    }
    if d <= 4 || d > n + 1 {
        return Err(Error::OutOfRange {
            what: "d",
            value: d as i64,
            bound: "in 5..=n+1",
        });
    }
    let full = full_degree_piece(d, field)?;
    let last = d as usize;
    let (case, presentation, shape) = if d < n {
        (ComponentCase::Below, full, (d + 1, d - 3))
    } else if d == n {
        (ComponentCase::AtN, full.delete_generators(&[0, last]), (n - 1, n - 3))
    } else {
        let p = full.delete_generators(&[0, 1, last - 1, last]);
        if p.relations() != &build_b(n - 2, field)? {
            return Err(Error::CertificateFailed(format!(
                "degree {d} block differs from B_{}",
                n - 2
            )));
        }
        (ComponentCase::AtNPlus1, p, (n - 2, n - 2))
    };
    let m = presentation.relations();
    if (m.rows(), m.cols()) != (shape.0 as usize, shape.1 as usize) {
        return Err(Error::Dimension(format!(
            "T_{d} for n = {n}: {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    Ok(FrobeniusComponent {
        n,
        d,
        case,
        presentation,
    })
}

/// The square component `T_(n+1)` for each `n`, its determinant (checked to
/// be `tau_(n-2)`), and the growth of distinct prime witnesses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobeniusGrowth {
    pub n_values: Vec<u32>,
    pub components: Vec<FrobeniusComponent>,
    pub determinants: Vec<MultiPoly>,
    /// Indexed by `n - 2`.
    pub growth: GrowthReport,
}

pub fn theorem2_growth(n_values: &[u32], field: Field, seed: Option<u64>) -> Result<FrobeniusGrowth> {
    let mut components = Vec::new();
    let mut determinants = Vec::new();
    let mut reports = Vec::new();
    for &n in n_values {
        let comp = component_t(n, n + 1, field)?;
        let d = det(comp.presentation.relations(), DetMethod::Bareiss)?;
        if d != tau(n - 2, field)? {
            return Err(Error::CertificateFailed(format!("det of T_{} != tau_{}", n + 1, n - 2)));
        }
        reports.push(factor_tau(n - 2, field, seed)?);
        components.push(comp);
        determinants.push(d);
    }
    let indices = n_values.iter().map(|n| n - 2).collect();
    Ok(FrobeniusGrowth {
        n_values: n_values.to_vec(),
        components,
        determinants,
        growth: GrowthReport::from_reports(indices, reports),
    })
}

/// Whether `n` is a power `p^e`, `e >= 1`.
pub fn is_power_of(n: u32, p: u64) -> bool {
    let mut q = p;
    while q < n as u64 {
        q *= p;
    }
    q == n as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rationals;

    #[test]
    fn quartic_forms_agree() {
        assert_eq!(quartic(Q), quartic_product_form(Q));
        let f2 = Field::PrimeField(2);
        assert_eq!(quartic(f2), quartic_product_form(f2));
        assert_eq!(
            quartic(f2),
            MultiPoly::parse("s*x^3*y+t*x^2*y^2+s*x^2*y^2+t*x*y^3", f2).unwrap()
        );
    }

    #[test]
    fn below_case() {
        let c = component_t(8, 6, Q).unwrap();
        assert_eq!(c.case, ComponentCase::Below);
        assert_eq!(c.presentation.relations(), &build_m(6, Q).unwrap());
        let gens: Vec<String> = c.presentation.generators().iter().map(ToString::to_string).collect();
        assert_eq!(gens, ["y^6", "x*y^5", "x^2*y^4", "x^3*y^3", "x^4*y^2", "x^5*y", "x^6"]);
        assert_eq!(c.presentation.relation_labels(), ["y^2*F", "x*y*F", "x^2*F"]);
    }

    #[test]
    fn at_n_case() {
        let c = component_t(8, 8, Q).unwrap();
        assert_eq!(c.case, ComponentCase::AtN);
        let m = c.presentation.relations();
        assert_eq!((m.rows(), m.cols()), (7, 5));
        assert_eq!(m, &build_m(8, Q).unwrap().delete_rows(&[0, 8]));
    }

    #[test]
    fn at_n_plus_1_case() {
        let c = component_t(8, 9, Q).unwrap();
        assert_eq!(c.case, ComponentCase::AtNPlus1);
        assert_eq!(c.presentation.relations(), &build_b(6, Q).unwrap());
    }

    #[test]
    fn rejected_degrees() {
        assert!(component_t(5, 5, Q).is_err());
        assert!(component_t(8, 4, Q).is_err());
        assert!(component_t(8, 10, Q).is_err());
    }

    #[test]
    fn growth_examples() {
        let g = theorem2_growth(&[6, 8, 10], Q, None).unwrap();
        assert_eq!(g.growth.cumulative_distinct, [1, 2, 4]);
        let g = theorem2_growth(&[9, 27], Field::PrimeField(3), Some(3)).unwrap();
        assert!(g.growth.strictly_increasing());
        assert_eq!(g.growth.index_set, [7, 25]);
        let g = theorem2_growth(&[6], Q, None).unwrap();
        assert_eq!(g.growth.cumulative_distinct, [g.growth.per_index[0].factors().len()]);
        assert!(theorem2_growth(&[5], Q, None).is_err());
    }

    #[test]
    fn powers() {
        assert!(is_power_of(9, 3) && is_power_of(27, 3) && is_power_of(3, 3));
        assert!(!is_power_of(6, 3) && !is_power_of(1, 3));
    }
}
