use std::fmt;

use serde::Serialize;

use crate::arith::{Field, Monomial, MultiPoly, Var};
use crate::error::{Error, Result};
use crate::matrices::{build_a, build_b, PolyMatrix};
use crate::presentation::Presentation;

/// Bidegree on `R_0^n` with `deg x = (1,0)`, `deg y = (1,1)`,
/// `deg s = deg t = (0,0)` and `deg e_j = (0, j)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Bidegree {
    pub total: u32,
    pub weight: u32,
}

impl fmt::Display for Bidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.total, self.weight)
    }
}

/// Bidegree of `x^alpha y^beta s^a t^b e_j`, `j >= 1`.
pub fn bidegree(term: &Monomial, j: usize) -> Result<Bidegree> {
    if j < 1 {
        return Err(Error::OutOfRange {
            what: "basis index",
            value: 0,
            bound: ">= 1",
        });
    }
    if !term.uses_only(&[Var::X, Var::Y, Var::S, Var::T]) {
        return Err(Error::UnexpectedVariable {
            allowed: "{x,y,s,t}".into(),
        });
    }
    let (alpha, beta) = (term.exp(Var::X), term.exp(Var::Y));
    Ok(Bidegree {
        total: alpha + beta,
        weight: beta + j as u32,
    })
}

/// The common bidegree of every term of column `col` (0-based), or `None`
/// if the column is zero or not bihomogeneous.
pub fn column_bidegree(m: &PolyMatrix, col: usize) -> Result<Option<Bidegree>> {
    let mut found = None;
    for i in 0..m.rows() {
        for (mono, _) in m.get(i, col).terms() {
            let b = bidegree(mono, i + 1)?;
            match found {
                None => found = Some(b),
                Some(prev) if prev != b => return Ok(None),
                _ => {}
            }
        }
    }
    Ok(found)
}

/// Generator `x^alpha y^beta e_j` of a bigraded component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BigradedGenerator {
    pub monomial: Monomial,
    /// 1-based.
    pub basis_index: usize,
    pub bidegree: Bidegree,
}

impl fmt::Display for BigradedGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}*e_{}", self.monomial, self.basis_index)
    }
}

fn xy(alpha: u32, beta: u32) -> Monomial {
    Monomial::from_pairs(&[(Var::X, alpha), (Var::Y, beta)])
}

fn require_d(d: u32) -> Result<()> {
    if d < 2 {
        return Err(Error::OutOfRange {
            what: "d",
            value: d as i64,
            bound: ">= 2",
        });
    }
    Ok(())
}

/// The bidegree `(d,d)` piece of `Coker A_(d-1)` as a `k[s,t]`-module.
///
/// Generators are the `x^alpha y^beta e_j` of bidegree `(d,d)`; relations
/// are the multiples `x^a y^b c_j` of the columns of `A_(d-1)` landing in
/// that bidegree, rewritten on the generators with `x, y` stripped. The
/// relation matrix is checked against `B_(d-1)`.
pub fn component_dd(d: u32, field: Field) -> Result<Presentation<BigradedGenerator>> {
    require_d(d)?;
    let target = Bidegree { total: d, weight: d };
    let a = build_a(d - 1, field)?;

    // Bidegree (alpha+beta, beta+j) = (d,d) forces beta = d-j, alpha = j.
    let generators: Vec<BigradedGenerator> = (1..d)
        .map(|j| {
            let monomial = xy(j, d - j);
            let bidegree = bidegree(&monomial, j as usize)?;
            Ok(BigradedGenerator {
                monomial,
                basis_index: j as usize,
                bidegree,
            })
        })
        .collect::<Result<_>>()?;
    debug_assert!(generators.iter().all(|g| g.bidegree == target));

    let mut columns = Vec::new();
    let mut labels = Vec::new();
    for col in 0..a.cols() {
        let Some(cb) = column_bidegree(&a, col)? else {
            return Err(Error::CertificateFailed(format!("column {} is not bihomogeneous", col + 1)));
        };
        // x^a y^b shifts the bidegree by (a+b, b).
        let Some(b) = target.weight.checked_sub(cb.weight) else { continue };
        let Some(a_exp) = (target.total - cb.total).checked_sub(b) else { continue };
        let multiplier = xy(a_exp, b);
        let mut rel = vec![MultiPoly::zero(field); generators.len()];
        for row in 0..a.rows() {
            let scaled = a.get(row, col).mul_monomial(&multiplier);
            for (mono, coeff) in scaled.split_by(&[Var::X, Var::Y]) {
                let g = generators
                    .iter()
                    .position(|g| g.monomial == mono && g.basis_index == row + 1)
                    .ok_or_else(|| {
                        Error::CertificateFailed(format!("{mono}*e_{} is not a generator", row + 1))
                    })?;
                rel[g] = &rel[g] + &coeff;
            }
        }
        labels.push(if multiplier.is_one() {
            format!("c_{}", col + 1)
        } else {
            format!("{multiplier}*c_{}", col + 1)
        });
        columns.push(rel);
    }

    let mut relations = PolyMatrix::zeros(field, generators.len(), columns.len());
    for (j, col) in columns.into_iter().enumerate() {
        for (i, e) in col.into_iter().enumerate() {
            relations.set(i, j, e);
        }
    }
    if relations != build_b(d - 1, field)? {
        return Err(Error::CertificateFailed(format!(
            "bidegree ({d},{d}) relations differ from B_{}",
            d - 1
        )));
    }
    Presentation::new(generators, labels, relations)
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rationals;

    #[test]
    fn bidegree_examples() {
        let sx2 = Monomial::from_pairs(&[(Var::S, 1), (Var::X, 2)]);
        assert_eq!(bidegree(&sx2, 1).unwrap(), Bidegree { total: 2, weight: 1 });
        let d = 7;
        assert_eq!(bidegree(&xy(1, d - 1), 1).unwrap(), Bidegree { total: d, weight: d });
        let st = Monomial::from_pairs(&[(Var::S, 3), (Var::T, 5)]);
        assert_eq!(bidegree(&st, 4).unwrap(), Bidegree { total: 0, weight: 4 });
        assert!(bidegree(&st, 0).is_err());
        assert!(bidegree(&Monomial::var(Var::U), 1).is_err());
    }

    #[test]
    fn columns_of_a_are_bihomogeneous() {
        let a = build_a(4, Q).unwrap();
        let got: Vec<_> = (0..a.cols())
            .map(|j| column_bidegree(&a, j).unwrap().unwrap())
            .collect();
        let want: Vec<_> = (1..=6).map(|w| Bidegree { total: 2, weight: w }).collect();
        assert_eq!(got, want);
    }

    #[test]
    fn small_components() {
        let c2 = component_dd(2, Q).unwrap();
        assert_eq!(c2.relations().to_strings(), [["-t-s"]]);
        assert_eq!(c2.generators()[0].to_string(), "x*y*e_1");
        assert_eq!(c2.relation_labels(), ["c_2"]);
        let c3 = component_dd(3, Q).unwrap();
        assert_eq!(c3.relations(), &build_b(2, Q).unwrap());
        assert_eq!(c3.relation_labels(), ["y*c_2", "x*c_3"]);
        assert_eq!(component_dd(9, Q).unwrap().generators().len(), 8);
        assert!(component_dd(1, Q).is_err());
    }
}
