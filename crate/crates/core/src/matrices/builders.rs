//! The tridiagonal families: the multiplication-by-`f` matrices, their
//! `x = y = 1` specialisations, the square blocks obtained by dropping the
//! outer columns, and the presentation matrices of the quartic's graded
//! components.

use super::PolyMatrix;
use crate::arith::{Field, Monomial, MultiPoly, Var};
use crate::error::{Error, Result};

fn out_of_range(what: &'static str, value: u32, bound: &'static str) -> Error {
    Error::OutOfRange {
        what,
        value: value as i64,
        bound,
    }
}

/// The three nonzero entries `(s x^2, -x y (t+s), t y^2)` of every row.
fn band(field: Field) -> [MultiPoly; 3] {
    use Var::*;
    [
        MultiPoly::from_terms(field, [(1, Monomial::from_pairs(&[(S, 1), (X, 2)]))]),
        MultiPoly::from_terms(
            field,
            [
                (-1, Monomial::from_pairs(&[(T, 1), (X, 1), (Y, 1)])),
                (-1, Monomial::from_pairs(&[(S, 1), (X, 1), (Y, 1)])),
            ],
        ),
        MultiPoly::from_terms(field, [(1, Monomial::from_pairs(&[(T, 1), (Y, 2)]))]),
    ]
}

/// `(d-1) x (d+1)` banded matrix, passed `d - 1 >= 1`. Row `i` carries
/// `s x^2, -x y (t+s), t y^2` in columns `i, i+1, i+2`.
pub fn build_a(dminus1: u32, field: Field) -> Result<PolyMatrix> {
    if dminus1 < 1 {
        return Err(out_of_range("d-1", dminus1, ">= 1"));
    }
    let rows = dminus1 as usize;
    let mut m = PolyMatrix::zeros(field, rows, rows + 2);
    let band = band(field);
    for i in 0..rows {
        for (k, entry) in band.iter().enumerate() {
            m.set(i, i + k, entry.clone());
        }
    }
    Ok(m)
}

/// [`build_a`] with `x = y = 1`.
pub fn build_abar(dminus1: u32, field: Field) -> Result<PolyMatrix> {
    let one = field.one();
    Ok(build_a(dminus1, field)?.substitute(&[(Var::X, one.clone()), (Var::Y, one)]))
}

/// The `i x i` block of [`build_abar`] between its first and last columns.
pub fn build_b(i: u32, field: Field) -> Result<PolyMatrix> {
    if i < 1 {
        return Err(out_of_range("block size", i, ">= 1"));
    }
    let abar = build_abar(i, field)?;
    Ok(abar.delete_cols(&[0, i as usize + 1]))
}

/// `(d+1) x (d-3)` presentation matrix for degree `d > 4`: column `j`
/// (1-based) has `t, -(t+s), s` in rows `j+1, j+2, j+3`.
pub fn build_m(d: u32, field: Field) -> Result<PolyMatrix> {
    if d <= 4 {
        return Err(out_of_range("d", d, "> 4"));
    }
    let (rows, cols) = (d as usize + 1, d as usize - 3);
    let t = MultiPoly::var(field, Var::T);
    let s = MultiPoly::var(field, Var::S);
    let mid = -(&t + &s);
    let mut m = PolyMatrix::zeros(field, rows, cols);
    for j in 0..cols {
        m.set(j + 1, j, t.clone());
        m.set(j + 2, j, mid.clone());
        m.set(j + 3, j, s.clone());
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rationals;

    #[test]
    fn a_for_d3() {
        let a = build_a(2, Q).unwrap();
        let expect = PolyMatrix::parse_rows(
            Q,
            &[
                &["s*x^2", "-t*x*y-s*x*y", "t*y^2", "0"],
                &["0", "s*x^2", "-t*x*y-s*x*y", "t*y^2"],
            ],
        )
        .unwrap();
        assert_eq!(a, expect);
        assert_eq!(build_a(1, Q).unwrap().cols(), 3);
        assert!(build_a(0, Q).is_err());
    }

    #[test]
    fn abar_rows() {
        let abar = build_abar(2, Q).unwrap();
        assert_eq!(abar.to_strings()[1], ["0", "s", "-t-s", "t"]);
        let one = Q.one();
        let sub = build_a(3, Q).unwrap().substitute(&[(Var::X, one.clone()), (Var::Y, one)]);
        assert_eq!(sub, build_abar(3, Q).unwrap());
    }

    #[test]
    fn b_blocks() {
        assert_eq!(build_b(1, Q).unwrap().to_strings(), [["-t-s"]]);
        let b2 = PolyMatrix::parse_rows(Q, &[&["-t-s", "t"], &["s", "-t-s"]]).unwrap();
        assert_eq!(build_b(2, Q).unwrap(), b2);
        let b3 = PolyMatrix::parse_rows(
            Q,
            &[&["-t-s", "t", "0"], &["s", "-t-s", "t"], &["0", "s", "-t-s"]],
        )
        .unwrap();
        assert_eq!(build_b(3, Q).unwrap(), b3);
        assert!(build_b(0, Q).is_err());
    }

    #[test]
    fn m_shape() {
        let m5 = build_m(5, Q).unwrap();
        assert_eq!((m5.rows(), m5.cols()), (6, 2));
        let col: Vec<String> = m5.column(0).iter().map(ToString::to_string).collect();
        assert_eq!(col, ["0", "t", "-t-s", "s", "0", "0"]);
        let m8 = build_m(8, Q).unwrap();
        assert!(m8.row(0).iter().all(MultiPoly::is_zero));
        assert!(m8.row(8).iter().all(MultiPoly::is_zero));
        assert!(build_m(4, Q).is_err());
    }

    #[test]
    fn m_row_deletion_gives_b() {
        for d in 5..12u32 {
            let m = build_m(d, Q).unwrap();
            let dd = d as usize;
            let cut = m.delete_rows(&[0, 1, dd - 1, dd]);
            assert_eq!(cut, build_b(d - 3, Q).unwrap(), "d = {d}");
        }
    }
}
