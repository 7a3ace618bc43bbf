use std::fmt;

use crate::arith::{Field, MultiPoly, Scalar, Var};
use crate::error::{Error, Result};

/// Dense row-major matrix of polynomials over one field. Indices are 0-based
/// in the API; reports print them 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyMatrix {
    field: Field,
    rows: usize,
    cols: usize,
    entries: Vec<MultiPoly>,
}

impl PolyMatrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> PolyMatrix {
        PolyMatrix {
            field,
            rows,
            cols,
            entries: vec![MultiPoly::zero(field); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> PolyMatrix {
        let mut m = PolyMatrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, MultiPoly::one(field));
        }
        m
    }

    pub fn diagonal(field: Field, diag: Vec<MultiPoly>) -> Result<PolyMatrix> {
        let n = diag.len();
        let mut m = PolyMatrix::zeros(field, n, n);
        for (i, d) in diag.into_iter().enumerate() {
            check_field(field, &d)?;
            m.set(i, i, d);
        }
        Ok(m)
    }

    pub fn from_rows(field: Field, rows: Vec<Vec<MultiPoly>>) -> Result<PolyMatrix> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        let entries: Vec<MultiPoly> = rows.into_iter().flatten().collect();
        for e in &entries {
            check_field(field, e)?;
        }
        Ok(PolyMatrix {
            field,
            rows: r,
            cols: c,
            entries,
        })
    }

    /// Parses a grid of canonical polynomial strings.
    pub fn parse_rows(field: Field, rows: &[&[&str]]) -> Result<PolyMatrix> {
        let rows = rows
            .iter()
            .map(|row| row.iter().map(|s| MultiPoly::parse(s, field)).collect())
            .collect::<Result<Vec<Vec<_>>>>()?;
        PolyMatrix::from_rows(field, rows)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &MultiPoly {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: MultiPoly) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[MultiPoly] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<MultiPoly> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn entries(&self) -> impl Iterator<Item = &MultiPoly> {
        self.entries.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(MultiPoly::is_zero)
    }

    pub fn transpose(&self) -> PolyMatrix {
        let mut t = PolyMatrix::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn map(&self, f: impl Fn(&MultiPoly) -> MultiPoly) -> PolyMatrix {
        PolyMatrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn scale(&self, c: &MultiPoly) -> PolyMatrix {
        self.map(|e| e * c)
    }

    /// Entrywise substitution of scalars for variables.
    pub fn substitute(&self, values: &[(Var, Scalar)]) -> PolyMatrix {
        self.map(|e| e.substitute_all(values))
    }

    /// Keeps the listed rows and columns, in the given order.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> PolyMatrix {
        let mut m = PolyMatrix::zeros(self.field, rows.len(), cols.len());
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                m.set(a, b, self.get(i, j).clone());
            }
        }
        m
    }

    pub fn delete_rows(&self, drop: &[usize]) -> PolyMatrix {
        let rows: Vec<usize> = (0..self.rows).filter(|i| !drop.contains(i)).collect();
        let cols: Vec<usize> = (0..self.cols).collect();
        self.submatrix(&rows, &cols)
    }

    pub fn delete_cols(&self, drop: &[usize]) -> PolyMatrix {
        let rows: Vec<usize> = (0..self.rows).collect();
        let cols: Vec<usize> = (0..self.cols).filter(|j| !drop.contains(j)).collect();
        self.submatrix(&rows, &cols)
    }

    /// Removes row `i` and column `j`.
    pub fn minor(&self, i: usize, j: usize) -> PolyMatrix {
        self.delete_rows(&[i]).delete_cols(&[j])
    }

    pub fn mul(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        if self.field != other.field {
            return Err(Error::FieldMismatch {
                left: self.field,
                right: other.field,
            });
        }
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = PolyMatrix::zeros(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = MultiPoly::zero(self.field);
                for k in 0..self.cols {
                    let (a, b) = (self.get(i, k), other.get(k, j));
                    if !a.is_zero() && !b.is_zero() {
                        acc = &acc + &(a * b);
                    }
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[MultiPoly]) -> Result<Vec<MultiPoly>> {
        if v.len() != self.cols {
            return Err(Error::Dimension(format!(
                "{}x{} times vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        for e in v {
            check_field(self.field, e)?;
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(MultiPoly::zero(self.field), |acc, (a, b)| &acc + &(a * b))
            })
            .collect())
    }

    /// Row-major grid of canonical strings, the serialized form.
    pub fn to_strings(&self) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(ToString::to_string).collect())
            .collect()
    }
}

fn check_field(field: Field, p: &MultiPoly) -> Result<()> {
    if p.field() != field {
        return Err(Error::FieldMismatch {
            left: field,
            right: p.field(),
        });
    }
    Ok(())
}

/// Standard basis vector `e_j` (0-based `j`) of length `n`.
pub fn unit_vector(field: Field, n: usize, j: usize) -> Vec<MultiPoly> {
    (0..n)
        .map(|i| {
            if i == j {
                MultiPoly::one(field)
            } else {
                MultiPoly::zero(field)
            }
        })
        .collect()
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells = self.to_strings();
        let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
        for row in cells {
            write!(f, "[")?;
            for (j, c) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, "  ")?;
                }
                write!(f, "{c:>width$}")?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}
