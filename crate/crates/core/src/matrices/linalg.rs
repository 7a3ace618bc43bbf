use super::PolyMatrix;
use crate::arith::MultiPoly;
use crate::error::{Error, Result};

/// Largest size the cofactor oracle accepts.
pub const COFACTOR_MAX: usize = 8;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum DetMethod {
    #[default]
    Bareiss,
    Cofactor,
}

fn require_square(m: &PolyMatrix) -> Result<usize> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    Ok(m.rows())
}

fn exact(num: &MultiPoly, den: &MultiPoly) -> Result<MultiPoly> {
    if den.is_one() || num.is_zero() {
        return Ok(num.clone());
    }
    num.exact_divide(den)?.ok_or(Error::InexactDivision)
}

/// `a*d - b*c`, skipping products with a zero factor.
fn cross(a: &MultiPoly, d: &MultiPoly, b: &MultiPoly, c: &MultiPoly) -> MultiPoly {
    let left = if a.is_zero() || d.is_zero() {
        MultiPoly::zero(a.field())
    } else {
        a * d
    };
    if b.is_zero() || c.is_zero() {
        left
    } else {
        &left - &(b * c)
    }
}

fn to_grid(m: &PolyMatrix) -> Vec<Vec<MultiPoly>> {
    (0..m.rows()).map(|i| m.row(i).to_vec()).collect()
}

pub fn det(m: &PolyMatrix, method: DetMethod) -> Result<MultiPoly> {
    match method {
        DetMethod::Bareiss => det_bareiss(m),
        DetMethod::Cofactor => det_cofactor(m),
    }
}

/// Fraction-free forward elimination of `[M | extra]`.
///
/// A row whose entry in the pivot column is already zero would only be
/// rescaled by `p_k / p_(k-1)`; such rows are left as stored and brought up
/// to date when they are next needed. `base[i]` is the step before which
/// stored row `i` is exact.
struct Elimination {
    rows: Vec<Vec<MultiPoly>>,
    base: Vec<usize>,
    pivots: Vec<MultiPoly>,
    negate: bool,
    singular: bool,
}

impl Elimination {
    fn run(m: &PolyMatrix, extra: &[Vec<MultiPoly>]) -> Result<Elimination> {
        let n = require_square(m)?;
        let mut rows = to_grid(m);
        for (row, ext) in rows.iter_mut().zip(extra) {
            row.extend(ext.iter().cloned());
        }
        let mut e = Elimination {
            rows,
            base: vec![0; n],
            pivots: Vec::with_capacity(n),
            negate: false,
            singular: false,
        };
        for k in 0..n {
            if e.rows[k][k].is_zero() {
                match (k + 1..n).find(|&r| !e.rows[r][k].is_zero()) {
                    Some(r) => {
                        e.rows.swap(k, r);
                        e.base.swap(k, r);
                        e.negate = !e.negate;
                    }
                    None => {
                        e.singular = true;
                        return Ok(e);
                    }
                }
            }
            e.refresh(k, k)?;
            for i in k + 1..n {
                if e.rows[i][k].is_zero() {
                    continue;
                }
                e.refresh(i, k)?;
                let prev = e.prev(k);
                let (top, rest) = e.rows.split_at_mut(i);
                let (pivot_row, row) = (&top[k], &mut rest[0]);
                for j in k + 1..row.len() {
                    let num = cross(&pivot_row[k], &row[j], &row[k], &pivot_row[j]);
                    row[j] = exact(&num, &prev)?;
                }
                row[k] = MultiPoly::zero(m.field());
                e.base[i] = k + 1;
            }
            e.pivots.push(e.rows[k][k].clone());
        }
        Ok(e)
    }

    /// `p_(k-1)`, with `p_(-1) = 1`.
    fn prev(&self, k: usize) -> MultiPoly {
        match k {
            0 => MultiPoly::one(self.rows[0][0].field()),
            _ => self.pivots[k - 1].clone(),
        }
    }

    /// Brings row `i` to its exact state before step `k`.
    fn refresh(&mut self, i: usize, k: usize) -> Result<()> {
        let b = self.base[i];
        if b >= k {
            return Ok(());
        }
        let (num, den) = (self.prev(k), self.prev(b));
        for j in k..self.rows[i].len() {
            if !self.rows[i][j].is_zero() {
                self.rows[i][j] = exact(&(&self.rows[i][j] * &num), &den)?;
            }
        }
        self.base[i] = k;
        Ok(())
    }

    /// Last pivot with the swap sign applied.
    fn det(&self) -> MultiPoly {
        match self.pivots.last() {
            _ if self.singular => MultiPoly::zero(self.rows[0][0].field()),
            None => unreachable!("empty elimination"),
            Some(p) if self.negate => -p,
            Some(p) => p.clone(),
        }
    }
}

/// Fraction-free elimination; every division by the previous pivot is exact
/// over an integral domain.
fn det_bareiss(m: &PolyMatrix) -> Result<MultiPoly> {
    if require_square(m)? == 0 {
        return Ok(MultiPoly::one(m.field()));
    }
    Ok(Elimination::run(m, &[])?.det())
}

/// `adj(M) * v` without forming the adjugate: eliminate `[M | v]`, then
/// back-substitute for `z = p_last * M^-1 v`, dividing exactly by each pivot.
pub fn adjugate_times(m: &PolyMatrix, v: &[MultiPoly]) -> Result<Vec<MultiPoly>> {
    let n = require_square(m)?;
    if v.len() != n {
        return Err(Error::Dimension(format!("{n}x{n} matrix times vector of length {}", v.len())));
    }
    let field = m.field();
    if n == 0 {
        return Ok(Vec::new());
    }
    let extra: Vec<Vec<MultiPoly>> = v.iter().map(|e| vec![e.clone()]).collect();
    let e = Elimination::run(m, &extra)?;
    if e.singular {
        return adjugate(m)?.mul_vec(v);
    }
    let delta = e.pivots[n - 1].clone();
    let mut z = vec![MultiPoly::zero(field); n];
    for i in (0..n).rev() {
        let row = &e.rows[i];
        let mut acc = &delta * &row[n];
        for j in i + 1..n {
            if !row[j].is_zero() && !z[j].is_zero() {
                acc = &acc - &(&row[j] * &z[j]);
            }
        }
        z[i] = exact(&acc, &e.pivots[i])?;
    }
    if e.negate {
        z = z.into_iter().map(|x| -x).collect();
    }
    Ok(z)
}

/// Laplace expansion along the first row. Factorial cost; oracle use only.
fn det_cofactor(m: &PolyMatrix) -> Result<MultiPoly> {
    let n = require_square(m)?;
    if n > COFACTOR_MAX {
        return Err(Error::CofactorTooLarge {
            size: n,
            max: COFACTOR_MAX,
        });
    }
    Ok(laplace(m))
}

fn laplace(m: &PolyMatrix) -> MultiPoly {
    let n = m.rows();
    match n {
        0 => MultiPoly::one(m.field()),
        1 => m.get(0, 0).clone(),
        _ => {
            let mut acc = MultiPoly::zero(m.field());
            for j in 0..n {
                let e = m.get(0, j);
                if e.is_zero() {
                    continue;
                }
                let term = e * &laplace(&m.minor(0, j));
                acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
            }
            acc
        }
    }
}

/// Classical adjoint, checked against `M * adj(M) = det(M) * I` before return.
pub fn adjugate(m: &PolyMatrix) -> Result<PolyMatrix> {
    let n = require_square(m)?;
    let d = det_bareiss(m)?;
    let adj = match gauss_jordan_adjugate(m, &d)? {
        Some(adj) => adj,
        None => cofactor_adjugate(m)?,
    };
    let expect = PolyMatrix::identity(m.field(), n).scale(&d);
    if m.mul(&adj)? != expect {
        return Err(Error::CertificateFailed("M * adj(M) != det(M) * I".into()));
    }
    Ok(adj)
}

/// Fraction-free Gauss-Jordan on `[M | I]`, ending at `[delta*I | X]` with
/// `X M = delta I` and `delta = +-det`. `None` when `M` is singular.
fn gauss_jordan_adjugate(m: &PolyMatrix, det: &MultiPoly) -> Result<Option<PolyMatrix>> {
    let n = m.rows();
    let field = m.field();
    if n == 0 || det.is_zero() {
        return Ok(None);
    }
    let mut a: Vec<Vec<MultiPoly>> = (0..n)
        .map(|i| {
            let mut row = m.row(i).to_vec();
            row.extend((0..n).map(|j| {
                if i == j {
                    MultiPoly::one(field)
                } else {
                    MultiPoly::zero(field)
                }
            }));
            row
        })
        .collect();
    let mut prev = MultiPoly::one(field);
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => a.swap(k, r),
                None => return Ok(None),
            }
        }
        for i in (0..n).filter(|&i| i != k) {
            for j in (0..2 * n).filter(|&j| j != k) {
                let num = cross(&a[k][k], &a[i][j], &a[i][k], &a[k][j]);
                a[i][j] = exact(&num, &prev)?;
            }
            a[i][k] = MultiPoly::zero(field);
        }
        prev = a[k][k].clone();
    }
    let rows = a.into_iter().map(|row| row[n..].to_vec()).collect();
    let x = PolyMatrix::from_rows(field, rows)?;
    if &prev == det {
        Ok(Some(x))
    } else if prev == -det {
        Ok(Some(x.map(|e| -e)))
    } else {
        Err(Error::CertificateFailed("Gauss-Jordan pivot is not +-det".into()))
    }
}

fn cofactor_adjugate(m: &PolyMatrix) -> Result<PolyMatrix> {
    let n = m.rows();
    let field = m.field();
    if n == 1 {
        return Ok(PolyMatrix::identity(field, 1));
    }
    let mut adj = PolyMatrix::zeros(field, n, n);
    for i in 0..n {
        for j in 0..n {
            let c = det_bareiss(&m.minor(i, j))?;
            adj.set(j, i, if (i + j) % 2 == 0 { c } else { -c });
        }
    }
    Ok(adj)
}

/// Outcome of asking whether `v` lies in the column span of a nonsingular
/// square matrix over the polynomial ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MembershipCertificate {
    /// `B * w = v`, checked when built.
    Solution(Vec<MultiPoly>),
    /// The Cramer quotient in this 0-based position is not a polynomial.
    NoSolution { index: usize },
}

impl MembershipCertificate {
    pub fn is_solution(&self) -> bool {
        matches!(self, MembershipCertificate::Solution(_))
    }
}

/// Decides `v ∈ im(B)` for square `B` with `det B != 0`.
///
/// Over the fraction field the unique solution is `adj(B) v / det(B)`; `B`
/// is injective, so a polynomial solution exists iff every entry divides.
pub fn solve_square(b: &PolyMatrix, v: &[MultiPoly]) -> Result<MembershipCertificate> {
    let n = require_square(b)?;
    if v.len() != n {
        return Err(Error::Dimension(format!("{n}x{n} system with rhs of length {}", v.len())));
    }
    let d = det_bareiss(b)?;
    if d.is_zero() {
        return Err(Error::Singular);
    }
    let numer = adjugate_times(b, v)?;
    let mut w = Vec::with_capacity(n);
    for (index, e) in numer.iter().enumerate() {
        match e.exact_divide(&d)? {
            Some(q) => w.push(q),
            None => return Ok(MembershipCertificate::NoSolution { index }),
        }
    }
    if b.mul_vec(&w)? != v {
        return Err(Error::CertificateFailed("B * w != v".into()));
    }
    Ok(MembershipCertificate::Solution(w))
}
