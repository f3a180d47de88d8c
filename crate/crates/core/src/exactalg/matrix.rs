use std::fmt;

use super::poly::Poly;
use super::ratfunc::RatFunc;
use super::rational::Rational;
use super::ExactAlgError;

/// The ring operations a matrix entry needs.
pub trait Ring: Clone + PartialEq + fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
}

impl Ring for Poly {
    fn zero() -> Self {
        Poly::zero()
    }
    fn one() -> Self {
        Poly::one()
    }
    fn is_zero(&self) -> bool {
        Poly::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
}

impl Ring for RatFunc {
    fn zero() -> Self {
        RatFunc::zero()
    }
    fn one() -> Self {
        RatFunc::one()
    }
    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
}

/// Dense row-major matrix over a ring.
#[derive(Clone, PartialEq)]
pub struct Matrix<R> {
    rows: usize,
    cols: usize,
    entries: Vec<R>,
}

pub type PolyMatrix = Matrix<Poly>;
pub type RatMatrix = Matrix<RatFunc>;

impl<R: Ring> Matrix<R> {
    pub fn new(rows: usize, cols: usize, entries: Vec<R>) -> Result<Self, ExactAlgError> {
        if rows == 0 || cols == 0 || entries.len() != rows * cols {
            return Err(ExactAlgError::Shape {
                rows,
                cols,
                len: entries.len(),
            });
        }
        Ok(Matrix { rows, cols, entries })
    }

    /// Panics on ragged or empty input; meant for literal matrices.
    pub fn from_rows(rows: Vec<Vec<R>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(r > 0 && c > 0 && rows.iter().all(|row| row.len() == c), "ragged matrix");
        Matrix {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn identity(n: usize) -> Self {
        let entries = (0..n * n)
            .map(|i| if i / n == i % n { R::one() } else { R::zero() })
            .collect();
        Matrix { rows: n, cols: n, entries }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            entries: vec![R::zero(); rows * cols],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[R] {
        &self.entries
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: R) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn column(&self, j: usize) -> Vec<R> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut entries = Vec::with_capacity(self.entries.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                entries.push(self.get(i, j).clone());
            }
        }
        Matrix {
            rows: self.cols,
            cols: self.rows,
            entries,
        }
    }

    pub fn map<S: Ring>(&self, f: impl FnMut(&R) -> S) -> Matrix<S> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn try_map<S: Ring, E>(&self, f: impl FnMut(&R) -> Result<S, E>) -> Result<Matrix<S>, E> {
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect::<Result<_, _>>()?,
        })
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self, ExactAlgError> {
        if self.cols != rhs.rows {
            return Err(ExactAlgError::DimensionMismatch {
                left: (self.rows, self.cols),
                right: (rhs.rows, rhs.cols),
            });
        }
        let mut entries = Vec::with_capacity(self.rows * rhs.cols);
        for i in 0..self.rows {
            for j in 0..rhs.cols {
                let mut acc = R::zero();
                for p in 0..self.cols {
                    let (x, y) = (self.get(i, p), rhs.get(p, j));
                    if !x.is_zero() && !y.is_zero() {
                        acc = acc.add(&x.mul(y));
                    }
                }
                entries.push(acc);
            }
        }
        Ok(Matrix {
            rows: self.rows,
            cols: rhs.cols,
            entries,
        })
    }

    pub fn add(&self, rhs: &Self) -> Result<Self, ExactAlgError> {
        if (self.rows, self.cols) != (rhs.rows, rhs.cols) {
            return Err(ExactAlgError::DimensionMismatch {
                left: (self.rows, self.cols),
                right: (rhs.rows, rhs.cols),
            });
        }
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(x, y)| x.add(y))
                .collect(),
        })
    }

    /// Multiplies every entry by `c` on the left.
    pub fn scale_by(&self, c: &R) -> Self {
        self.map(|x| c.mul(x))
    }

    /// Cofactor-expansion determinant for sizes 1 to 3.
    pub fn det(&self) -> Result<R, ExactAlgError> {
        if self.rows != self.cols {
            return Err(ExactAlgError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let m = |i, j| self.get(i, j);
        match self.rows {
            1 => Ok(m(0, 0).clone()),
            2 => Ok(m(0, 0).mul(m(1, 1)).sub(&m(0, 1).mul(m(1, 0)))),
            3 => {
                let minor = |a: usize, b: usize| {
                    m(1, a).mul(m(2, b)).sub(&m(1, b).mul(m(2, a)))
                };
                let mut acc = R::zero();
                for (j, (a, b), sign) in [(0, (1, 2), false), (1, (0, 2), true), (2, (0, 1), false)] {
                    if m(0, j).is_zero() {
                        continue;
                    }
                    let t = m(0, j).mul(&minor(a, b));
                    acc = if sign { acc.sub(&t) } else { acc.add(&t) };
                }
                Ok(acc)
            }
            n => Err(ExactAlgError::UnsupportedSize(n)),
        }
    }

    /// Adjugate of a 2×2 matrix.
    pub fn adjugate2(&self) -> Result<Self, ExactAlgError> {
        if (self.rows, self.cols) != (2, 2) {
            return Err(ExactAlgError::UnsupportedSize(self.rows.max(self.cols)));
        }
        Ok(Matrix::from_rows(vec![
            vec![self.get(1, 1).clone(), self.get(0, 1).neg()],
            vec![self.get(1, 0).neg(), self.get(0, 0).clone()],
        ]))
    }
}

impl PolyMatrix {
    pub fn to_rat(&self) -> RatMatrix {
        self.map(|p| RatFunc::from_poly(p.clone()))
    }

    pub fn inverse2(&self) -> Result<RatMatrix, ExactAlgError> {
        self.to_rat().inverse2()
    }

    /// Constant matrix from rational entries.
    pub fn constant(rows: Vec<Vec<Rational>>) -> Self {
        Matrix::from_rows(
            rows.into_iter()
                .map(|r| r.into_iter().map(Poly::constant).collect())
                .collect(),
        )
    }

    pub fn substitute(&self, images: &[Poly; 3]) -> Self {
        self.map(|p| p.substitute(images))
    }

    pub fn set_zero(&self, v: super::Var) -> Self {
        self.map(|p| p.set_zero(v))
    }
}

impl RatMatrix {
    /// Adjugate over determinant.
    pub fn inverse2(&self) -> Result<RatMatrix, ExactAlgError> {
        let det = self.det()?;
        if det.is_zero() {
            return Err(ExactAlgError::Singular);
        }
        let inv = det.recip()?;
        Ok(self.adjugate2()?.map(|x| x * &inv))
    }

    /// The polynomial matrix, if every entry is a polynomial.
    pub fn to_poly(&self) -> Option<PolyMatrix> {
        self.try_map(|x| x.to_poly().ok_or(())).ok()
    }
}

impl<R: fmt::Debug> fmt::Debug for Matrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut l = f.debug_list();
        for row in self.entries.chunks(self.cols.max(1)) {
            l.entry(&row);
        }
        l.finish()
    }
}

impl<R: fmt::Display> fmt::Display for Matrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.entries.chunks(self.cols.max(1)).enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            for (j, x) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{x}")?;
            }
        }
        write!(f, "]")
    }
}
