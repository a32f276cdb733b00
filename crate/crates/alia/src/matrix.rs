//! Small dense matrices over the exact ground field. Shapes at this scale are
//! tiny (dimension <= ~24), so plain Gaussian elimination with exact field
//! division decides determinants, ranks, and inverses soundly.

use crate::error::{Error, Result};
use crate::scalar::{FieldSpec, Scalar};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mat {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>, // row-major
}

impl Mat {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Mat {
        Mat { field, rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Mat {
        let mut m = Mat::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    /// Builds a matrix from rows, validating rectangularity and that every
    /// entry lies in one ground field.
    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Mat> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut field = None;
        for row in &rows {
            if row.len() != c {
                return Err(Error::DimensionMismatch { expected: c, got: row.len() });
            }
            for s in row {
                match field {
                    None => field = Some(s.field_spec()),
                    Some(f) if f == s.field_spec() => {}
                    Some(f) => {
                        return Err(Error::FieldMismatch {
                            left: f.label(),
                            right: s.field_spec().label(),
                        })
                    }
                }
            }
        }
        let field = field.unwrap_or(FieldSpec::Rational);
        Ok(Mat { field, rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    pub fn from_fn(field: FieldSpec, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Mat {
        let mut m = Mat::zeros(field, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    pub fn field(&self) -> FieldSpec {
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

    pub fn at(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        debug_assert_eq!(v.field_spec(), self.field, "entry from a different field");
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn add(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "matrix shape mismatch");
        Mat {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "matrix shape mismatch");
        Mat {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn neg(&self) -> Mat {
        Mat {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| -a).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Mat {
        Mat {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * c).collect(),
        }
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows, "matrix shape mismatch");
        let mut out = Mat::zeros(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.at(i, j) + &(a * other.at(k, j));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len(), "matrix/vector shape mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = self.field.zero();
                for j in 0..self.cols {
                    acc += &(self.at(i, j) * &v[j]);
                }
                acc
            })
            .collect()
    }

    pub fn transpose(&self) -> Mat {
        Mat::from_fn(self.field, self.cols, self.rows, |i, j| self.at(j, i).clone())
    }

    pub fn pow(&self, e: u32) -> Mat {
        assert!(self.is_square(), "matrix power needs a square matrix");
        let mut acc = Mat::identity(self.field, self.rows);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Mat::identity(self.field, self.rows)
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self.at(i, j) == self.at(j, i)))
    }

    /// Exact determinant by fraction-producing Gaussian elimination.
    /// The 0x0 determinant is 1.
    pub fn det(&self) -> Scalar {
        assert!(self.is_square(), "determinant needs a square matrix");
        let n = self.rows;
        let mut work = self.clone();
        let mut det = self.field.one();
        for col in 0..n {
            let pivot = (col..n).find(|&r| !work.at(r, col).is_zero());
            let pivot = match pivot {
                Some(p) => p,
                None => return self.field.zero(),
            };
            if pivot != col {
                work.swap_rows(pivot, col);
                det = det.negated();
            }
            let p = work.at(col, col).clone();
            det = &det * &p;
            for r in col + 1..n {
                if work.at(r, col).is_zero() {
                    continue;
                }
                let factor = work.at(r, col).try_div(&p).expect("pivot is nonzero");
                for c in col..n {
                    let v = work.at(r, c) - &(&factor * work.at(col, c));
                    work.set(r, c, v);
                }
            }
        }
        det
    }

    pub fn rank(&self) -> usize {
        let mut work = self.clone();
        let mut rank = 0;
        for col in 0..self.cols {
            if rank == self.rows {
                break;
            }
            let pivot = (rank..self.rows).find(|&r| !work.at(r, col).is_zero());
            let pivot = match pivot {
                Some(p) => p,
                None => continue,
            };
            work.swap_rows(pivot, rank);
            let p = work.at(rank, col).clone();
            for r in rank + 1..self.rows {
                if work.at(r, col).is_zero() {
                    continue;
                }
                let factor = work.at(r, col).try_div(&p).expect("pivot is nonzero");
                for c in col..self.cols {
                    let v = work.at(r, c) - &(&factor * work.at(rank, c));
                    work.set(r, c, v);
                }
            }
            rank += 1;
        }
        rank
    }

    /// Exact inverse by Gauss-Jordan elimination.
    pub fn inverse(&self) -> Result<Mat> {
        assert!(self.is_square(), "inverse needs a square matrix");
        let n = self.rows;
        let mut work = self.clone();
        let mut inv = Mat::identity(self.field, n);
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !work.at(r, col).is_zero())
                .ok_or(Error::SingularMatrix)?;
            work.swap_rows(pivot, col);
            inv.swap_rows(pivot, col);
            let p = work.at(col, col).clone();
            let pinv = p.try_inv().expect("pivot is nonzero");
            for c in 0..n {
                let v = work.at(col, c) * &pinv;
                work.set(col, c, v);
                let v = inv.at(col, c) * &pinv;
                inv.set(col, c, v);
            }
            for r in 0..n {
                if r == col || work.at(r, col).is_zero() {
                    continue;
                }
                let factor = work.at(r, col).clone();
                for c in 0..n {
                    let v = work.at(r, c) - &(&factor * work.at(col, c));
                    work.set(r, c, v);
                    let v = inv.at(r, c) - &(&factor * inv.at(col, c));
                    inv.set(r, c, v);
                }
            }
        }
        Ok(inv)
    }

    /// Entries in row-major order.
    pub fn flatten(&self) -> Vec<Scalar> {
        self.data.clone()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }
}

/// The unit coordinate vector e_i of length n.
pub fn unit_vector(field: FieldSpec, n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![field.zero(); n];
    v[i] = field.one();
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::primitive_root;

    fn qmat(rows: &[&[i64]]) -> Mat {
        let f = FieldSpec::Rational;
        Mat::from_rows(rows.iter().map(|r| r.iter().map(|&v| f.from_i64(v)).collect()).collect())
            .unwrap()
    }

    #[test]
    fn det_and_inverse() {
        let m = qmat(&[&[1, 2], &[3, 4]]);
        assert_eq!(m.det(), FieldSpec::Rational.from_i64(-2));
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).is_identity());
    }

    #[test]
    fn singular_matrix_has_no_inverse() {
        let m = qmat(&[&[1, 2], &[2, 4]]);
        assert!(m.det().is_zero());
        assert_eq!(m.rank(), 1);
        assert!(matches!(m.inverse(), Err(Error::SingularMatrix)));
    }

    #[test]
    fn empty_matrix_determinant_is_one() {
        let m = Mat::zeros(FieldSpec::Rational, 0, 0);
        assert!(m.det().is_one());
        assert!(m.inverse().is_ok());
    }

    #[test]
    fn cyclotomic_inverse() {
        let field = FieldSpec::Cyclotomic { order: 4 };
        let z = primitive_root(4).unwrap();
        let mut m = Mat::identity(field, 2);
        m.set(0, 1, z.clone());
        m.set(1, 1, z);
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).is_identity());
    }

    #[test]
    fn rank_of_rank_one_update() {
        // rows are all multiples of (1, -1, 0)
        let m = qmat(&[&[1, -1, 0], &[2, -2, 0], &[-3, 3, 0]]);
        assert_eq!(m.rank(), 1);
    }
}
