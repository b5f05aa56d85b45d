//! Dense row-major matrices over the reals or the complex numbers.
//!
//! A single storage type carries both fields: entries are `Complex64` and a
//! [`Field`] tag records whether the matrix is real. Real-closed operations
//! (products, sums, transposition) keep the imaginary parts exactly zero, so
//! a real-tagged matrix stays real bit-for-bit. All reductions (sums, norms)
//! run left-to-right in index order, which makes every derived quantity
//! deterministic for a fixed input.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Scalar field tag.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Field {
    Real,
    Complex,
}

impl Field {
    /// Field of the result of an arithmetic operation between two matrices.
    pub fn join(self, other: Field) -> Field {
        if self == Field::Real && other == Field::Real {
            Field::Real
        } else {
            Field::Complex
        }
    }
}

/// Dense rectangular matrix, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    field: Field,
    data: Vec<Complex64>,
}

pub(crate) fn cabs(z: Complex64) -> f64 {
    libm::hypot(z.re, z.im)
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize, field: Field) -> Matrix {
        Matrix { rows, cols, field, data: vec![Complex64::new(0.0, 0.0); rows * cols] }
    }

    pub fn identity(n: usize, field: Field) -> Matrix {
        let mut m = Matrix::zeros(n, n, field);
        for i in 0..n {
            m.set(i, i, Complex64::new(1.0, 0.0));
        }
        m
    }

    /// Builds a matrix from complex entries in row-major order.
    pub fn from_entries(rows: usize, cols: usize, field: Field, data: Vec<Complex64>) -> Result<Matrix> {
        if data.len() != rows * cols {
            return Err(Error::Shape(alloc::format!(
                "expected {} entries for a {rows}x{cols} matrix, got {}",
                rows * cols,
                data.len()
            )));
        }
        let m = Matrix { rows, cols, field, data };
        m.check_finite()?;
        if field == Field::Real && m.data.iter().any(|z| z.im != 0.0) {
            return Err(Error::Invalid(alloc::string::String::from(
                "real-tagged matrix has nonzero imaginary parts",
            )));
        }
        Ok(m)
    }

    /// Builds a real matrix from rows of `f64`.
    pub fn from_real_rows(rows: &[Vec<f64>]) -> Result<Matrix> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(Error::Shape(alloc::format!(
                    "ragged rows: expected {c} entries, got {}",
                    row.len()
                )));
            }
            for &x in row {
                data.push(Complex64::new(x, 0.0));
            }
        }
        Matrix::from_entries(r, c, Field::Real, data)
    }

    /// Builds a complex matrix from rows of `(re, im)` pairs.
    pub fn from_complex_rows(rows: &[Vec<(f64, f64)>]) -> Result<Matrix> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(Error::Shape(alloc::format!(
                    "ragged rows: expected {c} entries, got {}",
                    row.len()
                )));
            }
            for &(re, im) in row {
                data.push(Complex64::new(re, im));
            }
        }
        Matrix::from_entries(r, c, Field::Complex, data)
    }

    /// Column vector from real entries.
    pub fn col_from_real(entries: &[f64]) -> Matrix {
        let data = entries.iter().map(|&x| Complex64::new(x, 0.0)).collect();
        Matrix { rows: entries.len(), cols: 1, field: Field::Real, data }
    }

    /// Column vector from complex entries.
    pub fn col_from_complex(entries: &[Complex64]) -> Matrix {
        let field = if entries.iter().all(|z| z.im == 0.0) { Field::Real } else { Field::Complex };
        Matrix { rows: entries.len(), cols: 1, field, data: entries.to_vec() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.data
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        debug_assert!(i < self.rows && j < self.cols);
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: Complex64) {
        debug_assert!(i < self.rows && j < self.cols);
        self.data[i * self.cols + j] = value;
        if value.im != 0.0 {
            self.field = Field::Complex;
        }
    }

    pub fn check_finite(&self) -> Result<()> {
        if self.data.iter().all(|z| z.re.is_finite() && z.im.is_finite()) {
            Ok(())
        } else {
            Err(Error::NonFinite)
        }
    }

    /// Transpose without conjugation.
    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zeros(self.cols, self.rows, self.field);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.data[j * self.rows + i] = self.get(i, j);
            }
        }
        out
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Matrix {
        let mut out = Matrix::zeros(self.cols, self.rows, self.field);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.data[j * self.rows + i] = self.get(i, j).conj();
            }
        }
        out
    }

    pub fn scale(&self, factor: Complex64) -> Matrix {
        let field = if factor.im == 0.0 { self.field } else { Field::Complex };
        let data = self.data.iter().map(|&z| z * factor).collect();
        Matrix { rows: self.rows, cols: self.cols, field, data }
    }

    pub fn scale_real(&self, factor: f64) -> Matrix {
        self.scale(Complex64::new(factor, 0.0))
    }

    pub fn matmul(&self, other: &Matrix) -> Matrix {
        assert_eq!(
            self.cols, other.rows,
            "matmul: inner dimensions {}x{} vs {}x{}",
            self.rows, self.cols, other.rows, other.cols
        );
        let mut out = Matrix::zeros(self.rows, other.cols, self.field.join(other.field));
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.re == 0.0 && a.im == 0.0 {
                    continue;
                }
                for j in 0..other.cols {
                    out.data[i * other.cols + j] += a * other.get(k, j);
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "add: shape mismatch");
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| a + b).collect();
        Matrix {
            rows: self.rows,
            cols: self.cols,
            field: self.field.join(other.field),
            data,
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "sub: shape mismatch");
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| a - b).collect();
        Matrix {
            rows: self.rows,
            cols: self.cols,
            field: self.field.join(other.field),
            data,
        }
    }

    /// Frobenius norm, summed in index order.
    pub fn frobenius(&self) -> f64 {
        let mut acc = 0.0;
        for z in &self.data {
            acc += z.re * z.re + z.im * z.im;
        }
        libm::sqrt(acc)
    }

    /// Largest entry modulus.
    pub fn max_abs(&self) -> f64 {
        let mut best = 0.0;
        for &z in &self.data {
            let a = cabs(z);
            if a > best {
                best = a;
            }
        }
        best
    }

    /// Euclidean inner product `<self, other> = other^H self` for column
    /// vectors, conjugate-linear in `other`.
    pub fn dot(&self, other: &Matrix) -> Complex64 {
        assert_eq!(self.cols, 1, "dot expects column vectors");
        assert_eq!(other.cols, 1, "dot expects column vectors");
        assert_eq!(self.rows, other.rows, "dot: length mismatch");
        let mut acc = Complex64::new(0.0, 0.0);
        for i in 0..self.rows {
            acc += other.data[i].conj() * self.data[i];
        }
        acc
    }

    /// Returns the `j`-th column as a column vector.
    pub fn column(&self, j: usize) -> Matrix {
        let mut out = Matrix::zeros(self.rows, 1, self.field);
        for i in 0..self.rows {
            out.data[i] = self.get(i, j);
        }
        out
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hcat(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows, "hcat: row mismatch");
        let mut out = Matrix::zeros(self.rows, self.cols + other.cols, self.field.join(other.field));
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.data[i * out.cols + j] = self.get(i, j);
            }
            for j in 0..other.cols {
                out.data[i * out.cols + self.cols + j] = other.get(i, j);
            }
        }
        out
    }

    /// Vertical concatenation.
    pub fn vcat(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols, "vcat: column mismatch");
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Matrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            field: self.field.join(other.field),
            data,
        }
    }

    /// Copies a rectangular block `[r0..r0+h) x [c0..c0+w)`.
    pub fn block(&self, r0: usize, c0: usize, h: usize, w: usize) -> Matrix {
        assert!(r0 + h <= self.rows && c0 + w <= self.cols, "block out of range");
        let mut out = Matrix::zeros(h, w, self.field);
        for i in 0..h {
            for j in 0..w {
                out.data[i * w + j] = self.get(r0 + i, c0 + j);
            }
        }
        out
    }

    /// Row-major vectorisation as an `rc x 1` column.
    pub fn vectorize(&self) -> Matrix {
        Matrix { rows: self.rows * self.cols, cols: 1, field: self.field, data: self.data.clone() }
    }

    /// Inverse of [`Matrix::vectorize`] for the given shape.
    pub fn from_vectorized(v: &Matrix, rows: usize, cols: usize) -> Matrix {
        assert_eq!(v.cols, 1, "from_vectorized expects a column");
        assert_eq!(v.rows, rows * cols, "from_vectorized: length mismatch");
        Matrix { rows, cols, field: v.field, data: v.data.clone() }
    }

    /// Kronecker product, row-major block layout.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        let mut out = Matrix::zeros(
            self.rows * other.rows,
            self.cols * other.cols,
            self.field.join(other.field),
        );
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                for p in 0..other.rows {
                    for q in 0..other.cols {
                        out.set(i * other.rows + p, j * other.cols + q, a * other.get(p, q));
                    }
                }
            }
        }
        out
    }

    /// Recomputes the field tag: demotes to `Real` when every imaginary part
    /// is exactly zero.
    pub fn retag(mut self) -> Matrix {
        if self.data.iter().all(|z| z.im == 0.0) {
            self.field = Field::Real;
        } else {
            self.field = Field::Complex;
        }
        self
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        Matrix::add(self, rhs)
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        Matrix::sub(self, rhs)
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        self.matmul(rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn real_products_stay_real() {
        let a = Matrix::from_real_rows(&[vec![1.0, 2.0], vec![3.0, 4.0]]).unwrap();
        let b = Matrix::from_real_rows(&[vec![0.0, 1.0], vec![1.0, 0.0]]).unwrap();
        let p = &a * &b;
        assert_eq!(p.field(), Field::Real);
        assert!(p.entries().iter().all(|z| z.im == 0.0));
    }

    #[test]
    fn adjoint_conjugates() {
        let m = Matrix::from_entries(1, 2, Field::Complex, vec![c(1.0, 2.0), c(0.0, -1.0)]).unwrap();
        let a = m.adjoint();
        assert_eq!(a.get(0, 0), c(1.0, -2.0));
        assert_eq!(a.get(1, 0), c(0.0, 1.0));
    }

    #[test]
    fn ragged_rows_rejected() {
        let err = Matrix::from_real_rows(&[vec![1.0, 2.0], vec![3.0]]).unwrap_err();
        assert!(matches!(err, Error::Shape(_)));
    }

    #[test]
    fn kron_matches_hand_computation() {
        let a = Matrix::from_real_rows(&[vec![1.0, 2.0]]).unwrap();
        let b = Matrix::from_real_rows(&[vec![3.0], vec![4.0]]).unwrap();
        let k = a.kron(&b);
        assert_eq!(k.rows(), 2);
        assert_eq!(k.cols(), 2);
        assert_eq!(k.get(0, 0).re, 3.0);
        assert_eq!(k.get(1, 0).re, 4.0);
        assert_eq!(k.get(0, 1).re, 6.0);
        assert_eq!(k.get(1, 1).re, 8.0);
    }

    #[test]
    fn vectorize_row_major_round_trip() {
        let a = Matrix::from_real_rows(&[vec![1.0, 2.0], vec![3.0, 4.0]]).unwrap();
        let v = a.vectorize();
        assert_eq!(v.get(1, 0).re, 2.0);
        let back = Matrix::from_vectorized(&v, 2, 2);
        assert_eq!(back, a);
    }
}
