//! Dense factorisations and exact induced norms.
//!
//! The kernel is deliberately small: one-sided Jacobi for singular values
//! (high relative accuracy, works unchanged for real and complex data),
//! two-sided Jacobi for Hermitian eigenproblems, and Gaussian elimination
//! with partial pivoting for solves. Pair sweeps run in fixed row-major
//! order, so every factorisation is deterministic for a fixed input.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matrix::{cabs, Field, Matrix};

/// Ambient norm choice: `l1`, `l2` (Euclidean / spectral) or `linf`.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum NormKind {
    L1,
    L2,
    LInf,
}

impl NormKind {
    pub fn as_str(self) -> &'static str {
        match self {
            NormKind::L1 => "l1",
            NormKind::L2 => "l2",
            NormKind::LInf => "linf",
        }
    }
}

impl core::fmt::Display for NormKind {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.as_str())
    }
}

const JACOBI_EPS: f64 = 1e-14;
const MAX_SWEEPS: usize = 100;

/// A 2x2 unitary `G = [[c, s], [-s*w, c*w]]` (columns convention) that
/// diagonalises the Hermitian matrix `[[alpha, gamma], [conj(gamma), beta]]`.
fn jacobi_rotation(alpha: f64, beta: f64, gamma: Complex64) -> (f64, f64, Complex64) {
    let g = cabs(gamma);
    // Phase that makes the off-diagonal entry real positive.
    let w = gamma.conj() / g;
    let tau = (beta - alpha) / (2.0 * g);
    let t = if tau >= 0.0 {
        1.0 / (tau + libm::sqrt(1.0 + tau * tau))
    } else {
        -1.0 / (-tau + libm::sqrt(1.0 + tau * tau))
    };
    let c = 1.0 / libm::sqrt(1.0 + t * t);
    (c, c * t, w)
}

/// Singular value decomposition `A = U diag(sigma) V^H`.
///
/// `u` is `m x n` (columns for vanishing singular values are zero), `v` is
/// the full `n x n` unitary right factor and `sigma` is sorted descending.
#[derive(Clone, Debug)]
pub struct Svd {
    pub u: Matrix,
    pub sigma: Vec<f64>,
    pub v: Matrix,
}

impl Svd {
    /// Number of singular values above `rtol * sigma_max`.
    pub fn rank(&self, rtol: f64) -> usize {
        let smax = self.sigma.first().copied().unwrap_or(0.0);
        self.sigma.iter().filter(|&&s| s > rtol * smax && s > 0.0).count()
    }
}

/// One-sided Jacobi SVD. Columns of a working copy are orthogonalised in
/// place; right rotations accumulate into `V`. Works for any shape,
/// including more columns than rows.
pub fn svd(a: &Matrix) -> Svd {
    let m = a.rows();
    let n = a.cols();
    let mut work = a.clone();
    let mut v = Matrix::identity(n, a.field());
    if n > 0 && m > 0 {
        for _ in 0..MAX_SWEEPS {
            let mut rotated = false;
            for p in 0..n {
                for q in (p + 1)..n {
                    let mut alpha = 0.0;
                    let mut beta = 0.0;
                    let mut gamma = Complex64::new(0.0, 0.0);
                    for i in 0..m {
                        let ap = work.get(i, p);
                        let aq = work.get(i, q);
                        alpha += ap.re * ap.re + ap.im * ap.im;
                        beta += aq.re * aq.re + aq.im * aq.im;
                        gamma += ap.conj() * aq;
                    }
                    if cabs(gamma) <= JACOBI_EPS * libm::sqrt(alpha * beta) {
                        continue;
                    }
                    let (c, s, w) = jacobi_rotation(alpha, beta, gamma);
                    rotate_columns(&mut work, p, q, c, s, w);
                    rotate_columns(&mut v, p, q, c, s, w);
                    rotated = true;
                }
            }
            if !rotated {
                break;
            }
        }
    }
    // Column norms are the singular values; sort descending, ties by index.
    let mut order: Vec<usize> = (0..n).collect();
    let norms: Vec<f64> = (0..n)
        .map(|j| {
            let mut acc = 0.0;
            for i in 0..m {
                let z = work.get(i, j);
                acc += z.re * z.re + z.im * z.im;
            }
            libm::sqrt(acc)
        })
        .collect();
    order.sort_by(|&x, &y| norms[y].partial_cmp(&norms[x]).unwrap().then(x.cmp(&y)));

    let mut u = Matrix::zeros(m, n, a.field());
    let mut vs = Matrix::zeros(n, n, a.field());
    let mut sigma = Vec::with_capacity(n);
    for (dst, &src) in order.iter().enumerate() {
        let s = norms[src];
        sigma.push(s);
        if s > 0.0 {
            for i in 0..m {
                u.set(i, dst, work.get(i, src) / s);
            }
        }
        for i in 0..n {
            vs.set(i, dst, v.get(i, src));
        }
    }
    Svd { u: u.retag(), sigma, v: vs.retag() }
}

fn rotate_columns(m: &mut Matrix, p: usize, q: usize, c: f64, s: f64, w: Complex64) {
    for i in 0..m.rows() {
        let xp = m.get(i, p);
        let xq = m.get(i, q);
        m.set(i, p, xp * c - xq * (w * s));
        m.set(i, q, xp * s + xq * (w * c));
    }
}

/// Hermitian eigendecomposition `A = V diag(values) V^H`, values ascending.
///
/// The input is symmetrised first; callers are expected to have checked the
/// Hermitian defect against their own tolerance.
#[derive(Clone, Debug)]
pub struct HermitianEigen {
    pub values: Vec<f64>,
    pub vectors: Matrix,
}

pub fn eig_hermitian(a: &Matrix) -> Result<HermitianEigen> {
    if !a.is_square() {
        return Err(Error::Shape(String::from("eigendecomposition requires a square matrix")));
    }
    let n = a.rows();
    // Exact symmetrisation so the working diagonal stays real.
    let mut work = a.add(&a.adjoint()).scale_real(0.5);
    let mut v = Matrix::identity(n, a.field());
    let scale = work.frobenius().max(1.0);
    for _ in 0..MAX_SWEEPS {
        let mut rotated = false;
        for p in 0..n {
            for q in (p + 1)..n {
                let gamma = work.get(p, q);
                if cabs(gamma) <= JACOBI_EPS * scale {
                    continue;
                }
                let alpha = work.get(p, p).re;
                let beta = work.get(q, q).re;
                let (c, s, w) = jacobi_rotation(alpha, beta, gamma);
                // A <- G^H A G, V <- V G.
                rotate_columns(&mut work, p, q, c, s, w);
                rotate_rows_adjoint(&mut work, p, q, c, s, w);
                rotate_columns(&mut v, p, q, c, s, w);
                rotated = true;
            }
        }
        if !rotated {
            break;
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    let diag: Vec<f64> = (0..n).map(|i| work.get(i, i).re).collect();
    order.sort_by(|&x, &y| diag[x].partial_cmp(&diag[y]).unwrap().then(x.cmp(&y)));
    let mut values = Vec::with_capacity(n);
    let mut vectors = Matrix::zeros(n, n, a.field());
    for (dst, &src) in order.iter().enumerate() {
        values.push(diag[src]);
        for i in 0..n {
            vectors.set(i, dst, v.get(i, src));
        }
    }
    Ok(HermitianEigen { values, vectors: vectors.retag() })
}

fn rotate_rows_adjoint(m: &mut Matrix, p: usize, q: usize, c: f64, s: f64, w: Complex64) {
    let wc = w.conj();
    for j in 0..m.cols() {
        let xp = m.get(p, j);
        let xq = m.get(q, j);
        m.set(p, j, xp * c - xq * (wc * s));
        m.set(q, j, xp * s + xq * (wc * c));
    }
}

/// Solves `A X = B` by Gaussian elimination with partial pivoting.
pub fn solve(a: &Matrix, b: &Matrix) -> Result<Matrix> {
    if !a.is_square() {
        return Err(Error::Shape(String::from("solve requires a square matrix")));
    }
    if a.rows() != b.rows() {
        return Err(Error::Shape(String::from("solve: right-hand side row mismatch")));
    }
    let n = a.rows();
    let k = b.cols();
    let mut aug = a.hcat(b);
    let scale = a.max_abs();
    for col in 0..n {
        let mut pivot_row = col;
        let mut pivot_val = cabs(aug.get(col, col));
        for r in (col + 1)..n {
            let v = cabs(aug.get(r, col));
            if v > pivot_val {
                pivot_val = v;
                pivot_row = r;
            }
        }
        if pivot_val <= 1e-13 * scale.max(1e-300) {
            return Err(Error::Singular(alloc::format!("pivot {pivot_val:.3e} at column {col}")));
        }
        if pivot_row != col {
            for j in 0..(n + k) {
                let tmp = aug.get(col, j);
                aug.set(col, j, aug.get(pivot_row, j));
                aug.set(pivot_row, j, tmp);
            }
        }
        let pivot = aug.get(col, col);
        for r in 0..n {
            if r == col {
                continue;
            }
            let factor = aug.get(r, col) / pivot;
            if factor.re == 0.0 && factor.im == 0.0 {
                continue;
            }
            for j in col..(n + k) {
                let v = aug.get(r, j) - factor * aug.get(col, j);
                aug.set(r, j, v);
            }
        }
    }
    let mut x = Matrix::zeros(n, k, aug.field());
    for i in 0..n {
        let d = aug.get(i, i);
        for j in 0..k {
            x.set(i, j, aug.get(i, n + j) / d);
        }
    }
    Ok(x.retag())
}

/// Matrix inverse via [`solve`].
pub fn inverse(a: &Matrix) -> Result<Matrix> {
    solve(a, &Matrix::identity(a.rows(), a.field()))
}

/// `sigma_max / sigma_min`; infinite when the matrix is rank deficient.
pub fn condition_number(a: &Matrix) -> f64 {
    let s = svd(a);
    let smax = s.sigma.first().copied().unwrap_or(0.0);
    let smin = s.sigma.last().copied().unwrap_or(0.0);
    if smin == 0.0 {
        f64::INFINITY
    } else {
        smax / smin
    }
}

/// Exact induced operator norm: max column sum for `l1`, max row sum for
/// `linf`, largest singular value for `l2`.
pub fn induced_norm(m: &Matrix, kind: NormKind) -> f64 {
    match kind {
        NormKind::L1 => {
            let mut best = 0.0;
            for j in 0..m.cols() {
                let mut sum = 0.0;
                for i in 0..m.rows() {
                    sum += cabs(m.get(i, j));
                }
                if sum > best {
                    best = sum;
                }
            }
            best
        }
        NormKind::LInf => {
            let mut best = 0.0;
            for i in 0..m.rows() {
                let mut sum = 0.0;
                for j in 0..m.cols() {
                    sum += cabs(m.get(i, j));
                }
                if sum > best {
                    best = sum;
                }
            }
            best
        }
        NormKind::L2 => svd(m).sigma.first().copied().unwrap_or(0.0),
    }
}

/// Vector norm of a column vector.
pub fn vector_norm(v: &Matrix, kind: NormKind) -> f64 {
    assert_eq!(v.cols(), 1, "vector_norm expects a column vector");
    match kind {
        NormKind::L1 => {
            let mut sum = 0.0;
            for i in 0..v.rows() {
                sum += cabs(v.get(i, 0));
            }
            sum
        }
        NormKind::L2 => v.frobenius(),
        NormKind::LInf => v.max_abs(),
    }
}

/// Polar decomposition `M = V P` with `P = (M^H M)^{1/2}` positive
/// semidefinite and `V` unitary (the unitary polar factor; on `ran(P)` it is
/// the canonical partial isometry, and it is completed deterministically on
/// the orthogonal complement).
pub fn polar_decompose(m: &Matrix) -> Result<(Matrix, Matrix)> {
    if !m.is_square() {
        return Err(Error::Shape(String::from("polar decomposition requires a square matrix")));
    }
    let n = m.rows();
    let dec = svd(m);
    // P = V diag(sigma) V^H.
    let mut sv = Matrix::zeros(n, n, dec.v.field());
    for j in 0..n {
        for i in 0..n {
            sv.set(i, j, dec.v.get(i, j) * Complex64::new(dec.sigma[j], 0.0));
        }
    }
    let p = sv.matmul(&dec.v.adjoint()).retag();
    let u_full = complete_unitary(&dec.u, &dec.sigma);
    let v_polar = u_full.matmul(&dec.v.adjoint()).retag();
    Ok((v_polar, p))
}

/// Replaces the zero columns of a left factor (those paired with vanishing
/// singular values) by a deterministic orthonormal completion.
fn complete_unitary(u: &Matrix, sigma: &[f64]) -> Matrix {
    let n = u.rows();
    let smax = sigma.first().copied().unwrap_or(0.0);
    let keep = sigma.iter().filter(|&&s| s > 1e-13 * smax.max(1e-300)).count();
    let mut cols: Vec<Matrix> = (0..keep).map(|j| u.column(j)).collect();
    let mut candidate = 0usize;
    while cols.len() < n && candidate < n {
        let mut e = Matrix::zeros(n, 1, u.field());
        e.set(candidate, 0, Complex64::new(1.0, 0.0));
        // Two Gram-Schmidt passes against the accepted columns.
        for _ in 0..2 {
            for q in &cols {
                let coeff = e.dot(q);
                e = e.sub(&q.scale(coeff));
            }
        }
        let norm = e.frobenius();
        if norm > 1e-6 {
            cols.push(e.scale_real(1.0 / norm));
        }
        candidate += 1;
    }
    let mut out = Matrix::zeros(n, n, u.field());
    for (j, col) in cols.iter().enumerate() {
        for i in 0..n {
            out.set(i, j, col.get(i, 0));
        }
    }
    out.retag()
}

/// Hermitian positive-semidefinite square root.
///
/// Fails when the input is not Hermitian within `1e-10` (relative to the
/// largest entry) or has an eigenvalue below the `-1e-10` floor; eigenvalues
/// in `[-1e-10, 0)` are clamped to zero.
pub fn psd_sqrt(b: &Matrix) -> Result<Matrix> {
    if !b.is_square() {
        return Err(Error::Shape(String::from("psd_sqrt requires a square matrix")));
    }
    let scale = 1.0 + b.max_abs();
    let defect = b.sub(&b.adjoint()).max_abs();
    if defect > 1e-10 * scale {
        return Err(Error::NotHermitian { defect });
    }
    let eig = eig_hermitian(b)?;
    let lam_max = eig.values.iter().fold(0.0f64, |acc, &v| acc.max(libm::fabs(v)));
    let floor = -1e-10 * (1.0 + lam_max);
    for &lam in &eig.values {
        if lam < floor {
            return Err(Error::NegativeEigenvalue { value: lam });
        }
    }
    let n = b.rows();
    let mut scaled = Matrix::zeros(n, n, eig.vectors.field());
    for j in 0..n {
        let root = libm::sqrt(eig.values[j].max(0.0));
        for i in 0..n {
            scaled.set(i, j, eig.vectors.get(i, j) * Complex64::new(root, 0.0));
        }
    }
    Ok(scaled.matmul(&eig.vectors.adjoint()).retag())
}

/// Minimal-norm least-squares solution of `A X = B` with rank cutoff
/// `rtol * sigma_max`. Returns the solution and the residual Frobenius norm.
pub fn least_squares(a: &Matrix, b: &Matrix, rtol: f64) -> (Matrix, f64) {
    assert_eq!(a.rows(), b.rows(), "least_squares: row mismatch");
    let dec = svd(a);
    let rank = dec.rank(rtol);
    // X = V Sigma^+ U^H B, restricted to the numerical rank.
    let utb = dec.u.adjoint().matmul(b);
    let mut x = Matrix::zeros(a.cols(), b.cols(), utb.field().join(dec.v.field()));
    for r in 0..rank {
        let inv = Complex64::new(1.0 / dec.sigma[r], 0.0);
        for j in 0..b.cols() {
            let coeff = utb.get(r, j) * inv;
            for i in 0..a.cols() {
                let v = x.get(i, j) + dec.v.get(i, r) * coeff;
                x.set(i, j, v);
            }
        }
    }
    let x = x.retag();
    let residual = a.matmul(&x).sub(b).frobenius();
    (x, residual)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn approx(a: f64, b: f64, tol: f64) {
        assert!((a - b).abs() <= tol, "{a} vs {b}");
    }

    #[test]
    fn induced_norms_identity_and_column_sums() {
        let id = Matrix::identity(3, Field::Real);
        approx(induced_norm(&id, NormKind::L2), 1.0, 1e-14);
        let m = Matrix::from_real_rows(&[vec![1.0, -2.0], vec![3.0, 4.0]]).unwrap();
        approx(induced_norm(&m, NormKind::L1), 6.0, 1e-14);
        approx(induced_norm(&m, NormKind::LInf), 7.0, 1e-14);
    }

    #[test]
    fn l2_norm_of_nilpotent_shift() {
        // Singular values of [[0,1],[0,0]] are {1, 0}.
        let m = Matrix::from_real_rows(&[vec![0.0, 1.0], vec![0.0, 0.0]]).unwrap();
        approx(induced_norm(&m, NormKind::L2), 1.0, 1e-14);
    }

    #[test]
    fn svd_reconstructs_complex_matrix() {
        let m = Matrix::from_complex_rows(&[
            vec![(1.0, 1.0), (0.0, -2.0), (0.5, 0.0)],
            vec![(0.0, 0.0), (3.0, 1.0), (-1.0, 0.25)],
        ])
        .unwrap();
        let dec = svd(&m);
        let mut sig = Matrix::zeros(3, 3, Field::Real);
        for (i, &s) in dec.sigma.iter().enumerate() {
            sig.set(i, i, Complex64::new(s, 0.0));
        }
        let rebuilt = dec.u.matmul(&sig).matmul(&dec.v.adjoint());
        assert!(rebuilt.sub(&m).max_abs() < 1e-12);
        // V unitary.
        let vtv = dec.v.adjoint().matmul(&dec.v);
        assert!(vtv.sub(&Matrix::identity(3, Field::Real)).max_abs() < 1e-12);
    }

    #[test]
    fn polar_of_permutation_times_diag() {
        // M = [[0,2],[1,0]] has P = diag(1,2) and V = [[0,1],[1,0]].
        let m = Matrix::from_real_rows(&[vec![0.0, 2.0], vec![1.0, 0.0]]).unwrap();
        let (v, p) = polar_decompose(&m).unwrap();
        assert!(p.sub(&Matrix::from_real_rows(&[vec![1.0, 0.0], vec![0.0, 2.0]]).unwrap()).max_abs() < 1e-12);
        assert!(v.sub(&Matrix::from_real_rows(&[vec![0.0, 1.0], vec![1.0, 0.0]]).unwrap()).max_abs() < 1e-12);
        assert!(v.matmul(&p).sub(&m).max_abs() < 1e-12);
    }

    #[test]
    fn polar_of_unitary_is_unitary_and_identity() {
        let s = libm::sqrt(0.5);
        let u = Matrix::from_real_rows(&[vec![s, -s], vec![s, s]]).unwrap();
        let (v, p) = polar_decompose(&u).unwrap();
        assert!(p.sub(&Matrix::identity(2, Field::Real)).max_abs() < 1e-12);
        assert!(v.sub(&u).max_abs() < 1e-12);
    }

    #[test]
    fn polar_of_singular_matrix_still_unitary_factor() {
        let m = Matrix::from_real_rows(&[vec![1.0, 1.0], vec![1.0, 1.0]]).unwrap();
        let (v, p) = polar_decompose(&m).unwrap();
        assert!(v.matmul(&p).sub(&m).max_abs() < 1e-12);
        let vtv = v.adjoint().matmul(&v);
        assert!(vtv.sub(&Matrix::identity(2, Field::Real)).max_abs() < 1e-10);
    }

    #[test]
    fn psd_sqrt_diag_and_dense() {
        let d = Matrix::from_real_rows(&[vec![4.0, 0.0], vec![0.0, 9.0]]).unwrap();
        let r = psd_sqrt(&d).unwrap();
        assert!(r.sub(&Matrix::from_real_rows(&[vec![2.0, 0.0], vec![0.0, 3.0]]).unwrap()).max_abs() < 1e-12);

        // [[2,1],[1,2]] has eigenvalues 1 and 3; sqrt has eigenvalues 1, sqrt(3).
        let b = Matrix::from_real_rows(&[vec![2.0, 1.0], vec![1.0, 2.0]]).unwrap();
        let a = psd_sqrt(&b).unwrap();
        assert!(a.matmul(&a).sub(&b).max_abs() < 1e-12);
        let s3 = libm::sqrt(3.0);
        let expect = Matrix::from_real_rows(&[
            vec![(1.0 + s3) / 2.0, (s3 - 1.0) / 2.0],
            vec![(s3 - 1.0) / 2.0, (1.0 + s3) / 2.0],
        ])
        .unwrap();
        assert!(a.sub(&expect).max_abs() < 1e-12);
    }

    #[test]
    fn psd_sqrt_rejects_non_hermitian_and_indefinite() {
        let m = Matrix::from_real_rows(&[vec![1.0, 1.0], vec![0.0, 1.0]]).unwrap();
        assert!(matches!(psd_sqrt(&m), Err(Error::NotHermitian { .. })));
        let neg = Matrix::from_real_rows(&[vec![1.0, 0.0], vec![0.0, -0.5]]).unwrap();
        assert!(matches!(psd_sqrt(&neg), Err(Error::NegativeEigenvalue { .. })));
    }

    #[test]
    fn eig_hermitian_complex() {
        // [[0, -i],[i, 0]] has eigenvalues -1, 1.
        let m = Matrix::from_complex_rows(&[
            vec![(0.0, 0.0), (0.0, -1.0)],
            vec![(0.0, 1.0), (0.0, 0.0)],
        ])
        .unwrap();
        let eig = eig_hermitian(&m).unwrap();
        approx(eig.values[0], -1.0, 1e-13);
        approx(eig.values[1], 1.0, 1e-13);
        // Reconstruct.
        let mut lam = Matrix::zeros(2, 2, Field::Real);
        for i in 0..2 {
            lam.set(i, i, Complex64::new(eig.values[i], 0.0));
        }
        let rebuilt = eig.vectors.matmul(&lam).matmul(&eig.vectors.adjoint());
        assert!(rebuilt.sub(&m).max_abs() < 1e-12);
    }

    #[test]
    fn solve_and_inverse() {
        let a = Matrix::from_real_rows(&[vec![2.0, 1.0], vec![1.0, 3.0]]).unwrap();
        let inv = inverse(&a).unwrap();
        assert!(a.matmul(&inv).sub(&Matrix::identity(2, Field::Real)).max_abs() < 1e-13);
        let singular = Matrix::from_real_rows(&[vec![1.0, 2.0], vec![2.0, 4.0]]).unwrap();
        assert!(matches!(inverse(&singular), Err(Error::Singular(_))));
    }

    #[test]
    fn least_squares_minimal_norm() {
        // Underdetermined: x + y = 2 has minimal-norm solution (1, 1).
        let a = Matrix::from_real_rows(&[vec![1.0, 1.0]]).unwrap();
        let b = Matrix::from_real_rows(&[vec![2.0]]).unwrap();
        let (x, res) = least_squares(&a, &b, 1e-12);
        assert!(res < 1e-13);
        approx(x.get(0, 0).re, 1.0, 1e-13);
        approx(x.get(1, 0).re, 1.0, 1e-13);
    }

    #[test]
    fn induced_norm_dominates_random_unit_vectors() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let m = Matrix::from_real_rows(&[
            vec![0.3, -1.2, 0.7],
            vec![2.0, 0.1, -0.4],
            vec![-0.5, 0.9, 1.5],
        ])
        .unwrap();
        for kind in [NormKind::L1, NormKind::L2, NormKind::LInf] {
            let norm = induced_norm(&m, kind);
            let mut best = 0.0f64;
            for _ in 0..10_000 {
                let v: Vec<f64> = (0..3).map(|_| rng.gen_range(-1.0..1.0)).collect();
                let x = Matrix::col_from_real(&v);
                let len = vector_norm(&x, kind);
                if len < 1e-9 {
                    continue;
                }
                let ratio = vector_norm(&m.matmul(&x), kind) / len;
                best = best.max(ratio);
            }
            // Brute force is a lower bound for the exact induced norm.
            assert!(best <= norm + 1e-6, "{kind:?}: {best} > {norm}");
            assert!(best >= 0.5 * norm, "{kind:?}: sampling far off");
        }
    }
}
