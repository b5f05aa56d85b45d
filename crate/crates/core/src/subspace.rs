//! Subspaces as orthonormal column bases with explicit rank tolerances.

use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::linalg::{svd, NormKind};
use crate::matrix::{Field, Matrix};

/// Which part of a matrix to extract as a subspace.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum SubspaceMode {
    Range,
    Kernel,
}

/// How to combine two subspaces.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum CombineMode {
    Sum,
    Intersection,
}

/// A linear subspace of `C^ambient` (or `R^ambient`), stored as an
/// `ambient x dim` matrix with orthonormal columns.
#[derive(Clone, Debug)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
}

impl Subspace {
    /// Wraps a basis matrix, checking orthonormality within `1e-12`.
    pub fn new(basis: Matrix) -> Result<Subspace> {
        let ambient = basis.rows();
        if basis.cols() > ambient {
            return Err(Error::Shape(String::from("subspace dimension exceeds ambient dimension")));
        }
        let gram = basis.adjoint().matmul(&basis);
        let defect = gram.sub(&Matrix::identity(basis.cols(), gram.field())).max_abs();
        if defect > 1e-12 {
            return Err(Error::Invalid(alloc::format!(
                "subspace basis is not orthonormal (defect {defect:.3e})"
            )));
        }
        Ok(Subspace { ambient, basis })
    }

    /// The zero subspace of the given ambient dimension.
    pub fn zero(ambient: usize, field: Field) -> Subspace {
        Subspace { ambient, basis: Matrix::zeros(ambient, 0, field) }
    }

    /// The whole ambient space.
    pub fn full(ambient: usize, field: Field) -> Subspace {
        Subspace { ambient, basis: Matrix::identity(ambient, field) }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    /// Orthogonal projector `B B^H` onto the subspace.
    pub fn projector(&self) -> Matrix {
        self.basis.matmul(&self.basis.adjoint())
    }

    /// Orthonormal basis of the orthogonal complement.
    pub fn complement(&self, rtol: f64) -> Subspace {
        let residual = Matrix::identity(self.ambient, self.basis.field()).sub(&self.projector());
        from_matrix(&residual, SubspaceMode::Range, rtol)
    }

    /// Distance from a vector to the subspace in the given norm.
    pub fn distance(&self, v: &Matrix, kind: NormKind) -> f64 {
        let proj = self.projector().matmul(v);
        crate::linalg::vector_norm(&v.sub(&proj), kind)
    }
}

/// Extracts the numerical range or kernel of `m`. Singular values below
/// `rtol * sigma_max` are treated as zero; the zero matrix has full kernel
/// and zero range.
pub fn from_matrix(m: &Matrix, mode: SubspaceMode, rtol: f64) -> Subspace {
    let dec = svd(m);
    let rank = dec.rank(rtol);
    match mode {
        SubspaceMode::Range => {
            Subspace { ambient: m.rows(), basis: dec.u.block(0, 0, m.rows(), rank) }
        }
        SubspaceMode::Kernel => Subspace {
            ambient: m.cols(),
            basis: dec.v.block(0, rank, m.cols(), m.cols() - rank),
        },
    }
}

/// Sum or intersection of two subspaces of the same ambient space.
///
/// The sum is the range of the concatenated bases. The intersection comes
/// from the kernel of `[U | -W]`: a kernel vector `(x, y)` satisfies
/// `U x = W y`, which is exactly a common vector of the two spans.
pub fn combine(u: &Subspace, w: &Subspace, mode: CombineMode, rtol: f64) -> Result<Subspace> {
    if u.ambient != w.ambient {
        return Err(Error::Shape(String::from("subspace combine: ambient dimensions differ")));
    }
    match mode {
        CombineMode::Sum => {
            let stacked = u.basis.hcat(&w.basis);
            Ok(from_matrix(&stacked, SubspaceMode::Range, rtol))
        }
        CombineMode::Intersection => {
            if u.dim() == 0 || w.dim() == 0 {
                return Ok(Subspace::zero(u.ambient, u.basis.field().join(w.basis.field())));
            }
            let stacked = u.basis.hcat(&w.basis.scale_real(-1.0));
            let null = from_matrix(&stacked, SubspaceMode::Kernel, rtol);
            if null.dim() == 0 {
                return Ok(Subspace::zero(u.ambient, u.basis.field().join(w.basis.field())));
            }
            let coeffs = null.basis.block(0, 0, u.dim(), null.dim());
            let vectors = u.basis.matmul(&coeffs);
            Ok(from_matrix(&vectors, SubspaceMode::Range, rtol))
        }
    }
}

/// Principal angles between two subspaces, ascending, in radians.
///
/// The cosines are the singular values of `U^H W`; only `min(dim U, dim W)`
/// angles are defined.
pub fn principal_angles(u: &Subspace, w: &Subspace) -> Vec<f64> {
    let product = u.basis.adjoint().matmul(&w.basis);
    let dec = svd(&product);
    let count = u.dim().min(w.dim());
    dec.sigma
        .iter()
        .take(count)
        .map(|&s| libm::acos(s.clamp(-1.0, 1.0)))
        .collect()
}

/// Smallest principal angle; `pi/2` when either space is zero.
pub fn smallest_principal_angle(u: &Subspace, w: &Subspace) -> f64 {
    principal_angles(u, w).first().copied().unwrap_or(core::f64::consts::FRAC_PI_2)
}

/// Gap between equidimensional subspaces, measured as the largest principal
/// angle. Returns `pi/2` if the dimensions differ.
pub fn subspace_gap(u: &Subspace, w: &Subspace) -> f64 {
    if u.dim() != w.dim() {
        return core::f64::consts::FRAC_PI_2;
    }
    if u.dim() == 0 {
        return 0.0;
    }
    principal_angles(u, w).last().copied().unwrap_or(0.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::DEFAULT_RTOL;
    use alloc::vec;

    fn span(cols: &[Vec<f64>], ambient: usize) -> Subspace {
        let mut m = Matrix::zeros(ambient, cols.len(), Field::Real);
        for (j, col) in cols.iter().enumerate() {
            for (i, &x) in col.iter().enumerate() {
                m.set(i, j, num_complex::Complex64::new(x, 0.0));
            }
        }
        Subspace::new(m).unwrap()
    }

    #[test]
    fn zero_matrix_has_zero_range_and_full_kernel() {
        let z = Matrix::zeros(2, 2, Field::Real);
        assert_eq!(from_matrix(&z, SubspaceMode::Range, DEFAULT_RTOL).dim(), 0);
        assert_eq!(from_matrix(&z, SubspaceMode::Kernel, DEFAULT_RTOL).dim(), 2);
    }

    #[test]
    fn kernel_of_diag_1_0() {
        let m = Matrix::from_real_rows(&[vec![1.0, 0.0], vec![0.0, 0.0]]).unwrap();
        let k = from_matrix(&m, SubspaceMode::Kernel, DEFAULT_RTOL);
        assert_eq!(k.dim(), 1);
        // span{e2}
        assert!(crate::matrix::cabs(k.basis().get(1, 0)).abs() > 0.999);
        assert!(crate::matrix::cabs(k.basis().get(0, 0)) < 1e-12);
    }

    #[test]
    fn range_of_rank_one_all_ones() {
        let m = Matrix::from_real_rows(&[vec![1.0, 1.0], vec![1.0, 1.0]]).unwrap();
        let r = from_matrix(&m, SubspaceMode::Range, DEFAULT_RTOL);
        assert_eq!(r.dim(), 1);
        let s = libm::sqrt(0.5);
        let e = span(&[vec![s, s]], 2);
        assert!(subspace_gap(&r, &e) < 1e-12);
    }

    #[test]
    fn sum_and_intersection_of_coordinate_planes() {
        let e1 = span(&[vec![1.0, 0.0, 0.0]], 3);
        let e2 = span(&[vec![0.0, 1.0, 0.0]], 3);
        let sum = combine(&e1, &e2, CombineMode::Sum, DEFAULT_RTOL).unwrap();
        assert_eq!(sum.dim(), 2);
        let meet = combine(&e1, &e2, CombineMode::Intersection, DEFAULT_RTOL).unwrap();
        assert_eq!(meet.dim(), 0);

        let p12 = span(&[vec![1.0, 0.0, 0.0], vec![0.0, 1.0, 0.0]], 3);
        let p23 = span(&[vec![0.0, 1.0, 0.0], vec![0.0, 0.0, 1.0]], 3);
        let line = combine(&p12, &p23, CombineMode::Intersection, DEFAULT_RTOL).unwrap();
        assert_eq!(line.dim(), 1);
        let e2only = span(&[vec![0.0, 1.0, 0.0]], 3);
        assert!(subspace_gap(&line, &e2only) < 1e-10);
    }

    #[test]
    fn range_and_adjoint_kernel_are_complementary() {
        let m = Matrix::from_real_rows(&[
            vec![1.0, 2.0, 0.0],
            vec![0.5, 1.0, 0.0],
            vec![0.0, 0.0, 0.0],
        ])
        .unwrap();
        let range = from_matrix(&m, SubspaceMode::Range, DEFAULT_RTOL);
        let coker = from_matrix(&m.adjoint(), SubspaceMode::Kernel, DEFAULT_RTOL);
        assert_eq!(range.dim() + coker.dim(), 3);
        assert!(smallest_principal_angle(&range, &coker) > 1.0);
    }

    #[test]
    fn non_orthonormal_basis_rejected() {
        let m = Matrix::from_real_rows(&[vec![1.0], vec![1.0]]).unwrap();
        assert!(Subspace::new(m).is_err());
    }
}
