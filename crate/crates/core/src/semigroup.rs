//! Finite semigroups given by multiplication tables, and the closure
//! constructions: unitization, direct products and homomorphic images.
//!
//! Element indexing conventions are fixed so that derived tables (and the
//! reports built from them) are reproducible: direct products index pairs
//! row-major (`(s, t) -> s * |T| + t`) and unitization appends the new unit
//! as the last element.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// A finite semigroup: elements `0..n` with an associative multiplication
/// table, `table[i][j] = i * j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteSemigroup {
    order: usize,
    table: Vec<usize>,
}

impl FiniteSemigroup {
    /// Validates entry ranges and associativity (exhaustive `O(n^3)` check);
    /// the error carries a witness triple.
    pub fn from_table(rows: &[Vec<usize>]) -> Result<FiniteSemigroup> {
        let n = rows.len();
        let mut table = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::Shape(alloc::format!(
                    "table row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
            for (j, &v) in row.iter().enumerate() {
                if v >= n {
                    return Err(Error::TableEntryOutOfRange { row: i, col: j, value: v });
                }
                table.push(v);
            }
        }
        let sg = FiniteSemigroup { order: n, table };
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if sg.mul(sg.mul(i, j), k) != sg.mul(i, sg.mul(j, k)) {
                        return Err(Error::NotAssociative { i, j, k });
                    }
                }
            }
        }
        Ok(sg)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.table[i * self.order + j]
    }

    /// Table rows, for serialisation.
    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.order).map(|i| (0..self.order).map(|j| self.mul(i, j)).collect()).collect()
    }

    /// The neutral element, if one exists.
    pub fn unit(&self) -> Option<usize> {
        (0..self.order).find(|&e| (0..self.order).all(|x| self.mul(e, x) == x && self.mul(x, e) == x))
    }

    /// Adjoins a fresh unit as element `n`, even when the semigroup already
    /// has one (the adjoined unit is then a genuinely new neutral element
    /// and the old unit stops being neutral).
    pub fn unitize(&self) -> FiniteSemigroup {
        let n = self.order;
        let m = n + 1;
        let mut table = vec![0usize; m * m];
        for i in 0..n {
            for j in 0..n {
                table[i * m + j] = self.mul(i, j);
            }
            table[i * m + n] = i;
            table[n * m + i] = i;
        }
        table[n * m + n] = n;
        FiniteSemigroup { order: m, table }
    }

    /// Componentwise product with pairs indexed row-major:
    /// `(s, t) -> s * |T| + t`.
    pub fn direct_product(&self, other: &FiniteSemigroup) -> FiniteSemigroup {
        let n = self.order * other.order;
        let mut table = vec![0usize; n * n];
        for s1 in 0..self.order {
            for t1 in 0..other.order {
                for s2 in 0..self.order {
                    for t2 in 0..other.order {
                        let a = s1 * other.order + t1;
                        let b = s2 * other.order + t2;
                        table[a * n + b] = self.mul(s1, s2) * other.order + other.mul(t1, t2);
                    }
                }
            }
        }
        FiniteSemigroup { order: n, table }
    }

    /// Image under the index map `f` (surjective onto `0..m`), with the
    /// induced table. Fails with a witness pair when `f` is not a
    /// homomorphism, i.e. when products conflict on some fibre.
    pub fn hom_image(&self, f: &[usize], m: usize) -> Result<FiniteSemigroup> {
        if f.len() != self.order {
            return Err(Error::Shape(alloc::format!(
                "index map has {} entries, expected {}",
                f.len(),
                self.order
            )));
        }
        let mut seen = vec![false; m];
        for (i, &fi) in f.iter().enumerate() {
            if fi >= m {
                return Err(Error::TableEntryOutOfRange { row: 0, col: i, value: fi });
            }
            seen[fi] = true;
        }
        if let Some(missing) = seen.iter().position(|&s| !s) {
            return Err(Error::NotSurjective { missing });
        }
        let mut table = vec![usize::MAX; m * m];
        for x in 0..self.order {
            for y in 0..self.order {
                let (a, b) = (f[x], f[y]);
                let product = f[self.mul(x, y)];
                let slot = &mut table[a * m + b];
                if *slot == usize::MAX {
                    *slot = product;
                } else if *slot != product {
                    return Err(Error::NotAHomomorphism { x, y });
                }
            }
        }
        Ok(FiniteSemigroup { order: m, table })
    }
}

/// The cyclic group of order `n`.
pub fn cyclic_group(n: usize) -> FiniteSemigroup {
    let mut table = vec![0usize; n * n];
    for i in 0..n {
        for j in 0..n {
            table[i * n + j] = (i + j) % n;
        }
    }
    FiniteSemigroup { order: n, table }
}

/// Left-zero semigroup: `x * y = x`.
pub fn left_zero(n: usize) -> FiniteSemigroup {
    let mut table = vec![0usize; n * n];
    for i in 0..n {
        for j in 0..n {
            table[i * n + j] = i;
        }
    }
    FiniteSemigroup { order: n, table }
}

/// Right-zero semigroup: `x * y = y`.
pub fn right_zero(n: usize) -> FiniteSemigroup {
    let mut table = vec![0usize; n * n];
    for i in 0..n {
        for j in 0..n {
            table[i * n + j] = j;
        }
    }
    FiniteSemigroup { order: n, table }
}

/// The symmetric group S3, elements numbered by their one-line notation in
/// lexicographic order.
pub fn symmetric_group_3() -> FiniteSemigroup {
    let perms: [[usize; 3]; 6] =
        [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let index = |p: &[usize; 3]| perms.iter().position(|q| q == p).unwrap();
    let mut table = vec![0usize; 36];
    for (i, p) in perms.iter().enumerate() {
        for (j, q) in perms.iter().enumerate() {
            // Composition acting on points: (p * q)(x) = p(q(x)).
            let composed = [p[q[0]], p[q[1]], p[q[2]]];
            table[i * 6 + j] = index(&composed);
        }
    }
    FiniteSemigroup { order: 6, table }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn z2_and_right_zero_validate() {
        assert!(FiniteSemigroup::from_table(&[vec![0, 1], vec![1, 0]]).is_ok());
        assert!(FiniteSemigroup::from_table(&[vec![0, 1], vec![0, 1]]).is_ok());
    }

    #[test]
    fn non_associative_table_reports_witness() {
        let err = FiniteSemigroup::from_table(&[vec![0, 0], vec![1, 0]]).unwrap_err();
        match err {
            Error::NotAssociative { i, j, k } => {
                let sg = FiniteSemigroup { order: 2, table: vec![0, 0, 1, 0] };
                assert_ne!(sg.mul(sg.mul(i, j), k), sg.mul(i, sg.mul(j, k)));
            }
            other => panic!("expected associativity witness, got {other:?}"),
        }
    }

    #[test]
    fn unitize_trivial_and_group() {
        let trivial = FiniteSemigroup::from_table(&[vec![0]]).unwrap();
        let m = trivial.unitize();
        assert_eq!(m.order(), 2);
        assert_eq!(m.unit(), Some(1));

        // After unitizing a group the old unit is no longer neutral.
        let z2 = cyclic_group(2);
        let u = z2.unitize();
        assert_eq!(u.order(), 3);
        assert_eq!(u.unit(), Some(2));
        assert_eq!(u.mul(0, 1), 1);
        assert_eq!(u.mul(2, 1), 1);
        // The embedded copy still multiplies as before.
        assert_eq!(u.mul(1, 1), 0);
    }

    #[test]
    fn product_with_trivial_is_isomorphic() {
        let s = right_zero(2);
        let trivial = FiniteSemigroup::from_table(&[vec![0]]).unwrap();
        let p = s.direct_product(&trivial);
        assert_eq!(p.rows(), s.rows());
    }

    #[test]
    fn klein_four_group_from_product() {
        let z2 = cyclic_group(2);
        let k4 = z2.direct_product(&z2);
        // Hand product table under (s,t) -> 2s + t.
        let expect = [
            vec![0, 1, 2, 3],
            vec![1, 0, 3, 2],
            vec![2, 3, 0, 1],
            vec![3, 2, 1, 0],
        ];
        assert_eq!(k4.rows(), expect);
        assert!(k4.unit() == Some(0));
    }

    #[test]
    fn left_zero_times_right_zero() {
        let p = left_zero(2).direct_product(&right_zero(2));
        // (a,b)*(c,d) = (a, d): index arithmetic 2a + d.
        for a in 0..2 {
            for b in 0..2 {
                for c in 0..2 {
                    for d in 0..2 {
                        assert_eq!(p.mul(2 * a + b, 2 * c + d), 2 * a + d);
                    }
                }
            }
        }
    }

    #[test]
    fn hom_image_parity_quotient() {
        let z4 = cyclic_group(4);
        let img = z4.hom_image(&[0, 1, 0, 1], 2).unwrap();
        assert_eq!(img.rows(), cyclic_group(2).rows());

        // Identity map reproduces the semigroup.
        let id = z4.hom_image(&[0, 1, 2, 3], 4).unwrap();
        assert_eq!(id.rows(), z4.rows());

        // Collapse to a point.
        let z2 = cyclic_group(2);
        let point = z2.hom_image(&[0, 0], 1).unwrap();
        assert_eq!(point.order(), 1);
    }

    #[test]
    fn hom_image_rejects_non_homomorphism() {
        // Collapsing Z4 by value mod 3 is not consistently definable.
        let z4 = cyclic_group(4);
        let err = z4.hom_image(&[0, 1, 2, 0], 3).unwrap_err();
        assert!(matches!(err, Error::NotAHomomorphism { .. }));
    }

    #[test]
    fn s3_is_a_group_of_order_six() {
        let s3 = symmetric_group_3();
        assert_eq!(s3.unit(), Some(0));
        // Every element has an inverse.
        for g in 0..6 {
            assert!((0..6).any(|h| s3.mul(g, h) == 0 && s3.mul(h, g) == 0));
        }
        // Non-abelian witness.
        assert_ne!(s3.mul(1, 2), s3.mul(2, 1));
    }
}
