//! Deterministic probe meshes and coordinate seeds.
//!
//! Several checks evaluate norms on a fixed set of probe vectors. The mesh
//! is generated by a SplitMix64 stream from a fixed seed, so it is identical
//! across platforms and runs without pulling an RNG crate into the `no_std`
//! core.

use alloc::vec::Vec;

use num_complex::Complex64;

use crate::matrix::{Field, Matrix};

/// SplitMix64 step.
#[derive(Clone, Debug)]
pub struct SplitMix64(pub u64);

impl SplitMix64 {
    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Uniform in `[-1, 1)`.
    pub fn next_signed(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 / (1u64 << 52) as f64 - 1.0
    }
}

/// `count` unit vectors (Euclidean) in dimension `dim`, always including the
/// standard basis vectors first.
pub fn probe_mesh(dim: usize, count: usize, field: Field, seed: u64) -> Vec<Matrix> {
    let mut rng = SplitMix64(seed);
    let mut probes = Vec::with_capacity(count);
    for i in 0..count {
        let mut v = Matrix::zeros(dim, 1, field);
        if i < dim {
            v.set(i, 0, Complex64::new(1.0, 0.0));
        } else {
            loop {
                for r in 0..dim {
                    let re = rng.next_signed();
                    let im = if field == Field::Complex { rng.next_signed() } else { 0.0 };
                    v.set(r, 0, Complex64::new(re, im));
                }
                let norm = v.frobenius();
                if norm > 1e-3 {
                    v = v.scale_real(1.0 / norm);
                    break;
                }
            }
        }
        probes.push(v);
    }
    probes
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mesh_is_deterministic_and_unit() {
        let a = probe_mesh(3, 8, Field::Real, 42);
        let b = probe_mesh(3, 8, Field::Real, 42);
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x, y);
            assert!((x.frobenius() - 1.0).abs() < 1e-12);
        }
        assert_eq!(a[0].get(0, 0).re, 1.0);
    }
}
