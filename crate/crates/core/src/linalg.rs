// Copyright 2026 Chiralnet Contributors
// SPDX-License-Identifier: Apache-2.0

//! Minimal dense square complex matrices, sized for 1-, 2- and 4-channel
//! scattering problems and the brute-force circuit oracles.

use std::ops::{Index, IndexMut, Mul};

use num_complex::Complex64;
use serde::{Serialize, Serializer};

pub type C64 = Complex64;

pub const ZERO: C64 = C64::new(0.0, 0.0);
pub const ONE: C64 = C64::new(1.0, 0.0);
pub const I: C64 = C64::new(0.0, 1.0);

/// Row-major `n x n` complex matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct CMatrix {
    n: usize,
    data: Vec<C64>,
}

impl CMatrix {
    pub fn zeros(n: usize) -> Self {
        Self { n, data: vec![ZERO; n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m[(i, i)] = ONE;
        }
        m
    }

    /// Builds a matrix from row slices. Panics if the rows are ragged or not square.
    pub fn from_rows<R: AsRef<[C64]>>(rows: &[R]) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * n);
        for r in rows {
            let r = r.as_ref();
            assert_eq!(r.len(), n, "matrix rows must form a square");
            data.extend_from_slice(r);
        }
        Self { n, data }
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> C64) -> Self {
        let mut data = Vec::with_capacity(n * n);
        for r in 0..n {
            for c in 0..n {
                data.push(f(r, c));
            }
        }
        Self { n, data }
    }

    pub fn diag(entries: &[C64]) -> Self {
        let mut m = Self::zeros(entries.len());
        for (i, &e) in entries.iter().enumerate() {
            m[(i, i)] = e;
        }
        m
    }

    pub fn pauli_x() -> Self {
        Self::from_rows(&[[ZERO, ONE], [ONE, ZERO]])
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn as_slice(&self) -> &[C64] {
        &self.data
    }

    pub fn dagger(&self) -> Self {
        Self::from_fn(self.n, |r, c| self[(c, r)].conj())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.n, |r, c| self[(c, r)])
    }

    pub fn scale(&self, s: C64) -> Self {
        Self { n: self.n, data: self.data.iter().map(|&z| z * s).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        Self { n: self.n, data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect() }
    }

    /// Kronecker product `self ⊗ other`.
    pub fn kron(&self, other: &Self) -> Self {
        let (a, b) = (self.n, other.n);
        Self::from_fn(a * b, |r, c| self[(r / b, c / b)] * other[(r % b, c % b)])
    }

    /// Leading `k x k` sub-block.
    pub fn leading_block(&self, k: usize) -> Self {
        assert!(k <= self.n);
        Self::from_fn(k, |r, c| self[(r, c)])
    }

    pub fn mul_vec(&self, v: &[C64]) -> Vec<C64> {
        assert_eq!(v.len(), self.n);
        (0..self.n).map(|r| (0..self.n).map(|c| self[(r, c)] * v[c]).sum()).collect()
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!(self.n, other.n);
        self.data.iter().zip(&other.data).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max)
    }

    /// `max |(M†M - I)_ij|`.
    pub fn unitarity_residual(&self) -> f64 {
        (&self.dagger() * self).max_abs_diff(&Self::identity(self.n))
    }

    /// `max |M_ij - M_ji|`.
    pub fn symmetry_residual(&self) -> f64 {
        self.max_abs_diff(&self.transpose())
    }

    /// Squared norm of every column, i.e. the probability that survives for
    /// each input channel.
    pub fn column_norms_sqr(&self) -> Vec<f64> {
        (0..self.n).map(|c| (0..self.n).map(|r| self[(r, c)].norm_sqr()).sum()).collect()
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|z| z.re.is_finite() && z.im.is_finite())
    }

    pub fn rows(&self) -> Vec<Vec<C64>> {
        self.data.chunks(self.n).map(<[C64]>::to_vec).collect()
    }
}

impl Index<(usize, usize)> for CMatrix {
    type Output = C64;
    fn index(&self, (r, c): (usize, usize)) -> &C64 {
        &self.data[r * self.n + c]
    }
}

impl IndexMut<(usize, usize)> for CMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut C64 {
        &mut self.data[r * self.n + c]
    }
}

impl Mul for &CMatrix {
    type Output = CMatrix;
    fn mul(self, rhs: &CMatrix) -> CMatrix {
        assert_eq!(self.n, rhs.n);
        let n = self.n;
        let mut out = CMatrix::zeros(n);
        for r in 0..n {
            for k in 0..n {
                let a = self[(r, k)];
                if a == ZERO {
                    continue;
                }
                for c in 0..n {
                    out.data[r * n + c] += a * rhs[(k, c)];
                }
            }
        }
        out
    }
}

/// Serialized as rows of `[re, im]` pairs.
impl Serialize for CMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let rows: Vec<Vec<[f64; 2]>> =
            self.data.chunks(self.n).map(|row| row.iter().map(|z| [z.re, z.im]).collect()).collect();
        rows.serialize(serializer)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kron_of_identities_is_identity() {
        let k = CMatrix::identity(2).kron(&CMatrix::identity(2));
        assert_eq!(k, CMatrix::identity(4));
    }

    #[test]
    fn kron_places_blocks() {
        let x = CMatrix::pauli_x();
        let k = x.kron(&CMatrix::identity(2));
        assert_eq!(k[(0, 2)], ONE);
        assert_eq!(k[(1, 3)], ONE);
        assert_eq!(k[(0, 0)], ZERO);
    }

    #[test]
    fn pauli_x_is_unitary_and_symmetric() {
        let x = CMatrix::pauli_x();
        assert_eq!(x.unitarity_residual(), 0.0);
        assert_eq!(x.symmetry_residual(), 0.0);
    }
}
