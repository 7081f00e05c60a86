// Copyright 2026 Chiralnet Contributors
// SPDX-License-Identifier: Apache-2.0

//! Dense statevector engine.
//!
//! Qubits are numbered from 1. Qubit 1 is the most significant bit of the
//! basis index, so for `Q` qubits qubit `q` lives at bit `Q − q`.

use crate::error::{Error, Result};
use crate::linalg::{CMatrix, C64, ONE, ZERO};

pub const MAX_QUBITS: usize = 20;

#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    n_qubits: usize,
    amps: Vec<C64>,
}

impl StateVector {
    /// `|0…0⟩` on `n_qubits` qubits.
    pub fn zero_state(n_qubits: usize) -> Result<Self> {
        check_register(n_qubits)?;
        let mut amps = vec![ZERO; 1 << n_qubits];
        amps[0] = ONE;
        Ok(Self { n_qubits, amps })
    }

    pub fn from_amplitudes(n_qubits: usize, amps: Vec<C64>) -> Result<Self> {
        check_register(n_qubits)?;
        if amps.len() != 1 << n_qubits {
            return Err(Error::DimensionMismatch { expected: 1 << n_qubits, got: amps.len() });
        }
        Ok(Self { n_qubits, amps })
    }

    /// Computational basis state `|index⟩`.
    pub fn basis(n_qubits: usize, index: usize) -> Result<Self> {
        let mut s = Self::zero_state(n_qubits)?;
        if index >= s.amps.len() {
            return Err(Error::DimensionMismatch { expected: s.amps.len(), got: index });
        }
        s.amps[0] = ZERO;
        s.amps[index] = ONE;
        Ok(s)
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn amplitudes(&self) -> &[C64] {
        &self.amps
    }

    pub fn into_amplitudes(self) -> Vec<C64> {
        self.amps
    }

    /// Applies a 2×2 gate to qubit `q`.
    pub fn apply_1q(&mut self, gate: &CMatrix, q: usize) -> Result<()> {
        if gate.dim() != 2 {
            return Err(Error::DimensionMismatch { expected: 2, got: gate.dim() });
        }
        self.check_qubit(q)?;
        apply_1q_raw(&mut self.amps, self.n_qubits, gate, q);
        Ok(())
    }

    /// Applies a 4×4 gate whose basis is ordered `|control, target⟩`.
    pub fn apply_2q(&mut self, gate: &CMatrix, control: usize, target: usize) -> Result<()> {
        if gate.dim() != 4 {
            return Err(Error::DimensionMismatch { expected: 4, got: gate.dim() });
        }
        self.check_qubit(control)?;
        self.check_qubit(target)?;
        if control == target {
            return Err(Error::InvalidParameter(format!("control and target are both qubit {control}")));
        }
        apply_2q_raw(&mut self.amps, self.n_qubits, gate, control, target);
        Ok(())
    }

    /// Probability of reading qubit `q` as `|1⟩`.
    ///
    /// The marginal is divided by the total norm, so a lossy state gives the
    /// post-selected probability; [`StateVector::norm2`] reports the loss.
    pub fn prob_one(&self, q: usize) -> Result<f64> {
        self.check_qubit(q)?;
        let norm = self.norm2();
        if !(norm > 0.0) {
            return Err(Error::ZeroNorm);
        }
        Ok(marginal_one(&self.amps, self.n_qubits, q) / norm)
    }

    /// `Σ|amp|²`.
    pub fn norm2(&self) -> f64 {
        self.amps.iter().map(C64::norm_sqr).sum()
    }

    /// `⟨self|other⟩`.
    pub fn inner(&self, other: &Self) -> Result<C64> {
        if self.amps.len() != other.amps.len() {
            return Err(Error::DimensionMismatch { expected: self.amps.len(), got: other.amps.len() });
        }
        Ok(self.amps.iter().zip(&other.amps).map(|(a, b)| a.conj() * b).sum())
    }

    fn check_qubit(&self, q: usize) -> Result<()> {
        if q == 0 || q > self.n_qubits {
            return Err(Error::QubitOutOfRange { index: q, n_qubits: self.n_qubits });
        }
        Ok(())
    }
}

fn check_register(n_qubits: usize) -> Result<()> {
    if !(1..=MAX_QUBITS).contains(&n_qubits) {
        return Err(Error::InvalidParameter(format!("qubit count must be in 1..={MAX_QUBITS}, got {n_qubits}")));
    }
    Ok(())
}

#[inline]
pub(crate) fn qubit_mask(n_qubits: usize, q: usize) -> usize {
    1 << (n_qubits - q)
}

// Kernels below assume validated indices.

pub(crate) fn apply_1q_raw(amps: &mut [C64], n_qubits: usize, gate: &CMatrix, q: usize) {
    let (g00, g01, g10, g11) = (gate[(0, 0)], gate[(0, 1)], gate[(1, 0)], gate[(1, 1)]);
    let stride = qubit_mask(n_qubits, q);
    for i in 0..amps.len() {
        if i & stride != 0 {
            continue;
        }
        let j = i | stride;
        let (a0, a1) = (amps[i], amps[j]);
        amps[i] = g00 * a0 + g01 * a1;
        amps[j] = g10 * a0 + g11 * a1;
    }
}

pub(crate) fn apply_2q_raw(amps: &mut [C64], n_qubits: usize, gate: &CMatrix, control: usize, target: usize) {
    let bc = qubit_mask(n_qubits, control);
    let bt = qubit_mask(n_qubits, target);
    for i in 0..amps.len() {
        if i & (bc | bt) != 0 {
            continue;
        }
        let idx = [i, i | bt, i | bc, i | bc | bt];
        let v = idx.map(|k| amps[k]);
        for (r, &k) in idx.iter().enumerate() {
            amps[k] = (0..4).map(|c| gate[(r, c)] * v[c]).sum();
        }
    }
}

pub(crate) fn marginal_one(amps: &[C64], n_qubits: usize, q: usize) -> f64 {
    let mask = qubit_mask(n_qubits, q);
    amps.iter().enumerate().filter(|(i, _)| i & mask != 0).map(|(_, a)| a.norm_sqr()).sum()
}
