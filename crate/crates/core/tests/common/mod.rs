// Copyright 2026 Chiralnet Contributors
// SPDX-License-Identifier: Apache-2.0

//! Independent reference implementations for the integration tests:
//! literal transfer-matrix formulas and a dense full-register simulator.

#![allow(dead_code)]

use chiralnet::circuit::{EncodingBinding, ParameterTable, SlotKind};
use chiralnet::C64;

pub type M2 = [[C64; 2]; 2];
pub type Dense = Vec<Vec<C64>>;

pub fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

pub const I: C64 = C64::new(0.0, 1.0);

/// Two-guide Λ-atom, written exactly as the published 2×2 matrix.
pub fn literal_rotation(gamma: f64, omega: f64, delta: f64, two_photon: f64) -> M2 {
    let dk = c(two_photon, 0.0);
    let d = c(delta, 0.0);
    let om2 = c(omega * omega, 0.0);
    let a = dk * (d - I * gamma) - om2;
    let diag = (dk * d - om2) / a;
    let off = I * dk * gamma / a;
    [[diag, off], [off, diag]]
}

/// Single-guide Λ-atom: `diag(p, 1)`.
pub fn literal_phase(gamma: f64, omega: f64, delta: f64, two_photon: f64) -> M2 {
    let dk = c(two_photon, 0.0);
    let d = c(delta, 0.0);
    let om2 = c(omega * omega, 0.0);
    let p = (dk * (d + I * (gamma / 2.0)) - om2) / (dk * (d - I * (gamma / 2.0)) - om2);
    [[p, c(0.0, 0.0)], [c(0.0, 0.0), c(1.0, 0.0)]]
}

/// Four-channel Λ-atom `(r1, r2, l1, l2)` with decay `γ` entering as
/// `δ → δ − iγ/2`.
pub fn literal_four_channel(g: [f64; 4], omega: f64, delta: f64, two_photon: f64, decay: f64) -> Vec<Vec<C64>> {
    let dk = c(two_photon, 0.0);
    let d = c(delta, -decay / 2.0);
    let sum: f64 = g.iter().sum();
    let a = dk * (d - I * (sum / 2.0)) - c(omega * omega, 0.0);
    (0..4)
        .map(|r| {
            (0..4)
                .map(|col| {
                    let coupling = I * dk * (g[r] * g[col]).sqrt();
                    if r == col {
                        (a + coupling) / a
                    } else {
                        coupling / a
                    }
                })
                .collect()
        })
        .collect()
}

/// Two-level emitter across two guides.
pub fn literal_twolevel(gamma: f64, delta: f64) -> M2 {
    let d = c(delta, 0.0);
    let diag = d / (d - I * gamma);
    let off = I * gamma / (d - I * gamma);
    [[diag, off], [off, diag]]
}

/// Frequency-converter stage.
pub fn literal_converter(gamma: f64, omega: f64, d1: f64, d2: f64) -> M2 {
    let (d1, d2) = (c(d1, 0.0), c(d2, 0.0));
    let h = gamma / 2.0;
    let om2 = c(omega * omega, 0.0);
    let den = d1 * d2 - om2 - I * h * d1 - I * h * d2 - c(h * h, 0.0);
    let t00 = (d1 * d2 - om2 - I * h * d1 + I * h * d2 + c(h * h, 0.0)) / den;
    let t11 = (d1 * d2 - om2 + I * h * d1 - I * h * d2 + c(h * h, 0.0)) / den;
    let off = -I * gamma * omega / den;
    [[t00, off], [off, t11]]
}

pub fn rx(theta: f64) -> M2 {
    let (s, co) = (theta / 2.0).sin_cos();
    [[c(co, 0.0), c(0.0, -s)], [c(0.0, -s), c(co, 0.0)]]
}

pub fn m2_diff(a: &M2, b: &M2) -> f64 {
    let mut m: f64 = 0.0;
    for r in 0..2 {
        for k in 0..2 {
            m = m.max((a[r][k] - b[r][k]).norm());
        }
    }
    m
}

pub fn dense_from_m2(m: &M2) -> Dense {
    m.iter().map(|r| r.to_vec()).collect()
}

pub fn identity(n: usize) -> Dense {
    (0..n).map(|r| (0..n).map(|k| if r == k { c(1.0, 0.0) } else { c(0.0, 0.0) }).collect()).collect()
}

pub fn kron(a: &Dense, b: &Dense) -> Dense {
    let (n, m) = (a.len(), b.len());
    (0..n * m).map(|r| (0..n * m).map(|k| a[r / m][k / m] * b[r % m][k % m]).collect()).collect()
}

pub fn matmul(a: &Dense, b: &Dense) -> Dense {
    let n = a.len();
    (0..n).map(|r| (0..n).map(|k| (0..n).map(|j| a[r][j] * b[j][k]).sum()).collect()).collect()
}

pub fn matvec(a: &Dense, v: &[C64]) -> Vec<C64> {
    a.iter().map(|row| row.iter().zip(v).map(|(x, y)| x * y).sum()).collect()
}

pub fn dagger(a: &Dense) -> Dense {
    let n = a.len();
    (0..n).map(|r| (0..n).map(|k| a[k][r].conj()).collect()).collect()
}

pub fn unitarity_residual(a: &Dense) -> f64 {
    let p = matmul(&dagger(a), a);
    let id = identity(a.len());
    p.iter().flatten().zip(id.iter().flatten()).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
}

/// `I ⊗ … ⊗ G ⊗ … ⊗ I` with `G` on qubit `q` (qubit 1 leftmost).
pub fn embed_1q(g: &M2, q: usize, n: usize) -> Dense {
    let mut full = identity(1);
    for k in 1..=n {
        let f = if k == q { dense_from_m2(g) } else { identity(2) };
        full = kron(&full, &f);
    }
    full
}

/// Nearest-neighbour two-qubit gate on `(m, m+1)`, basis `|q_m, q_{m+1}⟩`.
pub fn embed_2q_adjacent(g: &Dense, m: usize, n: usize) -> Dense {
    kron(&kron(&identity(1 << (m - 1)), g), &identity(1 << (n - m - 1)))
}

/// Controlled gate `diag(I, i·T″(0))` built from the literal two-level matrix.
pub fn literal_controlled(control_phase: bool) -> Dense {
    let t = literal_twolevel(1.0, 0.0);
    let ph = if control_phase { I } else { c(1.0, 0.0) };
    let mut m = identity(4);
    for r in 0..2 {
        for k in 0..2 {
            m[2 + r][2 + k] = ph * t[r][k];
        }
    }
    m
}

/// Oracle matrix of one circuit gate, computed from the table's bookkeeping
/// (addresses, drive parameters) but none of its gate algebra.
pub fn oracle_gate(table: &ParameterTable, gate: usize, theta: &[f64], binding: &EncodingBinding) -> Dense {
    let addr = table.gates()[gate];
    let n = table.spec().n_qubits;
    match addr.kind {
        SlotKind::Controlled => embed_2q_adjacent(&literal_controlled(table.options().control_phase), addr.qubit, n),
        kind => {
            let m = match table.drive(gate, theta, binding) {
                Some(p) => {
                    // laser off: Δ_k cancels from every entry
                    let dk = if p.omega == 0.0 { 1.0 } else { p.delta_k - p.delta_laser };
                    if kind == SlotKind::Rotation {
                        literal_rotation(p.gamma, p.omega, p.delta_k, dk)
                    } else {
                        literal_phase(p.gamma, p.omega, p.delta_k, dk)
                    }
                }
                None => {
                    let a = table.angle(gate, theta, binding).unwrap();
                    if kind == SlotKind::Rotation {
                        rx(a)
                    } else {
                        [[C64::from_polar(1.0, a), c(0.0, 0.0)], [c(0.0, 0.0), c(1.0, 0.0)]]
                    }
                }
            };
            embed_1q(&m, addr.qubit, n)
        }
    }
}

/// Dense-matrix forward pass; returns the final state.
pub fn oracle_state(table: &ParameterTable, theta: &[f64], binding: &EncodingBinding) -> Vec<C64> {
    let n = table.spec().n_qubits;
    let mut psi = vec![c(0.0, 0.0); 1 << n];
    psi[0] = c(1.0, 0.0);
    for g in 0..table.gates().len() {
        if table.gates()[g].kind == SlotKind::Controlled && !table.options().entanglers {
            continue;
        }
        psi = matvec(&oracle_gate(table, g, theta, binding), &psi);
    }
    psi
}

/// `P(last qubit = 1)` from the dense oracle.
pub fn oracle_forward(table: &ParameterTable, theta: &[f64], binding: &EncodingBinding) -> f64 {
    let psi = oracle_state(table, theta, binding);
    let norm: f64 = psi.iter().map(|a| a.norm_sqr()).sum();
    let ones: f64 = psi.iter().enumerate().filter(|(i, _)| i & 1 == 1).map(|(_, a)| a.norm_sqr()).sum();
    ones / norm
}

/// `½ Σ (ω·P + b − f)²` through the oracle forward.
pub fn oracle_cost(
    table: &ParameterTable,
    theta: &[f64],
    inputs: &[Vec<f64>],
    teachers: &[f64],
    w: f64,
    b: f64,
) -> f64 {
    inputs
        .iter()
        .zip(teachers)
        .map(|(x, f)| {
            let p = oracle_forward(table, theta, &table.encode(x).unwrap());
            0.5 * (w * p + b - f).powi(2)
        })
        .sum()
}

/// Central-difference gradient of [`oracle_cost`].
pub fn oracle_cost_gradient(
    table: &ParameterTable,
    theta: &[f64],
    inputs: &[Vec<f64>],
    teachers: &[f64],
    w: f64,
    b: f64,
    h: f64,
) -> Vec<f64> {
    (0..theta.len())
        .map(|i| {
            let mut t = theta.to_vec();
            t[i] += h;
            let up = oracle_cost(table, &t, inputs, teachers, w, b);
            t[i] -= 2.0 * h;
            let down = oracle_cost(table, &t, inputs, teachers, w, b);
            (up - down) / (2.0 * h)
        })
        .collect()
}
