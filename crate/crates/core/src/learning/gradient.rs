// Copyright 2026 Chiralnet Contributors
// SPDX-License-Identifier: Apache-2.0

//! Parameter-shift gradients of the measured probability.
//!
//! For a rotation or phase gate the measurement is a first-harmonic
//! function `a + b·cos θ + c·sin θ` of the gate angle, so
//! `∂P/∂θ = [P(θ + s) − P(θ − s)] / (2 sin s)` holds exactly for any
//! `s ∈ (0, π)`. The global phase separating the physical matrix from its
//! angle form cancels in `P`, which is what allows shifting in angle space.
//! Derivatives with respect to the laser parameters follow from the chain
//! rule through the closed-form `∂θ/∂Ω`, `∂θ/∂Δ`.

use crate::circuit::{EncodingBinding, ParamName, ParameterTable, SlotKind};
use crate::error::{Error, Result};
use crate::gates::{self, AngleGradient};
use crate::linalg::{CMatrix, C64, ZERO};
use crate::simulator::{self, marginal_one};

pub(crate) fn check_shift(s: f64) -> Result<()> {
    if !(s > 0.0 && s < std::f64::consts::PI) || s.sin().abs() < 1e-12 {
        return Err(Error::Config(format!("parameter shift must lie in (0, π), got {s}")));
    }
    Ok(())
}

fn check_shiftable(table: &ParameterTable, gate: usize) -> Result<()> {
    match table.gates().get(gate) {
        None => Err(Error::InvalidParameter(format!("gate index {gate} out of range"))),
        Some(a) if a.kind == SlotKind::Controlled => Err(Error::InvalidParameter(format!("{a} has no angle to shift"))),
        Some(_) => Ok(()),
    }
}

/// `∂P/∂θ` at gate `gate` from two full forward passes.
pub fn shift_gradient(
    table: &ParameterTable,
    theta: &[f64],
    binding: &EncodingBinding,
    gate: usize,
    s: f64,
) -> Result<f64> {
    check_shift(s)?;
    check_shiftable(table, gate)?;
    let angle = table.angle(gate, theta, binding)?;
    let q = table.spec().n_qubits;
    let plus = table.angle_matrix(gate, angle + s);
    let minus = table.angle_matrix(gate, angle - s);
    let p_plus = table.evolve(theta, binding, Some((gate, &plus)))?.prob_one(q)?;
    let p_minus = table.evolve(theta, binding, Some((gate, &minus)))?.prob_one(q)?;
    Ok((p_plus - p_minus) / (2.0 * s.sin()))
}

/// `∂angle/∂p` for every coordinate kind.
fn angle_jacobian(
    table: &ParameterTable,
    gate: usize,
    theta: &[f64],
    binding: &EncodingBinding,
) -> Result<AngleGradient> {
    let addr = table.gates()[gate];
    let Some(p) = table.drive(gate, theta, binding) else {
        return Ok(AngleGradient { d_omega: 0.0, d_delta_laser: 0.0 });
    };
    match addr.kind {
        SlotKind::Phase => gates::dphi_dparams(&p),
        _ => gates::dtheta_dparams(&p),
    }
    .map_err(|e| e.at_gate(addr))
}

/// Raw Θ coordinate behind the Rabi frequency, for the `|Ω|` sign.
fn omega_sign(table: &ParameterTable, gate: usize, theta: &[f64]) -> f64 {
    table.theta_refs().iter().position(|r| r.gate == gate && r.name == ParamName::Omega).map_or(1.0, |i| {
        if theta[i] < 0.0 {
            -1.0
        } else {
            1.0
        }
    })
}

/// `(∂P/∂Ω, ∂P/∂Δ)` at a physically parameterized gate.
pub fn physical_gradient(
    table: &ParameterTable,
    theta: &[f64],
    binding: &EncodingBinding,
    gate: usize,
    s: f64,
) -> Result<AngleGradient> {
    check_shiftable(table, gate)?;
    if table.drive(gate, theta, binding).is_none() {
        return Err(Error::InvalidParameter(format!("{} is angle-parameterized", table.gates()[gate])));
    }
    let d_angle = shift_gradient(table, theta, binding, gate, s)?;
    let jac = angle_jacobian(table, gate, theta, binding)?;
    Ok(AngleGradient {
        d_omega: d_angle * jac.d_omega * omega_sign(table, gate, theta),
        d_delta_laser: d_angle * jac.d_delta_laser,
    })
}

/// How the shifted measurements are evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ShiftStrategy {
    /// Two complete forward passes per shifted gate.
    Direct,
    /// One forward pass plus a backward sweep of the `|1⟩`-subspace basis
    /// bras; each shifted measurement is then a local update.
    Cached,
}

impl ShiftStrategy {
    /// Picks the cheaper strategy; the cached sweep carries `2^{Q−1}` rows.
    pub fn auto(table: &ParameterTable) -> Self {
        let rows = 1usize << (table.spec().n_qubits - 1);
        let shifted = (0..table.gates().len()).filter(|&g| table.has_trainable(g)).count();
        if rows < 2 * shifted.max(1) {
            ShiftStrategy::Cached
        } else {
            ShiftStrategy::Direct
        }
    }
}

/// Measured probability and `∂P/∂angle` of every gate carrying a trainable
/// parameter (zero elsewhere).
pub fn angle_gradients(
    table: &ParameterTable,
    theta: &[f64],
    binding: &EncodingBinding,
    s: f64,
    strategy: ShiftStrategy,
) -> Result<(f64, Vec<f64>)> {
    check_shift(s)?;
    match strategy {
        ShiftStrategy::Direct => {
            let p = table.forward(theta, binding)?;
            let mut d = vec![0.0; table.gates().len()];
            for (gate, dg) in d.iter_mut().enumerate() {
                if table.has_trainable(gate) {
                    *dg = shift_gradient(table, theta, binding, gate, s)?;
                }
            }
            Ok((p, d))
        }
        ShiftStrategy::Cached => cached_angle_gradients(table, theta, binding, s),
    }
}

fn cached_angle_gradients(
    table: &ParameterTable,
    theta: &[f64],
    binding: &EncodingBinding,
    s: f64,
) -> Result<(f64, Vec<f64>)> {
    let q = table.spec().n_qubits;
    let dim = 1usize << q;
    let mats = table.bind(theta, binding)?;
    let n_gates = mats.len();

    // states[g] is the state entering gate g.
    let mut states: Vec<Vec<C64>> = Vec::with_capacity(n_gates + 1);
    let mut amps = vec![ZERO; dim];
    amps[0] = C64::new(1.0, 0.0);
    for (g, m) in mats.iter().enumerate() {
        states.push(amps.clone());
        if table.is_active(g) {
            table.apply_gate(&mut amps, g, m);
        }
    }
    let norm: f64 = amps.iter().map(C64::norm_sqr).sum();
    if !(norm > 0.0) {
        return Err(Error::ZeroNorm);
    }
    let p = marginal_one(&amps, q, q) / norm;

    // rows[b] = U_after† |b⟩ for every basis state with the read-out qubit set.
    let mut rows: Vec<Vec<C64>> = (0..dim)
        .filter(|i| i & simulator::qubit_mask(q, q) != 0)
        .map(|i| {
            let mut e = vec![ZERO; dim];
            e[i] = C64::new(1.0, 0.0);
            e
        })
        .collect();

    let two_sin = 2.0 * s.sin();
    let mut d = vec![0.0; n_gates];
    let mut shifted = vec![ZERO; dim];
    for g in (0..n_gates).rev() {
        if !table.is_active(g) {
            continue;
        }
        if table.has_trainable(g) {
            let angle = table.angle(g, theta, binding)?;
            let mut m = [0.0; 2];
            for (k, a) in [angle + s, angle - s].into_iter().enumerate() {
                shifted.copy_from_slice(&states[g]);
                table.apply_gate(&mut shifted, g, &table.angle_matrix(g, a));
                let n: f64 = shifted.iter().map(C64::norm_sqr).sum();
                let overlap: f64 = rows
                    .iter()
                    .map(|r| r.iter().zip(&shifted).map(|(x, y)| x.conj() * y).sum::<C64>().norm_sqr())
                    .sum();
                m[k] = overlap / n;
            }
            d[g] = (m[0] - m[1]) / two_sin;
        }
        let dagger: CMatrix = mats[g].dagger();
        for r in rows.iter_mut() {
            table.apply_gate(r, g, &dagger);
        }
    }
    Ok((p, d))
}

/// `∂P/∂Θ` for one input; the measured `P` comes along.
pub fn probability_gradient(
    table: &ParameterTable,
    theta: &[f64],
    binding: &EncodingBinding,
    s: f64,
    strategy: ShiftStrategy,
) -> Result<(f64, Vec<f64>)> {
    let (p, d_angle) = angle_gradients(table, theta, binding, s, strategy)?;
    let mut grad = Vec::with_capacity(theta.len());
    let mut jac_cache: Option<(usize, AngleGradient)> = None;
    for (i, r) in table.theta_refs().iter().enumerate() {
        let d = d_angle[r.gate];
        let value = match r.name {
            ParamName::Angle => d,
            name => {
                let jac = match jac_cache {
                    Some((g, j)) if g == r.gate => j,
                    _ => {
                        let j = angle_jacobian(table, r.gate, theta, binding)?;
                        jac_cache = Some((r.gate, j));
                        j
                    }
                };
                if name == ParamName::Omega {
                    let sign = if theta[i] < 0.0 { -1.0 } else { 1.0 };
                    d * jac.d_omega * sign
                } else {
                    d * jac.d_delta_laser
                }
            }
        };
        if !value.is_finite() {
            return Err(Error::NonFiniteGradient(format!("{} {:?}", table.gates()[r.gate], r.name)));
        }
        grad.push(value);
    }
    Ok((p, grad))
}
