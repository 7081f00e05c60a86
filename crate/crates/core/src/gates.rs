// Copyright 2026 Chiralnet Contributors
// SPDX-License-Identifier: Apache-2.0

//! Qubit gates realized by emitter–waveguide scattering.
//!
//! A dual-rail qubit is a photon in one of two waveguides (`|0⟩ = m₀`,
//! `|1⟩ = m₁`). A Λ-atom bridging both guides is an X rotation up to a
//! global phase, a Λ-atom on `m₀` alone is a Z rotation, and the five-level
//! emitter is a controlled `−X` with a `π/2` phase on the control photon.

use std::f64::consts::{PI, TAU};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{CMatrix, C64, I, ONE, ZERO};
use crate::scattering::{self, EmitterSpec};
use crate::simulator::StateVector;

/// Laser and photon parameters of a type-a or type-b emitter, in units of
/// the reference rate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DriveParams {
    pub gamma: f64,
    pub omega: f64,
    pub delta_k: f64,
    pub delta_laser: f64,
}

pub type RotationGateParams = DriveParams;
pub type PhaseGateParams = DriveParams;

impl DriveParams {
    pub fn new(gamma: f64, omega: f64, delta_k: f64, delta_laser: f64) -> Result<Self> {
        if !(gamma.is_finite() && gamma > 0.0) {
            return Err(Error::InvalidParameter(format!("coupling Γ must be > 0, got {gamma}")));
        }
        if !(omega.is_finite() && omega >= 0.0) {
            return Err(Error::InvalidParameter(format!("Rabi frequency Ω must be >= 0, got {omega}")));
        }
        if !(delta_k.is_finite() && delta_laser.is_finite()) {
            return Err(Error::InvalidParameter("detunings must be finite".into()));
        }
        Ok(Self { gamma, omega, delta_k, delta_laser })
    }

    /// Builds from the two-photon detuning `Δ_k` instead of the laser detuning.
    pub fn with_two_photon(gamma: f64, omega: f64, delta_k: f64, two_photon: f64) -> Result<Self> {
        Self::new(gamma, omega, delta_k, delta_k - two_photon)
    }

    pub fn two_photon_detuning(&self) -> f64 {
        self.delta_k - self.delta_laser
    }

    /// `(Δ_kδ_k − Ω², Δ_kΓ)`; with the laser off `Δ_k` is factored out.
    fn angle_terms(&self) -> (f64, f64) {
        if self.omega == 0.0 {
            (self.delta_k, self.gamma)
        } else {
            let dk = self.two_photon_detuning();
            (dk * self.delta_k - self.omega * self.omega, dk * self.gamma)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GateKind {
    Rotation,
    Phase,
    Controlled,
    AngleRotation,
    AnglePhase,
    ImperfectRotation,
    ImperfectControlled,
}

#[derive(Debug, Clone, PartialEq)]
pub struct QubitGate {
    pub matrix: CMatrix,
    pub kind: GateKind,
    pub unitary: bool,
}

impl QubitGate {
    fn new(matrix: CMatrix, kind: GateKind, unitary: bool) -> Self {
        Self { matrix, kind, unitary }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ControlledGateParams {
    /// Target-photon detuning `δ″` from the `|4⟩ ↔ |5⟩` transition.
    pub delta_target: f64,
    pub include_control_phase: bool,
}

impl Default for ControlledGateParams {
    fn default() -> Self {
        Self { delta_target: 0.0, include_control_phase: true }
    }
}

/// Gradient of a gate angle with respect to the laser parameters.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AngleGradient {
    pub d_omega: f64,
    pub d_delta_laser: f64,
}

/// Reduces an angle to `(−π, π]`.
pub fn wrap_angle(a: f64) -> f64 {
    PI - (PI - a).rem_euclid(TAU)
}

/// Type-a rotation gate.
pub fn rotation_gate(p: &RotationGateParams) -> Result<QubitGate> {
    let spec = EmitterSpec::two_channel(p.gamma, p.omega, p.delta_k, p.delta_laser)?;
    let m = scattering::lambda_transfer_2ch(&spec)?;
    Ok(QubitGate::new(m.entries, GateKind::Rotation, true))
}

/// Angle `θ` with `R = e^{−iθ/2}·R_X(θ)`.
pub fn angle_of_rotation(p: &RotationGateParams) -> Result<f64> {
    let (x, y) = p.angle_terms();
    if x == 0.0 && y == 0.0 {
        return Err(Error::Degenerate("rotation angle undefined at Ω = 0, Δ_k = 0".into()));
    }
    Ok(wrap_angle(2.0 * (-y).atan2(x)))
}

/// `R_X(θ) = cos(θ/2)·I − i·sin(θ/2)·X`.
pub fn rx(theta: f64) -> QubitGate {
    let c = C64::new((0.5 * theta).cos(), 0.0);
    let s = -I * (0.5 * theta).sin();
    QubitGate::new(CMatrix::from_rows(&[[c, s], [s, c]]), GateKind::AngleRotation, true)
}

/// Type-b phase gate `diag(p, 1)`.
pub fn phase_gate(p: &PhaseGateParams) -> Result<QubitGate> {
    let spec = EmitterSpec::one_channel(p.gamma, p.omega, p.delta_k, p.delta_laser)?;
    let phase = scattering::lambda_phase_1ch(&spec)?;
    Ok(QubitGate::new(CMatrix::diag(&[phase, ONE]), GateKind::Phase, true))
}

/// Angle `φ` with `diag(p, 1) = diag(e^{iφ}, 1)`.
pub fn angle_of_phase(p: &PhaseGateParams) -> Result<f64> {
    let (x, y) = p.angle_terms();
    if x == 0.0 && y == 0.0 {
        return Err(Error::Degenerate("phase angle undefined at Ω = 0, Δ_k = 0".into()));
    }
    Ok(wrap_angle(2.0 * (0.5 * y).atan2(x)))
}

/// `diag(e^{iφ}, 1)`.
pub fn phase_shift(phi: f64) -> QubitGate {
    QubitGate::new(CMatrix::diag(&[C64::from_polar(1.0, phi), ONE]), GateKind::AnglePhase, true)
}

/// `∂θ/∂Ω = −4ΩΔ_kΓ/D`, `∂θ/∂Δ = −2ΓΩ²/D`, `D = (Δ_kδ_k − Ω²)² + (Δ_kΓ)²`.
pub fn dtheta_dparams(p: &RotationGateParams) -> Result<AngleGradient> {
    let dk = p.two_photon_detuning();
    let om2 = p.omega * p.omega;
    let d = (dk * p.delta_k - om2).powi(2) + (dk * p.gamma).powi(2);
    if !(d > 0.0) {
        return Err(Error::Degenerate("rotation angle is not differentiable at Ω = 0, Δ_k = 0".into()));
    }
    Ok(AngleGradient { d_omega: -4.0 * p.omega * dk * p.gamma / d, d_delta_laser: -2.0 * p.gamma * om2 / d })
}

/// `∂φ/∂Ω = 2ΩΔ_kΓ/D′`, `∂φ/∂Δ = ΓΩ²/D′`, `D′ = (Δ_kδ_k − Ω²)² + (Δ_kΓ/2)²`.
pub fn dphi_dparams(p: &PhaseGateParams) -> Result<AngleGradient> {
    let dk = p.two_photon_detuning();
    let om2 = p.omega * p.omega;
    let d = (dk * p.delta_k - om2).powi(2) + (0.5 * dk * p.gamma).powi(2);
    if !(d > 0.0) {
        return Err(Error::Degenerate("phase angle is not differentiable at Ω = 0, Δ_k = 0".into()));
    }
    Ok(AngleGradient { d_omega: 2.0 * p.omega * dk * p.gamma / d, d_delta_laser: p.gamma * om2 / d })
}

fn block_controlled(lower: &CMatrix) -> CMatrix {
    let mut m = CMatrix::identity(4);
    for r in 0..2 {
        for c in 0..2 {
            m[(2 + r, 2 + c)] = lower[(r, c)];
        }
    }
    m
}

/// Type-c controlled gate in the `|control, target⟩` basis.
///
/// The lower block is `c·T″(δ″)` with `c = i` when the control phase is
/// kept; at `δ″ = 0` that is `−iX`.
pub fn controlled_gate(p: &ControlledGateParams) -> Result<QubitGate> {
    let target = scattering::twolevel_transfer(1.0, p.delta_target, 0.0)?;
    let phase = if p.include_control_phase { I } else { ONE };
    let lower = target.entries.scale(phase);
    Ok(QubitGate::new(block_controlled(&lower), GateKind::Controlled, true))
}

/// Probability leaking out of the right-moving qubit subspace, per input rail.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LossReport {
    /// Scattered into the left-moving channels.
    pub backscattered: [f64; 2],
    /// Lost to non-guided modes.
    pub decayed: [f64; 2],
}

impl LossReport {
    pub fn total(&self) -> [f64; 2] {
        [self.backscattered[0] + self.decayed[0], self.backscattered[1] + self.decayed[1]]
    }
}

/// `Γ_L` for a given chirality ratio `Γ_L/(Γ_R + Γ_L)`.
pub fn left_coupling(gamma_r: f64, chirality_ratio: f64) -> Result<f64> {
    if !(0.0..1.0).contains(&chirality_ratio) {
        return Err(Error::InvalidParameter(format!("chirality ratio must be in [0, 1), got {chirality_ratio}")));
    }
    Ok(gamma_r * chirality_ratio / (1.0 - chirality_ratio))
}

/// Type-a gate with left-mover coupling `gamma_l` and atomic decay.
///
/// `p.gamma` is the right-mover coupling `Γ_R` on both guides. The returned
/// gate is the right→right block of the four-channel matrix.
pub fn imperfect_rotation_gate(p: &RotationGateParams, gamma_l: f64, decay: f64) -> Result<(QubitGate, LossReport)> {
    let spec = EmitterSpec::new(vec![p.gamma, p.gamma, gamma_l, gamma_l], p.omega, p.delta_k, p.delta_laser)?
        .with_decay(decay)?;
    let full = scattering::multichannel_transfer(&spec)?.entries;
    let block = full.leading_block(2);
    let norms = full.column_norms_sqr();
    let mut report = LossReport { backscattered: [0.0; 2], decayed: [0.0; 2] };
    for c in 0..2 {
        report.backscattered[c] = full[(2, c)].norm_sqr() + full[(3, c)].norm_sqr();
        report.decayed[c] = (1.0 - norms[c]).max(0.0);
    }
    let lossless = gamma_l == 0.0 && decay == 0.0;
    Ok((QubitGate::new(block, GateKind::ImperfectRotation, lossless), report))
}

/// Type-c gate with imperfect chirality on the target stage and equal decay
/// `decay` on every excited level.
///
/// Model: the control stage is the resonant frequency converter (`Ω = Γ_R/2`)
/// with decay only; the target stage is the four-channel two-level emitter
/// `(Γ_R, Γ_R, Γ_L, Γ_L)` with decay, restricted to its right→right block.
pub fn imperfect_controlled_gate(
    p: &ControlledGateParams,
    gamma_r: f64,
    gamma_l: f64,
    decay: f64,
) -> Result<QubitGate> {
    let converter = scattering::conversion_transfer(gamma_r, 0.5 * gamma_r, 0.0, 0.0, decay)?;
    let mut control_amp = converter.get(0, 1);
    if !p.include_control_phase {
        // strip the ideal π/2
        control_amp *= -I;
    }
    let spec =
        EmitterSpec::new(vec![gamma_r, gamma_r, gamma_l, gamma_l], 0.0, p.delta_target, 0.0)?.with_decay(decay)?;
    let target = scattering::multichannel_transfer(&spec)?.entries.leading_block(2);
    let lossless = gamma_l == 0.0 && decay == 0.0;
    Ok(QubitGate::new(block_controlled(&target.scale(control_amp)), GateKind::ImperfectControlled, lossless))
}

/// `|⟨ideal|actual⟩|²` with `actual` left unnormalized, so lost flux counts
/// against the fidelity.
pub fn state_fidelity(ideal: &StateVector, actual: &StateVector) -> Result<f64> {
    Ok(ideal.inner(actual)?.norm_sqr())
}

/// Fidelity of the type-a gate for a photon injected into the first guide.
pub fn rotation_fidelity(p: &RotationGateParams, gamma_l: f64, decay: f64) -> Result<f64> {
    let input = [ONE, ZERO];
    let ideal = rotation_gate(p)?.matrix.mul_vec(&input);
    let (gate, _) = imperfect_rotation_gate(p, gamma_l, decay)?;
    let actual = gate.matrix.mul_vec(&input);
    state_fidelity(&StateVector::from_amplitudes(1, ideal)?, &StateVector::from_amplitudes(1, actual)?)
}

/// Fidelity of the type-c gate for control `|1⟩` and target `|0⟩`.
pub fn controlled_fidelity(p: &ControlledGateParams, gamma_r: f64, gamma_l: f64, decay: f64) -> Result<f64> {
    let input = StateVector::basis(2, 0b10)?;
    let ideal = controlled_gate(p)?.matrix.mul_vec(input.amplitudes());
    let actual = imperfect_controlled_gate(p, gamma_r, gamma_l, decay)?.matrix.mul_vec(input.amplitudes());
    state_fidelity(&StateVector::from_amplitudes(2, ideal)?, &StateVector::from_amplitudes(2, actual)?)
}
