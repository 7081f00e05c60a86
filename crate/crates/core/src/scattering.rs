// Copyright 2026 Chiralnet Contributors
// SPDX-License-Identifier: Apache-2.0

//! Single-photon transfer matrices of emitters chirally coupled to 1D
//! waveguides.
//!
//! All rates and detunings are dimensionless multiples of a reference
//! coupling rate `Γ` (so `Γ = 1` is the natural unit). A matrix maps the
//! incoming channel amplitudes `f(a⁻)` to the outgoing ones `f(a⁺)`.
//!
//! Atomic decay into non-guided modes enters through the non-hermitian
//! substitution `δ_k → δ_k − iγ/2` on every bare photon detuning. The
//! two-photon detuning `Δ_k = δ_k − Δ` is always formed from the real
//! `δ_k` and never shifted.

use crate::error::{Error, Result};
use crate::linalg::{CMatrix, C64, I, ONE};

/// Anything below this modulus is treated as a pole of the transfer matrix.
const POLE_EPS: f64 = 1e-300;

/// Physical parameters of one scattering event.
#[derive(Debug, Clone, PartialEq)]
pub struct EmitterSpec {
    gammas: Vec<f64>,
    /// Rabi frequency `Ω` of the driving laser.
    pub omega: f64,
    /// Photon detuning `δ_k` from the coupled transition.
    pub delta_k: f64,
    /// Laser detuning `Δ`.
    pub delta_laser: f64,
    gamma_decay: f64,
}

impl EmitterSpec {
    pub fn new(gammas: Vec<f64>, omega: f64, delta_k: f64, delta_laser: f64) -> Result<Self> {
        if gammas.is_empty() {
            return Err(Error::InvalidParameter("an emitter needs at least one channel".into()));
        }
        if let Some(g) = gammas.iter().find(|g| !(g.is_finite() && **g >= 0.0)) {
            return Err(Error::InvalidParameter(format!("channel coupling must be finite and >= 0, got {g}")));
        }
        for (name, v) in [("omega", omega), ("delta_k", delta_k), ("delta_laser", delta_laser)] {
            if !v.is_finite() {
                return Err(Error::InvalidParameter(format!("{name} must be finite, got {v}")));
            }
        }
        Ok(Self { gammas, omega, delta_k, delta_laser, gamma_decay: 0.0 })
    }

    /// Two equal channels, the type-a rotation geometry.
    pub fn two_channel(gamma: f64, omega: f64, delta_k: f64, delta_laser: f64) -> Result<Self> {
        Self::new(vec![gamma, gamma], omega, delta_k, delta_laser)
    }

    /// One channel, the type-b phase geometry.
    pub fn one_channel(gamma: f64, omega: f64, delta_k: f64, delta_laser: f64) -> Result<Self> {
        Self::new(vec![gamma], omega, delta_k, delta_laser)
    }

    pub fn with_decay(mut self, gamma_decay: f64) -> Result<Self> {
        if !(gamma_decay.is_finite() && gamma_decay >= 0.0) {
            return Err(Error::InvalidParameter(format!("decay rate must be finite and >= 0, got {gamma_decay}")));
        }
        self.gamma_decay = gamma_decay;
        Ok(self)
    }

    pub fn gammas(&self) -> &[f64] {
        &self.gammas
    }

    pub fn gamma_decay(&self) -> f64 {
        self.gamma_decay
    }

    pub fn total_gamma(&self) -> f64 {
        self.gammas.iter().sum()
    }

    /// `Δ_k = δ_k − Δ`.
    pub fn two_photon_detuning(&self) -> f64 {
        self.delta_k - self.delta_laser
    }

    /// `δ_k − iγ/2`.
    pub fn lossy_detuning(&self) -> C64 {
        decayed(self.delta_k, self.gamma_decay)
    }

    fn laser_on(&self) -> bool {
        self.omega != 0.0
    }
}

/// A transfer matrix together with the names of its channels.
#[derive(Debug, Clone, PartialEq)]
pub struct ScatterMatrix {
    pub entries: CMatrix,
    pub channel_labels: Vec<String>,
}

impl ScatterMatrix {
    fn new(entries: CMatrix, labels: &[&str]) -> Self {
        debug_assert_eq!(entries.dim(), labels.len());
        Self { entries, channel_labels: labels.iter().map(|s| s.to_string()).collect() }
    }

    pub fn dim(&self) -> usize {
        self.entries.dim()
    }

    pub fn get(&self, row: usize, col: usize) -> C64 {
        self.entries[(row, col)]
    }
}

fn decayed(delta: f64, gamma_decay: f64) -> C64 {
    C64::new(delta, -0.5 * gamma_decay)
}

fn checked_inv(den: C64, what: &str) -> Result<C64> {
    if !(den.norm() > POLE_EPS) || !den.re.is_finite() || !den.im.is_finite() {
        return Err(Error::Degenerate(format!("{what}: transfer-matrix denominator vanishes")));
    }
    Ok(den.inv())
}

fn channel_labels(n: usize) -> Vec<String> {
    match n {
        1 => vec!["guide".into()],
        2 => vec!["guide_1".into(), "guide_2".into()],
        4 => vec!["right_1".into(), "right_2".into(), "left_1".into(), "left_2".into()],
        _ => (1..=n).map(|c| format!("channel_{c}")).collect(),
    }
}

/// Λ-atom coupled to two waveguides with equal strength `Γ`.
///
/// Diagonal `(δ_kΔ_k − Ω²)/(Δ_k(δ_k − iΓ) − Ω²)`, off-diagonal
/// `iΔ_kΓ/(Δ_k(δ_k − iΓ) − Ω²)`. With `Ω = 0` the laser is off and `Δ_k`
/// cancels, leaving the bare two-level form also at `Δ_k = 0`.
pub fn lambda_transfer_2ch(spec: &EmitterSpec) -> Result<ScatterMatrix> {
    let g = match spec.gammas() {
        [a, b] if a == b => *a,
        other => {
            return Err(Error::InvalidParameter(format!(
                "two-channel rotation needs two equal couplings, got {other:?}"
            )))
        }
    };
    let d = spec.lossy_detuning();
    let (diag, off) = if spec.laser_on() {
        let dk = spec.two_photon_detuning();
        let om2 = spec.omega * spec.omega;
        let inv = checked_inv(dk * (d - I * g) - om2, "lambda_transfer_2ch")?;
        ((d * dk - om2) * inv, I * dk * g * inv)
    } else {
        let inv = checked_inv(d - I * g, "lambda_transfer_2ch")?;
        (d * inv, I * g * inv)
    };
    Ok(ScatterMatrix::new(CMatrix::from_rows(&[[diag, off], [off, diag]]), &["guide_1", "guide_2"]))
}

/// Phase factor picked up by a photon in the single coupled waveguide,
/// `(Δ_k(δ_k + iΓ/2) − Ω²)/(Δ_k(δ_k − iΓ/2) − Ω²)`.
pub fn lambda_phase_1ch(spec: &EmitterSpec) -> Result<C64> {
    let g = match spec.gammas() {
        [a] => *a,
        other => {
            return Err(Error::InvalidParameter(format!(
                "single-channel phase needs exactly one coupling, got {other:?}"
            )))
        }
    };
    let d = spec.lossy_detuning();
    let half = 0.5 * g;
    if spec.laser_on() {
        let dk = spec.two_photon_detuning();
        let om2 = spec.omega * spec.omega;
        let inv = checked_inv(dk * (d - I * half) - om2, "lambda_phase_1ch")?;
        Ok((dk * (d + I * half) - om2) * inv)
    } else {
        let inv = checked_inv(d - I * half, "lambda_phase_1ch")?;
        Ok((d + I * half) * inv)
    }
}

/// Unified constructor for a Λ-atom coupled to any number of channels.
///
/// `T_cc′ = δ_cc′ + i√(Γ_cΓ_c′)/(δ_eff − iΣΓ/2)` with the dressed detuning
/// `δ_eff = δ̃_k − Ω²/Δ_k`. The laser-on branch is evaluated multiplied
/// through by `Δ_k`, which is regular at `Δ_k = 0` (the matrix becomes the
/// identity there). Channel order for four channels is
/// `(right₁, right₂, left₁, left₂)`.
pub fn multichannel_transfer(spec: &EmitterSpec) -> Result<ScatterMatrix> {
    let gammas = spec.gammas();
    let n = gammas.len();
    let d = spec.lossy_detuning();
    let half_total = 0.5 * spec.total_gamma();
    let (scale, inv) = if spec.laser_on() {
        let dk = spec.two_photon_detuning();
        let om2 = spec.omega * spec.omega;
        (dk, checked_inv(dk * (d - I * half_total) - om2, "multichannel_transfer")?)
    } else {
        (1.0, checked_inv(d - I * half_total, "multichannel_transfer")?)
    };
    let entries = CMatrix::from_fn(n, |r, c| {
        let coupling = I * scale * (gammas[r] * gammas[c]).sqrt() * inv;
        if r == c {
            ONE + coupling
        } else {
            coupling
        }
    });
    Ok(ScatterMatrix { entries, channel_labels: channel_labels(n) })
}

/// Frequency-converter stage of the five-level emitter.
///
/// Maps the unconverted and converted photon amplitudes. The off-diagonal
/// entry is the conversion amplitude, `|T_01|²` the conversion efficiency.
/// Both excited levels decay at the same rate `gamma_decay`.
pub fn conversion_transfer(
    gamma: f64,
    omega: f64,
    delta_k: f64,
    delta_k_conv: f64,
    gamma_decay: f64,
) -> Result<ScatterMatrix> {
    for (name, v) in [("gamma", gamma), ("omega", omega), ("delta_k", delta_k), ("delta_k_conv", delta_k_conv)] {
        if !v.is_finite() {
            return Err(Error::InvalidParameter(format!("{name} must be finite, got {v}")));
        }
    }
    if gamma < 0.0 || !(gamma_decay.is_finite() && gamma_decay >= 0.0) {
        return Err(Error::InvalidParameter("coupling and decay rates must be >= 0".into()));
    }
    let d1 = decayed(delta_k, gamma_decay);
    let d2 = decayed(delta_k_conv, gamma_decay);
    let h = 0.5 * gamma;
    let core = d1 * d2 - omega * omega;
    let inv = checked_inv(core - I * h * d1 - I * h * d2 - h * h, "conversion_transfer")?;
    let t00 = (core - I * h * d1 + I * h * d2 + h * h) * inv;
    let t11 = (core + I * h * d1 - I * h * d2 + h * h) * inv;
    let off = -I * gamma * omega * inv;
    Ok(ScatterMatrix::new(CMatrix::from_rows(&[[t00, off], [off, t11]]), &["unconverted", "converted"]))
}

/// Conversion efficiency `P_conv = |T_01|²` of [`conversion_transfer`].
pub fn conversion_probability(m: &ScatterMatrix) -> f64 {
    m.get(0, 1).norm_sqr()
}

/// Two-level emitter bridging two waveguides (laser off):
/// `δ″/(δ″ − iΓ)·I + iΓ/(δ″ − iΓ)·X`.
pub fn twolevel_transfer(gamma: f64, delta: f64, gamma_decay: f64) -> Result<ScatterMatrix> {
    if !(gamma.is_finite() && gamma >= 0.0 && delta.is_finite() && gamma_decay.is_finite() && gamma_decay >= 0.0) {
        return Err(Error::InvalidParameter("two-level emitter needs finite, non-negative rates".into()));
    }
    let d = decayed(delta, gamma_decay);
    let inv = checked_inv(d - I * gamma, "twolevel_transfer")?;
    let diag = d * inv;
    let off = I * gamma * inv;
    Ok(ScatterMatrix::new(CMatrix::from_rows(&[[diag, off], [off, diag]]), &["guide_1", "guide_2"]))
}
