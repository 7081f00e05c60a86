// Copyright 2026 Chiralnet Contributors
// SPDX-License-Identifier: Apache-2.0

//! The two-part learning circuit and its parameter bookkeeping.
//!
//! Part One has `L` layers; each layer applies `N` type-a rotations to every
//! qubit and then a nearest-neighbour chain of controlled gates. Part Two
//! has `L′` layers of (rotation, phase) per qubit followed by the same
//! chain. The input is written into the laser detunings of all Part-One
//! rotations and the probability of the last qubit reading `|1⟩` is the
//! model output.
//!
//! Every laser/photon parameter belongs to exactly one of three sets: the
//! fixed photon detunings `F`, the encoding slots, or the trainable vector
//! `Θ`. `Θ` is ordered by gate position, then `Ω` before `Δ` within a gate.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gates::{self, ControlledGateParams, DriveParams};
use crate::linalg::CMatrix;
use crate::simulator::{self, StateVector};

/// Reference coupling; all rates are measured in units of it.
pub const GAMMA: f64 = 1.0;
/// Fixed photon detunings are drawn from `[−F_RANGE, F_RANGE]`.
pub const F_RANGE: f64 = 2.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CircuitSpec {
    #[serde(rename = "Q")]
    pub n_qubits: usize,
    #[serde(rename = "L")]
    pub layers: usize,
    #[serde(rename = "N")]
    pub rotations: usize,
    #[serde(rename = "L_prime")]
    pub layers_two: usize,
}

impl CircuitSpec {
    pub fn new(n_qubits: usize, layers: usize, rotations: usize, layers_two: usize) -> Result<Self> {
        let spec = Self { n_qubits, layers, rotations, layers_two };
        spec.validate()?;
        Ok(spec)
    }

    /// `Q = 4, L = 4, N = 3, L′ = 8`, used for the regression tasks.
    pub fn regression() -> Self {
        Self { n_qubits: 4, layers: 4, rotations: 3, layers_two: 8 }
    }

    /// `Q = 4, L = 4, N = 6, L′ = 8`, used for the 2-D classification tasks.
    pub fn classification() -> Self {
        Self { n_qubits: 4, layers: 4, rotations: 6, layers_two: 8 }
    }

    pub fn validate(&self) -> Result<()> {
        if self.n_qubits == 0 || self.layers == 0 || self.rotations == 0 || self.layers_two == 0 {
            return Err(Error::Config(format!("circuit dimensions must all be >= 1, got {self:?}")));
        }
        if self.n_qubits > simulator::MAX_QUBITS {
            return Err(Error::Config(format!("at most {} qubits are supported", simulator::MAX_QUBITS)));
        }
        Ok(())
    }

    pub fn gate_count(&self) -> usize {
        let q = self.n_qubits;
        let chain = q - 1;
        self.layers * (q * self.rotations + chain) + self.layers_two * (2 * q + chain)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SlotKind {
    Rotation,
    Phase,
    Controlled,
}

/// Position of one gate, indexed `(h, j₁, j₂, j₃)`.
///
/// For controlled gates `qubit` is the control and `slot` the target.
/// Part-Two single-qubit gates use slot 1 for the rotation and slot 2 for
/// the phase.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GateAddress {
    pub part: u8,
    pub qubit: usize,
    pub slot: usize,
    pub layer: usize,
    pub kind: SlotKind,
}

impl fmt::Display for GateAddress {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            SlotKind::Rotation => write!(f, "R{}[q{},s{},l{}]", self.part, self.qubit, self.slot, self.layer),
            SlotKind::Phase => write!(f, "P{}[q{},s{},l{}]", self.part, self.qubit, self.slot, self.layer),
            SlotKind::Controlled => write!(f, "C{}[{}->{},l{}]", self.part, self.qubit, self.slot, self.layer),
        }
    }
}

/// Gate order of the circuit: single-qubit gates of a layer by ascending
/// qubit, then controlled gates `m → m+1` by ascending `m`.
pub fn build_circuit(spec: &CircuitSpec) -> Vec<GateAddress> {
    let q = spec.n_qubits;
    let mut gates = Vec::with_capacity(spec.gate_count());
    let chain = |gates: &mut Vec<GateAddress>, part: u8, layer: usize| {
        for m in 1..q {
            gates.push(GateAddress { part, qubit: m, slot: m + 1, layer, kind: SlotKind::Controlled });
        }
    };
    for layer in 1..=spec.layers {
        for qubit in 1..=q {
            for slot in 1..=spec.rotations {
                gates.push(GateAddress { part: 1, qubit, slot, layer, kind: SlotKind::Rotation });
            }
        }
        chain(&mut gates, 1, layer);
    }
    for layer in 1..=spec.layers_two {
        for qubit in 1..=q {
            gates.push(GateAddress { part: 2, qubit, slot: 1, layer, kind: SlotKind::Rotation });
            gates.push(GateAddress { part: 2, qubit, slot: 2, layer, kind: SlotKind::Phase });
        }
        chain(&mut gates, 2, layer);
    }
    gates
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ParamName {
    Omega,
    DeltaLaser,
    /// Gate driven directly by its rotation/phase angle.
    Angle,
}

/// Where a trainable coordinate of `Θ` lives.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParamRef {
    pub gate: usize,
    pub name: ParamName,
}

#[derive(Debug, Clone, Copy, PartialEq)]
enum Source {
    Theta(usize),
    Fixed(f64),
    Encoding(usize),
}

#[derive(Debug, Clone, Copy, PartialEq)]
enum Binding {
    Physical { delta_k: f64, omega: Source, laser: Source },
    Angle { delta_k: f64, theta: usize },
}

impl Binding {
    fn delta_k(&self) -> f64 {
        match *self {
            Binding::Physical { delta_k, .. } | Binding::Angle { delta_k, .. } => delta_k,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct CircuitOptions {
    /// Train the Part-One Rabi frequencies; when false they are frozen at
    /// their random initial values.
    pub train_part_one_omega: bool,
    /// Keep the `π/2` phase the type-c gate imprints on the control photon.
    pub control_phase: bool,
    /// Apply the controlled-gate chains. Turning them off leaves a product
    /// circuit.
    pub entanglers: bool,
}

impl Default for CircuitOptions {
    fn default() -> Self {
        Self { train_part_one_omega: true, control_phase: true, entanglers: true }
    }
}

/// Laser detunings bound to the Part-One rotations for one input.
#[derive(Debug, Clone, PartialEq)]
pub struct EncodingBinding(pub Vec<f64>);

/// `g = ω·P + b`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OutputMap {
    pub weight: f64,
    pub bias: f64,
}

impl OutputMap {
    pub fn apply(&self, p: f64) -> f64 {
        output_fn(p, self.weight, self.bias)
    }
}

pub fn output_fn(p: f64, weight: f64, bias: f64) -> f64 {
    weight * p + bias
}

#[derive(Debug, Clone, PartialEq)]
pub struct ParameterTable {
    seed: u64,
    spec: CircuitSpec,
    options: CircuitOptions,
    gates: Vec<GateAddress>,
    bindings: Vec<Option<Binding>>,
    /// Slot `j₂` of every encoding position, in gate order.
    encoding_slots: Vec<usize>,
    theta: Vec<f64>,
    theta_refs: Vec<ParamRef>,
    controlled: CMatrix,
}

/// Draws `F` and the initial `Θ` for `spec`.
///
/// `δ_k ~ U[−2, 2]` per single-qubit gate, then in gate order
/// `Ω ~ U[0, 2]` and (Part Two) `Δ ~ U[−2, 2]`.
pub fn init_parameters(spec: &CircuitSpec, seed: u64, options: CircuitOptions) -> Result<ParameterTable> {
    spec.validate()?;
    let gates = build_circuit(spec);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let detunings: Vec<Option<f64>> =
        gates.iter().map(|g| (g.kind != SlotKind::Controlled).then(|| rng.gen_range(-F_RANGE..=F_RANGE))).collect();

    let mut theta = Vec::new();
    let mut theta_refs = Vec::new();
    let mut encoding_slots = Vec::new();
    let mut bindings = Vec::with_capacity(gates.len());
    for (idx, (addr, delta_k)) in gates.iter().zip(detunings).enumerate() {
        let Some(delta_k) = delta_k else {
            bindings.push(None);
            continue;
        };
        let omega0 = rng.gen_range(0.0..=2.0);
        let omega = if addr.part == 2 || options.train_part_one_omega {
            theta_refs.push(ParamRef { gate: idx, name: ParamName::Omega });
            theta.push(omega0);
            Source::Theta(theta.len() - 1)
        } else {
            Source::Fixed(omega0)
        };
        let laser = if addr.part == 1 {
            encoding_slots.push(addr.slot);
            Source::Encoding(encoding_slots.len() - 1)
        } else {
            theta_refs.push(ParamRef { gate: idx, name: ParamName::DeltaLaser });
            theta.push(rng.gen_range(-2.0..=2.0));
            Source::Theta(theta.len() - 1)
        };
        bindings.push(Some(Binding::Physical { delta_k, omega, laser }));
    }
    let controlled = controlled_matrix(options)?;
    Ok(ParameterTable { seed, spec: *spec, options, gates, bindings, encoding_slots, theta, theta_refs, controlled })
}

fn controlled_matrix(options: CircuitOptions) -> Result<CMatrix> {
    let p = ControlledGateParams { delta_target: 0.0, include_control_phase: options.control_phase };
    Ok(gates::controlled_gate(&p)?.matrix)
}

/// `Δ^{(1)} = x` on every Part-One rotation.
pub fn encode_1d(table: &ParameterTable, x: f64) -> EncodingBinding {
    EncodingBinding(vec![x; table.encoding_slots.len()])
}

/// Odd slots `j₂` take `x1`, even slots take `x2`.
pub fn encode_2d(table: &ParameterTable, x1: f64, x2: f64) -> Result<EncodingBinding> {
    if !table.spec.rotations.is_multiple_of(2) {
        return Err(Error::Config(format!(
            "two-feature encoding needs an even number of rotations per layer, got N = {}",
            table.spec.rotations
        )));
    }
    Ok(EncodingBinding(table.encoding_slots.iter().map(|&j2| if j2 % 2 == 1 { x1 } else { x2 }).collect()))
}

impl ParameterTable {
    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn spec(&self) -> &CircuitSpec {
        &self.spec
    }

    pub fn options(&self) -> CircuitOptions {
        self.options
    }

    pub fn gates(&self) -> &[GateAddress] {
        &self.gates
    }

    pub fn theta(&self) -> &[f64] {
        &self.theta
    }

    pub fn theta_refs(&self) -> &[ParamRef] {
        &self.theta_refs
    }

    pub fn n_trainable(&self) -> usize {
        self.theta.len()
    }

    pub fn n_encoding_slots(&self) -> usize {
        self.encoding_slots.len()
    }

    pub fn set_theta(&mut self, theta: Vec<f64>) -> Result<()> {
        self.check_theta(&theta)?;
        self.theta = theta;
        Ok(())
    }

    /// Same table with the controlled-gate chains switched on or off.
    pub fn with_entanglers(&self, on: bool) -> Self {
        let mut t = self.clone();
        t.options.entanglers = on;
        t
    }

    /// Fixed photon detuning of a single-qubit gate.
    pub fn photon_detuning(&self, gate: usize) -> Option<f64> {
        self.bindings.get(gate).copied().flatten().map(|b| b.delta_k())
    }

    pub fn address_of(&self, r: &ParamRef) -> GateAddress {
        self.gates[r.gate]
    }

    /// Binds an input of dimension 1 or 2.
    pub fn encode(&self, input: &[f64]) -> Result<EncodingBinding> {
        if let Some(x) = input.iter().find(|x| !x.is_finite()) {
            return Err(Error::InvalidParameter(format!("input must be finite, got {x}")));
        }
        match *input {
            [x] => Ok(encode_1d(self, x)),
            [x1, x2] => encode_2d(self, x1, x2),
            _ => Err(Error::InvalidParameter(format!("inputs must have 1 or 2 features, got {}", input.len()))),
        }
    }

    fn check_theta(&self, theta: &[f64]) -> Result<()> {
        if theta.len() != self.theta.len() {
            return Err(Error::DimensionMismatch { expected: self.theta.len(), got: theta.len() });
        }
        Ok(())
    }

    fn check_binding(&self, binding: &EncodingBinding) -> Result<()> {
        if binding.0.len() != self.encoding_slots.len() {
            return Err(Error::DimensionMismatch { expected: self.encoding_slots.len(), got: binding.0.len() });
        }
        Ok(())
    }

    fn value(&self, src: Source, theta: &[f64], binding: &EncodingBinding) -> f64 {
        match src {
            Source::Theta(i) => theta[i],
            Source::Fixed(v) => v,
            Source::Encoding(i) => binding.0[i],
        }
    }

    /// Physical drive of a physically parameterized single-qubit gate.
    ///
    /// The Rabi frequency is `|Ω|`: the gate depends on `Ω²` only, so a
    /// coordinate of `Θ` that crosses zero stays physical.
    pub fn drive(&self, gate: usize, theta: &[f64], binding: &EncodingBinding) -> Option<DriveParams> {
        match self.bindings.get(gate).copied().flatten()? {
            Binding::Physical { delta_k, omega, laser } => Some(DriveParams {
                gamma: GAMMA,
                omega: self.value(omega, theta, binding).abs(),
                delta_k,
                delta_laser: self.value(laser, theta, binding),
            }),
            Binding::Angle { .. } => None,
        }
    }

    /// Rotation angle `θ` or phase angle `φ` of a single-qubit gate.
    pub fn angle(&self, gate: usize, theta: &[f64], binding: &EncodingBinding) -> Result<f64> {
        let addr = self.gates[gate];
        match self.bindings[gate] {
            None => Err(Error::InvalidParameter(format!("{addr} has no angle"))),
            Some(Binding::Angle { theta: i, .. }) => Ok(theta[i]),
            Some(Binding::Physical { .. }) => {
                let p = self.drive(gate, theta, binding).expect("physical binding");
                let a = match addr.kind {
                    SlotKind::Phase => gates::angle_of_phase(&p),
                    _ => gates::angle_of_rotation(&p),
                };
                a.map_err(|e| e.at_gate(addr))
            }
        }
    }

    /// Angle-form matrix `R_X(a)` or `diag(e^{ia}, 1)` for the gate's family.
    pub fn angle_matrix(&self, gate: usize, angle: f64) -> CMatrix {
        match self.gates[gate].kind {
            SlotKind::Phase => gates::phase_shift(angle).matrix,
            _ => gates::rx(angle).matrix,
        }
    }

    /// Concrete matrix of gate `gate`.
    pub fn gate_matrix(&self, gate: usize, theta: &[f64], binding: &EncodingBinding) -> Result<CMatrix> {
        let addr = self.gates[gate];
        match self.bindings[gate] {
            None => Ok(self.controlled.clone()),
            Some(Binding::Angle { theta: i, .. }) => Ok(self.angle_matrix(gate, theta[i])),
            Some(Binding::Physical { .. }) => {
                let p = self.drive(gate, theta, binding).expect("physical binding");
                let g = match addr.kind {
                    SlotKind::Phase => gates::phase_gate(&p),
                    _ => gates::rotation_gate(&p),
                };
                g.map(|g| g.matrix).map_err(|e| e.at_gate(addr))
            }
        }
    }

    /// Whether gate `gate` participates in the evolution.
    pub(crate) fn is_active(&self, gate: usize) -> bool {
        self.options.entanglers || self.gates[gate].kind != SlotKind::Controlled
    }

    pub(crate) fn has_trainable(&self, gate: usize) -> bool {
        match self.bindings[gate] {
            Some(Binding::Angle { .. }) => true,
            Some(Binding::Physical { omega, laser, .. }) => {
                matches!(omega, Source::Theta(_)) || matches!(laser, Source::Theta(_))
            }
            None => false,
        }
    }

    pub(crate) fn apply_gate(&self, amps: &mut [crate::linalg::C64], gate: usize, matrix: &CMatrix) {
        let addr = self.gates[gate];
        let q = self.spec.n_qubits;
        match addr.kind {
            SlotKind::Controlled => simulator::apply_2q_raw(amps, q, matrix, addr.qubit, addr.slot),
            _ => simulator::apply_1q_raw(amps, q, matrix, addr.qubit),
        }
    }

    /// All gate matrices for one input, in circuit order.
    pub fn bind(&self, theta: &[f64], binding: &EncodingBinding) -> Result<Vec<CMatrix>> {
        self.check_theta(theta)?;
        self.check_binding(binding)?;
        (0..self.gates.len()).map(|g| self.gate_matrix(g, theta, binding)).collect()
    }

    /// Runs the circuit from `|0…0⟩`, optionally replacing one gate's matrix.
    pub fn evolve(
        &self,
        theta: &[f64],
        binding: &EncodingBinding,
        replace: Option<(usize, &CMatrix)>,
    ) -> Result<StateVector> {
        let mats = self.bind(theta, binding)?;
        let mut amps = StateVector::zero_state(self.spec.n_qubits)?.into_amplitudes();
        for (g, m) in mats.iter().enumerate() {
            if !self.is_active(g) {
                continue;
            }
            let m = match replace {
                Some((r, alt)) if r == g => alt,
                _ => m,
            };
            self.apply_gate(&mut amps, g, m);
        }
        StateVector::from_amplitudes(self.spec.n_qubits, amps)
    }

    /// `P(x, Θ, F)`: probability of the last qubit reading `|1⟩`.
    pub fn forward(&self, theta: &[f64], binding: &EncodingBinding) -> Result<f64> {
        self.evolve(theta, binding, None)?.prob_one(self.spec.n_qubits)
    }

    pub fn forward_input(&self, theta: &[f64], input: &[f64]) -> Result<f64> {
        self.forward(theta, &self.encode(input)?)
    }

    /// Re-parameterizes every Part-Two gate by its angle, starting from the
    /// angles the physical parameters `theta` currently realize. Part-One
    /// gates keep their physical parameters because they carry the encoding.
    pub fn to_angle_space(&self, theta: &[f64]) -> Result<ParameterTable> {
        self.check_theta(theta)?;
        let empty = EncodingBinding(vec![0.0; self.encoding_slots.len()]);
        let mut out = self.clone();
        let mut new_theta = Vec::new();
        let mut new_refs = Vec::new();
        for gate in 0..self.gates.len() {
            let Some(binding) = self.bindings[gate] else { continue };
            let angle_gate = self.gates[gate].part == 2 && matches!(binding, Binding::Physical { .. });
            let re_bound = if angle_gate {
                new_theta.push(self.angle(gate, theta, &empty)?);
                new_refs.push(ParamRef { gate, name: ParamName::Angle });
                Binding::Angle { delta_k: binding.delta_k(), theta: new_theta.len() - 1 }
            } else {
                self.rebind(binding, theta, &mut new_theta, &mut new_refs, gate)
            };
            out.bindings[gate] = Some(re_bound);
        }
        out.theta = new_theta;
        out.theta_refs = new_refs;
        Ok(out)
    }

    fn rebind(
        &self,
        binding: Binding,
        theta: &[f64],
        new_theta: &mut Vec<f64>,
        new_refs: &mut Vec<ParamRef>,
        gate: usize,
    ) -> Binding {
        let mut carry = |src: Source, name: ParamName| match src {
            Source::Theta(i) => {
                new_theta.push(theta[i]);
                new_refs.push(ParamRef { gate, name });
                Source::Theta(new_theta.len() - 1)
            }
            other => other,
        };
        match binding {
            Binding::Physical { delta_k, omega, laser } => Binding::Physical {
                delta_k,
                omega: carry(omega, ParamName::Omega),
                laser: carry(laser, ParamName::DeltaLaser),
            },
            Binding::Angle { delta_k, theta: i } => {
                new_theta.push(theta[i]);
                new_refs.push(ParamRef { gate, name: ParamName::Angle });
                Binding::Angle { delta_k, theta: new_theta.len() - 1 }
            }
        }
    }

    pub fn to_document(&self) -> TableDocument {
        let mut fixed = Vec::new();
        for (gate, b) in self.bindings.iter().enumerate() {
            let Some(b) = b else { continue };
            let omega = match b {
                Binding::Physical { omega: Source::Fixed(v), .. } => Some(*v),
                _ => None,
            };
            fixed.push(FixedEntry { address: self.gates[gate], delta_k: b.delta_k(), omega });
        }
        let theta = self
            .theta_refs
            .iter()
            .zip(&self.theta)
            .map(|(r, &value)| ThetaEntry { address: self.gates[r.gate], param_name: r.name, value })
            .collect();
        TableDocument { seed: self.seed, spec: self.spec, options: self.options, fixed, theta }
    }

    /// Rebuilds a table from its document, checking it against the gate
    /// layout implied by `spec`.
    pub fn from_document(doc: &TableDocument) -> Result<Self> {
        doc.spec.validate()?;
        let gates = build_circuit(&doc.spec);
        let single: Vec<usize> = (0..gates.len()).filter(|&g| gates[g].kind != SlotKind::Controlled).collect();
        if doc.fixed.len() != single.len() {
            return Err(Error::Config(format!("expected {} F entries, got {}", single.len(), doc.fixed.len())));
        }
        let mut bindings: Vec<Option<Binding>> = vec![None; gates.len()];
        let mut encoding_slots = Vec::new();
        let mut theta_iter = doc.theta.iter().peekable();
        let mut theta = Vec::new();
        let mut theta_refs = Vec::new();
        for (&gate, entry) in single.iter().zip(&doc.fixed) {
            let addr = gates[gate];
            if entry.address != addr {
                return Err(Error::Config(format!("F entry {} does not match gate {addr}", entry.address)));
            }
            let mut take = |name: ParamName| -> Option<usize> {
                let e = theta_iter.next_if(|e| e.address == addr && e.param_name == name)?;
                theta.push(e.value);
                theta_refs.push(ParamRef { gate, name });
                Some(theta.len() - 1)
            };
            if let Some(i) = take(ParamName::Angle) {
                bindings[gate] = Some(Binding::Angle { delta_k: entry.delta_k, theta: i });
                continue;
            }
            let omega = match (take(ParamName::Omega), entry.omega) {
                (Some(i), None) => Source::Theta(i),
                (None, Some(v)) => Source::Fixed(v),
                _ => return Err(Error::Config(format!("gate {addr} needs exactly one Rabi frequency"))),
            };
            let laser = if addr.part == 1 {
                encoding_slots.push(addr.slot);
                Source::Encoding(encoding_slots.len() - 1)
            } else {
                Source::Theta(
                    take(ParamName::DeltaLaser)
                        .ok_or_else(|| Error::Config(format!("gate {addr} is missing its trainable laser detuning")))?,
                )
            };
            bindings[gate] = Some(Binding::Physical { delta_k: entry.delta_k, omega, laser });
        }
        if let Some(extra) = theta_iter.next() {
            return Err(Error::Config(format!("unexpected theta entry for {}", extra.address)));
        }
        let controlled = controlled_matrix(doc.options)?;
        Ok(Self {
            seed: doc.seed,
            spec: doc.spec,
            options: doc.options,
            gates,
            bindings,
            encoding_slots,
            theta,
            theta_refs,
            controlled,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FixedEntry {
    pub address: GateAddress,
    pub delta_k: f64,
    /// Present only for frozen Rabi frequencies.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub omega: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ThetaEntry {
    pub address: GateAddress,
    pub param_name: ParamName,
    pub value: f64,
}

/// Checkpoint form of a [`ParameterTable`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TableDocument {
    pub seed: u64,
    pub spec: CircuitSpec,
    #[serde(default)]
    pub options: CircuitOptions,
    #[serde(rename = "F")]
    pub fixed: Vec<FixedEntry>,
    pub theta: Vec<ThetaEntry>,
}
