// Copyright 2026 Chiralnet Contributors
// SPDX-License-Identifier: Apache-2.0

//! Photonic variational circuits built from chiral emitter–waveguide
//! scattering matrices.
//!
//! Gates are the transfer matrices of laser-driven Λ emitters coupled to a
//! waveguide; the circuit is trained by parameter-shift gradients chained
//! back to the laser Rabi frequencies and detunings. Rates are in units of
//! the reference coupling `Γ`.

// NaN-rejecting guards are written as negated comparisons.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod circuit;
pub mod cli;
pub mod error;
pub mod gates;
pub mod learning;
pub mod linalg;
pub mod scattering;
pub mod simulator;

pub use circuit::{CircuitOptions, CircuitSpec, GateAddress, ParameterTable};
pub use error::{Error, Result};
pub use linalg::{CMatrix, C64};
pub use simulator::StateVector;
