// Copyright 2026 Chiralnet Contributors
// SPDX-License-Identifier: Apache-2.0

use thiserror::Error;

use crate::circuit::GateAddress;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// The scattering expression hits a pole or a 0/0 point.
    #[error("degenerate emitter parameters: {0}")]
    Degenerate(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("qubit index {index} out of range for a {n_qubits}-qubit register")]
    QubitOutOfRange { index: usize, n_qubits: usize },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("state has zero norm")]
    ZeroNorm,

    /// A gate-level failure, tagged with the circuit position that raised it.
    #[error("gate {address}: {source}")]
    AtGate {
        address: GateAddress,
        #[source]
        source: Box<Error>,
    },

    #[error("non-finite gradient at {0}")]
    NonFiniteGradient(String),

    #[error("configuration error: {0}")]
    Config(String),

    #[error("unknown {kind} '{name}'")]
    Unknown { kind: &'static str, name: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl Error {
    pub(crate) fn at_gate(self, address: GateAddress) -> Self {
        Error::AtGate { address, source: Box::new(self) }
    }

    /// True for failures that come from the numerics rather than from input
    /// validation or I/O.
    pub fn is_numerical(&self) -> bool {
        match self {
            Error::Degenerate(_) | Error::NonFiniteGradient(_) | Error::ZeroNorm => true,
            Error::AtGate { source, .. } => source.is_numerical(),
            _ => false,
        }
    }
}
