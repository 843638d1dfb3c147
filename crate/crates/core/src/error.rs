// Copyright 2026 The pswap Authors
// SPDX-License-Identifier: Apache-2.0

use thiserror::Error;

/// Errors raised by the core toolkit.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("invalid dimension {0}: expected a power of two between 2 and 16")]
    InvalidDimension(usize),

    #[error("matrix is not unitary (max deviation {deviation:e})")]
    NotUnitary { deviation: f64 },

    #[error("state vector is not normalized (norm² = {norm_sqr})")]
    NotNormalized { norm_sqr: f64 },

    #[error("all-zero matrix has no defined global phase")]
    ZeroMatrix,

    #[error("matrices are not equal up to a global phase")]
    NotPhaseEquivalent,

    #[error("angle {0} is outside [-pi, pi]")]
    AngleOutOfRange(f64),

    #[error("qubit {qubit} out of range for width {width}")]
    QubitOutOfRange { qubit: usize, width: usize },

    #[error("gate `{gate}` uses qubit {qubit} more than once")]
    DuplicateQubit { gate: &'static str, qubit: usize },

    #[error("gate `{gate}` expects {expected} qubit(s), got {found}")]
    Arity {
        gate: &'static str,
        expected: usize,
        found: usize,
    },

    #[error("circuit width {0} exceeds the dense evaluation limit of 4 qubits")]
    WidthOverflow(usize),

    #[error("unitary is not a swap up to per-state phases (stray amplitude {deviation:e})")]
    NotPhaseSwap { deviation: f64 },

    #[error("gate `{0}` is not in the native set")]
    NonNative(&'static str),

    #[error("baseline cost is zero")]
    ZeroBaseline,

    #[error("unknown gate `{0}`")]
    UnknownGate(String),

    #[error("gate `{gate}` expects {expected} parameter(s), got {found}")]
    Params {
        gate: &'static str,
        expected: usize,
        found: usize,
    },

    #[error("invalid basis label `{0}`")]
    BasisLabel(String),

    #[error("malformed circuit document: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
