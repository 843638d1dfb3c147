// Copyright 2026 The pswap Authors
// SPDX-License-Identifier: Apache-2.0

//! Toolkit for the two-CNOT phase-swap gate: construction, phase-profile
//! verification, lowering to the `{RZ, SX, X, ECR}` native set, and
//! transpilation cost (`TQC = N1 + N2 + depth`).

pub mod bloch;
pub mod circuit;
pub mod error;
pub mod gates;
pub mod linalg;
pub mod pswap;
pub mod transpile;

pub use bloch::{
    bloch_vector, segment_classify, stage_trace, BlochVector, Granularity, TraceEntry,
};
pub use circuit::{depth, gate_counts, unitary, Circuit, GateCounts, GateOp};
pub use error::{Error, Result};
pub use gates::{is_native, matrix_of, GateKind, NativeGateSet};
pub use linalg::{
    apply, dagger, equal_up_to_global_phase, global_phase_between, kron, mat_mul, ComplexScalar,
    SquareMatrix, StateVector, COMPARISON_TOL, CONSTRUCTION_TOL,
};
pub use pswap::{
    boolean_equivalence, build_iswap_reference, build_pswap, build_swap_standard, phase_profile,
    verify_table1, PhaseConfig, PhaseProfile, Table1Report,
};
pub use transpile::{compare, lower_gate, peephole, tqc, transpile, CostReduction, TqcReport};
