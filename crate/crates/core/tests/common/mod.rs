// Copyright 2026 The pswap Authors
// SPDX-License-Identifier: Apache-2.0

#![allow(dead_code)]

use std::f64::consts::PI;

use proptest::prelude::*;
use pswap_core::circuit::{Circuit, GateOp};
use pswap_core::gates::GateKind;
use pswap_core::linalg::{ComplexScalar, SquareMatrix, StateVector};

/// `e^{i a} RZ(b) RY(g) RZ(d)` from four angles.
pub fn unitary_2x2(a: f64, b: f64, g: f64, d: f64) -> SquareMatrix {
    let (cg, sg) = ((g / 2.0).cos(), (g / 2.0).sin());
    let e = |t: f64| ComplexScalar::from_polar(1.0, t);
    SquareMatrix::from_rows([
        [e(a - (b + d) / 2.0) * cg, -e(a - (b - d) / 2.0) * sg],
        [e(a + (b - d) / 2.0) * sg, e(a + (b + d) / 2.0) * cg],
    ])
}

pub fn arb_unitary_2x2() -> impl Strategy<Value = SquareMatrix> {
    (-PI..PI, -PI..PI, 0.0..PI, -PI..PI).prop_map(|(a, b, g, d)| unitary_2x2(a, b, g, d))
}

pub fn arb_state(n_qubits: usize) -> impl Strategy<Value = StateVector> {
    let dim = 1usize << n_qubits;
    prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), dim)
        .prop_filter("non-zero", |v| {
            v.iter().map(|(a, b)| a * a + b * b).sum::<f64>() > 1e-3
        })
        .prop_map(|v| {
            let norm = v.iter().map(|(a, b)| a * a + b * b).sum::<f64>().sqrt();
            StateVector::new(
                v.iter()
                    .map(|(a, b)| ComplexScalar::new(a / norm, b / norm))
                    .collect(),
            )
            .unwrap()
        })
}

pub fn arb_angle() -> impl Strategy<Value = f64> {
    -PI..=PI
}

/// Any catalog gate on a two-qubit register.
pub fn arb_gate_op() -> impl Strategy<Value = GateOp> {
    let single = (0..10usize, arb_angle(), 0..2usize).prop_map(|(k, theta, q)| {
        let kind = match k {
            0 => GateKind::I,
            1 => GateKind::X,
            2 => GateKind::SqrtX,
            3 => GateKind::Z,
            4 => GateKind::S,
            5 => GateKind::Sdg,
            6 => GateKind::T,
            7 => GateKind::Tdg,
            8 => GateKind::H,
            _ => GateKind::Rz(theta),
        };
        GateOp::single(kind, q)
    });
    let pair = (0..4usize, any::<bool>()).prop_map(|(k, flip)| {
        let kind = [GateKind::Cx, GateKind::Ecr, GateKind::Swap, GateKind::Iswap][k];
        if flip {
            GateOp::pair(kind, 1, 0)
        } else {
            GateOp::pair(kind, 0, 1)
        }
    });
    prop_oneof![3 => single, 2 => pair]
}

pub fn arb_circuit(max_len: usize) -> impl Strategy<Value = Circuit> {
    prop::collection::vec(arb_gate_op(), 0..=max_len)
        .prop_map(|ops| Circuit::from_ops(2, ops).unwrap())
}
