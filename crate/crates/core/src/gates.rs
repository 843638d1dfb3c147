// Copyright 2026 The pswap Authors
// SPDX-License-Identifier: Apache-2.0

//! Gate catalog with pinned matrices.
//!
//! `RZ(theta) = diag(e^{-i theta/2}, e^{i theta/2})`, while `Z`, `S` and `T`
//! carry no global phase: `RZ(pi) = -i Z`.
//!
//! Two-qubit matrices are written in the gate's local basis where the first
//! listed qubit is the low-order bit. For `CX` the first qubit is the control.

use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_4, PI};
use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::{c, ComplexScalar, SquareMatrix};

/// Slack allowed past `+-pi` when validating angles computed in floating point.
pub const ANGLE_SLACK: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum GateKind {
    I,
    X,
    SqrtX,
    Z,
    S,
    Sdg,
    T,
    Tdg,
    H,
    /// Z rotation in radians, restricted to `[-pi, pi]`.
    Rz(f64),
    Cx,
    Ecr,
    Swap,
    Iswap,
}

/// Returns `theta` if it lies in `[-pi, pi]`.
pub fn check_angle(theta: f64) -> Result<f64> {
    if theta.is_finite() && theta.abs() <= PI + ANGLE_SLACK {
        Ok(theta.clamp(-PI, PI))
    } else {
        Err(Error::AngleOutOfRange(theta))
    }
}

impl GateKind {
    pub const ALL_FIXED: [GateKind; 13] = [
        GateKind::I,
        GateKind::X,
        GateKind::SqrtX,
        GateKind::Z,
        GateKind::S,
        GateKind::Sdg,
        GateKind::T,
        GateKind::Tdg,
        GateKind::H,
        GateKind::Cx,
        GateKind::Ecr,
        GateKind::Swap,
        GateKind::Iswap,
    ];

    pub fn rz(theta: f64) -> Result<Self> {
        check_angle(theta).map(GateKind::Rz)
    }

    /// Lowercase name used by the JSON circuit format.
    pub fn name(&self) -> &'static str {
        match self {
            GateKind::I => "id",
            GateKind::X => "x",
            GateKind::SqrtX => "sx",
            GateKind::Z => "z",
            GateKind::S => "s",
            GateKind::Sdg => "sdg",
            GateKind::T => "t",
            GateKind::Tdg => "tdg",
            GateKind::H => "h",
            GateKind::Rz(_) => "rz",
            GateKind::Cx => "cx",
            GateKind::Ecr => "ecr",
            GateKind::Swap => "swap",
            GateKind::Iswap => "iswap",
        }
    }

    pub fn from_name(name: &str, params: &[f64]) -> Result<Self> {
        let kind = match name {
            "id" => GateKind::I,
            "x" => GateKind::X,
            "sx" => GateKind::SqrtX,
            "z" => GateKind::Z,
            "s" => GateKind::S,
            "sdg" => GateKind::Sdg,
            "t" => GateKind::T,
            "tdg" => GateKind::Tdg,
            "h" => GateKind::H,
            "rz" => {
                return match params {
                    [theta] => GateKind::rz(*theta),
                    _ => Err(Error::Params {
                        gate: "rz",
                        expected: 1,
                        found: params.len(),
                    }),
                }
            }
            "cx" => GateKind::Cx,
            "ecr" => GateKind::Ecr,
            "swap" => GateKind::Swap,
            "iswap" => GateKind::Iswap,
            other => return Err(Error::UnknownGate(other.to_string())),
        };
        if !params.is_empty() {
            return Err(Error::Params {
                gate: kind.name(),
                expected: 0,
                found: params.len(),
            });
        }
        Ok(kind)
    }

    pub fn arity(&self) -> usize {
        match self {
            GateKind::Cx | GateKind::Ecr | GateKind::Swap | GateKind::Iswap => 2,
            _ => 1,
        }
    }

    pub fn params(&self) -> Vec<f64> {
        match self {
            GateKind::Rz(theta) => vec![*theta],
            _ => Vec::new(),
        }
    }

    pub fn is_native(&self) -> bool {
        NativeGateSet::contains(self)
    }
}

impl fmt::Display for GateKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GateKind::Rz(theta) => write!(f, "rz({theta:.6})"),
            other => f.write_str(other.name()),
        }
    }
}

/// The hardware-native set `{I, X, SqrtX, RZ(theta), ECR}`.
pub struct NativeGateSet;

impl NativeGateSet {
    pub fn contains(kind: &GateKind) -> bool {
        matches!(
            kind,
            GateKind::I | GateKind::X | GateKind::SqrtX | GateKind::Rz(_) | GateKind::Ecr
        )
    }
}

pub fn is_native(g: GateKind) -> bool {
    NativeGateSet::contains(&g)
}

pub fn matrix_of(g: GateKind) -> Result<SquareMatrix> {
    let zero = c(0.0, 0.0);
    let one = c(1.0, 0.0);
    let i = c(0.0, 1.0);
    let r = FRAC_1_SQRT_2;
    let m = match g {
        GateKind::I => SquareMatrix::identity(2)?,
        GateKind::X => SquareMatrix::from_rows([[zero, one], [one, zero]]),
        GateKind::SqrtX => {
            SquareMatrix::from_rows([[c(0.5, 0.5), c(0.5, -0.5)], [c(0.5, -0.5), c(0.5, 0.5)]])
        }
        GateKind::Z => SquareMatrix::diagonal(&[one, -one])?,
        GateKind::S => SquareMatrix::diagonal(&[one, i])?,
        GateKind::Sdg => SquareMatrix::diagonal(&[one, -i])?,
        GateKind::T => SquareMatrix::diagonal(&[one, ComplexScalar::from_polar(1.0, FRAC_PI_4)])?,
        GateKind::Tdg => {
            SquareMatrix::diagonal(&[one, ComplexScalar::from_polar(1.0, -FRAC_PI_4)])?
        }
        GateKind::H => SquareMatrix::from_rows([[c(r, 0.0), c(r, 0.0)], [c(r, 0.0), c(-r, 0.0)]]),
        GateKind::Rz(theta) => {
            let theta = check_angle(theta)?;
            SquareMatrix::diagonal(&[
                ComplexScalar::from_polar(1.0, -theta / 2.0),
                ComplexScalar::from_polar(1.0, theta / 2.0),
            ])?
        }
        // Control on the low-order bit: |01> <-> |11>.
        GateKind::Cx => SquareMatrix::from_rows([
            [one, zero, zero, zero],
            [zero, zero, zero, one],
            [zero, zero, one, zero],
            [zero, one, zero, zero],
        ]),
        GateKind::Ecr => {
            let a = c(r, 0.0);
            let b = c(0.0, r);
            SquareMatrix::from_rows([
                [zero, a, zero, b],
                [a, zero, -b, zero],
                [zero, b, zero, a],
                [-b, zero, a, zero],
            ])
        }
        GateKind::Swap => SquareMatrix::from_rows([
            [one, zero, zero, zero],
            [zero, zero, one, zero],
            [zero, one, zero, zero],
            [zero, zero, zero, one],
        ]),
        GateKind::Iswap => SquareMatrix::from_rows([
            [one, zero, zero, zero],
            [zero, zero, i, zero],
            [zero, i, zero, zero],
            [zero, zero, zero, one],
        ]),
    };
    Ok(m)
}
