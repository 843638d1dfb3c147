// Copyright 2026 The pswap Authors
// SPDX-License-Identifier: Apache-2.0

//! Construction and phase analysis of the two-CNOT phase-swap gate.
//!
//! The gate acts on a first target `q0` and a second target `q1`:
//!
//! ```text
//! q0: ─SX──●──RZ(pi/2)──X───────RZ(v)─
//!          │            │
//! q1: ─────X──RZ(pi/2)──●──SX───RZ(w)─
//! ```
//!
//! It maps every basis state `|a b>` to `e^{i p} |b a>`. The phase `p` depends
//! on the produced state and on the optional phase-selection rotations `v`, `w`.

use serde::{Deserialize, Serialize};

use crate::circuit::{Circuit, GateOp};
use crate::error::{Error, Result};
use crate::gates::{check_angle, GateKind};
use crate::linalg::{wrap_angle, SquareMatrix, COMPARISON_TOL};

use std::f64::consts::{FRAC_PI_2, PI};

/// Two-qubit basis labels in `q1 q0` order; index equals the basis index.
pub const BASIS_LABELS: [&str; 4] = ["00", "01", "10", "11"];

/// Optional phase-selection rotations: `v` on q0, `w` on q1.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct PhaseConfig {
    pub v: Option<f64>,
    pub w: Option<f64>,
}

impl PhaseConfig {
    /// No phase-selection gates.
    pub const BOOLEAN: PhaseConfig = PhaseConfig { v: None, w: None };
    pub const ISWAP: PhaseConfig = PhaseConfig {
        v: Some(FRAC_PI_2),
        w: Some(-FRAC_PI_2),
    };
    pub const ISWAP_INVERSE: PhaseConfig = PhaseConfig {
        v: Some(-FRAC_PI_2),
        w: Some(FRAC_PI_2),
    };

    pub fn new(v: Option<f64>, w: Option<f64>) -> Result<Self> {
        let cfg = Self { v, w };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        for angle in [self.v, self.w].into_iter().flatten() {
            check_angle(angle)?;
        }
        Ok(())
    }
}

/// Phase picked up by each output basis state, in `(-pi, pi]`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct PhaseProfile {
    #[serde(rename = "00")]
    pub p00: f64,
    #[serde(rename = "01")]
    pub p01: f64,
    #[serde(rename = "10")]
    pub p10: f64,
    #[serde(rename = "11")]
    pub p11: f64,
}

impl PhaseProfile {
    pub fn from_array(p: [f64; 4]) -> Self {
        Self {
            p00: p[0],
            p01: p[1],
            p10: p[2],
            p11: p[3],
        }
    }

    pub fn as_array(&self) -> [f64; 4] {
        [self.p00, self.p01, self.p10, self.p11]
    }

    /// Largest circular distance between corresponding phases.
    pub fn max_diff(&self, other: &PhaseProfile) -> f64 {
        self.as_array()
            .iter()
            .zip(other.as_array())
            .map(|(a, b)| angle_distance(*a, b))
            .fold(0.0, f64::max)
    }
}

/// Distance between two angles on the circle.
pub fn angle_distance(a: f64, b: f64) -> f64 {
    wrap_angle(a - b).abs()
}

fn swapped(index: usize) -> usize {
    ((index & 1) << 1) | (index >> 1)
}

/// Wiring of the two CNOTs and the two `SX` gates around the fixed
/// `RZ(pi/2) (x) RZ(pi/2)` core.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Wiring {
    /// `(control, target)` of the entangling CNOT.
    pub first_cx: (usize, usize),
    /// `(control, target)` of the disentangling CNOT.
    pub second_cx: (usize, usize),
    /// Opening `SX` on q1 and closing `SX` on q0 instead of the reverse.
    pub mirrored: bool,
}

impl Wiring {
    pub const CANONICAL: Wiring = Wiring {
        first_cx: (0, 1),
        second_cx: (1, 0),
        mirrored: false,
    };

    /// All eight orientation and placement variants.
    pub fn all() -> Vec<Wiring> {
        let orientations = [(0, 1), (1, 0)];
        let mut out = Vec::with_capacity(8);
        for first_cx in orientations {
            for second_cx in orientations {
                for mirrored in [false, true] {
                    out.push(Wiring {
                        first_cx,
                        second_cx,
                        mirrored,
                    });
                }
            }
        }
        out
    }
}

pub fn build_pswap_with(wiring: Wiring, cfg: PhaseConfig) -> Result<Circuit> {
    cfg.validate()?;
    let (open, close) = if wiring.mirrored { (1, 0) } else { (0, 1) };
    let mut ops = vec![
        GateOp::single(GateKind::SqrtX, open),
        GateOp::pair(GateKind::Cx, wiring.first_cx.0, wiring.first_cx.1),
        GateOp::single(GateKind::Rz(FRAC_PI_2), 0),
        GateOp::single(GateKind::Rz(FRAC_PI_2), 1),
        GateOp::pair(GateKind::Cx, wiring.second_cx.0, wiring.second_cx.1),
        GateOp::single(GateKind::SqrtX, close),
    ];
    if let Some(v) = cfg.v {
        ops.push(GateOp::single(GateKind::rz(v)?, 0));
    }
    if let Some(w) = cfg.w {
        ops.push(GateOp::single(GateKind::rz(w)?, 1));
    }
    Circuit::from_ops(2, ops)
}

/// The phase-swap circuit: two CNOTs, with optional `RZ(v)` on q0 and
/// `RZ(w)` on q1 at the end.
pub fn build_pswap(cfg: PhaseConfig) -> Result<Circuit> {
    build_pswap_with(Wiring::CANONICAL, cfg)
}

/// Textbook three-CNOT SWAP.
pub fn build_swap_standard() -> Circuit {
    Circuit::from_ops(
        2,
        vec![
            GateOp::pair(GateKind::Cx, 0, 1),
            GateOp::pair(GateKind::Cx, 1, 0),
            GateOp::pair(GateKind::Cx, 0, 1),
        ],
    )
    .expect("static circuit")
}

/// Two-CNOT iSWAP built from S, H and CNOT.
pub fn build_iswap_reference() -> Circuit {
    Circuit::from_ops(
        2,
        vec![
            GateOp::single(GateKind::S, 0),
            GateOp::single(GateKind::S, 1),
            GateOp::single(GateKind::H, 0),
            GateOp::pair(GateKind::Cx, 0, 1),
            GateOp::pair(GateKind::Cx, 1, 0),
            GateOp::single(GateKind::H, 1),
        ],
    )
    .expect("static circuit")
}

/// Largest amplitude of `u` outside the swap pattern.
fn off_swap_amplitude(u: &SquareMatrix) -> f64 {
    let mut worst: f64 = 0.0;
    for col in 0..4 {
        for row in 0..4 {
            if row != swapped(col) {
                worst = worst.max(u.get(row, col).norm());
            }
        }
    }
    worst
}

/// Per-output-state phases of a swap-up-to-phases unitary.
///
/// Phases are raw (no global renormalization) and indexed by the produced
/// basis state: `p(y) = arg <y| u |swap(y)>`.
pub fn phase_profile(u: &SquareMatrix) -> Result<PhaseProfile> {
    if u.dim() != 4 {
        return Err(Error::DimensionMismatch {
            left: u.dim(),
            right: 4,
        });
    }
    let stray = off_swap_amplitude(u);
    let worst_on = (0..4)
        .map(|y| (u.get(y, swapped(y)).norm() - 1.0).abs())
        .fold(0.0, f64::max);
    if stray > COMPARISON_TOL || worst_on > COMPARISON_TOL {
        return Err(Error::NotPhaseSwap {
            deviation: stray.max(worst_on),
        });
    }
    let mut phases = [0.0; 4];
    for (y, p) in phases.iter_mut().enumerate() {
        let mut angle = wrap_angle(u.get(y, swapped(y)).arg());
        if angle < -PI + 1e-12 {
            angle = PI;
        }
        *p = angle;
    }
    Ok(PhaseProfile::from_array(phases))
}

/// True iff every basis input lands on its swapped basis state with unit
/// probability, i.e. `u` is indistinguishable from SWAP on classical inputs.
pub fn boolean_equivalence(u: &SquareMatrix) -> bool {
    u.dim() == 4
        && off_swap_amplitude(u) <= COMPARISON_TOL
        && (0..4).all(|x| (u.get(swapped(x), x).norm() - 1.0).abs() <= COMPARISON_TOL)
}

/// One row of the reference phase table.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Table1Row {
    pub config: PhaseConfig,
    /// Phases for output states `00, 01, 10, 11`.
    pub expected: [f64; 4],
    pub application: &'static str,
}

const fn row(v: Option<f64>, w: Option<f64>, expected: [f64; 4], app: &'static str) -> Table1Row {
    Table1Row {
        config: PhaseConfig { v, w },
        expected,
        application: app,
    }
}

const H: f64 = FRAC_PI_2;

/// Reference phase-selection configurations and their phases.
pub const TABLE1: [Table1Row; 6] = [
    row(None, None, [0.0, 0.0, PI, 0.0], "voting for |10> only"),
    row(Some(PI), None, [-H, H, H, H], "voting for |00> only"),
    row(None, Some(PI), [-H, -H, -H, H], "voting for |11> only"),
    row(
        Some(PI),
        Some(-PI),
        [0.0, PI, 0.0, 0.0],
        "voting for |01> only",
    ),
    row(
        Some(H),
        Some(-H),
        [0.0, H, H, 0.0],
        "iSWAP, voting for |01> and |10>",
    ),
    row(
        Some(-H),
        Some(H),
        [0.0, -H, -H, 0.0],
        "inverse iSWAP, voting for |01> and |10>",
    ),
];

#[derive(Clone, Debug, PartialEq)]
pub struct RowCheck {
    pub row: Table1Row,
    /// `None` when the built circuit is not a phase swap at all.
    pub actual: Option<PhaseProfile>,
    pub cells: [bool; 4],
}

#[derive(Clone, Debug, PartialEq)]
pub struct Table1Report {
    pub rows: Vec<RowCheck>,
}

impl Table1Report {
    pub fn passed(&self) -> usize {
        self.rows
            .iter()
            .map(|r| r.cells.iter().filter(|&&ok| ok).count())
            .sum()
    }

    pub fn total(&self) -> usize {
        self.rows.len() * 4
    }

    pub fn all_pass(&self) -> bool {
        self.passed() == self.total()
    }
}

/// Checks each row's expected phases against the profile of `build(config)`.
/// Failures are reported per cell, never raised.
pub fn verify_rows<F>(rows: &[Table1Row], build: F, tol: f64) -> Table1Report
where
    F: Fn(PhaseConfig) -> Result<Circuit>,
{
    let rows = rows
        .iter()
        .map(|row| {
            let actual = build(row.config)
                .and_then(|c| crate::circuit::unitary(&c))
                .and_then(|u| phase_profile(&u))
                .ok();
            let mut cells = [false; 4];
            if let Some(profile) = &actual {
                for (k, cell) in cells.iter_mut().enumerate() {
                    *cell = angle_distance(profile.as_array()[k], row.expected[k]) <= tol;
                }
            }
            RowCheck {
                row: *row,
                actual,
                cells,
            }
        })
        .collect();
    Table1Report { rows }
}

pub fn verify_table1() -> Table1Report {
    verify_rows(&TABLE1, build_pswap, COMPARISON_TOL)
}

/// Number of reference cells each wiring variant reproduces.
pub fn wiring_oracle() -> Vec<(Wiring, usize)> {
    Wiring::all()
        .into_iter()
        .map(|w| {
            let report = verify_rows(&TABLE1, |cfg| build_pswap_with(w, cfg), COMPARISON_TOL);
            (w, report.passed())
        })
        .collect()
}
