// Copyright 2026 The pswap Authors
// SPDX-License-Identifier: Apache-2.0

//! Single-qubit Bloch vectors of reduced states, per-gate traces, and the
//! XY-plane segment classifier.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::circuit::{simulate_prefixes, Circuit};
use crate::error::{Error, Result};
use crate::linalg::{ComplexScalar, StateVector};

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct BlochVector {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl BlochVector {
    pub const fn new(x: f64, y: f64, z: f64) -> Self {
        Self { x, y, z }
    }

    pub fn length(&self) -> f64 {
        (self.x * self.x + self.y * self.y + self.z * self.z).sqrt()
    }

    pub fn distance(&self, other: &BlochVector) -> f64 {
        let (dx, dy, dz) = (self.x - other.x, self.y - other.y, self.z - other.z);
        (dx * dx + dy * dy + dz * dz).sqrt()
    }

    /// Largest per-component difference.
    pub fn max_abs_diff(&self, other: &BlochVector) -> f64 {
        (self.x - other.x)
            .abs()
            .max((self.y - other.y).abs())
            .max((self.z - other.z).abs())
    }

    /// Counterclockwise angle from +X of the projection onto the XY plane.
    pub fn azimuth(&self) -> f64 {
        self.y.atan2(self.x)
    }
}

/// `(tr rho X, tr rho Y, tr rho Z)` for the reduced state of `qubit`.
pub fn bloch_vector(s: &StateVector, qubit: usize) -> Result<BlochVector> {
    let width = s.n_qubits();
    if qubit >= width {
        return Err(Error::QubitOutOfRange { qubit, width });
    }
    let bit = 1usize << qubit;
    let amps = s.amplitudes();
    let mut p0 = 0.0;
    let mut p1 = 0.0;
    let mut coherence = ComplexScalar::default();
    for (i, a) in amps.iter().enumerate() {
        if i & bit == 0 {
            let b = amps[i | bit];
            p0 += a.norm_sqr();
            p1 += b.norm_sqr();
            coherence += a * b.conj();
        }
    }
    // rho_01 = (x - i y) / 2
    Ok(BlochVector::new(
        2.0 * coherence.re,
        -2.0 * coherence.im,
        p0 - p1,
    ))
}

/// Bloch vectors of every qubit after one prefix of a circuit.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TraceEntry {
    /// Number of gates applied; 0 is the input state.
    pub applied: usize,
    pub qubits: Vec<BlochVector>,
}

pub fn stage_trace(c: &Circuit, input: &StateVector) -> Result<Vec<TraceEntry>> {
    simulate_prefixes(c, input)?
        .iter()
        .enumerate()
        .map(|(applied, state)| {
            let qubits = (0..state.n_qubits())
                .map(|q| bloch_vector(state, q))
                .collect::<Result<Vec<_>>>()?;
            Ok(TraceEntry { applied, qubits })
        })
        .collect()
}

/// Subdivision of the XY-plane circle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Granularity {
    Semicircle,
    Quadrant,
    Octant,
}

impl Granularity {
    pub fn segments(&self) -> usize {
        match self {
            Granularity::Semicircle => 2,
            Granularity::Quadrant => 4,
            Granularity::Octant => 8,
        }
    }

    pub fn width(&self) -> f64 {
        2.0 * PI / self.segments() as f64
    }
}

/// Segment holding `phase_angle`, counted counterclockwise from +X.
///
/// Segments are half-open, `[k w, (k+1) w)`, so an angle on a boundary
/// belongs to the higher segment.
pub fn segment_classify(phase_angle: f64, granularity: Granularity) -> usize {
    let n = granularity.segments() as i64;
    let mut q = phase_angle / granularity.width();
    let nearest = q.round();
    if (q - nearest).abs() < 1e-9 {
        q = nearest;
    }
    (q.floor() as i64).rem_euclid(n) as usize
}
