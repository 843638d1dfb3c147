// Copyright 2026 The pswap Authors
// SPDX-License-Identifier: Apache-2.0

//! Dense complex linear algebra for gates on at most four qubits.
//!
//! Basis states are little-endian: qubit 0 is the least-significant bit of
//! the basis index, so the two-qubit label `|q1 q0>` is index `2*q1 + q0`.
//! `kron(a, b)` places `a` on the high-order qubits and `b` on the low-order
//! ones, which keeps the two conventions consistent.

use std::f64::consts::PI;
use std::fmt;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Complex amplitude type used throughout the crate.
pub type ComplexScalar = Complex64;

/// Tolerance for checks on freshly constructed gates and states.
pub const CONSTRUCTION_TOL: f64 = 1e-12;

/// Tolerance for comparisons between independently computed results.
pub const COMPARISON_TOL: f64 = 1e-9;

/// Largest supported matrix dimension (four qubits).
pub const MAX_DIM: usize = 16;

pub(crate) fn c(re: f64, im: f64) -> ComplexScalar {
    ComplexScalar::new(re, im)
}

fn valid_dim(dim: usize) -> bool {
    (2..=MAX_DIM).contains(&dim) && dim.is_power_of_two()
}

/// Wraps an angle into `(-pi, pi]`.
pub fn wrap_angle(theta: f64) -> f64 {
    let mut t = theta.rem_euclid(2.0 * PI);
    if t > PI {
        t -= 2.0 * PI;
    }
    // rem_euclid can land exactly on -pi after the shift for inputs near pi.
    if t <= -PI {
        t += 2.0 * PI;
    }
    t
}

/// Square complex matrix of dimension 2, 4, 8 or 16, stored row-major.
#[derive(Clone, PartialEq)]
pub struct SquareMatrix {
    dim: usize,
    entries: Vec<ComplexScalar>,
}

impl SquareMatrix {
    pub fn new(dim: usize, entries: Vec<ComplexScalar>) -> Result<Self> {
        if !valid_dim(dim) {
            return Err(Error::InvalidDimension(dim));
        }
        if entries.len() != dim * dim {
            return Err(Error::DimensionMismatch {
                left: dim * dim,
                right: entries.len(),
            });
        }
        Ok(Self { dim, entries })
    }

    /// Builds a matrix from row arrays; `N` must be a supported dimension.
    pub fn from_rows<const N: usize>(rows: [[ComplexScalar; N]; N]) -> Self {
        assert!(valid_dim(N), "unsupported dimension {N}");
        Self {
            dim: N,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn zeros(dim: usize) -> Result<Self> {
        Self::new(dim, vec![ComplexScalar::default(); dim * dim])
    }

    pub fn identity(dim: usize) -> Result<Self> {
        let mut m = Self::zeros(dim)?;
        for i in 0..dim {
            m.entries[i * dim + i] = c(1.0, 0.0);
        }
        Ok(m)
    }

    pub fn diagonal(diag: &[ComplexScalar]) -> Result<Self> {
        let dim = diag.len();
        let mut m = Self::zeros(dim)?;
        for (i, z) in diag.iter().enumerate() {
            m.entries[i * dim + i] = *z;
        }
        Ok(m)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn n_qubits(&self) -> usize {
        self.dim.trailing_zeros() as usize
    }

    pub fn get(&self, row: usize, col: usize) -> ComplexScalar {
        self.entries[row * self.dim + col]
    }

    pub(crate) fn set(&mut self, row: usize, col: usize, value: ComplexScalar) {
        self.entries[row * self.dim + col] = value;
    }

    pub fn entries(&self) -> &[ComplexScalar] {
        &self.entries
    }

    pub fn rows(&self) -> impl Iterator<Item = &[ComplexScalar]> {
        self.entries.chunks(self.dim)
    }

    pub fn scale(&self, factor: ComplexScalar) -> Self {
        Self {
            dim: self.dim,
            entries: self.entries.iter().map(|z| z * factor).collect(),
        }
    }

    /// Largest entrywise modulus of `self - other`.
    pub fn max_abs_diff(&self, other: &Self) -> Result<f64> {
        check_dims(self.dim, other.dim)?;
        Ok(self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max))
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.max_abs_diff(other).is_ok_and(|d| d <= tol)
    }

    /// `max |U U^dagger - I|` over all entries.
    pub fn unitarity_deviation(&self) -> f64 {
        let prod = self.product(&dagger(self));
        let mut worst: f64 = 0.0;
        for r in 0..self.dim {
            for col in 0..self.dim {
                let target = if r == col { 1.0 } else { 0.0 };
                worst = worst.max((prod.get(r, col) - target).norm());
            }
        }
        worst
    }

    pub fn is_unitary(&self, tol: f64) -> bool {
        self.unitarity_deviation() <= tol
    }

    fn max_entry_index(&self) -> usize {
        let mut best = 0;
        let mut best_norm = -1.0;
        for (i, z) in self.entries.iter().enumerate() {
            let n = z.norm_sqr();
            if n > best_norm {
                best = i;
                best_norm = n;
            }
        }
        best
    }

    // Callers guarantee equal dimensions.
    pub(crate) fn product(&self, rhs: &Self) -> Self {
        let n = self.dim;
        let mut out = vec![ComplexScalar::default(); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.entries[i * n + k];
                if a == ComplexScalar::default() {
                    continue;
                }
                for j in 0..n {
                    out[i * n + j] += a * rhs.entries[k * n + j];
                }
            }
        }
        Self {
            dim: n,
            entries: out,
        }
    }
}

impl fmt::Debug for SquareMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "SquareMatrix({}x{})", self.dim, self.dim)?;
        for row in self.rows() {
            let cells: Vec<String> = row
                .iter()
                .map(|z| format!("{:+.4}{:+.4}i", z.re, z.im))
                .collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

fn check_dims(left: usize, right: usize) -> Result<()> {
    if left == right {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { left, right })
    }
}

pub fn mat_mul(a: &SquareMatrix, b: &SquareMatrix) -> Result<SquareMatrix> {
    check_dims(a.dim, b.dim)?;
    Ok(a.product(b))
}

/// Tensor product with `a` on the high-order qubits.
pub fn kron(a: &SquareMatrix, b: &SquareMatrix) -> Result<SquareMatrix> {
    let dim = a.dim * b.dim;
    if !valid_dim(dim) {
        return Err(Error::InvalidDimension(dim));
    }
    let mut out = SquareMatrix::zeros(dim)?;
    for ar in 0..a.dim {
        for ac in 0..a.dim {
            let x = a.get(ar, ac);
            for br in 0..b.dim {
                for bc in 0..b.dim {
                    out.set(ar * b.dim + br, ac * b.dim + bc, x * b.get(br, bc));
                }
            }
        }
    }
    Ok(out)
}

/// Conjugate transpose.
pub fn dagger(a: &SquareMatrix) -> SquareMatrix {
    let n = a.dim;
    let mut entries = Vec::with_capacity(n * n);
    for r in 0..n {
        for col in 0..n {
            entries.push(a.get(col, r).conj());
        }
    }
    SquareMatrix { dim: n, entries }
}

/// Phase `phi` with `a ~ e^{i phi} b`, read off the largest entry of `b`.
fn candidate_phase(a: &SquareMatrix, b: &SquareMatrix) -> Result<f64> {
    check_dims(a.dim, b.dim)?;
    let k = b.max_entry_index();
    if b.entries[k].norm() == 0.0 || a.entries[a.max_entry_index()].norm() == 0.0 {
        return Err(Error::ZeroMatrix);
    }
    Ok((a.entries[k] * b.entries[k].conj()).arg())
}

/// True iff `a == e^{i phi} b` entrywise within `tol` for some phase `phi`.
pub fn equal_up_to_global_phase(a: &SquareMatrix, b: &SquareMatrix, tol: f64) -> Result<bool> {
    let phi = candidate_phase(a, b)?;
    let rotated = b.scale(ComplexScalar::from_polar(1.0, phi));
    Ok(a.max_abs_diff(&rotated)? <= tol)
}

/// The phase `phi` in `(-pi, pi]` with `a = e^{i phi} b`.
pub fn global_phase_between(a: &SquareMatrix, b: &SquareMatrix) -> Result<f64> {
    if !equal_up_to_global_phase(a, b, COMPARISON_TOL)? {
        return Err(Error::NotPhaseEquivalent);
    }
    Ok(wrap_angle(candidate_phase(a, b)?))
}

/// Normalized pure state on 1 to 4 qubits.
#[derive(Clone, Debug, PartialEq)]
pub struct StateVector {
    amplitudes: Vec<ComplexScalar>,
}

impl StateVector {
    pub fn new(amplitudes: Vec<ComplexScalar>) -> Result<Self> {
        if !valid_dim(amplitudes.len()) {
            return Err(Error::InvalidDimension(amplitudes.len()));
        }
        let norm_sqr: f64 = amplitudes.iter().map(|z| z.norm_sqr()).sum();
        if (norm_sqr - 1.0).abs() > CONSTRUCTION_TOL {
            return Err(Error::NotNormalized { norm_sqr });
        }
        Ok(Self { amplitudes })
    }

    /// Computational basis state `index` on `n_qubits` qubits.
    pub fn basis(n_qubits: usize, index: usize) -> Result<Self> {
        if !(1..=4).contains(&n_qubits) {
            return Err(Error::InvalidDimension(1usize << n_qubits.min(31)));
        }
        let dim = 1usize << n_qubits;
        if index >= dim {
            return Err(Error::BasisLabel(index.to_string()));
        }
        let mut amplitudes = vec![ComplexScalar::default(); dim];
        amplitudes[index] = c(1.0, 0.0);
        Ok(Self { amplitudes })
    }

    /// Parses a label such as `"01"`, written `q_{n-1} ... q_0`.
    pub fn from_label(label: &str) -> Result<Self> {
        if label.is_empty() || !label.chars().all(|ch| ch == '0' || ch == '1') {
            return Err(Error::BasisLabel(label.to_string()));
        }
        let index = usize::from_str_radix(label, 2).map_err(|_| Error::BasisLabel(label.into()))?;
        Self::basis(label.len(), index)
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn n_qubits(&self) -> usize {
        self.dim().trailing_zeros() as usize
    }

    pub fn amplitudes(&self) -> &[ComplexScalar] {
        &self.amplitudes
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.iter().map(|z| z.norm_sqr()).sum()
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.dim() == other.dim()
            && self
                .amplitudes
                .iter()
                .zip(&other.amplitudes)
                .all(|(a, b)| (a - b).norm() <= tol)
    }
}

/// Applies a unitary to a state.
pub fn apply(u: &SquareMatrix, s: &StateVector) -> Result<StateVector> {
    check_dims(u.dim, s.dim())?;
    let deviation = u.unitarity_deviation();
    if deviation > COMPARISON_TOL {
        return Err(Error::NotUnitary { deviation });
    }
    let n = u.dim;
    let amplitudes = (0..n)
        .map(|r| (0..n).map(|k| u.get(r, k) * s.amplitudes[k]).sum())
        .collect();
    Ok(StateVector { amplitudes })
}
