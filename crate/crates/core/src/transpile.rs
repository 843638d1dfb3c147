// Copyright 2026 The pswap Authors
// SPDX-License-Identifier: Apache-2.0

//! Lowering to the native `{RZ, SX, X, ECR}` set, peephole cleanup, and the
//! transpilation cost metric `TQC = N1 + N2 + D`.
//!
//! The target device calibrates ECR in one direction per qubit pair: the
//! higher-indexed qubit is the ECR's first operand. A CNOT whose control is
//! that qubit needs three dressing gates; the reverse orientation needs ten.
//! Both dressings are frozen constants, certified by [`search_cx_dressings`].
//!
//! Before gate-by-gate lowering, a circuit supported on two qubits whose
//! unitary equals a catalog two-qubit gate (up to phase) is replaced by that
//! gate. Circuits with the same unitary therefore transpile identically.

use std::collections::HashMap;
use std::f64::consts::{FRAC_PI_2, PI};

use serde::{Deserialize, Serialize};

use crate::circuit::{depth, embed, gate_counts, unitary, Circuit, GateOp};
use crate::error::{Error, Result};
use crate::gates::{matrix_of, GateKind};
use crate::linalg::{
    dagger, equal_up_to_global_phase, global_phase_between, kron, wrap_angle, SquareMatrix,
    COMPARISON_TOL,
};
use crate::pswap::build_iswap_reference;

/// RZ angles at or below this magnitude are dropped.
pub const ZERO_ANGLE_TOL: f64 = 1e-12;

const RZ_HALF: GateKind = GateKind::Rz(FRAC_PI_2);
const RZ_MINUS_HALF: GateKind = GateKind::Rz(-FRAC_PI_2);

/// Single-qubit gates around one ECR that together realize a CNOT.
///
/// "first"/"second" name the ECR operands, not the CNOT roles.
#[derive(Clone, Debug, PartialEq)]
pub struct CxDressing {
    pub pre_first: Vec<GateKind>,
    pub pre_second: Vec<GateKind>,
    pub post_first: Vec<GateKind>,
    pub post_second: Vec<GateKind>,
}

impl CxDressing {
    pub fn cost(&self) -> usize {
        self.pre_first.len()
            + self.pre_second.len()
            + self.post_first.len()
            + self.post_second.len()
    }

    /// The dressed ECR as gate operations on concrete qubits.
    pub fn emit(&self, first: usize, second: usize) -> Vec<GateOp> {
        let on = |kinds: &[GateKind], q: usize| {
            kinds
                .iter()
                .map(move |&k| GateOp::single(k, q))
                .collect::<Vec<_>>()
        };
        let mut ops = on(&self.pre_first, first);
        ops.extend(on(&self.pre_second, second));
        ops.push(GateOp::pair(GateKind::Ecr, first, second));
        ops.extend(on(&self.post_first, first));
        ops.extend(on(&self.post_second, second));
        ops
    }
}

/// CNOT whose control is the ECR's first operand.
pub fn aligned_cx_dressing() -> CxDressing {
    CxDressing {
        pre_first: vec![GateKind::X],
        pre_second: vec![],
        post_first: vec![RZ_HALF],
        post_second: vec![GateKind::SqrtX],
    }
}

/// CNOT whose control is the ECR's second operand.
pub fn reversed_cx_dressing() -> CxDressing {
    CxDressing {
        pre_first: vec![RZ_MINUS_HALF, GateKind::SqrtX, RZ_HALF],
        pre_second: vec![RZ_HALF, GateKind::SqrtX, RZ_MINUS_HALF],
        post_first: vec![GateKind::SqrtX, RZ_HALF],
        post_second: vec![RZ_MINUS_HALF, GateKind::SqrtX],
    }
}

/// ECR operands `(first, second)` for a pair in the native direction.
pub fn native_ecr_operands(a: usize, b: usize) -> (usize, usize) {
    (a.max(b), a.min(b))
}

/// Alphabet for the dressing search.
pub const DRESSING_ALPHABET: [GateKind; 5] = [
    RZ_HALF,
    RZ_MINUS_HALF,
    GateKind::Rz(PI),
    GateKind::SqrtX,
    GateKind::X,
];

fn sequence_matrix(seq: &[GateKind]) -> SquareMatrix {
    seq.iter()
        .fold(SquareMatrix::identity(2).expect("dim 2"), |acc, &k| {
            matrix_of(k).expect("alphabet gate").product(&acc)
        })
}

/// Rounded entries after removing the phase of the first sizable entry.
fn phase_key(m: &SquareMatrix) -> Vec<i64> {
    let pivot = m
        .entries()
        .iter()
        .find(|z| z.norm() > 0.3)
        .copied()
        .unwrap_or_default();
    let unphase = if pivot.norm() > 0.0 {
        pivot.conj() / pivot.norm()
    } else {
        pivot
    };
    m.entries()
        .iter()
        .flat_map(|z| {
            let w = z * unphase;
            [(w.re * 1e6).round() as i64, (w.im * 1e6).round() as i64]
        })
        .collect()
}

/// Distinct single-qubit elements reachable with at most `max_len` letters,
/// each represented by its shortest (then lexicographically first) word.
fn distinct_words(max_len: usize) -> Vec<Vec<GateKind>> {
    let mut words: Vec<Vec<GateKind>> = vec![vec![]];
    let mut frontier = vec![vec![]];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &frontier {
            for &g in &DRESSING_ALPHABET {
                let mut w2: Vec<GateKind> = w.clone();
                w2.push(g);
                next.push(w2);
            }
        }
        words.extend(next.iter().cloned());
        frontier = next;
    }
    let mut seen = HashMap::new();
    let mut out = Vec::new();
    for w in words {
        let key = phase_key(&sequence_matrix(&w));
        if let std::collections::hash_map::Entry::Vacant(e) = seen.entry(key) {
            e.insert(());
            out.push(w);
        }
    }
    out
}

/// All minimum-cost dressings of one ECR (operands `first` = q0,
/// `second` = q1) realizing a CNOT up to global phase, with at most three
/// gates per qubit per side drawn from [`DRESSING_ALPHABET`].
pub fn search_cx_dressings(control_is_first: bool) -> Vec<CxDressing> {
    let words = distinct_words(3);
    let cx_local = matrix_of(GateKind::Cx).expect("cx");
    let target = if control_is_first {
        cx_local
    } else {
        embed(&cx_local, &[1, 0], 2).expect("cx embed")
    };
    let ecr = matrix_of(GateKind::Ecr).expect("ecr");

    // target = (post_second (x) post_first) ECR (pre_second (x) pre_first)
    let mut right: HashMap<Vec<i64>, Vec<(usize, usize)>> = HashMap::new();
    for (i, pre_first) in words.iter().enumerate() {
        for (j, pre_second) in words.iter().enumerate() {
            let local =
                kron(&sequence_matrix(pre_second), &sequence_matrix(pre_first)).expect("2x2");
            right
                .entry(phase_key(&ecr.product(&local)))
                .or_default()
                .push((i, j));
        }
    }
    let mut found: Vec<CxDressing> = Vec::new();
    for post_first in &words {
        for post_second in &words {
            let local =
                kron(&sequence_matrix(post_second), &sequence_matrix(post_first)).expect("2x2");
            let key = phase_key(&dagger(&local).product(&target));
            for &(i, j) in right.get(&key).into_iter().flatten() {
                found.push(CxDressing {
                    pre_first: words[i].clone(),
                    pre_second: words[j].clone(),
                    post_first: post_first.clone(),
                    post_second: post_second.clone(),
                });
            }
        }
    }
    let best = found.iter().map(CxDressing::cost).min().unwrap_or(0);
    found.retain(|d| d.cost() == best);
    found
}

/// A single-gate rewrite into native gates with its phase certificate:
/// `matrix_of(source) = e^{i phase} * unitary(replacement)`.
#[derive(Clone, Debug, PartialEq)]
pub struct LoweringRule {
    pub source: GateOp,
    pub replacement: Vec<GateOp>,
    pub phase: f64,
}

pub fn lowering_rule(source: GateOp) -> Result<LoweringRule> {
    let width = source.qubits.iter().max().map_or(1, |q| q + 1);
    let replacement = lower_gate(&source)?;
    let original = unitary(&Circuit::from_ops(width, vec![source.clone()])?)?;
    let lowered = unitary(&Circuit::from_ops(width, replacement.clone())?)?;
    let phase = global_phase_between(&original, &lowered)?;
    Ok(LoweringRule {
        source,
        replacement,
        phase,
    })
}

fn lower_cx(control: usize, target: usize) -> Vec<GateOp> {
    let (first, second) = native_ecr_operands(control, target);
    if control == first {
        aligned_cx_dressing().emit(first, second)
    } else {
        reversed_cx_dressing().emit(first, second)
    }
}

/// Rewrites one gate into native gates. Native gates pass through unchanged.
pub fn lower_gate(op: &GateOp) -> Result<Vec<GateOp>> {
    if op.qubits.len() != op.kind.arity() {
        return Err(Error::Arity {
            gate: op.kind.name(),
            expected: op.kind.arity(),
            found: op.qubits.len(),
        });
    }
    let q = op.qubits[0];
    let single = |k: GateKind| vec![GateOp::single(k, q)];
    let ops = match op.kind {
        GateKind::I | GateKind::X | GateKind::SqrtX | GateKind::Rz(_) | GateKind::Ecr => {
            vec![op.clone()]
        }
        GateKind::Z => single(GateKind::Rz(PI)),
        GateKind::S => single(RZ_HALF),
        GateKind::Sdg => single(RZ_MINUS_HALF),
        GateKind::T => single(GateKind::Rz(PI / 4.0)),
        GateKind::Tdg => single(GateKind::Rz(-PI / 4.0)),
        GateKind::H => vec![
            GateOp::single(RZ_HALF, q),
            GateOp::single(GateKind::SqrtX, q),
            GateOp::single(RZ_HALF, q),
        ],
        GateKind::Cx => lower_cx(op.qubits[0], op.qubits[1]),
        GateKind::Swap => {
            let (a, b) = (op.qubits[0], op.qubits[1]);
            let mut out = lower_cx(a, b);
            out.extend(lower_cx(b, a));
            out.extend(lower_cx(a, b));
            out
        }
        GateKind::Iswap => {
            let map = [op.qubits[0], op.qubits[1]];
            let mut out = Vec::new();
            for inner in build_iswap_reference().ops() {
                let remapped = GateOp::new(
                    inner.kind,
                    inner.qubits.iter().map(|&k| map[k]).collect::<Vec<_>>(),
                );
                out.extend(lower_gate(&remapped)?);
            }
            out
        }
    };
    Ok(ops)
}

/// If `c` acts on exactly two qubits and its unitary equals a catalog
/// two-qubit gate up to phase, returns that gate.
pub fn recognize_two_qubit_gate(c: &Circuit) -> Result<Option<GateOp>> {
    if c.two_qubit_count() == 0 {
        return Ok(None);
    }
    let mut support: Vec<usize> = c
        .ops()
        .iter()
        .flat_map(|op| op.qubits.iter().copied())
        .collect();
    support.sort_unstable();
    support.dedup();
    let [a, b] = support[..] else {
        return Ok(None);
    };
    let local = |q: usize| usize::from(q == b);
    let remapped = c
        .ops()
        .iter()
        .map(|op| {
            GateOp::new(
                op.kind,
                op.qubits.iter().map(|&q| local(q)).collect::<Vec<_>>(),
            )
        })
        .collect();
    let u = unitary(&Circuit::from_ops(2, remapped)?)?;

    let (first, second) = native_ecr_operands(a, b);
    let candidates = [
        GateOp::pair(GateKind::Ecr, first, second),
        GateOp::pair(GateKind::Ecr, second, first),
        GateOp::pair(GateKind::Cx, first, second),
        GateOp::pair(GateKind::Cx, second, first),
        GateOp::pair(GateKind::Swap, a, b),
        GateOp::pair(GateKind::Iswap, a, b),
    ];
    for cand in candidates {
        let m = embed(
            &matrix_of(cand.kind)?,
            &[local(cand.qubits[0]), local(cand.qubits[1])],
            2,
        )?;
        if equal_up_to_global_phase(&u, &m, COMPARISON_TOL)? {
            return Ok(Some(cand));
        }
    }
    Ok(None)
}

enum Fusion {
    Keep,
    Replace(GateKind),
    Cancel,
}

fn fuse(prev: GateKind, next: GateKind) -> Fusion {
    match (prev, next) {
        (GateKind::Rz(a), GateKind::Rz(b)) => {
            let merged = wrap_angle(a + b);
            if merged.abs() <= ZERO_ANGLE_TOL {
                Fusion::Cancel
            } else {
                Fusion::Replace(GateKind::Rz(merged))
            }
        }
        (GateKind::SqrtX, GateKind::SqrtX) => Fusion::Replace(GateKind::X),
        (GateKind::X, GateKind::X) => Fusion::Cancel,
        _ => Fusion::Keep,
    }
}

fn peephole_pass(ops: &[GateOp], width: usize) -> (Vec<GateOp>, bool) {
    let mut out: Vec<Option<GateOp>> = Vec::with_capacity(ops.len());
    // Per qubit, indices into `out` of the ops touching it, most recent last.
    let mut history: Vec<Vec<usize>> = vec![Vec::new(); width];
    let mut changed = false;
    for op in ops {
        match op.kind {
            GateKind::I => {
                changed = true;
                continue;
            }
            GateKind::Rz(t) if wrap_angle(t).abs() <= ZERO_ANGLE_TOL => {
                changed = true;
                continue;
            }
            _ => {}
        }
        if let [q] = op.qubits[..] {
            let prev = history[q]
                .last()
                .and_then(|&j| out[j].as_ref().map(|p| (j, p)))
                .filter(|(_, p)| !p.is_two_qubit())
                .map(|(j, p)| (j, p.kind));
            if let Some((j, prev_kind)) = prev {
                match fuse(prev_kind, op.kind) {
                    Fusion::Replace(kind) => {
                        out[j] = Some(GateOp::single(kind, q));
                        changed = true;
                        continue;
                    }
                    Fusion::Cancel => {
                        out[j] = None;
                        history[q].pop();
                        changed = true;
                        continue;
                    }
                    Fusion::Keep => {}
                }
            }
        }
        for &q in &op.qubits {
            history[q].push(out.len());
        }
        out.push(Some(op.clone()));
    }
    (out.into_iter().flatten().collect(), changed)
}

fn ensure_native(c: &Circuit) -> Result<()> {
    match c.ops().iter().find(|op| !op.kind.is_native()) {
        Some(op) => Err(Error::NonNative(op.kind.name())),
        None => Ok(()),
    }
}

/// Merges and cancels adjacent single-qubit native gates until nothing changes.
pub fn peephole(c: &Circuit) -> Result<Circuit> {
    ensure_native(c)?;
    let mut ops = c.ops().to_vec();
    loop {
        let (next, changed) = peephole_pass(&ops, c.n_qubits());
        ops = next;
        if !changed {
            break;
        }
    }
    Circuit::from_ops(c.n_qubits(), ops)
}

/// Lowers every gate to the native set and runs the peephole optimizer.
pub fn transpile(c: &Circuit) -> Result<Circuit> {
    let lowered = match recognize_two_qubit_gate(c)? {
        Some(op) => lower_gate(&op)?,
        None => {
            let mut out = Vec::new();
            for op in c.ops() {
                out.extend(lower_gate(op)?);
            }
            out
        }
    };
    peephole(&Circuit::from_ops(c.n_qubits(), lowered)?)
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct TqcReport {
    pub n1: usize,
    pub n2: usize,
    pub depth: usize,
    pub tqc: usize,
}

impl TqcReport {
    pub fn new(n1: usize, n2: usize, depth: usize) -> Self {
        Self {
            n1,
            n2,
            depth,
            tqc: n1 + n2 + depth,
        }
    }
}

/// Cost of an all-native circuit.
pub fn tqc(c: &Circuit) -> Result<TqcReport> {
    ensure_native(c)?;
    let counts = gate_counts(c);
    Ok(TqcReport::new(counts.n1, counts.n2, depth(c)))
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct CostReduction {
    pub tqc_reduction_pct: f64,
    pub depth_reduction_pct: f64,
}

/// Percentage savings of `candidate` relative to `baseline`.
pub fn compare(baseline: &TqcReport, candidate: &TqcReport) -> Result<CostReduction> {
    if baseline.tqc == 0 || baseline.depth == 0 {
        return Err(Error::ZeroBaseline);
    }
    let pct = |a: usize, b: usize| (a as f64 - b as f64) / a as f64 * 100.0;
    Ok(CostReduction {
        tqc_reduction_pct: pct(baseline.tqc, candidate.tqc),
        depth_reduction_pct: pct(baseline.depth, candidate.depth),
    })
}
