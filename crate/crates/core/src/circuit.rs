// Copyright 2026 The pswap Authors
// SPDX-License-Identifier: Apache-2.0

//! Ordered gate lists and the metrics computed over them.

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::gates::{matrix_of, GateKind};
use crate::linalg::{apply, ComplexScalar, SquareMatrix, StateVector};

/// Widest circuit that `unitary` will evaluate densely.
pub const MAX_DENSE_QUBITS: usize = 4;

/// One gate application. For `cx` the qubits are `[control, target]`; for
/// `ecr` they are `[first, second]`.
#[derive(Clone, Debug, PartialEq)]
pub struct GateOp {
    pub kind: GateKind,
    pub qubits: Vec<usize>,
}

impl GateOp {
    pub fn new(kind: GateKind, qubits: impl Into<Vec<usize>>) -> Self {
        Self {
            kind,
            qubits: qubits.into(),
        }
    }

    pub fn single(kind: GateKind, qubit: usize) -> Self {
        Self::new(kind, vec![qubit])
    }

    pub fn pair(kind: GateKind, first: usize, second: usize) -> Self {
        Self::new(kind, vec![first, second])
    }

    pub fn is_two_qubit(&self) -> bool {
        self.qubits.len() == 2
    }

    fn validate(&self, width: usize) -> Result<()> {
        let gate = self.kind.name();
        if self.qubits.len() != self.kind.arity() {
            return Err(Error::Arity {
                gate,
                expected: self.kind.arity(),
                found: self.qubits.len(),
            });
        }
        for (i, &q) in self.qubits.iter().enumerate() {
            if q >= width {
                return Err(Error::QubitOutOfRange { qubit: q, width });
            }
            if self.qubits[..i].contains(&q) {
                return Err(Error::DuplicateQubit { gate, qubit: q });
            }
        }
        Ok(())
    }
}

/// A validated circuit. Operations apply in list order.
#[derive(Clone, Debug, PartialEq)]
pub struct Circuit {
    n_qubits: usize,
    ops: Vec<GateOp>,
}

impl Circuit {
    /// Empty circuit on `n_qubits` wires.
    pub fn new(n_qubits: usize) -> Self {
        assert!(n_qubits > 0, "a circuit needs at least one qubit");
        Self {
            n_qubits,
            ops: Vec::new(),
        }
    }

    pub fn from_ops(n_qubits: usize, ops: Vec<GateOp>) -> Result<Self> {
        if n_qubits == 0 {
            return Err(Error::QubitOutOfRange { qubit: 0, width: 0 });
        }
        for op in &ops {
            op.validate(n_qubits)?;
        }
        Ok(Self { n_qubits, ops })
    }

    /// Returns a copy with one more gate appended.
    pub fn then(mut self, kind: GateKind, qubits: impl Into<Vec<usize>>) -> Result<Self> {
        let op = GateOp::new(kind, qubits);
        op.validate(self.n_qubits)?;
        self.ops.push(op);
        Ok(self)
    }

    /// `self` followed by `next`.
    pub fn compose(&self, next: &Circuit) -> Result<Circuit> {
        let n_qubits = self.n_qubits.max(next.n_qubits);
        let ops = self.ops.iter().chain(&next.ops).cloned().collect();
        Circuit::from_ops(n_qubits, ops)
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn ops(&self) -> &[GateOp] {
        &self.ops
    }

    pub fn len(&self) -> usize {
        self.ops.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ops.is_empty()
    }

    pub fn two_qubit_count(&self) -> usize {
        self.ops.iter().filter(|op| op.is_two_qubit()).count()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("circuit serialization is infallible")
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("circuit serialization is infallible")
    }

    pub fn from_json(text: &str) -> Result<Circuit> {
        let doc: CircuitDoc = serde_json::from_str(text)?;
        doc.try_into()
    }
}

/// Embeds a gate matrix acting on `qubits` into the full `n_qubits` space.
///
/// The local basis index packs `qubits[k]` into bit `k`.
pub fn embed(local: &SquareMatrix, qubits: &[usize], n_qubits: usize) -> Result<SquareMatrix> {
    if n_qubits > MAX_DENSE_QUBITS {
        return Err(Error::WidthOverflow(n_qubits));
    }
    if local.dim() != 1 << qubits.len() {
        return Err(Error::DimensionMismatch {
            left: local.dim(),
            right: 1 << qubits.len(),
        });
    }
    let dim = 1usize << n_qubits;
    let mask: usize = qubits.iter().map(|q| 1 << q).sum();
    let gather = |full: usize| -> usize {
        qubits
            .iter()
            .enumerate()
            .map(|(k, &q)| ((full >> q) & 1) << k)
            .sum()
    };
    let scatter = |local_idx: usize| -> usize {
        qubits
            .iter()
            .enumerate()
            .map(|(k, &q)| ((local_idx >> k) & 1) << q)
            .sum()
    };
    let mut out = SquareMatrix::zeros(dim)?;
    for col in 0..dim {
        let rest = col & !mask;
        let lin = gather(col);
        for lout in 0..local.dim() {
            let z = local.get(lout, lin);
            if z != ComplexScalar::default() {
                out.set(rest | scatter(lout), col, z);
            }
        }
    }
    Ok(out)
}

/// Full-width matrix of a single operation.
pub fn op_matrix(op: &GateOp, n_qubits: usize) -> Result<SquareMatrix> {
    embed(&matrix_of(op.kind)?, &op.qubits, n_qubits)
}

/// Product of all gates, first op rightmost.
pub fn unitary(c: &Circuit) -> Result<SquareMatrix> {
    if c.n_qubits > MAX_DENSE_QUBITS {
        return Err(Error::WidthOverflow(c.n_qubits));
    }
    let mut u = SquareMatrix::identity(1 << c.n_qubits)?;
    for op in &c.ops {
        u = op_matrix(op, c.n_qubits)?.product(&u);
    }
    Ok(u)
}

/// Runs `c` on `input`, returning the state after every prefix
/// (`states[k]` is the state after `k` gates).
pub fn simulate_prefixes(c: &Circuit, input: &StateVector) -> Result<Vec<StateVector>> {
    if input.n_qubits() != c.n_qubits {
        return Err(Error::DimensionMismatch {
            left: 1 << c.n_qubits,
            right: input.dim(),
        });
    }
    let mut states = Vec::with_capacity(c.len() + 1);
    states.push(input.clone());
    for op in &c.ops {
        let next = apply(
            &op_matrix(op, c.n_qubits)?,
            states.last().expect("non-empty"),
        )?;
        states.push(next);
    }
    Ok(states)
}

pub fn simulate(c: &Circuit, input: &StateVector) -> Result<StateVector> {
    let mut states = simulate_prefixes(c, input)?;
    Ok(states.pop().expect("at least the input state"))
}

/// ASAP layering with unit cost per gate regardless of arity.
pub fn depth(c: &Circuit) -> usize {
    let mut frontier = vec![0usize; c.n_qubits];
    let mut deepest = 0;
    for op in &c.ops {
        let layer = 1 + op.qubits.iter().map(|&q| frontier[q]).max().unwrap_or(0);
        for &q in &op.qubits {
            frontier[q] = layer;
        }
        deepest = deepest.max(layer);
    }
    deepest
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct GateCounts {
    /// Single-qubit gates, identities excluded.
    pub n1: usize,
    /// Two-qubit gates.
    pub n2: usize,
    /// How many counted gates fall outside the native set.
    pub non_native: usize,
}

impl GateCounts {
    pub fn all_native(&self) -> bool {
        self.non_native == 0
    }
}

pub fn gate_counts(c: &Circuit) -> GateCounts {
    let mut counts = GateCounts::default();
    for op in &c.ops {
        match op.kind {
            GateKind::I => continue,
            _ if op.is_two_qubit() => counts.n2 += 1,
            _ => counts.n1 += 1,
        }
        if !op.kind.is_native() {
            counts.non_native += 1;
        }
    }
    counts
}

#[derive(Serialize, Deserialize)]
struct GateDoc {
    name: String,
    qubits: Vec<usize>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    params: Vec<f64>,
}

#[derive(Serialize, Deserialize)]
struct CircuitDoc {
    qubits: usize,
    gates: Vec<GateDoc>,
}

impl TryFrom<CircuitDoc> for Circuit {
    type Error = Error;

    fn try_from(doc: CircuitDoc) -> Result<Circuit> {
        let ops = doc
            .gates
            .into_iter()
            .map(|g| {
                Ok(GateOp::new(
                    GateKind::from_name(&g.name, &g.params)?,
                    g.qubits,
                ))
            })
            .collect::<Result<Vec<_>>>()?;
        Circuit::from_ops(doc.qubits, ops)
    }
}

impl From<&Circuit> for CircuitDoc {
    fn from(c: &Circuit) -> Self {
        CircuitDoc {
            qubits: c.n_qubits,
            gates: c
                .ops
                .iter()
                .map(|op| GateDoc {
                    name: op.kind.name().to_string(),
                    qubits: op.qubits.clone(),
                    params: op.kind.params(),
                })
                .collect(),
        }
    }
}

impl Serialize for Circuit {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        CircuitDoc::from(self).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Circuit {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let doc = CircuitDoc::deserialize(deserializer)?;
        Circuit::try_from(doc).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{mat_mul, CONSTRUCTION_TOL};

    fn cx(c: usize, t: usize) -> GateOp {
        GateOp::pair(GateKind::Cx, c, t)
    }

    #[test]
    fn empty_circuit_is_identity() {
        let u = unitary(&Circuit::new(2)).unwrap();
        assert_eq!(u, SquareMatrix::identity(4).unwrap());
        assert_eq!(depth(&Circuit::new(2)), 0);
        assert_eq!(gate_counts(&Circuit::new(2)), GateCounts::default());
    }

    #[test]
    fn three_cnots_make_a_swap() {
        let c = Circuit::from_ops(2, vec![cx(0, 1), cx(1, 0), cx(0, 1)]).unwrap();
        let u = unitary(&c).unwrap();
        assert!(u.approx_eq(&matrix_of(GateKind::Swap).unwrap(), 0.0));
        assert_eq!(depth(&c), 3);
    }

    #[test]
    fn cx_orientation_follows_qubit_list() {
        // control q1, target q0: |10> -> |11>
        let c = Circuit::from_ops(2, vec![cx(1, 0)]).unwrap();
        let out = simulate(&c, &StateVector::from_label("10").unwrap()).unwrap();
        assert!(out.approx_eq(&StateVector::from_label("11").unwrap(), 0.0));
        let out = simulate(&c, &StateVector::from_label("01").unwrap()).unwrap();
        assert!(out.approx_eq(&StateVector::from_label("01").unwrap(), 0.0));
    }

    #[test]
    fn disjoint_gates_share_a_layer() {
        let c = Circuit::new(2)
            .then(GateKind::X, [0])
            .unwrap()
            .then(GateKind::X, [1])
            .unwrap();
        assert_eq!(depth(&c), 1);
    }

    #[test]
    fn identity_excluded_from_counts() {
        let c = Circuit::from_ops(
            2,
            vec![
                GateOp::single(GateKind::I, 0),
                GateOp::single(GateKind::SqrtX, 0),
                GateOp::single(GateKind::H, 1),
                GateOp::pair(GateKind::Ecr, 0, 1),
            ],
        )
        .unwrap();
        let counts = gate_counts(&c);
        assert_eq!((counts.n1, counts.n2, counts.non_native), (2, 1, 1));
        assert!(!counts.all_native());
    }

    #[test]
    fn compose_applies_left_first() {
        let a = Circuit::from_ops(2, vec![GateOp::single(GateKind::H, 0), cx(0, 1)]).unwrap();
        let b = Circuit::from_ops(2, vec![GateOp::single(GateKind::S, 1), cx(1, 0)]).unwrap();
        let ab = unitary(&a.compose(&b).unwrap()).unwrap();
        let expected = mat_mul(&unitary(&b).unwrap(), &unitary(&a).unwrap()).unwrap();
        assert!(ab.approx_eq(&expected, CONSTRUCTION_TOL));
    }

    #[test]
    fn validation_errors() {
        assert!(matches!(
            Circuit::from_ops(2, vec![cx(0, 2)]),
            Err(Error::QubitOutOfRange { qubit: 2, width: 2 })
        ));
        assert!(matches!(
            Circuit::from_ops(2, vec![cx(1, 1)]),
            Err(Error::DuplicateQubit { .. })
        ));
        assert!(matches!(
            Circuit::from_ops(2, vec![GateOp::new(GateKind::X, vec![0, 1])]),
            Err(Error::Arity { .. })
        ));
        let wide = Circuit::new(5).then(GateKind::X, [4]).unwrap();
        assert!(matches!(unitary(&wide), Err(Error::WidthOverflow(5))));
        assert_eq!(depth(&wide), 1);
    }

    #[test]
    fn embedding_on_wider_registers() {
        // X on q2 of a 3-qubit register maps |000> to |100>.
        let c = Circuit::new(3).then(GateKind::X, [2]).unwrap();
        let out = simulate(&c, &StateVector::basis(3, 0).unwrap()).unwrap();
        assert!(out.approx_eq(&StateVector::basis(3, 4).unwrap(), 0.0));
        // CX(2 -> 0) on |100> gives |101>.
        let c = Circuit::from_ops(3, vec![cx(2, 0)]).unwrap();
        let out = simulate(&c, &StateVector::basis(3, 4).unwrap()).unwrap();
        assert!(out.approx_eq(&StateVector::basis(3, 5).unwrap(), 0.0));
    }

    #[test]
    fn json_format() {
        let c = Circuit::from_ops(
            2,
            vec![
                GateOp::single(GateKind::Rz(0.5), 0),
                GateOp::pair(GateKind::Ecr, 1, 0),
            ],
        )
        .unwrap();
        let text = c.to_json();
        assert_eq!(
            text,
            r#"{"qubits":2,"gates":[{"name":"rz","qubits":[0],"params":[0.5]},{"name":"ecr","qubits":[1,0]}]}"#
        );
        assert_eq!(Circuit::from_json(&text).unwrap(), c);
    }

    #[test]
    fn json_rejects_malformed_documents() {
        assert!(Circuit::from_json("{").is_err());
        assert!(matches!(
            Circuit::from_json(r#"{"qubits":2,"gates":[{"name":"foo","qubits":[0]}]}"#),
            Err(Error::UnknownGate(_))
        ));
        assert!(matches!(
            Circuit::from_json(
                r#"{"qubits":2,"gates":[{"name":"rz","qubits":[0],"params":[9.0]}]}"#
            ),
            Err(Error::AngleOutOfRange(_))
        ));
        assert!(matches!(
            Circuit::from_json(r#"{"qubits":1,"gates":[{"name":"cx","qubits":[0,1]}]}"#),
            Err(Error::QubitOutOfRange { .. })
        ));
    }
}
