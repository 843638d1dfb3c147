// Copyright 2026 The pswap Authors
// SPDX-License-Identifier: Apache-2.0

//! Acceptance criteria, one PASS/FAIL line each. Runs without the libtest
//! harness so the lines are always printed.

// `!(x <= tol)` is deliberate: a NaN must fail.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2, FRAC_PI_8, PI};
use std::io::Write;
use std::process::{Command, Stdio};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

use pswap_core::bloch::{bloch_vector, segment_classify, Granularity};
use pswap_core::circuit::{simulate, simulate_prefixes};
use pswap_core::pswap::{wiring_oracle, Wiring};
use pswap_core::{
    boolean_equivalence, build_iswap_reference, build_pswap, build_swap_standard, compare, dagger,
    equal_up_to_global_phase, global_phase_between, mat_mul, matrix_of, tqc, transpile, unitary,
    verify_table1, BlochVector, Circuit, ComplexScalar, GateKind, GateOp, PhaseConfig, StateVector,
    TqcReport,
};

const CONSTRUCTION: f64 = 1e-12;
const COMPARISON: f64 = 1e-9;

// Cost bands: N1 and depth are targets with slack, N2 is exact.
const N1_SLACK: usize = 3;
const DEPTH_SLACK: usize = 2;
const TQC_REDUCTION_PCT: (f64, f64) = (20.0, 30.0);
const DEPTH_REDUCTION_PCT: (f64, f64) = (20.0, 32.0);

// Published counts (n1, n2, depth).
const SWAP_REF: (usize, usize, usize) = (20, 3, 15);
const ISWAP_REF: (usize, usize, usize) = (16, 2, 11);
const PSWAP_REF: (usize, usize, usize) = (16, 2, 11);

const RANDOM_CIRCUITS: usize = 500;
const MAX_RANDOM_LEN: usize = 12;
const SEED: u64 = 0x0070_5357_4150;

type Outcome = Result<String, String>;
type Criterion = (&'static str, Duration, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn e<E: std::fmt::Display>(err: E) -> String {
    err.to_string()
}

fn gate_algebra() -> Outcome {
    let mut kinds = GateKind::ALL_FIXED.to_vec();
    kinds.extend([-PI, -FRAC_PI_2, 0.0, 0.7, FRAC_PI_2, PI].map(GateKind::Rz));
    let mut worst: f64 = 0.0;
    for k in &kinds {
        worst = worst.max(matrix_of(*k).map_err(e)?.unitarity_deviation());
    }
    ensure!(worst <= CONSTRUCTION, "unitarity deviation {worst:e}");
    let m = |k| matrix_of(k).unwrap();
    let sq = |k| mat_mul(&m(k), &m(k)).unwrap();
    ensure!(
        sq(GateKind::SqrtX).approx_eq(&m(GateKind::X), CONSTRUCTION),
        "SX^2 != X"
    );
    ensure!(
        sq(GateKind::S).approx_eq(&m(GateKind::Z), CONSTRUCTION),
        "S^2 != Z"
    );
    let t4 = mat_mul(&sq(GateKind::T), &sq(GateKind::T)).unwrap();
    ensure!(t4.approx_eq(&m(GateKind::Z), CONSTRUCTION), "T^4 != Z");
    let minus_i_z = m(GateKind::Z).scale(ComplexScalar::new(0.0, -1.0));
    ensure!(
        m(GateKind::Rz(PI)).approx_eq(&minus_i_z, CONSTRUCTION),
        "RZ(pi) != -iZ"
    );
    let phase = global_phase_between(&m(GateKind::Rz(PI)), &m(GateKind::Z)).map_err(e)?;
    ensure!(
        (phase + FRAC_PI_2).abs() <= CONSTRUCTION,
        "RZ(pi) vs Z phase {phase}"
    );
    Ok(format!(
        "{} gates, max deviation {worst:.1e}, phase {phase:.12}",
        kinds.len()
    ))
}

fn phase_table() -> Outcome {
    let report = verify_table1();
    ensure!(
        report.all_pass(),
        "{}/{} cells",
        report.passed(),
        report.total()
    );
    let oracle = wiring_oracle();
    let full: Vec<&Wiring> = oracle
        .iter()
        .filter(|(_, n)| *n == 24)
        .map(|(w, _)| w)
        .collect();
    ensure!(oracle.len() == 8, "{} wiring variants", oracle.len());
    ensure!(
        full.len() == 1,
        "{} variants reproduce every cell",
        full.len()
    );
    ensure!(
        *full[0] == Wiring::CANONICAL,
        "selected wiring is not the adopted one"
    );
    let counts: Vec<usize> = oracle.iter().map(|(_, n)| *n).collect();
    Ok(format!(
        "{}/{} cells; wiring cells per variant {counts:?}",
        report.passed(),
        report.total()
    ))
}

fn iswap_identity() -> Outcome {
    let iswap = matrix_of(GateKind::Iswap).map_err(e)?;
    let fwd = unitary(&build_pswap(PhaseConfig::ISWAP).map_err(e)?).map_err(e)?;
    let inv = unitary(&build_pswap(PhaseConfig::ISWAP_INVERSE).map_err(e)?).map_err(e)?;
    let d1 = fwd.max_abs_diff(&iswap).map_err(e)?;
    let d2 = inv.max_abs_diff(&dagger(&iswap)).map_err(e)?;
    ensure!(
        d1 <= CONSTRUCTION,
        "p-SWAP(pi/2,-pi/2) differs from iSWAP by {d1:e}"
    );
    ensure!(
        d2 <= CONSTRUCTION,
        "p-SWAP(-pi/2,pi/2) differs from iSWAP^dagger by {d2:e}"
    );
    Ok(format!("max entry error {:.1e}", d1.max(d2)))
}

fn boolean_grid() -> Outcome {
    let steps: Vec<f64> = (0..=16).map(|k| -PI + k as f64 * FRAC_PI_8).collect();
    let mut n = 0;
    for &v in &steps {
        for &w in &steps {
            let c = build_pswap(PhaseConfig::new(Some(v), Some(w)).map_err(e)?).map_err(e)?;
            ensure!(
                c.two_qubit_count() == 2,
                "({v}, {w}) uses {} CNOTs",
                c.two_qubit_count()
            );
            ensure!(
                boolean_equivalence(&unitary(&c).map_err(e)?),
                "({v}, {w}) not SWAP-like"
            );
            n += 1;
        }
    }
    ensure!(n == 289, "grid has {n} points");
    Ok(format!(
        "{n} configs, all 2 CNOTs and SWAP-equivalent on basis states"
    ))
}

fn random_circuit(rng: &mut ChaCha8Rng) -> Circuit {
    let len = rng.gen_range(0..=MAX_RANDOM_LEN);
    let ops = (0..len)
        .map(|_| {
            let k = rng.gen_range(0..14);
            if k < 4 {
                let kind = [GateKind::Cx, GateKind::Ecr, GateKind::Swap, GateKind::Iswap][k];
                let first = rng.gen_range(0..2);
                GateOp::pair(kind, first, 1 - first)
            } else {
                let kind = match k {
                    4 => GateKind::I,
                    5 => GateKind::X,
                    6 => GateKind::SqrtX,
                    7 => GateKind::Z,
                    8 => GateKind::S,
                    9 => GateKind::Sdg,
                    10 => GateKind::T,
                    11 => GateKind::Tdg,
                    12 => GateKind::H,
                    _ => GateKind::Rz(rng.gen_range(-PI..=PI)),
                };
                GateOp::single(kind, rng.gen_range(0..2))
            }
        })
        .collect();
    Circuit::from_ops(2, ops).unwrap()
}

fn transpile_soundness() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for i in 0..RANDOM_CIRCUITS {
        let c = random_circuit(&mut rng);
        let t = transpile(&c).map_err(e)?;
        let same = equal_up_to_global_phase(
            &unitary(&c).map_err(e)?,
            &unitary(&t).map_err(e)?,
            COMPARISON,
        )
        .map_err(e)?;
        ensure!(same, "circuit #{i} changed its unitary: {}", c.to_json());
        ensure!(
            transpile(&t).map_err(e)? == t,
            "circuit #{i}: second pass changed the output"
        );
    }
    Ok(format!(
        "{RANDOM_CIRCUITS} random circuits (seed {SEED:#x})"
    ))
}

fn cost(c: &Circuit) -> Result<TqcReport, String> {
    tqc(&transpile(c).map_err(e)?).map_err(e)
}

fn within(x: usize, target: usize, slack: usize) -> bool {
    x.abs_diff(target) <= slack
}

fn cost_claim() -> Outcome {
    let swap = cost(&build_swap_standard())?;
    let iswap = cost(&build_iswap_reference())?;
    let pswap = cost(&build_pswap(PhaseConfig::BOOLEAN).map_err(e)?)?;
    let pswap_i = cost(&build_pswap(PhaseConfig::ISWAP).map_err(e)?)?;
    ensure!(
        (swap.n2, iswap.n2, pswap.n2) == (3, 2, 2),
        "N2 = ({}, {}, {})",
        swap.n2,
        iswap.n2,
        pswap.n2
    );
    ensure!(
        pswap_i == iswap,
        "iSWAP-configured p-SWAP {pswap_i:?} vs reference {iswap:?}"
    );
    for (name, r, reference) in [
        ("swap", swap, SWAP_REF),
        ("iswap", iswap, ISWAP_REF),
        ("pswap", pswap, PSWAP_REF),
    ] {
        ensure!(
            within(r.n1, reference.0, N1_SLACK),
            "{name} N1 {} outside {}±{N1_SLACK}",
            r.n1,
            reference.0
        );
        ensure!(
            within(r.depth, reference.2, DEPTH_SLACK),
            "{name} depth {} outside {}±{DEPTH_SLACK}",
            r.depth,
            reference.2
        );
    }
    let red = compare(&swap, &pswap).map_err(e)?;
    let inside = |x: f64, (lo, hi): (f64, f64)| (lo..=hi).contains(&x);
    ensure!(
        inside(red.tqc_reduction_pct, TQC_REDUCTION_PCT),
        "TQC reduction {:.2}%",
        red.tqc_reduction_pct
    );
    ensure!(
        inside(red.depth_reduction_pct, DEPTH_REDUCTION_PCT),
        "depth reduction {:.2}%",
        red.depth_reduction_pct
    );
    let exact = |r: TqcReport, reference: (usize, usize, usize)| (r.n1, r.n2, r.depth) == reference;
    let stretch = [
        ("swap", swap, SWAP_REF),
        ("iswap", iswap, ISWAP_REF),
        ("pswap", pswap, PSWAP_REF),
    ]
    .iter()
    .map(|(n, r, reference)| {
        format!(
            "{n} {}",
            if exact(*r, *reference) {
                "exact"
            } else {
                "off"
            }
        )
    })
    .collect::<Vec<_>>()
    .join(", ");
    Ok(format!(
        "swap {:?} iswap {:?} pswap {:?}; reductions {:.2}% / {:.2}%; stretch: {stretch}",
        (swap.n1, swap.n2, swap.depth, swap.tqc),
        (iswap.n1, iswap.n2, iswap.depth, iswap.tqc),
        (pswap.n1, pswap.n2, pswap.depth, pswap.tqc),
        red.tqc_reduction_pct,
        red.depth_reduction_pct
    ))
}

fn bloch_tracing() -> Outcome {
    let c = build_pswap(PhaseConfig::BOOLEAN).map_err(e)?;
    let input = StateVector::from_label("00").map_err(e)?;
    let states = simulate_prefixes(&c, &input).map_err(e)?;
    let b = |k: usize, q: usize| bloch_vector(&states[k], q).unwrap();
    // Stage one is SX on q0 followed by the first CX.
    ensure!(
        c.ops()[0].kind == GateKind::SqrtX && c.ops()[1].kind == GateKind::Cx,
        "unexpected stage one"
    );
    let after_sx = b(1, 0);
    ensure!(
        after_sx.max_abs_diff(&BlochVector::new(0.0, -1.0, 0.0)) <= COMPARISON,
        "after SX {after_sx:?}"
    );
    let origin = BlochVector::new(0.0, 0.0, 0.0);
    for q in 0..2 {
        ensure!(
            b(2, q).max_abs_diff(&origin) <= COMPARISON,
            "q{q} after CX {:?}",
            b(2, q)
        );
    }
    let last = states.len() - 1;
    let north = BlochVector::new(0.0, 0.0, 1.0);
    for q in 0..2 {
        ensure!(
            b(last, q).max_abs_diff(&north) <= COMPARISON,
            "final q{q} {:?}",
            b(last, q)
        );
    }
    let rz = Circuit::new(1)
        .then(GateKind::Rz(FRAC_PI_2), [0])
        .map_err(e)?;
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for _ in 0..100 {
        let phi: f64 = rng.gen_range(-PI..PI);
        let s = StateVector::new(vec![
            ComplexScalar::new(FRAC_1_SQRT_2, 0.0),
            ComplexScalar::from_polar(FRAC_1_SQRT_2, phi),
        ])
        .map_err(e)?;
        let before = bloch_vector(&s, 0).map_err(e)?;
        let after = bloch_vector(&simulate(&rz, &s).map_err(e)?, 0).map_err(e)?;
        let seg = |v: BlochVector| segment_classify(v.azimuth(), Granularity::Quadrant);
        ensure!(
            seg(after) == (seg(before) + 1) % 4,
            "RZ(pi/2) from azimuth {phi}"
        );
        ensure!(
            (after.x + before.y).abs() <= COMPARISON && (after.y - before.x).abs() <= COMPARISON,
            "RZ(pi/2) is not a quarter turn at {phi}"
        );
    }
    Ok("stage marginals and quarter-turn segments as expected".into())
}

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn pswap(args: &[&str], stdin: Option<&str>) -> Run {
    let mut child = Command::new(env!("CARGO_BIN_EXE_pswap"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn pswap");
    if let Some(text) = stdin {
        child
            .stdin
            .take()
            .unwrap()
            .write_all(text.as_bytes())
            .unwrap();
    } else {
        drop(child.stdin.take());
    }
    let out = child.wait_with_output().unwrap();
    Run {
        code: out.status.code().unwrap_or(-1),
        stdout: String::from_utf8_lossy(&out.stdout).into_owned(),
        stderr: String::from_utf8_lossy(&out.stderr).into_owned(),
    }
}

const FIXTURES: &[(&[&str], i32)] = &[
    (&["pswap", "table1"], 0),
    (&["--json", "pswap", "table1"], 0),
    (&["--tol", "0", "pswap", "table1"], 1),
    (
        &["pswap", "phases", "--v", "none", "--w", "none", "--json"],
        0,
    ),
    (&["pswap", "phases", "--v", "pi/2", "--w", "-pi/2"], 0),
    (&["pswap", "build", "--v", "4", "--w", "0"], 2),
    (&["pswap", "build", "--v", "abc"], 2),
    (&["gate", "show", "rz", "--param", "3.141592653589793"], 0),
    (&["gate", "show", "rz"], 2),
    (&["gate", "show", "rz", "--param", "7"], 2),
    (&["gate", "show", "toffoli"], 2),
    (&["swap", "build"], 0),
    (&["iswap", "build", "--json"], 0),
    (&["tqc", "--builtin", "swap"], 0),
    (&["tqc", "--builtin", "nope"], 2),
    (&["tqc", "--in", "/nonexistent/circuit.json"], 2),
    (&["transpile", "--builtin", "pswap:pi,none"], 0),
    (&["compare", "--a", "swap", "--b", "pswap"], 0),
    (&["compare", "--a", "swap"], 2),
    (&["trace", "--builtin", "pswap", "--input", "01"], 0),
    (&["trace", "--builtin", "pswap", "--input", "012"], 2),
    (&["--tol", "-1", "pswap", "table1"], 2),
    (&["frobnicate"], 2),
    (&[], 2),
];

fn cli_contract() -> Outcome {
    for (args, expected) in FIXTURES {
        let run = pswap(args, None);
        ensure!(
            run.code == *expected,
            "`pswap {}` exited {} (want {expected})",
            args.join(" "),
            run.code
        );
        if *expected == 2 {
            let lines = run.stderr.trim_end().lines().count();
            ensure!(
                lines == 1,
                "`pswap {}` wrote {lines} stderr lines",
                args.join(" ")
            );
        }
        if args.contains(&"--json") && run.code != 2 {
            serde_json::from_str::<Value>(&run.stdout)
                .map_err(|err| format!("`pswap {}` JSON: {err}", args.join(" ")))?;
        }
    }
    let malformed = pswap(
        &["tqc"],
        Some("{\"qubits\": 2, \"gates\": [{\"name\": \"ry\", \"qubits\": [0]}]}"),
    );
    ensure!(
        malformed.code == 2,
        "malformed stdin circuit exited {}",
        malformed.code
    );

    let table = pswap(&["pswap", "table1"], None);
    ensure!(
        table.stdout.lines().any(|l| l.trim() == "24/24 PASS"),
        "no 24/24 PASS trailer"
    );

    let piped = pswap(
        &["tqc", "--json"],
        Some(&pswap(&["transpile", "--builtin", "swap"], None).stdout),
    );
    let direct = pswap(&["tqc", "--builtin", "swap", "--json"], None);
    let a: Value = serde_json::from_str(&piped.stdout).map_err(e)?;
    let b: Value = serde_json::from_str(&direct.stdout).map_err(e)?;
    ensure!(a == b, "pipeline {a} vs direct {b}");

    let cmp = pswap(&["compare", "--a", "swap", "--b", "pswap", "--json"], None);
    let doc: Value = serde_json::from_str(&cmp.stdout).map_err(e)?;
    let tqc_pct = doc["tqc_reduction_pct"]
        .as_f64()
        .ok_or("missing tqc_reduction_pct")?;
    let depth_pct = doc["depth_reduction_pct"]
        .as_f64()
        .ok_or("missing depth_reduction_pct")?;
    let inside = |x: f64, (lo, hi): (f64, f64)| (lo..=hi).contains(&x);
    ensure!(
        inside(tqc_pct, TQC_REDUCTION_PCT),
        "compare TQC reduction {tqc_pct}"
    );
    ensure!(
        inside(depth_pct, DEPTH_REDUCTION_PCT),
        "compare depth reduction {depth_pct}"
    );
    Ok(format!(
        "{} fixtures; pipe ok; compare {tqc_pct:.2}% / {depth_pct:.2}%",
        FIXTURES.len() + 1
    ))
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("1 gate algebra", Duration::from_secs(1), gate_algebra),
        (
            "2 phase table reproduction",
            Duration::from_secs(1),
            phase_table,
        ),
        ("3 iSWAP identity", Duration::from_secs(1), iswap_identity),
        (
            "4 Boolean equivalence grid",
            Duration::from_secs(5),
            boolean_grid,
        ),
        (
            "5 transpile soundness",
            Duration::from_secs(30),
            transpile_soundness,
        ),
        ("6 cost claim", Duration::from_secs(1), cost_claim),
        ("7 Bloch tracing", Duration::from_secs(1), bloch_tracing),
        ("8 CLI contract", Duration::from_secs(5), cli_contract),
    ];
    let mut failures = 0;
    for (name, limit, check) in criteria {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(detail) if elapsed > limit => {
                Err(format!("{detail}; took {elapsed:.2?} > {limit:?}"))
            }
            other => other,
        };
        match outcome {
            Ok(detail) => println!("PASS  criterion {name} ({elapsed:.2?}): {detail}"),
            Err(why) => {
                failures += 1;
                println!("FAIL  criterion {name} ({elapsed:.2?}): {why}");
            }
        }
    }
    if failures > 0 {
        println!("{failures} criterion(s) failed");
        std::process::exit(1);
    }
}
