// Copyright 2026 The pswap Authors
// SPDX-License-Identifier: Apache-2.0

mod args;

use std::f64::consts::PI;
use std::io::{self, Read};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use pswap_core::circuit::simulate_prefixes;
use pswap_core::pswap::{verify_rows, TABLE1};
use pswap_core::{
    bloch_vector, build_pswap, compare, equal_up_to_global_phase, global_phase_between, is_native,
    matrix_of, phase_profile, tqc, transpile, unitary, Circuit, ComplexScalar, GateKind,
    PhaseConfig, PhaseProfile, SquareMatrix, StateVector, TqcReport,
};

use args::{builtin, clap_angle, clap_optional_angle};

#[derive(Parser)]
#[command(
    name = "pswap",
    version,
    about = "Build, verify, transpile and cost phase-swap circuits"
)]
struct Cli {
    /// Emit exactly one JSON document on stdout.
    #[arg(long, global = true)]
    json: bool,

    /// Tolerance for phase and matrix comparisons.
    #[arg(long, global = true, default_value_t = 1e-9, value_parser = parse_tol)]
    tol: f64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Inspect a catalog gate.
    #[command(subcommand)]
    Gate(GateCmd),
    /// The two-CNOT phase-swap gate.
    #[command(subcommand)]
    Pswap(PswapCmd),
    /// The three-CNOT SWAP.
    #[command(subcommand)]
    Swap(BuildCmd),
    /// The two-CNOT iSWAP reference circuit.
    #[command(subcommand)]
    Iswap(BuildCmd),
    /// Lower a circuit to the native set and print it.
    Transpile(Source),
    /// Transpile a circuit and report N1, N2, depth and TQC.
    Tqc(Source),
    /// Percentage savings of `--b` over `--a`, both transpiled.
    Compare {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
    },
    /// Bloch vectors of every qubit after each gate.
    Trace {
        #[arg(long)]
        builtin: String,
        /// Basis label written q1 q0, e.g. `10`.
        #[arg(long)]
        input: String,
    },
}

#[derive(Subcommand)]
enum GateCmd {
    Show {
        name: String,
        #[arg(long, value_parser = clap_angle, allow_hyphen_values = true)]
        param: Option<f64>,
    },
}

#[derive(Subcommand)]
enum PswapCmd {
    /// Print the circuit for a phase configuration.
    Build(PhaseArgs),
    /// Print the per-output-state phases.
    Phases(PhaseArgs),
    /// Check the six reference configurations.
    Table1,
}

#[derive(Subcommand)]
enum BuildCmd {
    Build,
}

#[derive(Clone, Copy)]
struct OptAngle(Option<f64>);

#[derive(Args)]
struct PhaseArgs {
    /// Rotation on q0: radians, a multiple of pi, or `none`.
    #[arg(long, default_value = "none", value_parser = parse_opt_angle, allow_hyphen_values = true)]
    v: OptAngle,
    /// Rotation on q1.
    #[arg(long, default_value = "none", value_parser = parse_opt_angle, allow_hyphen_values = true)]
    w: OptAngle,
}

impl PhaseArgs {
    fn config(&self) -> Result<PhaseConfig> {
        Ok(PhaseConfig::new(self.v.0, self.w.0)?)
    }
}

#[derive(Args)]
struct Source {
    /// JSON circuit file; stdin is read when neither source is given.
    #[arg(long = "in", conflicts_with = "builtin")]
    input: Option<PathBuf>,
    #[arg(long)]
    builtin: Option<String>,
}

impl Source {
    fn load(&self) -> Result<Circuit> {
        if let Some(name) = &self.builtin {
            return builtin(name);
        }
        let text = match &self.input {
            Some(path) => std::fs::read_to_string(path)
                .with_context(|| format!("cannot read {}", path.display()))?,
            None => {
                let mut buf = String::new();
                io::stdin()
                    .read_to_string(&mut buf)
                    .context("cannot read stdin")?;
                buf
            }
        };
        Circuit::from_json(&text).context("malformed circuit")
    }
}

fn parse_tol(text: &str) -> std::result::Result<f64, String> {
    match text.parse::<f64>() {
        Ok(t) if t.is_finite() && t >= 0.0 => Ok(t),
        _ => Err(format!(
            "tolerance must be a non-negative number, got `{text}`"
        )),
    }
}

fn parse_opt_angle(text: &str) -> std::result::Result<OptAngle, String> {
    clap_optional_angle(text).map(OptAngle)
}

/// Verification outcome; errors are reported separately.
enum Verdict {
    Pass,
    Fail,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) if e.kind() == ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => {
            eprintln!("error: a subcommand is required (try --help)");
            return ExitCode::from(2);
        }
        Err(e) => {
            let text = e.to_string();
            eprintln!(
                "{}",
                text.lines().next().unwrap_or("error: invalid arguments")
            );
            return ExitCode::from(2);
        }
    };
    match run(&cli) {
        Ok(Verdict::Pass) => ExitCode::SUCCESS,
        Ok(Verdict::Fail) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {}", one_line(&e));
            ExitCode::from(2)
        }
    }
}

/// Joins the error chain, skipping causes already quoted by their parent.
fn one_line(e: &anyhow::Error) -> String {
    let mut parts: Vec<String> = Vec::new();
    for cause in e.chain() {
        let text = cause.to_string();
        if !parts.last().is_some_and(|prev| prev.ends_with(&text)) {
            parts.push(text);
        }
    }
    parts.join(": ").replace('\n', " ")
}

fn run(cli: &Cli) -> Result<Verdict> {
    match &cli.command {
        Command::Gate(GateCmd::Show { name, param }) => gate_show(cli, name, *param),
        Command::Pswap(PswapCmd::Build(a)) => emit_circuit(cli, &build_pswap(a.config()?)?),
        Command::Pswap(PswapCmd::Phases(a)) => phases(cli, a.config()?),
        Command::Pswap(PswapCmd::Table1) => table1(cli),
        Command::Swap(BuildCmd::Build) => emit_circuit(cli, &builtin("swap")?),
        Command::Iswap(BuildCmd::Build) => emit_circuit(cli, &builtin("iswap")?),
        Command::Transpile(src) => emit_circuit(cli, &transpile(&src.load()?)?),
        Command::Tqc(src) => {
            let report = cost(&src.load()?)?;
            if cli.json {
                println!("{}", serde_json::to_string(&report)?);
            } else {
                println!("n1     {}", report.n1);
                println!("n2     {}", report.n2);
                println!("depth  {}", report.depth);
                println!("tqc    {}", report.tqc);
            }
            Ok(Verdict::Pass)
        }
        Command::Compare { a, b } => compare_cmd(cli, a, b),
        Command::Trace {
            builtin: name,
            input,
        } => trace(cli, name, input),
    }
}

fn cost(c: &Circuit) -> Result<TqcReport> {
    Ok(tqc(&transpile(c)?)?)
}

fn emit_circuit(cli: &Cli, c: &Circuit) -> Result<Verdict> {
    if cli.json {
        println!("{}", c.to_json());
    } else {
        println!("{}", c.to_json_pretty());
    }
    Ok(Verdict::Pass)
}

fn num(x: f64) -> String {
    // Avoid printing "-0.000000".
    let x = if x.abs() < 5e-7 { 0.0 } else { x };
    format!("{x:.6}")
}

fn complex(z: ComplexScalar) -> String {
    let re = num(z.re);
    let im = num(z.im);
    let sign = if im.starts_with('-') { "" } else { "+" };
    format!("{re}{sign}{im}i")
}

fn opt(angle: Option<f64>) -> String {
    angle.map_or_else(|| "none".to_string(), num)
}

fn phase_factor(phi: f64, tol: f64) -> String {
    let near = |target: f64| (phi - target).abs() <= tol;
    if near(0.0) {
        String::new()
    } else if near(PI) || near(-PI) {
        "-".to_string()
    } else if near(PI / 2.0) {
        "i·".to_string()
    } else if near(-PI / 2.0) {
        "-i·".to_string()
    } else {
        format!("e^(i·{})·", num(phi))
    }
}

fn matrix_json(m: &SquareMatrix) -> Value {
    Value::Array(
        m.rows()
            .map(|row| row.iter().map(|z| json!([z.re, z.im])).collect())
            .collect(),
    )
}

fn gate_show(cli: &Cli, name: &str, param: Option<f64>) -> Result<Verdict> {
    let kind = GateKind::from_name(
        &name.to_ascii_lowercase(),
        &param.into_iter().collect::<Vec<_>>(),
    )?;
    let m = matrix_of(kind)?;
    let mut equivalents = Vec::new();
    for other in GateKind::ALL_FIXED {
        if other == kind || other.arity() != kind.arity() {
            continue;
        }
        let g = matrix_of(other)?;
        if equal_up_to_global_phase(&m, &g, cli.tol)? {
            equivalents.push((other, global_phase_between(&m, &g)?));
        }
    }
    if cli.json {
        let doc = json!({
            "gate": kind.name(),
            "params": kind.params(),
            "arity": kind.arity(),
            "native": is_native(kind),
            "matrix": matrix_json(&m),
            "equivalent_to": equivalents
                .iter()
                .map(|(g, phi)| json!({"gate": g.name(), "phase": phi}))
                .collect::<Vec<_>>(),
        });
        println!("{doc}");
        return Ok(Verdict::Pass);
    }
    println!(
        "{kind}  arity {}  {}",
        kind.arity(),
        if is_native(kind) {
            "native"
        } else {
            "non-native"
        }
    );
    for row in m.rows() {
        let cells: Vec<String> = row.iter().map(|z| format!("{:>20}", complex(*z))).collect();
        println!("  [{} ]", cells.join(""));
    }
    if kind.arity() == 2 {
        println!("  basis order |q1 q0> = 00, 01, 10, 11; first operand is q0");
    }
    for (g, phi) in equivalents {
        println!(
            "note: equals {}{} (global phase {})",
            phase_factor(phi, cli.tol),
            g.name().to_ascii_uppercase(),
            num(phi)
        );
    }
    Ok(Verdict::Pass)
}

fn phases(cli: &Cli, cfg: PhaseConfig) -> Result<Verdict> {
    let profile = phase_profile(&unitary(&build_pswap(cfg)?)?)?;
    if cli.json {
        println!("{}", serde_json::to_string(&profile)?);
        return Ok(Verdict::Pass);
    }
    println!("v = {}  w = {}", opt(cfg.v), opt(cfg.w));
    for (label, phi) in ["00", "01", "10", "11"].iter().zip(profile.as_array()) {
        println!("  |{label}>  {:>10}", num(phi));
    }
    Ok(Verdict::Pass)
}

fn table1(cli: &Cli) -> Result<Verdict> {
    let report = verify_rows(&TABLE1, build_pswap, cli.tol);
    let verdict = if report.all_pass() {
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    if cli.json {
        let rows: Vec<Value> = report
            .rows
            .iter()
            .map(|r| {
                json!({
                    "v": r.row.config.v,
                    "w": r.row.config.w,
                    "expected": PhaseProfile::from_array(r.row.expected),
                    "actual": r.actual,
                    "cells": r.cells,
                    "application": r.row.application,
                })
            })
            .collect();
        let doc = json!({
            "rows": rows,
            "passed": report.passed(),
            "total": report.total(),
            "pass": report.all_pass(),
        });
        println!("{doc}");
        return Ok(verdict);
    }
    println!(
        "{:>10} {:>10} {:>11} {:>11} {:>11} {:>11}  {:<5} application",
        "v", "w", "|00>", "|01>", "|10>", "|11>", "row"
    );
    for r in &report.rows {
        let cells: Vec<String> = (0..4)
            .map(|k| {
                let value = r
                    .actual
                    .map_or_else(|| "n/a".to_string(), |p| num(p.as_array()[k]));
                let mark = if r.cells[k] { ' ' } else { '*' };
                format!("{value:>10}{mark}")
            })
            .collect();
        let ok = r.cells.iter().all(|&c| c);
        println!(
            "{:>10} {:>10} {}  {:<5} {}",
            opt(r.row.config.v),
            opt(r.row.config.w),
            cells.join(" "),
            if ok { "PASS" } else { "FAIL" },
            r.row.application
        );
    }
    println!(
        "{}/{} {}",
        report.passed(),
        report.total(),
        if report.all_pass() { "PASS" } else { "FAIL" }
    );
    Ok(verdict)
}

fn compare_cmd(cli: &Cli, a: &str, b: &str) -> Result<Verdict> {
    let ra = cost(&builtin(a)?)?;
    let rb = cost(&builtin(b)?)?;
    let reduction = compare(&ra, &rb)?;
    if cli.json {
        println!("{}", serde_json::to_string(&reduction)?);
        return Ok(Verdict::Pass);
    }
    let width = a.len().max(b.len()).max(8);
    println!(
        "{:<width$} {:>5} {:>5} {:>6} {:>5}",
        "circuit", "n1", "n2", "depth", "tqc"
    );
    for (name, r) in [(a, ra), (b, rb)] {
        println!(
            "{name:<width$} {:>5} {:>5} {:>6} {:>5}",
            r.n1, r.n2, r.depth, r.tqc
        );
    }
    println!("tqc reduction    {}%", num(reduction.tqc_reduction_pct));
    println!("depth reduction  {}%", num(reduction.depth_reduction_pct));
    Ok(Verdict::Pass)
}

fn trace(cli: &Cli, name: &str, input: &str) -> Result<Verdict> {
    let c = builtin(name)?;
    let state = StateVector::from_label(input)?;
    if state.n_qubits() != c.n_qubits() {
        bail!(
            "input `{input}` has {} qubit(s) but `{name}` acts on {}",
            state.n_qubits(),
            c.n_qubits()
        );
    }
    let mut rows = Vec::new();
    for (k, s) in simulate_prefixes(&c, &state)?.iter().enumerate() {
        let gate = (k > 0).then(|| {
            let op = &c.ops()[k - 1];
            let qubits: Vec<String> = op.qubits.iter().map(|q| format!("q{q}")).collect();
            format!("{} {}", op.kind, qubits.join(","))
        });
        let vectors = (0..s.n_qubits())
            .map(|q| bloch_vector(s, q))
            .collect::<pswap_core::Result<Vec<_>>>()?;
        rows.push((k, gate, vectors));
    }
    if cli.json {
        let doc: Vec<Value> = rows
            .iter()
            .map(|(k, gate, vectors)| json!({"applied": k, "gate": gate, "qubits": vectors}))
            .collect();
        println!("{}", Value::Array(doc));
        return Ok(Verdict::Pass);
    }
    print!("{:>4}  {:<18}", "step", "gate");
    for q in 0..c.n_qubits() {
        print!("  {:<32}", format!("q{q} (x, y, z)"));
    }
    println!();
    for (k, gate, vectors) in rows {
        print!(
            "{k:>4}  {:<18}",
            gate.unwrap_or_else(|| "input".to_string())
        );
        for v in vectors {
            print!(
                "  {:<32}",
                format!("({}, {}, {})", num(v.x), num(v.y), num(v.z))
            );
        }
        println!();
    }
    Ok(Verdict::Pass)
}
