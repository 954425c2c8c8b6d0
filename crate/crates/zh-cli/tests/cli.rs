//! Circuit ingestion and compilation, JSON round trips, and the exit codes
//! of the command set.

use std::path::{Path, PathBuf};
use std::process::Command;

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use zh_cli::circuit::{compile_circuit, Circuit, CircuitError, Gate};
use zh_diagram::random::{random_diagram, Shape, ZhSampler};
use zh_diagram::ZhDiagram;
use zh_dzx::{DzxDiagram, DzxSampler};
use zh_semantics::{evaluate, RingValue, SemanticMatrix};

fn matrix_of(text: &str) -> SemanticMatrix {
    evaluate(&compile_circuit(&text.parse().unwrap())).unwrap()
}

/// Permutation matrix of a classical function on `n` bits, qubit 0 most
/// significant.
fn permutation(n: usize, f: impl Fn(usize) -> usize) -> SemanticMatrix {
    SemanticMatrix::from_fn(n, n, |r, c| RingValue::int(i128::from(r == f(c))))
}

fn bit(x: usize, n: usize, q: usize) -> usize {
    (x >> (n - 1 - q)) & 1
}

#[test]
fn classical_gates_are_permutations() {
    assert_eq!(matrix_of("qubits 1\nX 0"), permutation(1, |x| x ^ 1));
    assert_eq!(matrix_of("qubits 2\nCX 0 1"), permutation(2, |x| x ^ bit(x, 2, 0)));
    assert_eq!(matrix_of("qubits 2\nCX 1 0"), permutation(2, |x| x ^ (bit(x, 2, 1) << 1)));
    let swap = |x: usize| ((x & 1) << 1) | (x >> 1);
    assert_eq!(matrix_of("qubits 2\nCX 0 1\nCX 1 0\nCX 0 1"), permutation(2, swap));
    // Toffoli targeting the middle qubit.
    assert_eq!(matrix_of("qubits 3\nCCX 0 2 1"), permutation(3, |x| x ^ ((bit(x, 3, 0) & bit(x, 3, 2)) << 1)));
}

#[test]
fn phase_gates_are_diagonal() {
    let diag = |n: usize, sign: &dyn Fn(usize) -> bool| SemanticMatrix::from_fn(n, n, |r, c| RingValue::int(if r != c { 0 } else if sign(r) { -1 } else { 1 }));
    assert_eq!(matrix_of("qubits 2\nCZ 0 1"), diag(2, &|x| x == 3));
    assert_eq!(matrix_of("qubits 3\nCCZ 2 0 1"), diag(3, &|x| x == 7));
    // An idle qubit is the identity.
    assert_eq!(matrix_of("qubits 3\nCZ 0 2"), diag(3, &|x| bit(x, 3, 0) == 1 && bit(x, 3, 2) == 1));
}

#[test]
fn hadamard_is_normalised_and_scalars_stay_explicit() {
    let h = SemanticMatrix::from_int_rows(&[&[1, 1], &[1, -1]]).scale(RingValue::inv_sqrt2());
    assert_eq!(matrix_of("qubits 1\nH 0"), h);
    let d = compile_circuit(&"qubits 1\nH 0\nH 0".parse().unwrap());
    assert_eq!(d.star_count(), 2);
    assert_eq!(matrix_of("qubits 1\nH 0\nH 0"), SemanticMatrix::identity(1));
}

#[test]
fn compilation_is_compositional() {
    let mut rng = StdRng::seed_from_u64(5);
    for _ in 0..40 {
        let n = rng.gen_range(1..=4);
        let random_circuit = |rng: &mut StdRng| {
            let mut c = Circuit::new(n);
            for _ in 0..rng.gen_range(0..5) {
                let mut qs: Vec<usize> = (0..n).collect();
                qs.shuffle(rng);
                let g = match rng.gen_range(0..6) {
                    0 => Gate::H(qs[0]),
                    1 => Gate::X(qs[0]),
                    k if n < 2 => if k % 2 == 0 { Gate::H(qs[0]) } else { Gate::X(qs[0]) },
                    2 => Gate::CX(qs[0], qs[1]),
                    3 => Gate::CZ(qs[0], qs[1]),
                    _ if n < 3 => Gate::CZ(qs[0], qs[1]),
                    4 => Gate::CCZ(qs[0], qs[1], qs[2]),
                    _ => Gate::CCX(qs[0], qs[1], qs[2]),
                };
                c.push(g).unwrap();
            }
            c
        };
        let (c1, c2) = (random_circuit(&mut rng), random_circuit(&mut rng));
        let whole = evaluate(&compile_circuit(&c1.then(&c2).unwrap())).unwrap();
        let composed = compile_circuit(&c1).compose(&compile_circuit(&c2)).unwrap();
        assert_eq!(evaluate(&composed).unwrap(), whole);
        let product = evaluate(&compile_circuit(&c2)).unwrap().matmul(&evaluate(&compile_circuit(&c1)).unwrap()).unwrap();
        assert_eq!(product, whole);
        assert_eq!(c1.to_text().parse::<Circuit>().unwrap(), c1);
    }
}

#[test]
fn malformed_circuits_report_their_line() {
    let err = |t: &str| t.parse::<Circuit>().unwrap_err();
    assert_eq!(err("H 0\n"), CircuitError::MissingHeader { line: 1 });
    assert_eq!(err("# nothing\n"), CircuitError::MissingHeader { line: 2 });
    assert_eq!(err("qubits 2\n\nT 0\n"), CircuitError::UnknownGate { line: 3, name: "T".into() });
    assert_eq!(err("qubits 2\nCX 0\n"), CircuitError::Arity { line: 2, gate: "CX".into(), expected: 2, got: 1 });
    assert_eq!(err("qubits 2\nH a\n"), CircuitError::BadIndex { line: 2, token: "a".into() });
    assert_eq!(err("qubits 2\nH 2\n"), CircuitError::OutOfRange { line: 2, qubit: 2, qubits: 2 });
    assert!(matches!(err("qubits 3\nCCZ 0 1 1\n"), CircuitError::RepeatedOperand { line: 2, .. }));
    assert!("# Toffoli\nqubits 3  # header\nccx 0 1 2 # lower case\n".parse::<Circuit>().is_ok());
}

#[test]
fn json_round_trip_on_random_diagrams() {
    let mut rng = StdRng::seed_from_u64(3);
    for _ in 0..500 {
        let d = random_diagram(&mut rng, &ZhSampler { derived: true, max_arity: 4 }, Shape { max_vertices: 10, max_open: 8 });
        assert!(ZhDiagram::from_json(&d.to_json()).unwrap().is_isomorphic(&d));
        let e = random_diagram(&mut rng, &DzxSampler { max_arity: 4 }, Shape { max_vertices: 10, max_open: 8 });
        assert!(DzxDiagram::from_json(&e.to_json_pretty()).unwrap().is_isomorphic(&e));
    }
}

fn samples() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("samples")
}

fn zh(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_zh")).current_dir(samples()).args(args).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8_lossy(&out.stdout).into_owned())
}

#[test]
fn command_matrix_exit_codes() {
    let tmp = std::env::temp_dir().join(format!("zh-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&tmp).unwrap();
    let out = |name: &str| tmp.join(name).to_string_lossy().into_owned();
    let dzx_out = out("ccz.dzx.json");
    let zh_out = out("back.zh.json");
    let rules_out = out("rules.json");
    let passing: Vec<Vec<&str>> = vec![
        vec!["eval", "ccz.zh.json"],
        vec!["eval", "ccx.qc", "--decimals"],
        vec!["check-rules", "--max", "2"],
        vec!["check-dzx-rules", "--max", "2"],
        vec!["verify-lemmas"],
        vec!["replay", "--shipped", "--audit"],
        vec!["to-dzx", "ccz.zh.json", "-o", &dzx_out],
        vec!["from-dzx", &dzx_out, "-o", &zh_out],
        vec!["roundtrip", "ccz.zh.json"],
        vec!["roundtrip", "--samples", "20"],
        vec!["compile", "hh.qc"],
        vec!["equiv", "hh.zh.json", "id.zh.json"],
        vec!["equiv", "ccx.qc", "ccx-swapped.qc"],
        vec!["equiv", "scaled.zh.json", "id.zh.json", "--up-to-scalar"],
        vec!["audit-minimality", "--interpretation", "negated-h"],
        vec!["dump-rules", "--max", "1", "-o", &rules_out],
    ];
    for args in &passing {
        let (code, stdout) = zh(args);
        assert_eq!(code, 0, "{args:?}:\n{stdout}");
        let (code, json) = zh(&[&["--format", "json"], &args[..]].concat());
        assert_eq!(code, 0, "{args:?} as json");
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(v["status"], "pass");
    }
    let failing: Vec<Vec<&str>> = vec![
        vec!["equiv", "ccz.zh.json", "ccx.qc"],
        vec!["equiv", "scaled.zh.json", "id.zh.json"],
        vec!["audit-minimality", "--interpretation", "disconnected-z"],
    ];
    for args in &failing {
        let (code, json) = zh(&[&["--format", "json"], &args[..]].concat());
        assert_eq!(code, 1, "{args:?}");
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(v["status"], "fail");
    }
    // Unreadable input is an error, not a report.
    assert_eq!(zh(&["eval", "missing.zh.json"]).0, 2);
    assert_eq!(zh(&["eval", "--wire-cap", "2", "ccz.zh.json"]).0, 2);
    std::fs::remove_dir_all(&tmp).unwrap();
}

#[test]
fn equiv_prints_the_scalar() {
    let (_, text) = zh(&["equiv", "hh.zh.json", "id.zh.json"]);
    assert!(text.contains("equal, scalar 1"), "{text}");
    let (_, text) = zh(&["equiv", "scaled.zh.json", "id.zh.json", "--up-to-scalar"]);
    assert!(text.contains("equal up to scalar 2"), "{text}");
}

#[test]
fn eval_prints_canonical_entries() {
    let (_, text) = zh(&["eval", "ccz.zh.json"]);
    assert!(text.contains("[ 0, 0, 0, 0, 0, 0, 0, -1 ]"), "{text}");
    let (_, text) = zh(&["eval", "h.qc"]);
    assert!(text.contains("√2/2^1"), "{text}");
}
