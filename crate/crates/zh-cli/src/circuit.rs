//! Toffoli+Hadamard circuits: a line-oriented text format and the compiler
//! to ZH diagrams.
//!
//! ```text
//! # Toffoli on three qubits
//! qubits 3
//! CCX 0 1 2
//! ```
//!
//! The first non-comment line declares the qubit count; every following line
//! is one gate.  `#` starts a comment.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;
use zh_diagram::{Builder, GeneratorKind, NodeId, ZhDiagram};

/// A gate of the Toffoli+Hadamard set, with its qubit operands.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Gate {
    H(usize),
    X(usize),
    CX(usize, usize),
    CZ(usize, usize),
    CCZ(usize, usize, usize),
    CCX(usize, usize, usize),
}

impl Gate {
    /// The gate mnemonic.
    pub fn name(&self) -> &'static str {
        match self {
            Gate::H(_) => "H",
            Gate::X(_) => "X",
            Gate::CX(..) => "CX",
            Gate::CZ(..) => "CZ",
            Gate::CCZ(..) => "CCZ",
            Gate::CCX(..) => "CCX",
        }
    }

    /// The qubit operands, controls first.
    pub fn operands(&self) -> Vec<usize> {
        match *self {
            Gate::H(q) | Gate::X(q) => vec![q],
            Gate::CX(a, b) | Gate::CZ(a, b) => vec![a, b],
            Gate::CCZ(a, b, c) | Gate::CCX(a, b, c) => vec![a, b, c],
        }
    }
}

impl fmt::Display for Gate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ops: Vec<String> = self.operands().iter().map(usize::to_string).collect();
        write!(f, "{} {}", self.name(), ops.join(" "))
    }
}

/// A circuit on a fixed number of qubits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Circuit {
    qubits: usize,
    gates: Vec<Gate>,
}

/// Why a circuit was rejected.  Line numbers start at 1.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum CircuitError {
    #[error("line {line}: expected a `qubits N` header")]
    MissingHeader { line: usize },
    #[error("line {line}: unknown gate {name:?}")]
    UnknownGate { line: usize, name: String },
    #[error("line {line}: {gate} takes {expected} operand(s), got {got}")]
    Arity { line: usize, gate: String, expected: usize, got: usize },
    #[error("line {line}: {token:?} is not a qubit index")]
    BadIndex { line: usize, token: String },
    #[error("line {line}: qubit {qubit} out of range for {qubits} qubit(s)")]
    OutOfRange { line: usize, qubit: usize, qubits: usize },
    #[error("line {line}: operands of {gate} must be distinct")]
    RepeatedOperand { line: usize, gate: String },
    #[error("the circuits act on {0} and {1} qubits")]
    QubitMismatch(usize, usize),
}

impl Circuit {
    /// An empty circuit.
    pub fn new(qubits: usize) -> Circuit {
        Circuit { qubits, gates: Vec::new() }
    }

    /// Appends a gate after checking its operands.
    pub fn push(&mut self, gate: Gate) -> Result<(), CircuitError> {
        self.check(&gate, 0)?;
        self.gates.push(gate);
        Ok(())
    }

    pub fn qubits(&self) -> usize {
        self.qubits
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    /// The circuit running `self` and then `next`.
    pub fn then(&self, next: &Circuit) -> Result<Circuit, CircuitError> {
        if self.qubits != next.qubits {
            return Err(CircuitError::QubitMismatch(self.qubits, next.qubits));
        }
        Ok(Circuit { qubits: self.qubits, gates: self.gates.iter().chain(&next.gates).copied().collect() })
    }

    fn check(&self, gate: &Gate, line: usize) -> Result<(), CircuitError> {
        let ops = gate.operands();
        if let Some(&qubit) = ops.iter().find(|&&q| q >= self.qubits) {
            return Err(CircuitError::OutOfRange { line, qubit, qubits: self.qubits });
        }
        if (0..ops.len()).any(|i| ops[i + 1..].contains(&ops[i])) {
            return Err(CircuitError::RepeatedOperand { line, gate: gate.to_string() });
        }
        Ok(())
    }

    /// Writes the circuit in the text format.
    pub fn to_text(&self) -> String {
        let mut out = format!("qubits {}\n", self.qubits);
        for g in &self.gates {
            out.push_str(&g.to_string());
            out.push('\n');
        }
        out
    }
}

impl FromStr for Circuit {
    type Err = CircuitError;

    fn from_str(text: &str) -> Result<Circuit, CircuitError> {
        let mut circuit: Option<Circuit> = None;
        let mut last_line = 0;
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            last_line = line;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let tokens: Vec<&str> = content.split_whitespace().collect();
            let Some(c) = circuit.as_mut() else {
                match tokens.as_slice() {
                    [kw, n] if kw.eq_ignore_ascii_case("qubits") => {
                        let qubits = n.parse().map_err(|_| CircuitError::BadIndex { line, token: n.to_string() })?;
                        circuit = Some(Circuit::new(qubits));
                        continue;
                    }
                    _ => return Err(CircuitError::MissingHeader { line }),
                }
            };
            let name = tokens[0].to_ascii_uppercase();
            let ops = tokens[1..]
                .iter()
                .map(|t| t.parse::<usize>().map_err(|_| CircuitError::BadIndex { line, token: t.to_string() }))
                .collect::<Result<Vec<_>, _>>()?;
            let expected = match name.as_str() {
                "H" | "X" => 1,
                "CX" | "CNOT" | "CZ" => 2,
                "CCZ" | "CCX" | "TOFFOLI" => 3,
                _ => return Err(CircuitError::UnknownGate { line, name: tokens[0].to_string() }),
            };
            if ops.len() != expected {
                return Err(CircuitError::Arity { line, gate: name, expected, got: ops.len() });
            }
            let gate = match name.as_str() {
                "H" => Gate::H(ops[0]),
                "X" => Gate::X(ops[0]),
                "CX" | "CNOT" => Gate::CX(ops[0], ops[1]),
                "CZ" => Gate::CZ(ops[0], ops[1]),
                "CCZ" => Gate::CCZ(ops[0], ops[1], ops[2]),
                _ => Gate::CCX(ops[0], ops[1], ops[2]),
            };
            c.check(&gate, line)?;
            c.gates.push(gate);
        }
        circuit.ok_or(CircuitError::MissingHeader { line: last_line + 1 })
    }
}

/// Incremental construction: each qubit is a chain of vertices, `front`
/// holding the vertex whose next leg continues the wire.
struct Wires {
    b: Builder<GeneratorKind>,
    front: Vec<NodeId>,
}

impl Wires {
    fn new(qubits: usize) -> Wires {
        let mut b = Builder::new();
        let front = (0..qubits)
            .map(|_| {
                let z = b.add(GeneratorKind::ZSpider);
                b.input(z);
                z
            })
            .collect();
        Wires { b, front }
    }

    /// Puts a two-legged vertex of `kind` on wire `q`.
    fn gate(&mut self, q: usize, kind: GeneratorKind) -> NodeId {
        let v = self.b.add(kind);
        self.b.link(self.front[q], v);
        self.front[q] = v;
        v
    }

    /// Normalised Hadamard: a 2-ary H-box and an explicit star.
    fn hadamard(&mut self, q: usize) {
        self.gate(q, GeneratorKind::HBox);
        self.b.add(GeneratorKind::Star);
    }

    /// A phase-free H-box joined to fresh white spiders on the given wires:
    /// the controlled-Z family.
    fn controlled_z(&mut self, qs: &[usize]) {
        let h = self.b.add(GeneratorKind::HBox);
        for &q in qs {
            let z = self.gate(q, GeneratorKind::ZSpider);
            self.b.link(z, h);
        }
    }

    fn finish(mut self) -> ZhDiagram {
        for &v in &self.front {
            self.b.output(v);
        }
        self.b.finish()
    }
}

/// Compiles a circuit to a ZH diagram with one input and one output per
/// qubit, in qubit order.  Every scalar is written out with stars.
pub fn compile_circuit(c: &Circuit) -> ZhDiagram {
    let mut w = Wires::new(c.qubits);
    for g in &c.gates {
        match *g {
            Gate::H(q) => w.hadamard(q),
            Gate::X(q) => {
                w.gate(q, GeneratorKind::NotDot);
            }
            Gate::CZ(a, b) => w.controlled_z(&[a, b]),
            Gate::CCZ(a, b, t) => w.controlled_z(&[a, b, t]),
            Gate::CX(a, t) => {
                w.hadamard(t);
                w.controlled_z(&[a, t]);
                w.hadamard(t);
            }
            Gate::CCX(a, b, t) => {
                w.hadamard(t);
                w.controlled_z(&[a, b, t]);
                w.hadamard(t);
            }
        }
    }
    w.finish()
}
