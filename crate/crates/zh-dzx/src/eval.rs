//! Exact semantics of ΔZX diagrams.
//!
//! Green spiders are `|0…0⟩⟨0…0| + e^{iα}|1…1⟩⟨1…1|`, red spiders the same in
//! the ± basis, the Hadamard gate `(1 1; 1 −1)/√2` and the triangle
//! `(1 1; 0 1)`.  Every tensor is an integer tensor times a power of √2, so
//! the diagram contracts to an exact matrix over Z[1/√2].

use zh_semantics::{open_edges, vertex_legs, EvalError, Factor, FactorGraph, SemanticMatrix, DEFAULT_WIRE_CAP};

use crate::kind::{DzxDiagram, DzxKind};

/// Evaluates a ΔZX diagram with the default wire cap.
pub fn evaluate_dzx(d: &DzxDiagram) -> Result<SemanticMatrix, EvalError> {
    evaluate_dzx_capped(d, DEFAULT_WIRE_CAP)
}

/// Evaluates a ΔZX diagram, refusing more than `cap` open wires.
pub fn evaluate_dzx_capped(d: &DzxDiagram, cap: usize) -> Result<SemanticMatrix, EvalError> {
    let wires = d.inputs().len() + d.outputs().len();
    if wires > cap {
        return Err(EvalError::TooManyOpenWires { wires, cap });
    }
    let legs = vertex_legs(d);
    let mut g = FactorGraph::new();
    let vars: Vec<usize> = (0..d.edges().len()).map(|_| g.var()).collect();
    for (v, k) in d.vertices() {
        let l: Vec<usize> = legs[&v].iter().map(|&e| vars[e]).collect();
        let sign = |pi: bool| if pi { -1 } else { 1 };
        match *k {
            DzxKind::Z(pi) => g.add_factor(Factor::from_legs(&l, |bits| {
                if bits.iter().all(|&b| b == 0) {
                    // Legless: 1 + e^{iα}.
                    if bits.is_empty() {
                        1 + sign(pi)
                    } else {
                        1
                    }
                } else if bits.iter().all(|&b| b == 1) {
                    sign(pi)
                } else {
                    0
                }
            })),
            DzxKind::X(pi) => {
                // (|+…+⟩ + e^{iα}|−…−⟩) has entries (1 + e^{iα}(−1)^{|b|}) / √2^n.
                g.add_factor(Factor::from_legs(&l, |bits| {
                    let odd = bits.iter().filter(|&&b| b == 1).count() % 2 == 1;
                    1 + sign(pi != odd)
                }));
                g.scale_sqrt2(-(l.len() as i64));
            }
            DzxKind::Hadamard => {
                g.add_factor(Factor::from_legs(&l, |bits| if bits[0] == 1 && bits[1] == 1 { -1 } else { 1 }));
                g.scale_sqrt2(-1);
            }
            // Legs are (input, output); the matrix (1 1; 0 1) forbids only
            // input 0 → output 1.
            DzxKind::Triangle => g.add_factor(Factor::from_legs(&l, |bits| i128::from(!(bits[0] == 0 && bits[1] == 1)))),
        }
    }
    g.scale_sqrt2(2 * i64::from(d.loops()));
    let open: Vec<usize> = open_edges(d).into_iter().map(|e| vars[e]).collect();
    Ok(g.contract(&open, d.outputs().len()))
}
