//! Evaluation under interpretations whose tensors have arbitrary entries in
//! Z[1/√2].
//!
//! The integer contraction of [`crate::contract`] only accepts tensors whose
//! entries share a common power of √2.  Alternative interpretations may mix
//! rational and irrational entries (an eigenvector of the 2-ary H-box, for
//! instance), so this module contracts dense ring-valued tensors directly.
//! Every edge is a variable; every vertex, including white spiders, is a
//! tensor over its legs.

use std::collections::{BTreeSet, HashMap};

use zh_diagram::{GeneratorKind, ZhDiagram};

use crate::contract::EvalError;
use crate::eval::{expand_for, open_edges, vertex_legs, Interpretation};
use crate::matrix::SemanticMatrix;
use crate::ring::RingValue;

/// A dense tensor over distinct variables, first variable most significant.
#[derive(Clone, Debug)]
struct Tensor {
    vars: Vec<usize>,
    data: Vec<RingValue>,
}

impl Tensor {
    /// A tensor over `legs` (possibly repeating variables) read from a state
    /// on the legs, first leg most significant.
    fn from_state(legs: &[usize], state: &SemanticMatrix) -> Tensor {
        let vars: Vec<usize> = legs.iter().copied().collect::<BTreeSet<_>>().into_iter().collect();
        let pos: Vec<usize> = legs.iter().map(|l| vars.binary_search(l).expect("present")).collect();
        let (n, k) = (vars.len(), legs.len());
        let data = (0..(1usize << n))
            .map(|idx| {
                let leg_idx = pos.iter().enumerate().fold(0usize, |acc, (i, &p)| acc | (((idx >> (n - 1 - p)) & 1) << (k - 1 - i)));
                state.entries()[leg_idx]
            })
            .collect();
        Tensor { vars, data }
    }

    fn index(&self, assign: &HashMap<usize, usize>) -> usize {
        let n = self.vars.len();
        self.vars.iter().enumerate().fold(0, |acc, (i, v)| acc | (assign[v] << (n - 1 - i)))
    }
}

/// Multiplies the tensors together and sums out `v`.
fn sum_out(tensors: &[Tensor], v: usize) -> Tensor {
    let vars: Vec<usize> = tensors.iter().flat_map(|t| t.vars.iter().copied()).filter(|&u| u != v).collect::<BTreeSet<_>>().into_iter().collect();
    let n = vars.len();
    let mut assign: HashMap<usize, usize> = HashMap::new();
    let data = (0..(1usize << n))
        .map(|idx| {
            for (i, &u) in vars.iter().enumerate() {
                assign.insert(u, (idx >> (n - 1 - i)) & 1);
            }
            let mut total = RingValue::ZERO;
            for bit in 0..2 {
                assign.insert(v, bit);
                let prod = tensors.iter().fold(RingValue::ONE, |acc, t| if acc.is_zero() { acc } else { acc * t.data[t.index(&assign)] });
                total = total + prod;
            }
            total
        })
        .collect();
    Tensor { vars, data }
}

fn standard_tensor(kind: GeneratorKind, arity: usize) -> SemanticMatrix {
    let all_ones = (1usize << arity) - 1;
    SemanticMatrix::from_fn(arity, 0, |r, _| match kind {
        GeneratorKind::ZSpider => RingValue::int(i128::from(r == 0) + i128::from(r == all_ones)),
        _ => RingValue::int(if r == all_ones { -1 } else { 1 }),
    })
}

/// Evaluates a diagram under `interp`, allowing any ring entries in the
/// tensors it assigns.  Generators the interpretation leaves unchanged get
/// their standard tensors.
pub fn evaluate_general(d: &ZhDiagram, interp: &dyn Interpretation, cap: usize) -> Result<SemanticMatrix, EvalError> {
    let wires = d.inputs().len() + d.outputs().len();
    if wires > cap {
        return Err(EvalError::TooManyOpenWires { wires, cap });
    }
    let d = expand_for(d, interp);
    let legs = vertex_legs(&d);
    let mut scalar = RingValue::ONE;
    let mut tensors = Vec::new();
    for (v, k) in d.vertices() {
        let l = &legs[&v];
        let state = match k {
            GeneratorKind::ZSpider => interp.z_spider(l.len()).unwrap_or_else(|| standard_tensor(*k, l.len())),
            GeneratorKind::HBox => interp.h_box(l.len()).unwrap_or_else(|| standard_tensor(*k, l.len())),
            GeneratorKind::Star => {
                scalar = scalar * interp.star();
                continue;
            }
            other => interp.derived(*other, l.len()).expect("unassigned derived vertices are expanded"),
        };
        if l.is_empty() {
            scalar = scalar * state.entries()[0];
        } else {
            tensors.push(Tensor::from_state(l, &state));
        }
    }
    for _ in 0..d.loops() {
        scalar = scalar * RingValue::int(2);
    }
    let open = open_edges(&d);
    let keep: BTreeSet<usize> = open.iter().copied().collect();
    let mut live: BTreeSet<usize> = (0..d.edges().len()).filter(|e| !keep.contains(e)).collect();
    while let Some(v) = pick(&tensors, &live) {
        live.remove(&v);
        let (touching, rest): (Vec<Tensor>, Vec<Tensor>) = tensors.into_iter().partition(|t| t.vars.contains(&v));
        tensors = rest;
        if touching.is_empty() {
            scalar = scalar * RingValue::int(2);
        } else {
            tensors.push(sum_out(&touching, v));
        }
    }
    let n = open.len();
    let outputs = d.outputs().len();
    let mut assign = HashMap::new();
    let entries = (0..(1usize << n))
        .map(|idx| {
            assign.clear();
            for (i, &e) in open.iter().enumerate() {
                let bit = (idx >> (n - 1 - i)) & 1;
                if *assign.entry(e).or_insert(bit) != bit {
                    return RingValue::ZERO;
                }
            }
            tensors.iter().fold(scalar, |acc, t| acc * t.data[t.index(&assign)])
        })
        .collect();
    Ok(SemanticMatrix::new(outputs, n - outputs, entries))
}

/// Next variable to eliminate: smallest resulting tensor, then lowest id.
fn pick(tensors: &[Tensor], live: &BTreeSet<usize>) -> Option<usize> {
    live.iter()
        .map(|&v| {
            let union: BTreeSet<usize> = tensors.iter().filter(|t| t.vars.contains(&v)).flat_map(|t| t.vars.iter().copied()).collect();
            (union.len(), v)
        })
        .min()
        .map(|(_, v)| v)
}
