//! Dense matrices over Z[1/√2].
//!
//! A diagram with `n` inputs and `m` outputs denotes a `2^m × 2^n` matrix.
//! Basis states are ordered `|0…0⟩` first, and the first boundary wire of each
//! side is the most significant bit of the row (outputs) or column (inputs)
//! index.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::ring::RingValue;

/// Shape errors for matrix comparisons and products.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("shape mismatch: {0} vs {1}")]
    ShapeMismatch(String, String),
}

/// A `2^outputs × 2^inputs` matrix of ring values, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SemanticMatrix {
    outputs: usize,
    inputs: usize,
    entries: Vec<RingValue>,
}

impl SemanticMatrix {
    /// Builds a matrix; `entries.len()` must be `2^(outputs + inputs)`.
    pub fn new(outputs: usize, inputs: usize, entries: Vec<RingValue>) -> Self {
        assert_eq!(entries.len(), 1usize << (outputs + inputs), "entry count must match the shape");
        SemanticMatrix { outputs, inputs, entries }
    }

    /// Builds a matrix from a function of (row, column).
    pub fn from_fn(outputs: usize, inputs: usize, f: impl Fn(usize, usize) -> RingValue) -> Self {
        let cols = 1usize << inputs;
        let entries = (0..(1usize << (outputs + inputs))).map(|i| f(i / cols, i % cols)).collect();
        SemanticMatrix { outputs, inputs, entries }
    }

    /// The identity on `wires` qubits.
    pub fn identity(wires: usize) -> Self {
        Self::from_fn(wires, wires, |r, c| if r == c { RingValue::ONE } else { RingValue::ZERO })
    }

    /// A 1×1 matrix.
    pub fn scalar(x: RingValue) -> Self {
        SemanticMatrix { outputs: 0, inputs: 0, entries: vec![x] }
    }

    /// Integer matrix from rows, for tests and fixtures.
    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(1, |row| row.len());
        assert!(r.is_power_of_two() && c.is_power_of_two(), "dimensions must be powers of two");
        let entries = rows.iter().flat_map(|row| row.iter().map(|&x| RingValue::from(x))).collect();
        SemanticMatrix::new(r.trailing_zeros() as usize, c.trailing_zeros() as usize, entries)
    }

    pub fn outputs(&self) -> usize {
        self.outputs
    }

    pub fn inputs(&self) -> usize {
        self.inputs
    }

    pub fn rows(&self) -> usize {
        1 << self.outputs
    }

    pub fn cols(&self) -> usize {
        1 << self.inputs
    }

    pub fn entries(&self) -> &[RingValue] {
        &self.entries
    }

    /// Entry at (row, column).
    pub fn get(&self, r: usize, c: usize) -> RingValue {
        self.entries[r * self.cols() + c]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(RingValue::is_zero)
    }

    /// Shape as text, for error messages.
    pub fn shape(&self) -> String {
        format!("{}x{}", self.rows(), self.cols())
    }

    /// Matrix product `self · rhs` (apply `rhs` first).
    pub fn matmul(&self, rhs: &SemanticMatrix) -> Result<SemanticMatrix, MatrixError> {
        if self.inputs != rhs.outputs {
            return Err(MatrixError::ShapeMismatch(self.shape(), rhs.shape()));
        }
        Ok(Self::from_fn(self.outputs, rhs.inputs, |r, c| {
            (0..self.cols()).fold(RingValue::ZERO, |acc, j| acc + self.get(r, j) * rhs.get(j, c))
        }))
    }

    /// Kronecker product, `self` on the most significant wires.
    pub fn kron(&self, rhs: &SemanticMatrix) -> SemanticMatrix {
        Self::from_fn(self.outputs + rhs.outputs, self.inputs + rhs.inputs, |r, c| {
            self.get(r >> rhs.outputs, c >> rhs.inputs) * rhs.get(r & (rhs.rows() - 1), c & (rhs.cols() - 1))
        })
    }

    /// Every entry multiplied by `x`.
    pub fn scale(&self, x: RingValue) -> SemanticMatrix {
        SemanticMatrix { outputs: self.outputs, inputs: self.inputs, entries: self.entries.iter().map(|&e| e * x).collect() }
    }

    /// Exact equality; errors on a shape mismatch.
    pub fn equals(&self, other: &SemanticMatrix) -> Result<bool, MatrixError> {
        self.check_shape(other)?;
        Ok(self.entries == other.entries)
    }

    fn check_shape(&self, other: &SemanticMatrix) -> Result<(), MatrixError> {
        if self.outputs != other.outputs || self.inputs != other.inputs {
            return Err(MatrixError::ShapeMismatch(self.shape(), other.shape()));
        }
        Ok(())
    }

    /// Whether `self = c · other` for some nonzero number `c` (not
    /// necessarily in the ring).  Two zero matrices are proportional.
    pub fn proportional(&self, other: &SemanticMatrix) -> Result<bool, MatrixError> {
        self.check_shape(other)?;
        let Some(p) = self.entries.iter().position(|e| !e.is_zero()) else {
            return Ok(other.is_zero());
        };
        let (sp, op) = (self.entries[p], other.entries[p]);
        if op.is_zero() {
            return Ok(false);
        }
        Ok(self.entries.iter().zip(&other.entries).all(|(&x, &y)| x.is_zero() == y.is_zero() && x * op == sp * y))
    }

    /// The scalar `c` with `self = c · other`, when one exists in the ring and
    /// is nonzero.  Two zero matrices give `c = 1` by convention.
    pub fn scalar_factor(&self, other: &SemanticMatrix) -> Result<Option<RingValue>, MatrixError> {
        if !self.proportional(other)? {
            return Ok(None);
        }
        match self.entries.iter().position(|e| !e.is_zero()) {
            None => Ok(Some(RingValue::ONE)),
            Some(p) => Ok(self.entries[p].checked_div(&other.entries[p])),
        }
    }

    /// JSON form: `{"rows", "cols", "entries": [[{"a","b","k"}...]...]}`.
    pub fn to_json_value(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct Out<'a> {
            rows: usize,
            cols: usize,
            entries: Vec<&'a [RingValue]>,
        }
        let entries = self.entries.chunks(self.cols()).collect();
        serde_json::to_value(Out { rows: self.rows(), cols: self.cols(), entries }).expect("matrix serialises")
    }

    /// Rows of canonical entry strings, optionally followed by approximate
    /// decimals.
    pub fn render(&self, decimals: bool) -> String {
        let mut out = String::new();
        for r in 0..self.rows() {
            let row: Vec<String> = (0..self.cols())
                .map(|c| {
                    let e = self.get(r, c);
                    if decimals {
                        format!("{e} (≈{:.6})", e.approx())
                    } else {
                        e.to_string()
                    }
                })
                .collect();
            out.push_str("[ ");
            out.push_str(&row.join(", "));
            out.push_str(" ]\n");
        }
        out
    }
}

impl fmt::Display for SemanticMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(false))
    }
}

/// Exact equality, as a free function.
pub fn matrices_equal(m1: &SemanticMatrix, m2: &SemanticMatrix) -> Result<bool, MatrixError> {
    m1.equals(m2)
}

/// The unique nonzero ring scalar `c` with `m1 = c · m2`, if any.  Two zero
/// matrices compare equal with scalar 1.
pub fn matrices_equal_up_to_nonzero_scalar(m1: &SemanticMatrix, m2: &SemanticMatrix) -> Result<Option<RingValue>, MatrixError> {
    m1.scalar_factor(m2)
}
