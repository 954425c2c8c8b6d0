//! Exact semantics of ZH diagrams.
//!
//! - [`ring`]: the scalar ring Z[1/√2] with normalised exact arithmetic.
//! - [`matrix`]: dense `2^m × 2^n` matrices over the ring.
//! - [`contract`]: integer factor-graph contraction with a global power of √2.
//! - [`eval`]: the standard interpretation ⟦·⟧ and pluggable alternatives.
//! - [`general`]: contraction of alternatives with arbitrary ring entries.

pub mod contract;
pub mod eval;
pub mod general;
pub mod matrix;
pub mod ring;

pub use contract::{EvalError, Factor, FactorGraph, DEFAULT_WIRE_CAP};
pub use eval::{evaluate, evaluate_capped, evaluate_with, generator_tensor, open_edges, vertex_legs, Interpretation, Standard};
pub use general::evaluate_general;
pub use matrix::{matrices_equal, matrices_equal_up_to_nonzero_scalar, MatrixError, SemanticMatrix};
pub use ring::{ring_add, ring_eq, ring_mul, ring_neg, RingValue};
