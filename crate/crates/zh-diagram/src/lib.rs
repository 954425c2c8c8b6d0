//! Open-graph string diagrams for the phase-free ZH-calculus.
//!
//! - [`graph`] holds the generic [`Diagram`] container: vertices, an edge
//!   multiset (self-loops and parallel edges allowed) and an ordered boundary
//!   of wire ends, with sequential and parallel composition.
//! - [`kind`] lists the ZH generators, primitive and derived.
//! - [`expand`] gives the defining primitive expansion of each derived kind.
//! - [`canon`] computes canonical certificates, deciding isomorphism.
//! - [`json`] reads and writes the JSON diagram format.
//!
//! Only the topology of a diagram matters: legs of symmetric generators are
//! unordered, and inputs and outputs are just an ordered split of one
//! boundary.  Diagrams are values; every operation returns a new diagram.

pub mod builder;
pub mod canon;
pub mod expand;
pub mod graph;
pub mod json;
pub mod kind;
#[cfg(feature = "random")]
pub mod random;

pub use builder::{tail, tip, Builder, IntoEnd};
pub use canon::{vertex_components, CanonicalForm};
pub use expand::{expansion, ZhDiagram};
pub use graph::{Diagram, DiagramError, Edge, End, Generator, NodeId};
pub use json::{JsonError, JsonKind};
pub use kind::GeneratorKind;
