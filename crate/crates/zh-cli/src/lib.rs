//! Command-line surface of the ZH verification engine.
//!
//! - [`circuit`] parses Toffoli+Hadamard circuits and compiles them to ZH
//!   diagrams.
//! - [`commands`] runs one engine operation per command and returns a
//!   [`report::Report`].
//! - [`preservation`] holds the randomised rewrite campaigns.

pub mod circuit;
pub mod commands;
pub mod preservation;
pub mod report;

pub use circuit::{compile_circuit, Circuit, CircuitError, Gate};
pub use report::{Item, Report, Status};
