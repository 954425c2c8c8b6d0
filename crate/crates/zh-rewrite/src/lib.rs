//! Rewriting for the phase-free ZH-calculus.
//!
//! - [`rules`] builds every rule family as a pair of diagrams with a shared
//!   boundary, including the definitional unfoldings of derived generators.
//! - [`matching`] finds embeddings of one side of an equation in a host
//!   diagram and applies them.
//! - [`sweep`] checks rule instances for exact semantic soundness.
//! - [`catalog`] lists the rules as data and computes the structural
//!   invariants that single out individual rules.

pub mod catalog;
pub mod matching;
pub mod rules;
pub mod sweep;

pub use matching::{apply, apply_traced, diagram_digest, find_equation_matches, find_matches, Match, RewriteError, Rewritten};
pub use rules::{instances, instantiate, instantiate_named, Direction, Equation, Params, RewriteRule, RuleError, RuleName};
pub use sweep::{check_rules, equation_holds, soundness_sweep, sweep_all, InstanceResult, SweepReport, SWEEP_WIRE_CAP};
