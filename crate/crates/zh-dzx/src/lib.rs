//! The ΔZX-calculus: the π-fragment of the ZX-calculus with a triangle
//! generator, used as the completeness reference for phase-free ZH.
//!
//! - [`kind`]: ΔZX generators, their JSON names and a random sampler.
//! - [`eval`]: exact semantics of ΔZX diagrams.
//! - [`translate`]: the functors ⟦·⟧_ZH (`to_zh`) and ⟦·⟧_ΔZX (`from_zh`).
//! - [`rules`]: the thirteen ΔZX rules with their soundness sweeps.
//! - [`props`]: the functor properties as executable checks.

pub mod eval;
pub mod kind;
pub mod props;
pub mod rules;
pub mod translate;

pub use eval::{evaluate_dzx, evaluate_dzx_capped};
pub use kind::{DzxDiagram, DzxKind, DzxSampler};
pub use props::{check_functors, roundtrip_check, FunctorReport, PropertyFailure, RoundtripReport};
pub use rules::{dzx_instances, dzx_soundness_sweep, translated_rule_check, DzxParams, DzxRule, DzxRuleInstance, DzxRuleResult};
pub use translate::{from_zh, to_zh};
