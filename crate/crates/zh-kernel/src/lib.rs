//! Derived equations and proof checking for the phase-free ZH-calculus.
//!
//! - [`lemmas`] registers derived equations with their declared
//!   dependencies and checks them against the exact semantics.
//! - [`script`] replays proof scripts step by step, auditing the semantics
//!   and refusing ambiguous selectors, unverified lemmas and circular
//!   reasoning.
//! - [`minimality`] audits the axioms under alternative interpretations.

pub mod lemmas;
pub mod minimality;
pub mod script;

pub use lemmas::{dependency_map, lemma, registry, verify_all, verify_semantic, Lemma, LemmaGroup, LemmaReport};
pub use minimality::{audit_minimality, audit_with, audited_families, Alternative, AuditRow, MinimalityReport};
pub use script::{shipped_script, shipped_scripts, Kernel, ProofScript, ReplayError, ReplayOptions, ReplayReport, Step, StepReport, SHIPPED_SCRIPTS};
