//! Independence of axioms through alternative interpretations.
//!
//! An interpretation under which every axiom but a few holds shows that at
//! least one of those few cannot be derived from the rest.  The audit checks
//! the axioms, with `AND` replaced by its triangle variant `AND_PRIME`, at
//! bounded parameters.  Equality is taken up to a nonzero scalar and stars
//! are sent to 1, which makes the zero rule trivial.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;
use zh_rewrite::{instances, Params, RuleName, SWEEP_WIRE_CAP};
use zh_semantics::{evaluate_general, Interpretation, RingValue, SemanticMatrix};

/// The interpretations shipped with the audit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Alternative {
    /// The standard tensors.
    Standard,
    /// Every H-box falls apart into white states `|0⟩ + |1⟩` on its legs.
    DisconnectedH,
    /// Every white spider falls apart into copies of the state
    /// `|0⟩ + (√2 − 1)|1⟩`, an eigenvector of the 2-ary H-box.
    DisconnectedZ,
    /// Every H-box carries a negate dot (white π) on each of its legs.
    NegatedH,
}

impl Alternative {
    pub const ALL: [Alternative; 4] = [Alternative::Standard, Alternative::DisconnectedH, Alternative::DisconnectedZ, Alternative::NegatedH];

    pub fn as_str(self) -> &'static str {
        match self {
            Alternative::Standard => "standard",
            Alternative::DisconnectedH => "disconnected-h",
            Alternative::DisconnectedZ => "disconnected-z",
            Alternative::NegatedH => "negated-h",
        }
    }

    /// The axioms expected to fail: the independence claim this
    /// interpretation witnesses.
    pub fn expected_failures(self) -> BTreeSet<RuleName> {
        let names: &[RuleName] = match self {
            Alternative::Standard => &[],
            Alternative::DisconnectedH => &[RuleName::HS2, RuleName::BA1],
            Alternative::DisconnectedZ => &[RuleName::ZS2, RuleName::BA2],
            Alternative::NegatedH => &[RuleName::BA2, RuleName::O],
        };
        names.iter().copied().collect()
    }

    /// Whether the tensors were chosen to realise the claimed failure set
    /// rather than fixed by the standard definitions.
    pub fn reconstructed(self) -> bool {
        self != Alternative::Standard
    }
}

impl fmt::Display for Alternative {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Alternative {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Alternative::ALL.iter().copied().find(|a| a.as_str() == s).ok_or_else(|| {
            let names: Vec<&str> = Alternative::ALL.iter().map(|a| a.as_str()).collect();
            format!("unknown interpretation {s}; expected one of {}", names.join(", "))
        })
    }
}

/// The product state `v ⊗ … ⊗ v` on `n` legs.
fn product(v: [RingValue; 2], n: usize) -> SemanticMatrix {
    SemanticMatrix::from_fn(n, 0, |r, _| (0..n).fold(RingValue::ONE, |acc, i| acc * v[(r >> i) & 1]))
}

/// The standard H-box with a negate dot on every leg.
fn negated_h_box(n: usize) -> SemanticMatrix {
    let all_ones = (1usize << n) - 1;
    SemanticMatrix::from_fn(n, 0, |r, _| {
        let sign = if r.count_ones() % 2 == 1 { -1 } else { 1 };
        RingValue::int(if n > 0 && r == all_ones { -sign } else { sign })
    })
}

impl Interpretation for Alternative {
    fn z_spider(&self, arity: usize) -> Option<SemanticMatrix> {
        match self {
            Alternative::DisconnectedZ => Some(product([RingValue::ONE, RingValue::sqrt2() - RingValue::ONE], arity)),
            _ => None,
        }
    }

    fn h_box(&self, arity: usize) -> Option<SemanticMatrix> {
        match self {
            Alternative::DisconnectedH => Some(product([RingValue::ONE, RingValue::ONE], arity)),
            Alternative::NegatedH => Some(negated_h_box(arity)),
            _ => None,
        }
    }

    fn star(&self) -> RingValue {
        RingValue::ONE
    }
}

/// The audited rule families: the axioms with `AND` replaced by `AND_PRIME`.
pub fn audited_families() -> Vec<RuleName> {
    let mut out: Vec<RuleName> = RuleName::AXIOMS.iter().copied().filter(|&r| r != RuleName::AND).collect();
    out.push(RuleName::AND_PRIME);
    out
}

/// One row of the satisfaction table.
#[derive(Clone, Debug, Serialize)]
pub struct AuditRow {
    pub rule: String,
    pub params: Params,
    pub label: String,
    pub holds: bool,
}

/// The satisfaction table of one interpretation.
#[derive(Clone, Debug, Serialize)]
pub struct MinimalityReport {
    pub interpretation: Alternative,
    pub reconstructed: bool,
    pub max_param: usize,
    pub rows: Vec<AuditRow>,
}

impl MinimalityReport {
    /// Families with at least one failing instance.
    pub fn failing_families(&self) -> BTreeSet<String> {
        self.rows.iter().filter(|r| !r.holds).map(|r| r.rule.clone()).collect()
    }

    pub fn expected_failures(&self) -> BTreeSet<String> {
        self.interpretation.expected_failures().into_iter().map(|r| r.as_str().to_string()).collect()
    }

    /// Whether exactly the expected families fail.
    pub fn matches_claim(&self) -> bool {
        self.failing_families() == self.expected_failures()
    }
}

/// Checks every audited instance with parameters up to `max_param` under
/// `interp`, comparing the two sides up to a nonzero scalar.
pub fn audit_with(interp: &dyn Interpretation, max_param: usize) -> Vec<AuditRow> {
    let rules: Vec<_> = audited_families().into_iter().flat_map(|f| instances(f, max_param, max_param)).collect();
    rules
        .par_iter()
        .map(|r| {
            let lhs = evaluate_general(&r.equation.lhs, interp, SWEEP_WIRE_CAP).expect("rule instances stay under the wire cap");
            let rhs = evaluate_general(&r.equation.rhs, interp, SWEEP_WIRE_CAP).expect("rule instances stay under the wire cap");
            let holds = lhs.proportional(&rhs).expect("both sides share their boundary");
            AuditRow { rule: r.name.as_str().to_string(), params: r.params, label: r.equation.label.clone(), holds }
        })
        .collect()
}

/// Runs the audit for one of the shipped interpretations.
pub fn audit_minimality(interp: Alternative, max_param: usize) -> MinimalityReport {
    MinimalityReport { interpretation: interp, reconstructed: interp.reconstructed(), max_param, rows: audit_with(&interp, max_param) }
}
