//! Exhaustive semantic soundness checks of rule instances.

use rayon::prelude::*;
use serde::Serialize;
use zh_semantics::{evaluate_capped, EvalError};

use crate::rules::{instances, Equation, Params, RewriteRule, RuleName};

/// Open-wire cap used for soundness checks; the largest swept instance has
/// nine open wires.
pub const SWEEP_WIRE_CAP: usize = 16;

/// Outcome for one rule instance.
#[derive(Clone, Debug, Serialize)]
pub struct InstanceResult {
    pub rule: String,
    pub params: Params,
    pub label: String,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

/// Outcome of a sweep.
#[derive(Clone, Debug, Default, Serialize)]
pub struct SweepReport {
    pub results: Vec<InstanceResult>,
}

impl SweepReport {
    pub fn failures(&self) -> Vec<&InstanceResult> {
        self.results.iter().filter(|r| !r.holds).collect()
    }

    pub fn passed(&self) -> bool {
        self.results.iter().all(|r| r.holds)
    }

    pub fn merge(&mut self, other: SweepReport) {
        self.results.extend(other.results);
    }
}

/// Exact equality of the two sides of an equation.
pub fn equation_holds(eq: &Equation, cap: usize) -> Result<bool, EvalError> {
    Ok(evaluate_capped(&eq.lhs, cap)? == evaluate_capped(&eq.rhs, cap)?)
}

/// Checks the given instances in parallel.
pub fn check_rules(rules: &[RewriteRule]) -> SweepReport {
    let results = rules
        .par_iter()
        .map(|r| {
            let (holds, error) = match equation_holds(&r.equation, SWEEP_WIRE_CAP) {
                Ok(h) => (h, None),
                Err(e) => (false, Some(e.to_string())),
            };
            InstanceResult { rule: r.name.to_string(), params: r.params, label: r.equation.label.clone(), holds, error }
        })
        .collect();
    SweepReport { results }
}

/// Checks every instance of a family with `n ≤ max_n` and `m ≤ max_m`.
pub fn soundness_sweep(family: RuleName, max_n: usize, max_m: usize) -> SweepReport {
    check_rules(&instances(family, max_n, max_m))
}

/// Sweeps several families at once.
pub fn sweep_all(families: &[RuleName], max_n: usize, max_m: usize) -> SweepReport {
    let all: Vec<RewriteRule> = families.iter().flat_map(|&f| instances(f, max_n, max_m)).collect();
    check_rules(&all)
}
