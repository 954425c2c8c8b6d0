//! Proof scripts: step lists that rewrite one diagram into another.
//!
//! A step names a rule or a lemma, a direction, its parameters and a
//! selector: the exact set of host vertices the pattern must cover
//! (`anchors`) and, when that is not enough to single out one match, the
//! node ids just outside each interface position (`boundary`).  A selector
//! that fits no match or several matches is an error; replay never guesses.

use std::collections::hash_map::DefaultHasher;
use std::collections::{BTreeMap, BTreeSet};
use std::hash::{Hash, Hasher};
use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;
use zh_diagram::{JsonError, NodeId, ZhDiagram};
use zh_rewrite::{apply_traced, find_equation_matches, instantiate, Direction, Equation, Params, RuleError, RuleName};
use zh_semantics::{evaluate, SemanticMatrix};

use crate::lemmas::{lemma, LemmaReport};

/// One rewrite step of a script.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Step {
    /// Rule name or lemma id.
    pub rule: String,
    pub direction: Direction,
    #[serde(default)]
    pub params: Params,
    /// Host vertices covered by the pattern.
    #[serde(default)]
    pub anchors: Vec<NodeId>,
    /// Node ids just outside each interface position, when needed to tell
    /// matches with the same image apart.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub boundary: Option<Vec<NodeId>>,
}

/// A derivation of `expected` from `initial`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ProofScript {
    /// Short name of the script.
    pub name: String,
    /// The lemma or rule this script derives.  When it is a registered
    /// lemma, missing diagrams default to the two sides of its instance at
    /// `params`.
    pub target: String,
    #[serde(default)]
    pub params: Params,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub initial: Option<serde_json::Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected: Option<serde_json::Value>,
    pub steps: Vec<Step>,
}

/// Script loading and replay failures.
#[derive(Debug, Error)]
pub enum ReplayError {
    #[error("step {step}: selector fits {count} matches of {rule}")]
    AmbiguousSelector { step: usize, rule: String, count: usize },
    #[error("step {step}: no match of {rule} fits the selector")]
    NoMatch { step: usize, rule: String },
    #[error("final diagram is not isomorphic to the expected one")]
    FinalMismatch,
    #[error("cyclic dependency: {}", cycle.join(" → "))]
    CyclicDependency { cycle: Vec<String> },
    #[error("step {step}: lemma {lemma} has not passed semantic verification")]
    UnverifiedLemma { step: usize, lemma: String },
    #[error("step {step}: lemma {lemma} has no instance {params:?}")]
    UnknownInstance { step: usize, lemma: String, params: Params },
    #[error("step {step}: {source}")]
    Rule { step: usize, source: RuleError },
    #[error("target {0} is not a registered lemma and the script gives no diagrams")]
    MissingDiagrams(String),
    #[error("bad diagram in script: {0}")]
    Diagram(#[from] JsonError),
    #[error("semantic audit could not evaluate a diagram: {0}")]
    Audit(String),
    #[error("cannot read script: {0}")]
    Io(#[from] std::io::Error),
    #[error("malformed script: {0}")]
    Json(#[from] serde_json::Error),
}

/// Per-step replay record.
#[derive(Clone, Debug, Serialize)]
pub struct StepReport {
    pub index: usize,
    pub rule: String,
    pub label: String,
    pub direction: Direction,
    /// Vertices created by the rewrite.
    pub created: Vec<NodeId>,
    pub vertices: usize,
    /// Hash of the diagram's canonical form after the step.
    pub diagram_hash: String,
    /// Hash of the diagram's semantics after the step, when audited.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub semantics_hash: Option<String>,
    /// Whether the semantics still equals that of the initial diagram.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub audit_ok: Option<bool>,
}

/// Outcome of a successful replay.
#[derive(Clone, Debug, Serialize)]
pub struct ReplayReport {
    pub name: String,
    pub target: String,
    pub steps: Vec<StepReport>,
    /// Rules and lemmas used directly by the steps.
    pub uses: BTreeSet<String>,
    pub final_isomorphic: bool,
    /// Whether every audited step preserved the semantics.
    pub audit_passed: bool,
}

impl ReplayReport {
    pub fn passed(&self) -> bool {
        self.final_isomorphic && self.audit_passed
    }
}

/// Replay options.
#[derive(Clone, Copy, Debug)]
pub struct ReplayOptions {
    /// Evaluate every intermediate diagram and compare with the initial one.
    pub audit: bool,
}

impl Default for ReplayOptions {
    fn default() -> Self {
        ReplayOptions { audit: true }
    }
}

impl ProofScript {
    pub fn from_json(text: &str) -> Result<Self, ReplayError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self, ReplayError> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("scripts serialise")
    }

    /// Rule names and lemma ids used directly by the steps.
    pub fn direct_uses(&self) -> BTreeSet<String> {
        self.steps.iter().map(|s| s.rule.clone()).collect()
    }

    /// The start and goal diagrams.
    pub fn diagrams(&self) -> Result<(ZhDiagram, ZhDiagram), ReplayError> {
        let registered = lemma(&self.target).map(|l| l.equation(self.params));
        let side = |given: &Option<serde_json::Value>, pick: fn(&Equation) -> &ZhDiagram| match (given, &registered) {
            (Some(v), _) => Ok(ZhDiagram::from_json_value(v.clone())?),
            (None, Some(eq)) => Ok(pick(eq).clone()),
            (None, None) => Err(ReplayError::MissingDiagrams(self.target.clone())),
        };
        Ok((side(&self.initial, |e| &e.lhs)?, side(&self.expected, |e| &e.rhs)?))
    }
}

/// Hex digest of any hashable value.
fn hex_hash(x: &impl Hash) -> String {
    let mut h = DefaultHasher::new();
    x.hash(&mut h);
    format!("{:016x}", h.finish())
}

fn semantics_hash(m: &SemanticMatrix) -> String {
    hex_hash(&m.to_json_value().to_string())
}

/// Checks scripts and tracks which lemmas may be used as rewrites.
#[derive(Clone, Debug, Default)]
pub struct Kernel {
    verified: BTreeSet<String>,
    library: BTreeMap<String, ProofScript>,
}

impl Kernel {
    pub fn new() -> Self {
        Self::default()
    }

    /// Runs the semantic check of a lemma and, if it passes, allows the
    /// lemma to be used as a rewrite.
    pub fn verify_lemma(&mut self, id: &str) -> Option<LemmaReport> {
        let report = crate::lemmas::verify_semantic(lemma(id)?);
        if report.passed() {
            self.verified.insert(id.to_string());
        }
        Some(report)
    }

    /// Verifies the whole registry.
    pub fn verify_all_lemmas(&mut self) -> Vec<LemmaReport> {
        let reports = crate::lemmas::verify_all();
        for r in &reports {
            if r.passed() {
                self.verified.insert(r.id.clone());
            }
        }
        reports
    }

    pub fn is_verified(&self, id: &str) -> bool {
        self.verified.contains(id)
    }

    /// Registers a script as the derivation of its target, so that
    /// dependency queries see through it.
    pub fn add_script(&mut self, script: ProofScript) {
        self.library.insert(script.target.clone(), script);
    }

    /// The scripts registered so far.
    pub fn scripts(&self) -> impl Iterator<Item = &ProofScript> {
        self.library.values()
    }

    /// Direct dependencies of a rule or lemma: the steps of its script if one
    /// is registered, the declared ones of a lemma otherwise, none for rules.
    pub fn direct_dependencies(&self, id: &str) -> BTreeSet<String> {
        if let Some(s) = self.library.get(id) {
            return s.direct_uses();
        }
        match lemma(id) {
            Some(l) => l.uses.iter().map(|u| u.to_string()).collect(),
            None => BTreeSet::new(),
        }
    }

    /// Everything `id` transitively relies on, or the first cycle found.
    pub fn dependencies(&self, id: &str) -> Result<BTreeSet<String>, ReplayError> {
        let mut done = BTreeSet::new();
        let mut path = Vec::new();
        self.visit(id, &mut path, &mut done)?;
        done.remove(id);
        Ok(done)
    }

    fn visit(&self, id: &str, path: &mut Vec<String>, done: &mut BTreeSet<String>) -> Result<(), ReplayError> {
        if let Some(pos) = path.iter().position(|p| p == id) {
            let mut cycle = path[pos..].to_vec();
            cycle.push(id.to_string());
            return Err(ReplayError::CyclicDependency { cycle });
        }
        if done.contains(id) {
            return Ok(());
        }
        path.push(id.to_string());
        for dep in self.direct_dependencies(id) {
            self.visit(&dep, path, done)?;
        }
        path.pop();
        done.insert(id.to_string());
        Ok(())
    }

    /// Whether a script relies on `rule`, directly or through the lemmas it
    /// uses.
    pub fn script_uses(&self, script: &ProofScript, rule: &str) -> Result<bool, ReplayError> {
        for u in script.direct_uses() {
            if u == rule || self.dependencies(&u)?.contains(rule) {
                return Ok(true);
            }
        }
        Ok(false)
    }

    fn resolve(&self, script: &ProofScript, index: usize, step: &Step) -> Result<Equation, ReplayError> {
        if let Some(l) = lemma(&step.rule) {
            if !self.verified.contains(l.id) {
                return Err(ReplayError::UnverifiedLemma { step: index, lemma: l.id.to_string() });
            }
            if !l.has_instance(step.params) {
                return Err(ReplayError::UnknownInstance { step: index, lemma: l.id.to_string(), params: step.params });
            }
            if l.id == script.target {
                return Err(ReplayError::CyclicDependency { cycle: vec![script.target.clone(), l.id.to_string()] });
            }
            if self.dependencies(l.id)?.contains(&script.target) {
                let mut cycle = vec![script.target.clone(), l.id.to_string()];
                cycle.push(script.target.clone());
                return Err(ReplayError::CyclicDependency { cycle });
            }
            return Ok(l.equation(step.params));
        }
        let name: RuleName = step.rule.parse().map_err(|source| ReplayError::Rule { step: index, source })?;
        let rule = instantiate(name, step.params).map_err(|source| ReplayError::Rule { step: index, source })?;
        Ok(rule.equation)
    }

    /// Replays a script step by step, optionally auditing the semantics of
    /// every intermediate diagram.
    pub fn replay(&self, script: &ProofScript, opts: ReplayOptions) -> Result<ReplayReport, ReplayError> {
        let (mut current, expected) = script.diagrams()?;
        let reference = if opts.audit { Some(evaluate(&current).map_err(|e| ReplayError::Audit(e.to_string()))?) } else { None };
        let mut steps = Vec::with_capacity(script.steps.len());
        let mut audit_passed = true;
        for (index, step) in script.steps.iter().enumerate() {
            let eq = Arc::new(self.resolve(script, index, step)?);
            let anchors: BTreeSet<NodeId> = step.anchors.iter().copied().collect();
            let mut matches = find_equation_matches(&current, &eq, step.direction, Some(&anchors));
            if let Some(b) = &step.boundary {
                matches.retain(|m| m.fits_boundary(b));
            }
            let chosen = match matches.len() {
                0 => return Err(ReplayError::NoMatch { step: index, rule: eq.label.clone() }),
                1 => &matches[0],
                count => return Err(ReplayError::AmbiguousSelector { step: index, rule: eq.label.clone(), count }),
            };
            let rewritten = apply_traced(&current, chosen).expect("match was found on the current diagram");
            current = rewritten.diagram;
            let (semantics_hash, audit_ok) = match &reference {
                Some(r) => {
                    let now = evaluate(&current).map_err(|e| ReplayError::Audit(e.to_string()))?;
                    let ok = &now == r;
                    audit_passed &= ok;
                    (Some(self::semantics_hash(&now)), Some(ok))
                }
                None => (None, None),
            };
            steps.push(StepReport {
                index,
                rule: step.rule.clone(),
                label: eq.label.clone(),
                direction: step.direction,
                created: rewritten.created,
                vertices: current.vertex_count(),
                diagram_hash: hex_hash(&current.canonical_form()),
                semantics_hash,
                audit_ok,
            });
        }
        if !current.is_isomorphic(&expected) {
            return Err(ReplayError::FinalMismatch);
        }
        Ok(ReplayReport {
            name: script.name.clone(),
            target: script.target.clone(),
            steps,
            uses: script.direct_uses(),
            final_isomorphic: true,
            audit_passed,
        })
    }
}

/// The proof scripts shipped with the kernel, as `(file stem, JSON)`.
pub const SHIPPED_SCRIPTS: &[(&str, &str)] = &[
    ("s-zx", include_str!("../scripts/s-zx.proof.json")),
    ("s-xh", include_str!("../scripts/s-xh.proof.json")),
    ("s-star", include_str!("../scripts/s-star.proof.json")),
    ("s-hh", include_str!("../scripts/s-hh.proof.json")),
    ("dc-and", include_str!("../scripts/dc-and.proof.json")),
    ("dc-noand", include_str!("../scripts/dc-noand.proof.json")),
    ("iv", include_str!("../scripts/iv.proof.json")),
    ("t0", include_str!("../scripts/t0.proof.json")),
    ("tcx", include_str!("../scripts/tcx.proof.json")),
    ("ht", include_str!("../scripts/ht.proof.json")),
    ("bw", include_str!("../scripts/bw.proof.json")),
    ("tw", include_str!("../scripts/tw.proof.json")),
];

/// Parses one shipped script by name.
pub fn shipped_script(name: &str) -> Option<ProofScript> {
    SHIPPED_SCRIPTS.iter().find(|(n, _)| *n == name).map(|(_, text)| ProofScript::from_json(text).expect("shipped scripts parse"))
}

/// Parses every shipped script.
pub fn shipped_scripts() -> Vec<ProofScript> {
    SHIPPED_SCRIPTS.iter().map(|(_, text)| ProofScript::from_json(text).expect("shipped scripts parse")).collect()
}
