//! The rule set of the phase-free ZH-calculus as parametric rule builders.
//!
//! Every rule is a pair of diagrams with the same boundary; position `i` of
//! `inputs ++ outputs` on the left corresponds to position `i` on the right.
//! Grey spiders, NOT dots, negate dots and triangles appear as derived
//! vertices, exactly as they are drawn; the definitional rules (`X_DEF`, …)
//! unfold them into primitives.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;
use zh_diagram::{expansion, tail, tip, Builder, GeneratorKind, GeneratorKind::*, NodeId, ZhDiagram};

/// Rule construction failures.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RuleError {
    #[error("unknown rule `{0}`")]
    UnknownRule(String),
    #[error("bad parameters for {rule}: {detail}")]
    BadParameters { rule: String, detail: String },
    #[error("rule sides disagree on the boundary: {lhs_inputs}→{lhs_outputs} vs {rhs_inputs}→{rhs_outputs}")]
    InterfaceMismatch { lhs_inputs: usize, lhs_outputs: usize, rhs_inputs: usize, rhs_outputs: usize },
}

/// Names of the built-in rules.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[allow(non_camel_case_types)]
pub enum RuleName {
    ZS1,
    ZS2,
    HS1,
    HS2,
    BA1,
    BA2,
    M,
    O,
    Z,
    AND,
    AND_PRIME,
    X_DEF,
    NOT_DEF,
    NEG_DEF,
    TRI_DEF,
    TRI_T_DEF,
    HAD_DEF,
    ZS1_MULTI,
}

impl RuleName {
    /// The ten axioms of the rule set.
    pub const AXIOMS: [RuleName; 10] = [
        RuleName::ZS1,
        RuleName::ZS2,
        RuleName::HS1,
        RuleName::HS2,
        RuleName::BA1,
        RuleName::BA2,
        RuleName::M,
        RuleName::O,
        RuleName::Z,
        RuleName::AND,
    ];

    /// Every built-in rule.
    pub const ALL: [RuleName; 18] = [
        RuleName::ZS1,
        RuleName::ZS2,
        RuleName::HS1,
        RuleName::HS2,
        RuleName::BA1,
        RuleName::BA2,
        RuleName::M,
        RuleName::O,
        RuleName::Z,
        RuleName::AND,
        RuleName::AND_PRIME,
        RuleName::X_DEF,
        RuleName::NOT_DEF,
        RuleName::NEG_DEF,
        RuleName::TRI_DEF,
        RuleName::TRI_T_DEF,
        RuleName::HAD_DEF,
        RuleName::ZS1_MULTI,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            RuleName::ZS1 => "ZS1",
            RuleName::ZS2 => "ZS2",
            RuleName::HS1 => "HS1",
            RuleName::HS2 => "HS2",
            RuleName::BA1 => "BA1",
            RuleName::BA2 => "BA2",
            RuleName::M => "M",
            RuleName::O => "O",
            RuleName::Z => "Z",
            RuleName::AND => "AND",
            RuleName::AND_PRIME => "AND_PRIME",
            RuleName::X_DEF => "X_DEF",
            RuleName::NOT_DEF => "NOT_DEF",
            RuleName::NEG_DEF => "NEG_DEF",
            RuleName::TRI_DEF => "TRI_DEF",
            RuleName::TRI_T_DEF => "TRI_T_DEF",
            RuleName::HAD_DEF => "HAD_DEF",
            RuleName::ZS1_MULTI => "ZS1_MULTI",
        }
    }

    /// Number of meaningful parameters (`n`, then `m`, then `k`).
    pub fn parameter_count(self) -> usize {
        match self {
            RuleName::ZS1 | RuleName::HS1 | RuleName::BA1 | RuleName::BA2 | RuleName::O => 2,
            RuleName::X_DEF => 1,
            RuleName::ZS1_MULTI => 3,
            _ => 0,
        }
    }

    /// Whether the rule is one of the axioms (or the equivalent AND_PRIME).
    pub fn is_axiom(self) -> bool {
        RuleName::AXIOMS.contains(&self) || self == RuleName::AND_PRIME
    }

    /// Definitional rules unfold a derived generator.
    pub fn is_definition(self) -> bool {
        matches!(
            self,
            RuleName::X_DEF | RuleName::NOT_DEF | RuleName::NEG_DEF | RuleName::TRI_DEF | RuleName::TRI_T_DEF | RuleName::HAD_DEF
        )
    }
}

impl fmt::Display for RuleName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for RuleName {
    type Err = RuleError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let alias = match s {
            "&" | "And" | "and" => "AND",
            "AND'" | "AND_P" => "AND_PRIME",
            other => other,
        };
        RuleName::ALL.iter().copied().find(|r| r.as_str() == alias).ok_or_else(|| RuleError::UnknownRule(s.to_string()))
    }
}

/// Parameters of a rule instance.  Unused parameters are zero; `k` is the
/// number of connecting wires of the composite multi-wire fusion.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Params {
    #[serde(default)]
    pub n: usize,
    #[serde(default)]
    pub m: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
}

impl Params {
    pub fn new(n: usize, m: usize) -> Self {
        Params { n, m, k: None }
    }
}

/// Which side of an equation is the pattern.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Direction {
    L2R,
    R2L,
}

impl Direction {
    pub fn reversed(self) -> Direction {
        match self {
            Direction::L2R => Direction::R2L,
            Direction::R2L => Direction::L2R,
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::L2R => "L2R",
            Direction::R2L => "R2L",
        })
    }
}

impl FromStr for Direction {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "L2R" => Ok(Direction::L2R),
            "R2L" => Ok(Direction::R2L),
            other => Err(format!("unknown direction `{other}`")),
        }
    }
}

/// An equation between two diagrams with a common boundary.  Rules and
/// lemma instances are both presented this way.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Equation {
    /// Display label, e.g. `ZS1(2,1)`.
    pub label: String,
    pub lhs: ZhDiagram,
    pub rhs: ZhDiagram,
}

impl Equation {
    /// Builds an equation after checking that both sides have the same
    /// numbers of inputs and outputs.
    pub fn new(label: impl Into<String>, lhs: ZhDiagram, rhs: ZhDiagram) -> Result<Self, RuleError> {
        if lhs.inputs().len() != rhs.inputs().len() || lhs.outputs().len() != rhs.outputs().len() {
            return Err(RuleError::InterfaceMismatch {
                lhs_inputs: lhs.inputs().len(),
                lhs_outputs: lhs.outputs().len(),
                rhs_inputs: rhs.inputs().len(),
                rhs_outputs: rhs.outputs().len(),
            });
        }
        Ok(Equation { label: label.into(), lhs, rhs })
    }

    /// (pattern, replacement) for the given direction.
    pub fn sides(&self, dir: Direction) -> (&ZhDiagram, &ZhDiagram) {
        match dir {
            Direction::L2R => (&self.lhs, &self.rhs),
            Direction::R2L => (&self.rhs, &self.lhs),
        }
    }

    /// Number of interface positions.
    pub fn interface_len(&self) -> usize {
        self.lhs.inputs().len() + self.lhs.outputs().len()
    }
}

/// A concrete instance of a built-in rule.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RewriteRule {
    pub name: RuleName,
    pub params: Params,
    pub equation: Equation,
}

impl RewriteRule {
    pub fn lhs(&self) -> &ZhDiagram {
        &self.equation.lhs
    }
    pub fn rhs(&self) -> &ZhDiagram {
        &self.equation.rhs
    }
}

fn bad(rule: RuleName, detail: impl Into<String>) -> RuleError {
    RuleError::BadParameters { rule: rule.to_string(), detail: detail.into() }
}

/// Parses a rule name and builds the instance.
pub fn instantiate_named(name: &str, params: Params) -> Result<RewriteRule, RuleError> {
    instantiate(name.parse()?, params)
}

/// Builds the instance of a rule family at the given parameters.
pub fn instantiate(name: RuleName, params: Params) -> Result<RewriteRule, RuleError> {
    let Params { n, m, k } = params;
    let used = name.parameter_count();
    if used < 3 && k.is_some() {
        return Err(bad(name, "parameter k is not used by this rule"));
    }
    if (used < 2 && m != 0) || (used < 1 && n != 0) {
        return Err(bad(name, format!("rule takes {used} parameter(s), got n={n}, m={m}")));
    }
    let (lhs, rhs) = match name {
        RuleName::ZS1 => zs1(n, m),
        RuleName::ZS2 => zs2(),
        RuleName::HS1 => hs1(n, m),
        RuleName::HS2 => hs2(),
        RuleName::BA1 => ba1(n, m),
        RuleName::BA2 => ba2(n, m),
        RuleName::M => multiply(),
        RuleName::O => ortho(n, m),
        RuleName::Z => zero(),
        RuleName::AND => and(),
        RuleName::AND_PRIME => and_prime(),
        RuleName::X_DEF => (single(XSpider, n), expansion(XSpider, n).expect("derived")),
        RuleName::NOT_DEF => definition(NotDot),
        RuleName::NEG_DEF => definition(NegateDot),
        RuleName::TRI_DEF => definition(Triangle),
        RuleName::TRI_T_DEF => definition(TriangleTransposed),
        RuleName::HAD_DEF => definition(HadamardBox),
        RuleName::ZS1_MULTI => {
            let k = k.unwrap_or(1);
            if k == 0 {
                return Err(bad(name, "at least one connecting wire is required"));
            }
            zs1_multi(n, m, k)
        }
    };
    let label = match used {
        0 => name.to_string(),
        1 => format!("{name}({n})"),
        2 => format!("{name}({n},{m})"),
        _ => format!("{name}({n},{m},{})", k.unwrap_or(1)),
    };
    Ok(RewriteRule { name, params, equation: Equation::new(label, lhs, rhs)? })
}

/// Every instance of a family within the parameter box `n ≤ max_n`, `m ≤ max_m`.
pub fn instances(name: RuleName, max_n: usize, max_m: usize) -> Vec<RewriteRule> {
    let mut out = Vec::new();
    match name.parameter_count() {
        0 => out.push(instantiate(name, Params::default()).expect("valid")),
        1 => out.extend((0..=max_n).map(|n| instantiate(name, Params::new(n, 0)).expect("valid"))),
        2 => {
            for n in 0..=max_n {
                for m in 0..=max_m {
                    out.push(instantiate(name, Params::new(n, m)).expect("valid"));
                }
            }
        }
        _ => {
            for n in 0..=max_n {
                for m in 0..=max_m {
                    for k in 1..=3 {
                        out.push(instantiate(name, Params { n, m, k: Some(k) }).expect("valid"));
                    }
                }
            }
        }
    }
    out
}

fn single(kind: GeneratorKind, arity: usize) -> ZhDiagram {
    let mut b = Builder::new();
    let v = b.add(kind);
    for _ in 0..arity {
        b.output(v);
    }
    b.finish()
}

/// A derived two-legged generator on a wire against its expansion.
fn definition(kind: GeneratorKind) -> (ZhDiagram, ZhDiagram) {
    let mut b = Builder::new();
    let v = b.add(kind);
    if kind == Triangle || kind == TriangleTransposed {
        b.input(tail(v));
        b.output(tip(v));
    } else {
        b.input(v);
        b.output(v);
    }
    (b.finish(), expansion(kind, 2).expect("derived").with_split(1))
}

fn zs1(n: usize, m: usize) -> (ZhDiagram, ZhDiagram) {
    zs1_multi(n, m, 1)
}

/// Two white spiders joined by `k` wires fuse into one.
fn zs1_multi(n: usize, m: usize, k: usize) -> (ZhDiagram, ZhDiagram) {
    let mut l = Builder::new();
    let a = l.add(ZSpider);
    let c = l.add(ZSpider);
    l.link_n(a, c, k);
    for _ in 0..n {
        l.input(a);
    }
    for _ in 0..m {
        l.output(c);
    }
    let mut r = Builder::new();
    let z = r.add(ZSpider);
    for _ in 0..n {
        r.input(z);
    }
    for _ in 0..m {
        r.output(z);
    }
    (l.finish(), r.finish())
}

fn zs2() -> (ZhDiagram, ZhDiagram) {
    let mut l = Builder::new();
    let z = l.add(ZSpider);
    l.input(z);
    l.output(z);
    let mut r = Builder::new();
    r.wire();
    (l.finish(), r.finish())
}

/// Two H-boxes joined through a 2-ary H-box fuse, leaving a factor 2.
fn hs1(n: usize, m: usize) -> (ZhDiagram, ZhDiagram) {
    let mut l = Builder::new();
    let a = l.add(HBox);
    let h = l.add(HBox);
    let c = l.add(HBox);
    l.link(a, h);
    l.link(h, c);
    for _ in 0..n {
        l.input(a);
    }
    for _ in 0..m {
        l.output(c);
    }
    let mut r = Builder::new();
    let z = r.add(HBox);
    for _ in 0..n {
        r.input(z);
    }
    for _ in 0..m {
        r.output(z);
    }
    r.add(ZSpider);
    (l.finish(), r.finish())
}

fn hs2() -> (ZhDiagram, ZhDiagram) {
    let mut l = Builder::new();
    let a = l.add(HBox);
    let c = l.add(HBox);
    l.link(a, c);
    l.input(a);
    l.output(c);
    let mut r = Builder::new();
    r.wire();
    r.add(ZSpider);
    (l.finish(), r.finish())
}

/// Complete bipartite graph: `left` vertices each carrying one input,
/// `right` vertices each carrying one output, every pair joined once.
fn bipartite(left: GeneratorKind, n: usize, right: GeneratorKind, m: usize) -> ZhDiagram {
    let mut r = Builder::new();
    let ls = r.add_many(left, n);
    let rs = r.add_many(right, m);
    for &a in &ls {
        for &c in &rs {
            r.link(a, c);
        }
    }
    for &a in &ls {
        r.input(a);
    }
    for &c in &rs {
        r.output(c);
    }
    r.finish()
}

/// A white spider with `n` inputs meets a grey spider with `m` outputs.
fn ba1(n: usize, m: usize) -> (ZhDiagram, ZhDiagram) {
    let mut l = Builder::new();
    let z = l.add(ZSpider);
    let x = l.add(XSpider);
    l.link(z, x);
    for _ in 0..n {
        l.input(z);
    }
    for _ in 0..m {
        l.output(x);
    }
    (l.finish(), bipartite(XSpider, n, ZSpider, m))
}

/// A grey spider with `n` inputs meets an H-box with `m` outputs.
fn ba2(n: usize, m: usize) -> (ZhDiagram, ZhDiagram) {
    let mut l = Builder::new();
    let x = l.add(XSpider);
    let h = l.add(HBox);
    l.link(x, h);
    for _ in 0..n {
        l.input(x);
    }
    for _ in 0..m {
        l.output(h);
    }
    (l.finish(), bipartite(HBox, n, ZSpider, m))
}

fn multiply() -> (ZhDiagram, ZhDiagram) {
    let mut l = Builder::new();
    let z = l.add(ZSpider);
    let a = l.add(HBox);
    let c = l.add(HBox);
    l.link(z, a);
    l.link(z, c);
    l.output(z);
    let mut r = Builder::new();
    let z = r.add(ZSpider);
    r.output(z);
    (l.finish(), r.finish())
}

/// One input is copied into two H-boxes, once through a NOT; the boxes share
/// a wire and carry `n` and `m` outputs.  The shared wire may be cut, each
/// half capped with a one-legged white spider, at the cost of the factor 2.
fn ortho(n: usize, m: usize) -> (ZhDiagram, ZhDiagram) {
    let build = |joined: bool| {
        let mut b = Builder::new();
        let z = b.add(ZSpider);
        let not = b.add(NotDot);
        let ha = b.add(HBox);
        let hb = b.add(HBox);
        b.link(z, ha);
        b.link(z, not);
        b.link(not, hb);
        if joined {
            b.link(ha, hb);
            b.add(ZSpider);
        } else {
            let ca = b.add(ZSpider);
            let cb = b.add(ZSpider);
            b.link(ha, ca);
            b.link(hb, cb);
        }
        b.input(z);
        for _ in 0..n {
            b.output(ha);
        }
        for _ in 0..m {
            b.output(hb);
        }
        b.finish()
    };
    (build(true), build(false))
}

/// A star next to the zero scalar is absorbed.
fn zero() -> (ZhDiagram, ZhDiagram) {
    let gadget = |star: bool| {
        let mut b = Builder::new();
        let z = b.add(ZSpider);
        let h = b.add(HBox);
        b.link(z, h);
        if star {
            b.add(Star);
        }
        b.finish()
    };
    (gadget(true), gadget(false))
}

/// The H-box AND gate `a, b ↦ o`: a 3-ary H-box followed by a 2-ary H-box,
/// normalised by two stars.  Returns the output-side vertex end.
fn h_and(b: &mut Builder<GeneratorKind>) -> (NodeId, NodeId, NodeId) {
    let h3 = b.add(HBox);
    let h2 = b.add(HBox);
    b.link(h3, h2);
    b.add(Star);
    b.add(Star);
    (h3, h3, h2)
}

fn and() -> (ZhDiagram, ZhDiagram) {
    let mut l = Builder::new();
    let (a, c, o) = h_and(&mut l);
    l.input(a);
    l.input(c);
    l.output(o);
    let mut r = Builder::new();
    let t1 = r.add(Triangle);
    let t2 = r.add(Triangle);
    let z = r.add(ZSpider);
    let n1 = r.add(NegateDot);
    let t3 = r.add(Triangle);
    let n2 = r.add(NegateDot);
    r.link(tip(t1), z);
    r.link(tip(t2), z);
    r.link(z, n1);
    r.link(n1, tail(t3));
    r.link(tip(t3), n2);
    r.input(tail(t1));
    r.input(tail(t2));
    r.output(n2);
    (l.finish(), r.finish())
}

fn and_prime() -> (ZhDiagram, ZhDiagram) {
    let mut l = Builder::new();
    let (a, c, o) = h_and(&mut l);
    let t = l.add(Triangle);
    l.link(o, tail(t));
    l.input(a);
    l.input(c);
    l.output(tip(t));
    let mut r = Builder::new();
    let t1 = r.add(Triangle);
    let t2 = r.add(Triangle);
    let z = r.add(ZSpider);
    r.link(tip(t1), z);
    r.link(tip(t2), z);
    r.input(tail(t1));
    r.input(tail(t2));
    r.output(z);
    (l.finish(), r.finish())
}
