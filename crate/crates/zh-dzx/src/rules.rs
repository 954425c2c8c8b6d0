//! The thirteen ΔZX rules, as parameterised equations with soundness sweeps.
//!
//! Spider phases range over {0, π}.  Scalars are kept exact: where the two
//! sides of a rule differ by √2 the missing factor is written with the
//! [`sqrt2`] gadget, so every instance is an exact equality.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;
use zh_diagram::{tail, tip, Builder};
use zh_semantics::evaluate;

use crate::eval::evaluate_dzx;
use crate::kind::{DzxDiagram, DzxKind};
use crate::translate::{sqrt2, to_zh};

/// Names of the ΔZX rules.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum DzxRule {
    /// Green spider fusion along one or more wires.
    S1,
    /// The phase-free two-legged green spider is a wire.
    S2g,
    /// The phase-free two-legged red spider is a wire.
    S2r,
    /// √2 and 1/√2 cancel.
    IV,
    /// A red state copies through a green spider.
    B1,
    /// Bialgebra between red and green spiders.
    B2,
    /// Hadamards on every leg change the spider colour.
    H,
    /// The zero scalar absorbs any diagram.
    Z,
    /// The triangle fixes the red state |0⟩.
    T0,
    /// Triangles on a copied and on a negated copy of one wire merge to |0⟩.
    BW,
    /// A Hadamard of the π state through a triangle gives the green state.
    HT,
    /// A CNOT controlled by the triangle's own input has no effect.
    TCX,
    /// The triangle between π red spiders is the reversed triangle.
    TW,
}

impl DzxRule {
    /// All rules in display order.
    pub const ALL: [DzxRule; 13] = [
        DzxRule::S1,
        DzxRule::S2g,
        DzxRule::S2r,
        DzxRule::IV,
        DzxRule::B1,
        DzxRule::B2,
        DzxRule::H,
        DzxRule::Z,
        DzxRule::T0,
        DzxRule::BW,
        DzxRule::HT,
        DzxRule::TCX,
        DzxRule::TW,
    ];

    /// The rule name.
    pub fn as_str(self) -> &'static str {
        match self {
            DzxRule::S1 => "S1",
            DzxRule::S2g => "S2g",
            DzxRule::S2r => "S2r",
            DzxRule::IV => "IV",
            DzxRule::B1 => "B1",
            DzxRule::B2 => "B2",
            DzxRule::H => "H",
            DzxRule::Z => "Z",
            DzxRule::T0 => "T0",
            DzxRule::BW => "BW",
            DzxRule::HT => "HT",
            DzxRule::TCX => "TCX",
            DzxRule::TW => "TW",
        }
    }
}

impl fmt::Display for DzxRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for DzxRule {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        DzxRule::ALL.into_iter().find(|r| r.as_str() == s).ok_or_else(|| format!("unknown ΔZX rule {s:?}"))
    }
}

/// Parameters of a ΔZX rule instance: open wires `n`, `m`, connecting wires
/// `k` and the two phase bits.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct DzxParams {
    pub n: usize,
    pub m: usize,
    pub k: usize,
    pub alpha: bool,
    pub beta: bool,
}

/// One instance of a rule.
#[derive(Clone, Debug)]
pub struct DzxRuleInstance {
    pub rule: DzxRule,
    pub params: DzxParams,
    pub lhs: DzxDiagram,
    pub rhs: DzxDiagram,
}

impl DzxRuleInstance {
    /// A short label such as `S1(n=1,m=2,k=2,α=π,β=0)`.
    pub fn label(&self) -> String {
        let p = &self.params;
        let ph = |b: bool| if b { "π" } else { "0" };
        match self.rule {
            DzxRule::S1 => format!("S1(n={},m={},k={},α={},β={})", p.n, p.m, p.k, ph(p.alpha), ph(p.beta)),
            DzxRule::H => format!("H(n={},m={},α={})", p.n, p.m, ph(p.alpha)),
            DzxRule::Z => format!("Z(n={},α={})", p.n, ph(p.alpha)),
            DzxRule::B1 => format!("B1(α={})", ph(p.alpha)),
            r => r.to_string(),
        }
    }
}

/// Outcome of checking one instance.
#[derive(Clone, Debug, Serialize)]
pub struct DzxRuleResult {
    pub rule: DzxRule,
    pub label: String,
    pub sound: bool,
}

const PHASES: [bool; 2] = [false, true];

/// All instances of `rule` with spiders of arity at most `max_arity` (and at
/// most three connecting wires for S1).
pub fn dzx_instances(rule: DzxRule, max_arity: usize) -> Vec<DzxRuleInstance> {
    let mut out = Vec::new();
    let mut push = |params: DzxParams, (lhs, rhs): (DzxDiagram, DzxDiagram)| out.push(DzxRuleInstance { rule, params, lhs, rhs });
    match rule {
        DzxRule::S1 => {
            for k in 1..=3.min(max_arity) {
                for n in 0..=max_arity - k {
                    for m in 0..=max_arity - k {
                        for alpha in PHASES {
                            for beta in PHASES {
                                let p = DzxParams { n, m, k, alpha, beta };
                                push(p, s1(p));
                            }
                        }
                    }
                }
            }
        }
        DzxRule::H => {
            for total in 0..=max_arity {
                for n in 0..=total {
                    for alpha in PHASES {
                        let p = DzxParams { n, m: total - n, alpha, ..DzxParams::default() };
                        push(p, colour_change(p));
                    }
                }
            }
        }
        DzxRule::Z => {
            for n in 1..=max_arity {
                for alpha in PHASES {
                    let p = DzxParams { n, alpha, ..DzxParams::default() };
                    push(p, zero(p));
                }
            }
        }
        DzxRule::B1 => {
            for alpha in PHASES {
                let p = DzxParams { alpha, ..DzxParams::default() };
                push(p, b1(alpha));
            }
        }
        DzxRule::S2g => push(DzxParams::default(), s2(DzxKind::Z0)),
        DzxRule::S2r => push(DzxParams::default(), s2(DzxKind::X0)),
        DzxRule::IV => push(DzxParams::default(), iv()),
        DzxRule::B2 => push(DzxParams::default(), b2()),
        DzxRule::T0 => push(DzxParams::default(), t0()),
        DzxRule::BW => push(DzxParams::default(), bw()),
        DzxRule::HT => push(DzxParams::default(), ht()),
        DzxRule::TCX => push(DzxParams::default(), tcx()),
        DzxRule::TW => push(DzxParams::default(), tw()),
    }
    out
}

fn all_instances(max_arity: usize) -> Vec<DzxRuleInstance> {
    DzxRule::ALL.into_iter().flat_map(|r| dzx_instances(r, max_arity)).collect()
}

/// Checks every instance exactly under the ΔZX semantics.
pub fn dzx_soundness_sweep(max_arity: usize) -> Vec<DzxRuleResult> {
    all_instances(max_arity)
        .into_par_iter()
        .map(|i| {
            let sound = matches!((evaluate_dzx(&i.lhs), evaluate_dzx(&i.rhs)), (Ok(a), Ok(b)) if a == b);
            DzxRuleResult { rule: i.rule, label: i.label(), sound }
        })
        .collect()
}

/// Checks every instance after translation to ZH: both ZH images must have
/// the same standard semantics.
pub fn translated_rule_check(max_arity: usize) -> Vec<DzxRuleResult> {
    all_instances(max_arity)
        .into_par_iter()
        .map(|i| {
            let sound = matches!((evaluate(&to_zh(&i.lhs)), evaluate(&to_zh(&i.rhs))), (Ok(a), Ok(b)) if a == b);
            DzxRuleResult { rule: i.rule, label: i.label(), sound }
        })
        .collect()
}

fn s1(p: DzxParams) -> (DzxDiagram, DzxDiagram) {
    let mut l = Builder::new();
    let (a, b) = (l.add(DzxKind::Z(p.alpha)), l.add(DzxKind::Z(p.beta)));
    for _ in 0..p.n {
        l.input(a);
    }
    l.link_n(a, b, p.k);
    for _ in 0..p.m {
        l.output(b);
    }
    let mut r = Builder::new();
    let z = r.add(DzxKind::Z(p.alpha != p.beta));
    for _ in 0..p.n {
        r.input(z);
    }
    for _ in 0..p.m {
        r.output(z);
    }
    (l.finish(), r.finish())
}

fn s2(kind: DzxKind) -> (DzxDiagram, DzxDiagram) {
    let mut l = Builder::new();
    let v = l.add(kind);
    l.input(v);
    l.output(v);
    let mut r = Builder::new();
    r.wire();
    (l.finish(), r.finish())
}

fn iv() -> (DzxDiagram, DzxDiagram) {
    let mut l = Builder::new();
    let (h, t) = (l.add(DzxKind::Hadamard), l.add(DzxKind::Triangle));
    l.link(h, tail(t));
    l.link(h, tip(t));
    (l.finish().tensor(&sqrt2()), DzxDiagram::empty())
}

fn b1(alpha: bool) -> (DzxDiagram, DzxDiagram) {
    let mut l = Builder::new();
    let (s, z) = (l.add(DzxKind::X(alpha)), l.add(DzxKind::Z0));
    l.link(s, z);
    l.output(z);
    l.output(z);
    let mut r = Builder::new();
    for _ in 0..2 {
        let s = r.add(DzxKind::X(alpha));
        r.output(s);
    }
    (l.finish().tensor(&sqrt2()), r.finish())
}

fn b2() -> (DzxDiagram, DzxDiagram) {
    let mut l = Builder::new();
    let (x, z) = (l.add(DzxKind::X0), l.add(DzxKind::Z0));
    l.input(x);
    l.input(x);
    l.link(x, z);
    l.output(z);
    l.output(z);
    let mut r = Builder::new();
    let zs = r.add_many(DzxKind::Z0, 2);
    let xs = r.add_many(DzxKind::X0, 2);
    for &z in &zs {
        r.input(z);
        for &x in &xs {
            r.link(z, x);
        }
    }
    for &x in &xs {
        r.output(x);
    }
    (l.finish(), r.finish().tensor(&sqrt2()))
}

fn colour_change(p: DzxParams) -> (DzxDiagram, DzxDiagram) {
    let mut l = Builder::new();
    let x = l.add(DzxKind::X(p.alpha));
    let mut r = Builder::new();
    let z = r.add(DzxKind::Z(p.alpha));
    let mut legs = Vec::new();
    for _ in 0..p.n + p.m {
        let h = r.add(DzxKind::Hadamard);
        r.link(z, h);
        legs.push(h);
    }
    for &h in &legs[..p.n] {
        l.input(x);
        r.input(h);
    }
    for &h in &legs[p.n..] {
        l.output(x);
        r.output(h);
    }
    (l.finish(), r.finish())
}

fn zero(p: DzxParams) -> (DzxDiagram, DzxDiagram) {
    let mut l = Builder::new();
    l.add(DzxKind::ZPI);
    let x = l.add(DzxKind::X(p.alpha));
    for _ in 0..p.n {
        l.output(x);
    }
    let mut r = Builder::new();
    r.add(DzxKind::ZPI);
    for _ in 0..p.n {
        let z = r.add(DzxKind::Z0);
        r.output(z);
    }
    (l.finish(), r.finish())
}

fn t0() -> (DzxDiagram, DzxDiagram) {
    let mut l = Builder::new();
    let (x, t) = (l.add(DzxKind::X0), l.add(DzxKind::Triangle));
    l.link(x, tail(t));
    l.output(tip(t));
    let mut r = Builder::new();
    let x = r.add(DzxKind::X0);
    r.output(x);
    (l.finish(), r.finish())
}

fn bw() -> (DzxDiagram, DzxDiagram) {
    let mut l = Builder::new();
    let (copy, not, merge) = (l.add(DzxKind::Z0), l.add(DzxKind::XPI), l.add(DzxKind::Z0));
    let (t1, t2) = (l.add(DzxKind::Triangle), l.add(DzxKind::Triangle));
    l.input(copy);
    l.link(copy, tail(t1));
    l.link(copy, not);
    l.link(not, tail(t2));
    l.link(tip(t1), merge);
    l.link(tip(t2), merge);
    l.output(merge);
    let mut r = Builder::new();
    let (z, x) = (r.add(DzxKind::Z0), r.add(DzxKind::X0));
    r.input(z);
    r.output(x);
    (l.finish().tensor(&sqrt2()), r.finish())
}

fn ht() -> (DzxDiagram, DzxDiagram) {
    let mut l = Builder::new();
    let (s, h, t) = (l.add(DzxKind::ZPI), l.add(DzxKind::Hadamard), l.add(DzxKind::Triangle));
    l.link(s, h);
    l.link(h, tail(t));
    l.output(tip(t));
    let mut r = Builder::new();
    let z = r.add(DzxKind::Z0);
    r.output(z);
    (l.finish(), r.finish().tensor(&sqrt2()))
}

fn tcx() -> (DzxDiagram, DzxDiagram) {
    let mut l = Builder::new();
    let (copy, t, x) = (l.add(DzxKind::Z0), l.add(DzxKind::Triangle), l.add(DzxKind::X0));
    l.input(copy);
    l.link(copy, tail(t));
    l.link(copy, x);
    l.link(tip(t), x);
    l.output(x);
    let mut r = Builder::new();
    let t = r.add(DzxKind::Triangle);
    r.input(tail(t));
    r.output(tip(t));
    (l.finish().tensor(&sqrt2()), r.finish())
}

fn tw() -> (DzxDiagram, DzxDiagram) {
    let mut l = Builder::new();
    let (a, t, b) = (l.add(DzxKind::XPI), l.add(DzxKind::Triangle), l.add(DzxKind::XPI));
    l.input(a);
    l.link(a, tail(t));
    l.link(tip(t), b);
    l.output(b);
    let mut r = Builder::new();
    let t = r.add(DzxKind::Triangle);
    r.input(tip(t));
    r.output(tail(t));
    (l.finish(), r.finish())
}
