//! The rule catalogue as data, and structural invariants of the rule set.
//!
//! The invariants are the syntactic facts behind the independence of
//! individual rules: a rule that is the only one to change some quantity
//! cannot be derived from the others.

use serde_json::{json, Value};
use zh_diagram::{Edge, End, GeneratorKind, ZhDiagram};

use crate::rules::{instances, Equation, RuleName};

/// Machine-readable listing of every rule family within the parameter box.
pub fn catalog(max_n: usize, max_m: usize) -> Value {
    let rules: Vec<Value> = RuleName::ALL
        .iter()
        .flat_map(|&name| instances(name, max_n, max_m))
        .map(|r| {
            json!({
                "rule": r.name.as_str(),
                "label": r.equation.label,
                "params": r.params,
                "axiom": r.name.is_axiom(),
                "definition": r.name.is_definition(),
                "lhs": r.equation.lhs.to_json_value(),
                "rhs": r.equation.rhs.to_json_value(),
            })
        })
        .collect();
    json!({ "rules": rules })
}

/// Whether the two sides differ in the parity of their star count.
pub fn changes_star_parity(eq: &Equation) -> bool {
    eq.lhs.star_count() % 2 != eq.rhs.star_count() % 2
}

fn max_arity(d: &ZhDiagram, kind: GeneratorKind) -> Option<usize> {
    d.vertices().filter(|(_, k)| **k == kind).map(|(v, _)| d.degree(v)).max()
}

/// Whether the equation relates vertices of `kind` of arity at least four to
/// vertices of that kind of lower arity: both sides contain such vertices,
/// their largest arities differ, and the larger one is at least four.
pub fn relates_high_arity(eq: &Equation, kind: GeneratorKind) -> bool {
    match (max_arity(&eq.lhs, kind), max_arity(&eq.rhs, kind)) {
        (Some(a), Some(b)) => a != b && a.max(b) >= 4,
        _ => false,
    }
}

fn has_bare_wire(d: &ZhDiagram) -> bool {
    d.edges().iter().any(|e| matches!(e, Edge(End::Point(_), End::Point(_))))
}

/// Whether exactly one side contains a bare wire between boundary points.
pub fn relates_bare_wire(eq: &Equation) -> bool {
    has_bare_wire(&eq.lhs) != has_bare_wire(&eq.rhs)
}

fn is_empty(d: &ZhDiagram) -> bool {
    d.vertex_count() == 0 && d.edges().is_empty() && d.loops() == 0
}

/// Whether exactly one side is the empty diagram.
pub fn relates_empty(eq: &Equation) -> bool {
    is_empty(&eq.lhs) != is_empty(&eq.rhs)
}

/// Families (among the axioms, with AND replaced by nothing else) having at
/// least one instance in the box with the given property.
pub fn families_with(property: impl Fn(&Equation) -> bool, max_n: usize, max_m: usize) -> Vec<RuleName> {
    let mut axioms: Vec<RuleName> = RuleName::AXIOMS.to_vec();
    axioms.push(RuleName::AND_PRIME);
    axioms.into_iter().filter(|&f| instances(f, max_n, max_m).iter().any(|r| property(&r.equation))).collect()
}
