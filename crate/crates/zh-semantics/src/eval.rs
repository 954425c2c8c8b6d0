//! The standard interpretation of ZH diagrams.
//!
//! Diagrams are first expanded to primitives.  White spiders then become
//! shared variables (a spider is a copy tensor, so all its legs carry one
//! value), each H-box a ±1 factor over its legs, each star a factor 1/√2 and
//! each free loop a factor 2.

use std::collections::HashMap;

use zh_diagram::{Diagram, End, Generator, GeneratorKind, NodeId, ZhDiagram};

use crate::contract::{EvalError, Factor, FactorGraph, DEFAULT_WIRE_CAP};
use crate::matrix::SemanticMatrix;
use crate::ring::RingValue;

/// Assignment of tensors to primitive generators.  The standard
/// interpretation is [`Standard`]; alternative interpretations drive the
/// minimality audit.
pub trait Interpretation: Sync {
    /// Tensor of a white spider with `arity` legs, or `None` to use the
    /// copy-variable shortcut of the standard semantics.
    fn z_spider(&self, arity: usize) -> Option<SemanticMatrix>;
    /// Tensor of an H-box with `arity` legs, or `None` for the standard one.
    fn h_box(&self, arity: usize) -> Option<SemanticMatrix>;
    /// Value of the star.
    fn star(&self) -> RingValue;
    /// Tensor of a derived generator, or `None` to evaluate it through its
    /// defining expansion.
    fn derived(&self, _kind: GeneratorKind, _arity: usize) -> Option<SemanticMatrix> {
        None
    }
}

/// Expands the derived vertices the interpretation does not assign a tensor
/// to.
pub(crate) fn expand_for(d: &ZhDiagram, interp: &dyn Interpretation) -> ZhDiagram {
    d.substitute_vertices(|k, arity| if interp.derived(*k, arity).is_some() { None } else { zh_diagram::expansion(*k, arity) })
}

/// The standard interpretation ⟦·⟧.
#[derive(Clone, Copy, Debug, Default)]
pub struct Standard;

impl Interpretation for Standard {
    fn z_spider(&self, _arity: usize) -> Option<SemanticMatrix> {
        None
    }
    fn h_box(&self, _arity: usize) -> Option<SemanticMatrix> {
        None
    }
    fn star(&self) -> RingValue {
        RingValue::inv_sqrt2()
    }
}

/// Union-find over edge slots.
pub(crate) struct Sites {
    parent: Vec<usize>,
}

impl Sites {
    pub(crate) fn new(n: usize) -> Self {
        Sites { parent: (0..n).collect() }
    }
    pub(crate) fn find(&mut self, x: usize) -> usize {
        let p = self.parent[x];
        if p == x {
            return x;
        }
        let r = self.find(p);
        self.parent[x] = r;
        r
    }
    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        if a != b {
            self.parent[a.max(b)] = a.min(b);
        }
    }
}

/// Per-vertex leg variables of a diagram: for each vertex, the edge index of
/// each incident end in leg order (by port for oriented kinds).
pub fn vertex_legs<K: Generator>(d: &Diagram<K>) -> HashMap<NodeId, Vec<usize>> {
    let mut legs: HashMap<NodeId, Vec<(u8, usize)>> = d.vertices().map(|(v, _)| (v, Vec::new())).collect();
    for (i, e) in d.edges().iter().enumerate() {
        for end in [e.0, e.1] {
            if let End::Leg(v, port) = end {
                legs.get_mut(&v).expect("known vertex").push((port, i));
            }
        }
    }
    legs.into_iter()
        .map(|(v, mut l)| {
            l.sort_by_key(|x| x.0);
            (v, l.into_iter().map(|x| x.1).collect())
        })
        .collect()
}

/// Edge index carrying each boundary point, outputs first then inputs.
pub fn open_edges<K: Generator>(d: &Diagram<K>) -> Vec<usize> {
    let mut at: HashMap<NodeId, usize> = HashMap::new();
    for (i, e) in d.edges().iter().enumerate() {
        for end in [e.0, e.1] {
            if let End::Point(p) = end {
                at.insert(p, i);
            }
        }
    }
    d.outputs().iter().chain(d.inputs()).map(|p| at[p]).collect()
}

fn check_cap<K: Generator>(d: &Diagram<K>, cap: usize) -> Result<(), EvalError> {
    let wires = d.inputs().len() + d.outputs().len();
    if wires > cap {
        return Err(EvalError::TooManyOpenWires { wires, cap });
    }
    Ok(())
}

/// Evaluates a ZH diagram with the default wire cap.
pub fn evaluate(d: &ZhDiagram) -> Result<SemanticMatrix, EvalError> {
    evaluate_with(d, &Standard, DEFAULT_WIRE_CAP)
}

/// Evaluates a ZH diagram with a custom wire cap.
pub fn evaluate_capped(d: &ZhDiagram, cap: usize) -> Result<SemanticMatrix, EvalError> {
    evaluate_with(d, &Standard, cap)
}

/// Evaluates a ZH diagram under an arbitrary interpretation.
pub fn evaluate_with(d: &ZhDiagram, interp: &dyn Interpretation, cap: usize) -> Result<SemanticMatrix, EvalError> {
    check_cap(d, cap)?;
    let d = expand_for(d, interp);
    let legs = vertex_legs(&d);
    let mut sites = Sites::new(d.edges().len());
    let mut spider_tensors: Vec<(Vec<usize>, SemanticMatrix)> = Vec::new();
    let mut isolated_spiders = 0usize;
    for (v, k) in d.vertices() {
        if *k == GeneratorKind::ZSpider {
            let l = &legs[&v];
            match interp.z_spider(l.len()) {
                None if l.is_empty() => isolated_spiders += 1,
                None => {
                    for w in l.windows(2) {
                        sites.union(w[0], w[1]);
                    }
                }
                Some(t) => spider_tensors.push((l.clone(), t)),
            }
        }
    }
    let mut g = FactorGraph::new();
    let mut var_of: HashMap<usize, usize> = HashMap::new();
    let mut var = |g: &mut FactorGraph, sites: &mut Sites, e: usize| {
        let root = sites.find(e);
        *var_of.entry(root).or_insert_with(|| g.var())
    };
    for i in 0..d.edges().len() {
        var(&mut g, &mut sites, i);
    }
    for _ in 0..isolated_spiders {
        g.var();
    }
    let mut star_value = RingValue::ONE;
    for (v, k) in d.vertices() {
        let l: Vec<usize> = legs[&v].iter().map(|&e| var(&mut g, &mut sites, e)).collect();
        match k {
            GeneratorKind::HBox => match interp.h_box(l.len()) {
                None => g.add_factor(Factor::from_legs(&l, |bits| if bits.iter().all(|&b| b == 1) { -1 } else { 1 })),
                Some(t) => add_tensor(&mut g, &l, &t),
            },
            GeneratorKind::Star => star_value = star_value * interp.star(),
            GeneratorKind::ZSpider => {}
            other => add_tensor(&mut g, &l, &interp.derived(*other, l.len()).expect("unassigned derived vertices are expanded")),
        }
    }
    for (l, t) in &spider_tensors {
        let l: Vec<usize> = l.iter().map(|&e| var(&mut g, &mut sites, e)).collect();
        add_tensor(&mut g, &l, t);
    }
    g.scale_sqrt2(2 * i64::from(d.loops()));
    let open: Vec<usize> = open_edges(&d).into_iter().map(|e| var(&mut g, &mut sites, e)).collect();
    let m = g.contract(&open, d.outputs().len());
    Ok(if star_value == RingValue::ONE { m } else { m.scale(star_value) })
}

/// Adds an arbitrary tensor (read as a state over its legs, first leg most
/// significant) as a factor.  Entries must be integers times a common power
/// of √2; the power is pulled into the global scalar.
fn add_tensor(g: &mut FactorGraph, legs: &[usize], t: &SemanticMatrix) {
    let entries = t.entries();
    // Bring every entry to the form n·√2^e with a common e.
    let e = entries.iter().filter(|x| !x.is_zero()).map(|x| -2 * i64::from(x.k()) + i64::from(x.b() != 0)).min().unwrap_or(0);
    let scale = RingValue::scaled_sqrt2_pow(1, -e);
    let ints: Vec<i128> = entries
        .iter()
        .map(|&x| {
            let y = x * scale;
            assert!(y.k() == 0 && (y.a() == 0 || y.b() == 0), "interpretation tensors must be integer multiples of a power of √2");
            if y.b() != 0 {
                panic!("mixed rational and irrational entries are not supported")
            }
            y.a()
        })
        .collect();
    g.scale_sqrt2(e);
    let n = legs.len();
    g.add_factor(Factor::from_legs(legs, |bits| {
        let idx = bits.iter().enumerate().fold(0usize, |acc, (i, &b)| acc | (usize::from(b) << (n - 1 - i)));
        ints[idx]
    }));
}

/// The tensor of a single generator with the given arity, as a state on its
/// legs (a `2^arity × 1` matrix).  Derived kinds are evaluated through their
/// expansions.
pub fn generator_tensor(kind: GeneratorKind, arity: usize) -> Result<SemanticMatrix, zh_diagram::DiagramError> {
    if !<GeneratorKind as Generator>::arity_ok(&kind, arity) {
        return Err(zh_diagram::DiagramError::ArityViolation { vertex: 0, kind: kind.to_string(), arity });
    }
    let mut b = zh_diagram::Builder::new();
    let v = b.add(kind);
    if kind.oriented() {
        b.output(zh_diagram::tail(v));
        b.output(zh_diagram::tip(v));
    } else {
        for _ in 0..arity {
            b.output(v);
        }
    }
    let d = b.build()?;
    Ok(evaluate_capped(&d, usize::MAX).expect("no cap"))
}
