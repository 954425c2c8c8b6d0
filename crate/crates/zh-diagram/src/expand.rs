//! Defining expansions of the derived generators into Z-spiders, H-boxes and
//! stars.
//!
//! Each expansion is returned as a diagram whose outputs list the legs of the
//! derived vertex in leg order.  For the triangle the first output is the
//! input leg (port 0) and the second the output leg (port 1).

use crate::builder::Builder;
use crate::graph::Diagram;
use crate::kind::GeneratorKind::{self, *};

/// A ZH diagram.
pub type ZhDiagram = Diagram<GeneratorKind>;

/// The primitive expansion of a derived vertex of the given arity, or `None`
/// for primitive kinds.
pub fn expansion(kind: GeneratorKind, arity: usize) -> Option<ZhDiagram> {
    match kind {
        ZSpider | HBox | Star => None,
        XSpider => Some(x_spider(arity)),
        NotDot => Some(not_dot()),
        NegateDot => Some(negate_dot()),
        Triangle => Some(triangle(false)),
        TriangleTransposed => Some(triangle(true)),
        HadamardBox => Some(hadamard_box()),
    }
}

/// Grey spider: a white spider with a 2-ary H-box on every leg and two stars.
fn x_spider(arity: usize) -> ZhDiagram {
    let mut b = Builder::new();
    let z = b.add(ZSpider);
    for _ in 0..arity {
        let h = b.add(HBox);
        b.link(z, h);
        b.output(h);
    }
    b.add(Star);
    b.add(Star);
    b.finish()
}

/// NOT: a 3-legged white spider whose third leg carries a 1-ary H-box, with
/// 2-ary H-boxes on the two remaining legs and two stars.
fn not_dot() -> ZhDiagram {
    let mut b = Builder::new();
    let z = b.add(ZSpider);
    let h0 = b.add(HBox);
    let h1 = b.add(HBox);
    let k = b.add(HBox);
    b.link(z, h0);
    b.link(z, h1);
    b.link(z, k);
    b.output(h0);
    b.output(h1);
    b.add(Star);
    b.add(Star);
    b.finish()
}

/// Negate: a 3-legged white spider whose third leg carries a 1-ary H-box.
fn negate_dot() -> ZhDiagram {
    let mut b = Builder::new();
    let z = b.add(ZSpider);
    let k = b.add(HBox);
    b.link(z, k);
    b.output(z);
    b.output(z);
    b.finish()
}

/// Triangle: the output leg is a white spider copied into a 2-ary H-box and
/// into a 3-ary H-box that also meets the input leg; the two boxes share a
/// wire.  Two stars normalise the result to the matrix `[[1,1],[0,1]]`.
fn triangle(transposed: bool) -> ZhDiagram {
    let mut b = Builder::new();
    let z = b.add(ZSpider);
    let h2 = b.add(HBox);
    let h3 = b.add(HBox);
    b.link(z, h2);
    b.link(z, h3);
    b.link(h2, h3);
    b.add(Star);
    b.add(Star);
    if transposed {
        b.output(z);
        b.output(h3);
    } else {
        b.output(h3);
        b.output(z);
    }
    b.finish()
}

/// Normalised Hadamard: a 2-ary H-box and one star.
fn hadamard_box() -> ZhDiagram {
    let mut b = Builder::new();
    let h = b.add(HBox);
    b.output(h);
    b.output(h);
    b.add(Star);
    b.finish()
}

impl ZhDiagram {
    /// Replaces every derived vertex by its defining expansion.  The result
    /// contains only white spiders, H-boxes and stars.
    pub fn expand_derived(&self) -> ZhDiagram {
        self.substitute_vertices(|k, arity| expansion(*k, arity))
    }

    /// Whether the diagram uses only primitive kinds.
    pub fn is_primitive(&self) -> bool {
        !self.any_vertex(|k| k.is_derived())
    }

    /// Number of stars.
    pub fn star_count(&self) -> usize {
        self.vertices().filter(|(_, k)| **k == Star).count()
    }
}
