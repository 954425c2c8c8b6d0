//! The two interpretation functors between ΔZX and ZH.
//!
//! Both translate generator by generator and keep the topology: every vertex
//! is replaced by a small gadget whose boundary lists the vertex legs.

use zh_diagram::GeneratorKind::{self, HBox, HadamardBox, Star, ZSpider};
use zh_diagram::{tail, tip, Builder, NodeId, ZhDiagram};

use crate::kind::{DzxDiagram, DzxKind};

/// The ZH image ⟦d⟧_ZH of a ΔZX diagram.
///
/// Phase-0 green spiders, Hadamard gates and triangles map to their ZH
/// namesakes; a π phase becomes a unary H-box on the spider; a red spider is
/// the green spider with a Hadamard on every leg.
pub fn to_zh(d: &DzxDiagram) -> ZhDiagram {
    let mut out = d.map_kinds(|k| match k {
        DzxKind::Z(_) | DzxKind::X(_) => ZSpider,
        DzxKind::Hadamard => HadamardBox,
        DzxKind::Triangle => GeneratorKind::Triangle,
    });
    for (v, k) in d.vertices() {
        if let Some(g) = zh_gadget(*k, d.degree(v)) {
            out = out.replace_vertex(v, &g);
        }
    }
    out
}

fn zh_gadget(kind: DzxKind, arity: usize) -> Option<ZhDiagram> {
    let (red, pi) = match kind {
        DzxKind::Z(false) | DzxKind::Hadamard | DzxKind::Triangle => return None,
        DzxKind::Z(true) => (false, true),
        DzxKind::X(pi) => (true, pi),
    };
    let mut b = Builder::new();
    let z = b.add(ZSpider);
    if pi {
        let h = b.add(HBox);
        b.link(z, h);
    }
    for _ in 0..arity {
        if red {
            let h = b.add(HadamardBox);
            b.link(z, h);
            b.output(h);
        } else {
            b.output(z);
        }
    }
    Some(b.finish())
}

/// The ΔZX image ⟦d⟧_ΔZX of a ZH diagram.
///
/// Derived kinds are expanded first.  H-boxes of arity 0 or above 3 are then
/// decomposed with a fixed right comb of smaller boxes (peeling two legs at a
/// time into a 3-ary box), after which every generator has a direct image:
/// the star is the loop of a Hadamard gate and a triangle, the unary H-box the
/// π state, the binary one a Hadamard with a √2 scalar and the ternary one the
/// AND gate built from triangles followed by a Hadamard.
pub fn from_zh(d: &ZhDiagram) -> DzxDiagram {
    let mut e = d.expand_derived();
    loop {
        let big = e.vertices().any(|(v, k)| *k == HBox && { let a = e.degree(v); a == 0 || a > 3 });
        if !big {
            break;
        }
        e = e.substitute_vertices(|k, a| (*k == HBox && (a == 0 || a > 3)).then(|| decompose_h_box(a)));
    }
    let gadgets: Vec<(NodeId, DzxDiagram)> = e
        .vertices()
        .filter_map(|(v, k)| match (k, e.degree(v)) {
            (ZSpider, _) => None,
            (Star, _) => Some((v, inverse_sqrt2())),
            (HBox, 1) => Some((v, single(DzxKind::ZPI, 1))),
            (HBox, 2) => Some((v, with_sqrt2(single(DzxKind::Hadamard, 2)))),
            (HBox, 3) => Some((v, and_triangle())),
            (k, a) => unreachable!("{k} of arity {a} survives decomposition"),
        })
        .collect();
    let mut out = e.map_kinds(|_| DzxKind::Z0);
    for (v, g) in gadgets {
        out = out.replace_vertex(v, &g);
    }
    out
}

/// A ZH decomposition of an H-box of arity 0 or at least 4 into boxes of
/// smaller arity, read off the H-box fusion rule.
fn decompose_h_box(arity: usize) -> ZhDiagram {
    let mut b = Builder::new();
    b.add_many(Star, 2);
    if arity == 0 {
        let (h1, h2, h3) = (b.add(HBox), b.add(HBox), b.add(HBox));
        b.link(h1, h2);
        b.link(h2, h3);
        return b.finish();
    }
    let (big, mid, small) = (b.add(HBox), b.add(HBox), b.add(HBox));
    b.link(big, mid);
    b.link(mid, small);
    for _ in 0..arity - 2 {
        b.output(big);
    }
    b.output(small);
    b.output(small);
    b.finish()
}

fn single(kind: DzxKind, legs: usize) -> DzxDiagram {
    let mut b = Builder::new();
    let v = b.add(kind);
    for _ in 0..legs {
        b.output(v);
    }
    b.finish()
}

/// The scalar √2: a green and a red unary spider joined.
pub fn sqrt2() -> DzxDiagram {
    let mut b = Builder::new();
    let (z, x) = (b.add(DzxKind::Z0), b.add(DzxKind::X0));
    b.link(z, x);
    b.finish()
}

/// The scalar 1/√2: a Hadamard gate closed into a loop through a triangle.
pub fn inverse_sqrt2() -> DzxDiagram {
    let mut b = Builder::new();
    let (h, t) = (b.add(DzxKind::Hadamard), b.add(DzxKind::Triangle));
    b.link(h, tail(t));
    b.link(h, tip(t));
    b.finish()
}

fn with_sqrt2(d: DzxDiagram) -> DzxDiagram {
    d.tensor(&sqrt2())
}

/// The 3-ary H-box: the triangles on the first two legs meet in a green
/// spider, the inverse triangle (a triangle between π spiders) turns the
/// result into the AND of the two legs, and a Hadamard with a √2 scalar
/// takes it to the third leg.
fn and_triangle() -> DzxDiagram {
    let mut b = Builder::new();
    let (t1, t2, t3) = (b.add(DzxKind::Triangle), b.add(DzxKind::Triangle), b.add(DzxKind::Triangle));
    let m = b.add(DzxKind::Z0);
    let (n1, n2) = (b.add(DzxKind::ZPI), b.add(DzxKind::ZPI));
    let h = b.add(DzxKind::Hadamard);
    b.output(tail(t1));
    b.output(tail(t2));
    b.link(tip(t1), m);
    b.link(tip(t2), m);
    b.link(m, n1);
    b.link(n1, tail(t3));
    b.link(tip(t3), n2);
    b.link(n2, h);
    b.output(h);
    with_sqrt2(b.finish())
}
