//! The registry of derived equations.
//!
//! Every lemma is a family of equations indexed by a parameter instance; the
//! two sides share their boundary exactly like rule equations do.  A lemma
//! also declares the rules and lemmas its derivation relies on, which gives
//! the dependency graph checked for cycles and for uses of `AND`.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use rayon::prelude::*;
use serde::Serialize;
use zh_diagram::{tail, tip, Builder, GeneratorKind, GeneratorKind::*, NodeId, ZhDiagram};
use zh_rewrite::{equation_holds, instantiate, Equation, Params, RuleName, SWEEP_WIRE_CAP};

/// Thematic grouping of the registry.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LemmaGroup {
    /// Scalar cancellations.
    Scalars,
    /// Grey spiders, NOT and negate dots behave as in the ZX-calculus.
    Spiders,
    /// Computational and Hadamard basis states copy.
    StateCopy,
    /// Commutation of Paulis through gates, the Hopf law and wire dedup.
    Commutation,
    /// Alternative triangle decompositions.
    Triangles,
    /// The triangle variant of the AND gate.
    AndVariant,
    /// Auxiliary equations used by the translation derivations.
    Helpers,
    /// Families indexed by a number of wires, used by the AND-free dedup route.
    Bang,
}

/// One registered lemma family.
#[derive(Clone)]
pub struct Lemma {
    pub id: &'static str,
    pub group: LemmaGroup,
    pub summary: &'static str,
    /// Parameter instances checked by semantic verification.
    pub instances: Vec<Params>,
    /// Rules and lemmas the derivation relies on.
    pub uses: &'static [&'static str],
    build: fn(Params) -> (ZhDiagram, ZhDiagram),
}

impl std::fmt::Debug for Lemma {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Lemma").field("id", &self.id).field("group", &self.group).finish()
    }
}

impl Lemma {
    /// The equation at one parameter instance.
    pub fn equation(&self, params: Params) -> Equation {
        let (lhs, rhs) = (self.build)(params);
        let label = if self.instances.len() == 1 && self.instances[0] == Params::default() {
            self.id.to_string()
        } else if params.m == 0 {
            format!("{}({})", self.id, params.n)
        } else {
            format!("{}({},{})", self.id, params.n, params.m)
        };
        Equation::new(label, lhs, rhs).expect("lemma sides share their boundary")
    }

    /// Whether `params` is one of the registered instances.
    pub fn has_instance(&self, params: Params) -> bool {
        self.instances.contains(&params)
    }

    /// Whether the declared dependencies name `AND` directly.
    pub fn uses_and_directly(&self) -> bool {
        self.uses.iter().any(|u| *u == RuleName::AND.as_str())
    }
}

/// Outcome of checking one lemma instance.
#[derive(Clone, Debug, Serialize)]
pub struct LemmaInstanceResult {
    pub label: String,
    pub params: Params,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

/// Outcome of checking every instance of one lemma.
#[derive(Clone, Debug, Serialize)]
pub struct LemmaReport {
    pub id: String,
    pub group: LemmaGroup,
    pub instances: Vec<LemmaInstanceResult>,
}

impl LemmaReport {
    pub fn passed(&self) -> bool {
        self.instances.iter().all(|i| i.holds)
    }
}

/// Exact semantic check of every instance of a lemma.
pub fn verify_semantic(lemma: &Lemma) -> LemmaReport {
    let instances = lemma
        .instances
        .par_iter()
        .map(|&params| {
            let eq = lemma.equation(params);
            let (holds, error) = match equation_holds(&eq, SWEEP_WIRE_CAP) {
                Ok(h) => (h, None),
                Err(e) => (false, Some(e.to_string())),
            };
            LemmaInstanceResult { label: eq.label, params, holds, error }
        })
        .collect();
    LemmaReport { id: lemma.id.to_string(), group: lemma.group, instances }
}

/// Checks the whole registry in parallel.
pub fn verify_all() -> Vec<LemmaReport> {
    registry().par_iter().map(verify_semantic).collect()
}

/// Looks a lemma up by id.
pub fn lemma(id: &str) -> Option<&'static Lemma> {
    registry().iter().find(|l| l.id == id)
}

/// Declared dependencies of every lemma, by id.
pub fn dependency_map() -> BTreeMap<&'static str, &'static [&'static str]> {
    registry().iter().map(|l| (l.id, l.uses)).collect()
}

/// Every registered lemma.
pub fn registry() -> &'static [Lemma] {
    static REGISTRY: OnceLock<Vec<Lemma>> = OnceLock::new();
    REGISTRY.get_or_init(build_registry)
}

fn fixed() -> Vec<Params> {
    vec![Params::default()]
}

fn range(lo: usize, hi: usize) -> Vec<Params> {
    (lo..=hi).map(|n| Params::new(n, 0)).collect()
}

fn grid(hi_n: usize, hi_m: usize) -> Vec<Params> {
    (0..=hi_n).flat_map(|n| (0..=hi_m).map(move |m| Params::new(n, m))).collect()
}

fn entry(
    id: &'static str,
    group: LemmaGroup,
    summary: &'static str,
    instances: Vec<Params>,
    uses: &'static [&'static str],
    build: fn(Params) -> (ZhDiagram, ZhDiagram),
) -> Lemma {
    Lemma { id, group, summary, instances, uses, build }
}

fn build_registry() -> Vec<Lemma> {
    use LemmaGroup::*;
    vec![
        entry("S_ZX", Scalars, "a white and a grey state cancel", fixed(), &["BA1"], |_| (pair(ZSpider, XSpider), empty())),
        entry("S_XH", Scalars, "a grey state and a unary H-box cancel", fixed(), &["BA2"], |_| (pair(XSpider, HBox), empty())),
        entry("S_STAR", Scalars, "two stars cancel the scalar 2", fixed(), &["BA2", "HS2", "X_DEF"], |_| s_star()),
        entry("S_HH", Scalars, "two nullary H-boxes cancel", fixed(), &["S_STAR", "HS1", "HS2", "BA2", "X_DEF", "M"], |_| s_hh()),
        entry("XS1", Spiders, "grey spiders fuse", grid(3, 3), &["X_DEF", "HS2", "ZS1", "S_STAR"], |p| xs1(p.n, p.m)),
        entry("XS2", Spiders, "the two-legged grey spider is a wire", fixed(), &["X_DEF", "HS2", "ZS2", "S_STAR"], |_| xs2()),
        entry("NEG_NEG", Spiders, "negate dots are involutive", fixed(), &["NEG_DEF", "ZS1", "M", "ZS2"], |_| involution(NegateDot)),
        entry("NOT_NOT", Spiders, "NOT dots are involutive", fixed(), &["NOT_DEF", "X_DEF", "XS1", "NEG_NEG", "HS2", "ZS1", "ZS2", "S_STAR"], |_| {
            involution(NotDot)
        }),
        entry("COLOUR", Spiders, "a grey spider with 2-ary H-boxes on its legs is white", range(1, 4), &["X_DEF", "HS2", "S_STAR"], |p| colour(p.n)),
        entry("H_NOT", Spiders, "a NOT dot turns into a negate dot through a 2-ary H-box", fixed(), &["NOT_DEF", "NEG_DEF", "X_DEF", "HS1", "HS2", "ZS1"], |_| {
            h_not()
        }),
        entry("NOT_Z", Spiders, "a NOT dot copies through a white spider", range(0, 3), &["NOT_DEF", "BA1", "ZS1", "XS1"], |p| pauli_copy(NotDot, ZSpider, p.n)),
        entry("NEG_X", Spiders, "a negate dot copies through a grey spider", range(0, 3), &["NEG_DEF", "BA2", "ZS1", "X_DEF"], |p| {
            pauli_copy(NegateDot, XSpider, p.n)
        }),
        entry("COPY_0Z", StateCopy, "the grey state copies through a white spider", range(0, 3), &["BA1"], |p| {
            state_copy(&[XSpider], ZSpider, p.n, &[XSpider])
        }),
        entry("COPY_PX", StateCopy, "the white state copies through a grey spider", range(0, 3), &["BA1"], |p| {
            state_copy(&[ZSpider], XSpider, p.n, &[ZSpider])
        }),
        entry("COPY_0H", StateCopy, "the grey state through an H-box gives white states", range(0, 3), &["BA2"], |p| {
            state_copy(&[XSpider], HBox, p.n, &[ZSpider])
        }),
        entry("COPY_MX", StateCopy, "the unary H-box copies through a grey spider", range(0, 3), &["BA2"], |p| {
            state_copy(&[HBox], XSpider, p.n, &[HBox])
        }),
        entry("COPY_1Z", StateCopy, "the flipped grey state copies through a white spider", range(0, 3), &["NOT_Z", "COPY_0Z"], |p| {
            state_copy(&[XSpider, NotDot], ZSpider, p.n, &[XSpider, NotDot])
        }),
        entry("COPY_NX", StateCopy, "the negated white state copies through a grey spider", range(0, 3), &["NEG_X", "COPY_PX"], |p| {
            state_copy(&[ZSpider, NegateDot], XSpider, p.n, &[ZSpider, NegateDot])
        }),
        entry("COPY_1H", StateCopy, "the flipped grey state into an H-box removes the leg", range(0, 3), &["O", "NOT_DEF", "BA1", "BA2", "ZS1", "HS1", "S_STAR"], |p| {
            copy_1h(p.n)
        }),
        entry("CZ_NOT", Commutation, "a NOT dot through a controlled-Z picks up a negate dot", fixed(), &["NOT_Z", "H_NOT", "ZS1"], |_| cz_not()),
        entry("NOT_NEG", Commutation, "NOT and negate dots anticommute", fixed(), &["NOT_DEF", "NEG_DEF", "HS1", "HS2", "M", "ZS1"], |_| not_neg()),
        entry("HOPF", Commutation, "a white and a grey spider joined twice disconnect", fixed(), &["BA1", "ZS1", "XS1", "S_ZX"], |_| hopf()),
        entry("DC", Commutation, "two wires between a white spider and an H-box are one", grid(2, 2), &["NOT_NOT", "NOT_DEF", "COLOUR", "HS1", "HS2", "BA2", "ZS1", "ZS2", "ORTHO_BOX", "S_STAR"], |p| {
            dedup(p.n, 1, p.m)
        }),
        entry("TRI_DEF2", Triangles, "the triangle through a NOT dot and a capped 3-ary H-box", fixed(), &["TRI_DEF", "NOT_DEF", "HS1", "ZS1"], |_| tri_def2()),
        entry("TRI_INV", Triangles, "the triangle conjugated by negate dots is its inverse", fixed(), &["TRI_DEF", "NEG_DEF", "HS1", "ZS1", "M"], |_| tri_inv()),
        entry("AND_PRIME", AndVariant, "the AND gate followed by a triangle", fixed(), &["AND", "TRI_INV", "NEG_NEG", "ZS1", "ZS2"], |_| {
            let r = instantiate(RuleName::AND_PRIME, Params::default()).expect("fixed rule");
            (r.equation.lhs, r.equation.rhs)
        }),
        entry("NEG_DIRECT", Helpers, "a negate dot is a NOT dot between 2-ary H-boxes", fixed(), &["H_NOT", "HS2", "S_STAR"], |_| neg_direct()),
        entry("TRI_Z", Helpers, "the triangle maps the flipped grey state to the white state", fixed(), &["TRI_DEF2", "COPY_1H", "NOT_NOT"], |_| tri_z()),
        entry("TRI_LOOP", Helpers, "a triangle closed through a 2-ary H-box is the empty diagram", fixed(), &["TRI_DEF2", "NOT_DEF", "HS2", "O"], |_| tri_loop()),
        entry("TW_LEMMA", Helpers, "a triangle between NOT dots is the transposed triangle", fixed(), &["TRI_DEF", "TRI_T_DEF", "NOT_NOT", "HS1"], |_| tw_lemma()),
        entry("ORTHO_BOX", Bang, "an H-box on both x and ¬x is trivial", range(0, 3), &["O", "O_MULTI", "ZS1"], |p| ortho_box(p.n)),
        entry("M_BANG", Bang, "two H-boxes on the same white spiders cancel", range(0, 3), &["M", "ZS1", "S_HH"], |p| m_bang(p.n)),
        entry("O_SPLIT", Bang, "a white spider between H-boxes on x and on ¬x splits", range(0, 3), &["O", "ZS1", "ZS2"], |p| o_split(p.n)),
        entry("O_MULTI", Bang, "orthogonal H-boxes joined by several wires disconnect", range(0, 3), &["O", "O_SPLIT", "ZS1"], |p| o_multi(p.n)),
        entry("NAND_TRI", Bang, "a capped H-box is a negated AND of triangles", range(0, 3), &["TRI_DEF2", "M_BANG", "O_MULTI", "ZS1"], |p| nand_tri(p.n)),
        entry("NFORM", Bang, "a white spider equals its normal form of capped H-boxes", range(0, 3), &["NAND_TRI", "O_SPLIT", "ZS1"], |p| nform(p.n)),
        entry("DC_BANG", Bang, "any number of parallel wires between a white spider and an H-box is one", range(0, 3), &["NFORM", "O_SPLIT", "O_MULTI", "M_BANG", "ZS1", "HS1"], |p| {
            dedup(1, p.n + 1, 1)
        }),
    ]
}

fn empty() -> ZhDiagram {
    ZhDiagram::empty()
}

/// Two one-legged generators joined to each other.
fn pair(a: GeneratorKind, c: GeneratorKind) -> ZhDiagram {
    let mut b = Builder::new();
    let (u, v) = (b.add(a), b.add(c));
    b.link(u, v);
    b.finish()
}

fn stars(b: &mut Builder<GeneratorKind>, count: usize) {
    b.add_many(Star, count);
}

/// A wire carrying a chain of two-legged generators from input to output.
fn chain(kinds: &[GeneratorKind]) -> ZhDiagram {
    let mut b = Builder::new();
    let mut prev = None;
    for &k in kinds {
        let v = b.add(k);
        match prev {
            None => {
                b.input(in_end(k, v));
            }
            Some(p) => b.link(p, in_end(k, v)),
        }
        prev = Some(out_end(k, v));
    }
    match prev {
        None => {
            b.wire();
        }
        Some(p) => {
            b.output(p);
        }
    }
    b.finish()
}

fn oriented(k: GeneratorKind) -> bool {
    matches!(k, Triangle | TriangleTransposed)
}

fn in_end(k: GeneratorKind, v: NodeId) -> zh_diagram::End {
    if oriented(k) {
        tail(v)
    } else {
        zh_diagram::End::Leg(v, 0)
    }
}

fn out_end(k: GeneratorKind, v: NodeId) -> zh_diagram::End {
    if oriented(k) {
        tip(v)
    } else {
        zh_diagram::End::Leg(v, 0)
    }
}

fn s_star() -> (ZhDiagram, ZhDiagram) {
    let mut b = Builder::new();
    b.add(ZSpider);
    stars(&mut b, 2);
    (b.finish(), empty())
}

fn s_hh() -> (ZhDiagram, ZhDiagram) {
    let mut b = Builder::new();
    b.add_many(HBox, 2);
    (b.finish(), empty())
}

fn xs1(n: usize, m: usize) -> (ZhDiagram, ZhDiagram) {
    let mut l = Builder::new();
    let (a, c) = (l.add(XSpider), l.add(XSpider));
    l.link(a, c);
    for _ in 0..n {
        l.input(a);
    }
    for _ in 0..m {
        l.output(c);
    }
    let mut r = Builder::new();
    let x = r.add(XSpider);
    for _ in 0..n {
        r.input(x);
    }
    for _ in 0..m {
        r.output(x);
    }
    (l.finish(), r.finish())
}

fn xs2() -> (ZhDiagram, ZhDiagram) {
    (chain(&[XSpider]), chain(&[]))
}

fn involution(k: GeneratorKind) -> (ZhDiagram, ZhDiagram) {
    (chain(&[k, k]), chain(&[]))
}

/// A grey spider with 2-ary H-boxes on all `n` legs, normalised by stars.
fn colour(n: usize) -> (ZhDiagram, ZhDiagram) {
    let mut l = Builder::new();
    let x = l.add(XSpider);
    for _ in 0..n {
        let h = l.add(HBox);
        l.link(x, h);
        l.output(h);
    }
    stars(&mut l, 2 * (n - 1));
    let mut r = Builder::new();
    let z = r.add(ZSpider);
    for _ in 0..n {
        r.output(z);
    }
    (l.finish(), r.finish())
}

fn h_not() -> (ZhDiagram, ZhDiagram) {
    (chain(&[NotDot, HBox]), chain(&[HBox, NegateDot]))
}

/// A Pauli dot on the input of a spider equals that dot on each of its `n`
/// outputs.
fn pauli_copy(dot: GeneratorKind, spider: GeneratorKind, n: usize) -> (ZhDiagram, ZhDiagram) {
    let mut l = Builder::new();
    let p = l.add(dot);
    let s = l.add(spider);
    l.input(p);
    l.link(p, s);
    for _ in 0..n {
        l.output(s);
    }
    let mut r = Builder::new();
    let s = r.add(spider);
    r.input(s);
    for _ in 0..n {
        let p = r.add(dot);
        r.link(s, p);
        r.output(p);
    }
    (l.finish(), r.finish())
}

/// Appends a state (a one-legged generator followed by two-legged ones) and
/// returns its free end.
fn state(b: &mut Builder<GeneratorKind>, kinds: &[GeneratorKind]) -> NodeId {
    let mut prev = b.add(kinds[0]);
    for &k in &kinds[1..] {
        let v = b.add(k);
        b.link(prev, v);
        prev = v;
    }
    prev
}

/// The state `input` plugged into a spider with `n` outputs equals `n`
/// copies of `copy`.
fn state_copy(input: &[GeneratorKind], spider: GeneratorKind, n: usize, copy: &[GeneratorKind]) -> (ZhDiagram, ZhDiagram) {
    let mut l = Builder::new();
    let end = state(&mut l, input);
    let s = l.add(spider);
    l.link(end, s);
    for _ in 0..n {
        l.output(s);
    }
    let mut r = Builder::new();
    for _ in 0..n {
        let end = state(&mut r, copy);
        r.output(end);
    }
    (l.finish(), r.finish())
}

fn copy_1h(n: usize) -> (ZhDiagram, ZhDiagram) {
    let mut l = Builder::new();
    let end = state(&mut l, &[XSpider, NotDot]);
    let h = l.add(HBox);
    l.link(end, h);
    for _ in 0..n {
        l.output(h);
    }
    let mut r = Builder::new();
    let h = r.add(HBox);
    for _ in 0..n {
        r.output(h);
    }
    (l.finish(), r.finish())
}

/// Controlled-Z on (control, target) built from two white spiders.
fn cz(b: &mut Builder<GeneratorKind>) -> (NodeId, NodeId) {
    let (z1, z2, h) = (b.add(ZSpider), b.add(ZSpider), b.add(HBox));
    b.link(z1, h);
    b.link(h, z2);
    (z1, z2)
}

fn cz_not() -> (ZhDiagram, ZhDiagram) {
    let mut l = Builder::new();
    let not = l.add(NotDot);
    let (z1, z2) = cz(&mut l);
    l.link(not, z1);
    l.input(not);
    l.input(z2);
    l.output(z1);
    l.output(z2);
    let mut r = Builder::new();
    let (z1, z2) = cz(&mut r);
    let (not, neg) = (r.add(NotDot), r.add(NegateDot));
    r.link(z1, not);
    r.link(z2, neg);
    r.input(z1);
    r.input(z2);
    r.output(not);
    r.output(neg);
    (l.finish(), r.finish())
}

fn not_neg() -> (ZhDiagram, ZhDiagram) {
    let l = chain(&[NotDot, NegateDot]);
    let mut r = Builder::new();
    let (neg, not) = (r.add(NegateDot), r.add(NotDot));
    r.link(neg, not);
    r.input(neg);
    r.output(not);
    r.add(HBox);
    (l, r.finish())
}

fn hopf() -> (ZhDiagram, ZhDiagram) {
    let mut l = Builder::new();
    let (z, x) = (l.add(ZSpider), l.add(XSpider));
    l.link_n(z, x, 2);
    l.input(z);
    l.output(x);
    let mut r = Builder::new();
    let (z, x) = (r.add(ZSpider), r.add(XSpider));
    r.input(z);
    r.output(x);
    (l.finish(), r.finish())
}

/// A white spider with `n` inputs joined by `k + 1` wires to an H-box with
/// `m` outputs, against the same with a single wire.
fn dedup(n: usize, wires: usize, m: usize) -> (ZhDiagram, ZhDiagram) {
    let build = |k: usize| {
        let mut b = Builder::new();
        let (z, h) = (b.add(ZSpider), b.add(HBox));
        b.link_n(z, h, k);
        for _ in 0..n {
            b.input(z);
        }
        for _ in 0..m {
            b.output(h);
        }
        b.finish()
    };
    (build(wires + 1), build(1))
}

/// A white spider capped NAND box: 1/2 · (3-ary … H-box with a white cap).
fn capped_box(b: &mut Builder<GeneratorKind>) -> NodeId {
    let (h, c) = (b.add(HBox), b.add(ZSpider));
    b.link(h, c);
    stars(b, 2);
    h
}

fn tri_def2() -> (ZhDiagram, ZhDiagram) {
    let l = chain(&[Triangle]);
    let mut r = Builder::new();
    let not = r.add(NotDot);
    let h = capped_box(&mut r);
    r.link(not, h);
    r.input(not);
    r.output(h);
    (l, r.finish())
}

fn tri_inv() -> (ZhDiagram, ZhDiagram) {
    (chain(&[NegateDot, Triangle, NegateDot, Triangle]), chain(&[]))
}

fn neg_direct() -> (ZhDiagram, ZhDiagram) {
    let l = chain(&[NegateDot]);
    let mut r = chain(&[HBox, NotDot, HBox]);
    let mut s = Builder::new();
    stars(&mut s, 2);
    r = r.tensor(&s.finish());
    (l, r)
}

fn tri_z() -> (ZhDiagram, ZhDiagram) {
    let mut l = Builder::new();
    let end = state(&mut l, &[XSpider, NotDot]);
    let t = l.add(Triangle);
    l.link(end, tail(t));
    l.output(tip(t));
    (l.finish(), single(ZSpider, 1))
}

fn tri_loop() -> (ZhDiagram, ZhDiagram) {
    let mut l = Builder::new();
    let (h, t) = (l.add(HBox), l.add(Triangle));
    l.link(h, tail(t));
    l.link(h, tip(t));
    (l.finish(), ZhDiagram::empty())
}

fn tw_lemma() -> (ZhDiagram, ZhDiagram) {
    (chain(&[NotDot, Triangle, NotDot]), chain(&[TriangleTransposed]))
}

fn single(kind: GeneratorKind, outputs: usize) -> ZhDiagram {
    let mut b = Builder::new();
    let v = b.add(kind);
    for _ in 0..outputs {
        b.output(v);
    }
    b.finish()
}

/// `k` white spiders, each with one output, all joined to two `k`-ary
/// H-boxes.
fn m_bang(k: usize) -> (ZhDiagram, ZhDiagram) {
    let mut l = Builder::new();
    let (ha, hb) = (l.add(HBox), l.add(HBox));
    for _ in 0..k {
        let z = l.add(ZSpider);
        l.link(z, ha);
        l.link(z, hb);
        l.output(z);
    }
    let mut r = Builder::new();
    for _ in 0..k {
        let z = r.add(ZSpider);
        r.output(z);
    }
    (l.finish(), r.finish())
}

/// An input copied to one H-box directly and to `k` H-boxes through NOT
/// dots; every box has one output and all are joined by one white spider.
/// The spider splits into one for the first box and one for the rest.
fn o_split(k: usize) -> (ZhDiagram, ZhDiagram) {
    let build = |split: bool| {
        let mut b = Builder::new();
        let x = b.add(ZSpider);
        b.input(x);
        let ha = b.add(HBox);
        b.link(x, ha);
        let hs: Vec<NodeId> = (0..k)
            .map(|_| {
                let not = b.add(NotDot);
                let h = b.add(HBox);
                b.link(x, not);
                b.link(not, h);
                h
            })
            .collect();
        if split {
            let (sa, sb) = (b.add(ZSpider), b.add(ZSpider));
            b.link(ha, sa);
            for &h in &hs {
                b.link(h, sb);
            }
        } else {
            let s = b.add(ZSpider);
            b.link(ha, s);
            for &h in &hs {
                b.link(h, s);
            }
            b.add(ZSpider);
        }
        b.output(ha);
        for &h in &hs {
            b.output(h);
        }
        b.finish()
    };
    (build(false), build(true))
}

/// The orthogonality rule with the two H-boxes joined by `k` wires; every
/// cut wire is capped on both sides.
fn o_multi(k: usize) -> (ZhDiagram, ZhDiagram) {
    let build = |joined: bool| {
        let mut b = Builder::new();
        let z = b.add(ZSpider);
        let not = b.add(NotDot);
        let (ha, hb) = (b.add(HBox), b.add(HBox));
        b.link(z, ha);
        b.link(z, not);
        b.link(not, hb);
        for _ in 0..k {
            if joined {
                b.link(ha, hb);
                b.add(ZSpider);
            } else {
                let (ca, cb) = (b.add(ZSpider), b.add(ZSpider));
                b.link(ha, ca);
                b.link(hb, cb);
            }
        }
        b.input(z);
        b.output(ha);
        b.output(hb);
        b.finish()
    };
    (build(true), build(false))
}

/// A capped H-box on `k` inputs (the negated AND, normalised) against
/// triangles from each input into a white spider with a unary H-box.
fn nand_tri(k: usize) -> (ZhDiagram, ZhDiagram) {
    let mut l = Builder::new();
    let h = capped_box(&mut l);
    for _ in 0..k {
        l.input(h);
    }
    let mut r = Builder::new();
    let (z, u) = (r.add(ZSpider), r.add(HBox));
    r.link(z, u);
    for _ in 0..k {
        let t = r.add(Triangle);
        r.link(tip(t), z);
        r.input(tail(t));
    }
    (l.finish(), r.finish())
}

/// A white spider with `k + 1` legs (the first an input, the rest outputs)
/// against its normal form: one white spider per leg and, for every
/// non-constant bit string, a capped H-box that vanishes exactly on that
/// string, attached through NOT dots where the string is 0.
fn nform(k: usize) -> (ZhDiagram, ZhDiagram) {
    let legs = k + 1;
    let mut l = Builder::new();
    let z = l.add(ZSpider);
    l.input(z);
    for _ in 0..k {
        l.output(z);
    }
    let mut r = Builder::new();
    let zs = r.add_many(ZSpider, legs);
    let full = (1usize << legs) - 1;
    for bits in 1..full {
        let h = capped_box(&mut r);
        for (i, &z) in zs.iter().enumerate() {
            if bits >> (legs - 1 - i) & 1 == 1 {
                r.link(z, h);
            } else {
                let not = r.add(NotDot);
                r.link(z, not);
                r.link(not, h);
            }
        }
    }
    r.input(zs[0]);
    for &z in &zs[1..] {
        r.output(z);
    }
    (l.finish(), r.finish())
}

/// An input copied to an H-box twice, once through a NOT dot; the box has
/// `n` further outputs.  The box disconnects, leaving white caps.
fn ortho_box(n: usize) -> (ZhDiagram, ZhDiagram) {
    let mut l = Builder::new();
    let (z, not, h) = (l.add(ZSpider), l.add(NotDot), l.add(HBox));
    l.link(z, h);
    l.link(z, not);
    l.link(not, h);
    l.input(z);
    for _ in 0..n {
        l.output(h);
    }
    let mut r = Builder::new();
    let z = r.add(ZSpider);
    r.input(z);
    for _ in 0..n {
        let c = r.add(ZSpider);
        r.output(c);
    }
    (l.finish(), r.finish())
}
