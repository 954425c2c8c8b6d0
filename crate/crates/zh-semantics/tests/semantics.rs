//! The evaluator against an independent brute-force oracle, plus the
//! algebraic properties of the interpretation.

use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use zh_diagram::random::{random_diagram, random_relabel, Shape, ZhSampler};
use zh_diagram::{tail, tip, Builder, End, Generator, GeneratorKind, GeneratorKind::*, ZhDiagram};
use zh_semantics::*;

/// Direct tensor formula for each generator, read off its matrix definition.
fn oracle_entry(kind: GeneratorKind, bits: &[u8]) -> RingValue {
    let one = RingValue::ONE;
    let zero = RingValue::ZERO;
    let all = |v: u8| bits.iter().all(|&b| b == v);
    match kind {
        ZSpider => RingValue::int(i128::from(all(0)) + i128::from(all(1))),
        HBox => {
            if all(1) {
                -one
            } else {
                one
            }
        }
        Star => RingValue::inv_sqrt2(),
        XSpider => {
            if bits.iter().map(|&b| b as u32).sum::<u32>() % 2 == 0 {
                one
            } else {
                zero
            }
        }
        NotDot => {
            if bits[0] != bits[1] {
                one
            } else {
                zero
            }
        }
        NegateDot => match (bits[0], bits[1]) {
            (0, 0) => one,
            (1, 1) => -one,
            _ => zero,
        },
        // Port 0 = input, port 1 = output; matrix [[1,1],[0,1]] (rows = output).
        Triangle => {
            if bits[0] == 0 && bits[1] == 1 {
                zero
            } else {
                one
            }
        }
        TriangleTransposed => {
            if bits[1] == 0 && bits[0] == 1 {
                zero
            } else {
                one
            }
        }
        HadamardBox => {
            let s = RingValue::inv_sqrt2();
            if bits[0] == 1 && bits[1] == 1 {
                -s
            } else {
                s
            }
        }
    }
}

/// Sums over every assignment of a bit to every edge.
fn brute_force(d: &ZhDiagram) -> SemanticMatrix {
    let edges = d.edges();
    let ne = edges.len();
    let legs = vertex_legs(d);
    let open = open_edges(d);
    let (m, n) = (d.outputs().len(), d.inputs().len());
    let mut entries = vec![RingValue::ZERO; 1 << (m + n)];
    for assign in 0u64..(1u64 << ne) {
        let bit = |e: usize| ((assign >> e) & 1) as u8;
        let mut prod = RingValue::ONE;
        for (v, k) in d.vertices() {
            let bits: Vec<u8> = legs[&v].iter().map(|&e| bit(e)).collect();
            prod = prod * oracle_entry(*k, &bits);
            if prod.is_zero() {
                break;
            }
        }
        if prod.is_zero() {
            continue;
        }
        let idx = open.iter().fold(0usize, |acc, &e| (acc << 1) | bit(e) as usize);
        entries[idx] = entries[idx] + prod;
    }
    let loops = RingValue::int(1i128 << d.loops());
    SemanticMatrix::new(m, n, entries).scale(loops)
}

fn sample(rng: &mut StdRng, derived: bool, max_vertices: usize, max_arity: usize) -> ZhDiagram {
    loop {
        let d = random_diagram(rng, &ZhSampler { derived, max_arity }, Shape { max_vertices, max_open: 5 });
        if d.edges().len() <= 14 {
            return d;
        }
    }
}

fn on_wire(kind: GeneratorKind) -> ZhDiagram {
    let mut b = Builder::new();
    let v = b.add(kind);
    if kind.oriented() {
        b.input(tail(v));
        b.output(tip(v));
    } else {
        b.input(v);
        b.output(v);
    }
    b.finish()
}

fn ints(rows: &[&[i64]]) -> SemanticMatrix {
    SemanticMatrix::from_int_rows(rows)
}

#[test]
fn two_ary_h_box_tensor() {
    let t = generator_tensor(HBox, 2).unwrap();
    assert_eq!(t.entries(), ints(&[&[1], &[1], &[1], &[-1]]).entries());
}

#[test]
fn star_is_inverse_root_two() {
    assert_eq!(generator_tensor(Star, 0).unwrap(), SemanticMatrix::scalar(RingValue::inv_sqrt2()));
    assert!(generator_tensor(Star, 1).is_err());
    assert!(generator_tensor(Triangle, 3).is_err());
}

#[test]
fn three_legged_grey_spider_is_xor() {
    let mut b = Builder::new();
    let x = b.add(XSpider);
    b.input(x);
    b.input(x);
    b.output(x);
    let m = evaluate(&b.finish()).unwrap();
    assert_eq!(m, ints(&[&[1, 0, 0, 1], &[0, 1, 1, 0]]));
}

#[test]
fn identity_wire_is_the_identity_matrix() {
    let mut b = Builder::<GeneratorKind>::new();
    b.wire();
    assert_eq!(evaluate(&b.finish()).unwrap(), SemanticMatrix::identity(1));
}

#[test]
fn closed_loop_is_two() {
    let mut b = Builder::<GeneratorKind>::new();
    b.cup();
    let cup = b.finish();
    let mut b = Builder::<GeneratorKind>::new();
    b.cap();
    let loop_ = cup.compose(&b.finish()).unwrap();
    assert_eq!(evaluate(&loop_).unwrap(), SemanticMatrix::scalar(RingValue::int(2)));
}

#[test]
fn ccz_gadget_is_diagonal() {
    let mut b = Builder::new();
    let h = b.add(HBox);
    for _ in 0..3 {
        let z = b.add(ZSpider);
        b.link(z, h);
        b.input(z);
        b.output(z);
    }
    let d = b.finish();
    let m = evaluate(&d).unwrap();
    let expected = SemanticMatrix::from_fn(3, 3, |r, c| {
        if r != c {
            RingValue::ZERO
        } else if r == 7 {
            RingValue::int(-1)
        } else {
            RingValue::ONE
        }
    });
    assert_eq!(m, expected);
}

#[test]
fn hadamard_squared_is_identity() {
    let h = on_wire(HadamardBox);
    assert_eq!(evaluate(&h.compose(&h).unwrap()).unwrap(), SemanticMatrix::identity(1));
    let s = RingValue::inv_sqrt2();
    assert_eq!(evaluate(&h).unwrap(), SemanticMatrix::new(1, 1, vec![s, s, s, -s]));
}

#[test]
fn not_dot_is_the_not_gate() {
    assert_eq!(evaluate(&on_wire(NotDot)).unwrap(), ints(&[&[0, 1], &[1, 0]]));
    assert_eq!(evaluate(&on_wire(NotDot).expand_derived()).unwrap(), ints(&[&[0, 1], &[1, 0]]));
}

#[test]
fn derived_generators_match_their_matrices() {
    assert_eq!(evaluate(&on_wire(XSpider).expand_derived()).unwrap(), SemanticMatrix::identity(1));
    assert_eq!(evaluate(&on_wire(NegateDot)).unwrap(), ints(&[&[1, 0], &[0, -1]]));
    assert_eq!(evaluate(&on_wire(Triangle)).unwrap(), ints(&[&[1, 1], &[0, 1]]));
    assert_eq!(evaluate(&on_wire(TriangleTransposed)).unwrap(), ints(&[&[1, 0], &[1, 1]]));
}

#[test]
fn two_stars_make_a_half() {
    let mut b = Builder::new();
    b.add(Star);
    b.add(Star);
    assert_eq!(evaluate(&b.finish()).unwrap(), SemanticMatrix::scalar(RingValue::new(1, 0, 1)));
}

#[test]
fn snake_is_the_identity() {
    // (wire ⊗ cup) followed by (cap ⊗ wire).
    let mut b = Builder::<GeneratorKind>::new();
    b.wire();
    b.cup();
    let left = b.finish();
    let mut b = Builder::<GeneratorKind>::new();
    b.cap();
    b.wire();
    let right = b.finish();
    let bent = left.compose(&right).unwrap();
    assert_eq!(evaluate(&bent).unwrap(), SemanticMatrix::identity(1));
}

#[test]
fn wire_cap_is_enforced() {
    let mut b = Builder::<GeneratorKind>::new();
    for _ in 0..8 {
        b.wire();
    }
    let d = b.finish();
    assert_eq!(evaluate(&d).unwrap_err(), EvalError::TooManyOpenWires { wires: 16, cap: 14 });
    assert!(evaluate_capped(&d, 16).is_ok());
}

#[test]
fn up_to_scalar_comparisons() {
    let m = ints(&[&[1, 2], &[0, -1]]);
    assert_eq!(matrices_equal_up_to_nonzero_scalar(&m, &m).unwrap(), Some(RingValue::ONE));
    let twice = m.scale(RingValue::int(2));
    assert!(!matrices_equal(&m, &twice).unwrap());
    assert_eq!(matrices_equal_up_to_nonzero_scalar(&twice, &m).unwrap(), Some(RingValue::int(2)));
    let z = SemanticMatrix::identity(1).scale(RingValue::ZERO);
    assert_eq!(matrices_equal_up_to_nonzero_scalar(&z, &z).unwrap(), Some(RingValue::ONE));
    assert_eq!(matrices_equal_up_to_nonzero_scalar(&z, &m).unwrap(), None);
    assert!(matrices_equal(&m, &SemanticMatrix::identity(2)).is_err());
    assert!(m.proportional(&m.scale(RingValue::int(3))).unwrap());
}

#[test]
fn evaluator_agrees_with_brute_force() {
    let mut rng = StdRng::seed_from_u64(101);
    for _ in 0..300 {
        let d = sample(&mut rng, true, 6, 3);
        assert_eq!(evaluate(&d).unwrap(), brute_force(&d), "{}", d.to_json());
    }
}

#[test]
fn expansion_preserves_semantics() {
    let mut rng = StdRng::seed_from_u64(103);
    let mut tested = 0;
    while tested < 300 {
        let d = sample(&mut rng, true, 6, 3);
        if d.is_primitive() {
            continue;
        }
        tested += 1;
        assert_eq!(brute_force(&d.expand_derived()), brute_force(&d), "{}", d.to_json());
    }
}

fn with_io(rng: &mut StdRng, n_in: usize, n_out: usize) -> ZhDiagram {
    loop {
        let d = sample(rng, true, 5, 3);
        if d.inputs().len() + d.outputs().len() == n_in + n_out {
            return d.with_split(n_in);
        }
    }
}

#[test]
fn evaluation_is_a_monoidal_functor() {
    let mut rng = StdRng::seed_from_u64(107);
    for _ in 0..300 {
        let (i, k, o) = (rng.gen_range(0..3), rng.gen_range(0..3), rng.gen_range(0..3));
        let a = with_io(&mut rng, i, k);
        let b = with_io(&mut rng, k, o);
        let seq = evaluate(&a.compose(&b).unwrap()).unwrap();
        assert_eq!(seq, evaluate(&b).unwrap().matmul(&evaluate(&a).unwrap()).unwrap());
        let par = evaluate(&a.tensor(&b)).unwrap();
        assert_eq!(par, evaluate(&a).unwrap().kron(&evaluate(&b).unwrap()));
    }
}

#[test]
fn evaluation_is_invariant_under_relabelling() {
    let mut rng = StdRng::seed_from_u64(109);
    for _ in 0..500 {
        let d = sample(&mut rng, true, 10, 4);
        let r = random_relabel(&d, &mut rng);
        assert_eq!(evaluate(&d).unwrap(), evaluate(&r).unwrap());
    }
}

#[test]
fn entries_stay_in_the_ring() {
    // Every entry is (a + b√2)/2^k with normalised representation.
    let mut rng = StdRng::seed_from_u64(113);
    for _ in 0..100 {
        let d = sample(&mut rng, true, 8, 4);
        for e in evaluate(&d).unwrap().entries() {
            assert!(e.k() == 0 || e.a() % 2 != 0 || e.b() % 2 != 0);
        }
    }
}

#[test]
fn leg_end_order_is_irrelevant_for_symmetric_kinds() {
    let mut b = Builder::new();
    let h = b.add(HBox);
    let z = b.add(ZSpider);
    b.link(h, z);
    b.link(End::Leg(z, 0), End::Leg(h, 0));
    b.output(h);
    let d = b.finish();
    assert_eq!(evaluate(&d).unwrap(), brute_force(&d));
}

fn ring_value() -> impl Strategy<Value = RingValue> {
    (-50i128..50, -50i128..50, 0u32..6).prop_map(|(a, b, k)| RingValue::new(a, b, k))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]
    #[test]
    fn ring_laws(x in ring_value(), y in ring_value(), z in ring_value()) {
        prop_assert_eq!((x + y) + z, x + (y + z));
        prop_assert_eq!((x * y) * z, x * (y * z));
        prop_assert_eq!(x + y, y + x);
        prop_assert_eq!(x * y, y * x);
        prop_assert_eq!(x * (y + z), x * y + x * z);
        prop_assert_eq!(x + (-x), RingValue::ZERO);
        prop_assert_eq!(x * RingValue::ONE, x);
        prop_assert!(ring_eq(ring_add(x, ring_neg(y)), x - y));
        prop_assert_eq!(ring_mul(x, y), x * y);
        if !y.is_zero() {
            if let Some(q) = (x * y).checked_div(&y) {
                prop_assert_eq!(q, x);
            } else {
                prop_assert!(false, "product divided by a factor must stay in the ring");
            }
        }
    }
}

/// Every H-box replaced by white states on its legs; stars sent to 1.
struct WhiteDotBoxes;

impl Interpretation for WhiteDotBoxes {
    fn z_spider(&self, _arity: usize) -> Option<SemanticMatrix> {
        None
    }
    fn h_box(&self, arity: usize) -> Option<SemanticMatrix> {
        Some(SemanticMatrix::from_fn(arity, 0, |_, _| RingValue::ONE))
    }
    fn star(&self) -> RingValue {
        RingValue::ONE
    }
}

/// The standard interpretation, but with derived generators given directly
/// by their matrices instead of their expansions.
struct DirectDerived;

impl Interpretation for DirectDerived {
    fn z_spider(&self, _arity: usize) -> Option<SemanticMatrix> {
        None
    }
    fn h_box(&self, _arity: usize) -> Option<SemanticMatrix> {
        None
    }
    fn star(&self) -> RingValue {
        RingValue::inv_sqrt2()
    }
    fn derived(&self, kind: GeneratorKind, arity: usize) -> Option<SemanticMatrix> {
        Some(generator_tensor(kind, arity).unwrap())
    }
}

#[test]
fn general_evaluator_agrees_with_brute_force() {
    let mut rng = StdRng::seed_from_u64(109);
    for _ in 0..200 {
        let d = sample(&mut rng, true, 6, 3);
        assert_eq!(evaluate_general(&d, &Standard, DEFAULT_WIRE_CAP).unwrap(), brute_force(&d), "{}", d.to_json());
    }
}

#[test]
fn general_and_integer_evaluators_agree_on_alternatives() {
    let mut rng = StdRng::seed_from_u64(113);
    for _ in 0..200 {
        let d = sample(&mut rng, true, 6, 3);
        for interp in [&WhiteDotBoxes as &dyn Interpretation, &DirectDerived] {
            let a = evaluate_with(&d, interp, DEFAULT_WIRE_CAP).unwrap();
            let b = evaluate_general(&d, interp, DEFAULT_WIRE_CAP).unwrap();
            assert_eq!(a, b, "{}", d.to_json());
        }
        assert_eq!(evaluate_general(&d, &DirectDerived, DEFAULT_WIRE_CAP).unwrap(), evaluate(&d).unwrap());
    }
}

#[test]
fn general_evaluator_accepts_mixed_ring_entries() {
    // The state |0⟩ + (√2 − 1)|1⟩ on a white spider's legs is fixed, up to
    // √2, by the 2-ary H-box.
    struct Eigen;
    impl Interpretation for Eigen {
        fn z_spider(&self, arity: usize) -> Option<SemanticMatrix> {
            let v = [RingValue::ONE, RingValue::sqrt2() - RingValue::ONE];
            Some(SemanticMatrix::from_fn(arity, 0, |r, _| (0..arity).fold(RingValue::ONE, |acc, i| acc * v[(r >> i) & 1])))
        }
        fn h_box(&self, _arity: usize) -> Option<SemanticMatrix> {
            None
        }
        fn star(&self) -> RingValue {
            RingValue::ONE
        }
    }
    let mut b = Builder::new();
    let (z, h) = (b.add(ZSpider), b.add(HBox));
    b.link(z, h);
    b.output(h);
    let through_box = evaluate_general(&b.finish(), &Eigen, 4).unwrap();
    let mut b = Builder::new();
    let z = b.add(ZSpider);
    b.output(z);
    let plain = evaluate_general(&b.finish(), &Eigen, 4).unwrap();
    assert_eq!(through_box, plain.scale(RingValue::sqrt2()));
}
