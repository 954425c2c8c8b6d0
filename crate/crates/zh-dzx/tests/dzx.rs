//! ΔZX semantics against hand-written matrices, the rule sweeps, and the
//! translations in both directions.

use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;
use zh_diagram::random::{random_diagram, Shape, ZhSampler};
use zh_diagram::{tail, tip, Builder, GeneratorKind, ZhDiagram};
use zh_dzx::translate::{inverse_sqrt2, sqrt2};
use zh_dzx::*;
use zh_semantics::{evaluate, RingValue, SemanticMatrix};

fn gate(kind: DzxKind) -> DzxDiagram {
    let mut b = Builder::new();
    let v = b.add(kind);
    if kind == DzxKind::Triangle {
        b.input(tail(v));
        b.output(tip(v));
    } else {
        b.input(v);
        b.output(v);
    }
    b.finish()
}

fn state(kind: DzxKind) -> DzxDiagram {
    let mut b = Builder::new();
    let v = b.add(kind);
    b.output(v);
    b.finish()
}

fn ints(rows: &[&[i64]]) -> SemanticMatrix {
    SemanticMatrix::from_int_rows(rows)
}

#[test]
fn single_generators_have_their_textbook_matrices() {
    let cases: [(DzxKind, SemanticMatrix); 5] = [
        (DzxKind::Z0, ints(&[&[1, 0], &[0, 1]])),
        (DzxKind::ZPI, ints(&[&[1, 0], &[0, -1]])),
        (DzxKind::X0, ints(&[&[1, 0], &[0, 1]])),
        (DzxKind::XPI, ints(&[&[0, 1], &[1, 0]])),
        (DzxKind::Triangle, ints(&[&[1, 1], &[0, 1]])),
    ];
    for (kind, expected) in cases {
        assert_eq!(evaluate_dzx(&gate(kind)).unwrap(), expected, "{kind}");
    }
    let h = ints(&[&[1, 1], &[1, -1]]).scale(RingValue::inv_sqrt2());
    assert_eq!(evaluate_dzx(&gate(DzxKind::Hadamard)).unwrap(), h);
}

#[test]
fn spider_states_and_scalars() {
    // Red states are √2|0⟩ and √2|1⟩; green ones |0⟩ ± |1⟩.
    let r2 = RingValue::sqrt2();
    assert_eq!(evaluate_dzx(&state(DzxKind::X0)).unwrap(), SemanticMatrix::new(1, 0, vec![r2, RingValue::ZERO]));
    assert_eq!(evaluate_dzx(&state(DzxKind::XPI)).unwrap(), SemanticMatrix::new(1, 0, vec![RingValue::ZERO, r2]));
    assert_eq!(evaluate_dzx(&state(DzxKind::ZPI)).unwrap(), ints(&[&[1], &[-1]]));
    assert_eq!(evaluate_dzx(&sqrt2()).unwrap(), SemanticMatrix::scalar(r2));
    assert_eq!(evaluate_dzx(&inverse_sqrt2()).unwrap(), SemanticMatrix::scalar(RingValue::inv_sqrt2()));
    let mut b = Builder::<DzxKind>::new();
    b.add(DzxKind::ZPI);
    assert_eq!(evaluate_dzx(&b.finish()).unwrap(), SemanticMatrix::scalar(RingValue::ZERO));
}

#[test]
fn green_and_red_spiders_make_a_cnot() {
    let mut b = Builder::new();
    let (z, x) = (b.add(DzxKind::Z0), b.add(DzxKind::X0));
    b.link(z, x);
    b.input(z);
    b.input(x);
    b.output(z);
    b.output(x);
    let cnot = b.finish().tensor(&sqrt2());
    let expected = ints(&[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 0, 1], &[0, 0, 1, 0]]);
    assert_eq!(evaluate_dzx(&cnot).unwrap(), expected);
}

#[test]
fn every_rule_is_sound() {
    let results = dzx_soundness_sweep(4);
    for rule in DzxRule::ALL {
        assert!(results.iter().any(|r| r.rule == rule), "{rule} has no instance");
    }
    for r in &results {
        assert!(r.sound, "{} is unsound", r.label);
    }
}

#[test]
fn every_rule_survives_translation_to_zh() {
    for r in translated_rule_check(3) {
        assert!(r.sound, "{} differs after translation", r.label);
    }
}

#[test]
fn rule_names_round_trip() {
    for rule in DzxRule::ALL {
        assert_eq!(rule.as_str().parse::<DzxRule>().unwrap(), rule);
    }
    assert!("S3".parse::<DzxRule>().is_err());
}

#[test]
fn json_round_trip_keeps_phases() {
    let mut b = Builder::new();
    let (z, x, t) = (b.add(DzxKind::ZPI), b.add(DzxKind::X0), b.add(DzxKind::Triangle));
    b.link(z, tail(t));
    b.link(tip(t), x);
    b.input(z);
    b.output(x);
    let d = b.finish();
    let back = DzxDiagram::from_json(&d.to_json()).unwrap();
    assert!(back.is_isomorphic(&d));
    assert_eq!(evaluate_dzx(&back).unwrap(), evaluate_dzx(&d).unwrap());
}

#[test]
fn json_rejects_bad_phases() {
    let valid = r#"{"vertices":[{"id":0,"kind":"Zg","phase":1,"legs":0}],"edges":[],"inputs":[],"outputs":[]}"#;
    assert!(DzxDiagram::from_json(valid).is_ok());
    assert!(DzxDiagram::from_json(&valid.replace(r#""phase":1"#, r#""phase":2"#)).is_err());
    assert!(DzxDiagram::from_json(&valid.replace("Zg", "hadamard")).is_err());
}

fn zh_single(kind: GeneratorKind, legs: usize) -> ZhDiagram {
    let mut b = Builder::new();
    let v = b.add(kind);
    for _ in 0..legs {
        b.output(v);
    }
    b.finish()
}

#[test]
fn h_boxes_of_every_small_arity_translate() {
    for arity in 0..=5 {
        let d = zh_single(GeneratorKind::HBox, arity);
        let image = from_zh(&d);
        assert!(image.vertices().all(|(_, k)| matches!(k, DzxKind::Z(_) | DzxKind::X(_) | DzxKind::Hadamard | DzxKind::Triangle)));
        assert_eq!(evaluate_dzx(&image).unwrap(), evaluate(&d).unwrap(), "arity {arity}");
    }
}

#[test]
fn derived_zh_generators_translate() {
    for kind in [GeneratorKind::XSpider, GeneratorKind::NotDot, GeneratorKind::NegateDot, GeneratorKind::HadamardBox, GeneratorKind::Triangle, GeneratorKind::Star] {
        let legs = if kind == GeneratorKind::Star { 0 } else if kind == GeneratorKind::XSpider { 3 } else { 2 };
        let mut b = Builder::new();
        let v = b.add(kind);
        if kind == GeneratorKind::Triangle {
            b.input(tail(v));
            b.output(tip(v));
        } else {
            for _ in 0..legs {
                b.output(v);
            }
        }
        let d = b.finish();
        assert_eq!(evaluate_dzx(&from_zh(&d)).unwrap(), evaluate(&d).unwrap(), "{kind}");
    }
}

#[test]
fn functors_preserve_semantics_on_random_samples() {
    let report = check_functors(120, 120, Shape { max_vertices: 10, max_open: 8 }, 11);
    assert_eq!(report.dzx_samples, 120);
    assert!(report.passed(), "{:?}", report.failures.first());
}

#[test]
fn roundtrip_report_is_consistent() {
    let d = zh_single(GeneratorKind::HBox, 4);
    let r = roundtrip_check(&d).unwrap();
    assert!(r.equal);
    assert_eq!(r.original, r.roundtrip);
    assert!(r.image_vertices > 1);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn to_zh_preserves_semantics(seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let d = random_diagram(&mut rng, &DzxSampler { max_arity: 3 }, Shape { max_vertices: 6, max_open: 5 });
        prop_assert_eq!(evaluate_dzx(&d).unwrap(), evaluate(&to_zh(&d)).unwrap());
    }

    #[test]
    fn from_zh_preserves_semantics(seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let d = random_diagram(&mut rng, &ZhSampler { derived: true, max_arity: 4 }, Shape { max_vertices: 6, max_open: 5 });
        prop_assert_eq!(evaluate_dzx(&from_zh(&d)).unwrap(), evaluate(&d).unwrap());
    }
}
