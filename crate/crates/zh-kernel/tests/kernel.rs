//! Lemma registry, script replay with its negative controls, and the
//! minimality audit.

use std::collections::BTreeSet;

use zh_diagram::{Builder, GeneratorKind::*, ZhDiagram};
use zh_kernel::*;
use zh_rewrite::{Direction, Params};
use zh_semantics::evaluate;

fn verified_kernel() -> Kernel {
    let mut k = Kernel::new();
    let reports = k.verify_all_lemmas();
    assert!(reports.iter().all(|r| r.passed()));
    k
}

fn script(target: &str, initial: &ZhDiagram, expected: &ZhDiagram, steps: Vec<Step>) -> ProofScript {
    ProofScript {
        name: "test".into(),
        target: target.into(),
        params: Params::default(),
        initial: Some(initial.to_json_value()),
        expected: Some(expected.to_json_value()),
        steps,
    }
}

fn step(rule: &str, direction: Direction, params: Params, anchors: Vec<u32>) -> Step {
    Step { rule: rule.into(), direction, params, anchors, boundary: None }
}

/// A white spider with two inputs and two outputs.
fn four_legged_spider() -> ZhDiagram {
    let mut b = Builder::new();
    let z = b.add(ZSpider);
    b.input(z);
    b.input(z);
    b.output(z);
    b.output(z);
    b.finish()
}

/// Two white spiders joined by one wire, each with one input or output.
fn two_spiders() -> ZhDiagram {
    let mut b = Builder::new();
    let (a, c) = (b.add(ZSpider), b.add(ZSpider));
    b.link(a, c);
    b.input(a);
    b.output(c);
    b.finish()
}

fn wire() -> ZhDiagram {
    let mut b = Builder::<zh_diagram::GeneratorKind>::new();
    b.wire();
    b.finish()
}

fn spider_on_wire() -> ZhDiagram {
    let mut b = Builder::new();
    let z = b.add(ZSpider);
    b.input(z);
    b.output(z);
    b.finish()
}

#[test]
fn every_lemma_instance_holds() {
    for report in verify_all() {
        for i in &report.instances {
            assert!(i.holds, "{} fails: {:?}", i.label, i.error);
        }
    }
}

#[test]
fn registry_covers_the_required_groups() {
    let groups: BTreeSet<LemmaGroup> = registry().iter().map(|l| l.group).collect();
    for g in [LemmaGroup::Scalars, LemmaGroup::Spiders, LemmaGroup::StateCopy, LemmaGroup::Commutation, LemmaGroup::Triangles, LemmaGroup::AndVariant, LemmaGroup::Helpers, LemmaGroup::Bang] {
        assert!(groups.contains(&g), "{g:?} is empty");
    }
    for id in ["NEG_DIRECT", "TRI_Z", "TRI_INV", "DC", "AND_PRIME"] {
        assert!(lemma(id).is_some(), "{id} missing");
    }
    for l in registry().iter().filter(|l| l.group == LemmaGroup::Bang) {
        let ns: BTreeSet<usize> = l.instances.iter().map(|p| p.n).collect();
        assert_eq!(ns, (0..=3).collect(), "{} bang instances", l.id);
    }
}

#[test]
fn lemma_statements_match_oracle_matrices() {
    // The triangle conjugated by negates is its inverse: both sides are the
    // identity matrix.
    let eq = lemma("TRI_INV").unwrap().equation(Params::default());
    assert_eq!(evaluate(&eq.lhs).unwrap(), zh_semantics::SemanticMatrix::identity(1));
    // Dedup at two copies: both sides agree.
    let eq = lemma("DC").unwrap().equation(Params::new(2, 2));
    assert_eq!(evaluate(&eq.lhs).unwrap(), evaluate(&eq.rhs).unwrap());
}

#[test]
fn declared_dependencies_form_a_dag() {
    let k = Kernel::new();
    for l in registry() {
        let deps = k.dependencies(l.id).unwrap_or_else(|e| panic!("{}: {e}", l.id));
        assert!(!deps.contains(l.id));
    }
    let map = dependency_map();
    for (id, uses) in &map {
        for u in *uses {
            assert!(map.contains_key(u) || u.parse::<zh_rewrite::RuleName>().is_ok(), "{id} uses unknown {u}");
        }
    }
}

#[test]
fn dedup_has_an_and_free_route_and_a_short_route_via_and() {
    let mut k = verified_kernel();
    let free = shipped_script("dc-noand").unwrap();
    let via = shipped_script("dc-and").unwrap();
    assert!(k.replay(&free, ReplayOptions::default()).unwrap().passed());
    assert!(k.replay(&via, ReplayOptions::default()).unwrap().passed());
    assert!(!k.script_uses(&free, "AND").unwrap());
    assert!(k.script_uses(&via, "AND").unwrap());
    assert!(via.steps.len() <= free.steps.len() + 1);
    k.add_script(free.clone());
    assert!(!k.dependencies("DC").unwrap().contains("AND"));
}

#[test]
fn every_shipped_script_replays_with_audit() {
    let k = verified_kernel();
    for s in shipped_scripts() {
        let report = k.replay(&s, ReplayOptions::default()).unwrap_or_else(|e| panic!("{}: {e}", s.name));
        assert!(report.passed(), "{}", s.name);
        assert_eq!(report.steps.len(), s.steps.len());
        assert!(report.steps.iter().all(|st| st.audit_ok == Some(true) && st.semantics_hash.is_some()));
    }
}

#[test]
fn scripts_round_trip_through_json() {
    for s in shipped_scripts() {
        assert_eq!(ProofScript::from_json(&s.to_json_pretty()).unwrap(), s);
    }
}

#[test]
fn one_step_fusion_script_succeeds() {
    let k = Kernel::new();
    let d = two_spiders();
    let anchors: Vec<u32> = d.vertices().map(|(v, _)| v).collect();
    let s = script("ZS1_TEST", &d, &spider_on_wire(), vec![step("ZS1", Direction::L2R, Params::new(1, 1), anchors)]);
    let report = k.replay(&s, ReplayOptions::default()).unwrap();
    assert!(report.passed());
    assert_eq!(report.uses, BTreeSet::from(["ZS1".to_string()]));
}

#[test]
fn ambiguous_selector_is_rejected() {
    let k = Kernel::new();
    let d = four_legged_spider();
    let z = d.vertices().next().unwrap().0;
    let s = script("SPLIT", &d, &d, vec![step("ZS1", Direction::R2L, Params::new(2, 2), vec![z])]);
    assert!(matches!(k.replay(&s, ReplayOptions::default()), Err(ReplayError::AmbiguousSelector { step: 0, .. })));
}

#[test]
fn selector_without_a_match_is_rejected() {
    let k = Kernel::new();
    let d = two_spiders();
    let s = script("NONE", &d, &spider_on_wire(), vec![step("ZS1", Direction::L2R, Params::new(1, 1), vec![990, 991])]);
    assert!(matches!(k.replay(&s, ReplayOptions::default()), Err(ReplayError::NoMatch { step: 0, .. })));
}

#[test]
fn wrong_final_diagram_is_rejected() {
    let k = Kernel::new();
    let d = two_spiders();
    let anchors: Vec<u32> = d.vertices().map(|(v, _)| v).collect();
    let s = script("MISMATCH", &d, &wire(), vec![step("ZS1", Direction::L2R, Params::new(1, 1), anchors)]);
    assert!(matches!(k.replay(&s, ReplayOptions::default()), Err(ReplayError::FinalMismatch)));
}

#[test]
fn circular_reasoning_is_rejected() {
    let k = verified_kernel();
    let mut s = shipped_script("s-star").unwrap();
    let eq = lemma("S_STAR").unwrap().equation(Params::default());
    let anchors: Vec<u32> = eq.lhs.vertices().map(|(v, _)| v).collect();
    s.steps = vec![step("S_STAR", Direction::L2R, Params::default(), anchors)];
    assert!(matches!(k.replay(&s, ReplayOptions::default()), Err(ReplayError::CyclicDependency { .. })));

    // S_HH relies on S_STAR, so a script for S_STAR may not use S_HH.
    let eq = lemma("S_HH").unwrap().equation(Params::default());
    let anchors: Vec<u32> = eq.lhs.vertices().map(|(v, _)| v).collect();
    s.initial = Some(eq.lhs.to_json_value());
    s.expected = Some(eq.rhs.to_json_value());
    s.steps = vec![step("S_HH", Direction::L2R, Params::default(), anchors)];
    assert!(matches!(k.replay(&s, ReplayOptions::default()), Err(ReplayError::CyclicDependency { .. })));
}

#[test]
fn registered_scripts_make_cycles_visible() {
    let mut k = verified_kernel();
    // Pretend S_STAR was derived with S_HH: S_HH → S_STAR → S_HH.
    let mut s = shipped_script("s-star").unwrap();
    s.steps[0].rule = "S_HH".into();
    k.add_script(s);
    assert!(matches!(k.dependencies("S_HH"), Err(ReplayError::CyclicDependency { .. })));
}

#[test]
fn unverified_lemmas_cannot_be_used() {
    let k = Kernel::new();
    let s = shipped_script("iv").unwrap();
    assert!(matches!(k.replay(&s, ReplayOptions::default()), Err(ReplayError::UnverifiedLemma { .. })));
    let mut k = Kernel::new();
    assert!(k.verify_lemma("TRI_LOOP").unwrap().passed());
    assert!(k.is_verified("TRI_LOOP"));
}

#[test]
fn replay_without_audit_skips_semantics() {
    let k = verified_kernel();
    let report = k.replay(&shipped_script("t0").unwrap(), ReplayOptions { audit: false }).unwrap();
    assert!(report.passed());
    assert!(report.steps.iter().all(|s| s.audit_ok.is_none()));
}

#[test]
fn standard_semantics_satisfy_every_audited_axiom() {
    let r = audit_minimality(Alternative::Standard, 3);
    assert!(r.failing_families().is_empty());
    assert!(r.matches_claim());
    let families: BTreeSet<String> = r.rows.iter().map(|row| row.rule.clone()).collect();
    assert!(families.contains("AND_PRIME") && !families.contains("AND"));
}

#[test]
fn disconnected_h_boxes_need_hs2_or_ba1() {
    let r = audit_minimality(Alternative::DisconnectedH, 3);
    assert_eq!(r.failing_families(), BTreeSet::from(["HS2".to_string(), "BA1".to_string()]));
}

#[test]
fn negated_h_boxes_need_ba2_or_o() {
    let r = audit_minimality(Alternative::NegatedH, 3);
    assert_eq!(r.failing_families(), BTreeSet::from(["BA2".to_string(), "O".to_string()]));
}

#[test]
fn disconnected_spiders_break_zs2_and_ba2() {
    let failing = audit_minimality(Alternative::DisconnectedZ, 3).failing_families();
    assert!(failing.contains("ZS2") && failing.contains("BA2"));
    for kept in ["ZS1", "HS1", "HS2", "BA1", "M", "Z"] {
        assert!(!failing.contains(kept), "{kept} should hold");
    }
}

#[test]
fn interpretation_names_parse() {
    for a in Alternative::ALL {
        assert_eq!(a.as_str().parse::<Alternative>().unwrap(), a);
    }
    assert!("bogus".parse::<Alternative>().is_err());
}
