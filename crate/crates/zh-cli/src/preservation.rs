//! Randomised checks of the rewrite engine: rewrites preserve semantics, and
//! every rewrite can be undone at the site it created.

use std::collections::BTreeSet;
use std::sync::Arc;

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use serde::Serialize;
use zh_diagram::random::{random_diagram, Shape, ZhSampler};
use zh_diagram::{Diagram, Edge, End, NodeId, ZhDiagram};
use zh_rewrite::{apply, apply_traced, find_equation_matches, instantiate, Direction, Match, Params, RewriteRule, RuleName};
use zh_semantics::evaluate;

/// Open wires allowed in a sampled host.
const HOST_WIRES: usize = 12;

/// Embeds `pattern` in a random context: a random diagram is placed beside it
/// and some boundary points are joined pairwise.
fn host_around(pattern: &ZhDiagram, rng: &mut StdRng) -> ZhDiagram {
    let context = random_diagram(rng, &ZhSampler { derived: true, max_arity: 3 }, Shape { max_vertices: 4, max_open: 6 });
    let t = pattern.tensor(&context);
    let mut points = t.boundary();
    points.shuffle(rng);
    let joins = rng.gen_range(0..=points.len() / 2);
    let mut edges = t.edges().to_vec();
    let mut interior = Vec::new();
    for pair in points.chunks(2).take(joins) {
        if pair.len() == 2 {
            edges.push(Edge(End::Point(pair[0]), End::Point(pair[1])));
            interior.extend_from_slice(pair);
        }
    }
    let keep = |ps: &[NodeId]| ps.iter().copied().filter(|p| !interior.contains(p)).collect::<Vec<_>>();
    let vertices = t.vertices().map(|(v, k)| (v, *k)).collect();
    Diagram::from_parts(vertices, edges, keep(t.inputs()), keep(t.outputs()), t.loops(), &interior)
}

fn random_rule(rng: &mut StdRng) -> RewriteRule {
    let names: Vec<RuleName> = RuleName::ALL.iter().copied().filter(|n| *n != RuleName::ZS1_MULTI).collect();
    let name = *names.choose(rng).expect("rules exist");
    let (n, m) = match name.parameter_count() {
        0 => (0, 0),
        1 => (rng.gen_range(0..4), 0),
        _ => (rng.gen_range(0..3), rng.gen_range(0..3)),
    };
    instantiate(name, Params::new(n, m)).expect("parameters in range")
}

/// A host diagram containing a match of a random rule in a random direction.
fn sample_match(rng: &mut StdRng) -> (ZhDiagram, Match) {
    loop {
        let r = random_rule(rng);
        let dir = if rng.gen_bool(0.5) { Direction::L2R } else { Direction::R2L };
        let host = host_around(r.equation.sides(dir).0, rng);
        if host.inputs().len() + host.outputs().len() > HOST_WIRES {
            continue;
        }
        let ms = find_equation_matches(&host, &Arc::new(r.equation.clone()), dir, None);
        if let Some(found) = ms.choose(rng).cloned() {
            return (host, found);
        }
    }
}

/// Outcome of a randomised campaign.
#[derive(Clone, Debug, Default, Serialize)]
pub struct Campaign {
    pub checked: usize,
    /// Distinct rule instances exercised.
    pub rules: usize,
    pub failures: Vec<String>,
}

impl Campaign {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Applies `count` random matches and compares the semantics before and
/// after each rewrite.
pub fn random_apply_campaign(count: usize, seed: u64) -> Campaign {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut rules = BTreeSet::new();
    let mut failures = Vec::new();
    for _ in 0..count {
        let (host, found) = sample_match(&mut rng);
        rules.insert(found.equation.label.clone());
        let ok = match apply(&host, &found) {
            Ok(out) => out.validate().is_ok() && matches!((evaluate(&out), evaluate(&host)), (Ok(a), Ok(b)) if a == b),
            Err(_) => false,
        };
        if !ok {
            failures.push(format!("{} on {}", found.describe(), host.to_json()));
        }
    }
    Campaign { checked: count, rules: rules.len(), failures }
}

/// Applies `count` random matches and then the reversed rule at the created
/// site, requiring a result isomorphic to the host.  Rewrites that close a
/// bare wire into a free loop leave no site to reverse and are resampled.
pub fn apply_reverse_campaign(count: usize, seed: u64) -> Campaign {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut rules = BTreeSet::new();
    let mut failures = Vec::new();
    let mut checked = 0;
    while checked < count {
        let (host, found) = sample_match(&mut rng);
        let Ok(done) = apply_traced(&host, &found) else {
            failures.push(format!("{} could not be applied", found.describe()));
            checked += 1;
            continue;
        };
        if done.diagram.loops() > host.loops() {
            continue;
        }
        checked += 1;
        rules.insert(found.equation.label.clone());
        let site: BTreeSet<NodeId> = done.created.iter().copied().collect();
        let back = find_equation_matches(&done.diagram, &found.equation, found.direction.reversed(), Some(&site));
        let restored = back.iter().any(|m| apply(&done.diagram, m).is_ok_and(|d| d.is_isomorphic(&host)));
        if !restored {
            failures.push(format!("{} could not be undone on {}", found.describe(), host.to_json()));
        }
    }
    Campaign { checked, rules: rules.len(), failures }
}
