//! The command set.  Each command reads its files, runs one module
//! operation and returns a [`Report`].

use std::fs;
use std::path::Path;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use serde_json::json;
use zh_diagram::ZhDiagram;
use zh_dzx::{check_functors, dzx_soundness_sweep, evaluate_dzx_capped, from_zh, roundtrip_check, to_zh, translated_rule_check, DzxDiagram};
use zh_kernel::{audit_minimality, verify_all, Alternative, Kernel, ProofScript, ReplayOptions};
use zh_rewrite::catalog::catalog;
use zh_rewrite::{sweep_all, RuleName};
use zh_semantics::{evaluate_capped, SemanticMatrix};

use crate::circuit::{compile_circuit, Circuit};
use crate::report::{Item, Report};

/// A diagram read from disk, by file extension: `.dzx.json` is ΔZX, `.qc` a
/// circuit compiled to ZH, anything else ZH JSON.
#[derive(Clone, Debug)]
pub enum Loaded {
    Zh(ZhDiagram),
    Dzx(DzxDiagram),
}

impl Loaded {
    pub fn evaluate(&self, cap: usize) -> Result<SemanticMatrix> {
        Ok(match self {
            Loaded::Zh(d) => evaluate_capped(d, cap)?,
            Loaded::Dzx(d) => evaluate_dzx_capped(d, cap)?,
        })
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

/// Reads a diagram or circuit file.
pub fn load(path: &Path) -> Result<Loaded> {
    let text = read(path)?;
    let name = path.file_name().and_then(|n| n.to_str()).unwrap_or_default();
    let ctx = || format!("in {}", path.display());
    if name.ends_with(".dzx.json") {
        Ok(Loaded::Dzx(DzxDiagram::from_json(&text).with_context(ctx)?))
    } else if name.ends_with(".qc") {
        Ok(Loaded::Zh(compile_circuit(&text.parse::<Circuit>().with_context(ctx)?)))
    } else {
        Ok(Loaded::Zh(ZhDiagram::from_json(&text).with_context(ctx)?))
    }
}

fn load_zh(path: &Path) -> Result<ZhDiagram> {
    match load(path)? {
        Loaded::Zh(d) => Ok(d),
        Loaded::Dzx(_) => bail!("{} is a ΔZX diagram; a ZH diagram is expected", path.display()),
    }
}

fn load_dzx(path: &Path) -> Result<DzxDiagram> {
    match load(path)? {
        Loaded::Dzx(d) => Ok(d),
        Loaded::Zh(_) => bail!("{} is not a ΔZX diagram (expected a .dzx.json file)", path.display()),
    }
}

fn write_or_text(report: Report, output: Option<&Path>, content: String) -> Result<Report> {
    match output {
        Some(p) => {
            fs::write(p, content + "\n").with_context(|| format!("cannot write {}", p.display()))?;
            Ok(report)
        }
        None => Ok(report.with_text(content)),
    }
}

/// `eval`: the exact matrix of a diagram or circuit.
pub fn eval(path: &Path, cap: usize, decimals: bool) -> Result<Report> {
    let start = Instant::now();
    let m = load(path)?.evaluate(cap)?;
    let mut text = format!("{} matrix:\n{}", m.shape(), m.render(false));
    if decimals {
        text.push_str("approximate decimals:\n");
        text.push_str(&m.render(true));
    }
    let item = Item::new(path.display().to_string(), true).with_detail(json!({ "shape": m.shape(), "matrix": m.to_json_value() }));
    Ok(Report::new("eval", vec![item], start.elapsed()).with_text(text))
}

/// `check-rules`: soundness of every rule instance with parameters up to
/// `max`, for the axioms or for every family.
pub fn check_rules(max: usize, all: bool) -> Report {
    let start = Instant::now();
    let families: &[RuleName] = if all { &RuleName::ALL } else { &RuleName::AXIOMS };
    let report = sweep_all(families, max, max);
    let items = report
        .results
        .into_iter()
        .map(|r| {
            let item = Item::new(r.label, r.holds);
            match r.error {
                Some(e) => item.with_message(e),
                None => item,
            }
        })
        .collect();
    Report::new("check-rules", items, start.elapsed())
}

/// `check-dzx-rules`: soundness of the ΔZX rules with spiders up to arity
/// `max`, directly and after translation to ZH.
pub fn check_dzx_rules(max: usize) -> Report {
    let start = Instant::now();
    let direct = dzx_soundness_sweep(max).into_iter().map(|r| Item::new(r.label, r.sound));
    let translated = translated_rule_check(max).into_iter().map(|r| Item::new(format!("{} in ZH", r.label), r.sound));
    Report::new("check-dzx-rules", direct.chain(translated).collect(), start.elapsed())
}

/// `verify-lemmas`: exact verification of every registered lemma.
pub fn verify_lemmas() -> Report {
    let start = Instant::now();
    let items = verify_all()
        .into_iter()
        .map(|r| {
            let failed: Vec<&str> = r.instances.iter().filter(|i| !i.holds).map(|i| i.label.as_str()).collect();
            let message = if failed.is_empty() { format!("{} instance(s)", r.instances.len()) } else { format!("fails at {}", failed.join(", ")) };
            Item::new(r.id.clone(), r.passed()).with_message(message).with_detail(json!({ "group": r.group, "instances": r.instances }))
        })
        .collect();
    Report::new("verify-lemmas", items, start.elapsed())
}

/// Which scripts `replay` runs.
pub enum ScriptSource<'a> {
    Files(&'a [std::path::PathBuf]),
    Shipped,
}

/// `replay`: replays proof scripts after verifying the lemma registry.
/// Every script is registered, so later scripts may not close a cycle.
pub fn replay(source: ScriptSource<'_>, audit: bool) -> Result<Report> {
    let start = Instant::now();
    let scripts = match source {
        ScriptSource::Shipped => zh_kernel::shipped_scripts(),
        ScriptSource::Files(paths) => paths.iter().map(|p| ProofScript::load(p).with_context(|| format!("in {}", p.display()))).collect::<Result<_>>()?,
    };
    let mut kernel = Kernel::new();
    let mut items: Vec<Item> = kernel.verify_all_lemmas().into_iter().filter(|r| !r.passed()).map(|r| Item::new(format!("lemma {}", r.id), false)).collect();
    for s in scripts {
        let name = format!("{} ⊢ {}", s.name, s.target);
        let item = match kernel.replay(&s, ReplayOptions { audit }) {
            Ok(r) => {
                let uses: Vec<&str> = r.uses.iter().map(String::as_str).collect();
                let message = format!("{} step(s), final isomorphic: {}, audit: {}, uses {}", r.steps.len(), r.final_isomorphic, if audit { r.audit_passed.to_string() } else { "skipped".into() }, uses.join(", "));
                Item::new(name, r.passed()).with_message(message).with_detail(serde_json::to_value(&r)?)
            }
            Err(e) => Item::new(name, false).with_message(e.to_string()),
        };
        let target = s.target.clone();
        kernel.add_script(s);
        let item = match kernel.dependencies(&target) {
            Ok(_) => item,
            Err(e) => Item { ok: false, message: Some(e.to_string()), ..item },
        };
        items.push(item);
    }
    Ok(Report::new("replay", items, start.elapsed()))
}

/// `to-dzx`: the ΔZX image of a ZH diagram, checked for equal semantics.
pub fn to_dzx(path: &Path, output: Option<&Path>, cap: usize) -> Result<Report> {
    let start = Instant::now();
    let d = load_zh(path)?;
    let image = from_zh(&d);
    let same = evaluate_capped(&d, cap)? == evaluate_dzx_capped(&image, cap)?;
    let item = Item::new("semantics preserved", same).with_message(format!("{} ΔZX vertices", image.vertex_count()));
    write_or_text(Report::new("to-dzx", vec![item], start.elapsed()), output, image.to_json_pretty())
}

/// `from-dzx`: the ZH image of a ΔZX diagram, checked for equal semantics.
pub fn from_dzx(path: &Path, output: Option<&Path>, cap: usize) -> Result<Report> {
    let start = Instant::now();
    let d = load_dzx(path)?;
    let image = to_zh(&d);
    let same = evaluate_dzx_capped(&d, cap)? == evaluate_capped(&image, cap)?;
    let item = Item::new("semantics preserved", same).with_message(format!("{} ZH vertices", image.vertex_count()));
    write_or_text(Report::new("from-dzx", vec![item], start.elapsed()), output, image.to_json_pretty())
}

/// `roundtrip`: ZH → ΔZX → ZH preserves the semantics of a diagram, or of
/// `samples` random diagrams when no file is given.
pub fn roundtrip(path: Option<&Path>, samples: usize, seed: u64) -> Result<Report> {
    let start = Instant::now();
    let items = match path {
        Some(p) => {
            let r = roundtrip_check(&load_zh(p)?)?;
            vec![Item::new(p.display().to_string(), r.equal).with_message(format!("{} vertices after the round trip", r.image_vertices)).with_detail(serde_json::to_value(&r)?)]
        }
        None => {
            let shape = zh_diagram::random::Shape { max_vertices: 10, max_open: 8 };
            let r = check_functors(samples, samples, shape, seed);
            let mut items: Vec<Item> = r.failures.iter().map(|f| Item::new(format!("{} sample {}", f.property, f.sample), false).with_message(f.message.clone()).with_detail(f.diagram.clone())).collect();
            if items.is_empty() {
                items.push(Item::new("random diagrams", true).with_message(format!("{} ΔZX and {} ZH samples, {} exact matrices", r.dzx_samples, r.zh_samples, r.matrices)));
            }
            items
        }
    };
    Ok(Report::new("roundtrip", items, start.elapsed()))
}

/// `compile`: a circuit file to a ZH diagram.
pub fn compile(path: &Path, output: Option<&Path>) -> Result<Report> {
    let start = Instant::now();
    let c: Circuit = read(path)?.parse().with_context(|| format!("in {}", path.display()))?;
    let d = compile_circuit(&c);
    let item = Item::new(path.display().to_string(), true).with_message(format!("{} qubit(s), {} gate(s), {} vertices", c.qubits(), c.gates().len(), d.vertex_count()));
    write_or_text(Report::new("compile", vec![item], start.elapsed()), output, d.to_json_pretty())
}

/// `equiv`: exact semantic equality of two diagrams or circuits, or equality
/// up to a nonzero scalar, which is then printed.
pub fn equiv(a: &Path, b: &Path, up_to_scalar: bool, cap: usize) -> Result<Report> {
    let start = Instant::now();
    let (ma, mb) = (load(a)?.evaluate(cap)?, load(b)?.evaluate(cap)?);
    let name = format!("{} ≡ {}", a.display(), b.display());
    let item = if ma.shape() != mb.shape() {
        Item::new(name, false).with_message(format!("shapes differ: {} vs {}", ma.shape(), mb.shape()))
    } else if ma == mb {
        Item::new(name, true).with_message("equal, scalar 1").with_detail(json!({ "scalar": zh_semantics::RingValue::ONE }))
    } else if up_to_scalar {
        match ma.scalar_factor(&mb)? {
            Some(s) => Item::new(name, true).with_message(format!("equal up to scalar {s}")).with_detail(json!({ "scalar": s })),
            None if ma.proportional(&mb)? => Item::new(name, true).with_message("equal up to a scalar outside Z[1/√2]"),
            None => Item::new(name, false).with_message("not proportional"),
        }
    } else {
        Item::new(name, false).with_message("matrices differ")
    };
    Ok(Report::new("equiv", vec![item], start.elapsed()))
}

/// `audit-minimality`: the satisfaction table of one or all shipped
/// interpretations; an item passes when exactly the claimed families fail.
pub fn audit(interpretation: Option<Alternative>, max: usize) -> Report {
    let start = Instant::now();
    let chosen: Vec<Alternative> = interpretation.map_or_else(|| Alternative::ALL.to_vec(), |a| vec![a]);
    let items = chosen
        .into_iter()
        .map(|a| {
            let r = audit_minimality(a, max);
            let fmt = |s: &std::collections::BTreeSet<String>| if s.is_empty() { "none".to_string() } else { s.iter().cloned().collect::<Vec<_>>().join(", ") };
            let message = format!("failing: {}; claimed: {}", fmt(&r.failing_families()), fmt(&r.expected_failures()));
            Item::new(a.as_str(), r.matches_claim()).with_message(message).with_detail(serde_json::to_value(&r).expect("reports serialise"))
        })
        .collect();
    Report::new("audit-minimality", items, start.elapsed())
}

/// `dump-rules`: the rule catalogue as JSON.
pub fn dump_rules(max: usize, output: Option<&Path>) -> Result<Report> {
    let start = Instant::now();
    let cat = catalog(max, max);
    let count = cat["rules"].as_array().map_or(0, Vec::len);
    let item = Item::new("catalog", true).with_message(format!("{count} rule instance(s)"));
    write_or_text(Report::new("dump-rules", vec![item], start.elapsed()), output, serde_json::to_string_pretty(&cat)?)
}
