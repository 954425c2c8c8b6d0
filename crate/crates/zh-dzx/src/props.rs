//! The functor properties as executable checks.
//!
//! - ⟦d⟧ = ⟦to_zh(d)⟧ for ΔZX diagrams `d`;
//! - ⟦d⟧ = ⟦from_zh(d)⟧ for ZH diagrams `d`;
//! - ⟦to_zh(from_zh(d))⟧ = ⟦d⟧ for ZH diagrams `d`.
//!
//! Universality over Z[1/√2] holds by construction: every evaluated matrix is
//! a [`zh_semantics::SemanticMatrix`] of exact ring values.

use rand::rngs::StdRng;
use rand::SeedableRng;
use rayon::prelude::*;
use serde::Serialize;
use zh_diagram::random::{random_diagram, Shape, ZhSampler};
use zh_diagram::ZhDiagram;
use zh_semantics::{evaluate, SemanticMatrix};

use crate::eval::evaluate_dzx;
use crate::kind::DzxSampler;
use crate::translate::{from_zh, to_zh};

/// A property that failed on a sampled diagram.
#[derive(Clone, Debug, Serialize)]
pub struct PropertyFailure {
    pub property: &'static str,
    pub sample: usize,
    pub diagram: serde_json::Value,
    pub message: String,
}

/// Results of the randomized functor checks.
#[derive(Clone, Debug, Default, Serialize)]
pub struct FunctorReport {
    /// ΔZX samples checked against their ZH image.
    pub dzx_samples: usize,
    /// ZH samples checked against their ΔZX image and the round trip.
    pub zh_samples: usize,
    /// Matrices evaluated; each is exact over Z[1/√2].
    pub matrices: usize,
    pub failures: Vec<PropertyFailure>,
}

impl FunctorReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn compare(property: &'static str, sample: usize, diagram: serde_json::Value, a: Result<SemanticMatrix, String>, b: Result<SemanticMatrix, String>) -> Option<PropertyFailure> {
    let message = match (a, b) {
        (Ok(a), Ok(b)) if a == b => return None,
        (Ok(a), Ok(b)) => format!("matrices differ:\n{}\nvs\n{}", a.render(false), b.render(false)),
        (Err(e), _) | (_, Err(e)) => e,
    };
    Some(PropertyFailure { property, sample, diagram, message })
}

/// Runs the three semantic properties on `dzx_count` random ΔZX diagrams and
/// `zh_count` random ZH diagrams drawn from `seed`.
pub fn check_functors(dzx_count: usize, zh_count: usize, shape: Shape, seed: u64) -> FunctorReport {
    let dzx_failures: Vec<PropertyFailure> = (0..dzx_count)
        .into_par_iter()
        .filter_map(|i| {
            let mut rng = StdRng::seed_from_u64(seed ^ (i as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15));
            let d = random_diagram(&mut rng, &DzxSampler { max_arity: 4 }, shape);
            let ours = evaluate_dzx(&d).map_err(|e| e.to_string());
            let image = evaluate(&to_zh(&d)).map_err(|e| e.to_string());
            compare("dzx-to-zh", i, d.to_json_value(), ours, image)
        })
        .collect();
    let zh_failures: Vec<PropertyFailure> = (0..zh_count)
        .into_par_iter()
        .flat_map_iter(|i| {
            let mut rng = StdRng::seed_from_u64(!seed ^ (i as u64).wrapping_mul(0xbf58_476d_1ce4_e5b9));
            let d = random_diagram(&mut rng, &ZhSampler { derived: true, max_arity: 5 }, shape);
            let ours = evaluate(&d).map_err(|e| e.to_string());
            let image = from_zh(&d);
            let there = evaluate_dzx(&image).map_err(|e| e.to_string());
            let back = evaluate(&to_zh(&image)).map_err(|e| e.to_string());
            let json = d.to_json_value();
            [compare("zh-to-dzx", i, json.clone(), ours.clone(), there), compare("roundtrip", i, json, back, ours)].into_iter().flatten()
        })
        .collect();
    let mut failures = dzx_failures;
    failures.extend(zh_failures);
    FunctorReport { dzx_samples: dzx_count, zh_samples: zh_count, matrices: 2 * dzx_count + 3 * zh_count, failures }
}

/// Result of a single round trip through ΔZX.
#[derive(Clone, Debug, Serialize)]
pub struct RoundtripReport {
    pub equal: bool,
    pub original: serde_json::Value,
    pub roundtrip: serde_json::Value,
    pub image_vertices: usize,
}

/// Checks ⟦to_zh(from_zh(d))⟧ = ⟦d⟧ for one diagram.
pub fn roundtrip_check(d: &ZhDiagram) -> Result<RoundtripReport, zh_semantics::EvalError> {
    let back = to_zh(&from_zh(d));
    let a = evaluate(d)?;
    let b = evaluate(&back)?;
    Ok(RoundtripReport { equal: a == b, original: a.to_json_value(), roundtrip: b.to_json_value(), image_vertices: back.vertex_count() })
}
