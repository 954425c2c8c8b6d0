//! ΔZX generators.

use std::fmt;

use rand::seq::SliceRandom;
use rand::Rng;
use zh_diagram::random::KindSampler;
use zh_diagram::{Diagram, Generator, JsonKind};

/// A ΔZX generator.  Spider phases are restricted to 0 and π and stored as a
/// bit: `true` means π.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DzxKind {
    /// Green spider with phase 0 or π, any arity.
    Z(bool),
    /// Red spider with phase 0 or π, any arity.
    X(bool),
    /// Normalised Hadamard gate, two legs.
    Hadamard,
    /// Triangle, two oriented legs: port 0 is the input, port 1 the output.
    Triangle,
}

/// A ΔZX diagram.
pub type DzxDiagram = Diagram<DzxKind>;

impl DzxKind {
    /// Green spider with phase 0.
    pub const Z0: DzxKind = DzxKind::Z(false);
    /// Green spider with phase π.
    pub const ZPI: DzxKind = DzxKind::Z(true);
    /// Red spider with phase 0.
    pub const X0: DzxKind = DzxKind::X(false);
    /// Red spider with phase π.
    pub const XPI: DzxKind = DzxKind::X(true);
}

impl fmt::Display for DzxKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DzxKind::Z(false) => f.write_str("Zg"),
            DzxKind::Z(true) => f.write_str("Zg(π)"),
            DzxKind::X(false) => f.write_str("Xr"),
            DzxKind::X(true) => f.write_str("Xr(π)"),
            DzxKind::Hadamard => f.write_str("hadamard"),
            DzxKind::Triangle => f.write_str("dtriangle"),
        }
    }
}

impl Generator for DzxKind {
    fn arity_ok(&self, arity: usize) -> bool {
        match self {
            DzxKind::Z(_) | DzxKind::X(_) => true,
            DzxKind::Hadamard | DzxKind::Triangle => arity == 2,
        }
    }

    fn oriented(&self) -> bool {
        *self == DzxKind::Triangle
    }

    fn tag(&self) -> String {
        self.to_string()
    }
}

impl JsonKind for DzxKind {
    fn to_json(&self) -> (String, Option<u8>) {
        match *self {
            DzxKind::Z(p) => ("Zg".into(), Some(u8::from(p))),
            DzxKind::X(p) => ("Xr".into(), Some(u8::from(p))),
            DzxKind::Hadamard => ("hadamard".into(), None),
            DzxKind::Triangle => ("dtriangle".into(), None),
        }
    }

    fn from_json(kind: &str, phase: Option<u8>) -> Result<Self, String> {
        let bit = |p: Option<u8>| match p.unwrap_or(0) {
            0 => Ok(false),
            1 => Ok(true),
            other => Err(format!("phase must be 0 or 1 (meaning 0 or π), got {other}")),
        };
        match (kind, phase) {
            ("Zg", p) => Ok(DzxKind::Z(bit(p)?)),
            ("Xr", p) => Ok(DzxKind::X(bit(p)?)),
            ("hadamard", None) => Ok(DzxKind::Hadamard),
            ("dtriangle", None) => Ok(DzxKind::Triangle),
            ("hadamard" | "dtriangle", Some(_)) => Err(format!("ΔZX kind {kind:?} takes no phase")),
            _ => Err(format!("unknown ΔZX generator kind {kind:?}")),
        }
    }
}

/// Sampler over ΔZX kinds for random diagrams.
#[derive(Clone, Copy, Debug)]
pub struct DzxSampler {
    /// Largest spider arity.
    pub max_arity: usize,
}

impl KindSampler<DzxKind> for DzxSampler {
    fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> (DzxKind, usize) {
        const POOL: [DzxKind; 6] = [DzxKind::Z0, DzxKind::ZPI, DzxKind::X0, DzxKind::XPI, DzxKind::Hadamard, DzxKind::Triangle];
        let k = *POOL.choose(rng).expect("non-empty pool");
        let arity = match k {
            DzxKind::Z(_) | DzxKind::X(_) => rng.gen_range(0..=self.max_arity),
            _ => 2,
        };
        (k, arity)
    }

    fn filler(&self) -> DzxKind {
        DzxKind::Z0
    }
}
