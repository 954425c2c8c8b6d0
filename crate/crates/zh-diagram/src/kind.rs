//! Generator kinds of the phase-free ZH-calculus.

use std::fmt;
use std::str::FromStr;

use crate::graph::Generator;

/// A ZH generator.  The first three kinds are primitive; the rest are derived
/// and expand to primitive subdiagrams (see [`crate::expand`]).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GeneratorKind {
    /// White spider, any arity.
    ZSpider,
    /// Phase-free H-box (label −1), any arity.
    HBox,
    /// The scalar 1/√2, no legs.
    Star,
    /// Grey spider (XOR/parity), any arity.
    XSpider,
    /// Grey NOT dot, two legs.
    NotDot,
    /// White negate dot (the Pauli Z), two legs.
    NegateDot,
    /// Triangle, two oriented legs: port 0 is the input, port 1 the output.
    Triangle,
    /// Transposed triangle: port 0 is the output side of the underlying triangle.
    TriangleTransposed,
    /// Normalised Hadamard, two legs.
    HadamardBox,
}

impl GeneratorKind {
    /// All kinds, primitive ones first.
    pub const ALL: [GeneratorKind; 9] = [
        GeneratorKind::ZSpider,
        GeneratorKind::HBox,
        GeneratorKind::Star,
        GeneratorKind::XSpider,
        GeneratorKind::NotDot,
        GeneratorKind::NegateDot,
        GeneratorKind::Triangle,
        GeneratorKind::TriangleTransposed,
        GeneratorKind::HadamardBox,
    ];

    /// Whether the kind is derived (has a defining expansion).
    pub fn is_derived(self) -> bool {
        !matches!(self, GeneratorKind::ZSpider | GeneratorKind::HBox | GeneratorKind::Star)
    }

    /// The JSON string for this kind.
    pub fn as_str(self) -> &'static str {
        match self {
            GeneratorKind::ZSpider => "Z",
            GeneratorKind::HBox => "H",
            GeneratorKind::Star => "star",
            GeneratorKind::XSpider => "X",
            GeneratorKind::NotDot => "not",
            GeneratorKind::NegateDot => "negate",
            GeneratorKind::Triangle => "triangle",
            GeneratorKind::TriangleTransposed => "triangle_t",
            GeneratorKind::HadamardBox => "had",
        }
    }
}

impl fmt::Display for GeneratorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for GeneratorKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        GeneratorKind::ALL
            .into_iter()
            .find(|k| k.as_str() == s)
            .ok_or_else(|| format!("unknown ZH generator kind {s:?}"))
    }
}

impl Generator for GeneratorKind {
    fn arity_ok(&self, arity: usize) -> bool {
        match self {
            GeneratorKind::ZSpider | GeneratorKind::HBox | GeneratorKind::XSpider => true,
            GeneratorKind::Star => arity == 0,
            _ => arity == 2,
        }
    }

    fn oriented(&self) -> bool {
        matches!(self, GeneratorKind::Triangle | GeneratorKind::TriangleTransposed)
    }

    fn tag(&self) -> String {
        self.as_str().to_string()
    }
}
