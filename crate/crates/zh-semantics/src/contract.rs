//! Exact contraction of integer factor graphs.
//!
//! Both calculi evaluate to networks whose local tensors have integer entries
//! once powers of √2 are pulled out: spiders become shared summation
//! variables, every other generator becomes an integer factor over the
//! variables of its legs, and all normalisations collect into a single
//! exponent of √2.  Contraction eliminates interior variables one at a time,
//! always choosing the variable whose elimination creates the smallest
//! intermediate factor.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::matrix::SemanticMatrix;
use crate::ring::RingValue;

/// Evaluation failures.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("diagram has {wires} open wires, above the cap of {cap}")]
    TooManyOpenWires { wires: usize, cap: usize },
}

/// Default cap on open wires.
pub const DEFAULT_WIRE_CAP: usize = 14;

/// A dense integer factor.  `data` is indexed by the values of `vars`, the
/// first variable being the most significant bit.
#[derive(Clone, Debug)]
pub struct Factor {
    vars: Vec<usize>,
    data: Vec<i128>,
}

impl Factor {
    /// A factor over the given legs, which may repeat variables.  `f` receives
    /// the bit on each leg in order.
    pub fn from_legs(legs: &[usize], f: impl Fn(&[u8]) -> i128) -> Factor {
        let vars: Vec<usize> = legs.iter().copied().collect::<BTreeSet<_>>().into_iter().collect();
        let pos: Vec<usize> = legs.iter().map(|l| vars.binary_search(l).expect("present")).collect();
        let n = vars.len();
        let mut bits = vec![0u8; legs.len()];
        let data = (0..(1usize << n))
            .map(|idx| {
                for (b, &p) in bits.iter_mut().zip(&pos) {
                    *b = ((idx >> (n - 1 - p)) & 1) as u8;
                }
                f(&bits)
            })
            .collect();
        Factor { vars, data }
    }

    /// A scalar factor.
    pub fn constant(x: i128) -> Factor {
        Factor { vars: Vec::new(), data: vec![x] }
    }

    fn value(&self, assign: &impl Fn(usize) -> usize) -> i128 {
        let n = self.vars.len();
        let mut idx = 0;
        for (i, &v) in self.vars.iter().enumerate() {
            idx |= assign(v) << (n - 1 - i);
        }
        self.data[idx]
    }
}

/// An integer tensor network with open (boundary) variables and a global
/// factor `√2^sqrt2_exp`.
#[derive(Clone, Debug, Default)]
pub struct FactorGraph {
    vars: usize,
    factors: Vec<Factor>,
    sqrt2_exp: i64,
}

impl FactorGraph {
    pub fn new() -> Self {
        Self::default()
    }

    /// A fresh summation variable.
    pub fn var(&mut self) -> usize {
        self.vars += 1;
        self.vars - 1
    }

    pub fn add_factor(&mut self, f: Factor) {
        self.factors.push(f);
    }

    /// Multiplies the global scalar by `√2^e`.
    pub fn scale_sqrt2(&mut self, e: i64) {
        self.sqrt2_exp += e;
    }

    /// Contracts everything except `open`, which lists the variable carried by
    /// each open wire: outputs first, then inputs (a variable may appear on
    /// several wires).  Returns the `2^outputs × 2^inputs` matrix.
    pub fn contract(mut self, open: &[usize], outputs: usize) -> SemanticMatrix {
        let keep: BTreeSet<usize> = open.iter().copied().collect();
        let mut live: BTreeSet<usize> = (0..self.vars).filter(|v| !keep.contains(v)).collect();
        let mut pow2: i64 = 0;
        while let Some(v) = self.pick(&live) {
            live.remove(&v);
            let (touching, rest): (Vec<Factor>, Vec<Factor>) = std::mem::take(&mut self.factors).into_iter().partition(|f| f.vars.contains(&v));
            self.factors = rest;
            if touching.is_empty() {
                pow2 += 1;
                continue;
            }
            self.factors.push(sum_out(&touching, v));
        }
        // Scalars and open-variable factors.
        let mut scalar: i128 = 1;
        let mut open_factors = Vec::new();
        for f in std::mem::take(&mut self.factors) {
            if f.vars.is_empty() {
                scalar = scalar.checked_mul(f.data[0]).expect("integer overflow in contraction");
            } else {
                open_factors.push(f);
            }
        }
        let n = open.len();
        let inputs = n - outputs;
        let entries = (0..(1usize << n))
            .map(|idx| {
                // A repeated open variable forces equal bits on its wires.
                let mut assign: Vec<Option<usize>> = vec![None; self.vars];
                for (i, &v) in open.iter().enumerate() {
                    let bit = (idx >> (n - 1 - i)) & 1;
                    match assign[v] {
                        Some(b) if b != bit => return RingValue::ZERO,
                        _ => assign[v] = Some(bit),
                    }
                }
                let get = |v: usize| assign[v].expect("open factor variables are open");
                let prod = open_factors.iter().fold(scalar, |acc, f| acc * f.value(&get));
                RingValue::scaled_sqrt2_pow(prod, self.sqrt2_exp + 2 * pow2)
            })
            .collect();
        SemanticMatrix::new(outputs, inputs, entries)
    }

    /// Next variable to eliminate: smallest resulting factor, then lowest id.
    fn pick(&self, live: &BTreeSet<usize>) -> Option<usize> {
        live.iter()
            .map(|&v| {
                let mut union: BTreeSet<usize> = BTreeSet::new();
                for f in self.factors.iter().filter(|f| f.vars.contains(&v)) {
                    union.extend(f.vars.iter().copied());
                }
                (union.len(), v)
            })
            .min()
            .map(|(_, v)| v)
    }
}

/// Multiplies the factors together and sums out variable `v`.
fn sum_out(factors: &[Factor], v: usize) -> Factor {
    let mut union: BTreeSet<usize> = BTreeSet::new();
    for f in factors {
        union.extend(f.vars.iter().copied());
    }
    let vars: Vec<usize> = union.into_iter().filter(|&u| u != v).collect();
    let n = vars.len();
    let mut data = vec![0i128; 1 << n];
    // Precompute, for each factor, the bit position of each of its variables
    // within (vars ++ [v]).
    let mut slot = std::collections::HashMap::new();
    for (i, &u) in vars.iter().enumerate() {
        slot.insert(u, n - i); // shifted by one: bit 0 is v
    }
    slot.insert(v, 0);
    let maps: Vec<Vec<usize>> = factors.iter().map(|f| f.vars.iter().map(|u| slot[u]).collect()).collect();
    for (idx, out) in data.iter_mut().enumerate() {
        let mut total: i128 = 0;
        for bit in 0..2usize {
            let full = (idx << 1) | bit;
            let mut prod: i128 = 1;
            for (f, map) in factors.iter().zip(&maps) {
                let k = map.len();
                let mut j = 0;
                for (i, &s) in map.iter().enumerate() {
                    j |= ((full >> s) & 1) << (k - 1 - i);
                }
                prod = prod.checked_mul(f.data[j]).expect("integer overflow in contraction");
                if prod == 0 {
                    break;
                }
            }
            total += prod;
        }
        *out = total;
    }
    Factor { vars, data }
}
