//! Exact arithmetic in the ring Z[1/√2].
//!
//! A value is stored as `(a + b·√2) / 2^k` in normalised form: either `k = 0`
//! or `a` and `b` are not both even.  Zero is `(0, 0, 0)`.  With that
//! normalisation two values are equal iff their triples are equal.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

/// An element `(a + b√2) / 2^k` of Z[1/√2].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RingValue {
    a: i128,
    b: i128,
    k: u32,
}

impl RingValue {
    pub const ZERO: RingValue = RingValue { a: 0, b: 0, k: 0 };
    pub const ONE: RingValue = RingValue { a: 1, b: 0, k: 0 };

    /// Builds and normalises `(a + b√2) / 2^k`.
    pub fn new(a: i128, b: i128, k: u32) -> Self {
        RingValue { a, b, k }.normalised()
    }

    /// An integer.
    pub fn int(n: i128) -> Self {
        RingValue { a: n, b: 0, k: 0 }
    }

    /// `1/√2`, the value of the star generator.
    pub fn inv_sqrt2() -> Self {
        RingValue::new(0, 1, 1)
    }

    /// `√2`.
    pub fn sqrt2() -> Self {
        RingValue::new(0, 1, 0)
    }

    /// `n · √2^e` for any integer exponent `e`.
    pub fn scaled_sqrt2_pow(n: i128, e: i64) -> Self {
        let q = e.div_euclid(2);
        let odd = e.rem_euclid(2) == 1;
        let (num, k) = if q >= 0 {
            (n.checked_mul(1i128 << q).expect("ring value overflow"), 0)
        } else {
            (n, (-q) as u32)
        };
        if odd {
            RingValue::new(0, num, k)
        } else {
            RingValue::new(num, 0, k)
        }
    }

    /// Integer part `a` of the normalised numerator.
    pub fn a(&self) -> i128 {
        self.a
    }

    /// √2 coefficient `b` of the normalised numerator.
    pub fn b(&self) -> i128 {
        self.b
    }

    /// Exponent `k` of the denominator `2^k`.
    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn is_zero(&self) -> bool {
        self.a == 0 && self.b == 0
    }

    fn normalised(mut self) -> Self {
        if self.a == 0 && self.b == 0 {
            self.k = 0;
            return self;
        }
        while self.k > 0 && self.a % 2 == 0 && self.b % 2 == 0 {
            self.a /= 2;
            self.b /= 2;
            self.k -= 1;
        }
        self
    }

    fn lift(&self, k: u32) -> (i128, i128) {
        let s = k - self.k;
        let f = 1i128.checked_shl(s).expect("ring value overflow");
        (self.a.checked_mul(f).expect("ring value overflow"), self.b.checked_mul(f).expect("ring value overflow"))
    }

    /// Galois conjugate `(a − b√2) / 2^k`.
    pub fn conjugate(&self) -> Self {
        RingValue { a: self.a, b: -self.b, k: self.k }
    }

    /// Exact quotient, if it lies in the ring.  `None` for division by zero or
    /// a quotient outside Z[1/√2].
    pub fn checked_div(&self, rhs: &RingValue) -> Option<RingValue> {
        if rhs.is_zero() {
            return None;
        }
        // x / y = x · conj(ny) · 2^ky / N(ny), where ny is y's numerator.
        let ny = RingValue { a: rhs.a, b: rhs.b, k: 0 };
        let norm = rhs.a * rhs.a - 2 * rhs.b * rhs.b;
        let top = *self * ny.conjugate();
        let (mut a, mut b) = (top.a, top.b);
        let mut k = top.k as i64 - rhs.k as i64;
        let mut n = norm;
        if n < 0 {
            n = -n;
            a = -a;
            b = -b;
        }
        while n % 2 == 0 {
            n /= 2;
            k += 1;
        }
        if a % n != 0 || b % n != 0 {
            return None;
        }
        a /= n;
        b /= n;
        if k >= 0 {
            Some(RingValue::new(a, b, k as u32))
        } else {
            let f = 1i128 << (-k);
            Some(RingValue::new(a * f, b * f, 0))
        }
    }

    /// Approximate decimal value, for human inspection only.
    pub fn approx(&self) -> f64 {
        (self.a as f64 + self.b as f64 * std::f64::consts::SQRT_2) / 2f64.powi(self.k as i32)
    }
}

impl Add for RingValue {
    type Output = RingValue;
    fn add(self, rhs: RingValue) -> RingValue {
        let k = self.k.max(rhs.k);
        let (a1, b1) = self.lift(k);
        let (a2, b2) = rhs.lift(k);
        RingValue::new(a1 + a2, b1 + b2, k)
    }
}

impl Sub for RingValue {
    type Output = RingValue;
    fn sub(self, rhs: RingValue) -> RingValue {
        self + (-rhs)
    }
}

impl Neg for RingValue {
    type Output = RingValue;
    fn neg(self) -> RingValue {
        RingValue { a: -self.a, b: -self.b, k: self.k }
    }
}

impl Mul for RingValue {
    type Output = RingValue;
    fn mul(self, rhs: RingValue) -> RingValue {
        let a = self.a * rhs.a + 2 * self.b * rhs.b;
        let b = self.a * rhs.b + self.b * rhs.a;
        RingValue::new(a, b, self.k + rhs.k)
    }
}

impl PartialOrd for RingValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A total order on the triples (not the numeric order); used only for
/// deterministic sorting.
impl Ord for RingValue {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.k, self.a, self.b).cmp(&(other.k, other.a, other.b))
    }
}

impl From<i64> for RingValue {
    fn from(n: i64) -> Self {
        RingValue::int(n as i128)
    }
}

/// Addition, as a free function.
pub fn ring_add(x: RingValue, y: RingValue) -> RingValue {
    x + y
}

/// Multiplication, as a free function.
pub fn ring_mul(x: RingValue, y: RingValue) -> RingValue {
    x * y
}

/// Negation, as a free function.
pub fn ring_neg(x: RingValue) -> RingValue {
    -x
}

/// Exact equality, as a free function.
pub fn ring_eq(x: RingValue, y: RingValue) -> bool {
    x == y
}

/// Canonical text: `a`, `b√2`, `a+b√2`, each optionally over `/2^k`
/// (e.g. `1`, `-1`, `√2/2^1`, `(1+√2)/2^2`).
impl fmt::Display for RingValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let surd = |b: i128| match b {
            1 => "√2".to_string(),
            -1 => "-√2".to_string(),
            _ => format!("{b}√2"),
        };
        let num = match (self.a, self.b) {
            (a, 0) => a.to_string(),
            (0, b) => surd(b),
            (a, b) if b > 0 => format!("{a}+{}", surd(b)),
            (a, b) => format!("{a}{}", surd(b)),
        };
        if self.k == 0 {
            f.write_str(&num)
        } else if self.a != 0 && self.b != 0 {
            write!(f, "({num})/2^{}", self.k)
        } else {
            write!(f, "{num}/2^{}", self.k)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn star_squared_is_half() {
        let s = RingValue::inv_sqrt2();
        assert_eq!(s * s, RingValue::new(1, 0, 1));
    }

    #[test]
    fn conjugate_pair_sums_to_two() {
        assert_eq!(RingValue::new(1, 1, 0) + RingValue::new(1, -1, 0), RingValue::int(2));
    }

    #[test]
    fn normalisation_strips_common_powers_of_two() {
        let x = RingValue::new(2, 0, 1);
        assert_eq!((x.a(), x.b(), x.k()), (1, 0, 0));
        let y = RingValue::new(4, 2, 3);
        assert_eq!((y.a(), y.b(), y.k()), (2, 1, 2));
    }

    #[test]
    fn sqrt2_powers() {
        assert_eq!(RingValue::scaled_sqrt2_pow(1, -1), RingValue::inv_sqrt2());
        assert_eq!(RingValue::scaled_sqrt2_pow(3, 2), RingValue::int(6));
        assert_eq!(RingValue::scaled_sqrt2_pow(-1, -3), RingValue::new(0, -1, 2));
    }

    #[test]
    fn division() {
        let x = RingValue::new(3, 5, 2);
        let y = RingValue::new(1, 1, 1);
        let q = x.checked_div(&y).unwrap();
        assert_eq!(q * y, x);
        assert_eq!(RingValue::int(1).checked_div(&RingValue::int(3)), None);
        assert_eq!(RingValue::int(1).checked_div(&RingValue::ZERO), None);
    }

    #[test]
    fn display_forms() {
        assert_eq!(RingValue::inv_sqrt2().to_string(), "√2/2^1");
        assert_eq!(RingValue::new(1, 1, 2).to_string(), "(1+√2)/2^2");
        assert_eq!(RingValue::new(3, -2, 0).to_string(), "3-2√2");
        assert_eq!(RingValue::int(-1).to_string(), "-1");
    }
}
