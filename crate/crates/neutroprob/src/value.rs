//! Scalar values that stay exact when they can.
//!
//! Chances built from counts (urn draws, card decks) are exact rationals and
//! the worked results must reproduce with zero error; chances read as decimal
//! floats stay floats. [`Value`] carries both representations through the same
//! arithmetic: an operation on two exact values is exact, anything touching a
//! float degrades to a float, and an exact operation that would overflow
//! `i128` falls back to the float result instead of failing.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// A reduced rational with positive denominator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Ratio {
    num: i128,
    den: i128,
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl Ratio {
    pub const ZERO: Ratio = Ratio { num: 0, den: 1 };
    pub const ONE: Ratio = Ratio { num: 1, den: 1 };

    /// Returns `None` when `den` is 0.
    pub fn new(num: i128, den: i128) -> Option<Ratio> {
        if den == 0 {
            return None;
        }
        let sign = if (num < 0) != (den < 0) && num != 0 { -1 } else { 1 };
        let (n, d) = (num.unsigned_abs(), den.unsigned_abs());
        let g = gcd(n, d).max(1);
        Some(Ratio {
            num: sign * (n / g) as i128,
            den: (d / g) as i128,
        })
    }

    pub fn from_int(n: i128) -> Ratio {
        Ratio { num: n, den: 1 }
    }

    pub fn numer(self) -> i128 {
        self.num
    }

    pub fn denom(self) -> i128 {
        self.den
    }

    pub fn to_f64(self) -> f64 {
        self.num as f64 / self.den as f64
    }

    fn checked_add(self, other: Ratio) -> Option<Ratio> {
        // a/b + c/d = (ad + cb) / bd
        let ad = self.num.checked_mul(other.den)?;
        let cb = other.num.checked_mul(self.den)?;
        Ratio::new(ad.checked_add(cb)?, self.den.checked_mul(other.den)?)
    }

    fn checked_mul(self, other: Ratio) -> Option<Ratio> {
        // reduce cross factors first to keep magnitudes small
        let g1 = gcd(self.num.unsigned_abs(), other.den.unsigned_abs()).max(1);
        let g2 = gcd(other.num.unsigned_abs(), self.den.unsigned_abs()).max(1);
        let n1 = self.num / g1 as i128;
        let d2 = other.den / g1 as i128;
        let n2 = other.num / g2 as i128;
        let d1 = self.den / g2 as i128;
        Ratio::new(n1.checked_mul(n2)?, d1.checked_mul(d2)?)
    }

    fn checked_div(self, other: Ratio) -> Option<Ratio> {
        if other.num == 0 {
            return None;
        }
        self.checked_mul(Ratio {
            num: other.den * other.num.signum(),
            den: other.num.abs(),
        })
    }

    fn cmp_exact(self, other: Ratio) -> Ordering {
        match (
            self.num.checked_mul(other.den),
            other.num.checked_mul(self.den),
        ) {
            (Some(l), Some(r)) => l.cmp(&r),
            _ => self
                .to_f64()
                .partial_cmp(&other.to_f64())
                .unwrap_or(Ordering::Equal),
        }
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

/// Exact-when-possible scalar.
#[derive(Clone, Copy, Debug)]
pub enum Value {
    Exact(Ratio),
    Approx(f64),
}

impl Value {
    pub const ZERO: Value = Value::Exact(Ratio::ZERO);
    pub const ONE: Value = Value::Exact(Ratio::ONE);

    pub fn ratio(num: i128, den: i128) -> Value {
        match Ratio::new(num, den) {
            Some(r) => Value::Exact(r),
            None => Value::Approx(f64::NAN),
        }
    }

    pub fn from_int(n: i128) -> Value {
        Value::Exact(Ratio::from_int(n))
    }

    pub fn to_f64(self) -> f64 {
        match self {
            Value::Exact(r) => r.to_f64(),
            Value::Approx(x) => x,
        }
    }

    pub fn is_exact(self) -> bool {
        matches!(self, Value::Exact(_))
    }

    pub fn as_ratio(self) -> Option<Ratio> {
        match self {
            Value::Exact(r) => Some(r),
            Value::Approx(_) => None,
        }
    }

    /// Parses "3/20", "0.15", or "2" into a value; fraction forms stay exact.
    pub fn parse(s: &str) -> Option<Value> {
        let s = s.trim();
        if let Some((n, d)) = s.split_once('/') {
            let num: i128 = n.trim().parse().ok()?;
            let den: i128 = d.trim().parse().ok()?;
            return Ratio::new(num, den).map(Value::Exact);
        }
        if let Ok(n) = s.parse::<i128>() {
            return Some(Value::from_int(n));
        }
        s.parse::<f64>().ok().map(Value::Approx)
    }

    fn binop(
        self,
        other: Value,
        exact: impl Fn(Ratio, Ratio) -> Option<Ratio>,
        approx: impl Fn(f64, f64) -> f64,
    ) -> Value {
        match (self, other) {
            (Value::Exact(a), Value::Exact(b)) => match exact(a, b) {
                Some(r) => Value::Exact(r),
                None => Value::Approx(approx(a.to_f64(), b.to_f64())),
            },
            (a, b) => Value::Approx(approx(a.to_f64(), b.to_f64())),
        }
    }

    pub fn min(self, other: Value) -> Value {
        if self <= other {
            self
        } else {
            other
        }
    }

    pub fn max(self, other: Value) -> Value {
        if self >= other {
            self
        } else {
            other
        }
    }

    pub fn abs(self) -> Value {
        if self < Value::ZERO {
            -self
        } else {
            self
        }
    }

    pub fn clamp_unit(self) -> Value {
        self.max(Value::ZERO).min(Value::ONE)
    }

    pub fn is_zero(self) -> bool {
        self == Value::ZERO
    }
}

impl Add for Value {
    type Output = Value;
    fn add(self, other: Value) -> Value {
        self.binop(other, Ratio::checked_add, |a, b| a + b)
    }
}

impl Sub for Value {
    type Output = Value;
    fn sub(self, other: Value) -> Value {
        self.binop(other, |a, b| a.checked_add(-b), |a, b| a - b)
    }
}

impl Mul for Value {
    type Output = Value;
    fn mul(self, other: Value) -> Value {
        self.binop(other, Ratio::checked_mul, |a, b| a * b)
    }
}

impl Div for Value {
    type Output = Value;
    fn div(self, other: Value) -> Value {
        self.binop(other, Ratio::checked_div, |a, b| a / b)
    }
}

impl Neg for Ratio {
    type Output = Ratio;
    fn neg(self) -> Ratio {
        Ratio {
            num: -self.num,
            den: self.den,
        }
    }
}

impl Neg for Value {
    type Output = Value;
    fn neg(self) -> Value {
        match self {
            Value::Exact(r) => Value::Exact(-r),
            Value::Approx(x) => Value::Approx(-x),
        }
    }
}

impl PartialEq for Value {
    fn eq(&self, other: &Value) -> bool {
        matches!(self.partial_cmp(other), Some(Ordering::Equal))
    }
}

impl PartialOrd for Value {
    fn partial_cmp(&self, other: &Value) -> Option<Ordering> {
        match (self, other) {
            (Value::Exact(a), Value::Exact(b)) => Some(a.cmp_exact(*b)),
            (a, b) => a.to_f64().partial_cmp(&b.to_f64()),
        }
    }
}

impl From<f64> for Value {
    fn from(x: f64) -> Value {
        Value::Approx(x)
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Exact(r) => write!(f, "{r}"),
            Value::Approx(x) => write!(f, "{x}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ratio_reduces_and_normalizes_sign() {
        let r = Ratio::new(4, -8).unwrap();
        assert_eq!((r.numer(), r.denom()), (-1, 2));
        assert_eq!(Ratio::new(0, -5).unwrap(), Ratio::ZERO);
        assert!(Ratio::new(1, 0).is_none());
    }

    #[test]
    fn exact_arithmetic_is_exact() {
        let a = Value::ratio(2, 10);
        let b = Value::ratio(2, 9);
        let c = a + b - a * b;
        assert_eq!(c, Value::ratio(34, 90));
        assert!(c.is_exact());
    }

    #[test]
    fn mixed_arithmetic_degrades_to_float() {
        let v = Value::ratio(1, 2) + Value::Approx(0.25);
        assert!(!v.is_exact());
        assert!((v.to_f64() - 0.75).abs() < 1e-15);
    }

    #[test]
    fn overflow_falls_back_to_float() {
        let big = Value::ratio(i128::MAX / 2, 3);
        let v = big * big;
        assert!(!v.is_exact());
        assert!(v.to_f64().is_finite());
    }

    #[test]
    fn comparison_crosses_representations() {
        assert_eq!(Value::ratio(1, 2), Value::Approx(0.5));
        assert!(Value::ratio(1, 3) < Value::Approx(0.34));
        assert_eq!(Value::ratio(3, 20).min(Value::ratio(1, 10)), Value::ratio(1, 10));
    }

    #[test]
    fn parses_fraction_int_and_float() {
        assert_eq!(Value::parse("3/20").unwrap(), Value::ratio(3, 20));
        assert_eq!(Value::parse("1").unwrap(), Value::ONE);
        assert_eq!(Value::parse("0.15").unwrap().to_f64(), 0.15);
        assert!(Value::parse("x").is_none());
        assert!(Value::parse("1/0").is_none());
    }
}
