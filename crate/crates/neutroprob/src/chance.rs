//! Chances, interval chances, and the (t, i, f) probability triple.
//!
//! Every component is stored as a closed interval in [0, 1]; a plain scalar is
//! the degenerate interval with equal endpoints. This unifies the scalar and
//! interval halves of the calculus behind one API.

use crate::error::{Error, Result};
use crate::value::Value;
use std::fmt;

/// Tolerance used when classifying a triple by the sum of its components.
pub const CLASSIFY_TOLERANCE: f64 = 1e-9;

/// A probability mass in [0, 1].
#[derive(Clone, Copy, Debug, PartialEq, PartialOrd)]
pub struct Chance(Value);

impl Chance {
    pub const ZERO: Chance = Chance(Value::ZERO);
    pub const ONE: Chance = Chance(Value::ONE);

    pub fn new(value: Value) -> Result<Chance> {
        if value < Value::ZERO || value > Value::ONE || !value.to_f64().is_finite() {
            return Err(Error::ChanceOutOfRange(value.to_f64()));
        }
        Ok(Chance(value))
    }

    /// Builds the exact chance `num/den`.
    pub fn ratio(num: i128, den: i128) -> Result<Chance> {
        Chance::new(Value::ratio(num, den))
    }

    pub fn from_f64(x: f64) -> Result<Chance> {
        Chance::new(Value::Approx(x))
    }

    /// Clamps into [0, 1]; for results of arithmetic that may drift outside.
    pub fn clamped(value: Value) -> Chance {
        Chance(value.clamp_unit())
    }

    pub fn value(self) -> Value {
        self.0
    }

    pub fn to_f64(self) -> f64 {
        self.0.to_f64()
    }
}

impl fmt::Display for Chance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A closed subinterval of [0, 1]. Degenerate intervals (lo = hi) behave as
/// plain chances.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct IntervalChance {
    lo: Value,
    hi: Value,
}

impl IntervalChance {
    pub const ZERO: IntervalChance = IntervalChance {
        lo: Value::ZERO,
        hi: Value::ZERO,
    };
    pub const ONE: IntervalChance = IntervalChance {
        lo: Value::ONE,
        hi: Value::ONE,
    };

    pub fn new(lo: Value, hi: Value) -> Result<IntervalChance> {
        if lo < Value::ZERO || hi > Value::ONE || lo > hi {
            return Err(Error::InvalidInterval {
                lo: lo.to_f64(),
                hi: hi.to_f64(),
            });
        }
        Ok(IntervalChance { lo, hi })
    }

    pub fn degenerate(v: Value) -> Result<IntervalChance> {
        let c = Chance::new(v)?;
        Ok(IntervalChance {
            lo: c.value(),
            hi: c.value(),
        })
    }

    /// Interval with exact rational endpoints.
    pub fn ratio(lo_num: i128, lo_den: i128, hi_num: i128, hi_den: i128) -> Result<IntervalChance> {
        IntervalChance::new(Value::ratio(lo_num, lo_den), Value::ratio(hi_num, hi_den))
    }

    pub fn lo(self) -> Value {
        self.lo
    }

    pub fn hi(self) -> Value {
        self.hi
    }

    pub fn is_degenerate(self) -> bool {
        self.lo == self.hi
    }

    /// The single value of a degenerate interval.
    pub fn scalar(self) -> Option<Value> {
        self.is_degenerate().then_some(self.lo)
    }

    pub fn midpoint(self) -> Value {
        (self.lo + self.hi) / Value::from_int(2)
    }

    pub fn width(self) -> Value {
        self.hi - self.lo
    }

    pub fn contains(self, x: Value) -> bool {
        self.lo <= x && x <= self.hi
    }

    /// Sum of intervals, clamped into [0, 1].
    #[allow(clippy::should_implement_trait)] // clamped, not the plain field op
    pub fn add(self, other: IntervalChance) -> IntervalChance {
        IntervalChance {
            lo: (self.lo + other.lo).clamp_unit(),
            hi: (self.hi + other.hi).clamp_unit(),
        }
    }

    /// Standard interval difference [lo1 - hi2, hi1 - lo2], clamped into [0, 1].
    #[allow(clippy::should_implement_trait)]
    pub fn sub(self, other: IntervalChance) -> IntervalChance {
        IntervalChance {
            lo: (self.lo - other.hi).clamp_unit(),
            hi: (self.hi - other.lo).clamp_unit(),
        }
    }

    /// Product of intervals; monotone since both operands are nonnegative.
    #[allow(clippy::should_implement_trait)]
    pub fn mul(self, other: IntervalChance) -> IntervalChance {
        IntervalChance {
            lo: self.lo * other.lo,
            hi: self.hi * other.hi,
        }
    }

    /// 1 - x, the negation of an imprecise chance.
    pub fn complement(self) -> IntervalChance {
        IntervalChance::ONE.sub(self)
    }

    /// Splits `[lo, hi]` into a determinate part and an indeterminacy bound so
    /// that the interval is `lo + i` with `i` in `[0, hi - lo]`.
    pub fn to_indeterminate_form(self) -> (Value, Value) {
        (self.lo, self.hi - self.lo)
    }

    /// Rebuilds the interval from its indeterminate form; inverse of
    /// [`to_indeterminate_form`](Self::to_indeterminate_form).
    pub fn from_indeterminate_form(determinate: Value, bound: Value) -> Result<IntervalChance> {
        IntervalChance::new(determinate, determinate + bound)
    }
}

impl From<Chance> for IntervalChance {
    fn from(c: Chance) -> IntervalChance {
        IntervalChance {
            lo: c.value(),
            hi: c.value(),
        }
    }
}

impl fmt::Display for IntervalChance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_degenerate() {
            write!(f, "{}", self.lo)
        } else {
            write!(f, "[{}, {}]", self.lo, self.hi)
        }
    }
}

/// The neutrosophic probability triple: chance the event occurs, chance of
/// indeterminacy related to it, chance it does not occur.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NeutrosophicProbability {
    t: IntervalChance,
    i: IntervalChance,
    f: IntervalChance,
}

impl NeutrosophicProbability {
    pub fn new(t: IntervalChance, i: IntervalChance, f: IntervalChance) -> NeutrosophicProbability {
        NeutrosophicProbability { t, i, f }
    }

    /// Triple with degenerate (scalar) components.
    pub fn scalar(t: Value, i: Value, f: Value) -> Result<NeutrosophicProbability> {
        Ok(NeutrosophicProbability {
            t: IntervalChance::degenerate(t)?,
            i: IntervalChance::degenerate(i)?,
            f: IntervalChance::degenerate(f)?,
        })
    }

    pub fn scalar_f64(t: f64, i: f64, f: f64) -> Result<NeutrosophicProbability> {
        NeutrosophicProbability::scalar(Value::Approx(t), Value::Approx(i), Value::Approx(f))
    }

    pub fn t(&self) -> IntervalChance {
        self.t
    }

    pub fn i(&self) -> IntervalChance {
        self.i
    }

    pub fn f(&self) -> IntervalChance {
        self.f
    }

    /// The (t, i, f) values when all components are degenerate.
    pub fn scalar_components(&self) -> Option<(Value, Value, Value)> {
        Some((self.t.scalar()?, self.i.scalar()?, self.f.scalar()?))
    }

    /// Sum of the component midpoints; in [0, 3] by construction.
    pub fn midpoint_sum(&self) -> Value {
        self.t.midpoint() + self.i.midpoint() + self.f.midpoint()
    }

    /// Classifies a scalar triple by the sum of its components.
    pub fn classify(&self) -> Result<CompletenessClass> {
        let (t, i, f) = self
            .scalar_components()
            .ok_or(Error::ClassificationUndefined)?;
        let sum = (t + i + f).to_f64();
        Ok(if sum > 1.0 + CLASSIFY_TOLERANCE {
            CompletenessClass::Paraconsistent
        } else if sum < 1.0 - CLASSIFY_TOLERANCE {
            CompletenessClass::Incomplete
        } else {
            CompletenessClass::Complete
        })
    }
}

impl fmt::Display for NeutrosophicProbability {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.t, self.i, self.f)
    }
}

/// How the component sum of a scalar triple relates to 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CompletenessClass {
    /// t + i + f = 1: normalized probability.
    Complete,
    /// t + i + f < 1: missing information.
    Incomplete,
    /// t + i + f > 1: conflicting sources.
    Paraconsistent,
}

impl CompletenessClass {
    pub fn as_str(self) -> &'static str {
        match self {
            CompletenessClass::Complete => "complete",
            CompletenessClass::Incomplete => "incomplete",
            CompletenessClass::Paraconsistent => "paraconsistent",
        }
    }
}
