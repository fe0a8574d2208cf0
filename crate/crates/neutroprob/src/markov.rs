//! Markov chains whose transition weights are (t, i, f) triples.
//!
//! Truth components always multiply and sum like classical transition
//! probabilities; the indeterminacy and falsehood components combine through
//! pluggable operators (max, min, or mean), defaulting to max under
//! multiplication and min under addition. When every i and f is zero the
//! truth components reproduce the classical matrix power entry for entry.

use crate::chance::{Chance, NeutrosophicProbability};
use crate::error::{Error, Result};
use crate::value::Value;
use std::fmt;

/// A scalar transition triple with every component in [0, 1].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Triple {
    pub t: Value,
    pub i: Value,
    pub f: Value,
}

impl Triple {
    pub const ZERO: Triple = Triple {
        t: Value::ZERO,
        i: Value::ZERO,
        f: Value::ZERO,
    };

    pub fn new(t: Value, i: Value, f: Value) -> Result<Triple> {
        for v in [t, i, f] {
            Chance::new(v)?;
        }
        Ok(Triple { t, i, f })
    }

    pub fn from_f64(t: f64, i: f64, f: f64) -> Result<Triple> {
        Triple::new(Value::Approx(t), Value::Approx(i), Value::Approx(f))
    }

    /// Exact triple `(tn/td, in/id, fn/fd)`.
    pub fn ratio(t: (i128, i128), i: (i128, i128), f: (i128, i128)) -> Result<Triple> {
        Triple::new(
            Value::ratio(t.0, t.1),
            Value::ratio(i.0, i.1),
            Value::ratio(f.0, f.1),
        )
    }

    pub fn classical(t: Value) -> Result<Triple> {
        Triple::new(t, Value::ZERO, Value::ZERO)
    }

    pub fn to_probability(self) -> Result<NeutrosophicProbability> {
        NeutrosophicProbability::scalar(self.t, self.i, self.f)
    }

    /// Product under the given operators: truths multiply, the other two
    /// components go through the configured combiners.
    pub fn mul(self, other: Triple, cfg: &OperatorConfig) -> Triple {
        Triple {
            t: self.t * other.t,
            i: cfg.mul_i.apply(self.i, other.i),
            f: cfg.mul_f.apply(self.f, other.f),
        }
    }

    /// Sum under the given operators: truths add (clamped at 1), the other
    /// two components go through the configured combiners.
    pub fn add(self, other: Triple, cfg: &OperatorConfig) -> Triple {
        Triple {
            t: (self.t + other.t).min(Value::ONE),
            i: cfg.add_i.apply(self.i, other.i),
            f: cfg.add_f.apply(self.f, other.f),
        }
    }
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.t, self.i, self.f)
    }
}

/// Binary combiner for indeterminacy/falsehood components.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Combiner {
    Max,
    Min,
    Mean,
}

impl Combiner {
    pub fn apply(self, a: Value, b: Value) -> Value {
        match self {
            Combiner::Max => a.max(b),
            Combiner::Min => a.min(b),
            Combiner::Mean => (a + b) / Value::from_int(2),
        }
    }
}

/// Which combiners multiplication and addition use on the indeterminacy and
/// falsehood components. Truth always multiplies and sums.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OperatorConfig {
    pub mul_i: Combiner,
    pub mul_f: Combiner,
    pub add_i: Combiner,
    pub add_f: Combiner,
}

impl Default for OperatorConfig {
    fn default() -> OperatorConfig {
        OperatorConfig::PESSIMISTIC_MAX
    }
}

impl OperatorConfig {
    /// Multiplication takes max on i and f, addition takes min on both.
    pub const PESSIMISTIC_MAX: OperatorConfig = OperatorConfig {
        mul_i: Combiner::Max,
        mul_f: Combiner::Max,
        add_i: Combiner::Min,
        add_f: Combiner::Min,
    };
    /// Multiplication takes min on i and max on f.
    pub const MIN_I: OperatorConfig = OperatorConfig {
        mul_i: Combiner::Min,
        mul_f: Combiner::Max,
        add_i: Combiner::Min,
        add_f: Combiner::Min,
    };
    /// Multiplication and addition average the indeterminacy component.
    pub const MEAN_I: OperatorConfig = OperatorConfig {
        mul_i: Combiner::Mean,
        mul_f: Combiner::Max,
        add_i: Combiner::Mean,
        add_f: Combiner::Min,
    };

    pub fn parse(name: &str) -> Option<OperatorConfig> {
        match name {
            "eq209" | "default" => Some(OperatorConfig::PESSIMISTIC_MAX),
            "eq211" => Some(OperatorConfig::MIN_I),
            "eq212" => Some(OperatorConfig::MEAN_I),
            _ => None,
        }
    }
}

/// A square matrix of transition triples with labeled states.
#[derive(Clone, Debug, PartialEq)]
pub struct NeutroTransitionMatrix {
    states: Vec<String>,
    rows: Vec<Vec<Triple>>,
}

impl NeutroTransitionMatrix {
    pub fn new(states: Vec<String>, rows: Vec<Vec<Triple>>) -> Result<NeutroTransitionMatrix> {
        let n = states.len();
        if n == 0 {
            return Err(Error::InvalidInput("matrix needs at least one state".into()));
        }
        if rows.len() != n || rows.iter().any(|r| r.len() != n) {
            return Err(Error::DimensionMismatch(rows.len(), n));
        }
        let mut seen = std::collections::BTreeSet::new();
        for s in &states {
            if !seen.insert(s.as_str()) {
                return Err(Error::DuplicateLabel(s.clone()));
            }
        }
        Ok(NeutroTransitionMatrix { states, rows })
    }

    pub fn n(&self) -> usize {
        self.states.len()
    }

    pub fn states(&self) -> &[String] {
        &self.states
    }

    pub fn entry(&self, row: usize, col: usize) -> Triple {
        self.rows[row][col]
    }

    pub fn rows(&self) -> &[Vec<Triple>] {
        &self.rows
    }

    /// Matrix product: entry (r, c) folds triple addition over the triple
    /// products `A[r][k] * B[k][c]`, left to right in k.
    pub fn mul(
        &self,
        other: &NeutroTransitionMatrix,
        cfg: &OperatorConfig,
    ) -> Result<NeutroTransitionMatrix> {
        let n = self.n();
        if other.n() != n {
            return Err(Error::DimensionMismatch(n, other.n()));
        }
        let rows = (0..n)
            .map(|r| {
                (0..n)
                    .map(|c| {
                        let mut acc = self.rows[r][0].mul(other.rows[0][c], cfg);
                        for k in 1..n {
                            acc = acc.add(self.rows[r][k].mul(other.rows[k][c], cfg), cfg);
                        }
                        acc
                    })
                    .collect()
            })
            .collect();
        Ok(NeutroTransitionMatrix {
            states: self.states.clone(),
            rows,
        })
    }

    /// Left-fold power: `A^m = (...(A * A) * A...)`, `m >= 1`.
    pub fn power(&self, m: u32, cfg: &OperatorConfig) -> Result<NeutroTransitionMatrix> {
        if m == 0 {
            return Err(Error::InvalidInput("matrix power needs m >= 1".into()));
        }
        let mut acc = self.clone();
        for _ in 1..m {
            acc = acc.mul(self, cfg)?;
        }
        Ok(acc)
    }

    /// Divides every component in each row by that row's total component sum
    /// (3n components per row), so each row sums to 1.
    pub fn row_normalized(&self) -> Result<NeutroTransitionMatrix> {
        let rows = self
            .rows
            .iter()
            .map(|row| {
                let sum = row
                    .iter()
                    .fold(Value::ZERO, |acc, e| acc + e.t + e.i + e.f);
                if sum.to_f64() <= 0.0 {
                    return Err(Error::CannotNormalize);
                }
                Ok(row
                    .iter()
                    .map(|e| Triple {
                        t: e.t / sum,
                        i: e.i / sum,
                        f: e.f / sum,
                    })
                    .collect())
            })
            .collect::<Result<_>>()?;
        Ok(NeutroTransitionMatrix {
            states: self.states.clone(),
            rows,
        })
    }
}

/// A distribution over states: either classical scalar weights or a row of
/// triples.
#[derive(Clone, Debug, PartialEq)]
pub enum StateVector {
    /// Classical row vector; a 0/1 basis vector selects a matrix row exactly
    /// (zero-weight terms drop out of the fold entirely).
    Classical(Vec<Value>),
    Triples(Vec<Triple>),
}

impl StateVector {
    /// The classical basis vector selecting `state`.
    pub fn basis(n: usize, state: usize) -> StateVector {
        StateVector::Classical(
            (0..n)
                .map(|k| if k == state { Value::ONE } else { Value::ZERO })
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        match self {
            StateVector::Classical(v) => v.len(),
            StateVector::Triples(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// One chain step: row vector times matrix under the configured
    /// operators.
    pub fn step(
        &self,
        matrix: &NeutroTransitionMatrix,
        cfg: &OperatorConfig,
    ) -> Result<StateVector> {
        let n = matrix.n();
        if self.len() != n {
            return Err(Error::DimensionMismatch(self.len(), n));
        }
        let entries = (0..n)
            .map(|c| match self {
                StateVector::Classical(weights) => {
                    let mut acc: Option<Triple> = None;
                    for (k, &w) in weights.iter().enumerate() {
                        if w.is_zero() {
                            continue;
                        }
                        let e = matrix.entry(k, c);
                        let term = Triple {
                            t: w * e.t,
                            i: e.i,
                            f: e.f,
                        };
                        acc = Some(match acc {
                            None => term,
                            Some(a) => a.add(term, cfg),
                        });
                    }
                    acc.unwrap_or(Triple::ZERO)
                }
                StateVector::Triples(triples) => {
                    let mut acc = triples[0].mul(matrix.entry(0, c), cfg);
                    for (k, x) in triples.iter().enumerate().skip(1) {
                        acc = acc.add(x.mul(matrix.entry(k, c), cfg), cfg);
                    }
                    acc
                }
            })
            .collect();
        Ok(StateVector::Triples(entries))
    }
}
