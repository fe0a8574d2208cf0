//! Discrete sample spaces with explicit indeterminacy, and the event algebra
//! over them.
//!
//! A space lists outcomes with their chances plus named indeterminacy sources
//! (a die face vs. the die stuck in a crack). The chance total may fall short
//! of 1, which marks an incomplete space. Spaces built from counts (urns,
//! decks) keep the counts so conditioning and the multiplicative rule can
//! rebuild the space exactly.

use crate::chance::{Chance, IntervalChance, NeutrosophicProbability};
use crate::error::{Error, Result};
use crate::value::Value;
use std::collections::{BTreeMap, BTreeSet};

const COMPLETE_TOLERANCE: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq)]
struct SpaceCounts {
    outcomes: Vec<u64>,
    indeterminacies: Vec<u64>,
    total: u64,
}

/// A finite neutrosophic sample space.
#[derive(Clone, Debug, PartialEq)]
pub struct NeutrosophicSampleSpace {
    outcomes: Vec<(String, Chance)>,
    indeterminacies: Vec<(String, Chance)>,
    counts: Option<SpaceCounts>,
}

/// A set of outcome labels. Indeterminacy labels are never event members.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NeutrosophicEvent {
    members: BTreeSet<String>,
}

impl NeutrosophicEvent {
    pub fn new<I, S>(labels: I) -> NeutrosophicEvent
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        NeutrosophicEvent {
            members: labels.into_iter().map(Into::into).collect(),
        }
    }

    pub fn empty() -> NeutrosophicEvent {
        NeutrosophicEvent {
            members: BTreeSet::new(),
        }
    }

    pub fn members(&self) -> impl Iterator<Item = &str> {
        self.members.iter().map(String::as_str)
    }

    pub fn contains(&self, label: &str) -> bool {
        self.members.contains(label)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn union(&self, other: &NeutrosophicEvent) -> NeutrosophicEvent {
        NeutrosophicEvent {
            members: self.members.union(&other.members).cloned().collect(),
        }
    }

    pub fn intersection(&self, other: &NeutrosophicEvent) -> NeutrosophicEvent {
        NeutrosophicEvent {
            members: self.members.intersection(&other.members).cloned().collect(),
        }
    }
}

/// Numeric payoffs per outcome and per indeterminacy source, for expected
/// values. Keys must cover the space's labels exactly.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct PayoffSpec {
    pub outcome_payoffs: BTreeMap<String, Value>,
    pub indeterminacy_payoffs: BTreeMap<String, Value>,
}

fn np_clamped(t: Value, i: Value, f: Value) -> NeutrosophicProbability {
    let iv = |v: Value| IntervalChance::from(Chance::clamped(v));
    NeutrosophicProbability::new(iv(t), iv(i), iv(f))
}

impl NeutrosophicSampleSpace {
    /// Builds a space from labeled chances. Labels must be unique across both
    /// lists and the grand total must not exceed 1.
    pub fn from_chances(
        outcomes: Vec<(String, Chance)>,
        indeterminacies: Vec<(String, Chance)>,
    ) -> Result<NeutrosophicSampleSpace> {
        let space = NeutrosophicSampleSpace {
            outcomes,
            indeterminacies,
            counts: None,
        };
        space.validate()?;
        Ok(space)
    }

    /// Builds a complete space from per-label counts; chances are exact
    /// rationals `count / total`.
    pub fn from_counts(
        outcomes: Vec<(String, u64)>,
        indeterminacies: Vec<(String, u64)>,
    ) -> Result<NeutrosophicSampleSpace> {
        let total: u64 = outcomes
            .iter()
            .chain(indeterminacies.iter())
            .map(|(_, c)| *c)
            .sum();
        if total == 0 {
            return Err(Error::InvalidInput(
                "count-based space needs a positive total count".into(),
            ));
        }
        let chance = |c: u64| Chance::ratio(c as i128, total as i128);
        let space = NeutrosophicSampleSpace {
            outcomes: outcomes
                .iter()
                .map(|(l, c)| Ok((l.clone(), chance(*c)?)))
                .collect::<Result<_>>()?,
            indeterminacies: indeterminacies
                .iter()
                .map(|(l, c)| Ok((l.clone(), chance(*c)?)))
                .collect::<Result<_>>()?,
            counts: Some(SpaceCounts {
                outcomes: outcomes.into_iter().map(|(_, c)| c).collect(),
                indeterminacies: indeterminacies.into_iter().map(|(_, c)| c).collect(),
                total,
            }),
        };
        space.validate()?;
        Ok(space)
    }

    fn validate(&self) -> Result<()> {
        let mut seen = BTreeSet::new();
        for (label, _) in self.outcomes.iter().chain(self.indeterminacies.iter()) {
            if !seen.insert(label.as_str()) {
                return Err(Error::DuplicateLabel(label.clone()));
            }
        }
        let total = self.total().to_f64();
        if total > 1.0 + COMPLETE_TOLERANCE {
            return Err(Error::SpaceTotalExceedsOne(total));
        }
        Ok(())
    }

    pub fn outcomes(&self) -> impl Iterator<Item = (&str, Chance)> {
        self.outcomes.iter().map(|(l, c)| (l.as_str(), *c))
    }

    pub fn indeterminacies(&self) -> impl Iterator<Item = (&str, Chance)> {
        self.indeterminacies.iter().map(|(l, c)| (l.as_str(), *c))
    }

    pub fn outcome_chance(&self, label: &str) -> Option<Chance> {
        self.outcomes
            .iter()
            .find(|(l, _)| l == label)
            .map(|(_, c)| *c)
    }

    /// Whether the space was built from counts (and so supports conditioning).
    pub fn is_count_based(&self) -> bool {
        self.counts.is_some()
    }

    /// Counts as `(label, count)` pairs, outcomes then indeterminacies, when
    /// the space is count-based.
    #[allow(clippy::type_complexity)]
    pub fn counts(&self) -> Option<(Vec<(String, u64)>, Vec<(String, u64)>)> {
        let c = self.counts.as_ref()?;
        Some((
            self.outcomes
                .iter()
                .zip(&c.outcomes)
                .map(|((l, _), n)| (l.clone(), *n))
                .collect(),
            self.indeterminacies
                .iter()
                .zip(&c.indeterminacies)
                .map(|((l, _), n)| (l.clone(), *n))
                .collect(),
        ))
    }

    pub fn outcome_total(&self) -> Value {
        self.outcomes
            .iter()
            .fold(Value::ZERO, |acc, (_, c)| acc + c.value())
    }

    pub fn indeterminacy_total(&self) -> Value {
        self.indeterminacies
            .iter()
            .fold(Value::ZERO, |acc, (_, c)| acc + c.value())
    }

    /// The chance of the whole space; < 1 for an incomplete space.
    pub fn total(&self) -> Value {
        self.outcome_total() + self.indeterminacy_total()
    }

    pub fn is_complete(&self) -> bool {
        (self.total().to_f64() - 1.0).abs() <= COMPLETE_TOLERANCE
    }

    fn check_event(&self, event: &NeutrosophicEvent) -> Result<()> {
        for label in event.members() {
            if self.outcome_chance(label).is_none() {
                return Err(Error::EventSpaceMismatch(label.to_string()));
            }
        }
        Ok(())
    }

    fn event_chance(&self, event: &NeutrosophicEvent) -> Value {
        self.outcomes
            .iter()
            .filter(|(l, _)| event.contains(l))
            .fold(Value::ZERO, |acc, (_, c)| acc + c.value())
    }

    fn outside_chance(&self, event: &NeutrosophicEvent) -> Value {
        self.outcomes
            .iter()
            .filter(|(l, _)| !event.contains(l))
            .fold(Value::ZERO, |acc, (_, c)| acc + c.value())
    }

    /// The set complement of an event within this space's outcomes.
    pub fn complement_event(&self, event: &NeutrosophicEvent) -> Result<NeutrosophicEvent> {
        self.check_event(event)?;
        Ok(NeutrosophicEvent::new(
            self.outcomes
                .iter()
                .filter(|(l, _)| !event.contains(l))
                .map(|(l, _)| l.clone()),
        ))
    }

    /// The probability triple of an event: the chance mass inside it, the
    /// space's whole indeterminacy, and the outcome mass outside it. The
    /// falsehood side is summed directly rather than derived as `1 - t - i`,
    /// so it stays correct on incomplete spaces.
    pub fn probability(&self, event: &NeutrosophicEvent) -> Result<NeutrosophicProbability> {
        self.check_event(event)?;
        Ok(np_clamped(
            self.event_chance(event),
            self.indeterminacy_total(),
            self.outside_chance(event),
        ))
    }

    /// Probability of the impossible event: nothing occurs, indeterminacy
    /// keeps its chance, everything else counts against.
    pub fn impossible(&self) -> NeutrosophicProbability {
        np_clamped(Value::ZERO, self.indeterminacy_total(), self.outcome_total())
    }

    /// Probability of the sure event on a complete space.
    pub fn sure(&self) -> Result<NeutrosophicProbability> {
        if !self.is_complete() {
            return Err(Error::IncompleteSpace(self.total().to_f64()));
        }
        let i = self.indeterminacy_total();
        Ok(np_clamped(Value::ONE - i, i, Value::ZERO))
    }

    /// Addition law: `ch(A) + ch(B) - ch(A and B)` with the outcome mass
    /// outside the union as falsehood.
    pub fn union(
        &self,
        a: &NeutrosophicEvent,
        b: &NeutrosophicEvent,
    ) -> Result<NeutrosophicProbability> {
        self.check_event(a)?;
        self.check_event(b)?;
        let t = self.event_chance(a) + self.event_chance(b)
            - self.event_chance(&a.intersection(b));
        Ok(np_clamped(
            t,
            self.indeterminacy_total(),
            self.outside_chance(&a.union(b)),
        ))
    }

    /// Probability of both events at once, read off the space directly as the
    /// intersection event.
    pub fn intersection(
        &self,
        a: &NeutrosophicEvent,
        b: &NeutrosophicEvent,
    ) -> Result<NeutrosophicProbability> {
        self.check_event(a)?;
        self.check_event(b)?;
        self.probability(&a.intersection(b))
    }

    /// Probability that two independent events both occur: the chance product,
    /// with the space's indeterminacy and the rest as falsehood.
    pub fn and_independent(
        &self,
        a: &NeutrosophicEvent,
        b: &NeutrosophicEvent,
    ) -> Result<NeutrosophicProbability> {
        self.check_event(a)?;
        self.check_event(b)?;
        let t = self.event_chance(a) * self.event_chance(b);
        let i = self.indeterminacy_total();
        Ok(np_clamped(t, i, self.total() - i - t))
    }

    /// Probability of the opposite event. Applying this twice returns the
    /// original event's triple exactly.
    pub fn complement(&self, event: &NeutrosophicEvent) -> Result<NeutrosophicProbability> {
        self.check_event(event)?;
        Ok(np_clamped(
            self.outside_chance(event),
            self.indeterminacy_total(),
            self.event_chance(event),
        ))
    }

    /// The space after one unit of `label` has been drawn without
    /// replacement. Requires a count-based space.
    pub fn conditioned(&self, label: &str) -> Result<NeutrosophicSampleSpace> {
        let counts = self.counts.as_ref().ok_or_else(|| {
            Error::CannotCondition("space is not count-based".into())
        })?;
        if counts.total <= 1 {
            return Err(Error::CannotCondition(
                "cannot draw from a space with a single unit".into(),
            ));
        }
        let mut outcomes = counts.outcomes.clone();
        let mut indeterminacies = counts.indeterminacies.clone();
        let slot = self
            .outcomes
            .iter()
            .position(|(l, _)| l == label)
            .map(|k| &mut outcomes[k])
            .or_else(|| {
                self.indeterminacies
                    .iter()
                    .position(|(l, _)| l == label)
                    .map(|k| &mut indeterminacies[k])
            })
            .ok_or_else(|| Error::EventSpaceMismatch(label.to_string()))?;
        if *slot == 0 {
            return Err(Error::CannotCondition(format!(
                "no units of {label:?} left to draw"
            )));
        }
        *slot -= 1;
        let total = counts.total - 1;
        let chance = |c: u64| Chance::ratio(c as i128, total as i128);
        Ok(NeutrosophicSampleSpace {
            outcomes: self
                .outcomes
                .iter()
                .zip(&outcomes)
                .map(|((l, _), c)| Ok((l.clone(), chance(*c)?)))
                .collect::<Result<_>>()?,
            indeterminacies: self
                .indeterminacies
                .iter()
                .zip(&indeterminacies)
                .map(|((l, _), c)| Ok((l.clone(), chance(*c)?)))
                .collect::<Result<_>>()?,
            counts: Some(SpaceCounts {
                outcomes,
                indeterminacies,
                total,
            }),
        })
    }

    /// Conditional probability of `event` after one unit of `given` has been
    /// removed from the space.
    pub fn conditional(
        &self,
        event: &NeutrosophicEvent,
        given: &str,
    ) -> Result<NeutrosophicProbability> {
        self.check_event(event)?;
        self.conditioned(given)?.probability(event)
    }

    /// Multiplication rule for a sequential draw without replacement:
    /// `t = ch(first) * ch(second | first)`, indeterminacy combined as
    /// `i0 + i1 - i0*i1` across the two draws, falsehood as the rest.
    pub fn multiplicative_rule(
        &self,
        first: &str,
        second: &str,
    ) -> Result<NeutrosophicProbability> {
        let counts = self.counts.as_ref().ok_or_else(|| {
            Error::CannotCondition("space is not count-based".into())
        })?;
        let declared: u64 = counts.outcomes.iter().chain(&counts.indeterminacies).sum();
        if declared != counts.total {
            return Err(Error::CannotCondition(
                "multiplication rule needs a complete count-based space".into(),
            ));
        }
        for label in [first, second] {
            if self.outcome_chance(label).is_none() {
                return Err(Error::EventSpaceMismatch(label.to_string()));
            }
        }
        let count_of = |label: &str| {
            self.outcomes
                .iter()
                .position(|(l, _)| l == label)
                .map(|k| counts.outcomes[k])
                .unwrap_or(0)
        };
        if count_of(first) == 0 {
            return Err(Error::CannotCondition(format!(
                "no units of {first:?} to draw first"
            )));
        }
        let n = counts.total;
        let reduced = n - 1;
        if reduced == 0 {
            return Err(Error::CannotCondition(
                "cannot draw twice from a single-unit space".into(),
            ));
        }
        let second_left = count_of(second) - u64::from(first == second);
        let t = Value::ratio(count_of(first) as i128, n as i128)
            * Value::ratio(second_left as i128, reduced as i128);
        let indet: u64 = counts.indeterminacies.iter().sum();
        let i0 = Value::ratio(indet as i128, n as i128);
        let i1 = Value::ratio(indet as i128, reduced as i128);
        let i = i0 + i1 - i0 * i1;
        Ok(np_clamped(t, i, Value::ONE - t - i))
    }

    /// Expected value over numeric payoffs: outcome payoffs weighted by their
    /// chances plus indeterminacy payoffs weighted by theirs.
    pub fn expected_value(&self, payoffs: &PayoffSpec) -> Result<Value> {
        let check = |labels: &Vec<(String, Chance)>,
                     map: &BTreeMap<String, Value>,
                     kind: &str|
         -> Result<()> {
            for (label, _) in labels {
                if !map.contains_key(label) {
                    return Err(Error::IncompletePayoff(format!(
                        "missing payoff for {kind} {label:?}"
                    )));
                }
            }
            for key in map.keys() {
                if !labels.iter().any(|(l, _)| l == key) {
                    return Err(Error::IncompletePayoff(format!(
                        "payoff key {key:?} is not a {kind} of this space"
                    )));
                }
            }
            Ok(())
        };
        check(&self.outcomes, &payoffs.outcome_payoffs, "outcome")?;
        check(
            &self.indeterminacies,
            &payoffs.indeterminacy_payoffs,
            "indeterminacy source",
        )?;
        let mut total = Value::ZERO;
        for (label, chance) in &self.outcomes {
            total = total + payoffs.outcome_payoffs[label] * chance.value();
        }
        for (label, chance) in &self.indeterminacies {
            total = total + payoffs.indeterminacy_payoffs[label] * chance.value();
        }
        Ok(total)
    }

    /// The same outcomes with every indeterminacy source dropped. The result
    /// may be incomplete: its total falls below 1 by the removed mass.
    pub fn without_indeterminacy(&self) -> NeutrosophicSampleSpace {
        NeutrosophicSampleSpace {
            outcomes: self.outcomes.clone(),
            indeterminacies: Vec::new(),
            counts: self.counts.as_ref().map(|c| SpaceCounts {
                outcomes: c.outcomes.clone(),
                indeterminacies: Vec::new(),
                total: c.total,
            }),
        }
    }
}

/// Checks the Bayesian identity `ch(A|B) = ch(B|A) * ch(A) / ch(B)` within
/// 1e-9. Undefined when `ch(B)` is zero.
pub fn bayes_check(
    ch_a: Value,
    ch_b: Value,
    ch_a_given_b: Value,
    ch_b_given_a: Value,
) -> Result<bool> {
    if ch_b.is_zero() {
        return Err(Error::UndefinedConditional);
    }
    let rhs = ch_b_given_a * ch_a / ch_b;
    Ok((ch_a_given_b - rhs).abs().to_f64() <= 1e-9)
}

/// Addition law on interval-valued triples: sums the truth intervals, removes
/// the intersection, and charges falsehood with whatever the space total
/// leaves after indeterminacy and truth.
pub fn union_interval(
    np_a: &NeutrosophicProbability,
    np_b: &NeutrosophicProbability,
    np_ab: &NeutrosophicProbability,
    indeterm: IntervalChance,
    space_total: Chance,
) -> NeutrosophicProbability {
    let t = np_a.t().add(np_b.t()).sub(np_ab.t());
    let f = IntervalChance::from(space_total).sub(indeterm).sub(t);
    NeutrosophicProbability::new(t, indeterm, f)
}

/// Independent conjunction on interval-valued triples: truth intervals
/// multiply; falsehood is the space total minus indeterminacy minus truth.
pub fn and_independent_interval(
    np_a: &NeutrosophicProbability,
    np_b: &NeutrosophicProbability,
    indeterm: IntervalChance,
    space_total: Chance,
) -> NeutrosophicProbability {
    let t = np_a.t().mul(np_b.t());
    let f = IntervalChance::from(space_total).sub(indeterm).sub(t);
    NeutrosophicProbability::new(t, indeterm, f)
}
