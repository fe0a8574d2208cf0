//! Product spaces of independent neutrosophic experiments.
//!
//! A joint outcome is a tuple of per-factor labels; its chance is the product
//! of the factor chances and its indeterminacy order counts how many factor
//! positions show an indeterminacy. Joint probabilities come either from
//! closed forms (products and elementary symmetric sums) or from explicit
//! cell enumeration, capped at 10^7 cells.

use crate::chance::{Chance, NeutrosophicProbability};
use crate::error::{Error, Result};
use crate::space::{NeutrosophicEvent, NeutrosophicSampleSpace};
use crate::value::Value;

/// Enumeration cap: desk-scale verification only, closed forms beyond.
pub const MAX_CELLS: u128 = 10_000_000;

/// One joint outcome of a product space.
#[derive(Clone, Debug, PartialEq)]
pub struct ProductCell {
    pub labels: Vec<String>,
    pub chance: Value,
    /// Number of factor positions holding an indeterminacy label.
    pub indeterminacy_order: usize,
}

/// The fully enumerated product of two or more sample spaces.
#[derive(Clone, Debug)]
pub struct ProductSpace {
    factors: Vec<NeutrosophicSampleSpace>,
    cells: Vec<ProductCell>,
}

fn np_clamped(t: Value, i: Value, f: Value) -> NeutrosophicProbability {
    use crate::chance::IntervalChance;
    let iv = |v: Value| IntervalChance::from(Chance::clamped(v));
    NeutrosophicProbability::new(iv(t), iv(i), iv(f))
}

impl ProductSpace {
    /// Enumerates every label tuple of the factors. Needs at least two
    /// factors and at most [`MAX_CELLS`] cells.
    pub fn new(factors: Vec<NeutrosophicSampleSpace>) -> Result<ProductSpace> {
        if factors.len() < 2 {
            return Err(Error::InvalidInput(
                "a product space needs at least two factors".into(),
            ));
        }
        let mut cell_count: u128 = 1;
        for space in &factors {
            let labels = space.outcomes().count() + space.indeterminacies().count();
            cell_count = cell_count.saturating_mul(labels as u128);
        }
        if cell_count > MAX_CELLS {
            return Err(Error::EnumerationCap(cell_count));
        }
        let mut cells = Vec::with_capacity(cell_count as usize);
        let mut stack: Vec<(String, Value, bool)> = Vec::with_capacity(factors.len());
        enumerate(&factors, &mut stack, &mut cells);
        Ok(ProductSpace { factors, cells })
    }

    pub fn factors(&self) -> &[NeutrosophicSampleSpace] {
        &self.factors
    }

    pub fn cells(&self) -> &[ProductCell] {
        &self.cells
    }

    pub fn cells_of_order(&self, order: usize) -> impl Iterator<Item = &ProductCell> {
        self.cells.iter().filter(move |c| c.indeterminacy_order == order)
    }

    /// Total chance mass of cells with at least one indeterminate position;
    /// the enumerated counterpart of [`total_indeterminacy`].
    pub fn enumerated_indeterminacy(&self) -> Value {
        self.cells
            .iter()
            .filter(|c| c.indeterminacy_order > 0)
            .fold(Value::ZERO, |acc, c| acc + c.chance)
    }
}

fn enumerate(
    factors: &[NeutrosophicSampleSpace],
    stack: &mut Vec<(String, Value, bool)>,
    cells: &mut Vec<ProductCell>,
) {
    let depth = stack.len();
    if depth == factors.len() {
        let chance = stack
            .iter()
            .fold(Value::ONE, |acc, (_, c, _)| acc * *c);
        cells.push(ProductCell {
            labels: stack.iter().map(|(l, _, _)| l.clone()).collect(),
            chance,
            indeterminacy_order: stack.iter().filter(|(_, _, ind)| *ind).count(),
        });
        return;
    }
    for (label, chance) in factors[depth].outcomes() {
        stack.push((label.to_string(), chance.value(), false));
        enumerate(factors, stack, cells);
        stack.pop();
    }
    for (label, chance) in factors[depth].indeterminacies() {
        stack.push((label.to_string(), chance.value(), true));
        enumerate(factors, stack, cells);
        stack.pop();
    }
}

/// The elementary symmetric sums `S_t` of the per-factor indeterminacy
/// totals: `S_1` is their plain sum, the last is their product.
#[derive(Clone, Debug, PartialEq)]
pub struct SymmetricSums {
    sums: Vec<Value>,
}

impl SymmetricSums {
    pub fn of(indeterminacies: &[Value]) -> SymmetricSums {
        // coefficients of prod (1 + I_r x), built incrementally
        let mut sums = vec![Value::ZERO; indeterminacies.len()];
        for (r, &i_r) in indeterminacies.iter().enumerate() {
            for t in (1..=r).rev() {
                sums[t] = sums[t] + sums[t - 1] * i_r;
            }
            sums[0] = sums[0] + i_r;
        }
        SymmetricSums { sums }
    }

    /// `S_t` for `t` in `1..=s`.
    pub fn get(&self, t: usize) -> Option<Value> {
        self.sums.get(t - 1).copied()
    }

    pub fn len(&self) -> usize {
        self.sums.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sums.is_empty()
    }

    /// The inclusion-exclusion alternation `sum of (-1)^(t-1) S_t`.
    pub fn alternating_total(&self) -> Value {
        let mut total = Value::ZERO;
        for (idx, &s) in self.sums.iter().enumerate() {
            if idx % 2 == 0 {
                total = total + s;
            } else {
                total = total - s;
            }
        }
        total
    }
}

fn factor_indeterminacies(spaces: &[NeutrosophicSampleSpace]) -> Vec<Value> {
    spaces.iter().map(|s| s.indeterminacy_total()).collect()
}

/// Chance that a joint experiment shows indeterminacy anywhere, via the
/// alternating symmetric-sum formula; algebraically equal to
/// `1 - prod (1 - I_r)`.
pub fn total_indeterminacy(spaces: &[NeutrosophicSampleSpace]) -> Chance {
    Chance::clamped(SymmetricSums::of(&factor_indeterminacies(spaces)).alternating_total())
}

/// Joint probability of one event per factor: truth is the product of the
/// per-factor event chances, indeterminacy is the whole-product indeterminacy,
/// and falsehood is the mass of pure-outcome cells that miss the conjunction.
pub fn joint(
    spaces: &[NeutrosophicSampleSpace],
    events: &[NeutrosophicEvent],
) -> Result<NeutrosophicProbability> {
    if spaces.len() != events.len() {
        return Err(Error::InvalidInput(format!(
            "{} factors but {} events",
            spaces.len(),
            events.len()
        )));
    }
    if spaces.len() < 2 {
        return Err(Error::InvalidInput(
            "a joint probability needs at least two factors".into(),
        ));
    }
    let mut t = Value::ONE;
    let mut pure = Value::ONE;
    for (space, event) in spaces.iter().zip(events) {
        t = t * space.probability(event)?.t().scalar().expect("scalar space");
        pure = pure * space.outcome_total();
    }
    let i = total_indeterminacy(spaces).value();
    Ok(np_clamped(t, i, pure - t))
}

/// Joint probability of a predicate over pure-outcome tuples (tuples with no
/// indeterminate position). Enumerates the pure tuples, capped at
/// [`MAX_CELLS`].
pub fn joint_predicate<P>(
    spaces: &[NeutrosophicSampleSpace],
    predicate: P,
) -> Result<NeutrosophicProbability>
where
    P: Fn(&[&str]) -> bool,
{
    if spaces.len() < 2 {
        return Err(Error::InvalidInput(
            "a joint probability needs at least two factors".into(),
        ));
    }
    let mut tuple_count: u128 = 1;
    for space in spaces {
        tuple_count = tuple_count.saturating_mul(space.outcomes().count() as u128);
    }
    if tuple_count > MAX_CELLS {
        return Err(Error::EnumerationCap(tuple_count));
    }
    let per_factor: Vec<Vec<(&str, Value)>> = spaces
        .iter()
        .map(|s| s.outcomes().map(|(l, c)| (l, c.value())).collect())
        .collect();
    let mut t = Value::ZERO;
    let mut f = Value::ZERO;
    let mut indices = vec![0usize; spaces.len()];
    'tuples: loop {
        let mut labels = Vec::with_capacity(spaces.len());
        let mut chance = Value::ONE;
        for (r, &k) in indices.iter().enumerate() {
            let (label, c) = per_factor[r][k];
            labels.push(label);
            chance = chance * c;
        }
        if predicate(&labels) {
            t = t + chance;
        } else {
            f = f + chance;
        }
        for r in (0..indices.len()).rev() {
            indices[r] += 1;
            if indices[r] < per_factor[r].len() {
                continue 'tuples;
            }
            indices[r] = 0;
        }
        break;
    }
    let i = total_indeterminacy(spaces).value();
    Ok(np_clamped(t, i, f))
}

/// Fundamental counting principle for two neutrosophic events in sequence:
/// an event with `e` ways and `e1` indeterminacies followed by one with `f`
/// ways and `f1` indeterminacies gives `e*f` ways, `e1*f + e*f1` first-order
/// and `e1*f1` second-order indeterminacies.
pub fn counting_principle(e: u64, e1: u64, f: u64, f1: u64) -> Result<(u128, u128, u128)> {
    let ways = e as u128 * f as u128;
    let first = (e1 as u128 * f as u128)
        .checked_add(e as u128 * f1 as u128)
        .ok_or_else(|| Error::InvalidInput("counting overflow".into()))?;
    let second = e1 as u128 * f1 as u128;
    Ok((ways, first, second))
}
