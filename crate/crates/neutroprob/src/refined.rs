//! n-valued refinement of a probability triple.
//!
//! Each of the three components splits into labeled sub-chances carrying a
//! property (win by one goal, stuck in a shallow crack, ...). Coarsening sums
//! the parts back; refining distributes a component over caller-supplied
//! weights, since there is no canonical split.

use crate::chance::{Chance, NeutrosophicProbability};
use crate::error::{Error, Result};
use crate::value::Value;

/// A `((T1..Tp), (I1..Ir), (F1..Fs))` refinement with `p, r, s >= 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct RefinedNP {
    t_parts: Vec<(String, Chance)>,
    i_parts: Vec<(String, Chance)>,
    f_parts: Vec<(String, Chance)>,
}

impl RefinedNP {
    pub fn new(
        t_parts: Vec<(String, Chance)>,
        i_parts: Vec<(String, Chance)>,
        f_parts: Vec<(String, Chance)>,
    ) -> Result<RefinedNP> {
        if t_parts.is_empty() || i_parts.is_empty() || f_parts.is_empty() {
            return Err(Error::InvalidInput(
                "each refined component needs at least one part".into(),
            ));
        }
        Ok(RefinedNP {
            t_parts,
            i_parts,
            f_parts,
        })
    }

    pub fn t_parts(&self) -> &[(String, Chance)] {
        &self.t_parts
    }

    pub fn i_parts(&self) -> &[(String, Chance)] {
        &self.i_parts
    }

    pub fn f_parts(&self) -> &[(String, Chance)] {
        &self.f_parts
    }

    /// Total part count `n = p + r + s`.
    pub fn n(&self) -> usize {
        self.t_parts.len() + self.i_parts.len() + self.f_parts.len()
    }

    /// Collapses the refinement back to a plain triple by summing each
    /// component's parts (clamped into [0, 1]).
    pub fn coarsen(&self) -> NeutrosophicProbability {
        let sum = |parts: &[(String, Chance)]| {
            Chance::clamped(
                parts
                    .iter()
                    .fold(Value::ZERO, |acc, (_, c)| acc + c.value()),
            )
        };
        use crate::chance::IntervalChance;
        NeutrosophicProbability::new(
            IntervalChance::from(sum(&self.t_parts)),
            IntervalChance::from(sum(&self.i_parts)),
            IntervalChance::from(sum(&self.f_parts)),
        )
    }
}

fn check_weights(weights: &[Value]) -> Result<()> {
    if weights.is_empty() {
        return Err(Error::InvalidInput("weight list must be nonempty".into()));
    }
    let mut sum = Value::ZERO;
    for &w in weights {
        if w < Value::ZERO {
            return Err(Error::WeightSum(w.to_f64()));
        }
        sum = sum + w;
    }
    if (sum.to_f64() - 1.0).abs() > 1e-9 {
        return Err(Error::WeightSum(sum.to_f64()));
    }
    Ok(())
}

/// Splits a scalar triple into parts by multiplying each component with its
/// weight list; every list must sum to 1. Part labels are generated as
/// `T1..`, `I1..`, `F1..`.
pub fn refine(
    np: &NeutrosophicProbability,
    t_weights: &[Value],
    i_weights: &[Value],
    f_weights: &[Value],
) -> Result<RefinedNP> {
    let (t, i, f) = np
        .scalar_components()
        .ok_or(Error::ClassificationUndefined)?;
    check_weights(t_weights)?;
    check_weights(i_weights)?;
    check_weights(f_weights)?;
    let split = |component: Value, weights: &[Value], prefix: &str| {
        weights
            .iter()
            .enumerate()
            .map(|(k, &w)| (format!("{prefix}{}", k + 1), Chance::clamped(component * w)))
            .collect()
    };
    RefinedNP::new(
        split(t, t_weights, "T"),
        split(i, i_weights, "I"),
        split(f, f_weights, "F"),
    )
}

/// How many distinguishable properties each component of a model offers.
/// A component refines only when it has at least two.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RefinementDescriptor {
    pub truth_properties: usize,
    pub indeterminacy_properties: usize,
    pub falsity_properties: usize,
}

impl RefinementDescriptor {
    /// Which of (T, I, F) can be refined.
    pub fn refinable_components(&self) -> (bool, bool, bool) {
        (
            self.truth_properties >= 2,
            self.indeterminacy_properties >= 2,
            self.falsity_properties >= 2,
        )
    }
}

/// Whether any component of the described model can be refined at all.
pub fn refinable(descriptor: &RefinementDescriptor) -> bool {
    let (t, i, f) = descriptor.refinable_components();
    t || i || f
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn chance(n: i128, d: i128) -> Chance {
        Chance::ratio(n, d).unwrap()
    }

    #[test]
    fn coarsen_trivial_refinement() {
        let r = RefinedNP::new(
            vec![("V".into(), chance(7, 10))],
            vec![("E".into(), chance(1, 10))],
            vec![("D".into(), chance(2, 10))],
        )
        .unwrap();
        let np = r.coarsen();
        let (t, i, f) = np.scalar_components().unwrap();
        assert_eq!(t, Value::ratio(7, 10));
        assert_eq!(i, Value::ratio(1, 10));
        assert_eq!(f, Value::ratio(2, 10));
    }

    #[test]
    fn coarsen_handball_fixture() {
        let np = fixtures::handball_refined().coarsen();
        let (t, i, f) = np.scalar_components().unwrap();
        assert_eq!(t, Value::ratio(7, 10));
        assert_eq!(i, Value::ratio(1, 10));
        assert_eq!(f, Value::ratio(2, 10));
    }

    #[test]
    fn coarsen_point_mass() {
        let r = RefinedNP::new(
            vec![("T1".into(), Chance::ONE), ("T2".into(), Chance::ZERO)],
            vec![("I1".into(), Chance::ZERO)],
            vec![("F1".into(), Chance::ZERO)],
        )
        .unwrap();
        let (t, i, f) = r.coarsen().scalar_components().unwrap();
        assert_eq!((t, i, f), (Value::ONE, Value::ZERO, Value::ZERO));
    }

    #[test]
    fn refine_distributes_weights() {
        let np = NeutrosophicProbability::scalar(
            Value::ratio(7, 10),
            Value::ratio(1, 10),
            Value::ratio(2, 10),
        )
        .unwrap();
        let r = refine(
            &np,
            &[
                Value::ratio(4, 7),
                Value::ratio(2, 7),
                Value::ratio(1, 14),
                Value::ratio(1, 14),
            ],
            &[Value::ONE],
            &[Value::ONE],
        )
        .unwrap();
        let t: Vec<Value> = r.t_parts().iter().map(|(_, c)| c.value()).collect();
        assert_eq!(t[0], Value::ratio(4, 10));
        assert_eq!(t[1], Value::ratio(2, 10));
        assert_eq!(t[2], Value::ratio(5, 100));
        assert_eq!(t[3], Value::ratio(5, 100));
        assert_eq!(r.n(), 6);
    }

    #[test]
    fn unit_weights_pass_through() {
        let np = NeutrosophicProbability::scalar_f64(0.3, 0.3, 0.4).unwrap();
        let r = refine(&np, &[Value::ONE], &[Value::ONE], &[Value::ONE]).unwrap();
        assert_eq!(r.n(), 3);
        assert_eq!(r.coarsen(), np);
    }

    #[test]
    fn zero_component_refines_to_zero_parts() {
        let np = NeutrosophicProbability::scalar_f64(0.0, 0.5, 0.5).unwrap();
        let r = refine(
            &np,
            &[Value::ratio(1, 2), Value::ratio(1, 2)],
            &[Value::ONE],
            &[Value::ONE],
        )
        .unwrap();
        for (_, c) in r.t_parts() {
            assert_eq!(c.value(), Value::ZERO);
        }
    }

    #[test]
    fn coarsen_inverts_refine() {
        let mut rng = crate::montecarlo::SplitMix64::new(59);
        for _ in 0..200 {
            let np = NeutrosophicProbability::scalar(
                Value::ratio((rng.next_u64() % 100) as i128, 100),
                Value::ratio((rng.next_u64() % 100) as i128, 100),
                Value::ratio((rng.next_u64() % 100) as i128, 100),
            )
            .unwrap();
            let weights = |rng: &mut crate::montecarlo::SplitMix64| {
                let k = 1 + (rng.next_u64() % 4) as usize;
                let raw: Vec<i128> = (0..k).map(|_| 1 + (rng.next_u64() % 9) as i128).collect();
                let total: i128 = raw.iter().sum();
                raw.into_iter()
                    .map(|w| Value::ratio(w, total))
                    .collect::<Vec<_>>()
            };
            let r = refine(
                &np,
                &weights(&mut rng),
                &weights(&mut rng),
                &weights(&mut rng),
            )
            .unwrap();
            // exact round trip on exact inputs
            assert_eq!(r.coarsen(), np);
        }
    }

    #[test]
    fn refine_rejects_bad_weights() {
        let np = NeutrosophicProbability::scalar_f64(0.5, 0.2, 0.3).unwrap();
        assert!(matches!(
            refine(&np, &[Value::ratio(1, 2)], &[Value::ONE], &[Value::ONE]),
            Err(Error::WeightSum(_))
        ));
        assert!(refine(&np, &[], &[Value::ONE], &[Value::ONE]).is_err());
        assert!(matches!(
            refine(
                &np,
                &[Value::from_int(2), Value::from_int(-1)],
                &[Value::ONE],
                &[Value::ONE]
            ),
            Err(Error::WeightSum(_))
        ));
    }

    #[test]
    fn refinability_by_descriptor() {
        // four erased faces on a regular surface: nothing distinguishes parts
        let erased = RefinementDescriptor {
            truth_properties: 1,
            indeterminacy_properties: 1,
            falsity_properties: 1,
        };
        assert!(!refinable(&erased));

        // regular die on a surface with small and deep cracks: only the
        // indeterminacy splits
        let cracked = RefinementDescriptor {
            truth_properties: 1,
            indeterminacy_properties: 2,
            falsity_properties: 1,
        };
        assert!(refinable(&cracked));
        assert_eq!(cracked.refinable_components(), (false, true, false));

        // handball score differences refine all three components
        let handball = RefinementDescriptor {
            truth_properties: 4,
            indeterminacy_properties: 3,
            falsity_properties: 3,
        };
        assert!(refinable(&handball));
        assert_eq!(handball.refinable_components(), (true, true, true));
    }
}
