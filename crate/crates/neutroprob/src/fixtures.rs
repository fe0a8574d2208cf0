//! Named example inputs: the spaces, triples, matrices, and logs behind the
//! classic worked examples of the calculus, ready to load from the CLI via
//! `--fixture <name>`.
//!
//! Also hosts the typo ledger: worked values in circulation for these
//! examples that do not follow from their own stated definitions, with the
//! recomputed counterparts this library produces.

use crate::chance::{Chance, NeutrosophicProbability};
use crate::fusion::SubjectiveNP;
use crate::markov::{NeutroTransitionMatrix, Triple};
use crate::measure::NeutrosophicMeasure;
use crate::montecarlo::TrialLog;
use crate::refined::RefinedNP;
use crate::space::{NeutrosophicEvent, NeutrosophicSampleSpace, PayoffSpec};
use crate::value::Value;
use std::collections::BTreeMap;

fn chance(num: i128, den: i128) -> Chance {
    Chance::ratio(num, den).expect("fixture chance")
}

/// Regular die on an irregular surface, indeterminacy chance 0.10: each face
/// carries (1 - 0.10) / 6 = 3/20 exactly.
pub fn die_frequentist_exact() -> NeutrosophicSampleSpace {
    NeutrosophicSampleSpace::from_chances(
        (1..=6).map(|k| (k.to_string(), chance(15, 100))).collect(),
        vec![("indeterm".into(), chance(10, 100))],
    )
    .expect("fixture space")
}

/// Same die with float chances, for float-mode tolerance checks.
pub fn die_frequentist_float() -> NeutrosophicSampleSpace {
    NeutrosophicSampleSpace::from_chances(
        (1..=6)
            .map(|k| (k.to_string(), Chance::from_f64(0.15).unwrap()))
            .collect(),
        vec![("indeterm".into(), Chance::from_f64(0.10).unwrap())],
    )
    .expect("fixture space")
}

/// Die with faces 5 and 6 erased, tossed on a regular surface. The erased
/// faces stay in the space as zero-chance outcomes: asking for them is valid
/// and yields zero truth.
pub fn die_erased_two() -> NeutrosophicSampleSpace {
    NeutrosophicSampleSpace::from_counts(
        (1..=6)
            .map(|k| (k.to_string(), if k <= 4 { 1 } else { 0 }))
            .collect(),
        vec![("indeterm".into(), 2)],
    )
    .expect("fixture space")
}

/// Die with faces 4, 5, 6 erased; removing its indeterminacy leaves a space
/// of total chance 1/2.
pub fn die_erased_three_exact() -> NeutrosophicSampleSpace {
    NeutrosophicSampleSpace::from_counts(
        (1..=3).map(|k| (k.to_string(), 1)).collect(),
        vec![("indeterm".into(), 3)],
    )
    .expect("fixture space")
}

/// Die with four erased faces on a regular surface; only 5 and 6 readable.
pub fn die_erased_four() -> NeutrosophicSampleSpace {
    NeutrosophicSampleSpace::from_counts(
        vec![("5".into(), 1), ("6".into(), 1)],
        vec![("indeterm".into(), 4)],
    )
    .expect("fixture space")
}

/// Defect die (faces 5, 6 erased) on an irregular surface: indeterminacy from
/// the die at 0.30 plus indeterminacy from the surface at 0.10.
pub fn die_double_indeterminacy() -> NeutrosophicSampleSpace {
    NeutrosophicSampleSpace::from_chances(
        (1..=4).map(|k| (k.to_string(), chance(15, 100))).collect(),
        vec![
            ("indeterm_d".into(), chance(30, 100)),
            ("indeterm_s".into(), chance(10, 100)),
        ],
    )
    .expect("fixture space")
}

/// Fair coin flipped on a cracked surface: stuck-on-edge chance 0.02.
pub fn coin_cracked_exact() -> NeutrosophicSampleSpace {
    NeutrosophicSampleSpace::from_chances(
        vec![("H".into(), chance(49, 100)), ("T".into(), chance(49, 100))],
        vec![("I".into(), chance(2, 100))],
    )
    .expect("fixture space")
}

const SUITS: [char; 4] = ['H', 'S', 'D', 'C'];
const RANKS: [&str; 13] = [
    "A", "2", "3", "4", "5", "6", "7", "8", "9", "10", "J", "Q", "K",
];

/// 52-card deck with two unreadable cards (neither face nor heart): 50
/// readable cards at 1/52 each plus a 2/52 indeterminacy.
pub fn deck_damaged() -> NeutrosophicSampleSpace {
    let mut outcomes = Vec::new();
    for suit in SUITS {
        for rank in RANKS {
            let label = format!("{rank}{suit}");
            // the two damaged cards are spot cards outside hearts
            if label == "2S" || label == "3S" {
                continue;
            }
            outcomes.push((label, 1u64));
        }
    }
    NeutrosophicSampleSpace::from_counts(outcomes, vec![("damaged".into(), 2)])
        .expect("fixture space")
}

/// The twelve face cards of the deck.
pub fn deck_face_event() -> NeutrosophicEvent {
    NeutrosophicEvent::new(
        SUITS
            .iter()
            .flat_map(|s| ["J", "Q", "K"].iter().map(move |r| format!("{r}{s}"))),
    )
}

/// The thirteen hearts of the deck.
pub fn deck_heart_event() -> NeutrosophicEvent {
    NeutrosophicEvent::new(RANKS.iter().map(|r| format!("{r}H")))
}

/// Urn with 5 A-votes, 2 unreadable votes, 3 B-votes.
pub fn urn_5_2_3() -> NeutrosophicSampleSpace {
    NeutrosophicSampleSpace::from_counts(
        vec![("A".into(), 5), ("B".into(), 3)],
        vec![("I".into(), 2)],
    )
    .expect("fixture space")
}

pub fn urn_a_event() -> NeutrosophicEvent {
    NeutrosophicEvent::new(["A"])
}

pub fn urn_b_event() -> NeutrosophicEvent {
    NeutrosophicEvent::new(["B"])
}

/// Lose $2 per A-vote, gain $3 per B-vote, lose $1 per unreadable vote.
pub fn urn_payoffs() -> PayoffSpec {
    PayoffSpec {
        outcome_payoffs: BTreeMap::from([
            ("A".to_string(), Value::from_int(-2)),
            ("B".to_string(), Value::from_int(3)),
        ]),
        indeterminacy_payoffs: BTreeMap::from([("I".to_string(), Value::from_int(-1))]),
    }
}

/// Spinner over [0, 360] degrees with the fourth quadrant erased, reduced to
/// discrete arc regions so that the [90, 100] band is its own outcome.
pub fn spinner() -> NeutrosophicSampleSpace {
    NeutrosophicSampleSpace::from_counts(
        vec![
            ("0-90".into(), 90),
            ("90-100".into(), 10),
            ("100-180".into(), 80),
            ("180-270".into(), 90),
        ],
        vec![("270-360".into(), 90)],
    )
    .expect("fixture space")
}

/// Two-candidate election triple as printed: (0.46, 0.09, 0.045).
pub fn election_printed() -> NeutrosophicProbability {
    NeutrosophicProbability::scalar_f64(0.46, 0.09, 0.045).expect("fixture triple")
}

/// The same election with the anti chance read from the prose: 0.45.
pub fn election_prose() -> NeutrosophicProbability {
    NeutrosophicProbability::scalar_f64(0.46, 0.09, 0.45).expect("fixture triple")
}

/// Two observers' subjective estimates of a detected satellite.
pub fn satellite_pair() -> (SubjectiveNP, SubjectiveNP) {
    (
        SubjectiveNP::from_f64(0.6, 0.1, 0.3).unwrap().with_source("observer-1"),
        SubjectiveNP::from_f64(0.2, 0.3, 0.5).unwrap().with_source("observer-2"),
    )
}

/// Two experts' reports on a vehicle in a warzone.
pub fn vehicle_pair() -> (SubjectiveNP, SubjectiveNP) {
    (
        SubjectiveNP::from_f64(0.4, 0.1, 0.5).unwrap().with_source("expert-1"),
        SubjectiveNP::from_f64(0.3, 0.5, 0.2).unwrap().with_source("expert-2"),
    )
}

/// Win/tie/lose forecasts for two soccer teams playing separate games.
pub fn soccer_pair() -> (SubjectiveNP, SubjectiveNP) {
    (
        SubjectiveNP::from_f64(0.7, 0.2, 0.1).unwrap().with_source("alpha"),
        SubjectiveNP::from_f64(0.3, 0.5, 0.2).unwrap().with_source("gamma"),
    )
}

/// World-economy transition matrix over prosperity, recession, depression.
pub fn markov_economy() -> NeutroTransitionMatrix {
    let t = |t: (i128, i128), i: (i128, i128), f: (i128, i128)| {
        Triple::ratio(t, i, f).expect("fixture triple")
    };
    NeutroTransitionMatrix::new(
        vec!["P".into(), "R".into(), "D".into()],
        vec![
            vec![
                t((40, 100), (10, 100), (0, 100)),
                t((20, 100), (0, 100), (10, 100)),
                t((10, 100), (5, 100), (5, 100)),
            ],
            vec![
                t((19, 100), (3, 100), (8, 100)),
                t((35, 100), (5, 100), (0, 100)),
                t((24, 100), (3, 100), (4, 100)),
            ],
            vec![
                t((7, 100), (3, 100), (10, 100)),
                t((27, 100), (9, 100), (4, 100)),
                t((32, 100), (6, 100), (2, 100)),
            ],
        ],
    )
    .expect("fixture matrix")
}

/// Handball score-difference refinement of the coarse triple (0.7, 0.1, 0.2).
/// The truth parts are a reconstruction summing to 0.7; the printed source
/// digits do not (see the typo ledger).
pub fn handball_refined() -> RefinedNP {
    let c = |n: i128, d: i128| chance(n, d);
    RefinedNP::new(
        vec![
            ("win-by-1".into(), c(40, 100)),
            ("win-by-2".into(), c(20, 100)),
            ("win-by-3".into(), c(5, 100)),
            ("win-by-4-or-more".into(), c(5, 100)),
        ],
        vec![
            ("tie-0-0-or-1-1".into(), c(3, 100)),
            ("tie-2-2".into(), c(5, 100)),
            ("tie-3-3-or-more".into(), c(2, 100)),
        ],
        vec![
            ("lose-by-1".into(), c(10, 100)),
            ("lose-by-2".into(), c(8, 100)),
            ("lose-by-3-or-more".into(), c(2, 100)),
        ],
    )
    .expect("fixture refinement")
}

/// A 100-sheet book with 3 sheets missing, measured in sheets.
pub fn book_measure() -> NeutrosophicMeasure {
    NeutrosophicMeasure::new(97.0, 3.0, 0.0).unwrap()
}

/// A 5x5 m surface with 0.02 square meters of cracks.
pub fn surface_measure() -> NeutrosophicMeasure {
    NeutrosophicMeasure::new(24.98, 0.02, 0.0).unwrap()
}

/// A die with two erased faces, measured in readable faces.
pub fn die_measure() -> NeutrosophicMeasure {
    NeutrosophicMeasure::new(4.0, 2.0, 0.0).unwrap()
}

/// Truth-value of the parallel postulate across Euclidean, Riemannian, and
/// mixed geometries.
pub fn geometry_truth_measure() -> NeutrosophicMeasure {
    NeutrosophicMeasure::new(1.0, 1.0, 1.0).unwrap()
}

/// Five recorded die tosses: 2, 5, 1, indeterminacy, 4.
pub fn survey_tosses() -> TrialLog {
    TrialLog::from_counts(
        BTreeMap::from([
            ("1".to_string(), 1),
            ("2".to_string(), 1),
            ("4".to_string(), 1),
            ("5".to_string(), 1),
            ("indeterm".to_string(), 1),
        ]),
        (1..=6).map(|k| k.to_string()).collect(),
        vec!["indeterm".to_string()],
    )
    .expect("fixture log")
}

/// What kind of input a fixture provides.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FixtureKind {
    Space,
    SpaceList,
    Triple,
    TriplePair,
    Matrix,
    Refined,
    TrialLog,
    Measure,
}

impl FixtureKind {
    pub fn as_str(self) -> &'static str {
        match self {
            FixtureKind::Space => "space",
            FixtureKind::SpaceList => "space-list",
            FixtureKind::Triple => "triple",
            FixtureKind::TriplePair => "triple-pair",
            FixtureKind::Matrix => "matrix",
            FixtureKind::Refined => "refined",
            FixtureKind::TrialLog => "trial-log",
            FixtureKind::Measure => "measure",
        }
    }
}

/// One named fixture.
#[derive(Clone, Copy, Debug)]
pub struct FixtureEntry {
    pub name: &'static str,
    pub kind: FixtureKind,
    pub description: &'static str,
}

/// Every fixture, sorted by name; the enumeration order is stable.
pub fn fixtures() -> Vec<FixtureEntry> {
    let mut list = vec![
        FixtureEntry {
            name: "book-measure",
            kind: FixtureKind::Measure,
            description: "100-sheet book with 3 missing sheets: (97, 3, 0)",
        },
        FixtureEntry {
            name: "coin-cracked",
            kind: FixtureKind::Space,
            description: "fair coin on a cracked surface, edge chance 0.02",
        },
        FixtureEntry {
            name: "coin-cubed",
            kind: FixtureKind::SpaceList,
            description: "three independent flips of the cracked-surface coin",
        },
        FixtureEntry {
            name: "deck-damaged",
            kind: FixtureKind::Space,
            description: "52-card deck with 2 unreadable non-face non-heart cards",
        },
        FixtureEntry {
            name: "dice-pair",
            kind: FixtureKind::SpaceList,
            description: "two independent tosses of the frequentist die",
        },
        FixtureEntry {
            name: "die-double-indeterminacy",
            kind: FixtureKind::Space,
            description: "defect die (0.30) on an irregular surface (0.10)",
        },
        FixtureEntry {
            name: "die-erased-four",
            kind: FixtureKind::Space,
            description: "die with four erased faces on a regular surface",
        },
        FixtureEntry {
            name: "die-erased-three",
            kind: FixtureKind::Space,
            description: "die with faces 4, 5, 6 erased; total halves without indeterminacy",
        },
        FixtureEntry {
            name: "die-erased-two",
            kind: FixtureKind::Space,
            description: "die with faces 5 and 6 erased on a regular surface",
        },
        FixtureEntry {
            name: "die-frequentist",
            kind: FixtureKind::Space,
            description: "regular die on an irregular surface, indeterminacy 0.10",
        },
        FixtureEntry {
            name: "die-measure",
            kind: FixtureKind::Measure,
            description: "die with two erased faces, in faces: (4, 2, 0)",
        },
        FixtureEntry {
            name: "election-printed",
            kind: FixtureKind::Triple,
            description: "two-candidate election triple as printed: (0.46, 0.09, 0.045)",
        },
        FixtureEntry {
            name: "election-prose",
            kind: FixtureKind::Triple,
            description: "the same election with the prose reading: (0.46, 0.09, 0.45)",
        },
        FixtureEntry {
            name: "geometry-truth",
            kind: FixtureKind::Measure,
            description: "parallel postulate across mixed geometries: (1, 1, 1)",
        },
        FixtureEntry {
            name: "handball-refined",
            kind: FixtureKind::Refined,
            description: "score-difference refinement of (0.7, 0.1, 0.2)",
        },
        FixtureEntry {
            name: "markov-economy",
            kind: FixtureKind::Matrix,
            description: "prosperity/recession/depression transition triples",
        },
        FixtureEntry {
            name: "satellite",
            kind: FixtureKind::TriplePair,
            description: "two observers rating a satellite: (0.6,0.1,0.3) and (0.2,0.3,0.5)",
        },
        FixtureEntry {
            name: "soccer",
            kind: FixtureKind::TriplePair,
            description: "win/tie/lose forecasts for teams Alpha and Gamma",
        },
        FixtureEntry {
            name: "spinner",
            kind: FixtureKind::Space,
            description: "spinner with the fourth quadrant erased, as arc regions",
        },
        FixtureEntry {
            name: "surface-measure",
            kind: FixtureKind::Measure,
            description: "5x5 m surface with 0.02 m^2 of cracks: (24.98, 0.02, 0)",
        },
        FixtureEntry {
            name: "survey-tosses",
            kind: FixtureKind::TrialLog,
            description: "five recorded tosses: 2, 5, 1, indeterminacy, 4",
        },
        FixtureEntry {
            name: "urn-5-2-3",
            kind: FixtureKind::Space,
            description: "urn with 5 A-votes, 2 unreadable votes, 3 B-votes",
        },
        FixtureEntry {
            name: "vehicle",
            kind: FixtureKind::TriplePair,
            description: "two experts rating a vehicle: (0.4,0.1,0.5) and (0.3,0.5,0.2)",
        },
    ];
    list.sort_by_key(|e| e.name);
    list
}

pub fn fixture_space(name: &str) -> Option<NeutrosophicSampleSpace> {
    match name {
        "die-frequentist" => Some(die_frequentist_exact()),
        "die-erased-two" => Some(die_erased_two()),
        "die-erased-three" => Some(die_erased_three_exact()),
        "die-erased-four" => Some(die_erased_four()),
        "die-double-indeterminacy" => Some(die_double_indeterminacy()),
        "coin-cracked" => Some(coin_cracked_exact()),
        "deck-damaged" => Some(deck_damaged()),
        "urn-5-2-3" => Some(urn_5_2_3()),
        "spinner" => Some(spinner()),
        _ => None,
    }
}

pub fn fixture_space_list(name: &str) -> Option<Vec<NeutrosophicSampleSpace>> {
    match name {
        "dice-pair" => Some(vec![die_frequentist_exact(), die_frequentist_exact()]),
        "coin-cubed" => Some(vec![
            coin_cracked_exact(),
            coin_cracked_exact(),
            coin_cracked_exact(),
        ]),
        _ => None,
    }
}

pub fn fixture_triple(name: &str) -> Option<NeutrosophicProbability> {
    match name {
        "election-printed" => Some(election_printed()),
        "election-prose" => Some(election_prose()),
        _ => None,
    }
}

pub fn fixture_triple_pair(name: &str) -> Option<(SubjectiveNP, SubjectiveNP)> {
    match name {
        "satellite" => Some(satellite_pair()),
        "vehicle" => Some(vehicle_pair()),
        "soccer" => Some(soccer_pair()),
        _ => None,
    }
}

pub fn fixture_matrix(name: &str) -> Option<NeutroTransitionMatrix> {
    match name {
        "markov-economy" => Some(markov_economy()),
        _ => None,
    }
}

pub fn fixture_refined(name: &str) -> Option<RefinedNP> {
    match name {
        "handball-refined" => Some(handball_refined()),
        _ => None,
    }
}

pub fn fixture_log(name: &str) -> Option<TrialLog> {
    match name {
        "survey-tosses" => Some(survey_tosses()),
        _ => None,
    }
}

pub fn fixture_measure(name: &str) -> Option<NeutrosophicMeasure> {
    match name {
        "book-measure" => Some(book_measure()),
        "surface-measure" => Some(surface_measure()),
        "die-measure" => Some(die_measure()),
        "geometry-truth" => Some(geometry_truth_measure()),
        _ => None,
    }
}

/// A worked value in circulation whose own arithmetic does not check out,
/// with the value recomputed from the stated definitions.
#[derive(Clone, Copy, Debug)]
pub struct TypoEntry {
    pub location: &'static str,
    pub printed: &'static str,
    pub recomputed: &'static str,
    pub note: &'static str,
}

/// Inconsistencies in the commonly printed numbers for these worked examples.
/// The library always computes from the stated definitions, never from the
/// printed values.
pub fn typo_ledger() -> &'static [TypoEntry] {
    &[
        TypoEntry {
            location: "economy matrix squared, entry (1,1) middle component",
            printed: "0.050",
            recomputed: "0.03",
            note: "min over {0.10, 0.03, 0.05} is 0.03 under the stated addition operator",
        },
        TypoEntry {
            location: "economy matrix squared, entry (1,2) first component",
            printed: "0.277",
            recomputed: "0.177",
            note: "its own summands 0.080 + 0.070 + 0.027 total 0.177",
        },
        TypoEntry {
            location: "economy matrix squared, entry (1,3)",
            printed: "(0.084, 0.020, 0.050)",
            recomputed: "(0.120, 0.03, 0.05)",
            note: "first summand should be 0.40*0.10 = 0.040, not 0.004; middle of second term is max{0.00, 0.03} = 0.03",
        },
        TypoEntry {
            location: "economy matrix squared, entry (2,1) middle component (inline sum)",
            printed: "0.003",
            recomputed: "0.03",
            note: "min over {0.10, 0.05, 0.03}; the assembled matrix prints 0.03 correctly",
        },
        TypoEntry {
            location: "economy matrix squared, entry (2,2) first component (inline sum)",
            printed: "0.253",
            recomputed: "0.2253",
            note: "0.038 + 0.1225 + 0.0648; the assembled matrix prints 0.2253 correctly",
        },
        TypoEntry {
            location: "min/max pessimistic fusion, normalized result",
            printed: "(3/15, 5/15, 5/15)",
            recomputed: "(3/13, 5/13, 5/13)",
            note: "(0.3, 0.5, 0.5) sums to 1.3; the printed denominators divide by 1.5",
        },
        TypoEntry {
            location: "handball refinement, truth parts",
            printed: "(0.4, 0.2, 0.5, 0.05, 0, ...)",
            recomputed: "(0.4, 0.2, 0.05, 0.05)",
            note: "printed parts sum to 1.15, not the stated coarse chance 0.7; the fixture uses a reconstruction",
        },
        TypoEntry {
            location: "election example, anti chance",
            printed: "0.045",
            recomputed: "0.45",
            note: "the prose gives candidate B a 0.45 chance; both readings ship as fixtures",
        },
        TypoEntry {
            location: "soccer forecast for team Alpha",
            printed: "(0.7, 0.2, 0.1) vs prose '0.6 chance to win'",
            recomputed: "(0.7, 0.2, 0.1)",
            note: "the numeric triple is used; the prose disagrees with it",
        },
        TypoEntry {
            location: "urn multiplication rule, third component formula",
            printed: "ch(A)ch(A|A) + ch(B)ch(A|B) + ch(B)ch(B|B)",
            recomputed: "1 - t - i",
            note: "the garbled formula is replaced by complement arithmetic, which reproduces the worked 41/90",
        },
        TypoEntry {
            location: "urn multiplication rule, listed conditional ch(A|B)",
            printed: "5/4",
            recomputed: "5/9",
            note: "a chance cannot exceed 1; with one vote removed the denominator is 9",
        },
        TypoEntry {
            location: "Bayes worked example, denominator inside the fraction",
            printed: "ch(B) = 2/3",
            recomputed: "ch(B) = 3/10",
            note: "the final result (5/9, 2/9, 2/9) is nevertheless correct",
        },
        TypoEntry {
            location: "two-dice joint chance, inline product",
            printed: "0.15(0.15) = 0.00225",
            recomputed: "0.0225",
            note: "the assembled triple prints 0.0225 correctly",
        },
        TypoEntry {
            location: "two-space joint formula, middle component",
            printed: "I_1 + I_1 - I, I_2",
            recomputed: "I_1 + I_2 - I_1*I_2",
            note: "read per the s-space symmetric-sum formula it specializes",
        },
        TypoEntry {
            location: "disjoint measure addition, third component operands",
            printed: "a_3 + b_3 - m(X) over operands named (a_1, b_1, c_1), (a_2, b_2, c_2)",
            recomputed: "c_1 + c_2 - m(X)",
            note: "read consistently with the anti-intersection identity alongside it",
        },
        TypoEntry {
            location: "pessimistic scheme, cross-term inventory",
            printed: "F_1N_1 and F_2N_1",
            recomputed: "F_1N_2 and F_2N_1",
            note: "read as the off-diagonal cross terms of the nine-term expansion",
        },
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixture_registry_is_complete_and_sorted() {
        let all = fixtures();
        let names: Vec<&str> = all.iter().map(|e| e.name).collect();
        let mut sorted = names.clone();
        sorted.sort();
        assert_eq!(names, sorted);
        for entry in &all {
            let found = match entry.kind {
                FixtureKind::Space => fixture_space(entry.name).is_some(),
                FixtureKind::SpaceList => fixture_space_list(entry.name).is_some(),
                FixtureKind::Triple => fixture_triple(entry.name).is_some(),
                FixtureKind::TriplePair => fixture_triple_pair(entry.name).is_some(),
                FixtureKind::Matrix => fixture_matrix(entry.name).is_some(),
                FixtureKind::Refined => fixture_refined(entry.name).is_some(),
                FixtureKind::TrialLog => fixture_log(entry.name).is_some(),
                FixtureKind::Measure => fixture_measure(entry.name).is_some(),
            };
            assert!(found, "fixture {} has no loader", entry.name);
        }
    }

    #[test]
    fn deck_composition() {
        let deck = deck_damaged();
        assert_eq!(deck.outcomes().count(), 50);
        assert_eq!(deck_face_event().len(), 12);
        assert_eq!(deck_heart_event().len(), 13);
        assert_eq!(
            deck_face_event().intersection(&deck_heart_event()).len(),
            3
        );
        assert_eq!(deck.total(), Value::ONE);
    }

    #[test]
    fn spinner_event_probability() {
        let space = spinner();
        let np = space
            .probability(&NeutrosophicEvent::new(["90-100"]))
            .unwrap();
        let (t, i, f) = np.scalar_components().unwrap();
        assert_eq!(t, Value::ratio(10, 360));
        assert_eq!(i, Value::ratio(90, 360));
        assert_eq!(f, Value::ratio(260, 360));
    }

    #[test]
    fn double_indeterminacy_die() {
        let space = die_double_indeterminacy();
        let np = space.probability(&NeutrosophicEvent::new(["1"])).unwrap();
        let (t, i, f) = np.scalar_components().unwrap();
        assert_eq!(t, Value::ratio(15, 100));
        assert_eq!(i, Value::ratio(40, 100));
        assert_eq!(f, Value::ratio(45, 100));
    }

    #[test]
    fn erased_four_die_matches_its_triple() {
        let np = die_erased_four()
            .probability(&NeutrosophicEvent::new(["5"]))
            .unwrap();
        let (t, i, f) = np.scalar_components().unwrap();
        assert_eq!(t, Value::ratio(1, 6));
        assert_eq!(i, Value::ratio(4, 6));
        assert_eq!(f, Value::ratio(1, 6));
    }

    #[test]
    fn election_fixture_classifications() {
        use crate::chance::CompletenessClass;
        assert_eq!(
            election_printed().classify().unwrap(),
            CompletenessClass::Incomplete
        );
        assert_eq!(
            election_prose().classify().unwrap(),
            CompletenessClass::Complete
        );
    }

    #[test]
    fn typo_ledger_is_nonempty() {
        assert!(typo_ledger().len() >= 10);
    }
}
