//! JSON interchange for every value the CLI reads or writes.
//!
//! Scalars parse from a number, a `{"num": a, "den": b}` object, or an
//! `"a/b"` string; the object and string forms stay exact. On output, floats
//! are rounded to at most 12 significant digits; with `exact: true` any value
//! that is exactly rational renders as `{"num": a, "den": b}` instead.

use crate::chance::{Chance, IntervalChance, NeutrosophicProbability};
use crate::error::{Error, Result};
use crate::fusion::SubjectiveNP;
use crate::markov::{NeutroTransitionMatrix, Triple};
use crate::montecarlo::TrialLog;
use crate::refined::RefinedNP;
use crate::space::{NeutrosophicSampleSpace, PayoffSpec};
use crate::value::Value;
use serde_json::{json, Map, Value as Json};
use std::collections::BTreeMap;

/// Marks a count-map key as an indeterminacy class: `"I~indet": 2`.
pub const INDET_SUFFIX: &str = "~indet";

fn bad(detail: impl Into<String>) -> Error {
    Error::InvalidInput(detail.into())
}

/// Rounds to at most 12 significant digits so printed floats are stable.
fn round_sig(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    format!("{x:.11e}").parse().unwrap_or(x)
}

pub fn value_to_json(v: Value, exact: bool) -> Json {
    if exact {
        if let Some(r) = v.as_ratio() {
            return json!({ "num": r.numer() as i64, "den": r.denom() as i64 });
        }
    }
    json!(round_sig(v.to_f64()))
}

pub fn value_from_json(j: &Json) -> Result<Value> {
    match j {
        Json::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(Value::from_int(i as i128))
            } else {
                Ok(Value::Approx(n.as_f64().ok_or_else(|| bad("bad number"))?))
            }
        }
        Json::String(s) => Value::parse(s).ok_or_else(|| bad(format!("bad scalar {s:?}"))),
        Json::Object(map) => {
            let num = map
                .get("num")
                .and_then(Json::as_i64)
                .ok_or_else(|| bad("rational object needs an integer \"num\""))?;
            let den = map
                .get("den")
                .and_then(Json::as_i64)
                .ok_or_else(|| bad("rational object needs an integer \"den\""))?;
            if den == 0 {
                return Err(bad("rational denominator must be nonzero"));
            }
            Ok(Value::ratio(num as i128, den as i128))
        }
        other => Err(bad(format!("expected a scalar, found {other}"))),
    }
}

/// A component is a scalar (degenerate) or a two-element `[lo, hi]` array.
pub fn interval_to_json(iv: IntervalChance, exact: bool) -> Json {
    if iv.is_degenerate() {
        value_to_json(iv.lo(), exact)
    } else {
        json!([value_to_json(iv.lo(), exact), value_to_json(iv.hi(), exact)])
    }
}

pub fn interval_from_json(j: &Json) -> Result<IntervalChance> {
    if let Json::Array(items) = j {
        if items.len() != 2 {
            return Err(bad("an interval component is a two-element [lo, hi] array"));
        }
        return IntervalChance::new(value_from_json(&items[0])?, value_from_json(&items[1])?);
    }
    IntervalChance::degenerate(value_from_json(j)?)
}

pub fn probability_to_json(np: &NeutrosophicProbability, exact: bool) -> Json {
    json!({
        "t": interval_to_json(np.t(), exact),
        "i": interval_to_json(np.i(), exact),
        "f": interval_to_json(np.f(), exact),
    })
}

pub fn probability_from_json(j: &Json) -> Result<NeutrosophicProbability> {
    let map = j
        .as_object()
        .ok_or_else(|| bad("a probability triple is an object with t, i, f"))?;
    let get = |key: &str| {
        map.get(key)
            .ok_or_else(|| bad(format!("triple is missing component {key:?}")))
    };
    Ok(NeutrosophicProbability::new(
        interval_from_json(get("t")?)?,
        interval_from_json(get("i")?)?,
        interval_from_json(get("f")?)?,
    ))
}

pub fn subjective_to_json(np: &SubjectiveNP, exact: bool) -> Json {
    let mut map = Map::new();
    map.insert("t".into(), value_to_json(np.t.value(), exact));
    map.insert("i".into(), value_to_json(np.i.value(), exact));
    map.insert("f".into(), value_to_json(np.f.value(), exact));
    if !np.source_id.is_empty() {
        map.insert("source".into(), json!(np.source_id));
    }
    Json::Object(map)
}

pub fn subjective_from_json(j: &Json) -> Result<SubjectiveNP> {
    let map = j
        .as_object()
        .ok_or_else(|| bad("a subjective triple is an object with t, i, f"))?;
    let get = |key: &str| -> Result<Chance> {
        Chance::new(value_from_json(map.get(key).ok_or_else(|| {
            bad(format!("triple is missing component {key:?}"))
        })?)?)
    };
    let mut np = SubjectiveNP::new(get("t")?, get("i")?, get("f")?);
    if let Some(source) = map.get("source").and_then(Json::as_str) {
        np = np.with_source(source);
    }
    Ok(np)
}

/// Spaces render as the chance form, or the counts form when the space was
/// built from counts and the counts still cover the whole space.
pub fn space_to_json(space: &NeutrosophicSampleSpace, exact: bool) -> Json {
    if let Some((outcomes, indeterminacies)) = space.counts() {
        let declared: u64 = outcomes
            .iter()
            .chain(indeterminacies.iter())
            .map(|(_, c)| *c)
            .sum();
        let complete = space.is_complete();
        if complete && declared > 0 {
            let mut map = Map::new();
            for (label, count) in outcomes {
                map.insert(label, json!(count));
            }
            for (label, count) in indeterminacies {
                map.insert(format!("{label}{INDET_SUFFIX}"), json!(count));
            }
            return json!({ "counts": Json::Object(map) });
        }
    }
    let entries = |iter: Vec<(String, Chance)>| {
        Json::Array(
            iter.into_iter()
                .map(|(label, chance)| {
                    json!({ "label": label, "chance": value_to_json(chance.value(), exact) })
                })
                .collect(),
        )
    };
    json!({
        "outcomes": entries(space.outcomes().map(|(l, c)| (l.to_string(), c)).collect()),
        "indeterminacy": entries(space.indeterminacies().map(|(l, c)| (l.to_string(), c)).collect()),
    })
}

pub fn space_from_json(j: &Json) -> Result<NeutrosophicSampleSpace> {
    let map = j.as_object().ok_or_else(|| bad("a space is an object"))?;
    if let Some(counts) = map.get("counts") {
        let counts = counts
            .as_object()
            .ok_or_else(|| bad("\"counts\" must map labels to integers"))?;
        let mut outcomes = Vec::new();
        let mut indeterminacies = Vec::new();
        for (key, v) in counts {
            let count = v
                .as_u64()
                .ok_or_else(|| bad(format!("count for {key:?} must be a nonnegative integer")))?;
            match key.strip_suffix(INDET_SUFFIX) {
                Some(label) => indeterminacies.push((label.to_string(), count)),
                None => outcomes.push((key.clone(), count)),
            }
        }
        return NeutrosophicSampleSpace::from_counts(outcomes, indeterminacies);
    }
    let parse_entries = |key: &str, required: bool| -> Result<Vec<(String, Chance)>> {
        let Some(list) = map.get(key) else {
            if required {
                return Err(bad(format!("space is missing {key:?}")));
            }
            return Ok(Vec::new());
        };
        list.as_array()
            .ok_or_else(|| bad(format!("{key:?} must be an array")))?
            .iter()
            .map(|entry| {
                let obj = entry
                    .as_object()
                    .ok_or_else(|| bad("each entry needs label and chance"))?;
                let label = obj
                    .get("label")
                    .and_then(Json::as_str)
                    .ok_or_else(|| bad("entry is missing \"label\""))?;
                let chance = Chance::new(value_from_json(
                    obj.get("chance").ok_or_else(|| bad("entry is missing \"chance\""))?,
                )?)?;
                Ok((label.to_string(), chance))
            })
            .collect()
    };
    NeutrosophicSampleSpace::from_chances(
        parse_entries("outcomes", true)?,
        parse_entries("indeterminacy", false)?,
    )
}

pub fn matrix_to_json(matrix: &NeutroTransitionMatrix, exact: bool) -> Json {
    json!({
        "states": matrix.states(),
        "rows": matrix
            .rows()
            .iter()
            .map(|row| {
                row.iter()
                    .map(|e| {
                        json!([
                            value_to_json(e.t, exact),
                            value_to_json(e.i, exact),
                            value_to_json(e.f, exact),
                        ])
                    })
                    .collect::<Vec<_>>()
            })
            .collect::<Vec<_>>(),
    })
}

pub fn matrix_from_json(j: &Json) -> Result<NeutroTransitionMatrix> {
    let map = j.as_object().ok_or_else(|| bad("a matrix is an object"))?;
    let states: Vec<String> = map
        .get("states")
        .and_then(Json::as_array)
        .ok_or_else(|| bad("matrix is missing \"states\""))?
        .iter()
        .map(|s| {
            s.as_str()
                .map(str::to_string)
                .ok_or_else(|| bad("state labels must be strings"))
        })
        .collect::<Result<_>>()?;
    let rows = map
        .get("rows")
        .and_then(Json::as_array)
        .ok_or_else(|| bad("matrix is missing \"rows\""))?
        .iter()
        .map(|row| {
            row.as_array()
                .ok_or_else(|| bad("each matrix row is an array"))?
                .iter()
                .map(|entry| {
                    let parts = entry
                        .as_array()
                        .filter(|a| a.len() == 3)
                        .ok_or_else(|| bad("each entry is a [t, i, f] array"))?;
                    Triple::new(
                        value_from_json(&parts[0])?,
                        value_from_json(&parts[1])?,
                        value_from_json(&parts[2])?,
                    )
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    NeutroTransitionMatrix::new(states, rows)
}

pub fn payoffs_from_json(j: &Json) -> Result<PayoffSpec> {
    let map = j.as_object().ok_or_else(|| bad("payoffs are an object"))?;
    let section = |key: &str| -> Result<BTreeMap<String, Value>> {
        match map.get(key) {
            None => Ok(BTreeMap::new()),
            Some(obj) => obj
                .as_object()
                .ok_or_else(|| bad(format!("{key:?} must map labels to numbers")))?
                .iter()
                .map(|(label, v)| Ok((label.clone(), value_from_json(v)?)))
                .collect(),
        }
    };
    Ok(PayoffSpec {
        outcome_payoffs: section("outcomes")?,
        indeterminacy_payoffs: section("indeterminacy")?,
    })
}

pub fn log_to_json(log: &TrialLog) -> Json {
    json!({
        "counts": log.counts(),
        "total": log.total(),
        "outcome_labels": log.outcome_labels(),
        "indeterminacy_labels": log.indeterminacy_labels(),
    })
}

pub fn refined_to_json(refined: &RefinedNP, exact: bool) -> Json {
    let parts = |items: &[(String, Chance)]| {
        Json::Array(
            items
                .iter()
                .map(|(label, chance)| {
                    json!({ "label": label, "chance": value_to_json(chance.value(), exact) })
                })
                .collect(),
        )
    };
    json!({
        "T": parts(refined.t_parts()),
        "I": parts(refined.i_parts()),
        "F": parts(refined.f_parts()),
    })
}

pub fn refined_from_json(j: &Json) -> Result<RefinedNP> {
    let map = j.as_object().ok_or_else(|| bad("a refinement is an object"))?;
    let parts = |key: &str| -> Result<Vec<(String, Chance)>> {
        map.get(key)
            .and_then(Json::as_array)
            .ok_or_else(|| bad(format!("refinement is missing {key:?}")))?
            .iter()
            .map(|entry| {
                let obj = entry
                    .as_object()
                    .ok_or_else(|| bad("each part needs label and chance"))?;
                Ok((
                    obj.get("label")
                        .and_then(Json::as_str)
                        .ok_or_else(|| bad("part is missing \"label\""))?
                        .to_string(),
                    Chance::new(value_from_json(
                        obj.get("chance")
                            .ok_or_else(|| bad("part is missing \"chance\""))?,
                    )?)?,
                ))
            })
            .collect()
    };
    RefinedNP::new(parts("T")?, parts("I")?, parts("F")?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn scalar_forms_round_trip() {
        for text in ["0.15", "\"3/20\"", "{\"num\":3,\"den\":20}", "1"] {
            let j: Json = serde_json::from_str(text).unwrap();
            let v = value_from_json(&j).unwrap();
            assert!((v.to_f64() - 0.15).abs() < 1e-12 || v.to_f64() == 1.0);
        }
        assert!(value_from_json(&json!({"num": 1, "den": 0})).is_err());
        assert!(value_from_json(&json!(null)).is_err());
    }

    #[test]
    fn exact_mode_prints_rationals() {
        let v = Value::ratio(15, 90);
        assert_eq!(value_to_json(v, true), json!({"num": 1, "den": 6}));
        assert_eq!(value_to_json(v, false), json!(0.166666666667));
        // floats stay floats even in exact mode
        assert_eq!(value_to_json(Value::Approx(0.5), true), json!(0.5));
    }

    #[test]
    fn significant_digit_rounding() {
        assert_eq!(round_sig(0.4409696969696969), 0.44096969697);
        assert_eq!(round_sig(0.15), 0.15);
        assert_eq!(round_sig(0.0), 0.0);
    }

    #[test]
    fn triple_round_trip() {
        let np = NeutrosophicProbability::new(
            IntervalChance::ratio(18, 52, 24, 52).unwrap(),
            IntervalChance::ratio(2, 52, 2, 52).unwrap(),
            IntervalChance::ratio(26, 52, 32, 52).unwrap(),
        );
        let j = probability_to_json(&np, true);
        assert_eq!(probability_from_json(&j).unwrap(), np);
    }

    #[test]
    fn space_round_trips_both_forms() {
        let urn = fixtures::urn_5_2_3();
        let j = space_to_json(&urn, false);
        assert_eq!(space_from_json(&j).unwrap(), urn);
        // counts form keeps counts
        assert!(j.get("counts").is_some());

        let die = fixtures::die_frequentist_exact();
        let j = space_to_json(&die, true);
        assert_eq!(space_from_json(&j).unwrap(), die);
        assert!(j.get("outcomes").is_some());
    }

    #[test]
    fn canonical_space_json_is_stable() {
        let die = fixtures::die_frequentist_float();
        let once = serde_json::to_string(&space_to_json(&die, false)).unwrap();
        let reparsed = space_from_json(&serde_json::from_str(&once).unwrap()).unwrap();
        let twice = serde_json::to_string(&space_to_json(&reparsed, false)).unwrap();
        assert_eq!(once, twice);
    }

    #[test]
    fn matrix_round_trip() {
        let m = fixtures::markov_economy();
        let j = matrix_to_json(&m, true);
        assert_eq!(matrix_from_json(&j).unwrap(), m);
    }

    #[test]
    fn refined_round_trip() {
        let r = fixtures::handball_refined();
        let j = refined_to_json(&r, true);
        assert_eq!(refined_from_json(&j).unwrap(), r);
    }

    #[test]
    fn counts_suffix_marks_indeterminacy() {
        let j = json!({"counts": {"A": 5, "I~indet": 2, "B": 3}});
        let space = space_from_json(&j).unwrap();
        assert_eq!(space.indeterminacies().count(), 1);
        assert_eq!(space.indeterminacy_total(), Value::ratio(2, 10));
    }
}
