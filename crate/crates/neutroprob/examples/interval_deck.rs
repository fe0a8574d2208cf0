//! Imprecise chances as intervals: a deck with two unreadable cards whose
//! identities are unknown, plus interval arithmetic on weather forecasts.

use neutroprob::chance::{Chance, IntervalChance, NeutrosophicProbability};
use neutroprob::fixtures;
use neutroprob::space::union_interval;
use neutroprob::value::Value;

fn main() -> neutroprob::Result<()> {
    let deck = fixtures::deck_damaged();
    let face = fixtures::deck_face_event();
    let heart = fixtures::deck_heart_event();
    println!("52-card deck, 2 unreadable cards known to be spot cards:\n");
    println!("NP(face or heart) = {}", deck.union(&face, &heart)?);

    // if the two damaged cards could be anywhere, the chances widen
    println!("\nif the damaged cards could be any card:");
    let triple = |lo: i128, hi: i128, flo: i128, fhi: i128| {
        Ok::<_, neutroprob::Error>(NeutrosophicProbability::new(
            IntervalChance::ratio(lo, 52, hi, 52)?,
            IntervalChance::ratio(2, 52, 2, 52)?,
            IntervalChance::ratio(flo, 52, fhi, 52)?,
        ))
    };
    let np_face = triple(10, 12, 38, 40)?;
    let np_heart = triple(11, 13, 37, 39)?;
    let np_both = triple(1, 3, 47, 49)?;
    println!("NP(face)  = {np_face}");
    println!("NP(heart) = {np_heart}");
    let union = union_interval(
        &np_face,
        &np_heart,
        &np_both,
        IntervalChance::ratio(2, 52, 2, 52)?,
        Chance::ONE,
    );
    println!("NP(face or heart) = {union}");

    println!("\nimprecise weather forecast, sunny [0.1,0.2], snowfall [0.3,0.6]:");
    let sunny = IntervalChance::new(Value::Approx(0.1), Value::Approx(0.2))?;
    let snow = IntervalChance::new(Value::Approx(0.3), Value::Approx(0.6))?;
    println!("ch(sunny or snowfall)  = {}", sunny.add(snow));
    println!("ch(sunny and snowfall) = {}", sunny.mul(snow));
    println!("ch(not sunny)          = {}", sunny.complement());
    let (det, bound) = sunny.to_indeterminate_form();
    println!("sunny as determinate + indeterminacy: {det} + i, i in [0, {bound}]");
    Ok(())
}
