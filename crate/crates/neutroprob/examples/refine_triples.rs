//! Refining a triple into labeled sub-chances and coarsening back.

use neutroprob::chance::NeutrosophicProbability;
use neutroprob::fixtures;
use neutroprob::refined::{refinable, refine, RefinementDescriptor};
use neutroprob::value::Value;

fn main() -> neutroprob::Result<()> {
    let handball = fixtures::handball_refined();
    println!("handball refinement of NP(win) = (0.7, 0.1, 0.2):");
    for (label, chance) in handball.t_parts() {
        println!("  T  {label:18} {chance}");
    }
    for (label, chance) in handball.i_parts() {
        println!("  I  {label:18} {chance}");
    }
    for (label, chance) in handball.f_parts() {
        println!("  F  {label:18} {chance}");
    }
    println!("coarsened back: {}", handball.coarsen());

    // weight-driven refinement of a fresh triple
    let np = NeutrosophicProbability::scalar(
        Value::ratio(7, 10),
        Value::ratio(1, 10),
        Value::ratio(2, 10),
    )?;
    let refined = refine(
        &np,
        &[
            Value::ratio(4, 7),
            Value::ratio(2, 7),
            Value::ratio(1, 14),
            Value::ratio(1, 14),
        ],
        &[Value::ONE],
        &[Value::ratio(1, 2), Value::ratio(1, 2)],
    )?;
    println!("\nsplitting {np} over weights gives {} parts:", refined.n());
    for (label, chance) in refined.t_parts() {
        println!("  {label}: {chance}");
    }

    // which models can be refined at all
    let erased_die = RefinementDescriptor {
        truth_properties: 1,
        indeterminacy_properties: 1,
        falsity_properties: 1,
    };
    let cracked_surface = RefinementDescriptor {
        truth_properties: 1,
        indeterminacy_properties: 2,
        falsity_properties: 1,
    };
    println!("\nfour-erased-faces die refinable: {}", refinable(&erased_die));
    println!(
        "die over small and deep cracks refinable: {} (components: {:?})",
        refinable(&cracked_surface),
        cracked_surface.refinable_components()
    );
    Ok(())
}
