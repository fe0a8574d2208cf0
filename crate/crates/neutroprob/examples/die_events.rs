//! Event algebra on a die tossed over a cracked surface: singletons, unions,
//! complements, and the impossible/sure events.

use neutroprob::fixtures;
use neutroprob::space::NeutrosophicEvent;

fn main() -> neutroprob::Result<()> {
    let die = fixtures::die_frequentist_exact();
    println!("regular die on an irregular surface, indeterminacy 0.10\n");

    let one = NeutrosophicEvent::new(["1"]);
    println!("NP({{1}})         = {}", die.probability(&one)?);

    let low = NeutrosophicEvent::new(["1", "2", "3"]);
    println!("NP({{1,2,3}})     = {}", die.probability(&low)?);

    let other = NeutrosophicEvent::new(["2", "3", "4", "5"]);
    println!(
        "NP(low or mid)  = {}",
        die.union(&low, &other)?
    );

    println!("NP(not {{1}})     = {}", die.complement(&one)?);
    println!("NP(impossible)  = {}", die.impossible());
    println!("NP(sure)        = {}", die.sure()?);

    let truncated = fixtures::die_erased_three_exact().without_indeterminacy();
    println!(
        "\nafter erasing faces 4-6 and dropping indeterminacy, the space total is {}",
        truncated.total()
    );
    println!("NP(impossible)  = {}", truncated.impossible());
    Ok(())
}
