//! Drawing votes from an urn that contains unreadable ballots: conditioning,
//! the Bayesian identity, the multiplication rule, and expected value.

use neutroprob::fixtures;
use neutroprob::space::bayes_check;
use neutroprob::value::Value;

fn main() -> neutroprob::Result<()> {
    let urn = fixtures::urn_5_2_3();
    let a = fixtures::urn_a_event();
    let b = fixtures::urn_b_event();
    println!("urn: 5 A-votes, 2 unreadable votes, 3 B-votes\n");

    println!("NP(A)       = {}", urn.probability(&a)?);
    println!("NP(B)       = {}", urn.probability(&b)?);
    println!("NP(A | B drawn) = {}", urn.conditional(&a, "B")?);
    println!("NP(B | A drawn) = {}", urn.conditional(&b, "A")?);

    let holds = bayes_check(
        Value::ratio(5, 10),
        Value::ratio(3, 10),
        Value::ratio(5, 9),
        Value::ratio(3, 9),
    )?;
    println!("Bayes identity ch(A|B) = ch(B|A) ch(A)/ch(B): {holds}");

    println!(
        "NP(A then B, no replacement) = {}",
        urn.multiplicative_rule("A", "B")?
    );

    let ne = urn.expected_value(&fixtures::urn_payoffs())?;
    println!("expected value at -$2/A, +$3/B, -$1/unreadable: ${}", ne.to_f64());
    Ok(())
}
