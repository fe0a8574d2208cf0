//! Independent experiments side by side: two dice, three coin flips, the
//! chance of a target sum, and the counting principle with indeterminacies.

use neutroprob::fixtures;
use neutroprob::product::{counting_principle, joint, joint_predicate, ProductSpace};
use neutroprob::space::NeutrosophicEvent;

fn main() -> neutroprob::Result<()> {
    let die = fixtures::die_frequentist_exact();
    let dice = vec![die.clone(), die];

    let product = ProductSpace::new(dice.clone())?;
    println!("two dice on a cracked surface: {} joint cells", product.cells().len());
    for order in 0..=2 {
        let cells: Vec<_> = product.cells_of_order(order).collect();
        println!(
            "  indeterminacy order {order}: {} cells at chance {}",
            cells.len(),
            cells[0].chance
        );
    }

    let three_four = [NeutrosophicEvent::new(["3"]), NeutrosophicEvent::new(["4"])];
    println!("\nNP(3 then 4)  = {}", joint(&dice, &three_four)?);

    let sum_six = joint_predicate(&dice, |labels| {
        labels.iter().map(|l| l.parse::<u32>().unwrap()).sum::<u32>() == 6
    })?;
    println!("NP(sum = 6)   = {sum_six}");

    let coin = fixtures::coin_cracked_exact();
    let coins = vec![coin.clone(), coin.clone(), coin];
    let htt = [
        NeutrosophicEvent::new(["H"]),
        NeutrosophicEvent::new(["T"]),
        NeutrosophicEvent::new(["T"]),
    ];
    println!("\nthree coin flips, edge chance 0.02 each:");
    println!("NP(HTT)       = {}", joint(&coins, &htt)?);

    // a 4-way die with two indeterminacies followed by a 6-way die with one
    let (ways, first, second) = counting_principle(4, 2, 6, 1)?;
    println!(
        "\ncounting principle: {ways} ways, {first} first-order and {second} second-order indeterminacies"
    );
    Ok(())
}
