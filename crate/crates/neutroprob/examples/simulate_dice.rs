//! Seeded Monte Carlo estimation of a neutrosophic probability, converging
//! to the analytic triple as trials grow.

use neutroprob::fixtures;
use neutroprob::montecarlo::{frequentist_np, simulate, SimConfig};
use neutroprob::space::NeutrosophicEvent;

fn main() -> neutroprob::Result<()> {
    let die = fixtures::die_frequentist_exact();
    let event = NeutrosophicEvent::new(["1"]);
    let analytic = die.probability(&event)?;
    println!("analytic NP({{1}}) = {analytic}\n");

    for trials in [100u64, 10_000, 1_000_000] {
        let log = simulate(&die, &SimConfig { seed: 7, trials })?;
        let empirical = frequentist_np(&log, &event)?;
        let (t, i, f) = empirical.scalar_components().unwrap();
        println!(
            "{trials:>9} trials: ({:.4}, {:.4}, {:.4})",
            t.to_f64(),
            i.to_f64(),
            f.to_f64()
        );
    }

    // the same seed always reproduces the same log
    let a = simulate(&die, &SimConfig { seed: 7, trials: 1000 })?;
    let b = simulate(&die, &SimConfig { seed: 7, trials: 1000 })?;
    println!("\nreplay with the same seed is identical: {}", a == b);

    let survey = fixtures::survey_tosses();
    let np = frequentist_np(&survey, &NeutrosophicEvent::new(["2"]))?;
    println!("five hand-recorded tosses, NP({{2}}) = {np}");
    Ok(())
}
