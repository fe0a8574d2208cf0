//! A three-state economy whose transitions carry indeterminacy: matrix
//! powers under the triple operators, row normalization, and chain steps.

use neutroprob::fixtures;
use neutroprob::markov::{OperatorConfig, StateVector};

fn main() -> neutroprob::Result<()> {
    let matrix = fixtures::markov_economy();
    let cfg = OperatorConfig::default();
    println!("states: {:?}\n", matrix.states());

    let squared = matrix.power(2, &cfg)?;
    println!("two-year transitions (truth multiplies/sums, i and f via max/min):");
    for (r, state) in matrix.states().iter().enumerate() {
        let row: Vec<String> = (0..matrix.n())
            .map(|c| squared.entry(r, c).to_string())
            .collect();
        println!("  from {state}: {}", row.join("  "));
    }

    let normalized = squared.row_normalized()?;
    println!("\nrow-normalized (all nine components per row sum to 1):");
    for (r, state) in matrix.states().iter().enumerate() {
        let row: Vec<String> = (0..matrix.n())
            .map(|c| {
                let e = normalized.entry(r, c);
                format!("({:.3}, {:.3}, {:.3})", e.t.to_f64(), e.i.to_f64(), e.f.to_f64())
            })
            .collect();
        println!("  from {state}: {}", row.join("  "));
    }

    // starting from prosperity, walk two steps
    let start = StateVector::basis(matrix.n(), 0);
    let after_two = start.step(&matrix, &cfg)?.step(&matrix, &cfg)?;
    if let StateVector::Triples(entries) = &after_two {
        println!("\ntwo steps from prosperity:");
        for (state, e) in matrix.states().iter().zip(entries) {
            println!("  to {state}: {e}");
        }
    }
    Ok(())
}
