//! Measures over spaces with indeterminate parts, and integrals whose
//! integrand or lower limit is only approximately known.

use neutroprob::fixtures;
use neutroprob::integral::{integrate_band, integrate_uncertain_lower, BandFunction};
use neutroprob::measure::{approximate_number, MeasureSpaceTotal, NeutrosophicMeasure};

fn main() -> neutroprob::Result<()> {
    let book = fixtures::book_measure();
    println!(
        "a 100-sheet book with 3 missing sheets measures ({}, {}, {})",
        book.det(),
        book.neut(),
        book.anti()
    );
    let die = fixtures::die_measure();
    println!(
        "a die with 2 erased faces measures ({}, {}, {}); normalized: {}",
        die.det(),
        die.neut(),
        die.anti(),
        die.is_normalized()
    );

    // disjoint halves of a unit space exhaust it
    let unit = MeasureSpaceTotal::new(1.0)?;
    let half = NeutrosophicMeasure::new(0.5, 0.0, 0.5)?;
    let whole = half.add_disjoint(half, unit)?;
    println!(
        "two complementary halves sum to ({}, {}, {})",
        whole.det(),
        whole.neut(),
        whole.anti()
    );

    let (det, ind) = approximate_number(0.8, 0.9)?;
    println!("\na quantity in [0.8, 0.9] splits as {det} + i, i in [0, {ind:.1}]");

    // integrand known only to lie in [x^2, x^2 + x]
    let band = BandFunction::new(|x: f64| x * x, |x: f64| x);
    let result = integrate_band(&band, 0.0, 2.0, 200)?;
    println!(
        "\nintegral of a band function over [0, 2]: {:.6} + i, i in [0, {:.6}]",
        result.determinate, result.indeterminacy_width
    );

    // lower limit known only up to a shift in [0, 1]
    let forms = integrate_uncertain_lower(|x| x, 0.0, 1.0, 2.0, 200)?;
    println!("integral of x with lower limit 0 + eps, eps in [0, 1]:");
    println!(
        "  minus form: {:.3} - i, i in [0, {:.3}]",
        forms.minus_form.value, forms.minus_form.indeterminacy_width
    );
    println!(
        "  plus form:  {:.3} + i, i in [0, {:.3}]",
        forms.plus_form.value, forms.plus_form.indeterminacy_width
    );
    Ok(())
}
