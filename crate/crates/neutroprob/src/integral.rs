//! Numeric integration of functions carrying indeterminacy.
//!
//! Two forms from the calculus: a band integral where the integrand is only
//! known to lie in `[g(x), g(x) + h(x)]`, and an integral whose lower limit is
//! only known up to a shift `eps`. Quadrature is composite Simpson.

use crate::error::{Error, Result};

/// An integrand known up to a nonnegative band: values lie in
/// `[g(x), g(x) + h(x)]` with `g` the determinate part and `h` the width.
pub struct BandFunction<G, H> {
    g: G,
    h: H,
}

impl<G, H> BandFunction<G, H>
where
    G: Fn(f64) -> f64,
    H: Fn(f64) -> f64,
{
    pub fn new(g: G, h: H) -> BandFunction<G, H> {
        BandFunction { g, h }
    }
}

/// Result of a band integral: a determinate value plus an indeterminacy
/// interval `[0, width]` in the units of the integrand. The width is not a
/// chance and is not clamped to 1.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NeutrosophicIntegralResult {
    pub determinate: f64,
    pub indeterminacy_width: f64,
}

impl NeutrosophicIntegralResult {
    /// The indeterminacy interval `[0, width]`.
    pub fn indeterminacy(&self) -> (f64, f64) {
        (0.0, self.indeterminacy_width)
    }
}

/// Composite Simpson quadrature over `n_panels` (even, >= 2) panels.
/// Returns 0 for an empty range `a == b`.
pub fn simpson<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, n_panels: usize) -> Result<f64> {
    if a == b {
        return Ok(0.0);
    }
    if a > b {
        return Err(Error::InvalidInput(format!(
            "integration bounds must satisfy a <= b, got {a} > {b}"
        )));
    }
    if n_panels < 2 || !n_panels.is_multiple_of(2) {
        return Err(Error::InvalidInput(format!(
            "Simpson quadrature needs an even panel count >= 2, got {n_panels}"
        )));
    }
    let h = (b - a) / n_panels as f64;
    let mut sum = f(a) + f(b);
    for k in 1..n_panels {
        let x = a + k as f64 * h;
        sum += if k % 2 == 1 { 4.0 * f(x) } else { 2.0 * f(x) };
    }
    Ok(sum * h / 3.0)
}

/// Integrates a band function over `[a, b]`: the determinate part is the
/// quadrature of `g`, the indeterminacy interval is `[0, integral of h]`.
/// Fails if `h` is negative at any quadrature node.
pub fn integrate_band<G, H>(
    band: &BandFunction<G, H>,
    a: f64,
    b: f64,
    n_panels: usize,
) -> Result<NeutrosophicIntegralResult>
where
    G: Fn(f64) -> f64,
    H: Fn(f64) -> f64,
{
    if a >= b {
        return Err(Error::InvalidInput(format!(
            "band integral needs a < b, got [{a}, {b}]"
        )));
    }
    let h_step = (b - a) / n_panels as f64;
    for k in 0..=n_panels {
        let x = a + k as f64 * h_step;
        if (band.h)(x) < 0.0 {
            return Err(Error::InvalidBand(x));
        }
    }
    Ok(NeutrosophicIntegralResult {
        determinate: simpson(&band.g, a, b, n_panels)?,
        indeterminacy_width: simpson(&band.h, a, b, n_panels)?,
    })
}

/// One reading of an integral with an uncertain lower limit: a value together
/// with an indeterminacy interval `[0, width]`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct IntegralEstimate {
    pub value: f64,
    pub indeterminacy_width: f64,
}

/// The two equivalent readings of an integral whose lower limit is
/// `a1 + eps` for an unknown shift in `[0, eps]`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct UncertainLowerResult {
    /// Integral from `a1`; the true value is this minus an indeterminacy in
    /// `[0, width]`.
    pub minus_form: IntegralEstimate,
    /// Integral from `a1 + eps`; the true value is this plus an indeterminacy
    /// in `[0, width]`.
    pub plus_form: IntegralEstimate,
}

/// Integrates `f` over `[a, b]` where the lower limit `a = a1 + shift` is only
/// known up to `shift` in `[0, eps]`. Both returned forms describe the same
/// value set `[plus_form.value, minus_form.value]`.
pub fn integrate_uncertain_lower<F: Fn(f64) -> f64>(
    f: F,
    a1: f64,
    eps: f64,
    b: f64,
    n_panels: usize,
) -> Result<UncertainLowerResult> {
    if eps < 0.0 {
        return Err(Error::InvalidInput(format!(
            "lower-limit uncertainty must be nonnegative, got {eps}"
        )));
    }
    if a1 + eps > b {
        return Err(Error::InvalidInput(format!(
            "uncertain lower limit {a1} + {eps} exceeds the upper limit {b}"
        )));
    }
    let width = simpson(&f, a1, a1 + eps, n_panels)?;
    let from_a1 = simpson(&f, a1, b, n_panels)?;
    let from_shifted = simpson(&f, a1 + eps, b, n_panels)?;
    Ok(UncertainLowerResult {
        minus_form: IntegralEstimate {
            value: from_a1,
            indeterminacy_width: width,
        },
        plus_form: IntegralEstimate {
            value: from_shifted,
            indeterminacy_width: width,
        },
    })
}
