//! Measure triples over spaces that contain indeterminate parts.
//!
//! A measure here is `(det, neut, anti)`: the determinate part of the measured
//! set, its indeterminate part, and the determinate part of its opposite, in
//! whatever unit the space is measured in (pages, square meters, die faces).

use crate::error::{Error, Result};

const NORMALIZED_TOLERANCE: f64 = 1e-9;

/// The `(m(A), m(neutA), m(antiA))` triple. All components finite and >= 0.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NeutrosophicMeasure {
    det: f64,
    neut: f64,
    anti: f64,
}

/// Total measure of the whole space, needed by disjoint addition.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MeasureSpaceTotal(f64);

impl MeasureSpaceTotal {
    pub fn new(m_x: f64) -> Result<MeasureSpaceTotal> {
        if !m_x.is_finite() || m_x < 0.0 {
            return Err(Error::InvalidInput(format!(
                "space total must be finite and nonnegative, got {m_x}"
            )));
        }
        Ok(MeasureSpaceTotal(m_x))
    }

    pub fn get(self) -> f64 {
        self.0
    }
}

impl NeutrosophicMeasure {
    pub fn new(det: f64, neut: f64, anti: f64) -> Result<NeutrosophicMeasure> {
        for (name, v) in [("det", det), ("neut", neut), ("anti", anti)] {
            if !v.is_finite() || v < 0.0 {
                return Err(Error::InvalidInput(format!(
                    "measure component {name} must be finite and nonnegative, got {v}"
                )));
            }
        }
        Ok(NeutrosophicMeasure { det, neut, anti })
    }

    pub fn det(self) -> f64 {
        self.det
    }

    pub fn neut(self) -> f64 {
        self.neut
    }

    pub fn anti(self) -> f64 {
        self.anti
    }

    /// The measure of the empty set.
    pub fn null() -> NeutrosophicMeasure {
        NeutrosophicMeasure {
            det: 0.0,
            neut: 0.0,
            anti: 0.0,
        }
    }

    /// Monotone order on measures: determinate and indeterminate parts grow,
    /// the anti part shrinks.
    pub fn le(self, other: NeutrosophicMeasure) -> bool {
        self.det <= other.det && self.neut <= other.neut && self.anti >= other.anti
    }

    /// Measure of the union of two disjoint sets. The anti component is
    /// `anti1 + anti2 - m(X)`, the measure of the intersection of the two
    /// opposites; if that would be negative the operands cannot be disjoint
    /// parts of a space of size `m(X)`.
    pub fn add_disjoint(
        self,
        other: NeutrosophicMeasure,
        total: MeasureSpaceTotal,
    ) -> Result<NeutrosophicMeasure> {
        let anti = self.anti + other.anti - total.get();
        if anti < -NORMALIZED_TOLERANCE {
            return Err(Error::InconsistentMeasure);
        }
        Ok(NeutrosophicMeasure {
            det: self.det + other.det,
            neut: self.neut + other.neut,
            anti: anti.max(0.0),
        })
    }

    /// Finite fold of disjoint addition over a list of measures.
    pub fn sum_disjoint(
        measures: &[NeutrosophicMeasure],
        total: MeasureSpaceTotal,
    ) -> Result<NeutrosophicMeasure> {
        let mut iter = measures.iter();
        let first = *iter.next().ok_or_else(|| {
            Error::InvalidInput("cannot sum an empty list of measures".into())
        })?;
        iter.try_fold(first, |acc, m| acc.add_disjoint(*m, total))
    }

    /// Whether the components sum to 1.
    pub fn is_normalized(self) -> bool {
        (self.det + self.neut + self.anti - 1.0).abs() <= NORMALIZED_TOLERANCE
    }

    /// Fuzzy-measure reduction: the measure viewed as its determinate part
    /// when the indeterminate part vanishes and the anti part is ignored.
    pub fn as_fuzzy(self) -> Option<f64> {
        (self.neut == 0.0).then_some(self.det)
    }
}

/// Splits an approximate quantity known to lie in `[lo, hi]` into its
/// determinate part and indeterminacy bound: `q = lo + i`, `i` in
/// `[0, hi - lo]`. Unlike chance intervals this works on arbitrary reals,
/// including negative-direction approximations like `r` in `[-6, -4]`.
pub fn approximate_number(lo: f64, hi: f64) -> Result<(f64, f64)> {
    if !lo.is_finite() || !hi.is_finite() || hi < lo {
        return Err(Error::InvalidInput(format!(
            "approximate number needs finite bounds with lo <= hi, got [{lo}, {hi}]"
        )));
    }
    Ok((lo, hi - lo))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nm(d: f64, n: f64, a: f64) -> NeutrosophicMeasure {
        NeutrosophicMeasure::new(d, n, a).unwrap()
    }

    #[test]
    fn monotone_order() {
        assert!(nm(1.0, 0.0, 5.0).le(nm(2.0, 1.0, 3.0)));
        let m = nm(0.3, 0.2, 0.5);
        assert!(m.le(m)); // reflexive
        assert!(!nm(2.0, 0.0, 3.0).le(nm(1.0, 0.0, 4.0)));
    }

    #[test]
    fn order_is_antisymmetric_and_transitive() {
        let mut rng = crate::montecarlo::SplitMix64::new(3);
        let mut triples = Vec::new();
        for _ in 0..40 {
            triples.push(nm(
                (rng.next_f64() * 4.0).round() / 2.0,
                (rng.next_f64() * 4.0).round() / 2.0,
                (rng.next_f64() * 4.0).round() / 2.0,
            ));
        }
        for &a in &triples {
            for &b in &triples {
                if a.le(b) && b.le(a) {
                    assert_eq!(a, b);
                }
                for &c in &triples {
                    if a.le(b) && b.le(c) {
                        assert!(a.le(c));
                    }
                }
            }
        }
    }

    #[test]
    fn disjoint_addition() {
        let unit = MeasureSpaceTotal::new(1.0).unwrap();
        let sum = nm(0.3, 0.1, 0.6).add_disjoint(nm(0.2, 0.1, 0.7), unit).unwrap();
        assert_eq!(sum.det(), 0.5);
        assert_eq!(sum.neut(), 0.2);
        assert!((sum.anti() - 0.3).abs() < 1e-12);

        // complementary halves exhaust the space
        let halves = nm(0.5, 0.0, 0.5).add_disjoint(nm(0.5, 0.0, 0.5), unit).unwrap();
        assert_eq!(halves, nm(1.0, 0.0, 0.0));

        // a 100-sheet book with 3 missing sheets, plus a null set
        let hundred = MeasureSpaceTotal::new(100.0).unwrap();
        let book = nm(97.0, 3.0, 0.0);
        let nothing = nm(0.0, 0.0, 100.0);
        assert_eq!(book.add_disjoint(nothing, hundred).unwrap(), book);
    }

    #[test]
    fn null_measure_is_not_an_additive_identity() {
        // the empty set measures (0, 0, 0), yet adding it shifts the anti
        // component by -m(X) unless anti spans the whole space
        let unit = MeasureSpaceTotal::new(1.0).unwrap();
        let m = nm(0.3, 0.0, 0.7);
        assert_eq!(
            m.add_disjoint(NeutrosophicMeasure::null(), unit),
            Err(Error::InconsistentMeasure)
        );
        let spanning = nm(0.0, 0.0, 1.0);
        assert_eq!(m.add_disjoint(spanning, unit).unwrap(), m);
    }

    #[test]
    fn disjoint_addition_rejects_inconsistent_anti() {
        let unit = MeasureSpaceTotal::new(1.0).unwrap();
        let err = nm(0.5, 0.0, 0.2).add_disjoint(nm(0.5, 0.0, 0.2), unit);
        assert_eq!(err, Err(Error::InconsistentMeasure));
    }

    #[test]
    fn anti_component_is_exact_subtraction() {
        let mut rng = crate::montecarlo::SplitMix64::new(5);
        let total = MeasureSpaceTotal::new(10.0).unwrap();
        for _ in 0..100 {
            let a = nm(rng.next_f64(), rng.next_f64(), 5.0 + rng.next_f64());
            let b = nm(rng.next_f64(), rng.next_f64(), 5.0 + rng.next_f64());
            let s = a.add_disjoint(b, total).unwrap();
            assert_eq!(s.anti(), a.anti() + b.anti() - 10.0);
            assert_eq!(s.det(), a.det() + b.det());
            assert_eq!(s.neut(), a.neut() + b.neut());
        }
    }

    #[test]
    fn normalization_check() {
        assert!(nm(0.97, 0.03, 0.0).is_normalized());
        // a die with two erased faces, measured in faces
        assert!(!nm(4.0, 2.0, 0.0).is_normalized());
        // truth-value of a geometry statement across mixed spaces
        assert!(!nm(1.0, 1.0, 1.0).is_normalized());
    }

    #[test]
    fn fuzzy_reduction_agrees_with_real_order() {
        let a = nm(0.2, 0.0, 0.9);
        let b = nm(0.7, 0.0, 0.1);
        assert_eq!(a.as_fuzzy(), Some(0.2));
        assert!(a.as_fuzzy().unwrap() <= b.as_fuzzy().unwrap());
        assert!(nm(0.2, 0.1, 0.0).as_fuzzy().is_none());
    }

    #[test]
    fn approximate_numbers_split() {
        assert_eq!(approximate_number(0.8, 0.9).unwrap(), (0.8, 0.09999999999999998));
        let (det, ind) = approximate_number(-6.0, -4.0).unwrap();
        assert_eq!((det, ind), (-6.0, 2.0));
        assert!(approximate_number(1.0, 0.0).is_err());
    }

    #[test]
    fn rejects_negative_components() {
        assert!(NeutrosophicMeasure::new(-1.0, 0.0, 0.0).is_err());
        assert!(NeutrosophicMeasure::new(0.0, f64::NAN, 0.0).is_err());
    }
}
