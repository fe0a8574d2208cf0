//! Combining subjective probabilities from two sources.
//!
//! Three families: proportional conflict redistribution (the conflicting
//! cross-masses of two sources flow back to the components that generated
//! them, proportionally to their sizes), pessimistic/optimistic distribution
//! schemes for the nine cross terms, and logic-style combination through a
//! t-norm/t-conorm pair.

use crate::chance::{Chance, NeutrosophicProbability};
use crate::error::{Error, Result};
use crate::value::Value;
use std::collections::BTreeMap;

const NORMALIZED_TOLERANCE: f64 = 1e-9;

/// A subjective (t, i, f) estimate from one source.
#[derive(Clone, Debug, PartialEq)]
pub struct SubjectiveNP {
    pub t: Chance,
    pub i: Chance,
    pub f: Chance,
    pub source_id: String,
}

impl SubjectiveNP {
    pub fn new(t: Chance, i: Chance, f: Chance) -> SubjectiveNP {
        SubjectiveNP {
            t,
            i,
            f,
            source_id: String::new(),
        }
    }

    pub fn from_f64(t: f64, i: f64, f: f64) -> Result<SubjectiveNP> {
        Ok(SubjectiveNP::new(
            Chance::from_f64(t)?,
            Chance::from_f64(i)?,
            Chance::from_f64(f)?,
        ))
    }

    pub fn with_source(mut self, source_id: impl Into<String>) -> SubjectiveNP {
        self.source_id = source_id.into();
        self
    }

    pub fn components(&self) -> (Value, Value, Value) {
        (self.t.value(), self.i.value(), self.f.value())
    }

    pub fn sum(&self) -> Value {
        self.t.value() + self.i.value() + self.f.value()
    }

    pub fn is_normalized(&self) -> bool {
        (self.sum().to_f64() - 1.0).abs() <= NORMALIZED_TOLERANCE
    }

    pub fn to_probability(&self) -> NeutrosophicProbability {
        use crate::chance::IntervalChance;
        NeutrosophicProbability::new(
            IntervalChance::from(self.t),
            IntervalChance::from(self.i),
            IntervalChance::from(self.f),
        )
    }
}

/// One conflicting product `x1 * y2` sent back to its generators: `x` receives
/// `x1^2 y2 / (x1 + y2)`, `y` receives `x1 y2^2 / (x1 + y2)`. A zero
/// denominator means both masses are zero, so nothing is redistributed.
fn redistribute(x1: Value, y2: Value) -> (Value, Value) {
    let den = x1 + y2;
    if den.is_zero() {
        return (Value::ZERO, Value::ZERO);
    }
    let share = x1 * y2 / den;
    (x1 * share, y2 * share)
}

/// Fuses two subjective triples by proportional conflict redistribution:
/// agreeing masses multiply, every conflicting cross product flows back to
/// the two components that produced it.
pub fn pcr5(a: &SubjectiveNP, b: &SubjectiveNP) -> SubjectiveNP {
    let (t1, i1, f1) = a.components();
    let (t2, i2, f2) = b.components();

    let (t_from_ti1, i_from_ti1) = redistribute(t1, i2);
    let (t_from_ti2, i_from_ti2) = redistribute(t2, i1);
    let (t_from_tf1, f_from_tf1) = redistribute(t1, f2);
    let (t_from_tf2, f_from_tf2) = redistribute(t2, f1);
    let (i_from_if1, f_from_if1) = redistribute(i1, f2);
    let (i_from_if2, f_from_if2) = redistribute(i2, f1);

    // symmetric pairs are summed together so swapping the sources yields a
    // bitwise-identical result
    let t = t1 * t2 + (t_from_ti1 + t_from_ti2) + (t_from_tf1 + t_from_tf2);
    let i = i1 * i2 + (i_from_ti1 + i_from_ti2) + (i_from_if1 + i_from_if2);
    let f = f1 * f2 + (f_from_tf1 + f_from_tf2) + (f_from_if1 + f_from_if2);

    let source = match (a.source_id.is_empty(), b.source_id.is_empty()) {
        (true, true) => String::new(),
        _ => format!("{}&{}", a.source_id, b.source_id),
    };
    SubjectiveNP::new(Chance::clamped(t), Chance::clamped(i), Chance::clamped(f))
        .with_source(source)
}

/// Proportional conflict redistribution over an arbitrary finite label set:
/// for each label, the agreeing product plus the redistributed share of every
/// conflict with a different label. Both maps must cover the same labels.
pub fn pcr5_classical(
    p1: &BTreeMap<String, Value>,
    p2: &BTreeMap<String, Value>,
) -> Result<BTreeMap<String, Value>> {
    if p1.len() != p2.len() || p1.keys().zip(p2.keys()).any(|(a, b)| a != b) {
        return Err(Error::LabelSetMismatch);
    }
    for &v in p1.values().chain(p2.values()) {
        if v < Value::ZERO {
            return Err(Error::InvalidInput(format!(
                "probability masses must be nonnegative, got {v}"
            )));
        }
    }
    let mut fused = BTreeMap::new();
    for (label, &m1) in p1 {
        let m2 = p2[label];
        let mut mass = m1 * m2;
        for (other, &o2) in p2 {
            if other == label {
                continue;
            }
            let o1 = p1[other];
            mass = mass + redistribute(m1, o2).0 + redistribute(m2, o1).0;
        }
        fused.insert(label.clone(), mass);
    }
    Ok(fused)
}

/// How the six off-diagonal cross terms of two normalized sources are
/// distributed among friend/neutral/hostile.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CombineScheme {
    /// Truth-neutral and falsehood-neutral crosses go to neutral; the
    /// truth-falsehood conflict goes to neutral too.
    VeryPessimistic,
    /// As above, but the truth-falsehood conflict is redistributed back to
    /// truth and falsehood proportionally.
    LessPessimistic,
    /// Truth-neutral crosses go to truth, falsehood-neutral to falsehood;
    /// the conflict goes to neutral.
    LessOptimistic,
    /// As above, with the conflict redistributed back to truth and falsehood.
    VeryOptimistic,
}

impl CombineScheme {
    pub fn parse(s: &str) -> Option<CombineScheme> {
        match s {
            "very-pessimistic" => Some(CombineScheme::VeryPessimistic),
            "less-pessimistic" => Some(CombineScheme::LessPessimistic),
            "less-optimistic" => Some(CombineScheme::LessOptimistic),
            "very-optimistic" => Some(CombineScheme::VeryOptimistic),
            _ => None,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            CombineScheme::VeryPessimistic => "very-pessimistic",
            CombineScheme::LessPessimistic => "less-pessimistic",
            CombineScheme::LessOptimistic => "less-optimistic",
            CombineScheme::VeryOptimistic => "very-optimistic",
        }
    }
}

/// Distributes the nine cross products of two normalized sources per the
/// chosen scheme. Diagonal products always go to their own component, so the
/// output sums to 1 without renormalization.
pub fn combine_scheme(
    a: &SubjectiveNP,
    b: &SubjectiveNP,
    scheme: CombineScheme,
) -> Result<SubjectiveNP> {
    if !a.is_normalized() || !b.is_normalized() {
        return Err(Error::NotNormalized);
    }
    let (f1, n1, h1) = a.components();
    let (f2, n2, h2) = b.components();

    let mut friend = f1 * f2;
    let mut neutral = n1 * n2;
    let mut hostile = h1 * h2;

    let friend_neutral = f1 * n2 + f2 * n1;
    let hostile_neutral = h1 * n2 + h2 * n1;
    match scheme {
        CombineScheme::VeryPessimistic | CombineScheme::LessPessimistic => {
            neutral = neutral + friend_neutral + hostile_neutral;
        }
        CombineScheme::LessOptimistic | CombineScheme::VeryOptimistic => {
            friend = friend + friend_neutral;
            hostile = hostile + hostile_neutral;
        }
    }

    match scheme {
        CombineScheme::VeryPessimistic | CombineScheme::LessOptimistic => {
            neutral = neutral + f1 * h2 + f2 * h1;
        }
        CombineScheme::LessPessimistic | CombineScheme::VeryOptimistic => {
            let (to_f1, to_h1) = redistribute(f1, h2);
            let (to_f2, to_h2) = redistribute(f2, h1);
            friend = friend + to_f1 + to_f2;
            hostile = hostile + to_h1 + to_h2;
        }
    }

    Ok(SubjectiveNP::new(
        Chance::clamped(friend),
        Chance::clamped(neutral),
        Chance::clamped(hostile),
    ))
}

/// Fuzzy conjunction operators on [0, 1].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TNorm {
    Min,
    Product,
    Lukasiewicz,
}

impl TNorm {
    pub fn apply(self, x: Value, y: Value) -> Value {
        match self {
            TNorm::Min => x.min(y),
            TNorm::Product => x * y,
            TNorm::Lukasiewicz => (x + y - Value::ONE).max(Value::ZERO),
        }
    }
}

/// Fuzzy disjunction operators on [0, 1].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TConorm {
    Max,
    ProbabilisticSum,
    BoundedSum,
}

impl TConorm {
    pub fn apply(self, x: Value, y: Value) -> Value {
        match self {
            TConorm::Max => x.max(y),
            TConorm::ProbabilisticSum => x + y - x * y,
            TConorm::BoundedSum => (x + y).min(Value::ONE),
        }
    }
}

/// A paired t-norm and t-conorm.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TNormConfig {
    pub tnorm: TNorm,
    pub tconorm: TConorm,
}

impl TNormConfig {
    pub const MIN_MAX: TNormConfig = TNormConfig {
        tnorm: TNorm::Min,
        tconorm: TConorm::Max,
    };
    pub const PRODUCT_SUM: TNormConfig = TNormConfig {
        tnorm: TNorm::Product,
        tconorm: TConorm::ProbabilisticSum,
    };
    pub const LUKASIEWICZ: TNormConfig = TNormConfig {
        tnorm: TNorm::Lukasiewicz,
        tconorm: TConorm::BoundedSum,
    };
}

/// Pessimistic keeps indeterminacy and falsehood high (both through the
/// t-conorm); optimistic keeps indeterminacy low (through the t-norm).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FusionMode {
    Pessimistic,
    Optimistic,
}

/// Logic-style fusion: truth through the t-norm, falsehood through the
/// t-conorm, indeterminacy per the mode. Optionally normalizes the result to
/// sum 1.
pub fn tnorm_fuse(
    a: &SubjectiveNP,
    b: &SubjectiveNP,
    cfg: &TNormConfig,
    mode: FusionMode,
    normalize_output: bool,
) -> Result<SubjectiveNP> {
    let (t1, i1, f1) = a.components();
    let (t2, i2, f2) = b.components();
    let t = cfg.tnorm.apply(t1, t2);
    let i = match mode {
        FusionMode::Pessimistic => cfg.tconorm.apply(i1, i2),
        FusionMode::Optimistic => cfg.tnorm.apply(i1, i2),
    };
    let f = cfg.tconorm.apply(f1, f2);
    let fused = SubjectiveNP::new(Chance::clamped(t), Chance::clamped(i), Chance::clamped(f));
    if normalize_output {
        normalize(&fused)
    } else {
        Ok(fused)
    }
}

/// Divides each component by the component sum, yielding a triple that sums
/// to 1. Fails on an all-zero triple.
pub fn normalize(np: &SubjectiveNP) -> Result<SubjectiveNP> {
    let sum = np.sum();
    if sum.is_zero() {
        return Err(Error::CannotNormalize);
    }
    let (t, i, f) = np.components();
    Ok(SubjectiveNP {
        t: Chance::clamped(t / sum),
        i: Chance::clamped(i / sum),
        f: Chance::clamped(f / sum),
        source_id: np.source_id.clone(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_close(np: &SubjectiveNP, want: (f64, f64, f64), tol: f64) {
        let (t, i, f) = np.components();
        assert!((t.to_f64() - want.0).abs() <= tol, "t = {t}, want {}", want.0);
        assert!((i.to_f64() - want.1).abs() <= tol, "i = {i}, want {}", want.1);
        assert!((f.to_f64() - want.2).abs() <= tol, "f = {f}, want {}", want.2);
    }

    #[test]
    fn pcr5_satellite_observers() {
        let a = SubjectiveNP::from_f64(0.6, 0.1, 0.3).unwrap();
        let b = SubjectiveNP::from_f64(0.2, 0.3, 0.5).unwrap();
        let fused = pcr5(&a, &b);
        assert_close(&fused, (0.44097, 0.15000, 0.40903), 5e-6);
        assert!((fused.sum().to_f64() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn pcr5_total_agreement() {
        let certain = SubjectiveNP::from_f64(1.0, 0.0, 0.0).unwrap();
        let fused = pcr5(&certain, &certain);
        assert_close(&fused, (1.0, 0.0, 0.0), 0.0);
    }

    #[test]
    fn pcr5_matches_direct_formula_evaluation() {
        // independent straight-line evaluation of the redistribution formula
        let (t1, i1, f1) = (0.5, 0.25, 0.25);
        let (t2, i2, f2) = (0.5, 0.25, 0.25);
        let term = |x: f64, y: f64| if x + y == 0.0 { 0.0 } else { x * x * y / (x + y) };
        let want_t = t1 * t2 + term(t1, i2) + term(t2, i1) + term(t1, f2) + term(t2, f1);
        let want_i = i1 * i2 + term(i1, t2) + term(i2, t1) + term(i1, f2) + term(i2, f1);
        let want_f = f1 * f2 + term(f1, t2) + term(f2, t1) + term(f1, i2) + term(f2, i1);
        assert!((want_t + want_i + want_f - 1.0).abs() < 1e-12);

        let fused = pcr5(
            &SubjectiveNP::from_f64(t1, i1, f1).unwrap(),
            &SubjectiveNP::from_f64(t2, i2, f2).unwrap(),
        );
        assert_close(&fused, (want_t, want_i, want_f), 1e-12);
    }

    #[test]
    fn pcr5_is_commutative_and_conserves_mass() {
        let mut rng = crate::montecarlo::SplitMix64::new(97);
        for _ in 0..500 {
            let raw = |rng: &mut crate::montecarlo::SplitMix64| {
                let x = [rng.next_f64(), rng.next_f64(), rng.next_f64()];
                let sum: f64 = x.iter().sum();
                SubjectiveNP::from_f64(x[0] / sum, x[1] / sum, x[2] / sum).unwrap()
            };
            let a = raw(&mut rng);
            let b = raw(&mut rng);
            let ab = pcr5(&a, &b);
            let ba = pcr5(&b, &a);
            assert_eq!(ab.components(), ba.components());
            assert!((ab.sum().to_f64() - 1.0).abs() < 1e-9);
        }
    }

    #[test]
    fn pcr5_classical_specializes_to_triple_form() {
        let to_map = |t: f64, i: f64, f: f64| {
            BTreeMap::from([
                ("f".to_string(), Value::Approx(f)),
                ("i".to_string(), Value::Approx(i)),
                ("t".to_string(), Value::Approx(t)),
            ])
        };
        let fused_map =
            pcr5_classical(&to_map(0.6, 0.1, 0.3), &to_map(0.2, 0.3, 0.5)).unwrap();
        let fused = pcr5(
            &SubjectiveNP::from_f64(0.6, 0.1, 0.3).unwrap(),
            &SubjectiveNP::from_f64(0.2, 0.3, 0.5).unwrap(),
        );
        let (t, i, f) = fused.components();
        assert!((fused_map["t"].to_f64() - t.to_f64()).abs() < 1e-15);
        assert!((fused_map["i"].to_f64() - i.to_f64()).abs() < 1e-15);
        assert!((fused_map["f"].to_f64() - f.to_f64()).abs() < 1e-15);
    }

    #[test]
    fn pcr5_classical_point_mass_and_uniform() {
        let point = BTreeMap::from([
            ("x".to_string(), Value::ONE),
            ("y".to_string(), Value::ZERO),
        ]);
        assert_eq!(pcr5_classical(&point, &point).unwrap(), point);

        let uniform: BTreeMap<String, Value> = ["a", "b", "c", "d"]
            .iter()
            .map(|l| (l.to_string(), Value::ratio(1, 4)))
            .collect();
        let fused = pcr5_classical(&uniform, &uniform).unwrap();
        for v in fused.values() {
            assert_eq!(*v, Value::ratio(1, 4));
        }
    }

    #[test]
    fn pcr5_classical_rejects_mismatched_labels() {
        let p1 = BTreeMap::from([("x".to_string(), Value::ONE)]);
        let p2 = BTreeMap::from([("y".to_string(), Value::ONE)]);
        assert_eq!(pcr5_classical(&p1, &p2), Err(Error::LabelSetMismatch));
    }

    #[test]
    fn schemes_on_agreeing_sources() {
        let sure = SubjectiveNP::from_f64(1.0, 0.0, 0.0).unwrap();
        for scheme in [
            CombineScheme::VeryPessimistic,
            CombineScheme::LessPessimistic,
            CombineScheme::LessOptimistic,
            CombineScheme::VeryOptimistic,
        ] {
            let fused = combine_scheme(&sure, &sure, scheme).unwrap();
            assert_close(&fused, (1.0, 0.0, 0.0), 0.0);
        }
    }

    #[test]
    fn schemes_route_the_conflict() {
        let a = SubjectiveNP::from_f64(0.5, 0.0, 0.5).unwrap();
        // fully conflicting halves: F1H2 + F2H1 = 0.5
        let very_p = combine_scheme(&a, &a, CombineScheme::VeryPessimistic).unwrap();
        assert_close(&very_p, (0.25, 0.5, 0.25), 1e-15);
        // redistribution splits the conflict evenly here by symmetry
        let very_o = combine_scheme(&a, &a, CombineScheme::VeryOptimistic).unwrap();
        assert_close(&very_o, (0.5, 0.0, 0.5), 1e-15);
    }

    #[test]
    fn schemes_sum_to_one() {
        let mut rng = crate::montecarlo::SplitMix64::new(101);
        for _ in 0..200 {
            let raw = |rng: &mut crate::montecarlo::SplitMix64| {
                let x = [rng.next_f64(), rng.next_f64(), rng.next_f64()];
                let sum: f64 = x.iter().sum();
                SubjectiveNP::from_f64(x[0] / sum, x[1] / sum, x[2] / sum).unwrap()
            };
            let a = raw(&mut rng);
            let b = raw(&mut rng);
            for scheme in [
                CombineScheme::VeryPessimistic,
                CombineScheme::LessPessimistic,
                CombineScheme::LessOptimistic,
                CombineScheme::VeryOptimistic,
            ] {
                let fused = combine_scheme(&a, &b, scheme).unwrap();
                assert!((fused.sum().to_f64() - 1.0).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn schemes_require_normalized_inputs() {
        let short = SubjectiveNP::from_f64(0.2, 0.2, 0.2).unwrap();
        let ok = SubjectiveNP::from_f64(0.5, 0.2, 0.3).unwrap();
        assert_eq!(
            combine_scheme(&short, &ok, CombineScheme::VeryPessimistic),
            Err(Error::NotNormalized)
        );
    }

    #[test]
    fn tnorm_fusion_vehicle_reports() {
        let a = SubjectiveNP::from_f64(0.4, 0.1, 0.5).unwrap();
        let b = SubjectiveNP::from_f64(0.3, 0.5, 0.2).unwrap();
        let pess = tnorm_fuse(&a, &b, &TNormConfig::MIN_MAX, FusionMode::Pessimistic, false)
            .unwrap();
        assert_close(&pess, (0.3, 0.5, 0.5), 0.0);
        let opt = tnorm_fuse(&a, &b, &TNormConfig::MIN_MAX, FusionMode::Optimistic, false)
            .unwrap();
        assert_close(&opt, (0.3, 0.1, 0.5), 0.0);

        // normalized: divide by the raw component sums
        let pess_n = tnorm_fuse(&a, &b, &TNormConfig::MIN_MAX, FusionMode::Pessimistic, true)
            .unwrap();
        assert_close(&pess_n, (0.3 / 1.3, 0.5 / 1.3, 0.5 / 1.3), 1e-15);
        let opt_n = tnorm_fuse(&a, &b, &TNormConfig::MIN_MAX, FusionMode::Optimistic, true)
            .unwrap();
        assert_close(&opt_n, (3.0 / 9.0, 1.0 / 9.0, 5.0 / 9.0), 1e-12);
    }

    #[test]
    fn tnorm_fusion_soccer_teams() {
        let alpha = SubjectiveNP::from_f64(0.7, 0.2, 0.1).unwrap();
        let gamma = SubjectiveNP::from_f64(0.3, 0.5, 0.2).unwrap();
        let fused = tnorm_fuse(
            &alpha,
            &gamma,
            &TNormConfig::PRODUCT_SUM,
            FusionMode::Pessimistic,
            false,
        )
        .unwrap();
        assert_close(&fused, (0.21, 0.60, 0.28), 1e-12);

        // min/max reading of the same pair
        let min_max = tnorm_fuse(
            &alpha,
            &gamma,
            &TNormConfig::MIN_MAX,
            FusionMode::Pessimistic,
            false,
        )
        .unwrap();
        assert_close(&min_max, (0.3, 0.5, 0.2), 0.0);
    }

    #[test]
    fn operator_identity_laws() {
        let mut rng = crate::montecarlo::SplitMix64::new(103);
        for _ in 0..100 {
            let x = Value::Approx(rng.next_f64());
            for tn in [TNorm::Min, TNorm::Product, TNorm::Lukasiewicz] {
                assert!((tn.apply(x, Value::ONE).to_f64() - x.to_f64()).abs() < 1e-15);
            }
            for tc in [TConorm::Max, TConorm::ProbabilisticSum, TConorm::BoundedSum] {
                assert!((tc.apply(x, Value::ZERO).to_f64() - x.to_f64()).abs() < 1e-15);
            }
        }
    }

    #[test]
    fn pessimistic_dominates_optimistic() {
        let mut rng = crate::montecarlo::SplitMix64::new(107);
        let configs = [
            TNormConfig::MIN_MAX,
            TNormConfig::PRODUCT_SUM,
            TNormConfig::LUKASIEWICZ,
        ];
        for _ in 0..200 {
            let a = SubjectiveNP::from_f64(rng.next_f64(), rng.next_f64(), rng.next_f64())
                .unwrap();
            let b = SubjectiveNP::from_f64(rng.next_f64(), rng.next_f64(), rng.next_f64())
                .unwrap();
            for cfg in &configs {
                let p = tnorm_fuse(&a, &b, cfg, FusionMode::Pessimistic, false).unwrap();
                let o = tnorm_fuse(&a, &b, cfg, FusionMode::Optimistic, false).unwrap();
                assert!(p.i.value() >= o.i.value());
                assert!(p.f.value() >= o.f.value());
            }
        }
    }

    #[test]
    fn normalize_divides_by_sum() {
        let raw = SubjectiveNP::from_f64(0.3, 0.5, 0.5).unwrap();
        let n = normalize(&raw).unwrap();
        assert_close(&n, (3.0 / 13.0, 5.0 / 13.0, 5.0 / 13.0), 1e-15);

        let sure = SubjectiveNP::from_f64(1.0, 0.0, 0.0).unwrap();
        assert_eq!(normalize(&sure).unwrap().components(), sure.components());

        let uniform = SubjectiveNP::from_f64(0.2, 0.2, 0.2).unwrap();
        let n = normalize(&uniform).unwrap();
        assert_close(&n, (1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0), 1e-15);

        let zero = SubjectiveNP::from_f64(0.0, 0.0, 0.0).unwrap();
        assert_eq!(normalize(&zero), Err(Error::CannotNormalize));
    }

    #[test]
    fn normalized_triples_classify_as_complete() {
        use crate::chance::CompletenessClass;
        let mut rng = crate::montecarlo::SplitMix64::new(113);
        for _ in 0..200 {
            let raw = SubjectiveNP::from_f64(
                rng.next_f64().max(1e-6),
                rng.next_f64(),
                rng.next_f64(),
            )
            .unwrap();
            let class = normalize(&raw)
                .unwrap()
                .to_probability()
                .classify()
                .unwrap();
            assert_eq!(class, CompletenessClass::Complete);
        }
    }

    #[test]
    fn normalize_is_idempotent() {
        let mut rng = crate::montecarlo::SplitMix64::new(109);
        for _ in 0..100 {
            let raw = SubjectiveNP::from_f64(
                rng.next_f64().max(1e-3),
                rng.next_f64(),
                rng.next_f64(),
            )
            .unwrap();
            let once = normalize(&raw).unwrap();
            let twice = normalize(&once).unwrap();
            let (t1, i1, f1) = once.components();
            let (t2, i2, f2) = twice.components();
            assert!((t1.to_f64() - t2.to_f64()).abs() < 1e-12);
            assert!((i1.to_f64() - i2.to_f64()).abs() < 1e-12);
            assert!((f1.to_f64() - f2.to_f64()).abs() < 1e-12);
        }
    }
}
