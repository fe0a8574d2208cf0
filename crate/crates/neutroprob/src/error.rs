use thiserror::Error;

/// Errors produced by the neutrosophic calculus.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("value {0} is outside [0, 1]")]
    ChanceOutOfRange(f64),
    #[error("invalid interval: lo {lo} must not exceed hi {hi}, both within [0, 1]")]
    InvalidInterval { lo: f64, hi: f64 },
    #[error("classification requires scalar components; got a non-degenerate interval")]
    ClassificationUndefined,
    #[error("label {0:?} is not an outcome of this sample space")]
    EventSpaceMismatch(String),
    #[error("duplicate label {0:?} in sample space")]
    DuplicateLabel(String),
    #[error("space total {0} exceeds 1")]
    SpaceTotalExceedsOne(f64),
    #[error("operation requires a complete space (total = 1); this space totals {0}")]
    IncompleteSpace(f64),
    #[error("cannot condition: {0}")]
    CannotCondition(String),
    #[error("conditional probability is undefined when ch(B) = 0")]
    UndefinedConditional,
    #[error("payoff table does not match the space: {0}")]
    IncompletePayoff(String),
    #[error("cannot normalize: component sum is zero")]
    CannotNormalize,
    #[error("inputs must be normalized (components summing to 1)")]
    NotNormalized,
    #[error("inconsistent measure: anti components sum below the space total")]
    InconsistentMeasure,
    #[error("invalid band: width function is negative at x = {0}")]
    InvalidBand(f64),
    #[error("matrix dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("label sets of the two probability maps differ")]
    LabelSetMismatch,
    #[error("refinement weights must be nonnegative and sum to 1; got sum {0}")]
    WeightSum(f64),
    #[error("simulation requires at least one trial")]
    InvalidConfig,
    #[error("trial log is empty")]
    EmptyLog,
    #[error("enumeration would produce {0} cells, above the 10^7 cap")]
    EnumerationCap(u128),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Stable machine-readable code for CLI error objects.
    pub fn code(&self) -> &'static str {
        match self {
            Error::ChanceOutOfRange(_) => "chance-out-of-range",
            Error::InvalidInterval { .. } => "invalid-interval",
            Error::ClassificationUndefined => "classification-undefined",
            Error::EventSpaceMismatch(_) => "event-space-mismatch",
            Error::DuplicateLabel(_) => "duplicate-label",
            Error::SpaceTotalExceedsOne(_) => "space-total-exceeds-one",
            Error::IncompleteSpace(_) => "incomplete-space",
            Error::CannotCondition(_) => "cannot-condition",
            Error::UndefinedConditional => "undefined-conditional",
            Error::IncompletePayoff(_) => "incomplete-payoff",
            Error::CannotNormalize => "cannot-normalize",
            Error::NotNormalized => "not-normalized",
            Error::InconsistentMeasure => "inconsistent-measure",
            Error::InvalidBand(_) => "invalid-band",
            Error::DimensionMismatch(..) => "dimension-mismatch",
            Error::LabelSetMismatch => "label-set-mismatch",
            Error::WeightSum(_) => "weight-sum-violation",
            Error::InvalidConfig => "invalid-config",
            Error::EmptyLog => "empty-log",
            Error::EnumerationCap(_) => "enumeration-cap",
            Error::InvalidInput(_) => "invalid-input",
        }
    }
}
