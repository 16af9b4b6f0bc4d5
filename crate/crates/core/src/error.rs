use crate::ratcore::Rational;

/// A sample that disagrees with the value predicted for it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub x: Rational,
    pub expected: Rational,
    pub actual: Rational,
}

/// A closed interval `[lo, hi]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interval {
    pub lo: Rational,
    pub hi: Rational,
}

impl Interval {
    pub fn boxed(lo: &Rational, hi: &Rational) -> Box<Self> {
        Box::new(Self {
            lo: lo.clone(),
            hi: hi.clone(),
        })
    }
}

impl std::fmt::Display for Interval {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("interpolation check failed at x = {}: expected {}, polynomial gives {}", .0.x, .0.expected, .0.actual)]
    VerificationFailure(Box<Mismatch>),

    #[error("need at least {needed} samples, got {got}")]
    InsufficientSamples { needed: usize, got: usize },

    #[error("duplicate abscissa {0}")]
    DuplicateAbscissa(Rational),

    #[error("polynomial does not change sign on {0}")]
    NoSignChange(Box<Interval>),

    #[error("polynomial has {count} distinct roots on {interval}, expected exactly one")]
    MultipleRoots { interval: Box<Interval>, count: usize },

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("malformed piecewise polynomial: {0}")]
    MalformedPiecewise(String),

    #[error("degree bound violated: {what} has degree {degree}, allowed {bound}")]
    DegreeBound {
        what: String,
        degree: usize,
        bound: usize,
    },

    #[error("class is not pseudo-effective: {0}")]
    NotPseudoEffective(String),

    #[error("chamber boundary is irrational, root bracketed in {0}")]
    IrrationalBreakpoint(Box<Interval>),

    #[error("unknown curve {0}")]
    UnknownCurve(String),

    #[error("invalid stratum: {0}")]
    InvalidStratum(String),

    #[error("stratum {stratum} does not lie on flag curve {flag}")]
    StratumNotOnFlag { stratum: String, flag: String },

    #[error("no flag is assigned to stratum {0}")]
    NoFlagAssigned(String),

    #[error("N-support shrank between chambers at v = {0}")]
    NonMonotoneSupport(Rational),

    #[error("value out of range: {0}")]
    OutOfRange(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
