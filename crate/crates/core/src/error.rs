use thiserror::Error;

/// Every failure the library can report.
///
/// The variant name doubles as the diagnostic printed by the command line
/// front end, so keep names stable.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("DimensionMismatch: expected {expected} variables, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("NotDivisible: nonzero remainder with leading exponent {exponent:?}")]
    NotDivisible { exponent: Vec<i64> },

    #[error("DivisionByZero")]
    DivisionByZero,

    #[error("ZeroBranch: branch {branch} has x = y = 0")]
    ZeroBranch { branch: usize },

    #[error("OrderZero: branch {branch} does not pass through the origin")]
    OrderZero { branch: usize },

    #[error("NonPrimitive: branch {branch} factors through tau^{gcd}")]
    NonPrimitive { branch: usize, gcd: u32 },

    #[error("EmptyCurve: a curve needs at least one branch")]
    EmptyCurve,

    #[error(
        "BudgetExceeded: branches {first} and {second} did not separate within {budget} blow-ups"
    )]
    BudgetExceeded {
        first: usize,
        second: usize,
        budget: usize,
    },

    #[error(
        "PrecisionExhausted: series precision {precision} too small to resolve branch {branch}"
    )]
    PrecisionExhausted { branch: usize, precision: usize },

    #[error("UnknownVertex: {0}")]
    UnknownVertex(u32),

    #[error("DuplicateVertex: {0}")]
    DuplicateVertex(u32),

    #[error("InvalidMultiplicity: vertex {vertex} has a zero multiplicity component")]
    InvalidMultiplicity { vertex: u32 },

    #[error("NotATree: {0}")]
    NotATree(String),

    #[error("ArrowCountMismatch: branch {branch} has {count} arrows")]
    ArrowCountMismatch { branch: usize, count: usize },

    #[error("WindowTooSmall: need window >= {needed:?}, have {window:?}")]
    WindowTooSmall { needed: Vec<i64>, window: Vec<i64> },

    #[error(
        "BoundaryNonzero: fiber Euler characteristic {chi} at {point:?} outside the conductor box"
    )]
    BoundaryNonzero { point: Vec<i64>, chi: i64 },

    #[error("NotInSemigroup: {0}")]
    NotInSemigroup(u64),

    #[error("RequiresSingleBranch: operation needs r = 1, curve has r = {0}")]
    RequiresSingleBranch(usize),

    #[error("ParseError: {0}")]
    Parse(String),
}

impl Error {
    /// Short variant name, without the payload.
    pub fn name(&self) -> &'static str {
        match self {
            Error::DimensionMismatch { .. } => "DimensionMismatch",
            Error::NotDivisible { .. } => "NotDivisible",
            Error::DivisionByZero => "DivisionByZero",
            Error::ZeroBranch { .. } => "ZeroBranch",
            Error::OrderZero { .. } => "OrderZero",
            Error::NonPrimitive { .. } => "NonPrimitive",
            Error::EmptyCurve => "EmptyCurve",
            Error::BudgetExceeded { .. } => "BudgetExceeded",
            Error::PrecisionExhausted { .. } => "PrecisionExhausted",
            Error::UnknownVertex(_) => "UnknownVertex",
            Error::DuplicateVertex(_) => "DuplicateVertex",
            Error::InvalidMultiplicity { .. } => "InvalidMultiplicity",
            Error::NotATree(_) => "NotATree",
            Error::ArrowCountMismatch { .. } => "ArrowCountMismatch",
            Error::WindowTooSmall { .. } => "WindowTooSmall",
            Error::BoundaryNonzero { .. } => "BoundaryNonzero",
            Error::NotInSemigroup(_) => "NotInSemigroup",
            Error::RequiresSingleBranch(_) => "RequiresSingleBranch",
            Error::Parse(_) => "ParseError",
        }
    }

    /// Errors that mean the input curve itself is malformed.
    pub fn is_validation(&self) -> bool {
        matches!(
            self,
            Error::ZeroBranch { .. }
                | Error::OrderZero { .. }
                | Error::NonPrimitive { .. }
                | Error::EmptyCurve
                | Error::UnknownVertex(_)
                | Error::DuplicateVertex(_)
                | Error::InvalidMultiplicity { .. }
                | Error::NotATree(_)
                | Error::ArrowCountMismatch { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
