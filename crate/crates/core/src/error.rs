use std::path::PathBuf;

/// Errors raised anywhere in the toolkit.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("malformed cycle notation at column {column}: {reason}")]
    MalformedCycle { column: usize, reason: String },
    #[error("point {point} is out of range for degree {degree}")]
    PointOutOfRange { point: u64, degree: usize },
    #[error("point {point} appears more than once")]
    RepeatedPoint { point: u64 },
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("image list is not a permutation of 1..{degree}")]
    NotABijection { degree: usize },
    #[error("empty generator list")]
    EmptyGeneratorList,
    #[error("group of order {order} exceeds the enumeration cap of {cap}")]
    EnumerationCapExceeded { order: u128, cap: usize },
    #[error("group order does not fit in 128 bits")]
    OrderOverflow,
    #[error("element {element} is not a member of the group")]
    NotAMember { element: String },
    #[error("generator {generator} of the given subgroup is not in the group")]
    NotASubgroup { generator: String },
    #[error("group of order {order} exceeds the subgroup-lattice cap of {cap}")]
    LatticeCapExceeded { order: u128, cap: usize },
    #[error("no exhaustive subgroup search strategy applies to order {order} in a group of order {group_order}")]
    UnsupportedSearch { order: u64, group_order: u128 },
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("degree {degree} exceeds the limit {limit} for {family}")]
    DegreeLimitExceeded { family: &'static str, degree: usize, limit: usize },
    #[error("{matches} extension variants match the reference order equation, expected exactly one")]
    AmbiguousIdentification { matches: usize },
    #[error("search exhausted without a result: {0}")]
    SearchExhausted(String),
    #[error("parse error at line {line}, column {column}: {reason}")]
    ParseError { line: usize, column: usize, reason: String },
    #[error("{0}")]
    UsageError(String),
    #[error("i/o error on {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("cache entry {path} is corrupt: {reason}")]
    CorruptCache { path: PathBuf, reason: String },
}

impl Error {
    /// Short variant name, used by the command line when reporting failures.
    pub fn name(&self) -> &'static str {
        match self {
            Error::MalformedCycle { .. } => "MalformedCycle",
            Error::PointOutOfRange { .. } => "PointOutOfRange",
            Error::RepeatedPoint { .. } => "RepeatedPoint",
            Error::DegreeMismatch { .. } => "DegreeMismatch",
            Error::NotABijection { .. } => "NotABijection",
            Error::EmptyGeneratorList => "EmptyGeneratorList",
            Error::EnumerationCapExceeded { .. } => "EnumerationCapExceeded",
            Error::OrderOverflow => "OrderOverflow",
            Error::NotAMember { .. } => "NotAMember",
            Error::NotASubgroup { .. } => "NotASubgroup",
            Error::LatticeCapExceeded { .. } => "LatticeCapExceeded",
            Error::UnsupportedSearch { .. } => "UnsupportedSearch",
            Error::NotPrime(_) => "NotPrime",
            Error::DegreeLimitExceeded { .. } => "DegreeLimitExceeded",
            Error::AmbiguousIdentification { .. } => "AmbiguousIdentification",
            Error::SearchExhausted(_) => "SearchExhausted",
            Error::ParseError { .. } => "ParseError",
            Error::UsageError(_) => "UsageError",
            Error::Io { .. } => "Io",
            Error::CorruptCache { .. } => "CorruptCache",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
