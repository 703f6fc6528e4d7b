use thiserror::Error;

use crate::rational::Rational;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Errors raised by the library. Events are carried pre-rendered (`{a,b}`)
/// so that messages stay readable without access to the universe.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("universe must contain at least one atom")]
    EmptyUniverse,
    #[error("universe has {0} atoms, at most {max} are supported", max = crate::universe::MAX_ATOMS)]
    TooManyAtoms(usize),
    #[error("duplicate atom `{0}`")]
    DuplicateAtom(String),
    #[error("bad atom name `{0}`: names must be nonempty and use only [A-Za-z0-9_]")]
    BadAtomName(String),
    #[error("unknown atom `{0}`")]
    UnknownAtom(String),
    #[error("malformed event literal `{0}`, expected e.g. {{a,b}}")]
    BadEventLiteral(String),
    #[error("event {0} lies outside the universe")]
    EventOutOfUniverse(String),
    #[error("operands live on different universes")]
    UniverseMismatch,

    #[error("table has {got} entries, expected {expected}")]
    TableSize { expected: usize, got: usize },
    #[error("value {value} at {event} is outside [0,1]")]
    ValueOutOfRange { event: String, value: Rational },
    #[error("not a confidence measure: {0}")]
    NotAConfidenceMeasure(String),

    #[error("bad distribution: {0}")]
    BadDistribution(String),
    #[error("focal subsets must be nonempty")]
    EmptyFocal,
    #[error("mass at {event} is {value}, masses must be positive")]
    NonPositiveMass { event: String, value: Rational },
    #[error("masses sum to {0}, expected 1")]
    MassSumNotOne(Rational),
    #[error("possibility distribution is not normalized: max is {0}, expected 1")]
    NotNormalized(Rational),

    #[error("inconsistent skeleton: {0}")]
    SkeletonInconsistent(String),
    #[error("incomplete skeleton coverage: {0}")]
    IncompleteCoverage(String),

    #[error("internal contradiction: undecided events carry distinct values ({0})")]
    IndifferenceViolation(String),
    #[error("universe of size {n} is too large for the brute-force oracle (max {max})")]
    UniverseTooLargeForOracle { n: usize, max: usize },
    #[error("universe of size {n} is too large for an exhaustive sweep (max {max}); use sampled mode")]
    UniverseTooLargeForExhaustive { n: usize, max: usize },

    #[error("context must be a nonempty event")]
    EmptyContext,
    #[error("not an acceptance function: kernel {0} is not accepted")]
    NotAcceptanceFunction(String),
    #[error("context {0} has zero probability")]
    ZeroProbabilityContext(String),
    #[error("context {0} has zero possibility")]
    ZeroPossibilityContext(String),
}
