use thiserror::Error;

/// Every failure the kernel can report.
///
/// `Parse` is the only variant produced by the literal grammars; everything
/// else is a domain error raised by a kernel operation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("division by zero")]
    DivisionByZero,
    #[error("divisor must be positive")]
    NonPositiveDivisor,
    #[error("divisibility by zero is undefined")]
    ZeroDivisorQuery,
    #[error("gcd(0, 0) is undefined")]
    BothZero,
    #[error("argument must be nonzero")]
    ZeroArgument,
    #[error("argument out of domain: {0}")]
    OutOfDomain(String),
    #[error("base must lie in 2..=16")]
    BadBase,
    #[error("value must be nonnegative")]
    NegativeValue,
    #[error("unknown kind: {0}")]
    UnknownKind(String),
    #[error("unbound atom: {0}")]
    UnboundAtom(String),
    #[error("too many atoms ({0}); at most 20 are supported")]
    TooManyAtoms(usize),
    #[error("set is not a subset of the universe")]
    NotASubset,
    #[error("too large: {0}")]
    TooLarge(String),
    #[error("inconsistent counts: {0}")]
    InconsistentCounts(String),
    #[error("domain mismatch: {0}")]
    DomainMismatch(String),
    #[error("relation is not an endorelation")]
    NotEndorelation,
    #[error("mapping is not a bijection")]
    NotBijective,
    #[error("mixed atom kinds in one set")]
    MixedAtoms,
    #[error("carrier mismatch")]
    CarrierMismatch,
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("matrix is not square")]
    NotSquare,
    #[error("method not applicable: {0}")]
    BadMethod(String),
    #[error("index out of range")]
    IndexOutOfRange,
    #[error("singular matrix")]
    Singular,
    #[error("singular system")]
    SingularSystem,
    #[error("inconsistent system")]
    Inconsistent,
    #[error("degree must be at least 2")]
    BadDegree,
    #[error("zero vector")]
    ZeroVector,
    #[error("basis vectors are linearly dependent")]
    DependentBasis,
    #[error("target is not in the span of the basis")]
    NotInSpan,
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("points are collinear")]
    CollinearPoints,
    #[error("coefficient is zero")]
    ZeroCoefficient,
    #[error("points coincide")]
    CoincidentPoints,
    #[error("planes are parallel")]
    ParallelPlanes,
    #[error("no solution")]
    NoSolution,
    #[error("weights must be positive and the total positive")]
    BadWeights,
    #[error("wrong number of known quantities")]
    WrongArity,
    #[error("value must be positive")]
    NonPositive,
    #[error("a percent change of -100% or less annihilates the chain")]
    AnnihilatingDelta,
    #[error("target intensity lies outside the component range")]
    Unsolvable,
    #[error("unequal number of values above and below the target")]
    UnbalancedSides,
    #[error("a component value equals the target")]
    TargetCollision,
}

impl Error {
    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse { pos, msg: msg.into() }
    }

    pub fn is_parse(&self) -> bool {
        matches!(self, Error::Parse { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
