use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Every failure the library can report.
///
/// [`Error::code`] gives a stable identifier per variant, suitable for
/// machine-parsable diagnostics.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u32),
    #[error("modulus has length {got}, expected {expected}")]
    BadLength { expected: usize, got: usize },
    #[error("modulus is not monic")]
    NotMonic,
    #[error("modulus is reducible over GF({p})")]
    ReducibleModulus { p: u32 },
    #[error("value {value} is not an element of a field of order {order}")]
    ElementOutOfRange { value: u64, order: u32 },
    #[error("operands live in different fields")]
    FieldMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("gcd of two zero polynomials")]
    BothZero,
    #[error("denominator has zero constant term")]
    DenominatorNotUnit,
    #[error("the code carries no {0} matrix and none can be derived")]
    MissingMatrix(&'static str),
    #[error("operation needs an (n, n-1) code, got k = {k}, n = {n}")]
    NotRateNMinus1 { n: usize, k: usize },
    #[error("the normalizing parity entry has zero constant term")]
    A1NotUnit,
    #[error("matrix does not have full row rank")]
    RankDeficient,
    #[error("matrix is not basic (full-size minors share a common factor)")]
    NotBasic,
    #[error("declared degree {declared} but the matrices have degree {computed}")]
    DegreeMismatch { declared: usize, computed: usize },
    #[error("G * H^T is not zero")]
    NotOrthogonal,
    #[error("invalid parameters: {0}")]
    BadParams(String),
    #[error("search would need more than {budget} candidates")]
    BudgetExceeded { budget: u64 },
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("Toeplitz matrix is not superregular")]
    NotSuperregular,
    #[error("systematic parity matrix violates the column property")]
    ColumnPropertyFailed,
    #[error("denominator system has no solution")]
    SystemInconsistent,
    #[error("no superregular Toeplitz matrix of size {0} found")]
    NoSuperregularFound(usize),
    #[error("(n-1) = {n_minus_1} does not divide delta = {delta}")]
    DivisibilityViolated { n_minus_1: usize, delta: usize },
    #[error("certificate failed: {0}")]
    CertificateFailed(String),
    #[error("code is not strongly MDS")]
    NotStronglyMds,
    #[error("window [{start}, {end}] exceeds horizon {horizon}")]
    HorizonExceeded { start: usize, end: usize, horizon: usize },
    #[error("no error pattern of weight <= {t} explains the syndrome")]
    NoSolution { t: usize },
    #[error("low-weight syndrome solutions disagree on the first block")]
    Ambiguous,
    #[error("error pattern infeasible: {0}")]
    Infeasible(String),
    #[error("matrix is singular")]
    Singular,
    #[error("band criterion disagrees with the determinant sign")]
    BandCriterionMismatch,
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

impl Error {
    /// Stable identifier of the variant.
    pub fn code(&self) -> &'static str {
        match self {
            Error::NotPrime(_) => "NotPrime",
            Error::BadLength { .. } => "BadLength",
            Error::NotMonic => "NotMonic",
            Error::ReducibleModulus { .. } => "ReducibleModulus",
            Error::ElementOutOfRange { .. } => "ElementOutOfRange",
            Error::FieldMismatch => "FieldMismatch",
            Error::DivisionByZero => "DivisionByZero",
            Error::BothZero => "BothZero",
            Error::DenominatorNotUnit => "DenominatorNotUnit",
            Error::MissingMatrix(_) => "MissingMatrix",
            Error::NotRateNMinus1 { .. } => "NotRateNMinus1",
            Error::A1NotUnit => "A1NotUnit",
            Error::RankDeficient => "RankDeficient",
            Error::NotBasic => "NotBasic",
            Error::DegreeMismatch { .. } => "DegreeMismatch",
            Error::NotOrthogonal => "NotOrthogonal",
            Error::BadParams(_) => "BadParams",
            Error::BudgetExceeded { .. } => "BudgetExceeded",
            Error::ShapeMismatch(_) => "ShapeMismatch",
            Error::NotSuperregular => "NotSuperregular",
            Error::ColumnPropertyFailed => "ColumnPropertyFailed",
            Error::SystemInconsistent => "SystemInconsistent",
            Error::NoSuperregularFound(_) => "NoSuperregularFound",
            Error::DivisibilityViolated { .. } => "DivisibilityViolated",
            Error::CertificateFailed(_) => "CertificateFailed",
            Error::NotStronglyMds => "NotStronglyMds",
            Error::HorizonExceeded { .. } => "HorizonExceeded",
            Error::NoSolution { .. } => "NoSolution",
            Error::Ambiguous => "Ambiguous",
            Error::Infeasible(_) => "Infeasible",
            Error::Singular => "Singular",
            Error::BandCriterionMismatch => "BandCriterionMismatch",
            Error::Parse { .. } => "Parse",
        }
    }
}
