use thiserror::Error;

/// Every failure the library can report.
///
/// Variants are grouped by the exit-code class the CLI maps them to, see
/// [`Error::exit_code`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    // coefficient field
    #[error("scalars belong to different fields ({0} vs {1})")]
    FieldMismatch(String, String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("modulus {0} is not prime")]
    NonPrimeModulus(u64),

    // linear algebra
    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix too large: {entries} entries exceeds the limit of {limit}")]
    MatrixTooLarge { entries: usize, limit: usize },

    // polynomial rings
    #[error("operands live in different algebras")]
    AlgebraMismatch,
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("duplicate generator `{0}`")]
    DuplicateGenerator(String),
    #[error("polynomial degree {degree} exceeds bound {bound}")]
    DegreeTooLarge { degree: usize, bound: usize },
    #[error("bad generator index pair ({0}, {1})")]
    BadIndexPair(usize, usize),

    // dependence / centralizer / cancellation
    #[error("the Jacobian criterion requires characteristic zero, field has characteristic {0}")]
    CharacteristicNotZero(u64),
    #[error("annihilator search in the free algebra requires commuting inputs")]
    NonCommutingPair,
    #[error("input polynomial is constant")]
    ConstantInput,
    #[error("cannot decompose over a constant polynomial")]
    ConstantU,
    #[error("generators do not commute, so they are algebraically independent")]
    IndependentGenerators,
    #[error("some Jacobian of the generators is nonzero, so they are algebraically independent")]
    TranscendenceDegreeTwo,
    #[error("z-free part of the root is constant")]
    DegenerateU0,
    #[error("generator does not lie in the algebra of the computed root")]
    NotInRootAlgebra,
    #[error("internal verification failed: {0}")]
    InternalVerificationFailure(String),

    // text input
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("expression at line {line}, column {column} expands beyond the size limit")]
    ExpressionTooLarge { line: usize, column: usize },
    #[error("invalid JSON polynomial: {0}")]
    Json(String),
}

impl Error {
    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        use Error::*;
        match self {
            Parse { .. }
            | Json(_)
            | UnknownGenerator(_)
            | DuplicateGenerator(_)
            | BadIndexPair(..) => 1,
            MatrixTooLarge { .. } | DegreeTooLarge { .. } | ExpressionTooLarge { .. } => 3,
            InternalVerificationFailure(_) | NotInRootAlgebra | DimensionMismatch { .. } => 4,
            FieldMismatch(..)
            | DivisionByZero
            | NonPrimeModulus(_)
            | AlgebraMismatch
            | CharacteristicNotZero(_)
            | NonCommutingPair
            | ConstantInput
            | ConstantU
            | IndependentGenerators
            | TranscendenceDegreeTwo
            | DegenerateU0 => 2,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
