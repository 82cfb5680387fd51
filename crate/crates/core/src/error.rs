use thiserror::Error;

/// Everything that can go wrong while computing invariants.
///
/// Variants split into input errors (bad polynomial, bad group, out of range
/// requests) and internal invariant violations. The latter mean a bug in
/// this crate, never bad input; see [`LgError::is_internal`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LgError {
    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("unknown variable `{name}` at offset {offset} (expected x1, x2, ...)")]
    UnknownVariable { name: String, offset: usize },
    #[error("the polynomial is zero")]
    ZeroPolynomial,
    #[error("{terms} monomials in {variables} variables; an invertible polynomial needs as many monomials as variables")]
    NotSquare { terms: usize, variables: usize },
    #[error("exponent matrix is singular")]
    SingularExponentMatrix,
    #[error("weight q_{index} = {weight} lies outside (0, 1/2]")]
    WeightOutOfRange { index: usize, weight: String },
    #[error("exponent matrix is not a sum of Fermat, chain and loop blocks: {reason}")]
    NotAtomicDecomposable { reason: String },
    #[error("exponent matrix too large for exact small-integer arithmetic (|det| = {det})")]
    TooLarge { det: String },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("generator {generator} is not a symmetry of the polynomial")]
    GeneratorNotInAmbient { generator: String },
    #[error("group element {element} is not in the maximal diagonal symmetry group")]
    GroupNotInMaxSymmetry { element: String },
    #[error("restriction to the fixed locus {fixed:?} is not invertible: {reason}")]
    RestrictionNotInvertible { fixed: Vec<usize>, reason: String },
    #[error("requested degree {degree} exceeds the configured bound {bound}")]
    DegreeTooLarge { degree: u32, bound: u32 },
    #[error("element is not homogeneous (found degrees {first} and {second})")]
    NotHomogeneous { first: u32, second: u32 },
    #[error("series division by a series with zero constant term")]
    DivisionByNonUnit,
    #[error("series reversion needs zero constant term and invertible linear term")]
    ReversionNotDefined,
    #[error("composition needs an inner series with zero constant term")]
    CompositionNotDefined,
    #[error("pole at the requested point psi = {psi}")]
    PoleAtRequestedPoint { psi: String },
    #[error("chain word outside the implemented catalog: {word}")]
    WordOutsideCatalog { word: String },
    #[error("invalid group generators: {0}")]
    GroupSyntax(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl LgError {
    /// True for violations of internal invariants (exit code 3 in the CLI).
    pub fn is_internal(&self) -> bool {
        matches!(self, LgError::Internal(_))
    }

    pub(crate) fn internal(msg: impl Into<String>) -> Self {
        LgError::Internal(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, LgError>;
