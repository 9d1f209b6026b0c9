use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong between a formula string and a posterior.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("empty formula")]
    EmptyFormula,

    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("atom `{0}` missing from assignment")]
    MissingAtom(String),

    #[error("problem has {atoms} atoms, exceeding the enumeration cap of {cap}")]
    AtomCapExceeded { atoms: usize, cap: usize },

    #[error("sentence index {index} out of range for {count} sentences")]
    SentenceIndexOutOfRange { index: usize, count: usize },

    #[error("world length {left} does not match {right}")]
    WorldLengthMismatch { left: usize, right: usize },

    #[error("expansions of distinct worlds overlap")]
    OverlappingExpansions,

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("sentence lists differ")]
    SentenceListMismatch,

    #[error("belief attached to sentence {index}, which is not a source")]
    BeliefOnNonSource { index: usize },

    #[error("probability {0} outside [0, 1]")]
    InvalidProbability(f64),

    #[error("interval [{lo}, {hi}] is not an ordered pair of probabilities")]
    InvalidInterval { lo: f64, hi: f64 },

    #[error("expected width {expected}, got {actual}")]
    WidthMismatch { expected: usize, actual: usize },

    #[error("constraint system is infeasible")]
    Infeasible,

    #[error("linear program is unbounded")]
    Unbounded,

    #[error("weight vector violates the constraint system")]
    InfeasibleWeights,

    #[error("sentence {index} has no don't-care cells to assess")]
    NothingToAssess { index: usize },

    #[error("don't-care cells carry no weight but the prior {prior} differs from the certain mass {base}")]
    ZeroDcMass { prior: f64, base: f64 },

    #[error("assessment value {0} outside [0, 1]")]
    AssessmentOutOfRange(f64),

    #[error("assessment key {world} is not a don't-care cell of sentence {sentence}")]
    AssessmentKeyNotDc { sentence: usize, world: usize },

    #[error("sentence {sentence} lacks an assessment for world {world}")]
    MissingAssessment { sentence: usize, world: usize },

    #[error("prior {0} must lie strictly between 0 and 1 for posterior-form evidence")]
    DegeneratePrior(f64),

    #[error("evidence has zero likelihood under the prior")]
    ZeroLikelihood,

    #[error("line {line}: {message}")]
    FileFormat { line: usize, message: String },

    #[error("unknown sentence `{0}`")]
    UnknownSentence(String),

    #[error("world index {index} out of range for {count} worlds")]
    WorldIndexOutOfRange { index: usize, count: usize },

    #[error("problem does not match the conj-mp schema: {0}")]
    SchemaMismatch(String),

    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },

    #[error("{0}")]
    Usage(String),
}
