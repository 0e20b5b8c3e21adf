use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("images do not form a bijection of [{low}..{n}]: {reason}")]
    NotBijective { low: i64, n: i64, reason: String },

    #[error("simple transposition s_{j} needs j <= n - 1 (n = {n})")]
    SimpleOutOfRange { j: i64, n: i64 },

    #[error("permutation violates w(i) > w(i-1) for i <= 0 (fails at i = {at})")]
    NotInClass { at: i64 },

    #[error("partition {parts:?} has more than {n} parts")]
    TooManyParts { parts: Vec<u32>, n: i64 },

    #[error("not a partition: {0:?}")]
    InvalidPartition(Vec<u32>),

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("crossing ({col},{row}) is outside the grid for n = {n}")]
    CrossingOutOfRange { col: i64, row: i64, n: i64 },

    #[error("crossing set is not reduced: {crossings} crossings but length {length}")]
    NotReduced { crossings: usize, length: usize },

    #[error("label window too small: {0}")]
    WindowTooSmall(String),

    #[error("letter {letter} out of range 1..={n}")]
    LetterOutOfRange { letter: i64, n: i64 },

    #[error("strands {c} and {d} do not cross")]
    StrandsDoNotCross { c: i64, d: i64 },

    #[error("rc-graph does not come from a tableau: {0}")]
    NotGrassmannian(String),

    #[error("mismatched n: {0} vs {1}")]
    MismatchedN(i64, i64),

    #[error("coefficient overflow")]
    Overflow,

    #[error("polynomial is not a nonnegative combination of Schubert polynomials: {0}")]
    NotSchubertPositive(String),

    #[error("malformed input: {0}")]
    Parse(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
