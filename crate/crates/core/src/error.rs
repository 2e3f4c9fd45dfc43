use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus must be at least 2, got {0}")]
    InvalidModulus(u64),
    #[error("modulus {0} is not prime; counting and bijections require a prime modulus")]
    NonPrimeModulus(u32),
    #[error("operation requires modulus {expected}, got {found}")]
    WrongModulus { expected: u32, found: u32 },
    #[error("modulus mismatch: {0} vs {1}")]
    ModulusMismatch(u32, u32),
    #[error("order mismatch: {0} vs {1}")]
    OrderMismatch(usize, usize),
    #[error("graph order must be at least 1")]
    ZeroOrder,

    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("negative exponent at position {0}")]
    NegativeExponent(usize),
    #[error("negative coefficient at position {0}")]
    NegativeCoefficient(usize),
    #[error("residue {value} out of range for modulus {p}")]
    ResidueOutOfRange { value: u64, p: u32 },
    #[error("f must have zero constant term (found {0})")]
    NonzeroConstantTerm(u32),

    #[error("letter component out of range at position {pos}: ({g},{f}) for modulus {p}")]
    LetterOutOfRange { pos: usize, g: u32, f: u32, p: u32 },
    #[error("not a p-Riordan word: {0}")]
    InvalidWord(String),

    #[error("not a permutation: {0}")]
    NotAPermutation(String),
    #[error("duplicate entry in sequence")]
    DuplicateEntry,
    #[error("permutation contains 123 or 132")]
    NotAvoider,
    #[error("expected even length, got {0}")]
    OddLength(usize),
    #[error("permutation is not in P_2n: {0}")]
    NotInP2n(String),
    #[error("fixed points {found:?} are not {{n, b}} with n = {n}")]
    FixedPointMismatch { n: usize, found: Vec<usize> },
    #[error("middle block mismatch at position {0}")]
    MiddleBlockMismatch(usize),

    #[error("letter {0:?} is not one of 0, 1, 2")]
    ForeignLetter(char),
    #[error("word is not balanced")]
    Unbalanced,
    #[error("letters {0} and {1} must be distinct ternary letters")]
    BadLetterPair(u8, u8),
    #[error("word is the excluded constant word for h_{{{0},{1}}}")]
    OutsideHDomain(u8, u8),
    #[error("last two letters must be distinct")]
    EqualSuffix,
    #[error("walk dimension {found} does not match expected {expected}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("step {step} outside 1..={dim}")]
    StepOutOfRange { step: usize, dim: usize },
    #[error("cube dimension {0} is too large for the transfer-matrix oracle")]
    DimensionTooLarge(usize),

    /// Two routes that must agree did not.
    #[error("internal consistency failure: {0}")]
    Consistency(String),
}

impl Error {
    /// True for failures that indicate a bug rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Consistency(_))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
