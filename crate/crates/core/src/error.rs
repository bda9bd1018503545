use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty polynomial string")]
    EmptyInput,
    #[error("invalid digit {ch:?} at position {pos} (expected 0-3)")]
    InvalidDigit { ch: char, pos: usize },
    #[error("divisor is not monic")]
    NotMonic,
    #[error("division leaves a nonzero remainder")]
    InexactDivision,
    #[error("constant term {0} is not a unit mod 4")]
    NonUnitConstantTerm(u8),
    #[error("{base} is not coprime to {modulus}")]
    NotCoprime { base: u64, modulus: u64 },
    #[error("modulus {0} is even")]
    EvenModulus(u64),
    #[error("length must be odd (got {0})")]
    EvenLength(u64),
    #[error("length must be positive")]
    ZeroLength,
    #[error("x^{0}-1 has more irreducible factors than a divisor mask can hold")]
    TooManyFactors(u64),
    #[error("operands refer to different factor tables")]
    TableMismatch,
    #[error("factor {0} has no role assigned")]
    IncompleteAssignment(usize),
    #[error("{0} is not a divisor of x^n-1 over Z4")]
    NotADivisor(String),
    #[error("{0} and {1} share a factor of x^n-1")]
    OverlappingDivisors(String, String),
    #[error("code has 2^{log2_size} codewords, above the enumeration cap of {cap}")]
    CodeTooLarge { log2_size: u32, cap: u64 },
    #[error("{count} codes exceed the sweep cap of {cap}")]
    TooManyCodes { count: u128, cap: u128 },
    #[error("malformed generator: {0}")]
    MalformedGenerator(String),
    #[error("word length {got} does not match code length {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("code length {0} is too long for packed enumeration")]
    LengthTooLong(usize),
    #[error("malformed table row: {0}")]
    MalformedRow(String),
}
