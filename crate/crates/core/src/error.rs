use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("Wolfram rule number {0} is out of range 0..=255")]
    RuleOutOfRange(u32),

    #[error("alphabet size {0} is not supported (need 2 <= q <= 256)")]
    InvalidAlphabet(usize),

    #[error("alphabet mismatch: {left} vs {right}")]
    AlphabetMismatch { left: usize, right: usize },

    #[error("symbol {symbol} is not below the alphabet size {q}")]
    SymbolOutOfRange { symbol: u32, q: usize },

    #[error("rule table has {actual} entries, expected {expected}")]
    TableLength { expected: usize, actual: usize },

    #[error("table of q^{width} entries with q = {q} exceeds the supported size")]
    TableTooLarge { q: usize, width: usize },

    #[error("operation requires a binary alphabet, got q = {0}")]
    NotBinary(usize),

    #[error("configuration must have at least one cell")]
    EmptyConfig,

    #[error("period {period} is not a multiple of the least period {least}")]
    PeriodMismatch { period: usize, least: usize },

    #[error("enumeration of {what} exceeds the cap of {cap}")]
    CapExceeded { what: String, cap: u64 },

    #[error("unsupported search radius {0} (supported: 1, 2)")]
    UnsupportedRadius(usize),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("invalid group: {0}")]
    InvalidGroup(String),

    #[error("map is not G-equivariant: {0}")]
    NotEquivariant(String),

    #[error("cellular automaton is not regular; configuration {witness} has no stabilizer-matching preimage")]
    NotRegular { witness: String },

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("soundness violation: {0}")]
    Unsound(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
