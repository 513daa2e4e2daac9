use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("symbols must be positive integers, found {0}")]
    ZeroSymbol(u32),

    #[error("symbol {symbol} exceeds the alphabet bound {n}")]
    SymbolOutOfRange { symbol: u32, n: u32 },

    #[error("alphabet bound must be at least 1")]
    EmptyAlphabet,

    #[error("word `{0}` is not standard")]
    NotStandard(String),

    #[error("weight mismatch: {0} vs {1}")]
    WeightMismatch(usize, usize),

    #[error("composition parts must be positive")]
    ZeroPart,

    #[error("partition parts must be positive and non-increasing")]
    NotPartition,

    #[error("parts sum to {actual}, expected {expected}")]
    SumMismatch { expected: usize, actual: usize },

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("shape mismatch between tableau and recording ribbon")]
    ShapeMismatch,

    #[error("{what} of size {size} exceeds the enumeration guard {limit}")]
    TooLarge {
        what: &'static str,
        size: usize,
        limit: usize,
    },

    #[error("composition has {parts} parts but the alphabet only has {n} symbols")]
    AlphabetTooSmall { parts: usize, n: u32 },

    #[error("`{0}` is not a quasi-ribbon word")]
    NotQuasiRibbonWord(String),

    #[error("parse error: {0}")]
    Parse(String),
}
