use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: duplicate alphabet symbol '{symbol}'")]
    DuplicateSymbol { line: usize, symbol: char },
    #[error("line {line}: symbol '{symbol}' is not in the alphabet")]
    UnknownSymbol { line: usize, symbol: char },
    #[error("line {line}: '{symbol}' cannot be used as an alphabet symbol")]
    ReservedSymbol { line: usize, symbol: char },
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error("missing `alphabet:` line")]
    MissingAlphabet,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    /// A relation side is the empty word, so the presentation is not even C(1).
    #[error("relation word {index} is the empty word")]
    EmptyRelationWord { index: usize },
    #[error("presentation does not satisfy C(4)")]
    NotC4,
    #[error("total relation length {total} exceeds the cap {cap}")]
    CapExceeded { total: usize, cap: usize },
    /// The rewrite closure hit its member cap before it was complete.
    #[error("undecided: equivalence class exceeded {cap} members")]
    Undecided { cap: usize },
    #[error("{0} is not a piece")]
    NotAPiece(String),
    #[error("no qualifying complement: {0}")]
    NoQualifyingComplement(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
