use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty braid word")]
    EmptyWord,
    #[error("braid letter at position {0} is zero")]
    ZeroLetter(usize),
    #[error("cannot parse {0:?} as an integer")]
    BadToken(String),
    #[error("closure has {0} components, expected a knot")]
    NotAKnot(usize),
    #[error("diagram has {0} crossings, an even count is required")]
    OddLength(usize),
    #[error("overstrand list has {over} entries but sign list has {sign}")]
    LengthMismatch { over: usize, sign: usize },
    #[error("value out of range: {0}")]
    RangeError(String),
    #[error("p = {0} is not supported, p must be odd and at least 3")]
    UnsupportedP(u32),
    #[error("invalid coloring: {0}")]
    InvalidColoring(String),
    #[error("invalid initial configuration: {0}")]
    InvalidConfiguration(String),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("component K^{0} is not rationally null-homologous")]
    NotSolvable(usize),
    #[error("lk(K^{j}, K^{k}) = {forward} but lk(K^{k}, K^{j}) = {backward}")]
    SymmetryViolation {
        j: usize,
        k: usize,
        forward: String,
        backward: String,
    },
}
