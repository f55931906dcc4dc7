use thiserror::Error;

use crate::gf::Field;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("symbol {0} is outside the canonical GF(4) encoding 0..=3")]
    BadSymbol(u8),
    #[error("symbol {symbol} does not lie in {field}")]
    NotInField { symbol: u8, field: Field },
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("field mismatch: {left} vs {right}")]
    FieldMismatch { left: Field, right: Field },
    #[error("shape error: {0}")]
    Shape(String),
    #[error("rows are linearly dependent (rank {rank} < {rows} rows)")]
    Dependent { rank: usize, rows: usize },
    #[error("{blocks} blocks is too few; at least {min} required")]
    TooFewBlocks { blocks: usize, min: usize },
    #[error("enumeration of {size} vectors exceeds the limit of {limit}")]
    TooLarge { size: u128, limit: u128 },
    #[error("unknown preset: {0}")]
    UnknownPreset(String),
    #[error("unknown decoder {decoder:?} for code {code}")]
    UnknownDecoder { code: String, decoder: String },
    #[error("syndrome index {index} outside table of {size} entries")]
    SyndromeOutOfRange { index: usize, size: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("no single-error table exists for {0}: weight-1 errors are not separable in either scan order")]
    NoSingleErrorTable(String),
    #[error("insufficient data: {0}")]
    InsufficientData(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid code: {0}")]
    InvalidCode(String),
}
