use thiserror::Error;

use crate::lie::Family;

/// Errors raised by the library. Every variant is a domain error: the CLI maps
/// them all to exit status 1.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid rank {rank} for type {family:?}")]
    InvalidRank { family: Family, rank: usize },

    #[error("parabolic has an empty marking")]
    EmptyMarking,

    #[error("marked root {index} is outside 1..={rank}")]
    MarkOutOfRange { index: usize, rank: usize },

    #[error("invalid partition {parts:?}: {reason}")]
    InvalidPartition { parts: Vec<u32>, reason: String },

    #[error("unknown exceptional orbit key {key:?} for {ty}")]
    UnknownExceptionalKey { ty: String, key: String },

    #[error("operation is undefined on the zero orbit")]
    ZeroOrbit,

    #[error("no recipe or table entry for {0}")]
    UnsupportedType(String),

    #[error("classification unknown: {0}")]
    UnknownClassification(String),

    #[error("parabolic {0} is not a polarization")]
    NotAPolarization(String),

    #[error("orbit {0} has no polarization")]
    NoPolarization(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("ambient dimension {0} exceeds the cone engine cap")]
    ConeDimensionCap(usize),

    #[error("matrix size {size} exceeds cap {cap}")]
    SizeCap { size: usize, cap: usize },

    #[error("matrix model requires a nonzero element")]
    ZeroElement,

    #[error("fiber is not pinned down by the sampled element")]
    NonFiniteFiber,

    #[error("unknown verification suite {0:?}")]
    UnknownSuite(String),

    #[error("parse error in {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("exceptional table: {0}")]
    Table(String),

    #[error("integer overflow while canonicalising a cone ray")]
    Overflow,
}

impl Error {
    /// Stable machine-readable kind used in structured error output.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidRank { .. } => "InvalidRank",
            Error::EmptyMarking => "EmptyMarking",
            Error::MarkOutOfRange { .. } => "MarkOutOfRange",
            Error::InvalidPartition { .. } => "InvalidPartition",
            Error::UnknownExceptionalKey { .. } => "UnknownExceptionalKey",
            Error::ZeroOrbit => "ZeroOrbit",
            Error::UnsupportedType(_) => "UnsupportedType",
            Error::UnknownClassification(_) => "UnknownClassification",
            Error::NotAPolarization(_) => "NotAPolarization",
            Error::NoPolarization(_) => "NoPolarization",
            Error::DimensionMismatch { .. } => "DimensionMismatch",
            Error::ConeDimensionCap(_) => "ConeDimensionCap",
            Error::SizeCap { .. } => "SizeCap",
            Error::ZeroElement => "ZeroElement",
            Error::NonFiniteFiber => "NonFiniteFiber",
            Error::UnknownSuite(_) => "UnknownSuite",
            Error::Parse { .. } => "Parse",
            Error::Table(_) => "Table",
            Error::Overflow => "Overflow",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
