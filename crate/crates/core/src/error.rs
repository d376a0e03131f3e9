use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid group: {0}")]
    InvalidGroup(String),
    #[error("invalid class label: {0}")]
    InvalidClass(String),
    #[error("invalid symbol: {0}")]
    InvalidSymbol(String),
    #[error("defect mismatch: {0} vs {1}")]
    DefectMismatch(i64, i64),
    #[error("negative rank {0}")]
    NegativeRank(i64),
    #[error("symbol is not distinguished: {0}")]
    NotDistinguished(String),
    #[error("no qualifying generator: {0}")]
    NoGenerator(String),
    #[error("invalid local system: {0}")]
    InvalidLocalSystem(String),
    #[error("invalid bipartition: {0}")]
    InvalidBipartition(String),
    #[error("semi-intervals overlap")]
    Overlap,
    #[error("dimension {0} is odd")]
    OddDimension(usize),
    #[error("quadratic form is degenerate")]
    Degenerate,
    #[error("matrix is not unipotent")]
    NotUnipotent,
    #[error("kernel dimension {dim} exceeds enumeration cap {cap}")]
    KernelTooLarge { dim: usize, cap: usize },
    #[error("no descent found for {0}")]
    NoDescent(String),
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
