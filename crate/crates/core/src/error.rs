use crate::series::VarFamily;

/// Crate-wide error type.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("series family mismatch: {0:?} vs {1:?}")]
    FamilyMismatch(VarFamily, VarFamily),
    #[error("t-degree {t_deg} exceeds truncation order {order}")]
    BeyondOrder { t_deg: u32, order: u32 },
    #[error("series in t alone has no indexed variables")]
    NoIndexedVariables,
    #[error("invalid monomial: {0}")]
    BadMonomial(String),
    #[error("invalid partition: {0}")]
    BadPartition(String),
    #[error("sheet count {n} outside supported range 1..={max}")]
    SheetsOutOfRange { n: usize, max: usize },
    #[error("query does not fit: {0}")]
    QueryDoesNotFit(String),
    #[error("invalid decomposition list: {0}")]
    BadDecompList(String),
    #[error("ground set of {size} elements exceeds supported bound {max}")]
    GroundSetTooLarge { size: usize, max: usize },
    #[error("outside formula domain: {0}")]
    OutsideDomain(String),
    #[error("truncation order {have} too small, need at least {need}")]
    InsufficientOrder { need: u32, have: u32 },
    #[error("unknown label: {0}")]
    UnknownLabel(String),
    #[error("malformed series data: {0}")]
    Parse(String),
}
