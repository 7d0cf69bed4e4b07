//! Error type shared by every module in the crate.

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, LabError>;

/// Failure modes of the laboratory.
///
/// Every operation validates its preconditions up front and reports a
/// precise, named violation instead of producing garbage numbers.
#[derive(Debug, thiserror::Error)]
pub enum LabError {
    /// Two grid-carrying values were combined but live on different grids.
    #[error("grid mismatch: {0}")]
    GridMismatch(String),

    /// A stated precondition of the operation does not hold.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// A sampled value came out NaN or infinite.
    #[error("non-finite sample at grid index {index}: {context}")]
    NonFinite { index: usize, context: String },

    /// A scale index fell outside the family's declared range.
    #[error("scale {k} outside range [{k_min}, {k_max}]")]
    ScaleOutOfRange { k: i32, k_min: i32, k_max: i32 },

    /// The grid cannot resolve the requested object.
    #[error("under-resolved: {context}; requires log2_points >= {required_log2}")]
    UnderResolved { context: String, required_log2: u32 },

    /// Input data violated a value-level requirement (e.g. negative density).
    #[error("invalid data: {0}")]
    InvalidData(String),

    /// File-system error while exporting reports.
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

impl LabError {
    /// Convenience constructor for precondition failures.
    pub fn pre(msg: impl Into<String>) -> Self {
        LabError::Precondition(msg.into())
    }
}
