use core::fmt;

/// Errors raised by constructors and operations of this crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Matrix dimension outside `1..=64`.
    DimensionOutOfRange {
        dim: usize,
    },
    DimensionMismatch {
        left: usize,
        right: usize,
    },
    /// A row word has bits set beyond the matrix dimension.
    RowOutOfRange {
        row: usize,
    },
    Singular,
    /// The leading principal minor of order `minor` is singular, so no
    /// unit-triangular LU factorization exists.
    NotDecomposable {
        minor: usize,
    },
    PrefixOutOfRange {
        k: usize,
        dim: usize,
    },
    IndexOutOfRange {
        n: u64,
        m: usize,
    },
    /// Instance exceeds a materialization or enumeration cap.
    TooLarge {
        what: &'static str,
        value: usize,
        cap: usize,
    },
    PrecisionExceedsDepth {
        precision: usize,
        depth: usize,
    },
    CountExceedsWindow {
        count: u64,
        depth: usize,
    },
    EmptyTuple,
    /// A factor violates its triangularity or nonsingularity precondition.
    InvalidFactor(&'static str),
    TOutOfRange {
        t: usize,
        m: usize,
    },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DimensionOutOfRange { dim } => {
                write!(f, "dimension {dim} outside the supported range 1..=64")
            }
            Error::DimensionMismatch { left, right } => {
                write!(f, "dimension mismatch: {left} vs {right}")
            }
            Error::RowOutOfRange { row } => {
                write!(f, "row {row} has bits beyond the matrix dimension")
            }
            Error::Singular => f.write_str("matrix is singular"),
            Error::NotDecomposable { minor } => {
                write!(f, "leading principal minor of order {minor} is singular")
            }
            Error::PrefixOutOfRange { k, dim } => {
                write!(f, "prefix size {k} outside 1..={dim}")
            }
            Error::IndexOutOfRange { n, m } => write!(f, "index {n} does not fit in {m} digits"),
            Error::TooLarge { what, value, cap } => {
                write!(f, "{what} = {value} exceeds the cap {cap}")
            }
            Error::PrecisionExceedsDepth { precision, depth } => {
                write!(f, "precision {precision} exceeds prefix depth {depth}")
            }
            Error::CountExceedsWindow { count, depth } => {
                write!(f, "{count} points do not fit a window of depth {depth}")
            }
            Error::EmptyTuple => f.write_str("generator tuple is empty"),
            Error::InvalidFactor(what) => write!(f, "invalid factor: {what}"),
            Error::TOutOfRange { t, m } => write!(f, "t = {t} exceeds m = {m}"),
        }
    }
}

impl core::error::Error for Error {}
