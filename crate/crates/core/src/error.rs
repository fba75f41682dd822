use alloc::boxed::Box;
use alloc::string::String;
use core::fmt;

use crate::calculator::MeasureId;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    EmptyDataset,
    /// A row has a different number of features than the first row, or the
    /// label vector length disagrees with the row count.
    ShapeMismatch {
        expected: usize,
        found: usize,
        row: Option<usize>,
    },
    NonFiniteFeature {
        row: usize,
        column: usize,
    },
    NonBinaryLabels {
        found: usize,
    },
    UnknownFixture(String),
    SingleClass,
    ClassTooSmall {
        class: usize,
        count: usize,
        required: usize,
    },
    EmptyCandidates,
    ZeroWeightVector,
    UnknownMeasure(String),
    WeightLengthMismatch {
        expected: usize,
        found: usize,
    },
    InvalidWeight {
        index: usize,
    },
    NotFitted,
    /// Failure of a single measure during `fit`.
    Measure {
        id: MeasureId,
        source: Box<Error>,
    },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::EmptyDataset => write!(f, "dataset needs at least 2 instances and 1 feature"),
            Error::ShapeMismatch {
                expected,
                found,
                row: Some(row),
            } => write!(f, "row {row} has {found} values, expected {expected}"),
            Error::ShapeMismatch {
                expected,
                found,
                row: None,
            } => write!(f, "got {found} labels for {expected} rows"),
            Error::NonFiniteFeature { row, column } => {
                write!(f, "non-finite feature value at row {row}, column {column}")
            }
            Error::NonBinaryLabels { found } => {
                write!(f, "labels must contain exactly 2 classes, found {found}")
            }
            Error::UnknownFixture(name) => write!(f, "unknown fixture `{name}`"),
            Error::SingleClass => write!(f, "both classes must be present"),
            Error::ClassTooSmall {
                class,
                count,
                required,
            } => write!(
                f,
                "class {class} has {count} instance(s), at least {required} required"
            ),
            Error::EmptyCandidates => write!(f, "nearest-neighbour candidate set is empty"),
            Error::ZeroWeightVector => write!(f, "linear model has a zero weight vector"),
            Error::UnknownMeasure(name) => write!(f, "unknown measure `{name}`"),
            Error::WeightLengthMismatch { expected, found } => {
                write!(f, "expected {expected} weights, got {found}")
            }
            Error::InvalidWeight { index } => {
                write!(f, "weight {index} must be a positive finite number")
            }
            Error::NotFitted => write!(f, "calculator has not been fitted"),
            Error::Measure { id, source } => write!(f, "measure `{}` failed: {source}", id.name()),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for Error {}
