use thiserror::Error;

use crate::diagram::Cell;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("k and n must both be positive")]
    ZeroBound,
    #[error("expected {expected} parts, got {actual}")]
    WrongLength { expected: usize, actual: usize },
    #[error("parts are not weakly decreasing at part {index}")]
    NotWeaklyDecreasing { index: usize },
    #[error("largest part {part} exceeds n = {n}")]
    PartExceedsN { part: usize, n: usize },
    #[error("operation needs a non-empty cell set")]
    EmptySet,
    #[error("cell {0} is not in the diagram")]
    CellNotInSet(Cell),
    #[error("cell {0} is not a cell of the ambient diagram")]
    NotASubset(Cell),
    #[error("cell {0} has a zero coordinate")]
    InvalidCell(Cell),
    #[error("cell {0} appears twice")]
    DuplicateCell(Cell),
    #[error("index {index} is outside 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("unknown region tag `{0}`")]
    UnknownRegion(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DyckError {
    #[error("arm index {index} is outside 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("step sequence is not a Dyck path: {0}")]
    NotADyckPath(String),
    #[error("up step {step} has no later down step at height {height}")]
    NoMatchingDownStep { step: usize, height: usize },
}
