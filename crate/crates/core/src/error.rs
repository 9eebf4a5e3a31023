use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArrangementError {
    #[error("hyperplane {index} has a zero normal vector")]
    ZeroNormal { index: usize },
    #[error("hyperplane {second} defines the same subspace as hyperplane {first}")]
    DuplicateHyperplane { first: usize, second: usize },
    #[error("hyperplane {index} has {found} coefficients, expected {expected}")]
    DimensionMismatch {
        index: usize,
        expected: usize,
        found: usize,
    },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("hyperplane index {index} out of range for an arrangement of {len}")]
    IndexOutOfRange { index: usize, len: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("flat {0} is not in the poset")]
    FlatNotFound(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SurgeryError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("malformed Betti sequence: {0}")]
    MalformedBetti(String),
    #[error("surgery table disagrees with the complement formula at residue {residue}")]
    Inconsistent { residue: u8 },
}
