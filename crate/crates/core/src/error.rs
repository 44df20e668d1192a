//! Error type shared by the whole crate.

use std::fmt;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong in this crate.
///
/// Errors split into two families: invalid input (rejected before any
/// computation runs) and numerical failures (a computation ran and could not
/// produce a trustworthy value). [`Error::is_input_error`] encodes the split.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A vector was constructed from an empty coordinate list.
    EmptyVector,
    /// A vector coordinate is NaN or infinite.
    NonFiniteCoordinate { index: usize },
    /// The lp exponent is below 1 or not finite.
    InvalidExponent { p: f64 },
    /// A configuration invariant does not hold.
    InvalidConfig(&'static str),
    /// An operation that needs a nonzero vector received the zero vector.
    ZeroVector(&'static str),
    /// A basis list was empty.
    EmptyBasis,
    /// One-sided derivative estimates did not stabilize across the step
    /// sequence; `spread` is the smallest gap between successive extrapolants.
    DerivativeUnstable { spread: f64 },
    /// The Gram determinant is (numerically) zero, so projection is undefined.
    SingularGram { gamma: f64 },
    /// Orthonormalization broke down at `index` (dependent input or vanishing
    /// intermediate Gram determinant).
    OrthonormalizationFailure { index: usize },
    /// A claimed basis pair is linearly dependent.
    DependentBasis(&'static str),
    /// A Euclidean Gram determinant came out negative beyond roundoff.
    NegativeGramDeterminant { det: f64 },
    /// A pair passed as left orthonormal fails the orthonormality check;
    /// `defect` is the largest violation found.
    NotLeftOrthonormal { defect: f64 },
    /// Every angle in the basis sweep failed to orthonormalize.
    DegenerateSubspace,
    /// A cosine ratio exceeded 1 by more than the accepted band, meaning the
    /// denominator estimate is too low relative to the numerator.
    OptimizerInconsistency { cos_sq: f64 },
}

impl Error {
    /// True for errors detectable by validating inputs alone, false for
    /// failures of the numerics.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::EmptyVector
                | Error::NonFiniteCoordinate { .. }
                | Error::InvalidExponent { .. }
                | Error::InvalidConfig(_)
                | Error::ZeroVector(_)
                | Error::EmptyBasis
        )
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::EmptyVector => write!(f, "vector must have at least one coordinate"),
            Error::NonFiniteCoordinate { index } => {
                write!(f, "coordinate {index} is not a finite real number")
            }
            Error::InvalidExponent { p } => {
                write!(f, "lp exponent must be a finite real >= 1, got {p}")
            }
            Error::InvalidConfig(msg) => write!(f, "invalid configuration: {msg}"),
            Error::ZeroVector(what) => write!(f, "{what} requires a nonzero vector"),
            Error::EmptyBasis => write!(f, "basis must contain at least one vector"),
            Error::DerivativeUnstable { spread } => write!(
                f,
                "one-sided derivative extrapolation did not stabilize (best spread {spread:e})"
            ),
            Error::SingularGram { gamma } => {
                write!(f, "singular Gram determinant (gamma = {gamma:e})")
            }
            Error::OrthonormalizationFailure { index } => {
                write!(f, "orthonormalization failed at vector {index}")
            }
            Error::DependentBasis(what) => write!(f, "{what}: basis vectors are dependent"),
            Error::NegativeGramDeterminant { det } => {
                write!(f, "Euclidean Gram determinant is negative ({det:e})")
            }
            Error::NotLeftOrthonormal { defect } => write!(
                f,
                "pair is not left orthonormal (largest defect {defect:e})"
            ),
            Error::DegenerateSubspace => {
                write!(f, "every basis angle in the sweep was degenerate")
            }
            Error::OptimizerInconsistency { cos_sq } => write!(
                f,
                "cosine ratio {cos_sq} exceeds 1 beyond tolerance; raise the sample budget"
            ),
        }
    }
}

impl std::error::Error for Error {}
