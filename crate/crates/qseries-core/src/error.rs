//! Error type shared across the kernel.

use std::fmt;

/// Everything that can go wrong while building or combining series.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Operands live on different exponent lattices, or the lattice is too
    /// coarse for the exponents the operation needs.
    ScaleMismatch(String),
    /// `invert_unit` needs the lowest-exponent term to be a single monomial.
    NotAUnit(String),
    /// A factor 1/(1 +- x^d) with zero q-exponent has no expansion in the
    /// bivariate ring; the caller must specialize x first.
    DenominatorNotExpandable(String),
    /// 1/(1 - 1) has no series expansion.
    PoleAtOne,
    /// An infinite product whose factors never stabilize at the truncation
    /// order (base exponent <= 0).
    DivergentProduct(String),
    /// A lattice sum whose exponent form does not grow on the allowed
    /// quadrants, so no finite truncation bound exists.
    NonTruncatable(String),
    /// A denominator specialized to the zero series.
    SpecializationHitsZero(String),
    /// The operation needs a finite truncation order but received an exact
    /// polynomial (order = infinity).
    InfiniteOrder(String),
    /// Scaled-exponent arithmetic left the i64 range.
    Overflow(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ScaleMismatch(s) => write!(f, "scale mismatch: {s}"),
            Error::NotAUnit(s) => write!(f, "not a unit: {s}"),
            Error::DenominatorNotExpandable(s) => {
                write!(f, "denominator not expandable in the bivariate ring: {s}")
            }
            Error::PoleAtOne => write!(f, "pole at 1: the factor 1/(1 - 1) has no expansion"),
            Error::DivergentProduct(s) => write!(f, "divergent infinite product: {s}"),
            Error::NonTruncatable(s) => write!(f, "non-truncatable lattice sum: {s}"),
            Error::SpecializationHitsZero(s) => {
                write!(f, "specialization hits a zero denominator: {s}")
            }
            Error::InfiniteOrder(s) => write!(f, "operation needs a finite order: {s}"),
            Error::Overflow(s) => write!(f, "exponent overflow: {s}"),
        }
    }
}

impl std::error::Error for Error {}
