//! Exact truncated q-series with Laurent-polynomial coefficients, plus
//! builders for the classical q-objects: Pochhammer products, Gaussian
//! binomials, theta functions, indefinite binary theta series, Hecke-type
//! double sums, Appell sums and the Gordon-polynomial generating functions.
//!
//! Everything is exact. Coefficients are arbitrary-precision rationals,
//! q-exponents live on a lattice (1/D)*Z, and every operation tracks a
//! sound truncation order: no result ever claims more precision than it
//! has. There is no floating point anywhere in a result path.

pub mod error;
pub mod gordon;
pub mod hecke;
pub mod monomial;
pub mod number;
pub mod qfunctions;
pub mod scale;
pub mod series;
pub mod util;
pub mod xpoly;

pub use error::{Error, Result};
pub use monomial::{MonomialArg, Sign};
pub use number::QRat;
pub use scale::{ExpScale, QExp};
pub use series::{Comparison, Series, EXACT_ORDER};
pub use xpoly::XPoly;
