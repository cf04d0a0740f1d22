//! Root distribution of polynomial sequences `W_n` defined by the two-term
//! recurrence
//!
//! ```text
//! W_n(z) = (a z + b) W_{n-1}(z) + (c z^2 + d z + e) W_{n-2}(z)
//! ```
//!
//! with rational coefficients and given initial polynomials `W_0`, `W_1`.
//!
//! The library generates the sequence exactly ([`recurrence`]), finds all
//! complex roots of any member ([`rootfind`]), classifies the exact geometric
//! set of non-isolated limits of zeros and the finite set of isolated limits
//! ([`limits`]), and verifies the classification against independent
//! pointwise oracles ([`harness`]). All branch decisions are exact rational
//! sign tests; floating point enters only in evaluation, root finding and
//! emitted geometry.

mod dyadic;

pub mod exactpoly;
pub mod harness;
pub mod limits;
pub mod recurrence;
pub mod rootfind;
pub mod spectra;

pub use exactpoly::{CPoint, PolyError, RatPoly, Rational};
pub use limits::{
    ClassificationScalars, IsolatedLimit, LimitSet, LimitsError, RealSubset, StabilityReport,
};
pub use recurrence::{GeneralityReport, RecurrenceError, RecurrenceSpec};
pub use rootfind::{RootFindError, RootFindOptions, RootSet};
pub use spectra::{SpectraError, SpectralPoint};
