//! Exact Groebner-basis engine with decision procedures for continuous
//! rational (regulous) functions on complex affine varieties, subintegral
//! extensions and partial seminormalizations.
//!
//! Everything is computed over the rationals; each verdict is a statement
//! about ideal or radical membership and therefore holds over the complex
//! numbers as well.

pub mod error;
pub mod extension;
pub mod fixtures;
pub mod ideal;
pub mod poly;
pub mod regulous;
pub mod seminorm;

pub use error::{Error, Result};
pub use extension::{ExtensionPresentation, VarietyPresentation};
pub use ideal::{groebner, groebner_tracked, Ideal, TrackedBasis};
pub use poly::{divide_multi, spoly, Monomial, MonomialOrder, Polynomial, Rational, Ring};
pub use regulous::{Fraction, RegulousVerdict, StratifiedFraction, Verdict};
pub use seminorm::SeminormTower;
