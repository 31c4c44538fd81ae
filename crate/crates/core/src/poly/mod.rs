//! Exact multivariate polynomials over the rationals.

mod division;
mod monomial;
mod order;
mod parse;
mod polynomial;
mod ring;

pub use division::{divide_multi, remainder, spoly};
pub(crate) use division::{divide_ordered, OrderedPoly};
pub use monomial::Monomial;
pub use order::{MonomialOrder, OrderKind};
pub use polynomial::Polynomial;
pub(crate) use ring::format_polynomial;
pub use ring::{DisplayPoly, Ring};

/// Arbitrary-precision reduced fraction; the coefficient field.
pub type Rational = num_rational::BigRational;
