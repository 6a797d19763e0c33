//! Exact sparse multivariate polynomial arithmetic over arbitrary-precision
//! rationals and Gaussian rationals — the substrate every other module
//! computes in.
//!
//! Values are immutable after construction; every operation is a pure
//! function, so polynomials are safe to share across threads.

mod coeff;
mod monomial;
mod poly;
mod repr;
mod text;

pub use coeff::{rat, ratio, rational_to_f64, Coefficient, GaussianRational, Rational};
pub use monomial::Monomial;
pub use poly::Polynomial;
pub use repr::{serde_rational, serde_rational_vec, CoeffRepr, RationalRepr, StructuredCoeff, TermRepr};
pub use text::{parse, to_text};
