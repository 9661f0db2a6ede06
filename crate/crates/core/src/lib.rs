//! Extended-precision toolkit for rational zeta series.
//!
//! The crate evaluates `Σ_{n≥1} a^{2n} ζ(2n) C(2n, m) / n` both by direct
//! summation and by its closed form in Hurwitz zeta values, together with
//! the supporting machinery: Hurwitz and alternating Hurwitz zeta values,
//! the derivative polynomials of the cotangent, Dirichlet characters and
//! L-functions, and the classical `ζ(2n)` series. Every value carries a
//! certified error bound so that two independent routes to the same
//! quantity can be compared rigorously; see [`verify`].

pub mod cotpoly;
pub mod dirichlet;
pub mod error;
pub mod numeric;
pub mod report;
pub mod series;
pub mod series_result;
pub mod special;
pub mod verify;

pub use error::{Error, Result};
pub use numeric::{const_euler_gamma, const_pi, make_context, ExtComplex, ExtReal, NumericContext};
pub use series_result::SeriesResult;
