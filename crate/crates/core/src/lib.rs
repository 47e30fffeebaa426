//! Exact finite element cochain complexes of arbitrary smoothness.
//!
//! The building block is a `C^m`-conforming element pair on `[0, 1]`: modified
//! Hermite interpolation for 0-forms (`ℙ_n Λ⁰`) and a matching family for
//! 1-forms (`ℙ_{n-1} Λ¹`), chosen so that the interpolation operators commute
//! with the derivative. Tensor products of that pair give cochain complexes on
//! `[0, 1]^N` with a commuting tensor interpolation operator.
//!
//! All constructions run over exact rationals, so the structural identities
//! (unisolvence, `d I₀ = I₁ d`, `d ∘ d = 0`) are checked with zero tolerance.
//! Smooth, non-polynomial inputs go through derivative callbacks and
//! Gauss–Legendre quadrature.
//!
//! ```
//! use fecc::{Element1D, FormDegree, Polynomial};
//!
//! let element = Element1D::build(1, 3).unwrap();
//! let u = Polynomial::from_ints(&[0, 0, 0, 0, 1]); // x^4
//! let lhs = element.interpolate(FormDegree::Zero, &u).differentiate();
//! let rhs = element.interpolate(FormDegree::One, &u.differentiate());
//! assert_eq!(lhs, rhs);
//! ```

pub mod cli;
pub mod element1d;
mod error;
mod form_degree;
pub mod hermite;
pub mod legendre;
pub mod matrix;
pub mod polynomial;
pub mod quadrature;
pub mod rational;
mod report;
pub mod tensor;
pub mod tolerances;

pub use element1d::{Element1D, NodeFunctional, SmoothFunction1D};
pub use error::{Error, Result};
pub use form_degree::FormDegree;
pub use matrix::RationalMatrix;
pub use polynomial::{FloatPolynomial, Polynomial};
pub use rational::Rational;
pub use report::{VerificationReport, Witness};
