//! Polynomials over a generic scalar and rational functions over the
//! rationals.

mod bivariate;
mod gcd;
mod ratfunc;
pub mod render;
mod univariate;

use thiserror::Error;

pub use bivariate::{Exp2, Poly2};
pub use gcd::gcd;
pub use ratfunc::RatFunc2;
pub use univariate::Poly1;
pub(crate) use univariate::content_of as univariate_content;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("polynomial division leaves a nonzero remainder")]
    InexactDivision,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("division by the zero rational function")]
    DivisionByZeroFunction,
    #[error("rational function with zero denominator")]
    ZeroDenominator,
    #[error("exponent {exponent:?} exceeds reversal bound {bound:?}")]
    ExponentExceedsBound { exponent: Exp2, bound: Exp2 },
}
