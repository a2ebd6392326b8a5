//! Rational generating functions for initial value problems of
//! two-dimensional linear difference equations with constant coefficients.
//!
//! Given an equation `sum c_alpha f(x + alpha) = 0` whose coefficient support
//! is dominated by a corner `m`, and initial data on the strips `x1 < m1` or
//! `x2 < m2` generated by one-dimensional recurrences, [`assemble_gf`]
//! returns `F(z) = sum f(x) z1^-(x1+1) z2^-(x2+1)` as a reduced rational
//! function. The [`oracle`] module checks such a result by series expansion.
//!
//! ```
//! use ratgen::{assemble_gf, samples};
//! use ratgen::poly::render::{render_ratfunc2, Style};
//!
//! let f = assemble_gf(&samples::binomial()).unwrap();
//! assert_eq!(render_ratfunc2(&f, ["z", "w"], Style::Plain), "1/(z*w - w - 1)");
//! ```
//!
//! The polynomial, recurrence and series kernels are generic over
//! [`arith::Scalar`]; the aliases below fix them to exact rationals.

pub mod arith;
pub mod cli;
pub mod oracle;
pub mod poly;
pub mod recurrence;
pub mod samples;
pub mod solver1d;
pub mod solver2d;

pub use arith::Rational;
pub use poly::RatFunc2;
pub use recurrence::{Axis, DifferenceEquation2, Line, Problem, ProblemError, ResolvedInitialData};
pub use solver1d::RatFunc1;
pub use solver2d::{assemble_gf, theorem1_residual};

/// Univariate polynomial with exact rational coefficients.
pub type Poly1 = poly::Poly1<Rational>;
/// Bivariate polynomial with exact rational coefficients.
pub type Poly2 = poly::Poly2<Rational>;
/// Coefficient table with exact rational entries.
pub type SeriesTable = oracle::SeriesTable<Rational>;
