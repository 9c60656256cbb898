//! Exact polynomial arithmetic over the rationals.

pub mod algebra;
pub mod matrix;
pub mod mpoly;
pub mod parse;
pub mod rational;
pub mod univariate;

pub use algebra::{
    binary_linear_factors, det_rational, gcd_bivariate, resultant_binary_forms,
    resultant_in_variable,
};
pub use matrix::Matrix3;
pub use mpoly::{Degree, MPoly, Monomial};
pub use parse::parse_poly;
pub use rational::{common_denominator_of, format_rational, int, parse_rational, rat, Rational};
pub use univariate::UPoly;
