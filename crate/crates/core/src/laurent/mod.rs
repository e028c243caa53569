//! Exact multivariate Laurent polynomials in `x_1..x_m, y_1..y_n`.

mod division;
pub mod exponent;
pub mod int;
mod json;
mod packed;
pub mod poly;
pub mod rational;

pub use exponent::ExponentVector;
pub use int::Int;
pub use json::{MAX_ARITY, MAX_DOUBLED_EXPONENT};
pub use poly::{LaurentPoly, PermutationPair, SymmetricBlocks};
pub use rational::{RationalCoeffPoly, RationalFn};
