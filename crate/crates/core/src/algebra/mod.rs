//! Exact arithmetic: rationals, polynomials, rational functions, power
//! series, linear systems and root isolation.

mod fib;
mod linalg;
mod poly;
mod ratfun;
mod roots;
mod series;

pub use fib::fibonacci;
pub use linalg::{solve_linear_system, Field, Solution};
pub use poly::Poly;
pub use ratfun::{ArithOp, RatFun};
pub use roots::{sign_at, smallest_positive_root, squarefree_part, RootInterval};
pub use series::Series;

/// Arbitrary-precision rational, always stored in lowest terms.
pub type BigRat = num_rational::BigRational;
