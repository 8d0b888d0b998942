//! Exact enumeration of self-avoiding walks in vertical lattice strips.
//!
//! * [`algebra`]: exact rationals, polynomials, rational functions,
//!   power series, linear systems and root isolation.
//! * [`lattice`]: step words, walks, strips.
//! * [`enumerate`]: the depth-first walk counter every other result is
//!   checked against.
//! * [`width2`]: the `U L* I U'` grammar of the two-column strip, its
//!   generating functions and the Fibonacci closed form.
//! * [`guess`]: fitting rational generating functions to counts.
//! * [`pipeline`]: enumerate-guess-validate for wider strips and growth
//!   rate enclosures from the guessed denominators.

pub mod algebra;
pub mod cli;
pub mod enumerate;
pub mod error;
pub mod guess;
pub mod json;
pub mod lattice;
pub mod pipeline;
pub mod width2;

pub use error::{Error, Result};
