//! Rational and algebraic generating functions with exact arithmetic.

pub mod algebraic;
pub mod arith;
pub mod error;
pub mod fixtures;
pub mod guessing;
pub mod io;
pub mod posets;
pub mod rational;

pub use error::{GfError, ParseError, Result};
