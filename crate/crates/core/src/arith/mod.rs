//! Exact arithmetic: rationals, polynomials, truncated series, resultants.

pub mod coeff;
pub mod linalg;
pub mod matrix;
pub mod mpoly;
pub mod numeric;
pub mod parse;
pub mod rat;
pub mod ratfun;
pub mod resultant;
pub mod series;
pub mod upoly;

pub use coeff::Coeff;
pub use mpoly::{MPoly, Monomial, Var};
pub use rat::{rat, ratio, Rat};
pub use ratfun::RatFun;
pub use series::{RSeries, TSeries};
pub use upoly::{UPoly, UPolyT};
