//! Small helpers for series whose coefficients are Laurent polynomials in auxiliary variables.

use gfkit_core::arith::parse::parse_poly;
use gfkit_core::arith::rat::binomial;
use gfkit_core::arith::{MPoly, Monomial, Rat, TSeries};
use gfkit_core::Result;

/// A polynomial in `t` (Laurent in the other variables) as a series of order `n`.
pub fn poly(src: &str, n: usize) -> TSeries {
    TSeries::from_poly(&parse_poly(src).expect("built-in expression"), n).expect("power series in t")
}

/// `1 / f` where the constant term of `f` is the Laurent monomial `lead`.
pub fn invert_with_lead(f: &TSeries, lead: &Monomial) -> Result<TSeries> {
    let inv = lead.inverse();
    let normalized = f.map(|c| c.mul_monomial(&inv));
    Ok(normalized.invert()?.map(|c| c.mul_monomial(&inv)))
}

pub fn constant(c: i64, n: usize) -> TSeries {
    TSeries::constant(MPoly::int(c), n)
}

pub fn rat_of(b: num_bigint::BigInt) -> Rat {
    Rat::from_integer(b)
}

/// `C(n, k)` as a rational.
pub fn binom(n: u64, k: u64) -> Rat {
    rat_of(binomial(n, k))
}

/// Catalan number `C(2n, n) / (n + 1)`.
pub fn catalan(n: u64) -> Rat {
    binom(2 * n, n) / Rat::from_integer((n + 1).into())
}
