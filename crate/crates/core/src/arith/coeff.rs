use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::rat::{lcm_of_denominators, Rat};

/// Coefficient ring for series and dense polynomials.
///
/// Implemented for [`Rat`] (the fast univariate path) and for
/// [`MPoly`](super::mpoly::MPoly) (coefficients carrying auxiliary variables).
pub trait Coeff:
    Clone + PartialEq + fmt::Debug + fmt::Display + Zero + One + Send + Sync + 'static
{
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negate(&self) -> Self;
    fn from_rat(r: Rat) -> Self;
    fn scale(&self, r: &Rat) -> Self;
    /// The value as a rational constant, if it is one.
    fn as_rat(&self) -> Option<Rat>;
    /// Exact quotient in the ring, `None` when `other` does not divide `self`.
    fn div_exact(&self, other: &Self) -> Option<Self>;

    /// Truncated product `sum_{i+j=k} a_i b_j` for `k <= order`.
    fn convolve(a: &[Self], b: &[Self], order: usize) -> Vec<Self> {
        let mut out = vec![Self::zero(); order + 1];
        for (i, x) in a.iter().enumerate().take(order + 1) {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate().take(order + 1 - i) {
                if !y.is_zero() {
                    out[i + j] = out[i + j].plus(&x.times(y));
                }
            }
        }
        out
    }
}

/// Integer numerators over a common denominator.
fn common_denominator(a: &[Rat]) -> (Vec<BigInt>, BigInt) {
    let l = lcm_of_denominators(a);
    let nums = a
        .iter()
        .map(|r| r.numer() * (&l / r.denom()))
        .collect();
    (nums, l)
}

impl Coeff for Rat {
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negate(&self) -> Self {
        -self
    }
    fn from_rat(r: Rat) -> Self {
        r
    }
    fn scale(&self, r: &Rat) -> Self {
        self * r
    }
    fn as_rat(&self) -> Option<Rat> {
        Some(self.clone())
    }
    fn div_exact(&self, other: &Self) -> Option<Self> {
        if Zero::is_zero(other) {
            None
        } else {
            Some(self / other)
        }
    }

    // Integer convolution avoids a gcd per elementary product.
    fn convolve(a: &[Self], b: &[Self], order: usize) -> Vec<Self> {
        let a = &a[..a.len().min(order + 1)];
        let b = &b[..b.len().min(order + 1)];
        let (an, ad) = common_denominator(a);
        let (bn, bd) = common_denominator(b);
        let mut out = vec![BigInt::zero(); order + 1];
        for (i, x) in an.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in bn.iter().enumerate().take(order + 1 - i) {
                if !y.is_zero() {
                    out[i + j] += x * y;
                }
            }
        }
        let d = ad * bd;
        out.into_iter().map(|n| Rat::new(n, d.clone())).collect()
    }
}
