//! Rational functions in `t`.

use std::fmt;

use num_traits::Zero;

use super::mpoly::MPoly;
use super::rat::Rat;
use super::series::{RSeries, TSeries};
use super::upoly::{UPoly, UPolyT};
use crate::error::{GfError, Result};

/// Quotient `num / den` of polynomials in `t`.
///
/// With purely rational coefficients the pair is reduced and scaled so that
/// the lowest nonzero coefficient of `den` equals 1 (for a power series that
/// is `den(0) = 1`). Otherwise it is stored as given.
#[derive(Clone)]
pub struct RatFun {
    num: UPolyT,
    den: UPolyT,
}

impl RatFun {
    pub fn new(num: UPolyT, den: UPolyT) -> Result<RatFun> {
        if den.is_zero() {
            return Err(GfError::Invalid("zero denominator".into()));
        }
        let mut f = RatFun { num, den };
        f.normalize();
        Ok(f)
    }

    pub fn from_rat(num: UPoly<Rat>, den: UPoly<Rat>) -> Result<RatFun> {
        RatFun::new(num.to_mpoly_coeffs(), den.to_mpoly_coeffs())
    }

    /// From two polynomials in `t` (other variables allowed in coefficients).
    pub fn from_mpolys(num: &MPoly, den: &MPoly) -> Result<RatFun> {
        let n = UPoly::from_mpoly(num).ok_or(GfError::NotPowerSeries)?;
        let d = UPoly::from_mpoly(den).ok_or(GfError::NotPowerSeries)?;
        RatFun::new(n, d)
    }

    pub fn polynomial(p: UPolyT) -> RatFun {
        RatFun {
            num: p,
            den: UPoly::one(),
        }
    }

    pub fn num(&self) -> &UPolyT {
        &self.num
    }

    pub fn den(&self) -> &UPolyT {
        &self.den
    }

    pub fn is_rational_coeffs(&self) -> bool {
        self.num.to_rat().is_some() && self.den.to_rat().is_some()
    }

    /// Numerator and denominator over Q, when no auxiliary variable occurs.
    pub fn rat_parts(&self) -> Option<(UPoly<Rat>, UPoly<Rat>)> {
        Some((self.num.to_rat()?, self.den.to_rat()?))
    }

    fn normalize(&mut self) {
        let Some((n, d)) = self.rat_parts() else {
            return;
        };
        let g = n.gcd(&d);
        let (n, d) = if g.degree().unwrap_or(0) > 0 {
            (n.div_rem(&g).0, d.div_rem(&g).0)
        } else {
            (n, d)
        };
        let low = d
            .coeffs()
            .iter()
            .find(|c| !c.is_zero())
            .cloned()
            .expect("nonzero denominator");
        let inv = low.recip();
        self.num = n.scale(&inv).to_mpoly_coeffs();
        self.den = d.scale(&inv).to_mpoly_coeffs();
    }

    /// Taylor coefficients `0..=n`, driven by the denominator recurrence.
    pub fn expand(&self, n: usize) -> Result<TSeries<MPoly>> {
        let d0 = self.den.coeff(0);
        if d0.is_zero() {
            return Err(GfError::NotPowerSeries);
        }
        let inv = d0
            .as_constant()
            .ok_or(GfError::NonInvertibleConstant)?
            .recip();
        let dens = self.den.coeffs();
        let mut a: Vec<MPoly> = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let mut acc = self.num.coeff(k);
            for (j, dj) in dens.iter().enumerate().skip(1).take(k) {
                if !dj.is_zero() {
                    acc = &acc - &(dj * &a[k - j]);
                }
            }
            a.push(acc.scale(&inv));
        }
        Ok(TSeries::new(a, n))
    }

    /// Rational-coefficient expansion (fast path, no auxiliary variables).
    pub fn expand_rat(&self, n: usize) -> Result<RSeries> {
        let (num, den) = self
            .rat_parts()
            .ok_or_else(|| GfError::Invalid("coefficients involve auxiliary variables".into()))?;
        expand_rat_parts(&num, &den, n)
    }

    /// Equality as rational functions, by cross-multiplication.
    pub fn equals(&self, other: &RatFun) -> bool {
        (&self.num.to_mpoly() * &other.den.to_mpoly())
            == (&other.num.to_mpoly() * &self.den.to_mpoly())
    }

    pub fn add(&self, other: &RatFun) -> RatFun {
        if self.den == other.den {
            return RatFun::new(self.num.add(&other.num), self.den.clone()).unwrap();
        }
        RatFun::new(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
        .unwrap()
    }

    pub fn mul(&self, other: &RatFun) -> RatFun {
        RatFun::new(self.num.mul(&other.num), self.den.mul(&other.den)).unwrap()
    }
}

pub fn expand_rat_parts(num: &UPoly<Rat>, den: &UPoly<Rat>, n: usize) -> Result<RSeries> {
    let d0 = den.coeff(0);
    if d0.is_zero() {
        return Err(GfError::NotPowerSeries);
    }
    let inv = d0.recip();
    let dens = den.coeffs();
    let mut a: Vec<Rat> = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let mut acc = num.coeff(k);
        for (j, dj) in dens.iter().enumerate().skip(1).take(k) {
            if !dj.is_zero() {
                acc -= dj * &a[k - j];
            }
        }
        a.push(acc * &inv);
    }
    Ok(TSeries::new(a, n))
}

impl PartialEq for RatFun {
    fn eq(&self, other: &Self) -> bool {
        self.equals(other)
    }
}

impl fmt::Debug for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num = self.num.to_mpoly();
        let den = self.den.to_mpoly();
        let wrap = |p: &MPoly| {
            if p.len() > 1 {
                format!("({p})")
            } else {
                p.to_string()
            }
        };
        if den.as_constant().is_some_and(|c| c == Rat::from_integer(1.into())) {
            write!(f, "{}", num)
        } else {
            write!(f, "{}/{}", wrap(&num), wrap(&den))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat::rat;

    fn upr(v: &[i64]) -> UPoly<Rat> {
        UPoly::from_ints(v)
    }

    #[test]
    fn polyomino_recurrence() {
        // t(1-t)^3 = t - 3t^2 + 3t^3 - t^4
        let f = RatFun::from_rat(upr(&[0, 1, -3, 3, -1]), upr(&[1, -5, 7, -4])).unwrap();
        let a = f.expand_rat(10).unwrap();
        assert_eq!(
            a,
            RSeries::from_ints(&[0, 1, 2, 6, 19, 61, 196, 629, 2017, 6466, 20727])
        );
    }

    #[test]
    fn reduction_cancels_common_factor() {
        // (1-t)/(1-t)^2 = 1/(1-t)
        let f = RatFun::from_rat(upr(&[1, -1]), upr(&[1, -2, 1])).unwrap();
        assert_eq!(f.den().degree(), Some(1));
        assert_eq!(f.to_string(), "1/(1 - t)");
        let g = RatFun::from_rat(upr(&[2]), upr(&[2, -2])).unwrap();
        assert!(f.equals(&g));
    }

    #[test]
    fn pole_at_zero_is_rejected() {
        let f = RatFun::from_rat(upr(&[1]), upr(&[0, 1])).unwrap();
        assert_eq!(f.expand_rat(3).unwrap_err(), GfError::NotPowerSeries);
    }

    #[test]
    fn symbolic_coefficients_expand() {
        let x = MPoly::var("x");
        let den = UPoly::new(vec![MPoly::one(), -&x]);
        let f = RatFun::new(UPoly::one(), den).unwrap();
        let s = f.expand(3).unwrap();
        assert_eq!(s.coeff(3), &x.pow(3));
        assert_eq!(s.coeff(0), &MPoly::constant(rat(1)));
    }
}
