//! Truncated power series in `t`.
//!
//! A `TSeries` of order `N` knows exactly the coefficients of `t^0..=t^N`.
//! Every operation propagates the order pessimistically, so a result never
//! claims a coefficient that its inputs do not determine.

use std::fmt;

use num_traits::Zero;

use super::coeff::Coeff;
use super::mpoly::{MPoly, Var};
use super::rat::Rat;
use crate::error::{GfError, Result};

#[derive(Clone, PartialEq)]
pub struct TSeries<C: Coeff = MPoly> {
    coeffs: Vec<C>,
}

/// Series with plain rational coefficients.
pub type RSeries = TSeries<Rat>;

impl<C: Coeff> TSeries<C> {
    /// Builds a series of order `order`, padding with zeros or dropping extra terms.
    pub fn new(mut coeffs: Vec<C>, order: usize) -> Self {
        coeffs.resize(order + 1, C::zero());
        TSeries { coeffs }
    }

    /// Uses every supplied coefficient; the order is `len - 1`.
    pub fn from_coeffs(coeffs: Vec<C>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least one coefficient");
        TSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        TSeries::new(Vec::new(), order)
    }

    pub fn constant(c: C, order: usize) -> Self {
        TSeries::new(vec![c], order)
    }

    pub fn one(order: usize) -> Self {
        TSeries::constant(C::one(), order)
    }

    /// `c * t^k`.
    pub fn monomial(c: C, k: usize, order: usize) -> Self {
        let mut s = TSeries::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    pub fn t(order: usize) -> Self {
        TSeries::monomial(C::one(), 1, order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<C> {
        self.coeffs
    }

    /// Coefficient of `t^n`; `None` past the truncation order.
    pub fn get(&self, n: usize) -> Option<&C> {
        self.coeffs.get(n)
    }

    /// Coefficient of `t^n`. Panics past the truncation order.
    pub fn coeff(&self, n: usize) -> &C {
        &self.coeffs[n]
    }

    /// Index of the first nonzero coefficient, or `order + 1` if all known ones vanish.
    pub fn valuation(&self) -> usize {
        self.coeffs
            .iter()
            .position(|c| !c.is_zero())
            .unwrap_or(self.coeffs.len())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot raise the order of a series");
        TSeries {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    /// Equality of the first `order + 1` coefficients.
    pub fn agrees_with(&self, other: &Self, order: usize) -> bool {
        order <= self.order()
            && order <= other.order()
            && self.coeffs[..=order] == other.coeffs[..=order]
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        TSeries {
            coeffs: (0..=n)
                .map(|i| self.coeffs[i].plus(&other.coeffs[i]))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        TSeries {
            coeffs: (0..=n)
                .map(|i| self.coeffs[i].minus(&other.coeffs[i]))
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        TSeries {
            coeffs: self.coeffs.iter().map(|c| c.negate()).collect(),
        }
    }

    pub fn scale(&self, r: &Rat) -> Self {
        TSeries {
            coeffs: self.coeffs.iter().map(|c| c.scale(r)).collect(),
        }
    }

    pub fn mul_coeff(&self, c: &C) -> Self {
        TSeries {
            coeffs: self.coeffs.iter().map(|x| x.times(c)).collect(),
        }
    }

    /// Multiplication by `t^k`; the order grows by `k`.
    pub fn shift(&self, k: usize) -> Self {
        let mut coeffs = vec![C::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        TSeries { coeffs }
    }

    /// Division by `t^k`; the first `k` coefficients must vanish and the order drops by `k`.
    pub fn unshift(&self, k: usize) -> Result<Self> {
        if k > self.order() {
            return Err(GfError::InsufficientOrder(format!(
                "cannot divide a series of order {} by t^{k}",
                self.order()
            )));
        }
        if self.coeffs[..k].iter().any(|c| !c.is_zero()) {
            return Err(GfError::Invalid(format!("series is not divisible by t^{k}")));
        }
        Ok(TSeries {
            coeffs: self.coeffs[k..].to_vec(),
        })
    }

    /// Product; the order is `min(Na + vb, Nb + va)` with `v` the valuations.
    pub fn mul(&self, other: &Self) -> Self {
        let (na, nb) = (self.order(), other.order());
        let (va, vb) = (self.valuation(), other.valuation());
        let n = (na + vb).min(nb + va);
        self.mul_to(other, n)
    }

    /// Product truncated to `order`, which must not exceed what the operands justify.
    pub fn mul_to(&self, other: &Self, order: usize) -> Self {
        TSeries {
            coeffs: C::convolve(&self.coeffs, &other.coeffs, order),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = TSeries::one(self.order());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    fn constant_rat(&self) -> Option<Rat> {
        self.coeffs[0].as_rat()
    }

    /// Multiplicative inverse; the constant term must be a nonzero rational.
    pub fn invert(&self) -> Result<Self> {
        let a0 = self
            .constant_rat()
            .filter(|r| !r.is_zero())
            .ok_or(GfError::NonInvertibleConstant)?;
        let inv0 = a0.recip();
        let n = self.order();
        let mut b: Vec<C> = Vec::with_capacity(n + 1);
        b.push(C::from_rat(inv0.clone()));
        for k in 1..=n {
            let mut acc = C::zero();
            for i in 1..=k {
                let ai = &self.coeffs[i];
                if !ai.is_zero() {
                    acc = acc.plus(&ai.times(&b[k - i]));
                }
            }
            b.push(acc.scale(&-inv0.clone()));
        }
        Ok(TSeries { coeffs: b })
    }

    /// `self / other` for an invertible `other`.
    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.invert()?))
    }

    /// Square root with constant term 1; the input constant term must be 1.
    pub fn sqrt(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(GfError::SqrtConstant);
        }
        let n = self.order();
        let half = Rat::new(1.into(), 2.into());
        let mut b: Vec<C> = Vec::with_capacity(n + 1);
        b.push(C::one());
        for k in 1..=n {
            let mut acc = self.coeffs[k].clone();
            for i in 1..k {
                if !b[i].is_zero() && !b[k - i].is_zero() {
                    acc = acc.minus(&b[i].times(&b[k - i]));
                }
            }
            b.push(acc.scale(&half));
        }
        Ok(TSeries { coeffs: b })
    }

    /// Derivative in `t`; the order drops by one.
    pub fn derive(&self) -> Result<Self> {
        if self.order() == 0 {
            return Err(GfError::InsufficientOrder(
                "derivative of an order-0 series determines no coefficient".into(),
            ));
        }
        Ok(TSeries {
            coeffs: (1..self.coeffs.len())
                .map(|k| self.coeffs[k].scale(&Rat::from_integer(k.into())))
                .collect(),
        })
    }

    /// Composition `self(inner(t))`; `inner` must have zero constant term.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        if !inner.coeffs[0].is_zero() {
            return Err(GfError::ComposeConstant);
        }
        let vb = inner.valuation();
        let n_outer = self.order();
        let mut n = inner.order();
        if vb <= inner.order() {
            n = n.min((n_outer + 1) * vb - 1);
        }
        let mut acc = TSeries::constant(self.coeffs[n_outer.min(n)].clone(), n);
        for k in (0..n_outer.min(n)).rev() {
            acc = acc.mul_to(inner, n);
            acc.coeffs[0] = acc.coeffs[0].plus(&self.coeffs[k]);
        }
        Ok(acc)
    }

    pub fn map<D: Coeff>(&self, f: impl Fn(&C) -> D) -> TSeries<D> {
        TSeries {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }
}

impl TSeries<MPoly> {
    /// Expansion of a polynomial in `t` (other variables become coefficients).
    pub fn from_poly(p: &MPoly, order: usize) -> Result<Self> {
        let t = Var::new("t");
        let dense = p.to_dense_in(&t).ok_or(GfError::NotPowerSeries)?;
        Ok(TSeries::new(dense, order))
    }

    /// The truncation as a polynomial in `t`.
    pub fn to_poly(&self) -> MPoly {
        MPoly::from_dense_in(&Var::new("t"), &self.coeffs)
    }

    /// Rational coefficients, if every coefficient is a constant.
    pub fn to_rat(&self) -> Option<RSeries> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| c.as_constant())
            .collect::<Option<Vec<_>>>()?;
        Some(TSeries { coeffs })
    }

    /// Substitutes a rational value for an auxiliary variable in every coefficient.
    pub fn specialize(&self, v: &Var, value: &Rat) -> Self {
        self.map(|c| c.substitute_rat(v, value))
    }
}

impl TSeries<Rat> {
    pub fn from_ints(values: &[i64]) -> Self {
        TSeries::from_coeffs(values.iter().map(|&v| super::rat::rat(v)).collect())
    }

    pub fn to_mpoly(&self) -> TSeries<MPoly> {
        self.map(|c| MPoly::constant(c.clone()))
    }
}

impl<C: Coeff> fmt::Debug for TSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<C: Coeff> fmt::Display for TSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let body = c.to_string();
            let wrapped = if body.contains(' ') {
                format!("({body})")
            } else {
                body
            };
            match k {
                0 => write!(f, "{wrapped}")?,
                1 => write!(f, "{wrapped}*t")?,
                _ => write!(f, "{wrapped}*t^{k}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(t^{})", self.order() + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat::{rat, ratio};

    #[test]
    fn geometric_inverse() {
        let a = RSeries::from_ints(&[1, -1, 0, 0, 0, 0]);
        let b = a.invert().unwrap();
        assert!(b.coeffs().iter().all(|c| *c == rat(1)));
    }

    #[test]
    fn catalan_from_sqrt() {
        let n = 12;
        let s = RSeries::new(vec![rat(1), rat(-4)], n).sqrt().unwrap();
        let c = RSeries::one(n).sub(&s).scale(&ratio(1, 2));
        let cat = [0, 1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796, 58786];
        assert_eq!(c, RSeries::from_ints(&cat));
    }

    #[test]
    fn order_rules() {
        let a = RSeries::new(vec![rat(0), rat(0), rat(1)], 5);
        let b = RSeries::new(vec![rat(1), rat(1)], 3);
        assert_eq!(a.mul(&b).order(), 5);
        assert_eq!(a.add(&b).order(), 3);
        assert_eq!(a.derive().unwrap().order(), 4);
        assert!(RSeries::one(0).derive().is_err());
    }

    #[test]
    fn errors_on_bad_constants() {
        assert_eq!(
            RSeries::from_ints(&[0, 1]).invert(),
            Err(GfError::NonInvertibleConstant)
        );
        assert_eq!(RSeries::from_ints(&[2, 1]).sqrt(), Err(GfError::SqrtConstant));
        let a = RSeries::from_ints(&[1, 1]);
        assert_eq!(a.compose(&a), Err(GfError::ComposeConstant));
        let x = TSeries::<MPoly>::constant(MPoly::var("x"), 3);
        assert_eq!(x.invert(), Err(GfError::NonInvertibleConstant));
    }

    #[test]
    fn composition_with_geometric() {
        // 1/(1-u) at u = t/(1-t) is (1-t)/(1-2t).
        let n = 10;
        let outer = RSeries::new(vec![rat(1); n + 1], n);
        let inner = RSeries::new(
            std::iter::once(rat(0)).chain(std::iter::repeat(rat(1))).take(n + 1).collect(),
            n,
        );
        let c = outer.compose(&inner).unwrap();
        let mut expect = vec![rat(1)];
        for k in 1..=n {
            expect.push(rat(1 << (k - 1)));
        }
        assert_eq!(c, RSeries::from_coeffs(expect));
    }

    #[test]
    fn fixed_point_of_cubic_map() {
        // W = t(2 + W^3) iterated to order 9.
        let n = 9;
        let two = RSeries::constant(rat(2), n);
        let mut w = RSeries::zero(n);
        for _ in 0..=n {
            w = two.add(&w.pow(3)).shift(1).truncate(n);
        }
        assert_eq!(w.coeff(1), &rat(2));
        assert_eq!(w.coeff(2), &rat(0));
        assert_eq!(w.coeff(4), &rat(8));
        let again = two.add(&w.pow(3)).shift(1).truncate(n);
        assert_eq!(again, w);
    }
}
