//! Dense univariate polynomials in `t`.

use std::fmt;

use num_traits::{Signed, Zero};

use super::coeff::Coeff;
use super::mpoly::{MPoly, Var};
use super::rat::{lcm_of_denominators, rat_from_big, Rat};

/// Dense polynomial; index = power of `t`. Trailing zeros are always trimmed.
#[derive(Clone, PartialEq)]
pub struct UPoly<C: Coeff = MPoly> {
    coeffs: Vec<C>,
}

/// Polynomial in `t` whose coefficients may carry auxiliary variables.
pub type UPolyT = UPoly<MPoly>;

impl<C: Coeff> UPoly<C> {
    pub fn new(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn zero() -> Self {
        UPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        UPoly::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        UPoly::new(vec![c])
    }

    /// `c * t^k`.
    pub fn monomial(c: C, k: usize) -> Self {
        let mut v = vec![C::zero(); k];
        v.push(c);
        UPoly::new(v)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> C {
        self.coeffs.get(k).cloned().unwrap_or_else(C::zero)
    }

    pub fn leading(&self) -> Option<&C> {
        self.coeffs.last()
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        UPoly::new((0..n).map(|k| self.coeff(k).plus(&other.coeff(k))).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        UPoly::new((0..n).map(|k| self.coeff(k).minus(&other.coeff(k))).collect())
    }

    pub fn neg(&self) -> Self {
        UPoly {
            coeffs: self.coeffs.iter().map(|c| c.negate()).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return UPoly::zero();
        }
        let order = self.coeffs.len() + other.coeffs.len() - 2;
        UPoly::new(C::convolve(&self.coeffs, &other.coeffs, order))
    }

    pub fn scale(&self, r: &Rat) -> Self {
        UPoly::new(self.coeffs.iter().map(|c| c.scale(r)).collect())
    }

    pub fn mul_coeff(&self, c: &C) -> Self {
        UPoly::new(self.coeffs.iter().map(|x| x.times(c)).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(UPoly::one(), |acc, _| acc.mul(self))
    }

    pub fn derivative(&self) -> Self {
        UPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.scale(&Rat::from_integer(k.into())))
                .collect(),
        )
    }

    /// Horner evaluation at a coefficient-ring value.
    pub fn eval(&self, x: &C) -> C {
        self.coeffs
            .iter()
            .rev()
            .fold(C::zero(), |acc, c| acc.times(x).plus(c))
    }

    /// Substitutes `t -> t^p`.
    pub fn inflate(&self, p: usize) -> Self {
        if self.is_zero() {
            return UPoly::zero();
        }
        let mut out = vec![C::zero(); (self.coeffs.len() - 1) * p + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            out[k * p] = c.clone();
        }
        UPoly::new(out)
    }

    pub fn map<D: Coeff>(&self, f: impl Fn(&C) -> D) -> UPoly<D> {
        UPoly::new(self.coeffs.iter().map(f).collect())
    }
}

impl UPoly<MPoly> {
    /// Reads a polynomial in `t`; fails on negative powers of `t`.
    pub fn from_mpoly(p: &MPoly) -> Option<Self> {
        p.to_dense_in(&Var::new("t")).map(UPoly::new)
    }

    pub fn to_mpoly(&self) -> MPoly {
        MPoly::from_dense_in(&Var::new("t"), &self.coeffs)
    }

    /// Rational coefficients, if every coefficient is constant.
    pub fn to_rat(&self) -> Option<UPoly<Rat>> {
        Some(UPoly::new(
            self.coeffs
                .iter()
                .map(|c| c.as_constant())
                .collect::<Option<Vec<_>>>()?,
        ))
    }
}

impl UPoly<Rat> {
    pub fn from_ints(values: &[i64]) -> Self {
        UPoly::new(values.iter().map(|&v| super::rat::rat(v)).collect())
    }

    pub fn to_mpoly_coeffs(&self) -> UPolyT {
        self.map(|c| MPoly::constant(c.clone()))
    }

    /// Euclidean division over Q.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by zero polynomial");
        let lc = d.coeffs[dd].clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rat::zero(); self.coeffs.len().saturating_sub(dd).max(1)];
        while rem.len() > dd && !rem.is_empty() {
            let k = rem.len() - 1;
            let c = &rem[k] / &lc;
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    rem[k - dd + j] -= &c * dc;
                }
                quot[k - dd] = c;
            }
            rem.pop();
            while rem.last().is_some_and(|c| c.is_zero()) {
                rem.pop();
            }
        }
        (UPoly::new(quot), UPoly::new(rem))
    }

    /// Monic gcd over Q (zero if both vanish).
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        match a.leading().cloned() {
            Some(lc) => a.scale(&lc.recip()),
            None => a,
        }
    }

    /// `p / gcd(p, p')`, made monic.
    pub fn squarefree_part(&self) -> Self {
        if self.degree().unwrap_or(0) == 0 {
            return self.clone();
        }
        let g = self.gcd(&self.derivative());
        let (q, _) = self.div_rem(&g);
        let lc = q.leading().cloned().unwrap();
        q.scale(&lc.recip())
    }

    /// Yun's squarefree decomposition: monic `(factor, multiplicity)` pairs of positive degree.
    pub fn squarefree_decomposition(&self) -> Vec<(Self, usize)> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let d = self.derivative();
        let c = self.gcd(&d);
        let mut w = self.div_rem(&c).0;
        let mut y = d.div_rem(&c).0;
        let mut z = y.sub(&w.derivative());
        let mut i = 1;
        while w.degree().unwrap_or(0) > 0 {
            let g = w.gcd(&z);
            if g.degree().unwrap_or(0) > 0 {
                out.push((g.clone(), i));
            }
            w = w.div_rem(&g).0;
            y = z.div_rem(&g).0;
            z = y.sub(&w.derivative());
            i += 1;
        }
        out
    }

    /// Scales to a primitive integer polynomial with positive leading coefficient.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let l = rat_from_big(lcm_of_denominators(&self.coeffs));
        let scaled = self.scale(&l);
        let g = rat_from_big(super::rat::gcd_of_numerators(&scaled.coeffs));
        let mut out = scaled.scale(&g.recip());
        if out.leading().unwrap().is_negative() {
            out = out.neg();
        }
        out
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + super::rat::rat_to_f64(c))
    }
}

impl<C: Coeff> fmt::Debug for UPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let t = Var::new("t");
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "({c})*{t}^{k}")?;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl fmt::Display for UPoly<MPoly> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_mpoly())
    }
}

impl fmt::Display for UPoly<Rat> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_mpoly_coeffs().to_mpoly())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gcd_and_division() {
        let a = UPoly::from_ints(&[-1, 0, 1]);
        let b = UPoly::from_ints(&[1, 1]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(q, UPoly::from_ints(&[-1, 1]));
        assert!(r.is_zero());
        assert_eq!(a.gcd(&UPoly::from_ints(&[2, 2])), UPoly::from_ints(&[1, 1]));
    }

    #[test]
    fn yun_multiplicities() {
        // (1 - t)^2 (1 - 2t)
        let f = UPoly::from_ints(&[1, -1]).pow(2).mul(&UPoly::from_ints(&[1, -2]));
        let dec = f.squarefree_decomposition();
        let mults: Vec<usize> = dec.iter().map(|(_, m)| *m).collect();
        assert_eq!(mults, vec![1, 2]);
        assert_eq!(dec[1].0, UPoly::from_ints(&[-1, 1]));
        assert_eq!(f.squarefree_part().degree(), Some(2));
    }

    #[test]
    fn display_matches_polynomial_syntax() {
        assert_eq!(UPoly::from_ints(&[1, -5, 7, -4]).to_string(), "1 - 5*t + 7*t^2 - 4*t^3");
        assert_eq!(UPoly::from_ints(&[2, 0, 3]).primitive(), UPoly::from_ints(&[2, 0, 3]));
        assert_eq!(UPoly::from_ints(&[2, 0, -4]).primitive(), UPoly::from_ints(&[-1, 0, 2]));
    }
}
