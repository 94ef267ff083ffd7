//! Bivariate rational functions expanded in `t` with Laurent coefficients in `s`:
//! slices `[s^k]` and diagonals.

use std::fmt;


use crate::arith::{MPoly, Monomial, Rat, TSeries, Var};
use crate::error::{GfError, Result};

/// `num / den` in `t` and `s`, with `s` allowed negative exponents.
#[derive(Clone, Debug, PartialEq)]
pub struct BiRatFun {
    num: MPoly,
    den: MPoly,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SliceMode {
    /// `[s^k]` of the expansion in `t`.
    Slice,
    /// The input is in `x, y`; returns `sum a_{n,n} t^n`.
    Diagonal,
}

impl BiRatFun {
    pub fn new(num: MPoly, den: MPoly) -> Result<BiRatFun> {
        if den.is_zero() {
            return Err(GfError::ZeroPolynomial);
        }
        Ok(BiRatFun { num, den })
    }

    pub fn num(&self) -> &MPoly {
        &self.num
    }

    pub fn den(&self) -> &MPoly {
        &self.den
    }

    /// Substitutes `x = t s` and `y = t / s`.
    pub fn from_xy(num: &MPoly, den: &MPoly) -> Result<BiRatFun> {
        let sub = |p: &MPoly| -> Result<MPoly> {
            let ts = MPoly::term(
                Rat::from_integer(1.into()),
                Monomial::from_pairs(vec![(Var::new("t"), 1), (Var::new("s"), 1)]),
            );
            let t_over_s = MPoly::term(
                Rat::from_integer(1.into()),
                Monomial::from_pairs(vec![(Var::new("t"), 1), (Var::new("s"), -1)]),
            );
            p.substitute(&Var::new("x"), &ts)
                .and_then(|q| q.substitute(&Var::new("y"), &t_over_s))
                .ok_or_else(|| GfError::Invalid("negative powers of x or y".into()))
        };
        BiRatFun::new(sub(num)?, sub(den)?)
    }

    /// Expansion in `t` to order `n`; each coefficient is a Laurent polynomial in `s`.
    pub fn expand(&self, n: usize) -> Result<TSeries> {
        let t = Var::new("t");
        let d0 = self.den.coeff_in(&t, 0);
        let lead = match (self.den.min_degree_in(&t), d0.len()) {
            (Some(0), 1) => {
                let (m, c) = d0.terms().next().unwrap();
                if m.pairs().iter().any(|(v, _)| v.name() != "s") {
                    None
                } else {
                    Some(MPoly::term(c.recip(), m.inverse()))
                }
            }
            _ => None,
        }
        .ok_or_else(|| {
            GfError::Invalid(format!(
                "denominator at t = 0 must be a rational multiple of a power of s, got {d0}"
            ))
        })?;
        let num = TSeries::from_poly(&(&self.num * &lead), n)?;
        let den = TSeries::from_poly(&(&self.den * &lead), n)?;
        Ok(num.mul_to(&den.invert()?, n))
    }
}

impl fmt::Display for BiRatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})/({})", self.num, self.den)
    }
}

/// `[s^k]` of the expansion (slice mode), or the diagonal (diagonal mode, `k` ignored).
pub fn laurent_slice(f: &BiRatFun, k: i32, n: usize, mode: SliceMode) -> Result<TSeries> {
    let s = Var::new("s");
    match mode {
        SliceMode::Slice => {
            let e = f.expand(n)?;
            Ok(e.map(|c| c.coeff_in(&s, k)))
        }
        SliceMode::Diagonal => {
            let g = BiRatFun::from_xy(&f.num, &f.den)?;
            let e = g.expand(2 * n + 1)?;
            let zero = e.map(|c| c.coeff_in(&s, 0));
            if let Some(j) = (0..=2 * n + 1).find(|j| j % 2 == 1 && !zero.coeff(*j).is_zero()) {
                return Err(GfError::Internal(format!(
                    "odd coefficient t^{j} of the diagonal slice is nonzero"
                )));
            }
            Ok(TSeries::new(
                (0..=n).map(|m| zero.coeff(2 * m).clone()).collect(),
                n,
            ))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::parse::parse_poly;
    use crate::arith::RSeries;

    fn p(s: &str) -> MPoly {
        parse_poly(s).unwrap()
    }

    #[test]
    fn diagonal_of_product_is_all_ones() {
        let f = BiRatFun::new(p("1"), p("(1 - x)*(1 - y)")).unwrap();
        let d = laurent_slice(&f, 0, 6, SliceMode::Diagonal).unwrap();
        assert_eq!(d.to_rat().unwrap(), RSeries::from_ints(&[1; 7]));
    }

    #[test]
    fn central_binomials() {
        let f = BiRatFun::new(p("1"), p("1 - x - y")).unwrap();
        let d = laurent_slice(&f, 0, 5, SliceMode::Diagonal).unwrap();
        assert_eq!(d.to_rat().unwrap(), RSeries::from_ints(&[1, 2, 6, 20, 70, 252]));
        let walk = BiRatFun::new(p("1"), p("1 - t*(s + 1/s)")).unwrap();
        let z = laurent_slice(&walk, 0, 6, SliceMode::Slice).unwrap();
        assert_eq!(z.to_rat().unwrap(), RSeries::from_ints(&[1, 0, 2, 0, 6, 0, 20]));
        let one = laurent_slice(&walk, 1, 3, SliceMode::Slice).unwrap();
        assert_eq!(one.to_rat().unwrap(), RSeries::from_ints(&[0, 1, 0, 3]));
    }

    #[test]
    fn unexpandable_denominator() {
        let f = BiRatFun::new(p("1"), p("s*(1 - t)")).unwrap();
        assert_eq!(f.expand(2).unwrap().coeff(2), &p("1/s"));
        let g = BiRatFun::new(p("1"), p("1 + s")).unwrap();
        assert!(g.expand(3).is_err());
    }
}
