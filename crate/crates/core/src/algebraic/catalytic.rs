//! Functional equations with one catalytic variable `u`, in fixed-point form
//! `G(u) = R(t, u, G(u), G(1), DD)` where `DD = (u G(u) - G(1)) / (u - 1)`.

use std::fmt;

use super::eval::{embed_mpoly, SplitPoly};
use crate::arith::parse::parse_poly;
use crate::arith::{MPoly, Rat, TSeries, Var};
use crate::error::{GfError, Result};

/// Variable names used for `G(u)`, `G(1)` and the divided difference.
pub const G: &str = "G";
pub const G1: &str = "G1";
pub const DD: &str = "DD";

#[derive(Clone, Debug, PartialEq)]
pub struct CatalyticEquation {
    rhs: MPoly,
}

#[derive(Clone, Debug)]
pub struct CatalyticSolution {
    /// `G(1, t)`.
    pub at_one: TSeries,
    /// `G(u, t)` with coefficients polynomial in `u`.
    pub full: TSeries,
}

fn unknowns() -> [Var; 3] {
    [Var::new(G), Var::new(G1), Var::new(DD)]
}

impl CatalyticEquation {
    /// Checks that every monomial involving `G`, `G1` or `DD` carries a factor `t`.
    pub fn new(rhs: MPoly) -> Result<CatalyticEquation> {
        let t = Var::new("t");
        let u = Var::new("u");
        for (m, _) in rhs.terms() {
            if m.exponent(&t) < 0 || m.exponent(&u) < 0 {
                return Err(GfError::Invalid(format!("negative power in {rhs}")));
            }
            let d: i32 = unknowns().iter().map(|x| m.exponent(x)).sum();
            if unknowns().iter().any(|x| m.exponent(x) < 0) {
                return Err(GfError::Invalid(format!("negative power of an unknown in {rhs}")));
            }
            if d > 0 && m.exponent(&t) == 0 {
                return Err(GfError::NonContracting(format!("monomial {m} has no factor t")));
            }
        }
        Ok(CatalyticEquation { rhs })
    }

    /// Reads `G(u) = R` (or just `R`), with `G(u)`, `G(1)` and `DD` as tokens.
    pub fn parse(src: &str) -> Result<CatalyticEquation> {
        let body = match src.split_once('=') {
            Some((lhs, rhs)) => {
                if parse_poly(lhs)? != MPoly::var(G) {
                    return Err(GfError::Invalid("left-hand side must be G(u)".into()));
                }
                let offset = lhs.chars().count() + 1;
                return CatalyticEquation::new(parse_poly(rhs).map_err(|mut e| {
                    e.column += offset;
                    e
                })?);
            }
            None => src,
        };
        CatalyticEquation::new(parse_poly(body)?)
    }

    pub fn rhs(&self) -> &MPoly {
        &self.rhs
    }
}

impl fmt::Display for CatalyticEquation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "G(u) = {}", self.rhs)
    }
}

/// `(u g(u) - g(1)) / (u - 1)` by exact division.
pub fn divided_difference(g: &MPoly) -> Result<MPoly> {
    let u = Var::new("u");
    let num = &(&MPoly::var("u") * g) - &g.substitute_rat(&u, &Rat::from_integer(1.into()));
    let den = &MPoly::var("u") - &MPoly::one();
    num.div_exact(&den).ok_or(GfError::DividedDifferenceRemainder)
}

/// Solves by t-adic iteration from the forced constant term, modulo `t^{n+1}`.
pub fn solve_catalytic(eq: &CatalyticEquation, n: usize) -> Result<CatalyticSolution> {
    let split = SplitPoly::new(&eq.rhs, &unknowns())?;
    let u = Var::new("u");
    let one = Rat::from_integer(1.into());
    let mut g: TSeries = TSeries::zero(0);
    // Pass m makes the coefficients of t^0..t^m exact.
    for m in 0..=n {
        let cur = TSeries::new(g.coeffs()[..m.min(g.order() + 1)].to_vec(), m);
        let at1 = cur.specialize(&u, &one);
        let dd = TSeries::new(
            cur.coeffs()
                .iter()
                .map(divided_difference)
                .collect::<Result<Vec<_>>>()?,
            m,
        );
        g = split.eval(&[cur, at1, dd], m, embed_mpoly)?;
    }
    let at_one = g.specialize(&u, &one);
    Ok(CatalyticSolution { at_one, full: g })
}
