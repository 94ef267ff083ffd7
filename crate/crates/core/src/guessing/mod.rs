//! Guessing rational functions and algebraic equations from initial coefficients.
//!
//! Every guess is a nullspace vector of an exact linear system built from
//! all supplied coefficients, so the data beyond the minimal window serves
//! as validation.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::arith::linalg::{echelon, nullspace};
use crate::arith::rat::rat_from_big;
use crate::arith::{MPoly, Monomial, RSeries, Rat, RatFun, UPoly, Var};
use crate::error::{GfError, Result};

/// Coefficients that every guess must explain beyond those that determine it.
pub const MIN_VALIDATION: usize = 3;

#[derive(Clone, Debug, PartialEq)]
pub enum Guess {
    Rational(RatFun),
    /// `P(t, a)` with the solved variable named in the result.
    Algebraic(MPoly),
}

#[derive(Clone, Debug, PartialEq)]
pub struct GuessResult {
    pub guess: Guess,
    /// Coefficients needed to determine the candidate.
    pub used: usize,
    /// Further coefficients it was checked against.
    pub validated: usize,
}

impl fmt::Display for GuessResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.guess {
            Guess::Rational(r) => write!(f, "{r}"),
            Guess::Algebraic(p) => write!(f, "{p} = 0"),
        }
    }
}

/// Smallest-degree `P/Q` with `deg P <= max_num_deg`, `deg Q <= max_den_deg`, `Q(0) != 0`,
/// whose expansion matches every coefficient.
///
/// Candidates are tried by increasing `deg P + deg Q`, then by denominator degree;
/// a candidate is only eligible when at least three coefficients are left over
/// for validation.
pub fn guess_rational(coeffs: &[Rat], max_num_deg: usize, max_den_deg: usize) -> Result<Option<GuessResult>> {
    let len = coeffs.len();
    if len < 1 + MIN_VALIDATION {
        return Err(GfError::InsufficientData(format!(
            "{len} coefficients leave no room for validation"
        )));
    }
    for total in 0..=max_num_deg + max_den_deg {
        for b in 0..=total.min(max_den_deg) {
            let a = total - b;
            if a > max_num_deg || a + b + 1 + MIN_VALIDATION > len {
                continue;
            }
            if let Some(f) = fit_rational(coeffs, a, b)? {
                return Ok(Some(GuessResult {
                    guess: Guess::Rational(f),
                    used: a + b + 1,
                    validated: len - (a + b + 1),
                }));
            }
        }
    }
    Ok(None)
}

/// Solves `Q * A - P = O(t^len)` with unknowns `q_0..q_b, p_0..p_a`.
fn fit_rational(coeffs: &[Rat], a: usize, b: usize) -> Result<Option<RatFun>> {
    let ncols = (b + 1) + (a + 1);
    let rows: Vec<Vec<Rat>> = (0..coeffs.len())
        .map(|k| {
            let mut row = vec![Rat::zero(); ncols];
            for (j, slot) in row.iter_mut().enumerate().take(b.min(k) + 1) {
                *slot = coeffs[k - j].clone();
            }
            if k <= a {
                row[b + 1 + k] = -Rat::one();
            }
            row
        })
        .collect();
    for v in nullspace(&rows, ncols) {
        if v[0].is_zero() {
            continue;
        }
        let den = UPoly::new(v[..=b].to_vec());
        let num = UPoly::new(v[b + 1..].to_vec());
        return RatFun::from_rat(num, den).map(Some);
    }
    Ok(None)
}

/// A nonzero `P(t, a)` of bidegree at most `(d, e)` with `P(t, A(t)) = O(t^len)`.
///
/// The result is a primitive integer polynomial whose largest monomial (graded order)
/// has a positive coefficient. When several relations fit, the one whose largest
/// monomial is smallest is returned.
pub fn guess_algebraic(coeffs: &[Rat], d: usize, e: usize, var: &Var) -> Result<Option<GuessResult>> {
    let unknowns = (d + 1) * (e + 1);
    let len = coeffs.len();
    if len + 1 < unknowns + MIN_VALIDATION {
        return Err(GfError::InsufficientData(format!(
            "bidegree ({d}, {e}) needs {} coefficients, got {len}",
            unknowns + MIN_VALIDATION - 1
        )));
    }
    let t = Var::new("t");
    let mut monos: Vec<(usize, usize, Monomial)> = (0..=d)
        .flat_map(|i| (0..=e).map(move |j| (i, j)))
        .map(|(i, j)| {
            let m = Monomial::from_pairs(vec![(t.clone(), i as i32), (var.clone(), j as i32)]);
            (i, j, m)
        })
        .collect();
    monos.sort_by(|x, y| y.2.cmp(&x.2));
    let order = len - 1;
    let series = RSeries::from_coeffs(coeffs.to_vec());
    let mut powers = vec![RSeries::one(order)];
    for j in 1..=e {
        powers.push(powers[j - 1].mul_to(&series, order));
    }
    let rows: Vec<Vec<Rat>> = (0..len)
        .map(|k| {
            monos
                .iter()
                .map(|(i, j, _)| {
                    if *i <= k {
                        powers[*j].coeff(k - i).clone()
                    } else {
                        Rat::zero()
                    }
                })
                .collect()
        })
        .collect();
    let basis = nullspace(&rows, unknowns);
    if basis.is_empty() {
        return Ok(None);
    }
    let (ech, _) = echelon(&basis, unknowns);
    let mut v: Vec<Rat> = ech.last().unwrap().iter().cloned().map(rat_from_big).collect();
    if v.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative()) {
        v.iter_mut().for_each(|x| *x = -x.clone());
    }
    let p = MPoly::from_terms(monos.iter().zip(v).map(|((_, _, m), c)| (m.clone(), c)));
    if !p.contains_var(var) {
        return Ok(None);
    }
    Ok(Some(GuessResult {
        guess: Guess::Algebraic(p),
        used: unknowns - 1,
        validated: len - (unknowns - 1),
    }))
}
