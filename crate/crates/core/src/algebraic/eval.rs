//! Substitution of truncated series into polynomials.

use std::collections::{BTreeMap, HashMap};

use crate::arith::{Coeff, MPoly, Rat, TSeries, Var};
use crate::error::{GfError, Result};

/// A polynomial split as `sum c(rest) * t^a * prod x_j^{e_j}` over the listed unknowns.
#[derive(Clone, Debug)]
pub struct SplitPoly {
    terms: Vec<(usize, Vec<u32>, MPoly)>,
}

impl SplitPoly {
    pub fn new(p: &MPoly, unknowns: &[Var]) -> Result<SplitPoly> {
        let t = Var::new("t");
        let mut groups: BTreeMap<(usize, Vec<u32>), MPoly> = BTreeMap::new();
        for (m, c) in p.terms() {
            let a = m.exponent(&t);
            if a < 0 {
                return Err(GfError::Invalid(format!("negative power of t in {p}")));
            }
            let mut rest = m.without(&t);
            let mut exps = Vec::with_capacity(unknowns.len());
            for x in unknowns {
                let e = m.exponent(x);
                if e < 0 {
                    return Err(GfError::Invalid(format!("negative power of {x} in {p}")));
                }
                exps.push(e as u32);
                rest = rest.without(x);
            }
            let entry = groups.entry((a as usize, exps)).or_insert_with(MPoly::zero);
            entry.add_term(rest, c.clone());
        }
        Ok(SplitPoly {
            terms: groups
                .into_iter()
                .filter(|(_, c)| !c.is_zero())
                .map(|((a, e), c)| (a, e, c))
                .collect(),
        })
    }

    /// `(t-exponent, unknown exponents, coefficient)` triples.
    pub fn terms(&self) -> &[(usize, Vec<u32>, MPoly)] {
        &self.terms
    }

    /// Evaluates at series values, truncated to `order`; every value must reach `order`.
    pub fn eval<C: Coeff>(
        &self,
        values: &[TSeries<C>],
        order: usize,
        embed: impl Fn(&MPoly) -> Result<C>,
    ) -> Result<TSeries<C>> {
        let mut powers: HashMap<(usize, u32), TSeries<C>> = HashMap::new();
        let mut acc = TSeries::<C>::zero(order);
        for (a, exps, c) in &self.terms {
            if *a > order {
                continue;
            }
            let mut prod = TSeries::constant(embed(c)?, order - a);
            for (j, &e) in exps.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let pw = power(&mut powers, &values[j], j, e, order);
                prod = prod.mul_to(&pw.truncate(order - a), order - a);
            }
            acc = acc.add(&pad_shift(&prod, *a, order));
        }
        Ok(acc)
    }
}

fn power<C: Coeff>(
    cache: &mut HashMap<(usize, u32), TSeries<C>>,
    base: &TSeries<C>,
    j: usize,
    e: u32,
    order: usize,
) -> TSeries<C> {
    if let Some(p) = cache.get(&(j, e)) {
        return p.clone();
    }
    let p = if e == 1 {
        base.truncate(order)
    } else {
        let prev = power(cache, base, j, e - 1, order);
        prev.mul_to(&base.truncate(order), order)
    };
    cache.insert((j, e), p.clone());
    p
}

/// `t^a * s`, viewed at order `order`.
fn pad_shift<C: Coeff>(s: &TSeries<C>, a: usize, order: usize) -> TSeries<C> {
    let mut v = vec![C::zero(); a];
    v.extend(s.coeffs().iter().take(order + 1 - a).cloned());
    TSeries::new(v, order)
}

/// Coefficients that must be plain rationals.
pub fn embed_rat(c: &MPoly) -> Result<Rat> {
    c.as_constant()
        .ok_or_else(|| GfError::Invalid(format!("coefficient {c} is not a rational constant")))
}

pub fn embed_mpoly(c: &MPoly) -> Result<MPoly> {
    Ok(c.clone())
}
