//! Sparse multivariate polynomials over Q.
//!
//! Terms are kept in a map from exponent vectors to nonzero rationals, ordered
//! graded-lexicographically with the variable priority `t > x > y > u > v > s`
//! followed by all other names alphabetically. Exponents are signed so that
//! Laurent slices in a catalytic variable can be represented; every operation
//! that needs a genuine polynomial checks for that explicitly.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use super::coeff::Coeff;
use super::rat::Rat;

const CANONICAL_ORDER: [&str; 6] = ["t", "x", "y", "u", "v", "s"];

/// Named indeterminate. Ordering follows the canonical priority list, then names.
#[derive(Clone)]
pub struct Var {
    rank: u32,
    name: Arc<str>,
}

impl Var {
    pub fn new(name: &str) -> Var {
        let rank = CANONICAL_ORDER
            .iter()
            .position(|c| *c == name)
            .unwrap_or(CANONICAL_ORDER.len()) as u32;
        Var {
            rank,
            name: Arc::from(name),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }
}

impl PartialEq for Var {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.name, &other.name) || self.name == other.name
    }
}
impl Eq for Var {}

impl Hash for Var {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.name.hash(state)
    }
}

impl Ord for Var {
    fn cmp(&self, other: &Self) -> Ordering {
        self.rank
            .cmp(&other.rank)
            .then_with(|| self.name.cmp(&other.name))
    }
}
impl PartialOrd for Var {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

/// Exponent vector, sparse and sorted by variable; never stores a zero exponent.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<(Var, i32)>);

impl Monomial {
    pub fn one() -> Monomial {
        Monomial(Vec::new())
    }

    pub fn var(v: Var, e: i32) -> Monomial {
        if e == 0 {
            Monomial::one()
        } else {
            Monomial(vec![(v, e)])
        }
    }

    pub fn from_pairs(mut pairs: Vec<(Var, i32)>) -> Monomial {
        pairs.sort_by(|a, b| a.0.cmp(&b.0));
        let mut out: Vec<(Var, i32)> = Vec::with_capacity(pairs.len());
        for (v, e) in pairs {
            match out.last_mut() {
                Some(last) if last.0 == v => last.1 += e,
                _ => out.push((v, e)),
            }
        }
        out.retain(|(_, e)| *e != 0);
        Monomial(out)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().map(|(_, e)| *e as i64).sum()
    }

    pub fn exponent(&self, v: &Var) -> i32 {
        self.0
            .iter()
            .find(|(w, _)| w == v)
            .map(|(_, e)| *e)
            .unwrap_or(0)
    }

    pub fn pairs(&self) -> &[(Var, i32)] {
        &self.0
    }

    pub fn is_polynomial(&self) -> bool {
        self.0.iter().all(|(_, e)| *e >= 0)
    }

    /// Monomial with `v` removed.
    pub fn without(&self, v: &Var) -> Monomial {
        Monomial(self.0.iter().filter(|(w, _)| w != v).cloned().collect())
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let e = a[i].1 + b[j].1;
                    if e != 0 {
                        out.push((a[i].0.clone(), e));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    pub fn inverse(&self) -> Monomial {
        Monomial(self.0.iter().map(|(v, e)| (v.clone(), -e)).collect())
    }

    /// `self / other` when the quotient has non-negative exponents.
    pub fn divide(&self, other: &Monomial) -> Option<Monomial> {
        let q = self.mul(&other.inverse());
        if q.is_polynomial() {
            Some(q)
        } else {
            None
        }
    }

    fn lex_cmp(&self, other: &Monomial) -> Ordering {
        let (a, b) = (&self.0, &other.0);
        let (mut i, mut j) = (0, 0);
        loop {
            match (a.get(i), b.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some((_, ea)), None) => return ea.cmp(&0),
                (None, Some((_, eb))) => return 0.cmp(eb),
                (Some((va, ea)), Some((vb, eb))) => match va.cmp(vb) {
                    Ordering::Less => return ea.cmp(&0),
                    Ordering::Greater => return 0.cmp(eb),
                    Ordering::Equal => {
                        if ea != eb {
                            return ea.cmp(eb);
                        }
                        i += 1;
                        j += 1;
                    }
                },
            }
        }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.lex_cmp(other))
    }
}
impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (k, (v, e)) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Sparse multivariate (Laurent) polynomial with rational coefficients.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct MPoly {
    terms: BTreeMap<Monomial, Rat>,
}

impl MPoly {
    pub fn zero() -> MPoly {
        MPoly::default()
    }

    pub fn one() -> MPoly {
        MPoly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> MPoly {
        MPoly::term(c, Monomial::one())
    }

    pub fn int(c: i64) -> MPoly {
        MPoly::constant(super::rat::rat(c))
    }

    pub fn term(c: Rat, m: Monomial) -> MPoly {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MPoly { terms }
    }

    pub fn var(name: &str) -> MPoly {
        MPoly::term(Rat::one(), Monomial::var(Var::new(name), 1))
    }

    /// `name^e`, with negative `e` allowed.
    pub fn var_pow(name: &str, e: i32) -> MPoly {
        MPoly::term(Rat::one(), Monomial::var(Var::new(name), e))
    }

    pub fn from_terms(it: impl IntoIterator<Item = (Monomial, Rat)>) -> MPoly {
        let mut p = MPoly::zero();
        for (m, c) in it {
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.is_one())
    }

    pub fn as_constant(&self) -> Option<Rat> {
        match self.terms.len() {
            0 => Some(Rat::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    pub fn constant_term(&self) -> Rat {
        self.terms
            .get(&Monomial::one())
            .cloned()
            .unwrap_or_else(Rat::zero)
    }

    pub fn coeff_of(&self, m: &Monomial) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    /// Largest term in graded-lex order.
    pub fn leading_term(&self) -> Option<(&Monomial, &Rat)> {
        self.terms.iter().next_back()
    }

    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(|m| m.is_polynomial())
    }

    pub fn vars(&self) -> BTreeSet<Var> {
        self.terms
            .keys()
            .flat_map(|m| m.pairs().iter().map(|(v, _)| v.clone()))
            .collect()
    }

    pub fn contains_var(&self, v: &Var) -> bool {
        self.terms.keys().any(|m| m.exponent(v) != 0)
    }

    pub fn total_degree(&self) -> Option<i64> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    /// Largest exponent of `v` among the terms.
    pub fn degree_in(&self, v: &Var) -> Option<i32> {
        self.terms.keys().map(|m| m.exponent(v)).max()
    }

    pub fn min_degree_in(&self, v: &Var) -> Option<i32> {
        self.terms.keys().map(|m| m.exponent(v)).min()
    }

    /// Coefficient of `v^k`, as a polynomial free of `v`.
    pub fn coeff_in(&self, v: &Var, k: i32) -> MPoly {
        MPoly::from_terms(
            self.terms
                .iter()
                .filter(|(m, _)| m.exponent(v) == k)
                .map(|(m, c)| (m.without(v), c.clone())),
        )
    }

    /// Dense coefficient list in `v` (index = power). Requires non-negative powers of `v`.
    pub fn to_dense_in(&self, v: &Var) -> Option<Vec<MPoly>> {
        if self.min_degree_in(v).unwrap_or(0) < 0 {
            return None;
        }
        let deg = self.degree_in(v).unwrap_or(0).max(0) as usize;
        let mut out = vec![MPoly::zero(); deg + 1];
        for (m, c) in &self.terms {
            let e = m.exponent(v) as usize;
            out[e].add_term(m.without(v), c.clone());
        }
        Some(out)
    }

    pub fn from_dense_in(v: &Var, coeffs: &[MPoly]) -> MPoly {
        let mut out = MPoly::zero();
        for (k, c) in coeffs.iter().enumerate() {
            let vk = Monomial::var(v.clone(), k as i32);
            for (m, r) in &c.terms {
                out.add_term(m.mul(&vk), r.clone());
            }
        }
        out
    }

    pub fn scale(&self, r: &Rat) -> MPoly {
        if r.is_zero() {
            return MPoly::zero();
        }
        MPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c * r))
                .collect(),
        }
    }

    pub fn mul_monomial(&self, mono: &Monomial) -> MPoly {
        MPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.mul(mono), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> MPoly {
        let mut result = MPoly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Substitutes `v := value` (polynomial value, non-negative powers of `v` only).
    pub fn substitute(&self, v: &Var, value: &MPoly) -> Option<MPoly> {
        let dense = self.to_dense_in(v)?;
        let mut acc = MPoly::zero();
        for c in dense.iter().rev() {
            acc = &(&acc * value) + c;
        }
        Some(acc)
    }

    /// Substitutes `v := value` for a rational value; negative powers need `value != 0`.
    pub fn substitute_rat(&self, v: &Var, value: &Rat) -> MPoly {
        let mut out = MPoly::zero();
        for (m, c) in &self.terms {
            let e = m.exponent(v);
            let factor = if e >= 0 {
                num_traits::pow(value.clone(), e as usize)
            } else {
                num_traits::pow(value.recip(), (-e) as usize)
            };
            out.add_term(m.without(v), c * factor);
        }
        out
    }

    /// Partial derivative in `v`.
    pub fn derivative(&self, v: &Var) -> MPoly {
        let mut out = MPoly::zero();
        for (m, c) in &self.terms {
            let e = m.exponent(v);
            if e != 0 {
                let dm = m.mul(&Monomial::var(v.clone(), -1));
                out.add_term(dm, c * Rat::from_integer(e.into()));
            }
        }
        out
    }

    /// Exact quotient, or `None` when `d` does not divide `self`.
    ///
    /// Division by a single term is always a Laurent monomial shift; otherwise
    /// both operands must be genuine polynomials.
    pub fn div_exact(&self, d: &MPoly) -> Option<MPoly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(MPoly::zero());
        }
        if d.terms.len() == 1 {
            let (m, c) = d.terms.iter().next().unwrap();
            let inv = m.inverse();
            let cinv = c.recip();
            return Some(MPoly {
                terms: self
                    .terms
                    .iter()
                    .map(|(mm, cc)| (mm.mul(&inv), cc * &cinv))
                    .collect(),
            });
        }
        if !self.is_polynomial() || !d.is_polynomial() {
            return None;
        }
        let (dm, dc) = d.leading_term().map(|(m, c)| (m.clone(), c.clone()))?;
        let mut rem = self.clone();
        let mut quot = MPoly::zero();
        while let Some((rm, rc)) = rem.leading_term().map(|(m, c)| (m.clone(), c.clone())) {
            let qm = rm.divide(&dm)?;
            let qc = rc / &dc;
            let step = MPoly::term(qc.clone(), qm.clone());
            rem = &rem - &(d * &step);
            quot.add_term(qm, qc);
        }
        Some(quot)
    }

    pub fn map_coeffs(&self, f: impl Fn(&Rat) -> Rat) -> MPoly {
        MPoly::from_terms(self.terms.iter().map(|(m, c)| (m.clone(), f(c))))
    }

    /// All coefficients are non-negative.
    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }
}

impl<'a> Add<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn add(self, rhs: &'a MPoly) -> MPoly {
        let (mut big, small) = if self.terms.len() >= rhs.terms.len() {
            (self.clone(), rhs)
        } else {
            (rhs.clone(), self)
        };
        for (m, c) in &small.terms {
            big.add_term(m.clone(), c.clone());
        }
        big
    }
}

impl<'a> Sub<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &'a MPoly) -> MPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl<'a> Mul<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &'a MPoly) -> MPoly {
        if self.is_zero() || rhs.is_zero() {
            return MPoly::zero();
        }
        if let Some(c) = rhs.as_constant() {
            return self.scale(&c);
        }
        if let Some(c) = self.as_constant() {
            return rhs.scale(&c);
        }
        let mut out = MPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr<MPoly> for MPoly {
            type Output = MPoly;
            fn $method(self, rhs: MPoly) -> MPoly {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a MPoly> for MPoly {
            type Output = MPoly;
            fn $method(self, rhs: &'a MPoly) -> MPoly {
                (&self).$method(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        -&self
    }
}

impl From<Rat> for MPoly {
    fn from(r: Rat) -> MPoly {
        MPoly::constant(r)
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if k == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            if m.is_one() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}

impl Zero for MPoly {
    fn zero() -> Self {
        MPoly::zero()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for MPoly {
    fn one() -> Self {
        MPoly::one()
    }
}

impl Coeff for MPoly {
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
        MPoly::constant(r)
    }
    fn scale(&self, r: &Rat) -> Self {
        MPoly::scale(self, r)
    }
    fn as_rat(&self) -> Option<Rat> {
        self.as_constant()
    }
    fn div_exact(&self, other: &Self) -> Option<Self> {
        MPoly::div_exact(self, other)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat::rat;

    fn x() -> MPoly {
        MPoly::var("x")
    }
    fn t() -> MPoly {
        MPoly::var("t")
    }

    #[test]
    fn grlex_puts_t_first() {
        let a = Monomial::var(Var::new("t"), 1);
        let b = Monomial::var(Var::new("x"), 1);
        assert!(a > b);
        let c = Monomial::var(Var::new("y"), 2);
        assert!(c > a);
    }

    #[test]
    fn arithmetic_and_cancellation() {
        let p = &(&t() + &x()) * &(&t() - &x());
        let q = &(&t() * &t()) - &(&x() * &x());
        assert_eq!(p, q);
        assert!((&p - &q).is_zero());
        assert_eq!((&t() + &MPoly::one()).pow(3).len(), 4);
    }

    #[test]
    fn exact_division() {
        let a = &(&t() + &x()).pow(3) * &(&MPoly::one() - &t());
        let q = a.div_exact(&(&t() + &x())).unwrap();
        assert_eq!(q, &(&t() + &x()).pow(2) * &(&MPoly::one() - &t()));
        assert!(a.div_exact(&(&t() + &MPoly::int(2))).is_none());
        let s = MPoly::var_pow("s", 1);
        let shifted = (&s + &MPoly::one()).div_exact(&s).unwrap();
        assert_eq!(shifted, &MPoly::one() + &MPoly::var_pow("s", -1));
    }

    #[test]
    fn dense_roundtrip_and_substitution() {
        let p = &(&t() * &x()) + &(&t().pow(3) + &MPoly::int(5));
        let dense = p.to_dense_in(&Var::new("t")).unwrap();
        assert_eq!(dense.len(), 4);
        assert_eq!(MPoly::from_dense_in(&Var::new("t"), &dense), p);
        let at2 = p.substitute_rat(&Var::new("t"), &rat(2));
        assert_eq!(at2, &x().scale(&rat(2)) + &MPoly::int(13));
        assert_eq!(p.derivative(&Var::new("t")), &x() + &t().pow(2).scale(&rat(3)));
    }

    #[test]
    fn display_is_readable() {
        let p = &(&MPoly::one() - &t().scale(&rat(3))) - &(&t() * &x());
        assert_eq!(p.to_string(), "1 - 3*t - t*x");
        assert_eq!(MPoly::var_pow("s", -1).to_string(), "s^-1");
    }
}
