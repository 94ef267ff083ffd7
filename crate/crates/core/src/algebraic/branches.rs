//! Power-series solutions of `P(t, a) = 0`, Lagrange inversion and verification.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::numeric::complex_roots;
use crate::arith::rat::{lcm_of_denominators, rat_from_big};
use crate::arith::resultant::discriminant;
use crate::arith::{MPoly, RSeries, Rat, TSeries, UPoly, Var};
use crate::error::{GfError, Result};

/// A branch `A(t)` with rational constant term, lifted to a known order.
#[derive(Clone, Debug, PartialEq)]
pub struct BranchSolution {
    pub constant_term: Rat,
    pub series: RSeries,
    /// `P(t, A(t)) = O(t^{residual_order + 1})`.
    pub residual_order: usize,
}

/// All lifted branches plus an account of the roots of `P(0, a)` that were not lifted.
#[derive(Clone, Debug)]
pub struct BranchReport {
    pub branches: Vec<BranchSolution>,
    /// Rational multiple roots of `P(0, a)`; their branches may ramify.
    pub ramified: Vec<(Rat, usize)>,
    /// Number of roots of `P(0, a)` (with multiplicity) that are not rational.
    pub irrational_degree: usize,
    /// Drop in degree from `P(t, a)` to `P(0, a)`: branches with a pole at `t = 0`.
    pub singular_degree: usize,
}

/// `P` as a polynomial in `a` with coefficients in `Q[t]`.
#[derive(Clone, Debug)]
pub struct Bivariate {
    coeffs: Vec<UPoly<Rat>>,
}

impl Bivariate {
    pub fn new(p: &MPoly, a: &Var) -> Result<Bivariate> {
        let t = Var::new("t");
        if let Some(v) = p.vars().into_iter().find(|v| *v != t && v != a) {
            return Err(GfError::Invalid(format!("unexpected variable {v} in {p}")));
        }
        let dense = p
            .to_dense_in(a)
            .ok_or_else(|| GfError::Invalid(format!("negative power of {a} in {p}")))?;
        let coeffs = dense
            .iter()
            .map(|c| {
                c.to_dense_in(&t)
                    .map(|d| UPoly::new(d.iter().map(|x| x.constant_term()).collect()))
                    .ok_or_else(|| GfError::Invalid(format!("negative power of t in {p}")))
            })
            .collect::<Result<Vec<_>>>()?;
        let mut b = Bivariate { coeffs };
        while b.coeffs.last().is_some_and(UPoly::is_zero) {
            b.coeffs.pop();
        }
        if b.coeffs.is_empty() {
            return Err(GfError::ZeroPolynomial);
        }
        Ok(b)
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[UPoly<Rat>] {
        &self.coeffs
    }

    pub fn derivative(&self) -> Bivariate {
        let mut coeffs: Vec<UPoly<Rat>> = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(j, c)| c.scale(&Rat::from_integer(j.into())))
            .collect();
        if coeffs.is_empty() {
            coeffs.push(UPoly::zero());
        }
        Bivariate { coeffs }
    }

    /// `P(0, a)`.
    pub fn at_zero(&self) -> UPoly<Rat> {
        UPoly::new(self.coeffs.iter().map(|c| c.coeff(0)).collect())
    }

    /// `P(t, a(t))` truncated to `order`; `a` must reach `order`.
    pub fn eval(&self, a: &RSeries, order: usize) -> RSeries {
        let a = a.truncate(order);
        let mut acc = RSeries::zero(order);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul_to(&a, order);
            let cs = RSeries::new(c.coeffs().to_vec(), order);
            acc = acc.add(&cs);
        }
        acc
    }

    /// Divides out the largest power of `t` dividing every coefficient.
    fn without_t_content(&self) -> Bivariate {
        let k = self
            .coeffs
            .iter()
            .filter(|c| !c.is_zero())
            .map(|c| c.coeffs().iter().position(|x| !x.is_zero()).unwrap())
            .min()
            .unwrap_or(0);
        Bivariate {
            coeffs: self
                .coeffs
                .iter()
                .map(|c| UPoly::new(c.coeffs().iter().skip(k).cloned().collect()))
                .collect(),
        }
    }
}

/// `1/f` by Newton iteration; `f(0)` must be nonzero.
pub fn series_inverse(f: &RSeries, order: usize) -> Result<RSeries> {
    let f0 = f.coeff(0);
    if f0.is_zero() {
        return Err(GfError::NonInvertibleConstant);
    }
    let two = RSeries::constant(Rat::from_integer(2.into()), order);
    let mut b = RSeries::constant(f0.recip(), 0);
    let mut prec = 0;
    while prec < order {
        let next = (2 * prec + 1).min(order);
        let bp = TSeries::new(b.into_coeffs(), next);
        let fb = f.truncate(next.min(f.order())).mul_to(&bp, next);
        let fb = TSeries::new(fb.into_coeffs(), next);
        b = bp.mul_to(&two.truncate(next).sub(&fb), next);
        prec = next;
    }
    Ok(b)
}

/// Newton lifting of a simple root `a0` of `P(0, a)` to order `n`.
fn lift(p: &Bivariate, dp: &Bivariate, a0: Rat, n: usize) -> Result<RSeries> {
    let mut a = RSeries::constant(a0, 0);
    let mut prec = 0;
    while prec < n {
        let next = (2 * prec + 1).min(n);
        let ap = TSeries::new(a.into_coeffs(), next);
        let f = p.eval(&ap, next);
        let fp = dp.eval(&ap, next);
        let step = f.mul_to(&series_inverse(&fp, next)?, next);
        a = ap.sub(&step);
        prec = next;
    }
    Ok(a)
}

fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let n = n.abs().to_u64()?;
    if n > 1_000_000_000_000 {
        return None;
    }
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(BigInt::from(d));
            if d * d != n {
                out.push(BigInt::from(n / d));
            }
        }
        d += 1;
    }
    Some(out)
}

/// Continued-fraction convergents of `x` with denominators up to `bound`.
fn convergents(x: f64, bound: i64) -> Vec<Rat> {
    let mut out = Vec::new();
    let (mut h0, mut h1) = (BigInt::one(), BigInt::from(x.floor() as i64));
    let (mut k0, mut k1) = (BigInt::zero(), BigInt::one());
    let mut frac = x - x.floor();
    out.push(Rat::new(h1.clone(), k1.clone()));
    for _ in 0..40 {
        if frac.abs() < 1e-15 {
            break;
        }
        let y = 1.0 / frac;
        let q = BigInt::from(y.floor() as i64);
        frac = y - y.floor();
        let h2 = &q * &h1 + &h0;
        let k2 = &q * &k1 + &k0;
        if k2 > BigInt::from(bound) {
            break;
        }
        out.push(Rat::new(h2.clone(), k2.clone()));
        (h0, h1, k0, k1) = (h1, h2, k1, k2);
    }
    out
}

/// Rational roots with multiplicities, ascending.
pub fn rational_roots(p: &UPoly<Rat>) -> Vec<(Rat, usize)> {
    if p.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    let mut rest = p.clone();
    let mut out: Vec<(Rat, usize)> = Vec::new();
    let take = |r: Rat, rest: &mut UPoly<Rat>, out: &mut Vec<(Rat, usize)>| {
        let lin = UPoly::new(vec![-r.clone(), Rat::one()]);
        let mut m = 0;
        while rest.degree().unwrap_or(0) > 0 {
            let (q, rem) = rest.div_rem(&lin);
            if !rem.is_zero() {
                break;
            }
            *rest = q;
            m += 1;
        }
        if m > 0 {
            out.push((r, m));
        }
    };
    take(Rat::zero(), &mut rest, &mut out);
    if rest.degree().unwrap_or(0) > 0 {
        let l = rat_from_big(lcm_of_denominators(rest.coeffs()));
        let ints: Vec<BigInt> = rest.coeffs().iter().map(|c| (c * &l).to_integer()).collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
        let a0 = &ints[0] / &g;
        let lc = ints.last().unwrap() / &g;
        let candidates: Vec<Rat> = match (divisors(&a0), divisors(&lc)) {
            (Some(ps), Some(qs)) => {
                let mut c = Vec::new();
                for num in &ps {
                    for den in &qs {
                        let r = Rat::new(num.clone(), den.clone());
                        c.push(-r.clone());
                        c.push(r);
                    }
                }
                c
            }
            _ => {
                let bound = lc.abs().to_i64().unwrap_or(i64::MAX).min(1_000_000_000_000);
                complex_roots(&rest)
                    .iter()
                    .filter(|z| z.z.im.abs() <= 1e-6 * z.z.norm().max(1.0))
                    .flat_map(|z| convergents(z.z.re, bound))
                    .collect()
            }
        };
        let mut seen: Vec<Rat> = Vec::new();
        for c in candidates {
            if seen.contains(&c) {
                continue;
            }
            seen.push(c.clone());
            take(c, &mut rest, &mut out);
        }
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

/// Power-series branches of `P(t, a) = 0` whose constant term is a simple rational root
/// of `P(0, a)`, each lifted to order `n` and verified.
pub fn series_roots(p: &MPoly, a: &Var, n: usize) -> Result<BranchReport> {
    let full = Bivariate::new(p, a)?;
    if full.degree() == 0 {
        return Err(GfError::Invalid(format!("{p} does not involve {a}")));
    }
    if full.degree() >= 2 && discriminant(p, a)?.is_zero() {
        return Err(GfError::NotSquarefree);
    }
    let b = full.without_t_content();
    let db = b.derivative();
    let p0 = b.at_zero();
    let d0 = p0.degree().unwrap_or(0);
    let roots = rational_roots(&p0);
    let rational_count: usize = roots.iter().map(|(_, m)| m).sum();
    let mut branches = Vec::new();
    let mut ramified = Vec::new();
    for (r, m) in roots {
        if m > 1 {
            ramified.push((r, m));
            continue;
        }
        let series = lift(&b, &db, r.clone(), n)?;
        let residual_order = verify_algebraic(&series, p, a)?;
        if residual_order != n as i64 {
            return Err(GfError::Internal(format!(
                "lifted branch verified only to order {residual_order}"
            )));
        }
        branches.push(BranchSolution {
            constant_term: r,
            series,
            residual_order: n,
        });
    }
    Ok(BranchReport {
        branches,
        ramified,
        irrational_degree: d0 - rational_count,
        singular_degree: b.degree() - d0,
    })
}

/// Largest `m <= order(a)` with `P(t, a(t)) = O(t^{m+1})`, or `-1` if the constant term fails.
pub fn verify_algebraic(a: &RSeries, p: &MPoly, var: &Var) -> Result<i64> {
    let b = Bivariate::new(p, var)?;
    let n = a.order();
    let res = b.eval(a, n);
    let v = res.valuation();
    Ok(if v > n { n as i64 } else { v as i64 - 1 })
}

/// `[t^n] Psi(U)` where `U = t Phi(U)`, by Lagrange inversion.
pub fn lagrange_coeff(phi: &RSeries, psi: &RSeries, n: usize) -> Result<Rat> {
    if n == 0 {
        return Err(GfError::Invalid("Lagrange inversion needs n >= 1".into()));
    }
    if phi.coeff(0).is_zero() {
        return Err(GfError::Invalid("Phi(0) must be nonzero".into()));
    }
    if phi.order() < n - 1 || psi.order() < n {
        return Err(GfError::InsufficientOrder(format!(
            "need Phi to order {} and Psi to order {n}",
            n - 1
        )));
    }
    let m = n - 1;
    let base = phi.truncate(m);
    let mut pow = RSeries::one(m);
    let mut sq = base.clone();
    let mut e = n;
    while e > 0 {
        if e & 1 == 1 {
            pow = pow.mul_to(&sq, m);
        }
        sq = sq.mul_to(&sq, m);
        e >>= 1;
    }
    let dpsi = psi.truncate(n).derive()?;
    let c = dpsi.mul_to(&pow, m).coeff(m).clone();
    Ok(c / Rat::from_integer(n.into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::parse::parse_poly;
    use crate::arith::rat::ratio;

    fn a() -> Var {
        Var::new("a")
    }

    #[test]
    fn roots_of_small_polynomials() {
        let p = UPoly::from_ints(&[0, -1, 1]); // a^2 - a
        assert_eq!(rational_roots(&p), vec![(Rat::zero(), 1), (Rat::one(), 1)]);
        let q = UPoly::from_ints(&[-1, 0, 0, 4]).mul(&UPoly::from_ints(&[1, -2]).pow(2));
        let r = rational_roots(&q);
        assert_eq!(r, vec![(ratio(1, 2), 2)]);
    }

    #[test]
    fn catalan_shift_branches() {
        let p = parse_poly("a - t - a^2").unwrap();
        let rep = series_roots(&p, &a(), 8).unwrap();
        assert_eq!(rep.branches.len(), 2);
        assert_eq!(rep.branches[0].constant_term, Rat::zero());
        assert_eq!(
            rep.branches[0].series,
            RSeries::from_ints(&[0, 1, 1, 2, 5, 14, 42, 132, 429])
        );
        assert_eq!(rep.branches[1].constant_term, Rat::one());
    }

    #[test]
    fn non_squarefree_rejected() {
        let p = parse_poly("(a - t)^2").unwrap();
        assert!(matches!(series_roots(&p, &a(), 4), Err(GfError::NotSquarefree)));
    }

    #[test]
    fn verification_orders() {
        let p = parse_poly("a - t - a^2").unwrap();
        let ones = RSeries::from_ints(&[1; 6]);
        assert_eq!(verify_algebraic(&ones, &p, &a()).unwrap(), 0);
        let twos = RSeries::from_ints(&[2; 6]);
        assert_eq!(verify_algebraic(&twos, &p, &a()).unwrap(), -1);
    }

    #[test]
    fn lagrange_small_cases() {
        let phi = RSeries::from_ints(&[1, 2, 1, 0]);
        let psi = RSeries::from_ints(&[0, 1, 0, 0]);
        assert_eq!(lagrange_coeff(&phi, &psi, 3).unwrap(), Rat::from_integer(5.into()));
        assert_eq!(lagrange_coeff(&phi, &psi, 1).unwrap(), Rat::one());
        let geo = RSeries::from_ints(&[1; 5]);
        let id = RSeries::from_ints(&[0, 1, 0, 0, 0]);
        assert_eq!(lagrange_coeff(&geo, &id, 4).unwrap(), Rat::from_integer(5.into()));
    }

    #[test]
    fn newton_inverse() {
        let f = RSeries::from_ints(&[1, -1, 0, 0, 0, 0, 0]);
        assert_eq!(series_inverse(&f, 6).unwrap(), RSeries::from_ints(&[1; 7]));
    }
}
