//! Sections, dominant poles and coefficient asymptotics of rational series.

use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::linalg::nullspace;
use crate::arith::numeric::{complex_roots, refine_real_root, ApproxRoot};
use crate::arith::rat::{factorial, rat_to_f64, ratio};
use crate::arith::ratfun::expand_rat_parts;
use crate::arith::{Rat, RatFun, UPoly};
use crate::error::{GfError, Result};

fn rational_parts(f: &RatFun) -> Result<(UPoly<Rat>, UPoly<Rat>)> {
    f.rat_parts()
        .ok_or_else(|| GfError::Invalid("expected rational coefficients".into()))
}

/// Padé reconstruction: a fraction with `deg num <= nb`, `deg den <= db` matching
/// `coeffs[0..=nb+db]`, or `None` if the linear system only has `den(0) = 0` solutions.
pub fn pade(coeffs: &[Rat], nb: usize, db: usize) -> Option<(UPoly<Rat>, UPoly<Rat>)> {
    assert!(coeffs.len() > nb + db);
    let at = |k: isize| -> Rat {
        if k < 0 {
            Rat::zero()
        } else {
            coeffs[k as usize].clone()
        }
    };
    // sum_j q_j a_{k-j} = 0 for k in nb+1..=nb+db
    let rows: Vec<Vec<Rat>> = (nb + 1..=nb + db)
        .map(|k| (0..=db).map(|j| at(k as isize - j as isize)).collect())
        .collect();
    let basis = if rows.is_empty() {
        vec![vec![Rat::one()]]
    } else {
        nullspace(&rows, db + 1)
    };
    let q = basis.into_iter().next()?;
    let den = UPoly::new(q);
    let series = UPoly::new(coeffs[..=nb].to_vec());
    let prod = series.mul(&den);
    let num = UPoly::new(prod.coeffs().iter().take(nb + 1).cloned().collect());
    Some((num, den))
}

/// `A_{r,p}(t) = sum_n a_{np+r} t^n` as a rational function.
pub fn section(f: &RatFun, r: usize, p: usize) -> Result<RatFun> {
    if p == 0 || r >= p {
        return Err(GfError::Invalid(format!("need 0 <= r < p, got r={r}, p={p}")));
    }
    let (num, den) = rational_parts(f)?;
    if den.coeff(0).is_zero() {
        return Err(GfError::NotPowerSeries);
    }
    let d = den.degree().unwrap_or(0);
    let nn = num.degree().unwrap_or(0);
    let nb = nn + d;
    let used = 2 * d + nn + 2;
    let check = p * d.max(1);
    let total = (used + check) * p;
    let a = expand_rat_parts(&num, &den, total)?;
    let sec: Vec<Rat> = (0..used + check)
        .map(|n| a.coeff(n * p + r).clone())
        .collect();
    let (sn, sd) = pade(&sec[..used], nb, d)
        .ok_or_else(|| GfError::Internal("section reconstruction found no candidate".into()))?;
    let g = RatFun::from_rat(sn, sd)?;
    let (gn, gd) = rational_parts(&g)?;
    let back = expand_rat_parts(&gn, &gd, sec.len() - 1)
        .map_err(|_| GfError::Internal("section denominator vanishes at 0".into()))?;
    if back.coeffs() != sec.as_slice() {
        return Err(GfError::Internal("section failed validation".into()));
    }
    Ok(g)
}

/// Dominant-singularity evidence for one section.
#[derive(Clone, Debug)]
pub struct SectionReport {
    pub p: usize,
    pub r: usize,
    pub section: RatFun,
    /// Distinct denominator roots of minimal modulus (0 for polynomial sections).
    pub dominant: usize,
    pub min_modulus: Option<f64>,
    pub roots: Vec<ApproxRoot>,
}

#[derive(Clone, Debug)]
pub struct SoittolaReport {
    pub precision: f64,
    pub sections: Vec<SectionReport>,
}

impl SoittolaReport {
    pub fn count(&self, p: usize, r: usize) -> Option<usize> {
        self.sections
            .iter()
            .find(|s| s.p == p && s.r == r)
            .map(|s| s.dominant)
    }
}

/// Horizon for the non-negativity and integrality sanity check.
pub const SOITTOLA_HORIZON: usize = 200;

/// Distinct poles of a rational-coefficient denominator, as reciprocals of the
/// roots of the reversed polynomial.
fn distinct_poles(den: &UPoly<Rat>) -> Result<Vec<ApproxRoot>> {
    let sf = den.squarefree_part();
    let rev = UPoly::new(sf.coeffs().iter().rev().cloned().collect::<Vec<_>>());
    let mut out = Vec::new();
    for w in complex_roots(&rev) {
        if w.z.norm() == 0.0 {
            continue;
        }
        let scale: f64 = rev
            .coeffs()
            .iter()
            .enumerate()
            .map(|(k, c)| rat_to_f64(c).abs() * w.z.norm().powi(k as i32))
            .sum();
        let value = rev
            .coeffs()
            .iter()
            .rev()
            .fold(num_complex::Complex64::zero(), |acc, c| acc * w.z + rat_to_f64(c));
        if value.norm() / scale > 1e-12 {
            return Err(GfError::Numeric(format!(
                "root residual {:.3e} above 1e-12",
                value.norm() / scale
            )));
        }
        let z = w.z.inv();
        out.push(ApproxRoot {
            z,
            error: w.error / w.z.norm_sqr(),
        });
    }
    Ok(out)
}

/// Counts poles of minimal modulus, treating moduli within `precision` (relative) as tied.
fn count_dominant(poles: &[ApproxRoot], precision: f64) -> Result<(usize, f64)> {
    let min = poles
        .iter()
        .map(|r| r.z.norm())
        .fold(f64::INFINITY, f64::min);
    let mut count = 0;
    for r in poles {
        let gap = r.z.norm() - min;
        let tol = precision * min;
        let err = 2.0 * r.error + 1e-14 * min;
        if err >= tol {
            return Err(GfError::Unresolved(format!(
                "root error {err:.3e} exceeds separation {tol:.3e}"
            )));
        }
        if (gap - tol).abs() <= err {
            return Err(GfError::Unresolved(format!(
                "modulus gap {gap:.3e} too close to separation {tol:.3e}"
            )));
        }
        if gap < tol {
            count += 1;
        }
    }
    Ok((count, min))
}

/// Bounded numeric evidence for Soittola's criterion.
pub fn soittola_check(f: &RatFun, p_max: usize, precision: f64) -> Result<SoittolaReport> {
    let (num, den) = rational_parts(f)?;
    let coeffs = expand_rat_parts(&num, &den, SOITTOLA_HORIZON)?;
    for (k, c) in coeffs.coeffs().iter().enumerate() {
        if c.is_negative() {
            return Err(GfError::NegativeCoefficient(k));
        }
        if !c.is_integer() {
            return Err(GfError::Invalid(format!("coefficient {k} is not an integer")));
        }
    }
    let mut sections = Vec::new();
    for p in 1..=p_max {
        for r in 0..p {
            let s = if p == 1 { f.clone() } else { section(f, r, p)? };
            let (_, sd) = rational_parts(&s)?;
            let poles = distinct_poles(&sd)?;
            let (dominant, min_modulus) = if poles.is_empty() {
                (0, None)
            } else {
                let (c, m) = count_dominant(&poles, precision)?;
                (c, Some(m))
            };
            sections.push(SectionReport {
                p,
                r,
                section: s,
                dominant,
                min_modulus,
                roots: poles,
            });
        }
    }
    Ok(SoittolaReport {
        precision,
        sections,
    })
}

/// `a_n ~ kappa * sign^n * rho^{-n} * n^d`.
#[derive(Clone, Debug)]
pub struct AsymptoticEstimate {
    /// Squarefree polynomial of which the dominant singularity is a root.
    pub rho_poly: UPoly<Rat>,
    /// Certified enclosure of `rho`.
    pub rho_lo: Rat,
    pub rho_hi: Rat,
    /// Point estimate and interval for the exponent `d`.
    pub d: f64,
    pub d_lo: f64,
    pub d_hi: f64,
    /// Enclosure of the constant, when it is determined.
    pub kappa: Option<(f64, f64)>,
    /// The dominant singularity sits at `-rho` and coefficients alternate in sign.
    pub alternating: bool,
}

impl AsymptoticEstimate {
    pub fn rho(&self) -> f64 {
        rat_to_f64(&((&self.rho_lo + &self.rho_hi) / Rat::from_integer(2.into())))
    }

    pub fn rho_width(&self) -> f64 {
        rat_to_f64(&(&self.rho_hi - &self.rho_lo))
    }

    /// `kappa * rho^{-n} * n^d` at the midpoint of every enclosure.
    pub fn predict(&self, n: u64) -> Option<f64> {
        let (klo, khi) = self.kappa?;
        let k = 0.5 * (klo + khi);
        let ln = k.abs().ln() - (n as f64) * self.rho().ln() + self.d * (n as f64).ln();
        Some(k.signum() * ln.exp())
    }
}

/// Width used for certified enclosures of dominant singularities.
pub fn enclosure_width() -> Rat {
    ratio(1, 1_000_000_000_000_000)
}

/// Dominant-pole asymptotics of a rational series with a unique dominant pole.
pub fn rational_asymptotics(f: &RatFun) -> Result<AsymptoticEstimate> {
    let (num, den) = rational_parts(f)?;
    if den.coeff(0).is_zero() {
        return Err(GfError::NotPowerSeries);
    }
    if den.degree().unwrap_or(0) == 0 {
        return Err(GfError::Invalid("polynomial series has no singularity".into()));
    }
    let poles = distinct_poles(&den)?;
    let min = poles
        .iter()
        .map(|r| r.z.norm())
        .fold(f64::INFINITY, f64::min);
    let tied: Vec<&ApproxRoot> = poles
        .iter()
        .filter(|r| (r.z.norm() - min).abs() <= 1e-9 * min + 2.0 * r.error)
        .collect();
    if tied.len() > 1 {
        return Err(GfError::MultipleDominantPoles);
    }
    let root = tied[0];
    let alternating = root.z.re < 0.0;
    // Multiplicity and the squarefree factor carrying the pole.
    let (factor, mult) = den
        .squarefree_decomposition()
        .into_iter()
        .min_by(|(a, _), (b, _)| {
            let va = a.eval_f64(root.z.re).abs() / a.leading().map(rat_to_f64).unwrap_or(1.0).abs();
            let vb = b.eval_f64(root.z.re).abs() / b.leading().map(rat_to_f64).unwrap_or(1.0).abs();
            va.partial_cmp(&vb).unwrap()
        })
        .ok_or_else(|| GfError::Internal("empty squarefree decomposition".into()))?;
    // Work with a positive root: reflect t -> -t when the pole is negative.
    let reflect = |p: &UPoly<Rat>| {
        if alternating {
            UPoly::new(
                p.coeffs()
                    .iter()
                    .enumerate()
                    .map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() })
                    .collect(),
            )
        } else {
            p.clone()
        }
    };
    let rho_poly = reflect(&factor).primitive();
    let (rho_lo, rho_hi) = refine_real_root(&rho_poly, root.z.norm(), &enclosure_width())
        .ok_or_else(|| GfError::Numeric("dominant pole could not be certified".into()))?;
    // kappa = c / (m-1)! with c = N(r) m! / (Q^{(m)}(r) (-r)^m), r the signed pole.
    let num_r = reflect(&num);
    let den_r = reflect(&den);
    let mut dm = den_r.clone();
    for _ in 0..mult {
        dm = dm.derivative();
    }
    let m_fact = Rat::from_integer(factorial(mult as u64));
    let m1_fact = Rat::from_integer(factorial(mult as u64 - 1));
    let kappa_at = |x: &Rat| -> Option<f64> {
        let q = dm.eval(x);
        if q.is_zero() {
            return None;
        }
        let sign = if mult % 2 == 1 { -Rat::one() } else { Rat::one() };
        let c = num_r.eval(x) * &m_fact / (q * num_traits::pow(x.clone(), mult) * sign);
        (c / &m1_fact).to_f64()
    };
    let kappa = match (kappa_at(&rho_lo), kappa_at(&rho_hi)) {
        (Some(a), Some(b)) => {
            let pad = 1e-12 * a.abs().max(b.abs());
            Some((a.min(b) - pad, a.max(b) + pad))
        }
        _ => None,
    };
    let d = (mult - 1) as f64;
    Ok(AsymptoticEstimate {
        rho_poly,
        rho_lo,
        rho_hi,
        d,
        d_lo: d,
        d_hi: d,
        kappa,
        alternating,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rf(num: &[i64], den: &[i64]) -> RatFun {
        RatFun::from_rat(UPoly::from_ints(num), UPoly::from_ints(den)).unwrap()
    }

    #[test]
    fn sections_of_geometric_series() {
        let f = rf(&[1], &[1, -2]);
        let s = section(&f, 1, 2).unwrap();
        assert!(s.equals(&rf(&[2], &[1, -4])));
        let g = rf(&[1], &[1, -1]);
        assert!(section(&g, 0, 2).unwrap().equals(&g));
    }

    #[test]
    fn dominant_counts() {
        let f = rf(&[1], &[1, 0, -1]);
        let rep = soittola_check(&f, 2, 1e-6).unwrap();
        assert_eq!(rep.count(1, 0), Some(2));
        assert_eq!(rep.count(2, 0), Some(1));
        assert_eq!(rep.count(2, 1), Some(0));
        let g = rf(&[1], &[1, -2]);
        assert_eq!(soittola_check(&g, 1, 1e-6).unwrap().count(1, 0), Some(1));
        assert_eq!(
            soittola_check(&rf(&[1], &[1, 1]), 1, 1e-6).unwrap_err(),
            GfError::NegativeCoefficient(1)
        );
    }

    #[test]
    fn simple_and_double_poles() {
        let e = rational_asymptotics(&rf(&[1], &[1, -2])).unwrap();
        assert!((e.rho() - 0.5).abs() < 1e-15);
        assert_eq!(e.d, 0.0);
        let (lo, hi) = e.kappa.unwrap();
        assert!(lo <= 1.0 && 1.0 <= hi);
        let e = rational_asymptotics(&rf(&[1], &[1, -2, 1])).unwrap();
        assert!((e.rho() - 1.0).abs() < 1e-15);
        assert_eq!(e.d, 1.0);
        let (lo, hi) = e.kappa.unwrap();
        assert!(lo <= 1.0 && 1.0 <= hi);
        assert_eq!(
            rational_asymptotics(&rf(&[1], &[1, 0, -1])).unwrap_err(),
            GfError::MultipleDominantPoles
        );
    }
}
