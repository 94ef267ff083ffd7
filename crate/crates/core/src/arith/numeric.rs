//! Numeric root isolation for polynomials with rational coefficients.
//!
//! Complex roots come from Aberth–Ehrlich iteration in double precision.
//! Real roots can then be certified exactly: a sign change of the rational
//! polynomial is located and bisected with rational arithmetic.

use num_complex::Complex64;
use num_traits::{Signed, Zero};

use super::rat::{f64_to_rat, rat_to_f64, Rat};
use super::upoly::UPoly;

/// A complex root with an a-posteriori error estimate.
#[derive(Clone, Copy, Debug)]
pub struct ApproxRoot {
    pub z: Complex64,
    /// Newton-step size `|p(z)/p'(z)|` times the degree, a pragmatic error radius.
    pub error: f64,
}

fn horner(c: &[Complex64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::zero();
    let mut dp = Complex64::zero();
    for a in c.iter().rev() {
        dp = dp * z + p;
        p = p * z + a;
    }
    (p, dp)
}

/// All complex roots (with multiplicity) of a nonzero polynomial.
pub fn complex_roots(p: &UPoly<Rat>) -> Vec<ApproxRoot> {
    let deg = match p.degree() {
        Some(d) if d > 0 => d,
        _ => return Vec::new(),
    };
    let coeffs: Vec<Complex64> = p
        .coeffs()
        .iter()
        .map(|c| Complex64::new(rat_to_f64(c), 0.0))
        .collect();
    let lead = coeffs[deg];
    let monic: Vec<Complex64> = coeffs.iter().map(|c| c / lead).collect();
    // Roots with zero value are split off exactly.
    let zeros = monic.iter().take_while(|c| c.norm() == 0.0).count();
    let reduced: Vec<Complex64> = monic[zeros..].to_vec();
    let n = reduced.len() - 1;
    let mut roots: Vec<Complex64> = Vec::with_capacity(deg);
    if n > 0 {
        let radius = reduced[..n]
            .iter()
            .map(|c| c.norm())
            .fold(0.0f64, f64::max)
            .max(1e-300);
        let r0 = (1.0 + radius).min(
            // geometric mean of root moduli is a gentler starting radius
            (reduced[0].norm()).powf(1.0 / n as f64).max(1e-12) * 1.5,
        );
        let mut z: Vec<Complex64> = (0..n)
            .map(|k| {
                let theta = 2.0 * std::f64::consts::PI * (k as f64) / (n as f64) + 0.4;
                Complex64::from_polar(r0, theta)
            })
            .collect();
        for _ in 0..2000 {
            let mut worst: f64 = 0.0;
            for i in 0..n {
                let (pv, dpv) = horner(&reduced, z[i]);
                if pv.norm() == 0.0 {
                    continue;
                }
                let ratio = pv / dpv;
                let mut s = Complex64::zero();
                for j in 0..n {
                    if j != i {
                        let d = z[i] - z[j];
                        if d.norm() > 0.0 {
                            s += d.inv();
                        }
                    }
                }
                let w = ratio / (Complex64::new(1.0, 0.0) - ratio * s);
                if w.is_finite() {
                    z[i] -= w;
                    worst = worst.max(w.norm() / z[i].norm().max(1e-300));
                }
            }
            if worst < 1e-16 {
                break;
            }
        }
        roots.extend(z);
    }
    let mut out: Vec<ApproxRoot> = roots
        .into_iter()
        .map(|z| {
            let (pv, dpv) = horner(&coeffs, z);
            let step = if dpv.norm() > 0.0 {
                (pv / dpv).norm()
            } else {
                f64::INFINITY
            };
            ApproxRoot {
                z,
                error: (step * deg as f64).max(z.norm() * 4.0 * f64::EPSILON),
            }
        })
        .collect();
    for _ in 0..zeros {
        out.push(ApproxRoot {
            z: Complex64::zero(),
            error: 0.0,
        });
    }
    out
}

/// Exact value at a rational point.
pub fn eval_rat(p: &UPoly<Rat>, x: &Rat) -> Rat {
    p.eval(x)
}

/// Certified enclosure `[lo, hi]` of a simple real root near `approx`.
///
/// The polynomial must change sign across the enclosure; bisection continues
/// until the width is below `width`.
pub fn refine_real_root(p: &UPoly<Rat>, approx: f64, width: &Rat) -> Option<(Rat, Rat)> {
    let x = f64_to_rat(approx);
    let mut h = f64_to_rat(approx.abs().max(1e-3) * 1e-9);
    let mut bracket = None;
    for _ in 0..60 {
        let lo = &x - &h;
        let hi = &x + &h;
        let (fl, fh) = (eval_rat(p, &lo), eval_rat(p, &hi));
        if fl.is_zero() {
            return Some((lo.clone(), lo));
        }
        if fh.is_zero() {
            return Some((hi.clone(), hi));
        }
        if fl.is_negative() != fh.is_negative() {
            bracket = Some((lo, hi, fl.is_negative()));
            break;
        }
        h *= Rat::from_integer(4.into());
    }
    let (mut lo, mut hi, lo_neg) = bracket?;
    let two = Rat::from_integer(2.into());
    while &hi - &lo >= *width {
        let mid = (&lo + &hi) / &two;
        let fm = eval_rat(p, &mid);
        if fm.is_zero() {
            return Some((mid.clone(), mid));
        }
        if fm.is_negative() == lo_neg {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Some((lo, hi))
}

/// Positive real roots of the squarefree part, certified to the given width, ascending.
pub fn positive_real_roots(p: &UPoly<Rat>, width: &Rat) -> Vec<(Rat, Rat)> {
    let sf = p.squarefree_part();
    let mut out: Vec<(Rat, Rat)> = Vec::new();
    for r in complex_roots(&sf) {
        let scale = r.z.norm().max(1e-300);
        if r.z.re <= 0.0 || r.z.im.abs() > 1e-7 * scale.max(1.0) {
            continue;
        }
        if let Some(enc) = refine_real_root(&sf, r.z.re, width) {
            if enc.0.is_positive() || enc.1.is_positive() {
                out.push(enc);
            }
        }
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out.dedup_by(|a, b| a.0 <= b.1 && b.0 <= a.1);
    out
}
