//! Growth of the coefficients of an algebraic branch with non-negative coefficients.

use num_traits::{Signed, Zero};

use super::branches::{Bivariate, BranchSolution};
use crate::arith::numeric::positive_real_roots;
use crate::arith::rat::{rat_ln_abs, rat_to_f64};
use crate::arith::resultant::discriminant;
use crate::arith::{MPoly, Rat, UPoly, Var};
use crate::error::{GfError, Result};
use crate::rational::analysis::{enclosure_width, AsymptoticEstimate};

/// Relative distance allowed between a candidate singularity and the observed growth.
pub const GROWTH_TOLERANCE: f64 = 0.02;

fn least_squares(xs: &[f64], ys: &[f64]) -> (f64, f64) {
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    let slope = sxy / sxx;
    (my - slope * mx, slope)
}

/// Candidate singularities: positive real roots of the discriminant and of the leading coefficient.
pub fn singularity_candidates(p: &MPoly, a: &Var) -> Result<Vec<(UPoly<Rat>, Rat, Rat)>> {
    let b = Bivariate::new(p, a)?;
    let mut polys: Vec<UPoly<Rat>> = vec![b.coeffs().last().unwrap().clone()];
    if b.degree() >= 2 {
        let d = discriminant(p, a)?;
        let t = Var::new("t");
        let dense = d
            .to_dense_in(&t)
            .ok_or_else(|| GfError::Internal("discriminant has negative powers".into()))?;
        polys.push(UPoly::new(dense.iter().map(|c| c.constant_term()).collect()));
    }
    let mut out = Vec::new();
    for q in polys {
        if q.degree().unwrap_or(0) == 0 {
            continue;
        }
        let sf = q.squarefree_part().primitive();
        for (lo, hi) in positive_real_roots(&sf, &enclosure_width()) {
            out.push((sf.clone(), lo, hi));
        }
    }
    out.sort_by(|x, y| x.1.cmp(&y.1));
    Ok(out)
}

/// `rho` from the candidate closest to the observed growth; `d` fitted on the last half
/// of the first `n_fit + 1` coefficients.
pub fn algebraic_asymptotics(
    p: &MPoly,
    a: &Var,
    branch: &BranchSolution,
    n_fit: usize,
) -> Result<AsymptoticEstimate> {
    if branch.series.order() < n_fit || n_fit < 16 {
        return Err(GfError::InsufficientData(format!(
            "need at least 16 and at most {} coefficients, asked for {n_fit}",
            branch.series.order()
        )));
    }
    let coeffs = &branch.series.coeffs()[..=n_fit];
    if let Some(i) = coeffs.iter().position(|c| c.is_negative()) {
        return Err(GfError::NegativeCoefficient(i));
    }
    let half = n_fit / 2;
    let idx: Vec<usize> = (half..=n_fit).filter(|&n| !coeffs[n].is_zero()).collect();
    if idx.len() < 4 {
        return Err(GfError::InsufficientData("too few nonzero coefficients".into()));
    }
    let ln: Vec<f64> = idx.iter().map(|&n| rat_ln_abs(&coeffs[n])).collect();
    // ln(a_n) = c - n ln(rho) + d ln(n): fit all three, keep rho as the growth estimate.
    let growth = {
        let pairs: Vec<(f64, f64)> = idx
            .windows(2)
            .zip(ln.windows(2))
            .map(|(w, l)| (1.0 / w[1] as f64, (l[0] - l[1]) / (w[1] - w[0]) as f64))
            .collect();
        let xs: Vec<f64> = pairs.iter().map(|p| p.0).collect();
        let ys: Vec<f64> = pairs.iter().map(|p| p.1).collect();
        least_squares(&xs, &ys).0.exp()
    };
    let candidates = singularity_candidates(p, a)?;
    let (rho_poly, rho_lo, rho_hi) = candidates
        .into_iter()
        .min_by(|x, y| {
            let dx = (rat_to_f64(&x.1) / growth).ln().abs();
            let dy = (rat_to_f64(&y.1) / growth).ln().abs();
            dx.partial_cmp(&dy).unwrap()
        })
        .ok_or_else(|| GfError::NoCandidate("no positive real singularity candidate".into()))?;
    let rho = rat_to_f64(&((&rho_lo + &rho_hi) / Rat::from_integer(2.into())));
    if (rho / growth).ln().abs() > GROWTH_TOLERANCE {
        return Err(GfError::NoCandidate(format!(
            "observed growth radius {growth:.6} matches no candidate (closest {rho:.6})"
        )));
    }
    let xs: Vec<f64> = idx.iter().map(|&n| (n as f64).ln()).collect();
    let ys: Vec<f64> = idx
        .iter()
        .zip(&ln)
        .map(|(&n, l)| l + n as f64 * rho.ln())
        .collect();
    let (_, d) = least_squares(&xs, &ys);
    // Local slopes at both ends, extrapolated assuming a 1/n correction.
    let slope_at = |k: usize| (ys[k] - ys[k - 1]) / (xs[k] - xs[k - 1]);
    let last = idx.len() - 1;
    let local_end = slope_at(last);
    let local_mid = slope_at(1);
    let n_end = idx[last] as f64;
    let n_mid = idx[1] as f64;
    let richardson = (n_end * local_end - n_mid * local_mid) / (n_end - n_mid);
    let d_lo = d.min(local_end).min(richardson);
    let d_hi = d.max(local_end).max(richardson);
    let kappas: Vec<f64> = (last * 3 / 4..=last).map(|k| (ys[k] - d * xs[k]).exp()).collect();
    let kappa = Some((
        kappas.iter().cloned().fold(f64::INFINITY, f64::min),
        kappas.iter().cloned().fold(f64::NEG_INFINITY, f64::max),
    ));
    Ok(AsymptoticEstimate {
        rho_poly,
        rho_lo,
        rho_hi,
        d,
        d_lo,
        d_hi,
        kappa,
        alternating: false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebraic::branches::series_roots;
    use crate::arith::parse::parse_poly;
    use crate::arith::rat::ratio;

    #[test]
    fn catalan_shift() {
        let p = parse_poly("a - t - a^2").unwrap();
        let a = Var::new("a");
        let rep = series_roots(&p, &a, 200).unwrap();
        let est = algebraic_asymptotics(&p, &a, &rep.branches[0], 200).unwrap();
        assert!(est.rho_lo <= ratio(1, 4) && ratio(1, 4) <= est.rho_hi);
        assert!((est.d + 1.5).abs() < 0.05, "d = {}", est.d);
        assert!(est.d_lo <= est.d && est.d <= est.d_hi);
    }

    #[test]
    fn geometric() {
        let p = parse_poly("(1 - 2*t)*a - 1").unwrap();
        let a = Var::new("a");
        let rep = series_roots(&p, &a, 60).unwrap();
        let est = algebraic_asymptotics(&p, &a, &rep.branches[0], 60).unwrap();
        assert!(est.rho_lo <= ratio(1, 2) && ratio(1, 2) <= est.rho_hi);
        assert!(est.d.abs() < 1e-9);
    }
}
