//! Sylvester resultants and discriminants with respect to one variable.

use super::matrix::det_bareiss;
use super::mpoly::{MPoly, Var};
use crate::error::{GfError, Result};

/// Sylvester matrix of `p` and `q` as polynomials in `var`.
pub fn sylvester(p: &MPoly, q: &MPoly, var: &Var) -> Result<Vec<Vec<MPoly>>> {
    let pd = p.to_dense_in(var).ok_or(GfError::NotPowerSeries)?;
    let qd = q.to_dense_in(var).ok_or(GfError::NotPowerSeries)?;
    let m = pd.len() - 1;
    let n = qd.len() - 1;
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for i in 0..n {
        let mut row = vec![MPoly::zero(); size];
        for (k, c) in pd.iter().rev().enumerate() {
            row[i + k] = c.clone();
        }
        rows.push(row);
    }
    for i in 0..m {
        let mut row = vec![MPoly::zero(); size];
        for (k, c) in qd.iter().rev().enumerate() {
            row[i + k] = c.clone();
        }
        rows.push(row);
    }
    Ok(rows)
}

/// `res_var(p, q)`; two constants give 1.
pub fn resultant(p: &MPoly, q: &MPoly, var: &Var) -> Result<MPoly> {
    if p.is_zero() || q.is_zero() {
        return Err(GfError::ZeroPolynomial);
    }
    Ok(det_bareiss(&sylvester(p, q, var)?))
}

/// `(-1)^(m(m-1)/2) res(p, dp/dvar) / lc(p)` with `m = deg_var p`.
pub fn discriminant(p: &MPoly, var: &Var) -> Result<MPoly> {
    if p.is_zero() {
        return Err(GfError::ZeroPolynomial);
    }
    let m = p.degree_in(var).unwrap_or(0);
    if m < 1 {
        return Err(GfError::Invalid(format!("polynomial is constant in {var}")));
    }
    let dp = p.derivative(var);
    let res = resultant(p, &dp, var)?;
    let lc = p.coeff_in(var, m);
    let mut d = res
        .div_exact(&lc)
        .ok_or_else(|| GfError::Internal("leading coefficient does not divide the resultant".into()))?;
    if (m * (m - 1) / 2) % 2 == 1 {
        d = -d;
    }
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::parse::parse_poly;

    fn p(s: &str) -> MPoly {
        parse_poly(s).unwrap()
    }

    #[test]
    fn catalan_discriminant() {
        let d = discriminant(&p("a^2 - a + t"), &Var::new("a")).unwrap();
        assert_eq!(d, p("1 - 4*t"));
    }

    #[test]
    fn constants_have_unit_resultant() {
        let r = resultant(&p("3"), &p("5"), &Var::new("a")).unwrap();
        assert_eq!(r, MPoly::one());
        assert!(resultant(&p("0"), &p("a"), &Var::new("a")).is_err());
    }

    #[test]
    fn planted_common_factor() {
        let a = Var::new("a");
        let f = p("a - 2*t");
        let r = resultant(&(&f * &p("a + 1")), &(&f * &p("a^2 + t")), &a).unwrap();
        assert!(r.is_zero());
        let r = resultant(&p("a + 1"), &p("a^2 + t"), &a).unwrap();
        assert_eq!(r, p("1 + t"));
    }
}
