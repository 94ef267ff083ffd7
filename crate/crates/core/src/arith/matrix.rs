//! Fraction-free determinants over an integral domain.

use super::coeff::Coeff;

/// Determinant by Bareiss elimination.
///
/// Every division is exact in the coefficient ring, so no fractions appear.
/// Panics if the matrix is not square.
pub fn det_bareiss<C: Coeff>(m: &[Vec<C>]) -> C {
    let n = m.len();
    if n == 0 {
        return C::one();
    }
    assert!(m.iter().all(|row| row.len() == n), "matrix must be square");
    let mut a: Vec<Vec<C>> = m.to_vec();
    let mut negate = false;
    let mut prev = C::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return C::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a[i][j].times(&a[k][k]).minus(&a[i][k].times(&a[k][j]));
                a[i][j] = num
                    .div_exact(&prev)
                    .expect("Bareiss step must divide exactly");
            }
            a[i][k] = C::zero();
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if negate {
        d.negate()
    } else {
        d
    }
}

/// Minor obtained by deleting row `r` and column `c`.
pub fn minor<C: Coeff>(m: &[Vec<C>], r: usize, c: usize) -> Vec<Vec<C>> {
    m.iter()
        .enumerate()
        .filter(|(i, _)| *i != r)
        .map(|(_, row)| {
            row.iter()
                .enumerate()
                .filter(|(j, _)| *j != c)
                .map(|(_, x)| x.clone())
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::mpoly::MPoly;
    use crate::arith::rat::{rat, Rat};

    fn ints(rows: &[&[i64]]) -> Vec<Vec<Rat>> {
        rows.iter()
            .map(|r| r.iter().map(|&v| rat(v)).collect())
            .collect()
    }

    #[test]
    fn small_cases() {
        assert_eq!(det_bareiss(&ints(&[&[7]])), rat(7));
        assert_eq!(det_bareiss(&ints(&[&[1, 2], &[3, 4]])), rat(-2));
        assert_eq!(det_bareiss(&ints(&[&[0, 1], &[1, 0]])), rat(-1));
        assert_eq!(det_bareiss(&ints(&[&[1, 2], &[2, 4]])), rat(0));
        assert_eq!(
            det_bareiss(&ints(&[&[0, 0, 1], &[0, 1, 0], &[1, 0, 0]])),
            rat(-1)
        );
    }

    #[test]
    fn polynomial_entries() {
        let t = MPoly::var("t");
        let one = MPoly::one();
        // det [[1, -t], [-t, 1]] = 1 - t^2
        let m = vec![vec![one.clone(), -&t], vec![-&t, one.clone()]];
        assert_eq!(det_bareiss(&m), &one - &t.pow(2));
    }
}
