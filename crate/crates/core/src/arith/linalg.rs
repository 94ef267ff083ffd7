//! Exact nullspaces over Q by fraction-free elimination.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rat::{lcm_of_denominators, Rat};

/// Scales a rational row to a primitive integer row.
fn integer_row(row: &[Rat]) -> Vec<BigInt> {
    let l = lcm_of_denominators(row);
    let ints: Vec<BigInt> = row.iter().map(|r| (r * &l).to_integer()).collect();
    primitive(ints)
}

fn primitive(mut row: Vec<BigInt>) -> Vec<BigInt> {
    let g = row.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in row.iter_mut() {
            *x /= &g;
        }
    }
    row
}

/// Row echelon form with integer entries; returns rows and pivot columns.
pub fn echelon(rows: &[Vec<Rat>], ncols: usize) -> (Vec<Vec<BigInt>>, Vec<usize>) {
    let mut a: Vec<Vec<BigInt>> = rows.iter().map(|r| integer_row(r)).collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == a.len() {
            break;
        }
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let (top, rest) = a.split_at_mut(r + 1);
        let prow = &top[r];
        for row in rest.iter_mut() {
            if row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for j in c..ncols {
                row[j] = &prow[c] * &row[j] - &f * &prow[j];
            }
            *row = primitive(std::mem::take(row));
        }
        pivots.push(c);
        r += 1;
    }
    a.truncate(r);
    (a, pivots)
}

/// Basis of `{x : rows * x = 0}`, one vector per free column (that entry is 1,
/// the other free entries 0), ordered by free column.
pub fn nullspace(rows: &[Vec<Rat>], ncols: usize) -> Vec<Vec<Rat>> {
    let (ech, pivots) = echelon(rows, ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    let mut basis = Vec::with_capacity(free.len());
    for &f in &free {
        let mut x = vec![Rat::zero(); ncols];
        x[f] = Rat::one();
        for (r, &pc) in pivots.iter().enumerate().rev() {
            let mut acc = Rat::zero();
            for j in pc + 1..ncols {
                if !ech[r][j].is_zero() && !x[j].is_zero() {
                    acc += Rat::from_integer(ech[r][j].clone()) * &x[j];
                }
            }
            x[pc] = -acc / Rat::from_integer(ech[r][pc].clone());
        }
        basis.push(x);
    }
    basis
}

/// Rank of a rational matrix.
pub fn rank(rows: &[Vec<Rat>], ncols: usize) -> usize {
    echelon(rows, ncols).1.len()
}

/// Scales a rational vector to a primitive integer vector whose last nonzero entry is positive.
pub fn primitive_integer_vector(v: &[Rat]) -> Vec<BigInt> {
    let mut out = integer_row(v);
    if out.iter().rev().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative()) {
        for x in out.iter_mut() {
            *x = -std::mem::take(x);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat::rat;

    fn m(rows: &[&[i64]]) -> Vec<Vec<Rat>> {
        rows.iter().map(|r| r.iter().map(|&v| rat(v)).collect()).collect()
    }

    #[test]
    fn kernel_of_rank_one() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6]]);
        let ns = nullspace(&a, 3);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            for row in &a {
                let dot: Rat = row.iter().zip(v).map(|(x, y)| x * y).sum();
                assert!(dot.is_zero());
            }
        }
        assert_eq!(rank(&a, 3), 1);
    }

    #[test]
    fn full_rank_has_trivial_kernel() {
        let a = m(&[&[1, 0], &[0, 1], &[1, 1]]);
        assert!(nullspace(&a, 2).is_empty());
    }

    #[test]
    fn primitive_sign() {
        let v = vec![rat(2), rat(0), rat(-4)];
        assert_eq!(
            primitive_integer_vector(&v),
            vec![BigInt::from(-1), BigInt::from(0), BigInt::from(2)]
        );
    }
}
