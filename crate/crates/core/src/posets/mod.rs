//! P-partitions of natural posets and lattice points in rational cones.
//!
//! A permutation is written as the word `sigma(1) sigma(2) ... sigma(k)`.
//! It is a linear extension when every element appears after all of its
//! predecessors in `P`; a P-partition `lambda` is compatible with `sigma`
//! when `lambda` is weakly increasing along the word, strictly at descents.

use std::collections::BTreeSet;

use crate::arith::rat::binomial;
use crate::arith::{rat, RSeries, Rat, RatFun, UPoly};
use crate::error::{GfError, Result};

/// Factorial guard for [`linear_extensions`].
pub const MAX_EXTENSION_SIZE: usize = 12;
/// Bound on the number of candidate tuples a brute-force enumeration may visit.
pub const MAX_BRUTE_TUPLES: u64 = 50_000_000;

/// A partial order on `1..=k` refining the natural order of the integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NaturalPoset {
    k: usize,
    less: BTreeSet<(usize, usize)>,
}

impl NaturalPoset {
    /// Builds the transitive closure of the given relations `i < j`.
    pub fn new(k: usize, relations: &[(usize, usize)]) -> Result<NaturalPoset> {
        let mut m = vec![vec![false; k + 1]; k + 1];
        for &(i, j) in relations {
            if i == 0 || j == 0 || i > k || j > k {
                return Err(GfError::Invalid(format!("relation ({i}, {j}) outside 1..={k}")));
            }
            if i >= j {
                return Err(GfError::Invalid(format!(
                    "relation {i} < {j} is not natural"
                )));
            }
            m[i][j] = true;
        }
        for via in 1..=k {
            for i in 1..=k {
                if m[i][via] {
                    for j in 1..=k {
                        if m[via][j] {
                            m[i][j] = true;
                        }
                    }
                }
            }
        }
        let less = (1..=k)
            .flat_map(|i| (1..=k).map(move |j| (i, j)))
            .filter(|&(i, j)| m[i][j])
            .collect();
        Ok(NaturalPoset { k, less })
    }

    pub fn chain(k: usize) -> NaturalPoset {
        let rel: Vec<(usize, usize)> = (1..k).map(|i| (i, i + 1)).collect();
        NaturalPoset::new(k, &rel).unwrap()
    }

    pub fn antichain(k: usize) -> NaturalPoset {
        NaturalPoset::new(k, &[]).unwrap()
    }

    pub fn size(&self) -> usize {
        self.k
    }

    pub fn less(&self, i: usize, j: usize) -> bool {
        self.less.contains(&(i, j))
    }

    /// All strict relations of the closure.
    pub fn relations(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.less.iter().copied()
    }

    /// Whether `parts` (indexed from element 1) is a P-partition.
    pub fn is_p_partition(&self, parts: &[u64]) -> bool {
        parts.len() == self.k && self.less.iter().all(|&(i, j)| parts[i - 1] <= parts[j - 1])
    }
}

/// All linear extensions as words, in lexicographic order.
pub fn linear_extensions(p: &NaturalPoset) -> Result<Vec<Vec<usize>>> {
    if p.k > MAX_EXTENSION_SIZE {
        return Err(GfError::GuardExceeded(format!(
            "linear extensions limited to k <= {MAX_EXTENSION_SIZE}, got {}",
            p.k
        )));
    }
    let mut out = Vec::new();
    let mut word = Vec::with_capacity(p.k);
    let mut used = vec![false; p.k + 1];
    extend(p, &mut word, &mut used, &mut out);
    Ok(out)
}

fn extend(p: &NaturalPoset, word: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
    if word.len() == p.k {
        out.push(word.clone());
        return;
    }
    for x in 1..=p.k {
        if used[x] || (1..=p.k).any(|y| !used[y] && p.less(y, x)) {
            continue;
        }
        used[x] = true;
        word.push(x);
        extend(p, word, used, out);
        word.pop();
        used[x] = false;
    }
}

/// `e(sigma)` and the smallest compatible P-partition `lambda^(sigma,0)` (indexed by element).
pub fn sigma_data(sigma: &[usize]) -> Result<(u64, Vec<u64>)> {
    let k = sigma.len();
    let mut seen = vec![false; k + 1];
    for &s in sigma {
        if s == 0 || s > k || seen[s] {
            return Err(GfError::Invalid(format!("{sigma:?} is not a permutation of 1..={k}")));
        }
        seen[s] = true;
    }
    let mut e = 0u64;
    let mut lambda = vec![0u64; k];
    let mut descents = 0u64;
    for j in 0..k {
        // descents strictly before position j+1 (1-based)
        lambda[sigma[j] - 1] = descents;
        if j + 1 < k && sigma[j] > sigma[j + 1] {
            descents += 1;
            e += (k - (j + 1)) as u64;
        }
    }
    Ok((e, lambda))
}

/// `prod_{i=1..k} (1 - t^i)`.
pub fn partition_denominator(k: usize) -> UPoly<Rat> {
    (1..=k).fold(UPoly::one(), |acc, i| {
        let mut c = vec![rat(0); i + 1];
        c[0] = rat(1);
        c[i] = rat(-1);
        acc.mul(&UPoly::new(c))
    })
}

/// `sum_sigma t^{e(sigma)} / prod_{i=1..k} (1 - t^i)`, reduced.
pub fn p_partition_gf(p: &NaturalPoset) -> Result<RatFun> {
    let mut num = vec![rat(0)];
    for sigma in linear_extensions(p)? {
        let (e, _) = sigma_data(&sigma)?;
        let e = e as usize;
        if num.len() <= e {
            num.resize(e + 1, rat(0));
        }
        num[e] += rat(1);
    }
    RatFun::from_rat(UPoly::new(num), partition_denominator(p.k))
}

fn guard_tuples(dims: usize, n_max: usize) -> Result<()> {
    let count = binomial((n_max + dims) as u64, dims as u64);
    if count > MAX_BRUTE_TUPLES.into() {
        return Err(GfError::GuardExceeded(format!(
            "{count} tuples of weight <= {n_max} in dimension {dims}"
        )));
    }
    Ok(())
}

/// Calls `visit` on every P-partition of weight at most `n_max`.
pub fn for_each_p_partition(p: &NaturalPoset, n_max: usize, mut visit: impl FnMut(&[u64])) -> Result<()> {
    guard_tuples(p.k, n_max)?;
    let preds: Vec<Vec<usize>> = (1..=p.k)
        .map(|j| (1..j).filter(|&i| p.less(i, j)).collect())
        .collect();
    let mut parts = vec![0u64; p.k];
    fill(&preds, 0, n_max as u64, &mut parts, &mut visit);
    Ok(())
}

fn fill(preds: &[Vec<usize>], j: usize, budget: u64, parts: &mut Vec<u64>, visit: &mut impl FnMut(&[u64])) {
    if j == parts.len() {
        visit(parts);
        return;
    }
    let low = preds[j].iter().map(|&i| parts[i - 1]).max().unwrap_or(0);
    for v in low..=budget {
        parts[j] = v;
        fill(preds, j + 1, budget - v, parts, visit);
    }
    parts[j] = 0;
}

/// Counts of P-partitions by weight up to `n_max`, by exhaustive enumeration.
pub fn brute_p_partitions(p: &NaturalPoset, n_max: usize) -> Result<RSeries> {
    let mut counts = vec![0u64; n_max + 1];
    for_each_p_partition(p, n_max, |parts| {
        counts[parts.iter().sum::<u64>() as usize] += 1;
    })?;
    Ok(RSeries::from_coeffs(
        counts.into_iter().map(|c| Rat::from_integer(c.into())).collect(),
    ))
}

/// Whether `lambda` is weakly increasing along `sigma`, strictly at descents.
pub fn is_compatible(lambda: &[u64], sigma: &[usize]) -> bool {
    sigma.windows(2).all(|w| {
        let (a, b) = (lambda[w[0] - 1], lambda[w[1] - 1]);
        if w[0] > w[1] {
            a < b
        } else {
            a <= b
        }
    })
}

/// Integer half-spaces `c . alpha >= 0` in dimension `m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HalfspaceSystem {
    m: usize,
    rows: Vec<Vec<i64>>,
}

/// Dimension guard for [`cone_points_bruteforce`].
pub const MAX_CONE_DIM: usize = 4;
/// Weight guard for [`cone_points_bruteforce`].
pub const MAX_CONE_WEIGHT: usize = 40;

impl HalfspaceSystem {
    pub fn new(m: usize, rows: Vec<Vec<i64>>) -> Result<HalfspaceSystem> {
        if let Some(r) = rows.iter().find(|r| r.len() != m) {
            return Err(GfError::Invalid(format!(
                "row of length {} in dimension {m}",
                r.len()
            )));
        }
        Ok(HalfspaceSystem { m, rows })
    }

    pub fn dimension(&self) -> usize {
        self.m
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn contains(&self, alpha: &[i64]) -> bool {
        self.rows
            .iter()
            .all(|r| r.iter().zip(alpha).map(|(c, a)| c * a).sum::<i64>() >= 0)
    }
}

/// Non-negative integer points of the cone, counted by `|alpha|` up to `n_max`.
pub fn cone_points_bruteforce(h: &HalfspaceSystem, n_max: usize) -> Result<RSeries> {
    if h.m > MAX_CONE_DIM || n_max > MAX_CONE_WEIGHT {
        return Err(GfError::GuardExceeded(format!(
            "cone enumeration needs m <= {MAX_CONE_DIM} and n <= {MAX_CONE_WEIGHT}"
        )));
    }
    let mut counts = vec![0u64; n_max + 1];
    let mut alpha = vec![0i64; h.m];
    cone_fill(h, 0, n_max as i64, &mut alpha, &mut counts);
    Ok(RSeries::from_coeffs(
        counts.into_iter().map(|c| Rat::from_integer(c.into())).collect(),
    ))
}

fn cone_fill(h: &HalfspaceSystem, i: usize, budget: i64, alpha: &mut Vec<i64>, counts: &mut [u64]) {
    if i == alpha.len() {
        if h.contains(alpha) {
            counts[alpha.iter().sum::<i64>() as usize] += 1;
        }
        return;
    }
    for v in 0..=budget {
        alpha[i] = v;
        cone_fill(h, i + 1, budget - v, alpha, counts);
    }
    alpha[i] = 0;
}
