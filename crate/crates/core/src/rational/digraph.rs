//! Weighted digraphs and the generating function of their walks.
//!
//! Vertices are numbered `1..=p`. A walk of length `n` has weight `t^n` times
//! the product of its edge weights.

use std::collections::BTreeMap;

use crate::arith::matrix::{det_bareiss, minor};
use crate::arith::{MPoly, RatFun};
use crate::error::{GfError, Result};

/// Largest vertex count accepted by [`viennot_gf`].
pub const VIENNOT_MAX_VERTICES: usize = 12;

#[derive(Clone, Debug, PartialEq)]
pub struct WeightedDigraph {
    p: usize,
    edges: BTreeMap<(usize, usize), MPoly>,
}

impl WeightedDigraph {
    pub fn new(p: usize) -> Self {
        WeightedDigraph {
            p,
            edges: BTreeMap::new(),
        }
    }

    /// Builds a digraph from `(from, to, weight)` triples; parallel edges add up.
    pub fn from_edges(p: usize, edges: impl IntoIterator<Item = (usize, usize, MPoly)>) -> Result<Self> {
        let mut g = WeightedDigraph::new(p);
        for (a, b, w) in edges {
            g.add_edge(a, b, w)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, from: usize, to: usize, weight: MPoly) -> Result<()> {
        self.check_vertex(from)?;
        self.check_vertex(to)?;
        let merged = match self.edges.remove(&(from, to)) {
            Some(w) => &w + &weight,
            None => weight,
        };
        if !merged.is_zero() {
            self.edges.insert((from, to), merged);
        }
        Ok(())
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v == 0 || v > self.p {
            Err(GfError::Invalid(format!(
                "vertex {v} outside 1..={}",
                self.p
            )))
        } else {
            Ok(())
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.p
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, &MPoly)> {
        self.edges.iter().map(|(&(a, b), w)| (a, b, w))
    }

    pub fn weight(&self, from: usize, to: usize) -> Option<&MPoly> {
        self.edges.get(&(from, to))
    }

    /// `I - tX` with `X` the weighted adjacency matrix.
    pub fn kernel_matrix(&self) -> Vec<Vec<MPoly>> {
        let t = MPoly::var("t");
        let mut m = vec![vec![MPoly::zero(); self.p]; self.p];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = MPoly::one();
        }
        for (&(a, b), w) in &self.edges {
            m[a - 1][b - 1] = &m[a - 1][b - 1] - &(&t * w);
        }
        m
    }

    fn check_query(&self, i: usize, targets: &[usize]) -> Result<()> {
        self.check_vertex(i)?;
        for &j in targets {
            self.check_vertex(j)?;
        }
        Ok(())
    }
}

/// Walks from `i` ending in `targets`: `sum_j [(I - tX)^{-1}]_{i,j}` as cofactor over determinant.
pub fn transfer_gf(g: &WeightedDigraph, i: usize, targets: &[usize]) -> Result<RatFun> {
    g.check_query(i, targets)?;
    let m = g.kernel_matrix();
    let det = det_bareiss(&m);
    let mut num = MPoly::zero();
    for &j in targets {
        let cof = det_bareiss(&minor(&m, j - 1, i - 1));
        if (i + j) % 2 == 0 {
            num = &num + &cof;
        } else {
            num = &num - &cof;
        }
    }
    RatFun::from_mpolys(&num, &det)
}

/// Numerator and denominator of Viennot's formula.
#[derive(Clone, Debug)]
pub struct ViennotData {
    /// Alternating sum over collections of disjoint elementary cycles.
    pub denominator: MPoly,
    /// `N_{i,j}` for each requested target, in input order.
    pub numerators: Vec<(usize, MPoly)>,
}

/// Same walks as [`transfer_gf`], from non-intersecting path/cycle configurations.
pub fn viennot_data(g: &WeightedDigraph, i: usize, targets: &[usize]) -> Result<ViennotData> {
    g.check_query(i, targets)?;
    let n = g.p;
    if n > VIENNOT_MAX_VERTICES {
        return Err(GfError::GuardExceeded(format!(
            "cycle enumeration limited to {VIENNOT_MAX_VERTICES} vertices, got {n}"
        )));
    }
    let t = MPoly::var("t");
    let step: Vec<Vec<Option<MPoly>>> = (0..n)
        .map(|a| {
            (0..n)
                .map(|b| g.weight(a + 1, b + 1).map(|w| &t * w))
                .collect()
        })
        .collect();
    let full = (1usize << n) - 1;

    // cycles[S]: total weight of elementary cycles with vertex set exactly S.
    let mut cycles = vec![MPoly::zero(); full + 1];
    for m in 0..n {
        // paths[S][v]: simple paths from m through exactly S (min(S) = m) ending at v.
        let mut paths: Vec<Vec<MPoly>> = vec![Vec::new(); full + 1];
        paths[1 << m] = vec![MPoly::zero(); n];
        paths[1 << m][m] = MPoly::one();
        let higher: Vec<usize> = (m + 1..n).collect();
        let mut order: Vec<usize> = (0..1usize << higher.len())
            .map(|bits| {
                let mut s = 1 << m;
                for (k, &v) in higher.iter().enumerate() {
                    if bits >> k & 1 == 1 {
                        s |= 1 << v;
                    }
                }
                s
            })
            .collect();
        order.sort_by_key(|s| s.count_ones());
        for &s in &order {
            if paths[s].is_empty() {
                continue;
            }
            for v in 0..n {
                if paths[s][v].is_zero() {
                    continue;
                }
                if let Some(w) = &step[v][m] {
                    cycles[s] = &cycles[s] + &(&paths[s][v] * w);
                }
                for u in m + 1..n {
                    if s >> u & 1 == 1 {
                        continue;
                    }
                    if let Some(w) = &step[v][u] {
                        let s2 = s | 1 << u;
                        if paths[s2].is_empty() {
                            paths[s2] = vec![MPoly::zero(); n];
                        }
                        let add = &paths[s][v] * w;
                        paths[s2][u] = &paths[s2][u] + &add;
                    }
                }
            }
        }
    }

    // avoid[U]: signed sum over collections of disjoint cycles inside U.
    let mut avoid = vec![MPoly::zero(); full + 1];
    avoid[0] = MPoly::one();
    for u in 1..=full {
        let low = u.trailing_zeros() as usize;
        let rest = u & !(1 << low);
        let mut acc = avoid[rest].clone();
        let mut sub = rest;
        loop {
            let s = sub | 1 << low;
            if !cycles[s].is_zero() {
                acc = &acc - &(&cycles[s] * &avoid[u & !s]);
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
        avoid[u] = acc;
    }

    // Self-avoiding walks from i, by visited set and endpoint.
    let src = i - 1;
    let mut saw: Vec<Vec<MPoly>> = vec![Vec::new(); full + 1];
    saw[1 << src] = vec![MPoly::zero(); n];
    saw[1 << src][src] = MPoly::one();
    let mut by_size: Vec<usize> = (0..=full).filter(|s| s >> src & 1 == 1).collect();
    by_size.sort_by_key(|s| s.count_ones());
    let mut ends = vec![MPoly::zero(); n];
    for &s in &by_size {
        if saw[s].is_empty() {
            continue;
        }
        for v in 0..n {
            if saw[s][v].is_zero() {
                continue;
            }
            ends[v] = &ends[v] + &(&saw[s][v] * &avoid[full & !s]);
            for u in 0..n {
                if s >> u & 1 == 1 {
                    continue;
                }
                if let Some(w) = &step[v][u] {
                    let s2 = s | 1 << u;
                    if saw[s2].is_empty() {
                        saw[s2] = vec![MPoly::zero(); n];
                    }
                    let add = &saw[s][v] * w;
                    saw[s2][u] = &saw[s2][u] + &add;
                }
            }
        }
    }
    Ok(ViennotData {
        denominator: avoid[full].clone(),
        numerators: targets.iter().map(|&j| (j, ends[j - 1].clone())).collect(),
    })
}

/// `sum_j N_{i,j} / D` from [`viennot_data`].
pub fn viennot_gf(g: &WeightedDigraph, i: usize, targets: &[usize]) -> Result<RatFun> {
    let data = viennot_data(g, i, targets)?;
    let num = data
        .numerators
        .iter()
        .fold(MPoly::zero(), |acc, (_, p)| &acc + p);
    RatFun::from_mpolys(&num, &data.denominator)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::parse::parse_poly;

    fn p(s: &str) -> MPoly {
        parse_poly(s).unwrap()
    }

    #[test]
    fn single_loop() {
        let g = WeightedDigraph::from_edges(1, [(1, 1, MPoly::one())]).unwrap();
        let f = transfer_gf(&g, 1, &[1]).unwrap();
        assert_eq!(f.to_string(), "1/(1 - t)");
        assert!(viennot_gf(&g, 1, &[1]).unwrap().equals(&f));
    }

    #[test]
    fn two_cycle() {
        let g = WeightedDigraph::from_edges(2, [(1, 2, MPoly::one()), (2, 1, MPoly::one())]).unwrap();
        let f = transfer_gf(&g, 1, &[1]).unwrap();
        assert_eq!(f.to_string(), "1/(1 - t^2)");
        let v = viennot_data(&g, 1, &[1, 2]).unwrap();
        assert_eq!(v.denominator, p("1 - t^2"));
        assert_eq!(v.numerators[1].1, p("t"));
    }

    #[test]
    fn loops_only_denominator_is_product() {
        let g = WeightedDigraph::from_edges(
            3,
            [(1, 1, p("x")), (2, 2, p("2")), (3, 3, p("y"))],
        )
        .unwrap();
        let v = viennot_data(&g, 1, &[1]).unwrap();
        assert_eq!(v.denominator, p("(1 - x*t)*(1 - 2*t)*(1 - y*t)"));
    }

    #[test]
    fn parallel_edges_merge() {
        let g = WeightedDigraph::from_edges(1, [(1, 1, p("x")), (1, 1, p("1"))]).unwrap();
        assert_eq!(g.weight(1, 1), Some(&p("1 + x")));
        assert!(WeightedDigraph::from_edges(1, [(1, 2, p("1"))]).is_err());
    }

    #[test]
    fn guard() {
        let g = WeightedDigraph::new(13);
        assert!(matches!(viennot_gf(&g, 1, &[1]), Err(GfError::GuardExceeded(_))));
    }
}
