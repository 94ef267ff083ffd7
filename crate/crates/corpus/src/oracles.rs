//! Direct enumerations, written without any generating-function machinery.

use std::collections::{BTreeMap, HashMap, HashSet};

/// Column-convex polyominoes by cell count, `counts[n]` for `n <= n_max`.
///
/// A polyomino is a sequence of vertical columns; consecutive columns of
/// heights `h` and `h'` share at least one row, which leaves `h + h' - 1`
/// relative positions.
pub fn column_convex_counts(n_max: usize) -> Vec<u64> {
    // by_last[n][h]: polyominoes with n cells whose last column has height h.
    let mut by_last = vec![vec![0u64; n_max + 1]; n_max + 1];
    for n in 1..=n_max {
        by_last[n][n] += 1;
        for h2 in 1..n {
            for h in 1..=n - h2 {
                let prev = by_last[n - h2][h];
                if prev > 0 {
                    by_last[n][h2] += prev * (h + h2 - 1) as u64;
                }
            }
        }
    }
    by_last.iter().map(|row| row.iter().sum()).collect()
}

/// `k`-lecture hall partitions `0 <= l1/1 <= l2/2 <= ... <= lk/k` by weight.
pub fn lecture_hall_counts(k: usize, w_max: usize) -> Vec<u64> {
    fn go(i: usize, k: usize, prev: u64, weight: u64, w_max: u64, out: &mut [u64]) {
        if i > k {
            out[weight as usize] += 1;
            return;
        }
        // prev / (i-1) <= l / i, i.e. l >= ceil(i * prev / (i-1)).
        let low = if i == 1 { 0 } else { (i as u64 * prev).div_ceil(i as u64 - 1) };
        let mut l = low;
        while weight + l <= w_max {
            go(i + 1, k, l, weight + l, w_max, out);
            l += 1;
        }
    }
    let mut out = vec![0u64; w_max + 1];
    go(1, k, 0, 0, w_max as u64, &mut out);
    out
}

type Cell = (i32, i32);

/// Grows directed animals from a fixed source set by adding north/east
/// neighbours, level by level with deduplication. `out[n]` counts animals of size `n`.
fn grow_animals(source: Vec<Cell>, n_max: usize) -> Vec<u64> {
    let mut out = vec![0u64; n_max + 1];
    if source.len() > n_max {
        return out;
    }
    let mut level: HashSet<Vec<Cell>> = HashSet::new();
    let mut s = source;
    s.sort();
    level.insert(s);
    for n in level.iter().next().unwrap().len()..=n_max {
        out[n] = level.len() as u64;
        if n == n_max {
            break;
        }
        let mut next = HashSet::new();
        for a in &level {
            let set: HashSet<Cell> = a.iter().copied().collect();
            for &(x, y) in a {
                for c in [(x + 1, y), (x, y + 1)] {
                    if !set.contains(&c) {
                        let mut b = a.clone();
                        b.push(c);
                        b.sort();
                        next.insert(b);
                    }
                }
            }
        }
        level = next;
    }
    out
}

/// Directed animals with a compact source `(-i, i)`, `0 <= i < k`, summed over `k`.
pub fn compact_source_animals(n_max: usize) -> Vec<u64> {
    let mut total = vec![0u64; n_max + 1];
    for k in 1..=n_max {
        let src: Vec<Cell> = (0..k as i32).map(|i| (-i, i)).collect();
        for (n, c) in grow_animals(src, n_max).into_iter().enumerate() {
            total[n] += c;
        }
    }
    total
}

/// Directed animals with the single source `(0, 0)`.
pub fn single_source_animals(n_max: usize) -> Vec<u64> {
    grow_animals(vec![(0, 0)], n_max)
}

/// Sum over Dyck paths of length `2n` of the number of lattice points weakly below the path.
pub fn dyck_area_sum(n: usize) -> u64 {
    fn go(step: usize, len: usize, h: i64, pts: u64, acc: &mut u64) {
        if step == len {
            if h == 0 {
                *acc += pts;
            }
            return;
        }
        for d in [1i64, -1] {
            let h2 = h + d;
            if h2 >= 0 && h2 <= (len - step - 1) as i64 {
                go(step + 1, len, h2, pts + h2 as u64 + 1, acc);
            }
        }
    }
    let mut acc = 0;
    go(0, 2 * n, 0, 1, &mut acc);
    acc
}

/// Lattice-walk counts `(n, i, j) -> count` by dynamic programming over endpoints.
pub type WalkTable = Vec<BTreeMap<(i64, i64), u64>>;

fn walk_dp(steps: &[(i64, i64)], len: usize, allowed: impl Fn(i64, i64) -> bool) -> WalkTable {
    let mut table: WalkTable = Vec::with_capacity(len + 1);
    let mut cur = BTreeMap::new();
    cur.insert((0, 0), 1u64);
    table.push(cur.clone());
    for _ in 0..len {
        let mut next: BTreeMap<(i64, i64), u64> = BTreeMap::new();
        for (&(x, y), &c) in &cur {
            for &(dx, dy) in steps {
                let (a, b) = (x + dx, y + dy);
                if allowed(a, b) {
                    *next.entry((a, b)).or_default() += c;
                }
            }
        }
        table.push(next.clone());
        cur = next;
    }
    table
}

/// Kreweras steps `(1,1), (-1,0), (0,-1)` in the quarter plane.
pub fn kreweras_walks(len: usize) -> WalkTable {
    walk_dp(&[(1, 1), (-1, 0), (0, -1)], len, |x, y| x >= 0 && y >= 0)
}

/// North/south/east/west walks in the quarter plane.
pub fn square_quarter_walks(len: usize) -> WalkTable {
    walk_dp(&[(1, 0), (-1, 0), (0, 1), (0, -1)], len, |x, y| x >= 0 && y >= 0)
}

/// Square-lattice walks that never come back to `{(-k, 0) : k >= 0}`.
pub fn slit_plane_walks(len: usize) -> WalkTable {
    walk_dp(&[(1, 0), (-1, 0), (0, 1), (0, -1)], len, |x, y| !(y == 0 && x <= 0))
}

/// Complete binary trees with `n` inner nodes, each given as the list of
/// inner-node abscissae (root 0, left child -1, right child +1).
pub fn binary_trees_by_abscissa(n_max: usize) -> Vec<Vec<Vec<i8>>> {
    let mut by_size: Vec<Vec<Vec<i8>>> = vec![vec![Vec::new()]];
    for n in 1..=n_max {
        let mut trees = Vec::new();
        for left in 0..n {
            let right = n - 1 - left;
            for l in &by_size[left] {
                for r in &by_size[right] {
                    let mut t = Vec::with_capacity(n);
                    t.push(0);
                    t.extend(l.iter().map(|x| x - 1));
                    t.extend(r.iter().map(|x| x + 1));
                    trees.push(t);
                }
            }
        }
        by_size.push(trees);
    }
    by_size
}

/// For each size, the distribution of "number of nodes at abscissa `j`": `k -> trees`.
pub fn abscissa_distribution(trees: &[Vec<Vec<i8>>], j: i8) -> Vec<HashMap<usize, u64>> {
    trees
        .iter()
        .map(|level| {
            let mut dist = HashMap::new();
            for t in level {
                *dist.entry(t.iter().filter(|&&x| x == j).count()).or_default() += 1;
            }
            dist
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_polyominoes() {
        // 1 monomino; 2 dominoes; L-trominoes (4) and straight trominoes (2).
        assert_eq!(column_convex_counts(3), vec![0, 1, 2, 6]);
    }

    #[test]
    fn lecture_hall_small() {
        // k = 1: every l1 >= 0.
        assert_eq!(lecture_hall_counts(1, 4), vec![1; 5]);
        // k = 2: (0,0); (0,1); (0,2); (0,3) and (1,2).
        assert_eq!(lecture_hall_counts(2, 3), vec![1, 1, 1, 2]);
    }

    #[test]
    fn animals_small() {
        // Single source: {o}, {o,E}, {o,N}.
        assert_eq!(single_source_animals(2), vec![0, 1, 2]);
        // Two sources alone, plus the three one-source animals of size 2.
        assert_eq!(compact_source_animals(2), vec![0, 1, 3]);
    }

    #[test]
    fn dyck_area_small() {
        assert_eq!(dyck_area_sum(0), 1);
        assert_eq!(dyck_area_sum(1), 4);
        assert_eq!(dyck_area_sum(3), 64);
    }

    #[test]
    fn walks_small() {
        let k = kreweras_walks(3);
        assert_eq!(k[1].get(&(1, 1)), Some(&1));
        assert_eq!(k[1].len(), 1);
        // a b c is the only return of length 3 besides a c b.
        assert_eq!(k[3].get(&(0, 0)), Some(&2));
        let s = square_quarter_walks(2);
        assert_eq!(s[2].get(&(0, 0)), Some(&2));
        let slit = slit_plane_walks(1);
        assert_eq!(slit[1].len(), 3);
        assert!(!slit[1].contains_key(&(-1, 0)));
    }

    #[test]
    fn trees_small() {
        let t = binary_trees_by_abscissa(2);
        assert_eq!(t[2].len(), 2);
        let d = abscissa_distribution(&t, 0);
        assert_eq!(d[2].get(&1), Some(&2));
        let d1 = abscissa_distribution(&t, 1);
        assert_eq!(d1[2].get(&1), Some(&1));
    }
}
