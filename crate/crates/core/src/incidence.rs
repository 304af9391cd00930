//! 0/1 matrices with exactly two ones per column (incidence matrices of
//! multigraphs, rows = vertices, columns = edges) and their maximal minors.
//!
//! These matrices describe intersections of Levi subspaces: rows are the
//! block-indicator equations of two Levis containing a common one, columns
//! are the blocks of the common Levi. The divisibility statement
//! "k divides every block of both Levis ⇒ k divides every block of the
//! common one" follows when some maximal minor is ±1.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::ratio::Q;
use crate::split_oracle::rank_of_rows;

/// A 0/1 matrix stored by columns; column `j` has ones at rows `cols[j].0`
/// and `cols[j].1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Incidence {
    pub rows: usize,
    pub cols: Vec<(usize, usize)>,
}

impl Incidence {
    pub fn dense(&self) -> Vec<Vec<i64>> {
        let mut m = vec![vec![0; self.cols.len()]; self.rows];
        for (j, &(a, b)) in self.cols.iter().enumerate() {
            m[a][j] = 1;
            m[b][j] = 1;
        }
        m
    }

    pub fn rank(&self) -> usize {
        let rows = self
            .dense()
            .into_iter()
            .map(|r| r.into_iter().map(|x| Q::from_integer(x.into())).collect())
            .collect();
        rank_of_rows(rows, self.cols.len())
    }

    /// Every row contains a one.
    pub fn rows_covered(&self) -> bool {
        let mut seen = vec![false; self.rows];
        for &(a, b) in &self.cols {
            seen[a] = true;
            seen[b] = true;
        }
        seen.into_iter().all(|s| s)
    }

    /// Searches all `r × r` minors, `r` the rank, for one of determinant ±1.
    pub fn unimodular_minor(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        let r = self.rank();
        let dense = self.dense();
        for rs in subsets(self.rows, r) {
            for cs in subsets(self.cols.len(), r) {
                let sub: Vec<Vec<BigInt>> = rs
                    .iter()
                    .map(|&i| cs.iter().map(|&j| BigInt::from(dense[i][j])).collect())
                    .collect();
                if det(sub).abs().is_one() {
                    return Some((rs, cs));
                }
            }
        }
        None
    }
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Integer determinant by fraction-free elimination; `det([]) = 1`.
pub fn det(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| !a[r][k].is_zero()) else {
            return BigInt::zero();
        };
        if p != k {
            a.swap(p, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[k][k] * &a[i][j] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    if n == 0 {
        return BigInt::one();
    }
    sign * &a[n - 1][n - 1]
}

/// Every qualifying matrix with exactly `ncols` columns, up to relabelling
/// of rows: columns are pairs of distinct rows, rows are introduced in
/// order of first use, and every row is used.
pub fn qualifying_matrices(ncols: usize) -> Vec<Incidence> {
    fn go(cols: &mut Vec<(usize, usize)>, used: usize, ncols: usize, out: &mut Vec<Incidence>) {
        if cols.len() == ncols {
            out.push(Incidence {
                rows: used,
                cols: cols.clone(),
            });
            return;
        }
        for a in 0..used {
            for b in a + 1..=used {
                cols.push((a, b));
                go(cols, used.max(b + 1), ncols, out);
                cols.pop();
            }
        }
        cols.push((used, used + 1));
        go(cols, used + 2, ncols, out);
        cols.pop();
    }
    let mut out = Vec::new();
    if ncols > 0 {
        go(&mut Vec::new(), 0, ncols, &mut out);
    }
    out
}

/// The matrix of two set partitions of `0..l`: one row per block of each,
/// so every column has one 1 in each row group.
pub fn two_partition_matrix(first: &[Vec<usize>], second: &[Vec<usize>], l: usize) -> Incidence {
    let mut cols = vec![(0, 0); l];
    for (i, block) in first.iter().enumerate() {
        for &j in block {
            cols[j].0 = i;
        }
    }
    for (i, block) in second.iter().enumerate() {
        for &j in block {
            cols[j].1 = first.len() + i;
        }
    }
    Incidence {
        rows: first.len() + second.len(),
        cols,
    }
}

/// All set partitions of `0..n`.
pub fn set_partitions(n: usize) -> Vec<Vec<Vec<usize>>> {
    fn go(i: usize, n: usize, cur: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
        if i == n {
            out.push(cur.clone());
            return;
        }
        for b in 0..cur.len() {
            cur[b].push(i);
            go(i + 1, n, cur, out);
            cur[b].pop();
        }
        cur.push(vec![i]);
        go(i + 1, n, cur, out);
        cur.pop();
    }
    let mut out = Vec::new();
    go(0, n, &mut Vec::new(), &mut out);
    out
}

/// Whether `k | (row sums of h)` for every row forces `k | h_j` for every
/// column, checked over all residues `h ∈ (ℤ/k)^l`.
pub fn row_divisibility_forces_columns(m: &Incidence, k: u32) -> bool {
    let l = m.cols.len();
    let k = k as usize;
    let mut h = vec![0usize; l];
    loop {
        let mut sums = vec![0usize; m.rows];
        for (j, &(a, b)) in m.cols.iter().enumerate() {
            sums[a] += h[j];
            sums[b] += h[j];
        }
        if sums.iter().all(|s| s % k == 0) && h.iter().any(|&x| x != 0) {
            return false;
        }
        let mut i = 0;
        loop {
            if i == l {
                return true;
            }
            h[i] += 1;
            if h[i] < k {
                break;
            }
            h[i] = 0;
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn determinants() {
        let m = |rows: &[&[i64]]| -> Vec<Vec<BigInt>> {
            rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
        };
        assert_eq!(det(m(&[&[1, 1, 0], &[1, 0, 1], &[0, 1, 1]])), BigInt::from(-2));
        assert_eq!(det(m(&[&[0, 1], &[1, 0]])), BigInt::from(-1));
        assert_eq!(det(m(&[&[2, 4], &[1, 2]])), BigInt::zero());
        assert_eq!(det(Vec::new()), BigInt::one());
    }

    #[test]
    fn enumeration_counts() {
        // one column: a single edge
        assert_eq!(qualifying_matrices(1).len(), 1);
        // two columns: parallel, adjacent (twice), disjoint edges
        assert_eq!(qualifying_matrices(2).len(), 4);
        assert!(qualifying_matrices(4).iter().all(Incidence::rows_covered));
        assert_eq!(set_partitions(3).len(), 5);
        assert_eq!(set_partitions(4).len(), 15);
    }

    #[test]
    fn odd_cycle_has_no_unimodular_maximal_minor() {
        let tri = Incidence {
            rows: 3,
            cols: vec![(0, 1), (0, 2), (1, 2)],
        };
        assert_eq!(tri.rank(), 3);
        assert!(tri.unimodular_minor().is_none());
        assert!(!row_divisibility_forces_columns(&tri, 2));
    }

    #[test]
    fn two_group_matrices_are_unimodular() {
        let first = vec![vec![0, 1], vec![2]];
        let second = vec![vec![0], vec![1, 2]];
        let m = two_partition_matrix(&first, &second, 3);
        assert_eq!(m.rank(), 3);
        assert!(m.unimodular_minor().is_some());
        assert!(row_divisibility_forces_columns(&m, 2));
        assert!(row_divisibility_forces_columns(&m, 3));
    }
}
