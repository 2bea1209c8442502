//! Brute-force oracles shared by the integration tests. None of these use
//! the library's enumerators.

#![allow(dead_code)]

use std::collections::BTreeSet;

/// Every symmetric `k x k` grid with entries summing to `n` and no zero row,
/// found by trying all upper-triangle vectors with values `0..=n` and filtering.
pub fn brute_force_family(n: u64, k: usize, zero_diagonal: bool) -> BTreeSet<Vec<Vec<u64>>> {
    let cells: Vec<(usize, usize)> = (0..k).flat_map(|i| (i..k).map(move |j| (i, j))).collect();
    let mut out = BTreeSet::new();
    let mut grid = vec![vec![0u64; k]; k];
    fn rec(
        idx: usize,
        cells: &[(usize, usize)],
        n: u64,
        zero_diagonal: bool,
        grid: &mut Vec<Vec<u64>>,
        out: &mut BTreeSet<Vec<Vec<u64>>>,
    ) {
        if idx == cells.len() {
            let k = grid.len();
            let sum: u64 = grid.iter().flatten().sum();
            if sum == n
                && grid.iter().all(|row| row.iter().any(|&v| v != 0))
                && (!zero_diagonal || (0..k).all(|i| grid[i][i] == 0))
            {
                out.insert(grid.clone());
            }
            return;
        }
        let (i, j) = cells[idx];
        for v in 0..=n {
            grid[i][j] = v;
            grid[j][i] = v;
            rec(idx + 1, cells, n, zero_diagonal, grid, out);
        }
        grid[i][j] = 0;
        grid[j][i] = 0;
    }
    rec(0, &cells, n, zero_diagonal, &mut grid, &mut out);
    out
}

/// Same set, smarter: recursion that only bounds each value by the sum left.
/// Still independent of the library walker (no row pruning, filter at the end).
pub fn bounded_family(n: u64, k: usize, zero_diagonal: bool) -> BTreeSet<Vec<Vec<u64>>> {
    let cells: Vec<(usize, usize)> = (0..k).flat_map(|i| (i..k).map(move |j| (i, j))).collect();
    let mut out = BTreeSet::new();
    fn rec(
        idx: usize,
        left: u64,
        cells: &[(usize, usize)],
        grid: &mut Vec<Vec<u64>>,
        out: &mut BTreeSet<Vec<Vec<u64>>>,
    ) {
        if idx == cells.len() {
            if left == 0 {
                out.insert(grid.clone());
            }
            return;
        }
        let (i, j) = cells[idx];
        let w = if i == j { 1 } else { 2 };
        let mut v = 0;
        while v * w <= left {
            grid[i][j] = v;
            grid[j][i] = v;
            rec(idx + 1, left - v * w, cells, grid, out);
            v += 1;
        }
        grid[i][j] = 0;
        grid[j][i] = 0;
    }
    let mut grid = vec![vec![0u64; k]; k];
    rec(0, n, &cells, &mut grid, &mut out);
    out.retain(|g| {
        g.iter().all(|row| row.iter().any(|&v| v != 0))
            && (!zero_diagonal || (0..k).all(|i| g[i][i] == 0))
    });
    out
}

/// All permutations of `1..=n` by swapping, then filtered to involutions.
pub fn brute_force_involutions(n: usize) -> Vec<Vec<usize>> {
    fn heap(k: usize, a: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(a.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, a, out);
            if k % 2 == 0 {
                a.swap(i, k - 1);
            } else {
                a.swap(0, k - 1);
            }
        }
    }
    let mut a: Vec<usize> = (1..=n).collect();
    let mut out = Vec::new();
    heap(n, &mut a, &mut out);
    out.retain(|p| p.iter().enumerate().all(|(i, &v)| p[v - 1] == i + 1));
    out.sort();
    out
}

/// `I(n,k)` for `k = 0..n-1` from the brute-force involution list.
pub fn brute_force_descent_row(n: usize) -> Vec<u64> {
    let mut row = vec![0u64; n];
    for p in brute_force_involutions(n) {
        row[p.windows(2).filter(|w| w[0] > w[1]).count()] += 1;
    }
    row
}
