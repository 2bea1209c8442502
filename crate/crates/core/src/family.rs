//! Streaming enumeration and counting of the families `T(n,k)` and `W(n,k)`.

use rayon::prelude::*;

use crate::bound::EnumerationBound;
use crate::error::{Error, Result};
use crate::matrix::{MatrixFamilyKey, SymMatrix};

/// Depth-first walk over the upper triangle of a `k x k` matrix.
///
/// Cells are filled row by row with values tried in increasing order, so
/// completed assignments come out in lexicographic order. A branch is cut
/// when a completed row is all zeros, when the remaining sum cannot give
/// every still-empty row a non-zero entry, or, at the last cell, when the
/// sum is not exactly `n`.
#[derive(Debug, Clone)]
pub struct FamilyCursor {
    k: usize,
    zero_diagonal: bool,
    // (row, col) of each upper-triangle cell, row-major
    cells: Vec<(usize, usize)>,
    values: Vec<u64>,
    // non-zero entries seen so far in each row
    nonzero: Vec<u32>,
    empty_rows: usize,
    remaining: u64,
    // number of assigned cells
    depth: usize,
    state: CursorState,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum CursorState {
    Fresh,
    Running,
    Done,
}

impl FamilyCursor {
    fn new(key: &MatrixFamilyKey) -> Self {
        let k = key.k();
        let cells: Vec<_> = (0..k).flat_map(|i| (i..k).map(move |j| (i, j))).collect();
        let mut state = CursorState::Fresh;
        // a zero-diagonal symmetric matrix has even entry sum
        if key.zero_diagonal() && key.n() % 2 == 1 {
            state = CursorState::Done;
        }
        FamilyCursor {
            k,
            zero_diagonal: key.zero_diagonal(),
            values: vec![0; cells.len()],
            cells,
            nonzero: vec![0; k],
            empty_rows: k,
            remaining: key.n() as u64,
            depth: 0,
            state,
        }
    }

    #[inline]
    fn weight(&self, cell: usize) -> u64 {
        let (i, j) = self.cells[cell];
        if i == j {
            1
        } else {
            2
        }
    }

    #[inline]
    fn touch(&mut self, row: usize, delta: i32) {
        let before = self.nonzero[row];
        self.nonzero[row] = (before as i32 + delta) as u32;
        match (before, self.nonzero[row]) {
            (0, 1) => self.empty_rows -= 1,
            (1, 0) => self.empty_rows += 1,
            _ => {}
        }
    }

    /// Adds one to `cell`; the caller checks the budget.
    #[inline]
    fn bump(&mut self, cell: usize) {
        let (i, j) = self.cells[cell];
        let w = self.weight(cell);
        if self.values[cell] == 0 {
            self.touch(i, 1);
            if i != j {
                self.touch(j, 1);
            }
        }
        self.values[cell] += 1;
        self.remaining -= w;
    }

    #[inline]
    fn clear(&mut self, cell: usize) {
        let v = self.values[cell];
        if v == 0 {
            return;
        }
        let (i, j) = self.cells[cell];
        self.remaining += v * self.weight(cell);
        self.values[cell] = 0;
        self.touch(i, -1);
        if i != j {
            self.touch(j, -1);
        }
    }

    /// Whether the assignment of cells `0..=cell` can still be completed.
    #[inline]
    fn feasible(&self, cell: usize) -> bool {
        let (i, j) = self.cells[cell];
        if j == self.k - 1 && self.nonzero[i] == 0 {
            return false;
        }
        if cell + 1 == self.cells.len() {
            return self.remaining == 0;
        }
        self.remaining >= self.empty_rows as u64
    }

    #[inline]
    fn can_bump(&self, cell: usize) -> bool {
        let (i, j) = self.cells[cell];
        !(self.zero_diagonal && i == j) && self.remaining >= self.weight(cell)
    }

    /// Moves to the next member; returns `false` when exhausted.
    pub fn advance(&mut self) -> bool {
        let mut descending = match self.state {
            CursorState::Done => return false,
            CursorState::Fresh => {
                self.state = CursorState::Running;
                true
            }
            CursorState::Running => false,
        };
        loop {
            if descending {
                if self.depth == self.cells.len() {
                    return true;
                }
                let cell = self.depth;
                self.depth += 1;
                // value 0 is already in place
                if self.feasible(cell) {
                    continue;
                }
                // otherwise fall through and increment the cell just placed
            }
            // increment the deepest assigned cell, popping exhausted ones
            loop {
                if self.depth == 0 {
                    self.state = CursorState::Done;
                    return false;
                }
                let cell = self.depth - 1;
                if self.can_bump(cell) {
                    self.bump(cell);
                    if self.feasible(cell) {
                        descending = true;
                        break;
                    }
                } else {
                    self.clear(cell);
                    self.depth -= 1;
                }
            }
        }
    }

    /// Upper triangle of the current member, row by row.
    pub fn upper(&self) -> &[u64] {
        &self.values
    }

    pub fn matrix(&self) -> SymMatrix {
        SymMatrix::from_upper(self.k, &self.values)
    }
}

/// Members of one family, as matrices.
#[derive(Debug, Clone)]
pub struct FamilyIter {
    cursor: FamilyCursor,
}

impl Iterator for FamilyIter {
    type Item = SymMatrix;

    fn next(&mut self) -> Option<SymMatrix> {
        self.cursor.advance().then(|| self.cursor.matrix())
    }
}

pub fn enumerate_family(key: &MatrixFamilyKey, bound: EnumerationBound) -> Result<FamilyIter> {
    bound.check(key.n())?;
    Ok(FamilyIter {
        cursor: FamilyCursor::new(key),
    })
}

/// Counts one family by walking it without building matrices.
pub fn count_family(key: &MatrixFamilyKey, bound: EnumerationBound) -> Result<u64> {
    bound.check(key.n())?;
    let mut cursor = FamilyCursor::new(key);
    let mut count = 0u64;
    while cursor.advance() {
        count += 1;
    }
    Ok(count)
}

/// `T(n,k)` (or `W(n,k)`) for `k = 1..n`, counted by enumeration.
///
/// Each `k` is walked on its own thread; the result is in `k` order.
pub fn count_table(n: usize, zero_diagonal: bool, bound: EnumerationBound) -> Result<Vec<u64>> {
    bound.check(n)?;
    (1..=n)
        .into_par_iter()
        .map(|k| count_family(&MatrixFamilyKey::new(n, k, zero_diagonal)?, bound))
        .collect()
}

/// Every member of `T(n,1) ∪ … ∪ T(n,n)` in `k`-then-lexicographic order.
pub fn enumerate_union(
    n: usize,
    zero_diagonal: bool,
    bound: EnumerationBound,
) -> Result<impl Iterator<Item = SymMatrix>> {
    bound.check(n)?;
    let families = (1..=n)
        .map(|k| enumerate_family(&MatrixFamilyKey::new(n, k, zero_diagonal)?, bound))
        .collect::<Result<Vec<_>>>()?;
    Ok(families.into_iter().flatten())
}

fn binomial(n: u64, r: u64) -> Result<u128> {
    if r > n {
        return Ok(0);
    }
    let r = r.min(n - r);
    let mut acc: u128 = 1;
    for i in 0..r {
        acc = acc
            .checked_mul((n - i) as u128)
            .ok_or(Error::Overflow("binomial coefficient"))?
            / (i as u128 + 1);
    }
    Ok(acc)
}

/// Ways to write `total` as an ordered sum over `slots` non-negative parts.
fn multichoose(slots: u64, total: u64) -> Result<u128> {
    if slots == 0 {
        return Ok(u128::from(total == 0));
    }
    binomial(slots + total - 1, total)
}

/// Symmetric `r x r` non-negative matrices with entry sum `n`, zero rows allowed.
fn unrestricted_count(n: u64, r: u64, zero_diagonal: bool) -> Result<u128> {
    let off = r * r.saturating_sub(1) / 2;
    if zero_diagonal {
        return if n % 2 == 0 {
            multichoose(off, n / 2)
        } else {
            Ok(0)
        };
    }
    let mut total: u128 = 0;
    for pairs in 0..=n / 2 {
        let term = multichoose(off, pairs)?
            .checked_mul(multichoose(r, n - 2 * pairs)?)
            .ok_or(Error::Overflow("closed count"))?;
        total = total
            .checked_add(term)
            .ok_or(Error::Overflow("closed count"))?;
    }
    Ok(total)
}

/// Closed-form count of a family by inclusion-exclusion over all-zero rows.
///
/// Deleting a zero row and its column leaves a smaller symmetric matrix with
/// the same sum (and the same diagonal condition), so
/// `T(n,k) = sum_j (-1)^j C(k,j) U(n,k-j)` with `U` the unrestricted count.
/// Accepts any `k`, including `k > n` where the count is zero.
pub fn closed_count(n: usize, k: usize, zero_diagonal: bool) -> Result<u64> {
    let (n, k) = (n as u64, k as u64);
    let mut acc: i128 = 0;
    for j in 0..=k {
        let term = binomial(k, j)?
            .checked_mul(unrestricted_count(n, k - j, zero_diagonal)?)
            .ok_or(Error::Overflow("closed count"))?;
        let term = i128::try_from(term).map_err(|_| Error::Overflow("closed count"))?;
        acc = if j % 2 == 0 {
            acc.checked_add(term)
        } else {
            acc.checked_sub(term)
        }
        .ok_or(Error::Overflow("closed count"))?;
    }
    u64::try_from(acc).map_err(|_| Error::Overflow("closed count"))
}
