//! Dense symmetric non-negative integer matrices and their text formats.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, ParseError, Result};

/// A `k x k` symmetric matrix with non-negative entries, stored row-major.
///
/// Indices in the public accessors are 1-based. The derived ordering
/// compares dimension first, then the row-major entries, which for a
/// fixed dimension is the lexicographic order on the upper triangle
/// read row by row.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SymMatrix {
    dim: usize,
    entries: Vec<u64>,
}

impl SymMatrix {
    /// Builds a matrix from its rows, rejecting ragged or asymmetric input.
    pub fn from_rows(rows: Vec<Vec<u64>>) -> Result<Self, ParseError> {
        let dim = rows.len();
        if dim == 0 {
            return Err(ParseError::Empty);
        }
        let mut entries = Vec::with_capacity(dim * dim);
        for (r, row) in rows.iter().enumerate() {
            if row.len() != dim {
                return Err(ParseError::Ragged {
                    row: r + 1,
                    expected: dim,
                    found: row.len(),
                });
            }
            entries.extend_from_slice(row);
        }
        let m = SymMatrix { dim, entries };
        for i in 0..dim {
            for j in i + 1..dim {
                if m.at(i, j) != m.at(j, i) {
                    return Err(ParseError::Asymmetric {
                        row: i + 1,
                        col: j + 1,
                    });
                }
            }
        }
        Ok(m)
    }

    /// Builds a matrix from its upper triangle, row by row (`k(k+1)/2` values).
    pub(crate) fn from_upper(dim: usize, upper: &[u64]) -> Self {
        debug_assert_eq!(upper.len(), dim * (dim + 1) / 2);
        let mut m = SymMatrix::zeros(dim);
        let mut it = upper.iter();
        for i in 0..dim {
            for j in i..dim {
                m.set(i, j, *it.next().unwrap());
            }
        }
        m
    }

    pub(crate) fn zeros(dim: usize) -> Self {
        SymMatrix {
            dim,
            entries: vec![0; dim * dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Entry `x_{i,j}` with 1-based indices.
    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.at(i - 1, j - 1)
    }

    pub fn rows(&self) -> impl Iterator<Item = &[u64]> + '_ {
        self.entries.chunks(self.dim)
    }

    pub fn to_rows(&self) -> Vec<Vec<u64>> {
        self.rows().map(<[u64]>::to_vec).collect()
    }

    /// The upper triangle read row by row.
    pub fn upper_triangle(&self) -> Vec<u64> {
        (0..self.dim)
            .flat_map(|i| (i..self.dim).map(move |j| (i, j)))
            .map(|(i, j)| self.at(i, j))
            .collect()
    }

    /// Sum of all entries, or `None` on overflow.
    pub fn entry_sum(&self) -> Option<u64> {
        self.entries
            .iter()
            .try_fold(0u64, |acc, &v| acc.checked_add(v))
    }

    pub fn has_zero_diagonal(&self) -> bool {
        (0..self.dim).all(|i| self.at(i, i) == 0)
    }

    pub fn has_zero_row(&self) -> bool {
        self.rows().any(|r| r.iter().all(|&v| v == 0))
    }

    // 0-based internals

    #[inline]
    pub(crate) fn at(&self, i: usize, j: usize) -> u64 {
        self.entries[i * self.dim + j]
    }

    /// Sets both `(i,j)` and `(j,i)`.
    #[inline]
    pub(crate) fn set(&mut self, i: usize, j: usize, v: u64) {
        self.entries[i * self.dim + j] = v;
        self.entries[j * self.dim + i] = v;
    }

    /// Deletes row and column `idx`.
    pub(crate) fn remove_index(&self, idx: usize) -> Self {
        let dim = self.dim - 1;
        let mut entries = Vec::with_capacity(dim * dim);
        for i in (0..self.dim).filter(|&i| i != idx) {
            for j in (0..self.dim).filter(|&j| j != idx) {
                entries.push(self.at(i, j));
            }
        }
        SymMatrix { dim, entries }
    }

    /// Inserts an all-zero row and column so that they become index `idx`.
    pub(crate) fn insert_zero_index(&self, idx: usize) -> Self {
        let dim = self.dim + 1;
        let src = |i: usize| {
            if i < idx {
                Some(i)
            } else if i == idx {
                None
            } else {
                Some(i - 1)
            }
        };
        let mut entries = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                entries.push(match (src(i), src(j)) {
                    (Some(a), Some(b)) => self.at(a, b),
                    _ => 0,
                });
            }
        }
        SymMatrix { dim, entries }
    }

    /// Principal submatrix on the index range `start..end`.
    pub(crate) fn principal(&self, start: usize, end: usize) -> Self {
        let dim = end - start;
        let mut entries = Vec::with_capacity(dim * dim);
        for i in start..end {
            entries.extend_from_slice(&self.entries[i * self.dim + start..i * self.dim + end]);
        }
        SymMatrix { dim, entries }
    }

    /// Places `self` as the principal block at `offset` inside a zero matrix of size `dim`.
    pub(crate) fn embed(&self, dim: usize, offset: usize) -> Self {
        let mut out = SymMatrix::zeros(dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                out.entries[(i + offset) * dim + j + offset] = self.at(i, j);
            }
        }
        out
    }
}

impl fmt::Debug for SymMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.rows()).finish()
    }
}

impl fmt::Display for SymMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_plain(self))
    }
}

impl Serialize for SymMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        MatrixJson {
            entries: self.to_rows(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SymMatrix {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = MatrixJson::deserialize(d)?;
        SymMatrix::from_rows(raw.entries).map_err(serde::de::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
struct MatrixJson {
    entries: Vec<Vec<u64>>,
}

/// Selects `T(n,k)`, or its zero-diagonal subfamily counted by `W(n,k)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MatrixFamilyKey {
    n: usize,
    k: usize,
    zero_diagonal: bool,
}

impl MatrixFamilyKey {
    pub fn new(n: usize, k: usize, zero_diagonal: bool) -> Result<Self> {
        if k == 0 || k > n {
            return Err(Error::InvalidKey { n, k });
        }
        Ok(MatrixFamilyKey {
            n,
            k,
            zero_diagonal,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn zero_diagonal(&self) -> bool {
        self.zero_diagonal
    }
}

/// Membership in `T(n,k)` (or the zero-diagonal subfamily): dimension `k`,
/// entry sum `n`, no all-zero row, and a zero diagonal when requested.
pub fn validate_membership(x: &SymMatrix, key: &MatrixFamilyKey) -> bool {
    x.dim() == key.k
        && x.entry_sum() == Some(key.n as u64)
        && !x.has_zero_row()
        && (!key.zero_diagonal || x.has_zero_diagonal())
}

/// Infers `n` from the entry sum and checks membership in `T(n, dim)`.
pub fn family_n(x: &SymMatrix) -> Result<usize> {
    let n = x
        .entry_sum()
        .ok_or(Error::NotInFamily("entry sum overflows"))?;
    if n == 0 {
        return Err(Error::NotInFamily("entry sum is zero"));
    }
    if x.has_zero_row() {
        return Err(Error::NotInFamily("a row is all zeros"));
    }
    usize::try_from(n).map_err(|_| Error::NotInFamily("entry sum too large"))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum MatrixFormat {
    #[default]
    Plain,
    Json,
}

/// Parses a matrix, choosing JSON when the first non-blank byte is `{`.
///
/// Plain format: one row per line, entries separated by whitespace.
/// Blank lines and lines starting with `#` are ignored.
pub fn parse_matrix(text: &[u8]) -> Result<SymMatrix, ParseError> {
    let text = std::str::from_utf8(text).map_err(|e| ParseError::InvalidEntry {
        row: 0,
        col: 0,
        token: e.to_string(),
    })?;
    if text.trim_start().starts_with('{') {
        parse_json(text)
    } else {
        parse_plain(text)
    }
}

pub fn parse_plain(text: &str) -> Result<SymMatrix, ParseError> {
    let mut rows = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let r = rows.len() + 1;
        let row = line
            .split_whitespace()
            .enumerate()
            .map(|(c, tok)| parse_entry(tok, r, c + 1))
            .collect::<Result<Vec<_>, _>>()?;
        rows.push(row);
    }
    SymMatrix::from_rows(rows)
}

fn parse_entry(tok: &str, row: usize, col: usize) -> Result<u64, ParseError> {
    if let Some(rest) = tok.strip_prefix('-') {
        if !rest.is_empty() && rest.bytes().all(|b| b.is_ascii_digit()) {
            return Err(ParseError::Negative { row, col });
        }
    }
    tok.parse::<u64>().map_err(|_| ParseError::InvalidEntry {
        row,
        col,
        token: tok.to_string(),
    })
}

pub fn parse_json(text: &str) -> Result<SymMatrix, ParseError> {
    #[derive(Deserialize)]
    struct Raw {
        entries: Vec<Vec<serde_json::Number>>,
    }
    let raw: Raw = serde_json::from_str(text).map_err(|e| ParseError::Json(e.to_string()))?;
    let rows = raw
        .entries
        .iter()
        .enumerate()
        .map(|(r, row)| {
            row.iter()
                .enumerate()
                .map(|(c, num)| {
                    num.as_u64().ok_or_else(|| {
                        if num.as_i64().is_some_and(|v| v < 0) {
                            ParseError::Negative {
                                row: r + 1,
                                col: c + 1,
                            }
                        } else {
                            ParseError::InvalidEntry {
                                row: r + 1,
                                col: c + 1,
                                token: num.to_string(),
                            }
                        }
                    })
                })
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    SymMatrix::from_rows(rows)
}

pub fn render_matrix(x: &SymMatrix, format: MatrixFormat) -> Vec<u8> {
    match format {
        MatrixFormat::Plain => render_plain(x).into_bytes(),
        MatrixFormat::Json => {
            let mut out = serde_json::to_vec(x).expect("matrix serialization cannot fail");
            out.push(b'\n');
            out
        }
    }
}

fn render_plain(x: &SymMatrix) -> String {
    let mut s = String::new();
    for row in x.rows() {
        let line: Vec<String> = row.iter().map(u64::to_string).collect();
        s.push_str(&line.join(" "));
        s.push('\n');
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[u64]]) -> SymMatrix {
        SymMatrix::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn membership_examples() {
        let key = |n, k, z| MatrixFamilyKey::new(n, k, z).unwrap();
        assert!(validate_membership(&m(&[&[2]]), &key(2, 1, false)));
        assert!(!validate_membership(
            &m(&[&[2, 0], &[0, 0]]),
            &key(2, 2, false)
        ));
        assert!(validate_membership(
            &m(&[&[0, 1], &[1, 0]]),
            &key(2, 2, true)
        ));
        assert!(!validate_membership(
            &m(&[&[1, 0], &[0, 1]]),
            &key(2, 2, true)
        ));
        assert!(!validate_membership(
            &m(&[&[0, 1], &[1, 0]]),
            &key(3, 2, false)
        ));
        assert!(!validate_membership(
            &m(&[&[0, 1], &[1, 0]]),
            &key(2, 1, false)
        ));
    }

    #[test]
    fn key_bounds() {
        assert!(MatrixFamilyKey::new(3, 0, false).is_err());
        assert!(MatrixFamilyKey::new(3, 4, false).is_err());
        assert!(MatrixFamilyKey::new(3, 3, true).is_ok());
    }

    #[test]
    fn parse_examples() {
        assert_eq!(parse_matrix(b"0 1\n1 0\n").unwrap(), m(&[&[0, 1], &[1, 0]]));
        assert_eq!(parse_matrix(b"1\n").unwrap(), m(&[&[1]]));
        assert_eq!(
            parse_matrix(b"1 2\n3 4\n"),
            Err(ParseError::Asymmetric { row: 1, col: 2 })
        );
    }

    #[test]
    fn parse_errors_are_distinct() {
        assert_eq!(parse_matrix(b""), Err(ParseError::Empty));
        assert_eq!(
            parse_matrix(b"\n  \n# only a comment\n"),
            Err(ParseError::Empty)
        );
        assert_eq!(
            parse_matrix(b"1 0\n0\n"),
            Err(ParseError::Ragged {
                row: 2,
                expected: 2,
                found: 1
            })
        );
        assert_eq!(
            parse_matrix(b"1 0 0\n0 1 0\n"),
            Err(ParseError::Ragged {
                row: 1,
                expected: 2,
                found: 3
            })
        );
        assert_eq!(
            parse_matrix(b"1 -1\n-1 1\n"),
            Err(ParseError::Negative { row: 1, col: 2 })
        );
        assert!(matches!(
            parse_matrix(b"1 x\nx 1\n"),
            Err(ParseError::InvalidEntry { .. })
        ));
        assert_eq!(
            parse_matrix(br#"{"entries": [[1, -2], [-2, 1]]}"#),
            Err(ParseError::Negative { row: 1, col: 2 })
        );
        assert_eq!(parse_matrix(br#"{"entries": []}"#), Err(ParseError::Empty));
        assert!(matches!(
            parse_matrix(b"{\"rows\": 1}"),
            Err(ParseError::Json(_))
        ));
    }

    #[test]
    fn comments_and_blank_lines_are_skipped() {
        let x = parse_matrix(b"# label: Case3_Pi2\n1 0\n\n0 1\n# m: 1\n").unwrap();
        assert_eq!(x, m(&[&[1, 0], &[0, 1]]));
    }

    #[test]
    fn render_formats() {
        let x = m(&[&[0, 1], &[1, 0]]);
        assert_eq!(render_matrix(&x, MatrixFormat::Plain), b"0 1\n1 0\n");
        assert_eq!(
            render_matrix(&x, MatrixFormat::Json),
            b"{\"entries\":[[0,1],[1,0]]}\n"
        );
        assert_eq!(
            parse_matrix(&render_matrix(&x, MatrixFormat::Json)).unwrap(),
            x
        );
    }

    #[test]
    fn surgery_helpers() {
        let x = m(&[&[1, 2, 3], &[2, 4, 5], &[3, 5, 6]]);
        assert_eq!(x.remove_index(1), m(&[&[1, 3], &[3, 6]]));
        assert_eq!(
            x.remove_index(1).insert_zero_index(1),
            m(&[&[1, 0, 3], &[0, 0, 0], &[3, 0, 6]])
        );
        assert_eq!(x.principal(1, 3), m(&[&[4, 5], &[5, 6]]));
        assert_eq!(m(&[&[7]]).embed(2, 1), m(&[&[0, 0], &[0, 7]]));
        assert_eq!(x.upper_triangle(), vec![1, 2, 3, 4, 5, 6]);
        assert_eq!(SymMatrix::from_upper(3, &[1, 2, 3, 4, 5, 6]), x);
        assert_eq!(x.get(2, 3), 5);
        assert_eq!(x.entry_sum(), Some(31));
    }

    #[test]
    fn family_n_inference() {
        assert_eq!(family_n(&m(&[&[0, 2], &[2, 0]])), Ok(4));
        assert!(family_n(&m(&[&[0]])).is_err());
        assert!(family_n(&m(&[&[1, 0], &[0, 0]])).is_err());
    }
}
