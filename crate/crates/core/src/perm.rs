//! Permutations in one-line notation, involutions, and the descent statistic.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::bound::EnumerationBound;
use crate::error::{Error, Result};
use crate::poly::IntPolynomial;

/// A permutation of `{1..n}` in one-line notation (1-based values).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &v in &images {
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidPermutation(n));
            }
            seen[v] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (1..=n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    /// `π(i)` for `1 <= i <= n`.
    pub fn image(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_involution(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &v)| self.images[v - 1] == i + 1)
    }

    pub fn descent_set(&self) -> DescentSet {
        DescentSet {
            indices: self
                .images
                .windows(2)
                .enumerate()
                .filter(|(_, w)| w[0] > w[1])
                .map(|(i, _)| i + 1)
                .collect(),
        }
    }

    /// Number of descents without materializing the set.
    pub fn des(&self) -> usize {
        self.images.windows(2).filter(|w| w[0] > w[1]).count()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.images.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.images.serialize(s)
    }
}

/// A self-inverse permutation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Involution(Permutation);

impl Involution {
    pub fn new(p: Permutation) -> Result<Self> {
        if p.is_involution() {
            Ok(Involution(p))
        } else {
            Err(Error::InvalidPermutation(p.len()))
        }
    }

    pub fn as_permutation(&self) -> &Permutation {
        &self.0
    }

    pub fn into_permutation(self) -> Permutation {
        self.0
    }
}

impl std::ops::Deref for Involution {
    type Target = Permutation;

    fn deref(&self) -> &Permutation {
        &self.0
    }
}

/// Positions `i` (1-based) with `π(i) > π(i+1)`, increasing.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct DescentSet {
    indices: Vec<usize>,
}

impl DescentSet {
    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    /// `des(π)`
    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.indices.binary_search(&i).is_ok()
    }
}

pub fn descent_set(p: &Permutation) -> DescentSet {
    p.descent_set()
}

/// Involutions of `{1..n}` in lexicographic order of one-line notation.
///
/// The smallest unassigned position is either fixed or swapped with a
/// larger unassigned position; trying "fixed" first and partners in
/// increasing order gives lexicographic output.
#[derive(Debug, Clone)]
pub struct Involutions {
    // 0-based; `UNSET` marks unassigned positions
    images: Vec<usize>,
    // (position, partner) choices, in assignment order
    stack: Vec<(usize, usize)>,
    started: bool,
    done: bool,
}

const UNSET: usize = usize::MAX;

impl Involutions {
    fn new(n: usize) -> Self {
        Involutions {
            images: vec![UNSET; n],
            stack: Vec::with_capacity(n),
            started: false,
            done: false,
        }
    }

    fn assign(&mut self, pos: usize, partner: usize) {
        self.images[pos] = partner;
        self.images[partner] = pos;
        self.stack.push((pos, partner));
    }

    fn fill_fixed(&mut self) {
        for pos in 0..self.images.len() {
            if self.images[pos] == UNSET {
                self.assign(pos, pos);
            }
        }
    }

    fn next_partner(&self, pos: usize, after: usize) -> Option<usize> {
        (after + 1..self.images.len()).find(|&j| self.images[j] == UNSET && j > pos)
    }

    fn current(&self) -> Involution {
        Involution(Permutation {
            images: self.images.iter().map(|&v| v + 1).collect(),
        })
    }
}

impl Iterator for Involutions {
    type Item = Involution;

    fn next(&mut self) -> Option<Involution> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            self.fill_fixed();
            return Some(self.current());
        }
        while let Some((pos, partner)) = self.stack.pop() {
            self.images[pos] = UNSET;
            self.images[partner] = UNSET;
            if let Some(next) = self.next_partner(pos, partner.max(pos)) {
                self.assign(pos, next);
                self.fill_fixed();
                return Some(self.current());
            }
        }
        self.done = true;
        None
    }
}

pub fn enumerate_involutions(n: usize, bound: EnumerationBound) -> Result<Involutions> {
    bound.check(n)?;
    Ok(Involutions::new(n))
}

/// Number of involutions of `{1..n}`: `a(n) = a(n-1) + (n-1) a(n-2)`.
pub fn telephone_number(n: usize) -> Result<u64> {
    let (mut prev, mut cur) = (1u64, 1u64);
    for m in 2..=n {
        let next = (m as u64 - 1)
            .checked_mul(prev)
            .and_then(|v| v.checked_add(cur))
            .ok_or(Error::Overflow("telephone number"))?;
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// `I(n,k)` for `k = 0..n-1`.
pub fn involution_descent_table(n: usize, bound: EnumerationBound) -> Result<Vec<u64>> {
    let mut table = vec![0u64; n];
    for inv in enumerate_involutions(n, bound)? {
        table[inv.des()] += 1;
    }
    Ok(table)
}

/// `I_n(t) = sum_k I(n,k) t^k`.
pub fn involution_polynomial(n: usize, bound: EnumerationBound) -> Result<IntPolynomial> {
    counts_to_polynomial(&involution_descent_table(n, bound)?)
}

pub(crate) fn counts_to_polynomial(counts: &[u64]) -> Result<IntPolynomial> {
    let coeffs = counts
        .iter()
        .map(|&c| i64::try_from(c).map_err(|_| Error::Overflow("count to coefficient")))
        .collect::<Result<Vec<_>>>()?;
    Ok(IntPolynomial::new(coeffs))
}
