//! The sign-reversing involution `φ` on `S = T(n,1) ∪ … ∪ T(n,n)`.
//!
//! The sign of a matrix is `(-1)^dim`. Every matrix falls into exactly one
//! of four cases keyed on its leading index `m` (the last column with a
//! non-zero entry in the first row) and the pivot `x = x_{1,m}`. Each case
//! splits into two halves `Π₁`, `Π₂` that `φ` swaps, changing the dimension
//! by one. The only matrix left alone is `F_n`.

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bound::EnumerationBound;
use crate::error::{Error, Result};
use crate::family::{enumerate_family, enumerate_union};
use crate::matrix::{family_n, MatrixFamilyKey, SymMatrix};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum CaseLabel {
    #[serde(rename = "Case1_Pi1")]
    Case1Pi1,
    #[serde(rename = "Case1_Pi2")]
    Case1Pi2,
    #[serde(rename = "Case2_Pi1")]
    Case2Pi1,
    #[serde(rename = "Case2_Pi2")]
    Case2Pi2,
    #[serde(rename = "Case2_Fixed")]
    Case2Fixed,
    #[serde(rename = "Case3_Pi1")]
    Case3Pi1,
    #[serde(rename = "Case3_Pi2")]
    Case3Pi2,
    #[serde(rename = "Case4_Recurse")]
    Case4Recurse,
    #[serde(rename = "Case4_Fixed")]
    Case4Fixed,
    #[serde(rename = "Case4_F1")]
    Case4F1,
}

impl CaseLabel {
    pub const ALL: [CaseLabel; 10] = [
        CaseLabel::Case1Pi1,
        CaseLabel::Case1Pi2,
        CaseLabel::Case2Pi1,
        CaseLabel::Case2Pi2,
        CaseLabel::Case2Fixed,
        CaseLabel::Case3Pi1,
        CaseLabel::Case3Pi2,
        CaseLabel::Case4Recurse,
        CaseLabel::Case4Fixed,
        CaseLabel::Case4F1,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CaseLabel::Case1Pi1 => "Case1_Pi1",
            CaseLabel::Case1Pi2 => "Case1_Pi2",
            CaseLabel::Case2Pi1 => "Case2_Pi1",
            CaseLabel::Case2Pi2 => "Case2_Pi2",
            CaseLabel::Case2Fixed => "Case2_Fixed",
            CaseLabel::Case3Pi1 => "Case3_Pi1",
            CaseLabel::Case3Pi2 => "Case3_Pi2",
            CaseLabel::Case4Recurse => "Case4_Recurse",
            CaseLabel::Case4Fixed => "Case4_Fixed",
            CaseLabel::Case4F1 => "Case4_F1",
        }
    }

    /// Case number 1 to 4.
    pub fn case(self) -> u8 {
        match self {
            CaseLabel::Case1Pi1 | CaseLabel::Case1Pi2 => 1,
            CaseLabel::Case2Pi1 | CaseLabel::Case2Pi2 | CaseLabel::Case2Fixed => 2,
            CaseLabel::Case3Pi1 | CaseLabel::Case3Pi2 => 3,
            CaseLabel::Case4Recurse | CaseLabel::Case4Fixed | CaseLabel::Case4F1 => 4,
        }
    }

    pub fn is_fixed(self) -> bool {
        matches!(
            self,
            CaseLabel::Case2Fixed | CaseLabel::Case4Fixed | CaseLabel::Case4F1
        )
    }

    /// The label of the partner half: `Π₁ ↔ Π₂`. Fixed and Case 4 labels map to themselves.
    pub fn dual(self) -> CaseLabel {
        match self {
            CaseLabel::Case1Pi1 => CaseLabel::Case1Pi2,
            CaseLabel::Case1Pi2 => CaseLabel::Case1Pi1,
            CaseLabel::Case2Pi1 => CaseLabel::Case2Pi2,
            CaseLabel::Case2Pi2 => CaseLabel::Case2Pi1,
            CaseLabel::Case3Pi1 => CaseLabel::Case3Pi2,
            CaseLabel::Case3Pi2 => CaseLabel::Case3Pi1,
            other => other,
        }
    }
}

impl fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for CaseLabel {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        CaseLabel::ALL
            .into_iter()
            .find(|l| l.as_str() == s)
            .ok_or_else(|| format!("unknown case label {s:?}"))
    }
}

/// Case label plus the pivot data it was derived from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Classification {
    pub label: CaseLabel,
    /// Leading index, 1-based.
    pub m: usize,
    pub x: u64,
    /// For Case 4, the label of the matrix left after stripping the first row and column.
    pub inner_label: Option<CaseLabel>,
}

/// `φ(X)` together with the trace that produced it.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PhiResult {
    pub image: SymMatrix,
    pub label: CaseLabel,
    pub m: usize,
    pub x: u64,
    pub inner_label: Option<CaseLabel>,
}

impl PhiResult {
    pub fn is_fixed(&self) -> bool {
        self.label.is_fixed()
    }
}

/// `(m, x)`: the last column `m` (1-based) with `x_{1,m} != 0`, and that entry.
pub fn leading_index(x: &SymMatrix) -> Result<(usize, u64)> {
    (0..x.dim())
        .rev()
        .find(|&j| x.at(0, j) != 0)
        .map(|j| (j + 1, x.at(0, j)))
        .ok_or(Error::NotInFamily("first row is all zeros"))
}

fn only_nonzero_in_column(x: &SymMatrix, col: usize) -> bool {
    (1..x.dim()).all(|i| x.at(i, col) == 0)
}

// Each case predicate below is written straight from its own definition,
// without relying on earlier cases having been ruled out, so that the
// exclusivity check in `classify_traced` means something.

fn case1(x: &SymMatrix, n: usize, m: usize) -> Option<CaseLabel> {
    let col = m - 1;
    let sole = only_nonzero_in_column(x, col);
    if n > 1 && m != 1 && (m < x.dim() || !sole) {
        Some(if sole {
            CaseLabel::Case1Pi1
        } else {
            CaseLabel::Case1Pi2
        })
    } else {
        None
    }
}

fn case2(x: &SymMatrix, n: usize, m: usize) -> Option<CaseLabel> {
    let k = x.dim();
    if n > 1 && m != 1 && m == k && only_nonzero_in_column(x, k - 1) {
        let first_row_clear = (0..k - 1).all(|j| x.at(0, j) == 0);
        Some(match (first_row_clear, k) {
            (true, 2) => CaseLabel::Case2Fixed,
            (true, _) => CaseLabel::Case2Pi1,
            (false, _) => CaseLabel::Case2Pi2,
        })
    } else {
        None
    }
}

fn case3(x: &SymMatrix, n: usize, m: usize, pivot: u64) -> Option<CaseLabel> {
    if n <= 1 || m != 1 {
        return None;
    }
    let second_row_clear = x.dim() >= 2 && (2..x.dim()).all(|j| x.at(1, j) == 0);
    if pivot == 1 && second_row_clear {
        Some(CaseLabel::Case3Pi1)
    } else if pivot > 1 {
        Some(CaseLabel::Case3Pi2)
    } else {
        None
    }
}

/// Case 4 membership without the inner classification.
fn case4(x: &SymMatrix, n: usize, m: usize, pivot: u64) -> bool {
    n == 1 || (n > 1 && m == 1 && pivot == 1 && (2..x.dim()).any(|j| x.at(1, j) != 0))
}

/// Classifies a member of `S`, with `n` taken from its entry sum.
pub fn classify(x: &SymMatrix) -> Result<CaseLabel> {
    Ok(classify_traced(x)?.label)
}

pub fn classify_traced(x: &SymMatrix) -> Result<Classification> {
    let n = family_n(x)?;
    let (m, pivot) = leading_index(x)?;

    let c1 = case1(x, n, m);
    let c2 = case2(x, n, m);
    let c3 = case3(x, n, m, pivot);
    let c4 = case4(x, n, m, pivot);
    let fired = [c1.is_some(), c2.is_some(), c3.is_some(), c4]
        .iter()
        .filter(|&&b| b)
        .count();
    if fired != 1 {
        return Err(Error::Defect(format!(
            "{fired} case predicates apply to {x:?} (n = {n}, m = {m}, x = {pivot})"
        )));
    }

    let (label, inner_label) = if let Some(l) = c1.or(c2).or(c3) {
        (l, None)
    } else if n == 1 {
        (CaseLabel::Case4F1, None)
    } else {
        let inner = classify(&strip_corner(x))?;
        if !matches!(inner.case(), 1 | 2) {
            return Err(Error::Defect(format!(
                "residual matrix of {x:?} landed in {inner}, expected Case 1 or 2"
            )));
        }
        let label = if inner == CaseLabel::Case2Fixed {
            CaseLabel::Case4Fixed
        } else {
            CaseLabel::Case4Recurse
        };
        (label, Some(inner))
    };
    Ok(Classification {
        label,
        m,
        x: pivot,
        inner_label,
    })
}

/// Drops the first row and column.
fn strip_corner(x: &SymMatrix) -> SymMatrix {
    x.principal(1, x.dim())
}

/// Prepends a first row and column that are zero except for a 1 in the corner.
fn attach_corner(a: &SymMatrix) -> SymMatrix {
    let mut y = a.embed(a.dim() + 1, 1);
    y.set(0, 0, 1);
    y
}

/// Case 1, `Π₁ → Π₂`: delete row and column `m`, keeping `x` at `(1,m)`.
fn case1_contract(x: &SymMatrix, m: usize, pivot: u64) -> SymMatrix {
    let mut y = x.remove_index(m - 1);
    // the old (1,m+1) entry, now at (1,m), is zero since m is the leading index
    y.set(0, m - 1, pivot);
    y
}

/// Case 1, `Π₂ → Π₁`: reinsert a zero row and column at `m`, moving `x` onto it.
fn case1_expand(y: &SymMatrix, m: usize, pivot: u64) -> SymMatrix {
    let mut x = y.insert_zero_index(m - 1);
    x.set(0, m, 0);
    x.set(0, m - 1, pivot);
    x
}

/// Case 2, `Π₁ → Π₂`: the interior block moves to the top-left and `x` to `(1, m-1)`.
fn case2_contract(x: &SymMatrix, m: usize, pivot: u64) -> SymMatrix {
    let mut y = x.principal(1, m - 1).embed(m - 1, 0);
    y.set(0, m - 2, pivot);
    y
}

/// Case 2, `Π₂ → Π₁`: an all-zero first row and column go back in, `x` to the last column.
fn case2_expand(y: &SymMatrix, m: usize, pivot: u64) -> SymMatrix {
    let mut x = y.principal(0, m - 1).embed(m + 1, 1);
    x.set(0, m, pivot);
    x
}

/// Case 3, `Π₁ → Π₂`: merge the corner 1 into `x_{2,2}` and drop the first row and column.
fn case3_merge(x: &SymMatrix) -> SymMatrix {
    let mut y = strip_corner(x);
    let corner = y.at(0, 0);
    y.set(0, 0, corner + 1);
    y
}

/// Case 3, `Π₂ → Π₁`: split 1 off `y_{1,1}` into a new corner.
fn case3_split(y: &SymMatrix) -> SymMatrix {
    let mut a = y.clone();
    let corner = a.at(0, 0);
    a.set(0, 0, corner - 1);
    attach_corner(&a)
}

/// Applies the Case 1 or Case 2 map selected by `label`.
fn apply_outer(x: &SymMatrix, label: CaseLabel, m: usize, pivot: u64) -> Result<SymMatrix> {
    Ok(match label {
        CaseLabel::Case1Pi1 => case1_contract(x, m, pivot),
        CaseLabel::Case1Pi2 => case1_expand(x, m, pivot),
        CaseLabel::Case2Pi1 => case2_contract(x, m, pivot),
        CaseLabel::Case2Pi2 => case2_expand(x, m, pivot),
        CaseLabel::Case2Fixed => x.clone(),
        other => {
            return Err(Error::Defect(format!(
                "{other} is not a Case 1 or Case 2 label"
            )))
        }
    })
}

/// Applies `φ` to a member of `S` and reports how it got there.
pub fn phi(x: &SymMatrix) -> Result<PhiResult> {
    let n = family_n(x)?;
    let c = classify_traced(x)?;
    let image = match c.label {
        CaseLabel::Case1Pi1 | CaseLabel::Case1Pi2 | CaseLabel::Case2Pi1 | CaseLabel::Case2Pi2 => {
            apply_outer(x, c.label, c.m, c.x)?
        }
        CaseLabel::Case3Pi1 => case3_merge(x),
        CaseLabel::Case3Pi2 => case3_split(x),
        CaseLabel::Case4Recurse => {
            let a = strip_corner(x);
            let inner = classify_traced(&a)?;
            attach_corner(&apply_outer(&a, inner.label, inner.m, inner.x)?)
        }
        CaseLabel::Case2Fixed | CaseLabel::Case4Fixed | CaseLabel::Case4F1 => x.clone(),
    };

    if c.label.is_fixed() {
        if image != *x {
            return Err(Error::Defect(format!(
                "fixed label {} moved {x:?}",
                c.label
            )));
        }
    } else {
        if image.dim().abs_diff(x.dim()) != 1 {
            return Err(Error::Defect(format!(
                "{} sent {x:?} to {image:?}; dimension must change by one",
                c.label
            )));
        }
        match family_n(&image) {
            Ok(m) if m == n => {}
            _ => {
                return Err(Error::Defect(format!(
                    "{} sent {x:?} to {image:?}, outside T({n},*)",
                    c.label
                )))
            }
        }
    }

    Ok(PhiResult {
        image,
        label: c.label,
        m: c.m,
        x: c.x,
        inner_label: c.inner_label,
    })
}

/// The unique fixed point `F_n` of `φ`.
pub fn fixed_point(n: usize) -> Result<SymMatrix> {
    let half = |v: usize| v as u64 / 2;
    match n {
        0 => Err(Error::ZeroSize),
        1 => Ok(SymMatrix::from_upper(1, &[1])),
        _ if n % 2 == 0 => Ok(SymMatrix::from_upper(2, &[0, half(n), 0])),
        _ => Ok(SymMatrix::from_upper(3, &[1, 0, 0, 0, half(n - 1), 0])),
    }
}

/// Every member of `S` (or of its zero-diagonal part) paired with `φ` of it,
/// in `k`-then-lexicographic order.
pub fn pair_all(
    n: usize,
    zero_diagonal: bool,
    bound: EnumerationBound,
) -> Result<impl Iterator<Item = Result<(SymMatrix, PhiResult)>>> {
    Ok(enumerate_union(n, zero_diagonal, bound)?.map(|x| {
        let r = phi(&x)?;
        Ok((x, r))
    }))
}

/// What an exhaustive run of `φ` over `S` found.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct PairingAudit {
    pub n: usize,
    pub zero_diagonal: bool,
    pub elements: u64,
    pub fixed_points: Vec<SymMatrix>,
    /// `sum over all X of (-1)^dim(X)`.
    pub signed_sum: i64,
    /// `sum over fixed X of (-1)^dim(X)`.
    pub fixed_signed_sum: i64,
    /// Elements seen per label, in `CaseLabel::ALL` order.
    pub label_counts: Vec<(CaseLabel, u64)>,
    /// Human-readable descriptions of every broken property.
    pub violations: Vec<String>,
}

impl PairingAudit {
    const MAX_REPORTED: usize = 20;

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    fn violation(&mut self, msg: String) {
        if self.violations.len() < Self::MAX_REPORTED {
            self.violations.push(msg);
        }
    }

    fn empty(n: usize, zero_diagonal: bool) -> Self {
        PairingAudit {
            n,
            zero_diagonal,
            label_counts: CaseLabel::ALL.iter().map(|&l| (l, 0)).collect(),
            ..PairingAudit::default()
        }
    }

    fn merge(&mut self, other: PairingAudit) {
        self.elements += other.elements;
        self.signed_sum += other.signed_sum;
        self.fixed_signed_sum += other.fixed_signed_sum;
        for (mine, theirs) in self.label_counts.iter_mut().zip(other.label_counts) {
            mine.1 += theirs.1;
        }
        self.fixed_points.extend(other.fixed_points);
        for v in other.violations {
            self.violation(v);
        }
    }

    /// Applies `φ` to `x` and its image and records anything out of place.
    fn record(&mut self, x: SymMatrix) {
        let r = match phi(&x) {
            Ok(r) => r,
            Err(e) => {
                self.violation(e.to_string());
                return;
            }
        };
        self.elements += 1;
        self.signed_sum += sign(x.dim());
        let slot = CaseLabel::ALL.iter().position(|&l| l == r.label).unwrap();
        self.label_counts[slot].1 += 1;

        if r.is_fixed() {
            self.fixed_signed_sum += sign(x.dim());
            self.fixed_points.push(x);
            return;
        }

        if self.zero_diagonal {
            if !matches!(r.label.case(), 1 | 2) {
                self.violation(format!("zero-diagonal {x:?} classified as {}", r.label));
            }
            if !r.image.has_zero_diagonal() {
                self.violation(format!("zero-diagonal {x:?} mapped to {:?}", r.image));
            }
        }

        let back = match phi(&r.image) {
            Ok(b) => b,
            Err(e) => {
                self.violation(format!("phi of image of {x:?}: {e}"));
                return;
            }
        };
        if back.image != x {
            self.violation(format!(
                "phi(phi({x:?})) = {:?}, expected the input",
                back.image
            ));
        }
        if back.label != r.label.dual() {
            self.violation(format!(
                "{x:?} is {} but its image is {}",
                r.label, back.label
            ));
        }
        if let (Some(a), Some(b)) = (r.inner_label, back.inner_label) {
            if b != a.dual() {
                self.violation(format!("{x:?}: inner labels {a} and {b} are not dual"));
            }
        }
    }
}

fn sign(dim: usize) -> i64 {
    if dim % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Runs `φ` over all of `S` and checks the involution, sign-reversal,
/// case-duality and membership properties on every element, plus
/// zero-diagonal closure when `zero_diagonal` is set.
pub fn audit_pairing(
    n: usize,
    zero_diagonal: bool,
    bound: EnumerationBound,
) -> Result<PairingAudit> {
    bound.check(n)?;
    let parts: Vec<PairingAudit> = (1..=n)
        .into_par_iter()
        .map(|k| {
            let key = MatrixFamilyKey::new(n, k, zero_diagonal)?;
            let mut part = PairingAudit::empty(n, zero_diagonal);
            for x in enumerate_family(&key, bound)? {
                part.record(x);
            }
            Ok(part)
        })
        .collect::<Result<_>>()?;

    let mut audit = PairingAudit::empty(n, zero_diagonal);
    for part in parts {
        audit.merge(part);
    }

    let expected = fixed_point(n)?;
    let fixed_ok = match audit.fixed_points.as_slice() {
        [only] => *only == expected,
        [] => zero_diagonal && n % 2 == 1,
        _ => false,
    };
    if !fixed_ok {
        let msg = format!(
            "expected exactly the fixed point F_{n}, found {:?}",
            audit.fixed_points
        );
        audit.violation(msg);
    }
    if audit.signed_sum != audit.fixed_signed_sum {
        let msg = format!(
            "signed sum over S is {} but over fixed points is {}",
            audit.signed_sum, audit.fixed_signed_sum
        );
        audit.violation(msg);
    }
    Ok(audit)
}
