//! Exact checks of the polynomial and alternating-sum identities relating
//! involution descents to the matrix families, with serializable reports.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bound::EnumerationBound;
use crate::error::{Error, Result};
use crate::family::count_table;
use crate::perm::{counts_to_polynomial, involution_descent_table};
use crate::phi::{audit_pairing, fixed_point};
use crate::poly::{IntPolynomial, Sign};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Identity {
    /// `I_n(t) = sum_k T(n,k) t^(k-1) (1-t)^(n-k)`
    Main1,
    /// `sum_k I(n,k) t^(k+1) (1+t)^(n-k-1) = sum_k T(n,k) t^k`
    Main2,
    /// `sum_k (-1)^k T(n,k) = (-1)^n`
    AltSum,
    /// `sum_k (-1)^k W(n,k) = 1` for even `n`
    Corollary,
    /// `T(n,k)` read off the involution side of `Main2` against direct counts
    Oracle,
}

impl Identity {
    pub fn as_str(self) -> &'static str {
        match self {
            Identity::Main1 => "main1",
            Identity::Main2 => "main2",
            Identity::AltSum => "alt-sum",
            Identity::Corollary => "corollary",
            Identity::Oracle => "oracle",
        }
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One side of an identity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Value {
    Int(i64),
    Poly(IntPolynomial),
    Counts(Vec<u64>),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Int(v) => write!(f, "{v}"),
            Value::Poly(p) => write!(f, "{p}"),
            Value::Counts(c) => write!(f, "{c:?}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub identity: Identity,
    pub n: usize,
    pub passed: bool,
    pub lhs: Value,
    pub rhs: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl VerificationReport {
    fn compare(identity: Identity, n: usize, lhs: Value, rhs: Value) -> Self {
        let passed = lhs == rhs;
        let detail = (!passed).then(|| format!("lhs {lhs} differs from rhs {rhs}"));
        VerificationReport {
            identity,
            n,
            passed,
            lhs,
            rhs,
            detail,
        }
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} n={} {}: lhs = {}, rhs = {}",
            self.identity,
            self.n,
            if self.passed { "PASS" } else { "FAIL" },
            self.lhs,
            self.rhs
        )?;
        if let Some(d) = &self.detail {
            write!(f, " ({d})")?;
        }
        Ok(())
    }
}

/// The raw counts every identity is built from, for one `n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counts {
    pub n: usize,
    /// `I(n,k)` for `k = 0..n-1`.
    pub involutions: Vec<u64>,
    /// `T(n,k)` for `k = 1..n`.
    pub matrices: Vec<u64>,
}

impl Counts {
    pub fn compute(n: usize, bound: EnumerationBound) -> Result<Self> {
        Ok(Counts {
            n,
            involutions: involution_descent_table(n, bound)?,
            matrices: count_table(n, false, bound)?,
        })
    }

    fn check_shape(&self) -> Result<()> {
        if self.involutions.len() != self.n || self.matrices.len() != self.n {
            return Err(Error::Defect(format!(
                "count rows for n = {} have lengths {} and {}",
                self.n,
                self.involutions.len(),
                self.matrices.len()
            )));
        }
        Ok(())
    }
}

fn coefficient(c: u64) -> Result<i64> {
    i64::try_from(c).map_err(|_| Error::Overflow("count to coefficient"))
}

/// `sum_{k=1}^n T(n,k) t^(k-1) (1-t)^(n-k)`
fn main1_rhs(counts: &Counts) -> Result<IntPolynomial> {
    let n = counts.n;
    let mut acc = IntPolynomial::zero();
    for (idx, &t) in counts.matrices.iter().enumerate() {
        let k = idx + 1;
        let term = IntPolynomial::binomial_power(coefficient(t)?, Sign::Minus, n - k)?.shift(k - 1);
        acc = acc.checked_add(&term)?;
    }
    Ok(acc)
}

/// `sum_{k=0}^{n-1} I(n,k) t^(k+1) (1+t)^(n-k-1)`
fn main2_lhs(counts: &Counts) -> Result<IntPolynomial> {
    let n = counts.n;
    let mut acc = IntPolynomial::zero();
    for (k, &i) in counts.involutions.iter().enumerate() {
        let term =
            IntPolynomial::binomial_power(coefficient(i)?, Sign::Plus, n - k - 1)?.shift(k + 1);
        acc = acc.checked_add(&term)?;
    }
    Ok(acc)
}

/// `sum_{k=1}^n T(n,k) t^k`
fn main2_rhs(counts: &Counts) -> Result<IntPolynomial> {
    Ok(counts_to_polynomial(&counts.matrices)?.shift(1))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MainForm {
    First,
    Second,
}

pub fn verify_main_theorem(
    n: usize,
    form: MainForm,
    bound: EnumerationBound,
) -> Result<VerificationReport> {
    verify_main_theorem_with(&Counts::compute(n, bound)?, form)
}

pub fn verify_main_theorem_with(counts: &Counts, form: MainForm) -> Result<VerificationReport> {
    counts.check_shape()?;
    let (identity, lhs, rhs) = match form {
        MainForm::First => (
            Identity::Main1,
            counts_to_polynomial(&counts.involutions)?,
            main1_rhs(counts)?,
        ),
        MainForm::Second => (Identity::Main2, main2_lhs(counts)?, main2_rhs(counts)?),
    };
    Ok(VerificationReport::compare(
        identity,
        counts.n,
        Value::Poly(lhs),
        Value::Poly(rhs),
    ))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum AltSumMode {
    /// From the counts `T(n,k)`.
    ByCounts,
    /// From the fixed points of `φ` alone.
    ByPairing,
}

fn sign_of(exp: usize) -> i64 {
    if exp % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `sum_k (-1)^k c_k`, where `counts[0]` is the `k = 1` entry.
fn alternating_sum(counts: &[u64]) -> Result<i64> {
    counts.iter().enumerate().try_fold(0i64, |acc, (idx, &c)| {
        let term = coefficient(c)?
            .checked_mul(sign_of(idx + 1))
            .ok_or(Error::Overflow("alternating sum"))?;
        acc.checked_add(term)
            .ok_or(Error::Overflow("alternating sum"))
    })
}

pub fn verify_alternating_sum(
    n: usize,
    mode: AltSumMode,
    bound: EnumerationBound,
) -> Result<VerificationReport> {
    let lhs = match mode {
        AltSumMode::ByCounts => alternating_sum(&count_table(n, false, bound)?)?,
        AltSumMode::ByPairing => pairing_sum(n, bound)?,
    };
    Ok(VerificationReport::compare(
        Identity::AltSum,
        n,
        Value::Int(lhs),
        Value::Int(sign_of(n)),
    ))
}

fn pairing_sum(n: usize, bound: EnumerationBound) -> Result<i64> {
    let audit = audit_pairing(n, false, bound)?;
    if !audit.passed() {
        return Err(Error::Defect(format!(
            "pairing for n = {n} is not a sign-reversing involution: {}",
            audit.violations.join("; ")
        )));
    }
    Ok(audit.fixed_signed_sum)
}

/// Both modes at once; passes only if each equals `(-1)^n`.
pub fn verify_alternating_sum_both(
    n: usize,
    bound: EnumerationBound,
) -> Result<VerificationReport> {
    verify_alternating_sum_with(&count_table(n, false, bound)?, n, bound)
}

pub fn verify_alternating_sum_with(
    matrices: &[u64],
    n: usize,
    bound: EnumerationBound,
) -> Result<VerificationReport> {
    let by_counts = alternating_sum(matrices)?;
    let by_pairing = pairing_sum(n, bound)?;
    let mut report = VerificationReport::compare(
        Identity::AltSum,
        n,
        Value::Int(by_counts),
        Value::Int(sign_of(n)),
    );
    if by_pairing != by_counts {
        report.passed = false;
        report.detail = Some(format!(
            "sum over counts is {by_counts} but sum over fixed points of phi is {by_pairing}"
        ));
    }
    Ok(report)
}

/// `sum_{k=2}^n (-1)^k W(n,k) = 1` for even `n`, plus a check that `φ`
/// restricted to zero-diagonal matrices fixes exactly `F_n`.
pub fn verify_corollary(n: usize, bound: EnumerationBound) -> Result<VerificationReport> {
    if n % 2 == 1 {
        return Err(Error::OddCorollary(n));
    }
    verify_corollary_with(&count_table(n, true, bound)?, n, bound)
}

pub fn verify_corollary_with(
    zero_diagonal: &[u64],
    n: usize,
    bound: EnumerationBound,
) -> Result<VerificationReport> {
    if n % 2 == 1 {
        return Err(Error::OddCorollary(n));
    }
    bound.check(n)?;
    let sum = alternating_sum(zero_diagonal)?;
    let mut report =
        VerificationReport::compare(Identity::Corollary, n, Value::Int(sum), Value::Int(1));
    let audit = audit_pairing(n, true, bound)?;
    let expected = fixed_point(n)?;
    if !audit.passed() || audit.fixed_points != [expected] {
        report.passed = false;
        report.detail = Some(format!(
            "zero-diagonal pairing: fixed points {:?}, violations {:?}",
            audit.fixed_points, audit.violations
        ));
    }
    Ok(report)
}

/// Recovers `T(n,k)` for `k = 1..n` from involution descent counts alone.
pub fn oracle_t_from_involutions(n: usize, bound: EnumerationBound) -> Result<Vec<u64>> {
    let involutions = involution_descent_table(n, bound)?;
    t_from_involution_counts(n, &involutions)
}

pub fn t_from_involution_counts(n: usize, involutions: &[u64]) -> Result<Vec<u64>> {
    let lhs = main2_lhs(&Counts {
        n,
        involutions: involutions.to_vec(),
        matrices: Vec::new(),
    })?;
    if lhs.coeff(0) != 0 || lhs.degree().is_some_and(|d| d > n) {
        return Err(Error::Defect(format!(
            "expansion {lhs} has terms outside t^1..t^{n}"
        )));
    }
    (1..=n)
        .map(|k| {
            u64::try_from(lhs.coeff(k))
                .map_err(|_| Error::Defect(format!("negative coefficient in {lhs}")))
        })
        .collect()
}

/// Compares the involution-side recovery of `T(n,·)` with direct enumeration.
pub fn verify_oracle(n: usize, bound: EnumerationBound) -> Result<VerificationReport> {
    let from_involutions = oracle_t_from_involutions(n, bound)?;
    let direct = count_table(n, false, bound)?;
    Ok(VerificationReport::compare(
        Identity::Oracle,
        n,
        Value::Counts(from_involutions),
        Value::Counts(direct),
    ))
}

/// Shape of one row `I(n,·)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShapeRow {
    pub n: usize,
    pub row: Vec<u64>,
    pub symmetric: bool,
    pub unimodal: bool,
    pub log_concave: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShapeReport {
    pub rows: Vec<ShapeRow>,
    /// Smallest `n` whose row fails log-concavity, if the search found one.
    pub first_log_concave_failure: Option<usize>,
}

pub fn is_symmetric(row: &[u64]) -> bool {
    row.iter().eq(row.iter().rev())
}

/// Weakly increasing then weakly decreasing.
pub fn is_unimodal(row: &[u64]) -> bool {
    let peak = row.windows(2).take_while(|w| w[0] <= w[1]).count();
    row[peak..].windows(2).all(|w| w[0] >= w[1])
}

/// `c_k^2 >= c_{k-1} c_{k+1}` at every interior `k`.
pub fn is_log_concave(row: &[u64]) -> bool {
    row.windows(3)
        .all(|w| (w[1] as u128) * (w[1] as u128) >= (w[0] as u128) * (w[2] as u128))
}

pub fn shape_checks(n_max: usize, bound: EnumerationBound) -> Result<ShapeReport> {
    bound.check(n_max)?;
    let rows = (1..=n_max)
        .map(|n| {
            let row = involution_descent_table(n, bound)?;
            Ok(ShapeRow {
                n,
                symmetric: is_symmetric(&row),
                unimodal: is_unimodal(&row),
                log_concave: is_log_concave(&row),
                row,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let first_log_concave_failure = rows.iter().find(|r| !r.log_concave).map(|r| r.n);
    Ok(ShapeReport {
        rows,
        first_log_concave_failure,
    })
}
