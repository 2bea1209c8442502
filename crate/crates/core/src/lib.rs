//! Involutions counted by descents, symmetric non-negative integer matrices
//! with no zero row, and a sign-reversing involution `φ` that pairs those
//! matrices by dimension parity.
//!
//! Every identity checked here is an exact integer or polynomial equality
//! computed from exhaustive enumeration.

pub mod bound;
pub mod error;
pub mod family;
pub mod matrix;
pub mod perm;
pub mod phi;
pub mod poly;
pub mod verify;

pub use bound::EnumerationBound;
pub use error::{Error, ParseError, Result};
pub use family::{closed_count, count_family, count_table, enumerate_family, enumerate_union};
pub use matrix::{
    family_n, parse_matrix, render_matrix, validate_membership, MatrixFamilyKey, MatrixFormat,
    SymMatrix,
};
pub use perm::{
    descent_set, enumerate_involutions, involution_descent_table, involution_polynomial,
    telephone_number, DescentSet, Involution, Permutation,
};
pub use phi::{
    audit_pairing, classify, classify_traced, fixed_point, leading_index, pair_all, phi, CaseLabel,
    Classification, PairingAudit, PhiResult,
};
pub use poly::{IntPolynomial, Sign};
pub use verify::{
    oracle_t_from_involutions, shape_checks, verify_alternating_sum, verify_corollary,
    verify_main_theorem, AltSumMode, Identity, MainForm, ShapeReport, VerificationReport,
};
