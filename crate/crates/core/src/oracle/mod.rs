//! Independent audit layer: a Sturm-bisection eigensolver for symmetric
//! tridiagonal matrices, finite-difference discretizations of the effective
//! component wells, and a classification report comparing the closed-form
//! branches against the numeric spectrum.

mod levels;
mod problem;
mod report;
mod tridiag;

pub use levels::{oracle_levels, pair_spectra, partner_pairing_check, OracleSpectrum, PartnerPairing};
pub use problem::{
    completed_square_spectrum, discretize, effective_problem, Component, EffectiveProblem,
    GridSpec,
};
pub use report::{
    verify, Classification, ClassificationCounts, LevelRecord, PartnerChecks, VerificationReport,
    VerifyMode,
};
pub use tridiag::SymmetricTridiagonal;

use thiserror::Error;

/// Failures of the audit layer.
#[derive(Debug, Error)]
pub enum OracleError {
    /// Grid specification violates a requirement.
    #[error("invalid grid: {0}")]
    InvalidGrid(&'static str),
    /// Matrix dimensions are inconsistent.
    #[error("invalid matrix: {0}")]
    InvalidMatrix(&'static str),
    /// More eigenvalues requested than the matrix has.
    #[error("requested {requested} levels but the matrix only has {available}")]
    TooManyLevels { requested: usize, available: usize },
    /// A spectrum comparison was attempted on empty input.
    #[error("empty spectrum: {0}")]
    EmptySpectrum(&'static str),
}
