//! Closed-form layer: potential parameters, the coefficient reduction to a
//! parabolic-cylinder problem, the printed energy branches, the polynomial
//! bound-state families with their normalization constants, and the
//! zero-energy pair.

mod params;
mod spectrum;
mod wavefunction;
mod zero_mode;

pub use params::{potential, PotentialParams, Region, SignBranch};
pub use spectrum::{
    branch_e_squared, coefficients, energy_level, quantity_a, quantity_b, quantization_residual,
    reduce, spectrum_sweep, to_y, to_z, CoefficientSet, EnergyLevel, ReducedQuantities, SweepPoint,
};
pub use wavefunction::{
    eigenfunction_samples, matching_coefficient, norm_constant_closed_form, norm_constant_numeric,
    psi_basis, symmetric_grid, NormalizationSource, Parity, WavefunctionSamples, MAX_LEVEL,
};
pub use zero_mode::{
    zero_mode_components, zero_mode_normalizability, zero_mode_profile, ZeroModeFlags,
    ZeroModeProfile,
};

use crate::specfun::SpecfunError;
use thiserror::Error;

/// Failures of the closed-form layer.
#[derive(Debug, Error)]
pub enum SolutionError {
    /// Parameter set violates a domain requirement.
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    /// A sweep was requested over an empty axis.
    #[error("sweep needs at least one {0}")]
    EmptySweep(&'static str),
    /// Level index beyond the supported polynomial range.
    #[error("level index {got} exceeds the supported maximum {max}")]
    LevelOutOfRange { got: u32, max: u32 },
    /// The closed-form normalization constant has no value at `n = 0`.
    #[error(
        "closed-form normalization constant is undefined at n = 0: \
         its (n-1)! factor has no value there; use the numeric constant"
    )]
    ClosedFormNormUndefined,
    /// The odd family vanishes at the junction, so no finite matching
    /// coefficient reproduces the even family there.
    #[error("degenerate matching: odd family vanishes at the junction z(0) = {z0}")]
    DegenerateMatching { z0: f64 },
    /// Two quadrature orders disagreed beyond tolerance.
    #[error("quadrature orders disagree ({coarse} vs {fine}); refusing the normalization")]
    QuadratureDisagreement { coarse: f64, fine: f64 },
    /// Sampling grid malformed.
    #[error("invalid grid: {0}")]
    InvalidGrid(&'static str),
    /// Underlying special-function failure.
    #[error(transparent)]
    Specfun(#[from] SpecfunError),
}
