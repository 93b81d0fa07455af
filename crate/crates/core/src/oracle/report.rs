use serde::Serialize;

use crate::solution::{
    branch_e_squared, coefficients, quantization_residual, PotentialParams, Region,
};
use crate::{cast, Real};

use super::{
    completed_square_spectrum, discretize, effective_problem, oracle_levels, pair_spectra,
    Component, GridSpec, OracleError, PartnerPairing,
};

/// What the finite-difference eigenvalues are audited against.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum VerifyMode {
    /// The printed closed-form branches; disagreements are the finding.
    Formulas,
    /// The completed-square levels of the same wells; must come back all
    /// `match`, validating the solver itself.
    SelfConsistency,
}

/// Outcome of auditing one level.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Classification {
    /// Agrees with the oracle within tolerance.
    Match,
    /// Agrees with the oracle reflected about the well-floor energy,
    /// pointing at one sign in the reduction.
    SignFlip,
    /// A real level on both sides that agrees under no candidate mapping.
    Mismatch,
    /// The audited expression gives a negative squared energy.
    NonRealFormula,
    /// The oracle level sits below zero squared energy.
    NonRealOracle,
}

/// One audited level.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LevelRecord<T> {
    pub n: u32,
    pub region: Region,
    pub formula_e_squared: T,
    pub oracle_e_squared: T,
    pub completed_square_e_squared: T,
    pub abs_diff: T,
    pub rel_diff: T,
    pub quantization_residual: T,
    pub classification: Classification,
}

/// Tally of level classifications.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct ClassificationCounts {
    #[serde(rename = "match")]
    pub matches: usize,
    pub sign_flip: usize,
    pub mismatch: usize,
    pub non_real_formula: usize,
    pub non_real_oracle: usize,
}

impl ClassificationCounts {
    fn record(&mut self, c: Classification) {
        match c {
            Classification::Match => self.matches += 1,
            Classification::SignFlip => self.sign_flip += 1,
            Classification::Mismatch => self.mismatch += 1,
            Classification::NonRealFormula => self.non_real_formula += 1,
            Classification::NonRealOracle => self.non_real_oracle += 1,
        }
    }

    pub fn total(&self) -> usize {
        self.matches + self.sign_flip + self.mismatch + self.non_real_formula
            + self.non_real_oracle
    }
}

/// Partner pairing outcome for each half-line convention.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PartnerChecks<T> {
    pub pos: PartnerPairing<T>,
    pub neg: PartnerPairing<T>,
}

/// Complete audit artifact; serializes to the JSON discrepancy report.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport<T> {
    pub params: PotentialParams<T>,
    pub mode: VerifyMode,
    pub grid: GridSpec<T>,
    pub domain_warning: bool,
    pub levels: Vec<LevelRecord<T>>,
    pub partner_check: PartnerChecks<T>,
    pub classifications: ClassificationCounts,
}

/// Relative tolerance separating `Match`/`SignFlip` from `Mismatch`.
const CLASSIFY_TOL: f64 = 1e-3;

fn classify<T: Real>(
    formula: T,
    oracle: T,
    reflection_center: T,
    scale: T,
    check_real: bool,
) -> Classification {
    let tol = cast::<T>(CLASSIFY_TOL);
    if check_real && formula < T::zero() {
        return Classification::NonRealFormula;
    }
    if (formula - oracle).abs() / scale < tol {
        return Classification::Match;
    }
    let reflected = cast::<T>(2.0) * reflection_center - oracle;
    if (formula - reflected).abs() / scale < tol {
        return Classification::SignFlip;
    }
    if check_real && oracle < T::zero() {
        return Classification::NonRealOracle;
    }
    Classification::Mismatch
}

/// Residual of the printed termination condition evaluated at a squared
/// energy, without requiring the energy itself to be real.
fn residual_at_e_squared<T: Real>(n: u32, params: &PotentialParams<T>, e_squared: T) -> T {
    let mut coeffs = coefficients(params, T::zero());
    let hc = params.hbar_c();
    coeffs.alpha3 = coeffs.alpha3_const + (e_squared - params.rest_energy_sq()) / (hc * hc);
    quantization_residual(n, &coeffs)
}

/// Audits levels `0..=n_max` of both half-line conventions against the
/// finite-difference oracle on `grid`, pairing the component spectra and
/// classifying every comparison.
pub fn verify<T: Real>(
    params: &PotentialParams<T>,
    grid: &GridSpec<T>,
    n_max: u32,
    mode: VerifyMode,
) -> Result<VerificationReport<T>, OracleError> {
    let count = n_max as usize + 1;
    let hc2 = {
        let hc = params.hbar_c();
        hc * hc
    };
    let e2_of_mu = |mu: T| params.rest_energy_sq() - hc2 * mu;

    let mut levels = Vec::with_capacity(2 * count);
    let mut counts = ClassificationCounts::default();
    let mut domain_warning = false;
    let mut pairings = Vec::with_capacity(2);

    for region in [Region::PositiveX, Region::NegativeX] {
        let spectrum = oracle_levels(region, params, grid, count)?;
        domain_warning |= spectrum.domain_warning;

        let problem = effective_problem(region, Component::Upper, params);
        let cs_mu = completed_square_spectrum(&problem, count);

        let lower_mu = discretize(&effective_problem(region, Component::Lower, params), grid)
            .lowest_eigenvalues(count)?;
        pairings.push(pair_spectra(&spectrum.mu, &lower_mu)?);

        // Reflection center: squared energy of the well floor with the
        // slope term removed, the fixed point of flipping the energy-
        // dependent part of the reduction.
        let hbar2 = params.hbar * params.hbar;
        let base = params.v0 / hbar2 * (params.v0 / (params.c * params.c)
            - cast::<T>(2.0) * params.mass);
        let q = problem.well;
        let center = e2_of_mu(base - q.a1 * q.a1 / (cast::<T>(4.0) * q.a2));

        for n in 0..=n_max {
            let j = n as usize;
            let completed_square_e_squared = e2_of_mu(cs_mu[j]);
            let formula_e_squared = match mode {
                VerifyMode::Formulas => branch_e_squared(n, region, params),
                VerifyMode::SelfConsistency => completed_square_e_squared,
            };
            let oracle_e_squared = spectrum.e_squared[j];
            let abs_diff = (formula_e_squared - oracle_e_squared).abs();
            let scale = formula_e_squared
                .abs()
                .max(oracle_e_squared.abs())
                .max(params.energy_sq_scale());
            // Realness only means anything when the formula side is a
            // physical squared energy.
            let check_real = mode == VerifyMode::Formulas;
            let classification =
                classify(formula_e_squared, oracle_e_squared, center, scale, check_real);
            counts.record(classification);
            levels.push(LevelRecord {
                n,
                region,
                formula_e_squared,
                oracle_e_squared,
                completed_square_e_squared,
                abs_diff,
                rel_diff: abs_diff / scale,
                quantization_residual: residual_at_e_squared(n, params, formula_e_squared),
                classification,
            });
        }
    }

    let neg = pairings.pop().expect("two regions visited");
    let pos = pairings.pop().expect("two regions visited");
    Ok(VerificationReport {
        params: *params,
        mode,
        grid: *grid,
        domain_warning,
        levels,
        partner_check: PartnerChecks { pos, neg },
        classifications: counts,
    })
}
