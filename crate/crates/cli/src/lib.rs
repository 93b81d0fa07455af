//! Rendering layer behind the `dirac1d` binary: pure functions that turn
//! library results into the CSV, JSON and summary text the commands write.
//! Everything here is deterministic, so identical inputs yield byte-identical
//! output.

use std::fmt::Write as _;

use dirac1d_core::oracle::{verify, GridSpec, OracleError, VerifyMode};
use dirac1d_core::solution::{
    eigenfunction_samples, energy_level, spectrum_sweep, symmetric_grid, zero_mode_components,
    zero_mode_profile, PotentialParams, Region, SignBranch, SolutionError,
};
use thiserror::Error;

/// Concrete scalar used by the binary.
pub type Params = PotentialParams<f64>;

/// Failures the binary maps to its usage/validation exit code.
#[derive(Debug, Error)]
pub enum CliError {
    /// An option combination fails validation before any computation.
    #[error("{0}")]
    Usage(String),
    /// Closed-form layer rejection.
    #[error(transparent)]
    Solution(#[from] SolutionError),
    /// Audit layer rejection.
    #[error(transparent)]
    Oracle(#[from] OracleError),
    /// Report serialization failure.
    #[error("could not serialize the report: {0}")]
    Json(#[from] serde_json::Error),
}

/// Renders a value with 12 significant digits; non-finite values (non-real
/// energies) render as `nan`.
pub fn format_float(v: f64) -> String {
    if v.is_finite() {
        format!("{v:.11e}")
    } else {
        "nan".to_string()
    }
}

fn region_name(region: Region) -> &'static str {
    match region {
        Region::PositiveX => "pos",
        Region::NegativeX => "neg",
    }
}

/// Builds and validates the physical parameter set from raw flag values.
pub fn build_params(mass: f64, c: f64, hbar: f64, v0: f64, gamma: f64) -> Result<Params, CliError> {
    Ok(PotentialParams::new(mass, c, hbar, v0, gamma)?)
}

/// Uniform slope sweep `min, min + step, ...` up to `max` inclusive (within
/// one part in 10^9 of a step, so binary rounding cannot drop the endpoint).
pub fn gamma_values(min: f64, max: f64, step: f64) -> Result<Vec<f64>, CliError> {
    if !min.is_finite() || !max.is_finite() || !step.is_finite() {
        return Err(CliError::Usage("gamma range must be finite".into()));
    }
    if step <= 0.0 {
        return Err(CliError::Usage("gamma step must be positive".into()));
    }
    if max <= min {
        return Err(CliError::Usage(
            "gamma range must have positive length".into(),
        ));
    }
    let count = ((max - min) / step + 1e-9).floor() as usize + 1;
    let values: Vec<f64> = (0..count).map(|i| min + i as f64 * step).collect();
    if values.contains(&0.0) {
        return Err(CliError::Usage(
            "gamma sweep must not pass through zero".into(),
        ));
    }
    Ok(values)
}

/// CSV of plus-branch energy curves over a slope sweep, one row per
/// `(gamma, n, region)` in that nesting order. `E_minus` mirrors `E_plus`
/// and both render as `nan` on non-real levels.
pub fn spectrum_csv(
    base: &Params,
    gammas: &[f64],
    levels: &[u32],
    regions: &[Region],
) -> Result<String, CliError> {
    if regions.is_empty() {
        return Err(CliError::Usage("need at least one region".into()));
    }
    let sweeps = regions
        .iter()
        .map(|&r| spectrum_sweep(levels, gammas, r, base))
        .collect::<Result<Vec<_>, _>>()?;
    let mut out = String::from("gamma,n,region,E_plus,E_minus,real\n");
    for (gi, &gamma) in gammas.iter().enumerate() {
        for (ni, &n) in levels.iter().enumerate() {
            for (ri, &region) in regions.iter().enumerate() {
                let level = sweeps[ri][gi * levels.len() + ni].level;
                let (e_plus, e_minus) = match level.energy {
                    Some(e) => (format_float(e), format_float(-e)),
                    None => ("nan".to_string(), "nan".to_string()),
                };
                writeln!(
                    out,
                    "{},{},{},{},{},{}",
                    format_float(gamma),
                    n,
                    region_name(region),
                    e_plus,
                    e_minus,
                    level.is_real()
                )
                .expect("writing to a String cannot fail");
            }
        }
    }
    Ok(out)
}

/// CSV of normalized bound-state profiles, one block per requested level,
/// each sampled on the shared symmetric grid. `psi` is the upper component;
/// `density` is the pointwise squared sum of both components.
pub fn wavefunction_csv(
    params: &Params,
    levels: &[u32],
    z_min: f64,
    z_max: f64,
    points: usize,
) -> Result<String, CliError> {
    if levels.is_empty() {
        return Err(CliError::Usage("need at least one level".into()));
    }
    let grid = symmetric_grid(z_min, z_max, points)?;
    let mut out = String::from("z,n,psi,density\n");
    for &n in levels {
        // The sampled shape is energy-free; the plus branch merely labels it.
        let energy = energy_level(n, Region::PositiveX, SignBranch::Plus, params)
            .energy
            .unwrap_or(0.0);
        let samples = eigenfunction_samples(n, &grid, params, energy)?;
        for i in 0..grid.len() {
            writeln!(
                out,
                "{},{},{},{}",
                format_float(samples.positions[i]),
                n,
                format_float(samples.upper[i]),
                format_float(samples.density[i]),
            )
            .expect("writing to a String cannot fail");
        }
    }
    Ok(out)
}

/// Zero-mode deliverable: a CSV sampling the unnormalized component pair and
/// a key=value summary of normalizability and normalization constants.
pub struct ZeroModeOutput {
    pub csv: String,
    pub summary: String,
}

pub fn zeromode_outputs(
    params: &Params,
    half_width: f64,
    points: usize,
) -> Result<ZeroModeOutput, CliError> {
    if !half_width.is_finite() || half_width <= 0.0 {
        return Err(CliError::Usage(
            "half width must be positive and finite".into(),
        ));
    }
    let grid = symmetric_grid(-half_width, half_width, points)?;
    let mut csv = String::from("x,psi,phi\n");
    for &x in &grid {
        let (psi, phi) = zero_mode_components(x, params);
        writeln!(
            csv,
            "{},{},{}",
            format_float(x),
            format_float(psi),
            format_float(phi)
        )
        .expect("writing to a String cannot fail");
    }

    let profile = zero_mode_profile(params);
    let f = profile.flags;
    let mut summary = String::new();
    writeln!(summary, "psi_normalizable_pos={}", f.psi_normalizable_pos).unwrap();
    writeln!(summary, "psi_normalizable_neg={}", f.psi_normalizable_neg).unwrap();
    writeln!(summary, "phi_normalizable_pos={}", f.phi_normalizable_pos).unwrap();
    writeln!(summary, "phi_normalizable_neg={}", f.phi_normalizable_neg).unwrap();
    writeln!(summary, "norm_numeric={}", format_float(profile.norm_numeric)).unwrap();
    writeln!(
        summary,
        "norm_as_printed={}",
        profile
            .norm_as_printed
            .map_or_else(|| "nan".to_string(), format_float)
    )
    .unwrap();
    writeln!(summary, "as_printed_invalid={}", profile.as_printed_invalid).unwrap();
    Ok(ZeroModeOutput { csv, summary })
}

/// Box for the audit: an explicit half width if given, otherwise the
/// parameter-scaled default, with the requested node count in either case.
pub fn verification_grid(
    params: &Params,
    half_width: Option<f64>,
    points: usize,
) -> Result<GridSpec<f64>, CliError> {
    let width = half_width.unwrap_or_else(|| GridSpec::default_for(params).half_width);
    Ok(GridSpec::new(width, points)?)
}

/// Audit deliverable: the JSON report, a human-readable digest, and the
/// domain flag the binary escalates under `--strict`.
pub struct VerifyOutput {
    pub json: String,
    pub summary: String,
    pub domain_warning: bool,
}

pub fn verify_outputs(
    params: &Params,
    grid: &GridSpec<f64>,
    n_max: u32,
    mode: VerifyMode,
) -> Result<VerifyOutput, CliError> {
    let report = verify(params, grid, n_max, mode)?;
    let json = format!("{}\n", serde_json::to_string_pretty(&report)?);

    let c = report.classifications;
    let mut summary = String::new();
    writeln!(
        summary,
        "audited levels n = 0..={n_max} in both half-line conventions ({} records)",
        report.levels.len()
    )
    .unwrap();
    writeln!(
        summary,
        "match={} sign_flip={} mismatch={} non_real_formula={} non_real_oracle={}",
        c.matches, c.sign_flip, c.mismatch, c.non_real_formula, c.non_real_oracle
    )
    .unwrap();
    writeln!(
        summary,
        "partner_shift_pos={} partner_shift_neg={}",
        format_float(report.partner_check.pos.shift),
        format_float(report.partner_check.neg.shift)
    )
    .unwrap();
    writeln!(summary, "domain_warning={}", report.domain_warning).unwrap();
    Ok(VerifyOutput {
        json,
        summary,
        domain_warning: report.domain_warning,
    })
}
