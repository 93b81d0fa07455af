use serde::Serialize;

use crate::solution::{PotentialParams, Region};
use crate::{cast, Real};

use super::{discretize, effective_problem, Component, GridSpec, OracleError};

/// Finite-difference spectrum of one region's upper-component problem.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OracleSpectrum<T> {
    /// Raw matrix eigenvalues `mu_j`, ascending.
    pub mu: Vec<T>,
    /// `E^2_j = m^2 c^4 - (hbar c)^2 mu_j`, descending.
    pub e_squared: Vec<T>,
    /// Set when an eigenvector keeps noticeable amplitude at the wall,
    /// meaning the box is too small for that state.
    pub domain_warning: bool,
}

/// Relative wall amplitude above which a state counts as truncated.
const WALL_AMPLITUDE_LIMIT: f64 = 1e-8;

/// Solves the upper-component problem of `region` on `grid` for the lowest
/// `count` eigenvalues and maps them to squared energies.
pub fn oracle_levels<T: Real>(
    region: Region,
    params: &PotentialParams<T>,
    grid: &GridSpec<T>,
    count: usize,
) -> Result<OracleSpectrum<T>, OracleError> {
    let problem = effective_problem(region, Component::Upper, params);
    let matrix = discretize(&problem, grid);
    let mu = matrix.lowest_eigenvalues(count)?;

    let hc2 = {
        let hc = params.hbar_c();
        hc * hc
    };
    let e_squared = mu
        .iter()
        .map(|&m| params.rest_energy_sq() - hc2 * m)
        .collect();

    let mut domain_warning = false;
    for &m in &mu {
        let v = matrix.inverse_iteration(m, 3);
        let peak = v.iter().fold(T::zero(), |acc, &x| acc.max(x.abs()));
        let wall = v[0].abs().max(v[v.len() - 1].abs());
        if wall > cast::<T>(WALL_AMPLITUDE_LIMIT) * peak {
            domain_warning = true;
            break;
        }
    }

    Ok(OracleSpectrum {
        mu,
        e_squared,
        domain_warning,
    })
}

/// Result of matching the upper-component spectrum against the
/// lower-component one. The two wells differ only by a constant, so their
/// spectra should coincide level-for-level up to that constant offset.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PartnerPairing<T> {
    /// Constant offset between the matched sequences: the mean of the
    /// pairwise `upper - lower` eigenvalue differences.
    pub shift: T,
    /// Largest departure of any pairwise difference from `shift`.
    pub max_deviation: T,
    /// Pairwise `upper - lower` differences, in level order.
    pub differences: Vec<T>,
    /// Matched `(upper, lower)` eigenvalues.
    pub pairs: Vec<(T, T)>,
    /// Levels left unmatched across both lists.
    pub discarded: usize,
}

/// Solves both component problems of `region` for `count` eigenvalues each
/// and matches them. Candidate matchings may discard one extremal level from
/// either list; the winner has the most nearly constant difference sequence
/// (smallest spread), with ties going to the matching discarding less.
pub fn partner_pairing_check<T: Real>(
    region: Region,
    params: &PotentialParams<T>,
    count: usize,
    grid: &GridSpec<T>,
) -> Result<PartnerPairing<T>, OracleError> {
    let upper = discretize(&effective_problem(region, Component::Upper, params), grid)
        .lowest_eigenvalues(count)?;
    let lower = discretize(&effective_problem(region, Component::Lower, params), grid)
        .lowest_eigenvalues(count)?;
    pair_spectra(&upper, &lower)
}

/// Matches two precomputed spectra as described on [`partner_pairing_check`].
pub fn pair_spectra<T: Real>(upper: &[T], lower: &[T]) -> Result<PartnerPairing<T>, OracleError> {
    if upper.is_empty() || lower.is_empty() {
        return Err(OracleError::EmptySpectrum(
            "pairing needs both component spectra",
        ));
    }
    // offset = how far the lower list leads: upper[i] pairs with
    // lower[i + offset]; +1/-1 drop one extremal level from each list.
    let candidate = |offset: i64| -> Option<(PartnerPairing<T>, T)> {
        let mut pairs = Vec::new();
        let mut differences: Vec<T> = Vec::new();
        for (i, &u) in upper.iter().enumerate() {
            let j = i as i64 + offset;
            if j < 0 || j >= lower.len() as i64 {
                continue;
            }
            let l = lower[j as usize];
            pairs.push((u, l));
            differences.push(u - l);
        }
        if pairs.is_empty() {
            return None;
        }
        let (lo, hi) = differences.iter().fold(
            (T::infinity(), T::neg_infinity()),
            |(lo, hi), &d| (lo.min(d), hi.max(d)),
        );
        let spread = hi - lo;
        let shift = differences.iter().fold(T::zero(), |acc, &d| acc + d)
            / crate::from_usize::<T>(differences.len());
        let max_deviation = differences
            .iter()
            .fold(T::zero(), |acc, &d| acc.max((d - shift).abs()));
        let discarded = upper.len() + lower.len() - 2 * pairs.len();
        Some((
            PartnerPairing {
                shift,
                max_deviation,
                differences,
                pairs,
                discarded,
            },
            spread,
        ))
    };
    let mut best: Option<(PartnerPairing<T>, T)> = None;
    for offset in [0, 1, -1] {
        let Some((c, c_spread)) = candidate(offset) else {
            continue;
        };
        best = Some(match best.take() {
            None => (c, c_spread),
            Some((b, b_spread)) => {
                let tie = cast::<T>(1e-8) * (T::one() + b_spread.min(c_spread));
                let better = c_spread < b_spread - tie
                    || ((c_spread - b_spread).abs() <= tie && c.discarded < b.discarded);
                if better {
                    (c, c_spread)
                } else {
                    (b, b_spread)
                }
            }
        });
    }
    best.map(|(p, _)| p)
        .ok_or(OracleError::EmptySpectrum("no overlapping pairing exists"))
}
