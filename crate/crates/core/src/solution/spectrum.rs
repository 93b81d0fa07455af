use crate::{cast, Real};

use super::{PotentialParams, Region, SignBranch, SolutionError};

/// Coefficients of the effective quadratic equation
/// `psi'' = (alpha1 x^2 + alpha2 x + alpha3) psi` obtained from the squared
/// Dirac equation with `V(x) = -v0 - gamma x`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoefficientSet<T> {
    /// `gamma^2 / (hbar c)^2`, always positive.
    pub alpha1: T,
    /// `(2 gamma / hbar^2) (v0 / c^2 - m)`.
    pub alpha2: T,
    /// Full constant term, including the squared-energy part.
    pub alpha3: T,
    /// Energy-independent part of `alpha3`.
    pub alpha3_const: T,
}

/// Builds the coefficient set at energy `e` for the upper-component
/// equation on `x > 0` (the branch whose derivative term enters with `+`).
pub fn coefficients<T: Real>(params: &PotentialParams<T>, e: T) -> CoefficientSet<T> {
    let hc = params.hbar_c();
    let h2 = params.hbar * params.hbar;
    let c2 = params.c * params.c;
    let two = cast::<T>(2.0);

    let alpha1 = (params.gamma / hc) * (params.gamma / hc);
    let alpha2 = two * params.gamma / h2 * (params.v0 / c2 - params.mass);
    let alpha3_const =
        params.v0 / h2 * (params.v0 / c2 - two * params.mass) + params.gamma / hc;
    let eps = (e * e - params.rest_energy_sq()) / (hc * hc);
    CoefficientSet {
        alpha1,
        alpha2,
        alpha3: alpha3_const + eps,
        alpha3_const,
    }
}

/// Scaled coordinate `y = (4 alpha1)^{1/4} x`.
pub fn to_y<T: Real>(x: T, coeffs: &CoefficientSet<T>) -> T {
    (cast::<T>(4.0) * coeffs.alpha1).powf(cast::<T>(0.25)) * x
}

/// Shifted cylinder coordinate `z = y + 2 alpha2 / (4 alpha1)^{3/4}`.
pub fn to_z<T: Real>(x: T, coeffs: &CoefficientSet<T>) -> T {
    let four_a1 = cast::<T>(4.0) * coeffs.alpha1;
    to_y(x, coeffs) + cast::<T>(2.0) * coeffs.alpha2 / four_a1.powf(cast::<T>(0.75))
}

/// Constant of the parabolic-cylinder form,
/// `A = alpha3 / (4 alpha1)^{1/2} - alpha2 / (4 alpha1)^{3/2}`.
pub fn quantity_a<T: Real>(coeffs: &CoefficientSet<T>) -> T {
    let four_a1 = cast::<T>(4.0) * coeffs.alpha1;
    coeffs.alpha3 / four_a1.sqrt() - coeffs.alpha2 / four_a1.powf(cast::<T>(1.5))
}

/// Scaled squared-energy offset `B = (E^2 - m^2 c^4) / (hbar c gamma)`.
pub fn quantity_b<T: Real>(params: &PotentialParams<T>, e: T) -> T {
    (e * e - params.rest_energy_sq()) / (params.hbar_c() * params.gamma)
}

/// The dimensionless quantities of the cylinder reduction at one `(x, E)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReducedQuantities<T> {
    pub y: T,
    pub z: T,
    pub a: T,
    pub b: T,
}

pub fn reduce<T: Real>(x: T, params: &PotentialParams<T>, e: T) -> ReducedQuantities<T> {
    let coeffs = coefficients(params, e);
    ReducedQuantities {
        y: to_y(x, &coeffs),
        z: to_z(x, &coeffs),
        a: quantity_a(&coeffs),
        b: quantity_b(params, e),
    }
}

/// Residual of the termination condition `A/2 + 1/4 = -n`; zero when the
/// cylinder constant sits exactly on the n-th polynomial solution.
pub fn quantization_residual<T: Real>(n: u32, coeffs: &CoefficientSet<T>) -> T {
    quantity_a(coeffs) / cast::<T>(2.0) + cast::<T>(0.25) + T::from_u32(n).unwrap()
}

/// One closed-form bound-state level.
///
/// `energy` is present exactly when `e_squared` is non-negative; the
/// `Minus` branch negates the square root.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnergyLevel<T> {
    pub n: u32,
    pub n_prime: T,
    pub region: Region,
    pub sign: SignBranch,
    pub e_squared: T,
    pub energy: Option<T>,
}

impl<T: Real> EnergyLevel<T> {
    pub fn is_real(&self) -> bool {
        self.energy.is_some()
    }

    pub(crate) fn from_e_squared(n: u32, region: Region, sign: SignBranch, e_squared: T) -> Self {
        let energy = if e_squared >= T::zero() {
            Some(sign.apply(e_squared.sqrt()))
        } else {
            None
        };
        EnergyLevel {
            n,
            n_prime: cast::<T>(2.0) * T::from_u32(n).unwrap() + cast::<T>(0.5),
            region,
            sign,
            e_squared,
            energy,
        }
    }
}

/// Squared energy of the printed spectrum branch:
/// `E^2 = 2 n' hbar c gamma + 2 m^2 c^4 -+ hbar c gamma` with
/// `n' = 2n + 1/2`, where the `-` sign belongs to `x > 0` and the `+` sign
/// to `x < 0`.
pub fn branch_e_squared<T: Real>(n: u32, region: Region, params: &PotentialParams<T>) -> T {
    let hcg = params.hbar_c() * params.gamma;
    let n_prime = cast::<T>(2.0) * T::from_u32(n).unwrap() + cast::<T>(0.5);
    let base = cast::<T>(2.0) * n_prime * hcg + cast::<T>(2.0) * params.rest_energy_sq();
    match region {
        Region::PositiveX => base - hcg,
        Region::NegativeX => base + hcg,
    }
}

/// Closed-form level `n` on the chosen region and sign branch.
pub fn energy_level<T: Real>(
    n: u32,
    region: Region,
    sign: SignBranch,
    params: &PotentialParams<T>,
) -> EnergyLevel<T> {
    EnergyLevel::from_e_squared(n, region, sign, branch_e_squared(n, region, params))
}

/// One `(gamma, level)` entry of a spectrum sweep.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepPoint<T> {
    pub gamma: T,
    pub level: EnergyLevel<T>,
}

/// Plus-branch levels for every `(gamma, n)` pair, ordered by `gamma` then
/// `n`. Every slope must be nonzero and both lists nonempty.
pub fn spectrum_sweep<T: Real>(
    n_values: &[u32],
    gamma_values: &[T],
    region: Region,
    base: &PotentialParams<T>,
) -> Result<Vec<SweepPoint<T>>, SolutionError> {
    if n_values.is_empty() {
        return Err(SolutionError::EmptySweep("n values"));
    }
    if gamma_values.is_empty() {
        return Err(SolutionError::EmptySweep("gamma values"));
    }
    let mut out = Vec::with_capacity(n_values.len() * gamma_values.len());
    for &gamma in gamma_values {
        let params = base.with_gamma(gamma)?;
        for &n in n_values {
            out.push(SweepPoint {
                gamma,
                level: energy_level(n, region, SignBranch::Plus, &params),
            });
        }
    }
    Ok(out)
}
