use serde::Serialize;

use crate::specfun::{factorial, gauss_hermite_rule, kummer_1f1};
use crate::{cast, Real};

use super::{coefficients, to_z, PotentialParams, SolutionError};

/// Parity family of the polynomial bound-state solutions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

/// Largest level index for the polynomial families; keeps the equivalent
/// Hermite degree `2n (+1)` inside the supported polynomial range.
pub const MAX_LEVEL: u32 = 85;

fn check_level(n: u32) -> Result<(), SolutionError> {
    if n > MAX_LEVEL {
        return Err(SolutionError::LevelOutOfRange {
            got: n,
            max: MAX_LEVEL,
        });
    }
    Ok(())
}

/// Unnormalized bound-state family in the cylinder coordinate `z`:
///
/// * `Even`: `exp(-z^2/4) 1F1(-n; 1/2; z^2/2)`, spanning `H_{2n}(z/sqrt 2)`;
/// * `Odd`: the same profile multiplied by `z`.
pub fn psi_basis<T: Real>(n: u32, z: T, parity: Parity) -> Result<T, SolutionError> {
    check_level(n)?;
    let half = cast::<T>(0.5);
    let series = kummer_1f1(-T::from_u32(n).unwrap(), half, half * z * z)?;
    let envelope = (-z * z / cast::<T>(4.0)).exp();
    Ok(match parity {
        Parity::Even => envelope * series,
        Parity::Odd => z * envelope * series,
    })
}

/// Closed-form normalization constant
/// `N = 1/((n-1)! (-1)^n) sqrt((2n-1)! / (n 2^{2n-1} sqrt(pi)))`.
///
/// The expression requires `n >= 1`; at `n = 0` the `(n-1)!` factor is
/// undefined and the numeric constant must be used instead.
pub fn norm_constant_closed_form<T: Real>(n: u32) -> Result<T, SolutionError> {
    if n == 0 {
        return Err(SolutionError::ClosedFormNormUndefined);
    }
    check_level(n)?;
    let sign = if n.is_multiple_of(2) { T::one() } else { -T::one() };
    let n_minus: T = factorial(n - 1)?;
    let two_n_minus: T = factorial(2 * n - 1)?;
    let denom = T::from_u32(n).unwrap() * cast::<T>(2.0).powi(2 * n as i32 - 1) * T::PI().sqrt();
    Ok((two_n_minus / denom).sqrt() / (n_minus * sign))
}

/// Integrates `P(t^2)^2 (1 + extra t^2)` against `exp(-t^2)` where `P` is
/// the even-family polynomial factor of order `n`, comparing two
/// quadrature orders. Returns the integral of the squared family over the
/// cylinder coordinate (the `sqrt 2` Jacobian is included).
fn family_norm_integral<T: Real>(n: u32, extra: T) -> Result<T, SolutionError> {
    let poly = |t: T| kummer_1f1(-T::from_u32(n).unwrap(), cast::<T>(0.5), t * t);
    let order_lo = (2 * n as usize + 2).clamp(64, 112);
    let order_hi = order_lo + 16;
    let mut values = [T::zero(); 2];
    for (slot, order) in values.iter_mut().zip([order_lo, order_hi]) {
        let rule = gauss_hermite_rule::<T>(order)?;
        let mut acc = T::zero();
        for (&t, &w) in rule.nodes().iter().zip(rule.weights()) {
            let p = poly(t)?;
            acc = acc + w * p * p * (T::one() + extra * t * t);
        }
        *slot = acc * cast::<T>(2.0).sqrt();
    }
    let [lo, hi] = values;
    if (lo - hi).abs() > cast::<T>(1e-8) * hi.abs() {
        return Err(SolutionError::QuadratureDisagreement {
            coarse: lo.to_f64().unwrap_or(f64::NAN),
            fine: hi.to_f64().unwrap_or(f64::NAN),
        });
    }
    Ok(hi)
}

/// Positive constant `c` giving the even family unit squared integral over
/// the cylinder coordinate, evaluated by Gauss-Hermite quadrature at two
/// orders that must agree to relative `1e-8`.
pub fn norm_constant_numeric<T: Real>(
    n: u32,
    _params: &PotentialParams<T>,
) -> Result<T, SolutionError> {
    check_level(n)?;
    Ok(family_norm_integral(n, T::zero())?.sqrt().recip())
}

/// Continuity constant `kappa` with
/// `kappa * odd(z(0)) = even(z(0))`, the junction condition tying the two
/// half-line families together at the origin.
pub fn matching_coefficient<T: Real>(
    n: u32,
    params: &PotentialParams<T>,
) -> Result<T, SolutionError> {
    // z(0) depends only on the energy-free coefficients.
    let coeffs = coefficients(params, T::zero());
    let z0 = to_z(T::zero(), &coeffs);
    let odd = psi_basis(n, z0, Parity::Odd)?;
    let even = psi_basis(n, z0, Parity::Even)?;
    if odd.abs() < cast::<T>(1e-13) {
        return Err(SolutionError::DegenerateMatching {
            z0: z0.to_f64().unwrap_or(f64::NAN),
        });
    }
    Ok(even / odd)
}

/// How a set of wavefunction samples was normalized.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum NormalizationSource {
    /// The closed-form constant of the even family.
    ClosedForm,
    /// Quadrature normalization of the sampled spinor.
    Numeric,
    /// The zero-mode closed-form constant (magnitude-substituted).
    ZeroModeClosedForm,
}

/// Spinor samples over a grid in the scaled coordinate `t = z / sqrt 2`,
/// in which the even family reads `H_{2n}(t) exp(-t^2/2)` up to a constant.
///
/// `density = upper^2 + lower^2` pointwise and `norm` is the trapezoid
/// integral of the density over the grid.
#[derive(Debug, Clone, PartialEq)]
pub struct WavefunctionSamples<T> {
    pub positions: Vec<T>,
    pub upper: Vec<T>,
    pub lower: Vec<T>,
    pub density: Vec<T>,
    pub norm: T,
    pub source: NormalizationSource,
}

fn trapezoid<T: Real>(x: &[T], y: &[T]) -> T {
    let mut acc = T::zero();
    for i in 1..x.len() {
        acc = acc + (y[i] + y[i - 1]) * (x[i] - x[i - 1]) / cast::<T>(2.0);
    }
    acc
}

/// Samples the level-`n` spinor on a grid in the scaled coordinate.
///
/// The upper component is the even family; the lower component is the
/// matching constant times the odd family, or zero when the junction is
/// degenerate. Both are scaled together so the total density integrates
/// to one, which is recorded in `norm` via the trapezoid rule on the grid.
///
/// `energy` fixes the coefficient set; the scaled coordinate itself is
/// energy-free, so the sampled shape depends on it only through the
/// parameters.
pub fn eigenfunction_samples<T: Real>(
    n: u32,
    grid: &[T],
    params: &PotentialParams<T>,
    energy: T,
) -> Result<WavefunctionSamples<T>, SolutionError> {
    check_level(n)?;
    if grid.len() < 2 {
        return Err(SolutionError::InvalidGrid("need at least two positions"));
    }
    if grid.iter().any(|z| !z.is_finite()) {
        return Err(SolutionError::InvalidGrid("positions must be finite"));
    }
    if grid.windows(2).any(|w| w[1] <= w[0]) {
        return Err(SolutionError::InvalidGrid(
            "positions must be strictly increasing",
        ));
    }

    let _ = coefficients(params, energy);
    let kappa = match matching_coefficient(n, params) {
        Ok(k) => k,
        Err(SolutionError::DegenerateMatching { .. }) => T::zero(),
        Err(e) => return Err(e),
    };

    // Joint normalization over the scaled coordinate: the odd-family factor
    // z = sqrt(2) t contributes 2 t^2 against the even family's weight.
    let total = family_norm_integral(n, cast::<T>(2.0) * kappa * kappa)?;
    // family_norm_integral carries the cylinder-coordinate Jacobian; undo it
    // for the scaled-coordinate measure.
    let scale = (total / cast::<T>(2.0).sqrt()).sqrt().recip();

    let sqrt2 = cast::<T>(2.0).sqrt();
    let mut upper = Vec::with_capacity(grid.len());
    let mut lower = Vec::with_capacity(grid.len());
    let mut density = Vec::with_capacity(grid.len());
    for &t in grid {
        let z = sqrt2 * t;
        let u = scale * psi_basis(n, z, Parity::Even)?;
        let l = scale * kappa * psi_basis(n, z, Parity::Odd)?;
        upper.push(u);
        lower.push(l);
        density.push(u * u + l * l);
    }
    let norm = trapezoid(grid, &density);
    Ok(WavefunctionSamples {
        positions: grid.to_vec(),
        upper,
        lower,
        density,
        norm,
        source: NormalizationSource::Numeric,
    })
}

/// Uniform grid of `points` positions on `[lo, hi]`, mirrored about the
/// midpoint so symmetric ranges are antisymmetric to the last bit.
pub fn symmetric_grid<T: Real>(lo: T, hi: T, points: usize) -> Result<Vec<T>, SolutionError> {
    if points < 2 {
        return Err(SolutionError::InvalidGrid("need at least two positions"));
    }
    if !lo.is_finite() || !hi.is_finite() || hi <= lo {
        return Err(SolutionError::InvalidGrid("range must have positive length"));
    }
    let n = points - 1;
    let h = (hi - lo) / T::from_usize(n).unwrap();
    let mid = (lo + hi) / cast::<T>(2.0);
    let mut grid = vec![T::zero(); points];
    for i in 0..points / 2 {
        let x = lo + T::from_usize(i).unwrap() * h;
        grid[i] = x;
        grid[n - i] = (lo + hi) - x;
    }
    if points % 2 == 1 {
        grid[n / 2] = mid;
    }
    Ok(grid)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::hermite;
    use approx::{assert_abs_diff_eq, assert_relative_eq};

    fn natural() -> PotentialParams<f64> {
        PotentialParams::default()
    }

    #[test]
    fn basis_at_origin() {
        assert_eq!(psi_basis(0, 0.0_f64, Parity::Even).unwrap(), 1.0);
        assert_eq!(psi_basis(4, 0.0_f64, Parity::Odd).unwrap(), 0.0);
    }

    #[test]
    fn basis_even_example() {
        // n = 1, z = 2: exp(-1) (1 - 4) = -3/e
        let v = psi_basis(1, 2.0_f64, Parity::Even).unwrap();
        assert_relative_eq!(v, -3.0 * (-1.0_f64).exp(), max_relative = 1e-14);
        // equal to -(H_2(sqrt 2)/2) exp(-1)
        let h2 = hermite(2, 2.0_f64.sqrt()).unwrap();
        assert_relative_eq!(v, -h2 / 2.0 * (-1.0_f64).exp(), max_relative = 1e-13);
    }

    #[test]
    fn odd_family_is_z_times_even() {
        for &z in &[-2.5_f64, -0.3, 0.7, 1.9] {
            let even = psi_basis(3, z, Parity::Even).unwrap();
            let odd = psi_basis(3, z, Parity::Odd).unwrap();
            assert_relative_eq!(odd, z * even, max_relative = 1e-14);
        }
    }

    #[test]
    fn basis_matches_hermite_form() {
        // 1F1(-n; 1/2; z^2/2) = (-1)^n n!/(2n)! H_{2n}(z/sqrt 2), so the
        // ratio of the even family to exp(-z^2/4) H_{2n}(z/sqrt 2) is a
        // constant in z.
        for n in 0..=6u32 {
            let expect = {
                let nf: f64 = factorial(n).unwrap();
                let tnf: f64 = factorial(2 * n).unwrap();
                let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
                sign * nf / tnf
            };
            for k in 0..20 {
                let z = 0.11 + 0.09 * k as f64;
                let basis = psi_basis(n, z, Parity::Even).unwrap();
                let hermite_form =
                    (-z * z / 4.0_f64).exp() * hermite(2 * n, z / 2.0_f64.sqrt()).unwrap();
                let ratio = basis / hermite_form;
                assert_relative_eq!(ratio, expect, max_relative = 1e-10);
            }
        }
    }

    #[test]
    fn basis_level_guard() {
        assert!(psi_basis(85, 0.5_f64, Parity::Even).is_ok());
        assert!(psi_basis(86, 0.5_f64, Parity::Even).is_err());
    }

    #[test]
    fn closed_form_norm_values() {
        // n = 1: -(1/1) sqrt(1!/(1 * 2 * sqrt(pi))) = -1/sqrt(2 sqrt(pi))
        let n1: f64 = norm_constant_closed_form(1).unwrap();
        assert_relative_eq!(
            n1,
            -1.0 / (2.0 * core::f64::consts::PI.sqrt()).sqrt(),
            max_relative = 1e-14
        );
        // n = 2: +sqrt(3!/(2 * 8 * sqrt(pi)))
        let n2: f64 = norm_constant_closed_form(2).unwrap();
        assert_relative_eq!(
            n2,
            (6.0 / (16.0 * core::f64::consts::PI.sqrt())).sqrt(),
            max_relative = 1e-14
        );
    }

    #[test]
    fn closed_form_norm_undefined_at_zero() {
        let err = norm_constant_closed_form::<f64>(0).unwrap_err();
        assert!(err.to_string().contains("(n-1)!"));
    }

    #[test]
    fn numeric_norm_ground_state() {
        // integral exp(-z^2/2) dz = sqrt(2 pi), so c = (2 pi)^{-1/4}.
        let c = norm_constant_numeric(0, &natural()).unwrap();
        assert_relative_eq!(
            c,
            (2.0 * core::f64::consts::PI).powf(-0.25),
            max_relative = 1e-12
        );
    }

    #[test]
    fn numeric_norm_normalizes_even_family() {
        // Dense trapezoid as an independent check of unit norm, n <= 6.
        for n in 0..=6u32 {
            let c = norm_constant_numeric(n, &natural()).unwrap();
            let lo = -20.0_f64;
            let steps = 200_000usize;
            let h = -2.0 * lo / steps as f64;
            let mut acc = 0.0;
            for i in 0..=steps {
                let z = lo + i as f64 * h;
                let v = c * psi_basis(n, z, Parity::Even).unwrap();
                let w = if i == 0 || i == steps { 0.5 } else { 1.0 };
                acc += w * v * v * h;
            }
            assert_relative_eq!(acc, 1.0, max_relative = 1e-6);
        }
    }

    #[test]
    fn closed_form_offset_from_numeric_is_constant() {
        // |N_closed(n)| = 2^{5/4} c_num(n) (n!/(2n)!) (2n-1)!/(n-1)!; the
        // closed form sits a constant factor 2^{5/4} above the constant
        // that would give the unit-norm Hermite profile.
        let offset = 2.0_f64.powf(1.25);
        for n in 1..=6u32 {
            let closed: f64 = norm_constant_closed_form(n).unwrap();
            let numeric = norm_constant_numeric(n, &natural()).unwrap();
            let nf: f64 = factorial(n).unwrap();
            let tnf: f64 = factorial(2 * n).unwrap();
            let n1f: f64 = factorial(n - 1).unwrap();
            let tn1f: f64 = factorial(2 * n - 1).unwrap();
            let expected = offset * numeric * (nf / tnf) * (tn1f / n1f);
            assert_relative_eq!(closed.abs(), expected, max_relative = 1e-10);
            assert_eq!(closed < 0.0, n % 2 == 1);
        }
    }

    #[test]
    fn matching_example() {
        // Natural units: z(0) = -sqrt 2 and the families differ by the
        // factor z, so kappa = 1/z(0) = -1/sqrt 2 at n = 0.
        let kappa = matching_coefficient(0, &natural()).unwrap();
        assert_relative_eq!(kappa, -0.5_f64.sqrt(), max_relative = 1e-13);
        // kappa * odd(z0) = even(z0) holds at every level.
        for n in 1..=5u32 {
            let kappa = matching_coefficient(n, &natural()).unwrap();
            let coeffs = coefficients(&natural(), 0.0);
            let z0 = to_z(0.0, &coeffs);
            let even = psi_basis(n, z0, Parity::Even).unwrap();
            let odd = psi_basis(n, z0, Parity::Odd).unwrap();
            assert_relative_eq!(kappa * odd, even, max_relative = 1e-12);
        }
    }

    #[test]
    fn matching_degenerate_when_shift_vanishes() {
        // v0/c^2 = m zeroes alpha2, putting the junction at z = 0 where the
        // odd family vanishes identically.
        let p = PotentialParams::natural(1.0, 1.0).unwrap();
        assert!(matches!(
            matching_coefficient(2, &p),
            Err(SolutionError::DegenerateMatching { .. })
        ));
    }

    #[test]
    fn samples_norm_and_symmetry() {
        let grid = symmetric_grid(-6.0_f64, 6.0, 481).unwrap();
        let s = eigenfunction_samples(1, &grid, &natural(), 0.0).unwrap();
        assert_eq!(s.source, NormalizationSource::Numeric);
        assert_relative_eq!(s.norm, 1.0, max_relative = 1e-6);
        // |upper| < 1e-6 at both endpoints
        assert!(s.upper[0].abs() < 1e-6);
        assert!(s.upper[480].abs() < 1e-6);
        // even in the grid coordinate
        for i in 0..s.upper.len() {
            let j = s.upper.len() - 1 - i;
            assert_abs_diff_eq!(s.upper[i], s.upper[j], epsilon = 1e-12 * s.upper[i].abs().max(1e-300));
        }
        // density is the pointwise squared sum
        for i in 0..s.density.len() {
            assert_eq!(s.density[i], s.upper[i] * s.upper[i] + s.lower[i] * s.lower[i]);
        }
    }

    #[test]
    fn ground_state_density_single_peak() {
        let grid = symmetric_grid(-6.0_f64, 6.0, 481).unwrap();
        let s = eigenfunction_samples(0, &grid, &natural(), 2.0_f64.sqrt()).unwrap();
        let mut maxima = 0;
        for i in 1..s.density.len() - 1 {
            if s.density[i] > s.density[i - 1] && s.density[i] > s.density[i + 1] {
                maxima += 1;
            }
        }
        assert_eq!(maxima, 1);
    }

    #[test]
    fn first_excited_zero_crossings() {
        let grid = symmetric_grid(-6.0_f64, 6.0, 481).unwrap();
        let s = eigenfunction_samples(1, &grid, &natural(), 6.0_f64.sqrt()).unwrap();
        let mut crossings = 0;
        for w in s.upper.windows(2) {
            if w[0] * w[1] < 0.0 {
                crossings += 1;
            }
        }
        assert_eq!(crossings, 2);
    }

    #[test]
    fn degenerate_matching_drops_lower_component() {
        let p = PotentialParams::natural(1.0, 1.0).unwrap();
        let grid = symmetric_grid(-6.0_f64, 6.0, 241).unwrap();
        let s = eigenfunction_samples(1, &grid, &p, 0.0).unwrap();
        assert!(s.lower.iter().all(|&v| v == 0.0));
        assert_relative_eq!(s.norm, 1.0, max_relative = 1e-6);
    }

    #[test]
    fn samples_reject_bad_grids() {
        let p = natural();
        assert!(eigenfunction_samples(0, &[0.0_f64], &p, 0.0).is_err());
        assert!(eigenfunction_samples(0, &[0.0_f64, 0.0], &p, 0.0).is_err());
        assert!(eigenfunction_samples(0, &[1.0_f64, -1.0], &p, 0.0).is_err());
    }

    #[test]
    fn symmetric_grid_is_bitwise_antisymmetric() {
        let g = symmetric_grid(-8.0_f64, 8.0, 801).unwrap();
        assert_eq!(g.len(), 801);
        assert_eq!(g[400], 0.0);
        for i in 0..g.len() {
            assert_eq!(g[i], -g[g.len() - 1 - i]);
        }
        assert!(g.windows(2).all(|w| w[1] > w[0]));
    }
}
