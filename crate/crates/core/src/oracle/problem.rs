use serde::Serialize;

use crate::solution::{PotentialParams, Region};
use crate::{cast, from_usize, Quadratic, Real};

use super::{OracleError, SymmetricTridiagonal};

/// Uniform grid of `points` nodes spanning `[-half_width, half_width]`
/// endpoints included; the two wall nodes carry hard Dirichlet zeros and the
/// odd count puts the origin on a node.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GridSpec<T> {
    pub half_width: T,
    pub points: usize,
}

impl<T: Real> GridSpec<T> {
    pub fn new(half_width: T, points: usize) -> Result<Self, OracleError> {
        if !half_width.is_finite() || half_width <= T::zero() {
            return Err(OracleError::InvalidGrid(
                "half width must be positive and finite",
            ));
        }
        if points < 3 || points.is_multiple_of(2) {
            return Err(OracleError::InvalidGrid(
                "need an odd number of grid points, at least 3",
            ));
        }
        Ok(Self { half_width, points })
    }

    /// Default box for the given parameters: 15 confinement lengths on each
    /// side of the origin with 4001 nodes.
    pub fn default_for(params: &PotentialParams<T>) -> Self {
        Self {
            half_width: cast::<T>(15.0) * params.confinement_length(),
            points: 4001,
        }
    }

    /// Spacing between neighbouring nodes.
    pub fn step(&self) -> T {
        cast::<T>(2.0) * self.half_width / from_usize::<T>(self.points - 1)
    }

    /// Interior node positions, ascending (walls excluded).
    pub fn positions(&self) -> Vec<T> {
        let h = self.step();
        (1..=self.points - 2)
            .map(|i| -self.half_width + from_usize::<T>(i) * h)
            .collect()
    }
}

/// Spinor component whose second-order equation is being solved.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Component {
    Upper,
    Lower,
}

/// Schrodinger form `-u'' + W(x) u = mu u` with a quadratic well `W`
/// extending one half-line convention of the squared system to the whole
/// axis.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EffectiveProblem<T> {
    pub region: Region,
    pub component: Component,
    pub well: Quadratic<T>,
}

/// Builds the well for a region/component choice. The quadratic and linear
/// parts are shared; the constant carries the slope term whose sign flips
/// between components and between half-line conventions.
pub fn effective_problem<T: Real>(
    region: Region,
    component: Component,
    params: &PotentialParams<T>,
) -> EffectiveProblem<T> {
    let hbar2 = params.hbar * params.hbar;
    let c2 = params.c * params.c;
    let a2 = params.gamma * params.gamma / (hbar2 * c2);
    let a1 = cast::<T>(2.0) * params.gamma / hbar2 * (params.v0 / c2 - params.mass);
    let base = params.v0 / hbar2 * (params.v0 / c2 - cast::<T>(2.0) * params.mass);
    let sign = match (region, component) {
        (Region::PositiveX, Component::Upper) | (Region::NegativeX, Component::Lower) => T::one(),
        _ => -T::one(),
    };
    let a0 = base + sign * params.gamma / params.hbar_c();
    EffectiveProblem {
        region,
        component,
        well: Quadratic::new(a2, a1, a0),
    }
}

/// Exact harmonic levels of the quadratic well on the full line:
/// `mu_j = 2 sqrt(a2) (j + 1/2) + a0 - a1^2 / (4 a2)`.
pub fn completed_square_spectrum<T: Real>(problem: &EffectiveProblem<T>, count: usize) -> Vec<T> {
    let q = problem.well;
    let floor = q.a0 - q.a1 * q.a1 / (cast::<T>(4.0) * q.a2);
    let gap = cast::<T>(2.0) * q.a2.sqrt();
    (0..count)
        .map(|j| gap * (from_usize::<T>(j) + cast::<T>(0.5)) + floor)
        .collect()
}

/// Three-point finite-difference matrix of `-u'' + W u` on the grid with
/// hard walls: diagonal `2/h^2 + W(x_i)`, off-diagonal `-1/h^2`.
pub fn discretize<T: Real>(
    problem: &EffectiveProblem<T>,
    grid: &GridSpec<T>,
) -> SymmetricTridiagonal<T> {
    let h = grid.step();
    let inv_h2 = (h * h).recip();
    let diag: Vec<T> = grid
        .positions()
        .into_iter()
        .map(|x| cast::<T>(2.0) * inv_h2 + problem.well.eval(x))
        .collect();
    let off = vec![-inv_h2; diag.len() - 1];
    SymmetricTridiagonal::new(diag, off).expect("grid spec guarantees a valid matrix")
}
