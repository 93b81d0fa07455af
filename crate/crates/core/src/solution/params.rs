use serde::Serialize;

use crate::Real;

use super::SolutionError;

/// Half-line the piecewise solution lives on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Region {
    #[serde(rename = "pos")]
    PositiveX,
    #[serde(rename = "neg")]
    NegativeX,
}

/// Sign branch of `E = +-sqrt(E^2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SignBranch {
    Plus,
    Minus,
}

impl SignBranch {
    pub fn apply<T: Real>(self, magnitude: T) -> T {
        match self {
            SignBranch::Plus => magnitude,
            SignBranch::Minus => -magnitude,
        }
    }
}

/// Physical inputs: mass, light speed, reduced Planck constant, potential
/// offset `v0` and slope `gamma` of `V(x) = -v0 - gamma x`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PotentialParams<T> {
    pub mass: T,
    pub c: T,
    pub hbar: T,
    pub v0: T,
    pub gamma: T,
}

impl<T: Real> PotentialParams<T> {
    pub fn new(mass: T, c: T, hbar: T, v0: T, gamma: T) -> Result<Self, SolutionError> {
        let p = Self {
            mass,
            c,
            hbar,
            v0,
            gamma,
        };
        p.validate()?;
        Ok(p)
    }

    /// Natural units (`mass = c = hbar = 1`) with the given potential.
    pub fn natural(v0: T, gamma: T) -> Result<Self, SolutionError> {
        Self::new(T::one(), T::one(), T::one(), v0, gamma)
    }

    /// Same parameters with the slope replaced.
    pub fn with_gamma(&self, gamma: T) -> Result<Self, SolutionError> {
        Self::new(self.mass, self.c, self.hbar, self.v0, gamma)
    }

    fn validate(&self) -> Result<(), SolutionError> {
        let bad = |what: &str, v: T| {
            Err(SolutionError::InvalidParams(format!(
                "{what} (got {})",
                v.to_f64().unwrap_or(f64::NAN)
            )))
        };
        if !(self.c > T::zero() && self.c.is_finite()) {
            return bad("c must be positive and finite", self.c);
        }
        if !(self.hbar > T::zero() && self.hbar.is_finite()) {
            return bad("hbar must be positive and finite", self.hbar);
        }
        if !(self.mass >= T::zero() && self.mass.is_finite()) {
            return bad("mass must be non-negative and finite", self.mass);
        }
        if !(self.gamma != T::zero() && self.gamma.is_finite()) {
            return bad("gamma must be nonzero and finite", self.gamma);
        }
        if !self.v0.is_finite() {
            return bad("v0 must be finite", self.v0);
        }
        Ok(())
    }

    /// `hbar * c`.
    pub fn hbar_c(&self) -> T {
        self.hbar * self.c
    }

    /// Rest energy `m c^2`.
    pub fn rest_energy(&self) -> T {
        self.mass * self.c * self.c
    }

    /// `m^2 c^4`.
    pub fn rest_energy_sq(&self) -> T {
        let e = self.rest_energy();
        e * e
    }

    /// Natural length of the confining quadratic, `alpha1^{-1/4}`.
    pub fn confinement_length(&self) -> T {
        (self.hbar_c() / self.gamma.abs()).sqrt()
    }

    /// Characteristic squared-energy scale `m^2 c^4 + hbar c |gamma|`, used
    /// to floor relative comparisons of `E^2` values near zero.
    pub fn energy_sq_scale(&self) -> T {
        self.rest_energy_sq() + self.hbar_c() * self.gamma.abs()
    }
}

impl<T: Real> Default for PotentialParams<T> {
    fn default() -> Self {
        Self {
            mass: T::one(),
            c: T::one(),
            hbar: T::one(),
            v0: T::zero(),
            gamma: T::one(),
        }
    }
}

/// Scalar potential `V(x) = -v0 - gamma x`.
pub fn potential<T: Real>(x: T, params: &PotentialParams<T>) -> T {
    -params.v0 - params.gamma * x
}

impl<T: Real> PotentialParams<T> {
    /// Widens `f32`-style parameter sets for display/serialization paths.
    pub fn to_f64_lossy(&self) -> PotentialParams<f64> {
        PotentialParams {
            mass: self.mass.to_f64().unwrap_or(f64::NAN),
            c: self.c.to_f64().unwrap_or(f64::NAN),
            hbar: self.hbar.to_f64().unwrap_or(f64::NAN),
            v0: self.v0.to_f64().unwrap_or(f64::NAN),
            gamma: self.gamma.to_f64().unwrap_or(f64::NAN),
        }
    }
}

#[cfg(test)]
mod tests {
    use crate::cast;
    use super::*;

    #[test]
    fn default_is_natural_units() {
        let p = PotentialParams::<f64>::default();
        assert_eq!((p.mass, p.c, p.hbar, p.v0, p.gamma), (1.0, 1.0, 1.0, 0.0, 1.0));
        assert!(p.validate().is_ok());
    }

    #[test]
    fn potential_values() {
        let p = PotentialParams::<f64>::default();
        assert_eq!(potential(0.0, &p), 0.0);
        assert_eq!(potential(2.0, &p), -2.0);
        let p = PotentialParams::new(1.0, 1.0, 1.0, 3.0, 0.5).unwrap();
        assert_eq!(potential(-4.0, &p), -1.0);
    }

    #[test]
    fn rejects_bad_params() {
        assert!(PotentialParams::new(1.0, 0.0, 1.0, 0.0, 1.0).is_err());
        assert!(PotentialParams::new(1.0, 1.0, -1.0, 0.0, 1.0).is_err());
        assert!(PotentialParams::new(-1.0, 1.0, 1.0, 0.0, 1.0).is_err());
        assert!(PotentialParams::new(1.0, 1.0, 1.0, 0.0, 0.0).is_err());
        assert!(PotentialParams::new(1.0, 1.0, 1.0, f64::NAN, 1.0).is_err());
    }

    #[test]
    fn negative_gamma_is_accepted() {
        let p = PotentialParams::natural(0.0, -2.0).unwrap();
        assert_eq!(p.gamma, -2.0);
        assert_eq!(p.confinement_length(), 0.5_f64.sqrt());
    }

    #[test]
    fn cast_helper_is_exact_for_f64() {
        assert_eq!(cast::<f64>(1e-15), 1e-15);
    }
}
