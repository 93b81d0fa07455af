//! Special-function kernel: Kummer's confluent hypergeometric function,
//! Hermite and generalized Laguerre polynomials, Gauss-Hermite quadrature
//! and closed-form Gaussian integrals.
//!
//! Hermite polynomials use the physicists' convention (`H0 = 1`, `H1 = 2x`)
//! throughout the crate.

mod integrals;
mod kummer;
mod poly;
mod quadrature;

pub use integrals::{gaussian_integral, hermite_overlap};
pub use kummer::kummer_1f1;
pub use poly::{hermite, laguerre};
pub use quadrature::{gauss_hermite_rule, QuadratureRule};

use crate::{from_usize, Real};

/// Largest degree/index for which `n!` stays inside `f64` range.
pub const MAX_FACTORIAL: u32 = 170;

/// Largest supported quadrature order.
pub const MAX_QUADRATURE_ORDER: usize = 128;

/// Term cap for the Kummer series and the terminating-sum degree.
pub const SERIES_TERM_CAP: usize = 10_000;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum SpecfunError {
    /// A parameter sits outside the function's domain.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    /// An index exceeded the supported range.
    #[error("{name} = {got} exceeds the supported maximum {max}")]
    OutOfRange {
        name: &'static str,
        got: u64,
        max: u64,
    },
    /// An iteration failed to converge within its budget.
    #[error("{0} did not converge within {1} iterations")]
    NonConvergence(&'static str, usize),
    /// The requested integral diverges.
    #[error("Gaussian integral diverges for quadratic coefficient a = {a}")]
    DivergentIntegral { a: f64 },
}

/// `n!` as a scalar, exact up to [`MAX_FACTORIAL`].
pub fn factorial<T: Real>(n: u32) -> Result<T, SpecfunError> {
    if n > MAX_FACTORIAL {
        return Err(SpecfunError::OutOfRange {
            name: "factorial argument",
            got: n as u64,
            max: MAX_FACTORIAL as u64,
        });
    }
    let mut acc = T::one();
    for k in 2..=n as usize {
        acc = acc * from_usize(k);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorial_small_values() {
        assert_eq!(factorial::<f64>(0).unwrap(), 1.0);
        assert_eq!(factorial::<f64>(1).unwrap(), 1.0);
        assert_eq!(factorial::<f64>(5).unwrap(), 120.0);
        assert_eq!(factorial::<f64>(10).unwrap(), 3_628_800.0);
    }

    #[test]
    fn factorial_stays_finite_at_cap() {
        let f: f64 = factorial(170).unwrap();
        assert!(f.is_finite());
        assert!(factorial::<f64>(171).is_err());
    }
}
