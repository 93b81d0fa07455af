//! Relativistic bound states of a spin-1/2 particle confined by a linear
//! scalar potential on the line.
//!
//! The crate is organised in three layers:
//!
//! * [`specfun`] — the special-function kernel: confluent hypergeometric
//!   series, Hermite and generalized Laguerre polynomials, Gauss-Hermite
//!   quadrature and closed-form Gaussian integrals.
//! * [`solution`] — the closed-form solution pipeline: potential
//!   coefficients, the parabolic-cylinder reduction, the printed spectrum
//!   branches, normalized eigenfunctions and the zero-mode profiles.
//! * [`oracle`] — an independent finite-difference spectral solver used to
//!   audit the closed-form spectrum, producing a machine-readable
//!   verification report.
//!
//! All numerics are generic over the scalar type through [`Real`]; `f64`
//! aliases for the main types live at the crate root.

use core::fmt;

use num_traits::{Float, FloatConst, FromPrimitive};

pub mod oracle;
pub mod solution;
pub mod specfun;

/// Scalar type the whole crate is generic over (`f32`, `f64`, ...).
pub trait Real: Float + FloatConst + FromPrimitive + fmt::Debug + fmt::Display + 'static {}

impl<T> Real for T where T: Float + FloatConst + FromPrimitive + fmt::Debug + fmt::Display + 'static {}

/// Converts an `f64` constant into the working scalar type.
pub(crate) fn cast<T: Real>(x: f64) -> T {
    T::from_f64(x).expect("constant representable in scalar type")
}

pub(crate) fn from_usize<T: Real>(n: usize) -> T {
    T::from_usize(n).expect("index representable in scalar type")
}

/// Real quadratic `a2 x^2 + a1 x + a0`.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct Quadratic<T> {
    pub a2: T,
    pub a1: T,
    pub a0: T,
}

impl<T: Real> Quadratic<T> {
    pub fn new(a2: T, a1: T, a0: T) -> Self {
        Self { a2, a1, a0 }
    }

    pub fn eval(&self, x: T) -> T {
        (self.a2 * x + self.a1) * x + self.a0
    }
}

pub type Params64 = solution::PotentialParams<f64>;
pub type Coefficients64 = solution::CoefficientSet<f64>;
pub type Level64 = solution::EnergyLevel<f64>;
pub type Samples64 = solution::WavefunctionSamples<f64>;
pub type ZeroMode64 = solution::ZeroModeProfile<f64>;
pub type Rule64 = specfun::QuadratureRule<f64>;
pub type Grid64 = oracle::GridSpec<f64>;
pub type Report64 = oracle::VerificationReport<f64>;
