use serde::Serialize;

use crate::{cast, from_usize, Quadratic, Real};

use super::PotentialParams;

/// Which of the four half-line pieces of the zero-energy pair decay fast
/// enough to be square-integrable on their half line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ZeroModeFlags {
    pub psi_normalizable_pos: bool,
    pub psi_normalizable_neg: bool,
    pub phi_normalizable_pos: bool,
    pub phi_normalizable_neg: bool,
}

/// Zero-energy solution pair `psi = exp(+h)`, `phi = exp(-h)` with the
/// half-line exponents `h` stored as quadratics in `x`.
///
/// `norm_as_printed` evaluates the closed-form constant with the negative
/// radicand replaced by its magnitude; `as_printed_invalid` records that
/// the substitution was needed. `norm_numeric` normalizes the two
/// square-integrable pieces (upper on `x < 0`, lower on `x > 0`) jointly.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ZeroModeProfile<T> {
    pub exponent_positive: Quadratic<T>,
    pub exponent_negative: Quadratic<T>,
    pub flags: ZeroModeFlags,
    pub norm_as_printed: Option<T>,
    pub as_printed_invalid: bool,
    pub norm_numeric: T,
}

fn exponents<T: Real>(params: &PotentialParams<T>) -> (Quadratic<T>, Quadratic<T>) {
    let hbar_c = params.hbar_c();
    let quad = params.gamma * params.gamma / (cast::<T>(2.0) * hbar_c);
    let lin = (params.v0 - params.rest_energy()) / hbar_c;
    (
        Quadratic::new(quad, lin, T::zero()),
        Quadratic::new(-quad, lin, T::zero()),
    )
}

/// Zero-energy pair `(psi, phi)` at `x`, glued from the half-line exponents.
pub fn zero_mode_components<T: Real>(x: T, params: &PotentialParams<T>) -> (T, T) {
    let (pos, neg) = exponents(params);
    let h = if x >= T::zero() {
        pos.eval(x)
    } else {
        neg.eval(x)
    };
    (h.exp(), (-h).exp())
}

/// Square-integrability of each component on each half line, decided by the
/// sign of the quadratic coefficient in the exponent of its squared
/// magnitude.
pub fn zero_mode_normalizability<T: Real>(params: &PotentialParams<T>) -> ZeroModeFlags {
    let (pos, neg) = exponents(params);
    let two = cast::<T>(2.0);
    let decays = |coeff: T| coeff < T::zero();
    ZeroModeFlags {
        psi_normalizable_pos: decays(two * pos.a2),
        psi_normalizable_neg: decays(two * neg.a2),
        phi_normalizable_pos: decays(-two * pos.a2),
        phi_normalizable_neg: decays(-two * neg.a2),
    }
}

/// `integral_0^inf exp(-(a x^2 + b x)) dx` for `a > 0` by composite Simpson
/// on `[0, X]` with `X` past the point where the exponent reaches 50.
fn half_line_gaussian<T: Real>(a: T, b: T) -> T {
    let two = cast::<T>(2.0);
    let x_max = (-b + (b * b + cast::<T>(200.0) * a).sqrt()) / (two * a);
    let panels = 16_384usize;
    let h = x_max / from_usize::<T>(panels);
    let f = |x: T| (-(a * x * x + b * x)).exp();
    let mut acc = f(T::zero()) + f(x_max);
    for i in 1..panels {
        let w = if i % 2 == 1 { 4.0 } else { 2.0 };
        acc = acc + cast::<T>(w) * f(from_usize::<T>(i) * h);
    }
    acc * h / cast::<T>(3.0)
}

/// Builds the zero-mode profile: exponents, normalizability flags, the
/// magnitude-substituted closed-form constant, and the numeric constant
/// normalizing the two square-integrable half-line pieces together.
pub fn zero_mode_profile<T: Real>(params: &PotentialParams<T>) -> ZeroModeProfile<T> {
    let (pos, neg) = exponents(params);
    let flags = zero_mode_normalizability(params);

    let hbar_c = params.hbar_c();
    // Literal closed form: sqrt(pi / sqrt(q)) exp(-(mc^2 - v0)^2/(hbar c gamma))
    // with q = -gamma^2 / (hbar c), which is negative for every admissible
    // slope; evaluate with |q| and flag the substitution.
    let radicand = -params.gamma * params.gamma / hbar_c;
    let as_printed_invalid = radicand < T::zero();
    let delta = params.rest_energy() - params.v0;
    let bracket = (T::PI() / radicand.abs().sqrt()).sqrt()
        * (-delta * delta / (hbar_c * params.gamma)).exp();
    let norm_as_printed = Some(bracket.sqrt().recip());

    // Both square-integrable pieces reduce to the same half-line integral.
    let a = params.gamma * params.gamma / hbar_c;
    let b = cast::<T>(2.0) * (params.v0 - params.rest_energy()) / hbar_c;
    let total = cast::<T>(2.0) * half_line_gaussian(a, b);
    let norm_numeric = total.sqrt().recip();

    ZeroModeProfile {
        exponent_positive: pos,
        exponent_negative: neg,
        flags,
        norm_as_printed,
        as_printed_invalid,
        norm_numeric,
    }
}
