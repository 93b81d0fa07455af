
use crate::{cast, Real};

use super::{factorial, SpecfunError, MAX_FACTORIAL};

/// Orthogonality integral `integral H_n(x) H_m(x) exp(-x^2) dx`, which is
/// `2^n n! sqrt(pi)` on the diagonal and zero otherwise.
pub fn hermite_overlap<T: Real>(n: u32, m: u32) -> Result<T, SpecfunError> {
    let top = n.max(m);
    if top > MAX_FACTORIAL {
        return Err(SpecfunError::OutOfRange {
            name: "Hermite overlap index",
            got: top as u64,
            max: MAX_FACTORIAL as u64,
        });
    }
    if n != m {
        return Ok(T::zero());
    }
    let fact: T = factorial(n)?;
    Ok(cast::<T>(2.0).powi(n as i32) * fact * T::PI().sqrt())
}

/// Closed form of `integral exp(-(a x^2 + b x + c)) dx` over the whole
/// line: `sqrt(pi/a) exp((b^2 - 4ac) / (4a))`, defined only for `a > 0`.
pub fn gaussian_integral<T: Real>(a: T, b: T, c: T) -> Result<T, SpecfunError> {
    if a <= T::zero() || !a.is_finite() {
        return Err(SpecfunError::DivergentIntegral {
            a: a.to_f64().unwrap_or(f64::NAN),
        });
    }
    let four = cast::<T>(4.0);
    Ok((T::PI() / a).sqrt() * ((b * b - four * a * c) / (four * a)).exp())
}
