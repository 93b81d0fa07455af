
use crate::{cast, from_usize, Real};

use super::{SpecfunError, SERIES_TERM_CAP};

fn is_nonpositive_integer<T: Real>(x: T) -> bool {
    x <= T::zero() && x == x.trunc()
}

/// Kummer's confluent hypergeometric function `1F1(a; b; x)`.
///
/// When `a` is zero or a negative integer the series terminates and the
/// value is the exact finite sum of `-a + 1` terms, which is how the
/// polynomial eigenfunction families below are evaluated. Otherwise the
/// power series is summed until three consecutive terms are negligible
/// relative to the partial sum.
pub fn kummer_1f1<T: Real>(a: T, b: T, x: T) -> Result<T, SpecfunError> {
    if is_nonpositive_integer(b) {
        return Err(SpecfunError::InvalidParameter(format!(
            "1F1 pole: b = {b} is zero or a negative integer"
        )));
    }

    if is_nonpositive_integer(a) {
        let degree = -a;
        if degree > from_usize(SERIES_TERM_CAP) {
            return Err(SpecfunError::NonConvergence(
                "terminating 1F1 sum",
                SERIES_TERM_CAP,
            ));
        }
        let n = degree.to_usize().expect("validated terminating degree");
        let mut term = T::one();
        let mut sum = T::one();
        for k in 0..n {
            let kf = from_usize::<T>(k);
            term = term * (a + kf) / ((b + kf) * (kf + T::one())) * x;
            sum = sum + term;
        }
        return Ok(sum);
    }

    // Series tolerance floored at machine epsilon so narrower scalar types
    // can still converge.
    let tol = cast::<T>(1e-15).max(T::epsilon());
    let mut term = T::one();
    let mut sum = T::one();
    let mut quiet = 0u8;
    for k in 0..SERIES_TERM_CAP {
        let kf = from_usize::<T>(k);
        term = term * (a + kf) / ((b + kf) * (kf + T::one())) * x;
        sum = sum + term;
        if term.abs() < tol * sum.abs() {
            quiet += 1;
            if quiet == 3 {
                return Ok(sum);
            }
        } else {
            quiet = 0;
        }
    }
    Err(SpecfunError::NonConvergence("1F1 series", SERIES_TERM_CAP))
}
