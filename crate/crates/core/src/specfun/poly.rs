use crate::{cast, from_usize, Real};

use super::{SpecfunError, MAX_FACTORIAL};

fn check_degree(name: &'static str, n: u32) -> Result<(), SpecfunError> {
    if n > MAX_FACTORIAL {
        return Err(SpecfunError::OutOfRange {
            name,
            got: n as u64,
            max: MAX_FACTORIAL as u64,
        });
    }
    Ok(())
}

/// Physicists' Hermite polynomial `H_n(x)` by the three-term recurrence
/// `H_{k+1} = 2x H_k - 2k H_{k-1}`.
pub fn hermite<T: Real>(n: u32, x: T) -> Result<T, SpecfunError> {
    check_degree("Hermite degree", n)?;
    if n == 0 {
        return Ok(T::one());
    }
    let two = cast::<T>(2.0);
    let mut prev = T::one();
    let mut cur = two * x;
    for k in 1..n as usize {
        let next = two * (x * cur - from_usize::<T>(k) * prev);
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// Generalized Laguerre polynomial `L_n^alpha(x)` by the recurrence
/// `(k+1) L_{k+1} = (2k + 1 + alpha - x) L_k - (k + alpha) L_{k-1}`.
pub fn laguerre<T: Real>(n: u32, alpha: T, x: T) -> Result<T, SpecfunError> {
    check_degree("Laguerre degree", n)?;
    if n == 0 {
        return Ok(T::one());
    }
    let mut prev = T::one();
    let mut cur = T::one() + alpha - x;
    for k in 1..n as usize {
        let kf = from_usize::<T>(k);
        let a = (cast::<T>(2.0) * kf + T::one() + alpha - x) * cur;
        let b = (kf + alpha) * prev;
        let next = (a - b) / (kf + T::one());
        prev = cur;
        cur = next;
    }
    Ok(cur)
}
