//! Generalized (associated) Laguerre polynomials.

use crate::error::{Error, Result};
use crate::scalar::{from_usize, Real};

/// Highest degree accepted by [`laguerre_assoc`].
pub const MAX_DEGREE: u64 = 1_000_000;

/// `L_n^α(x)` by the upward three-term recurrence
/// `(k+1) L_{k+1} = (2k+1+α-x) L_k - (k+α) L_{k-1}`.
pub fn laguerre_assoc<T: Real>(n: u64, alpha: T, x: T) -> Result<T> {
    if n > MAX_DEGREE {
        return Err(Error::DegreeTooLarge(n));
    }
    let mut prev = T::one();
    if n == 0 {
        return Ok(prev);
    }
    let mut cur = T::one() + alpha - x;
    for k in 1..n as usize {
        let kf = from_usize::<T>(k);
        let next = ((kf + kf + T::one() + alpha - x) * cur - (kf + alpha) * prev) / (kf + T::one());
        prev = cur;
        cur = next;
    }
    if !cur.is_finite() {
        return Err(Error::Overflow("Laguerre recurrence"));
    }
    Ok(cur)
}

/// `L_0^α(x), ..., L_{count-1}^α(x)` in one pass of the recurrence.
pub fn laguerre_sequence<T: Real>(count: usize, alpha: T, x: T) -> Result<Vec<T>> {
    if count as u64 > MAX_DEGREE + 1 {
        return Err(Error::DegreeTooLarge(count as u64 - 1));
    }
    let mut out = Vec::with_capacity(count);
    if count == 0 {
        return Ok(out);
    }
    out.push(T::one());
    if count == 1 {
        return Ok(out);
    }
    out.push(T::one() + alpha - x);
    for k in 1..count - 1 {
        let kf = from_usize::<T>(k);
        let next = ((kf + kf + T::one() + alpha - x) * out[k] - (kf + alpha) * out[k - 1]) / (kf + T::one());
        out.push(next);
    }
    if out.iter().any(|v| !v.is_finite()) {
        return Err(Error::Overflow("Laguerre recurrence"));
    }
    Ok(out)
}
