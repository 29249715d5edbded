use super::coulomb::rydberg;
use crate::error::{Error, Result};
use crate::model::PhysicalParams;
use crate::scalar::{lit, Real};

fn ladder<T: Real>(function: &'static str, e0: T, m: T, n: i64) -> Result<T> {
    if !(e0 < T::zero()) {
        return Err(Error::domain(function, "requires E0 < 0"));
    }
    if m == T::zero() || !m.is_finite() {
        return Err(Error::domain(function, "requires finite M != 0"));
    }
    let two_pi = T::PI() + T::PI();
    Ok(e0 * (two_pi * lit::<T>(n as f64) / m).exp())
}

/// Geometric ladder `E₀ e^{2πn/M}` reached deep in the inverse-square region.
pub fn deep_ladder<T: Real>(e0: T, m: T, n: i64) -> Result<T> {
    ladder("deep_ladder", e0, m, n)
}

/// Free-particle levels. The same ladder as [`deep_ladder`], exact here
/// because the phase is `−M ln r₀(E) + C(M)` with no Coulomb correction.
/// Only `E < 0` is discrete; `E > 0` is continuum and not enumerated.
pub fn free_spectrum<T: Real>(e0: T, m: T, n: i64) -> Result<T> {
    ladder("free_spectrum", e0, m, n)
}

/// Rydberg-like levels `−mα²/(2ħ²(n + g₀)²)` near `E → 0⁻`.
pub fn shallow_spectrum<T: Real>(pp: PhysicalParams<T>, alpha: T, g0: T, n: i64) -> Result<T> {
    let x = lit::<T>(n as f64) + g0;
    if !(x > T::zero()) {
        return Err(Error::domain("shallow_spectrum", "requires n + g0 > 0"));
    }
    Ok(rydberg(pp, alpha, x))
}
