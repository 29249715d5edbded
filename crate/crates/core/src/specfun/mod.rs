//! Complex-parameter special functions: log-Gamma and the Kummer confluent
//! hypergeometric functions `F(a, c, z)` and `z^(1-c) F(a-c+1, 2-c, z)`.

mod gamma;
mod kummer;

pub use gamma::{gamma, ln_gamma, POLE_TOL};
pub use kummer::{
    kummer_asymptotic, kummer_m, kummer_m_capped, kummer_second, KummerParams, DEFAULT_TERM_CAP,
    DEFAULT_TOL, TERMINATION_TOL,
};

use num_complex::Complex;

use crate::scalar::Real;

/// Returns `Some(n)` when `z` lies within `tol` of the non-positive integer `-n`.
pub(crate) fn nonpositive_integer<T: Real>(z: Complex<T>, tol: T) -> Option<u64> {
    if z.im.abs() > tol || z.re > tol {
        return None;
    }
    let n = (-z.re).round();
    if (z.re + n).abs() <= tol {
        n.to_u64()
    } else {
        None
    }
}
