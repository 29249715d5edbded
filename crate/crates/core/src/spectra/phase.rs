use num_complex::Complex;

use super::coulomb::scale_length;
use crate::error::{Error, Result};
use crate::model::PhysicalParams;
use crate::scalar::{lit, to_f64, Real};
use crate::specfun::ln_gamma;

/// Modulus deviation of `e^{−2iγ}` from 1 tolerated before bailing out.
const UNIT_MODULUS_TOL: f64 = 1e-10;

/// Reflection phase `γ` of `u ~ √r sin(M ln r + γ)` and its energy-dependent
/// companion `β = γ − M ln r₀`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReflectionPhase<T> {
    /// `γ` reduced to `[0, π)`.
    pub gamma: T,
    /// `γ − M ln r₀` with the reduced `γ`.
    pub beta: T,
    /// `γ` before reduction, continuous in `g` for `M ≠ 0`.
    pub gamma_unreduced: T,
    /// `β` before reduction, continuous in `E` for `M ≠ 0`.
    pub beta_unreduced: T,
}

fn check_inputs<T: Real>(g: T, m: T) -> Result<()> {
    if !g.is_finite() || !m.is_finite() {
        return Err(Error::domain("gamma_phase", "g and M must be finite"));
    }
    Ok(())
}

fn pole_to_phase(e: Error) -> Error {
    match e {
        Error::Pole { re, im, .. } => Error::Pole {
            function: "gamma_phase",
            re,
            im,
        },
        other => other,
    }
}

/// Unreduced `γ(g, M) = Im ln Γ(½ + iM − g) − Im ln Γ(1 + 2iM)`.
///
/// With the analytic continuation of `ln Γ` this is continuous along any
/// path in `g` when `M ≠ 0`.
pub fn gamma_continuous<T: Real>(g: T, m: T) -> Result<T> {
    check_inputs(g, m)?;
    let upper = ln_gamma(Complex::new(lit::<T>(0.5) - g, m)).map_err(pole_to_phase)?;
    let lower = ln_gamma(Complex::new(T::one(), m + m))?;
    Ok(upper.im - lower.im)
}

/// Phase fixed by the decay condition
/// `e^{−2iγ} = Γ(1+2iM) Γ(½−iM−g) / [Γ(1−2iM) Γ(½+iM−g)]`, in scaled units
/// (`r₀ = 1`, so `β = γ`).
pub fn gamma_phase<T: Real>(g: T, m: T) -> Result<ReflectionPhase<T>> {
    check_inputs(g, m)?;
    let half = lit::<T>(0.5);
    if m == T::zero() {
        // The ratio is identically one away from the poles of Γ(½ − g).
        ln_gamma(Complex::from(half - g)).map_err(pole_to_phase)?;
        return Ok(ReflectionPhase {
            gamma: T::zero(),
            beta: T::zero(),
            gamma_unreduced: T::zero(),
            beta_unreduced: T::zero(),
        });
    }
    let one = T::one();
    let log_ratio = ln_gamma(Complex::new(one, m + m))? + ln_gamma(Complex::new(half - g, -m))?
        - ln_gamma(Complex::new(one, -(m + m)))?
        - ln_gamma(Complex::new(half - g, m))?;
    if log_ratio.re.abs() > lit(UNIT_MODULUS_TOL) {
        return Err(Error::domain(
            "gamma_phase",
            format!("|e^(-2i gamma)| deviates from 1 by {:e}", to_f64(log_ratio.re)),
        ));
    }
    let unreduced = -half * log_ratio.im;
    let gamma = reduce_mod_pi(unreduced);
    Ok(ReflectionPhase {
        gamma,
        beta: gamma,
        gamma_unreduced: unreduced,
        beta_unreduced: unreduced,
    })
}

/// Reflection phase of a state with energy `E < 0` in physical units.
/// `alpha = 0` gives the free particle.
pub fn reflection_phase<T: Real>(
    pp: PhysicalParams<T>,
    alpha: T,
    m: T,
    e: T,
) -> Result<ReflectionPhase<T>> {
    let r0 = scale_length(pp, e)?;
    let g = coupling(pp, alpha, e);
    let base = gamma_phase(g, m)?;
    let shift = m * r0.ln();
    Ok(ReflectionPhase {
        gamma: base.gamma,
        beta: base.gamma - shift,
        gamma_unreduced: base.gamma_unreduced,
        beta_unreduced: base.gamma_unreduced - shift,
    })
}

/// Continuous `β(E) = γ(g(E)) − M ln r₀(E)`, the quantity whose increments
/// are quantized in units of `π`.
pub fn reflection_beta<T: Real>(pp: PhysicalParams<T>, alpha: T, m: T, e: T) -> Result<T> {
    let r0 = scale_length(pp, e)?;
    Ok(gamma_continuous(coupling(pp, alpha, e), m)? - m * r0.ln())
}

/// `f(g) = −M ln g + arg[Γ(½ − g + iM)/Γ(1 + 2iM)]` with the argument unwound.
pub fn quantization_f<T: Real>(g: T, m: T) -> Result<T> {
    if !(g > T::zero()) {
        return Err(Error::domain("quantization_f", "requires g > 0"));
    }
    Ok(-m * g.ln() + gamma_continuous(g, m)?)
}

fn coupling<T: Real>(pp: PhysicalParams<T>, alpha: T, e: T) -> T {
    let kappa = (-(pp.mass() + pp.mass()) * e).sqrt();
    pp.mass() * alpha / (pp.hbar() * kappa)
}

fn reduce_mod_pi<T: Real>(x: T) -> T {
    let pi = T::PI();
    let r = x - (x / pi).floor() * pi;
    if r >= pi || r < T::zero() {
        T::zero()
    } else {
        r
    }
}
