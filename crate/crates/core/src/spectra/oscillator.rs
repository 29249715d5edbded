use num_complex::Complex;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::model::PhysicalParams;
use crate::scalar::{lit, Real};
use crate::specfun::{kummer_m, KummerParams};

/// Parameters of a Coulomb problem and of the oscillator it maps onto under
/// `r₀ r = ϱ²`, `φ_C = 2φ_osc`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DualityMap<T> {
    pub r0_scale: T,
    pub alpha: T,
    pub e_coulomb: T,
    pub omega: T,
    pub e_osc: T,
    pub m_coulomb: T,
    pub m_osc: T,
}

impl<T: Real> DualityMap<T> {
    /// Largest relative violation of `r₀E_osc = 4α`, `mω²r₀² = −8E_C` and
    /// `M_osc = 2M_C`.
    pub fn invariant_residual(&self, pp: PhysicalParams<T>) -> T {
        let rel = |a: T, b: T| {
            let s = a.abs().max(b.abs());
            if s == T::zero() {
                T::zero()
            } else {
                (a - b).abs() / s
            }
        };
        let four = lit::<T>(4.0);
        let eight = lit::<T>(8.0);
        let a = rel(self.r0_scale * self.e_osc, four * self.alpha);
        let b = rel(
            pp.mass() * self.omega * self.omega * self.r0_scale * self.r0_scale,
            -eight * self.e_coulomb,
        );
        let c = rel(self.m_osc, self.m_coulomb + self.m_coulomb);
        a.max(b).max(c)
    }

    /// Oscillator energy from the `+` branch of
    /// `E_osc = ±2αω√m / √(−2E_C)`.
    pub fn energy_relation(&self, pp: PhysicalParams<T>) -> T {
        let two = lit::<T>(2.0);
        two * self.alpha * self.omega * pp.mass().sqrt() / (-(two * self.e_coulomb)).sqrt()
    }
}

/// Maps a Coulomb level onto the oscillator for a chosen length scale `r₀`.
pub fn duality_forward<T: Real>(
    pp: PhysicalParams<T>,
    alpha: T,
    e_coulomb: T,
    m_coulomb: T,
    r0_scale: T,
) -> Result<DualityMap<T>> {
    if !(e_coulomb < T::zero()) || !e_coulomb.is_finite() {
        return Err(Error::domain("duality_forward", "requires E_coulomb < 0"));
    }
    if !(r0_scale > T::zero()) || !r0_scale.is_finite() {
        return Err(Error::domain("duality_forward", "requires r0_scale > 0"));
    }
    if !alpha.is_finite() || !m_coulomb.is_finite() {
        return Err(Error::domain("duality_forward", "alpha and M must be finite"));
    }
    let omega = (-lit::<T>(8.0) * e_coulomb / (pp.mass() * r0_scale * r0_scale)).sqrt();
    Ok(DualityMap {
        r0_scale,
        alpha,
        e_coulomb,
        omega,
        e_osc: lit::<T>(4.0) * alpha / r0_scale,
        m_coulomb,
        m_osc: m_coulomb + m_coulomb,
    })
}

/// Like [`duality_forward`], with `r₀` chosen so the oscillator has frequency `omega`.
pub fn duality_for_frequency<T: Real>(
    pp: PhysicalParams<T>,
    alpha: T,
    e_coulomb: T,
    m_coulomb: T,
    omega: T,
) -> Result<DualityMap<T>> {
    if !(omega > T::zero()) || !omega.is_finite() {
        return Err(Error::domain("duality_for_frequency", "requires omega > 0"));
    }
    if !(e_coulomb < T::zero()) {
        return Err(Error::domain("duality_for_frequency", "requires E_coulomb < 0"));
    }
    let r0 = (-lit::<T>(8.0) * e_coulomb / pp.mass()).sqrt() / omega;
    duality_forward(pp, alpha, e_coulomb, m_coulomb, r0)
}

/// Recovers the Coulomb side from oscillator data through the energy relation,
/// `E_C = −2mα²ω²/E_osc²`.
pub fn duality_inverse<T: Real>(
    pp: PhysicalParams<T>,
    alpha: T,
    omega: T,
    e_osc: T,
    m_osc: T,
) -> Result<DualityMap<T>> {
    if !(e_osc > T::zero()) || !e_osc.is_finite() {
        return Err(Error::domain("duality_inverse", "only the positive-energy branch is mapped"));
    }
    if !(omega > T::zero()) || !(alpha > T::zero()) {
        return Err(Error::domain("duality_inverse", "requires omega > 0 and alpha > 0"));
    }
    let two = lit::<T>(2.0);
    let e_coulomb = -two * pp.mass() * alpha * alpha * omega * omega / (e_osc * e_osc);
    Ok(DualityMap {
        r0_scale: lit::<T>(4.0) * alpha / e_osc,
        alpha,
        e_coulomb,
        omega,
        e_osc,
        m_coulomb: m_osc / two,
        m_osc,
    })
}

/// `E = ħω(2n + 1 + iM_osc)`.
pub fn oscillator_closed_spectrum<T: Real>(pp: PhysicalParams<T>, omega: T, n: u32, m_osc: T) -> Complex<T> {
    let hw = pp.hbar() * omega;
    Complex::new(hw * lit::<T>(2.0 * n as f64 + 1.0), hw * m_osc)
}

/// Radial factor `ϱ^{iM} e^{−mωϱ²/2ħ} F(−n, 1 + iM, mωϱ²/ħ)`.
pub fn oscillator_radial<T: Real>(
    pp: PhysicalParams<T>,
    omega: T,
    n: u32,
    m_osc: T,
    rho: T,
    tol: T,
) -> Result<Complex<T>> {
    if !(rho > T::zero()) || !rho.is_finite() {
        return Err(Error::domain("oscillator_wavefunction", "requires rho > 0"));
    }
    if !(omega > T::zero()) {
        return Err(Error::domain("oscillator_wavefunction", "requires omega > 0"));
    }
    let x = pp.mass() * omega * rho * rho / pp.hbar();
    let p = KummerParams::new(
        Complex::from(-lit::<T>(n as f64)),
        Complex::new(T::one(), m_osc),
    )?;
    let env = Complex::from_polar((-x * lit(0.5)).exp(), m_osc * rho.ln());
    Ok(env * kummer_m(&p, x, tol)?)
}

/// Full state `Ψ(ϱ, φ)` with unit prefactor.
pub fn oscillator_wavefunction<T: Real>(
    pp: PhysicalParams<T>,
    omega: T,
    n: u32,
    m_osc: T,
    rho: T,
    phi: T,
    tol: T,
) -> Result<Complex<T>> {
    let radial = oscillator_radial(pp, omega, n, m_osc, rho, tol)?;
    Ok(radial * Complex::from_polar(T::one(), m_osc * phi))
}
