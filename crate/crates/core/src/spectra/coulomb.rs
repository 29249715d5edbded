use num_complex::Complex;

use crate::error::{Error, Result};
use crate::model::PhysicalParams;
use crate::scalar::{lit, Real};
use crate::specfun::{kummer_asymptotic, kummer_m, KummerParams};

/// Natural length and coupling of a negative-energy Coulomb state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScaledCoulomb<T> {
    /// `r₀ = ħ / (2√(−2mE))`
    pub r0: T,
    /// `g = mα / (ħ√(−2mE))`
    pub g: T,
    pub energy: T,
}

/// `r₀(E) = ħ/(2√(−2mE))` for `E < 0`.
pub fn scale_length<T: Real>(pp: PhysicalParams<T>, e: T) -> Result<T> {
    if !(e < T::zero()) || !e.is_finite() {
        return Err(Error::domain("scale_length", "requires finite E < 0"));
    }
    let kappa = (-(pp.mass() + pp.mass()) * e).sqrt();
    Ok(pp.hbar() / (kappa + kappa))
}

pub fn coulomb_scaling<T: Real>(pp: PhysicalParams<T>, alpha: T, e: T) -> Result<ScaledCoulomb<T>> {
    if !(alpha > T::zero()) {
        return Err(Error::domain("coulomb_scaling", "requires alpha > 0"));
    }
    if !(e < T::zero()) {
        return Err(Error::domain("coulomb_scaling", "bound states need E < 0"));
    }
    let kappa = (-(pp.mass() + pp.mass()) * e).sqrt();
    Ok(ScaledCoulomb {
        r0: pp.hbar() / (kappa + kappa),
        g: pp.mass() * alpha / (pp.hbar() * kappa),
        energy: e,
    })
}

/// Inverse of the `g(E)` relation: `E = −mα²/(2ħ²g²)`.
pub fn energy_from_g<T: Real>(pp: PhysicalParams<T>, alpha: T, g: T) -> T {
    rydberg(pp, alpha, g)
}

// −mα²/(2ħ²x²); shared by the closed and shallow formulas so that they agree
// bit for bit at M = 0.
pub(crate) fn rydberg<T: Real>(pp: PhysicalParams<T>, alpha: T, x: T) -> T {
    let h2 = pp.hbar() * pp.hbar();
    -(pp.mass() * alpha * alpha) / ((h2 + h2) * (x * x))
}

/// Terminating-series energies `E(n, M) = −mα²/(2ħ²(n + ½ + iM)²)`.
pub fn coulomb_closed_spectrum<T: Real>(pp: PhysicalParams<T>, alpha: T, n: u32, m: T) -> Complex<T> {
    let x = lit::<T>(n as f64) + lit(0.5);
    if m == T::zero() {
        return Complex::from(rydberg(pp, alpha, x));
    }
    let w = Complex::new(x, m);
    let h2 = pp.hbar() * pp.hbar();
    Complex::from(-(pp.mass() * alpha * alpha)) / ((w * w) * (h2 + h2))
}

fn require_z<T: Real>(function: &'static str, z: T) -> Result<()> {
    if z > T::zero() && z.is_finite() {
        Ok(())
    } else {
        Err(Error::domain(function, "requires z > 0"))
    }
}

fn envelope<T: Real>(m: T, z: T) -> Complex<T> {
    // e^{−z/2} √z z^{iM}
    Complex::from_polar((-z * lit(0.5)).exp() * z.sqrt(), m * z.ln())
}

/// First solution `u₁(z) = e^{−z/2} √z z^{iM} F(iM + ½ − g, 2iM + 1, z)`,
/// unnormalized.
pub fn coulomb_u1<T: Real>(g: T, m: T, z: T, tol: T) -> Result<Complex<T>> {
    require_z("coulomb_u1", z)?;
    let p = KummerParams::new(
        Complex::new(lit::<T>(0.5) - g, m),
        Complex::new(T::one(), m + m),
    )?;
    Ok(envelope(m, z) * kummer_m(&p, z, tol)?)
}

/// Second solution `u₂(z) = e^{−z/2} √z z^{−iM} F(½ − iM − g, 1 − 2iM, z)`.
pub fn coulomb_u2<T: Real>(g: T, m: T, z: T, tol: T) -> Result<Complex<T>> {
    require_z("coulomb_u2", z)?;
    let p = KummerParams::new(
        Complex::new(lit::<T>(0.5) - g, -m),
        Complex::new(T::one(), -(m + m)),
    )?;
    Ok(envelope(-m, z) * kummer_m(&p, z, tol)?)
}

/// Superposition `u = u₁ − e^{−2iγ} u₂`.
pub fn coulomb_third<T: Real>(g: T, m: T, gamma: T, z: T, tol: T) -> Result<Complex<T>> {
    let mix = Complex::from_polar(T::one(), -(gamma + gamma));
    Ok(coulomb_u1(g, m, z, tol)? - mix * coulomb_u2(g, m, z, tol)?)
}

/// Large-`z` form of `u₁`: `e^{z/2} z^{−g} Γ(1 + 2iM)/Γ(½ + iM − g)`.
pub fn coulomb_u1_asymptotic<T: Real>(g: T, m: T, z: T) -> Result<Complex<T>> {
    require_z("coulomb_u1_asymptotic", z)?;
    let p = KummerParams::new(
        Complex::new(lit::<T>(0.5) - g, m),
        Complex::new(T::one(), m + m),
    )?;
    Ok(envelope(m, z) * kummer_asymptotic(&p, z)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nat() -> PhysicalParams<f64> {
        PhysicalParams::natural()
    }

    #[test]
    fn scaling_values() {
        let s = coulomb_scaling(nat(), 1.0, -0.5).unwrap();
        assert!((s.r0 - 0.5).abs() < 1e-15 && (s.g - 1.0).abs() < 1e-15);
        let s = coulomb_scaling(nat(), 1.0, -2.0).unwrap();
        assert!((s.r0 - 0.25).abs() < 1e-15 && (s.g - 0.5).abs() < 1e-15);
        assert!(coulomb_scaling(nat(), 1.0, 0.0).is_err());
        assert!(coulomb_scaling(nat(), 1.0, 1.0).is_err());
        let mut last = 0.0;
        for k in 1..50 {
            let e = -10.0 / k as f64;
            let g = coulomb_scaling(nat(), 1.0, e).unwrap().g;
            assert!(g > last);
            last = g;
        }
        let g = 0.8;
        let e = energy_from_g(nat(), 1.3, g);
        assert!((coulomb_scaling(nat(), 1.3, e).unwrap().g - g).abs() < 1e-15);
    }

    #[test]
    fn closed_spectrum_values() {
        assert_eq!(coulomb_closed_spectrum(nat(), 1.0, 0, 0.0), Complex::new(-2.0, 0.0));
        let e = coulomb_closed_spectrum(nat(), 1.0, 0, 1.0);
        assert!((e - Complex::new(0.24, 0.32)).norm() < 1e-15);
        for n in 0..6 {
            let a = coulomb_closed_spectrum(nat(), 1.0, n, 0.7);
            let b = coulomb_closed_spectrum(nat(), 1.0, n, -0.7);
            assert!((a - b.conj()).norm() < 1e-15);
            assert!(a.im != 0.0);
        }
    }

    #[test]
    fn first_solution_values() {
        // g = 1/2, M = 0: F(0, 1, z) = 1
        let v = coulomb_u1(0.5, 0.0, 1.0, 1e-13).unwrap();
        assert!((v.re - (-0.5f64).exp()).abs() < 1e-15 && v.im == 0.0);
        // 40-digit mpmath reference
        let v = coulomb_u1(2.0, 1.0, 1.0, 1e-13).unwrap();
        let want = Complex::new(0.568_935_495_806_037_05, 0.525_975_760_277_787_02);
        assert!((v - want).norm() < 1e-13);
        let v = coulomb_u1(0.7, 0.5, 7.5, 1e-13).unwrap();
        let want = Complex::new(-1.944_791_296_159_090_2, 4.015_754_308_398_442_2);
        assert!((v - want).norm() < 1e-12 * want.norm());
        let w = coulomb_u2(2.0, 1.0, 1.0, 1e-13).unwrap();
        assert!((w - coulomb_u1(2.0, 1.0, 1.0, 1e-13).unwrap().conj()).norm() < 1e-15);
        assert!(coulomb_u1(1.0, 1.0, 0.0, 1e-13).is_err());
    }

    #[test]
    fn small_z_modulus_is_sqrt_z() {
        for m in [0.5, 1.0, 3.0] {
            for z in [1e-8f64, 1e-6] {
                let v = coulomb_u1(1.3, m, z, 1e-13).unwrap();
                assert!((v.norm() / z.sqrt() - 1.0).abs() < 1e-5);
            }
        }
    }

    #[test]
    fn m_zero_second_solution_is_first() {
        let a = coulomb_u1(0.9, 0.0, 2.5, 1e-13).unwrap();
        let b = coulomb_u2(0.9, 0.0, 2.5, 1e-13).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.im, 0.0);
    }
}
