use num_complex::Complex;

use super::nonpositive_integer;
use crate::error::{Error, Result};
use crate::scalar::{cplx, is_finite_c, lit, to_f64, tol_floor, Real};

/// Distance from a non-positive integer below which `ln_gamma` reports a pole.
pub const POLE_TOL: f64 = 1e-14;

// Lanczos approximation, g = 7, n = 9.
const LANCZOS_G: f64 = 7.0;
const LANCZOS_COEF: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// Log-Gamma on the principal branch.
///
/// This is the analytic continuation of the real `ln Γ(x)` from the positive
/// axis, with the branch cut along the negative real axis. It is continuous
/// along any path that avoids that cut, so its imaginary part is an unwound
/// `arg Γ(z)`. On the cut itself the limit from the upper half-plane is
/// returned.
pub fn ln_gamma<T: Real>(z: Complex<T>) -> Result<Complex<T>> {
    if !is_finite_c(z) {
        return Err(Error::domain("ln_gamma", "non-finite argument"));
    }
    if nonpositive_integer(z, tol_floor(POLE_TOL)).is_some() {
        return Err(pole(z));
    }
    let w = if z.im < T::zero() {
        upper(z.conj()).conj()
    } else {
        upper(z)
    };
    if is_finite_c(w) {
        Ok(w)
    } else {
        Err(pole(z))
    }
}

/// `Γ(z) = exp(ln Γ(z))`.
pub fn gamma<T: Real>(z: Complex<T>) -> Result<Complex<T>> {
    ln_gamma(z).map(|w| w.exp())
}

fn pole<T: Real>(z: Complex<T>) -> Error {
    Error::Pole {
        function: "ln_gamma",
        re: to_f64(z.re),
        im: to_f64(z.im),
    }
}

// Im z >= 0.
fn upper<T: Real>(z: Complex<T>) -> Complex<T> {
    let half = lit::<T>(0.5);
    if z.re >= half {
        return lanczos(z);
    }
    // Reflection: ln Γ(z) = ln π − ln sin(πz) − ln Γ(1 − z). In the upper
    // half-plane sin(πz) = (i/2) e^{−iπz} (1 − e^{2iπz}) with |e^{2iπz}| ≤ 1,
    // which gives a branch of ln sin(πz) continuous in y ≥ 0 and equal to 0
    // at z = 1/2.
    let pi = T::PI();
    let i = cplx(T::zero(), T::one());
    let w = (i * z * (pi + pi)).exp();
    let ln_sin = cplx(half.ln(), half * pi) - i * z * pi + (Complex::from(T::one()) - w).ln();
    Complex::from(pi.ln()) - ln_sin - lanczos(Complex::from(T::one()) - z)
}

// Valid for Re z >= 1/2, either sign of Im z.
fn lanczos<T: Real>(z: Complex<T>) -> Complex<T> {
    let half = lit::<T>(0.5);
    let zm1 = z - T::one();
    let mut sum = Complex::from(lit::<T>(LANCZOS_COEF[0]));
    for (k, &c) in LANCZOS_COEF.iter().enumerate().skip(1) {
        sum = sum + Complex::from(lit::<T>(c)) / (zm1 + lit::<T>(k as f64));
    }
    let t = zm1 + lit::<T>(LANCZOS_G) + half;
    let ln_sqrt_2pi = half * (T::PI() + T::PI()).ln();
    Complex::from(ln_sqrt_2pi) + (zm1 + half) * t.ln() - t + sum.ln()
}
