use num_complex::Complex;

use super::{ln_gamma, nonpositive_integer};
use crate::error::{Error, Result};
use crate::scalar::{is_finite_c, lit, to_f64, tol_floor, Real};

/// Maximum number of series terms before `kummer_m` gives up.
pub const DEFAULT_TERM_CAP: usize = 10_000;
/// Default relative tolerance for the series tail.
pub const DEFAULT_TOL: f64 = 1e-13;
/// `a` within this distance of `-n` is treated as the terminating polynomial.
pub const TERMINATION_TOL: f64 = 1e-12;

/// Parameters `(a, c)` of `F(a, c, z)`. `c` is never a non-positive integer.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KummerParams<T> {
    a: Complex<T>,
    c: Complex<T>,
}

impl<T: Real> KummerParams<T> {
    pub fn new(a: Complex<T>, c: Complex<T>) -> Result<Self> {
        if !is_finite_c(a) || !is_finite_c(c) {
            return Err(Error::domain("KummerParams", "non-finite parameter"));
        }
        if nonpositive_integer(c, tol_floor(TERMINATION_TOL)).is_some() {
            return Err(Error::Pole {
                function: "kummer_m",
                re: to_f64(c.re),
                im: to_f64(c.im),
            });
        }
        Ok(Self { a, c })
    }

    pub fn a(&self) -> Complex<T> {
        self.a
    }

    pub fn c(&self) -> Complex<T> {
        self.c
    }

    /// `n` when `a = -n` and the series is a degree-`n` polynomial.
    pub fn terminating_degree(&self) -> Option<u64> {
        nonpositive_integer(self.a, tol_floor(TERMINATION_TOL))
    }

    /// Parameters `(a - c + 1, 2 - c)` of the second solution.
    pub fn second_kind(&self) -> Result<Self> {
        let one = Complex::from(T::one());
        Self::new(self.a - self.c + one, one + one - self.c)
    }
}

/// Kummer's function `F(a, c, z) = Σ (a)_k / (c)_k z^k / k!` for real `z >= 0`.
pub fn kummer_m<T: Real>(p: &KummerParams<T>, z: T, tol: T) -> Result<Complex<T>> {
    kummer_m_capped(p, z, tol, DEFAULT_TERM_CAP)
}

/// [`kummer_m`] with an explicit cap on the number of series terms.
///
/// The sum stops once the geometric bound on the remaining tail falls below
/// `tol * |partial sum|`. The bound is only trusted past the series peak,
/// i.e. once the term index exceeds `|a| + |c| + z`.
pub fn kummer_m_capped<T: Real>(
    p: &KummerParams<T>,
    z: T,
    tol: T,
    cap: usize,
) -> Result<Complex<T>> {
    if !(z >= T::zero()) || !z.is_finite() {
        return Err(Error::domain("kummer_m", "requires finite z >= 0"));
    }
    if !(tol > T::zero()) {
        return Err(Error::domain("kummer_m", "requires tol > 0"));
    }
    let one = Complex::from(T::one());
    if z == T::zero() {
        return Ok(one);
    }
    let (a, c) = (p.a, p.c);

    if let Some(n) = p.terminating_degree() {
        let a = Complex::from(-lit::<T>(n as f64));
        let mut term = one;
        let mut sum = one;
        for k in 0..n {
            let kf = lit::<T>(k as f64);
            term = term * (a + kf) / (c + kf) * (z / (kf + T::one()));
            sum = sum + term;
        }
        return finite_or_overflow(sum);
    }

    let peak = a.norm() + c.norm() + z;
    let mut term = one;
    let mut sum = one;
    for k in 0..cap {
        let kf = lit::<T>(k as f64);
        term = term * (a + kf) / (c + kf) * (z / (kf + T::one()));
        sum = sum + term;
        let next = kf + T::one();
        if next > peak {
            let ratio = (a + next).norm() / (c + next).norm() * z / (next + T::one());
            if ratio < T::one() && term.norm() * ratio / (T::one() - ratio) <= tol * sum.norm() {
                return finite_or_overflow(sum);
            }
        }
    }
    Err(Error::NonConvergence {
        function: "kummer_m",
        terms: cap,
    })
}

/// The second Kummer solution `Φ(a, c, z) = z^(1-c) F(a-c+1, 2-c, z)`, `z > 0`.
pub fn kummer_second<T: Real>(p: &KummerParams<T>, z: T, tol: T) -> Result<Complex<T>> {
    if !(z > T::zero()) {
        return Err(Error::domain("kummer_second", "requires z > 0"));
    }
    let shifted = p.second_kind()?;
    let power = ((Complex::from(T::one()) - p.c) * z.ln()).exp();
    Ok(power * kummer_m(&shifted, z, tol)?)
}

/// Leading large-`z` behaviour `Γ(c)/Γ(a) e^z z^(a-c)` of `F(a, c, z)`.
pub fn kummer_asymptotic<T: Real>(p: &KummerParams<T>, z: T) -> Result<Complex<T>> {
    if !(z > T::zero()) {
        return Err(Error::domain("kummer_asymptotic", "requires z > 0"));
    }
    if p.terminating_degree().is_some() {
        return Err(Error::Pole {
            function: "kummer_asymptotic",
            re: to_f64(p.a.re),
            im: to_f64(p.a.im),
        });
    }
    let exponent = ln_gamma(p.c)? - ln_gamma(p.a)? + z + (p.a - p.c) * z.ln();
    finite_or_overflow(exponent.exp())
}

fn finite_or_overflow<T: Real>(v: Complex<T>) -> Result<Complex<T>> {
    if is_finite_c(v) {
        Ok(v)
    } else {
        Err(Error::domain("kummer_m", "result overflowed"))
    }
}
