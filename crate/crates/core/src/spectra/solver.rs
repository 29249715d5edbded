use std::ops::RangeInclusive;

use num_complex::Complex;

use super::phase::{gamma_continuous, quantization_f};
use super::{Branch, SpectrumEntry};
use crate::error::{Error, Result};
use crate::model::PhysicalParams;
use crate::scalar::{lit, to_f64, tol_floor, Real};

const MAX_BISECTIONS: usize = 400;

/// Bracketing grid and search window for the quantization-condition solvers.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolverConfig<T> {
    /// Scan points per decade of `g`.
    pub points_per_decade: usize,
    /// The search never leaves `|E| ∈ |E₀|·[10^{−d}, 10^{d}]`.
    pub window_decades: T,
}

impl<T: Real> Default for SolverConfig<T> {
    fn default() -> Self {
        Self {
            points_per_decade: 64,
            window_decades: lit(40.0),
        }
    }
}

impl<T: Real> SolverConfig<T> {
    fn validate(&self) -> Result<()> {
        if self.points_per_decade == 0 {
            return Err(Error::Config("points_per_decade must be positive".into()));
        }
        if !(self.window_decades > T::zero()) || !self.window_decades.is_finite() {
            return Err(Error::Config("window_decades must be positive".into()));
        }
        Ok(())
    }

    /// Real Coulomb levels `β(E_n) = β(E₀) + πn`, `alpha = 0` being the free
    /// particle.
    pub fn coulomb(
        &self,
        pp: PhysicalParams<T>,
        alpha: T,
        m: T,
        e0: T,
        n_range: RangeInclusive<i64>,
        tol: T,
    ) -> Result<Vec<SpectrumEntry<T>>> {
        self.validate()?;
        if !(e0 < T::zero()) || !e0.is_finite() {
            return Err(Error::domain("solve_quantized_spectrum", "requires E0 < 0"));
        }
        if m == T::zero() || !m.is_finite() {
            return Err(Error::domain("solve_quantized_spectrum", "requires finite M != 0"));
        }
        if !(alpha >= T::zero()) || !alpha.is_finite() {
            return Err(Error::domain("solve_quantized_spectrum", "requires alpha >= 0"));
        }
        // β(t) with t = ln(−E): g ∝ e^{−t/2} and −M ln r₀ = M t/2 + const.
        let two = lit::<T>(2.0);
        let g_of = |t: T| {
            let kappa = (two * pp.mass() * t.exp()).sqrt();
            pp.mass() * alpha / (pp.hbar() * kappa)
        };
        let phase = |t: T| -> Result<T> {
            let g = g_of(t);
            Ok(gamma_continuous(g, m).map_err(|e| pole_crossing(e, g))? + m * t / two)
        };
        let step = lit::<T>(std::f64::consts::LN_10) * two / lit(self.points_per_decade as f64);
        let search = Search {
            t0: (-e0).ln(),
            step,
            span: self.window_decades * lit(std::f64::consts::LN_10),
            slope: m.signum(),
            tol: tol_floor(to_f64(tol)),
        };
        let mut out = Vec::new();
        for n in n_range {
            let t = search.root(&phase, n, lit::<T>(n as f64) * T::PI())?;
            let energy = if n == 0 { e0 } else { -t.exp() };
            out.push(SpectrumEntry {
                n,
                m,
                energy: Complex::from(energy),
                branch: Branch::QuantizedThird,
            });
        }
        Ok(out)
    }

    /// Real oscillator levels from `f(g_n) = f(g₀) − πn`, `g = E/(2ħω)`,
    /// evaluated at the Coulomb angular number `M_osc/2`. Negative `n` descend
    /// toward `E = 0⁺`.
    pub fn oscillator(
        &self,
        pp: PhysicalParams<T>,
        omega: T,
        m_osc: T,
        e0_osc: T,
        n_range: RangeInclusive<i64>,
        tol: T,
    ) -> Result<Vec<SpectrumEntry<T>>> {
        self.validate()?;
        if !(e0_osc > T::zero()) || !e0_osc.is_finite() {
            return Err(Error::domain("oscillator_quantized_spectrum", "requires E0_osc > 0"));
        }
        if m_osc == T::zero() || !m_osc.is_finite() {
            return Err(Error::domain("oscillator_quantized_spectrum", "requires finite M_osc != 0"));
        }
        if !(omega > T::zero()) || !omega.is_finite() {
            return Err(Error::domain("oscillator_quantized_spectrum", "requires omega > 0"));
        }
        let m_c = m_osc / lit(2.0);
        let two_hw = lit::<T>(2.0) * pp.hbar() * omega;
        let phase = |t: T| -> Result<T> {
            let g = t.exp() / two_hw;
            quantization_f(g, m_c).map_err(|e| pole_crossing(e, g))
        };
        let search = Search {
            t0: e0_osc.ln(),
            step: lit::<T>(std::f64::consts::LN_10) / lit(self.points_per_decade as f64),
            span: self.window_decades * lit(std::f64::consts::LN_10),
            slope: -m_c.signum(),
            tol: tol_floor(to_f64(tol)),
        };
        let mut out = Vec::new();
        for n in n_range {
            let t = search.root(&phase, n, -lit::<T>(n as f64) * T::PI())?;
            let energy = if n == 0 { e0_osc } else { t.exp() };
            out.push(SpectrumEntry {
                n,
                m: m_osc,
                energy: Complex::from(energy),
                branch: Branch::QuantizedThird,
            });
        }
        Ok(out)
    }
}

/// [`SolverConfig::coulomb`] with the default grid.
pub fn solve_quantized_spectrum<T: Real>(
    pp: PhysicalParams<T>,
    alpha: T,
    m: T,
    e0: T,
    n_range: RangeInclusive<i64>,
    tol: T,
) -> Result<Vec<SpectrumEntry<T>>> {
    SolverConfig::default().coulomb(pp, alpha, m, e0, n_range, tol)
}

/// [`SolverConfig::oscillator`] with the default grid.
pub fn oscillator_quantized_spectrum<T: Real>(
    pp: PhysicalParams<T>,
    omega: T,
    m_osc: T,
    e0_osc: T,
    n_range: RangeInclusive<i64>,
    tol: T,
) -> Result<Vec<SpectrumEntry<T>>> {
    SolverConfig::default().oscillator(pp, omega, m_osc, e0_osc, n_range, tol)
}

fn pole_crossing(e: Error, g: impl Real) -> Error {
    match e {
        Error::Pole { .. } => Error::PoleCrossing { g: to_f64(g) },
        other => other,
    }
}

// Root search for h(t) − h(t₀) = shift along a strictly monotone h.
struct Search<T> {
    t0: T,
    step: T,
    span: T,
    slope: T,
    tol: T,
}

impl<T: Real> Search<T> {
    fn root(&self, h: &impl Fn(T) -> Result<T>, n: i64, shift: T) -> Result<T> {
        if n == 0 {
            return Ok(self.t0);
        }
        let target = h(self.t0)? + shift;
        let resid = |t: T| h(t).map(|v| v - target);
        let dir = shift.signum() * self.slope;
        let edge = self.t0 + dir * self.span;
        let bracket_err = || {
            let (a, b) = (self.t0.min(edge), self.t0.max(edge));
            Error::Bracket {
                n,
                lo: -to_f64(b.exp()),
                hi: -to_f64(a.exp()),
            }
        };

        let mut a = self.t0;
        let mut ra = -shift;
        let mut b;
        loop {
            let mut next = a + dir * self.step;
            if (next - edge) * dir > T::zero() {
                next = edge;
            }
            let rn = resid(next)?;
            if rn == T::zero() {
                return Ok(next);
            }
            if rn.signum() != ra.signum() {
                b = next;
                break;
            }
            if next == edge {
                return Err(bracket_err());
            }
            a = next;
            ra = rn;
        }

        for _ in 0..MAX_BISECTIONS {
            if (b - a).abs() <= self.tol {
                break;
            }
            let mid = (a + b) * lit(0.5);
            if mid == a || mid == b {
                break;
            }
            let rm = resid(mid)?;
            if rm == T::zero() {
                return Ok(mid);
            }
            if rm.signum() == ra.signum() {
                a = mid;
                ra = rm;
            } else {
                b = mid;
            }
        }
        Ok((a + b) * lit(0.5))
    }
}
