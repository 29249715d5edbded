use num_complex::Complex;

use super::numerov::{integrate_on, prepare, scale_of, Direction, ShootingConfig};
use crate::error::{Error, Result};
use crate::model::{radial_coefficient, AngularEigenvalue, PhysicalParams, SystemKind};
use crate::scalar::{lit, to_f64, tol_floor, Real};

/// Relative rms misfit of the near-origin fit tolerated by [`inward_phase`].
pub const FIT_LIMIT: f64 = 1e-4;

const MAX_BISECTIONS: usize = 200;

/// Lifts phases known modulo `π` onto a continuous branch by picking the
/// representative nearest to the previous value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhaseTracker<T> {
    last: Option<T>,
}

impl<T: Real> Default for PhaseTracker<T> {
    fn default() -> Self {
        Self { last: None }
    }
}

impl<T: Real> PhaseTracker<T> {
    pub fn new() -> Self {
        Self::default()
    }

    /// Starts the branch at `value`.
    pub fn seeded(value: T) -> Self {
        Self { last: Some(value) }
    }

    pub fn last(&self) -> Option<T> {
        self.last
    }

    pub fn lift(&mut self, raw: T) -> T {
        let v = match self.last {
            None => raw,
            Some(prev) => lift_near(raw, prev),
        };
        self.last = Some(v);
        v
    }
}

fn lift_near<T: Real>(raw: T, near: T) -> T {
    let pi = T::PI();
    raw + ((near - raw) / pi).round() * pi
}

/// Outer start for inward integration: two samples of the WKB decaying
/// branch at the last grid points.
fn decaying_start<T: Real>(
    kind: SystemKind<T>,
    pp: PhysicalParams<T>,
    am: AngularEigenvalue<T>,
    e: T,
    r_out: T,
    r_in: T,
) -> Result<[Complex<T>; 2]> {
    let q_out = radial_coefficient(kind, pp, am, e, r_out)?;
    let q_in = radial_coefficient(kind, pp, am, e, r_in)?;
    if !(q_out < T::zero() && q_in < T::zero()) {
        return Err(Error::domain("inward_phase", "no decaying solution: Q >= 0 at the outer edge"));
    }
    let k_out = (-q_out).sqrt();
    let k_in = (-q_in).sqrt();
    let rise = (r_out - r_in) * (k_out + k_in) * lit(0.5);
    let ratio = (k_out / k_in).sqrt() * rise.exp();
    Ok([Complex::from(T::one()), Complex::from(ratio)])
}

/// Phase `β` of `u ≈ A√r sin(M ln r + β)` near the origin of the solution
/// that decays at infinity, known modulo `π`, returned in `[0, π)`.
///
/// Lengths inside the logarithm are physical, so the result is directly
/// comparable with `γ − M ln r₀`.
pub fn inward_phase<T: Real>(
    kind: SystemKind<T>,
    pp: PhysicalParams<T>,
    m: T,
    e: T,
    cfg: &ShootingConfig<T>,
) -> Result<T> {
    if m == T::zero() {
        return Err(Error::domain("inward_phase", "requires M != 0"));
    }
    if !(e < T::zero()) {
        return Err(Error::domain("inward_phase", "requires E < 0"));
    }
    let am = AngularEigenvalue::new(m)?;
    let grid = prepare(kind, pp, m, e, cfg)?;
    let n = grid.r.len();
    let start = decaying_start(kind, pp, am, e, grid.r[n - 1], grid.r[n - 2])?;
    let sol = integrate_on(&grid, kind, pp, m, e, Direction::Inward, start)?;

    let r_top = cfg.r_min * lit(10.0) * scale_of(pp, e);
    let u = sol.rescaled();
    let (mut ss, mut sc, mut cc, mut sw, mut cw) = (T::zero(), T::zero(), T::zero(), T::zero(), T::zero());
    let mut samples = Vec::new();
    for (&r, ui) in sol.r_grid.iter().zip(&u) {
        if r > r_top * (T::one() + lit(1e-9)) {
            break;
        }
        let w = ui.re / r.sqrt();
        let th = m * r.ln();
        let (s, c) = (th.sin(), th.cos());
        ss = ss + s * s;
        sc = sc + s * c;
        cc = cc + c * c;
        sw = sw + s * w;
        cw = cw + c * w;
        samples.push((s, c, w));
    }
    let det = ss * cc - sc * sc;
    if samples.len() < 3 || !(det.abs() > T::epsilon()) {
        return Err(Error::domain("inward_phase", "fit window too short"));
    }
    let a = (sw * cc - cw * sc) / det;
    let b = (cw * ss - sw * sc) / det;
    let amp = (a * a + b * b).sqrt();
    let mut sq = T::zero();
    for &(s, c, w) in &samples {
        let d = w - a * s - b * c;
        sq = sq + d * d;
    }
    let rms = (sq / lit(samples.len() as f64)).sqrt() / amp;
    if !(rms <= lit(FIT_LIMIT)) {
        return Err(Error::FitQuality {
            residual: to_f64(rms),
            limit: FIT_LIMIT,
        });
    }
    let pi = T::PI();
    let beta = b.atan2(a);
    let reduced = beta - (beta / pi).floor() * pi;
    Ok(if reduced >= pi { T::zero() } else { reduced })
}

/// Energies inside `window = (lo, hi)` where the lifted `β_num` has moved by
/// `π, 2π, …` from its value at the anchor `hi`, ordered away from the anchor.
pub fn shoot_eigenvalues<T: Real>(
    kind: SystemKind<T>,
    pp: PhysicalParams<T>,
    m: T,
    window: (T, T),
    count: usize,
    cfg: &ShootingConfig<T>,
    tol: T,
) -> Result<Vec<T>> {
    let (lo, hi) = window;
    if !(lo < hi && hi < T::zero()) {
        return Err(Error::domain("shoot_eigenvalues", "window must satisfy lo < hi < 0"));
    }
    if m == T::zero() || !m.is_finite() {
        return Err(Error::domain("shoot_eigenvalues", "requires M != 0"));
    }
    if let SystemKind::Oscillator { .. } = kind {
        return Err(Error::domain(
            "shoot_eigenvalues",
            "negative-energy scans are implemented for the free and Coulomb systems",
        ));
    }
    let tol = tol_floor::<T>(to_f64(tol));
    let beta = |t: T| inward_phase(kind, pp, m, -t.exp(), cfg);

    // dβ/dt ≤ |M|/2 + (g/2)(π + 1/|M|) with t = ln(−E); g is largest at the anchor.
    let t_hi = (-hi).ln();
    let t_lo = (-lo).ln();
    let kappa = (lit::<T>(2.0) * pp.mass() * (-hi)).sqrt();
    let g_max = pp.mass() * kind.alpha() / (pp.hbar() * kappa);
    let half = lit::<T>(0.5);
    let slope = m.abs() * half + g_max * half * (T::PI() + m.abs().recip());
    let step = (T::PI() / lit(4.0) / slope).min(half);

    let sign = m.signum();
    let b0 = beta(t_hi)?;
    let mut tracker = PhaseTracker::seeded(b0);
    let mut out = Vec::with_capacity(count);
    let mut t_a = t_hi;
    let mut b_a = b0;
    while out.len() < count && t_a < t_lo {
        let t_b = (t_a + step).min(t_lo);
        let b_b = tracker.lift(beta(t_b)?);
        // Levels crossed inside this step, in order.
        let k_a = ((b_a - b0) * sign / T::PI()).floor();
        let k_b = ((b_b - b0) * sign / T::PI()).floor();
        let mut k = k_a + T::one();
        while k <= k_b && out.len() < count {
            let target = b0 + sign * k * T::PI();
            out.push(-refine(&beta, t_a, b_a, t_b, target, tol)?.exp());
            k = k + T::one();
        }
        t_a = t_b;
        b_a = b_b;
    }
    if out.len() < count {
        return Err(Error::InsufficientRoots {
            found: out.len(),
            wanted: count,
        });
    }
    Ok(out)
}

fn refine<T: Real>(
    beta: &impl Fn(T) -> Result<T>,
    mut a: T,
    b_a: T,
    mut b: T,
    target: T,
    tol: T,
) -> Result<T> {
    let below = b_a < target;
    for _ in 0..MAX_BISECTIONS {
        if b - a <= tol {
            break;
        }
        let mid = (a + b) * lit(0.5);
        let v = lift_near(beta(mid)?, b_a);
        if (v < target) == below {
            a = mid;
        } else {
            b = mid;
        }
    }
    Ok((a + b) * lit(0.5))
}
