use num_complex::Complex;

use crate::error::{Error, Result};
use crate::model::{radial_coefficient, AngularEigenvalue, PhysicalParams, SystemKind};
use crate::scalar::{lit, to_f64, Real};

/// Amplitude at which the running solution is rescaled.
pub const RENORM_THRESHOLD: f64 = 1e100;
/// Upper bound on `h²·max|Q|` for either grid segment.
pub const STEP_LIMIT: f64 = 0.01;

/// Grid and start-up settings for [`integrate_radial`].
///
/// Lengths are in units of `r₀(E) = ħ/(2√(2m|E|))`, so one configuration
/// serves a whole energy scan. The grid is logarithmic on `[r_min, r₀]` with
/// `steps` intervals and linear beyond, with the matching step.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShootingConfig<T> {
    pub r_min: T,
    pub r_max: T,
    pub steps: usize,
    /// The outer edge is pushed past `r_max` until the decaying solution has
    /// fallen by this factor from its peak.
    pub decay_threshold: T,
}

impl<T: Real> Default for ShootingConfig<T> {
    fn default() -> Self {
        Self {
            r_min: lit(1e-6),
            r_max: lit(50.0),
            steps: 4000,
            decay_threshold: lit(1e-12),
        }
    }
}

impl<T: Real> ShootingConfig<T> {
    pub fn validate(&self) -> Result<()> {
        let one = T::one();
        if !(self.r_min > T::zero() && self.r_min < one) {
            return Err(Error::Config("r_min must lie in (0, 1) in units of r0".into()));
        }
        if !(self.r_max > one) || !self.r_max.is_finite() {
            return Err(Error::Config("r_max must exceed r0".into()));
        }
        if self.steps < 1000 {
            return Err(Error::Config("steps must be at least 1000".into()));
        }
        if !(self.decay_threshold > T::zero() && self.decay_threshold < one) {
            return Err(Error::Config("decay_threshold must lie in (0, 1)".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Outward,
    Inward,
}

/// Samples of `u(r)`. The true value at point `i` is
/// `u_values[i]·exp(log_scale[i])`.
#[derive(Debug, Clone, PartialEq)]
pub struct RadialSolution<T> {
    pub r_grid: Vec<T>,
    pub u_values: Vec<Complex<T>>,
    pub log_scale: Vec<T>,
    pub energy: T,
    pub m: T,
    pub kind: SystemKind<T>,
}

impl<T: Real> RadialSolution<T> {
    /// Wraps externally computed samples, e.g. a closed-form eigenfunction.
    pub fn from_samples(
        r_grid: Vec<T>,
        u_values: Vec<Complex<T>>,
        energy: T,
        m: T,
        kind: SystemKind<T>,
    ) -> Result<Self> {
        if r_grid.len() < 3 || r_grid.len() != u_values.len() {
            return Err(Error::domain("RadialSolution", "need at least 3 samples and equal lengths"));
        }
        if !(r_grid[0] > T::zero()) || r_grid.windows(2).any(|w| !(w[1] > w[0])) {
            return Err(Error::domain("RadialSolution", "grid must be positive and strictly increasing"));
        }
        let log_scale = vec![T::zero(); r_grid.len()];
        Ok(Self {
            r_grid,
            u_values,
            log_scale,
            energy,
            m,
            kind,
        })
    }

    pub fn len(&self) -> usize {
        self.r_grid.len()
    }

    pub fn is_empty(&self) -> bool {
        self.r_grid.is_empty()
    }

    /// All samples brought to the common scale `exp(max log_scale)`.
    pub fn rescaled(&self) -> Vec<Complex<T>> {
        let top = self
            .log_scale
            .iter()
            .copied()
            .fold(T::neg_infinity(), T::max);
        self.u_values
            .iter()
            .zip(&self.log_scale)
            .map(|(&u, &s)| u * (s - top).exp())
            .collect()
    }
}

// Log segment x_k = ln r_min + k h_x (k = 0..=n_log, ending at r₀) followed by
// r₀ + k h_lin. h_lin = r₀(1 − e^{−h_x}) puts r₀ − h_lin on the log grid, so
// either segment can take over from the last two points of the other.
pub(crate) struct Grid<T> {
    pub r: Vec<T>,
    pub n_log: usize,
    pub h_x: T,
    pub h_lin: T,
}

/// Coupling `g = mα/(ħ√(2m|E|))` that sets the decay length of the outer tail.
fn tail_coupling<T: Real>(kind: SystemKind<T>, pp: PhysicalParams<T>, e: T) -> T {
    let kappa = (lit::<T>(2.0) * pp.mass() * e.abs()).sqrt();
    pp.mass() * kind.alpha() / (pp.hbar() * kappa)
}

pub(crate) fn scale_of<T: Real>(pp: PhysicalParams<T>, e: T) -> T {
    let kappa = (lit::<T>(2.0) * pp.mass() * e.abs()).sqrt();
    pp.hbar() / (kappa + kappa)
}

fn build_grid<T: Real>(kind: SystemKind<T>, pp: PhysicalParams<T>, e: T, cfg: &ShootingConfig<T>) -> Grid<T> {
    let r0 = scale_of(pp, e);
    let n_log = cfg.steps;
    let x0 = cfg.r_min.ln();
    let h_x = -x0 / lit(n_log as f64);
    let mut r = Vec::with_capacity(n_log + 1);
    for k in 0..n_log {
        r.push(r0 * (x0 + h_x * lit(k as f64)).exp());
    }
    r.push(r0);
    let g = tail_coupling(kind, pp, e);
    let z_max = cfg
        .r_max
        .max(lit::<T>(4.0) * g + lit::<T>(2.0) * (-cfg.decay_threshold.ln()));
    let h_z = T::one() - (-h_x).exp();
    let n_lin = ((z_max - T::one()) / h_z).ceil().to_usize().unwrap_or(1).max(2);
    for k in 1..=n_lin {
        r.push(r0 + r0 * h_z * lit(k as f64));
    }
    Grid {
        r,
        n_log,
        h_x,
        h_lin: r0 * h_z,
    }
}

/// Integrates `u'' + Q(r)u = 0` with Numerov's method on the stitched
/// log/linear grid.
///
/// `start_values` are `u` at the first two grid points in the direction of
/// integration (the two innermost for `Outward`, the two outermost for
/// `Inward`).
pub fn integrate_radial<T: Real>(
    kind: SystemKind<T>,
    pp: PhysicalParams<T>,
    m: T,
    e: T,
    cfg: &ShootingConfig<T>,
    direction: Direction,
    start_values: [Complex<T>; 2],
) -> Result<RadialSolution<T>> {
    let grid = prepare(kind, pp, m, e, cfg)?;
    integrate_on(&grid, kind, pp, m, e, direction, start_values)
}

pub(crate) fn prepare<T: Real>(
    kind: SystemKind<T>,
    pp: PhysicalParams<T>,
    m: T,
    e: T,
    cfg: &ShootingConfig<T>,
) -> Result<Grid<T>> {
    cfg.validate()?;
    if e == T::zero() || !e.is_finite() {
        return Err(Error::domain("integrate_radial", "requires finite E != 0"));
    }
    if !m.is_finite() {
        return Err(Error::domain("integrate_radial", "M must be finite"));
    }
    let grid = build_grid(kind, pp, e, cfg);
    let am = AngularEigenvalue::new(m)?;
    let quarter = lit::<T>(0.25);
    let mut worst_log = T::zero();
    for &r in &grid.r[..=grid.n_log] {
        let f = r * r * radial_coefficient(kind, pp, am, e, r)? - quarter;
        worst_log = worst_log.max(f.abs());
    }
    let mut worst_lin = T::zero();
    for &r in &grid.r[grid.n_log - 1..] {
        worst_lin = worst_lin.max(radial_coefficient(kind, pp, am, e, r)?.abs());
    }
    let limit = lit::<T>(STEP_LIMIT);
    let a = grid.h_x * grid.h_x * worst_log;
    let b = grid.h_lin * grid.h_lin * worst_lin;
    if !(a <= limit) || !(b <= limit) {
        return Err(Error::Config(format!(
            "step too coarse: h^2 max|Q| = {:.3e} (log), {:.3e} (linear), limit {STEP_LIMIT}",
            to_f64(a),
            to_f64(b)
        )));
    }
    Ok(grid)
}

struct Track<T> {
    u: Vec<Complex<T>>,
    scale: Vec<T>,
    current: T,
}

impl<T: Real> Track<T> {
    fn store(&mut self, i: usize, u: Complex<T>) {
        self.u[i] = u;
        self.scale[i] = self.current;
    }
}

pub(crate) fn integrate_on<T: Real>(
    grid: &Grid<T>,
    kind: SystemKind<T>,
    pp: PhysicalParams<T>,
    m: T,
    e: T,
    direction: Direction,
    start_values: [Complex<T>; 2],
) -> Result<RadialSolution<T>> {
    if !start_values.iter().all(|u| u.re.is_finite() && u.im.is_finite()) {
        return Err(Error::domain("integrate_radial", "start values must be finite"));
    }
    let am = AngularEigenvalue::new(m)?;
    let n = grid.r.len();
    let nl = grid.n_log;
    let q: Vec<T> = grid
        .r
        .iter()
        .map(|&r| radial_coefficient(kind, pp, am, e, r))
        .collect::<Result<_>>()?;
    let quarter = lit::<T>(0.25);
    let f_log = |i: usize| grid.r[i] * grid.r[i] * q[i] - quarter;
    let mut tr = Track {
        u: vec![Complex::from(T::zero()); n],
        scale: vec![T::zero(); n],
        current: T::zero(),
    };
    let sq = |i: usize| grid.r[i].sqrt();

    match direction {
        Direction::Outward => {
            tr.store(0, start_values[0]);
            tr.store(1, start_values[1]);
            let mut y = [start_values[0] / sq(0), start_values[1] / sq(1)];
            for k in 1..nl {
                let next = numerov_step(y, [f_log(k - 1), f_log(k), f_log(k + 1)], grid.h_x);
                y = [y[1], next];
                renorm(&mut y, &mut tr);
                tr.store(k + 1, next_scaled(&y) * sq(k + 1));
            }
            // Hand over at r₀ − h_lin (index nl − 1) and r₀ (index nl).
            let mut y = [tr.u[nl - 1] * (tr.scale[nl - 1] - tr.current).exp(), tr.u[nl]];
            for k in nl..n - 1 {
                let next = numerov_step(y, [q[k - 1], q[k], q[k + 1]], grid.h_lin);
                y = [y[1], next];
                renorm(&mut y, &mut tr);
                tr.store(k + 1, next_scaled(&y));
            }
        }
        Direction::Inward => {
            tr.store(n - 1, start_values[0]);
            tr.store(n - 2, start_values[1]);
            let mut y = start_values;
            // Linear segment down to r₀ − h_lin, which is log-grid index nl − 1.
            let mut k = n - 2;
            while k > nl {
                let next = numerov_step(y, [q[k + 1], q[k], q[k - 1]], grid.h_lin);
                y = [y[1], next];
                renorm(&mut y, &mut tr);
                tr.store(k - 1, next_scaled(&y));
                k -= 1;
            }
            let next = numerov_step(y, [q[nl + 1], q[nl], q[nl - 1]], grid.h_lin);
            y = [y[1], next];
            renorm(&mut y, &mut tr);
            tr.store(nl - 1, next_scaled(&y));
            let mut w = [y[0] / sq(nl), y[1] / sq(nl - 1)];
            for k in (1..nl).rev() {
                let next = numerov_step(w, [f_log(k + 1), f_log(k), f_log(k - 1)], grid.h_x);
                w = [w[1], next];
                renorm(&mut w, &mut tr);
                tr.store(k - 1, next_scaled(&w) * sq(k - 1));
            }
        }
    }

    Ok(RadialSolution {
        r_grid: grid.r.clone(),
        u_values: tr.u,
        log_scale: tr.scale,
        energy: e,
        m,
        kind,
    })
}

fn next_scaled<T: Real>(y: &[Complex<T>; 2]) -> Complex<T> {
    y[1]
}

fn renorm<T: Real>(y: &mut [Complex<T>; 2], tr: &mut Track<T>) {
    let big = y[1].norm().max(y[0].norm());
    if big > lit(RENORM_THRESHOLD) {
        let inv = big.recip();
        y[0] = y[0] * inv;
        y[1] = y[1] * inv;
        tr.current = tr.current + big.ln();
    }
}

/// One Numerov step for `y'' + f y = 0` on a uniform grid: given `y` at the
/// previous two points and `f` at those points and the next, returns the
/// next `y`.
pub fn numerov_step<T: Real>(y: [Complex<T>; 2], f: [T; 3], h: T) -> Complex<T> {
    let c = h * h / lit(12.0);
    let ten = lit::<T>(10.0);
    let one = T::one();
    let two = lit::<T>(2.0);
    (y[1] * (two * (one - ten * c * f[1] / two)) - y[0] * (one + c * f[0])) / (one + c * f[2])
}

/// Numerov integration of `u'' + q(r)u = 0` on the uniform grid
/// `r_start + k·h`, `k = 0..=steps`, from the first two samples.
pub fn numerov_uniform<T: Real>(
    q: impl Fn(T) -> T,
    r_start: T,
    h: T,
    steps: usize,
    start_values: [Complex<T>; 2],
) -> (Vec<T>, Vec<Complex<T>>) {
    let r: Vec<T> = (0..=steps).map(|k| r_start + h * lit(k as f64)).collect();
    let mut u = Vec::with_capacity(steps + 1);
    u.push(start_values[0]);
    u.push(start_values[1]);
    let mut y = start_values;
    for k in 1..steps {
        let next = numerov_step(y, [q(r[k - 1]), q(r[k]), q(r[k + 1])], h);
        y = [y[1], next];
        u.push(next);
    }
    (r, u)
}

/// `max |u''_fd + Q u| / max |Q u|` over interior points, with the
/// three-point second difference adapted to the local spacing.
pub fn ode_residual<T: Real>(sol: &RadialSolution<T>, pp: PhysicalParams<T>) -> Result<T> {
    if sol.len() < 3 {
        return Err(Error::domain("ode_residual", "need at least 3 samples"));
    }
    let am = AngularEigenvalue::new(sol.m)?;
    let u = sol.rescaled();
    let r = &sol.r_grid;
    let q: Vec<T> = r
        .iter()
        .map(|&ri| radial_coefficient(sol.kind, pp, am, sol.energy, ri))
        .collect::<Result<_>>()?;
    let two = lit::<T>(2.0);
    let mut worst = T::zero();
    let mut norm = T::zero();
    for i in 1..r.len() - 1 {
        let hm = r[i] - r[i - 1];
        let hp = r[i + 1] - r[i];
        let d2 = ((u[i + 1] - u[i]) / hp - (u[i] - u[i - 1]) / hm) * (two / (hm + hp));
        worst = worst.max((d2 + u[i] * q[i]).norm());
        norm = norm.max((u[i] * q[i]).norm());
    }
    if norm == T::zero() {
        return Err(Error::domain("ode_residual", "Q u vanishes on the grid"));
    }
    Ok(worst / norm)
}
