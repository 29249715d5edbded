use std::f64::consts::PI;
use std::io::Write;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::model::{PhysicalParams, SystemKind};
use crate::oracle::{ode_residual, shoot_eigenvalues, RadialSolution, ShootingConfig};
use crate::specfun::{kummer_m, ln_gamma, KummerParams};
use crate::spectra::{
    coulomb_closed_spectrum, coulomb_third, coulomb_u1, coulomb_u2, duality_forward, duality_inverse,
    energy_from_g, gamma_phase, oscillator_closed_spectrum, oscillator_quantized_spectrum, quantization_f,
    scale_length, shallow_spectrum, solve_quantized_spectrum,
};
use crate::Result;

use super::args::{Format, Suite};
use super::emit::Emitter;
use super::CliError;

/// One invariant: passes when `measured <= threshold`.
#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub suite: &'static str,
    pub name: &'static str,
    pub measured: f64,
    pub threshold: f64,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.measured <= self.threshold
    }
}

fn check(suite: &'static str, name: &'static str, measured: Result<f64>, threshold: f64) -> Check {
    Check {
        suite,
        name,
        measured: measured.unwrap_or(f64::NAN),
        threshold,
    }
}

fn rel(a: Complex64, b: Complex64) -> f64 {
    (a - b).norm() / b.norm()
}

fn nat() -> PhysicalParams<f64> {
    PhysicalParams::natural()
}

fn mod_pi(x: f64) -> f64 {
    let d = x.rem_euclid(PI);
    d.min(PI - d)
}

pub fn specfun_checks() -> Vec<Check> {
    let s = "specfun";
    let c = Complex64::new;
    vec![
        check(
            s,
            "ln_gamma(1+2i)",
            ln_gamma(c(1.0, 2.0)).map(|v| rel(v, c(-1.876_078_786_430_929_3, 0.129_646_316_309_788_31))),
            1e-13,
        ),
        check(
            s,
            "ln_gamma(-3.7+2.5i)",
            ln_gamma(c(-3.7, 2.5)).map(|v| rel(v, c(-8.049_706_377_632_446_8, -9.468_499_340_646_115_8))),
            1e-12,
        ),
        check(
            s,
            "ln_gamma(12+30i)",
            ln_gamma(c(12.0, 30.0)).map(|v| rel(v, c(-6.821_617_109_423_758_2, 87.948_161_277_706_036))),
            1e-13,
        ),
        check(
            s,
            "kummer(0.5+i,1+2i,3)",
            KummerParams::new(c(0.5, 1.0), c(1.0, 2.0))
                .and_then(|p| kummer_m(&p, 3.0, 1e-15))
                .map(|v| rel(v, c(5.812_951_501_960_966_2, -1.486_923_334_742_361_5))),
            1e-12,
        ),
        check(
            s,
            "kummer(a,a,20) = e^20",
            KummerParams::new(c(0.7, 2.0), c(0.7, 2.0))
                .and_then(|p| kummer_m(&p, 20.0, 1e-15))
                .map(|v| rel(v, c(20f64.exp(), 0.0))),
            1e-12,
        ),
        check(s, "u2 = conj(u1)", conjugation_defect(), 1e-12),
    ]
}

/// `max |u₂ − conj u₁| / max |u₁|` over 1000 points for the sample parameters.
pub fn conjugation_defect() -> Result<f64> {
    let mut worst: f64 = 0.0;
    for &m in &[0.5, 1.0, 2.0] {
        for &g in &[0.7, 2.3] {
            let mut diff: f64 = 0.0;
            let mut top: f64 = 0.0;
            for i in 0..1000 {
                let z = 0.01 + 30.0 * i as f64 / 999.0;
                let a = coulomb_u1(g, m, z, 1e-15)?;
                let b = coulomb_u2(g, m, z, 1e-15)?;
                diff = diff.max((b - a.conj()).norm());
                top = top.max(a.norm());
            }
            worst = worst.max(diff / top);
        }
    }
    Ok(worst)
}

/// `|u(60)| / max_{z≤60} |u|` for the third solution at `(g, M) = (2, 1)` with
/// the phase shifted by `dgamma`.
pub fn decay_ratio(dgamma: f64) -> Result<f64> {
    let (g, m) = (2.0, 1.0);
    let gamma = gamma_phase(g, m)?.gamma + dgamma;
    let mut top: f64 = 0.0;
    let mut last = 0.0;
    for i in 0..=6000 {
        let z = 0.01 * i.max(1) as f64;
        last = coulomb_third(g, m, gamma, z, 1e-15)?.norm();
        top = top.max(last);
    }
    Ok(last / top)
}

pub fn phase_checks() -> Vec<Check> {
    let s = "phases";
    vec![
        check(
            s,
            "gamma(g=2,M=1)",
            gamma_phase(2.0f64, 1.0).map(|p| (p.gamma - 0.610_497_280_689_300_63).abs()),
            1e-12,
        ),
        check(
            s,
            "gamma(g,-M) = -gamma(g,M) mod pi",
            (|| {
                let mut w: f64 = 0.0;
                for &(g, m) in &[(0.3, 0.8), (2.0, 1.0), (7.5, 2.5)] {
                    w = w.max(mod_pi(gamma_phase(g, -m)?.gamma + gamma_phase(g, m)?.gamma));
                }
                Ok(w)
            })(),
            1e-12,
        ),
        check(
            s,
            "df/dg -> -pi on [50,100]",
            (|| Ok(((quantization_f(100.0, 1.0)? - quantization_f(50.0, 1.0)?) / 50.0 + PI).abs()))(),
            1e-3,
        ),
        check(s, "decay ratio |u(60)|/max|u|", decay_ratio(0.0), 1e-6),
        check(
            s,
            "1e3 / growth under gamma + 0.1",
            (|| Ok(1e3 * decay_ratio(0.0)? / decay_ratio(0.1)?))(),
            1.0,
        ),
    ]
}

pub fn spectra_checks() -> Vec<Check> {
    let s = "spectra";
    let pp = nat();
    let ladder = (2.0 * PI).exp();
    vec![
        check(
            s,
            "closed Coulomb levels n=0..9",
            Ok((0..10u32)
                .map(|n| {
                    let want = -1.0 / (2.0 * (n as f64 + 0.5).powi(2));
                    (coulomb_closed_spectrum(pp, 1.0, n, 0.0).re / want - 1.0).abs()
                })
                .fold(0.0, f64::max)),
            1e-14,
        ),
        check(
            s,
            "closed = shallow(g0=1/2), n<=50",
            (|| {
                let mut w: f64 = 0.0;
                for n in 0..=50u32 {
                    let a = coulomb_closed_spectrum(pp, 1.0, n, 0.0).re;
                    let b = shallow_spectrum(pp, 1.0, 0.5, n as i64)?;
                    w = w.max((a - b).abs());
                }
                Ok(w)
            })(),
            0.0,
        ),
        check(
            s,
            "deep ladder ratios (E0=-1e6)",
            solve_quantized_spectrum(pp, 1.0, 1.0, -1e6, 1..=5, 1e-13).map(|v| {
                v.windows(2)
                    .map(|w| (w[1].energy.re / w[0].energy.re / ladder - 1.0).abs())
                    .fold(0.0, f64::max)
            }),
            1e-3,
        ),
        check(
            s,
            "free levels = E0 e^(2 pi n)",
            solve_quantized_spectrum(pp, 0.0, 1.0, -1.0, -3..=3, 1e-13).map(|v| {
                v.iter()
                    .map(|e| (e.energy.re / -(2.0 * PI * e.n as f64).exp() - 1.0).abs())
                    .fold(0.0, f64::max)
            }),
            1e-10,
        ),
        check(s, "shallow fit error (5 levels)", shallow_fit_error(), 1e-2),
        check(
            s,
            "oscillator closed levels",
            Ok((0..10u32)
                .map(|n| (oscillator_closed_spectrum(pp, 1.0, n, 0.0).re - (2 * n + 1) as f64).abs())
                .fold(0.0, f64::max)),
            0.0,
        ),
        check(
            s,
            "oscillator large-E spacing / 2hw - 1",
            oscillator_quantized_spectrum(pp, 1.0, 1.0, 200.0, 0..=5, 1e-13).map(|v| {
                v.windows(2)
                    .map(|w| ((w[1].energy.re - w[0].energy.re) / 2.0 - 1.0).abs())
                    .fold(0.0, f64::max)
            }),
            1e-2,
        ),
        check(
            s,
            "oscillator small-E ladder ratio",
            oscillator_quantized_spectrum(pp, 1.0, 1.0, 1e-4, -3..=0, 1e-13).map(|v| {
                let want = (-2.0 * PI).exp();
                v.windows(2)
                    .map(|w| (w[0].energy.re / w[1].energy.re / want - 1.0).abs())
                    .fold(0.0, f64::max)
            }),
            1e-3,
        ),
    ]
}

/// Worst relative error of a one-parameter Rydberg fit to the five
/// shallowest solver levels above the anchor `g = 50` (M = 1).
pub fn shallow_fit_error() -> Result<f64> {
    let pp = nat();
    let e0 = energy_from_g(pp, 1.0, 50.0);
    let levels = solve_quantized_spectrum(pp, 1.0, 1.0, e0, -5..=-1, 1e-14)?;
    // E = −1/(2(k + g0)²) with k = −n counting toward E → 0⁻.
    let x: Vec<(f64, f64)> = levels
        .iter()
        .map(|l| (-(l.n as f64), (-0.5 / l.energy.re).sqrt()))
        .collect();
    let g0 = x.iter().map(|(k, s)| s - k).sum::<f64>() / x.len() as f64;
    Ok(levels
        .iter()
        .zip(&x)
        .map(|(l, (k, _))| (-0.5 / (k + g0).powi(2) / l.energy.re - 1.0).abs())
        .fold(0.0, f64::max))
}

/// Worst relative mismatch between the first three shot levels below `E = −1`
/// and the analytic solver anchored at the same point.
pub fn oracle_agreement() -> Result<f64> {
    let pp = nat();
    let kind = SystemKind::coulomb(1.0)?;
    let shot = shoot_eigenvalues(kind, pp, 1.0, (-1e10, -1.0), 3, &ShootingConfig::default(), 1e-10)?;
    let solved = solve_quantized_spectrum(pp, 1.0, 1.0, -1.0, 1..=3, 1e-13)?;
    Ok(shot
        .iter()
        .zip(&solved)
        .map(|(a, b)| (a / b.energy.re - 1.0).abs())
        .fold(0.0, f64::max))
}

/// Scaled ODE residual of the `M = 0` eigenfunction `n` on `z ∈ [1, 30]`
/// with step `h` in units of `r₀`.
pub fn closed_form_residual(n: u32, h: f64) -> Result<f64> {
    let pp = nat();
    let g = n as f64 + 0.5;
    let e = energy_from_g(pp, 1.0, g);
    let r0 = scale_length(pp, e)?;
    let count = (29.0 / h).round() as usize;
    let mut r = Vec::with_capacity(count + 1);
    let mut u = Vec::with_capacity(count + 1);
    for i in 0..=count {
        let z = 1.0 + h * i as f64;
        r.push(z * r0);
        u.push(coulomb_u1(g, 0.0, z, 1e-16)?);
    }
    let sol = RadialSolution::from_samples(r, u, e, 0.0, SystemKind::coulomb(1.0)?)?;
    ode_residual(&sol, pp)
}

pub fn oracle_checks() -> Vec<Check> {
    let s = "oracle";
    vec![
        check(s, "shoot vs solver, 3 levels", oracle_agreement(), 1e-4),
        check(s, "ODE residual n=0, h=1e-3", closed_form_residual(0, 1e-3), 1e-6),
        check(s, "ODE residual n=1, h=1e-3", closed_form_residual(1, 1e-3), 1e-6),
    ]
}

pub fn duality_checks() -> Vec<Check> {
    let s = "duality";
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut worst_inv: f64 = 0.0;
    let mut worst_rel: f64 = 0.0;
    let mut worst_trip: f64 = 0.0;
    let mut failed = false;
    for _ in 0..1000 {
        let pp = PhysicalParams::new(rng.gen_range(0.1..10.0), rng.gen_range(0.1..10.0)).unwrap();
        let alpha = rng.gen_range(0.01..10.0);
        let e = -rng.gen_range(1e-3..1e3);
        let m = rng.gen_range(-5.0..5.0);
        let r0 = rng.gen_range(1e-2..1e2);
        match duality_forward(pp, alpha, e, m, r0) {
            Ok(d) => {
                worst_inv = worst_inv.max(d.invariant_residual(pp));
                worst_rel = worst_rel.max((d.energy_relation(pp) / d.e_osc - 1.0).abs());
                match duality_inverse(pp, alpha, d.omega, d.e_osc, d.m_osc) {
                    Ok(b) => worst_trip = worst_trip.max((b.e_coulomb / e - 1.0).abs()),
                    Err(_) => failed = true,
                }
            }
            Err(_) => failed = true,
        }
    }
    let sanitize = |x: f64| if failed { f64::NAN } else { x };
    let closed = (|| {
        let pp = nat();
        let mut w: f64 = 0.0;
        for n in 0..10u32 {
            let e = coulomb_closed_spectrum(pp, 1.0, n, 0.0).re;
            let d = duality_forward(pp, 1.0, e, 0.0, 0.75)?;
            let osc = oscillator_closed_spectrum(pp, d.omega, n, 0.0).re;
            w = w.max((d.e_osc / osc - 1.0).abs());
        }
        Ok(w)
    })();
    vec![
        check(s, "forward invariants (1000 draws)", Ok(sanitize(worst_inv)), 1e-12),
        check(s, "energy relation (1000 draws)", Ok(sanitize(worst_rel)), 1e-12),
        check(s, "round trip E_coulomb", Ok(sanitize(worst_trip)), 1e-10),
        check(s, "closed Coulomb -> hw(2n+1)", closed, 1e-10),
    ]
}

pub fn suite_checks(suite: Suite) -> Vec<Check> {
    match suite {
        Suite::Specfun => specfun_checks(),
        Suite::Phases => phase_checks(),
        Suite::Spectra => spectra_checks(),
        Suite::Oracle => oracle_checks(),
        Suite::Duality => duality_checks(),
        Suite::All => {
            let mut v = specfun_checks();
            v.extend(phase_checks());
            v.extend(spectra_checks());
            v.extend(oracle_checks());
            v.extend(duality_checks());
            v
        }
    }
}

/// Emits one record per check; `Ok(true)` when all pass.
pub(crate) fn run(
    suite: Suite,
    format: Format,
    pp: PhysicalParams<f64>,
    sink: &mut dyn Write,
) -> std::result::Result<bool, CliError> {
    let checks = suite_checks(suite);
    let mut em = Emitter::new(
        sink,
        format,
        "verify",
        pp.hbar(),
        pp.mass(),
        &["suite", "check", "measured", "threshold", "pass"],
    )?;
    let mut all = true;
    for c in &checks {
        all &= c.passed();
        em.record(vec![
            c.suite.into(),
            c.name.into(),
            c.measured.into(),
            c.threshold.into(),
            c.passed().into(),
        ])?;
    }
    em.finish()?;
    Ok(all)
}
