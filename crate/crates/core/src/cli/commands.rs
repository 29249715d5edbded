use std::f64::consts::PI;
use std::io::Write;

use num_complex::Complex64;

use crate::model::{
    effective_potential, euclidean_effective_potential_for, potential, AngularEigenvalue, SystemKind,
};
use crate::spectra::{
    coulomb_closed_spectrum, coulomb_third, coulomb_u1, coulomb_u2, deep_ladder, duality_for_frequency,
    duality_forward, energy_from_g, gamma_phase, oscillator_closed_spectrum, oscillator_quantized_spectrum,
    oscillator_wavefunction, reflection_phase, scale_length, shallow_spectrum, solve_quantized_spectrum,
    Branch, SpectrumEntry,
};

use super::args::{GridArgs, LadderArg, Spacing, WaveBranch};
use super::config::{ConfigFile, RunConfig};
use super::emit::{Emitter, Value};
use super::CliError;

fn usage<S: Into<String>>(s: S) -> CliError {
    CliError::Usage(s.into())
}

fn nonneg(range: &std::ops::RangeInclusive<i64>) -> Result<std::ops::RangeInclusive<u32>, CliError> {
    let (a, b) = (*range.start(), *range.end());
    if a < 0 || b > u32::MAX as i64 {
        return Err(usage("closed-form levels need n >= 0"));
    }
    Ok(a as u32..=b as u32)
}

pub(crate) fn spectrum(
    cfg: &RunConfig,
    closed: bool,
    ladder: Option<LadderArg>,
    g0: Option<f64>,
    sink: &mut dyn Write,
) -> Result<(), CliError> {
    let pp = cfg.units;
    let m = cfg.m;
    let mut levels: Vec<SpectrumEntry<f64>> = Vec::new();
    let entry = |n: i64, e: Complex64, branch| SpectrumEntry { n, m, energy: e, branch };
    let need_e0 = |positive: bool| -> Result<f64, CliError> {
        let e0 = cfg.e0.ok_or_else(|| usage("missing --E0: the quantized spectrum needs a reference level"))?;
        if positive && !(e0 > 0.0) {
            return Err(usage("--E0 must be positive for the oscillator"));
        }
        if !positive && !(e0 < 0.0) {
            return Err(usage("--E0 must be negative"));
        }
        Ok(e0)
    };
    let need_m = || {
        if m == 0.0 {
            Err(usage("the quantized spectrum needs --M != 0"))
        } else {
            Ok(())
        }
    };

    match (cfg.system, closed, ladder) {
        (SystemKind::Free, true, _) => return Err(usage("the free particle has no terminating-series levels")),
        (SystemKind::Coulomb { alpha }, true, _) => {
            for n in nonneg(&cfg.n_range)? {
                levels.push(entry(n as i64, coulomb_closed_spectrum(pp, alpha, n, m), Branch::ClosedFormU1));
            }
        }
        (SystemKind::Oscillator { omega }, true, _) => {
            for n in nonneg(&cfg.n_range)? {
                levels.push(entry(n as i64, oscillator_closed_spectrum(pp, omega, n, m), Branch::ClosedFormU1));
            }
        }
        (SystemKind::Oscillator { .. }, false, Some(LadderArg::Deep)) => {
            let e0 = need_e0(true)?;
            need_m()?;
            for n in cfg.n_range.clone() {
                let e = e0 * (2.0 * PI * n as f64 / m).exp();
                levels.push(entry(n, e.into(), Branch::DeepAsymptotic));
            }
        }
        (_, false, Some(LadderArg::Deep)) => {
            let e0 = need_e0(false)?;
            need_m()?;
            for n in cfg.n_range.clone() {
                levels.push(entry(n, deep_ladder(e0, m, n)?.into(), Branch::DeepAsymptotic));
            }
        }
        (SystemKind::Free, false, Some(LadderArg::Shallow)) => {
            return Err(usage("the free particle has no shallow ladder"))
        }
        (kind, false, Some(LadderArg::Shallow)) => {
            let g0 = g0.ok_or_else(|| usage("--ladder shallow needs --g0"))?;
            for n in cfg.n_range.clone() {
                let e = match kind {
                    SystemKind::Oscillator { omega } => 2.0 * pp.hbar() * omega * (n as f64 + g0),
                    _ => {
                        if n as f64 + g0 <= 0.0 {
                            return Err(usage("shallow levels need n + g0 > 0"));
                        }
                        shallow_spectrum(pp, kind.alpha(), g0, n)?
                    }
                };
                levels.push(entry(n, e.into(), Branch::ShallowAsymptotic));
            }
        }
        (SystemKind::Oscillator { omega }, false, None) => {
            let e0 = need_e0(true)?;
            need_m()?;
            levels = oscillator_quantized_spectrum(pp, omega, m, e0, cfg.n_range.clone(), cfg.tol("root"))?;
        }
        (kind, false, None) => {
            let e0 = need_e0(false)?;
            need_m()?;
            levels = solve_quantized_spectrum(pp, kind.alpha(), m, e0, cfg.n_range.clone(), cfg.tol("root"))?;
        }
    }

    let mut em = Emitter::new(
        sink,
        cfg.output_format,
        "spectrum",
        pp.hbar(),
        pp.mass(),
        &["n", "M", "E_re", "E_im", "branch", "system"],
    )?;
    for l in levels {
        em.record(vec![
            l.n.into(),
            l.m.into(),
            l.energy.re.into(),
            l.energy.im.into(),
            l.branch.to_string().into(),
            cfg.system.name().into(),
        ])?;
    }
    em.finish()
}

/// Grid samples from `MIN,MAX,COUNT` with linear or log spacing.
pub fn grid(args: &GridArgs, file: &ConfigFile) -> Result<Vec<f64>, CliError> {
    let spec = file
        .pick(args.grid.clone(), "grid")?
        .ok_or_else(|| usage("--grid MIN,MAX,COUNT is required"))?;
    let spacing = file.pick_enum(args.spacing, "spacing")?.unwrap_or(Spacing::Linear);
    let parts: Vec<&str> = spec.split(',').map(str::trim).collect();
    let bad = || usage(format!("grid must be MIN,MAX,COUNT, got `{spec}`"));
    if parts.len() != 3 {
        return Err(bad());
    }
    let lo: f64 = parts[0].parse().map_err(|_| bad())?;
    let hi: f64 = parts[1].parse().map_err(|_| bad())?;
    let count: usize = parts[2].parse().map_err(|_| bad())?;
    if !(lo > 0.0 && hi > lo && hi.is_finite()) || count < 2 {
        return Err(usage("grid needs 0 < MIN < MAX and COUNT >= 2"));
    }
    let last = (count - 1) as f64;
    Ok((0..count)
        .map(|i| {
            let t = i as f64 / last;
            match spacing {
                Spacing::Linear => lo + (hi - lo) * t,
                Spacing::Log => (lo.ln() + (hi.ln() - lo.ln()) * t).exp(),
            }
        })
        .collect())
}

pub(crate) struct WaveOptions {
    pub branch: Option<WaveBranch>,
    pub n: Option<u32>,
    pub e: Option<f64>,
    pub g: Option<f64>,
    pub gamma: Option<f64>,
    pub phi: Option<f64>,
}

pub(crate) fn wavefunction(
    cfg: &RunConfig,
    points: &[f64],
    opt: WaveOptions,
    sink: &mut dyn Write,
) -> Result<(), CliError> {
    let pp = cfg.units;
    let m = cfg.m;
    let tol = cfg.tol("kummer");
    let mut rows: Vec<[f64; 5]> = Vec::with_capacity(points.len());
    match cfg.system {
        SystemKind::Oscillator { omega } => {
            let n = opt.n.unwrap_or(0);
            let phi = opt.phi.unwrap_or(0.0);
            let unit = (pp.mass() * omega / pp.hbar()).sqrt();
            for &rho in points {
                let psi = oscillator_wavefunction(pp, omega, n, m, rho, phi, tol)?;
                rows.push([rho, rho * unit, psi.re, psi.im, psi.norm()]);
            }
        }
        kind => {
            let alpha = kind.alpha();
            let g = match (opt.n, opt.g, opt.e) {
                (Some(n), None, None) => {
                    if alpha == 0.0 || m != 0.0 {
                        return Err(usage("--n selects a Coulomb eigenfunction with M = 0"));
                    }
                    n as f64 + 0.5
                }
                (None, Some(g), None) => {
                    if alpha == 0.0 || !(g > 0.0) {
                        return Err(usage("--g needs the Coulomb system and g > 0"));
                    }
                    g
                }
                (None, None, Some(e)) => {
                    if !(e < 0.0) {
                        return Err(usage("--E must be negative"));
                    }
                    pp.mass() * alpha / (pp.hbar() * (-2.0 * pp.mass() * e).sqrt())
                }
                (None, None, None) => return Err(usage("give one of --n, --g or --E")),
                _ => return Err(usage("--n, --g and --E are mutually exclusive")),
            };
            let e = match opt.e {
                Some(e) => e,
                None => energy_from_g(pp, alpha, g),
            };
            let r0 = scale_length(pp, e)?;
            let branch = opt.branch.unwrap_or(WaveBranch::U1);
            let gamma = match (branch, opt.gamma) {
                (WaveBranch::Third, Some(gm)) => gm,
                (WaveBranch::Third, None) => gamma_phase(g, m)?.gamma,
                _ => 0.0,
            };
            for &z in points {
                let u = match branch {
                    WaveBranch::U1 => coulomb_u1(g, m, z, tol)?,
                    WaveBranch::U2 => coulomb_u2(g, m, z, tol)?,
                    WaveBranch::Third => coulomb_third(g, m, gamma, z, tol)?,
                };
                rows.push([z * r0, z, u.re, u.im, u.norm()]);
            }
        }
    }
    let mut em = Emitter::new(
        sink,
        cfg.output_format,
        "wavefunction",
        pp.hbar(),
        pp.mass(),
        &["r", "z", "u_re", "u_im", "u_abs"],
    )?;
    for row in rows {
        em.record(row.iter().map(|&x| Value::F(x)).collect())?;
    }
    em.finish()
}

pub(crate) fn potential_table(cfg: &RunConfig, points: &[f64], sink: &mut dyn Write) -> Result<(), CliError> {
    let pp = cfg.units;
    let am = AngularEigenvalue::new(cfg.m)?;
    let mut em = Emitter::new(
        sink,
        cfg.output_format,
        "potential",
        pp.hbar(),
        pp.mass(),
        &["r", "U", "U_eff_minkowski", "U_eff_euclidean"],
    )?;
    for &r in points {
        em.record(vec![
            r.into(),
            potential(cfg.system, pp, r)?.into(),
            effective_potential(cfg.system, pp, am, r)?.into(),
            euclidean_effective_potential_for(cfg.system, pp, am, r)?.into(),
        ])?;
    }
    em.finish()
}

pub(crate) struct PhaseOptions {
    pub alpha: f64,
    pub m: f64,
    pub e: Option<f64>,
    pub g: Option<f64>,
}

pub(crate) fn phase(cfg: &RunConfig, opt: PhaseOptions, sink: &mut dyn Write) -> Result<(), CliError> {
    let pp = cfg.units;
    if !(opt.alpha >= 0.0) {
        return Err(usage("--alpha must be >= 0"));
    }
    let e = match (opt.e, opt.g) {
        (Some(e), None) if e < 0.0 => e,
        (Some(_), None) => return Err(usage("--E must be negative")),
        (None, Some(g)) if g > 0.0 && opt.alpha > 0.0 => energy_from_g(pp, opt.alpha, g),
        (None, Some(_)) => return Err(usage("--g needs alpha > 0 and g > 0")),
        _ => return Err(usage("give exactly one of --E or --g")),
    };
    let r0 = scale_length(pp, e)?;
    let g = pp.mass() * opt.alpha / (pp.hbar() * (-2.0 * pp.mass() * e).sqrt());
    let p = reflection_phase(pp, opt.alpha, opt.m, e)?;
    let mut em = Emitter::new(
        sink,
        cfg.output_format,
        "phase",
        pp.hbar(),
        pp.mass(),
        &["alpha", "M", "E", "r0", "g", "gamma", "beta", "gamma_unreduced", "beta_unreduced"],
    )?;
    em.record(vec![
        opt.alpha.into(),
        opt.m.into(),
        e.into(),
        r0.into(),
        g.into(),
        p.gamma.into(),
        p.beta.into(),
        p.gamma_unreduced.into(),
        p.beta_unreduced.into(),
    ])?;
    em.finish()
}

pub(crate) struct DualityOptions {
    pub alpha: f64,
    pub e: Option<f64>,
    pub m: f64,
    pub r0: Option<f64>,
    pub omega: Option<f64>,
}

pub(crate) fn duality(cfg: &RunConfig, opt: DualityOptions, sink: &mut dyn Write) -> Result<(), CliError> {
    let pp = cfg.units;
    let e = opt.e.ok_or_else(|| usage("--E (Coulomb energy) is required"))?;
    if !(e < 0.0) {
        return Err(usage("--E must be negative"));
    }
    let d = match (opt.r0, opt.omega) {
        (Some(r0), None) if r0 > 0.0 => duality_forward(pp, opt.alpha, e, opt.m, r0)?,
        (None, Some(w)) if w > 0.0 => duality_for_frequency(pp, opt.alpha, e, opt.m, w)?,
        (None, None) => duality_forward(pp, opt.alpha, e, opt.m, 1.0)?,
        _ => return Err(usage("give one positive --r0 or --omega")),
    };
    let mut em = Emitter::new(
        sink,
        cfg.output_format,
        "duality",
        pp.hbar(),
        pp.mass(),
        &[
            "r0_scale",
            "alpha",
            "E_coulomb",
            "omega",
            "E_osc",
            "M_coulomb",
            "M_osc",
            "E_osc_relation",
            "invariant_residual",
        ],
    )?;
    em.record(vec![
        d.r0_scale.into(),
        d.alpha.into(),
        d.e_coulomb.into(),
        d.omega.into(),
        d.e_osc.into(),
        d.m_coulomb.into(),
        d.m_osc.into(),
        d.energy_relation(pp).into(),
        d.invariant_residual(pp).into(),
    ])?;
    em.finish()
}
