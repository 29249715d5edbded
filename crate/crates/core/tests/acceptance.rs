use std::f64::consts::PI;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use minkowski_spectra::model::{PhysicalParams, SystemKind};
use minkowski_spectra::oracle::{ode_residual, shoot_eigenvalues, RadialSolution, ShootingConfig};
use minkowski_spectra::spectra::{
    coulomb_closed_spectrum, coulomb_third, coulomb_u1, coulomb_u1_asymptotic, coulomb_u2, duality_forward,
    energy_from_g, gamma_phase, oscillator_closed_spectrum, oscillator_quantized_spectrum, scale_length,
    shallow_spectrum, solve_quantized_spectrum,
};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<(bool, String), String>;
type Criterion = (&'static str, fn() -> Outcome);

fn nat() -> PhysicalParams<f64> {
    PhysicalParams::natural()
}

fn timed(f: impl FnOnce() -> Outcome) -> (Outcome, Duration) {
    let t = Instant::now();
    let r = f();
    (r, t.elapsed())
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn c1_closed_spectrum() -> Outcome {
    let t = Instant::now();
    let levels: Vec<f64> = (0..10u32).map(|n| coulomb_closed_spectrum(nat(), 1.0, n, 0.0).re).collect();
    let elapsed = t.elapsed();
    let worst = levels
        .iter()
        .enumerate()
        .map(|(n, e)| (e / (-1.0 / (2.0 * (n as f64 + 0.5).powi(2))) - 1.0).abs())
        .fold(0.0, f64::max);
    let ok = worst <= 1e-14 && elapsed < Duration::from_millis(1);
    Ok((ok, format!("max rel err {worst:.3e} (<= 1e-14), levels in {elapsed:?} (< 1 ms)")))
}

fn c2_euclidean_coincidence() -> Outcome {
    let mut mismatches = 0;
    for n in 0..=50u32 {
        let a = coulomb_closed_spectrum(nat(), 1.0, n, 0.0);
        let b = shallow_spectrum(nat(), 1.0, 0.5, n as i64).map_err(err)?;
        if a.re != b || a.im != 0.0 {
            mismatches += 1;
        }
    }
    Ok((mismatches == 0, format!("{mismatches} bitwise mismatches for n = 0..=50")))
}

fn c3_deep_ladder() -> Outcome {
    let t = Instant::now();
    let v = solve_quantized_spectrum(nat(), 1.0, 1.0, -1e6, 1..=5, 1e-13).map_err(err)?;
    let elapsed = t.elapsed();
    let ladder = (2.0 * PI).exp();
    let ratios: Vec<f64> = v.windows(2).map(|w| w[1].energy.re / w[0].energy.re).collect();
    let worst = ratios.iter().map(|r| (r / ladder - 1.0).abs()).fold(0.0, f64::max);
    let ok = worst <= 1e-3 && elapsed < Duration::from_secs(1);
    Ok((
        ok,
        format!(
            "ratios E(n+1)/E(n), n=1..4: {:?}; max rel dev {worst:.3e} (<= 1e-3), {elapsed:?} (< 1 s)",
            ratios.iter().map(|r| format!("{r:.4}")).collect::<Vec<_>>()
        ),
    ))
}

fn c4_oracle_equivalence() -> Outcome {
    let t = Instant::now();
    let kind = SystemKind::coulomb(1.0).map_err(err)?;
    let shot = shoot_eigenvalues(kind, nat(), 1.0, (-1e10, -1.0), 3, &ShootingConfig::default(), 1e-10)
        .map_err(err)?;
    let solved = solve_quantized_spectrum(nat(), 1.0, 1.0, -1.0, 1..=3, 1e-13).map_err(err)?;
    let elapsed = t.elapsed();
    let worst = shot
        .iter()
        .zip(&solved)
        .map(|(a, b)| (a / b.energy.re - 1.0).abs())
        .fold(0.0, f64::max);
    let ok = shot.len() >= 3 && worst <= 1e-4 && elapsed < Duration::from_secs(30);
    Ok((
        ok,
        format!("{} shared levels, max rel diff {worst:.3e} (<= 1e-4), {elapsed:?} (< 30 s)", shot.len()),
    ))
}

fn c5_shallow_condensation() -> Outcome {
    // Anchor at g = 50; with M = 1 the levels toward E → 0⁻ carry n < 0.
    let e0 = energy_from_g(nat(), 1.0, 50.0);
    let levels = solve_quantized_spectrum(nat(), 1.0, 1.0, e0, -5..=-1, 1e-14).map_err(err)?;
    let pts: Vec<(f64, f64)> = levels
        .iter()
        .map(|l| (-(l.n as f64), l.energy.re))
        .collect();
    let g0 = pts.iter().map(|(k, e)| (-0.5 / e).sqrt() - k).sum::<f64>() / pts.len() as f64;
    let worst = pts
        .iter()
        .map(|&(k, e)| shallow_spectrum(nat(), 1.0, g0, k as i64).map(|s| (s / e - 1.0).abs()))
        .collect::<Result<Vec<f64>, _>>()
        .map_err(err)?
        .into_iter()
        .fold(0.0, f64::max);
    Ok((worst < 1e-2, format!("fitted g0 = {g0:.6}, max per-level rel err {worst:.3e} (< 1e-2)")))
}

fn c6_free_exactness() -> Outcome {
    let v = solve_quantized_spectrum(nat(), 0.0, 1.0, -1.0, -3..=3, 1e-13).map_err(err)?;
    let worst = v
        .iter()
        .map(|e| (e.energy.re / -(2.0 * PI * e.n as f64).exp() - 1.0).abs())
        .fold(0.0, f64::max);
    Ok((worst <= 1e-10, format!("max rel err {worst:.3e} (<= 1e-10) for n = -3..=3")))
}

fn c7_conjugation() -> Outcome {
    let mut worst: f64 = 0.0;
    for &m in &[0.5, 1.0, 2.0] {
        for &g in &[0.7, 2.3] {
            let (mut d, mut top) = (0.0f64, 0.0f64);
            for i in 0..1000 {
                let z = 0.01 + 30.0 * i as f64 / 999.0;
                let a = coulomb_u1(g, m, z, 1e-15).map_err(err)?;
                let b = coulomb_u2(g, m, z, 1e-15).map_err(err)?;
                d = d.max((b - a.conj()).norm());
                top = top.max(a.norm());
            }
            worst = worst.max(d / top);
        }
    }
    Ok((worst <= 1e-12, format!("max |u2 - conj u1| / max |u1| = {worst:.3e} (<= 1e-12)")))
}

fn decay_ratio(g: f64, m: f64, gamma: f64) -> Result<f64, String> {
    let (mut top, mut last) = (0.0f64, 0.0);
    for i in 1..=6000 {
        let z = 0.01 * i as f64;
        last = coulomb_third(g, m, gamma, z, 1e-15).map_err(err)?.norm();
        top = top.max(last);
    }
    Ok(last / top)
}

fn c8_decay() -> Outcome {
    let (g, m) = (2.0, 1.0);
    let gamma = gamma_phase(g, m).map_err(err)?.gamma;
    let base = decay_ratio(g, m, gamma)?;
    let bumped = decay_ratio(g, m, gamma + 0.1)?;
    let growth = bumped / base;
    Ok((
        base <= 1e-6 && growth >= 1e3,
        format!("M=1, g=2: ratio {base:.3e} (<= 1e-6); with gamma+0.1 grows x{growth:.3e} (>= 1e3)"),
    ))
}

fn c9_asymptotic_form() -> Outcome {
    let (g, m) = (2.0, 1.0);
    let devs: Vec<f64> = [30.0, 40.0, 50.0, 60.0]
        .iter()
        .map(|&z| {
            let u = coulomb_u1(g, m, z, 1e-15)?;
            let a = coulomb_u1_asymptotic(g, m, z)?;
            Ok((u / a - Complex64::new(1.0, 0.0)).norm())
        })
        .collect::<Result<_, minkowski_spectra::Error>>()
        .map_err(err)?;
    let monotone = devs.windows(2).all(|w| w[1] < w[0]);
    let at50 = devs[2];
    Ok((
        at50 <= 1e-2 && monotone,
        format!(
            "|u1/asym - 1| at z=30,40,50,60: {:.3e} {:.3e} {:.3e} {:.3e}; at 50 needs <= 1e-2; monotone: {monotone}",
            devs[0], devs[1], devs[2], devs[3]
        ),
    ))
}

fn c10_oscillator() -> Outcome {
    let pp = nat();
    let closed_exact = (0..20u32).all(|n| oscillator_closed_spectrum(pp, 1.0, n, 0.0) == Complex64::new((2 * n + 1) as f64, 0.0));
    let high = oscillator_quantized_spectrum(pp, 1.0, 1.0, 200.0, 0..=5, 1e-13).map_err(err)?;
    let spacing = high
        .windows(2)
        .map(|w| ((w[1].energy.re - w[0].energy.re) / 2.0 - 1.0).abs())
        .fold(0.0, f64::max);
    let low = oscillator_quantized_spectrum(pp, 1.0, 1.0, 1e-4, -3..=0, 1e-13).map_err(err)?;
    let want = (-2.0 * PI).exp();
    let ladder = low
        .windows(2)
        .map(|w| (w[0].energy.re / w[1].energy.re / want - 1.0).abs())
        .fold(0.0, f64::max);
    Ok((
        closed_exact && spacing <= 1e-2 && ladder <= 1e-3,
        format!(
            "closed exact: {closed_exact}; large-E spacing dev {spacing:.3e} (<= 1e-2); small-E ratio dev {ladder:.3e} (<= 1e-3)"
        ),
    ))
}

fn c11_duality() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut worst: f64 = 0.0;
    for _ in 0..1000 {
        let pp = PhysicalParams::new(rng.gen_range(0.1..10.0), rng.gen_range(0.1..10.0)).map_err(err)?;
        let d = duality_forward(
            pp,
            rng.gen_range(0.01..10.0),
            -rng.gen_range(1e-3..1e3),
            rng.gen_range(-5.0..5.0),
            rng.gen_range(1e-2..1e2),
        )
        .map_err(err)?;
        worst = worst.max(d.invariant_residual(pp));
        worst = worst.max((d.energy_relation(pp) / d.e_osc - 1.0).abs());
    }
    let mut closed: f64 = 0.0;
    for n in 0..20u32 {
        for &r0 in &[0.3, 1.0, 4.0] {
            let e = coulomb_closed_spectrum(nat(), 1.0, n, 0.0).re;
            let d = duality_forward(nat(), 1.0, e, 0.0, r0).map_err(err)?;
            let osc = oscillator_closed_spectrum(nat(), d.omega, n, 0.0).re;
            closed = closed.max((d.e_osc / osc - 1.0).abs()).max((d.e_osc / (4.0 / r0) - 1.0).abs());
        }
    }
    Ok((
        worst <= 1e-12 && closed <= 1e-10,
        format!("invariants over 1000 draws {worst:.3e} (<= 1e-12); 4 alpha/r0 vs hw(2n+1) {closed:.3e} (<= 1e-10)"),
    ))
}

fn residual(n: u32, h: f64) -> Result<f64, String> {
    let pp = nat();
    let g = n as f64 + 0.5;
    let e = energy_from_g(pp, 1.0, g);
    let r0 = scale_length(pp, e).map_err(err)?;
    let count = (29.0 / h).round() as usize;
    let (mut r, mut u) = (Vec::new(), Vec::new());
    for i in 0..=count {
        let z = 1.0 + h * i as f64;
        r.push(z * r0);
        u.push(coulomb_u1(g, 0.0, z, 1e-16).map_err(err)?);
    }
    let sol = RadialSolution::from_samples(r, u, e, 0.0, SystemKind::coulomb(1.0).map_err(err)?).map_err(err)?;
    ode_residual(&sol, pp).map_err(err)
}

fn c12_ode_residual() -> Outcome {
    let mut ok = true;
    let mut parts = Vec::new();
    for n in 0..2u32 {
        let fine = residual(n, 1e-3)?;
        let coarse = residual(n, 2e-3)?;
        let order = coarse / fine;
        ok &= fine <= 1e-6 && (3.5..=4.5).contains(&order);
        parts.push(format!("n={n}: {fine:.3e} at h=1e-3 (<= 1e-6), halving ratio {order:.3}"));
    }
    Ok((ok, format!("z in [1, 30]; {}", parts.join("; "))))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("closed Coulomb spectrum", c1_closed_spectrum),
        ("Euclidean coincidence", c2_euclidean_coincidence),
        ("deep geometric ladder", c3_deep_ladder),
        ("oracle equivalence", c4_oracle_equivalence),
        ("shallow condensation", c5_shallow_condensation),
        ("free-particle exactness", c6_free_exactness),
        ("conjugation identity", c7_conjugation),
        ("decay condition", c8_decay),
        ("asymptotic Gamma form", c9_asymptotic_form),
        ("oscillator spectra", c10_oscillator),
        ("duality consistency", c11_duality),
        ("ODE residual", c12_ode_residual),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let (outcome, elapsed) = timed(*f);
        let (ok, detail) = match outcome {
            Ok(v) => v,
            Err(e) => (false, format!("error: {e}")),
        };
        if !ok {
            failed += 1;
        }
        println!(
            "criterion {:>2} [{}] {name}: {detail} ({elapsed:.2?})",
            i + 1,
            if ok { "PASS" } else { "FAIL" }
        );
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
