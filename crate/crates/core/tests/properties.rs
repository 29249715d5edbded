use minkowski_spectra::geometry::{classify, interval, to_cartesian, to_polar, CartesianPoint, PolarPoint, Region};
use minkowski_spectra::model::{
    effective_potential, euclidean_effective_potential, radial_coefficient, AngularEigenvalue, PhysicalParams,
    SystemKind,
};
use minkowski_spectra::specfun::{gamma, kummer_asymptotic, kummer_m, ln_gamma, KummerParams};
use minkowski_spectra::{Complex64, PhysicalParams64};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn complex(re: std::ops::Range<f64>, im: std::ops::Range<f64>) -> impl Strategy<Value = Complex64> {
    (re, im).prop_map(|(a, b)| Complex64::new(a, b))
}

fn rel(a: Complex64, b: Complex64) -> f64 {
    (a - b).norm() / b.norm()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn kummer_conjugation_symmetry(
        a in complex(-4.0..4.0, -4.0..4.0),
        c in complex(0.5..5.0, -4.0..4.0),
        z in 0.0f64..20.0,
    ) {
        let p = KummerParams::new(a, c).unwrap();
        let q = KummerParams::new(a.conj(), c.conj()).unwrap();
        let f = kummer_m(&p, z, 1e-15).unwrap();
        let g = kummer_m(&q, z, 1e-15).unwrap();
        prop_assert!(rel(g, f.conj()) <= 1e-12);
    }

    #[test]
    fn gamma_recurrence(z in complex(0.01..20.0, -20.0..20.0)) {
        prop_assume!(z.norm() <= 20.0);
        let lhs = gamma(z + 1.0).unwrap();
        let rhs = z * gamma(z).unwrap();
        prop_assert!(rel(lhs, rhs) <= 1e-12);
        let d = ln_gamma(z + 1.0).unwrap() - ln_gamma(z).unwrap() - z.ln();
        prop_assert!(d.re.abs() <= 1e-12 * (1.0 + ln_gamma(z).unwrap().re.abs()));
    }

    #[test]
    fn terminating_series_is_the_polynomial(n in 0u32..12, c in complex(0.5..6.0, -3.0..3.0), seed in any::<u64>()) {
        let a = Complex64::new(-(n as f64), 0.0);
        let p = KummerParams::new(a, c).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..(2 * n).max(1) {
            let z: f64 = rng.gen_range(0.0..20.0);
            let one = Complex64::new(1.0, 0.0);
            let (mut term, mut poly) = (one, one);
            for k in 0..n {
                let kf = k as f64;
                term = term * (a + kf) / (c + kf) * (z / (kf + 1.0));
                poly += term;
            }
            let f = kummer_m(&p, z, 1e-13).unwrap();
            if z == 0.0 {
                prop_assert_eq!(f, one);
            } else {
                prop_assert_eq!(f, poly);
            }
        }
    }

    #[test]
    fn polar_round_trip_and_metric(
        region in prop_oneof![Just(Region::I), Just(Region::II), Just(Region::III), Just(Region::IV)],
        radius in 1e-3f64..1e3,
        angle in -3.0f64..3.0,
    ) {
        let q = PolarPoint::new(region, radius, angle).unwrap();
        let p = to_cartesian(q);
        prop_assert_eq!(classify(p, 1e-12), region);
        let sign = if region.is_spacelike() { 1.0 } else { -1.0 };
        prop_assert!((interval(p) / (sign * radius * radius) - 1.0).abs() <= 1e-12);
        let back = to_cartesian(to_polar(p).unwrap());
        prop_assert!((back.x1 - p.x1).abs() <= 1e-12 * p.x1.abs().max(p.x2.abs()));
        prop_assert!((back.x2 - p.x2).abs() <= 1e-12 * p.x1.abs().max(p.x2.abs()));
    }

    #[test]
    fn cartesian_round_trip(x1 in -1e3f64..1e3, x2 in -1e3f64..1e3) {
        let p = CartesianPoint::new(x1, x2);
        prop_assume!(classify(p, 1e-9) != Region::Isotropic);
        let back = to_cartesian(to_polar(p).unwrap());
        prop_assert!((back.x1 - x1).abs() <= 1e-12 * x1.abs().max(x2.abs()));
        prop_assert!((back.x2 - x2).abs() <= 1e-12 * x1.abs().max(x2.abs()));
    }
}

fn params() -> impl Strategy<Value = PhysicalParams64> {
    (0.1f64..10.0, 0.1f64..10.0).prop_map(|(m, h)| PhysicalParams::new(m, h).unwrap())
}

fn kind() -> impl Strategy<Value = SystemKind<f64>> {
    prop_oneof![
        Just(SystemKind::Free),
        (0.01f64..10.0).prop_map(|w| SystemKind::oscillator(w).unwrap()),
        (0.01f64..10.0).prop_map(|a| SystemKind::coulomb(a).unwrap()),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn radial_coefficient_is_scaled_kinetic_energy(
        kind in kind(),
        pp in params(),
        m in -5.0f64..5.0,
        e in -10.0f64..10.0,
        r in 1e-2f64..1e2,
    ) {
        let am = AngularEigenvalue::new(m).unwrap();
        let q = radial_coefficient(kind, pp, am, e, r).unwrap();
        let u = effective_potential(kind, pp, am, r).unwrap();
        let want = pp.two_m_over_hbar2() * (e - u);
        prop_assert!((q - want).abs() <= 1e-14 * pp.two_m_over_hbar2() * (e.abs() + u.abs()));
    }

    #[test]
    fn minkowski_minus_euclidean(pp in params(), m in -5.0f64..5.0, alpha in 0.01f64..10.0, r in 1e-2f64..1e2) {
        let am = AngularEigenvalue::new(m).unwrap();
        let mink = effective_potential(SystemKind::coulomb(alpha).unwrap(), pp, am, r).unwrap();
        let eucl = euclidean_effective_potential(pp, am, alpha, r).unwrap();
        let want = -pp.hbar() * pp.hbar() / pp.mass() * m * m / (r * r);
        prop_assert!((mink - eucl - want).abs() <= 1e-13 * (mink.abs() + eucl.abs()));
    }
}

#[test]
fn asymptotic_deviation_decreases() {
    let cases = [
        (Complex64::new(-1.5, 1.0), Complex64::new(1.0, 2.0)),
        (Complex64::new(0.5, 0.0), Complex64::new(2.0, 0.0)),
        (Complex64::new(2.5, -1.0), Complex64::new(4.0, 1.0)),
        (Complex64::new(-3.5, 2.0), Complex64::new(1.0, 4.0)),
    ];
    for (a, c) in cases {
        let p = KummerParams::new(a, c).unwrap();
        let devs: Vec<f64> = [30.0, 40.0, 50.0, 60.0]
            .iter()
            .map(|&z| {
                let f = kummer_m(&p, z, 1e-15).unwrap();
                (f / kummer_asymptotic(&p, z).unwrap() - 1.0).norm()
            })
            .collect();
        assert!(devs.windows(2).all(|w| w[1] < w[0]), "a={a} c={c}: {devs:?}");
    }
}
