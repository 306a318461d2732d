use alt_xi_core::{
    critical_leading_terms, critical_zero_from_eta, eta, eta_alternating, eta_extra_zero,
    eta_from_xi_a, eta_functional_residual, extra_zero_spacing, quartet_sum, scan_critical_line,
    xi_a_critical, xi_a_direct, xi_a_gamma_series, xi_a_lower_series, xi_from_xi_a, zeta,
    Complex64, EvalSettings, Method, SPoint, ZeroSign,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::{LN_2, PI};

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn p(re: f64, im: f64) -> SPoint<f64> {
    SPoint::new(c(re, im))
}

fn st() -> EvalSettings {
    EvalSettings::default()
}

const FIRST_ZERO: f64 = 14.134725141734693790;

// ξ_a(σ + it) on the 5×5 grid, 40-digit arithmetic.
#[rustfmt::skip]
const GRID: &[(f64, f64, f64, f64)] = &[
    (0.1, 0.0, -0.68923857193525465528, 0.0),
    (0.1, 1.0, -0.64638782364779373496, 0.032708265052261138455),
    (0.1, 5.0, -0.12056051510678053586, 0.037070641169699005752),
    (0.1, 12.0, -0.00052635710122867306327, 0.00014505250604276108022),
    (0.1, 20.0, 4.3831973289145754451e-7, -1.4961197756091691095e-7),
    (0.3, 0.0, -0.68405836100175800199, 0.0),
    (0.3, 1.0, -0.64206323737567435452, 0.016245438579099755029),
    (0.3, 5.0, -0.12313969167866628274, 0.018533338783268944478),
    (0.3, 12.0, -0.00052299954565133261596, 0.000070939008597634568653),
    (0.3, 20.0, 4.1644446564150406318e-7, -7.136398345776912593e-8),
    (0.5, 0.0, -0.68233953009744415546, 0.0),
    (0.5, 1.0, -0.64062764396002890583, 0.0),
    (0.5, 5.0, -0.12399496271619500786, 0.0),
    (0.5, 12.0, -0.00052180439356054198443, 0.0),
    (0.5, 20.0, 4.0919705852803077117e-7, 0.0),
    (0.7, 0.0, -0.68405836100175800199, 0.0),
    (0.7, 1.0, -0.64206323737567435452, -0.016245438579099755029),
    (0.7, 5.0, -0.12313969167866628274, -0.018533338783268944478),
    (0.7, 12.0, -0.00052299954565133261596, -0.000070939008597634568653),
    (0.7, 20.0, 4.1644446564150406318e-7, 7.136398345776912593e-8),
    (0.9, 0.0, -0.68923857193525465528, 0.0),
    (0.9, 1.0, -0.64638782364779373496, -0.032708265052261138455),
    (0.9, 5.0, -0.12056051510678053586, -0.037070641169699005752),
    (0.9, 12.0, -0.00052635710122867306327, -0.00014505250604276108022),
    (0.9, 20.0, 4.3831973289145754451e-7, 1.4961197756091691095e-7),
];

// (s, η(s), ζ(s))
#[rustfmt::skip]
const ETA_ZETA: &[((f64, f64), (f64, f64), (f64, f64))] = &[
    ((0.5, 12.0), (2.6010838318899308593, 0.068489495825398153236), (1.0159366506227745955, -0.74511247223013278207)),
    ((-1.5, 2.0), (0.082653129399566546187, 0.69151332806846703857), (0.12424726557777474701, -0.015707749528273202786)),
    ((-3.0, 0.0), (-0.125, 0.0), (0.0083333333333333333333, 0.0)),
    ((2.0, 0.0), (0.82246703342411321824, 0.0), (1.6449340668482264365, 0.0)),
    ((0.3, 25.0), (-0.47515402139814273574, 0.34848418381806796948), (-0.2882016695874612419, -0.12962518049689428642)),
    ((-0.5, -7.0), (2.4207940658998151576, 2.3354400420773806631), (0.97521592245097366133, -0.65318542334719460496)),
    ((0.0, 1.0), (0.53259318176309616657, 0.22938485772852589246), (0.0033002236853241028742, -0.41815544914132167669)),
];

const XI_A_HALF: f64 = -0.68233953009744415546;
const ETA_HALF: f64 = 0.60489864342163037025;
const ZETA_HALF: f64 = -1.4603545088095868129;
const XI_A_12: f64 = -0.00052180439356054198443;

#[test]
fn eta_examples() {
    let v = |re, im| eta(p(re, im), &st()).unwrap().value;
    assert!((v(1.0, 0.0) - LN_2).norm() < 1e-14);
    assert!((v(0.0, 0.0) - 0.5).norm() < 1e-14);
    assert!((v(0.5, 0.0) - ETA_HALF).norm() < 1e-14);
    assert!((v(0.5, 0.0).re - 0.6048986).abs() < 1e-7);
    assert!((v(2.0, 0.0) - PI * PI / 12.0).norm() < 1e-14);
    let z = eta_extra_zero::<f64>(1, ZeroSign::Plus);
    assert!(eta(SPoint::new(z), &st()).unwrap().value.norm() < 1e-10);
}

#[test]
fn eta_and_zeta_reference_table() {
    for &((sr, si), (er, ei), (zr, zi)) in ETA_ZETA {
        let e = eta(p(sr, si), &st()).unwrap();
        let want = c(er, ei);
        assert!((e.value - want).norm() < 1e-12 * want.norm(), "η({sr}+{si}i) = {} via {:?}", e.value, e.method);
        let z = zeta(p(sr, si), &st()).unwrap();
        let want = c(zr, zi);
        assert!((z.value - want).norm() < 1e-12 * want.norm(), "ζ({sr}+{si}i) = {}", z.value);
    }
}

#[test]
fn eta_routes() {
    assert_eq!(eta(p(0.5, 12.0), &st()).unwrap().method, Method::Quartet);
    assert_eq!(eta(p(-1.5, 2.0), &st()).unwrap().method, Method::Reflection);
    assert_eq!(eta(p(0.0, 0.0), &st()).unwrap().method, Method::Series);
    assert_eq!(eta(p(0.0, extra_zero_spacing::<f64>()), &st()).unwrap().method, Method::Series);
    // The routes agree where both apply.
    for (re, im) in [(0.7, 3.0), (0.05, 2.0), (1.5, -4.0)] {
        let a = eta(p(re, im), &st()).unwrap().value;
        let b = eta_alternating(p(re, im), &st()).unwrap().value;
        assert!((a - b).norm() < 1e-12, "s = {re}+{im}i");
    }
    let tight = EvalSettings::new(1e-14, 5, 100).unwrap();
    assert_eq!(eta(p(0.5, 12.0), &tight).unwrap_err().code(), "E_CONV");
}

#[test]
fn zeta_examples_and_exclusions() {
    let v = |re, im| zeta(p(re, im), &st()).unwrap().value;
    assert!((v(0.0, 0.0) + 0.5).norm() < 1e-14);
    assert!((v(0.5, 0.0) - ZETA_HALF).norm() < 1e-13);
    let z = v(0.5, 12.0);
    assert!((z - c(1.015935342, -0.7451116651)).norm() < 2e-6);
    let err = zeta(p(1.0 + 1e-9, 0.0), &st()).unwrap_err();
    assert_eq!(err.code(), "E_DOMAIN");
    assert!(err.to_string().contains("pole at s = 1"), "{err}");
    let err = zeta(SPoint::new(eta_extra_zero::<f64>(2, ZeroSign::Minus)), &st()).unwrap_err();
    assert!(err.to_string().contains("-2·2πi/ln2"), "{err}");
    // Just outside the guard the value is finite.
    assert!(zeta(p(1.0 + 1e-6, 0.0), &st()).unwrap().value.re > 1e5);
}

#[test]
fn extra_zeros() {
    let z = eta_extra_zero::<f64>(1, ZeroSign::Plus);
    assert_eq!(z.re, 1.0);
    assert!((z.im - 9.0647202836543876192).abs() < 1e-14);
    assert_eq!(eta_extra_zero::<f64>(2, ZeroSign::Minus), eta_extra_zero::<f64>(2, ZeroSign::Plus).conj());
    for n in 1..4 {
        let z = eta_extra_zero::<f64>(n, ZeroSign::Minus);
        assert!(eta(SPoint::new(z), &st()).unwrap().value.norm() < 1e-10);
    }
}

#[test]
fn xi_a_direct_examples() {
    let v = |re, im| xi_a_direct(p(re, im), &st()).unwrap().value;
    assert!((v(1.0, 0.0) + LN_2).norm() < 1e-14);
    assert!((v(0.5, 0.0) - XI_A_HALF).norm() < 1e-14);
    assert!((v(2.0, 0.0) + PI / 4.0).norm() < 1e-14);
    assert!(v(0.0, extra_zero_spacing()).norm() < 1e-10);
    assert!(v(1.0, extra_zero_spacing()).norm() < 1e-10);
    for bad in [0.0, -2.0, -4.0 + 5e-7] {
        let err = xi_a_direct(p(bad, 0.0), &st()).unwrap_err();
        assert_eq!(err.code(), "E_DOMAIN");
        assert!(err.to_string().contains("xi_a_gamma_series"));
    }
    assert!(xi_a_direct(p(-2.0 + 1e-5, 0.0), &st()).is_ok());
}

#[test]
fn xi_a_gamma_series_examples() {
    let r = xi_a_gamma_series(p(0.5, 12.0), &st()).unwrap();
    assert!((r.value.re - XI_A_12).abs() < 1e-15);
    assert!((r.value.re + 0.000521803749).abs() < 1e-8);
    assert!(r.value.im.abs() < 1e-12);
    assert!(r.terms_used >= 2 && r.terms_used <= 3, "{}", r.terms_used);
    let z = xi_a_gamma_series(p(0.0, 0.0), &st()).unwrap().value;
    assert!((z + LN_2).norm() < 1e-13);
    let a = xi_a_gamma_series(p(0.3, 5.0), &st()).unwrap().value;
    let b = xi_a_gamma_series(p(0.7, -5.0), &st()).unwrap().value;
    assert!((a - b).norm() < 1e-12);
}

#[test]
fn xi_a_gamma_series_is_entire() {
    let pts = [(0.0, 0.0), (-2.0, 0.0), (-4.0, 0.0), (1.0, 0.0), (0.0, extra_zero_spacing())];
    for (re, im) in pts {
        let v = xi_a_gamma_series(p(re, im), &st()).unwrap().value;
        assert!(v.re.is_finite() && v.im.is_finite());
    }
    let at = |re| xi_a_gamma_series(p(re, 0.0), &st()).unwrap().value.re;
    assert!((at(0.0) + LN_2).abs() < 1e-13);
    assert!((at(1.0) + LN_2).abs() < 1e-13);
    assert!((at(-2.0) + 1.0043948145818221484).abs() < 1e-12);
    assert!((at(-4.0) + 2.2900395744733159735).abs() < 1e-12);
    let z = xi_a_gamma_series(p(0.0, extra_zero_spacing::<f64>()), &st()).unwrap().value;
    assert!(z.norm() < 1e-10);
}

#[test]
fn xi_a_critical_examples() {
    let r = xi_a_critical(12.0, &st()).unwrap();
    assert_eq!(r.value.im, 0.0);
    assert!((r.value.re - XI_A_12).abs() < 1e-15);
    assert!((xi_a_critical(0.0, &st()).unwrap().value.re - XI_A_HALF).abs() < 1e-14);
    let (a, b, g) = critical_leading_terms(12.0f64, &st()).unwrap();
    assert!((a - 0.013993984837979266197).abs() < 1e-15);
    assert!((b - 0.0068096230630697008944).abs() < 1e-15);
    assert!((g - 0.000147065410877711286).abs() < 1e-16);
    assert!((a - 0.013993985486).abs() < 1e-8);
    assert!((b - 0.00680962358).abs() < 1e-8);
    assert!((g - 0.000147065423).abs() < 1e-8);
    // m = 0 already carries ξ_a to ~1e-10.
    assert!((-a + 2.0 * b - g - XI_A_12).abs() < 1e-9);
}

#[test]
fn xi_a_lower_series_examples() {
    let v = |re, im| xi_a_lower_series(p(re, im), &st()).unwrap().value;
    assert!((v(0.5, 0.0).re - XI_A_HALF).abs() < 1e-10);
    assert!((v(0.5, 0.0).re + 0.6823392).abs() < 1e-6);
    assert!((v(0.5, 12.0).re + 0.000521803749).abs() < 1e-6);
    assert!((v(0.4, 3.0) - v(0.6, -3.0)).norm() < 1e-12);
    for bad in [0.0, 1.0, -0.5, 1.2] {
        assert_eq!(xi_a_lower_series(p(bad, 1.0), &st()).unwrap_err().code(), "E_DOMAIN");
    }
    assert!(xi_a_lower_series(p(0.5, 0.0), &st()).unwrap().terms_used >= 8);
}

#[test]
fn three_methods_agree_on_grid() {
    for &(sg, t, re, im) in GRID {
        let want = c(re, im);
        let series = xi_a_gamma_series(p(sg, t), &st()).unwrap().value;
        let direct = xi_a_direct(p(sg, t), &st()).unwrap().value;
        let lower = xi_a_lower_series(p(sg, t), &st()).unwrap().value;
        assert!((series - direct).norm() < 1e-10, "direct s={sg}+{t}i");
        assert!((lower - series).norm() < 1e-6, "lower s={sg}+{t}i");
        assert!((series - want).norm() < 1e-13, "series s={sg}+{t}i: {series} vs {want}");
        assert!((lower - want).norm() < 1e-11, "lower s={sg}+{t}i: {lower} vs {want}");
    }
}

#[test]
fn symmetry_on_random_strip_points() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..50 {
        let s = c(rng.gen_range(0.0..1.0), rng.gen_range(-25.0..25.0));
        let a = xi_a_gamma_series(SPoint::new(s), &st()).unwrap().value;
        let b = xi_a_gamma_series(SPoint::new(1.0 - s), &st()).unwrap().value;
        assert!((a - b).norm() < 1e-11, "s = {s}");
    }
}

#[test]
fn real_on_critical_line() {
    for t in [0.0f64, 1.0, 12.0, 25.0] {
        let v = xi_a_gamma_series(SPoint::critical(t), &st()).unwrap().value;
        assert!(v.im.abs() < 1e-12, "t={t}: {v}");
        let crit = xi_a_critical(t, &st()).unwrap().value.re;
        assert!((v.re - crit).abs() < 1e-13);
    }
    let v = xi_a_critical(25.0f64, &st()).unwrap().value.re;
    assert!((v + 1.2642165106130769281e-10).abs() < 1e-15);
}

#[test]
fn quartet_identity() {
    for (re, im) in [(2.0, 0.0), (1.0, 0.0), (0.5, 0.0), (0.5, 12.0)] {
        let s = c(re, im);
        let q = quartet_sum(s, &st()).unwrap().value;
        let e = eta_alternating(SPoint::new(s), &st()).unwrap().value;
        let rhs = e * (1.0 - Complex64::new(2.0, 0.0).powc(-s));
        assert!((q - rhs).norm() < 1e-12, "s={s}: {q} vs {rhs}");
    }
}

#[test]
fn conversions() {
    let s = p(0.5, 12.0);
    let xi = xi_from_xi_a(s, c(-0.000521803749, 0.0)).unwrap();
    assert!((xi.re - 0.008823639811).abs() < 1e-8);
    let e = eta_from_xi_a(s, c(-0.000521803749, 0.0)).unwrap();
    // Exact image of the 9-digit ξ_a under the conversion (40-digit arithmetic).
    assert!((e - c(2.6010806188928286503, 0.068489411223529916308)).norm() < 1e-12);
    assert!((e.re - 2.601080675).abs() < 1e-7);
    let xi_half = xi_from_xi_a(p(0.5, 0.0), c(-0.6823392, 0.0)).unwrap();
    assert!((xi_half.re - 0.49712053769470194428).abs() < 1e-14);
    let xi_half = xi_from_xi_a(p(0.5, 0.0), c(XI_A_HALF, 0.0)).unwrap();
    assert!((xi_half.re - 0.49712077818831410991).abs() < 1e-14);
    assert!((xi_half.re - 0.4971208).abs() < 1e-7);
    // ξ(2) = s(s−1)/2 π^{−s/2} Γ(s/2) ζ(s) = π/6
    let xi2 = xi_from_xi_a(p(2.0, 0.0), c(-PI / 4.0, 0.0)).unwrap();
    assert!((xi2.re - PI / 6.0).abs() < 1e-12);
    let e1 = eta_from_xi_a(p(1.0, 0.0), c(-LN_2, 0.0)).unwrap();
    assert!((e1.re - LN_2).abs() < 1e-15);
    // round trip
    let s = p(0.7, 3.0);
    let e = eta(s, &st()).unwrap().value;
    let x = xi_a_direct(s, &st()).unwrap().value;
    let back = eta_from_xi_a(s, x).unwrap();
    assert!((back - e).norm() < 1e-12 * e.norm());
    // exclusions
    for bad in [p(0.0, 0.0), p(1.0, 0.0), p(1.0, extra_zero_spacing::<f64>()), p(0.0, -extra_zero_spacing::<f64>())] {
        assert_eq!(xi_from_xi_a(bad, c(1.0, 0.0)).unwrap_err().code(), "E_DOMAIN");
    }
    assert_eq!(eta_from_xi_a(p(-2.0, 0.0), c(1.0, 0.0)).unwrap_err().code(), "E_DOMAIN");
    assert_eq!(eta_from_xi_a(p(0.0, 2.0 * extra_zero_spacing::<f64>()), c(1.0, 0.0)).unwrap_err().code(), "E_DOMAIN");
}

#[test]
fn functional_equation_residuals() {
    assert!(eta_functional_residual(p(0.25, 0.0), &st()).unwrap() < 1e-10);
    assert!(eta_functional_residual(p(0.5, 0.0), &st()).unwrap() < 1e-12);
    assert!(eta_functional_residual(p(0.3, 2.0), &st()).unwrap() < 1e-10);
    assert!(eta_functional_residual(p(-1.5, 7.0), &st()).unwrap() < 1e-10);
    for bad in [p(2.0, 0.0), p(0.0, 0.0), p(1.0, extra_zero_spacing::<f64>())] {
        assert_eq!(eta_functional_residual(bad, &st()).unwrap_err().code(), "E_DOMAIN");
    }
}

#[test]
fn scan_examples() {
    let quiet = scan_critical_line(0.0, 10.0, 0.1, &st()).unwrap();
    assert_eq!(quiet.records.len(), 101);
    assert!(quiet.zeros.is_empty());
    assert!(quiet.records.iter().all(|r| r.sign == -1));

    let one = scan_critical_line(10.0, 16.0, 0.05, &st()).unwrap();
    assert_eq!(one.records.len(), 121);
    let changes = one.records.windows(2).filter(|w| w[0].sign * w[1].sign == -1).count();
    assert_eq!(changes, 1);
    assert_eq!(one.zeros.len(), 1);
    assert!((one.zeros[0] - FIRST_ZERO).abs() < 1e-6, "{}", one.zeros[0]);

    let single = scan_critical_line(12.0f64, 12.0, 1.0, &st()).unwrap();
    assert_eq!(single.records.len(), 1);
    assert!(single.zeros.is_empty());
    assert!((single.records[0].xi_a + 0.000521803749).abs() < 1e-8);
}

#[test]
fn scan_matches_sequential_evaluation() {
    let res = scan_critical_line(10.0, 16.0, 0.25, &st()).unwrap();
    for (k, r) in res.records.iter().enumerate() {
        assert_eq!(r.t, 10.0 + k as f64 * 0.25);
        let v = xi_a_critical(r.t, &st()).unwrap().value.re;
        assert_eq!(r.xi_a.to_bits(), v.to_bits());
    }
}

#[test]
fn zero_from_eta_agrees_with_scan() {
    let z = critical_zero_from_eta(14.0, 14.3, &st()).unwrap();
    assert!((z - FIRST_ZERO).abs() < 1e-8, "{z}");
    let scan = scan_critical_line(10.0, 16.0, 0.05, &st()).unwrap();
    assert!((scan.zeros[0] - z).abs() < 1e-6);
}
