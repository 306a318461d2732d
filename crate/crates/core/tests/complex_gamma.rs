use alt_xi_core::{checked_div, checked_ln, gamma, real_pow_complex, Complex, Complex64, Error};
use approx::assert_relative_eq;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::PI;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn rel(a: Complex64, b: Complex64) -> f64 {
    (a - b).norm() / b.norm()
}

// Γ(z) from 40-digit arithmetic.
#[rustfmt::skip]
const REFERENCE: [((f64, f64), (f64, f64)); 7] = [
    ((0.25, 6.0), (-4.466_761_568_081_910_7e-5, -1.213_139_489_514_852e-4)),
    ((0.5, 0.0), (1.772_453_850_905_516, 0.0)),
    ((3.7, -2.2), (-1.885_026_013_041_872_9, -0.849_790_941_594_589_42)),
    ((0.5, 50.0), (9.033_204_352_600_619_2e-35, 1.726_362_252_269_093_8e-34)),
    ((-2.5, 1.0), (-0.041_736_625_807_893_614, -0.086_369_107_369_763_485)),
    ((40.0, 30.0), (5.377_775_040_836_147_3e41, -1.778_268_311_904_907_6e41)),
    ((-4.3, 0.0), (-0.101_980_788_883_433_28, 0.0)),
];

#[test]
fn complex_op_examples() {
    assert_eq!(c(0.0, 0.0).exp(), c(1.0, 0.0));
    let back = checked_ln(c(1.0, 2.0).exp()).unwrap();
    assert_relative_eq!(back.re, 1.0, epsilon = 1e-15);
    assert_relative_eq!(back.im, 2.0, epsilon = 1e-15);
    assert!((c(0.0, PI).exp() - c(-1.0, 0.0)).norm() < 1e-15);
}

#[test]
fn log_branch_is_principal() {
    assert_eq!(checked_ln(c(-1.0, 0.0)).unwrap().im, PI);
    assert_eq!(checked_ln(c(-1.0, -0.0)).unwrap().im, PI);
    assert!(checked_ln(c(-1.0, -1e-300)).unwrap().im < 0.0);
}

#[test]
fn zero_divisor_and_zero_log_are_domain_errors() {
    assert_eq!(checked_div(c(1.0, 0.0), c(0.0, 0.0)).unwrap_err().code(), "E_DOMAIN");
    assert_eq!(checked_ln(c(0.0, 0.0)).unwrap_err().code(), "E_DOMAIN");
    assert_eq!(checked_div(c(1.0, 1.0), c(0.0, 2.0)).unwrap(), c(0.5, -0.5));
}

#[test]
fn real_pow_examples() {
    let v = real_pow_complex(4.0, c(0.5, 0.0)).unwrap();
    assert_relative_eq!(v.re, 2.0, epsilon = 1e-15);
    assert_eq!(real_pow_complex(1.0, c(0.5, 12.0)).unwrap(), c(1.0, 0.0));
    let w = real_pow_complex(PI, c(-0.25, -6.0)).unwrap();
    assert_relative_eq!(w.norm(), PI.powf(-0.25), max_relative = 1e-14);
    assert!(real_pow_complex(0.0, c(1.0, 0.0)).is_err());
    assert!(real_pow_complex(-2.0, c(1.0, 0.0)).is_err());
}

proptest! {
    #[test]
    fn real_pow_modulus(x in 1e-3f64..1e3, re in -5.0f64..5.0, im in -30.0f64..30.0) {
        let v = real_pow_complex(x, c(re, im)).unwrap();
        let expect = x.powf(re);
        prop_assert!(((v.norm() - expect) / expect).abs() < 1e-14);
    }
}

#[test]
fn gamma_classical_values() {
    assert!(rel(gamma(c(1.0, 0.0)).unwrap(), c(1.0, 0.0)) < 1e-15);
    assert!(rel(gamma(c(0.5, 0.0)).unwrap(), c(PI.sqrt(), 0.0)) < 1e-15);
    assert!(rel(gamma(c(6.0, 0.0)).unwrap(), c(120.0, 0.0)) < 1e-13);
}

#[test]
fn gamma_at_omega_matches_twelve_decimals() {
    let g = gamma(c(0.25, 6.0)).unwrap();
    assert!((g.re + 0.000044667603).abs() < 1e-10);
    assert!((g.im + 0.000121313951).abs() < 1e-10);
}

#[test]
fn gamma_reference_values() {
    for ((zr, zi), (vr, vi)) in REFERENCE {
        let g = gamma(c(zr, zi)).unwrap();
        assert!(rel(g, c(vr, vi)) < 1e-12, "z={zr}+{zi}i: {g} vs {vr}+{vi}i");
    }
}

#[test]
fn pole_guard_names_the_pole() {
    match gamma(c(-3.0 + 1e-12, 0.0)).unwrap_err() {
        Error::Domain { detail, .. } => assert!(detail.contains("-3"), "{detail}"),
        other => panic!("unexpected {other:?}"),
    }
    assert!(gamma(c(0.0, 0.0)).is_err());
    assert!(gamma(c(-2.0, 2e-9)).is_ok());
}

#[test]
fn gamma_recurrence_on_random_grid() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..100 {
        let z = c(rng.gen_range(0.1..10.0), rng.gen_range(-20.0..20.0));
        let lhs = gamma(z + 1.0).unwrap();
        let rhs = z * gamma(z).unwrap();
        assert!(rel(rhs, lhs) < 1e-11, "z={z}");
    }
}

#[test]
fn gamma_conjugate_symmetry_and_reflection() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut checked = 0;
    while checked < 100 {
        let z = c(rng.gen_range(-10.0..10.0), rng.gen_range(-20.0..20.0));
        if (z.re - z.re.round()).abs() < 1e-3 && z.im.abs() < 1e-3 {
            continue;
        }
        checked += 1;
        let g = gamma(z).unwrap();
        assert!(rel(gamma(z.conj()).unwrap(), g.conj()) < 1e-12);
        let one = c(1.0, 0.0);
        let prod = g * gamma(one - z).unwrap() * (z * PI).sin() / PI;
        assert!(rel(prod, one) < 1e-10, "z={z}: {prod}");
    }
}

#[test]
fn gamma_generic_over_f32() {
    let g = gamma(Complex::new(0.5f32, 0.0)).unwrap();
    assert!((g.re - std::f32::consts::PI.sqrt()).abs() < 1e-5);
}
