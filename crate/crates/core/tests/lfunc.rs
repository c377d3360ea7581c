use approx::assert_relative_eq;
use num_complex::Complex64;
use proptest::prelude::*;
use selberg_core::lfunc::{
    dirichlet_from_euler, load_datum, local_exp, local_log, log_deriv_difference, prime_square_mean_sum,
    prime_square_relation_check, CoeffDifference, DirichletCharacter, SelbergDatum,
};

// -ζ'/ζ(2) + L'/L(2, χ_{-4}), from tools/oracles.py.
const LOGDERIV_AT_2: f64 = 0.659_026_277_462_417_84;

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

#[test]
fn dirichlet_coefficients_of_builtins() {
    let zeta = dirichlet_from_euler(&SelbergDatum::zeta(1000).unwrap(), 1000).unwrap();
    assert!(zeta[1..].iter().all(|a| (a - c(1.0)).norm() < 1e-12));
    let chi = DirichletCharacter::new(4, 1).unwrap();
    let l = dirichlet_from_euler(&SelbergDatum::dirichlet(4, 1, 1000).unwrap(), 1000).unwrap();
    for m in 1..=1000u64 {
        assert!((l[m as usize] - chi.value(m)).norm() < 1e-12, "m = {m}");
    }
}

#[test]
fn euler_log_roundtrip() {
    for datum in [SelbergDatum::zeta(10_000).unwrap(), SelbergDatum::dirichlet(5, 1, 10_000).unwrap()] {
        for p in [2u64, 3, 5, 7, 97] {
            let k = datum.local_b(p).len() as u32;
            let b: Vec<_> = (1..=k).map(|j| datum.b_at(p, j).unwrap()).collect();
            let back = local_log(&local_exp(&b));
            for (x, y) in b.iter().zip(&back) {
                assert!((x - y).norm() < 1e-12);
            }
        }
    }
}

#[test]
fn missing_coefficients_are_incomplete() {
    let z = SelbergDatum::zeta(100).unwrap();
    assert!(dirichlet_from_euler(&z, 101).is_err());
    assert!(z.b_at(101, 1).is_err());
}

#[test]
fn prime_square_relation_for_zeta() {
    let r = prime_square_relation_check(&SelbergDatum::zeta(100).unwrap(), 2).unwrap();
    assert_relative_eq!(r.stored_b.re, 1.0);
    assert_relative_eq!(r.newton_form.re, 1.0, epsilon = 1e-15);
    assert_relative_eq!(r.half_product_form.re, 0.5, epsilon = 1e-15);
    assert!(r.newton_matches && !r.half_product_matches);
}

#[test]
fn log_derivative_difference_matches_oracle() {
    let f = SelbergDatum::zeta(200_000).unwrap();
    let g = SelbergDatum::dirichlet(4, 1, 200_000).unwrap();
    let d = CoeffDifference::between(&f, &g, 0.1).unwrap();
    let s = log_deriv_difference(&d, c(2.0), 200_000).unwrap();
    assert!((s.value.re - LOGDERIV_AT_2).abs() <= s.tail_bound);
    assert!(s.tail_bound < 1e-4);
    assert!(log_deriv_difference(&d, c(1.0), 1000).is_err());
}

#[test]
fn difference_with_self_vanishes() {
    for name in ["zeta", "dirichlet:4:1", "dirichlet:7:2"] {
        let f = SelbergDatum::builtin(name, 5000).unwrap();
        let d = CoeffDifference::between(&f, &f, 0.1).unwrap();
        assert!(d.is_zero());
        assert!(d.thin_set().is_empty());
        let s = log_deriv_difference(&d, c(3.0), 5000).unwrap();
        assert_eq!(s.value, c(0.0));
        assert_eq!(prime_square_mean_sum(&f, &f, 4.0).unwrap(), 0.0);
    }
}

#[test]
fn perturbed_square_shows_up_in_mean_sum() {
    let f = SelbergDatum::zeta(10_000).unwrap();
    let g = f.with_local_a(3, 2, c(2.0)).unwrap();
    assert_relative_eq!(g.coefficient_a(9).unwrap().re, 2.0, epsilon = 1e-12);
    let s = prime_square_mean_sum(&f, &g, 2.0).unwrap();
    assert_relative_eq!(s, 3f64.ln() / 3.0, epsilon = 1e-12);
}

#[test]
fn spec_file_from_disk() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("chi.txt");
    std::fs::write(&path, "builtin = dirichlet:4:1\nhorizon = 500\n").unwrap();
    let d = load_datum(&path).unwrap();
    assert_eq!(d.horizon(), 500);
    assert_relative_eq!(d.b_at(3, 1).unwrap().re, -1.0);
    assert!(load_datum(dir.path().join("missing.txt")).is_err());
}

proptest! {
    #[test]
    fn local_roundtrip(b in proptest::collection::vec((-2.0f64..2.0, -2.0f64..2.0), 1..8)) {
        let b: Vec<Complex64> = b.into_iter().map(|(x, y)| Complex64::new(x, y)).collect();
        let back = local_log(&local_exp(&b));
        for (x, y) in b.iter().zip(&back) {
            prop_assert!((x - y).norm() < 1e-9 * (1.0 + x.norm()));
        }
    }
}
