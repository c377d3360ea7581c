use approx::assert_relative_eq;
use selberg_core::explicit::{
    arch_term, general_explicit_formula, make_pair, pair_names, pole_term, prime_term, shifted_explicit_formula,
    sweep, to_csv, PairArgs,
};
use selberg_core::kernels::KernelParams;
use selberg_core::lfunc::SelbergDatum;
use selberg_core::zeros::{load_fixture, CountingLaw, ZeroList};

// From tools/oracles.py; the archimedean values use the x-domain form of the
// integral, independent of the r-domain quadrature in the library.
const ARCH_ZETA_T30: f64 = 0.229_808_599_728_229_94;
const ARCH_ZETA_T50: f64 = 0.304_931_423_884_958_91;
const ARCH_CHI4_T30: f64 = 0.433_623_065_432_104_97;
const POLE_ZETA_T0_L2: f64 = 1.228_698_825_367_011_2;
const PRIME_ZETA_T0_L1: f64 = 0.112_161_035_883_586_69;

fn zeta() -> SelbergDatum {
    SelbergDatum::zeta(10_000).unwrap()
}

fn fixture(name: &str) -> (ZeroList, CountingLaw) {
    let z = load_fixture(name).unwrap();
    let law = CountingLaw::for_table(&z, 1.0);
    (z, law)
}

#[test]
fn arch_term_matches_oracle() {
    let p = KernelParams::new(3.0, 4.0).unwrap();
    for (datum, t, want) in [
        (zeta(), 30.0, ARCH_ZETA_T30),
        (zeta(), 50.0, ARCH_ZETA_T50),
        (SelbergDatum::dirichlet(4, 1, 10_000).unwrap(), 30.0, ARCH_CHI4_T30),
    ] {
        let h = arch_term(&datum, &p, t, 1e-10).unwrap();
        assert!((h.value - want).abs() <= h.error_bound.max(1e-12), "{} t={t}: {} vs {want}", datum.name(), h.value);
        assert!(h.error_bound < 1e-8);
    }
}

#[test]
fn pole_and_prime_terms_match_oracle() {
    let pole = pole_term(&zeta(), &KernelParams::new(3.0, 2.0).unwrap(), 0.0).unwrap();
    assert_relative_eq!(pole.value, POLE_ZETA_T0_L2, max_relative = 1e-10);
    let d = prime_term(&zeta(), &KernelParams::new(3.0, 1.0).unwrap(), 0.0).unwrap();
    assert_relative_eq!(d, PRIME_ZETA_T0_L1, max_relative = 1e-12);
}

#[test]
fn literal_pole_reading_is_complex() {
    let pole = pole_term(&zeta(), &KernelParams::new(3.0, 4.0).unwrap(), 30.0).unwrap();
    assert_relative_eq!(pole.literal.re, pole.value, max_relative = 1e-12);
    assert!(pole.literal.im.abs() > 1e-7);
}

#[test]
fn prime_term_needs_horizon() {
    let short = SelbergDatum::zeta(50).unwrap();
    let err = prime_term(&short, &KernelParams::new(3.0, 4.0).unwrap(), 10.0).unwrap_err();
    assert!(err.to_string().contains("54"), "{err}");
}

#[test]
fn zeta_residual_within_budget() {
    let (z, law) = fixture("zeta_zeros_1000.txt");
    let p = KernelParams::new(3.0, 4.0).unwrap();
    for r in sweep(&zeta(), &z, &law, &p, &[20.0, 30.0, 50.0, 80.0], 1e-8).unwrap() {
        assert!(r.within_budget(), "t={} residual {} budget {}", r.t, r.residual, r.budget);
        assert!(r.budget < 1e-2);
        assert_relative_eq!(r.recomputed_residual(), r.residual, epsilon = 1e-15);
    }
}

#[test]
fn chi4_residual_within_budget() {
    let (z, law) = fixture("chi4_zeros_200.txt");
    let d = SelbergDatum::dirichlet(4, 1, 10_000).unwrap();
    let p = KernelParams::new(3.0, 4.0).unwrap();
    for t in [15.0, 40.0, 90.0] {
        let r = shifted_explicit_formula(&d, &z, &law, &p, t, 1e-8).unwrap();
        assert!(r.within_budget() && r.budget < 1e-2, "t={t}: {r:?}");
    }
}

#[test]
fn wrong_zeros_break_the_formula() {
    let (z, law) = fixture("zeta_zeros_1000.txt");
    let p = KernelParams::new(3.0, 4.0).unwrap();
    let moved = z.shifted(0.3);
    let r = shifted_explicit_formula(&zeta(), &moved, &law, &p, 30.0, 1e-8).unwrap();
    assert!(!r.within_budget());
}

#[test]
fn registered_pairs_satisfy_formula() {
    let (z, law) = fixture("zeta_zeros_1000.txt");
    let names: Vec<_> = pair_names().collect();
    assert!(names.contains(&"kernel") && names.contains(&"cosine-bump"));
    let args = PairArgs { mu: 3.0, scale: 4.0, t: 25.0, radius: 3.0 };
    for name in names {
        let pair = make_pair(name, &args).unwrap();
        let r = general_explicit_formula(&zeta(), &z, &law, pair.as_ref(), 1e-8).unwrap();
        assert!(r.within_budget(), "{name}: {r:?}");
    }
    assert!(make_pair("nope", &args).is_err());
}

#[test]
fn self_difference_is_zero_term_by_term() {
    let (z, law) = fixture("zeta_zeros_1000.txt");
    let p = KernelParams::new(3.0, 4.0).unwrap();
    let r = shifted_explicit_formula(&zeta(), &z, &law, &p, 30.0, 1e-8).unwrap();
    let d = r.difference(&r);
    for v in [d.zero_side, d.pole_term, d.arch_term_h, d.prime_term_d, d.residual] {
        assert_eq!(v, 0.0);
    }
}

#[test]
fn csv_has_one_row_per_point() {
    let (z, law) = fixture("zeta_zeros_1000.txt");
    let p = KernelParams::new(3.0, 4.0).unwrap();
    let grid = [20.0, 25.0, 30.0, 35.0, 40.0];
    let csv = to_csv(&sweep(&zeta(), &z, &law, &p, &grid, 1e-6).unwrap());
    assert_eq!(csv.lines().count(), 1 + grid.len());
    assert!(csv.lines().nth(3).unwrap().starts_with("30,"));
}

#[test]
fn kernel_pair_reproduces_shifted_formula() {
    let (z, law) = fixture("zeta_zeros_1000.txt");
    let p = KernelParams::new(3.0, 4.0).unwrap();
    let shifted = shifted_explicit_formula(&zeta(), &z, &law, &p, 0.0, 1e-10).unwrap();
    let args = PairArgs { mu: 3.0, scale: 4.0, t: 0.0, radius: 1.0 };
    let pair = make_pair("kernel", &args).unwrap();
    let general = general_explicit_formula(&zeta(), &z, &law, pair.as_ref(), 1e-10).unwrap();
    for (a, b) in [
        (shifted.zero_side, general.zero_side),
        (shifted.pole_term, general.pole_term),
        (shifted.arch_term_h, general.arch_term_h),
        (shifted.prime_term_d, general.prime_term_d),
    ] {
        assert!((a - b).abs() < 1e-10, "{a} vs {b}");
    }
}

#[test]
fn constant_weight_gives_fourier_value_at_zero() {
    let d = SelbergDatum::builder("const", 100).q_param(std::f64::consts::E).fill(num_complex::Complex64::new(0.0, 0.0)).build().unwrap();
    let p = KernelParams::new(3.0, 4.0).unwrap();
    let h = arch_term(&d, &p, 7.0, 1e-12).unwrap();
    let want = 2.0 / 4.0 * selberg_core::kernels::g(&p, 0.0);
    assert!((h.value - want).abs() < 1e-10, "{} vs {want}", h.value);
}

#[test]
fn residual_within_budget_on_parameter_grid() {
    let (z, law) = fixture("zeta_zeros_1000.txt");
    let grid = [(25.0, 3.0, 3.0), (40.0, 4.0, 4.0), (60.0, 5.0, 3.5), (90.0, 3.5, 6.0), (120.0, 4.5, 3.0),
        (150.0, 6.0, 5.0), (200.0, 3.0, 8.0), (300.0, 5.5, 3.0), (450.0, 4.0, 10.0), (600.0, 7.0, 4.0)];
    for (t, l, mu) in grid {
        let r = shifted_explicit_formula(&zeta(), &z, &law, &KernelParams::new(mu, l).unwrap(), t, 1e-8).unwrap();
        assert!(r.within_budget(), "(t, L, mu) = ({t}, {l}, {mu}): {r:?}");
    }
}
