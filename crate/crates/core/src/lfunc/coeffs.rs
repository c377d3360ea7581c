//! Dirichlet-series and Euler-product arithmetic on [`SelbergDatum`] values.

use std::collections::BTreeMap;

use num_complex::Complex64;

use super::datum::{max_power, SelbergDatum};
use super::primes::Sieve;
use crate::error::{Error, Result};

/// Upper bound ψ(x) ≤ 1.03883 x on Chebyshev's function.
const CHEBYSHEV_PSI: f64 = 1.038_83;

/// Local Euler factor from its log-coefficients.
///
/// Given b = [b(p), ..., b(p^K)], returns [a(1), a(p), ..., a(p^K)] with
/// Σ_j a(p^j) X^j = exp(Σ_k b(p^k) X^k / k), via j a_j = Σ_{k=1}^j b_k a_{j-k}.
pub fn local_exp(b: &[Complex64]) -> Vec<Complex64> {
    let mut a = Vec::with_capacity(b.len() + 1);
    a.push(Complex64::new(1.0, 0.0));
    for j in 1..=b.len() {
        let s: Complex64 = (1..=j).map(|k| b[k - 1] * a[j - k]).sum();
        a.push(s / j as f64);
    }
    a
}

/// Inverse of [`local_exp`]: b_j = j a_j - Σ_{k=1}^{j-1} b_k a_{j-k}. Requires a[0] = 1.
pub fn local_log(a: &[Complex64]) -> Vec<Complex64> {
    let mut b: Vec<Complex64> = Vec::with_capacity(a.len().saturating_sub(1));
    for j in 1..a.len() {
        let s: Complex64 = (1..j).map(|k| b[k - 1] * a[j - k]).sum();
        b.push(a[j] * j as f64 - s);
    }
    b
}

/// a(1), ..., a(m_max) (index 0 holds 0) by exponentiating each local factor
/// and multiplying over the factorisation of m.
pub fn dirichlet_from_euler(datum: &SelbergDatum, m_max: u64) -> Result<Vec<Complex64>> {
    if m_max > datum.horizon() {
        return Err(Error::incomplete(format!(
            "{}: coefficients requested to {m_max}, but the horizon is {}",
            datum.name(),
            datum.horizon()
        )));
    }
    let sieve = Sieve::new(m_max.max(1))?;
    let mut local: BTreeMap<u64, Vec<Complex64>> = BTreeMap::new();
    for p in sieve.primes() {
        local.insert(p, datum.local_a(p, max_power(p, m_max))?);
    }
    let mut a = vec![Complex64::new(0.0, 0.0); m_max as usize + 1];
    if m_max >= 1 {
        a[1] = Complex64::new(1.0, 0.0);
    }
    for m in 2..=m_max {
        let p = sieve.smallest_factor(m);
        let mut rest = m;
        let mut k = 0;
        while rest % p == 0 {
            rest /= p;
            k += 1;
        }
        a[m as usize] = a[rest as usize] * local[&p][k];
    }
    Ok(a)
}

/// c(m) = b_F(m) - b_G(m) on the common coefficient range.
#[derive(Debug, Clone)]
pub struct CoeffDifference {
    /// Nonzero c(p^k), keyed by (p, k).
    c: BTreeMap<(u64, u32), Complex64>,
    /// Primes p ≤ horizon with a_F(p) ≠ a_G(p).
    thin_set: Vec<u64>,
    delta: f64,
    horizon: u64,
    theta: f64,
    /// Fitted c with |c(p^k)| ≤ c · p^{kθ} on the stored range.
    growth_const: f64,
}

const COEFF_EQ_TOL: f64 = 1e-12;

impl CoeffDifference {
    /// Differences of the stored Euler data of `f` and `g` up to their common horizon.
    pub fn between(f: &SelbergDatum, g: &SelbergDatum, delta: f64) -> Result<Self> {
        if !(delta > 0.0) {
            return Err(Error::domain(format!("thin-set exponent δ must be > 0, got {delta}")));
        }
        let horizon = f.horizon().min(g.horizon());
        let theta = f.theta().max(g.theta());
        let sieve = Sieve::new(horizon.max(1))?;
        let mut c = BTreeMap::new();
        let mut thin_set = Vec::new();
        let mut growth_const: f64 = 0.0;
        for p in sieve.primes() {
            for k in 1..=max_power(p, horizon) {
                let d = f.b_at(p, k)? - g.b_at(p, k)?;
                if d.norm() > COEFF_EQ_TOL {
                    c.insert((p, k), d);
                    growth_const = growth_const.max(d.norm() / (p as f64).powf(k as f64 * theta));
                    if k == 1 {
                        thin_set.push(p);
                    }
                }
            }
        }
        Ok(Self { c, thin_set, delta, horizon, theta, growth_const })
    }

    /// c(m); zero off prime powers and for prime powers where F and G agree.
    pub fn c(&self, m: u64) -> Complex64 {
        let Some((p, k)) = prime_power_of(m) else {
            return Complex64::new(0.0, 0.0);
        };
        self.c.get(&(p, k)).copied().unwrap_or_default()
    }

    /// Nonzero entries as (m, c(m)), ascending in m.
    pub fn nonzero(&self) -> Vec<(u64, Complex64)> {
        let mut out: Vec<_> = self.c.iter().map(|(&(p, k), &v)| (p.pow(k), v)).collect();
        out.sort_by_key(|e| e.0);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn thin_set(&self) -> &[u64] {
        &self.thin_set
    }

    pub fn delta(&self) -> f64 {
        self.delta
    }

    pub fn horizon(&self) -> u64 {
        self.horizon
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn growth_const(&self) -> f64 {
        self.growth_const
    }
}

fn prime_power_of(m: u64) -> Option<(u64, u32)> {
    if m < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= m && m % p != 0 {
        p += 1;
    }
    if m % p != 0 {
        p = m;
    }
    let mut rest = m;
    let mut k = 0;
    while rest % p == 0 {
        rest /= p;
        k += 1;
    }
    (rest == 1).then_some((p, k))
}

/// Truncated Σ_{m ≤ m_max} c(m) Λ(m) m^{-s} with a bound on the omitted tail.
#[derive(Debug, Clone, Copy)]
pub struct TruncatedSeries {
    pub value: Complex64,
    pub tail_bound: f64,
}

/// -F'/F(s) + G'/G(s) as the Dirichlet series of c(m)Λ(m).
///
/// The tail bound uses |c(m)| ≤ c·m^θ and ψ(x) ≤ 1.03883x, giving
/// Σ_{m > M} |c(m)| Λ(m) m^{-σ} ≤ c·1.03883·α/(α - 1)·M^{1-α} with α = σ - θ;
/// it needs α > 1.
pub fn log_deriv_difference(diff: &CoeffDifference, s: Complex64, m_max: u64) -> Result<TruncatedSeries> {
    let alpha = s.re - diff.theta;
    if !(alpha > 1.0) {
        return Err(Error::domain(format!(
            "Re(s) = {} gives no convergent tail bound (need Re(s) > 1 + θ = {})",
            s.re,
            1.0 + diff.theta
        )));
    }
    if m_max > diff.horizon {
        return Err(Error::incomplete(format!(
            "series truncated at {m_max} but coefficients stop at {}",
            diff.horizon
        )));
    }
    let mut value = Complex64::new(0.0, 0.0);
    for (&(p, k), &c) in &diff.c {
        let m = p.pow(k);
        if m <= m_max {
            let lp = (p as f64).ln();
            value += c * lp * (-s * (m as f64).ln()).exp();
        }
    }
    let tail_bound = if diff.is_zero() {
        0.0
    } else {
        diff.growth_const * CHEBYSHEV_PSI * alpha / (alpha - 1.0) * (m_max as f64).powf(1.0 - alpha)
    };
    Ok(TruncatedSeries { value, tail_bound })
}

/// The two candidate expressions for b(p²) in terms of a(p), a(p²), b(p).
#[derive(Debug, Clone, Copy)]
pub struct PrimeSquareRelation {
    pub p: u64,
    pub stored_b: Complex64,
    /// a(p²) - a(p) b(p) / 2.
    pub half_product_form: Complex64,
    /// 2 a(p²) - a(p) b(p), forced by exponentiating log F = Σ b(m)Λ(m)/(m^s log m).
    pub newton_form: Complex64,
    pub half_product_matches: bool,
    pub newton_matches: bool,
}

pub fn prime_square_relation_check(datum: &SelbergDatum, p: u64) -> Result<PrimeSquareRelation> {
    let a = datum.local_a(p, 2)?;
    let b1 = datum.b_at(p, 1)?;
    let stored_b = datum.b_at(p, 2)?;
    let half_product_form = a[2] - a[1] * b1 / 2.0;
    let newton_form = a[2] * 2.0 - a[1] * b1;
    Ok(PrimeSquareRelation {
        p,
        stored_b,
        half_product_form,
        newton_form,
        half_product_matches: (half_product_form - stored_b).norm() < 1e-12,
        newton_matches: (newton_form - stored_b).norm() < 1e-12,
    })
}

/// Σ_{p ≤ e^x} |a_F(p²) - a_G(p²)|² log p / p.
pub fn prime_square_mean_sum(f: &SelbergDatum, g: &SelbergDatum, x: f64) -> Result<f64> {
    let limit = x.exp().floor() as u64;
    if limit < 2 {
        return Ok(0.0);
    }
    let needed = limit.saturating_mul(limit);
    for d in [f, g] {
        if d.horizon() < needed {
            return Err(Error::incomplete(format!(
                "{}: a(p²) for p ≤ {limit} needs a coefficient horizon of {needed}, have {}",
                d.name(),
                d.horizon()
            )));
        }
    }
    let sieve = Sieve::new(limit)?;
    let mut sum = 0.0;
    for p in sieve.primes() {
        let diff = f.local_a(p, 2)?[2] - g.local_a(p, 2)?[2];
        sum += diff.norm_sqr() * (p as f64).ln() / p as f64;
    }
    Ok(sum)
}

/// Which hypothesis on F and G is in force.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Condition {
    /// |Z_F(T) △ Z_G(T)| = O(T log T / log log T).
    ZeroDifference,
    /// Σ_{p ≤ e^x} |a_F(p²) - a_G(p²)|² log p / p ≪ exp(εx / log x).
    PrimeSquareMean,
}

impl std::str::FromStr for Condition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "i" | "1" | "zeros" => Ok(Condition::ZeroDifference),
            "ii" | "2" | "squares" => Ok(Condition::PrimeSquareMean),
            _ => Err(Error::domain(format!("unknown condition `{s}` (expected i or ii)"))),
        }
    }
}

impl std::fmt::Display for Condition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Condition::ZeroDifference => "i",
            Condition::PrimeSquareMean => "ii",
        })
    }
}

/// A_ε(x): exp(εx / log x) under the prime-square condition, exp(εx) otherwise.
pub fn envelope_a(eps: f64, x: f64, mode: Condition) -> Result<f64> {
    if !(eps > 0.0) {
        return Err(Error::domain(format!("ε must be > 0, got {eps}")));
    }
    match mode {
        Condition::PrimeSquareMean => {
            if !(x > 1.0) {
                return Err(Error::domain(format!("A_ε(x) under condition (ii) needs x > 1, got {x}")));
            }
            Ok((eps * x / x.ln()).exp())
        }
        Condition::ZeroDifference => Ok((eps * x).exp()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn zeta_coefficients_are_one() {
        let z = SelbergDatum::zeta(50).unwrap();
        let a = dirichlet_from_euler(&z, 50).unwrap();
        for m in 1..=50 {
            assert_abs_diff_eq!((a[m] - 1.0).norm(), 0.0, epsilon = 1e-14);
        }
    }

    #[test]
    fn trivial_datum_is_one() {
        let one = SelbergDatum::trivial(30).unwrap();
        let a = dirichlet_from_euler(&one, 30).unwrap();
        assert_eq!(a[1], c(1.0));
        assert!(a[2..].iter().all(|v| v.norm() == 0.0));
    }

    #[test]
    fn chi4_coefficient_at_three() {
        let l = SelbergDatum::dirichlet(4, 1, 100).unwrap();
        let a = dirichlet_from_euler(&l, 100).unwrap();
        assert_abs_diff_eq!(a[3].re, -1.0, epsilon = 1e-15);
        // Euler product expansion: a(n) = χ(n) for a character
        for n in 1..=100u64 {
            let chi = match n % 4 {
                1 => 1.0,
                3 => -1.0,
                _ => 0.0,
            };
            assert_abs_diff_eq!((a[n as usize] - chi).norm(), 0.0, epsilon = 1e-13);
        }
    }

    #[test]
    fn incomplete_data_names_prime_power() {
        let d = SelbergDatum::builder("partial", 20)
            .euler_b(2, 1, c(1.0))
            .euler_b(3, 1, c(1.0))
            .build()
            .unwrap();
        let err = dirichlet_from_euler(&d, 10).unwrap_err();
        assert!(matches!(err, Error::Incomplete(_)));
        assert!(err.to_string().contains("b(2^2) = b(4)"), "{err}");
    }

    #[test]
    fn log_derivative_simple_cases() {
        let z = SelbergDatum::zeta(100).unwrap();
        let same = CoeffDifference::between(&z, &z, 0.25).unwrap();
        assert!(same.is_zero());
        assert!(same.thin_set().is_empty());
        let r = log_deriv_difference(&same, Complex64::new(1.7, 3.0), 100).unwrap();
        assert_eq!(r.value, Complex64::new(0.0, 0.0));
        assert_eq!(r.tail_bound, 0.0);

        let one = SelbergDatum::builder("only-two", 100)
            .fill(c(0.0))
            .euler_b(2, 1, c(1.0))
            .build()
            .unwrap();
        let zero = SelbergDatum::trivial(100).unwrap();
        let d = CoeffDifference::between(&one, &zero, 0.25).unwrap();
        let r = log_deriv_difference(&d, c(2.0), 100).unwrap();
        assert_abs_diff_eq!(r.value.re, 2f64.ln() / 4.0, epsilon = 1e-15);
        assert_eq!(d.thin_set(), &[2]);

        assert!(matches!(log_deriv_difference(&d, c(0.9), 100), Err(Error::Domain(_))));
    }

    #[test]
    fn prime_square_relation_for_builtins() {
        let z = SelbergDatum::zeta(100).unwrap();
        let r = prime_square_relation_check(&z, 2).unwrap();
        assert_abs_diff_eq!(r.newton_form.re, 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(r.half_product_form.re, 0.5, epsilon = 1e-15);
        assert!(r.newton_matches && !r.half_product_matches);

        let l = SelbergDatum::dirichlet(4, 1, 100).unwrap();
        let r = prime_square_relation_check(&l, 3).unwrap();
        assert_abs_diff_eq!(r.stored_b.re, 1.0, epsilon = 1e-15);
        assert!(r.newton_matches);

        let flat = SelbergDatum::trivial(100).unwrap();
        let r = prime_square_relation_check(&flat, 5).unwrap();
        assert_eq!(r.newton_form, c(0.0));
        assert_eq!(r.half_product_form, c(0.0));
    }

    #[test]
    fn prime_square_sums() {
        let z = SelbergDatum::zeta(10_000).unwrap();
        assert_eq!(prime_square_mean_sum(&z, &z, 100f64.ln()).unwrap(), 0.0);
        let bumped = z.with_local_a(2, 2, c(2.0)).unwrap();
        assert_abs_diff_eq!(
            prime_square_mean_sum(&z, &bumped, 2.5f64.ln()).unwrap(),
            0.5 * 2f64.ln(),
            epsilon = 1e-14
        );
        let too_far = prime_square_mean_sum(&z, &z, 200f64.ln());
        assert!(matches!(too_far, Err(Error::Incomplete(_))));
    }

    #[test]
    fn envelope_values() {
        let e = std::f64::consts::E;
        assert_abs_diff_eq!(
            envelope_a(0.5, e, Condition::PrimeSquareMean).unwrap(),
            (0.5 * e).exp(),
            epsilon = 1e-12
        );
        assert_abs_diff_eq!(envelope_a(0.1, 10.0, Condition::ZeroDifference).unwrap(), e, epsilon = 1e-12);
        assert_abs_diff_eq!(
            envelope_a(1.0 / 200.0, 100.0, Condition::PrimeSquareMean).unwrap(),
            (100.0 / (200.0 * 100f64.ln())).exp(),
            epsilon = 1e-14
        );
        assert!(envelope_a(0.5, 1.0, Condition::PrimeSquareMean).is_err());
        assert!(envelope_a(0.0, 10.0, Condition::ZeroDifference).is_err());
    }
}
