//! Bessel functions of the first kind, J_ν(t), for real order ν ≥ 0.
//!
//! Three evaluation routes:
//! * ascending series, for t ≤ 6 or t²/4 ≤ ν + 1;
//! * Hankel large-argument expansion, for t ≥ max(20, 2ν, ν²/2);
//! * Miller backward recurrence normalised with the Neumann sum
//!   (t/2)^ν₀ = Σ_k (ν₀ + 2k) Γ(ν₀ + k)/k! · J_{ν₀+2k}(t), in between.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::special::{gamma, ln_gamma};

const SERIES_LIMIT: f64 = 6.0;
const HANKEL_LIMIT: f64 = 20.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BesselMethod {
    Series,
    Recurrence,
    Hankel,
}

/// The evaluation route used for J_ν(t), t > 0.
pub fn method_for(nu: f64, t: f64) -> BesselMethod {
    if t <= SERIES_LIMIT || t * t <= 4.0 * (nu + 1.0) {
        BesselMethod::Series
    } else if t >= hankel_threshold(nu) {
        BesselMethod::Hankel
    } else {
        BesselMethod::Recurrence
    }
}

fn hankel_threshold(nu: f64) -> f64 {
    HANKEL_LIMIT.max(2.0 * nu).max(0.5 * nu * nu)
}

/// J_ν(t) for ν ≥ 0. Negative t is accepted only for integer order.
pub fn bessel_j(nu: f64, t: f64) -> Result<f64> {
    if !(nu >= 0.0) || !nu.is_finite() {
        return Err(Error::domain(format!("Bessel order must be ≥ 0, got {nu}")));
    }
    if !t.is_finite() {
        return Err(Error::domain(format!("Bessel argument must be finite, got {t}")));
    }
    if t < 0.0 {
        if nu.fract() != 0.0 {
            return Err(Error::domain(format!(
                "J_ν(t) with t < 0 is complex for non-integer order ν = {nu}"
            )));
        }
        let sign = if (nu as u64) % 2 == 0 { 1.0 } else { -1.0 };
        return Ok(sign * bessel_j(nu, -t)?);
    }
    if t == 0.0 {
        return Ok(if nu == 0.0 { 1.0 } else { 0.0 });
    }
    Ok(match method_for(nu, t) {
        BesselMethod::Series => series(nu, t),
        BesselMethod::Hankel => hankel(nu, t),
        BesselMethod::Recurrence => miller(nu, t),
    })
}

/// Σ_k (-t²/4)^k / (k! (ν+1)_k), so that J_ν(t) = (t/2)^ν / Γ(ν+1) times this sum.
pub(crate) fn reduced_series(nu: f64, t: f64) -> f64 {
    let q = -0.25 * t * t;
    let mut term = 1.0;
    let mut sum = 1.0;
    let mut k = 0.0;
    loop {
        k += 1.0;
        term *= q / (k * (nu + k));
        sum += term;
        if term.abs() <= 1e-17 * sum.abs() && k * (nu + k) > q.abs() {
            break;
        }
        if k > 500.0 {
            break;
        }
    }
    sum
}

pub(crate) fn series(nu: f64, t: f64) -> f64 {
    let prefactor = (nu * (0.5 * t).ln() - ln_gamma(nu + 1.0)).exp();
    prefactor * reduced_series(nu, t)
}

pub(crate) fn hankel(nu: f64, t: f64) -> f64 {
    let four_nu2 = 4.0 * nu * nu;
    let mut p = 1.0;
    let mut q = 0.0;
    let mut a = 1.0; // a_k(ν) / t^k
    let mut prev = f64::INFINITY;
    for k in 1..200 {
        let odd = (2 * k - 1) as f64;
        a *= (four_nu2 - odd * odd) / (k as f64 * 8.0 * t);
        let mag = a.abs();
        if mag == 0.0 || mag > prev {
            break;
        }
        prev = mag;
        let sign = if (k / 2) % 2 == 0 { 1.0 } else { -1.0 };
        if k % 2 == 0 {
            p += sign * a;
        } else {
            q += sign * a;
        }
        if mag < 1e-17 {
            break;
        }
    }
    let omega = t - (0.5 * nu + 0.25) * PI;
    (2.0 / (PI * t)).sqrt() * (p * omega.cos() - q * omega.sin())
}

pub(crate) fn miller(nu: f64, t: f64) -> f64 {
    let n = nu.floor() as usize;
    let nu0 = nu - n as f64;
    let reach = (n as f64).max(t);
    let mut top = n.max(t.ceil() as usize) + 30 + (8.0 * reach.cbrt()).ceil() as usize;
    if top % 2 == 1 {
        top += 1;
    }

    // Neumann-sum weights for the even indices 0, 2, ..., top.
    let half = top / 2;
    let mut weights = Vec::with_capacity(half + 1);
    weights.push(gamma(nu0 + 1.0));
    let mut ratio = gamma(nu0 + 1.0); // Γ(ν₀ + k) / k! at k = 1
    for k in 1..=half {
        weights.push((nu0 + 2.0 * k as f64) * ratio);
        ratio *= (nu0 + k as f64) / (k as f64 + 1.0);
    }

    const RESCALE: f64 = 1e200;
    let mut upper = 0.0; // f_{k+1}
    let mut current = 1e-30; // f_k
    let mut norm = weights[half] * current;
    let mut wanted = if top == n { current } else { 0.0 };
    for k in (1..=top).rev() {
        let lower = 2.0 * (nu0 + k as f64) / t * current - upper;
        upper = current;
        current = lower;
        let idx = k - 1;
        if idx % 2 == 0 {
            norm += weights[idx / 2] * current;
        }
        if idx == n {
            wanted = current;
        }
        if current.abs() > RESCALE {
            current /= RESCALE;
            upper /= RESCALE;
            norm /= RESCALE;
            wanted /= RESCALE;
        }
    }
    wanted * (nu0 * (0.5 * t).ln()).exp() / norm
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn trivial_values() {
        assert_eq!(bessel_j(0.0, 0.0).unwrap(), 1.0);
        assert_eq!(bessel_j(3.0, 0.0).unwrap(), 0.0);
        assert!(matches!(bessel_j(-0.5, 1.0), Err(Error::Domain(_))));
        assert!(matches!(bessel_j(2.5, -1.0), Err(Error::Domain(_))));
        assert_abs_diff_eq!(bessel_j(3.0, -2.0).unwrap(), -bessel_j(3.0, 2.0).unwrap(), epsilon = 1e-16);
    }

    #[test]
    fn half_integer_order_closed_form() {
        // J_{1/2}(t) = sqrt(2/(πt)) sin t
        for &t in &[0.3, 5.0, 11.0, 13.0, 40.0, 400.0] {
            let exact = (2.0 / (PI * t)).sqrt() * t.sin();
            assert_abs_diff_eq!(bessel_j(0.5, t).unwrap(), exact, epsilon = 1e-13);
        }
        // J_{3/2}(t) = sqrt(2/(πt)) (sin t / t - cos t)
        for &t in &[0.7, 9.0, 15.0, 60.0] {
            let exact = (2.0 / (PI * t)).sqrt() * (t.sin() / t - t.cos());
            assert_abs_diff_eq!(bessel_j(1.5, t).unwrap(), exact, epsilon = 1e-13);
        }
    }

    #[test]
    fn routes_agree_in_cross_check_band() {
        // series and recurrence overlap on [6, 14], recurrence and Hankel on [20, 28]
        for &nu in &[0.0, 1.0, 3.0, 4.5] {
            for i in 0..=32 {
                let t = 6.0 + 0.25 * i as f64;
                assert_abs_diff_eq!(series(nu, t), miller(nu, t), epsilon = 1e-11);
                let t = t + 14.0;
                assert_abs_diff_eq!(hankel(nu, t), miller(nu, t), epsilon = 1e-12);
            }
        }
    }

    #[test]
    fn recurrence_matches_hankel_for_larger_orders() {
        for &nu in &[5.5, 10.0, 15.0, 20.0] {
            let t0 = hankel_threshold(nu);
            for i in 0..8 {
                let t = t0 + 3.7 * i as f64;
                assert_abs_diff_eq!(miller(nu, t), hankel(nu, t), epsilon = 1e-11);
            }
        }
    }

    #[test]
    fn recurrence_matches_series_below_threshold() {
        for &nu in &[3.0, 6.0, 10.0, 15.0] {
            for i in 1..=24 {
                let t = 0.5 * i as f64;
                assert_abs_diff_eq!(miller(nu, t), series(nu, t), epsilon = 1e-12);
            }
        }
    }

    #[test]
    fn reference_values() {
        // mpmath.besselj at 30 digits
        let cases = [
            (0.0, 1.0, 0.765_197_686_557_966_55),
            (1.0, 10.0, 0.043_472_746_168_861_437),
            (0.0, 100.0, 0.019_985_850_304_223_122),
            (3.0, 1.0, 0.019_563_353_982_668_406),
            (0.5, 11.0, -0.240_568_890_723_203_12),
            (3.0, 12.0, 0.195_136_939_531_092_68),
            (3.0, 14.5, -0.210_219_792_422_840_99),
            (10.0, 20.0, 0.186_482_558_023_945_08),
            (10.0, 50.0, -0.113_847_849_149_469_39),
            (15.0, 30.0, -0.156_247_068_390_357_66),
            (5.5, 15.0, 0.203_853_914_340_349_15),
            (20.0, 60.0, 0.102_660_205_578_763_29),
        ];
        for (nu, t, expected) in cases {
            assert_abs_diff_eq!(bessel_j(nu, t).unwrap(), expected, epsilon = 2e-14);
        }
    }
}
