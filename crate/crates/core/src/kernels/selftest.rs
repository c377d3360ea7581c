//! Numerical self-checks of the kernel pair, shared by tests and the CLI.

use std::f64::consts::PI;

use super::{asymp_bound, bessel_j, g, h, KernelParams};
use crate::error::Result;
use crate::special::quad::adaptive;

/// max over n points t ∈ [-t_max, t_max] of |h_μ(t) - ∫ g_μ(x) cos(tx) dx|,
/// the integral taken by adaptive quadrature directly in x.
pub fn fourier_pair_error(params: &KernelParams, n: usize, t_max: f64) -> f64 {
    (0..n)
        .map(|i| {
            let t = -t_max + 2.0 * t_max * i as f64 / (n - 1).max(1) as f64;
            let ft = 2.0 * adaptive(0.0, 1.0, 1e-14, 8, |x| g(params, x) * (t * x).cos()).value;
            (h(params, t) - ft).abs()
        })
        .fold(0.0, f64::max)
}

/// (|∫ g_μ - 1/√μ|, |h_μ(0) - 1/√μ|).
pub fn normalization_error(params: &KernelParams) -> (f64, f64) {
    let h0 = 1.0 / params.mu().sqrt();
    let integral = 2.0 * adaptive(0.0, 1.0, 1e-15, 8, |x| g(params, x)).value;
    ((integral - h0).abs(), (h(params, 0.0) - h0).abs())
}

/// Number of log-spaced t ∈ [t_lo, t_hi] with |h_μ(t)| > C_μ t^{-μ}, and the
/// largest ratio |h_μ(t)| t^μ / C_μ seen.
pub fn asymp_violations(params: &KernelParams, n: usize, t_lo: f64, t_hi: f64) -> (usize, f64) {
    let mut count = 0;
    let mut worst: f64 = 0.0;
    for i in 0..n {
        let t = t_lo * (t_hi / t_lo).powf(i as f64 / (n - 1).max(1) as f64);
        let bound = asymp_bound(params, t).unwrap_or(f64::INFINITY);
        let v = h(params, t).abs();
        worst = worst.max(v / bound);
        count += usize::from(v > bound);
    }
    (count, worst)
}

/// Number of sampled x ∈ [-1, 1] with g_μ(x) > g_μ(0).
pub fn peak_violations(params: &KernelParams, n: usize) -> usize {
    let g0 = g(params, 0.0);
    (0..n)
        .map(|i| -1.0 + 2.0 * i as f64 / (n - 1).max(1) as f64)
        .filter(|&x| g(params, x) > g0)
        .count()
}

/// |g_μ(x) - (1/2π) ∫ h_μ(t) e^{-ixt} dt|, truncated where C_μ t^{-μ} < 1e-12.
pub fn inversion_error(params: &KernelParams, x: f64) -> f64 {
    let c = params.constants().c_mu;
    let top = (c / 1e-12).powf(1.0 / params.mu());
    let panels = top.ceil() as usize;
    let integral = adaptive(0.0, top, 1e-12, panels, |t| h(params, t) * (x * t).cos()).value;
    (g(params, x) - integral / PI).abs()
}

/// |t² y'' + t y' + (t² - ν²) y| with y = J_ν and central differences of step δ.
pub fn ode_residual(nu: f64, t: f64, delta: f64) -> Result<f64> {
    let y = bessel_j(nu, t)?;
    let yp = bessel_j(nu, t + delta)?;
    let ym = bessel_j(nu, t - delta)?;
    let d1 = (yp - ym) / (2.0 * delta);
    let d2 = (yp - 2.0 * y + ym) / (delta * delta);
    Ok((t * t * d2 + t * d1 + (t * t - nu * nu) * y).abs())
}

/// One line of the kernel self-test.
#[derive(Debug, Clone, PartialEq)]
pub struct SelfTestRow {
    pub check: &'static str,
    pub mu: f64,
    pub measured: f64,
    pub threshold: f64,
    pub passed: bool,
}

/// Fourier-pair, normalization, asymptotic-bound and peak checks for each μ.
/// `tol` replaces every threshold when given.
pub fn run_selftest(mus: &[f64], tol: Option<f64>) -> Result<Vec<SelfTestRow>> {
    let mut rows = Vec::new();
    for &mu in mus {
        let p = KernelParams::new(mu, 1.0)?;
        let mut push = |check, measured: f64, default: f64| {
            let threshold = tol.unwrap_or(default);
            rows.push(SelfTestRow { check, mu, measured, threshold, passed: measured <= threshold });
        };
        push("fourier-pair", fourier_pair_error(&p, 201, 50.0), 1e-8);
        let (int_err, h0_err) = normalization_error(&p);
        push("normalization", int_err, 1e-10);
        push("h-at-zero", h0_err, 1e-12);
        let (violations, worst) = asymp_violations(&p, 1000, 0.1, 1e3);
        push("asymp-bound", violations as f64 + (worst - 1.0).max(0.0), 0.0);
        push("peak", peak_violations(&p, 1000) as f64, 0.0);
    }
    Ok(rows)
}
