//! The compactly supported kernel g_μ and its Fourier transform h_μ.
//!
//! g_μ(x) = 2^{2μ} / (π √μ binom(2μ, μ)) · (1 - x²)^{μ - 1/2} on [-1, 1] and 0
//! outside, with h_μ(t) = ∫ g_μ(x) e^{itx} dx = Γ(μ+1)/√μ · J_μ(|t|) (2/|t|)^μ.
//! The pair is normalised so that h_μ(0) = 1/√μ and
//! g_μ(x) = (1/2π) ∫ h_μ(t) e^{-ixt} dt.

mod bessel;
pub mod selftest;

use std::f64::consts::PI;

use num_complex::Complex64;

pub use bessel::{bessel_j, method_for, BesselMethod};

use crate::error::{Error, Result};
use crate::special::ln_gamma;
use crate::special::quad::GaussLegendre;

/// Below this |t|, h_μ uses its two-term Taylor expansion about 0.
pub const H_TAYLOR_SWITCH: f64 = 1e-4;

/// Smoothness order μ and scale L of the kernel pair.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KernelParams {
    mu: f64,
    scale: f64,
}

impl KernelParams {
    /// Requires μ ≥ 3 (g_μ is then C²) and L > 0.
    pub fn new(mu: f64, scale: f64) -> Result<Self> {
        if !(mu >= 3.0) || !mu.is_finite() {
            return Err(Error::domain(format!("kernel order μ must be ≥ 3, got {mu}")));
        }
        if !(scale > 0.0) || !scale.is_finite() {
            return Err(Error::domain(format!("kernel scale L must be > 0, got {scale}")));
        }
        Ok(Self { mu, scale })
    }

    pub fn mu(&self) -> f64 {
        self.mu
    }

    pub fn scale(&self) -> f64 {
        self.scale
    }

    pub fn constants(&self) -> KernelConstants {
        KernelConstants::new(self.mu)
    }
}

/// Derived constants of the pair for a given μ.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KernelConstants {
    /// C_μ = Γ(μ+1) 2^μ / √μ, the constant in |h_μ(t)| ≤ C_μ |t|^{-μ}.
    pub c_mu: f64,
    /// g_μ(0), the maximum of g_μ.
    pub g0: f64,
    /// h_μ(0) = 1/√μ.
    pub h0: f64,
}

impl KernelConstants {
    fn new(mu: f64) -> Self {
        Self {
            c_mu: (ln_gamma(mu + 1.0) + mu * 2f64.ln()).exp() / mu.sqrt(),
            g0: g_peak(mu),
            h0: 1.0 / mu.sqrt(),
        }
    }
}

fn ln_binom_2mu_mu(mu: f64) -> f64 {
    ln_gamma(2.0 * mu + 1.0) - 2.0 * ln_gamma(mu + 1.0)
}

fn g_peak(mu: f64) -> f64 {
    (2.0 * mu * 2f64.ln() - PI.ln() - 0.5 * mu.ln() - ln_binom_2mu_mu(mu)).exp()
}

/// g_μ(x).
pub fn g(params: &KernelParams, x: f64) -> f64 {
    g_mu(params.mu, x)
}

pub(crate) fn g_mu(mu: f64, x: f64) -> f64 {
    if x.abs() >= 1.0 {
        return 0.0;
    }
    g_peak(mu) * (1.0 - x * x).powf(mu - 0.5)
}

/// h_μ(t) for real t; even in t, equal to 1/√μ at t = 0.
pub fn h(params: &KernelParams, t: f64) -> f64 {
    h_mu(params.mu, t)
}

pub(crate) fn h_mu(mu: f64, t: f64) -> f64 {
    let t = t.abs();
    let h0 = 1.0 / mu.sqrt();
    if t < H_TAYLOR_SWITCH {
        let q = 0.25 * t * t;
        return h0 * (1.0 - q / (mu + 1.0) + 0.5 * q * q / ((mu + 1.0) * (mu + 2.0)));
    }
    match method_for(mu, t) {
        BesselMethod::Series => h0 * bessel::reduced_series(mu, t),
        BesselMethod::Recurrence | BesselMethod::Hankel => {
            let j = if method_for(mu, t) == BesselMethod::Hankel {
                bessel::hankel(mu, t)
            } else {
                bessel::miller(mu, t)
            };
            (ln_gamma(mu + 1.0) + mu * (2.0 / t).ln() - 0.5 * mu.ln()).exp() * j
        }
    }
}

/// C_μ |t|^{-μ}, the majorant of |h_μ(t)|.
pub fn asymp_bound(params: &KernelParams, t: f64) -> Result<f64> {
    if t == 0.0 {
        return Err(Error::domain("asymptotic bound is undefined at t = 0"));
    }
    Ok(asymp_bound_mu(params.mu, t.abs()))
}

pub(crate) fn asymp_bound_mu(mu: f64, t: f64) -> f64 {
    (ln_gamma(mu + 1.0) + mu * 2f64.ln() - 0.5 * mu.ln() - mu * t.abs().ln()).exp()
}

/// Entire extension of h_μ to complex z, computed as ∫_{-1}^{1} g_μ(x) e^{izx} dx.
///
/// The substitution x = sin θ turns the integrand into cos^{2μ}θ e^{iz sin θ},
/// which is smooth to order 2μ at the endpoints; composite Gauss–Legendre
/// panels in θ are doubled until two successive sums agree.
pub fn h_complex(params: &KernelParams, z: Complex64) -> Result<Complex64> {
    h_complex_mu(params.mu, z)
}

const H_COMPLEX_RTOL: f64 = 1e-13;

pub(crate) fn h_complex_mu(mu: f64, z: Complex64) -> Result<Complex64> {
    if z.im.abs() > 700.0 {
        return Err(Error::Overflow(format!(
            "h_μ at Im z = {:.3e} exceeds the binary64 range (e^|Im z|); reduce L",
            z.im
        )));
    }
    let rule = GaussLegendre::cached(24);
    let g0 = g_peak(mu);
    let half_pi = 0.5 * PI;
    let integrand = |theta: f64| {
        let c = theta.cos().abs();
        let s = theta.sin();
        (Complex64::new(0.0, 1.0) * z * s).exp() * (c.powf(2.0 * mu) * g0)
    };
    let mut panels = 2 + (z.norm() / 3.0).ceil() as usize;
    let mut prev = crate::special::quad::composite(&rule, -half_pi, half_pi, panels, integrand);
    let scale = (z.im.abs()).exp() * g0;
    let mut err = f64::INFINITY;
    for _ in 0..12 {
        panels *= 2;
        let next = crate::special::quad::composite(&rule, -half_pi, half_pi, panels, integrand);
        err = (next - prev).norm();
        if err <= H_COMPLEX_RTOL * scale.max(next.norm()) {
            return Ok(next);
        }
        prev = next;
    }
    Err(Error::Numeric {
        what: format!("h_μ quadrature at z = {z}"),
        achieved: err,
    })
}
