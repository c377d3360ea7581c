//! The pole, archimedean, and prime terms of the explicit formula.

use std::f64::consts::PI;

use num_complex::Complex64;
use rayon::prelude::*;

use super::pair::{KernelPair, TestFunctionPair};
use crate::error::{Error, Result};
use crate::kernels::{h_complex, KernelParams};
use crate::lfunc::{SelbergDatum, Sieve};
use crate::special::digamma;
use crate::special::quad::adaptive;

/// A computed term with a bound on its numerical error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Term {
    pub value: f64,
    pub error_bound: f64,
}

/// 2 log Q + Σ_j λ_j [ψ(λ_j(1/2 + ir) + μ_j) + conj], the integrand weight of H.
pub fn arch_weight(datum: &SelbergDatum, r: f64) -> f64 {
    let mut w = 2.0 * datum.q_param().ln();
    for f in datum.gamma_factors() {
        let z = Complex64::new(0.5, r) * f.lambda() + f.mu_shift();
        w += 2.0 * f.lambda() * digamma(z).re;
    }
    w
}

/// Majorant |arch_weight(r)| ≤ A + B log(c + |r|) for all real r.
///
/// With z = λ(1/2 + ir) + μ: |Re ψ(z)| ≤ log|z| + 1 when |z| ≥ 1, and
/// |Re ψ(z)| ≤ 1/Re z + 2 otherwise (from ψ(z) = ψ(z + 1) - 1/z). Both
/// constants go into A so the bound holds everywhere.
struct WeightMajorant {
    a: f64,
    b: f64,
    c: f64,
}

impl WeightMajorant {
    fn new(datum: &SelbergDatum) -> Self {
        let mut a = 2.0 * datum.q_param().ln().abs();
        let mut b = 0.0;
        let mut c: f64 = 1.0;
        for f in datum.gamma_factors() {
            let l = f.lambda();
            let re_z = 0.5 * l + f.mu_shift().re;
            a += 2.0 * l * (l.ln().max(0.0) + 1.0 + 1.0 / re_z + 2.0);
            b += 2.0 * l;
            c = c.max(0.5 + f.mu_shift().norm() / l);
        }
        Self { a, b, c }
    }

    /// Bound on (1/2π) ∫_{|r - center| > big_r} |v(r)| |w(r)| dr, given |v| ≤ k d^{-p}.
    fn tail(&self, center: f64, big_r: f64, k: f64, p: f64) -> f64 {
        if self.a == 0.0 && self.b == 0.0 {
            return 0.0;
        }
        let q = p - 1.0;
        let cc = self.c + center.abs();
        let pow = big_r.powf(-q);
        let log_part = (cc + big_r).ln() * pow / q + pow / (q * q);
        2.0 * k * (self.a * pow / q + self.b * log_part) / (2.0 * PI)
    }
}

/// H = (1/2π) ∫ v(r) w(r) dr for a general pair, with w = [`arch_weight`].
///
/// The window [c - R, c + R] is widened until the majorant of the omitted
/// tails is below tol/2; the window is integrated in parallel chunks of
/// adaptive Gauss–Legendre with the remaining tol/2.
pub fn arch_term_with(datum: &SelbergDatum, pair: &dyn TestFunctionPair, tol: f64) -> Result<Term> {
    arch_integral(pair, tol, &WeightMajorant::new(datum), |r| arch_weight(datum, r))
}

/// H_F - H_G from a single quadrature of the weight difference.
pub fn arch_term_difference(
    f: &SelbergDatum,
    g: &SelbergDatum,
    pair: &dyn TestFunctionPair,
    tol: f64,
) -> Result<Term> {
    let (mf, mg) = (WeightMajorant::new(f), WeightMajorant::new(g));
    let maj = WeightMajorant {
        a: mf.a + mg.a,
        b: mf.b + mg.b,
        c: mf.c.max(mg.c),
    };
    arch_integral(pair, tol, &maj, |r| arch_weight(f, r) - arch_weight(g, r))
}

fn arch_integral(
    pair: &dyn TestFunctionPair,
    tol: f64,
    maj: &WeightMajorant,
    weight: impl Fn(f64) -> f64 + Sync,
) -> Result<Term> {
    if !(tol > 0.0) {
        return Err(Error::domain(format!("tolerance must be > 0, got {tol}")));
    }
    let decay = pair.decay();
    if (decay.k == 0.0 && decay.peak == 0.0) || (maj.a == 0.0 && maj.b == 0.0) {
        return Ok(Term { value: 0.0, error_bound: 0.0 });
    }
    let center = pair.center();
    let mut big_r = 1.0;
    let mut tail = maj.tail(center, big_r, decay.k, decay.p);
    while tail > 0.5 * tol {
        big_r *= 1.25;
        tail = maj.tail(center, big_r, decay.k, decay.p);
        if big_r > 1e9 {
            return Err(Error::Numeric { what: "arch term window".into(), achieved: tail });
        }
    }
    let support = pair.support_radius().max(1e-3);
    let panel = (6.0 / support).min(2.0);
    let chunk = 64.0 * panel;
    let chunks = ((2.0 * big_r) / chunk).ceil() as usize;
    let lo = center - big_r;
    let width = 2.0 * big_r / chunks as f64;
    let per_chunk_tol = 0.5 * tol * 2.0 * PI / chunks as f64;
    let parts: Vec<_> = (0..chunks)
        .into_par_iter()
        .map(|i| {
            let a = lo + width * i as f64;
            let b = if i + 1 == chunks { center + big_r } else { a + width };
            adaptive(a, b, per_chunk_tol, 64, |r| pair.v_real(r) * weight(r))
        })
        .collect();
    let value: f64 = parts.iter().map(|e| e.value).sum::<f64>() / (2.0 * PI);
    let quad_err: f64 = parts.iter().map(|e| e.error).sum::<f64>() / (2.0 * PI);
    if !value.is_finite() {
        return Err(Error::Numeric { what: "arch term quadrature".into(), achieved: f64::INFINITY });
    }
    Ok(Term { value, error_bound: tail + quad_err })
}

/// H_F(t, L, μ) = (1/2π) ∫ h_μ(L(r - t)) w(r) dr.
pub fn arch_term(datum: &SelbergDatum, params: &KernelParams, t: f64, tol: f64) -> Result<Term> {
    arch_term_with(datum, &KernelPair { params: *params, t }, tol)
}

/// D = Σ_m Λ(m) m^{-1/2} [b(m) u(log m) + conj(b(m)) u(-log m)] over m ≤ e^R.
pub fn prime_term_with(datum: &SelbergDatum, pair: &dyn TestFunctionPair) -> Result<Complex64> {
    let radius = pair.support_radius();
    if radius < 2f64.ln() {
        return Ok(Complex64::new(0.0, 0.0));
    }
    let top_f = radius.exp().floor();
    if top_f > datum.horizon() as f64 {
        return Err(Error::incomplete(format!(
            "{}: the prime sum needs coefficients up to ⌊e^{radius}⌋ = {top_f:.0}, horizon is {}",
            datum.name(),
            datum.horizon()
        )));
    }
    let top = top_f as u64;
    let sieve = Sieve::new(top)?;
    let mut acc = Complex64::new(0.0, 0.0);
    for m in 2..=top {
        let Some((p, k)) = sieve.prime_power(m) else { continue };
        let b = datum.b_at(p, k)?;
        let lm = (m as f64).ln();
        let weight = (p as f64).ln() / (m as f64).sqrt();
        acc += (b * pair.u(lm) + b.conj() * pair.u(-lm)) * weight;
    }
    Ok(acc)
}

/// D_F(t, L, μ) = (1/L) Σ_{m ≤ e^L} [b(m) Λ(m) m^{-1/2-it} g_μ(log m/L) + conj].
pub fn prime_term(datum: &SelbergDatum, params: &KernelParams, t: f64) -> Result<f64> {
    Ok(prime_term_with(datum, &KernelPair { params: *params, t })?.re)
}

/// The pole term m_F (v(i/2) + v(-i/2)) for a general pair.
pub fn pole_term_with(datum: &SelbergDatum, pair: &dyn TestFunctionPair) -> Result<Term> {
    let m = datum.pole_order() as f64;
    if m == 0.0 {
        return Ok(Term { value: 0.0, error_bound: 0.0 });
    }
    let up = Complex64::new(0.0, 0.5);
    let sum = pair.v(up)? + pair.v(-up)?;
    Ok(Term { value: m * sum.re, error_bound: m * (pair.v_error(up) + pair.v_error(-up)) })
}

/// Both readings of the pole term for the shifted kernel.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PoleTerm {
    /// m_F (v(i/2) + v(-i/2)) = 2 m_F Re h_μ(L(t + i/2)); enters the residual.
    pub value: f64,
    /// m_F (h_μ(L(-i/2 - t)) + h_μ(L(i/2 + t))) = 2 m_F h_μ(L(t + i/2)), read literally.
    pub literal: Complex64,
    pub error_bound: f64,
}

pub fn pole_term(datum: &SelbergDatum, params: &KernelParams, t: f64) -> Result<PoleTerm> {
    let m = datum.pole_order() as f64;
    if m == 0.0 {
        return Ok(PoleTerm { value: 0.0, literal: Complex64::new(0.0, 0.0), error_bound: 0.0 });
    }
    let l = params.scale();
    let hz = h_complex(params, Complex64::new(t, 0.5) * l)?;
    let err = 2.0 * m * 1e-13 * (0.5 * l).exp() * params.constants().g0;
    Ok(PoleTerm { value: 2.0 * m * hz.re, literal: hz * (2.0 * m), error_bound: err })
}
