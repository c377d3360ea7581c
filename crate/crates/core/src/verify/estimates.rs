//! Numerical checks of the finite inequalities and the reported constants.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::explicit::{arch_term, arch_term_difference, KernelPair};
use crate::kernels::{g, h, KernelParams};
use crate::lfunc::{SelbergDatum, Sieve};
use crate::special::quad::GaussLegendre;

/// One point of the comparison between H and g_μ(0) d log T / L.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LemmaOneReport {
    pub t: f64,
    pub scale: f64,
    pub mu: f64,
    pub height: f64,
    pub measured_h: f64,
    pub predicted: f64,
    /// E_μ(T) = C_μ/T + 1.
    pub e_mu: f64,
    /// |measured - predicted| L / E_μ(T).
    pub scaled_residual: f64,
}

pub fn e_mu(params: &KernelParams, height: f64) -> f64 {
    params.constants().c_mu / height + 1.0
}

pub fn lemma_one_check(
    datum: &SelbergDatum,
    params: &KernelParams,
    t_grid: &[f64],
    height: f64,
    tol: f64,
) -> Result<Vec<LemmaOneReport>> {
    let l = params.scale();
    let predicted = params.constants().g0 * datum.degree() * height.ln() / l;
    let e = e_mu(params, height);
    t_grid
        .iter()
        .map(|&t| {
            if !(t >= height && t <= 2.0 * height) {
                return Err(Error::domain(format!("t = {t} lies outside [T, 2T] = [{height}, {}]", 2.0 * height)));
            }
            let measured_h = arch_term(datum, params, t, tol)?.value;
            Ok(LemmaOneReport {
                t,
                scale: l,
                mu: params.mu(),
                height,
                measured_h,
                predicted,
                e_mu: e,
                scaled_residual: (measured_h - predicted).abs() * l / e,
            })
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TailIntegral {
    pub mu: f64,
    pub cutoff: f64,
    /// ∫_{|y| ≥ cutoff} |h_μ(y)| dy.
    pub numeric: f64,
    /// 2 C_μ cutoff^{1-μ}/(μ - 1), the integral of the asymptotic majorant.
    pub bound: f64,
    /// 2 C_μ (2/cutoff)^{μ-1}/(μ - 1), a looser majorant.
    pub loose_bound: f64,
    /// numeric / e^{-μ}.
    pub ratio_exp: f64,
    /// cutoff ≤ 2 with μ = 3: the integrand decays slowly there.
    pub slow_decay: bool,
}

/// Number of oscillations integrated explicitly before the asymptotic closure.
const TAIL_SPAN: f64 = 400.0 * PI;

pub fn tail_integral_check(params: &KernelParams, cutoff: f64) -> Result<TailIntegral> {
    if !(cutoff > 0.0) {
        return Err(Error::domain(format!("cutoff must be > 0, got {cutoff}")));
    }
    let mu = params.mu();
    let c_mu = params.constants().c_mu;
    let top = cutoff + (TAIL_SPAN / 0.25).ceil() * 0.25;
    let f = |y: f64| h(params, y);
    let rule = GaussLegendre::cached(24);
    // split at the sign changes of h so each piece integrates a smooth function
    let step = 0.25;
    let n = (TAIL_SPAN / step).ceil() as usize;
    let mut breaks = vec![cutoff];
    let mut prev = f(cutoff);
    for i in 1..=n {
        let y = cutoff + step * i as f64;
        let fy = f(y);
        if prev * fy < 0.0 {
            let (mut lo, mut hi) = (y - step, y);
            for _ in 0..60 {
                let mid = 0.5 * (lo + hi);
                if f(mid) * fy > 0.0 {
                    hi = mid;
                } else {
                    lo = mid;
                }
            }
            breaks.push(0.5 * (lo + hi));
        }
        prev = fy;
    }
    breaks.push(top);
    let total: f64 = breaks
        .windows(2)
        .map(|w| {
            let pieces = ((w[1] - w[0]) / 1.0).ceil().max(1.0) as usize;
            crate::special::quad::composite(&rule, w[0], w[1], pieces, f).abs()
        })
        .sum();
    // mean of |J_μ(y)| ~ (2/π) √(2/(πy)) beyond the explicit span
    let closure = c_mu * (2.0 / PI) * (2.0 / PI).sqrt() * top.powf(0.5 - mu) / (mu - 0.5);
    let numeric = 2.0 * (total + closure);
    let bound = 2.0 * c_mu * cutoff.powf(1.0 - mu) / (mu - 1.0);
    let loose_bound = 2.0 * c_mu * (2.0 / cutoff).powf(mu - 1.0) / (mu - 1.0);
    Ok(TailIntegral {
        mu,
        cutoff,
        numeric,
        bound,
        loose_bound,
        ratio_exp: numeric * mu.exp(),
        slow_decay: cutoff <= 2.0 && mu <= 3.0,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GLowerBound {
    pub m: u64,
    pub x: f64,
    pub g_value: f64,
    /// g_μ(0) e^{-2(μ - 1/2) x²} with x = log m / L.
    pub lower_bound: f64,
    pub holds: bool,
}

pub fn g_lower_bound_check(m: u64, params: &KernelParams) -> Result<GLowerBound> {
    if m < 2 {
        return Err(Error::domain(format!("m must be ≥ 2, got {m}")));
    }
    let x = (m as f64).ln() / params.scale();
    if !(x < 0.5) {
        return Err(Error::domain(format!(
            "log m / L = {x:.6} ≥ 1/2, outside the range of 1 - x² ≥ e^(-2x²)"
        )));
    }
    let g_value = g(params, x);
    let lower_bound = params.constants().g0 * (-2.0 * (params.mu() - 0.5) * x * x).exp();
    Ok(GLowerBound { m, x, g_value, lower_bound, holds: g_value >= lower_bound * (1.0 - 1e-12) })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeanSquare {
    /// Trapezoid estimate of ∫_T^{2T} (L(D_F - D_G))² dt.
    pub lhs: f64,
    /// Σ_{p ≤ e^{L/2}} |a_F(p²) - a_G(p²)|² (T + p) log² p / p².
    pub rhs: f64,
    pub ratio: f64,
}

/// Λ(m) m^{-1/2} g_μ(log m/L) (b_F(m) - b_G(m)) for 2 ≤ m ≤ e^L.
fn prime_weights(f: &SelbergDatum, g_: &SelbergDatum, params: &KernelParams) -> Result<Vec<(f64, Complex64)>> {
    let l = params.scale();
    let top_f = l.exp().floor();
    for d in [f, g_] {
        if top_f > d.horizon() as f64 {
            return Err(Error::incomplete(format!(
                "{}: needs coefficients up to ⌊e^L⌋ = {top_f:.0}, horizon is {}",
                d.name(),
                d.horizon()
            )));
        }
    }
    let top = top_f as u64;
    let sieve = Sieve::new(top.max(2))?;
    let mut out = Vec::new();
    for m in 2..=top {
        if let Some((p, k)) = sieve.prime_power(m) {
            let c = f.b_at(p, k)? - g_.b_at(p, k)?;
            let lm = (m as f64).ln();
            let w = (p as f64).ln() / (m as f64).sqrt() * g(params, lm / l);
            if c.norm() > 0.0 && w > 0.0 {
                out.push((lm, c * w));
            }
        }
    }
    Ok(out)
}

/// L (D_F - D_G)(t) from precomputed weights.
fn scaled_d_diff(weights: &[(f64, Complex64)], t: f64) -> f64 {
    weights.iter().map(|&(lm, c)| 2.0 * (c * Complex64::from_polar(1.0, -t * lm)).re).sum()
}

pub fn mean_square_check(
    f: &SelbergDatum,
    g_: &SelbergDatum,
    params: &KernelParams,
    height: f64,
    n_grid: usize,
) -> Result<MeanSquare> {
    if n_grid < 64 {
        return Err(Error::domain(format!("mean-square grid needs ≥ 64 points, got {n_grid}")));
    }
    if !(height > 0.0) {
        return Err(Error::domain(format!("T must be > 0, got {height}")));
    }
    let weights = prime_weights(f, g_, params)?;
    let step = height / (n_grid - 1) as f64;
    let mut lhs = 0.0;
    for i in 0..n_grid {
        let t = height + step * i as f64;
        let v = scaled_d_diff(&weights, t);
        let w = if i == 0 || i + 1 == n_grid { 0.5 } else { 1.0 };
        lhs += w * v * v;
    }
    lhs *= step;
    let top = (0.5 * params.scale()).exp().floor() as u64;
    let mut rhs = 0.0;
    if top >= 2 {
        let sieve = Sieve::new(top)?;
        for p in sieve.primes() {
            let d = f.local_a(p, 2)?[2] - g_.local_a(p, 2)?[2];
            let pf = p as f64;
            rhs += d.norm_sqr() * (height + pf) * pf.ln().powi(2) / (pf * pf);
        }
    }
    let ratio = if rhs > 0.0 { lhs / rhs } else if lhs == 0.0 { 0.0 } else { f64::INFINITY };
    Ok(MeanSquare { lhs, rhs, ratio })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LemmaTwo {
    pub integral: Complex64,
    /// T(μ^{-1/4} + C_μ/T) + E_μ(2T) + E_μ(T), implied constant 1.
    pub bound: f64,
    pub ratio: f64,
}

/// ∫_T^{2T} L e^{i freq t} (H_F - H_G)(t) dt on panels shorter than a quarter period.
pub fn oscillatory_arch_integral(
    f: &SelbergDatum,
    g_: &SelbergDatum,
    params: &KernelParams,
    height: f64,
    freq: f64,
    tol: f64,
) -> Result<Complex64> {
    let quarter = if freq == 0.0 { 1.0 } else { PI / (2.0 * freq.abs()) };
    let panels = (height / quarter.min(1.0)).ceil().max(1.0) as usize;
    let rule = GaussLegendre::cached(8);
    let width = height / panels as f64;
    let mut acc = Complex64::new(0.0, 0.0);
    for i in 0..panels {
        let a = height + width * i as f64;
        let half = 0.5 * width;
        for (x, w) in rule.nodes().iter().zip(rule.weights()) {
            let t = a + half * (x + 1.0);
            let diff = arch_term_difference(f, g_, &KernelPair { params: *params, t }, tol)?.value;
            acc += Complex64::from_polar(w * half * params.scale() * diff, freq * t);
        }
    }
    Ok(acc)
}

pub fn lemma_two_check(
    f: &SelbergDatum,
    g_: &SelbergDatum,
    params: &KernelParams,
    height: f64,
    m: u64,
    tol: f64,
) -> Result<LemmaTwo> {
    if (f.degree() - g_.degree()).abs() > 1e-12 {
        return Err(Error::Precondition(format!(
            "lemma two needs equal degrees, got {} and {}",
            f.degree(),
            g_.degree()
        )));
    }
    if m < 2 {
        return Err(Error::domain(format!("m must be ≥ 2, got {m}")));
    }
    let integral = oscillatory_arch_integral(f, g_, params, height, (m as f64).ln(), tol)?;
    let c_mu = params.constants().c_mu;
    let bound = height * (params.mu().powf(-0.25) + c_mu / height) + e_mu(params, 2.0 * height) + e_mu(params, height);
    Ok(LemmaTwo { integral, bound, ratio: integral.norm() / bound })
}

/// max over the grid of #{p ∈ E : p ≤ x} / x^{1/2 - δ}.
pub fn thin_set_density_check(set: &[u64], delta: f64, x_grid: &[f64]) -> Result<f64> {
    if !(delta > 0.0 && delta < 0.5) {
        return Err(Error::domain(format!("δ must lie in (0, 1/2), got {delta}")));
    }
    if x_grid.windows(2).any(|w| !(w[0] < w[1])) {
        return Err(Error::domain("x grid must be increasing"));
    }
    Ok(x_grid
        .iter()
        .map(|&x| set.iter().filter(|&&p| (p as f64) <= x).count() as f64 / x.powf(0.5 - delta))
        .fold(0.0, f64::max))
}
