use super::counting::CountingLaw;
use super::list::ZeroList;
use crate::kernels::{h, KernelParams};

/// Beyond this height the envelope sum is closed analytically.
const CLOSURE_HEIGHT: f64 = 1e15;

/// Envelope min(peak, k·d^{-p}) of |v(c + d)| for a test function v
/// concentrated around c; p > 1 is needed for sums over zeros to converge.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Decay {
    pub peak: f64,
    pub k: f64,
    pub p: f64,
}

impl Decay {
    /// |h_μ(L d)| ≤ min(h_μ(0), C_μ (L d)^{-μ}).
    pub fn kernel(params: &KernelParams) -> Self {
        let c = params.constants();
        Self { peak: c.h0, k: c.c_mu * params.scale().powf(-params.mu()), p: params.mu() }
    }

    pub fn at(&self, d: f64) -> f64 {
        if d <= 0.0 {
            return self.peak;
        }
        self.peak.min(self.k * d.powf(-self.p))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SmoothedSum {
    pub value: f64,
    /// Bound on everything left out: stored zeros outside the window plus
    /// zeros above the completeness height.
    pub tail_bound: f64,
    /// Half-width of the summation window around t.
    pub window: f64,
    /// Part of `tail_bound` due to zeros above the completeness height.
    pub deficit: f64,
    pub terms: usize,
}

/// Σ_γ h_μ(L(γ - t)) over the stored zeros, both signs when symmetric.
///
/// Zeros farther than `window` from t are dropped; the window is the
/// smallest power of two for which the counting-law envelope of the dropped
/// zeros is below `trunc_tol`.
pub fn smoothed_zero_sum(
    z: &ZeroList,
    params: &KernelParams,
    t: f64,
    trunc_tol: f64,
    law: &CountingLaw,
) -> SmoothedSum {
    let l = params.scale();
    zero_sum_with(z, t, &Decay::kernel(params), trunc_tol, law, |g| h(params, l * (g - t)))
}

/// Σ_γ v(γ) for any v whose modulus is bounded by `decay` around `center`.
pub fn zero_sum_with(
    z: &ZeroList,
    center: f64,
    decay: &Decay,
    trunc_tol: f64,
    law: &CountingLaw,
    v: impl Fn(f64) -> f64,
) -> SmoothedSum {
    let top = z.complete_to();
    let outside = |r: f64| {
        zero_envelope(law, decay, center, 0.0, top, r) + zero_envelope(law, decay, -center, 0.0, top, r)
    };
    let reach = top + center.abs() + 1.0;
    let mut window = 1.0;
    let mut dropped = outside(window);
    while dropped > trunc_tol && window < reach {
        window *= 2.0;
        dropped = outside(window);
    }
    let deficit = zero_envelope(law, decay, center, top, f64::INFINITY, 0.0)
        + zero_envelope(law, decay, -center, top, f64::INFINITY, 0.0);
    let mut value = 0.0;
    let mut terms = 0;
    for g in z.signed().filter(|g| (g - center).abs() <= window) {
        value += v(g);
        terms += 1;
    }
    SmoothedSum { value, tail_bound: dropped + deficit, window, deficit, terms }
}

/// Bound, from the counting law, on Σ decay(|γ - c|) over zeros of one sign
/// with ordinate γ ∈ (lo, hi] and |γ - c| > excl.
pub fn zero_envelope(law: &CountingLaw, decay: &Decay, c: f64, lo: f64, hi: f64, excl: f64) -> f64 {
    let mut total = 0.0;
    let mut a = lo.max(0.0);
    let stop = hi.min(CLOSURE_HEIGHT.max(4.0 * c.abs()));
    while a < stop {
        if (a - c).abs() < excl {
            a = c + excl;
            continue;
        }
        let width = (0.25 * (a - c).abs()).max(1.0);
        let mut b = a + width;
        if a < c - excl {
            b = b.min(c - excl);
        } else if a < c {
            b = b.min(c);
        }
        b = b.min(stop);
        let dist = if b <= c { c - b } else { (a - c).max(0.0) };
        total += law.count_upper(a, b) * decay.at(dist.max(excl));
        a = b;
    }
    if hi.is_infinite() && decay.k > 0.0 {
        // one-sign density ≤ α log x + β, and |γ - c| ≥ x/2 once x ≥ 2|c|
        let big = stop;
        let alpha = law.degree / (2.0 * std::f64::consts::PI);
        let beta = alpha + 0.5 * law.c_fit.abs();
        let p = decay.p - 1.0;
        let head = decay.k * 2f64.powf(decay.p);
        let integral = alpha * (big.ln() * big.powf(-p) / p + big.powf(-p) / (p * p)) + beta * big.powf(-p) / p;
        total += head * integral + law.resid_const * big.ln() * head * big.powf(-decay.p);
    }
    total
}
