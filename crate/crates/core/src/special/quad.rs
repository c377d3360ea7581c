//! Gauss–Legendre rules, composite panels and adaptive bisection.

use std::collections::HashMap;
use std::ops::{Add, Mul, Sub};
use std::sync::{Arc, OnceLock, RwLock};

use num_complex::Complex64;

/// Values that can be accumulated by the integrators (real or complex).
pub trait Integrand:
    Copy + Add<Output = Self> + Sub<Output = Self> + Mul<f64, Output = Self> + Send + Sync
{
    fn zero() -> Self;
    fn magnitude(&self) -> f64;
}

impl Integrand for f64 {
    fn zero() -> Self {
        0.0
    }
    fn magnitude(&self) -> f64 {
        self.abs()
    }
}

impl Integrand for Complex64 {
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn magnitude(&self) -> f64 {
        self.norm()
    }
}

/// Nodes and weights of an n-point Gauss–Legendre rule on [-1, 1].
#[derive(Debug, Clone)]
pub struct GaussLegendre {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl GaussLegendre {
    /// Computes the rule by Newton iteration on P_n. Prefer [`GaussLegendre::cached`].
    pub fn new(n: usize) -> Self {
        assert!(n >= 1, "Gauss-Legendre rule needs at least one node");
        let mut nodes = vec![0.0; n];
        let mut weights = vec![0.0; n];
        let nf = n as f64;
        for i in 0..(n + 1) / 2 {
            let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (nf + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                let (p, d) = legendre_with_derivative(n, x);
                dp = d;
                let dx = p / d;
                x -= dx;
                if dx.abs() < 1e-16 {
                    break;
                }
            }
            let (_, d) = legendre_with_derivative(n, x);
            if d != 0.0 {
                dp = d;
            }
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            nodes[i] = -x;
            nodes[n - 1 - i] = x;
            weights[i] = w;
            weights[n - 1 - i] = w;
        }
        Self { nodes, weights }
    }

    /// Shared, lazily built rule of order n.
    pub fn cached(n: usize) -> Arc<GaussLegendre> {
        static CACHE: OnceLock<RwLock<HashMap<usize, Arc<GaussLegendre>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(|| RwLock::new(HashMap::new()));
        if let Some(rule) = cache.read().expect("quadrature cache poisoned").get(&n) {
            return Arc::clone(rule);
        }
        let rule = Arc::new(GaussLegendre::new(n));
        cache
            .write()
            .expect("quadrature cache poisoned")
            .entry(n)
            .or_insert(rule)
            .clone()
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// ∫_a^b f with this rule on a single panel.
    pub fn integrate<T: Integrand>(&self, a: f64, b: f64, mut f: impl FnMut(f64) -> T) -> T {
        let half = 0.5 * (b - a);
        let mid = 0.5 * (a + b);
        let mut acc = T::zero();
        for (&x, &w) in self.nodes.iter().zip(&self.weights) {
            acc = acc + f(mid + half * x) * w;
        }
        acc * half
    }
}

fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    if n == 0 {
        return (1.0, 0.0);
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

/// A quadrature result with its error estimate.
#[derive(Debug, Clone, Copy)]
pub struct Estimate<T> {
    pub value: T,
    pub error: f64,
}

/// Composite rule over `panels` equal panels.
pub fn composite<T: Integrand>(
    rule: &GaussLegendre,
    a: f64,
    b: f64,
    panels: usize,
    mut f: impl FnMut(f64) -> T,
) -> T {
    let width = (b - a) / panels as f64;
    let mut acc = T::zero();
    for i in 0..panels {
        let lo = a + width * i as f64;
        let hi = if i + 1 == panels { b } else { lo + width };
        acc = acc + rule.integrate(lo, hi, &mut f);
    }
    acc
}

/// Adaptive bisection on [a, b] starting from `initial_panels` equal panels.
///
/// Each panel is accepted when the rule on the panel and on its two halves
/// agree to `panel_tol` scaled by the panel's share of [a, b]; otherwise it is
/// split. The returned error is the sum of the accepted panel discrepancies,
/// which overestimates the error of the refined value.
pub fn adaptive<T: Integrand>(
    a: f64,
    b: f64,
    abs_tol: f64,
    initial_panels: usize,
    f: impl Fn(f64) -> T,
) -> Estimate<T> {
    const ORDER: usize = 16;
    const MAX_DEPTH: u32 = 30;
    let rule = GaussLegendre::cached(ORDER);
    let total = b - a;
    let panels = initial_panels.max(1);
    let width = total / panels as f64;
    let mut value = T::zero();
    let mut error = 0.0;
    for i in 0..panels {
        let lo = a + width * i as f64;
        let hi = if i + 1 == panels { b } else { lo + width };
        let whole = rule.integrate(lo, hi, &f);
        let (v, e) = refine(&rule, lo, hi, whole, abs_tol / total.abs().max(f64::MIN_POSITIVE), 0, MAX_DEPTH, &f);
        value = value + v;
        error += e;
    }
    Estimate { value, error }
}

#[allow(clippy::too_many_arguments)]
fn refine<T: Integrand>(
    rule: &GaussLegendre,
    lo: f64,
    hi: f64,
    whole: T,
    tol_density: f64,
    depth: u32,
    max_depth: u32,
    f: &impl Fn(f64) -> T,
) -> (T, f64) {
    let mid = 0.5 * (lo + hi);
    let left = rule.integrate(lo, mid, f);
    let right = rule.integrate(mid, hi, f);
    let halves = left + right;
    let err = (halves - whole).magnitude();
    let allowed = (tol_density * (hi - lo)).max(4.0 * f64::EPSILON * halves.magnitude());
    if err <= allowed || depth >= max_depth {
        return (halves, err);
    }
    let (lv, le) = refine(rule, lo, mid, left, tol_density, depth + 1, max_depth, f);
    let (rv, re) = refine(rule, mid, hi, right, tol_density, depth + 1, max_depth, f);
    (lv + rv, le + re)
}
