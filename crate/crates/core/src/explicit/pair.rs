//! Test-function pairs (u, v) with v(r) = ∫ u(x) e^{ixr} dx.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::kernels::{g, h, h_complex, KernelParams};
use crate::zeros::Decay;

/// A compactly supported C² function u and its Fourier transform v.
///
/// Implementations must have u(-x) = conj(u(x)) so that v is real on the
/// real line.
pub trait TestFunctionPair: Send + Sync {
    fn name(&self) -> String;

    /// u vanishes for |x| ≥ this radius.
    fn support_radius(&self) -> f64;

    fn u(&self, x: f64) -> Complex64;

    /// v at a complex argument (needed at ±i/2 for the pole term).
    fn v(&self, r: Complex64) -> Result<Complex64>;

    /// v on the real line; override when a cheaper real formula exists.
    fn v_real(&self, r: f64) -> f64 {
        self.v(Complex64::new(r, 0.0)).map(|z| z.re).unwrap_or(f64::NAN)
    }

    /// Point around which v is concentrated.
    fn center(&self) -> f64 {
        0.0
    }

    /// Envelope of |v(center + d)| for real d.
    fn decay(&self) -> Decay;

    /// Absolute accuracy of `v` at a complex point.
    fn v_error(&self, _r: Complex64) -> f64 {
        0.0
    }
}

/// u(x) = e^{-ixt} g_μ(x/L)/L, v(r) = h_μ(L(r - t)).
#[derive(Debug, Clone, Copy)]
pub struct KernelPair {
    pub params: KernelParams,
    pub t: f64,
}

impl TestFunctionPair for KernelPair {
    fn name(&self) -> String {
        format!("kernel(mu={}, L={}, t={})", self.params.mu(), self.params.scale(), self.t)
    }

    fn support_radius(&self) -> f64 {
        self.params.scale()
    }

    fn u(&self, x: f64) -> Complex64 {
        let l = self.params.scale();
        Complex64::from_polar(g(&self.params, x / l) / l, -x * self.t)
    }

    fn v(&self, r: Complex64) -> Result<Complex64> {
        h_complex(&self.params, (r - self.t) * self.params.scale())
    }

    fn v_real(&self, r: f64) -> f64 {
        h(&self.params, self.params.scale() * (r - self.t))
    }

    fn center(&self) -> f64 {
        self.t
    }

    fn decay(&self) -> Decay {
        Decay::kernel(&self.params)
    }

    fn v_error(&self, r: Complex64) -> f64 {
        let z = (r - self.t) * self.params.scale();
        1e-13 * z.im.abs().exp() * self.params.constants().g0 * 2.0
    }
}

/// u(x) = (3 cos(ax) + cos(3ax))/4 on |x| ≤ R with a = π/(2R).
///
/// u, u' and u'' vanish at ±R; u''' jumps there, so |v(r)| ≤ ‖u'''‖₁/|r|³
/// with ‖u'''‖₁ ≤ 15 R a³.
#[derive(Debug, Clone, Copy)]
pub struct CosineBump {
    pub radius: f64,
}

impl CosineBump {
    pub fn new(radius: f64) -> Result<Self> {
        if !(radius > 0.0) || !radius.is_finite() {
            return Err(Error::domain(format!("bump radius must be > 0, got {radius}")));
        }
        Ok(Self { radius })
    }

    fn a(&self) -> f64 {
        PI / (2.0 * self.radius)
    }

    /// ∫_{-R}^{R} cos(kx) e^{ixr} dx.
    fn cos_transform(&self, k: f64, r: Complex64) -> Complex64 {
        let big_r = self.radius;
        (sinc((r - k) * big_r) + sinc((r + k) * big_r)) * big_r
    }
}

fn sinc(z: Complex64) -> Complex64 {
    if z.norm() < 1e-4 {
        let z2 = z * z;
        return Complex64::new(1.0, 0.0) - z2 / 6.0 + z2 * z2 / 120.0;
    }
    z.sin() / z
}

impl TestFunctionPair for CosineBump {
    fn name(&self) -> String {
        format!("cosine-bump(R={})", self.radius)
    }

    fn support_radius(&self) -> f64 {
        self.radius
    }

    fn u(&self, x: f64) -> Complex64 {
        if x.abs() >= self.radius {
            return Complex64::new(0.0, 0.0);
        }
        let a = self.a();
        Complex64::new(0.25 * (3.0 * (a * x).cos() + (3.0 * a * x).cos()), 0.0)
    }

    fn v(&self, r: Complex64) -> Result<Complex64> {
        let a = self.a();
        Ok(self.cos_transform(a, r) * 0.75 + self.cos_transform(3.0 * a, r) * 0.25)
    }

    fn decay(&self) -> Decay {
        let a = self.a();
        Decay { peak: self.radius * 2.0, k: 15.0 * self.radius * a.powi(3), p: 3.0 }
    }

    fn v_error(&self, _r: Complex64) -> f64 {
        1e-14 * self.radius
    }
}

/// u ≡ 0.
#[derive(Debug, Clone, Copy)]
pub struct ZeroPair;

impl TestFunctionPair for ZeroPair {
    fn name(&self) -> String {
        "zero".into()
    }

    fn support_radius(&self) -> f64 {
        0.0
    }

    fn u(&self, _x: f64) -> Complex64 {
        Complex64::new(0.0, 0.0)
    }

    fn v(&self, _r: Complex64) -> Result<Complex64> {
        Ok(Complex64::new(0.0, 0.0))
    }

    fn decay(&self) -> Decay {
        Decay { peak: 0.0, k: 0.0, p: 2.0 }
    }
}

/// Arguments a registered pair may read.
#[derive(Debug, Clone, Copy)]
pub struct PairArgs {
    pub mu: f64,
    pub scale: f64,
    pub t: f64,
    pub radius: f64,
}

type PairCtor = fn(&PairArgs) -> Result<Box<dyn TestFunctionPair>>;

const REGISTRY: &[(&str, PairCtor)] = &[
    ("kernel", |a| Ok(Box::new(KernelPair { params: KernelParams::new(a.mu, a.scale)?, t: a.t }))),
    ("cosine-bump", |a| Ok(Box::new(CosineBump::new(a.radius)?))),
    ("zero", |_| Ok(Box::new(ZeroPair))),
];

pub fn pair_names() -> impl Iterator<Item = &'static str> {
    REGISTRY.iter().map(|(n, _)| *n)
}

/// Builds a registered pair by name.
pub fn make_pair(name: &str, args: &PairArgs) -> Result<Box<dyn TestFunctionPair>> {
    let (_, ctor) = REGISTRY
        .iter()
        .find(|(n, _)| *n == name)
        .ok_or_else(|| Error::domain(format!("unknown test function `{name}`; known: {}", pair_names().collect::<Vec<_>>().join(", "))))?;
    ctor(args)
}

/// Checks the contract: u vanishes off its support, v is real on the line,
/// and second differences of u stay bounded under refinement.
pub fn check_pair(pair: &dyn TestFunctionPair) -> Result<()> {
    let r = pair.support_radius();
    if r == 0.0 {
        return Ok(());
    }
    for x in [r, r * 1.01, r * 2.0] {
        for s in [x, -x] {
            if pair.u(s).norm() > 1e-12 {
                return Err(Error::Precondition(format!("{}: u({s}) ≠ 0 outside the support", pair.name())));
            }
        }
    }
    for rr in [0.3, 1.7, 11.0] {
        let v = pair.v(Complex64::new(rr, 0.0))?;
        if v.im.abs() > 1e-12 * (1.0 + v.re.abs()) {
            return Err(Error::Precondition(format!("{}: v({rr}) is not real", pair.name())));
        }
    }
    let second = |step: f64| {
        let n = (2.4 * r / step).ceil() as i64;
        (-n..=n)
            .map(|i| {
                let x = i as f64 * step;
                (pair.u(x + step) - pair.u(x) * 2.0 + pair.u(x - step)).norm() / (step * step)
            })
            .fold(0.0, f64::max)
    };
    let coarse = second(r / 200.0);
    let fine = second(r / 1600.0);
    if fine > 2.0 * coarse + 1e-9 {
        return Err(Error::Precondition(format!(
            "{}: second differences grow under refinement ({coarse:.3e} → {fine:.3e}); u is not C²",
            pair.name()
        )));
    }
    Ok(())
}
