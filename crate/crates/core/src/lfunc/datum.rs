//! Axiomatic data of a Selberg-class element.

use std::collections::BTreeMap;
use std::f64::consts::PI;

use num_complex::Complex64;

use super::characters::DirichletCharacter;
use super::coeffs::{local_exp, local_log};
use super::primes::{is_prime, Sieve};
use crate::error::{Error, Result};

const UNIT_TOL: f64 = 1e-12;

/// One factor Γ(λ s + μ) of the gamma factor Γ_F(s).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GammaFactor {
    lambda: f64,
    mu_shift: Complex64,
}

impl GammaFactor {
    pub fn new(lambda: f64, mu_shift: Complex64) -> Result<Self> {
        if !(lambda > 0.0) || !lambda.is_finite() {
            return Err(Error::domain(format!("gamma factor needs λ > 0, got {lambda}")));
        }
        if !(mu_shift.re >= 0.0) || !mu_shift.im.is_finite() {
            return Err(Error::domain(format!("gamma factor needs Re μ ≥ 0, got {mu_shift}")));
        }
        Ok(Self { lambda, mu_shift })
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    pub fn mu_shift(&self) -> Complex64 {
        self.mu_shift
    }
}

/// Dirichlet/Euler data plus functional-equation data of one L-function.
///
/// Euler data is stored per prime as the local log-coefficients
/// b(p), b(p²), ..., with log F(s) = Σ_m b(m) Λ(m) / (m^s log m). Every
/// stored prime power is ≤ `horizon`; a `None` entry is a coefficient that
/// was never supplied.
#[derive(Debug, Clone)]
pub struct SelbergDatum {
    name: String,
    pole_order: u32,
    q_param: f64,
    root_number: Complex64,
    gamma_factors: Vec<GammaFactor>,
    theta: f64,
    horizon: u64,
    euler: BTreeMap<u64, Vec<Option<Complex64>>>,
}

/// Builder for [`SelbergDatum`]; `build` checks the axioms' finite parts.
#[derive(Debug, Clone)]
pub struct DatumBuilder {
    name: String,
    pole_order: u32,
    q_param: f64,
    root_number: Complex64,
    gamma_factors: Vec<GammaFactor>,
    theta: f64,
    horizon: u64,
    euler: BTreeMap<u64, Vec<Option<Complex64>>>,
    fill: Option<Complex64>,
}

impl DatumBuilder {
    pub fn new(name: impl Into<String>, horizon: u64) -> Self {
        Self {
            name: name.into(),
            pole_order: 0,
            q_param: 1.0,
            root_number: Complex64::new(1.0, 0.0),
            gamma_factors: Vec::new(),
            theta: 0.0,
            horizon,
            euler: BTreeMap::new(),
            fill: None,
        }
    }

    pub fn from_datum(datum: &SelbergDatum) -> Self {
        Self {
            name: datum.name.clone(),
            pole_order: datum.pole_order,
            q_param: datum.q_param,
            root_number: datum.root_number,
            gamma_factors: datum.gamma_factors.clone(),
            theta: datum.theta,
            horizon: datum.horizon,
            euler: datum.euler.clone(),
            fill: None,
        }
    }

    pub fn name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn pole_order(mut self, m: u32) -> Self {
        self.pole_order = m;
        self
    }

    pub fn q_param(mut self, q: f64) -> Self {
        self.q_param = q;
        self
    }

    pub fn root_number(mut self, w: Complex64) -> Self {
        self.root_number = w;
        self
    }

    pub fn gamma_factor(mut self, factor: GammaFactor) -> Self {
        self.gamma_factors.push(factor);
        self
    }

    pub fn clear_gamma_factors(mut self) -> Self {
        self.gamma_factors.clear();
        self
    }

    pub fn theta(mut self, theta: f64) -> Self {
        self.theta = theta;
        self
    }

    pub fn horizon(mut self, horizon: u64) -> Self {
        self.horizon = horizon;
        self
    }

    /// Value used for every prime power ≤ horizon not set explicitly.
    pub fn fill(mut self, value: Complex64) -> Self {
        self.fill = Some(value);
        self
    }

    /// Sets b(p^k). Entries with p^k beyond the horizon are rejected at build time.
    pub fn euler_b(mut self, p: u64, k: u32, value: Complex64) -> Self {
        let slot = self.euler.entry(p).or_default();
        if slot.len() < k as usize {
            slot.resize(k as usize, None);
        }
        slot[k as usize - 1] = Some(value);
        self
    }

    pub fn build(self) -> Result<SelbergDatum> {
        if !(self.q_param > 0.0) || !self.q_param.is_finite() {
            return Err(Error::domain(format!("Q must be > 0, got {}", self.q_param)));
        }
        if (self.root_number.norm() - 1.0).abs() > UNIT_TOL {
            return Err(Error::domain(format!(
                "root number must have modulus 1, got |w| = {}",
                self.root_number.norm()
            )));
        }
        if !(self.theta < 0.5) {
            return Err(Error::domain(format!("θ must be < 1/2, got {}", self.theta)));
        }
        if self.horizon < 1 {
            return Err(Error::domain("coefficient horizon must be ≥ 1"));
        }
        let mut euler = self.euler;
        for (&p, local) in &euler {
            if !is_prime(p) {
                return Err(Error::domain(format!("Euler entry at {p}, which is not prime")));
            }
            let kmax = max_power(p, self.horizon);
            if local.len() > kmax as usize {
                return Err(Error::domain(format!(
                    "Euler entry {p}^{} lies beyond the coefficient horizon {}",
                    local.len(),
                    self.horizon
                )));
            }
        }
        if let Some(fill) = self.fill {
            let sieve = Sieve::new(self.horizon)?;
            for p in sieve.primes() {
                let kmax = max_power(p, self.horizon) as usize;
                let slot = euler.entry(p).or_default();
                slot.resize(kmax.max(slot.len()), None);
                for v in slot.iter_mut() {
                    v.get_or_insert(fill);
                }
            }
        }
        Ok(SelbergDatum {
            name: self.name,
            pole_order: self.pole_order,
            q_param: self.q_param,
            root_number: self.root_number,
            gamma_factors: self.gamma_factors,
            theta: self.theta,
            horizon: self.horizon,
            euler,
        })
    }
}

/// Largest k with p^k ≤ horizon.
pub(crate) fn max_power(p: u64, horizon: u64) -> u32 {
    let mut k = 0;
    let mut pk: u64 = 1;
    while let Some(next) = pk.checked_mul(p) {
        if next > horizon {
            break;
        }
        pk = next;
        k += 1;
    }
    k
}

impl SelbergDatum {
    pub fn builder(name: impl Into<String>, horizon: u64) -> DatumBuilder {
        DatumBuilder::new(name, horizon)
    }

    /// Riemann ζ: Φ(s) = π^{-s/2} Γ(s/2) ζ(s), b(p^k) = 1.
    pub fn zeta(horizon: u64) -> Result<Self> {
        DatumBuilder::new("zeta", horizon)
            .pole_order(1)
            .q_param(PI.powf(-0.5))
            .gamma_factor(GammaFactor::new(0.5, Complex64::new(0.0, 0.0))?)
            .fill(Complex64::new(1.0, 0.0))
            .build()
    }

    /// L(s, χ) for a primitive character χ mod q (index as in [`DirichletCharacter`]).
    ///
    /// Φ(s) = (q/π)^{s/2} Γ((s + a)/2) L(s, χ) with a the parity, and b(p^k) = χ(p)^k.
    pub fn dirichlet(modulus: u64, index: usize, horizon: u64) -> Result<Self> {
        let chi = DirichletCharacter::new(modulus, index)?;
        if modulus == 1 {
            return Self::zeta(horizon);
        }
        if !chi.is_primitive() {
            return Err(Error::domain(format!(
                "character {index} mod {modulus} is induced from conductor {}; only primitive characters give Selberg-class data",
                chi.conductor()
            )));
        }
        let a = chi.parity() as f64;
        let mut builder = DatumBuilder::new(format!("dirichlet:{modulus}:{index}"), horizon)
            .q_param((modulus as f64 / PI).sqrt())
            .root_number(chi.root_number())
            .gamma_factor(GammaFactor::new(0.5, Complex64::new(0.5 * a, 0.0))?);
        let sieve = Sieve::new(horizon)?;
        for p in sieve.primes() {
            let x = chi.value(p);
            let mut pk = x;
            for k in 1..=max_power(p, horizon) {
                builder = builder.euler_b(p, k, pk);
                pk *= x;
            }
        }
        builder.build()
    }

    /// The constant function 1: no zeros, poles, primes, or gamma factors, Q = 1.
    pub fn trivial(horizon: u64) -> Result<Self> {
        DatumBuilder::new("one", horizon).fill(Complex64::new(0.0, 0.0)).build()
    }

    /// Resolves `zeta`, `one`, or `dirichlet:<modulus>:<index>`.
    pub fn builtin(name: &str, horizon: u64) -> Result<Self> {
        let parts: Vec<&str> = name.split(':').collect();
        match parts.as_slice() {
            ["zeta"] => Self::zeta(horizon),
            ["one"] => Self::trivial(horizon),
            ["dirichlet", q, i] => {
                let q = q
                    .parse()
                    .map_err(|_| Error::domain(format!("bad modulus in builtin `{name}`")))?;
                let i = i
                    .parse()
                    .map_err(|_| Error::domain(format!("bad index in builtin `{name}`")))?;
                Self::dirichlet(q, i, horizon)
            }
            _ => Err(Error::domain(format!(
                "unknown builtin `{name}` (expected zeta, one, or dirichlet:<q>:<index>)"
            ))),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn pole_order(&self) -> u32 {
        self.pole_order
    }

    pub fn q_param(&self) -> f64 {
        self.q_param
    }

    pub fn root_number(&self) -> Complex64 {
        self.root_number
    }

    pub fn gamma_factors(&self) -> &[GammaFactor] {
        &self.gamma_factors
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn horizon(&self) -> u64 {
        self.horizon
    }

    /// d_F = 2 Σ λ_j.
    pub fn degree(&self) -> f64 {
        2.0 * self.gamma_factors.iter().map(|g| g.lambda).sum::<f64>()
    }

    /// Primes with stored Euler data, ascending.
    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.euler.keys().copied()
    }

    /// Stored local log-coefficients b(p), b(p²), ... (possibly empty).
    pub fn local_b(&self, p: u64) -> &[Option<Complex64>] {
        self.euler.get(&p).map(Vec::as_slice).unwrap_or(&[])
    }

    /// b(p^k), failing with an incomplete-data error if it was not supplied.
    pub fn b_at(&self, p: u64, k: u32) -> Result<Complex64> {
        self.local_b(p)
            .get(k as usize - 1)
            .copied()
            .flatten()
            .ok_or_else(|| Error::incomplete(format!("missing Euler coefficient b({p}^{k}) = b({})", p.pow(k))))
    }

    /// a(p^0), ..., a(p^k) from the stored b(p), ..., b(p^k).
    pub fn local_a(&self, p: u64, k: u32) -> Result<Vec<Complex64>> {
        let b = (1..=k).map(|j| self.b_at(p, j)).collect::<Result<Vec<_>>>()?;
        Ok(local_exp(&b))
    }

    /// a(m) by factoring m and multiplying local factors.
    pub fn coefficient_a(&self, m: u64) -> Result<Complex64> {
        if m == 0 {
            return Err(Error::domain("Dirichlet coefficients start at m = 1"));
        }
        let mut rest = m;
        let mut value = Complex64::new(1.0, 0.0);
        let mut p = 2;
        while p * p <= rest {
            if rest % p == 0 {
                let mut k = 0;
                while rest % p == 0 {
                    rest /= p;
                    k += 1;
                }
                value *= self.local_a(p, k)?[k as usize];
            }
            p += 1;
        }
        if rest > 1 {
            value *= self.local_a(rest, 1)?[1];
        }
        Ok(value)
    }

    /// A copy with a(p^k) replaced by `value`; the local b(p^j), j ≥ k, are recomputed.
    pub fn with_local_a(&self, p: u64, k: u32, value: Complex64) -> Result<Self> {
        let kmax = self.local_b(p).len() as u32;
        if k == 0 || k > kmax {
            return Err(Error::incomplete(format!(
                "cannot set a({p}^{k}): local data for {p} stops at k = {kmax}"
            )));
        }
        let mut a = self.local_a(p, kmax)?;
        a[k as usize] = value;
        let b = local_log(&a);
        let mut out = self.clone();
        out.euler.insert(p, b.into_iter().map(Some).collect());
        out.name = format!("{}[a({})={}]", self.name, p.pow(k), fmt_complex(value));
        Ok(out)
    }

    /// Smallest c with |a(m)| ≤ c m^ε for all m ≤ horizon.
    pub fn ramanujan_constant(&self, eps: f64) -> Result<f64> {
        let a = super::coeffs::dirichlet_from_euler(self, self.horizon)?;
        Ok(a.iter()
            .enumerate()
            .skip(1)
            .map(|(m, v)| v.norm() / (m as f64).powf(eps))
            .fold(0.0, f64::max))
    }

    /// Smallest c with |b(p^k)| ≤ c p^{kθ} over the stored coefficients.
    pub fn euler_bound_constant(&self) -> f64 {
        self.euler
            .iter()
            .flat_map(|(&p, local)| {
                local.iter().enumerate().filter_map(move |(j, v)| {
                    v.map(|v| v.norm() / (p as f64).powf((j + 1) as f64 * self.theta))
                })
            })
            .fold(0.0, f64::max)
    }
}

fn fmt_complex(z: Complex64) -> String {
    if z.im == 0.0 {
        format!("{}", z.re)
    } else {
        format!("{}{:+}i", z.re, z.im)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn builtin_degrees() {
        assert_abs_diff_eq!(SelbergDatum::zeta(100).unwrap().degree(), 1.0);
        assert_abs_diff_eq!(SelbergDatum::dirichlet(4, 1, 100).unwrap().degree(), 1.0);
        assert_eq!(SelbergDatum::trivial(100).unwrap().degree(), 0.0);
    }

    #[test]
    fn zeta_data_is_all_ones() {
        let z = SelbergDatum::zeta(1000).unwrap();
        for p in z.primes() {
            for v in z.local_b(p) {
                assert_eq!(*v, Some(Complex64::new(1.0, 0.0)));
            }
        }
        assert_eq!(z.local_b(2).len(), 9); // 2^9 = 512 ≤ 1000 < 1024
        for m in 1..=1000 {
            assert_abs_diff_eq!((z.coefficient_a(m).unwrap() - 1.0).norm(), 0.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn rejects_bad_axioms() {
        let bad_w = DatumBuilder::new("x", 10).root_number(Complex64::new(1.1, 0.0)).build();
        assert!(matches!(bad_w, Err(Error::Domain(_))));
        assert!(GammaFactor::new(0.0, Complex64::new(0.0, 0.0)).is_err());
        assert!(GammaFactor::new(0.5, Complex64::new(-0.1, 0.0)).is_err());
        assert!(DatumBuilder::new("x", 10).theta(0.5).build().is_err());
        assert!(DatumBuilder::new("x", 10).euler_b(4, 1, Complex64::new(1.0, 0.0)).build().is_err());
        assert!(DatumBuilder::new("x", 10).euler_b(2, 4, Complex64::new(1.0, 0.0)).build().is_err());
    }

    #[test]
    fn imprimitive_characters_are_rejected() {
        assert!(SelbergDatum::dirichlet(8, 0, 100).is_err());
        assert!(SelbergDatum::builtin("dirichlet:4:1", 100).is_ok());
        assert!(SelbergDatum::builtin("gl2", 100).is_err());
    }

    #[test]
    fn missing_coefficient_is_named() {
        let d = DatumBuilder::new("partial", 100)
            .euler_b(2, 1, Complex64::new(1.0, 0.0))
            .build()
            .unwrap();
        let err = d.local_a(2, 2).unwrap_err().to_string();
        assert!(err.contains("b(2^2)"), "{err}");
    }

    #[test]
    fn perturbing_a_changes_b_by_newton_relation() {
        let z = SelbergDatum::zeta(64).unwrap();
        let p = z.with_local_a(2, 2, Complex64::new(2.0, 0.0)).unwrap();
        // b(p²) = 2a(p²) - a(p)b(p)
        assert_abs_diff_eq!(p.b_at(2, 2).unwrap().re, 3.0, epsilon = 1e-14);
        assert_abs_diff_eq!(p.coefficient_a(4).unwrap().re, 2.0, epsilon = 1e-14);
        assert_abs_diff_eq!(p.coefficient_a(8).unwrap().re, 1.0, epsilon = 1e-13);
        assert_abs_diff_eq!(p.coefficient_a(12).unwrap().re, 2.0, epsilon = 1e-13);
    }

    #[test]
    fn ramanujan_constants_of_builtins() {
        let z = SelbergDatum::zeta(500).unwrap();
        assert_abs_diff_eq!(z.ramanujan_constant(0.1).unwrap(), 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(z.euler_bound_constant(), 1.0);
        let chi = SelbergDatum::dirichlet(5, 1, 500).unwrap();
        assert!(chi.ramanujan_constant(0.1).unwrap() <= 1.0 + 1e-12);
    }
}
