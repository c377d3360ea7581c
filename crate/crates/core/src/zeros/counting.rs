use super::list::{count_zeros, ZeroList};
use crate::error::{Error, Result};

/// Least-squares fit of N(T) ≈ (d/π) T log T + C T.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CountFit {
    pub c_fit: f64,
    /// max over the grid of |N(T) - model(T)| / log T.
    pub max_residual: f64,
}

pub fn counting_fit(z: &ZeroList, degree: f64, grid: &[f64]) -> Result<CountFit> {
    if grid.len() < 3 {
        return Err(Error::domain(format!("counting fit needs at least 3 heights, got {}", grid.len())));
    }
    if let Some(t) = grid.iter().find(|&&t| !(t >= 2.0)) {
        return Err(Error::domain(format!("counting fit heights must be ≥ 2, got {t}")));
    }
    let main = |t: f64| degree / std::f64::consts::PI * t * t.ln();
    let counts = grid.iter().map(|&t| count_zeros(z, t).map(|n| n as f64)).collect::<Result<Vec<_>>>()?;
    let num: f64 = grid.iter().zip(&counts).map(|(&t, &n)| t * (n - main(t))).sum();
    let den: f64 = grid.iter().map(|t| t * t).sum();
    let c_fit = num / den;
    let max_residual = grid
        .iter()
        .zip(&counts)
        .map(|(&t, &n)| (n - main(t) - c_fit * t).abs() / t.ln())
        .fold(0.0, f64::max);
    Ok(CountFit { c_fit, max_residual })
}

/// Counting model N(T) = (d/π) T log T + C T + O(E log T) for zeros of both signs,
/// used to bound sums over zeros that are not in a table.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CountingLaw {
    pub degree: f64,
    pub c_fit: f64,
    pub resid_const: f64,
}

impl CountingLaw {
    pub fn new(degree: f64, c_fit: f64, resid_const: f64) -> Self {
        Self { degree, c_fit, resid_const }
    }

    /// Law fitted on a table's own grid of heights; the residual constant is
    /// floored at 1 so a lucky fit does not make later bounds optimistic.
    pub fn fit(z: &ZeroList, degree: f64, grid: &[f64]) -> Result<Self> {
        let f = counting_fit(z, degree, grid)?;
        Ok(Self::new(degree, f.c_fit, f.max_residual.max(1.0)))
    }

    /// Fitted on the table itself when it reaches height 30, else [`Self::for_degree`].
    pub fn for_table(z: &ZeroList, degree: f64) -> Self {
        let top = z.complete_to();
        if top >= 30.0 && degree > 0.0 {
            let grid: Vec<f64> = (1..=20).map(|i| top * i as f64 / 20.0).filter(|&t| t >= 10.0).collect();
            if let Ok(law) = Self::fit(z, degree, &grid) {
                return law;
            }
        }
        Self::for_degree(degree)
    }

    /// Riemann–von Mangoldt shape for degree-d data of small conductor:
    /// C = -d(1 + log 2π)/π, with a generous residual constant.
    pub fn for_degree(degree: f64) -> Self {
        let c = -degree * (1.0 + (2.0 * std::f64::consts::PI).ln()) / std::f64::consts::PI;
        Self::new(degree, c, 3.0)
    }

    fn model(&self, t: f64) -> f64 {
        if t <= 0.0 {
            return 0.0;
        }
        self.degree / std::f64::consts::PI * t * t.ln() + self.c_fit * t
    }

    /// Upper bound on the number of zeros of one sign with ordinate in (a, b], 0 ≤ a < b.
    pub fn count_upper(&self, a: f64, b: f64) -> f64 {
        let diff = 0.5 * (self.model(b) - self.model(a));
        (diff + self.resid_const * b.max(std::f64::consts::E).ln()).max(0.0)
    }
}
