use crate::error::{Error, Result};
use crate::lfunc::Condition;

/// Parameter choices tied to a height T: ρ(T), ε = 1/2W², L = W²ρ log ρ, μ = L/2Wρ.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParamSchedule {
    pub height: f64,
    pub w: f64,
    pub mode: Condition,
    pub rho: f64,
    pub eps: f64,
    pub scale: f64,
    pub mu: f64,
}

impl ParamSchedule {
    /// μ ≥ 3, i.e. the kernel is admissible at this height.
    pub fn is_valid(&self) -> bool {
        self.mu >= 3.0
    }
}

/// ρ(T): log T / log log T under condition (i), log T under (ii).
pub fn rho(height: f64, mode: Condition) -> f64 {
    let lt = height.ln();
    match mode {
        Condition::ZeroDifference => lt / lt.ln(),
        Condition::PrimeSquareMean => lt,
    }
}

pub fn schedule(height: f64, w: f64, mode: Condition) -> Result<ParamSchedule> {
    if !(height >= 16.0) || !height.is_finite() {
        return Err(Error::domain(format!("schedule needs T ≥ 16, got {height}")));
    }
    if !(w >= 1.0) || !w.is_finite() {
        return Err(Error::domain(format!("schedule needs W ≥ 1, got {w}")));
    }
    let rho = rho(height, mode);
    if !(rho > std::f64::consts::E) {
        return Err(Error::domain(format!(
            "ρ(T) = {rho:.6} ≤ e at T = {height}; the schedule needs log ρ > 1"
        )));
    }
    let scale = w * w * rho * rho.ln();
    // dividing by 2(Wρ) keeps L/(Wρ) = 2μ exact in binary64
    let mu = scale / (2.0 * (w * rho));
    Ok(ParamSchedule { height, w, mode, rho, eps: 1.0 / (2.0 * w * w), scale, mu })
}
