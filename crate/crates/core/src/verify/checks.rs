//! Named checks behind `verify`, selected at run time.

use std::fmt::Write as _;

use crate::error::Result;
use crate::kernels::KernelParams;
use crate::lfunc::{CoeffDifference, Condition, SelbergDatum};

use super::estimates::{
    g_lower_bound_check, lemma_one_check, lemma_two_check, mean_square_check, tail_integral_check,
    thin_set_density_check,
};
use super::schedule::schedule;

/// Inputs shared by all checks.
#[derive(Debug, Clone)]
pub struct CheckContext {
    pub f: SelbergDatum,
    pub g: SelbergDatum,
    pub params: KernelParams,
    pub height: f64,
    pub w: f64,
    pub mode: Condition,
    pub tol: f64,
}

/// Result of one check: a hard pass/fail plus informational constants.
#[derive(Debug, Clone)]
pub struct CheckOutcome {
    pub name: &'static str,
    /// Whether `passed` reflects a proved inequality (and so gates the exit status).
    pub hard: bool,
    pub passed: bool,
    pub summary: String,
    pub constants: Vec<(String, f64)>,
}

pub trait Check: Send + Sync {
    fn name(&self) -> &'static str;
    fn run(&self, ctx: &CheckContext) -> Result<CheckOutcome>;
}

fn outcome(name: &'static str, hard: bool, passed: bool, summary: String, constants: Vec<(String, f64)>) -> CheckOutcome {
    CheckOutcome { name, hard, passed, summary, constants }
}

struct ScheduleCheck;

impl Check for ScheduleCheck {
    fn name(&self) -> &'static str {
        "schedule"
    }

    fn run(&self, ctx: &CheckContext) -> Result<CheckOutcome> {
        let s = schedule(ctx.height, ctx.w, ctx.mode)?;
        let identity = s.scale / (s.w * s.rho) == 2.0 * s.mu && s.eps == 1.0 / (2.0 * s.w * s.w);
        Ok(outcome(
            self.name(),
            true,
            identity,
            format!(
                "T={} W={} mode={} rho={:.6} L={:.6} mu={:.6} eps={} admissible={}",
                s.height,
                s.w,
                s.mode,
                s.rho,
                s.scale,
                s.mu,
                s.eps,
                s.is_valid()
            ),
            vec![("rho".into(), s.rho), ("L".into(), s.scale), ("mu".into(), s.mu), ("eps".into(), s.eps)],
        ))
    }
}

struct LemmaOne;

impl Check for LemmaOne {
    fn name(&self) -> &'static str {
        "lemma1"
    }

    fn run(&self, ctx: &CheckContext) -> Result<CheckOutcome> {
        let t = ctx.height;
        let reports = lemma_one_check(&ctx.f, &ctx.params, &[t, 1.5 * t, 2.0 * t], t, ctx.tol)?;
        let k = reports.iter().map(|r| r.scaled_residual).fold(0.0, f64::max);
        let mut summary = String::new();
        for r in &reports {
            let _ = write!(summary, "t={} H={:.10} predicted={:.10} scaled={:.4}; ", r.t, r.measured_h, r.predicted, r.scaled_residual);
        }
        Ok(outcome(self.name(), false, k.is_finite(), summary, vec![("max_scaled_residual".into(), k)]))
    }
}

struct TailIntegralCheck;

impl Check for TailIntegralCheck {
    fn name(&self) -> &'static str {
        "tail"
    }

    fn run(&self, _ctx: &CheckContext) -> Result<CheckOutcome> {
        let mut passed = true;
        let mut k: f64 = 0.0;
        let mut summary = String::new();
        for mu in [3.0, 4.0, 6.0, 10.0, 15.0] {
            let r = tail_integral_check(&KernelParams::new(mu, 1.0)?, 2.0 * mu)?;
            passed &= r.numeric <= r.bound;
            k = k.max(r.ratio_exp);
            let _ = write!(summary, "mu={mu}: {:.4e} <= {:.4e}; ", r.numeric, r.bound);
        }
        Ok(outcome(self.name(), true, passed, summary, vec![("K_exp_minus_mu".into(), k)]))
    }
}

struct GLowerBoundCheck;

impl Check for GLowerBoundCheck {
    fn name(&self) -> &'static str {
        "g-bound"
    }

    fn run(&self, _ctx: &CheckContext) -> Result<CheckOutcome> {
        let mut checked = 0;
        let mut failures = 0;
        let mut min_margin = f64::INFINITY;
        for mu in [3.0, 4.5, 7.0, 12.0, 20.0] {
            for l in [5.0, 10.0, 25.0, 100.0] {
                let params = KernelParams::new(mu, l)?;
                for m in [2u64, 3, 5, 7, 11, 64, 1000, 100_000] {
                    if (m as f64).ln() / l >= 0.5 {
                        continue;
                    }
                    let r = g_lower_bound_check(m, &params)?;
                    checked += 1;
                    failures += usize::from(!r.holds);
                    min_margin = min_margin.min(r.g_value / r.lower_bound);
                }
            }
        }
        Ok(outcome(
            self.name(),
            true,
            failures == 0,
            format!("{checked} triples, {failures} violations"),
            vec![("min_ratio".into(), min_margin)],
        ))
    }
}

struct MeanSquareCheck;

impl Check for MeanSquareCheck {
    fn name(&self) -> &'static str {
        "mean-square"
    }

    fn run(&self, ctx: &CheckContext) -> Result<CheckOutcome> {
        let params = KernelParams::new(ctx.params.mu(), 3.0)?;
        let r = mean_square_check(&ctx.f, &ctx.g, &params, ctx.height, 512)?;
        Ok(outcome(
            self.name(),
            true,
            r.lhs >= 0.0,
            format!("{} vs {}: lhs={:.6e} rhs={:.6e}", ctx.f.name(), ctx.g.name(), r.lhs, r.rhs),
            vec![("ratio".into(), r.ratio)],
        ))
    }
}

struct LemmaTwoCheck;

impl Check for LemmaTwoCheck {
    fn name(&self) -> &'static str {
        "lemma2"
    }

    fn run(&self, ctx: &CheckContext) -> Result<CheckOutcome> {
        let r = lemma_two_check(&ctx.f, &ctx.g, &ctx.params, ctx.height, 2, ctx.tol.max(1e-6))?;
        Ok(outcome(
            self.name(),
            false,
            r.ratio.is_finite(),
            format!("|integral|={:.6e} bound={:.6e}", r.integral.norm(), r.bound),
            vec![("ratio".into(), r.ratio)],
        ))
    }
}

struct ThinSetCheck;

impl Check for ThinSetCheck {
    fn name(&self) -> &'static str {
        "thin-set"
    }

    fn run(&self, ctx: &CheckContext) -> Result<CheckOutcome> {
        let diff = CoeffDifference::between(&ctx.f, &ctx.g, 0.1)?;
        let top = diff.horizon() as f64;
        let grid: Vec<f64> = [10.0, 100.0, 1000.0, 10_000.0].into_iter().filter(|&x| x <= top).collect();
        let k = thin_set_density_check(diff.thin_set(), diff.delta(), &grid)?;
        let note = if k > 1.0 { " (not thin at this scale)" } else { "" };
        Ok(outcome(
            self.name(),
            false,
            true,
            format!("|E ∩ [1, {top}]| = {}, max ratio {k:.4}{note}", diff.thin_set().iter().filter(|&&p| p as f64 <= top).count()),
            vec![("max_ratio".into(), k)],
        ))
    }
}

/// All registered checks in their default order.
pub fn registry() -> Vec<Box<dyn Check>> {
    vec![
        Box::new(ScheduleCheck),
        Box::new(LemmaOne),
        Box::new(TailIntegralCheck),
        Box::new(GLowerBoundCheck),
        Box::new(MeanSquareCheck),
        Box::new(LemmaTwoCheck),
        Box::new(ThinSetCheck),
    ]
}

pub fn check_names() -> Vec<&'static str> {
    registry().iter().map(|c| c.name()).collect()
}

/// Checks selected by name; unknown names are a domain error.
pub fn select(names: &[String]) -> Result<Vec<Box<dyn Check>>> {
    if names.is_empty() {
        return Ok(registry());
    }
    let mut all = registry();
    let mut out = Vec::new();
    for n in names {
        let i = all.iter().position(|c| c.name() == n).ok_or_else(|| {
            crate::Error::Domain(format!("unknown check `{n}`; known: {}", check_names().join(", ")))
        })?;
        out.push(all.remove(i));
    }
    Ok(out)
}
