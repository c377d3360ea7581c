use std::fmt::Write as _;

use num_complex::Complex64;
use rayon::prelude::*;

use super::pair::{check_pair, KernelPair, TestFunctionPair};
use super::terms::{arch_term_with, pole_term, pole_term_with, prime_term_with};
use crate::error::Result;
use crate::kernels::KernelParams;
use crate::lfunc::SelbergDatum;
use crate::zeros::{zero_sum_with, CountingLaw, ZeroList};

/// The terms of the explicit formula at one point, with their error budget.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExplicitFormulaReport {
    pub t: f64,
    pub scale: f64,
    pub mu: f64,
    pub zero_side: f64,
    pub pole_term: f64,
    /// Pole term read as 2 m_F h_μ(L(t + i/2)); only for the shifted kernel.
    pub pole_term_literal: Option<Complex64>,
    pub arch_term_h: f64,
    pub prime_term_d: f64,
    pub residual: f64,
    pub budget: f64,
    /// Part of `budget` from zeros outside the table.
    pub zero_tail: f64,
}

impl ExplicitFormulaReport {
    fn assemble(
        (t, scale, mu): (f64, f64, f64),
        zero_side: f64,
        pole: f64,
        arch: f64,
        prime: f64,
        error_terms: [f64; 3],
        zero_tail: f64,
    ) -> Self {
        let residual = zero_side - pole - arch + prime;
        let magnitude = zero_side.abs() + pole.abs() + arch.abs() + prime.abs();
        let budget = error_terms.iter().sum::<f64>() + 64.0 * f64::EPSILON * magnitude;
        Self {
            t,
            scale,
            mu,
            zero_side,
            pole_term: pole,
            pole_term_literal: None,
            arch_term_h: arch,
            prime_term_d: prime,
            residual,
            budget,
            zero_tail,
        }
    }

    /// zero_side - pole_term - arch_term_h + prime_term_d, recomputed.
    pub fn recomputed_residual(&self) -> f64 {
        self.zero_side - self.pole_term - self.arch_term_h + self.prime_term_d
    }

    pub fn within_budget(&self) -> bool {
        self.residual.abs() <= self.budget
    }

    /// Term-by-term difference self - other (F minus G); budgets add.
    pub fn difference(&self, other: &Self) -> Self {
        let zero_side = self.zero_side - other.zero_side;
        let pole = self.pole_term - other.pole_term;
        let arch = self.arch_term_h - other.arch_term_h;
        let prime = self.prime_term_d - other.prime_term_d;
        Self {
            zero_side,
            pole_term: pole,
            pole_term_literal: match (self.pole_term_literal, other.pole_term_literal) {
                (Some(a), Some(b)) => Some(a - b),
                _ => None,
            },
            arch_term_h: arch,
            prime_term_d: prime,
            residual: zero_side - pole - arch + prime,
            budget: self.budget + other.budget,
            zero_tail: self.zero_tail + other.zero_tail,
            ..*self
        }
    }
}

/// Explicit formula for v(r) = h_μ(L(r - t)).
pub fn shifted_explicit_formula(
    datum: &SelbergDatum,
    zeros: &ZeroList,
    law: &CountingLaw,
    params: &KernelParams,
    t: f64,
    tol: f64,
) -> Result<ExplicitFormulaReport> {
    let pair = KernelPair { params: *params, t };
    let mut report = evaluate(datum, zeros, law, &pair, tol, (t, params.scale(), params.mu()))?;
    let pole = pole_term(datum, params, t)?;
    report.pole_term_literal = Some(pole.literal);
    Ok(report)
}

/// Explicit formula for an arbitrary registered pair; checks the pair's contract first.
pub fn general_explicit_formula(
    datum: &SelbergDatum,
    zeros: &ZeroList,
    law: &CountingLaw,
    pair: &dyn TestFunctionPair,
    tol: f64,
) -> Result<ExplicitFormulaReport> {
    check_pair(pair)?;
    evaluate(datum, zeros, law, pair, tol, (pair.center(), f64::NAN, f64::NAN))
}

fn evaluate(
    datum: &SelbergDatum,
    zeros: &ZeroList,
    law: &CountingLaw,
    pair: &dyn TestFunctionPair,
    tol: f64,
    echo: (f64, f64, f64),
) -> Result<ExplicitFormulaReport> {
    let prime = prime_term_with(datum, pair)?;
    let pole = pole_term_with(datum, pair)?;
    let arch = arch_term_with(datum, pair, tol)?;
    let zs = zero_sum_with(zeros, pair.center(), &pair.decay(), tol, law, |g| pair.v_real(g));
    Ok(ExplicitFormulaReport::assemble(
        echo,
        zs.value,
        pole.value,
        arch.value,
        prime.re,
        [zs.tail_bound, arch.error_bound, pole.error_bound],
        zs.tail_bound,
    ))
}

/// Reports over a grid of t, evaluated in parallel and returned in grid order.
pub fn sweep(
    datum: &SelbergDatum,
    zeros: &ZeroList,
    law: &CountingLaw,
    params: &KernelParams,
    t_grid: &[f64],
    tol: f64,
) -> Result<Vec<ExplicitFormulaReport>> {
    t_grid
        .par_iter()
        .map(|&t| shifted_explicit_formula(datum, zeros, law, params, t, tol))
        .collect()
}

pub const CSV_HEADER: &str = "t,L,mu,zero_side,pole,H,D,residual,budget,pole_literal_re,pole_literal_im,within_budget";

pub fn to_csv(reports: &[ExplicitFormulaReport]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in reports {
        let lit = r.pole_term_literal.unwrap_or_default();
        let _ = writeln!(
            out,
            "{},{},{},{:.15e},{:.15e},{:.15e},{:.15e},{:.6e},{:.6e},{:.15e},{:.15e},{}",
            r.t,
            r.scale,
            r.mu,
            r.zero_side,
            r.pole_term,
            r.arch_term_h,
            r.prime_term_d,
            r.residual,
            r.budget,
            lit.re,
            lit.im,
            r.within_budget()
        );
    }
    out
}

pub fn to_text(reports: &[ExplicitFormulaReport]) -> String {
    let mut out = format!(
        "{:>10} {:>6} {:>6} {:>18} {:>18} {:>18} {:>18} {:>11} {:>11}  ok\n",
        "t", "L", "mu", "zero side", "pole", "H", "D", "residual", "budget"
    );
    for r in reports {
        let _ = writeln!(
            out,
            "{:>10} {:>6} {:>6} {:>18.12} {:>18.12} {:>18.12} {:>18.12} {:>11.3e} {:>11.3e}  {}",
            r.t,
            r.scale,
            r.mu,
            r.zero_side,
            r.pole_term,
            r.arch_term_h,
            r.prime_term_d,
            r.residual,
            r.budget,
            if r.within_budget() { "yes" } else { "NO" }
        );
        if let Some(lit) = r.pole_term_literal {
            if lit.im.abs() > 0.0 {
                let _ = writeln!(out, "{:>10} literal pole reading 2·m·h(L(t+i/2)) = {lit:.12}", "");
            }
        }
    }
    out
}
