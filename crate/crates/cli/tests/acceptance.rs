//! Runs every acceptance criterion and prints one PASS/FAIL line for each.

use std::process::Command;
use std::time::Instant;

use selberg_core::explicit::{shifted_explicit_formula, sweep};
use selberg_core::kernels::selftest::{asymp_violations, fourier_pair_error, normalization_error, peak_violations};
use selberg_core::kernels::{g, KernelParams};
use selberg_core::lfunc::{
    dirichlet_from_euler, local_log, prime_square_relation_check, CoeffDifference, Condition, DirichletCharacter,
    SelbergDatum,
};
use selberg_core::verify::{mean_square_check, schedule, tail_integral_check};
use selberg_core::zeros::{count_zeros, counting_fit, load_fixture, symmetric_difference, CountingLaw};

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn kp(mu: f64, l: f64) -> KernelParams {
    KernelParams::new(mu, l).unwrap()
}

fn fourier_pair() -> Outcome {
    let start = Instant::now();
    let mut worst = 0f64;
    for mu in [3.0, 5.5, 10.0] {
        worst = worst.max(fourier_pair_error(&kp(mu, 1.0), 201, 50.0));
    }
    let secs = start.elapsed().as_secs_f64();
    ensure(worst < 1e-8, || format!("max error {worst:e}"))?;
    ensure(secs < 10.0, || format!("took {secs:.1} s"))?;
    Ok(format!("max error {worst:.2e}, {secs:.2} s"))
}

fn normalization() -> Outcome {
    let mut worst = (0f64, 0f64);
    for mu in [3.0, 5.5, 10.0] {
        let (i, h0) = normalization_error(&kp(mu, 1.0));
        worst = (worst.0.max(i), worst.1.max(h0));
    }
    ensure(worst.0 < 1e-10 && worst.1 < 1e-12, || format!("errors {worst:?}"))?;
    Ok(format!("integral error {:.2e}, h(0) error {:.2e}", worst.0, worst.1))
}

fn asymp_bound() -> Outcome {
    let mut total = 0;
    let mut worst = 0f64;
    for mu in [3.0, 6.0, 10.0] {
        let (n, r) = asymp_violations(&kp(mu, 1.0), 1000, 0.1, 1e3);
        total += n;
        worst = worst.max(r);
    }
    ensure(total == 0, || format!("{total} violations"))?;
    Ok(format!("0 violations, worst |h|t^mu/C = {worst:.4}"))
}

fn peak() -> Outcome {
    let mut detail = Vec::new();
    for mu in [10.0, 20.0, 50.0] {
        let p = kp(mu, 1.0);
        let v = peak_violations(&p, 1000);
        ensure(v == 0, || format!("mu={mu}: {v} samples above g(0)"))?;
        let dev = (g(&p, 0.0) * std::f64::consts::PI.sqrt() - 1.0).abs();
        ensure(dev <= 0.25 / mu, || format!("mu={mu}: |g(0)√π - 1| = {dev:e}"))?;
        detail.push(format!("mu={mu}: {:.3}·(1/4mu)", dev * 4.0 * mu));
    }
    Ok(detail.join(", "))
}

fn explicit_residual() -> Outcome {
    let start = Instant::now();
    let zeta = SelbergDatum::zeta(10_000).unwrap();
    let full = load_fixture("zeta_zeros_1000.txt").map_err(|e| e.to_string())?;
    let p = kp(3.0, 4.0);
    let grid = [20.0, 30.0, 50.0, 80.0];
    let mut previous: Option<Vec<f64>> = None;
    let mut last = Vec::new();
    for height in [60.0, 120.0, 250.0, 500.0, 1000.0] {
        let z = full.truncated(height);
        let law = CountingLaw::for_table(&z, 1.0);
        let reports = sweep(&zeta, &z, &law, &p, &grid, 1e-8).map_err(|e| e.to_string())?;
        let res: Vec<f64> = reports.iter().map(|r| r.residual.abs()).collect();
        if let Some(prev) = &previous {
            for ((r, before), rep) in res.iter().zip(prev).zip(&reports) {
                ensure(*r <= before + rep.budget, || {
                    format!("t={}: residual grew from {before:e} to {r:e} at height {height}", rep.t)
                })?;
            }
        }
        previous = Some(res);
        last = reports;
    }
    for r in &last {
        ensure(r.within_budget() && r.budget < 1e-2, || {
            format!("t={}: residual {:e}, budget {:e}", r.t, r.residual, r.budget)
        })?;
    }
    let secs = start.elapsed().as_secs_f64();
    ensure(secs < 60.0, || format!("took {secs:.1} s"))?;
    let worst = last.iter().map(|r| r.residual.abs()).fold(0.0, f64::max);
    let budget = last.iter().map(|r| r.budget).fold(0.0, f64::max);
    Ok(format!("max |residual| {worst:.2e} ≤ budget {budget:.2e}, monotone over 5 heights, {secs:.1} s"))
}

fn zero_counting() -> Outcome {
    const RECORDED: f64 = 1.0;
    let z = load_fixture("zeta_zeros_1000.txt").map_err(|e| e.to_string())?;
    let n15 = count_zeros(&z, 15.0).map_err(|e| e.to_string())?;
    let n50 = count_zeros(&z, 50.0).map_err(|e| e.to_string())?;
    ensure(n15 == 2 && n50 == 20, || format!("N(15) = {n15}, N(50) = {n50}"))?;
    let fit = counting_fit(&z, 1.0, &[30.0, 50.0, 80.0, 100.0]).map_err(|e| e.to_string())?;
    ensure(fit.max_residual <= RECORDED, || format!("residual/log T = {}", fit.max_residual))?;
    Ok(format!("N(15)=2, N(50)=20, C={:.4}, residual/log T={:.3} ≤ {RECORDED}", fit.c_fit, fit.max_residual))
}

fn euler_roundtrip() -> Outcome {
    let mut worst = 0f64;
    let chi = DirichletCharacter::new(4, 1).unwrap();
    for (datum, exact) in [
        (SelbergDatum::zeta(100).unwrap(), Box::new(|_| 1.0) as Box<dyn Fn(u64) -> f64>),
        (SelbergDatum::dirichlet(4, 1, 100).unwrap(), Box::new(|m| chi.value(m).re)),
    ] {
        let a = dirichlet_from_euler(&datum, 100).map_err(|e| e.to_string())?;
        for m in 1..=100u64 {
            worst = worst.max((a[m as usize].re - exact(m)).abs() + a[m as usize].im.abs());
        }
        for p in datum.primes() {
            let k = datum.local_b(p).len();
            let powers: Vec<_> = (0..=k).map(|j| a[p.pow(j as u32) as usize]).collect();
            for (j, b) in local_log(&powers).iter().enumerate() {
                worst = worst.max((b - datum.b_at(p, j as u32 + 1).unwrap()).norm());
            }
        }
    }
    ensure(worst < 1e-12, || format!("roundtrip error {worst:e}"))?;
    let r = prime_square_relation_check(&SelbergDatum::zeta(100).unwrap(), 2).map_err(|e| e.to_string())?;
    ensure(r.newton_matches && (r.half_product_form.re - 0.5).abs() < 1e-15, || format!("{r:?}"))?;
    Ok(format!(
        "roundtrip error {worst:.1e}; b(4): stored {}, inline formula {}",
        r.stored_b.re, r.half_product_form.re
    ))
}

fn tail_integral() -> Outcome {
    const RECORDED: f64 = 2.5;
    let mut ratios = Vec::new();
    for mu in [3.0, 4.0, 6.0, 10.0, 15.0] {
        let t = tail_integral_check(&kp(mu, 1.0), 2.0 * mu).map_err(|e| e.to_string())?;
        ensure(t.numeric <= t.bound, || format!("mu={mu}: {} > {}", t.numeric, t.bound))?;
        ensure(t.ratio_exp <= RECORDED, || format!("mu={mu}: ratio {}", t.ratio_exp))?;
        ratios.push(format!("{:.2}", t.ratio_exp));
    }
    Ok(format!("numeric ≤ majorant, numeric·e^mu = [{}] ≤ {RECORDED}", ratios.join(", ")))
}

fn schedule_arithmetic() -> Outcome {
    let s = schedule(100f64.exp(), 10.0, Condition::PrimeSquareMean).map_err(|e| e.to_string())?;
    let sig6 = |x: f64, want: f64| ((x - want) / want).abs() < 5e-6;
    ensure(
        sig6(s.rho, 100.0) && sig6(s.scale, 46_051.7) && sig6(s.mu, 23.0259) && sig6(s.eps, 0.005),
        || format!("{s:?}"),
    )?;
    ensure(s.scale / (s.w * s.rho) == 2.0 * s.mu, || "L/(W rho) ≠ 2 mu".into())?;
    Ok(format!("rho={}, L={:.2}, mu={:.4}, eps={}; L/(W rho) = 2 mu exactly", s.rho, s.scale, s.mu, s.eps))
}

fn degeneracy() -> Outcome {
    for (name, table) in [("zeta", "zeta_zeros_1000.txt"), ("dirichlet:4:1", "chi4_zeros_200.txt")] {
        let f = SelbergDatum::builtin(name, 10_000).unwrap();
        let diff = CoeffDifference::between(&f, &f, 0.1).map_err(|e| e.to_string())?;
        ensure(diff.is_zero(), || format!("{name}: c(m) nonzero"))?;
        let ms = mean_square_check(&f, &f, &kp(4.0, 3.0), 50.0, 128).map_err(|e| e.to_string())?;
        ensure(ms.lhs == 0.0, || format!("{name}: mean-square lhs {}", ms.lhs))?;
        let z = load_fixture(table).map_err(|e| e.to_string())?;
        let d = symmetric_difference(&z, &z, z.complete_to(), 1e-9).map_err(|e| e.to_string())?;
        ensure(d.is_empty(), || format!("{name}: zero difference not empty"))?;
        let law = CountingLaw::for_table(&z, 1.0);
        let r = shifted_explicit_formula(&f, &z, &law, &kp(3.0, 4.0), 30.0, 1e-8).map_err(|e| e.to_string())?;
        let dr = r.difference(&r);
        ensure(
            [dr.zero_side, dr.pole_term, dr.arch_term_h, dr.prime_term_d, dr.residual].iter().all(|&v| v == 0.0),
            || format!("{name}: differenced report nonzero"),
        )?;
    }
    Ok("zeta and chi_-4: c = 0, lhs = 0, empty zero difference, zero differenced report".into())
}

fn determinism() -> Outcome {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_selberg"))
            .args(["explicit", "--t-grid", "20:80:7", "--L", "4", "--mu", "3", "--format", "csv"])
            .output()
            .map_err(|e| e.to_string())
    };
    let (a, b) = (run()?, run()?);
    ensure(a.status.success() && b.status.success(), || String::from_utf8_lossy(&a.stderr).into_owned())?;
    ensure(a.stdout == b.stdout, || "outputs differ".into())?;
    Ok(format!("{} identical bytes, {} rows", a.stdout.len(), a.stdout.split(|&c| c == b'\n').count() - 2))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 11] = [
        ("fourier-pair", fourier_pair),
        ("normalization", normalization),
        ("asymptotic bound", asymp_bound),
        ("peak property", peak),
        ("explicit-formula residual", explicit_residual),
        ("zero counting", zero_counting),
        ("euler/dirichlet roundtrip", euler_roundtrip),
        ("tail integral", tail_integral),
        ("schedule arithmetic", schedule_arithmetic),
        ("F = G degeneracy", degeneracy),
        ("determinism", determinism),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
