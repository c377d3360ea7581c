use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use selberg_core::explicit::{self, ExplicitFormulaReport};
use selberg_core::kernels::selftest::run_selftest;
use selberg_core::kernels::KernelParams;
use selberg_core::lfunc::{load_datum, Condition, SelbergDatum};
use selberg_core::verify::{schedule, select, CheckContext};
use selberg_core::zeros::{
    count_zeros, counting_fit, data_dir, load_zeros_auto, symmetric_difference, CountingLaw, ZeroList,
    DEFAULT_MATCH_TOL,
};
use selberg_core::Error;

use crate::config::{Command, Format, RunConfig};
use crate::CliError;

const DEFAULT_HORIZON: u64 = 10_000;

/// Runs the selected command. `Ok(false)` means a hard assertion failed.
pub fn run(cfg: &RunConfig) -> Result<bool, CliError> {
    let (passed, text) = match cfg.command {
        Command::KernelSelftest => kernel_selftest(cfg)?,
        Command::Explicit => explicit_cmd(cfg)?,
        Command::Verify => verify_cmd(cfg)?,
        Command::ZerosCount => zeros_count(cfg)?,
        Command::ZerosDiff => zeros_diff(cfg)?,
        Command::Schedule => schedule_cmd(cfg)?,
    };
    emit(cfg, &text)?;
    Ok(passed)
}

/// Remediation advice for errors caused by data that does not reach far enough.
pub fn hint(e: &CliError) -> Option<String> {
    match e {
        CliError::Core(Error::Incomplete(_)) => Some(
            "builtin L-functions need --horizon ≥ ⌊e^L⌋ for the prime sum at scale L; \
             zero tables must be complete to the requested height (see the `# complete_to:` header)"
                .into(),
        ),
        _ => None,
    }
}

fn emit(cfg: &RunConfig, text: &str) -> Result<(), CliError> {
    match &cfg.out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| CliError::Usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn mode(cfg: &RunConfig) -> Result<Condition, CliError> {
    Ok(cfg.mode.as_deref().unwrap_or("ii").parse::<Condition>()?)
}

/// Loads `builtin:NAME`, a bare builtin name, or a spec file.
fn load_lfunction(spec: &str, horizon: u64) -> Result<SelbergDatum, CliError> {
    if let Some(name) = spec.strip_prefix("builtin:") {
        return Ok(SelbergDatum::builtin(name, horizon)?);
    }
    let path = Path::new(spec);
    if path.exists() {
        return Ok(load_datum(path)?);
    }
    SelbergDatum::builtin(spec, horizon)
        .map_err(|_| CliError::Usage(format!("L-function `{spec}` is neither an existing file nor a builtin")))
}

/// Horizon for builtins: the flag, else enough for the prime sum at scale L.
fn builtin_horizon(cfg: &RunConfig, scale: f64) -> u64 {
    cfg.horizon
        .unwrap_or_else(|| DEFAULT_HORIZON.max(scale.exp().min(1e8).floor() as u64))
}

fn lfunctions(cfg: &RunConfig, defaults: &[&str], scale: f64) -> Result<Vec<SelbergDatum>, CliError> {
    let horizon = builtin_horizon(cfg, scale);
    let specs: Vec<String> = if cfg.lfunctions.is_empty() {
        defaults.iter().map(|s| s.to_string()).collect()
    } else {
        cfg.lfunctions.clone()
    };
    specs.iter().map(|s| load_lfunction(s, horizon)).collect()
}

fn default_zero_file(datum: &SelbergDatum) -> Option<&'static str> {
    match datum.name() {
        "zeta" => Some("zeta_zeros_1000.txt"),
        "dirichlet:4:1" => Some("chi4_zeros_200.txt"),
        _ => None,
    }
}

fn resolve_zero_path(name: &str) -> Result<PathBuf, CliError> {
    let direct = PathBuf::from(name);
    if direct.exists() {
        return Ok(direct);
    }
    let bundled = data_dir().join(name);
    if bundled.exists() {
        return Ok(bundled);
    }
    Err(CliError::Core(Error::Io(std::io::Error::new(
        std::io::ErrorKind::NotFound,
        format!("zero table `{name}` not found (also looked in {})", data_dir().display()),
    ))))
}

fn load_table(name: &str) -> Result<ZeroList, CliError> {
    Ok(load_zeros_auto(resolve_zero_path(name)?)?)
}

/// Zero table `i`: from --zeros if given, else the bundled table for datum `i`.
fn zero_table(cfg: &RunConfig, i: usize, datum: Option<&SelbergDatum>) -> Result<ZeroList, CliError> {
    if let Some(name) = cfg.zeros.get(i) {
        return load_table(name);
    }
    match datum {
        Some(d) => match default_zero_file(d) {
            Some(name) => load_table(name),
            None if d.name() == "one" => Ok(ZeroList::empty(f64::INFINITY)),
            None => Err(CliError::Usage(format!("no bundled zero table for `{}`; pass --zeros", d.name()))),
        },
        None => Err(CliError::Usage(format!("zero table #{} required; pass --zeros", i + 1))),
    }
}

fn kernel_selftest(cfg: &RunConfig) -> Result<(bool, String), CliError> {
    let mus = match cfg.mu {
        Some(mu) => {
            KernelParams::new(mu, 1.0)?;
            vec![mu]
        }
        None => vec![3.0, 5.5, 10.0],
    };
    let rows = run_selftest(&mus, cfg.tol)?;
    let mut out = String::new();
    match cfg.format {
        Format::Csv => {
            out.push_str("check,mu,measured,threshold,passed\n");
            for r in &rows {
                let _ = writeln!(out, "{},{},{:e},{:e},{}", r.check, r.mu, r.measured, r.threshold, r.passed);
            }
        }
        Format::Text => {
            let _ = writeln!(out, "{:<14} {:>6} {:>12} {:>12}  status", "check", "mu", "measured", "threshold");
            for r in &rows {
                let status = if r.passed { "pass" } else { "FAIL" };
                let _ = writeln!(out, "{:<14} {:>6} {:>12.3e} {:>12.3e}  {status}", r.check, r.mu, r.measured, r.threshold);
            }
        }
    }
    if let Some(r) = rows.iter().find(|r| !r.passed) {
        eprintln!(
            "first violated check: {} at mu = {} (measured {:e} > threshold {:e})",
            r.check, r.mu, r.measured, r.threshold
        );
        return Ok((false, out));
    }
    Ok((true, out))
}

fn explicit_cmd(cfg: &RunConfig) -> Result<(bool, String), CliError> {
    let scale = cfg.scale.unwrap_or(4.0);
    let params = KernelParams::new(cfg.mu.unwrap_or(3.0), scale)?;
    let tol = cfg.tol.unwrap_or(1e-8);
    let grid = cfg.t_values(30.0);
    let data = lfunctions(cfg, &["builtin:zeta"], scale)?;
    let run_one = |i: usize| -> Result<Vec<ExplicitFormulaReport>, CliError> {
        let zeros = zero_table(cfg, i, Some(&data[i]))?;
        let law = CountingLaw::for_table(&zeros, data[i].degree());
        Ok(explicit::sweep(&data[i], &zeros, &law, &params, &grid, tol)?)
    };
    let mut reports = run_one(0)?;
    if data.len() > 1 {
        let other = run_one(1)?;
        reports = reports.iter().zip(&other).map(|(a, b)| a.difference(b)).collect();
    }
    let text = match cfg.format {
        Format::Csv => explicit::to_csv(&reports),
        Format::Text => explicit::to_text(&reports),
    };
    Ok((true, text))
}

fn verify_cmd(cfg: &RunConfig) -> Result<(bool, String), CliError> {
    let scale = cfg.scale.unwrap_or(5.0);
    let params = KernelParams::new(cfg.mu.unwrap_or(4.0), scale)?;
    let mut data = lfunctions(cfg, &["builtin:zeta", "builtin:dirichlet:4:1"], scale)?;
    if data.len() < 2 {
        data.push(data[0].clone());
    }
    let checks = select(&cfg.checks)?;
    let g = data.pop().expect("two data");
    let f = data.pop().expect("two data");
    let ctx = CheckContext {
        f,
        g,
        params,
        height: cfg.height.unwrap_or(100.0),
        w: cfg.w.unwrap_or(2.0),
        mode: mode(cfg)?,
        tol: cfg.tol.unwrap_or(1e-8),
    };
    let mut out = String::new();
    if cfg.format == Format::Csv {
        out.push_str("check,hard,passed,constant,value\n");
    }
    let mut all_hard_pass = true;
    for check in checks {
        let o = check.run(&ctx)?;
        if o.hard && !o.passed {
            all_hard_pass = false;
        }
        match cfg.format {
            Format::Csv => {
                if o.constants.is_empty() {
                    let _ = writeln!(out, "{},{},{},,", o.name, o.hard, o.passed);
                }
                for (k, v) in &o.constants {
                    let _ = writeln!(out, "{},{},{},{},{:e}", o.name, o.hard, o.passed, k, v);
                }
            }
            Format::Text => {
                let tag = match (o.hard, o.passed) {
                    (true, true) => "PASS",
                    (true, false) => "FAIL",
                    (false, _) => "info",
                };
                let _ = writeln!(out, "[{tag}] {}: {}", o.name, o.summary);
                for (k, v) in &o.constants {
                    let _ = writeln!(out, "       {k} = {v:.6e}");
                }
            }
        }
    }
    Ok((all_hard_pass, out))
}

fn zeros_count(cfg: &RunConfig) -> Result<(bool, String), CliError> {
    let zeros = match cfg.zeros.first() {
        Some(name) => load_table(name)?,
        None => load_table("zeta_zeros_1000.txt")?,
    };
    let heights = match (&cfg.t_grid, cfg.height) {
        (Some(g), _) => g.clone(),
        (None, Some(t)) => vec![t],
        (None, None) => vec![15.0, 50.0, 100.0],
    };
    let degree = cfg.degree.unwrap_or(1.0);
    let counts = heights.iter().map(|&t| count_zeros(&zeros, t)).collect::<Result<Vec<_>, _>>()?;
    let fit = if heights.len() >= 3 { Some(counting_fit(&zeros, degree, &heights)?) } else { None };
    let mut out = String::new();
    match cfg.format {
        Format::Csv => {
            out.push_str("T,count\n");
            for (t, n) in heights.iter().zip(&counts) {
                let _ = writeln!(out, "{t},{n}");
            }
            if let Some(f) = fit {
                let _ = writeln!(out, "# c_fit,{:e}\n# max_residual,{:e}", f.c_fit, f.max_residual);
            }
        }
        Format::Text => {
            let _ = writeln!(out, "table: {} (complete to {})", zeros.source(), zeros.complete_to());
            for (t, n) in heights.iter().zip(&counts) {
                let _ = writeln!(out, "N({t}) = {n}");
            }
            if let Some(f) = fit {
                let _ = writeln!(out, "fit with degree {degree}: C = {:.6}, max |residual|/log T = {:.4}", f.c_fit, f.max_residual);
            }
        }
    }
    Ok((true, out))
}

fn zeros_diff(cfg: &RunConfig) -> Result<(bool, String), CliError> {
    let (zf, zg) = match cfg.zeros.as_slice() {
        [a, b, ..] => (load_table(a)?, load_table(b)?),
        [a] => (load_table(a)?, load_table(a)?),
        [] => {
            let data = lfunctions(cfg, &["builtin:zeta", "builtin:dirichlet:4:1"], 0.0)?;
            let f = zero_table(cfg, 0, data.first())?;
            let g = zero_table(cfg, 1, data.get(1).or(data.first()))?;
            (f, g)
        }
    };
    let height = cfg.height.unwrap_or_else(|| zf.complete_to().min(zg.complete_to()));
    let d = symmetric_difference(&zf, &zg, height, cfg.match_tol.unwrap_or(DEFAULT_MATCH_TOL))?;
    let mut out = String::new();
    match cfg.format {
        Format::Csv => {
            out.push_str("side,gamma\n");
            for g in d.only_f.ordinates() {
                let _ = writeln!(out, "F,{g}");
            }
            for g in d.only_g.ordinates() {
                let _ = writeln!(out, "G,{g}");
            }
        }
        Format::Text => {
            let _ = writeln!(out, "height {height}, match tolerance {:e}", d.match_tol);
            let _ = writeln!(out, "only in F: {}", d.only_f.len());
            let _ = writeln!(out, "only in G: {}", d.only_g.len());
            let _ = writeln!(out, "|difference| / (T log T) = {:.6e}", d.condition_ratio());
        }
    }
    Ok((true, out))
}

fn schedule_cmd(cfg: &RunConfig) -> Result<(bool, String), CliError> {
    let height = cfg.height.ok_or_else(|| CliError::Usage("schedule needs --T".into()))?;
    let s = schedule(height, cfg.w.unwrap_or(10.0), mode(cfg)?)?;
    let mut out = String::new();
    match cfg.format {
        Format::Csv => {
            out.push_str("T,W,mode,rho,eps,L,mu,valid\n");
            let _ = writeln!(out, "{:e},{},{},{},{},{},{},{}", s.height, s.w, s.mode, s.rho, s.eps, s.scale, s.mu, s.is_valid());
        }
        Format::Text => {
            let _ = writeln!(out, "T = {:e}, W = {}, mode {}", s.height, s.w, s.mode);
            let _ = writeln!(out, "rho = {:.6}\neps = {}\nL = {:.6}\nmu = {:.6}", s.rho, s.eps, s.scale, s.mu);
            let _ = writeln!(out, "L/(W rho) = {} (2 mu = {})", s.scale / (s.w * s.rho), 2.0 * s.mu);
            if !s.is_valid() {
                let _ = writeln!(out, "note: mu < 3, kernel not admissible at this height");
            }
        }
    }
    Ok((true, out))
}
