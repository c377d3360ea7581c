//! Command-line flags, the optional TOML config file, and their merge.

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Deserialize;

use crate::CliError;

#[derive(Debug, Parser)]
#[command(name = "selberg", version, about = "Explicit-formula and kernel checks for Selberg-class L-functions")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub flags: Flags,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Fourier-pair, normalization, asymptotic-bound and peak checks of the kernel.
    KernelSelftest,
    /// Terms and residual of the shifted explicit formula on a t-grid.
    Explicit,
    /// Parameter schedule and lemma checks; exit status reflects hard assertions only.
    Verify,
    /// Count zeros up to one or more heights and fit the counting law.
    ZerosCount,
    /// Symmetric difference of two zero tables.
    ZerosDiff,
    /// Print the parameter schedule for (T, W, mode).
    Schedule,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Text,
    Csv,
}

#[derive(Debug, Clone, Default, Args)]
pub struct Flags {
    /// TOML file with default values for any of the options below.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// L-function: spec file path or builtin:NAME (zeta, one, dirichlet:q:i). Repeat for G.
    #[arg(long, global = true)]
    pub lfunction: Vec<String>,
    /// Zero table path, or a file name under the data directory. Repeatable.
    #[arg(long, global = true)]
    pub zeros: Vec<String>,
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub t: Option<f64>,
    /// Grid as start:stop:count or a comma-separated list.
    #[arg(long = "t-grid", global = true, allow_hyphen_values = true)]
    pub t_grid: Option<String>,
    #[arg(long = "L", global = true)]
    pub scale: Option<f64>,
    #[arg(long, global = true)]
    pub mu: Option<f64>,
    /// Height T; accepts e^X for large heights.
    #[arg(long = "T", global = true)]
    pub height: Option<String>,
    #[arg(long = "W", global = true)]
    pub w: Option<f64>,
    /// Condition in force: i or ii.
    #[arg(long, global = true)]
    pub mode: Option<String>,
    #[arg(long, global = true)]
    pub tol: Option<f64>,
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Comma-separated subset of verify checks.
    #[arg(long, global = true, value_delimiter = ',')]
    pub checks: Vec<String>,
    /// Coefficient horizon for builtin L-functions.
    #[arg(long, global = true)]
    pub horizon: Option<u64>,
    #[arg(long = "match-tol", global = true)]
    pub match_tol: Option<f64>,
    /// Degree used by the counting fit.
    #[arg(long, global = true)]
    pub degree: Option<f64>,
}

/// Same options as [`Flags`], read from a TOML file.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    #[serde(default)]
    lfunction: Vec<String>,
    #[serde(default)]
    zeros: Vec<String>,
    t: Option<f64>,
    t_grid: Option<String>,
    #[serde(rename = "L")]
    scale: Option<f64>,
    mu: Option<f64>,
    #[serde(rename = "T")]
    height: Option<toml::Value>,
    #[serde(rename = "W")]
    w: Option<f64>,
    mode: Option<String>,
    tol: Option<f64>,
    out: Option<PathBuf>,
    format: Option<Format>,
    #[serde(default)]
    checks: Vec<String>,
    horizon: Option<u64>,
    match_tol: Option<f64>,
    degree: Option<f64>,
}

impl FileConfig {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("cannot read config {}: {e}", path.display())))?;
        toml::from_str(&text).map_err(|e| CliError::Usage(format!("config {}: {e}", path.display())))
    }
}

/// Fully merged options: flags override the config file.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub command: Command,
    pub lfunctions: Vec<String>,
    pub zeros: Vec<String>,
    pub t: Option<f64>,
    pub t_grid: Option<Vec<f64>>,
    pub scale: Option<f64>,
    pub mu: Option<f64>,
    pub height: Option<f64>,
    pub w: Option<f64>,
    pub mode: Option<String>,
    pub tol: Option<f64>,
    pub out: Option<PathBuf>,
    pub format: Format,
    pub checks: Vec<String>,
    pub horizon: Option<u64>,
    pub match_tol: Option<f64>,
    pub degree: Option<f64>,
}

impl RunConfig {
    pub fn resolve(command: Command, flags: Flags) -> Result<Self, CliError> {
        let file = match &flags.config {
            Some(p) => FileConfig::load(p)?,
            None => FileConfig::default(),
        };
        let pick_vec = |a: Vec<String>, b: Vec<String>| if a.is_empty() { b } else { a };
        let height = match flags.height {
            Some(s) => Some(parse_height(&s)?),
            None => match file.height {
                Some(toml::Value::Float(x)) => Some(x),
                Some(toml::Value::Integer(n)) => Some(n as f64),
                Some(toml::Value::String(s)) => Some(parse_height(&s)?),
                Some(other) => return Err(CliError::Usage(format!("config: T must be a number, got {other}"))),
                None => None,
            },
        };
        let grid_text = flags.t_grid.or(file.t_grid);
        let cfg = Self {
            command,
            lfunctions: pick_vec(flags.lfunction, file.lfunction),
            zeros: pick_vec(flags.zeros, file.zeros),
            t: flags.t.or(file.t),
            t_grid: grid_text.as_deref().map(parse_grid).transpose()?,
            scale: flags.scale.or(file.scale),
            mu: flags.mu.or(file.mu),
            height,
            w: flags.w.or(file.w),
            mode: flags.mode.or(file.mode),
            tol: flags.tol.or(file.tol),
            out: flags.out.or(file.out),
            format: flags.format.or(file.format).unwrap_or_default(),
            checks: pick_vec(flags.checks, file.checks),
            horizon: flags.horizon.or(file.horizon),
            match_tol: flags.match_tol.or(file.match_tol),
            degree: flags.degree.or(file.degree),
        };
        cfg.validate()?;
        Ok(cfg)
    }

    fn validate(&self) -> Result<(), CliError> {
        for (name, v) in [("--tol", self.tol), ("--match-tol", self.match_tol)] {
            if let Some(v) = v {
                if !(v > 0.0) {
                    return Err(CliError::Usage(format!("{name} must be > 0, got {v}")));
                }
            }
        }
        Ok(())
    }

    /// t values to evaluate: the grid, else the single t, else `default`.
    pub fn t_values(&self, default: f64) -> Vec<f64> {
        match (&self.t_grid, self.t) {
            (Some(g), _) => g.clone(),
            (None, Some(t)) => vec![t],
            (None, None) => vec![default],
        }
    }
}

/// Accepts plain numbers and e^X / exp(X).
pub fn parse_height(s: &str) -> Result<f64, CliError> {
    let s = s.trim();
    let exponent = s
        .strip_prefix("e^")
        .or_else(|| s.strip_prefix("exp(").and_then(|r| r.strip_suffix(')')));
    let value = match exponent {
        Some(x) => x.trim().parse::<f64>().map(f64::exp),
        None => s.parse::<f64>(),
    };
    value.map_err(|_| CliError::Usage(format!("cannot parse height `{s}` (use a number or e^X)")))
}

/// `start:stop:count` (inclusive, evenly spaced) or `a,b,c`.
pub fn parse_grid(s: &str) -> Result<Vec<f64>, CliError> {
    let bad = || CliError::Usage(format!("cannot parse grid `{s}` (use start:stop:count or a,b,c)"));
    let parts: Vec<&str> = s.split(':').collect();
    if parts.len() == 3 {
        let a: f64 = parts[0].trim().parse().map_err(|_| bad())?;
        let b: f64 = parts[1].trim().parse().map_err(|_| bad())?;
        let n: usize = parts[2].trim().parse().map_err(|_| bad())?;
        if n == 0 {
            return Err(bad());
        }
        if n == 1 {
            return Ok(vec![a]);
        }
        return Ok((0..n).map(|i| a + (b - a) * i as f64 / (n - 1) as f64).collect());
    }
    s.split(',').map(|x| x.trim().parse::<f64>().map_err(|_| bad())).collect()
}
