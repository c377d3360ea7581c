use std::path::{Path, PathBuf};

use crate::error::{Error, Result};

/// Sorted multiset of zero ordinates γ (zeros at 1/2 + iγ).
#[derive(Debug, Clone, PartialEq)]
pub struct ZeroList {
    ordinates: Vec<f64>,
    complete_to: f64,
    symmetric: bool,
    source: String,
}

impl ZeroList {
    /// Validates sortedness, `complete_to ≥ 0`, and positivity when `symmetric`.
    pub fn new(ordinates: Vec<f64>, complete_to: f64, symmetric: bool, source: impl Into<String>) -> Result<Self> {
        if !(complete_to >= 0.0) {
            return Err(Error::domain(format!("complete_to must be ≥ 0, got {complete_to}")));
        }
        if let Some(i) = ordinates.windows(2).position(|w| !(w[0] <= w[1])) {
            return Err(Error::domain(format!(
                "ordinates not ascending at index {}: {} after {}",
                i + 1,
                ordinates[i + 1],
                ordinates[i]
            )));
        }
        if symmetric {
            if let Some(&g) = ordinates.iter().find(|&&g| !(g > 0.0)) {
                return Err(Error::domain(format!("symmetric list stores only γ > 0, found {g}")));
            }
        }
        Ok(Self { ordinates, complete_to, symmetric, source: source.into() })
    }

    pub fn empty(complete_to: f64) -> Self {
        Self { ordinates: Vec::new(), complete_to: complete_to.max(0.0), symmetric: true, source: String::new() }
    }

    /// Parses plain text: one ordinate per line, `#` starts a comment.
    pub fn parse(text: &str, complete_to: f64, symmetric: bool, source: impl Into<String>) -> Result<Self> {
        let mut ordinates: Vec<f64> = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let g: f64 = line.parse().map_err(|_| Error::Parse {
                line: i + 1,
                msg: format!("not a number: `{line}`"),
            })?;
            if !g.is_finite() {
                return Err(Error::Parse { line: i + 1, msg: format!("non-finite ordinate `{line}`") });
            }
            if let Some(&prev) = ordinates.last() {
                if g < prev {
                    return Err(Error::Parse {
                        line: i + 1,
                        msg: format!("ordinates must be ascending: {g} follows {prev}"),
                    });
                }
            }
            if symmetric && g <= 0.0 {
                return Err(Error::Parse {
                    line: i + 1,
                    msg: format!("symmetric table must hold positive ordinates, got {g}"),
                });
            }
            ordinates.push(g);
        }
        Self::new(ordinates, complete_to, symmetric, source)
    }

    /// Reads `complete_to:` and `symmetric:` from the comment header when present;
    /// otherwise the list is taken as complete to its largest ordinate and symmetric.
    pub fn parse_with_header(text: &str, source: impl Into<String>) -> Result<Self> {
        let mut complete_to = None;
        let mut symmetric = true;
        for line in text.lines().map(str::trim).filter(|l| l.starts_with('#')) {
            let body = line.trim_start_matches('#').trim();
            if let Some(v) = body.strip_prefix("complete_to:") {
                complete_to = v.trim().parse::<f64>().ok();
            } else if let Some(v) = body.strip_prefix("symmetric:") {
                symmetric = v.trim().starts_with("true");
            }
        }
        let list = Self::parse(text, 0.0, symmetric, source)?;
        let complete_to = complete_to.unwrap_or_else(|| list.ordinates.last().map_or(0.0, |g| g.abs()));
        Ok(Self { complete_to, ..list })
    }

    /// The sub-list with |γ| ≤ height, complete to min(height, complete_to).
    pub fn truncated(&self, height: f64) -> Self {
        Self {
            ordinates: self.ordinates.iter().copied().filter(|g| g.abs() <= height).collect(),
            complete_to: self.complete_to.min(height),
            symmetric: self.symmetric,
            source: self.source.clone(),
        }
    }

    /// The same zeros with every ordinate moved by `shift`; the result is not symmetric.
    pub fn shifted(&self, shift: f64) -> Self {
        Self {
            ordinates: self.signed().map(|g| g + shift).collect(),
            complete_to: self.complete_to,
            symmetric: false,
            source: format!("{} shifted by {shift}", self.source),
        }
    }

    pub fn ordinates(&self) -> &[f64] {
        &self.ordinates
    }

    pub fn complete_to(&self) -> f64 {
        self.complete_to
    }

    pub fn symmetric(&self) -> bool {
        self.symmetric
    }

    pub fn source(&self) -> &str {
        &self.source
    }

    pub fn len(&self) -> usize {
        self.ordinates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ordinates.is_empty()
    }

    /// Every zero ordinate, expanding ±γ when symmetric, in ascending order.
    pub fn signed(&self) -> impl Iterator<Item = f64> + '_ {
        let mirrored = self.ordinates.iter().rev().map(|g| -g).filter(move |_| self.symmetric);
        mirrored.chain(self.ordinates.iter().copied())
    }
}

pub fn load_zeros(path: impl AsRef<Path>, complete_to: f64, symmetric: bool) -> Result<ZeroList> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path)?;
    ZeroList::parse(&text, complete_to, symmetric, path.display().to_string())
}

/// Like [`load_zeros`], taking completeness and symmetry from the file header.
pub fn load_zeros_auto(path: impl AsRef<Path>) -> Result<ZeroList> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path)?;
    ZeroList::parse_with_header(&text, path.display().to_string())
}

/// Directory holding the bundled zero tables: `$SELBERG_DATA_DIR` if set,
/// otherwise the `data/` directory shipped with this crate.
pub fn data_dir() -> PathBuf {
    match std::env::var_os("SELBERG_DATA_DIR") {
        Some(dir) => PathBuf::from(dir),
        None => Path::new(env!("CARGO_MANIFEST_DIR")).join("data"),
    }
}

/// Loads a bundled table by file name.
pub fn load_fixture(name: &str) -> Result<ZeroList> {
    load_zeros_auto(data_dir().join(name))
}

/// #{γ : |γ| ≤ T}, counting ±γ when symmetric.
pub fn count_zeros(z: &ZeroList, t: f64) -> Result<usize> {
    if t > z.complete_to {
        return Err(Error::incomplete(format!(
            "counting to T = {t} needs zeros complete to T, table is complete to {}",
            z.complete_to
        )));
    }
    let n = z.ordinates.iter().filter(|g| g.abs() <= t).count();
    Ok(if z.symmetric { 2 * n } else { n })
}
