use super::list::ZeroList;
use crate::error::{Error, Result};

pub const DEFAULT_MATCH_TOL: f64 = 1e-6;

/// Z_F(T) △ Z_G(T) after matching ordinates within `match_tol`.
#[derive(Debug, Clone)]
pub struct ZeroDiff {
    pub only_f: ZeroList,
    pub only_g: ZeroList,
    pub match_tol: f64,
    pub height: f64,
}

impl ZeroDiff {
    /// Number of zeros (both signs) in the symmetric difference.
    pub fn size(&self) -> usize {
        let count = |z: &ZeroList| z.signed().count();
        count(&self.only_f) + count(&self.only_g)
    }

    pub fn is_empty(&self) -> bool {
        self.only_f.is_empty() && self.only_g.is_empty()
    }

    /// |△| / (T log T / log log T), the quantity bounded under condition (i).
    pub fn condition_ratio(&self) -> f64 {
        let t = self.height;
        if t <= std::f64::consts::E {
            return f64::NAN;
        }
        self.size() as f64 / (t * t.ln() / t.ln().ln())
    }
}

/// Greedy nearest-neighbour matching of the zeros with |γ| ≤ T.
///
/// Each ordinate of `zf`, in ascending order, takes the nearest still
/// unmatched ordinate of `zg` within `match_tol`; repeated ordinates are
/// matched one for one.
pub fn symmetric_difference(zf: &ZeroList, zg: &ZeroList, t: f64, match_tol: f64) -> Result<ZeroDiff> {
    if !(match_tol > 0.0) {
        return Err(Error::domain(format!("match tolerance must be > 0, got {match_tol}")));
    }
    for z in [zf, zg] {
        if t > z.complete_to() {
            return Err(Error::incomplete(format!(
                "symmetric difference to T = {t} needs zeros complete to T, `{}` stops at {}",
                z.source(),
                z.complete_to()
            )));
        }
    }
    let both_symmetric = zf.symmetric() && zg.symmetric();
    let take = |z: &ZeroList| -> Vec<f64> {
        if both_symmetric {
            z.ordinates().iter().copied().filter(|g| *g <= t).collect()
        } else {
            z.signed().filter(|g| g.abs() <= t).collect()
        }
    };
    let f = take(zf);
    let g = take(zg);
    let mut used = vec![false; g.len()];
    let mut only_f = Vec::new();
    for &x in &f {
        let start = g.partition_point(|&y| y < x - match_tol);
        let best = (start..g.len())
            .take_while(|&j| g[j] <= x + match_tol)
            .filter(|&j| !used[j])
            .min_by(|&a, &b| (g[a] - x).abs().total_cmp(&(g[b] - x).abs()));
        match best {
            Some(j) => used[j] = true,
            None => only_f.push(x),
        }
    }
    let only_g: Vec<f64> = g.iter().zip(&used).filter(|(_, &u)| !u).map(|(&y, _)| y).collect();
    let wrap = |v: Vec<f64>, src: &str| ZeroList::new(v, t, both_symmetric, format!("only in {src}"));
    Ok(ZeroDiff {
        only_f: wrap(only_f, zf.source())?,
        only_g: wrap(only_g, zg.source())?,
        match_tol,
        height: t,
    })
}
