//! Prime sieve and the von Mangoldt function.

use crate::error::{Error, Result};

/// Largest table the sieve will allocate.
pub const MAX_TABLE: u64 = 1 << 31;

/// Smallest-prime-factor table for 0..=n (entries 0 and 1 are 0).
#[derive(Debug, Clone)]
pub struct Sieve {
    spf: Vec<u32>,
}

impl Sieve {
    pub fn new(n: u64) -> Result<Self> {
        if n > MAX_TABLE {
            return Err(Error::Resource(format!(
                "sieve up to {n} exceeds the addressable table limit {MAX_TABLE}"
            )));
        }
        let n = n as usize;
        let mut spf = vec![0u32; n + 1];
        for i in 2..=n {
            if spf[i] == 0 {
                spf[i] = i as u32;
                let mut j = i.saturating_mul(i);
                while j <= n {
                    if spf[j] == 0 {
                        spf[j] = i as u32;
                    }
                    j += i;
                }
            }
        }
        Ok(Self { spf })
    }

    pub fn limit(&self) -> u64 {
        (self.spf.len() - 1) as u64
    }

    pub fn is_prime(&self, m: u64) -> bool {
        m >= 2 && self.spf[m as usize] as u64 == m
    }

    pub fn smallest_factor(&self, m: u64) -> u64 {
        self.spf[m as usize] as u64
    }

    /// (p, k) when m = p^k, otherwise None.
    pub fn prime_power(&self, m: u64) -> Option<(u64, u32)> {
        if m < 2 {
            return None;
        }
        let p = self.smallest_factor(m);
        let mut rest = m;
        let mut k = 0;
        while rest % p == 0 {
            rest /= p;
            k += 1;
        }
        (rest == 1).then_some((p, k))
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        (2..=self.limit()).filter(|&m| self.is_prime(m))
    }
}

/// Deterministic trial division, for validating user-supplied primes.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Λ(m) for 0 ≤ m ≤ x_max.
#[derive(Debug, Clone)]
pub struct VonMangoldtTable {
    values: Vec<f64>,
}

impl VonMangoldtTable {
    pub fn get(&self, m: u64) -> Option<f64> {
        self.values.get(m as usize).copied()
    }

    pub fn x_max(&self) -> u64 {
        (self.values.len() - 1) as u64
    }

    /// (m, Λ(m)) for the prime powers m in the table.
    pub fn support(&self) -> impl Iterator<Item = (u64, f64)> + '_ {
        self.values
            .iter()
            .enumerate()
            .filter(|(_, &v)| v > 0.0)
            .map(|(m, &v)| (m as u64, v))
    }
}

pub fn von_mangoldt_table(x_max: u64) -> Result<VonMangoldtTable> {
    if x_max < 2 {
        return Err(Error::domain(format!("von Mangoldt table needs x_max ≥ 2, got {x_max}")));
    }
    let sieve = Sieve::new(x_max)?;
    let mut values = vec![0.0; x_max as usize + 1];
    for (m, slot) in values.iter_mut().enumerate().skip(2) {
        if let Some((p, _)) = sieve.prime_power(m as u64) {
            *slot = (p as f64).ln();
        }
    }
    Ok(VonMangoldtTable { values })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn small_values() {
        let t = von_mangoldt_table(100).unwrap();
        assert_eq!(t.get(6), Some(0.0));
        assert_abs_diff_eq!(t.get(8).unwrap(), 2f64.ln(), epsilon = 1e-15);
        assert_abs_diff_eq!(t.get(97).unwrap(), 97f64.ln(), epsilon = 1e-15);
        assert_eq!(t.get(1), Some(0.0));
    }

    #[test]
    fn prime_power_count_matches_brute_force() {
        // brute force: m is a prime power iff it has exactly one distinct prime divisor
        let brute = (2u64..=100)
            .filter(|&m| (2..=m).filter(|&d| m % d == 0 && is_prime(d)).count() == 1)
            .count();
        assert_eq!(brute, 35);
        let t = von_mangoldt_table(100).unwrap();
        assert_eq!(t.support().count(), brute);
    }

    #[test]
    fn chebyshev_psi_is_log_lcm() {
        // ψ(30) = log lcm(1..30)
        let t = von_mangoldt_table(30).unwrap();
        let psi: f64 = t.support().map(|(_, v)| v).sum();
        let lcm: f64 = [16.0, 27.0, 25.0, 7.0, 11.0, 13.0, 17.0, 19.0, 23.0, 29.0f64]
            .iter()
            .map(|v| v.ln())
            .sum();
        assert_abs_diff_eq!(psi, lcm, epsilon = 1e-12);
    }

    #[test]
    fn rejects_bad_sizes() {
        assert!(matches!(von_mangoldt_table(1), Err(Error::Domain(_))));
        assert!(matches!(von_mangoldt_table(MAX_TABLE + 1), Err(Error::Resource(_))));
    }

    #[test]
    fn sieve_agrees_with_trial_division() {
        let s = Sieve::new(2000).unwrap();
        for m in 0..=2000 {
            assert_eq!(s.is_prime(m), is_prime(m), "m = {m}");
        }
        assert_eq!(s.primes().take_while(|&p| p <= 100).count(), 25);
    }
}
