//! Dirichlet characters for small moduli.
//!
//! The unit group (Z/qZ)^× is written as a product of cyclic factors generated
//! by g_1, ..., g_r (the lexicographically first generating tuple found by
//! exhaustive search). Character `index` has mixed-radix digits j_i and sends
//! g_i to e^{2πi j_i / n_i}. For q = 4, index 1 is the non-principal character χ₋₄.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};

pub const MAX_MODULUS: u64 = 20;

#[derive(Debug, Clone)]
pub struct DirichletCharacter {
    modulus: u64,
    index: usize,
    values: Vec<Complex64>,
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn order(g: u64, q: u64) -> usize {
    let mut x = g % q;
    let mut k = 1;
    while x != 1 % q {
        x = x * g % q;
        k += 1;
    }
    k
}

fn root_of_unity(num: usize, den: usize) -> Complex64 {
    match (4 * num) % (4 * den) {
        0 => return Complex64::new(1.0, 0.0),
        r if r == den => return Complex64::new(0.0, 1.0),
        r if r == 2 * den => return Complex64::new(-1.0, 0.0),
        r if r == 3 * den => return Complex64::new(0.0, -1.0),
        _ => {}
    }
    Complex64::from_polar(1.0, 2.0 * PI * num as f64 / den as f64)
}

fn generators(q: u64) -> Vec<(u64, usize)> {
    let units: Vec<u64> = (1..q.max(2)).filter(|&a| gcd(a, q) == 1).collect();
    let phi = units.len();
    if phi <= 1 {
        return Vec::new();
    }
    let candidates: Vec<(u64, usize)> = units
        .iter()
        .map(|&g| (g, order(g, q)))
        .filter(|&(_, n)| n > 1)
        .collect();
    (1..=3)
        .find_map(|r| search(&candidates, r, &mut Vec::new(), q, phi))
        .expect("unit group of a modulus ≤ 20 has rank at most 3")
}

fn search(
    candidates: &[(u64, usize)],
    rank: usize,
    acc: &mut Vec<(u64, usize)>,
    q: u64,
    phi: usize,
) -> Option<Vec<(u64, usize)>> {
    if acc.len() == rank {
        let size: usize = acc.iter().map(|t| t.1).product();
        return (size == phi && spans(acc, q, phi)).then(|| acc.clone());
    }
    for &c in candidates {
        acc.push(c);
        if let Some(found) = search(candidates, rank, acc, q, phi) {
            return Some(found);
        }
        acc.pop();
    }
    None
}

fn spans(tuple: &[(u64, usize)], q: u64, phi: usize) -> bool {
    let mut seen = vec![false; q as usize];
    let mut count = 0;
    let mut exps = vec![0usize; tuple.len()];
    loop {
        let mut x = 1 % q;
        for (&(g, _), &e) in tuple.iter().zip(&exps) {
            for _ in 0..e {
                x = x * g % q;
            }
        }
        if seen[x as usize] {
            return false;
        }
        seen[x as usize] = true;
        count += 1;
        let mut i = 0;
        loop {
            if i == tuple.len() {
                return count == phi;
            }
            exps[i] += 1;
            if exps[i] < tuple[i].1 {
                break;
            }
            exps[i] = 0;
            i += 1;
        }
    }
}

impl DirichletCharacter {
    pub fn new(modulus: u64, index: usize) -> Result<Self> {
        if modulus == 0 || modulus > MAX_MODULUS {
            return Err(Error::domain(format!(
                "Dirichlet characters are built in for moduli 1..={MAX_MODULUS}, got {modulus}"
            )));
        }
        let gens = generators(modulus);
        let phi: usize = gens.iter().map(|g| g.1).product();
        if index >= phi {
            return Err(Error::domain(format!(
                "character index {index} out of range for modulus {modulus} (φ = {phi})"
            )));
        }
        let mut digits = Vec::with_capacity(gens.len());
        let mut rest = index;
        for &(_, n) in &gens {
            digits.push(rest % n);
            rest /= n;
        }
        let mut values = vec![Complex64::new(0.0, 0.0); modulus as usize];
        let mut exps = vec![0usize; gens.len()];
        loop {
            let mut x = 1 % modulus;
            let mut value = Complex64::new(1.0, 0.0);
            for ((&(g, n), &e), &j) in gens.iter().zip(&exps).zip(&digits) {
                for _ in 0..e {
                    x = x * g % modulus;
                }
                value *= root_of_unity(j * e, n);
            }
            values[x as usize] = value;
            let mut i = 0;
            loop {
                if i == gens.len() {
                    break;
                }
                exps[i] += 1;
                if exps[i] < gens[i].1 {
                    break;
                }
                exps[i] = 0;
                i += 1;
            }
            if i == gens.len() {
                break;
            }
        }
        if modulus == 1 {
            values[0] = Complex64::new(1.0, 0.0);
        }
        Ok(Self { modulus, index, values })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn index(&self) -> usize {
        self.index
    }

    pub fn value(&self, n: u64) -> Complex64 {
        self.values[(n % self.modulus) as usize]
    }

    /// 0 for even characters, 1 for odd ones.
    pub fn parity(&self) -> u32 {
        if self.modulus <= 2 || self.value(self.modulus - 1).re > 0.0 {
            0
        } else {
            1
        }
    }

    pub fn is_principal(&self) -> bool {
        self.values
            .iter()
            .enumerate()
            .all(|(a, v)| gcd(a as u64, self.modulus) != 1 || (v - 1.0).norm() < 1e-12)
    }

    /// Smallest d | q such that χ is trivial on units ≡ 1 (mod d).
    pub fn conductor(&self) -> u64 {
        let q = self.modulus;
        (1..=q)
            .filter(|d| q % d == 0)
            .find(|&d| {
                (1..q)
                    .filter(|&a| gcd(a, q) == 1 && a % d == 1 % d)
                    .all(|a| (self.value(a) - 1.0).norm() < 1e-12)
            })
            .unwrap_or(q)
    }

    pub fn is_primitive(&self) -> bool {
        self.conductor() == self.modulus
    }

    pub fn gauss_sum(&self) -> Complex64 {
        let q = self.modulus;
        (1..=q)
            .map(|a| self.value(a) * Complex64::from_polar(1.0, 2.0 * PI * a as f64 / q as f64))
            .sum()
    }

    /// w = τ(χ) / (i^a √q) for primitive χ of parity a.
    pub fn root_number(&self) -> Complex64 {
        let i_pow = if self.parity() == 1 {
            Complex64::new(0.0, 1.0)
        } else {
            Complex64::new(1.0, 0.0)
        };
        self.gauss_sum() / (i_pow * (self.modulus as f64).sqrt())
    }
}
