use num_complex::Complex64;

// B_{2k} / (2k) for k = 1..6
const ASYMPTOTIC: [f64; 6] = [
    1.0 / 12.0,
    -1.0 / 120.0,
    1.0 / 252.0,
    -1.0 / 240.0,
    1.0 / 132.0,
    -691.0 / 32760.0,
];

const SHIFT_TO: f64 = 8.0;

/// Complex digamma ψ(z) = Γ'(z)/Γ(z), valid away from the poles at non-positive integers.
///
/// Shifts upward with ψ(z) = ψ(z + 1) - 1/z until Re z ≥ 8, then applies the
/// six-term asymptotic series. Absolute accuracy is about 1e-13 on the strip
/// Re z > 0.
pub fn digamma(z: Complex64) -> Complex64 {
    let mut w = z;
    let mut shift = Complex64::new(0.0, 0.0);
    while w.re < SHIFT_TO {
        shift -= w.inv();
        w += 1.0;
    }
    let inv = w.inv();
    let inv2 = inv * inv;
    let mut poly = Complex64::new(0.0, 0.0);
    for &c in ASYMPTOTIC.iter().rev() {
        poly = poly * inv2 + c;
    }
    shift + w.ln() - 0.5 * inv - poly * inv2
}
