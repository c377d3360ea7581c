//! Text format for L-function data.
//!
//! ```text
//! # comment
//! name = shifted-zeta
//! builtin = zeta            # optional: zeta | one | dirichlet:<q>:<index>
//! horizon = 10000
//! pole_order = 1
//! Q = 0.5641895835477563
//! root_number = (1, 0)
//! theta = 0
//! gamma_factors = [(0.5, 0, 0)]
//! fill = (1, 0)             # optional default for unset b(p^k)
//! euler = [
//!   2 1 1 0                 # p k re im
//!   2 2 1 0
//! ]
//! ```
//!
//! Lists may be written inline or one item per line. Keys given alongside
//! `builtin` override the builtin's values; `euler` lines override single
//! coefficients.

use std::path::Path;

use num_complex::Complex64;

use super::datum::{DatumBuilder, GammaFactor, SelbergDatum};
use crate::error::{Error, Result};

const DEFAULT_HORIZON: u64 = 10_000;

fn perr(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

#[derive(Default)]
struct Raw {
    name: Option<String>,
    builtin: Option<(usize, String)>,
    horizon: Option<(usize, u64)>,
    pole_order: Option<u32>,
    q: Option<(usize, f64)>,
    root_number: Option<(usize, Complex64)>,
    theta: Option<(usize, f64)>,
    gamma_factors: Option<Vec<(usize, GammaFactor)>>,
    fill: Option<Complex64>,
    euler: Vec<(usize, u64, u32, Complex64)>,
}

pub fn load_datum(path: impl AsRef<Path>) -> Result<SelbergDatum> {
    let text = std::fs::read_to_string(path)?;
    parse_datum(&text)
}

pub fn parse_datum(text: &str) -> Result<SelbergDatum> {
    let raw = parse_raw(text)?;
    let horizon = raw.horizon.map(|h| h.1).unwrap_or(DEFAULT_HORIZON);
    let mut b = match &raw.builtin {
        Some((line, name)) => DatumBuilder::from_datum(
            &SelbergDatum::builtin(name, horizon).map_err(|e| perr(*line, e.to_string()))?,
        ),
        None => DatumBuilder::new("unnamed", horizon),
    };
    if let Some(name) = raw.name {
        b = b.name(name);
    }
    if let Some(m) = raw.pole_order {
        b = b.pole_order(m);
    }
    if let Some((line, q)) = raw.q {
        if !(q > 0.0) {
            return Err(perr(line, format!("Q must be > 0, got {q}")));
        }
        b = b.q_param(q);
    }
    if let Some((line, w)) = raw.root_number {
        if (w.norm() - 1.0).abs() > 1e-12 {
            return Err(perr(line, format!("root number must have modulus 1, got |w| = {}", w.norm())));
        }
        b = b.root_number(w);
    }
    if let Some((line, theta)) = raw.theta {
        if !(theta < 0.5) {
            return Err(perr(line, format!("θ must be < 1/2, got {theta}")));
        }
        b = b.theta(theta);
    }
    if let Some(factors) = raw.gamma_factors {
        b = b.clear_gamma_factors();
        for (_, f) in factors {
            b = b.gamma_factor(f);
        }
    }
    if let Some(fill) = raw.fill {
        b = b.fill(fill);
    }
    for (line, p, k, v) in raw.euler {
        if !super::primes::is_prime(p) {
            return Err(perr(line, format!("{p} is not prime")));
        }
        if k == 0 {
            return Err(perr(line, "prime-power exponent must be ≥ 1"));
        }
        match p.checked_pow(k) {
            Some(pk) if pk <= horizon => {}
            _ => return Err(perr(line, format!("{p}^{k} exceeds the horizon {horizon}"))),
        }
        b = b.euler_b(p, k, v);
    }
    b.build()
}

fn strip_comment(line: &str) -> &str {
    line.split('#').next().unwrap_or("").trim()
}

fn parse_raw(text: &str) -> Result<Raw> {
    let mut raw = Raw::default();
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, strip_comment(l)));
    while let Some((line, content)) = lines.next() {
        if content.is_empty() {
            continue;
        }
        let (key, value) = content
            .split_once('=')
            .ok_or_else(|| perr(line, format!("expected `key = value`, got `{content}`")))?;
        let key = key.trim();
        let value = value.trim();
        match key {
            "name" => raw.name = Some(unquote(value).to_string()),
            "builtin" => raw.builtin = Some((line, unquote(value).to_string())),
            "horizon" => raw.horizon = Some((line, parse_num(line, value)?)),
            "pole_order" => raw.pole_order = Some(parse_num(line, value)?),
            "Q" => raw.q = Some((line, parse_num(line, value)?)),
            "theta" => raw.theta = Some((line, parse_num(line, value)?)),
            "root_number" => raw.root_number = Some((line, parse_complex(line, value)?)),
            "fill" => raw.fill = Some(parse_complex(line, value)?),
            "gamma_factors" => {
                let items = collect_list(line, value, &mut lines)?;
                let mut out = Vec::new();
                for (l, item) in items {
                    out.push((l, parse_gamma(l, &item)?));
                }
                raw.gamma_factors = Some(out);
            }
            "euler" => {
                for (l, item) in collect_list(line, value, &mut lines)? {
                    let (p, k, v) = parse_euler(l, &item)?;
                    raw.euler.push((l, p, k, v));
                }
            }
            _ => return Err(perr(line, format!("unknown key `{key}`"))),
        }
    }
    Ok(raw)
}

/// Items of a `[ ... ]` list, each tagged with its line. Inline items are
/// separated by `),` boundaries (tuples) or by `;`.
fn collect_list<'a>(
    start: usize,
    value: &str,
    lines: &mut impl Iterator<Item = (usize, &'a str)>,
) -> Result<Vec<(usize, String)>> {
    let rest = value
        .strip_prefix('[')
        .ok_or_else(|| perr(start, "expected a list starting with `[`"))?
        .trim();
    let mut items = Vec::new();
    if let Some(inner) = rest.strip_suffix(']') {
        split_items(start, inner, &mut items);
        return Ok(items);
    }
    split_items(start, rest, &mut items);
    for (line, content) in lines {
        if let Some(inner) = content.strip_suffix(']') {
            split_items(line, inner, &mut items);
            return Ok(items);
        }
        split_items(line, content, &mut items);
    }
    Err(perr(start, "list is never closed with `]`"))
}

fn split_items(line: usize, text: &str, items: &mut Vec<(usize, String)>) {
    let mut depth = 0;
    let mut current = String::new();
    for ch in text.chars() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            _ => {}
        }
        if (ch == ',' || ch == ';') && depth == 0 {
            push_item(line, &mut current, items);
        } else {
            current.push(ch);
        }
    }
    push_item(line, &mut current, items);
}

fn push_item(line: usize, current: &mut String, items: &mut Vec<(usize, String)>) {
    let item = current.trim();
    if !item.is_empty() {
        items.push((line, item.to_string()));
    }
    current.clear();
}

fn unquote(s: &str) -> &str {
    s.trim_matches('"')
}

fn parse_num<T: std::str::FromStr>(line: usize, s: &str) -> Result<T> {
    s.trim().parse().map_err(|_| perr(line, format!("cannot parse `{}` as a number", s.trim())))
}

fn tuple_fields(line: usize, s: &str) -> Result<Vec<f64>> {
    let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
    inner
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|f| !f.is_empty())
        .map(|f| parse_num(line, f))
        .collect()
}

fn parse_complex(line: usize, s: &str) -> Result<Complex64> {
    match tuple_fields(line, s)?.as_slice() {
        [re] => Ok(Complex64::new(*re, 0.0)),
        [re, im] => Ok(Complex64::new(*re, *im)),
        _ => Err(perr(line, format!("expected a complex value `re` or `(re, im)`, got `{s}`"))),
    }
}

fn parse_gamma(line: usize, s: &str) -> Result<GammaFactor> {
    let f = tuple_fields(line, s)?;
    let (lambda, mu) = match f.as_slice() {
        [l, re] => (*l, Complex64::new(*re, 0.0)),
        [l, re, im] => (*l, Complex64::new(*re, *im)),
        _ => return Err(perr(line, format!("gamma factor must be (lambda, mu_re[, mu_im]), got `{s}`"))),
    };
    if !(lambda > 0.0) {
        return Err(perr(line, format!("gamma factor needs λ > 0, got {lambda}")));
    }
    GammaFactor::new(lambda, mu).map_err(|e| perr(line, e.to_string()))
}

fn parse_euler(line: usize, s: &str) -> Result<(u64, u32, Complex64)> {
    let fields: Vec<&str> = s.split_whitespace().collect();
    let (p, k, re, im) = match fields.as_slice() {
        [p, k, re] => (p, k, re, &"0"),
        [p, k, re, im] => (p, k, re, im),
        _ => return Err(perr(line, format!("euler line must be `p k re [im]`, got `{s}`"))),
    };
    Ok((
        parse_num(line, p)?,
        parse_num(line, k)?,
        Complex64::new(parse_num(line, re)?, parse_num(line, im)?),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zeta_by_hand_matches_builtin() {
        let text = "\
# hand-written zeta
name = zeta-copy
horizon = 200
pole_order = 1
Q = 0.5641895835477563
root_number = (1, 0)
gamma_factors = [
  (0.5, 0, 0)
]
fill = 1
";
        let d = parse_datum(text).unwrap();
        let z = SelbergDatum::zeta(200).unwrap();
        assert_eq!(d.name(), "zeta-copy");
        assert_eq!(d.degree(), 1.0);
        assert!((d.q_param() - z.q_param()).abs() < 1e-15);
        for m in 1..=200 {
            assert_eq!(d.coefficient_a(m).unwrap(), z.coefficient_a(m).unwrap());
        }
    }

    #[test]
    fn builtin_with_overrides() {
        let text = "builtin = dirichlet:4:1\nhorizon = 50\neuler = [2 1 0.5 0; 3 1 -1]\n";
        let d = parse_datum(text).unwrap();
        assert_eq!(d.b_at(2, 1).unwrap(), Complex64::new(0.5, 0.0));
        assert_eq!(d.b_at(5, 1).unwrap(), Complex64::new(1.0, 0.0));
        assert_eq!(d.gamma_factors()[0].mu_shift().re, 0.5);
    }

    #[test]
    fn bad_root_number_reports_line() {
        let err = parse_datum("name = x\n\nroot_number = (0.5, 0.5)\n").unwrap_err();
        match err {
            Error::Parse { line, msg } => {
                assert_eq!(line, 3);
                assert!(msg.contains("modulus 1"), "{msg}");
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn nonpositive_lambda_reports_line() {
        let err = parse_datum("gamma_factors = [\n (0.5, 0)\n (0, 1, 0)\n]\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }), "{err}");
        let err = parse_datum("gamma_factors = [(-1, 0)]").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }), "{err}");
    }

    #[test]
    fn malformed_input() {
        assert!(matches!(parse_datum("Q = abc"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_datum("\nfoo = 1"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_datum("euler = [\n4 1 1 0\n]"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_datum("euler = [\n2 1 1 0\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(
            parse_datum("horizon = 10\neuler = [2 4 1 0]"),
            Err(Error::Parse { line: 2, .. })
        ));
    }
}
