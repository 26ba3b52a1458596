use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::exactmath::{CyclotomicFactorization, CyclotomicNumber, IntPolynomial};
use crate::mckay::{omega3, sqrt2};

/// `3/7`, `-2`, `0.001` or `1e-12`.
pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    if let Some((a, b)) = s.split_once('/') {
        let (a, b): (BigInt, BigInt) = (a.trim().parse().ok()?, b.trim().parse().ok()?);
        return (!b.is_zero()).then(|| BigRational::new(a, b));
    }
    let (mantissa, exp) = match s.split_once(['e', 'E']) {
        Some((m, e)) => (m, e.parse::<i32>().ok()?),
        None => (s, 0),
    };
    let (neg, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa),
    };
    let (int, frac) = digits.split_once('.').unwrap_or((digits, ""));
    if int.is_empty() && frac.is_empty() || !int.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return None;
    }
    let n: BigInt = format!("{int}{frac}").parse().ok()?;
    let scale = exp - frac.len() as i32;
    let ten = BigInt::from(10);
    let mut q = if scale >= 0 {
        BigRational::from_integer(n * num_traits::pow(ten, scale as usize))
    } else {
        BigRational::new(n, num_traits::pow(ten, (-scale) as usize))
    };
    if neg {
        q = -q;
    }
    Some(q)
}

pub fn poly(p: &IntPolynomial, var: &str, ascii: bool) -> String {
    let var = if ascii && var == "λ" { "x" } else { var };
    p.render(var, ascii)
}

pub fn poly_json(p: &IntPolynomial) -> Value {
    json!(p.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>())
}

fn superscript(n: u32) -> String {
    const DIGITS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    n.to_string().chars().map(|c| DIGITS[c.to_digit(10).unwrap() as usize]).collect()
}

/// Φ₁²·Φ₃ (or `Phi1^2*Phi3`), followed by the non-cyclotomic cofactor if any.
pub fn factorization(f: &CyclotomicFactorization, ascii: bool) -> String {
    let mut parts: Vec<String> = f
        .factors
        .iter()
        .map(|(&d, &m)| match (ascii, m) {
            (true, 1) => format!("Phi{d}"),
            (true, _) => format!("Phi{d}^{m}"),
            (false, 1) => format!("Φ{d}"),
            (false, _) => format!("Φ{d}{}", superscript(m)),
        })
        .collect();
    if !f.remainder.is_one() {
        parts.push(format!("({})", poly(&f.remainder, "λ", ascii)));
    }
    if parts.is_empty() {
        return "1".into();
    }
    parts.join(if ascii { "*" } else { "·" })
}

pub fn factorization_json(f: &CyclotomicFactorization) -> Value {
    json!({
        "cyclotomic": f.factors.iter().map(|(d, m)| (d.to_string(), json!(m))).collect::<serde_json::Map<_, _>>(),
        "remainder": poly_json(&f.remainder),
    })
}

pub fn ints(v: &[i64]) -> String {
    v.iter().map(i64::to_string).collect::<Vec<_>>().join(" ")
}

pub fn minus(ascii: bool) -> &'static str {
    if ascii {
        "-"
    } else {
        "−"
    }
}

pub fn f6(x: f64) -> String {
    format!("{x:.6}")
}

/// Character values as a + b·s for s among √2, ω, ω², i, √5 when possible.
pub fn cyclotomic(x: &CyclotomicNumber, ascii: bool) -> String {
    let m = x.conductor();
    let fmt_q = |q: &BigRational| -> String {
        let s = q.to_string();
        if q.is_negative() {
            format!("{}{}", minus(ascii), &s[1..])
        } else {
            s
        }
    };
    if let Some(q) = x.rational_value() {
        return fmt_q(&q);
    }
    let mut candidates: Vec<(String, CyclotomicNumber)> = Vec::new();
    if m % 8 == 0 {
        candidates.push((if ascii { "sqrt2" } else { "√2" }.into(), sqrt2(m)));
    }
    if m % 3 == 0 {
        let w = omega3(m);
        candidates.push((if ascii { "w^2" } else { "ω²" }.into(), &w * &w));
        candidates.push((if ascii { "w" } else { "ω" }.into(), w));
    }
    if m % 4 == 0 {
        candidates.push(("i".into(), CyclotomicNumber::zeta_pow(m, m as i64 / 4)));
    }
    if m % 5 == 0 {
        let z = |k: i64| CyclotomicNumber::zeta_pow(m, k * m as i64 / 5);
        let s5 = &(&(&z(1) - &z(2)) - &z(3)) + &z(4);
        candidates.push((if ascii { "sqrt5" } else { "√5" }.into(), s5));
    }
    let halves = [(1, 1), (-1, 1), (2, 1), (-2, 1), (1, 2), (-1, 2)];
    let mut found: Vec<String> = Vec::new();
    for (name, s) in &candidates {
        for &(p, q) in &halves {
            let b = BigRational::new(p.into(), q.into());
            let rest = x - &s.scale(&b);
            let Some(a) = rest.rational_value() else { continue };
            let two = BigRational::from_integer(2.into());
            let halved = !a.is_integer() || !b.is_integer();
            let (a, b) = if halved { (&a * &two, &b * &two) } else { (a, b) };
            let mag = b.abs();
            let term = if mag.is_one() { name.clone() } else { format!("{mag}{name}") };
            let body = match (a.is_zero(), b.is_negative()) {
                (true, false) => term,
                (true, true) => format!("{}{term}", minus(ascii)),
                (false, neg) => format!("{}{}{term}", fmt_q(&a), if neg { minus(ascii) } else { "+" }),
            };
            found.push(if halved { format!("({body})/2") } else { body });
        }
    }
    // shortest form; ω rather than −1−ω²
    found.into_iter().min_by_key(|f| f.chars().count()).unwrap_or_else(|| x.to_string())
}

pub fn table(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| rows.iter().filter_map(|r| r.get(c)).map(|s| s.chars().count()).max().unwrap_or(0))
        .collect();
    rows.iter()
        .map(|r| {
            r.iter()
                .enumerate()
                .map(|(c, s)| format!("{s:>w$}", w = widths[c]))
                .collect::<Vec<_>>()
                .join("  ")
                .trim_end()
                .to_string()
        })
        .collect::<Vec<_>>()
        .join("\n")
}
