use num_bigint::BigInt;
use num_rational::BigRational;

use super::coxeter_charpoly;
use crate::diagram::{build_catalog, dynkin, ValuedGraph};
use crate::error::{Error, Result};
use crate::exactmath::{largest_root_above_one, IntPolynomial, RealRootInterval};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SeriesFamily {
    T23,
    T33,
    T24,
}

impl SeriesFamily {
    pub fn parse(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "T23" => Ok(SeriesFamily::T23),
            "T33" => Ok(SeriesFamily::T33),
            "T24" => Ok(SeriesFamily::T24),
            other => Err(Error::InvalidParameter(format!("unknown series `{other}` (T23, T33, T24)"))),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            SeriesFamily::T23 => "T23",
            SeriesFamily::T33 => "T33",
            SeriesFamily::T24 => "T24",
        }
    }

    /// Fixed branch lengths (p, q).
    pub fn pq(self) -> (usize, usize) {
        match self {
            SeriesFamily::T23 => (2, 3),
            SeriesFamily::T33 => (3, 3),
            SeriesFamily::T24 => (2, 4),
        }
    }

    pub fn min_r(self) -> usize {
        match self {
            SeriesFamily::T23 => 2,
            SeriesFamily::T33 | SeriesFamily::T24 => 3,
        }
    }

    pub fn graph(self, r: usize) -> Result<ValuedGraph> {
        let (p, q) = self.pq();
        build_catalog(&format!("T[{p},{q},{r}]"))
    }
}

fn p(c: &[i64]) -> IntPolynomial {
    IntPolynomial::from_i64s(c)
}

/// Closed forms:
/// T23: (λ^{r+1}(λ³−λ−1) + (λ³+λ²−1))/(λ−1),
/// T33: (λ^{r+1}(λ⁴−λ²−2λ−1) + (λ⁴+2λ³+λ²−1))/(λ−1),
/// T24: (λ^{r+1}(λ⁴−λ²−λ−1) + (λ⁴+λ³+λ²−1))/(λ−1).
pub fn tpqr_series_charpoly(family: SeriesFamily, r: usize) -> Result<IntPolynomial> {
    if r < family.min_r() {
        return Err(Error::InvalidParameter(format!(
            "{} closed form needs r ≥ {}",
            family.name(),
            family.min_r()
        )));
    }
    let (lead, tail) = match family {
        SeriesFamily::T23 => (p(&[-1, -1, 0, 1]), p(&[-1, 0, 1, 1])),
        SeriesFamily::T33 => (p(&[-1, -2, -1, 0, 1]), p(&[-1, 0, 1, 2, 1])),
        SeriesFamily::T24 => (p(&[-1, -1, -1, 0, 1]), p(&[-1, 0, 1, 1, 1])),
    };
    let numerator = &lead.shift(r + 1) + &tail;
    numerator
        .div_exact(&p(&[-1, 1]))
        .ok_or_else(|| Error::Consistency("series numerator not divisible by λ − 1".into()))
}

/// Polynomial whose largest real root is the limit of the series' spectral radii.
pub fn tpqr_series_limit(family: SeriesFamily) -> IntPolynomial {
    match family {
        SeriesFamily::T23 => p(&[-1, -1, 0, 1]),
        SeriesFamily::T33 => p(&[-1, -1, 1]),
        SeriesFamily::T24 => p(&[-1, 0, -1, 1]),
    }
}

/// λ^{n+1} − λ^{n−k+1} − λ^k + 1 for the Ã_n cycle with class index k.
pub fn affine_an_charpoly(n: usize, k: usize) -> Result<IntPolynomial> {
    if n < 1 || k < 1 || k > n {
        return Err(Error::InvalidParameter(format!("class index k = {k} outside 1..={n}")));
    }
    let k = k.min(n + 1 - k);
    let one = BigInt::from(1);
    let mut c = vec![BigInt::from(0); n + 2];
    c[n + 1] += &one;
    c[n - k + 1] -= &one;
    c[k] -= &one;
    c[0] += &one;
    Ok(IntPolynomial::new(c))
}

#[derive(Debug, Clone, PartialEq)]
pub struct SpectralRadius {
    pub value: f64,
    /// Isolating interval of the dominant root when it exceeds 1.
    pub interval: Option<RealRootInterval>,
    /// True when every eigenvalue lies on the unit circle (radius exactly 1).
    pub exact_one: bool,
}

pub fn spectral_radius(g: &ValuedGraph, tol: &BigRational) -> Result<SpectralRadius> {
    let chi = coxeter_charpoly(g)?;
    radius_of(&chi, tol)
}

pub(crate) fn radius_of(chi: &IntPolynomial, tol: &BigRational) -> Result<SpectralRadius> {
    Ok(match largest_root_above_one(chi, tol)? {
        Some(iv) => SpectralRadius { value: iv.value(), interval: Some(iv), exact_one: false },
        None => SpectralRadius { value: 1.0, interval: None, exact_one: true },
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrameReport {
    pub direct: IntPolynomial,
    pub formula: IntPolynomial,
    pub holds: bool,
}

fn chi_a(k: isize) -> Result<IntPolynomial> {
    // χ(A₀) = 1 and χ(A₋₁) = 0 by convention
    if k <= 0 {
        return Ok(IntPolynomial::geometric(k));
    }
    coxeter_charpoly(&dynkin("A", k as usize)?)
}

/// χ(A_{m+n}) = χ(A_m)χ(A_n) − λχ(A_{m−1})χ(A_{n−1}).
pub fn frame_path_check(m: usize, n: usize) -> Result<FrameReport> {
    if m == 0 || n == 0 {
        return Err(Error::InvalidParameter("m and n must be positive".into()));
    }
    let direct = chi_a((m + n) as isize)?;
    let (m, n) = (m as isize, n as isize);
    let formula = &(&chi_a(m)? * &chi_a(n)?) - &(&chi_a(m - 1)? * &chi_a(n - 1)?).shift(1);
    Ok(FrameReport { holds: direct == formula, direct, formula })
}

/// χ(T_{p,q,r}) = χ(A_{p+q+r−2}) − λ²χ(A_{p−2})χ(A_{q−2})χ(A_{r−2}).
pub fn frame_tpqr_check(p: usize, q: usize, r: usize) -> Result<FrameReport> {
    if p == 0 || q == 0 || r == 0 {
        return Err(Error::InvalidParameter("branch lengths must be positive".into()));
    }
    let g = if p.min(q).min(r) == 1 {
        let mut s = [p, q, r];
        s.sort_unstable();
        dynkin("A", s[1] + s[2] - 1)?
    } else {
        build_catalog(&format!("T[{p},{q},{r}]"))?
    };
    let direct = coxeter_charpoly(&g)?;
    let (p, q, r) = (p as isize, q as isize, r as isize);
    let formula = &chi_a(p + q + r - 2)? - &(&(&chi_a(p - 2)? * &chi_a(q - 2)?) * &chi_a(r - 2)?).shift(2);
    Ok(FrameReport { holds: direct == formula, direct, formula })
}
