//! The golden pair DF/FD, the φ–λ correspondence, Jordan structure, eigenbases,
//! Coxeter numbers, root counts and the Chebyshev fixed-point recursions.

mod chebyshev;
mod eigen;
mod numeric;
mod numbers;

pub use chebyshev::{anti_fixed_points_match, chebyshev_fixed_points, ChebyshevReport};
pub use eigen::{eigenvector_basis, EigenBasis, GenericEigenpair, UnitPair};
pub use numbers::{
    coxeter_numbers, exponents_from_charpoly, identify_dynkin, poincare_polynomial, rlh_check,
    root_system_count, weyl_group_order, CoxeterNumbers, RlhCheck, RootCount,
};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::cartan::{assemble_cartan, classify_tits, CartanData, FormClassification, FormKind};
use crate::coxeter::bicolored_coxeter;
use crate::diagram::{bicolored_form, ValuedGraph};
use crate::error::{Error, Result};
use crate::exactmath::{
    charpoly_exact, factor_cyclotomic_default, isolate_real_roots, rat, ratio, IntPolynomial,
    RationalMatrix, RealRootInterval,
};
use crate::exactmath::roots::root_bound;

/// Default isolation width for eigenvalue intervals.
pub fn default_tol() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(10u64).pow(12))
}

/// An eigenvalue of DF with its algebraic multiplicity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhiRoot {
    pub interval: RealRootInterval,
    /// Set when the eigenvalue is rational.
    pub exact: Option<BigRational>,
    pub multiplicity: u32,
}

impl PhiRoot {
    pub fn value(&self) -> f64 {
        match &self.exact {
            Some(q) => q.to_f64().unwrap_or(f64::NAN),
            None => self.interval.value(),
        }
    }

    pub fn is_exactly(&self, q: &BigRational) -> bool {
        self.exact.as_ref() == Some(q)
    }

    pub fn as_value(&self) -> PhiValue {
        match &self.exact {
            Some(q) => PhiValue::Exact(q.clone()),
            None => PhiValue::Interval(self.interval.clone()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PhiValue {
    Exact(BigRational),
    Interval(RealRootInterval),
}

/// The two Coxeter eigenvalues attached to one φ: roots of λ² − (4φ − 2)λ + 1.
#[derive(Debug, Clone, PartialEq)]
pub struct LambdaPair {
    pub lambda1: Complex64,
    pub lambda2: Complex64,
    /// The quadratic above with integer coefficients, when φ is rational.
    pub quadratic: Option<IntPolynomial>,
    /// Certified enclosure of the real λ₁ ≥ 1, when φ is known to exceed 1.
    pub lambda1_bounds: Option<(f64, f64)>,
}

fn lambda_pair_f64(phi: f64) -> (Complex64, Complex64) {
    let a = 2.0 * phi - 1.0;
    let disc = phi * (phi - 1.0);
    if disc >= 0.0 {
        let s = 2.0 * disc.sqrt();
        (Complex64::new(a + s, 0.0), Complex64::new(a - s, 0.0))
    } else {
        let s = 2.0 * (-disc).sqrt();
        (Complex64::new(a, s), Complex64::new(a, -s))
    }
}

/// λ = 2φ − 1 ± 2√(φ(φ − 1)).
pub fn lambda_from_phi(phi: &PhiValue) -> Result<LambdaPair> {
    match phi {
        PhiValue::Exact(q) => {
            if q.is_negative() {
                return Err(Error::Domain(format!("φ = {q} is negative")));
            }
            let (lambda1, lambda2) = lambda_pair_f64(q.to_f64().unwrap_or(f64::NAN));
            let b = -(rat(4) * q - rat(2));
            let quadratic = crate::exactmath::poly::from_rationals(&[rat(1), b, rat(1)]).positive_leading();
            let lambda1_bounds = (q > &rat(1)).then(|| (lambda1.re, lambda1.re));
            Ok(LambdaPair { lambda1, lambda2, quadratic: Some(quadratic), lambda1_bounds })
        }
        PhiValue::Interval(iv) => {
            if iv.high.is_negative() {
                return Err(Error::Domain(format!("φ ≈ {} is negative", iv.value())));
            }
            let (lambda1, lambda2) = lambda_pair_f64(iv.value().max(0.0));
            // λ₁ is increasing in φ on [1, ∞)
            let lambda1_bounds = (iv.low >= rat(1)).then(|| {
                let lo = lambda_pair_f64(iv.low.to_f64().unwrap_or(f64::NAN)).0.re;
                let hi = lambda_pair_f64(iv.high.to_f64().unwrap_or(f64::NAN)).0.re;
                (lo, hi)
            });
            Ok(LambdaPair { lambda1, lambda2, quadratic: None, lambda1_bounds })
        }
    }
}

/// Rational root inside an isolating interval, if there is one. A rational root
/// p/q of an integer polynomial has q dividing the leading coefficient, so it
/// is a convergent of any point within 1/(2q²) (Legendre).
pub fn snap_rational(iv: &RealRootInterval) -> Option<BigRational> {
    if iv.is_exact() {
        return Some(iv.low.clone());
    }
    let lead = iv.polynomial.leading().abs();
    let l = BigRational::from_integer(lead.clone());
    let tol = (&l * &l * rat(4)).recip();
    let mut r = iv.clone();
    r.refine(&tol);
    if r.is_exact() {
        return Some(r.low);
    }
    let x = r.midpoint();
    for c in convergents(&x) {
        if c.denom() > &lead {
            break;
        }
        if c >= r.low && c <= r.high && r.polynomial.eval_rational(&c).is_zero() {
            return Some(c);
        }
    }
    None
}

fn convergents(x: &BigRational) -> Vec<BigRational> {
    let (mut num, mut den) = (x.numer().clone(), x.denom().clone());
    let (mut h0, mut h1) = (BigInt::zero(), BigInt::one());
    let (mut k0, mut k1) = (BigInt::one(), BigInt::zero());
    let mut out = Vec::new();
    while !den.is_zero() {
        let (a, r) = num.div_mod_floor(&den);
        let h = &a * &h1 + &h0;
        let k = &a * &k1 + &k0;
        out.push(BigRational::new(h.clone(), k.clone()));
        h0 = std::mem::replace(&mut h1, h);
        k0 = std::mem::replace(&mut k1, k);
        num = std::mem::replace(&mut den, r);
    }
    out
}

/// Eigenvalues of a matrix with real nonnegative spectrum, ascending, with
/// multiplicities from the squarefree decomposition of its characteristic polynomial.
pub fn phi_spectrum(charpoly: &IntPolynomial, tol: &BigRational) -> Result<Vec<PhiRoot>> {
    let mut out = Vec::new();
    for (factor, multiplicity) in charpoly.squarefree_decomposition() {
        if factor.degree().unwrap_or(0) == 0 {
            continue;
        }
        let high = root_bound(&factor) + rat(1);
        for interval in isolate_real_roots(&factor, &ratio(-1, 2), &high, tol)? {
            let exact = snap_rational(&interval);
            out.push(PhiRoot { interval, exact, multiplicity });
        }
    }
    out.sort_by(|a, b| a.interval.low.cmp(&b.interval.low));
    let total: u32 = out.iter().map(|r| r.multiplicity).sum();
    if total as usize != charpoly.degree().unwrap_or(0) {
        return Err(Error::Consistency("DF has non-real eigenvalues".into()));
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq)]
pub struct GoldenPair {
    /// m×m, acting on the S₁ coordinates.
    pub df: RationalMatrix,
    /// k×k, acting on the S₂ coordinates.
    pub fd: RationalMatrix,
    pub df_charpoly: IntPolynomial,
    pub fd_charpoly: IntPolynomial,
    /// Ascending eigenvalues of DF.
    pub spectrum: Vec<PhiRoot>,
    pub dominant: PhiRoot,
    /// Strictly positive eigenvector of DF for φ₁, largest entry 1.
    pub eigenvector: Vec<f64>,
}

pub fn golden_pair(cd: &CartanData) -> Result<GoldenPair> {
    let df = &cd.d * &cd.f;
    let fd = &cd.f * &cd.d;
    let df_charpoly = charpoly_exact(&df)?;
    let fd_charpoly = charpoly_exact(&fd)?;
    let spectrum = phi_spectrum(&df_charpoly, &default_tol())?;
    let dominant = spectrum.last().cloned().ok_or_else(|| Error::Dimension("empty S1 part".into()))?;
    let eigenvector = if dominant.multiplicity == 1 {
        numeric::perron_vector(&df, dominant.value())
    } else {
        Vec::new()
    };
    Ok(GoldenPair { df, fd, df_charpoly, fd_charpoly, spectrum, dominant, eigenvector })
}

/// Bicolored Cartan data of a forest in any vertex order.
pub fn bicolored_data(g: &ValuedGraph) -> Result<(ValuedGraph, CartanData)> {
    if g.is_cyclic() {
        return Err(Error::Cyclic);
    }
    g.require_forest()?;
    let (h, p) = bicolored_form(g)?;
    let cd = assemble_cartan(&h, &p)?;
    Ok((h, cd))
}

/// χ_C rebuilt from the golden pair: with s = max(m, k) and X = 4DF (or 4FD),
/// λ^s·χ_X((λ + 1)²/λ) = (λ + 1)^{|m − k|}·χ_C(λ).
pub fn charpoly_via_phi(cd: &CartanData) -> Result<IntPolynomial> {
    let big = if cd.m >= cd.k { &cd.d * &cd.f } else { &cd.f * &cd.d };
    let s = cd.m.max(cd.k);
    let chi = charpoly_exact(&big.scale(&rat(4)))?;
    let one_plus = IntPolynomial::from_i64s(&[1, 1]);
    let square = &one_plus * &one_plus;
    let mut acc = IntPolynomial::zero();
    for (j, c) in chi.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let term = square.pow(j as u32).shift(s - j).scale(c);
        acc = &acc + &term;
    }
    let extra = one_plus.pow((cd.m.abs_diff(cd.k)) as u32);
    acc.div_exact(&extra)
        .map(|p| p.positive_leading())
        .ok_or_else(|| Error::Consistency("golden-pair substitution is not divisible".into()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum JordanKind {
    Diagonal,
    /// One 2×2 block at eigenvalue 1 (extended Dynkin diagrams).
    AffineSingle,
    /// `blocks` 2×2 blocks at eigenvalue 1 for an indefinite degenerate form.
    IndefiniteDegenerate { blocks: usize },
}

impl JordanKind {
    pub fn label(&self) -> String {
        match self {
            JordanKind::Diagonal => "diagonal".into(),
            JordanKind::AffineSingle => "affine-single-2x2".into(),
            JordanKind::IndefiniteDegenerate { blocks } => format!("indefinite-{blocks}x-2x2"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Dominant {
    pub phi: PhiRoot,
    pub lambda: LambdaPair,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SpectralReport {
    pub charpoly: IntPolynomial,
    /// Φ_d multiplicities of χ_C.
    pub cyclotomic: std::collections::BTreeMap<u32, u32>,
    /// χ_C with the cyclotomic factors removed.
    pub remainder: IntPolynomial,
    pub real_roots: Vec<RealRootInterval>,
    pub phi: Vec<PhiRoot>,
    pub form: FormClassification,
    pub jordan: JordanKind,
    /// rank(C − I) − rank((C − I)²).
    pub blocks_at_one: usize,
    pub diagonalizable: bool,
    /// Reported when φ₁ > 1.
    pub dominant: Option<Dominant>,
}

pub fn jordan_structure(g: &ValuedGraph) -> Result<SpectralReport> {
    let (h, cd) = bicolored_data(g)?;
    let (_, _, c) = bicolored_coxeter(&h)?;
    let charpoly = charpoly_exact(&c)?;
    let fac = factor_cyclotomic_default(&charpoly)?;
    let real_roots = if fac.remainder.degree().unwrap_or(0) > 0 {
        let b = root_bound(&fac.remainder);
        isolate_real_roots(&fac.remainder, &-b.clone(), &b, &default_tol())?
    } else {
        Vec::new()
    };
    let n = c.rows();
    let c_minus = &c - &RationalMatrix::identity(n);
    let blocks_at_one = c_minus.rank() - (&c_minus * &c_minus).rank();
    let sq = charpoly.squarefree_part();
    let diagonalizable = c.eval_polynomial(&sq) == RationalMatrix::zeros(n, n);
    let form = classify_tits(&cd);
    let jordan = if diagonalizable {
        JordanKind::Diagonal
    } else if form.kind == FormKind::Nonnegative && blocks_at_one == 1 {
        JordanKind::AffineSingle
    } else {
        JordanKind::IndefiniteDegenerate { blocks: blocks_at_one }
    };
    let pair = golden_pair(&cd)?;
    let dominant = if pair.dominant.exact.as_ref().is_some_and(|q| q <= &rat(1)) || pair.dominant.value() < 1.0 {
        None
    } else {
        let lambda = lambda_from_phi(&pair.dominant.as_value())?;
        Some(Dominant { phi: pair.dominant.clone(), lambda })
    };
    Ok(SpectralReport {
        charpoly,
        cyclotomic: fac.factors,
        remainder: fac.remainder,
        real_roots,
        phi: pair.spectrum,
        form,
        jordan,
        blocks_at_one,
        diagonalizable,
        dominant,
    })
}
