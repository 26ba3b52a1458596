use num_bigint::{BigInt, Sign};
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::cyclotomic::factor_cyclotomic_default;
use super::IntPolynomial;
use crate::error::{Error, Result};

/// An isolating interval: `polynomial` has exactly one real root in (low, high),
/// or the root is exactly `low == high`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealRootInterval {
    pub low: BigRational,
    pub high: BigRational,
    pub polynomial: IntPolynomial,
}

impl RealRootInterval {
    pub fn midpoint(&self) -> BigRational {
        (&self.low + &self.high) / BigRational::from_integer(2.into())
    }

    pub fn value(&self) -> f64 {
        self.midpoint().to_f64().unwrap_or(f64::NAN)
    }

    pub fn width(&self) -> BigRational {
        &self.high - &self.low
    }

    pub fn is_exact(&self) -> bool {
        self.low == self.high
    }

    /// Bisects until the width is at most `tol`. The Descartes bound has the
    /// parity of the true root count, so an odd bound marks the half holding the root.
    pub fn refine(&mut self, tol: &BigRational) {
        let sq = self.polynomial.squarefree_part();
        while !self.is_exact() && &self.width() > tol {
            let mid = self.midpoint();
            if sq.sign_at(&mid) == Sign::NoSign {
                self.low = mid.clone();
                self.high = mid;
            } else if descartes_bound(&sq, &self.low, &mid) % 2 == 1 {
                self.high = mid;
            } else {
                self.low = mid;
            }
        }
    }
}

/// Upper bound (exact when 0 or 1) on the number of roots in (a, b), counting
/// multiplicity: sign variations of (1+x)^n p((a + b x)/(1 + x)).
pub fn descartes_bound(p: &IntPolynomial, a: &BigRational, b: &BigRational) -> usize {
    let on_unit = p.affine_substitute(a, &(b - a));
    on_unit.reversed().taylor_shift_one().sign_variations()
}

/// Cauchy bound: every complex root has modulus < 1 + max |c_i / c_n|.
pub fn root_bound(p: &IntPolynomial) -> BigRational {
    let lead = BigRational::from_integer(p.leading().abs());
    let max = p.coeffs()[..p.coeffs().len().saturating_sub(1)]
        .iter()
        .map(|c| BigRational::from_integer(c.abs()))
        .max()
        .unwrap_or_else(BigRational::zero);
    BigRational::one() + max / lead
}

/// Real roots of `p` in the open interval (low, high), one interval each,
/// ordered, each refined to width ≤ tol.
pub fn isolate_real_roots(
    p: &IntPolynomial,
    low: &BigRational,
    high: &BigRational,
    tol: &BigRational,
) -> Result<Vec<RealRootInterval>> {
    if !tol.is_positive() {
        return Err(Error::InvalidParameter("tolerance must be positive".into()));
    }
    if low >= high {
        return Err(Error::InvalidParameter("empty search interval".into()));
    }
    if p.degree().unwrap_or(0) == 0 {
        return Ok(Vec::new());
    }
    let sq = p.squarefree_part();
    let mut found = Vec::new();
    let mut stack = vec![(low.clone(), high.clone())];
    let two = BigRational::from_integer(2.into());
    while let Some((a, b)) = stack.pop() {
        match descartes_bound(&sq, &a, &b) {
            0 => {}
            1 => found.push((a, b)),
            _ => {
                let mid = (&a + &b) / &two;
                if sq.sign_at(&mid) == Sign::NoSign {
                    let mut delta = (&b - &a) / BigRational::from_integer(4.into());
                    loop {
                        let (l, h) = (&mid - &delta, &mid + &delta);
                        if descartes_bound(&sq, &l, &h) == 1
                            && sq.sign_at(&l) != Sign::NoSign
                            && sq.sign_at(&h) != Sign::NoSign
                        {
                            found.push((mid.clone(), mid.clone()));
                            stack.push((a.clone(), l));
                            stack.push((h, b.clone()));
                            break;
                        }
                        delta = delta / &two;
                    }
                } else {
                    stack.push((a, mid.clone()));
                    stack.push((mid, b));
                }
            }
        }
    }
    found.sort_by(|x, y| x.0.cmp(&y.0));
    Ok(found
        .into_iter()
        .map(|(low, high)| {
            let mut r = RealRootInterval { low, high, polynomial: sq.clone() };
            r.refine(tol);
            r
        })
        .collect())
}

/// Largest real root exceeding 1, if any.
pub fn largest_root_above_one(p: &IntPolynomial, tol: &BigRational) -> Result<Option<RealRootInterval>> {
    let bound = root_bound(p);
    let one = BigRational::one();
    if bound <= one {
        return Ok(None);
    }
    Ok(isolate_real_roots(p, &one, &bound, tol)?.pop())
}

/// All complex roots by the Aberth–Ehrlich iteration in double precision.
pub fn complex_roots(p: &IntPolynomial) -> Vec<Complex64> {
    let Some(n) = p.degree() else { return Vec::new() };
    if n == 0 {
        return Vec::new();
    }
    let lead = p.leading().to_f64().unwrap_or(1.0);
    let monic: Vec<f64> = p.coeffs().iter().map(|c| c.to_f64().unwrap_or(0.0) / lead).collect();
    let eval = |z: Complex64| -> (Complex64, Complex64) {
        let mut v = Complex64::new(0.0, 0.0);
        let mut d = Complex64::new(0.0, 0.0);
        for &c in monic.iter().rev() {
            d = d * z + v;
            v = v * z + c;
        }
        (v, d)
    };
    let radius = root_bound(p).to_f64().unwrap_or(2.0).min(1e6);
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| Complex64::from_polar(radius * 0.5 + 0.1, 0.4 + 2.0 * std::f64::consts::PI * k as f64 / n as f64))
        .collect();
    for _ in 0..500 {
        let mut moved = 0.0f64;
        for i in 0..n {
            let (v, d) = eval(z[i]);
            if v.norm() == 0.0 {
                continue;
            }
            let ratio = v / d;
            let repulsion: Complex64 = (0..n)
                .filter(|&j| j != i)
                .map(|j| {
                    let diff = z[i] - z[j];
                    if diff.norm() == 0.0 { Complex64::new(0.0, 0.0) } else { diff.inv() }
                })
                .sum();
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
            if step.is_finite() {
                z[i] -= step;
                moved = moved.max(step.norm());
            }
        }
        if moved < 1e-15 {
            break;
        }
    }
    z
}

/// M(p) = |lead| · Π max(1, |r|). Cyclotomic factors are removed exactly, real
/// roots are isolated exactly, non-real roots come from Aberth iteration.
pub fn mahler_measure(p: &IntPolynomial, tol: &BigRational) -> Result<f64> {
    if p.is_zero() {
        return Err(Error::Domain("Mahler measure of the zero polynomial".into()));
    }
    let lead = p.leading().abs().to_f64().unwrap_or(f64::INFINITY);
    let rest = factor_cyclotomic_default(p)?.remainder;
    if rest.degree().unwrap_or(0) == 0 {
        return Ok(lead);
    }
    let mut measure = lead;
    let bound = root_bound(&rest);
    let fine = tol.clone().min(BigRational::new(BigInt::one(), BigInt::from(10u64.pow(12))));
    for (factor, mult) in rest.squarefree_decomposition() {
        let reals = isolate_real_roots(&factor, &-&bound, &bound, &fine)?;
        for r in &reals {
            let v = r.value().abs();
            if v > 1.0 {
                measure *= v.powi(mult as i32);
            }
        }
        let mut roots = complex_roots(&factor);
        roots.sort_by(|a, b| b.im.abs().total_cmp(&a.im.abs()));
        roots.truncate(factor.degree().unwrap_or(0) - reals.len());
        for z in roots {
            if z.norm() > 1.0 {
                measure *= z.norm().powi(mult as i32);
            }
        }
    }
    Ok(measure)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    /// Sturm-sequence root count on (a, b], used as an independent oracle.
    fn sturm_count(f: &IntPolynomial, a: &BigRational, b: &BigRational) -> usize {
        let sq = f.squarefree_part();
        let mut seq: Vec<Vec<BigRational>> = vec![
            sq.coeffs().iter().map(|c| BigRational::from_integer(c.clone())).collect(),
            sq.derivative().coeffs().iter().map(|c| BigRational::from_integer(c.clone())).collect(),
        ];
        loop {
            let (x, y) = (&seq[seq.len() - 2], &seq[seq.len() - 1]);
            if y.is_empty() {
                seq.pop();
                break;
            }
            let mut r = x.clone();
            while r.len() >= y.len() && !r.is_empty() {
                let f = r.last().unwrap() / y.last().unwrap();
                let off = r.len() - y.len();
                for (j, c) in y.iter().enumerate() {
                    r[off + j] -= &f * c;
                }
                r.pop();
                while r.last().is_some_and(Zero::is_zero) {
                    r.pop();
                }
            }
            let neg: Vec<BigRational> = r.iter().map(|c| -c).collect();
            if neg.is_empty() {
                break;
            }
            seq.push(neg);
        }
        let variations = |x: &BigRational| {
            let signs: Vec<i8> = seq
                .iter()
                .map(|c| {
                    let v: BigRational = c.iter().rev().fold(BigRational::zero(), |acc, k| acc * x + k);
                    if v.is_positive() { 1 } else if v.is_negative() { -1 } else { 0 }
                })
                .filter(|&s| s != 0)
                .collect();
            signs.windows(2).filter(|w| w[0] != w[1]).count()
        };
        variations(a) - variations(b)
    }

    #[test]
    fn zhang_number() {
        let f = p(&[-1, -1, 0, 1]);
        let roots = isolate_real_roots(&f, &q(1, 1), &q(2, 1), &q(1, 1_000_000)).unwrap();
        assert_eq!(roots.len(), 1);
        assert!((roots[0].value() - 1.324717).abs() < 1e-6);
        assert!(roots[0].width() <= q(1, 1_000_000));
    }

    #[test]
    fn golden_ratio() {
        let roots = isolate_real_roots(&p(&[-1, -1, 1]), &q(1, 1), &q(2, 1), &q(1, 100_000_000)).unwrap();
        assert_eq!(roots.len(), 1);
        assert!((roots[0].value() - 1.618034).abs() < 1e-6);
    }

    #[test]
    fn no_real_roots() {
        assert!(isolate_real_roots(&p(&[1, 0, 1]), &q(1, 1), &q(2, 1), &q(1, 1000)).unwrap().is_empty());
    }

    #[test]
    fn rational_roots_on_split_points() {
        // (2λ − 1)(λ − 1)(λ + 1)² on (−3, 3) has roots −1, 1/2, 1.
        let f = &(&p(&[-1, 2]) * &p(&[-1, 1])) * &p(&[1, 1]).pow(2);
        let roots = isolate_real_roots(&f, &q(-3, 1), &q(3, 1), &q(1, 1000)).unwrap();
        let vals: Vec<f64> = roots.iter().map(|r| r.value()).collect();
        assert_eq!(vals.len(), 3);
        assert!((vals[0] + 1.0).abs() < 1e-3 && (vals[1] - 0.5).abs() < 1e-3 && (vals[2] - 1.0).abs() < 1e-3);
        // roots exactly at the endpoints are excluded
        assert_eq!(isolate_real_roots(&f, &q(1, 2), &q(1, 1), &q(1, 10)).unwrap().len(), 0);
    }

    #[test]
    fn agrees_with_sturm_on_lehmer() {
        let lehmer = p(&[1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1]);
        for (a, b) in [(q(-3, 1), q(3, 1)), (q(1, 1), q(2, 1)), (q(-2, 1), q(0, 1))] {
            let n = isolate_real_roots(&lehmer, &a, &b, &q(1, 1000)).unwrap().len();
            assert_eq!(n, sturm_count(&lehmer, &a, &b));
        }
    }

    #[test]
    fn mahler_measures() {
        let tol = q(1, 100_000_000);
        let phi12 = p(&[1, 0, -1, 0, 1]);
        assert!((mahler_measure(&phi12, &tol).unwrap() - 1.0).abs() < 1e-12);
        let lehmer = p(&[1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1]);
        assert!((mahler_measure(&lehmer, &tol).unwrap() - 1.176281).abs() < 1e-6);
        assert!((mahler_measure(&p(&[-1, -1, 1]), &tol).unwrap() - 1.618034).abs() < 1e-6);
        // complex pair outside the circle: λ² + 4 has M = 4
        assert!((mahler_measure(&p(&[4, 0, 1]), &tol).unwrap() - 4.0).abs() < 1e-9);
    }

    proptest::proptest! {
        #[test]
        fn isolation_count_matches_sturm(coeffs in proptest::collection::vec(-6i64..=6, 2..8)) {
            let f = p(&coeffs);
            proptest::prop_assume!(f.degree().unwrap_or(0) >= 1);
            let (a, b) = (q(-7, 3), q(11, 4));
            proptest::prop_assume!(f.sign_at(&a) != Sign::NoSign && f.sign_at(&b) != Sign::NoSign);
            let n = isolate_real_roots(&f, &a, &b, &q(1, 100)).unwrap().len();
            proptest::prop_assert_eq!(n, sturm_count(&f, &a, &b));
        }
    }
}
