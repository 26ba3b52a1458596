use std::collections::BTreeMap;
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use super::IntPolynomial;
use crate::error::{Error, Result};

fn cache() -> &'static Mutex<HashMap<u32, Arc<IntPolynomial>>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<IntPolynomial>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The d-th cyclotomic polynomial Φ_d, from λ^d − 1 = Π_{e | d} Φ_e.
pub fn cyclotomic_polynomial(d: u32) -> Arc<IntPolynomial> {
    assert!(d > 0, "cyclotomic index must be positive");
    if let Some(p) = cache().lock().unwrap().get(&d) {
        return p.clone();
    }
    let mut p = IntPolynomial::x_pow_minus_one(d as usize);
    for e in 1..d {
        if d % e == 0 {
            p = p
                .div_exact(&cyclotomic_polynomial(e))
                .expect("Φ_e divides λ^d − 1");
        }
    }
    let p = Arc::new(p);
    cache().lock().unwrap().insert(d, p.clone());
    p
}

/// Euler's totient.
pub fn totient(mut n: u32) -> u32 {
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// Cyclotomic part of a polynomial: multiplicities of Φ_d for d ≤ max_order and
/// the cofactor free of those factors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclotomicFactorization {
    pub factors: BTreeMap<u32, u32>,
    pub remainder: IntPolynomial,
}

impl CyclotomicFactorization {
    pub fn is_complete(&self) -> bool {
        self.remainder.degree() == Some(0)
    }

    /// Π Φ_d^{mult} · remainder.
    pub fn expand(&self) -> IntPolynomial {
        self.factors
            .iter()
            .map(|(&d, &m)| cyclotomic_polynomial(d).pow(m))
            .fold(self.remainder.clone(), |acc, f| &acc * &f)
    }

    /// lcm of the orders d present.
    pub fn order_lcm(&self) -> u64 {
        self.factors
            .keys()
            .fold(1u64, |l, &d| num_integer::lcm(l, d as u64))
    }
}

/// Trial division by Φ_d for d = 1..=max_order.
pub fn factor_cyclotomic(p: &IntPolynomial, max_order: u32) -> Result<CyclotomicFactorization> {
    if p.is_zero() {
        return Err(Error::Domain("cannot factor the zero polynomial".into()));
    }
    let mut remainder = p.clone();
    let mut factors = BTreeMap::new();
    for d in 1..=max_order {
        let deg = remainder.degree().unwrap_or(0);
        if deg == 0 {
            break;
        }
        if totient(d) as usize > deg {
            continue;
        }
        let phi = cyclotomic_polynomial(d);
        let mut mult = 0;
        while let Some(q) = remainder.div_exact(&phi) {
            remainder = q;
            mult += 1;
        }
        if mult > 0 {
            factors.insert(d, mult);
        }
    }
    Ok(CyclotomicFactorization { factors, remainder })
}

/// Trial bound 2·deg(p)², enough for every Φ_d with φ(d) ≤ deg(p) since φ(d) ≥ √(d/2).
pub fn factor_cyclotomic_default(p: &IntPolynomial) -> Result<CyclotomicFactorization> {
    let deg = p.degree().unwrap_or(0);
    let bound = (2 * deg * deg).max(1) as u32;
    factor_cyclotomic(p, bound)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    #[test]
    fn small_cyclotomics() {
        assert_eq!(*cyclotomic_polynomial(1), p(&[-1, 1]));
        assert_eq!(*cyclotomic_polynomial(2), p(&[1, 1]));
        assert_eq!(*cyclotomic_polynomial(3), p(&[1, 1, 1]));
        assert_eq!(*cyclotomic_polynomial(4), p(&[1, 0, 1]));
        assert_eq!(*cyclotomic_polynomial(12), p(&[1, 0, -1, 0, 1]));
        assert_eq!(cyclotomic_polynomial(20).degree(), Some(8));
    }

    #[test]
    fn phi3_by_definition() {
        let f = factor_cyclotomic(&p(&[1, 1, 1]), 4).unwrap();
        assert_eq!(f.factors, BTreeMap::from([(3, 1)]));
        assert!(f.remainder.is_one());
    }

    #[test]
    fn affine_e6_polynomial_factors_completely() {
        let cube = IntPolynomial::x_pow_minus_one(3);
        let q = &(&cube * &cube) * &p(&[1, 1]);
        let f = factor_cyclotomic(&q, 14).unwrap();
        assert_eq!(f.factors, BTreeMap::from([(1, 2), (2, 1), (3, 2)]));
        assert!(f.is_complete());
        assert_eq!(f.expand(), q);
    }

    #[test]
    fn lehmer_has_no_cyclotomic_factor() {
        let lehmer = p(&[1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1]);
        // Independent check: no Φ_d with d ≤ 20 leaves a zero remainder.
        for d in 1..=20 {
            assert!(lehmer.div_exact(&cyclotomic_polynomial(d)).is_none(), "Φ_{d}");
        }
        let f = factor_cyclotomic(&lehmer, 20).unwrap();
        assert!(f.factors.is_empty());
        assert_eq!(f.remainder, lehmer);
    }

    #[test]
    fn zero_is_rejected() {
        assert!(matches!(factor_cyclotomic(&IntPolynomial::zero(), 3), Err(Error::Domain(_))));
    }

    #[test]
    fn totients() {
        let expected = [1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4];
        for (i, &t) in expected.iter().enumerate() {
            assert_eq!(totient(i as u32 + 1), t);
        }
    }
}
