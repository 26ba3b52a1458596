use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use super::cyclotomic::{cyclotomic_polynomial, totient};

/// An element of ℚ(ζ_m) in the power basis 1, ζ, …, ζ^{φ(m)−1}.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CyclotomicNumber {
    conductor: u32,
    coords: Vec<BigRational>,
}

impl CyclotomicNumber {
    pub fn zero(conductor: u32) -> Self {
        CyclotomicNumber { conductor, coords: vec![BigRational::zero(); totient(conductor) as usize] }
    }

    pub fn from_rational(conductor: u32, q: BigRational) -> Self {
        let mut z = Self::zero(conductor);
        z.coords[0] = q;
        z
    }

    pub fn from_integer(conductor: u32, n: i64) -> Self {
        Self::from_rational(conductor, BigRational::from_integer(BigInt::from(n)))
    }

    pub fn one(conductor: u32) -> Self {
        Self::from_integer(conductor, 1)
    }

    /// ζ_m^k for any integer k.
    pub fn zeta_pow(conductor: u32, k: i64) -> Self {
        let m = conductor as i64;
        let e = k.rem_euclid(m) as usize;
        let mut raw = vec![BigRational::zero(); e + 1];
        raw[e] = BigRational::one();
        Self::reduce(conductor, raw)
    }

    fn reduce(conductor: u32, mut raw: Vec<BigRational>) -> Self {
        let phi = cyclotomic_polynomial(conductor);
        let d = phi.degree().unwrap();
        let modulus: Vec<BigRational> = phi
            .coeffs()
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect();
        while raw.len() > d {
            let top = raw.pop().unwrap();
            if top.is_zero() {
                continue;
            }
            let base = raw.len() - d;
            for (j, c) in modulus.iter().take(d).enumerate() {
                raw[base + j] -= &top * c;
            }
        }
        raw.resize(d, BigRational::zero());
        CyclotomicNumber { conductor, coords: raw }
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn rational_value(&self) -> Option<BigRational> {
        self.coords[1..]
            .iter()
            .all(Zero::is_zero)
            .then(|| self.coords[0].clone())
    }

    pub fn integer_value(&self) -> Option<BigInt> {
        self.rational_value().filter(|q| q.is_integer()).map(|q| q.to_integer())
    }

    /// Automorphism ζ ↦ ζ^k, gcd(k, m) = 1.
    pub fn galois(&self, k: i64) -> Self {
        let m = self.conductor as i64;
        assert_eq!(k.rem_euclid(m).gcd(&m), 1, "Galois exponent must be a unit");
        let mut out = Self::zero(self.conductor);
        for (j, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let term = Self::zeta_pow(self.conductor, j as i64 * k).scale(c);
            out = &out + &term;
        }
        out
    }

    /// Complex conjugation, ζ ↦ ζ^{m−1}.
    pub fn conj(&self) -> Self {
        self.galois(self.conductor as i64 - 1)
    }

    /// The same number written in ℚ(ζ_M) for a multiple M of the conductor.
    pub fn embed(&self, target: u32) -> Self {
        assert_eq!(target % self.conductor, 0, "target conductor must be a multiple");
        let step = (target / self.conductor) as i64;
        let mut out = Self::zero(target);
        for (j, c) in self.coords.iter().enumerate() {
            if !c.is_zero() {
                out = &out + &Self::zeta_pow(target, j as i64 * step).scale(c);
            }
        }
        out
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        CyclotomicNumber { conductor: self.conductor, coords: self.coords.iter().map(|c| c * q).collect() }
    }

    pub fn to_complex(&self) -> Complex64 {
        let m = self.conductor as f64;
        self.coords
            .iter()
            .enumerate()
            .map(|(j, c)| {
                let theta = 2.0 * std::f64::consts::PI * j as f64 / m;
                Complex64::from_polar(1.0, theta) * c.to_f64().unwrap_or(f64::NAN)
            })
            .sum()
    }

    fn lift_pair(a: &Self, b: &Self) -> (Self, Self) {
        if a.conductor == b.conductor {
            return (a.clone(), b.clone());
        }
        let l = a.conductor.lcm(&b.conductor);
        (a.embed(l), b.embed(l))
    }
}

impl Add for &CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn add(self, rhs: &CyclotomicNumber) -> CyclotomicNumber {
        if self.conductor != rhs.conductor {
            let (a, b) = CyclotomicNumber::lift_pair(self, rhs);
            return &a + &b;
        }
        CyclotomicNumber {
            conductor: self.conductor,
            coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn sub(self, rhs: &CyclotomicNumber) -> CyclotomicNumber {
        self + &(-rhs)
    }
}

impl Neg for &CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn neg(self) -> CyclotomicNumber {
        CyclotomicNumber { conductor: self.conductor, coords: self.coords.iter().map(|c| -c).collect() }
    }
}

impl Mul for &CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn mul(self, rhs: &CyclotomicNumber) -> CyclotomicNumber {
        if self.conductor != rhs.conductor {
            let (a, b) = CyclotomicNumber::lift_pair(self, rhs);
            return &a * &b;
        }
        let n = self.coords.len();
        let mut raw = vec![BigRational::zero(); 2 * n - 1];
        for (i, a) in self.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coords.iter().enumerate() {
                if !b.is_zero() {
                    raw[i + j] += a * b;
                }
            }
        }
        CyclotomicNumber::reduce(self.conductor, raw)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for CyclotomicNumber {
            type Output = CyclotomicNumber;
            fn $m(self, rhs: CyclotomicNumber) -> CyclotomicNumber {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&CyclotomicNumber> for CyclotomicNumber {
            type Output = CyclotomicNumber;
            fn $m(self, rhs: &CyclotomicNumber) -> CyclotomicNumber {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl std::iter::Sum for CyclotomicNumber {
    fn sum<I: Iterator<Item = CyclotomicNumber>>(iter: I) -> Self {
        let mut acc: Option<CyclotomicNumber> = None;
        for x in iter {
            acc = Some(match acc {
                None => x,
                Some(a) => &a + &x,
            });
        }
        acc.unwrap_or_else(|| CyclotomicNumber::zero(1))
    }
}

impl fmt::Debug for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(q) = self.rational_value() {
            return write!(f, "{q}");
        }
        let mut terms = Vec::new();
        for (j, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let z = match j {
                0 => String::new(),
                1 => format!("z{}", self.conductor),
                _ => format!("z{}^{}", self.conductor, j),
            };
            terms.push(match (z.is_empty(), c.is_one()) {
                (true, _) => c.to_string(),
                (false, true) => z,
                (false, false) if *c == -BigRational::one() => format!("-{z}"),
                (false, false) => format!("{c}*{z}"),
            });
        }
        write!(f, "{}", terms.join(" + ").replace("+ -", "- "))
    }
}
