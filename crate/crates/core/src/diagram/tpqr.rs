use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TpqrKind {
    Positive,
    Affine,
    Indefinite,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TpqrClass {
    pub kind: TpqrKind,
    /// μ = 1/p + 1/q + 1/r.
    pub mu: BigRational,
    /// Indefinite with every proper subdiagram positive or affine.
    pub hyperbolic: bool,
}

pub fn classify_tpqr(p: usize, q: usize, r: usize) -> Result<TpqrClass> {
    if p == 0 || q == 0 || r == 0 {
        return Err(Error::InvalidParameter("branch lengths must be positive".into()));
    }
    let inv = |k: usize| BigRational::new(BigInt::one(), BigInt::from(k));
    let mu = inv(p) + inv(q) + inv(r);
    let one = BigRational::one();
    let kind = if mu > one {
        TpqrKind::Positive
    } else if mu == one {
        TpqrKind::Affine
    } else {
        TpqrKind::Indefinite
    };
    let mut s = [p, q, r];
    s.sort_unstable();
    let hyperbolic = matches!(s, [2, 3, 7] | [2, 4, 5] | [3, 3, 4]);
    Ok(TpqrClass { kind, mu, hyperbolic })
}
