use nalgebra::DMatrix;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use super::numeric::{complex_rank, null_vectors, to_dmatrix};
use super::{golden_pair, lambda_from_phi, LambdaPair};
use crate::cartan::CartanData;
use crate::error::{Error, Result};
use crate::exactmath::{rat, RationalMatrix};

/// z = (X, −2FX/(λ + 1)) for both λ attached to φ, where DF·X = φX.
#[derive(Debug, Clone, PartialEq)]
pub struct GenericEigenpair {
    pub phi: f64,
    pub exact_phi: Option<BigRational>,
    pub lambda: LambdaPair,
    pub x: Vec<f64>,
    pub z1: Vec<Complex64>,
    pub z2: Vec<Complex64>,
    /// max ‖Cz − λz‖∞ over the two vectors.
    pub residual: f64,
}

/// An eigenvector z for λ = 1 and an adjoint vector with C·adjoint = z + adjoint.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitPair {
    pub z: Vec<BigRational>,
    pub adjoint: Vec<BigRational>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct EigenBasis {
    pub generic: Vec<GenericEigenpair>,
    pub unit: Vec<UnitPair>,
    /// Basis of ker(C + I).
    pub minus_one: Vec<Vec<BigRational>>,
    /// Numerical rank of all vectors together; equals `dimension` for a basis.
    pub rank: usize,
    pub dimension: usize,
}

impl EigenBasis {
    pub fn max_residual(&self) -> f64 {
        self.generic.iter().map(|g| g.residual).fold(0.0, f64::max)
    }
}

fn residual(c: &DMatrix<Complex64>, z: &[Complex64], lambda: Complex64) -> f64 {
    let v = nalgebra::DVector::from_column_slice(z);
    let r = c * &v - v * lambda;
    r.iter().map(|x| x.norm()).fold(0.0, f64::max)
}

fn to_complex(v: &[BigRational]) -> Vec<Complex64> {
    v.iter().map(|x| Complex64::new(x.to_f64().unwrap_or(f64::NAN), 0.0)).collect()
}

pub fn eigenvector_basis(cd: &CartanData) -> Result<EigenBasis> {
    let n = cd.m + cd.k;
    let c = {
        let two = rat(2);
        let mut c = RationalMatrix::zeros(n, n);
        let df4 = (&cd.d * &cd.f).scale(&rat(4));
        for i in 0..cd.m {
            for j in 0..cd.m {
                let v = df4.get(i, j) - if i == j { rat(1) } else { BigRational::zero() };
                c.set(i, j, v);
            }
            for j in 0..cd.k {
                c.set(i, cd.m + j, cd.d.get(i, j) * &two);
            }
        }
        for i in 0..cd.k {
            for j in 0..cd.m {
                c.set(cd.m + i, j, -(cd.f.get(i, j) * &two));
            }
            c.set(cd.m + i, cd.m + i, rat(-1));
        }
        c
    };
    let c_num: DMatrix<Complex64> = to_dmatrix(&c).map(|x| Complex64::new(x, 0.0));
    let df = to_dmatrix(&(&cd.d * &cd.f));
    let f = to_dmatrix(&cd.f);
    let pair = golden_pair(cd)?;

    let mut generic = Vec::new();
    for root in &pair.spectrum {
        if root.is_exactly(&rat(0)) || root.is_exactly(&rat(1)) {
            continue;
        }
        let phi = root.value();
        let lambda = lambda_from_phi(&root.as_value())?;
        let shifted = &df - DMatrix::identity(cd.m, cd.m) * phi;
        for x in null_vectors(&shifted, root.multiplicity as usize) {
            let fx = &f * &x;
            let build = |l: Complex64| -> Vec<Complex64> {
                let scale = Complex64::new(-2.0, 0.0) / (l + 1.0);
                x.iter()
                    .map(|&v| Complex64::new(v, 0.0))
                    .chain(fx.iter().map(|&v| scale * v))
                    .collect()
            };
            let z1 = build(lambda.lambda1);
            let z2 = build(lambda.lambda2);
            let residual = residual(&c_num, &z1, lambda.lambda1).max(residual(&c_num, &z2, lambda.lambda2));
            generic.push(GenericEigenpair {
                phi,
                exact_phi: root.exact.clone(),
                lambda: lambda.clone(),
                x: x.iter().copied().collect(),
                z1,
                z2,
                residual,
            });
        }
    }

    let id = RationalMatrix::identity(n);
    let c_minus = &c - &id;
    let mut unit = Vec::new();
    for z in c_minus.kernel() {
        let adjoint = c_minus
            .solve(&z)
            .ok_or_else(|| Error::Consistency("no adjoint vector for λ = 1".into()))?;
        if c.mul_vec(&adjoint) != z.iter().zip(&adjoint).map(|(a, b)| a + b).collect::<Vec<_>>() {
            return Err(Error::Consistency("adjoint relation C z̃ = z + z̃ failed".into()));
        }
        unit.push(UnitPair { z, adjoint });
    }
    let minus_one = (&c + &id).kernel();
    for z in &minus_one {
        if c.mul_vec(z) != z.iter().map(|x| -x).collect::<Vec<_>>() {
            return Err(Error::Consistency("C z = −z failed".into()));
        }
    }

    let mut all: Vec<Vec<Complex64>> = Vec::new();
    for g in &generic {
        all.push(g.z1.clone());
        all.push(g.z2.clone());
    }
    for u in &unit {
        all.push(to_complex(&u.z));
        all.push(to_complex(&u.adjoint));
    }
    all.extend(minus_one.iter().map(|z| to_complex(z)));
    let rank = complex_rank(&all, 1e-8);
    Ok(EigenBasis { generic, unit, minus_one, rank, dimension: n })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{build_catalog, kolmykov};
    use crate::exactmath::primitive_integer_vector;
    use crate::spectral::bicolored_data;
    use num_bigint::BigInt;

    fn basis(g: &crate::diagram::ValuedGraph) -> EigenBasis {
        eigenvector_basis(&bicolored_data(g).unwrap().1).unwrap()
    }

    #[test]
    fn d4_tilde_unit_pair() {
        let b = basis(&build_catalog("D4~").unwrap());
        assert_eq!(b.unit.len(), 1);
        let z: Vec<BigInt> = primitive_integer_vector(&b.unit[0].z);
        let z: Vec<i64> = z.iter().map(|x| x.to_string().parse().unwrap()).collect();
        assert!(z == vec![2, 1, 1, 1, 1] || z == vec![-2, -1, -1, -1, -1], "{z:?}");
        assert_eq!(b.rank, 5);
    }

    #[test]
    fn bases_span_the_space() {
        for name in ["E6", "E6~", "D5~", "F41~", "G22~", "T[2,3,7]", "*[6]", "B4", "A5"] {
            let b = basis(&build_catalog(name).unwrap());
            assert_eq!(b.rank, b.dimension, "{name}");
            assert!(b.max_residual() < 1e-8, "{name}");
        }
        let k = basis(&kolmykov(3).unwrap());
        assert_eq!(k.unit.len(), 2);
        assert_eq!(k.rank, k.dimension);
    }

    #[test]
    fn phi_zero_gives_anti_fixed_vectors() {
        // one center against four rays, so φ = 0 occurs
        let b = basis(&build_catalog("*[5]").unwrap());
        assert!(!b.minus_one.is_empty());
    }
}
