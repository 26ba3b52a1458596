//! Reflections, Coxeter transformations and their characteristic polynomials.

mod series;
mod split;

pub use series::{
    affine_an_charpoly, frame_path_check, frame_tpqr_check, spectral_radius, tpqr_series_charpoly,
    tpqr_series_limit, FrameReport, SeriesFamily, SpectralRadius,
};
pub use split::{glue_formula, raw_charpoly_recursive, split_formula, GlueReport};

use num_rational::BigRational;
use num_traits::Zero;

use crate::cartan::cartan_matrix;
use crate::diagram::{Orientation, ValuedGraph};
use crate::error::{Error, Result};
use crate::exactmath::{charpoly_exact, IntPolynomial, RationalMatrix};

/// σ_i = I − e_i·(row i of K).
pub fn reflection(cartan: &RationalMatrix, i: usize) -> RationalMatrix {
    let n = cartan.rows();
    let mut s = RationalMatrix::identity(n);
    for j in 0..n {
        let v = s.get(i, j) - cartan.get(i, j);
        s.set(i, j, v);
    }
    s
}

/// Product of the reflections in `seq`, first element rightmost.
pub fn reflection_word(cartan: &RationalMatrix, seq: &[usize]) -> RationalMatrix {
    seq.iter()
        .fold(RationalMatrix::identity(cartan.rows()), |acc, &v| &reflection(cartan, v) * &acc)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoxeterMatrix {
    pub matrix: RationalMatrix,
    pub orientation: Orientation,
    /// Sink-admissible sequence; its first vertex acts first.
    pub sequence: Vec<usize>,
}

/// C_Δ = σ_{i_n} ⋯ σ_{i_1} along the deterministic sink-admissible sequence.
pub fn coxeter_matrix(g: &ValuedGraph, o: &Orientation) -> Result<CoxeterMatrix> {
    if g.is_cyclic() {
        return Err(Error::Cyclic);
    }
    g.require_forest()?;
    coxeter_matrix_any(g, o)
}

/// Same as `coxeter_matrix` without the tree requirement (acyclic orientations only).
pub(crate) fn coxeter_matrix_any(g: &ValuedGraph, o: &Orientation) -> Result<CoxeterMatrix> {
    let sequence = o.sink_admissible_sequence(g)?;
    let matrix = reflection_word(&cartan_matrix(g), &sequence);
    Ok(CoxeterMatrix { matrix, orientation: o.clone(), sequence })
}

/// (w₁, w₂, C = w₁w₂) for the bicolored orientation.
pub fn bicolored_coxeter(g: &ValuedGraph) -> Result<(RationalMatrix, RationalMatrix, RationalMatrix)> {
    g.require_forest()?;
    let p = crate::diagram::bicolor(g)?;
    let k = cartan_matrix(g);
    let w1 = reflection_word(&k, p.s1());
    let w2 = reflection_word(&k, p.s2());
    let c = &w1 * &w2;
    Ok((w1, w2, c))
}

/// Monic characteristic polynomial of the Coxeter transformation of a forest.
pub fn coxeter_charpoly(g: &ValuedGraph) -> Result<IntPolynomial> {
    if g.is_cyclic() {
        return Err(Error::Domain(
            "the cycle has several Coxeter classes; use affine_an_charpoly(n, k)".into(),
        ));
    }
    let (_, _, c) = bicolored_coxeter(g)?;
    charpoly_exact(&c)
}

/// det(C − λI) = (−1)ⁿ·χ.
pub fn raw_from_normalized(chi: &IntPolynomial, n: usize) -> IntPolynomial {
    if n % 2 == 0 {
        chi.clone()
    } else {
        -chi
    }
}

/// B(Cz) − B(z) for a symmetric B; zero for every z when C preserves the form.
pub fn form_defect(b: &RationalMatrix, c: &RationalMatrix, z: &[BigRational]) -> BigRational {
    let q = |v: &[BigRational]| crate::exactmath::dot(v, &b.mul_vec(v));
    let cz = c.mul_vec(z);
    let d = q(&cz) - q(z);
    if d.is_zero() {
        BigRational::zero()
    } else {
        d
    }
}
