//! Cartan matrix K, symmetrizer T, Tits form B and the bicolored blocks D, F.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::diagram::{BipartitePartition, ValuedGraph};
use crate::error::{Error, Result};
use crate::exactmath::{primitive_integer_vector, rat, RationalMatrix};

/// K with K_ii = 2 and K_ij = −d_ij, in vertex order.
pub fn cartan_matrix(g: &ValuedGraph) -> RationalMatrix {
    let n = g.vertex_count();
    let mut k = RationalMatrix::from_fn(n, n, |i, j| if i == j { rat(2) } else { BigRational::zero() });
    for e in g.edges() {
        k.set(e.u, e.v, rat(-(e.d_uv as i64)));
        k.set(e.v, e.u, rat(-(e.d_vu as i64)));
    }
    k
}

/// T = diag(2f), so that B = T⁻¹K is symmetric and K = 2B when simply laced.
pub fn symmetrizer(g: &ValuedGraph) -> RationalMatrix {
    let d: Vec<BigRational> = g.weights().iter().map(|&f| rat(2 * f as i64)).collect();
    RationalMatrix::diagonal(&d)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanData {
    pub m: usize,
    pub k: usize,
    pub cartan: RationalMatrix,
    pub t: RationalMatrix,
    pub b: RationalMatrix,
    /// m×k block: K = [[2I, 2D], [2F, 2I]].
    pub d: RationalMatrix,
    /// k×m block.
    pub f: RationalMatrix,
    pub partition: BipartitePartition,
}

/// The graph must already list S₁ before S₂ (see `diagram::bicolored_form`).
pub fn assemble_cartan(g: &ValuedGraph, part: &BipartitePartition) -> Result<CartanData> {
    if !part.is_consistent(g) {
        return Err(Error::InvalidParameter("partition inconsistent with the graph".into()));
    }
    if !part.is_leading() {
        return Err(Error::InvalidParameter("vertices must be ordered S1 first".into()));
    }
    let (m, k) = (part.m(), part.k());
    let cartan = cartan_matrix(g);
    let t = symmetrizer(g);
    let t_inv = t.inverse().expect("T is invertible");
    let b = &t_inv * &cartan;
    if !b.is_symmetric() || &t * &b != cartan {
        return Err(Error::Consistency("K = T·B with B symmetric failed".into()));
    }
    let half = BigRational::new(1.into(), 2.into());
    let d = cartan.submatrix(0, m, m, k).scale(&half);
    let f = cartan.submatrix(m, 0, k, m).scale(&half);
    Ok(CartanData { m, k, cartan, t, b, d, f, partition: part.clone() })
}

/// Bicolors (the graph must be a forest already in bicolored order) and assembles.
pub fn cartan_data(g: &ValuedGraph) -> Result<CartanData> {
    g.require_forest()?;
    let p = crate::diagram::bicolor(g)?;
    assemble_cartan(g, &p)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FormKind {
    PositiveDefinite,
    Nonnegative,
    Indefinite,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FormClassification {
    pub kind: FormKind,
    pub corank: usize,
    /// (positive, negative, zero) counts.
    pub signature: (usize, usize, usize),
}

impl FormClassification {
    pub fn label(&self) -> String {
        match self.kind {
            FormKind::PositiveDefinite => "positive-definite".into(),
            FormKind::Nonnegative => format!("nonnegative-corank-{}", self.corank),
            FormKind::Indefinite => "indefinite".into(),
        }
    }
}

/// Signature of a symmetric matrix by exact congruence diagonalization.
pub fn signature(b: &RationalMatrix) -> Result<(usize, usize, usize)> {
    let diag = b.congruence_diagonal()?;
    let pos = diag.iter().filter(|x| x.is_positive()).count();
    let neg = diag.iter().filter(|x| x.is_negative()).count();
    Ok((pos, neg, diag.len() - pos - neg))
}

pub fn classify_form(b: &RationalMatrix) -> Result<FormClassification> {
    let signature = signature(b)?;
    let (_, neg, zero) = signature;
    let kind = match (neg, zero) {
        (0, 0) => FormKind::PositiveDefinite,
        (0, _) => FormKind::Nonnegative,
        _ => FormKind::Indefinite,
    };
    Ok(FormClassification { kind, corank: zero, signature })
}

pub fn classify_tits(cd: &CartanData) -> FormClassification {
    classify_form(&cd.b).expect("B is symmetric")
}

/// Tits form of any valued graph (no partition needed).
pub fn tits_form(g: &ValuedGraph) -> RationalMatrix {
    &symmetrizer(g).inverse().expect("T is invertible") * &cartan_matrix(g)
}

/// B(z) = zᵀBz.
pub fn quadratic_value(b: &RationalMatrix, z: &[BigRational]) -> BigRational {
    crate::exactmath::dot(z, &b.mul_vec(z))
}

/// The strictly positive primitive generator of ker K when ker K is one-dimensional.
pub fn nilroot(cartan: &RationalMatrix) -> Option<Vec<i64>> {
    let ker = cartan.kernel();
    if ker.len() != 1 {
        return None;
    }
    let mut v = primitive_integer_vector(&ker[0]);
    if v.iter().any(|x| x.is_negative()) && v.iter().any(|x| x.is_positive()) {
        return None;
    }
    if v.iter().any(BigInt::is_zero) {
        return None;
    }
    if v[0].is_negative() {
        v.iter_mut().for_each(|x| *x = -x.clone());
    }
    v.iter().map(|x| x.to_i64()).collect()
}

pub fn nilroot_kernel(cd: &CartanData) -> Option<Vec<i64>> {
    nilroot(&cd.cartan)
}

/// Nil-root of any extended diagram, including the flagged cycle.
pub fn graph_nilroot(g: &ValuedGraph) -> Option<Vec<i64>> {
    nilroot(&cartan_matrix(g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{build_catalog, dual_graph};
    use crate::exactmath::ratio;
    use proptest::prelude::*;

    fn cd(name: &str) -> CartanData {
        cartan_data(&build_catalog(name).unwrap()).unwrap()
    }

    fn rows(m: &RationalMatrix) -> Vec<Vec<i64>> {
        m.to_i64_rows().unwrap()
    }

    #[test]
    fn small_cartan_matrices() {
        assert_eq!(rows(&cd("A2").cartan), vec![vec![2, -1], vec![-1, 2]]);
        assert_eq!(rows(&cd("G2").cartan), vec![vec![2, -3], vec![-1, 2]]);
        assert_eq!(rows(&cd("A11~").cartan), vec![vec![2, -4], vec![-1, 2]]);
    }

    #[test]
    fn simply_laced_blocks() {
        let c = cd("E6~");
        assert_eq!(c.f, c.d.transpose());
        assert_eq!(c.cartan, c.b.scale(&rat(2)));
        let g = cd("G2");
        assert_ne!(g.f, g.d.transpose());
        assert_eq!(g.d.get(0, 0), &ratio(-3, 2));
    }

    #[test]
    fn tits_classification() {
        assert_eq!(classify_tits(&cd("E8")).kind, FormKind::PositiveDefinite);
        let e8a = classify_tits(&cd("E8~"));
        assert_eq!((e8a.kind, e8a.corank), (FormKind::Nonnegative, 1));
        assert_eq!(e8a.label(), "nonnegative-corank-1");
        let t = classify_tits(&cd("T[2,3,7]"));
        assert_eq!((t.kind, t.signature), (FormKind::Indefinite, (9, 1, 0)));
    }

    #[test]
    fn nilroots() {
        assert_eq!(nilroot_kernel(&cd("E6~")), Some(vec![3, 1, 1, 1, 2, 2, 2]));
        assert_eq!(nilroot_kernel(&cd("D4~")), Some(vec![2, 1, 1, 1, 1]));
        assert_eq!(nilroot_kernel(&cd("G22~")), Some(vec![2, 1, 3]));
        assert_eq!(nilroot_kernel(&cd("G21~")), Some(vec![2, 1, 1]));
        assert_eq!(nilroot_kernel(&cd("E8")), None);
        assert_eq!(graph_nilroot(&build_catalog("A[4]~").unwrap()), Some(vec![1; 5]));
    }

    #[test]
    fn every_extended_diagram_has_corank_one_and_positive_kernel() {
        for name in crate::diagram::extended_names(7) {
            let c = cd(&name);
            let cls = classify_tits(&c);
            assert_eq!((cls.kind, cls.corank), (FormKind::Nonnegative, 1), "{name}");
            assert!(nilroot_kernel(&c).is_some(), "{name}");
            assert_eq!(c.cartan.kernel().len(), c.b.kernel().len());
        }
    }

    #[test]
    fn dual_tits_form_is_tbt_up_to_scale() {
        for name in ["G22~", "F41~", "CD5~", "B4~", "BC3~"] {
            let g = build_catalog(name).unwrap();
            let c = cd(name);
            let bd = tits_form(&dual_graph(&g));
            let tbt = &(&c.t * &c.b) * &c.t;
            let s = bd.get(0, 0) / tbt.get(0, 0);
            assert_eq!(tbt.scale(&s), bd, "{name}");
        }
    }

    proptest! {
        #[test]
        fn schwarz_inequality_on_extended(x in prop::collection::vec(-6i64..6, 7), y in prop::collection::vec(-6i64..6, 7)) {
            let c = cd("E6~");
            let xs: Vec<BigRational> = x.iter().map(|&v| rat(v)).collect();
            let ys: Vec<BigRational> = y.iter().map(|&v| rat(v)).collect();
            let xy = crate::exactmath::dot(&xs, &c.b.mul_vec(&ys));
            prop_assert!(&xy * &xy <= quadratic_value(&c.b, &xs) * quadratic_value(&c.b, &ys));
        }
    }
}
