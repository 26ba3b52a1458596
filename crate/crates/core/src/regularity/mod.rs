//! Defect forms, transforming elements and regularity of dimension vectors.

mod defect;
mod transform;

pub use defect::{
    defect_form, dlab_ringel_defect, dual_conjugate_vector, extension_vertex, orthogonal_to_nil, proportionality, DefectConstruction,
    DefectForm,
};
pub use transform::{canonical_words, heights, transforming_element, verify_transform, TransformingElement};

use std::collections::{BTreeSet, VecDeque};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::cartan::{assemble_cartan, cartan_matrix, classify_form, graph_nilroot, tits_form, FormKind};
use crate::coxeter::coxeter_matrix;
use crate::diagram::{bicolor, BipartitePartition, Orientation, ValuedGraph};
use crate::error::{Error, Result};
use crate::exactmath::{rat, RationalMatrix};
use crate::spectral::{coxeter_numbers, golden_pair, lambda_from_phi};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RootKind {
    /// In the Weyl orbit of the simple root at `simple`.
    Real { simple: usize },
    /// A positive multiple of the nil-root.
    Imaginary { multiple: i64 },
    NotARoot,
}

fn int_cartan(g: &ValuedGraph) -> Vec<Vec<i64>> {
    cartan_matrix(g).to_i64_rows().expect("Cartan matrix is integral")
}

fn apply(m: &[Vec<i64>], z: &[i64]) -> Vec<i64> {
    m.iter().map(|row| row.iter().zip(z).map(|(a, b)| a * b).sum()).collect()
}

/// Root membership of a nonnegative vector by descent through simple reflections.
pub fn root_kind(g: &ValuedGraph, z: &[i64]) -> Result<RootKind> {
    let n = g.vertex_count();
    if z.len() != n {
        return Err(Error::Dimension(format!("vector has {} entries, diagram has {n} vertices", z.len())));
    }
    let k = int_cartan(g);
    let nil = graph_nilroot(g);
    let mut z = z.to_vec();
    loop {
        if z.iter().any(|&x| x < 0) || z.iter().all(|&x| x == 0) {
            return Ok(RootKind::NotARoot);
        }
        let support: Vec<usize> = (0..n).filter(|&i| z[i] != 0).collect();
        if support.len() == 1 && z[support[0]] == 1 {
            return Ok(RootKind::Real { simple: support[0] });
        }
        let kz = apply(&k, &z);
        match (0..n).find(|&i| kz[i] > 0) {
            Some(i) => z[i] -= kz[i],
            None => {
                if kz.iter().all(|&x| x == 0) {
                    if let Some(nil) = &nil {
                        let multiple = z[0] / nil[0];
                        if z.iter().zip(nil).all(|(a, b)| *a == multiple * b) {
                            return Ok(RootKind::Imaginary { multiple });
                        }
                    }
                }
                return Ok(RootKind::NotARoot);
            }
        }
    }
}

/// Positive real roots of height at most `max_height`, by ascent from the simple roots.
pub fn positive_real_roots(g: &ValuedGraph, max_height: i64) -> Vec<Vec<i64>> {
    let n = g.vertex_count();
    let k = int_cartan(g);
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    for i in 0..n {
        let mut e = vec![0; n];
        e[i] = 1;
        seen.insert(e.clone());
        queue.push_back(e);
    }
    while let Some(z) = queue.pop_front() {
        let kz = apply(&k, &z);
        for i in 0..n {
            if kz[i] < 0 {
                let mut w = z.clone();
                w[i] -= kz[i];
                if w.iter().sum::<i64>() <= max_height && seen.insert(w.clone()) {
                    queue.push_back(w);
                }
            }
        }
    }
    let mut out: Vec<Vec<i64>> = seen.into_iter().collect();
    out.sort_by_key(|z| (z.iter().sum::<i64>(), z.clone()));
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Regular,
    NotRegular,
    NotARoot,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RegularityReport {
    pub verdict: Verdict,
    pub kind: RootKind,
    #[serde(serialize_with = "ser_bigint")]
    pub defect: BigInt,
    /// A k with C^k z having a negative coordinate.
    pub witness: Option<i64>,
    /// C^k z ≥ 0 was confirmed for |k| ≤ this bound.
    pub checked: u32,
}

fn ser_bigint<S: serde::Serializer>(v: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v.to_i64() {
        Some(x) => s.serialize_i64(x),
        None => s.serialize_str(&v.to_string()),
    }
}

fn coxeter_pair(g: &ValuedGraph, o: &Orientation) -> Result<(Vec<Vec<i64>>, Vec<Vec<i64>>)> {
    let c = coxeter_matrix(g, o)?.matrix;
    let inv = c.inverse().ok_or_else(|| Error::Consistency("C is singular".into()))?;
    let int = |m: &RationalMatrix| m.to_i64_rows().ok_or_else(|| Error::Consistency("C is not integral".into()));
    Ok((int(&c)?, int(&inv)?))
}

/// First k in 1, −1, 2, −2, … with C^k z having a negative coordinate.
fn negative_power(c: &[Vec<i64>], c_inv: &[Vec<i64>], z: &[i64], limit: u32) -> Option<i64> {
    let (mut up, mut down) = (z.to_vec(), z.to_vec());
    for k in 1..=limit as i64 {
        up = apply(c, &up);
        if up.iter().any(|&x| x < 0) {
            return Some(k);
        }
        down = apply(c_inv, &down);
        if down.iter().any(|&x| x < 0) {
            return Some(-k);
        }
    }
    None
}

/// Classifies z for an extended diagram: roots are regular exactly when the defect vanishes.
/// Regular verdicts are confirmed by C^k z ≥ 0 for |k| ≤ `k_max`; non-regular ones carry
/// a witness k.
pub fn is_regular(g: &ValuedGraph, o: &Orientation, z: &[i64], k_max: u32) -> Result<RegularityReport> {
    let form = defect_form(g, o)?;
    let kind = root_kind(g, z)?;
    let defect = form.value(z);
    if kind == RootKind::NotARoot {
        return Ok(RegularityReport { verdict: Verdict::NotARoot, kind, defect, witness: None, checked: 0 });
    }
    let (c, c_inv) = coxeter_pair(g, o)?;
    if defect.is_zero() {
        if let Some(k) = negative_power(&c, &c_inv, z, k_max) {
            return Err(Error::Consistency(format!("zero defect but C^{k} z has a negative coordinate")));
        }
        return Ok(RegularityReport { verdict: Verdict::Regular, kind, defect, witness: None, checked: k_max });
    }
    let h_a = coxeter_numbers(g)?.h_a.unwrap_or(1) as u32;
    let limit = k_max.max(4 * h_a * (z.iter().sum::<i64>() as u32 + 1));
    let witness = negative_power(&c, &c_inv, z, limit)
        .ok_or_else(|| Error::Consistency("nonzero defect without a negative Coxeter image".into()))?;
    Ok(RegularityReport { verdict: Verdict::NotRegular, kind, defect, witness: Some(witness), checked: 0 })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DlabRingelShift {
    pub h_a: u64,
    /// s with C^{h_a} z − z = s·z¹.
    pub shift: BigRational,
    pub defect: BigInt,
}

impl DlabRingelShift {
    /// s / (h_a·ρ(z)); the same for every z with ρ(z) ≠ 0.
    pub fn constant(&self) -> Option<BigRational> {
        (!self.defect.is_zero())
            .then(|| &self.shift / BigRational::from_integer(&self.defect * BigInt::from(self.h_a)))
    }
}

/// C^{h_a} z − z as a multiple of the nil-root.
pub fn dlab_ringel_shift(g: &ValuedGraph, o: &Orientation, z: &[i64]) -> Result<DlabRingelShift> {
    let form = defect_form(g, o)?;
    let h_a = coxeter_numbers(g)?
        .h_a
        .ok_or_else(|| Error::NotExtended("no affine Coxeter number".into()))?;
    let nil = graph_nilroot(g).ok_or_else(|| Error::NotExtended("no nil-root".into()))?;
    let c = coxeter_matrix(g, o)?.matrix.pow(h_a as u32);
    let zr: Vec<BigRational> = z.iter().map(|&x| rat(x)).collect();
    let diff: Vec<BigRational> = c.mul_vec(&zr).iter().zip(&zr).map(|(a, b)| a - b).collect();
    let i = (0..nil.len()).find(|&i| nil[i] != 0).expect("nil-root is nonzero");
    let shift = &diff[i] / rat(nil[i]);
    if diff.iter().zip(&nil).any(|(d, &v)| d != &(&shift * rat(v))) {
        return Err(Error::Consistency("C^{h_a} z − z is not a multiple of the nil-root".into()));
    }
    Ok(DlabRingelShift { h_a, shift, defect: form.value(z) })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IndefiniteDefects {
    pub lambda1: f64,
    pub lambda2: f64,
    /// ⟨Tz, z̃₁⟩; must be ≤ 0 for regular z.
    pub rho1: f64,
    /// ⟨Tz, z̃₂⟩; must be ≥ 0 for regular z.
    pub rho2: f64,
    /// ρ¹ > 0 or ρ² < 0.
    pub fails: bool,
}

/// z̃₁ and z̃₂, conjugate to the dominant eigenvectors of the dual diagram, in vertex order,
/// together with (λ₁, λ₂).
pub fn conjugate_dominant_vectors(g: &ValuedGraph) -> Result<(Vec<f64>, Vec<f64>, f64, f64)> {
    g.require_tree()?;
    if classify_form(&tits_form(g))?.kind != FormKind::Indefinite {
        return Err(Error::NotIndefinite);
    }
    let p = bicolor(g)?;
    let order = p.order();
    let m = p.m();
    let dual = g.dual().reordered(&order);
    let leading = BipartitePartition::new(&dual, (0..m).collect(), (m..g.vertex_count()).collect())?;
    let cd = assemble_cartan(&dual, &leading)?;
    let pair = golden_pair(&cd)?;
    if pair.eigenvector.is_empty() {
        return Err(Error::Consistency("dominant eigenvalue is not simple".into()));
    }
    let lambda = lambda_from_phi(&pair.dominant.as_value())?;
    let (l1, l2) = {
        let (a, b) = (lambda.lambda1.re, lambda.lambda2.re);
        (a.max(b), a.min(b))
    };
    let x = &pair.eigenvector;
    let fx: Vec<f64> = (0..cd.k)
        .map(|i| (0..m).map(|j| cd.f.get(i, j).to_f64().unwrap_or(f64::NAN) * x[j]).sum())
        .collect();
    let conj = |l: f64| {
        let mut out = vec![0.0; g.vertex_count()];
        for (j, &v) in order.iter().enumerate() {
            out[v] = if j < m { x[j] } else { 2.0 * fx[j - m] / (l + 1.0) };
        }
        out
    };
    Ok((conj(l2), conj(l1), l1, l2))
}

/// ρ¹ and ρ² for a tree with indefinite Tits form.
pub fn indefinite_defects(g: &ValuedGraph, o: &Orientation, z: &[i64]) -> Result<IndefiniteDefects> {
    if z.len() != g.vertex_count() {
        return Err(Error::Dimension(format!("vector has {} entries", z.len())));
    }
    let (z1, z2, lambda1, lambda2) = conjugate_dominant_vectors(g)?;
    let bic = Orientation::bicolored(g)?;
    let t = transforming_element(g, &bic, o, None)?;
    let tz = t.matrix.mul_vec(&z.iter().map(|&x| rat(x)).collect::<Vec<_>>());
    let tz: Vec<f64> = tz.iter().map(|x| x.to_f64().unwrap_or(f64::NAN)).collect();
    let dot = |w: &[f64]| tz.iter().zip(w).map(|(a, b)| a * b).sum::<f64>();
    let (rho1, rho2) = (dot(&z1), dot(&z2));
    let eps = 1e-9 * (1.0 + tz.iter().map(|x| x.abs()).sum::<f64>());
    let fails = rho1 > eps || rho2 < -eps;
    Ok(IndefiniteDefects { lambda1, lambda2, rho1, rho2, fails })
}
