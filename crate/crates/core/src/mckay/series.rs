use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use super::characters::natural;
use super::group::{BinaryPolyhedralGroup, GroupKind};
use crate::cartan::nilroot;
use crate::coxeter::{affine_an_charpoly, coxeter_charpoly};
use crate::diagram::{build_catalog, cycle, extended, ValuedGraph};
use crate::error::{Error, Result};
use crate::exactmath::{rat, CyclotomicNumber, IntPolynomial, RationalMatrix};

/// Power series of num/den to order `n` (inclusive); den(0) must be ±1.
pub fn series_quotient(num: &IntPolynomial, den: &IntPolynomial, n: usize) -> Result<Vec<BigInt>> {
    let d0 = den.coeff(0);
    if d0.abs() != BigInt::one() {
        return Err(Error::Domain("denominator must have constant term ±1".into()));
    }
    let mut out: Vec<BigInt> = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let mut c = num.coeff(k);
        for j in 1..=k.min(den.degree().unwrap_or(0)) {
            c -= den.coeff(j) * &out[k - j];
        }
        out.push(c * &d0);
    }
    Ok(out)
}

fn one_minus_t_pow(k: usize) -> IntPolynomial {
    -&IntPolynomial::x_pow_minus_one(k)
}

/// (1 − t^a)(1 − t^b).
pub fn kkgv_denominator(a: u64, b: u64) -> IntPolynomial {
    &one_minus_t_pow(a as usize) * &one_minus_t_pow(b as usize)
}

/// (1 + t^h)/((1 − t^a)(1 − t^b)) to order n.
pub fn kkgv_series(k: &KostantNumbers, n: usize) -> Vec<BigInt> {
    let num = &IntPolynomial::one() + &IntPolynomial::monomial(BigInt::one(), k.h as usize);
    series_quotient(&num, &kkgv_denominator(k.a, k.b), n).expect("constant term 1")
}

/// (1/|G|)·Σ_g 1/det(1 − g·t) = (1/|G|)·Σ_cl |cl|/(1 − tr·t + t²), to order n.
pub fn molien_series(g: &BinaryPolyhedralGroup, n: usize) -> Result<Vec<BigInt>> {
    let m = g.kind.character_conductor();
    let traces = natural(g, m);
    let mut total: Vec<CyclotomicNumber> = (0..=n).map(|_| CyclotomicNumber::zero(m)).collect();
    for (cl, tr) in g.classes.iter().zip(&traces) {
        // 1/(1 − tr·t + t²) = Σ c_k t^k with c_k = tr·c_{k−1} − c_{k−2}
        let mut prev = CyclotomicNumber::zero(m);
        let mut cur = CyclotomicNumber::one(m);
        let size = rat(cl.size() as i64);
        for slot in total.iter_mut() {
            *slot = &*slot + &cur.scale(&size);
            let next = &(tr * &cur) - &prev;
            prev = std::mem::replace(&mut cur, next);
        }
    }
    let order = crate::exactmath::ratio(1, g.order() as i64);
    total
        .into_iter()
        .map(|x| {
            x.scale(&order)
                .integer_value()
                .ok_or_else(|| Error::Consistency("non-integral Molien coefficient".into()))
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct KostantNumbers {
    pub a: u64,
    pub b: u64,
    pub h: u64,
}

impl KostantNumbers {
    /// From the nil-root of a symmetric extended Cartan matrix: h = Σ δᵢ, a = 2·max δᵢ,
    /// b = h + 2 − a; a·b = 2·Σ δᵢ² is the group order doubled.
    pub fn from_nilroot(nil: &[i64]) -> Option<Self> {
        let h: i64 = nil.iter().sum();
        let a = 2 * nil.iter().copied().max()?;
        let b = h + 2 - a;
        let order: i64 = nil.iter().map(|x| x * x).sum();
        (b > 0 && a * b == 2 * order).then_some(KostantNumbers { a: a as u64, b: b as u64, h: h as u64 })
    }

    pub fn group_order(&self) -> u64 {
        self.a * self.b / 2
    }
}

/// Extended diagram of the McKay correspondence for a group.
pub fn mckay_diagram(kind: GroupKind) -> Result<ValuedGraph> {
    match kind {
        GroupKind::Cyclic(1) => Err(Error::Domain("the trivial group has no McKay graph".into())),
        GroupKind::Cyclic(2) => build_catalog("A12~"),
        GroupKind::Cyclic(n) => cycle(n - 1, 1),
        GroupKind::BinaryDihedral(n) => extended("D", n + 2),
        GroupKind::Tetrahedral => build_catalog("E6~"),
        GroupKind::Octahedral => build_catalog("E7~"),
        GroupKind::Icosahedral => build_catalog("E8~"),
    }
}

/// Kostant numbers of the group's diagram.
pub fn kostant_numbers(kind: GroupKind) -> Result<KostantNumbers> {
    let g = mckay_diagram(kind)?;
    let nil = crate::cartan::graph_nilroot(&g).ok_or_else(|| Error::Consistency("no nil-root".into()))?;
    KostantNumbers::from_nilroot(&nil).ok_or_else(|| Error::Consistency("a·b ≠ 2|G|".into()))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SeriesComponent {
    pub vertex: String,
    /// Multiplicities m_i(0..=N).
    pub coefficients: Vec<i64>,
    /// Numerator over (1 − t^a)(1 − t^b), when Kostant numbers are known.
    #[serde(serialize_with = "ser_poly_opt")]
    pub numerator: Option<IntPolynomial>,
}

fn ser_poly_opt<S: serde::Serializer>(p: &Option<IntPolynomial>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match p {
        Some(p) => s.serialize_some(&p.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>()),
        None => s.serialize_none(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GeneratingFunctionReport {
    pub extension_vertex: String,
    pub components: Vec<SeriesComponent>,
    pub kostant: Option<KostantNumbers>,
    #[serde(serialize_with = "ser_poly_opt")]
    pub denominator: Option<IntPolynomial>,
}

impl GeneratingFunctionReport {
    pub fn component(&self, name: &str) -> Option<&SeriesComponent> {
        self.components.iter().find(|c| c.vertex == name)
    }
}

/// B = 2I − Kᵀ.
pub fn kostant_operator(g: &ValuedGraph) -> Vec<Vec<i64>> {
    let k = crate::cartan::cartan_matrix(g).to_i64_rows().expect("integral Cartan matrix");
    let n = k.len();
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { 2 - k[j][i] } else { -k[j][i] }).collect())
        .collect()
}

/// v₀ = e_ext, v₁ = Bv₀, v_{n+1} = Bvₙ − v_{n−1}; per-vertex series m_i(n) = (vₙ)ᵢ.
pub fn kostant_multiplicities(
    b: &[Vec<i64>],
    names: &[String],
    ext: usize,
    n: usize,
    kostant: Option<KostantNumbers>,
) -> Result<GeneratingFunctionReport> {
    let dim = b.len();
    if ext >= dim || names.len() != dim {
        return Err(Error::InvalidParameter("extension vertex or names out of range".into()));
    }
    let apply = |v: &[i64]| -> Vec<i64> { b.iter().map(|row| row.iter().zip(v).map(|(x, y)| x * y).sum()).collect() };
    let mut vs: Vec<Vec<i64>> = Vec::with_capacity(n + 1);
    let mut v0 = vec![0; dim];
    v0[ext] = 1;
    vs.push(v0);
    for k in 1..=n {
        let bv = apply(&vs[k - 1]);
        let next: Vec<i64> = if k == 1 { bv } else { bv.iter().zip(&vs[k - 2]).map(|(x, y)| x - y).collect() };
        if let Some(i) = next.iter().position(|&x| x < 0) {
            return Err(Error::Consistency(format!("negative multiplicity at n = {k}, vertex {}", names[i])));
        }
        vs.push(next);
    }
    let kostant = kostant.or_else(|| {
        let symmetric = (0..dim).all(|i| (0..dim).all(|j| b[i][j] == b[j][i]));
        let k = RationalMatrix::from_fn(dim, dim, |i, j| rat(if i == j { 2 - b[i][j] } else { -b[i][j] }));
        symmetric.then(|| nilroot(&k)).flatten().and_then(|nil| KostantNumbers::from_nilroot(&nil))
    });
    let denominator = kostant.map(|k| kkgv_denominator(k.a, k.b));
    let components = (0..dim)
        .map(|i| {
            let coefficients: Vec<i64> = vs.iter().map(|v| v[i]).collect();
            let numerator = match (&kostant, &denominator) {
                (Some(k), Some(den)) => Some(numerator_of(&coefficients, den, k.h as usize)?),
                _ => None,
            };
            Ok(SeriesComponent { vertex: names[i].clone(), coefficients, numerator })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(GeneratingFunctionReport { extension_vertex: names[ext].clone(), components, kostant, denominator })
}

/// series·den truncated; errors unless it is a polynomial of degree ≤ h on the known range.
fn numerator_of(coefficients: &[i64], den: &IntPolynomial, h: usize) -> Result<IntPolynomial> {
    let n = coefficients.len();
    let prod: Vec<BigInt> = (0..n)
        .map(|k| (0..=k).map(|j| den.coeff(j) * BigInt::from(coefficients[k - j])).sum())
        .collect();
    if prod.iter().skip(h + 1).any(|c| !c.is_zero()) {
        return Err(Error::Consistency(format!("numerator has terms beyond t^{h}")));
    }
    Ok(IntPolynomial::new(prod.into_iter().take(h + 1).collect()))
}

/// Kostant series of the group's diagram, started at its extension vertex.
pub fn group_generating_function(kind: GroupKind, n: usize) -> Result<GeneratingFunctionReport> {
    let g = mckay_diagram(kind)?;
    let ext = crate::regularity::extension_vertex(&g);
    kostant_multiplicities(&kostant_operator(&g), g.names(), ext, n, None)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EbelingQuotient {
    pub dynkin: String,
    pub partner: String,
    /// p(λ) = numerator/denominator in lowest terms, denominator(0) = ±1 normalized to +1.
    pub numerator: IntPolynomial,
    pub denominator: IntPolynomial,
}

impl EbelingQuotient {
    /// p(t²) to order n.
    pub fn series(&self, n: usize) -> Vec<BigInt> {
        series_quotient(&self.numerator.substitute_power(2), &self.denominator.substitute_power(2), n)
            .expect("normalized denominator")
    }

    /// Equality as rational functions.
    pub fn equals(&self, num: &IntPolynomial, den: &IntPolynomial) -> bool {
        &self.numerator * den == num * &self.denominator
    }
}

/// χ(C)/χ(C_a) for a Dynkin diagram and its affine partner, in lowest terms.
pub fn ebeling_poincare(g: &ValuedGraph) -> Result<EbelingQuotient> {
    let info = g.info().ok_or_else(|| Error::Domain("a Dynkin catalog entry is required".into()))?;
    let partner_name = info
        .affine_partner
        .clone()
        .ok_or_else(|| Error::Domain(format!("{} has no affine partner", info.name)))?;
    let partner = build_catalog(&partner_name)?;
    let chi = coxeter_charpoly(g)?;
    let chi_a = if partner.is_cyclic() {
        // the cycle Ã_{m}: Ebeling's Coxeter element has class k = (m+1)/2
        let m = partner.vertex_count() - 1;
        if (m + 1) % 2 != 0 {
            return Err(Error::Domain(format!("{}: the quotient is not a series in t² for an odd cycle", info.name)));
        }
        affine_an_charpoly(m, (m + 1) / 2)?
    } else {
        coxeter_charpoly(&partner)?
    };
    let gcd = chi.gcd(&chi_a);
    let mut numerator = chi.div_exact(&gcd).ok_or_else(|| Error::Consistency("gcd does not divide".into()))?;
    let mut denominator = chi_a.div_exact(&gcd).ok_or_else(|| Error::Consistency("gcd does not divide".into()))?;
    if denominator.coeff(0).is_negative() {
        numerator = -&numerator;
        denominator = -&denominator;
    }
    if !denominator.coeff(0).is_one() {
        return Err(Error::Consistency("denominator does not start at 1".into()));
    }
    Ok(EbelingQuotient { dynkin: info.name.clone(), partner: partner_name, numerator, denominator })
}

/// Dynkin diagram paired with a group's McKay diagram.
pub fn dynkin_of(kind: GroupKind) -> Result<ValuedGraph> {
    match kind {
        GroupKind::Cyclic(n) if n >= 2 => build_catalog(&format!("A{}", n - 1)),
        GroupKind::Cyclic(_) => Err(Error::Domain("the trivial group has no Dynkin diagram".into())),
        GroupKind::BinaryDihedral(n) => build_catalog(&format!("D{}", n + 2)),
        GroupKind::Tetrahedral => build_catalog("E6"),
        GroupKind::Octahedral => build_catalog("E7"),
        GroupKind::Icosahedral => build_catalog("E8"),
    }
}

pub(crate) fn to_i64(v: &[BigInt]) -> Vec<i64> {
    v.iter().map(|x| x.to_i64().expect("small coefficient")).collect()
}
