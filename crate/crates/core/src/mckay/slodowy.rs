use num_integer::Integer;
use serde::Serialize;

use super::characters::{natural, CharacterTable, ClassFunction};
use super::group::{BinaryPolyhedralGroup, GroupKind, Mat2};
use super::matrix::{match_extended, DiagramMatch};
use crate::error::{Error, Result};
use crate::exactmath::CyclotomicNumber;

/// A subgroup H of G, with H's elements located inside G.
pub struct SubgroupPair<'a> {
    pub big: &'a BinaryPolyhedralGroup,
    pub big_table: &'a CharacterTable,
    pub small: &'a BinaryPolyhedralGroup,
    pub small_table: &'a CharacterTable,
    /// H element → G element.
    pub embedding: Vec<usize>,
    /// H class → G class containing it.
    pub class_embedding: Vec<usize>,
    conductor: u32,
}

fn lift_mat(m: &Mat2, target: u32) -> Mat2 {
    Mat2(m.0.clone().map(|row| row.map(|x| if x.conductor() == target { x } else { x.embed(target) })))
}

fn lift(f: &[CyclotomicNumber], m: u32) -> ClassFunction {
    f.iter().map(|x| if x.conductor() == m { x.clone() } else { x.embed(m) }).collect()
}

impl<'a> SubgroupPair<'a> {
    pub fn new(
        big: &'a BinaryPolyhedralGroup,
        big_table: &'a CharacterTable,
        small: &'a BinaryPolyhedralGroup,
        small_table: &'a CharacterTable,
    ) -> Result<Self> {
        if big.conductor % small.conductor != 0 {
            return Err(Error::Domain(format!(
                "{} is not realized inside {}",
                small.kind.name(),
                big.kind.name()
            )));
        }
        let embedding = small
            .elements
            .iter()
            .map(|e| {
                big.index_of(&lift_mat(e, big.conductor))
                    .ok_or_else(|| Error::Domain(format!("an element of {} is not in {}", small.kind.name(), big.kind.name())))
            })
            .collect::<Result<Vec<_>>>()?;
        let class_embedding = small.classes.iter().map(|c| big.class_of(embedding[c.representative])).collect();
        let conductor = big.kind.character_conductor().lcm(&small.kind.character_conductor());
        Ok(SubgroupPair { big, big_table, small, small_table, embedding, class_embedding, conductor })
    }

    pub fn restrict(&self, psi: &[CyclotomicNumber]) -> ClassFunction {
        lift(&self.class_embedding.iter().map(|&c| psi[c].clone()).collect::<Vec<_>>(), self.conductor)
    }

    /// χ↑ = Σᵢ ⟨ψᵢ↓, χ⟩_H ψᵢ.
    pub fn induce(&self, chi: &[CyclotomicNumber]) -> Result<ClassFunction> {
        let mut out: ClassFunction = (0..self.big.classes.len()).map(|_| CyclotomicNumber::zero(self.conductor)).collect();
        for psi in &self.big_table.characters {
            let m = self.small_table.inner(&self.restrict(psi), chi);
            let m = m
                .rational_value()
                .ok_or_else(|| Error::Consistency("non-rational induction multiplicity".into()))?;
            for (o, x) in out.iter_mut().zip(psi) {
                *o = &*o + &x.scale(&m);
            }
        }
        Ok(lift(&out, self.conductor))
    }

    /// χ↑(g) = (1/|H|)·Σ_{x ∈ G, xgx⁻¹ ∈ H} χ(xgx⁻¹), element by element.
    pub fn induce_by_cosets(&self, chi: &[CyclotomicNumber]) -> ClassFunction {
        let mut in_small = vec![None; self.big.order()];
        for (h, &g) in self.embedding.iter().enumerate() {
            in_small[g] = Some(h);
        }
        let values = self
            .big
            .classes
            .iter()
            .map(|cl| {
                let g = cl.representative;
                let total: CyclotomicNumber = (0..self.big.order())
                    .filter_map(|x| {
                        let y = self.big.mul(self.big.mul(x, g), self.big.inverse(x));
                        in_small[y].map(|h| chi[self.small.class_of(h)].clone())
                    })
                    .sum();
                total.scale(&crate::exactmath::ratio(1, self.small.order() as i64))
            })
            .collect::<Vec<_>>();
        lift(&values, self.conductor)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SlodowyMatrices {
    pub pair: String,
    /// Restricted irreducibles of G, in row order of Ã.
    pub restricted: Vec<String>,
    /// Induced irreducibles of H, in row order of Ã^∨.
    pub induced: Vec<String>,
    pub a: Vec<Vec<i64>>,
    pub a_dual: Vec<Vec<i64>>,
    pub matched: DiagramMatch,
    pub matched_dual: DiagramMatch,
}

/// Multiplicities of f in an orthogonal basis; errors when f leaves its span.
fn coordinates(table: &CharacterTable, basis: &[ClassFunction], f: &[CyclotomicNumber]) -> Result<Vec<i64>> {
    let mut rest: ClassFunction = f.to_vec();
    let mut out = Vec::new();
    for b in basis {
        let c = table.inner(f, b).rational_value();
        let n = table.inner(b, b).rational_value();
        let q = match (c, n) {
            (Some(c), Some(n)) if (&c / &n).is_integer() => c / n,
            _ => return Err(Error::Consistency("non-integral Slodowy coefficient".into())),
        };
        rest = rest.iter().zip(b).map(|(r, x)| r - &x.scale(&q)).collect();
        out.push(q.to_integer().try_into().map_err(|_| Error::Consistency("coefficient overflow".into()))?);
    }
    if !rest.iter().all(CyclotomicNumber::is_zero) {
        return Err(Error::Consistency("product leaves the span of the basis".into()));
    }
    Ok(out)
}

/// Distinct functions with the label of their first source.
fn distinct(functions: Vec<(String, ClassFunction)>) -> Vec<(String, ClassFunction)> {
    let mut out: Vec<(String, ClassFunction)> = Vec::new();
    for (name, f) in functions {
        if !out.iter().any(|(_, g)| *g == f) {
            out.push((name, f));
        }
    }
    out
}

/// Ã from restricted and Ã^∨ from induced representations of H ◁ G.
pub fn slodowy_matrices(pair: &SubgroupPair) -> Result<SlodowyMatrices> {
    let m = pair.conductor;
    let restricted = distinct(
        pair.big_table
            .names
            .iter()
            .zip(&pair.big_table.characters)
            .map(|(n, psi)| (format!("{n}↓"), pair.restrict(psi)))
            .collect(),
    );
    let induced = distinct(
        pair.small_table
            .names
            .iter()
            .zip(&pair.small_table.characters)
            .map(|(n, chi)| Ok((format!("{n}↑"), pair.induce(chi)?)))
            .collect::<Result<Vec<_>>>()?,
    );
    let (restricted, induced) = if (pair.big.kind, pair.small.kind) == (GroupKind::Octahedral, GroupKind::Tetrahedral) {
        (pick(&restricted, &["ψ2↓", "ψ7↓", "ψ5↓", "ψ3↓", "ψ0↓"])?, pick(&induced, &["χ1↑", "χ4↑", "χ6↑", "χ3↑", "χ0↑"])?)
    } else {
        (restricted, induced)
    };
    if restricted.len() != induced.len() {
        return Err(Error::Consistency("restricted and induced bases differ in size".into()));
    }
    let v_small = lift(&natural(pair.small, pair.small.kind.character_conductor()), m);
    let v_big = lift(&natural(pair.big, pair.big.kind.character_conductor()), m);
    let r_basis: Vec<ClassFunction> = restricted.iter().map(|(_, f)| f.clone()).collect();
    let i_basis: Vec<ClassFunction> = induced.iter().map(|(_, f)| f.clone()).collect();
    let a = r_basis
        .iter()
        .map(|b| coordinates(pair.small_table, &r_basis, &pair.small_table.product(&v_small, b)))
        .collect::<Result<Vec<_>>>()?;
    let a_dual = i_basis
        .iter()
        .map(|b| coordinates(pair.big_table, &i_basis, &pair.big_table.product(&v_big, b)))
        .collect::<Result<Vec<_>>>()?;
    let r_names: Vec<String> = restricted.into_iter().map(|(n, _)| n).collect();
    let i_names: Vec<String> = induced.into_iter().map(|(n, _)| n).collect();
    Ok(SlodowyMatrices {
        pair: format!("{} ◁ {}", pair.small.kind.name(), pair.big.kind.name()),
        matched: match_extended(&a, &r_names)?,
        matched_dual: match_extended(&a_dual, &i_names)?,
        restricted: r_names,
        induced: i_names,
        a,
        a_dual,
    })
}

fn pick(items: &[(String, ClassFunction)], order: &[&str]) -> Result<Vec<(String, ClassFunction)>> {
    order
        .iter()
        .map(|name| {
            items
                .iter()
                .find(|(n, _)| n == name)
                .cloned()
                .ok_or_else(|| Error::Consistency(format!("{name} is not among the distinct functions")))
        })
        .collect()
}
