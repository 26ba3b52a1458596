use std::collections::BTreeMap;

use super::group::{BinaryPolyhedralGroup, GroupKind, Mat2};
use crate::error::{Error, Result};
use crate::exactmath::{ratio, CyclotomicNumber};

/// Class function values, one per conjugacy class.
pub type ClassFunction = Vec<CyclotomicNumber>;

#[derive(Debug, Clone)]
pub struct CharacterTable {
    pub group: GroupKind,
    pub order: usize,
    pub class_labels: Vec<String>,
    pub class_sizes: Vec<usize>,
    pub names: Vec<String>,
    pub characters: Vec<ClassFunction>,
    /// Class of the inverse, per class.
    pub inverse_class: Vec<usize>,
}

impl CharacterTable {
    pub fn degree(&self, i: usize) -> i64 {
        self.characters[i][0].integer_value().and_then(|d| i64::try_from(d).ok()).unwrap_or(0)
    }

    /// ⟨χ, ψ⟩ = (1/|G|)·Σ |cl|·χ(cl)·conj ψ(cl).
    pub fn inner(&self, a: &[CyclotomicNumber], b: &[CyclotomicNumber]) -> CyclotomicNumber {
        let total: CyclotomicNumber = a
            .iter()
            .zip(b)
            .zip(&self.class_sizes)
            .map(|((x, y), &s)| (x * &y.conj()).scale(&ratio(s as i64, 1)))
            .sum();
        total.scale(&ratio(1, self.order as i64))
    }

    pub fn product(&self, a: &[CyclotomicNumber], b: &[CyclotomicNumber]) -> ClassFunction {
        a.iter().zip(b).map(|(x, y)| x * y).collect()
    }

    /// Multiplicities of the irreducibles in a class function, when they are integers.
    pub fn decompose(&self, f: &[CyclotomicNumber]) -> Result<Vec<i64>> {
        self.characters
            .iter()
            .map(|chi| {
                let m = self.inner(f, chi);
                m.integer_value()
                    .and_then(|v| i64::try_from(v).ok())
                    .ok_or_else(|| Error::Consistency(format!("non-integral multiplicity {m}")))
            })
            .collect()
    }

    /// Row and column orthogonality, exactly.
    pub fn is_orthonormal(&self) -> bool {
        let n = self.characters.len();
        let one = CyclotomicNumber::one(1);
        let rows = (0..n).all(|i| {
            (0..n).all(|j| {
                let v = self.inner(&self.characters[i], &self.characters[j]);
                let want = if i == j { &one } else { &CyclotomicNumber::zero(1) };
                v.rational_value() == want.rational_value()
            })
        });
        let cols = (0..self.class_sizes.len()).all(|a| {
            (0..self.class_sizes.len()).all(|b| {
                let s: CyclotomicNumber =
                    self.characters.iter().map(|chi| &chi[a] * &chi[b].conj()).sum();
                let want = if a == b { ratio((self.order / self.class_sizes[a]) as i64, 1) } else { ratio(0, 1) };
                s.rational_value() == Some(want)
            })
        });
        rows && cols && n == self.class_sizes.len()
    }

    pub fn degree_square_sum(&self) -> i64 {
        (0..self.characters.len()).map(|i| self.degree(i).pow(2)).sum()
    }

    /// Index of the character with the given name.
    pub fn index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

fn lift(x: &CyclotomicNumber, m: u32) -> CyclotomicNumber {
    if x.conductor() == m {
        x.clone()
    } else {
        x.embed(m)
    }
}

/// Matrices of a representation on every element, built along the closure tree
/// from generator images; checked to be multiplicative on every generator step.
fn represent(group: &BinaryPolyhedralGroup, images: &BTreeMap<char, Vec<Vec<CyclotomicNumber>>>, m: u32) -> Result<Vec<Vec<Vec<CyclotomicNumber>>>> {
    let dim = images.values().next().map(Vec::len).unwrap_or(1);
    let mul = |a: &Vec<Vec<CyclotomicNumber>>, b: &Vec<Vec<CyclotomicNumber>>| -> Vec<Vec<CyclotomicNumber>> {
        (0..dim)
            .map(|i| (0..dim).map(|j| (0..dim).map(|k| &a[i][k] * &b[k][j]).sum::<CyclotomicNumber>()).map(|x| lift(&x, m)).collect())
            .collect()
    };
    let ident: Vec<Vec<CyclotomicNumber>> = (0..dim)
        .map(|i| (0..dim).map(|j| CyclotomicNumber::from_integer(m, (i == j) as i64)).collect())
        .collect();
    let gen_images: Vec<&Vec<Vec<CyclotomicNumber>>> = group
        .generators
        .iter()
        .map(|(c, _)| images.get(c).ok_or_else(|| Error::Consistency(format!("no image for generator {c}"))))
        .collect::<Result<_>>()?;
    let mut rep: Vec<Option<Vec<Vec<CyclotomicNumber>>>> = vec![None; group.order()];
    rep[0] = Some(ident);
    for e in 1..group.order() {
        let (p, g) = group.parent[e].expect("non-identity elements have parents");
        rep[e] = Some(mul(rep[p].as_ref().expect("parents precede children"), gen_images[g]));
    }
    let rep: Vec<_> = rep.into_iter().map(Option::unwrap).collect();
    for x in 0..group.order() {
        for (gi, &(_, g)) in group.generators.iter().enumerate() {
            if mul(&rep[x], gen_images[gi]) != rep[group.mul(x, g)] {
                return Err(Error::Consistency("generator images do not define a homomorphism".into()));
            }
        }
    }
    Ok(rep)
}

fn character_of(group: &BinaryPolyhedralGroup, images: &BTreeMap<char, Vec<Vec<CyclotomicNumber>>>, m: u32) -> Result<ClassFunction> {
    let rep = represent(group, images, m)?;
    Ok(group
        .classes
        .iter()
        .map(|c| {
            let r = &rep[c.representative];
            (0..r.len()).map(|i| r[i][i].clone()).sum::<CyclotomicNumber>()
        })
        .map(|x| lift(&x, m))
        .collect())
}

pub(crate) fn natural(group: &BinaryPolyhedralGroup, m: u32) -> ClassFunction {
    group.classes.iter().map(|c| lift(&group.elements[c.representative].trace(), m)).collect()
}

/// Permutation of a set of subgroups under conjugation by `x`.
fn conjugation_permutation(group: &BinaryPolyhedralGroup, subgroups: &[Vec<usize>], x: usize) -> Vec<usize> {
    let xi = group.inverse(x);
    subgroups
        .iter()
        .map(|s| {
            let mut img: Vec<usize> = s.iter().map(|&h| group.mul(group.mul(x, h), xi)).collect();
            img.sort_unstable();
            subgroups.iter().position(|t| *t == img).expect("conjugate of a listed subgroup is listed")
        })
        .collect()
}

fn cycle_type(p: &[usize]) -> Vec<usize> {
    let mut seen = vec![false; p.len()];
    let mut out = Vec::new();
    for s in 0..p.len() {
        if seen[s] {
            continue;
        }
        let mut len = 0;
        let mut i = s;
        while !seen[i] {
            seen[i] = true;
            i = p[i];
            len += 1;
        }
        out.push(len);
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

/// Cyclic subgroups generated by the members of a class.
fn subgroups_of_class(group: &BinaryPolyhedralGroup, class: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = Vec::new();
    for &e in &group.classes[class].elements {
        let s = group.cyclic_subgroup(e);
        if !out.contains(&s) {
            out.push(s);
        }
    }
    out
}

/// Character of the quotient representation obtained from conjugation on the cyclic
/// subgroups generated by `class`, evaluated through small-group data keyed by cycle type.
fn quotient_character(group: &BinaryPolyhedralGroup, class: usize, data: &[(&[usize], i64)], m: u32) -> Result<ClassFunction> {
    let subgroups = subgroups_of_class(group, class);
    group
        .classes
        .iter()
        .map(|c| {
            let ct = cycle_type(&conjugation_permutation(group, &subgroups, c.representative));
            data.iter()
                .find(|(t, _)| *t == ct.as_slice())
                .map(|(_, v)| CyclotomicNumber::from_integer(m, *v))
                .ok_or_else(|| Error::Consistency(format!("cycle type {ct:?} not in the small-group data")))
        })
        .collect()
}

// γ₂ of S₃; the standard character of S₄ twisted by the sign; the 3-dimensional character of A₄.
const S3_GAMMA2: &[(&[usize], i64)] = &[(&[1, 1, 1], 2), (&[2, 1], 0), (&[3], -1)];
const S4_STANDARD_SIGN: &[(&[usize], i64)] =
    &[(&[1, 1, 1, 1], 3), (&[2, 1, 1], -1), (&[2, 2], -1), (&[3, 1], 0), (&[4], 1)];
const A4_THREE: &[(&[usize], i64)] = &[(&[1, 1, 1, 1], 3), (&[2, 2], -1), (&[3, 1], 0)];

fn scalar_images(m: u32, values: &[(char, CyclotomicNumber)]) -> BTreeMap<char, Vec<Vec<CyclotomicNumber>>> {
    values.iter().map(|(c, v)| (*c, vec![vec![lift(v, m)]])).collect()
}

fn matrix_images(values: &[(char, Mat2)]) -> BTreeMap<char, Vec<Vec<CyclotomicNumber>>> {
    values.iter().map(|(c, v)| (*c, v.0.iter().map(|r| r.to_vec()).collect())).collect()
}

fn int(m: u32, k: i64) -> CyclotomicNumber {
    CyclotomicNumber::from_integer(m, k)
}

/// Irreducible characters, constructed from explicit representations, quotient maps and
/// tensor products, then checked for orthonormality.
pub fn character_table(group: &BinaryPolyhedralGroup) -> Result<CharacterTable> {
    let kind = group.kind;
    let m = kind.character_conductor();
    let nat = natural(group, m);
    let mut names = Vec::new();
    let mut chars: Vec<ClassFunction> = Vec::new();
    let prod = |a: &ClassFunction, b: &ClassFunction| -> ClassFunction { a.iter().zip(b).map(|(x, y)| x * y).collect() };
    match kind {
        GroupKind::Cyclic(n) => {
            for k in 0..n as i64 {
                names.push(format!("χ{k}"));
                chars.push(character_of(group, &scalar_images(m, &[('g', CyclotomicNumber::zeta_pow(m, k))]), m)?);
            }
        }
        GroupKind::BinaryDihedral(n) => {
            let i = CyclotomicNumber::zeta_pow(m, m as i64 / 4);
            let ones: Vec<(CyclotomicNumber, CyclotomicNumber)> = if n % 2 == 0 {
                vec![(int(m, 1), int(m, 1)), (int(m, 1), int(m, -1)), (int(m, -1), int(m, 1)), (int(m, -1), int(m, -1))]
            } else {
                vec![(int(m, 1), int(m, 1)), (int(m, 1), int(m, -1)), (int(m, -1), i.clone()), (int(m, -1), -&i)]
            };
            for (k, (a, b)) in ones.into_iter().enumerate() {
                names.push(format!("χ{k}"));
                chars.push(character_of(group, &scalar_images(m, &[('a', a), ('b', b)]), m)?);
            }
            let z = |k: i64| CyclotomicNumber::zeta_pow(m, k * m as i64 / (2 * n as i64));
            for k in 1..n as i64 {
                let a = Mat2([[z(k), int(m, 0)], [int(m, 0), z(-k)]]);
                let b = Mat2([[int(m, 0), int(m, 1)], [int(m, if k % 2 == 0 { 1 } else { -1 }), int(m, 0)]]);
                names.push(format!("χ{}", k + 3));
                chars.push(character_of(group, &matrix_images(&[('a', a), ('b', b)]), m)?);
            }
        }
        GroupKind::Octahedral => {
            let psi0 = character_of(group, &scalar_images(m, &[('a', int(m, 1)), ('b', int(m, 1)), ('c', int(m, 1))]), m)?;
            let psi1 = character_of(group, &scalar_images(m, &[('a', int(m, -1)), ('b', int(m, 1)), ('c', int(m, 1))]), m)?;
            let cl_b = group.class_of(group.word("b")?);
            let cl_c2 = group.class_of(group.word("cc")?);
            let psi2 = quotient_character(group, cl_b, S3_GAMMA2, m)?;
            let psi3 = nat.clone();
            let psi4 = prod(&psi3, &psi1);
            let psi5 = quotient_character(group, cl_c2, S4_STANDARD_SIGN, m)?;
            let psi6 = prod(&psi5, &psi1);
            let psi7 = prod(&psi2, &psi3);
            chars = vec![psi0, psi1, psi2, psi3, psi4, psi5, psi6, psi7];
            names = (0..8).map(|i| format!("ψ{i}")).collect();
        }
        GroupKind::Tetrahedral => {
            let w = CyclotomicNumber::zeta_pow(m, m as i64 / 3);
            let w2 = &w * &w;
            let one = |c: CyclotomicNumber| scalar_images(m, &[('A', int(m, 1)), ('b', int(m, 1)), ('c', c)]);
            let chi0 = character_of(group, &one(int(m, 1)), m)?;
            let chi1 = character_of(group, &one(w.clone()), m)?;
            let chi2 = character_of(group, &one(w2), m)?;
            let chi3 = nat.clone();
            let chi4 = prod(&chi3, &chi1);
            let chi5 = prod(&chi3, &chi2);
            let cl_c2 = group.class_of(group.word("cc")?);
            let chi6 = quotient_character(group, cl_c2, A4_THREE, m)?;
            chars = vec![chi0, chi1, chi2, chi3, chi4, chi5, chi6];
            names = (0..7).map(|i| format!("χ{i}")).collect();
        }
        GroupKind::Icosahedral => {
            // Symᵏ(ℂ²) for k = 0..5 by Clebsch–Gordan, then Galois conjugates of the 2- and
            // 3-dimensional ones (ζ₅ ↦ ζ₅², i.e. √5 ↦ −√5) and their product.
            let mut sym = vec![(0..nat.len()).map(|_| int(m, 1)).collect::<ClassFunction>(), nat.clone()];
            for k in 2..=5 {
                let next: ClassFunction =
                    prod(&nat, &sym[k - 1]).iter().zip(&sym[k - 2]).map(|(a, b)| a - b).collect();
                sym.push(next);
            }
            let galois = |f: &ClassFunction| -> ClassFunction { f.iter().map(|x| x.galois(13)).collect() };
            let two_prime = galois(&sym[1]);
            let three_prime = galois(&sym[2]);
            let four_prime = prod(&sym[1], &two_prime);
            chars = vec![
                sym[0].clone(),
                sym[1].clone(),
                two_prime,
                sym[2].clone(),
                three_prime,
                sym[3].clone(),
                four_prime,
                sym[4].clone(),
                sym[5].clone(),
            ];
            names = ["1", "2", "2'", "3", "3'", "4", "4'", "5", "6"].iter().map(|s| format!("φ{s}")).collect();
        }
    }
    let inverse_class = group
        .classes
        .iter()
        .map(|c| group.class_of(group.inverse(c.representative)))
        .collect();
    let table = CharacterTable {
        group: kind,
        order: group.order(),
        class_labels: group.classes.iter().map(|c| c.label.clone()).collect(),
        class_sizes: group.class_sizes(),
        names,
        characters: chars.into_iter().map(|f| f.iter().map(|x| lift(x, m)).collect()).collect(),
        inverse_class,
    };
    if !table.is_orthonormal() {
        return Err(Error::Consistency(format!("{} characters fail orthogonality", kind.name())));
    }
    if table.degree_square_sum() != table.order as i64 {
        return Err(Error::Consistency("Σ dim² ≠ |G|".into()));
    }
    Ok(table)
}

/// √2 and ω₃ in the character field of T and O.
pub fn sqrt2(m: u32) -> CyclotomicNumber {
    &CyclotomicNumber::zeta_pow(m, m as i64 / 8) + &CyclotomicNumber::zeta_pow(m, -(m as i64) / 8)
}

pub fn omega3(m: u32) -> CyclotomicNumber {
    CyclotomicNumber::zeta_pow(m, m as i64 / 3)
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::mckay::group::build_group;

    fn table(kind: GroupKind) -> CharacterTable {
        character_table(&build_group(kind).unwrap()).unwrap()
    }

    #[test]
    fn octahedral_table_matches_cell_for_cell() {
        let t = table(GroupKind::Octahedral);
        let m = 24;
        let s = sqrt2(m);
        let i = |k: i64| int(m, k);
        let expected: Vec<Vec<CyclotomicNumber>> = vec![
            vec![i(1), i(1), i(1), i(1), i(1), i(1), i(1), i(1)],
            vec![i(1), i(1), i(-1), i(1), i(1), i(1), i(-1), i(-1)],
            vec![i(2), i(2), i(0), i(2), i(-1), i(-1), i(0), i(0)],
            vec![i(2), i(-2), i(0), i(0), i(-1), i(1), s.clone(), -&s],
            vec![i(2), i(-2), i(0), i(0), i(-1), i(1), -&s, s.clone()],
            vec![i(3), i(3), i(-1), i(-1), i(0), i(0), i(1), i(1)],
            vec![i(3), i(3), i(1), i(-1), i(0), i(0), i(-1), i(-1)],
            vec![i(4), i(-4), i(0), i(0), i(1), i(-1), i(0), i(0)],
        ];
        assert_eq!(t.characters, expected);
        assert_eq!(t.class_labels, vec!["1", "-1", "ab", "b", "c^2", "c", "a", "a^3"]);
    }

    #[test]
    fn tetrahedral_table_matches_cell_for_cell() {
        let t = table(GroupKind::Tetrahedral);
        let m = 24;
        let w = omega3(m);
        let w2 = &w * &w;
        let i = |k: i64| int(m, k);
        let expected: Vec<Vec<CyclotomicNumber>> = vec![
            vec![i(1), i(1), i(1), i(1), i(1), i(1), i(1)],
            vec![i(1), i(1), i(1), w.clone(), w2.clone(), w.clone(), w2.clone()],
            vec![i(1), i(1), i(1), w2.clone(), w.clone(), w2.clone(), w.clone()],
            vec![i(2), i(-2), i(0), i(1), i(-1), i(-1), i(1)],
            vec![i(2), i(-2), i(0), w.clone(), -&w2, -&w, w2.clone()],
            vec![i(2), i(-2), i(0), w2.clone(), -&w, -&w2, w.clone()],
            vec![i(3), i(3), i(-1), i(0), i(0), i(0), i(0)],
        ];
        assert_eq!(t.characters, expected);
    }

    #[test]
    fn other_groups_are_orthonormal() {
        for kind in [
            GroupKind::Cyclic(1),
            GroupKind::Cyclic(2),
            GroupKind::Cyclic(6),
            GroupKind::BinaryDihedral(2),
            GroupKind::BinaryDihedral(3),
            GroupKind::BinaryDihedral(5),
            GroupKind::Icosahedral,
        ] {
            let t = table(kind);
            assert_eq!(t.degree_square_sum(), kind.order() as i64, "{kind:?}");
        }
        let j = table(GroupKind::Icosahedral);
        let dims: Vec<i64> = (0..9).map(|i| j.degree(i)).collect();
        assert_eq!(dims, vec![1, 2, 2, 3, 3, 4, 4, 5, 6]);
    }
}
