use std::collections::{HashMap, VecDeque};
use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::exactmath::{ratio, CyclotomicNumber};

/// A 2×2 matrix over one cyclotomic field.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat2(pub [[CyclotomicNumber; 2]; 2]);

impl Mat2 {
    pub fn identity(m: u32) -> Self {
        let (o, z) = (CyclotomicNumber::one(m), CyclotomicNumber::zero(m));
        Mat2([[o.clone(), z.clone()], [z, o]])
    }

    pub fn scalar(m: u32, k: i64) -> Self {
        let (o, z) = (CyclotomicNumber::from_integer(m, k), CyclotomicNumber::zero(m));
        Mat2([[o.clone(), z.clone()], [z, o]])
    }

    pub fn trace(&self) -> CyclotomicNumber {
        &self.0[0][0] + &self.0[1][1]
    }

    pub fn det(&self) -> CyclotomicNumber {
        &(&self.0[0][0] * &self.0[1][1]) - &(&self.0[0][1] * &self.0[1][0])
    }

    /// Inverse of a determinant-one matrix.
    pub fn adjugate(&self) -> Self {
        let [[a, b], [c, d]] = &self.0;
        Mat2([[d.clone(), -b], [-c, a.clone()]])
    }

    pub fn conj_transpose(&self) -> Self {
        let [[a, b], [c, d]] = &self.0;
        Mat2([[a.conj(), c.conj()], [b.conj(), d.conj()]])
    }

    pub fn mul(&self, o: &Mat2) -> Mat2 {
        let e = |i: usize, j: usize| &(&self.0[i][0] * &o.0[0][j]) + &(&self.0[i][1] * &o.0[1][j]);
        Mat2([[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]])
    }

    pub fn conductor(&self) -> u32 {
        self.0[0][0].conductor()
    }
}

impl fmt::Debug for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.0[0][0], self.0[0][1], self.0[1][0], self.0[1][1])
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GroupKind {
    Cyclic(usize),
    /// Order 4n.
    BinaryDihedral(usize),
    Tetrahedral,
    Octahedral,
    Icosahedral,
}

impl GroupKind {
    /// `Z5`, `Z/5`, `cyclic5`, `BD3`, `binary-dihedral3`, `T`, `O`, `J` (also `I`).
    pub fn parse(s: &str) -> Result<Self> {
        let t = s.trim();
        let num = |r: &str| -> Result<usize> {
            r.trim_start_matches(['/', '[', '(', ' '])
                .trim_end_matches([']', ')'])
                .parse::<usize>()
                .map_err(|_| Error::InvalidParameter(format!("unknown group '{s}'")))
        };
        let kind = match t {
            "T" => GroupKind::Tetrahedral,
            "O" => GroupKind::Octahedral,
            "J" | "I" => GroupKind::Icosahedral,
            _ => {
                if let Some(r) = t.strip_prefix("binary-dihedral").or_else(|| t.strip_prefix("BD")) {
                    GroupKind::BinaryDihedral(num(r)?)
                } else if let Some(r) = t.strip_prefix("cyclic").or_else(|| t.strip_prefix('Z')) {
                    GroupKind::Cyclic(num(r)?)
                } else {
                    return Err(Error::InvalidParameter(format!("unknown group '{s}'")));
                }
            }
        };
        match kind {
            GroupKind::Cyclic(0) => Err(Error::InvalidParameter("cyclic group needs n ≥ 1".into())),
            GroupKind::BinaryDihedral(n) if n < 2 => {
                Err(Error::InvalidParameter("binary dihedral group needs n ≥ 2".into()))
            }
            k => Ok(k),
        }
    }

    pub fn order(self) -> usize {
        match self {
            GroupKind::Cyclic(n) => n,
            GroupKind::BinaryDihedral(n) => 4 * n,
            GroupKind::Tetrahedral => 24,
            GroupKind::Octahedral => 48,
            GroupKind::Icosahedral => 120,
        }
    }

    pub fn name(self) -> String {
        match self {
            GroupKind::Cyclic(n) => format!("Z{n}"),
            GroupKind::BinaryDihedral(n) => format!("BD{n}"),
            GroupKind::Tetrahedral => "T".into(),
            GroupKind::Octahedral => "O".into(),
            GroupKind::Icosahedral => "J".into(),
        }
    }

    /// Field of the matrix entries.
    pub fn conductor(self) -> u32 {
        match self {
            GroupKind::Cyclic(n) => n as u32,
            GroupKind::BinaryDihedral(n) => 2 * n as u32,
            GroupKind::Tetrahedral | GroupKind::Octahedral => 24,
            GroupKind::Icosahedral => 20,
        }
    }

    /// Field of the character values.
    pub fn character_conductor(self) -> u32 {
        match self {
            GroupKind::BinaryDihedral(n) => (2 * n as u32).lcm(&4),
            k => k.conductor(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugacyClass {
    pub label: String,
    pub representative: usize,
    pub elements: Vec<usize>,
}

impl ConjugacyClass {
    pub fn size(&self) -> usize {
        self.elements.len()
    }
}

#[derive(Debug, Clone)]
pub struct BinaryPolyhedralGroup {
    pub kind: GroupKind,
    pub conductor: u32,
    pub elements: Vec<Mat2>,
    /// (letter, element index)
    pub generators: Vec<(char, usize)>,
    /// elements[i] = elements[parent]·generator, from the closure.
    pub parent: Vec<Option<(usize, usize)>>,
    pub classes: Vec<ConjugacyClass>,
    index: HashMap<Mat2, usize>,
}

impl BinaryPolyhedralGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn index_of(&self, m: &Mat2) -> Option<usize> {
        self.index.get(m).copied()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.index[&self.elements[a].mul(&self.elements[b])]
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.index[&self.elements[a].adjugate()]
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn class_of(&self, e: usize) -> usize {
        self.classes.iter().position(|c| c.elements.contains(&e)).expect("every element has a class")
    }

    pub fn class_sizes(&self) -> Vec<usize> {
        self.classes.iter().map(ConjugacyClass::size).collect()
    }

    /// Evaluates a word in the generator letters; a leading '-' multiplies by −1.
    pub fn word(&self, w: &str) -> Result<usize> {
        let (neg, body) = match w.strip_prefix('-') {
            Some(r) => (true, r),
            None => (false, w),
        };
        let mut m = Mat2::scalar(self.conductor, if neg { -1 } else { 1 });
        for ch in body.chars() {
            let (_, g) = self
                .generators
                .iter()
                .find(|(c, _)| *c == ch)
                .ok_or_else(|| Error::InvalidParameter(format!("no generator '{ch}' in {}", self.kind.name())))?;
            m = m.mul(&self.elements[*g]);
        }
        self.index_of(&m).ok_or_else(|| Error::Consistency(format!("word {w} left the group")))
    }

    /// The order of an element.
    pub fn element_order(&self, e: usize) -> usize {
        let mut k = 1;
        let mut x = e;
        while x != 0 {
            x = self.mul(x, e);
            k += 1;
        }
        k
    }

    /// The cyclic subgroup generated by `e`, sorted.
    pub fn cyclic_subgroup(&self, e: usize) -> Vec<usize> {
        let mut out = vec![0];
        let mut x = e;
        while x != 0 {
            out.push(x);
            x = self.mul(x, e);
        }
        out.sort_unstable();
        out
    }
}

fn zeta(m: u32, k: i64) -> CyclotomicNumber {
    CyclotomicNumber::zeta_pow(m, k)
}

fn generators(kind: GroupKind) -> Vec<(char, Mat2)> {
    let m = kind.conductor();
    let z0 = || CyclotomicNumber::zero(m);
    let one = || CyclotomicNumber::one(m);
    let diag = |a: CyclotomicNumber, b: CyclotomicNumber| Mat2([[a, z0()], [z0(), b]]);
    match kind {
        GroupKind::Cyclic(n) => vec![('g', diag(zeta(m, 1), zeta(m, n as i64 - 1)))],
        GroupKind::BinaryDihedral(n) => vec![
            ('a', diag(zeta(m, 1), zeta(m, 2 * n as i64 - 1))),
            ('b', Mat2([[z0(), one()], [-&one(), z0()]])),
        ],
        GroupKind::Tetrahedral | GroupKind::Octahedral => {
            // ε = e^{πi/4} = ζ₂₄³, i = ζ₂₄⁶
            let eps = |k: i64| zeta(m, 3 * k);
            let i = zeta(m, 6);
            let inv_sqrt2 = (&eps(1) + &eps(-1)).scale(&ratio(1, 2));
            let a = diag(eps(1), eps(-1));
            let b = Mat2([[z0(), i.clone()], [i, z0()]]);
            let c = Mat2([
                [&inv_sqrt2 * &eps(-1), &inv_sqrt2 * &eps(-1)],
                [-&(&inv_sqrt2 * &eps(1)), &inv_sqrt2 * &eps(1)],
            ]);
            if kind == GroupKind::Octahedral {
                vec![('a', a), ('b', b), ('c', c)]
            } else {
                vec![('A', a.mul(&a)), ('b', b), ('c', c)]
            }
        }
        GroupKind::Icosahedral => {
            // ζ₅ = ζ₂₀⁴; √5 = ζ₅ − ζ₅² − ζ₅³ + ζ₅⁴
            let e = |k: i64| zeta(m, 4 * k);
            let sqrt5 = &(&e(1) - &e(2)) - &(&e(3) - &e(4));
            let inv = &sqrt5 * &CyclotomicNumber::from_rational(m, ratio(1, 5));
            let s = diag(e(3), e(2));
            let p = &e(1) - &e(4);
            let q = &e(2) - &e(3);
            let t = Mat2([[-&(&inv * &p), &inv * &q], [&inv * &q, &inv * &p]]);
            vec![('s', s), ('t', t)]
        }
    }
}

fn closure(kind: GroupKind, gens: &[(char, Mat2)]) -> Result<(Vec<Mat2>, Vec<Option<(usize, usize)>>, HashMap<Mat2, usize>)> {
    let expected = kind.order();
    let id = Mat2::identity(kind.conductor());
    let mut elements = vec![id.clone()];
    let mut parent = vec![None];
    let mut index = HashMap::from([(id, 0usize)]);
    let mut queue = VecDeque::from([0usize]);
    while let Some(x) = queue.pop_front() {
        for (gi, (_, g)) in gens.iter().enumerate() {
            let y = elements[x].mul(g);
            if !index.contains_key(&y) {
                if elements.len() == expected {
                    return Err(Error::Consistency(format!("closure of {} exceeds order {expected}", kind.name())));
                }
                index.insert(y.clone(), elements.len());
                queue.push_back(elements.len());
                elements.push(y);
                parent.push(Some((x, gi)));
            }
        }
    }
    if elements.len() != expected {
        return Err(Error::Consistency(format!(
            "{} closed with {} elements, expected {expected}",
            kind.name(),
            elements.len()
        )));
    }
    Ok((elements, parent, index))
}

/// Representative words in the order the classes are listed.
fn class_layout(kind: GroupKind) -> Option<Vec<(&'static str, &'static str)>> {
    match kind {
        GroupKind::Octahedral => Some(vec![
            ("1", ""),
            ("-1", "-"),
            ("ab", "ab"),
            ("b", "b"),
            ("c^2", "cc"),
            ("c", "c"),
            ("a", "a"),
            ("a^3", "aaa"),
        ]),
        GroupKind::Tetrahedral => Some(vec![
            ("1", ""),
            ("-1", "-"),
            ("b", "b"),
            ("c", "c"),
            ("c^2", "cc"),
            ("-c", "-c"),
            ("-c^2", "-cc"),
        ]),
        _ => None,
    }
}

fn word_of(group: &BinaryPolyhedralGroup, mut e: usize) -> String {
    let mut letters = Vec::new();
    while let Some((p, g)) = group.parent[e] {
        letters.push(group.generators[g].0);
        e = p;
    }
    letters.reverse();
    let mut out = String::new();
    let mut i = 0;
    while i < letters.len() {
        let mut j = i;
        while j < letters.len() && letters[j] == letters[i] {
            j += 1;
        }
        out.push(letters[i]);
        if j - i > 1 {
            out.push_str(&format!("^{}", j - i));
        }
        i = j;
    }
    if out.is_empty() {
        "1".into()
    } else {
        out
    }
}

/// Builds the group by closure of its generators and splits it into conjugacy classes.
pub fn build_group(kind: GroupKind) -> Result<BinaryPolyhedralGroup> {
    let gens = generators(kind);
    for (c, g) in &gens {
        if g.det() != CyclotomicNumber::one(kind.conductor()) || g.mul(&g.conj_transpose()) != Mat2::identity(kind.conductor()) {
            return Err(Error::Consistency(format!("generator {c} is not in SU(2)")));
        }
    }
    let (elements, parent, index) = closure(kind, &gens)?;
    let generators = gens.iter().map(|(c, g)| (*c, index[g])).collect();
    let mut group = BinaryPolyhedralGroup {
        kind,
        conductor: kind.conductor(),
        elements,
        generators,
        parent,
        classes: Vec::new(),
        index,
    };
    let n = group.order();
    let mut seen = vec![false; n];
    let mut classes = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut orbit = vec![start];
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(x) = queue.pop_front() {
            for &(_, g) in &group.generators {
                let m = group.elements[g].mul(&group.elements[x]).mul(&group.elements[g].adjugate());
                let y = group.index[&m];
                if !seen[y] {
                    seen[y] = true;
                    orbit.push(y);
                    queue.push_back(y);
                }
            }
        }
        orbit.sort_unstable();
        classes.push(ConjugacyClass { label: String::new(), representative: start, elements: orbit });
    }
    match class_layout(kind) {
        Some(layout) => {
            if layout.len() != classes.len() {
                return Err(Error::Consistency(format!("{} has {} classes", kind.name(), classes.len())));
            }
            let mut ordered = Vec::new();
            for (label, w) in layout {
                let e = group.word(w)?;
                let pos = classes.iter().position(|c| c.elements.contains(&e)).expect("class exists");
                let mut c = classes[pos].clone();
                c.label = label.to_string();
                c.representative = e;
                ordered.push(c);
            }
            group.classes = ordered;
        }
        None => {
            for c in &mut classes {
                c.label = word_of(&group, c.representative);
            }
            group.classes = classes;
        }
    }
    Ok(group)
}
