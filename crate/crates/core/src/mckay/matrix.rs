use serde::Serialize;

use super::characters::{natural, CharacterTable};
use super::group::{BinaryPolyhedralGroup, GroupKind};
use crate::diagram::{build_catalog, cycle, extended_names, Edge, ValuedGraph};
use crate::error::{Error, Result};

/// A square integer matrix matched against an extended Dynkin diagram through 2I − A.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiagramMatch {
    pub diagram: String,
    /// Row index → catalog vertex name.
    pub correspondence: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct McKayMatrix {
    pub group: String,
    /// Irreducible names, in row order.
    pub labels: Vec<String>,
    /// None when the natural representation is used.
    pub faithful: Option<String>,
    pub matrix: Vec<Vec<i64>>,
    pub matched: DiagramMatch,
}

/// Graph whose Cartan matrix is `k` (d_ij = −k_ij).
pub fn graph_from_cartan(k: &[Vec<i64>], names: &[String]) -> Result<ValuedGraph> {
    let n = k.len();
    let mut edges = Vec::new();
    for i in 0..n {
        if k[i].len() != n || k[i][i] != 2 {
            return Err(Error::Domain("not a generalized Cartan matrix".into()));
        }
        for j in i + 1..n {
            let (a, b) = (k[i][j], k[j][i]);
            if a > 0 || b > 0 || (a == 0) != (b == 0) {
                return Err(Error::Domain(format!("invalid off-diagonal pair ({a}, {b})")));
            }
            if a != 0 {
                edges.push(Edge { u: i, v: j, d_uv: (-a) as u32, d_vu: (-b) as u32 });
            }
        }
    }
    ValuedGraph::new(names.to_vec(), edges)
}

/// 2I − A.
pub fn cartan_of(a: &[Vec<i64>]) -> Vec<Vec<i64>> {
    a.iter()
        .enumerate()
        .map(|(i, row)| row.iter().enumerate().map(|(j, &x)| if i == j { 2 - x } else { -x }).collect())
        .collect()
}

/// Finds the extended catalog diagram (or cycle) whose Cartan matrix is 2I − A.
pub fn match_extended(a: &[Vec<i64>], labels: &[String]) -> Result<DiagramMatch> {
    let n = a.len();
    let g = graph_from_cartan(&cartan_of(a), labels)?;
    let mut candidates: Vec<ValuedGraph> = extended_names(n.max(2))
        .iter()
        .filter_map(|name| build_catalog(name).ok())
        .filter(|c| c.vertex_count() == n)
        .collect();
    if n >= 3 {
        candidates.push(cycle(n - 1, 1)?);
    }
    for c in candidates {
        if let Some(map) = g.isomorphism_to(&c) {
            let diagram = c.info().map(|i| i.name.clone()).unwrap_or_default();
            let correspondence = map.iter().map(|&v| c.name(v).to_string()).collect();
            return Ok(DiagramMatch { diagram, correspondence });
        }
    }
    Err(Error::Consistency("2I − A matches no extended Dynkin diagram".into()))
}

/// a_jk = ⟨χ_V·χ_j, χ_k⟩ for V the natural representation or a chosen faithful
/// 2-dimensional irreducible.
pub fn mckay_matrix(group: &BinaryPolyhedralGroup, table: &CharacterTable, faithful: Option<usize>) -> Result<McKayMatrix> {
    if group.kind == GroupKind::Cyclic(1) {
        return Err(Error::Domain("the trivial group has no McKay graph".into()));
    }
    let v = match faithful {
        None => natural(group, group.kind.character_conductor()),
        Some(i) => {
            let chi = table
                .characters
                .get(i)
                .ok_or_else(|| Error::InvalidParameter(format!("no irreducible with index {i}")))?;
            if table.degree(i) != 2 {
                return Err(Error::InvalidParameter(format!("{} is not 2-dimensional", table.names[i])));
            }
            // kernel = classes where χ equals its degree
            if chi.iter().skip(1).any(|x| x == &chi[0]) {
                return Err(Error::InvalidParameter(format!("{} is not faithful", table.names[i])));
            }
            chi.clone()
        }
    };
    let matrix = table
        .characters
        .iter()
        .map(|chi| table.decompose(&table.product(&v, chi)))
        .collect::<Result<Vec<_>>>()?;
    let matched = match_extended(&matrix, &table.names)?;
    Ok(McKayMatrix {
        group: group.kind.name(),
        labels: table.names.clone(),
        faithful: faithful.map(|i| table.names[i].clone()),
        matrix,
        matched,
    })
}
