use super::graph::ValuedGraph;
use super::partition::bicolored_form;
use super::catalog::build_catalog;
use crate::error::{Error, Result};

/// Γ(n): n copies of `gamma` (names suffixed `_1`..`_n`), each joined at `attach`
/// to a new vertex `apex` by a simple edge.
pub fn star_glue(gamma: &ValuedGraph, attach: usize, n: usize, apex: &str) -> Result<ValuedGraph> {
    if n == 0 {
        return Err(Error::InvalidParameter("at least one copy is required".into()));
    }
    if attach >= gamma.vertex_count() {
        return Err(Error::InvalidParameter("attachment vertex out of range".into()));
    }
    let size = gamma.vertex_count();
    let mut g = gamma.induced(&[]).disjoint_union(gamma, "_1");
    for i in 2..=n {
        g = g.disjoint_union(gamma, &format!("_{i}"));
    }
    let mut names = g.names().to_vec();
    names.push(apex.to_string());
    let apex_index = names.len() - 1;
    let mut edges = g.edges().to_vec();
    for i in 0..n {
        edges.push(super::graph::Edge { u: apex_index, v: i * size + attach, d_uv: 1, d_vu: 1 });
    }
    let glued = ValuedGraph::new(names, edges)?;
    Ok(bicolored_form(&glued).map(|(h, _)| h).unwrap_or(glued))
}

/// The tree in which vertex i + 1 hangs below `parents[i]` (which must be ≤ i)
/// with rigging `riggings[i]` = (d_parent,child, d_child,parent). Vertices are named
/// v0, v1, … and the result is put in bicolored order.
pub fn tree_from_parents(parents: &[usize], riggings: &[(u32, u32)]) -> Result<ValuedGraph> {
    if parents.len() != riggings.len() {
        return Err(Error::InvalidParameter("one rigging per parent link".into()));
    }
    let n = parents.len() + 1;
    let names = (0..n).map(|i| format!("v{i}")).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for (i, (&p, &(a, b))) in parents.iter().zip(riggings).enumerate() {
        if p > i {
            return Err(Error::InvalidParameter(format!("parent of v{} must precede it", i + 1)));
        }
        edges.push(super::graph::Edge { u: p, v: i + 1, d_uv: a, d_vu: b });
    }
    let g = ValuedGraph::new(names, edges)?;
    Ok(bicolored_form(&g)?.0)
}

/// n copies of D̃₄ whose marked leaves are joined to one new vertex.
pub fn kolmykov(n: usize) -> Result<ValuedGraph> {
    let d4 = build_catalog("D4~")?;
    let leaf = d4.index_of("y1").expect("D4~ has y1");
    star_glue(&d4, leaf, n, "b")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kolmykov_sizes() {
        for n in 1..=4 {
            let g = kolmykov(n).unwrap();
            assert_eq!(g.vertex_count(), 5 * n + 1);
            assert!(g.is_tree());
            assert_eq!(g.degree(g.index_of("b").unwrap()), n);
        }
    }

    #[test]
    fn parent_lists_build_trees() {
        let g = tree_from_parents(&[0, 0, 1], &[(1, 1), (1, 2), (3, 1)]).unwrap();
        assert!(g.is_tree());
        assert_eq!(g.vertex_count(), 4);
        assert!(tree_from_parents(&[1], &[(1, 1)]).is_err());
    }

    #[test]
    fn gluing_a1_twice_is_a3() {
        let a1 = build_catalog("A1").unwrap();
        let g = star_glue(&a1, 0, 2, "c").unwrap();
        assert!(g.isomorphism_to(&build_catalog("A3").unwrap()).is_some());
    }
}
