use std::collections::VecDeque;

use super::graph::ValuedGraph;
use crate::error::{Error, Result};

/// Bicolored partition; every edge joins S₁ to S₂. Both parts are sorted by vertex index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartitePartition {
    s1: Vec<usize>,
    s2: Vec<usize>,
}

impl BipartitePartition {
    pub fn new(g: &ValuedGraph, mut s1: Vec<usize>, mut s2: Vec<usize>) -> Result<Self> {
        s1.sort_unstable();
        s2.sort_unstable();
        let p = BipartitePartition { s1, s2 };
        if !p.is_consistent(g) {
            return Err(Error::InvalidParameter("partition inconsistent with the graph".into()));
        }
        Ok(p)
    }

    pub fn s1(&self) -> &[usize] {
        &self.s1
    }

    pub fn s2(&self) -> &[usize] {
        &self.s2
    }

    /// m = |S₁|.
    pub fn m(&self) -> usize {
        self.s1.len()
    }

    /// k = |S₂|.
    pub fn k(&self) -> usize {
        self.s2.len()
    }

    pub fn in_s1(&self, v: usize) -> bool {
        self.s1.binary_search(&v).is_ok()
    }

    pub fn swapped(&self) -> Self {
        BipartitePartition { s1: self.s2.clone(), s2: self.s1.clone() }
    }

    /// S₁ followed by S₂.
    pub fn order(&self) -> Vec<usize> {
        self.s1.iter().chain(&self.s2).copied().collect()
    }

    /// True when S₁ occupies the first m indices.
    pub fn is_leading(&self) -> bool {
        self.s1.iter().enumerate().all(|(i, &v)| i == v)
    }

    pub fn is_consistent(&self, g: &ValuedGraph) -> bool {
        let n = g.vertex_count();
        let mut seen = vec![0u8; n];
        for &v in self.s1.iter().chain(&self.s2) {
            if v >= n {
                return false;
            }
            seen[v] += 1;
        }
        seen.iter().all(|&c| c == 1) && g.edges().iter().all(|e| self.in_s1(e.u) != self.in_s1(e.v))
    }
}

/// Deterministic 2-coloring; in each component the part holding the
/// lexicographically smallest vertex name is S₁.
pub fn bicolor(g: &ValuedGraph) -> Result<BipartitePartition> {
    let n = g.vertex_count();
    let mut color: Vec<Option<bool>> = vec![None; n];
    let (mut s1, mut s2) = (Vec::new(), Vec::new());
    for comp in g.components() {
        let root = *comp.iter().min_by_key(|&&v| g.name(v)).unwrap();
        color[root] = Some(false);
        let mut queue = VecDeque::from([root]);
        while let Some(a) = queue.pop_front() {
            for b in g.neighbors(a) {
                match color[b] {
                    None => {
                        color[b] = Some(!color[a].unwrap());
                        queue.push_back(b);
                    }
                    Some(c) if c == color[a].unwrap() => return Err(Error::NoBicoloring),
                    Some(_) => {}
                }
            }
        }
        for v in comp {
            if color[v] == Some(false) {
                s1.push(v);
            } else {
                s2.push(v);
            }
        }
    }
    s1.sort_unstable();
    s2.sort_unstable();
    Ok(BipartitePartition { s1, s2 })
}

/// The graph reordered so that S₁ precedes S₂ (stable within parts), with its partition.
pub fn bicolored_form(g: &ValuedGraph) -> Result<(ValuedGraph, BipartitePartition)> {
    let p = bicolor(g)?;
    if p.is_leading() {
        return Ok((g.clone(), p));
    }
    let h = g.reordered(&p.order());
    let m = p.m();
    let q = BipartitePartition { s1: (0..m).collect(), s2: (m..g.vertex_count()).collect() };
    Ok((h, q))
}
