use std::fmt::Write as _;

use super::graph::ValuedGraph;
use super::partition::{bicolor, BipartitePartition};
use crate::error::{Error, Result};

/// One arrow (source, target) per edge, indexed like `ValuedGraph::edges`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Orientation {
    arrows: Vec<(usize, usize)>,
}

impl Orientation {
    pub fn from_arrows(g: &ValuedGraph, arrows: Vec<(usize, usize)>) -> Result<Self> {
        if arrows.len() != g.edge_count() {
            return Err(Error::InvalidParameter("one arrow per edge is required".into()));
        }
        for (e, &(s, t)) in g.edges().iter().zip(&arrows) {
            if !(e.touches(s) && e.touches(t) && s != t) {
                return Err(Error::InvalidParameter("arrow does not match its edge".into()));
            }
        }
        Ok(Orientation { arrows })
    }

    /// Every arrow runs S₁ → S₂, so S₂ consists of sinks.
    pub fn bicolored_with(g: &ValuedGraph, p: &BipartitePartition) -> Self {
        let arrows = g
            .edges()
            .iter()
            .map(|e| if p.in_s1(e.u) { (e.u, e.v) } else { (e.v, e.u) })
            .collect();
        Orientation { arrows }
    }

    pub fn bicolored(g: &ValuedGraph) -> Result<Self> {
        Ok(Self::bicolored_with(g, &bicolor(g)?))
    }

    /// Arrows pointing away from `center` (a tree is required).
    pub fn away_from(g: &ValuedGraph, center: usize) -> Result<Self> {
        g.require_tree()?;
        let n = g.vertex_count();
        let mut depth = vec![usize::MAX; n];
        depth[center] = 0;
        let mut stack = vec![center];
        while let Some(a) = stack.pop() {
            for b in g.neighbors(a) {
                if depth[b] == usize::MAX {
                    depth[b] = depth[a] + 1;
                    stack.push(b);
                }
            }
        }
        let arrows = g
            .edges()
            .iter()
            .map(|e| if depth[e.u] < depth[e.v] { (e.u, e.v) } else { (e.v, e.u) })
            .collect();
        Ok(Orientation { arrows })
    }

    /// Away from the vertex of largest degree (smallest index on ties).
    pub fn central(g: &ValuedGraph) -> Result<Self> {
        let n = g.vertex_count();
        let center = (0..n).max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v))).unwrap_or(0);
        Self::away_from(g, center)
    }

    /// The acyclic orientation of the Ã_n cycle with k edges running v_i → v_{i+1}.
    pub fn cycle_class(g: &ValuedGraph, k: usize) -> Result<Self> {
        let len = g.vertex_count();
        if g.cycle_class().is_none() || k == 0 || k >= len {
            return Err(Error::InvalidParameter(format!("class index {k} needs a cycle with more than {k} edges")));
        }
        let arrows = g
            .edges()
            .iter()
            .enumerate()
            .map(|(i, e)| if i < k { (e.u, e.v) } else { (e.v, e.u) })
            .collect();
        Ok(Orientation { arrows })
    }

    pub fn arrows(&self) -> &[(usize, usize)] {
        &self.arrows
    }

    pub fn arrow(&self, edge: usize) -> (usize, usize) {
        self.arrows[edge]
    }

    pub fn reversed(&self) -> Self {
        Orientation { arrows: self.arrows.iter().map(|&(s, t)| (t, s)).collect() }
    }

    pub fn with_flipped(&self, edge: usize) -> Self {
        let mut arrows = self.arrows.clone();
        let (s, t) = arrows[edge];
        arrows[edge] = (t, s);
        Orientation { arrows }
    }

    /// Edge indices on which the two orientations disagree.
    pub fn differing_edges(&self, other: &Orientation) -> Vec<usize> {
        (0..self.arrows.len()).filter(|&e| self.arrows[e] != other.arrows[e]).collect()
    }

    pub fn is_sink(&self, v: usize) -> bool {
        self.arrows.iter().all(|&(s, _)| s != v)
    }

    pub fn is_source(&self, v: usize) -> bool {
        self.arrows.iter().all(|&(_, t)| t != v)
    }

    /// Repeatedly takes the smallest-index sink of the remaining graph; arrows to
    /// already-taken vertices no longer count (they have been reflected).
    pub fn sink_admissible_sequence(&self, g: &ValuedGraph) -> Result<Vec<usize>> {
        let n = g.vertex_count();
        let mut taken = vec![false; n];
        let mut out = Vec::with_capacity(n);
        for _ in 0..n {
            let next = (0..n).find(|&v| !taken[v] && self.arrows.iter().all(|&(s, t)| s != v || taken[t]));
            match next {
                Some(v) => {
                    taken[v] = true;
                    out.push(v);
                }
                None => return Err(Error::Consistency("orientation has an oriented cycle".into())),
            }
        }
        Ok(out)
    }

    /// `bicolored`, `central`, `opposite` (reversed bicolored), or a comma list of
    /// edges `u-v` flipped relative to the bicolored orientation.
    pub fn parse(g: &ValuedGraph, spec: &str) -> Result<Self> {
        let spec = spec.trim();
        match spec {
            "bicolored" | "bicolor" => return Self::bicolored(g),
            "central" => return Self::central(g),
            "opposite" => return Ok(Self::bicolored(g)?.reversed()),
            _ => {}
        }
        let mut o = Self::bicolored(g)?;
        for item in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (a, b) = item
                .split_once('-')
                .ok_or_else(|| Error::InvalidParameter(format!("orientation item `{item}` is not `u-v`")))?;
            let index = |name: &str| {
                g.index_of(name.trim())
                    .ok_or_else(|| Error::InvalidParameter(format!("unknown vertex `{}`", name.trim())))
            };
            let (u, v) = (index(a)?, index(b)?);
            let e = g
                .edge_between(u, v)
                .ok_or_else(|| Error::InvalidParameter(format!("no edge {item}")))?;
            o = o.with_flipped(e);
        }
        Ok(o)
    }

    pub fn render(&self, g: &ValuedGraph, ascii: bool) -> String {
        let arrow = if ascii { "->" } else { "→" };
        let mut out = String::new();
        for (i, &(s, t)) in self.arrows.iter().enumerate() {
            if i > 0 {
                out.push_str(", ");
            }
            let _ = write!(out, "{}{arrow}{}", g.name(s), g.name(t));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::build_catalog;

    #[test]
    fn bicolored_sequence_takes_s2_first() {
        let g = build_catalog("D4~").unwrap();
        let o = Orientation::bicolored(&g).unwrap();
        assert_eq!(o.sink_admissible_sequence(&g).unwrap(), vec![1, 2, 3, 4, 0]);
        assert_eq!(Orientation::central(&g).unwrap(), o);
    }

    #[test]
    fn flips_and_reversal() {
        let g = build_catalog("D4~").unwrap();
        let o = Orientation::parse(&g, "x0-y2, x0-y3").unwrap();
        let b = Orientation::bicolored(&g).unwrap();
        assert_eq!(o.differing_edges(&b).len(), 2);
        assert_eq!(o.reversed().reversed(), o);
        assert_eq!(Orientation::parse(&g, "opposite").unwrap(), b.reversed());
        assert!(Orientation::parse(&g, "y1-y2").is_err());
        assert!(Orientation::parse(&g, "x0-q").is_err());
    }

    #[test]
    fn central_points_away_from_the_branch_vertex() {
        let g = build_catalog("E6~").unwrap();
        let o = Orientation::central(&g).unwrap();
        let x0 = g.index_of("x0").unwrap();
        assert!(o.is_source(x0));
        for leaf in ["x1", "x2", "x3"] {
            assert!(o.is_sink(g.index_of(leaf).unwrap()));
        }
    }

    #[test]
    fn every_sequence_is_a_permutation() {
        let g = build_catalog("T[2,3,7]").unwrap();
        let mut o = Orientation::bicolored(&g).unwrap();
        for e in [0, 3, 5, 8] {
            o = o.with_flipped(e);
            let mut s = o.sink_admissible_sequence(&g).unwrap();
            s.sort_unstable();
            assert_eq!(s, (0..10).collect::<Vec<_>>());
        }
    }

    #[test]
    fn cycle_orientation_is_acyclic() {
        let g = build_catalog("A[4]~k=2").unwrap();
        let o = Orientation::cycle_class(&g, 2).unwrap();
        assert!(o.sink_admissible_sequence(&g).is_ok());
        assert!(Orientation::central(&g).is_err());
    }
}
