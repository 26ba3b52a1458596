use std::collections::VecDeque;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};

use super::catalog::CatalogInfo;
use crate::error::{Error, Result};

/// An edge with its rigging: d_uv is the valuation seen from u towards v.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub d_uv: u32,
    pub d_vu: u32,
}

impl Edge {
    pub fn other(&self, w: usize) -> usize {
        if w == self.u {
            self.v
        } else {
            self.u
        }
    }

    pub fn touches(&self, w: usize) -> bool {
        self.u == w || self.v == w
    }

    /// Valuation (d_ab, d_ba) oriented from `a`.
    pub fn valuation_from(&self, a: usize) -> (u32, u32) {
        if a == self.u {
            (self.d_uv, self.d_vu)
        } else {
            (self.d_vu, self.d_uv)
        }
    }

    pub fn is_simple(&self) -> bool {
        self.d_uv == 1 && self.d_vu == 1
    }
}

/// A finite valued graph with vertex weights f satisfying d_uv·f_v = d_vu·f_u.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValuedGraph {
    names: Vec<String>,
    edges: Vec<Edge>,
    weights: Vec<u64>,
    cycle_class: Option<usize>,
    info: Option<CatalogInfo>,
}

impl ValuedGraph {
    /// Builds a graph and derives the smallest positive integer weights on each
    /// connected component.
    pub fn new(names: Vec<String>, edges: Vec<Edge>) -> Result<Self> {
        let weights = derive_weights(&names, &edges)?;
        let g = ValuedGraph { names, edges, weights, cycle_class: None, info: None };
        g.check_structure()?;
        Ok(g)
    }

    /// Builds a graph with explicit weights, checking the valuation condition.
    pub fn with_weights(names: Vec<String>, edges: Vec<Edge>, weights: Vec<u64>) -> Result<Self> {
        if weights.len() != names.len() || weights.contains(&0) {
            return Err(Error::InvalidParameter("one positive weight per vertex is required".into()));
        }
        let g = ValuedGraph { names, edges, weights, cycle_class: None, info: None };
        g.check_structure()?;
        for e in &g.edges {
            if e.d_uv as u64 * g.weights[e.v] != e.d_vu as u64 * g.weights[e.u] {
                return Err(Error::Valuation { u: g.names[e.u].clone(), v: g.names[e.v].clone() });
            }
        }
        Ok(g)
    }

    fn check_structure(&self) -> Result<()> {
        for (i, n) in self.names.iter().enumerate() {
            if self.names[..i].contains(n) {
                return Err(Error::InvalidParameter(format!("duplicate vertex `{n}`")));
            }
        }
        for (k, e) in self.edges.iter().enumerate() {
            if e.u >= self.names.len() || e.v >= self.names.len() {
                return Err(Error::InvalidParameter("edge endpoint out of range".into()));
            }
            if e.u == e.v {
                return Err(Error::InvalidParameter(format!("loop at `{}`", self.names[e.u])));
            }
            if e.d_uv == 0 || e.d_vu == 0 {
                return Err(Error::InvalidParameter(format!(
                    "edge {}-{} needs positive valuations",
                    self.names[e.u], self.names[e.v]
                )));
            }
            if self.edges[..k].iter().any(|f| f.touches(e.u) && f.touches(e.v)) {
                return Err(Error::InvalidParameter(format!(
                    "repeated edge {}-{}",
                    self.names[e.u], self.names[e.v]
                )));
            }
        }
        Ok(())
    }

    pub(crate) fn set_cycle_class(mut self, k: usize) -> Self {
        self.cycle_class = Some(k);
        self
    }

    pub(crate) fn set_info(mut self, info: CatalogInfo) -> Self {
        self.info = Some(info);
        self
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn info(&self) -> Option<&CatalogInfo> {
        self.info.as_ref()
    }

    /// Class index k when this graph is the flagged Ã_n cycle.
    pub fn cycle_class(&self) -> Option<usize> {
        self.cycle_class
    }

    pub fn is_cyclic(&self) -> bool {
        self.cycle_class.is_some()
    }

    pub fn edge_between(&self, a: usize, b: usize) -> Option<usize> {
        self.edges.iter().position(|e| e.touches(a) && e.touches(b))
    }

    /// (d_ab, d_ba) if a and b are adjacent.
    pub fn valuation(&self, a: usize, b: usize) -> Option<(u32, u32)> {
        self.edge_between(a, b).map(|k| self.edges[k].valuation_from(a))
    }

    pub fn neighbors(&self, a: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self.edges.iter().filter(|e| e.touches(a)).map(|e| e.other(a)).collect();
        out.sort_unstable();
        out
    }

    pub fn degree(&self, a: usize) -> usize {
        self.edges.iter().filter(|e| e.touches(a)).count()
    }

    pub fn is_simply_laced(&self) -> bool {
        self.edges.iter().all(Edge::is_simple)
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut comp = Vec::new();
            let mut queue = VecDeque::from([s]);
            seen[s] = true;
            while let Some(a) = queue.pop_front() {
                comp.push(a);
                for b in self.neighbors(a) {
                    if !seen[b] {
                        seen[b] = true;
                        queue.push_back(b);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn is_forest(&self) -> bool {
        self.edges.len() + self.components().len() == self.vertex_count()
    }

    pub fn is_tree(&self) -> bool {
        self.vertex_count() > 0 && self.is_connected() && self.edges.len() + 1 == self.vertex_count()
    }

    pub fn require_tree(&self) -> Result<()> {
        if self.is_cyclic() {
            return Err(Error::Cyclic);
        }
        if !self.is_tree() {
            return Err(Error::NotATree(format!(
                "{} vertices, {} edges, {} components",
                self.vertex_count(),
                self.edges.len(),
                self.components().len()
            )));
        }
        Ok(())
    }

    pub fn require_forest(&self) -> Result<()> {
        if self.is_cyclic() {
            return Err(Error::Cyclic);
        }
        if !self.is_forest() {
            return Err(Error::NotATree("graph contains a cycle".into()));
        }
        Ok(())
    }

    /// Induced subgraph on `keep`, in the given order. Catalog metadata is dropped.
    pub fn induced(&self, keep: &[usize]) -> ValuedGraph {
        let pos = |a: usize| keep.iter().position(|&k| k == a);
        let names = keep.iter().map(|&k| self.names[k].clone()).collect();
        let edges = self
            .edges
            .iter()
            .filter_map(|e| Some(Edge { u: pos(e.u)?, v: pos(e.v)?, d_uv: e.d_uv, d_vu: e.d_vu }))
            .collect();
        ValuedGraph::new(names, edges).expect("induced subgraph of a valued graph is valued")
    }

    pub fn remove_vertex(&self, a: usize) -> ValuedGraph {
        let keep: Vec<usize> = (0..self.vertex_count()).filter(|&k| k != a).collect();
        self.induced(&keep)
    }

    /// A copy with an extra vertex joined to `attach` by an edge of the given rigging.
    pub fn add_leaf(&self, name: &str, attach: usize, d_attach_new: u32, d_new_attach: u32) -> Result<ValuedGraph> {
        let mut names = self.names.clone();
        names.push(name.to_string());
        let mut edges = self.edges.clone();
        edges.push(Edge { u: attach, v: names.len() - 1, d_uv: d_attach_new, d_vu: d_new_attach });
        ValuedGraph::new(names, edges)
    }

    /// A copy with an extra edge between existing vertices.
    pub fn add_edge(&self, a: usize, b: usize, d_ab: u32, d_ba: u32) -> Result<ValuedGraph> {
        let mut edges = self.edges.clone();
        edges.push(Edge { u: a, v: b, d_uv: d_ab, d_vu: d_ba });
        ValuedGraph::new(self.names.clone(), edges)
    }

    /// Vertex sets of the two sides after deleting the edge {a, b}: (side of a, side of b).
    pub fn split_at_edge(&self, a: usize, b: usize) -> Result<(Vec<usize>, Vec<usize>)> {
        let k = self.edge_between(a, b).ok_or_else(|| {
            Error::InvalidParameter(format!("no edge {}-{}", self.names[a], self.names[b]))
        })?;
        let mut edges = self.edges.clone();
        edges.remove(k);
        let cut = ValuedGraph { names: self.names.clone(), edges, weights: self.weights.clone(), cycle_class: None, info: None };
        let comps = cut.components();
        let side_a = comps.iter().find(|c| c.contains(&a)).cloned().unwrap();
        if side_a.contains(&b) {
            return Err(Error::InvalidParameter(format!(
                "edge {}-{} does not split the graph",
                self.names[a], self.names[b]
            )));
        }
        let side_b = comps.iter().find(|c| c.contains(&b)).cloned().unwrap();
        Ok((side_a, side_b))
    }

    /// Transposes every rigging; weights are recomputed.
    pub fn dual(&self) -> ValuedGraph {
        let edges = self
            .edges
            .iter()
            .map(|e| Edge { u: e.u, v: e.v, d_uv: e.d_vu, d_vu: e.d_uv })
            .collect();
        let mut g = ValuedGraph::new(self.names.clone(), edges).expect("dual of a valued graph is valued");
        g.cycle_class = self.cycle_class;
        g
    }

    /// Disjoint union; names of `other` get `suffix` appended.
    pub fn disjoint_union(&self, other: &ValuedGraph, suffix: &str) -> ValuedGraph {
        let offset = self.vertex_count();
        let mut names = self.names.clone();
        names.extend(other.names.iter().map(|n| format!("{n}{suffix}")));
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|e| Edge { u: e.u + offset, v: e.v + offset, ..*e }));
        ValuedGraph::new(names, edges).expect("union of valued graphs is valued")
    }

    /// Reorders vertices; `order[i]` is the old index of new vertex i.
    pub fn reordered(&self, order: &[usize]) -> ValuedGraph {
        let mut g = self.induced(order);
        g.cycle_class = self.cycle_class;
        g.info = self.info.clone().map(|mut info| {
            info.extension_vertex = info
                .extension_vertex
                .and_then(|x| order.iter().position(|&o| o == x));
            info
        });
        g
    }

    /// Name-preserving structural equality up to edge order and orientation.
    pub fn same_rigging(&self, other: &ValuedGraph) -> bool {
        if self.names != other.names || self.edges.len() != other.edges.len() {
            return false;
        }
        self.edges.iter().all(|e| other.valuation(e.u, e.v) == Some((e.d_uv, e.d_vu)))
    }

    /// A vertex bijection `map` (self index → other index) preserving riggings,
    /// found by backtracking.
    pub fn isomorphism_to(&self, other: &ValuedGraph) -> Option<Vec<usize>> {
        let n = self.vertex_count();
        if n != other.vertex_count() || self.edges.len() != other.edges.len() {
            return None;
        }
        let mut map = vec![usize::MAX; n];
        let mut used = vec![false; n];
        fn extend(a: &ValuedGraph, b: &ValuedGraph, i: usize, map: &mut [usize], used: &mut [bool]) -> bool {
            let n = a.vertex_count();
            if i == n {
                return true;
            }
            for j in 0..n {
                if used[j] || a.degree(i) != b.degree(j) {
                    continue;
                }
                let consistent = (0..i).all(|k| a.valuation(i, k) == b.valuation(j, map[k]));
                if !consistent {
                    continue;
                }
                map[i] = j;
                used[j] = true;
                if extend(a, b, i + 1, map, used) {
                    return true;
                }
                used[j] = false;
            }
            false
        }
        extend(self, other, 0, &mut map, &mut used).then_some(map)
    }
}

fn derive_weights(names: &[String], edges: &[Edge]) -> Result<Vec<u64>> {
    let n = names.len();
    let mut f: Vec<Option<BigRational>> = vec![None; n];
    let mut out = vec![0u64; n];
    for start in 0..n {
        if f[start].is_some() {
            continue;
        }
        f[start] = Some(BigRational::one());
        let mut comp = vec![start];
        let mut queue = VecDeque::from([start]);
        while let Some(a) = queue.pop_front() {
            for e in edges.iter().filter(|e| e.touches(a)) {
                let b = e.other(a);
                let (d_ab, d_ba) = e.valuation_from(a);
                // d_ab f_b = d_ba f_a
                let fb = f[a].clone().unwrap() * BigRational::new(BigInt::from(d_ba), BigInt::from(d_ab));
                match &f[b] {
                    None => {
                        f[b] = Some(fb);
                        comp.push(b);
                        queue.push_back(b);
                    }
                    Some(existing) if *existing != fb => {
                        return Err(Error::Valuation { u: names[e.u].clone(), v: names[e.v].clone() });
                    }
                    Some(_) => {}
                }
            }
        }
        let denom = comp.iter().fold(BigInt::one(), |l, &k| l.lcm(f[k].as_ref().unwrap().denom()));
        let ints: Vec<BigInt> = comp
            .iter()
            .map(|&k| (f[k].clone().unwrap() * BigRational::from_integer(denom.clone())).to_integer())
            .collect();
        let g = ints.iter().fold(BigInt::from(0), |g, x| g.gcd(x));
        for (&k, v) in comp.iter().zip(ints) {
            out[k] = (v / &g).to_u64().ok_or_else(|| Error::InvalidParameter("weights overflow".into()))?;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(ns: &[&str]) -> Vec<String> {
        ns.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn weights_follow_the_rigging() {
        let g = ValuedGraph::new(names(&["x", "y"]), vec![Edge { u: 0, v: 1, d_uv: 3, d_vu: 1 }]).unwrap();
        // 3·f_y = 1·f_x
        assert_eq!(g.weights(), &[3, 1]);
        assert_eq!(g.dual().weights(), &[1, 3]);
    }

    #[test]
    fn inconsistent_explicit_weights_name_the_edge() {
        let err = ValuedGraph::with_weights(names(&["a", "b"]), vec![Edge { u: 0, v: 1, d_uv: 2, d_vu: 1 }], vec![1, 1])
            .unwrap_err();
        assert_eq!(err, Error::Valuation { u: "a".into(), v: "b".into() });
    }

    #[test]
    fn inconsistent_cycle_is_rejected() {
        let e = |u, v, a, b| Edge { u, v, d_uv: a, d_vu: b };
        let err = ValuedGraph::new(names(&["a", "b", "c"]), vec![e(0, 1, 2, 1), e(1, 2, 1, 1), e(2, 0, 1, 1)]);
        assert!(matches!(err, Err(Error::Valuation { .. })));
    }

    #[test]
    fn split_and_isomorphism() {
        let e = |u, v| Edge { u, v, d_uv: 1, d_vu: 1 };
        let path = ValuedGraph::new(names(&["a", "b", "c", "d"]), vec![e(0, 1), e(1, 2), e(2, 3)]).unwrap();
        assert_eq!(path.split_at_edge(1, 2).unwrap(), (vec![0, 1], vec![2, 3]));
        assert!(path.split_at_edge(0, 2).is_err());
        let rev = ValuedGraph::new(names(&["p", "q", "r", "s"]), vec![e(3, 2), e(2, 1), e(1, 0)]).unwrap();
        assert!(path.isomorphism_to(&rev).is_some());
        let star = ValuedGraph::new(names(&["a", "b", "c", "d"]), vec![e(0, 1), e(0, 2), e(0, 3)]).unwrap();
        assert!(path.isomorphism_to(&star).is_none());
    }
}
