use std::collections::VecDeque;

use super::graph::{Edge, ValuedGraph};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiagramKind {
    Dynkin,
    Extended,
    Cycle,
    Tpqr,
    Star,
}

/// Twisted affine data: order r of the diagram automorphism and the finite type X_N.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Twisted {
    pub r: u32,
    pub finite: String,
}

/// Metadata carried by catalog entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogInfo {
    pub name: String,
    pub kind: DiagramKind,
    /// Vertex removed to obtain the Dynkin diagram (extended entries).
    pub extension_vertex: Option<usize>,
    /// Extended diagram whose nil-root sum is the Coxeter number (Dynkin entries).
    pub affine_partner: Option<String>,
    /// Catalog name of the dual diagram.
    pub dual: Option<String>,
    pub kac: Option<String>,
    pub twisted: Option<Twisted>,
}

impl CatalogInfo {
    fn new(name: impl Into<String>, kind: DiagramKind) -> Self {
        CatalogInfo {
            name: name.into(),
            kind,
            extension_vertex: None,
            affine_partner: None,
            dual: None,
            kac: None,
            twisted: None,
        }
    }

    fn partner(mut self, p: impl Into<String>) -> Self {
        self.affine_partner = Some(p.into());
        self
    }

    fn dual(mut self, d: impl Into<String>) -> Self {
        self.dual = Some(d.into());
        self
    }

    fn kac(mut self, k: impl Into<String>) -> Self {
        self.kac = Some(k.into());
        self
    }

    fn twisted(mut self, r: u32, finite: impl Into<String>) -> Self {
        self.twisted = Some(Twisted { r, finite: finite.into() });
        self
    }
}

/// Incremental construction in "build order"; names are assigned at the end.
struct Builder {
    count: usize,
    edges: Vec<Edge>,
    extension: Option<usize>,
}

impl Builder {
    fn new() -> Self {
        Builder { count: 0, edges: Vec::new(), extension: None }
    }

    fn vertex(&mut self) -> usize {
        self.count += 1;
        self.count - 1
    }

    fn rigged(&mut self, a: usize, b: usize, d_ab: u32, d_ba: u32) {
        self.edges.push(Edge { u: a, v: b, d_uv: d_ab, d_vu: d_ba });
    }

    fn link(&mut self, a: usize, b: usize) {
        self.rigged(a, b, 1, 1);
    }

    /// `len` new vertices hanging off `from` as a chain.
    fn chain(&mut self, from: Option<usize>, len: usize) -> Vec<usize> {
        let mut out = Vec::with_capacity(len);
        let mut prev = from;
        for _ in 0..len {
            let v = self.vertex();
            if let Some(p) = prev {
                self.link(p, v);
            }
            out.push(v);
            prev = Some(v);
        }
        out
    }

    fn rerig(&mut self, a: usize, b: usize, d_ab: u32, d_ba: u32) {
        let e = self
            .edges
            .iter_mut()
            .find(|e| e.touches(a) && e.touches(b))
            .expect("rerig on an existing edge");
        *e = Edge { u: a, v: b, d_uv: d_ab, d_vu: d_ba };
    }

    /// Colors from vertex 0 (part x), names each part in build order, puts the
    /// x part first. The x numbering starts at 0 when there is a branch vertex.
    fn finish(self, mut info: CatalogInfo) -> ValuedGraph {
        let n = self.count;
        let mut color = vec![None; n];
        color[0] = Some(false);
        let mut queue = VecDeque::from([0]);
        while let Some(a) = queue.pop_front() {
            for e in self.edges.iter().filter(|e| e.touches(a)) {
                let b = e.other(a);
                if color[b].is_none() {
                    color[b] = Some(!color[a].unwrap());
                    queue.push_back(b);
                }
            }
        }
        let branch = (0..n).any(|a| self.edges.iter().filter(|e| e.touches(a)).count() >= 3);
        let (mut xi, mut yi) = (usize::from(!branch), 1);
        let mut names = Vec::with_capacity(n);
        for c in &color {
            if c.expect("catalog graphs are connected") {
                names.push(format!("y{yi}"));
                yi += 1;
            } else {
                names.push(format!("x{xi}"));
                xi += 1;
            }
        }
        let order: Vec<usize> = (0..n)
            .filter(|&a| color[a] == Some(false))
            .chain((0..n).filter(|&a| color[a] == Some(true)))
            .collect();
        info.extension_vertex = self.extension;
        ValuedGraph::new(names, self.edges)
            .expect("catalog riggings are valued")
            .set_info(info)
            .reordered(&order)
    }
}

/// Center plus arms of the given lengths (center excluded); returns the arms.
fn tree_with_arms(b: &mut Builder, arms: &[usize]) -> Vec<Vec<usize>> {
    let center = b.vertex();
    arms.iter().map(|&len| b.chain(Some(center), len)).collect()
}

fn range_error(family: &str, n: usize, min: usize) -> Error {
    Error::InvalidParameter(format!("{family}{n}: index must be at least {min}"))
}

/// The Dynkin diagrams A_n, B_n, C_n, D_n, E_6..8, F_4, G_2.
pub fn dynkin(family: &str, n: usize) -> Result<ValuedGraph> {
    let name = format!("{family}{n}");
    let info = CatalogInfo::new(name.clone(), DiagramKind::Dynkin);
    let mut b = Builder::new();
    let info = match family {
        "A" => {
            if n < 1 {
                return Err(range_error(family, n, 1));
            }
            b.chain(None, n);
            let partner = if n == 1 { "A12~".to_string() } else { format!("A{n}~") };
            info.partner(partner).dual(name)
        }
        "B" | "C" => {
            if n < 2 {
                return Err(range_error(family, n, 2));
            }
            let p = b.chain(None, n);
            // B_n: the last vertex is short (d_{n,n−1} = 2); C_n is the transpose.
            if family == "B" {
                b.rerig(p[n - 1], p[n - 2], 2, 1);
                let partner = if n == 2 { "C2~".to_string() } else { format!("CD{n}~") };
                info.partner(partner).dual(format!("C{n}"))
            } else {
                b.rerig(p[n - 1], p[n - 2], 1, 2);
                info.partner(format!("C{n}~")).dual(format!("B{n}"))
            }
        }
        "D" => {
            if n < 4 {
                return Err(range_error(family, n, 4));
            }
            let spine = b.chain(None, n - 3);
            b.chain(Some(spine[0]), 1);
            let last = *spine.last().unwrap();
            b.chain(Some(last), 1);
            b.chain(Some(last), 1);
            info.partner(format!("D{n}~")).dual(name)
        }
        "E" => {
            let arms: &[usize] = match n {
                6 => &[2, 2, 1],
                7 => &[3, 2, 1],
                8 => &[4, 2, 1],
                _ => return Err(Error::InvalidParameter(format!("E{n}: only E6, E7, E8 are Dynkin"))),
            };
            tree_with_arms(&mut b, arms);
            info.partner(format!("E{n}~")).dual(name)
        }
        "F" if n == 4 => {
            let p = b.chain(None, 4);
            b.rerig(p[1], p[2], 1, 2);
            info.partner("F42~").dual("F4")
        }
        "G" if n == 2 => {
            // x1 is the short vertex: K = [[2,−3],[−1,2]].
            let p = b.chain(None, 2);
            b.rerig(p[0], p[1], 3, 1);
            info.partner("G22~").dual("G2")
        }
        _ => return Err(Error::UnknownDiagram(name)),
    };
    Ok(b.finish(info))
}

/// Extended Dynkin diagrams. Every non-cycle entry has n+1 vertices except the
/// exceptional ones, which are named by their own indices.
pub fn extended(family: &str, n: usize) -> Result<ValuedGraph> {
    let family = if family == "DD" { "DC" } else { family };
    let name = format!("{family}{n}~");
    let info = CatalogInfo::new(name.clone(), DiagramKind::Extended);
    let mut b = Builder::new();
    let info = match family {
        "A" if n == 11 => {
            // A2^(2); the extension vertex carries label 1.
            let x = b.vertex();
            let y = b.vertex();
            b.rigged(x, y, 4, 1);
            b.extension = Some(y);
            info.kac("A2^(2)").twisted(2, "A2").dual(name)
        }
        "A" if n == 12 => {
            let x = b.vertex();
            let y = b.vertex();
            b.rigged(x, y, 2, 2);
            b.extension = Some(y);
            info.kac("A1^(1)").dual(name)
        }
        "A" => return cycle(n, 1),
        "B" | "C" | "BC" => {
            if n < 2 {
                return Err(range_error(family, n, 2));
            }
            let p = b.chain(None, n + 1);
            b.extension = Some(p[0]);
            match family {
                // D_{n+1}^(2); dual C̃_n
                "B" => {
                    b.rerig(p[0], p[1], 2, 1);
                    b.rerig(p[n], p[n - 1], 2, 1);
                    info.kac(format!("D{}^(2)", n + 1)).twisted(2, if n == 2 { "A3".to_string() } else { format!("D{}", n + 1) }).dual(format!("C{n}~"))
                }
                // C_n^(1); dual B̃_n
                "C" => {
                    b.rerig(p[0], p[1], 1, 2);
                    b.rerig(p[n], p[n - 1], 1, 2);
                    info.kac(format!("C{n}^(1)")).dual(format!("B{n}~"))
                }
                // A_{2n}^(2), labels (2,…,2,1); self-dual
                _ => {
                    b.rerig(p[0], p[1], 2, 1);
                    b.rerig(p[n - 1], p[n], 2, 1);
                    b.extension = Some(p[n]);
                    info.kac(format!("A{}^(2)", 2 * n)).twisted(2, format!("A{}", 2 * n)).dual(name)
                }
            }
        }
        "CD" | "DC" => {
            if n < 3 {
                return Err(range_error(family, n, 3));
            }
            let ext = b.vertex();
            let other = b.vertex();
            let spine = b.chain(None, n - 1);
            b.link(ext, spine[0]);
            b.link(other, spine[0]);
            b.extension = Some(ext);
            let (tail, before) = (spine[n - 2], spine[n - 3]);
            if family == "CD" {
                // B_n^(1), labels (1,1,2,…,2); dual D̃C_n
                b.rerig(tail, before, 2, 1);
                info.kac(format!("B{n}^(1)")).dual(format!("DC{n}~"))
            } else {
                // A_{2n−1}^(2), labels (1,1,2,…,2,1); dual C̃D_n
                b.rerig(tail, before, 1, 2);
                info.kac(format!("A{}^(2)", 2 * n - 1))
                    .twisted(2, format!("A{}", 2 * n - 1))
                    .dual(format!("CD{n}~"))
            }
        }
        "D" => {
            if n < 4 {
                return Err(range_error(family, n, 4));
            }
            let spine = b.chain(None, n - 3);
            let ext = b.chain(Some(spine[0]), 1)[0];
            b.chain(Some(spine[0]), 1);
            let last = *spine.last().unwrap();
            b.chain(Some(last), 1);
            b.chain(Some(last), 1);
            b.extension = Some(ext);
            info.kac(format!("D{n}^(1)")).dual(name)
        }
        "E" => {
            let (arms, ext_arm): (&[usize], usize) = match n {
                6 => (&[2, 2, 2], 2),
                7 => (&[3, 3, 1], 1),
                8 => (&[5, 2, 1], 0),
                _ => return Err(Error::InvalidParameter(format!("E{n}~: only E6~, E7~, E8~ exist"))),
            };
            let arms = tree_with_arms(&mut b, arms);
            b.extension = arms[ext_arm].last().copied();
            info.kac(format!("E{n}^(1)")).dual(name)
        }
        "F" if n == 41 || n == 42 => {
            let p = b.chain(None, 5);
            b.extension = Some(p[0]);
            if n == 42 {
                // F4^(1), labels (1,2,3,4,2); dual F̃41
                b.rerig(p[2], p[3], 1, 2);
                info.kac("F4^(1)").dual("F41~")
            } else {
                // E6^(2), labels (1,2,3,2,1); dual F̃42
                b.rerig(p[2], p[3], 2, 1);
                info.kac("E6^(2)").twisted(2, "E6").dual("F42~")
            }
        }
        "G" if n == 21 || n == 22 || n == 12 => {
            let mid = b.vertex();
            let ext = b.vertex();
            let end = b.vertex();
            b.link(mid, ext);
            b.extension = Some(ext);
            if n == 21 {
                // D4^(3), labels (2,1,1) on (x1,y1,y2); dual G̃22
                b.rigged(mid, end, 3, 1);
                info.kac("D4^(3)").twisted(3, "D4").dual("G22~")
            } else {
                // G2^(1), labels (2,1,3); G̃12 names the same graph; dual G̃21
                b.rigged(mid, end, 1, 3);
                CatalogInfo::new("G22~", DiagramKind::Extended).kac("G2^(1)").dual("G21~")
            }
        }
        _ => return Err(Error::UnknownDiagram(name)),
    };
    Ok(b.finish(info))
}

/// The Ã_n cycle v0 … vn with class index k (canonicalized to min(k, n+1−k)).
pub fn cycle(n: usize, k: usize) -> Result<ValuedGraph> {
    if n < 2 {
        return Err(Error::InvalidParameter(
            "the cycle needs n ≥ 2; use A11~ or A12~ for the two-vertex diagrams".into(),
        ));
    }
    if k < 1 || k > n {
        return Err(Error::InvalidParameter(format!("class index k = {k} outside 1..={n}")));
    }
    let k = k.min(n + 1 - k);
    let names = (0..=n).map(|i| format!("v{i}")).collect();
    let edges = (0..=n)
        .map(|i| Edge { u: i, v: (i + 1) % (n + 1), d_uv: 1, d_vu: 1 })
        .collect();
    let info = CatalogInfo::new(format!("A[{n}]~k={k}"), DiagramKind::Cycle)
        .kac(format!("A{n}^(1)"))
        .dual(format!("A[{n}]~k={k}"));
    Ok(ValuedGraph::new(names, edges)?.set_cycle_class(k).set_info(info))
}

/// T_{p,q,r}: three branches of p, q, r vertices sharing the branch vertex.
pub fn tpqr(p: usize, q: usize, r: usize) -> Result<ValuedGraph> {
    if p.min(q).min(r) == 0 {
        return Err(Error::InvalidParameter("branch lengths must be positive".into()));
    }
    if p.min(q).min(r) == 1 {
        let [a, b2] = {
            let mut v = [p, q, r];
            v.sort_unstable();
            [v[1], v[2]]
        };
        return Err(Error::InvalidParameter(format!(
            "T[{p},{q},{r}] has a trivial branch; it is the path A{}, use that name",
            a + b2 - 1
        )));
    }
    let mut b = Builder::new();
    tree_with_arms(&mut b, &[p - 1, q - 1, r - 1]);
    let name = format!("T[{p},{q},{r}]");
    Ok(b.finish(CatalogInfo::new(name.clone(), DiagramKind::Tpqr).dual(name)))
}

/// The star *_n: one center and n − 1 rays.
pub fn star(n: usize) -> Result<ValuedGraph> {
    if n < 2 {
        return Err(Error::InvalidParameter("a star needs at least 2 vertices".into()));
    }
    let mut b = Builder::new();
    let c = b.vertex();
    for _ in 1..n {
        b.chain(Some(c), 1);
    }
    let name = format!("*[{n}]");
    Ok(b.finish(CatalogInfo::new(name.clone(), DiagramKind::Star).dual(name)))
}

fn parse_index(s: &str) -> Option<usize> {
    let s = s.strip_prefix('[').and_then(|t| t.strip_suffix(']')).unwrap_or(s);
    if s.is_empty() || !s.bytes().all(|c| c.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

fn parse_list(s: &str) -> Option<Vec<usize>> {
    let inner = s.strip_prefix('[')?.strip_suffix(']')?;
    inner.split(',').map(|t| parse_index(t.trim())).collect()
}

/// Resolves a catalog name: `E8`, `E8~`, `F41~`, `CD5~`, `T[2,3,7]`, `*[5]`,
/// `A[5]~k=2`, with optional brackets around indices.
pub fn build_catalog(name: &str) -> Result<ValuedGraph> {
    let s = name.trim();
    let unknown = || Error::UnknownDiagram(name.to_string());
    if let Some(rest) = s.strip_prefix('T') {
        if rest.starts_with('[') {
            let v = parse_list(rest).filter(|v| v.len() == 3).ok_or_else(unknown)?;
            return tpqr(v[0], v[1], v[2]);
        }
    }
    if let Some(rest) = s.strip_prefix('*') {
        return star(parse_index(rest).ok_or_else(unknown)?);
    }
    let (body, class) = match s.split_once("~k=") {
        Some((b, k)) => (format!("{b}~"), Some(parse_index(k).ok_or_else(unknown)?)),
        None => (s.to_string(), None),
    };
    let (body, tilde) = match body.strip_suffix('~') {
        Some(b) => (b.to_string(), true),
        None => (body, false),
    };
    let split = body.find(|c: char| !c.is_ascii_uppercase()).ok_or_else(unknown)?;
    let (family, index) = body.split_at(split);
    let bracketed = index.starts_with('[');
    let n = parse_index(index).ok_or_else(unknown)?;
    match (tilde, class) {
        (false, None) => dynkin(family, n),
        (true, Some(k)) if family == "A" => cycle(n, k),
        (true, None) if family == "A" && bracketed => cycle(n, 1),
        (true, None) => extended(family, n),
        _ => Err(unknown()),
    }
}

/// Every fixed-size catalog name plus the families up to `max_n`.
pub fn catalog_names(max_n: usize) -> Vec<String> {
    let mut out: Vec<String> = Vec::new();
    for n in 1..=max_n {
        out.push(format!("A{n}"));
    }
    for n in 2..=max_n {
        out.push(format!("B{n}"));
        out.push(format!("C{n}"));
    }
    for n in 4..=max_n {
        out.push(format!("D{n}"));
    }
    out.extend(["E6", "E7", "E8", "F4", "G2"].map(String::from));
    out.extend(extended_names(max_n));
    out
}

/// Extended entries (tree-shaped) up to `max_n`.
pub fn extended_names(max_n: usize) -> Vec<String> {
    let mut out: Vec<String> = vec!["A11~".into(), "A12~".into()];
    for n in 2..=max_n {
        out.push(format!("B{n}~"));
        out.push(format!("C{n}~"));
        out.push(format!("BC{n}~"));
    }
    for n in 3..=max_n {
        out.push(format!("CD{n}~"));
        out.push(format!("DC{n}~"));
    }
    for n in 4..=max_n {
        out.push(format!("D{n}~"));
    }
    out.extend(["E6~", "E7~", "E8~", "F41~", "F42~", "G21~", "G22~"].map(String::from));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn e8_is_simply_laced_with_eight_vertices() {
        let g = build_catalog("E8").unwrap();
        assert_eq!(g.vertex_count(), 8);
        assert_eq!(g.edge_count(), 7);
        assert!(g.is_simply_laced());
        assert!(g.is_tree());
    }

    #[test]
    fn t237_has_ten_vertices() {
        let g = build_catalog("T[2,3,7]").unwrap();
        assert_eq!(g.vertex_count(), 10);
        assert_eq!((0..10).filter(|&v| g.degree(v) == 3).count(), 1);
        let e8 = build_catalog("T[2,3,5]").unwrap();
        assert!(e8.isomorphism_to(&build_catalog("E8").unwrap()).is_some());
        assert!(build_catalog("T[2,3,3]").unwrap().isomorphism_to(&build_catalog("E6").unwrap()).is_some());
    }

    #[test]
    fn trivial_branch_gets_a_hint() {
        let err = build_catalog("T[1,3,4]").unwrap_err();
        assert!(err.to_string().contains("A6"), "{err}");
    }

    #[test]
    fn named_vertices() {
        let d4 = build_catalog("D4~").unwrap();
        assert_eq!(d4.names(), &["x0", "y1", "y2", "y3", "y4"]);
        assert_eq!(d4.info().unwrap().extension_vertex, Some(1));
        let e6 = build_catalog("E6~").unwrap();
        assert_eq!(e6.names(), &["x0", "x1", "x2", "x3", "y1", "y2", "y3"]);
        assert_eq!(e6.info().unwrap().extension_vertex, e6.index_of("x3"));
        let g = build_catalog("G22~").unwrap();
        assert_eq!(g.names(), &["x1", "y1", "y2"]);
        assert_eq!(g.valuation(0, 2), Some((1, 3)));
        assert_eq!(build_catalog("G12~").unwrap(), g);
    }

    #[test]
    fn removing_the_extension_vertex_gives_the_partner() {
        for (ext, fin) in [
            ("D4~", "D4"),
            ("D7~", "D7"),
            ("E6~", "E6"),
            ("E7~", "E7"),
            ("E8~", "E8"),
            ("F42~", "F4"),
            ("G22~", "G2"),
            ("C4~", "C4"),
            ("CD5~", "B5"),
            ("C2~", "B2"),
        ] {
            let g = build_catalog(ext).unwrap();
            let x = g.info().unwrap().extension_vertex.unwrap();
            let f = build_catalog(fin).unwrap();
            assert!(g.remove_vertex(x).isomorphism_to(&f).is_some(), "{ext} → {fin}");
        }
    }

    #[test]
    fn dual_pairs() {
        for name in extended_names(6) {
            let g = build_catalog(&name).unwrap();
            let dual_name = g.info().unwrap().dual.clone().unwrap();
            let d = build_catalog(&dual_name).unwrap();
            assert!(g.dual().isomorphism_to(&d).is_some(), "dual of {name}");
            assert_eq!(g.dual().dual(), g.induced(&(0..g.vertex_count()).collect::<Vec<_>>()));
        }
        let g21 = build_catalog("G21~").unwrap();
        assert!(g21.dual().same_rigging(&build_catalog("G12~").unwrap()));
    }

    #[test]
    fn cycle_is_flagged() {
        let c = build_catalog("A[5]~k=2").unwrap();
        assert_eq!(c.vertex_count(), 6);
        assert_eq!(c.cycle_class(), Some(2));
        assert!(c.require_tree().is_err());
        assert_eq!(build_catalog("A[5]~k=5").unwrap().cycle_class(), Some(1));
        assert_eq!(build_catalog("A5~").unwrap().cycle_class(), Some(1));
    }

    #[test]
    fn star_counts_vertices() {
        let s = build_catalog("*[5]").unwrap();
        assert_eq!(s.vertex_count(), 5);
        assert_eq!(s.degree(0), 4);
    }

    #[test]
    fn unknown_names() {
        for bad in ["Q3", "E9", "F5~", "", "A", "T[2,3]", "G2~"] {
            assert!(build_catalog(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn every_catalog_tree_is_valued() {
        for name in catalog_names(9) {
            let g = build_catalog(&name).unwrap();
            assert!(g.is_tree(), "{name}");
            for e in g.edges() {
                assert_eq!(e.d_uv as u64 * g.weights()[e.v], e.d_vu as u64 * g.weights()[e.u], "{name}");
            }
        }
    }
}
