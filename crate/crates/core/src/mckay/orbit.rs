use serde::Serialize;

use super::series::{kkgv_denominator, kostant_multiplicities, kostant_operator, series_quotient, KostantNumbers};
use crate::cartan::{cartan_matrix, graph_nilroot};
use crate::coxeter::reflection_word;
use crate::diagram::{bicolor, build_catalog, DiagramKind, ValuedGraph};
use crate::error::{Error, Result};
use crate::exactmath::{IntPolynomial, RationalMatrix};
use crate::regularity::{extension_vertex, positive_real_roots};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrbitAssembling {
    pub diagram: String,
    pub names: Vec<String>,
    pub h: u64,
    pub kostant: KostantNumbers,
    pub beta: Vec<i64>,
    /// τ^{(n)}β for n = 1..h−1.
    pub orbit: Vec<Vec<i64>>,
    /// z_n = τ^{(n−1)}β − τ^{(n)}β for n = 1..h−1.
    pub assembling: Vec<Vec<i64>>,
    /// Branch vertex (D, E) or midpoint (A_{2m−1}).
    pub center: String,
    /// Reflections of w₁, the part moving β.
    pub w1_part: Vec<String>,
}

impl OrbitAssembling {
    /// z(t)_i = Σ_n (z_n)_i tⁿ.
    pub fn numerator(&self, vertex: usize) -> IntPolynomial {
        let mut c = vec![0i64; self.assembling.len() + 1];
        for (n, z) in self.assembling.iter().enumerate() {
            c[n + 1] = z[vertex];
        }
        IntPolynomial::from_i64s(&c)
    }

    pub fn numerator_named(&self, name: &str) -> Option<IntPolynomial> {
        self.names.iter().position(|n| n == name).map(|i| self.numerator(i))
    }

    /// z(t)_i/((1 − t^a)(1 − t^b)) to order n.
    pub fn vertex_series(&self, vertex: usize, n: usize) -> Vec<i64> {
        series_quotient(&self.numerator(vertex), &kkgv_denominator(self.kostant.a, self.kostant.b), n)
            .expect("denominator starts at 1")
            .iter()
            .map(|x| i64::try_from(x).expect("small coefficient"))
            .collect()
    }
}

fn to_ints(m: &RationalMatrix) -> Vec<Vec<i64>> {
    m.to_i64_rows().expect("Weyl group elements are integral")
}

fn apply(m: &[Vec<i64>], v: &[i64]) -> Vec<i64> {
    m.iter().map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum()).collect()
}

fn center_vertex(g: &ValuedGraph) -> Result<usize> {
    if let Some(v) = (0..g.vertex_count()).find(|&v| g.degree(v) == 3) {
        return Ok(v);
    }
    // a path with an even number of vertices has no midpoint
    let n = g.vertex_count();
    if n % 2 == 0 {
        return Err(Error::Domain("a path of even length has no midpoint".into()));
    }
    let end = (0..n).find(|&v| g.degree(v) <= 1).expect("a path has an end");
    let (mut prev, mut cur) = (usize::MAX, end);
    for _ in 0..n / 2 {
        let next = g.neighbors(cur).into_iter().find(|&w| w != prev).expect("path continues");
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// Orbit of the alternating products w₁, w₂w₁, w₁w₂w₁, … on the highest root.
pub fn orbit_assembling(g: &ValuedGraph) -> Result<OrbitAssembling> {
    let info = g.info().filter(|i| i.kind == DiagramKind::Dynkin).ok_or_else(|| {
        Error::Domain("a Dynkin catalog entry of type A_{2m−1}, D_n or E_n is required".into())
    })?;
    if !g.is_simply_laced() {
        return Err(Error::Domain(format!("{} is not simply laced", info.name)));
    }
    let partner_name = info.affine_partner.clone().ok_or_else(|| Error::Domain("no affine partner".into()))?;
    let partner = build_catalog(&partner_name)?;
    let nil = graph_nilroot(&partner).ok_or_else(|| Error::Consistency("partner has no nil-root".into()))?;
    let h: i64 = nil.iter().sum();
    if h % 2 != 0 {
        return Err(Error::Domain(format!("{}: h = {h} is odd", info.name)));
    }
    let kostant = KostantNumbers::from_nilroot(&nil).ok_or_else(|| Error::Consistency("a·b ≠ 2|G|".into()))?;
    let n = g.vertex_count();
    let beta = positive_real_roots(g, h)
        .into_iter()
        .max_by_key(|z| z.iter().sum::<i64>())
        .ok_or_else(|| Error::Consistency("no roots".into()))?;
    let k = cartan_matrix(g);
    let ki = to_ints(&k);
    let moved: Vec<usize> = (0..n).filter(|&v| apply(&ki, &beta)[v] != 0).collect();
    let p = bicolor(g)?;
    let (p1, p2) = if moved.iter().all(|&v| p.in_s1(v)) {
        (p.s1().to_vec(), p.s2().to_vec())
    } else if moved.iter().all(|&v| !p.in_s1(v)) {
        (p.s2().to_vec(), p.s1().to_vec())
    } else {
        return Err(Error::Consistency("β is moved by both parts".into()));
    };
    let w1 = to_ints(&reflection_word(&k, &p1));
    let w2 = to_ints(&reflection_word(&k, &p2));
    if apply(&w2, &beta) != beta {
        return Err(Error::Consistency("w₂β ≠ β".into()));
    }
    let mut orbit = Vec::new();
    let mut prev = beta.clone();
    let mut assembling = Vec::new();
    for step in 1..h {
        let w = if step % 2 == 1 { &w1 } else { &w2 };
        let next = apply(w, &prev);
        assembling.push(prev.iter().zip(&next).map(|(a, b)| a - b).collect::<Vec<i64>>());
        orbit.push(next.clone());
        prev = next;
    }
    let center = center_vertex(g)?;
    let g_half = (h / 2) as usize;
    let mut twice_center = vec![0; n];
    twice_center[center] = 2;
    if assembling[g_half - 1] != twice_center {
        return Err(Error::Consistency("z_{h/2} ≠ 2α_*".into()));
    }
    for j in 1..g_half {
        if assembling[g_half - 1 + j] != assembling[g_half - 1 - j] {
            return Err(Error::Consistency(format!("z_{{g+{j}}} ≠ z_{{g−{j}}}")));
        }
    }
    Ok(OrbitAssembling {
        diagram: info.name.clone(),
        names: g.names().to_vec(),
        h: h as u64,
        kostant,
        beta,
        orbit,
        assembling,
        center: g.name(center).to_string(),
        w1_part: p1.iter().map(|&v| g.name(v).to_string()).collect(),
    })
}

/// Each vertex series against the Kostant recursion on the affine partner, to order n.
pub fn orbit_matches_kostant(g: &ValuedGraph, orbit: &OrbitAssembling, n: usize) -> Result<bool> {
    let partner_name = g.info().and_then(|i| i.affine_partner.clone()).ok_or_else(|| Error::Domain("no affine partner".into()))?;
    let partner = build_catalog(&partner_name)?;
    let ext = extension_vertex(&partner);
    let rest: Vec<usize> = (0..partner.vertex_count()).filter(|&v| v != ext).collect();
    let reduced = partner.induced(&rest);
    let map = g
        .isomorphism_to(&reduced)
        .ok_or_else(|| Error::Consistency("partner minus its extension vertex is not the diagram".into()))?;
    let report = kostant_multiplicities(&kostant_operator(&partner), partner.names(), ext, n, Some(orbit.kostant))?;
    Ok((0..g.vertex_count()).all(|v| report.components[rest[map[v]]].coefficients == orbit.vertex_series(v, n)))
}

#[cfg(test)]
mod tests {
    use super::*;

    /// E6 vectors laid out as x1 y1 x0 y2 x2 / y3.
    fn e6(g: &ValuedGraph, top: [i64; 5], bottom: i64) -> Vec<i64> {
        let mut v = vec![0; 6];
        for (name, x) in ["x1", "y1", "x0", "y2", "x2"].iter().zip(top) {
            v[g.index_of(name).unwrap()] = x;
        }
        v[g.index_of("y3").unwrap()] = bottom;
        v
    }

    #[test]
    fn e6_orbit_and_assembling_tables() {
        let g = build_catalog("E6").unwrap();
        let o = orbit_assembling(&g).unwrap();
        assert_eq!(o.beta, e6(&g, [1, 2, 3, 2, 1], 2));
        let orbit = [
            ([1, 2, 3, 2, 1], 1),
            ([1, 2, 2, 2, 1], 1),
            ([1, 1, 2, 1, 1], 1),
            ([0, 1, 1, 1, 0], 1),
            ([0, 0, 1, 0, 0], 0),
            ([0, 0, -1, 0, 0], 0),
            ([0, -1, -1, -1, 0], -1),
            ([-1, -1, -2, -1, -1], -1),
            ([-1, -2, -2, -2, -1], -1),
            ([-1, -2, -3, -2, -1], -1),
            ([-1, -2, -3, -2, -1], -2),
        ];
        for (n, (top, bottom)) in orbit.iter().enumerate() {
            assert_eq!(o.orbit[n], e6(&g, *top, *bottom), "τ^({})β", n + 1);
        }
        let z = [
            ([0, 0, 0, 0, 0], 1),
            ([0, 0, 1, 0, 0], 0),
            ([0, 1, 0, 1, 0], 0),
            ([1, 0, 1, 0, 1], 0),
            ([0, 1, 0, 1, 0], 1),
            ([0, 0, 2, 0, 0], 0),
            ([0, 1, 0, 1, 0], 1),
            ([1, 0, 1, 0, 1], 0),
            ([0, 1, 0, 1, 0], 0),
            ([0, 0, 1, 0, 0], 0),
            ([0, 0, 0, 0, 0], 1),
        ];
        for (n, (top, bottom)) in z.iter().enumerate() {
            assert_eq!(o.assembling[n], e6(&g, *top, *bottom), "z_{}", n + 1);
        }
        assert_eq!(o.center, "x0");
        let p = |c: &[i64]| IntPolynomial::from_i64s(c);
        assert_eq!(o.numerator_named("x1").unwrap(), p(&[0, 0, 0, 0, 1, 0, 0, 0, 1]));
        assert_eq!(o.numerator_named("y1").unwrap(), p(&[0, 0, 0, 1, 0, 1, 0, 1, 0, 1]));
        assert_eq!(o.numerator_named("y3").unwrap(), p(&[0, 1, 0, 0, 0, 1, 0, 1, 0, 0, 0, 1]));
        assert_eq!(o.numerator_named("x0").unwrap(), p(&[0, 0, 1, 0, 1, 0, 2, 0, 1, 0, 1]));
        assert!(orbit_matches_kostant(&g, &o, 50).unwrap());
    }

    #[test]
    fn every_admissible_diagram() {
        for name in ["A1", "A3", "A5", "A7", "D4", "D5", "D6", "D7", "E7", "E8"] {
            let g = build_catalog(name).unwrap();
            let o = orbit_assembling(&g).unwrap();
            assert!(orbit_matches_kostant(&g, &o, 60).unwrap(), "{name}");
        }
    }

    #[test]
    fn even_paths_and_multiply_laced_are_rejected() {
        for name in ["A2", "A4", "B3", "F4"] {
            assert!(orbit_assembling(&build_catalog(name).unwrap()).is_err(), "{name}");
        }
    }
}
