use std::collections::{BTreeSet, VecDeque};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use crate::cartan::{cartan_matrix, classify_form, graph_nilroot, tits_form, FormKind};
use crate::coxeter::{affine_an_charpoly, coxeter_charpoly};
use crate::diagram::{build_catalog, DiagramKind, ValuedGraph};
use crate::error::{Error, Result};
use crate::exactmath::{factor_cyclotomic_default, IntPolynomial};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoxeterNumbers {
    /// Catalog name the numbers were read from.
    pub name: Option<String>,
    pub h: u64,
    /// Affine Coxeter number (extended diagrams only).
    pub h_a: Option<u64>,
    pub h_dual: u64,
    /// Exponents of a Dynkin diagram, ascending; empty for extended diagrams.
    pub exponents: Vec<u64>,
}

fn nil_sum(g: &ValuedGraph) -> Result<u64> {
    let v = graph_nilroot(g).ok_or_else(|| Error::NotExtended("no positive nil-root".into()))?;
    Ok(v.iter().map(|&x| x as u64).sum())
}

fn is_positive_definite(g: &ValuedGraph) -> bool {
    classify_form(&tits_form(g)).is_ok_and(|f| f.kind == FormKind::PositiveDefinite)
}

/// Catalog name of the Dynkin diagram isomorphic to a connected positive-definite tree.
pub fn identify_dynkin(g: &ValuedGraph) -> Option<String> {
    if !g.is_tree() || !is_positive_definite(g) {
        return None;
    }
    let n = g.vertex_count();
    let mut candidates = vec![format!("A{n}"), format!("B{n}"), format!("C{n}"), format!("D{n}")];
    candidates.extend(["E6", "E7", "E8", "F4", "G2"].map(String::from));
    candidates
        .into_iter()
        .filter_map(|name| build_catalog(&name).ok().map(|c| (name, c)))
        .find(|(_, c)| c.vertex_count() == n && g.isomorphism_to(c).is_some())
        .map(|(name, _)| name)
}

/// Exponents from the cyclotomic factors of a Dynkin characteristic polynomial:
/// each Φ_d contributes j·h/d for 1 ≤ j < d coprime to d.
pub fn exponents_from_charpoly(chi: &IntPolynomial, h: u64) -> Result<Vec<u64>> {
    let fac = factor_cyclotomic_default(chi)?;
    if !fac.is_complete() {
        return Err(Error::Domain("characteristic polynomial is not a product of cyclotomics".into()));
    }
    let mut out = Vec::new();
    for (&d, &mult) in &fac.factors {
        let d = d as u64;
        if h % d != 0 {
            return Err(Error::Consistency(format!("order {d} does not divide h = {h}")));
        }
        for j in (1..d.max(2)).filter(|j| j.gcd(&d) == 1) {
            for _ in 0..mult {
                out.push(j * h / d);
            }
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// Π (1 + t^{2mᵢ+1}).
pub fn poincare_polynomial(exponents: &[u64]) -> IntPolynomial {
    exponents
        .iter()
        .map(|&m| &IntPolynomial::one() + &IntPolynomial::monomial(BigInt::one(), 2 * m as usize + 1))
        .product()
}

/// Π (mᵢ + 1).
pub fn weyl_group_order(exponents: &[u64]) -> BigInt {
    exponents.iter().map(|&m| BigInt::from(m + 1)).product()
}

/// lcm of the eigenvalue orders after removing the 2×2 block at 1.
fn affine_number(chi: &IntPolynomial) -> Result<u64> {
    let fac = factor_cyclotomic_default(chi)?;
    if !fac.is_complete() {
        return Err(Error::Consistency("affine characteristic polynomial is not cyclotomic".into()));
    }
    let mut factors = fac.factors;
    match factors.get_mut(&1) {
        Some(m) if *m >= 2 => *m -= 2,
        _ => return Err(Error::Consistency("missing the double eigenvalue 1".into())),
    }
    Ok(factors
        .iter()
        .filter(|(_, &m)| m > 0)
        .fold(1u64, |acc, (&d, _)| acc.lcm(&(d as u64))))
}

pub fn coxeter_numbers(g: &ValuedGraph) -> Result<CoxeterNumbers> {
    let info = g.info();
    let kind = info.map(|i| i.kind);
    let name = info.map(|i| i.name.clone()).or_else(|| identify_dynkin(g));
    if kind == Some(DiagramKind::Cycle) {
        let n = g.vertex_count() - 1;
        let k = g.cycle_class().unwrap_or(1);
        let h_a = affine_number(&affine_an_charpoly(n, k)?)?;
        return Ok(CoxeterNumbers { name, h: n as u64 + 1, h_a: Some(h_a), h_dual: n as u64 + 1, exponents: vec![] });
    }
    let dynkin_name = match kind {
        Some(DiagramKind::Dynkin) => name.clone(),
        Some(DiagramKind::Extended) => None,
        _ => identify_dynkin(g),
    };
    if let Some(dn) = dynkin_name {
        let catalog = build_catalog(&dn)?;
        let partner_name = catalog
            .info()
            .and_then(|i| i.affine_partner.clone())
            .ok_or_else(|| Error::UnknownDiagram(dn.clone()))?;
        let partner = build_catalog(&partner_name)?;
        let h = nil_sum(&partner)?;
        let h_dual = nil_sum(&partner.dual())?;
        let exponents = exponents_from_charpoly(&coxeter_charpoly(g)?, h)?;
        return Ok(CoxeterNumbers { name: Some(dn), h, h_a: None, h_dual, exponents });
    }
    // extended catalog entries and any affine tree
    let h = nil_sum(g).map_err(|_| {
        Error::Domain("Coxeter numbers need a Dynkin or extended Dynkin diagram".into())
    })?;
    let h_dual = nil_sum(&g.dual())?;
    let h_a = affine_number(&coxeter_charpoly(g)?)?;
    Ok(CoxeterNumbers { name, h, h_a: Some(h_a), h_dual, exponents: vec![] })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootCount {
    pub rank: usize,
    /// All roots in simple-root coordinates, sorted.
    pub roots: Vec<Vec<i64>>,
    pub total: usize,
    pub positive: usize,
    /// Height of the highest root.
    pub highest_height: i64,
    pub h: Option<u64>,
    /// h·l = |Δ|, when h is known.
    pub hl_holds: Option<bool>,
    /// h = highest height + 1, when h is known.
    pub height_holds: Option<bool>,
}

const ROOT_LIMIT: usize = 200_000;

fn enumerate_roots(g: &ValuedGraph) -> Result<Vec<Vec<i64>>> {
    let k = cartan_matrix(g).to_i64_rows().expect("integral Cartan matrix");
    let n = k.len();
    let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut queue = VecDeque::new();
    for i in 0..n {
        for sign in [1, -1] {
            let mut e = vec![0; n];
            e[i] = sign;
            if seen.insert(e.clone()) {
                queue.push_back(e);
            }
        }
    }
    while let Some(z) = queue.pop_front() {
        for (i, row) in k.iter().enumerate() {
            let pairing: i64 = row.iter().zip(&z).map(|(a, b)| a * b).sum();
            if pairing == 0 {
                continue;
            }
            let mut w = z.clone();
            w[i] -= pairing;
            if !(w.iter().all(|&x| x >= 0) || w.iter().all(|&x| x <= 0)) {
                return Err(Error::Consistency("reflection produced a mixed-sign root".into()));
            }
            if seen.insert(w.clone()) {
                if seen.len() > ROOT_LIMIT {
                    return Err(Error::Domain("root system is not finite".into()));
                }
                queue.push_back(w);
            }
        }
    }
    Ok(seen.into_iter().collect())
}

pub fn root_system_count(g: &ValuedGraph) -> Result<RootCount> {
    if !is_positive_definite(g) {
        return Err(Error::Domain("root system is not finite: the Tits form is not positive definite".into()));
    }
    let roots = enumerate_roots(g)?;
    let rank = g.vertex_count();
    let positive = roots.iter().filter(|r| r.iter().all(|&x| x >= 0)).count();
    let highest_height = roots.iter().map(|r| r.iter().sum::<i64>()).max().unwrap_or(0);
    let h = if g.is_tree() { coxeter_numbers(g).ok().map(|c| c.h) } else { None };
    let total = roots.len();
    Ok(RootCount {
        rank,
        total,
        positive,
        highest_height,
        h,
        hl_holds: h.map(|h| h as usize * rank == total),
        height_holds: h.map(|h| h as i64 == highest_height + 1),
        roots,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RlhCheck {
    pub r: u32,
    pub l: usize,
    pub h: u64,
    pub finite: String,
    /// |Δ(X_N)| by enumeration.
    pub roots: usize,
    pub holds: bool,
}

/// r·l·h = |Δ(X_N)| for an extended catalog entry of type X_N^(r).
pub fn rlh_check(g: &ValuedGraph) -> Result<RlhCheck> {
    let not_extended = || Error::NotExtended("rlh needs an extended catalog entry".into());
    let info = g.info().ok_or_else(not_extended)?;
    if !matches!(info.kind, DiagramKind::Extended | DiagramKind::Cycle) {
        return Err(not_extended());
    }
    let h = nil_sum(g)?;
    let l = g.vertex_count() - 1;
    let (r, finite_graph, finite) = match &info.twisted {
        Some(t) => (t.r, build_catalog(&t.finite)?, t.finite.clone()),
        None => {
            let fg = g.remove_vertex(info.extension_vertex.unwrap_or(0));
            let name = identify_dynkin(&fg).unwrap_or_else(|| "?".into());
            (1, fg, name)
        }
    };
    let roots = enumerate_roots(&finite_graph)?.len();
    Ok(RlhCheck { r, l, h, finite, roots, holds: r as usize * l * h as usize == roots })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::extended_names;

    fn numbers(name: &str) -> CoxeterNumbers {
        coxeter_numbers(&build_catalog(name).unwrap()).unwrap()
    }

    #[test]
    fn extended_table() {
        let rows: &[(&str, u64, u64, u64)] = &[
            ("E6~", 6, 12, 12),
            ("E7~", 12, 18, 18),
            ("E8~", 30, 30, 30),
            ("D4~", 2, 6, 6),
            ("D5~", 6, 8, 8),
            ("D6~", 4, 10, 10),
            ("A11~", 1, 3, 3),
            ("A12~", 1, 2, 2),
            ("BC3~", 3, 7, 7),
            ("G22~", 2, 6, 4),
            ("G21~", 2, 4, 6),
            ("F42~", 6, 12, 9),
            ("F41~", 6, 9, 12),
            ("C4~", 4, 8, 5),
            ("B4~", 4, 5, 8),
            ("CD5~", 4, 10, 9),
            ("CD4~", 6, 8, 7),
            ("DD5~", 4, 9, 10),
        ];
        for &(name, ha, h, hd) in rows {
            let c = numbers(name);
            assert_eq!((c.h_a, c.h, c.h_dual), (Some(ha), h, hd), "{name}");
        }
    }

    #[test]
    fn dynkin_numbers_and_exponents() {
        let g2 = numbers("G2");
        assert_eq!(g2.exponents, vec![1, 5]);
        assert_eq!(g2.h, 6);
        assert_eq!(poincare_polynomial(&g2.exponents), IntPolynomial::from_i64s(&[1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1]));
        assert_eq!(weyl_group_order(&g2.exponents), BigInt::from(12));
        assert_eq!(weyl_group_order(&numbers("A2").exponents), BigInt::from(6));
        assert_eq!(weyl_group_order(&numbers("D4").exponents), BigInt::from(192));
        assert_eq!(numbers("D4").exponents, vec![1, 3, 3, 5]);
        assert_eq!(numbers("E8").exponents, vec![1, 7, 11, 13, 17, 19, 23, 29]);
        assert_eq!(weyl_group_order(&numbers("E8").exponents), BigInt::from(696_729_600u64));
        assert_eq!((numbers("B5").h, numbers("B5").h_dual), (10, 9));
        assert_eq!((numbers("C5").h, numbers("C5").h_dual), (10, 6));
        assert_eq!((numbers("F4").h, numbers("F4").h_dual), (12, 9));
        assert_eq!((numbers("G2").h_dual, numbers("E7").h), (4, 18));
    }

    #[test]
    fn every_extended_entry_has_numbers() {
        for name in extended_names(7) {
            let c = numbers(&name);
            assert!(c.h_a.unwrap() >= 1 && c.h >= 2, "{name}");
        }
        let cyc = numbers("A[5]~k=2");
        assert_eq!((cyc.h, cyc.h_a), (6, Some(4)));
    }

    #[test]
    fn relabelled_dynkin_is_identified() {
        let g = build_catalog("E6").unwrap();
        let order: Vec<usize> = (0..6).rev().collect();
        let h = g.reordered(&order).induced(&(0..6).collect::<Vec<_>>());
        assert_eq!(identify_dynkin(&h).as_deref(), Some("E6"));
        assert_eq!(coxeter_numbers(&h).unwrap().h, 12);
        assert!(coxeter_numbers(&build_catalog("T[2,3,7]").unwrap()).is_err());
    }

    #[test]
    fn root_counts() {
        for (name, count) in [("A2", 6), ("D4", 24), ("E6", 72), ("E7", 126), ("E8", 240), ("G2", 12), ("F4", 48), ("B3", 18), ("C4", 32)] {
            let r = root_system_count(&build_catalog(name).unwrap()).unwrap();
            assert_eq!(r.total, count, "{name}");
            assert_eq!(r.hl_holds, Some(true), "{name}");
            assert_eq!(r.height_holds, Some(true), "{name}");
        }
        assert!(root_system_count(&build_catalog("E6~").unwrap()).is_err());
    }

    #[test]
    fn rlh_rows() {
        for (name, r, l, h, roots) in [
            ("A11~", 2, 1, 3, 6),
            ("BC3~", 2, 3, 7, 42),
            ("DD4~", 2, 4, 7, 56),
            ("B3~", 2, 3, 4, 24),
            ("F41~", 2, 4, 9, 72),
            ("G21~", 3, 2, 4, 24),
            ("E6~", 1, 6, 12, 72),
        ] {
            let c = rlh_check(&build_catalog(name).unwrap()).unwrap();
            assert_eq!((c.r, c.l, c.h, c.roots), (r, l, h, roots), "{name}");
            assert!(c.holds, "{name}");
        }
    }
}
