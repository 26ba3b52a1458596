use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::transform::transforming_element;
use crate::cartan::{classify_form, graph_nilroot, tits_form, FormKind};
use crate::coxeter::coxeter_matrix;
use crate::diagram::{bicolor, Orientation, ValuedGraph};
use crate::error::{Error, Result};
use crate::exactmath::{dot, primitive_integer_vector, rat};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DefectConstruction {
    /// z ↦ ⟨Tz, z̃^{1∨}⟩.
    InnerProduct,
    /// The fixed vector of the adjoint Coxeter action.
    FixedForm,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DefectForm {
    pub names: Vec<String>,
    /// Coprime integers, positive at the extension vertex.
    pub coefficients: Vec<BigInt>,
    /// Coefficients before normalization.
    pub raw: Vec<BigRational>,
    pub orientation: Orientation,
    pub construction: DefectConstruction,
}

impl DefectForm {
    pub fn value(&self, z: &[i64]) -> BigInt {
        self.coefficients.iter().zip(z).map(|(c, &x)| c * x).sum()
    }

    pub fn value_rational(&self, z: &[BigRational]) -> BigRational {
        self.coefficients
            .iter()
            .zip(z)
            .map(|(c, x)| BigRational::from_integer(c.clone()) * x)
            .sum()
    }

    pub fn coefficient(&self, name: &str) -> Option<&BigInt> {
        self.names.iter().position(|n| n == name).map(|i| &self.coefficients[i])
    }

    /// Positive terms first, then negative ones, each in vertex order.
    pub fn render(&self, ascii: bool) -> String {
        let (times, minus) = if ascii { ("*", "-") } else { ("·", "−") };
        let term = |c: &BigInt, name: &str| {
            let a = c.abs();
            if a == BigInt::from(1) {
                name.to_string()
            } else {
                format!("{a}{times}{name}")
            }
        };
        let mut out = String::new();
        let pos = self.coefficients.iter().zip(&self.names).filter(|(c, _)| c.is_positive());
        let neg = self.coefficients.iter().zip(&self.names).filter(|(c, _)| c.is_negative());
        for (c, name) in pos.chain(neg) {
            let t = term(c, name);
            match (out.is_empty(), c.is_negative()) {
                (true, false) => out.push_str(&t),
                (true, true) => out.push_str(&format!("{minus}{t}")),
                (false, false) => out.push_str(&format!(" + {t}")),
                (false, true) => out.push_str(&format!(" {minus} {t}")),
            }
        }
        if out.is_empty() {
            "0".into()
        } else {
            out
        }
    }
}

/// Extended diagram check: a tree whose Tits form is nonnegative of corank 1.
pub(crate) fn require_extended(g: &ValuedGraph) -> Result<()> {
    g.require_tree()?;
    let f = classify_form(&tits_form(g))?;
    if f.kind != FormKind::Nonnegative || f.corank != 1 {
        return Err(Error::NotExtended(format!("Tits form is {}", f.label())));
    }
    Ok(())
}

/// The vertex whose coefficient is made positive.
pub fn extension_vertex(g: &ValuedGraph) -> usize {
    if let Some(v) = g.info().and_then(|i| i.extension_vertex) {
        return v;
    }
    graph_nilroot(g)
        .and_then(|n| n.iter().position(|&x| x == 1))
        .unwrap_or(0)
}

fn normalize(g: &ValuedGraph, raw: &[BigRational]) -> Result<Vec<BigInt>> {
    if raw.iter().all(Zero::is_zero) {
        return Err(Error::Consistency("defect form vanished".into()));
    }
    let mut v = primitive_integer_vector(raw);
    let ext = extension_vertex(g);
    let pivot = if v[ext].is_zero() {
        v.iter().find(|x| !x.is_zero()).cloned().unwrap()
    } else {
        v[ext].clone()
    };
    if pivot.is_negative() {
        v.iter_mut().for_each(|x| *x = -x.clone());
    }
    Ok(v)
}

/// z̃^{1∨}: the dual diagram's nil-root with its S₂ part negated.
pub fn dual_conjugate_vector(g: &ValuedGraph) -> Result<Vec<BigRational>> {
    require_extended(g)?;
    let nil = graph_nilroot(&g.dual()).ok_or_else(|| Error::NotExtended("dual has no nil-root".into()))?;
    let p = bicolor(g)?;
    Ok(nil
        .iter()
        .enumerate()
        .map(|(v, &x)| if p.in_s1(v) { rat(x) } else { rat(-x) })
        .collect())
}

/// ρ_Δ′(z) = ⟨Tz, z̃^{1∨}⟩ with T⁻¹·C_bicolored·T = C_Δ′.
pub fn defect_form(g: &ValuedGraph, o: &Orientation) -> Result<DefectForm> {
    let w = dual_conjugate_vector(g)?;
    let bic = Orientation::bicolored(g)?;
    let t = transforming_element(g, &bic, o, None)?;
    // ⟨Tz, w⟩ = ⟨z, Tᵀw⟩
    let raw = t.matrix.transpose().mul_vec(&w);
    let coefficients = normalize(g, &raw)?;
    Ok(DefectForm {
        names: g.names().to_vec(),
        coefficients,
        raw,
        orientation: o.clone(),
        construction: DefectConstruction::InnerProduct,
    })
}

/// δ with δ·C_Δ′ = δ.
pub fn dlab_ringel_defect(g: &ValuedGraph, o: &Orientation) -> Result<DefectForm> {
    require_extended(g)?;
    let c = coxeter_matrix(g, o)?.matrix;
    let shifted = &c - &crate::exactmath::RationalMatrix::identity(g.vertex_count());
    let ker = shifted.left_kernel();
    if ker.len() != 1 {
        return Err(Error::Consistency(format!("adjoint fixed space has dimension {}", ker.len())));
    }
    let raw = ker.into_iter().next().unwrap();
    let coefficients = normalize(g, &raw)?;
    Ok(DefectForm {
        names: g.names().to_vec(),
        coefficients,
        raw,
        orientation: o.clone(),
        construction: DefectConstruction::FixedForm,
    })
}

/// c with raw(a) = c·raw(b), when the two forms are proportional.
pub fn proportionality(a: &DefectForm, b: &DefectForm) -> Option<BigRational> {
    let i = b.raw.iter().position(|x| !x.is_zero())?;
    let c = &a.raw[i] / &b.raw[i];
    (!c.is_zero() && a.raw.iter().zip(&b.raw).all(|(x, y)| x == &(&c * y))).then_some(c)
}

/// ⟨z_φ, z̃^{1∨}⟩ = 0 for the exact eigenvector z¹ and the adjoint pair.
pub fn orthogonal_to_nil(g: &ValuedGraph) -> Result<bool> {
    let w = dual_conjugate_vector(g)?;
    let nil = graph_nilroot(g).ok_or_else(|| Error::NotExtended("no nil-root".into()))?;
    let z: Vec<BigRational> = nil.iter().map(|&x| rat(x)).collect();
    Ok(dot(&z, &w).is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{build_catalog, extended_names};

    fn form(name: &str, orient: &str) -> (ValuedGraph, DefectForm) {
        let g = build_catalog(name).unwrap();
        let o = Orientation::parse(&g, orient).unwrap();
        let f = defect_form(&g, &o).unwrap();
        (g, f)
    }

    fn coeffs(g: &ValuedGraph, f: &DefectForm, expected: &[(&str, i64)]) {
        let mut want = vec![BigInt::zero(); g.vertex_count()];
        for &(n, c) in expected {
            want[g.index_of(n).unwrap()] = BigInt::from(c);
        }
        assert_eq!(f.coefficients, want, "{}", f.render(true));
    }

    #[test]
    fn d4_tilde_three_orientations() {
        let (g, f) = form("D4~", "bicolored");
        coeffs(&g, &f, &[("y1", 1), ("y2", 1), ("y3", 1), ("y4", 1), ("x0", -2)]);
        assert_eq!(f.render(true), "y1 + y2 + y3 + y4 - 2*x0");
        let (g, f) = form("D4~", "x0-y2");
        coeffs(&g, &f, &[("y1", 1), ("y3", 1), ("y4", 1), ("y2", -1), ("x0", -1)]);
        let (g, f) = form("D4~", "x0-y2,x0-y3");
        coeffs(&g, &f, &[("y1", 1), ("y4", 1), ("y2", -1), ("y3", -1)]);
    }

    #[test]
    fn e6_tilde_orientations() {
        let (g, f) = form("E6~", "bicolored");
        coeffs(&g, &f, &[("x0", 3), ("x1", 1), ("x2", 1), ("x3", 1), ("y1", -2), ("y2", -2), ("y3", -2)]);
        let (g, f) = form("E6~", "central");
        coeffs(&g, &f, &[("x1", 1), ("x2", 1), ("x3", 1), ("y1", 1), ("y2", 1), ("y3", 1), ("x0", -3)]);
    }

    #[test]
    fn g_tilde_forms_follow_the_nil_root() {
        // nil-root (2, 1, 3) on (x1, y1, y2)
        let (g, f) = form("G22~", "bicolored");
        assert_eq!(graph_nilroot(&g).unwrap(), vec![2, 1, 3]);
        coeffs(&g, &f, &[("y1", 1), ("y2", 1), ("x1", -2)]);
        let (g, f) = form("G22~", "x1-y1");
        coeffs(&g, &f, &[("y1", 1), ("y2", -1), ("x1", 1)]);
        // nil-root (2, 1, 1)
        let (g, f) = form("G21~", "bicolored");
        coeffs(&g, &f, &[("y1", 1), ("y2", 3), ("x1", -2)]);
        let (g, f) = form("G21~", "x1-y1");
        coeffs(&g, &f, &[("y1", 1), ("y2", -3), ("x1", 1)]);
    }

    #[test]
    fn both_constructions_agree_everywhere() {
        for name in extended_names(6) {
            let g = build_catalog(&name).unwrap();
            let b = Orientation::bicolored(&g).unwrap();
            let mut orientations = vec![b.clone(), Orientation::central(&g).unwrap(), b.reversed()];
            if g.edge_count() > 1 {
                orientations.push(b.with_flipped(1));
            }
            for o in orientations {
                let rho = defect_form(&g, &o).unwrap();
                let delta = dlab_ringel_defect(&g, &o).unwrap();
                assert_eq!(rho.coefficients, delta.coefficients, "{name}");
                assert!(proportionality(&rho, &delta).is_some(), "{name}");
                let c = coxeter_matrix(&g, &o).unwrap().matrix;
                let nil: Vec<BigRational> = graph_nilroot(&g).unwrap().iter().map(|&x| rat(x)).collect();
                assert!(rho.value_rational(&nil).is_zero(), "{name}");
                for v in 0..g.vertex_count() {
                    let mut e = vec![rat(0); g.vertex_count()];
                    e[v] = rat(1);
                    assert_eq!(rho.value_rational(&c.mul_vec(&e)), rho.value_rational(&e), "{name}");
                }
            }
            assert!(orthogonal_to_nil(&g).unwrap(), "{name}");
        }
    }

    #[test]
    fn reversal_keeps_the_form() {
        for name in ["E7~", "F41~", "CD5~", "BC3~"] {
            let g = build_catalog(name).unwrap();
            let o = Orientation::central(&g).unwrap();
            assert_eq!(
                defect_form(&g, &o).unwrap().coefficients,
                defect_form(&g, &o.reversed()).unwrap().coefficients,
                "{name}"
            );
        }
    }

    #[test]
    fn non_extended_input_is_rejected() {
        let g = build_catalog("E6").unwrap();
        let o = Orientation::bicolored(&g).unwrap();
        assert!(matches!(defect_form(&g, &o), Err(Error::NotExtended(_))));
    }
}
