//! Golden reference tables, regenerated from scratch and diffed against `tests/golden`.

use std::path::{Path, PathBuf};

use serde_json::json;

use super::commands::{character_table_text, matrix_text};
use super::render::{factorization, f6, ints, poly, table};
use super::{Failure, Output};
use crate::coxeter::{coxeter_charpoly, spectral_radius, tpqr_series_charpoly, SeriesFamily};
use crate::diagram::{build_catalog, Orientation};
use crate::error::Result;
use crate::exactmath::factor_cyclotomic_default;
use crate::mckay::{
    build_group, character_table, ebeling_poincare, kostant_numbers, mckay_matrix, orbit_assembling,
    slodowy_matrices, GroupKind, SubgroupPair,
};
use crate::regularity::{defect_form, dlab_ringel_defect};
use crate::spectral::{coxeter_numbers, default_tol, jordan_structure, rlh_check, root_system_count};

const DYNKIN: [&str; 15] =
    ["A1", "A2", "A3", "A4", "A5", "B3", "C3", "D4", "D5", "D6", "E6", "E7", "E8", "F4", "G2"];
const EXTENDED: [&str; 22] = [
    "A11~", "A12~", "A[3]~k=1", "A[5]~k=2", "B3~", "C3~", "BC3~", "CD4~", "DD4~", "CD5~", "DD5~", "D4~", "D5~",
    "D6~", "E6~", "E7~", "E8~", "F41~", "F42~", "G21~", "G22~", "B4~",
];

pub type Generator = fn() -> Result<String>;

/// Every golden table, by file stem.
pub fn all_tables() -> Vec<(&'static str, Generator)> {
    vec![
        ("dynkin_charpolys", dynkin_charpolys),
        ("extended_charpolys", extended_charpolys),
        ("coxeter_numbers", coxeter_numbers_table),
        ("tpqr_series", tpqr_series),
        ("root_counts", root_counts),
        ("defect_forms", defect_forms),
        ("characters", characters),
        ("mckay", mckay_table),
        ("slodowy", slodowy_table),
        ("kostant_ebeling", kostant_ebeling),
        ("orbit_e6", orbit_e6),
    ]
}

pub fn default_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests").join("golden")
}

fn dynkin_charpolys() -> Result<String> {
    let mut rows = vec![vec!["diagram".to_string(), "charpoly".into()]];
    for name in DYNKIN {
        let chi = coxeter_charpoly(&build_catalog(name)?)?;
        rows.push(vec![name.into(), poly(&chi, "λ", false)]);
    }
    Ok(left(&rows))
}

fn extended_charpolys() -> Result<String> {
    let mut rows = vec![vec!["diagram".to_string(), "factorization".into(), "charpoly".into()]];
    for name in EXTENDED {
        let g = crate::diagram::resolve(name)?;
        let chi = if g.is_cyclic() {
            crate::coxeter::affine_an_charpoly(g.vertex_count() - 1, g.cycle_class().unwrap_or(1))?
        } else {
            coxeter_charpoly(&g)?
        };
        let f = factor_cyclotomic_default(&chi)?;
        rows.push(vec![name.into(), factorization(&f, false), poly(&chi, "λ", false)]);
    }
    Ok(left(&rows))
}

fn coxeter_numbers_table() -> Result<String> {
    let mut rows = vec![vec!["diagram".to_string(), "h".into(), "h_a".into(), "h∨".into(), "jordan".into(), "exponents".into()]];
    for name in DYNKIN.iter().chain(EXTENDED.iter()) {
        let g = crate::diagram::resolve(name)?;
        let c = coxeter_numbers(&g)?;
        let jordan = if g.is_cyclic() { "-".to_string() } else { jordan_structure(&g)?.jordan.label() };
        rows.push(vec![
            name.to_string(),
            c.h.to_string(),
            c.h_a.map(|x| x.to_string()).unwrap_or_else(|| "-".into()),
            c.h_dual.to_string(),
            jordan,
            c.exponents.iter().map(u64::to_string).collect::<Vec<_>>().join(" "),
        ]);
    }
    Ok(left(&rows))
}

fn tpqr_series() -> Result<String> {
    let tol = default_tol();
    let mut rows = vec![vec!["family".to_string(), "r".into(), "radius".into(), "charpoly".into()]];
    for fam in ["T23", "T33", "T24"] {
        let f = SeriesFamily::parse(fam)?;
        for r in f.min_r()..=12 {
            let chi = tpqr_series_charpoly(f, r)?;
            let rad = spectral_radius(&f.graph(r)?, &tol)?;
            rows.push(vec![fam.into(), r.to_string(), f6(rad.value), poly(&chi, "λ", false)]);
        }
    }
    Ok(left(&rows))
}

fn root_counts() -> Result<String> {
    let mut rows = vec![vec!["diagram".to_string(), "roots".into(), "positive".into(), "height".into(), "h·l=|Δ|".into()]];
    for name in DYNKIN {
        let r = root_system_count(&build_catalog(name)?)?;
        rows.push(vec![
            name.into(),
            r.total.to_string(),
            r.positive.to_string(),
            r.highest_height.to_string(),
            r.hl_holds.map(|b| b.to_string()).unwrap_or_else(|| "-".into()),
        ]);
    }
    let mut out = left(&rows);
    let mut rows = vec![vec!["diagram".to_string(), "r".into(), "l".into(), "h".into(), "|Δ|".into(), "r·l·h=|Δ|".into()]];
    for name in EXTENDED {
        let Ok(r) = rlh_check(&crate::diagram::resolve(name)?) else { continue };
        rows.push(vec![
            name.into(),
            r.r.to_string(),
            r.l.to_string(),
            r.h.to_string(),
            r.roots.to_string(),
            r.holds.to_string(),
        ]);
    }
    out.push_str("\n\n");
    out.push_str(&left(&rows));
    Ok(out)
}

fn defect_forms() -> Result<String> {
    let mut rows = vec![vec!["diagram".to_string(), "defect".into(), "fixed-form".into()]];
    for name in EXTENDED {
        let g = crate::diagram::resolve(name)?;
        if g.is_cyclic() {
            continue;
        }
        let o = Orientation::parse(&g, "bicolored")?;
        rows.push(vec![name.into(), defect_form(&g, &o)?.render(false), dlab_ringel_defect(&g, &o)?.render(false)]);
    }
    Ok(left(&rows))
}

fn characters() -> Result<String> {
    let mut out = Vec::new();
    for kind in ["O", "T", "J"] {
        let g = build_group(GroupKind::parse(kind)?)?;
        let t = character_table(&g)?;
        out.push(format!("{kind}\n{}", character_table_text(&t, false)));
    }
    Ok(out.join("\n\n"))
}

fn mckay_table() -> Result<String> {
    let mut out = Vec::new();
    for kind in ["Z2", "Z5", "BD2", "BD5", "T", "O", "J"] {
        let g = build_group(GroupKind::parse(kind)?)?;
        let t = character_table(&g)?;
        let m = mckay_matrix(&g, &t, None)?;
        out.push(format!("{kind} → {}\n{}", m.matched.diagram, matrix_text(&m.labels, &m.matrix)));
    }
    Ok(out.join("\n\n"))
}

fn slodowy_table() -> Result<String> {
    let (big, small) = (build_group(GroupKind::parse("O")?)?, build_group(GroupKind::parse("T")?)?);
    let (bt, st) = (character_table(&big)?, character_table(&small)?);
    let s = slodowy_matrices(&SubgroupPair::new(&big, &bt, &small, &st)?)?;
    Ok(format!(
        "Ã ({})\n{}\n\nÃ∨ ({})\n{}",
        s.matched.diagram,
        matrix_text(&s.restricted, &s.a),
        s.matched_dual.diagram,
        matrix_text(&s.induced, &s.a_dual)
    ))
}

fn kostant_ebeling() -> Result<String> {
    let mut rows = vec![vec!["group".to_string(), "a".into(), "b".into(), "h".into(), "ab = 2|G|".into()]];
    for kind in ["Z2", "Z3", "Z6", "BD2", "BD3", "BD4", "T", "O", "J"] {
        let k = GroupKind::parse(kind)?;
        let n = kostant_numbers(k)?;
        rows.push(vec![kind.into(), n.a.to_string(), n.b.to_string(), n.h.to_string(), (n.a * n.b == 2 * k.order() as u64).to_string()]);
    }
    let mut out = left(&rows);
    let mut rows = vec![vec!["diagram".to_string(), "partner".into(), "numerator".into(), "denominator".into()]];
    for name in ["A1", "A3", "A5", "D4", "D5", "D6", "E6", "E7", "E8"] {
        let e = ebeling_poincare(&build_catalog(name)?)?;
        rows.push(vec![name.into(), e.partner.clone(), poly(&e.numerator, "λ", false), poly(&e.denominator, "λ", false)]);
    }
    out.push_str("\n\n");
    out.push_str(&left(&rows));
    Ok(out)
}

fn orbit_e6() -> Result<String> {
    let g = build_catalog("E6")?;
    let o = orbit_assembling(&g)?;
    let mut rows = vec![std::iter::once("n".to_string()).chain(o.names.iter().cloned()).chain(std::iter::once("|".into())).chain(o.names.iter().cloned()).collect::<Vec<_>>()];
    for (n, (t, z)) in o.orbit.iter().zip(&o.assembling).enumerate() {
        rows.push(
            std::iter::once((n + 1).to_string())
                .chain(t.iter().map(i64::to_string))
                .chain(std::iter::once("|".into()))
                .chain(z.iter().map(i64::to_string))
                .collect(),
        );
    }
    let mut out = format!("beta: {}\n{}\n", ints(&o.beta), table(&rows));
    for (i, name) in o.names.iter().enumerate() {
        out.push_str(&format!("\nz(t)_{name} = {}", poly(&o.numerator(i), "t", false)));
    }
    Ok(out)
}

/// Left-aligned columns.
fn left(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| rows.iter().filter_map(|r| r.get(c)).map(|s| s.chars().count()).max().unwrap_or(0))
        .collect();
    rows.iter()
        .map(|r| {
            r.iter()
                .enumerate()
                .map(|(c, s)| format!("{s:<w$}", w = widths[c]))
                .collect::<Vec<_>>()
                .join("  ")
                .trim_end()
                .to_string()
        })
        .collect::<Vec<_>>()
        .join("\n")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableStatus {
    Match,
    Differs,
    Missing,
    Written,
}

impl TableStatus {
    fn label(self) -> &'static str {
        match self {
            TableStatus::Match => "ok",
            TableStatus::Differs => "DIFFERS",
            TableStatus::Missing => "MISSING",
            TableStatus::Written => "written",
        }
    }
}

/// Regenerates one table and compares (or writes) it.
pub fn check_table(dir: &Path, name: &str, gen: Generator, bless: bool) -> Result<TableStatus> {
    let content = gen()? + "\n";
    let path = dir.join(format!("{name}.txt"));
    if bless {
        std::fs::create_dir_all(dir).and_then(|_| std::fs::write(&path, &content)).map_err(|e| {
            crate::Error::Consistency(format!("cannot write {}: {e}", path.display()))
        })?;
        return Ok(TableStatus::Written);
    }
    Ok(match std::fs::read_to_string(&path) {
        Err(_) => TableStatus::Missing,
        Ok(s) if s == content => TableStatus::Match,
        Ok(_) => TableStatus::Differs,
    })
}

pub(crate) fn run_tables(dir: Option<PathBuf>, bless: bool, only: Option<&str>) -> std::result::Result<Output, Failure> {
    let dir = dir.unwrap_or_else(default_dir);
    let selected: Vec<_> = all_tables().into_iter().filter(|(n, _)| only.is_none_or(|o| o == *n)).collect();
    if selected.is_empty() {
        return Err(Failure::Usage(format!("no table named `{}`", only.unwrap_or_default())));
    }
    let mut lines = Vec::new();
    let mut entries = Vec::new();
    let mut all_ok = true;
    for (name, gen) in selected {
        let status = check_table(&dir, name, gen, bless)?;
        all_ok &= matches!(status, TableStatus::Match | TableStatus::Written);
        lines.push(format!("{:<8} {name}", status.label()));
        entries.push(json!({ "name": name, "status": status.label() }));
    }
    let mut out = Output::new(lines.join("\n"), json!({ "dir": dir.display().to_string(), "tables": entries, "all_match": all_ok }));
    out.status = if all_ok { 0 } else { 1 };
    Ok(out)
}
