use num_rational::BigRational;
use serde_json::{json, Value};

use super::render::{self, cyclotomic, f6, factorization, factorization_json, ints, poly, poly_json, table};
use super::{tables, Command, DiagramArg, Failure, GlobalOpts, Output};
use crate::cartan::{classify_form, tits_form, FormKind};
use crate::coxeter::{
    affine_an_charpoly, coxeter_charpoly, coxeter_matrix, spectral_radius, tpqr_series_charpoly, SeriesFamily,
};
use crate::diagram::{parse_graph, resolve, DiagramKind, Orientation, ValuedGraph};
use crate::error::Error;
use crate::mckay::series::to_i64;
use crate::exactmath::{charpoly_exact, factor_cyclotomic_default, IntPolynomial};
use crate::mckay::{
    build_group, character_table, dynkin_of, ebeling_poincare, group_generating_function, kkgv_series,
    kostant_numbers, mckay_diagram, mckay_matrix, molien_series, orbit_assembling, orbit_matches_kostant,
    slodowy_matrices, CharacterTable, GroupKind, SubgroupPair,
};
use crate::regularity::{defect_form, dlab_ringel_defect, indefinite_defects, is_regular, RootKind, Verdict};
use crate::spectral::{
    coxeter_numbers, default_tol, jordan_structure, poincare_polynomial, rlh_check, root_system_count,
    weyl_group_order,
};

type CmdResult = std::result::Result<Output, Failure>;

pub(crate) fn dispatch(global: &GlobalOpts, cmd: &Command) -> CmdResult {
    let ascii = global.ascii;
    match cmd {
        Command::Charpoly { d, orientation, factor } => charpoly(&load(global, d)?, orientation.as_deref(), *factor, ascii),
        Command::Spectrum { d } => spectrum(&load(global, d)?, &tol(global)?, ascii),
        Command::Jordan { d } => jordan(&load(global, d)?),
        Command::Numbers { d } => numbers(&load(global, d)?, ascii),
        Command::Roots { d, list } => roots(&load(global, d)?, *list),
        Command::Defect { d, orientation, fixed } => defect(&load(global, d)?, orientation, *fixed, ascii),
        Command::Regular { d, vector, orientation, k_max } => {
            regular(&load(global, d)?, vector, orientation, *k_max)
        }
        Command::Poincare { name, truncate } => poincare(global, name, *truncate, ascii),
        Command::Mckay { group, faithful, characters } => mckay(group, *faithful, *characters, ascii),
        Command::Slodowy { pair } => slodowy(pair),
        Command::Orbit { d } => orbit(&load(global, d)?, ascii),
        Command::Series { family, r, radius } => series(family, *r, *radius, &tol(global)?, ascii),
        Command::Tables { dir, bless, only } => tables::run_tables(dir.clone(), *bless, only.as_deref()),
    }
}

fn load(global: &GlobalOpts, d: &DiagramArg) -> std::result::Result<ValuedGraph, Failure> {
    match (&global.file, &d.diagram) {
        (Some(_), Some(_)) => Err(Failure::Usage("give either a diagram name or --file, not both".into())),
        (None, None) => Err(Failure::Usage("a diagram name or --file is required".into())),
        (Some(path), None) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
            Ok(parse_graph(&text)?)
        }
        (None, Some(name)) => Ok(resolve(name)?),
    }
}

fn tol(global: &GlobalOpts) -> std::result::Result<BigRational, Failure> {
    match &global.tol {
        None => Ok(default_tol()),
        Some(s) => match render::parse_rational(s) {
            Some(q) if q > BigRational::from_integer(0.into()) => Ok(q),
            _ => Err(Failure::Usage(format!("--tol expects a positive rational, got `{s}`"))),
        },
    }
}

fn name_of(g: &ValuedGraph) -> String {
    g.info().map(|i| i.name.clone()).unwrap_or_else(|| "graph".into())
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn charpoly_of(g: &ValuedGraph, orientation: Option<&str>) -> crate::Result<IntPolynomial> {
    if let Some(o) = orientation {
        let o = Orientation::parse(g, o)?;
        return charpoly_exact(&coxeter_matrix(g, &o)?.matrix);
    }
    if g.is_cyclic() {
        return affine_an_charpoly(g.vertex_count() - 1, g.cycle_class().unwrap_or(1));
    }
    coxeter_charpoly(g)
}

fn charpoly(g: &ValuedGraph, orientation: Option<&str>, factor: bool, ascii: bool) -> CmdResult {
    let chi = charpoly_of(g, orientation)?;
    let mut text = poly(&chi, "λ", ascii);
    let fac = factor_cyclotomic_default(&chi)?;
    if factor {
        text.push_str(&format!("\n= {}", factorization(&fac, ascii)));
    }
    let json = json!({
        "diagram": name_of(g),
        "vertices": g.vertex_count(),
        "charpoly": { "coefficients": poly_json(&chi), "text": poly(&chi, "λ", ascii) },
        "factorization": factorization_json(&fac),
    });
    Ok(Output::new(text, json))
}

fn spectrum(g: &ValuedGraph, tol: &BigRational, ascii: bool) -> CmdResult {
    let r = jordan_structure(g)?;
    let mut real_roots = r.real_roots.clone();
    for iv in &mut real_roots {
        iv.refine(tol);
    }
    let fac = factor_cyclotomic_default(&r.charpoly)?;
    let phi: Vec<(f64, u32)> = r.phi.iter().map(|p| (p.value(), p.multiplicity)).collect();
    let mut lines = vec![
        format!("charpoly: {}", poly(&r.charpoly, "λ", ascii)),
        format!("factorization: {}", factorization(&fac, ascii)),
        format!("real roots off the unit circle: {}", real_roots.iter().map(|iv| f6(iv.value())).collect::<Vec<_>>().join(" ")),
        format!(
            "phi: {}",
            phi.iter().map(|(v, m)| if *m == 1 { f6(*v) } else { format!("{}^{m}", f6(*v)) }).collect::<Vec<_>>().join(" ")
        ),
        format!("form: {}", r.form.label()),
    ];
    let dominant = r.dominant.as_ref().map(|d| {
        let (l1, l2) = (d.lambda.lambda1.re, d.lambda.lambda2.re);
        lines.push(format!("dominant: phi1 = {}, lambda1 = {}, lambda2 = {}", f6(d.phi.value()), f6(l1), f6(l2)));
        json!({ "phi": d.phi.value(), "lambda1": l1, "lambda2": l2 })
    });
    let json = json!({
        "diagram": name_of(g),
        "charpoly": poly_json(&r.charpoly),
        "factorization": factorization_json(&fac),
        "real_roots": real_roots.iter().map(|iv| json!({
            "low": iv.low.to_string(), "high": iv.high.to_string(), "value": iv.value(),
        })).collect::<Vec<_>>(),
        "phi": phi.iter().map(|(v, m)| json!({ "value": v, "multiplicity": m })).collect::<Vec<_>>(),
        "form": r.form.label(),
        "dominant": dominant,
    });
    Ok(Output::new(lines.join("\n"), json))
}

fn jordan(g: &ValuedGraph) -> CmdResult {
    let r = jordan_structure(g)?;
    let text = format!(
        "jordan: {}\nblocks at 1: {}\ndiagonalizable: {}\nform: {}",
        r.jordan.label(),
        r.blocks_at_one,
        yes(r.diagonalizable),
        r.form.label()
    );
    let json = json!({
        "diagram": name_of(g),
        "jordan": r.jordan.label(),
        "blocks_at_one": r.blocks_at_one,
        "diagonalizable": r.diagonalizable,
        "form": r.form.label(),
    });
    Ok(Output::new(text, json))
}

fn poincare_factors(exponents: &[u64]) -> String {
    exponents.iter().map(|m| format!("(1 + t^{})", 2 * m + 1)).collect()
}

fn numbers(g: &ValuedGraph, ascii: bool) -> CmdResult {
    let c = coxeter_numbers(g)?;
    let dual = if ascii { "h_dual" } else { "h∨" };
    let mut lines = vec![format!("h = {}", c.h)];
    if let Some(h_a) = c.h_a {
        lines.push(format!("h_a = {h_a}"));
    }
    lines.push(format!("{dual} = {}", c.h_dual));
    let mut json = json!({
        "diagram": c.name.clone().unwrap_or_else(|| name_of(g)),
        "h": c.h,
        "h_a": c.h_a,
        "h_dual": c.h_dual,
        "exponents": c.exponents,
    });
    if !c.exponents.is_empty() {
        let p = poincare_polynomial(&c.exponents);
        lines.push(format!("exponents: {}", c.exponents.iter().map(u64::to_string).collect::<Vec<_>>().join(" ")));
        lines.push(format!("poincare: {}", poincare_factors(&c.exponents)));
        lines.push(format!("|W| = {}", weyl_group_order(&c.exponents)));
        json["poincare"] = poly_json(&p);
        json["weyl_order"] = json!(weyl_group_order(&c.exponents).to_string());
    }
    Ok(Output::new(lines.join("\n"), json))
}

fn roots(g: &ValuedGraph, list: bool) -> CmdResult {
    let extended = g.info().is_some_and(|i| matches!(i.kind, DiagramKind::Extended | DiagramKind::Cycle));
    if extended {
        let r = rlh_check(g)?;
        let text = format!(
            "r = {}, l = {}, h = {}, finite type {}\n|Δ| = {}\nr·l·h = |Δ|: {}",
            r.r,
            r.l,
            r.h,
            r.finite,
            r.roots,
            yes(r.holds)
        );
        let json = json!({
            "diagram": name_of(g), "r": r.r, "l": r.l, "h": r.h, "finite": r.finite, "roots": r.roots, "holds": r.holds,
        });
        return Ok(Output::new(text, json));
    }
    let r = root_system_count(g)?;
    let mut lines = vec![
        format!("rank: {}", r.rank),
        format!("roots: {}", r.total),
        format!("positive: {}", r.positive),
        format!("highest height: {}", r.highest_height),
    ];
    if let (Some(h), Some(holds)) = (r.h, r.hl_holds) {
        lines.push(format!("h = {h}; h·l = |Δ|: {}", yes(holds)));
    }
    let positive: Vec<&Vec<i64>> = r.roots.iter().filter(|z| z.iter().all(|&x| x >= 0)).collect();
    if list {
        lines.push(format!("vertices: {}", g.names().join(" ")));
        lines.extend(positive.iter().map(|z| ints(z)));
    }
    let json = json!({
        "diagram": name_of(g),
        "rank": r.rank,
        "roots": r.total,
        "positive": r.positive,
        "highest_height": r.highest_height,
        "h": r.h,
        "hl_holds": r.hl_holds,
        "positive_roots": if list { json!(positive) } else { Value::Null },
    });
    Ok(Output::new(lines.join("\n"), json))
}

fn defect(g: &ValuedGraph, orientation: &str, fixed: bool, ascii: bool) -> CmdResult {
    let o = Orientation::parse(g, orientation)?;
    let f = if fixed { dlab_ringel_defect(g, &o)? } else { defect_form(g, &o)? };
    let json = json!({
        "diagram": name_of(g),
        "orientation": o.render(g, true),
        "construction": if fixed { "fixed-form" } else { "inner-product" },
        "names": f.names,
        "coefficients": f.coefficients.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        "text": f.render(ascii),
    });
    Ok(Output::new(f.render(ascii), json))
}

fn parse_vector(g: &ValuedGraph, s: &str) -> std::result::Result<Vec<i64>, Failure> {
    let items: Vec<&str> = s.split(',').map(str::trim).filter(|x| !x.is_empty()).collect();
    let bad = |m: String| Failure::Usage(m);
    if items.iter().any(|x| x.contains('=')) {
        let mut z = vec![0; g.vertex_count()];
        for item in items {
            let (name, value) = item.split_once('=').ok_or_else(|| bad(format!("`{item}` is not name=value")))?;
            let i = g.index_of(name.trim()).ok_or_else(|| bad(format!("unknown vertex `{}`", name.trim())))?;
            z[i] = value.trim().parse().map_err(|_| bad(format!("`{value}` is not an integer")))?;
        }
        return Ok(z);
    }
    let z = items
        .iter()
        .map(|x| x.parse::<i64>().map_err(|_| bad(format!("`{x}` is not an integer"))))
        .collect::<std::result::Result<Vec<_>, _>>()?;
    if z.len() != g.vertex_count() {
        return Err(bad(format!("vector has {} entries, diagram has {} vertices", z.len(), g.vertex_count())));
    }
    Ok(z)
}

fn regular(g: &ValuedGraph, vector: &str, orientation: &str, k_max: u32) -> CmdResult {
    let z = parse_vector(g, vector)?;
    let o = Orientation::parse(g, orientation)?;
    let form = classify_form(&tits_form(g))?;
    match form.kind {
        FormKind::Nonnegative if form.corank == 1 => {
            let r = is_regular(g, &o, &z, k_max)?;
            let kind = match r.kind {
                RootKind::Real { simple } => format!("real (Weyl orbit of {})", g.name(simple)),
                RootKind::Imaginary { multiple } => format!("imaginary ({multiple}·nil-root)"),
                RootKind::NotARoot => "not a root".into(),
            };
            let verdict = match r.verdict {
                Verdict::Regular => "regular",
                Verdict::NotRegular => "not regular",
                Verdict::NotARoot => "not a root",
            };
            let mut lines = vec![format!("verdict: {verdict}"), format!("root: {kind}"), format!("defect: {}", r.defect)];
            match r.witness {
                Some(k) => lines.push(format!("witness: C^{k} z has a negative coordinate")),
                None if r.verdict == Verdict::Regular => lines.push(format!("checked: C^k z > 0 for |k| ≤ {}", r.checked)),
                None => {}
            }
            let mut json = serde_json::to_value(&r).map_err(|e| Error::Consistency(e.to_string()))?;
            json["diagram"] = json!(name_of(g));
            Ok(Output::new(lines.join("\n"), json))
        }
        FormKind::Indefinite => {
            let d = indefinite_defects(g, &o, &z)?;
            let text = format!(
                "lambda1 = {}, lambda2 = {}\nrho1 = {}, rho2 = {}\nnecessary condition: {}",
                f6(d.lambda1),
                f6(d.lambda2),
                f6(d.rho1),
                f6(d.rho2),
                if d.fails { "fails (not regular)" } else { "holds" }
            );
            let mut json = serde_json::to_value(&d).map_err(|e| Error::Consistency(e.to_string()))?;
            json["diagram"] = json!(name_of(g));
            Ok(Output::new(text, json))
        }
        _ => Err(Error::Domain(format!("regularity needs an extended or indefinite diagram; the Tits form is {}", form.label())).into()),
    }
}

fn series_line(v: &[i64]) -> String {
    ints(v)
}

fn poincare(global: &GlobalOpts, name: &str, n: usize, ascii: bool) -> CmdResult {
    let Ok(kind) = GroupKind::parse(name) else {
        let g = load(global, &DiagramArg { diagram: Some(name.to_string()) })?;
        let e = ebeling_poincare(&g)?;
        let series = to_i64(&e.series(n));
        let text = format!(
            "{} / {}\np(λ) = ({})/({})\nseries in t = λ^(1/2): {}",
            e.dynkin,
            e.partner,
            poly(&e.numerator, "λ", ascii),
            poly(&e.denominator, "λ", ascii),
            series_line(&series)
        );
        let json = json!({
            "dynkin": e.dynkin, "partner": e.partner,
            "numerator": poly_json(&e.numerator), "denominator": poly_json(&e.denominator),
            "series": series,
        });
        return Ok(Output::new(text, json));
    };
    let group = build_group(kind)?;
    let molien = to_i64(&molien_series(&group, n)?);
    let k = kostant_numbers(kind)?;
    let kkgv = to_i64(&kkgv_series(&k, n));
    let report = group_generating_function(kind, n)?;
    let recursion = report.component(&report.extension_vertex).map(|c| c.coefficients.clone()).unwrap_or_default();
    let ebeling = dynkin_of(kind).and_then(|g| ebeling_poincare(&g)).map(|e| to_i64(&e.series(n)));
    let diagram = mckay_diagram(kind)?.info().map(|i| i.name.clone()).unwrap_or_default();
    let m = render::minus(ascii);
    let mut lines = vec![
        format!("group: {} (order {})", kind.name(), kind.order()),
        format!("diagram: {diagram}"),
        format!("kostant: a = {}, b = {}, h = {}", k.a, k.b, k.h),
        format!("closed form: (1 + t^{})/((1 {m} t^{})(1 {m} t^{}))", k.h, k.a, k.b),
        format!("molien:    {}", series_line(&molien)),
        format!("k-k-gv:    {}", series_line(&kkgv)),
        format!("recursion: {}", series_line(&recursion)),
    ];
    let agree_ebeling = match &ebeling {
        Ok(e) => {
            lines.push(format!("ebeling:   {}", series_line(e)));
            *e == molien
        }
        Err(err) => {
            lines.push(format!("ebeling:   n/a ({err})"));
            true
        }
    };
    let agree = molien == kkgv && kkgv == recursion && agree_ebeling;
    lines.push(format!("agree: {}", yes(agree)));
    let json = json!({
        "group": kind.name(),
        "order": kind.order(),
        "diagram": diagram,
        "kostant": k,
        "molien": molien,
        "kkgv": kkgv,
        "recursion": recursion,
        "ebeling": ebeling.ok(),
        "agree": agree,
    });
    Ok(Output::new(lines.join("\n"), json))
}

pub(crate) fn character_table_text(t: &CharacterTable, ascii: bool) -> String {
    let mut rows = vec![
        std::iter::once("class".to_string()).chain(t.class_labels.iter().cloned()).collect::<Vec<_>>(),
        std::iter::once("size".to_string()).chain(t.class_sizes.iter().map(usize::to_string)).collect(),
    ];
    for (name, chi) in t.names.iter().zip(&t.characters) {
        rows.push(std::iter::once(name.clone()).chain(chi.iter().map(|x| cyclotomic(x, ascii))).collect());
    }
    table(&rows)
}

pub(crate) fn matrix_text(labels: &[String], m: &[Vec<i64>]) -> String {
    let mut rows = vec![std::iter::once(String::new()).chain(labels.iter().cloned()).collect::<Vec<_>>()];
    for (l, row) in labels.iter().zip(m) {
        rows.push(std::iter::once(l.clone()).chain(row.iter().map(i64::to_string)).collect());
    }
    table(&rows)
}

fn mckay(group: &str, faithful: Option<usize>, characters: bool, ascii: bool) -> CmdResult {
    let kind = GroupKind::parse(group)?;
    let g = build_group(kind)?;
    let t = character_table(&g)?;
    let m = mckay_matrix(&g, &t, faithful)?;
    let mut text = format!("group: {} (order {}, {} classes)\n", kind.name(), kind.order(), t.class_sizes.len());
    if characters {
        text.push_str(&character_table_text(&t, ascii));
        text.push_str("\n\n");
    }
    text.push_str(&format!(
        "McKay matrix ({}):\n{}\n2I {} A ≅ K({})\n{}",
        m.faithful.clone().unwrap_or_else(|| "natural representation".into()),
        matrix_text(&m.labels, &m.matrix),
        render::minus(ascii),
        m.matched.diagram,
        m.labels
            .iter()
            .zip(&m.matched.correspondence)
            .map(|(a, b)| format!("{a} → {b}"))
            .collect::<Vec<_>>()
            .join(", ")
    ));
    let text = if ascii { text.replace('≅', "~=").replace('→', "->") } else { text };
    let mut json = serde_json::to_value(&m).map_err(|e| Error::Consistency(e.to_string()))?;
    if characters {
        json["characters"] = json!({
            "classes": t.class_labels,
            "sizes": t.class_sizes,
            "rows": t.names.iter().zip(&t.characters).map(|(n, chi)| json!({
                "name": n,
                "values": chi.iter().map(|x| cyclotomic(x, true)).collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
        });
    }
    Ok(Output::new(text, json))
}

fn slodowy(pair: &str) -> CmdResult {
    let (h, g) = pair
        .split_once('<')
        .or_else(|| pair.split_once('◁'))
        .ok_or_else(|| Failure::Usage(format!("pair `{pair}` is not written H<G")))?;
    let (hk, gk) = (GroupKind::parse(h.trim())?, GroupKind::parse(g.trim())?);
    let (big, small) = (build_group(gk)?, build_group(hk)?);
    let (bt, st) = (character_table(&big)?, character_table(&small)?);
    let p = SubgroupPair::new(&big, &bt, &small, &st)?;
    let s = slodowy_matrices(&p)?;
    let transposed = (0..s.a.len()).all(|i| (0..s.a.len()).all(|j| s.a[i][j] == s.a_dual[j][i]));
    let text = format!(
        "pair: {}\nÃ:\n{}\n2I − Ã ≅ K({})\nÃ∨:\n{}\n2I − Ã∨ ≅ K({})\nÃᵀ = Ã∨: {}",
        s.pair,
        matrix_text(&s.restricted, &s.a),
        s.matched.diagram,
        matrix_text(&s.induced, &s.a_dual),
        s.matched_dual.diagram,
        yes(transposed)
    );
    let mut json = serde_json::to_value(&s).map_err(|e| Error::Consistency(e.to_string()))?;
    json["transposed"] = json!(transposed);
    Ok(Output::new(text, json))
}

fn orbit(g: &ValuedGraph, ascii: bool) -> CmdResult {
    let o = orbit_assembling(g)?;
    let agree = orbit_matches_kostant(g, &o, 50)?;
    let mut lines = vec![
        format!("diagram: {} (h = {}, a = {}, b = {})", o.diagram, o.h, o.kostant.a, o.kostant.b),
        format!("vertices: {}", o.names.join(" ")),
        format!("w1 reflections: {}", o.w1_part.join(" ")),
        format!("beta: {}", ints(&o.beta)),
    ];
    for (n, v) in o.orbit.iter().enumerate() {
        lines.push(format!("tau^({})beta: {}", n + 1, ints(v)));
    }
    for (n, v) in o.assembling.iter().enumerate() {
        lines.push(format!("z{}: {}", n + 1, ints(v)));
    }
    lines.push(format!("z{} = 2·alpha_{}", o.h / 2, o.center));
    for (i, name) in o.names.iter().enumerate() {
        lines.push(format!("z(t)_{name} = {}", poly(&o.numerator(i), "t", ascii)));
    }
    lines.push(format!("kostant series agree to order 50: {}", yes(agree)));
    let text = lines.join("\n");
    let text = if ascii { text.replace('·', "*") } else { text };
    let mut json = serde_json::to_value(&o).map_err(|e| Error::Consistency(e.to_string()))?;
    json["numerators"] = json!(o.names.iter().enumerate().map(|(i, n)| (n.clone(), poly_json(&o.numerator(i)))).collect::<serde_json::Map<_, _>>());
    json["kostant_agree"] = json!(agree);
    Ok(Output::new(text, json))
}

fn series(family: &str, r: usize, radius: bool, tol: &BigRational, ascii: bool) -> CmdResult {
    let fam = SeriesFamily::parse(family)?;
    if r < fam.min_r() {
        return Err(Error::InvalidParameter(format!("{} needs r ≥ {}", fam.name(), fam.min_r())).into());
    }
    let chi = tpqr_series_charpoly(fam, r)?;
    let g = fam.graph(r)?;
    let direct = coxeter_charpoly(&g)?;
    let mut lines = vec![poly(&chi, "λ", ascii)];
    let mut json = json!({
        "family": fam.name(), "r": r, "charpoly": poly_json(&chi), "matches_direct": chi == direct,
    });
    if chi != direct {
        return Err(Error::Consistency("closed form disagrees with the direct determinant".into()).into());
    }
    if radius {
        let rad = spectral_radius(&g, tol)?;
        lines.push(format!("radius: {}", f6(rad.value)));
        json["radius"] = json!(rad.value);
        if let Some(iv) = rad.interval {
            json["radius_interval"] = json!([iv.low.to_string(), iv.high.to_string()]);
        }
    }
    Ok(Output::new(lines.join("\n"), json))
}
