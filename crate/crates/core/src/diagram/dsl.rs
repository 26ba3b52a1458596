use super::graph::{Edge, ValuedGraph};
use super::partition::bicolor;
use crate::error::{Error, Result};

fn syntax(line: usize, message: impl Into<String>) -> Error {
    Error::Syntax { line, message: message.into() }
}

fn positive(line: usize, token: &str, what: &str) -> Result<u32> {
    token
        .parse::<u32>()
        .ok()
        .filter(|&d| d > 0)
        .ok_or_else(|| syntax(line, format!("{what} must be a positive integer, got `{token}`")))
}

/// Parses the text format: `vertex <name>`, `edge <u> <v> <d_uv> <d_vu>`,
/// `weight <name> <f>`, `#` comments. Bipartite results are reordered S₁ first.
pub fn parse_graph(text: &str) -> Result<ValuedGraph> {
    let mut names: Vec<String> = Vec::new();
    let mut edges: Vec<Edge> = Vec::new();
    let mut weights: Vec<(usize, usize, u64)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = content.split_whitespace().collect();
        let Some((&kw, args)) = tokens.split_first() else { continue };
        let lookup = |n: &str| {
            names
                .iter()
                .position(|x| x == n)
                .ok_or_else(|| syntax(line, format!("unknown vertex `{n}`")))
        };
        match (kw, args.len()) {
            ("vertex", 1) => {
                if names.iter().any(|x| x == args[0]) {
                    return Err(syntax(line, format!("duplicate vertex `{}`", args[0])));
                }
                names.push(args[0].to_string());
            }
            ("edge", 4) => {
                let (u, v) = (lookup(args[0])?, lookup(args[1])?);
                if u == v {
                    return Err(syntax(line, "an edge needs two distinct vertices"));
                }
                if edges.iter().any(|e| e.touches(u) && e.touches(v)) {
                    return Err(syntax(line, format!("repeated edge {}-{}", args[0], args[1])));
                }
                let d_uv = positive(line, args[2], "d_uv")?;
                let d_vu = positive(line, args[3], "d_vu")?;
                edges.push(Edge { u, v, d_uv, d_vu });
            }
            ("weight", 2) => {
                let v = lookup(args[0])?;
                weights.push((line, v, positive(line, args[1], "weight")? as u64));
            }
            ("vertex" | "edge" | "weight", _) => {
                return Err(syntax(line, format!("wrong number of arguments for `{kw}`")));
            }
            _ => return Err(syntax(line, format!("unknown directive `{kw}`"))),
        }
    }
    if names.is_empty() {
        return Err(syntax(0, "no vertices declared"));
    }
    let g = if weights.is_empty() {
        ValuedGraph::new(names, edges)?
    } else {
        let mut f = vec![0u64; names.len()];
        for &(line, v, w) in &weights {
            if f[v] != 0 {
                return Err(syntax(line, format!("second weight for `{}`", names[v])));
            }
            f[v] = w;
        }
        if let Some(v) = f.iter().position(|&w| w == 0) {
            return Err(syntax(0, format!("weights given for some vertices but not for `{}`", names[v])));
        }
        ValuedGraph::with_weights(names, edges, f)?
    };
    match bicolor(&g) {
        Ok(p) if !p.is_leading() => Ok(g.reordered(&p.order())),
        _ => Ok(g),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_edge() {
        let g = parse_graph("# A2\nvertex a\nvertex b\nedge a b 1 1\n").unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.valuation(0, 1), Some((1, 1)));
        assert_eq!(g.weights(), &[1, 1]);
    }

    #[test]
    fn g2_shape() {
        let g = parse_graph("vertex x\nvertex y\nedge x y 1 3 # long-short\n").unwrap();
        assert_eq!(g.valuation(0, 1), Some((1, 3)));
        assert_eq!(g.weights(), &[1, 3]);
    }

    #[test]
    fn bad_weights_name_the_edge() {
        let err = parse_graph("vertex a\nvertex b\nedge a b 1 2\nweight a 1\nweight b 1\n").unwrap_err();
        assert_eq!(err, Error::Valuation { u: "a".into(), v: "b".into() });
        assert!(parse_graph("vertex a\nvertex b\nedge a b 1 2\nweight a 1\nweight b 2\n").is_ok());
    }

    #[test]
    fn syntax_errors_carry_line_numbers() {
        let cases = [
            ("vertex a\nedge a b 1 1\n", 2),
            ("vertex a\nvertex b\nedge a b 0 1\n", 3),
            ("\n\nnode a\n", 3),
            ("vertex a b\n", 1),
            ("vertex a\nvertex a\n", 2),
        ];
        for (text, line) in cases {
            match parse_graph(text) {
                Err(Error::Syntax { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
                other => panic!("{text:?}: {other:?}"),
            }
        }
    }

    #[test]
    fn output_is_bicolored_order() {
        let g = parse_graph("vertex b\nvertex a\nvertex c\nedge a b 1 1\nedge b c 1 1\n").unwrap();
        // a is the smallest name, so S₁ = {a, c}
        assert_eq!(g.names(), &["a", "c", "b"]);
    }
}
