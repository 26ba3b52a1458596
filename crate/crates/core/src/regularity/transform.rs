use crate::cartan::cartan_matrix;
use crate::coxeter::{coxeter_matrix, reflection};
use crate::diagram::{Orientation, ValuedGraph};
use crate::error::{Error, Result};
use crate::exactmath::RationalMatrix;

/// T with T⁻¹·C_from·T = C_to, as a word of simple reflections.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransformingElement {
    /// Vertices in application order; the matrix is σ_{w₀}σ_{w₁}⋯.
    pub word: Vec<usize>,
    pub matrix: RationalMatrix,
}

impl TransformingElement {
    pub fn render(&self, g: &ValuedGraph) -> String {
        if self.word.is_empty() {
            return "1".into();
        }
        self.word.iter().map(|&v| format!("s_{}", g.name(v))).collect::<Vec<_>>().join(" ")
    }

    pub fn inverse_matrix(&self, cartan: &RationalMatrix) -> RationalMatrix {
        self.word
            .iter()
            .rev()
            .fold(RationalMatrix::identity(cartan.rows()), |acc, &v| &acc * &reflection(cartan, v))
    }
}

/// Height function of an orientation of a tree: h(t) = h(s) − 1 on every arrow s → t,
/// with h(0) = 0.
pub fn heights(g: &ValuedGraph, o: &Orientation) -> Result<Vec<i64>> {
    g.require_tree()?;
    let n = g.vertex_count();
    let mut h: Vec<Option<i64>> = vec![None; n];
    h[0] = Some(0);
    let mut stack = vec![0];
    while let Some(a) = stack.pop() {
        for (e, edge) in g.edges().iter().enumerate() {
            if !edge.touches(a) {
                continue;
            }
            let b = edge.other(a);
            if h[b].is_some() {
                continue;
            }
            let (s, _) = o.arrow(e);
            let ha = h[a].unwrap();
            h[b] = Some(if s == a { ha - 1 } else { ha + 1 });
            stack.push(b);
        }
    }
    Ok(h.into_iter().map(|x| x.expect("tree is connected")).collect())
}

fn flip_all_at(o: &Orientation, g: &ValuedGraph, v: usize) -> Orientation {
    g.edges()
        .iter()
        .enumerate()
        .filter(|(_, e)| e.touches(v))
        .fold(o.clone(), |acc, (i, _)| acc.with_flipped(i))
}

/// Realizes the per-vertex flip counts (positive: as a sink, negative: as a source).
fn word_for_counts(g: &ValuedGraph, from: &Orientation, mut counts: Vec<i64>) -> Result<Vec<usize>> {
    let n = g.vertex_count();
    let mut o = from.clone();
    let mut word = Vec::new();
    while counts.iter().any(|&c| c != 0) {
        let v = (0..n)
            .find(|&v| (counts[v] > 0 && o.is_sink(v)) || (counts[v] < 0 && o.is_source(v)))
            .ok_or_else(|| Error::Consistency("no admissible flip".into()))?;
        counts[v] -= counts[v].signum();
        o = flip_all_at(&o, g, v);
        word.push(v);
    }
    Ok(word)
}

fn element(g: &ValuedGraph, word: Vec<usize>) -> TransformingElement {
    let k = cartan_matrix(g);
    let matrix = word
        .iter()
        .fold(RationalMatrix::identity(g.vertex_count()), |acc, &v| &acc * &reflection(&k, v));
    TransformingElement { word, matrix }
}

fn height_difference(g: &ValuedGraph, from: &Orientation, to: &Orientation) -> Result<Vec<i64>> {
    let a = heights(g, from)?;
    let b = heights(g, to)?;
    Ok(a.iter().zip(&b).map(|(x, y)| y - x).collect())
}

fn counts_for_shift(diff: &[i64], c: i64) -> Vec<i64> {
    diff.iter().map(|d| (d + c) / 2).collect()
}

/// The shortest transforming element, or one avoiding the reflection at `avoid`.
pub fn transforming_element(
    g: &ValuedGraph,
    from: &Orientation,
    to: &Orientation,
    avoid: Option<usize>,
) -> Result<TransformingElement> {
    let diff = height_difference(g, from, to)?;
    let c = match avoid {
        Some(v) => {
            if v >= g.vertex_count() {
                return Err(Error::InvalidParameter(format!("vertex index {v} out of range")));
            }
            -diff[v]
        }
        None => {
            // a median of −diff minimizes Σ|diff + c|; differences all share one parity
            let mut sorted: Vec<i64> = diff.iter().map(|d| -d).collect();
            sorted.sort_unstable();
            sorted[sorted.len() / 2]
        }
    };
    let word = word_for_counts(g, from, counts_for_shift(&diff, c))?;
    Ok(element(g, word))
}

/// The k + 1 words for k differing edges, T_j flipping every vertex once more
/// than T_{j−1}; they satisfy T_p·T_q⁻¹ = C_from^{q−p}.
pub fn canonical_words(g: &ValuedGraph, from: &Orientation, to: &Orientation) -> Result<Vec<TransformingElement>> {
    let diff = height_difference(g, from, to)?;
    let k = from.differing_edges(to).len() as i64;
    let c0 = -diff.iter().max().copied().unwrap_or(0);
    (0..=k)
        .map(|j| word_for_counts(g, from, counts_for_shift(&diff, c0 + 2 * j)).map(|w| element(g, w)))
        .collect()
}

/// T⁻¹·C_from·T = C_to, exactly.
pub fn verify_transform(g: &ValuedGraph, from: &Orientation, to: &Orientation, t: &TransformingElement) -> Result<bool> {
    let cf = coxeter_matrix(g, from)?.matrix;
    let ct = coxeter_matrix(g, to)?.matrix;
    let inv = t.inverse_matrix(&cartan_matrix(g));
    Ok(&(&inv * &cf) * &t.matrix == ct)
}
