use std::collections::HashMap;

use num_bigint::BigInt;

use crate::diagram::ValuedGraph;
use crate::error::{Error, Result};
use crate::exactmath::IntPolynomial;

/// Memoized X(S) = det(C_S − λI) over induced vertex subsets of a forest.
struct Splitter<'a> {
    g: &'a ValuedGraph,
    adj: Vec<Vec<usize>>,
    memo: HashMap<u128, IntPolynomial>,
}

impl<'a> Splitter<'a> {
    fn new(g: &'a ValuedGraph) -> Result<Self> {
        if g.vertex_count() > 128 {
            return Err(Error::InvalidParameter("the splitting recursion handles at most 128 vertices".into()));
        }
        let adj = (0..g.vertex_count()).map(|v| g.neighbors(v)).collect();
        Ok(Splitter { g, adj, memo: HashMap::new() })
    }

    fn full(&self) -> u128 {
        let n = self.g.vertex_count();
        if n == 128 {
            u128::MAX
        } else {
            (1u128 << n) - 1
        }
    }

    /// Vertices reachable from `start` inside `mask`, optionally ignoring one edge.
    fn reach(&self, mask: u128, start: usize, cut: Option<(usize, usize)>) -> u128 {
        let mut seen = 1u128 << start;
        let mut stack = vec![start];
        while let Some(a) = stack.pop() {
            for &b in &self.adj[a] {
                if mask >> b & 1 == 0 || seen >> b & 1 == 1 {
                    continue;
                }
                if cut == Some((a, b)) || cut == Some((b, a)) {
                    continue;
                }
                seen |= 1 << b;
                stack.push(b);
            }
        }
        seen
    }

    /// ρ = d_ab·d_ba.
    fn rho(&self, a: usize, b: usize) -> BigInt {
        let (x, y) = self.g.valuation(a, b).expect("adjacent");
        BigInt::from(x) * BigInt::from(y)
    }

    fn split_edge(&mut self, mask: u128, a: usize, b: usize) -> IntPolynomial {
        let side_a = self.reach(mask, a, Some((a, b)));
        let side_b = mask & !side_a;
        let rho_lambda = IntPolynomial::monomial(self.rho(a, b), 1);
        let x1 = self.x(side_a);
        let x2 = self.x(side_b);
        let y1 = self.x(side_a & !(1 << a));
        let y2 = self.x(side_b & !(1 << b));
        &(&x1 * &x2) - &(&(&rho_lambda * &y1) * &y2)
    }

    fn x(&mut self, mask: u128) -> IntPolynomial {
        if mask == 0 {
            return IntPolynomial::one();
        }
        if let Some(p) = self.memo.get(&mask) {
            return p.clone();
        }
        let start = mask.trailing_zeros() as usize;
        let comp = self.reach(mask, start, None);
        let result = if comp != mask {
            &self.x(comp) * &self.x(mask & !comp)
        } else if mask.count_ones() == 1 {
            IntPolynomial::from_i64s(&[-1, -1])
        } else {
            let b = *self.adj[start].iter().find(|&&b| mask >> b & 1 == 1).expect("connected");
            self.split_edge(mask, start, b)
        };
        self.memo.insert(mask, result.clone());
        result
    }
}

fn normalize(raw: &IntPolynomial) -> IntPolynomial {
    raw.positive_leading()
}

/// det(C − λI) of a forest by recursive edge splitting.
pub fn raw_charpoly_recursive(g: &ValuedGraph) -> Result<IntPolynomial> {
    g.require_forest()?;
    let mut s = Splitter::new(g)?;
    let full = s.full();
    Ok(s.x(full))
}

/// χ(Γ) from X(Γ) = X(Γ₁)X(Γ₂) − ρλ·X(Γ₁∖α)X(Γ₂∖β), splitting at the edge (α, β).
/// The pieces are evaluated by the same recursion.
pub fn split_formula(g: &ValuedGraph, alpha: usize, beta: usize) -> Result<IntPolynomial> {
    g.require_forest()?;
    g.split_at_edge(alpha, beta)?;
    let mut s = Splitter::new(g)?;
    let full = s.full();
    let raw = s.split_edge(full, alpha, beta);
    Ok(normalize(&raw))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GlueReport {
    /// Normalized χ(Γ(n)).
    pub charpoly: IntPolynomial,
    /// X(Γ(n)) = X(Γ)^{n−1}·φ_{n−1}.
    pub raw: IntPolynomial,
    /// φ_{n−1} = X(Γ + β) − (n−1)λ·X(Γ∖α), raw sign convention.
    pub phi: IntPolynomial,
}

/// χ of n copies of Γ joined at `attach` to a new vertex by simple edges.
pub fn glue_formula(gamma: &ValuedGraph, attach: usize, n: usize) -> Result<GlueReport> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be at least 1".into()));
    }
    gamma.require_forest()?;
    let x_gamma = raw_charpoly_recursive(gamma)?;
    let x_minus = raw_charpoly_recursive(&gamma.remove_vertex(attach))?;
    let plus = gamma.add_leaf("__apex", attach, 1, 1)?;
    let x_plus = raw_charpoly_recursive(&plus)?;
    let phi = &x_plus - &(&IntPolynomial::monomial(BigInt::from(n - 1), 1) * &x_minus);
    let raw = &x_gamma.pow(n as u32 - 1) * &phi;
    Ok(GlueReport { charpoly: normalize(&raw), raw, phi })
}
