use crate::cartan::CartanData;
use crate::exactmath::{rat, RationalMatrix};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChebyshevReport {
    pub p: u32,
    pub f: RationalMatrix,
    pub g: RationalMatrix,
    pub ker_f: usize,
    pub ker_g: usize,
    /// dim ker(Cᵖ − I), computed directly.
    pub fixed: usize,
    /// dim ker(Cᵖ + I), computed directly.
    pub anti_fixed: usize,
}

impl ChebyshevReport {
    pub fn holds(&self) -> bool {
        self.ker_f == self.fixed && self.ker_g == self.anti_fixed
    }
}

/// β = ½K − I; f_p and g_p by their three-term recursions, compared against
/// the fixed and anti-fixed spaces of Cᵖ for the bicolored C = w₁w₂.
pub fn chebyshev_fixed_points(cd: &CartanData, p: u32) -> ChebyshevReport {
    let n = cd.cartan.rows();
    let id = RationalMatrix::identity(n);
    let beta = &cd.cartan.scale(&crate::exactmath::ratio(1, 2)) - &id;
    let two_beta = beta.scale(&rat(2));
    let step = |prev: &RationalMatrix, cur: &RationalMatrix| &(&two_beta * cur) - prev;
    let run = |a0: RationalMatrix, a1: RationalMatrix| {
        let (mut a, mut b) = (a0, a1);
        for _ in 0..p {
            let next = step(&a, &b);
            a = std::mem::replace(&mut b, next);
        }
        a
    };
    let f = run(RationalMatrix::zeros(n, n), cd.cartan.clone());
    let g = run(id.scale(&rat(2)), two_beta.clone());
    let c = bicolored_c(cd);
    let cp = c.pow(p);
    let fixed = n - (&cp - &id).rank();
    let anti_fixed = n - (&cp + &id).rank();
    ChebyshevReport { p, ker_f: n - f.rank(), ker_g: n - g.rank(), f, g, fixed, anti_fixed }
}

fn bicolored_c(cd: &CartanData) -> RationalMatrix {
    let k = &cd.cartan;
    let w1 = crate::coxeter::reflection_word(k, cd.partition.s1());
    let w2 = crate::coxeter::reflection_word(k, cd.partition.s2());
    &w1 * &w2
}

/// {z : βz = 0} = {z : Cz = −z}, compared as subspaces by rank.
pub fn anti_fixed_points_match(cd: &CartanData) -> bool {
    let n = cd.cartan.rows();
    let id = RationalMatrix::identity(n);
    let beta = &cd.cartan.scale(&crate::exactmath::ratio(1, 2)) - &id;
    let c_plus = &bicolored_c(cd) + &id;
    let kb = beta.rank();
    let kc = c_plus.rank();
    let mut stacked = RationalMatrix::zeros(2 * n, n);
    for i in 0..n {
        for j in 0..n {
            stacked.set(i, j, beta.get(i, j).clone());
            stacked.set(n + i, j, c_plus.get(i, j).clone());
        }
    }
    kb == kc && stacked.rank() == kb
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::build_catalog;
    use crate::spectral::bicolored_data;

    fn cd(name: &str) -> CartanData {
        bicolored_data(&build_catalog(name).unwrap()).unwrap().1
    }

    #[test]
    fn first_terms() {
        let d = cd("E6~");
        let r1 = chebyshev_fixed_points(&d, 1);
        assert_eq!(r1.f, d.cartan);
        assert_eq!(r1.ker_f, 1);
        let r0 = chebyshev_fixed_points(&d, 0);
        assert_eq!(r0.g, RationalMatrix::identity(7).scale(&rat(2)));
        assert_eq!((r0.ker_g, r0.anti_fixed), (0, 0));
        let r2 = chebyshev_fixed_points(&d, 2);
        let k = &d.cartan;
        assert_eq!(r2.f, &(k - &RationalMatrix::identity(7).scale(&rat(2))) * k);
    }

    #[test]
    fn kernels_match_powers_of_c() {
        for name in ["E6~", "D5~", "E8", "G21~", "F41~", "T[2,3,7]", "A5", "*[5]"] {
            let d = cd(name);
            for p in 0..=12 {
                let r = chebyshev_fixed_points(&d, p);
                assert!(r.holds(), "{name} p = {p}: {r:?}");
            }
        }
        let r = chebyshev_fixed_points(&cd("E6~"), 6);
        assert!(r.ker_f >= 1);
    }

    #[test]
    fn anti_fixed_space_is_ker_beta() {
        for name in ["E6~", "D4", "*[5]", "B3", "G22~", "T[2,3,7]"] {
            assert!(anti_fixed_points_match(&cd(name)), "{name}");
        }
    }
}
