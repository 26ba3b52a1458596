//! Exact arithmetic: integer polynomials, rational matrices, cyclotomic numbers
//! and real-root isolation.

pub mod cyclotomic;
pub mod field;
pub mod matrix;
pub mod poly;
pub mod roots;

pub use cyclotomic::{cyclotomic_polynomial, factor_cyclotomic, factor_cyclotomic_default, CyclotomicFactorization};
pub use field::CyclotomicNumber;
pub use matrix::{charpoly_exact, dot, is_nonnegative, primitive_integer_vector, rat, ratio, RationalMatrix};
pub use poly::IntPolynomial;
pub use roots::{complex_roots, isolate_real_roots, largest_root_above_one, mahler_measure, RealRootInterval};
