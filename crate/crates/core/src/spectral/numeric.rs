use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use num_traits::ToPrimitive;

use crate::exactmath::RationalMatrix;

pub(crate) fn to_dmatrix(m: &RationalMatrix) -> DMatrix<f64> {
    DMatrix::from_fn(m.rows(), m.cols(), |i, j| m.get(i, j).to_f64().unwrap_or(f64::NAN))
}

/// Right singular vectors for the `count` smallest singular values of a square matrix.
pub(crate) fn null_vectors(a: &DMatrix<f64>, count: usize) -> Vec<DVector<f64>> {
    let svd = a.clone().svd(false, true);
    let v_t = svd.v_t.expect("requested V");
    let mut order: Vec<usize> = (0..svd.singular_values.len()).collect();
    order.sort_by(|&i, &j| svd.singular_values[i].total_cmp(&svd.singular_values[j]));
    order.into_iter().take(count).map(|i| v_t.row(i).transpose()).collect()
}

/// Perron eigenvector of a nonnegative matrix for the eigenvalue `phi`,
/// scaled to a largest entry of 1.
pub(crate) fn perron_vector(m: &RationalMatrix, phi: f64) -> Vec<f64> {
    let n = m.rows();
    let a = to_dmatrix(m) - DMatrix::identity(n, n) * phi;
    let v = &null_vectors(&a, 1)[0];
    let pivot = v.iter().copied().fold(0.0f64, |acc, x| if x.abs() > acc.abs() { x } else { acc });
    v.iter().map(|x| x / pivot).collect()
}

/// Numerical rank of a set of complex column vectors.
pub(crate) fn complex_rank(columns: &[Vec<Complex64>], eps: f64) -> usize {
    if columns.is_empty() {
        return 0;
    }
    let n = columns[0].len();
    let m = DMatrix::from_fn(n, columns.len(), |i, j| columns[j][i]);
    m.rank(eps)
}
