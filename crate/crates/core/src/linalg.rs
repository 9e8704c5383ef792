//! Dense symmetric eigen-decomposition by cyclic Jacobi rotations.
//!
//! All matrices in this crate are d x d with d <= ~10, so robustness wins
//! over speed: the classic cyclic Jacobi sweep converges quadratically and
//! keeps eigenvectors orthonormal to machine precision.

use nalgebra::{DMatrix, DVector};

/// Eigenvalues and eigenvectors of a symmetric matrix, ascending by value.
pub struct SymmetricEigen {
    pub values: DVector<f64>,
    /// Column k is the eigenvector for `values[k]`.
    pub vectors: DMatrix<f64>,
}

const MAX_SWEEPS: usize = 64;

/// Cyclic Jacobi eigen-decomposition of a symmetric matrix.
///
/// Panics if the matrix is not square or not symmetric to 1e-9 (relative to
/// its largest entry); callers only build symmetric forms.
pub fn symmetric_eigen(mat: &DMatrix<f64>) -> SymmetricEigen {
    let n = mat.nrows();
    assert_eq!(n, mat.ncols(), "symmetric_eigen: matrix must be square");
    let scale = mat.amax().max(1.0);
    for i in 0..n {
        for j in (i + 1)..n {
            assert!(
                (mat[(i, j)] - mat[(j, i)]).abs() <= 1e-9 * scale,
                "symmetric_eigen: matrix is not symmetric"
            );
        }
    }

    let mut a = mat.clone();
    let mut v = DMatrix::<f64>::identity(n, n);

    for _ in 0..MAX_SWEEPS {
        let mut off = 0.0;
        for i in 0..n {
            for j in (i + 1)..n {
                off += a[(i, j)] * a[(i, j)];
            }
        }
        if off.sqrt() <= 1e-15 * scale {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[(p, q)];
                if apq.abs() <= 1e-300 {
                    continue;
                }
                // Classic 2x2 rotation annihilating a[(p,q)].
                let theta = (a[(q, q)] - a[(p, p)]) / (2.0 * apq);
                let t = if theta >= 0.0 {
                    1.0 / (theta + (1.0 + theta * theta).sqrt())
                } else {
                    1.0 / (theta - (1.0 + theta * theta).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[(k, p)];
                    let akq = a[(k, q)];
                    a[(k, p)] = c * akp - s * akq;
                    a[(k, q)] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[(p, k)];
                    let aqk = a[(q, k)];
                    a[(p, k)] = c * apk - s * aqk;
                    a[(q, k)] = s * apk + c * aqk;
                }
                for k in 0..n {
                    let vkp = v[(k, p)];
                    let vkq = v[(k, q)];
                    v[(k, p)] = c * vkp - s * vkq;
                    v[(k, q)] = s * vkp + c * vkq;
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(i, i)].partial_cmp(&a[(j, j)]).unwrap());
    let values = DVector::from_iterator(n, order.iter().map(|&i| a[(i, i)]));
    let mut vectors = DMatrix::zeros(n, n);
    for (col, &i) in order.iter().enumerate() {
        vectors.set_column(col, &v.column(i));
    }
    SymmetricEigen { values, vectors }
}

/// Largest eigenvalue of a symmetric matrix.
pub fn lambda_max(mat: &DMatrix<f64>) -> f64 {
    let eig = symmetric_eigen(mat);
    eig.values[eig.values.len() - 1]
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn diagonal_matrix_is_fixed_point() {
        let m = DMatrix::from_diagonal(&DVector::from_vec(vec![3.0, -1.0, 2.0]));
        let eig = symmetric_eigen(&m);
        assert_relative_eq!(eig.values[0], -1.0, epsilon = 1e-14);
        assert_relative_eq!(eig.values[1], 2.0, epsilon = 1e-14);
        assert_relative_eq!(eig.values[2], 3.0, epsilon = 1e-14);
    }

    #[test]
    fn reconstructs_matrix() {
        let m = DMatrix::from_row_slice(3, 3, &[2.0, 1.0, 0.5, 1.0, 3.0, -0.25, 0.5, -0.25, 1.5]);
        let eig = symmetric_eigen(&m);
        let recon =
            &eig.vectors * DMatrix::from_diagonal(&eig.values) * eig.vectors.transpose();
        assert!((recon - &m).amax() < 1e-12);
    }

    #[test]
    fn lambda_max_of_rank_one() {
        // v v^T for unit v has eigenvalues {1, 0, 0}.
        let v = DVector::from_vec(vec![0.6, 0.8, 0.0]);
        let m = &v * v.transpose();
        assert_relative_eq!(lambda_max(&m), 1.0, epsilon = 1e-13);
    }

    #[test]
    fn eigenvectors_orthonormal() {
        let m = DMatrix::from_row_slice(
            4,
            4,
            &[
                4.0, 1.0, 0.2, 0.0, 1.0, 3.0, 0.1, -0.4, 0.2, 0.1, 2.0, 0.3, 0.0, -0.4, 0.3, 1.0,
            ],
        );
        let eig = symmetric_eigen(&m);
        let gram = eig.vectors.transpose() * &eig.vectors;
        assert!((gram - DMatrix::identity(4, 4)).amax() < 1e-12);
    }
}
