//! Cyclic Jacobi eigensolver for small dense symmetric matrices.

use alloc::vec;
use alloc::vec::Vec;

/// Eigenpairs of a symmetric matrix, sorted by descending eigenvalue.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricEigen {
    pub dim: usize,
    pub values: Vec<f64>,
    /// Column-major: eigenvector `k` is `vectors[k * dim..(k + 1) * dim]`.
    pub vectors: Vec<f64>,
}

impl SymmetricEigen {
    pub fn vector(&self, k: usize) -> &[f64] {
        &self.vectors[k * self.dim..(k + 1) * self.dim]
    }
}

const MAX_SWEEPS: usize = 100;

/// `matrix` is row-major `dim × dim`; only symmetry is assumed.
pub fn symmetric_eigen(matrix: &[f64], dim: usize) -> SymmetricEigen {
    assert_eq!(matrix.len(), dim * dim);
    let mut a = matrix.to_vec();
    // v is row-major here; rows of v^T are eigenvectors after the loop
    let mut v = vec![0.0; dim * dim];
    for i in 0..dim {
        v[i * dim + i] = 1.0;
    }

    let scale: f64 = a.iter().map(|x| x * x).sum();
    for _ in 0..MAX_SWEEPS {
        let off: f64 = (0..dim)
            .flat_map(|p| ((p + 1)..dim).map(move |q| (p, q)))
            .map(|(p, q)| a[p * dim + q] * a[p * dim + q])
            .sum();
        if off <= scale * 1e-32 || off == 0.0 {
            break;
        }
        for p in 0..dim {
            for q in (p + 1)..dim {
                let apq = a[p * dim + q];
                if apq == 0.0 {
                    continue;
                }
                let (app, aqq) = (a[p * dim + p], a[q * dim + q]);
                let theta = (aqq - app) / (2.0 * apq);
                let t = libm::copysign(1.0, theta)
                    / (libm::fabs(theta) + libm::sqrt(theta * theta + 1.0));
                let c = 1.0 / libm::sqrt(t * t + 1.0);
                let s = t * c;
                for k in 0..dim {
                    let (akp, akq) = (a[k * dim + p], a[k * dim + q]);
                    a[k * dim + p] = c * akp - s * akq;
                    a[k * dim + q] = s * akp + c * akq;
                }
                for k in 0..dim {
                    let (apk, aqk) = (a[p * dim + k], a[q * dim + k]);
                    a[p * dim + k] = c * apk - s * aqk;
                    a[q * dim + k] = s * apk + c * aqk;
                }
                for k in 0..dim {
                    let (vkp, vkq) = (v[k * dim + p], v[k * dim + q]);
                    v[k * dim + p] = c * vkp - s * vkq;
                    v[k * dim + q] = s * vkp + c * vkq;
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..dim).collect();
    order.sort_by(|&i, &j| a[j * dim + j].total_cmp(&a[i * dim + i]).then(i.cmp(&j)));
    let values = order.iter().map(|&i| a[i * dim + i]).collect();
    let mut vectors = Vec::with_capacity(dim * dim);
    for &k in &order {
        vectors.extend((0..dim).map(|r| v[r * dim + k]));
    }
    SymmetricEigen {
        dim,
        values,
        vectors,
    }
}

/// Moore–Penrose pseudo-inverse of a symmetric positive semi-definite matrix.
///
/// Eigenvalues below `dim · ε · λ_max` are treated as zero.
pub fn pseudo_inverse_psd(matrix: &[f64], dim: usize) -> Vec<f64> {
    let eig = symmetric_eigen(matrix, dim);
    let top = eig.values.first().copied().unwrap_or(0.0).abs();
    let cutoff = dim as f64 * f64::EPSILON * top;
    let mut out = vec![0.0; dim * dim];
    for (k, &lambda) in eig.values.iter().enumerate() {
        if lambda <= cutoff {
            continue;
        }
        let u = eig.vector(k);
        for i in 0..dim {
            for j in 0..dim {
                out[i * dim + j] += u[i] * u[j] / lambda;
            }
        }
    }
    out
}

pub fn mat_vec(matrix: &[f64], dim: usize, x: &[f64]) -> Vec<f64> {
    (0..dim)
        .map(|i| dot(&matrix[i * dim..(i + 1) * dim], x))
        .collect()
}

pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}
