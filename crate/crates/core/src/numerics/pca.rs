use alloc::vec;
use alloc::vec::Vec;

use crate::dataset::Dataset;
use crate::numerics::eigen::symmetric_eigen;

/// Cumulative ratios within this distance of the threshold count as reaching it.
const THRESHOLD_SLACK: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq)]
pub struct PcaSpectrum {
    /// Covariance eigenvalues, descending, clamped at zero.
    pub eigenvalues: Vec<f64>,
    pub cumulative_ratios: Vec<f64>,
}

impl PcaSpectrum {
    pub fn from_eigenvalues(mut eigenvalues: Vec<f64>) -> Self {
        eigenvalues.sort_by(|a, b| b.total_cmp(a));
        let top = eigenvalues.first().copied().unwrap_or(0.0).abs();
        for v in eigenvalues.iter_mut() {
            if *v < 0.0 && *v >= -1e-10 * top.max(1.0) {
                *v = 0.0;
            }
            *v = v.max(0.0);
        }
        let total: f64 = eigenvalues.iter().sum();
        let mut running = 0.0;
        let mut cumulative_ratios: Vec<f64> = eigenvalues
            .iter()
            .map(|v| {
                running += v;
                if total > 0.0 {
                    running / total
                } else {
                    1.0
                }
            })
            .collect();
        if let Some(last) = cumulative_ratios.last_mut() {
            *last = 1.0;
        }
        PcaSpectrum {
            eigenvalues,
            cumulative_ratios,
        }
    }
}

/// Sample covariance (divisor `n - 1`) of the raw, mean-centred features.
pub fn covariance(d: &Dataset) -> Vec<f64> {
    let (n, m) = (d.n_samples(), d.n_features());
    let mut mean = vec![0.0; m];
    for row in d.rows() {
        for (acc, v) in mean.iter_mut().zip(row) {
            *acc += v;
        }
    }
    mean.iter_mut().for_each(|v| *v /= n as f64);
    let mut cov = vec![0.0; m * m];
    for row in d.rows() {
        for i in 0..m {
            let di = row[i] - mean[i];
            for j in i..m {
                cov[i * m + j] += di * (row[j] - mean[j]);
            }
        }
    }
    for i in 0..m {
        for j in i..m {
            let v = cov[i * m + j] / (n - 1) as f64;
            cov[i * m + j] = v;
            cov[j * m + i] = v;
        }
    }
    cov
}

pub fn pca_spectrum(d: &Dataset) -> PcaSpectrum {
    let eig = symmetric_eigen(&covariance(d), d.n_features());
    PcaSpectrum::from_eigenvalues(eig.values)
}

/// Smallest number of leading components whose cumulative ratio reaches
/// `threshold` (inclusive).
pub fn components_for(spectrum: &PcaSpectrum, threshold: f64) -> usize {
    spectrum
        .cumulative_ratios
        .iter()
        .position(|&r| r >= threshold - THRESHOLD_SLACK)
        .map_or(spectrum.cumulative_ratios.len(), |k| k + 1)
        .max(1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dataset::{build_dataset, fixture};

    fn ratios(r: &[f64]) -> PcaSpectrum {
        PcaSpectrum {
            eigenvalues: Vec::new(),
            cumulative_ratios: r.to_vec(),
        }
    }

    #[test]
    fn component_count_rules() {
        assert_eq!(components_for(&ratios(&[0.98, 1.0]), 0.95), 1);
        assert_eq!(components_for(&ratios(&[0.5, 0.9, 1.0]), 0.95), 3);
        assert_eq!(components_for(&ratios(&[0.5, 0.95, 1.0]), 0.95), 2);
        let s = PcaSpectrum::from_eigenvalues(vec![0.05, 0.5, 0.45]);
        assert_eq!(components_for(&s, 0.95), 2);
    }

    #[test]
    fn rank_one_line() {
        let d = build_dataset(
            &[[0.0, 0.0], [1.0, 1.0], [2.0, 2.0], [3.0, 3.0]],
            &[0, 0, 1, 1],
        )
        .unwrap();
        let s = pca_spectrum(&d);
        assert!((s.cumulative_ratios[0] - 1.0).abs() < 1e-12);
        assert_eq!(components_for(&s, 0.95), 1);
    }

    #[test]
    fn isotropic_square() {
        let d = build_dataset(
            &[[1.0, 0.0], [-1.0, 0.0], [0.0, 1.0], [0.0, -1.0]],
            &[0, 0, 1, 1],
        )
        .unwrap();
        assert_eq!(components_for(&pca_spectrum(&d), 0.95), 2);
    }

    #[test]
    fn wdbc_needs_one_component() {
        let d = fixture("WDBC").unwrap();
        let s = pca_spectrum(&d);
        assert_eq!(components_for(&s, 0.95), 1);
        let cov = covariance(&d);
        let trace: f64 = (0..30).map(|i| cov[i * 30 + i]).sum();
        let total: f64 = s.eigenvalues.iter().sum();
        assert!(((total - trace) / trace).abs() < 1e-8);
        assert!(s.eigenvalues.windows(2).all(|w| w[0] >= w[1]));
    }
}
