//! Class-imbalance measures. Both read the labels only.

use crate::dataset::Dataset;

const CLASSES: f64 = 2.0;

/// One minus the normalised entropy of the class proportions.
pub fn c1(d: &Dataset) -> f64 {
    let entropy: f64 = d
        .priors()
        .iter()
        .filter(|&&p| p > 0.0)
        .map(|&p| p * libm::log2(p))
        .sum();
    1.0 + entropy / libm::log2(CLASSES)
}

/// Imbalance ratio `IR = ((c − 1) / c) Σ n_c / (n − n_c)`, reported as
/// `1 − 1 / IR`.
pub fn imbalance_ratio(d: &Dataset) -> f64 {
    let n = d.n_samples() as f64;
    let sum: f64 = d
        .class_counts()
        .iter()
        .map(|&count| count as f64 / (n - count as f64))
        .sum();
    (CLASSES - 1.0) / CLASSES * sum
}

pub fn c2(d: &Dataset) -> f64 {
    1.0 - 1.0 / imbalance_ratio(d)
}
