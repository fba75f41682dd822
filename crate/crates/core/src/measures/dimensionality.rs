//! Dimensionality measures.

use crate::dataset::Dataset;
use crate::numerics::pca::{components_for, pca_spectrum, PcaSpectrum};

/// Share of explained variance the retained PCA components must reach.
pub const VARIANCE_THRESHOLD: f64 = 0.95;

/// Features per instance, `m / n`. Not bounded by 1.
pub fn t2(d: &Dataset) -> f64 {
    d.n_features() as f64 / d.n_samples() as f64
}

pub fn t3(d: &Dataset) -> f64 {
    t3_with(d, &pca_spectrum(d))
}

pub fn t3_with(d: &Dataset, spectrum: &PcaSpectrum) -> f64 {
    components_for(spectrum, VARIANCE_THRESHOLD) as f64 / d.n_samples() as f64
}

pub fn t4(d: &Dataset) -> f64 {
    t4_with(d, &pca_spectrum(d))
}

pub fn t4_with(d: &Dataset, spectrum: &PcaSpectrum) -> f64 {
    components_for(spectrum, VARIANCE_THRESHOLD) as f64 / d.n_features() as f64
}
