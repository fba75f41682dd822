//! Learned kernels shared by the measures: a linear soft-margin classifier
//! and principal component analysis.

pub mod eigen;
pub mod linear;
pub mod pca;

pub use linear::{decision_margin, train_linear, train_linear_with, HingeConfig, LinearModel};
pub use pca::{components_for, pca_spectrum, PcaSpectrum};
