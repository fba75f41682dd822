//! Soft-margin linear classifier trained with Pegasos-style stochastic
//! subgradient descent on the L2-regularised hinge loss.

use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::dataset::Dataset;
use crate::error::{Error, Result};
use crate::numerics::eigen::dot;
use crate::rng::seeded;

pub const DEFAULT_LAMBDA: f64 = 1e-4;
pub const DEFAULT_EPOCHS: usize = 1000;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HingeConfig {
    pub lambda: f64,
    pub epochs: usize,
}

impl Default for HingeConfig {
    fn default() -> Self {
        HingeConfig {
            lambda: DEFAULT_LAMBDA,
            epochs: DEFAULT_EPOCHS,
        }
    }
}

/// Separating hyperplane `w·x + b = 0`; class 1 lies on the positive side.
#[derive(Debug, Clone, PartialEq)]
pub struct LinearModel {
    pub weights: Vec<f64>,
    pub bias: f64,
}

impl LinearModel {
    pub fn decision(&self, x: &[f64]) -> f64 {
        dot(&self.weights, x) + self.bias
    }

    /// Class 1 iff the decision value is strictly positive.
    pub fn predict(&self, x: &[f64]) -> usize {
        usize::from(self.decision(x) > 0.0)
    }

    pub fn weight_norm(&self) -> f64 {
        libm::sqrt(dot(&self.weights, &self.weights))
    }

    /// `λ/2 ‖w‖² + mean hinge loss` with labels encoded as ±1.
    pub fn hinge_objective(&self, d: &Dataset, lambda: f64) -> f64 {
        let loss: f64 = (0..d.n_samples())
            .map(|i| {
                let y = sign_of(d.label(i));
                (1.0 - y * self.decision(d.row(i))).max(0.0)
            })
            .sum();
        0.5 * lambda * dot(&self.weights, &self.weights) + loss / d.n_samples() as f64
    }

    pub fn training_error(&self, d: &Dataset) -> f64 {
        let wrong = (0..d.n_samples())
            .filter(|&i| self.predict(d.row(i)) != d.label(i))
            .count();
        wrong as f64 / d.n_samples() as f64
    }
}

fn sign_of(label: usize) -> f64 {
    if label == 1 {
        1.0
    } else {
        -1.0
    }
}

pub fn train_linear(d: &Dataset, seed: u64) -> Result<LinearModel> {
    train_linear_with(d, seed, HingeConfig::default())
}

/// Weights start from `U(-0.01, 0.01)`; each epoch visits every instance
/// once in a seeded random order with step size `1 / (λ t)`. The bias is
/// shrunk together with the weights, as if it were an extra coordinate.
pub fn train_linear_with(d: &Dataset, seed: u64, config: HingeConfig) -> Result<LinearModel> {
    let counts = d.class_counts();
    if counts[0] == 0 || counts[1] == 0 {
        return Err(Error::SingleClass);
    }
    let mut rng = seeded(seed);
    let mut weights: Vec<f64> = (0..d.n_features())
        .map(|_| rng.gen_range(-0.01..0.01))
        .collect();
    let mut bias = 0.0;
    let mut order: Vec<usize> = (0..d.n_samples()).collect();
    let mut t = 0u64;
    for _ in 0..config.epochs {
        order.shuffle(&mut rng);
        for &i in &order {
            t += 1;
            let eta = 1.0 / (config.lambda * t as f64);
            let x = d.row(i);
            let y = sign_of(d.label(i));
            let violated = y * (dot(&weights, x) + bias) < 1.0;
            let decay = 1.0 - eta * config.lambda;
            weights.iter_mut().for_each(|w| *w *= decay);
            bias *= decay;
            if violated {
                for (w, xi) in weights.iter_mut().zip(x) {
                    *w += eta * y * xi;
                }
                bias += eta * y;
            }
        }
    }
    Ok(LinearModel { weights, bias })
}

/// Signed Euclidean distance from `x` to the model's hyperplane.
pub fn decision_margin(model: &LinearModel, x: &[f64]) -> Result<f64> {
    let norm = model.weight_norm();
    if norm == 0.0 {
        return Err(Error::ZeroWeightVector);
    }
    Ok(model.decision(x) / norm)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dataset::fixture;
    use alloc::vec;

    #[test]
    fn separates_sep4() {
        let d = fixture("SEP4").unwrap();
        for seed in 0..5 {
            let model = train_linear(&d, seed).unwrap();
            assert_eq!(model.training_error(&d), 0.0);
            let zero = LinearModel {
                weights: vec![0.0; 2],
                bias: 0.0,
            };
            assert!(
                model.hinge_objective(&d, DEFAULT_LAMBDA)
                    <= zero.hinge_objective(&d, DEFAULT_LAMBDA)
            );
        }
    }

    #[test]
    fn deterministic_given_seed() {
        let d = fixture("WDBC").unwrap();
        let cfg = HingeConfig {
            epochs: 5,
            ..HingeConfig::default()
        };
        assert_eq!(
            train_linear_with(&d, 9, cfg).unwrap(),
            train_linear_with(&d, 9, cfg).unwrap()
        );
        assert_ne!(
            train_linear_with(&d, 9, cfg).unwrap(),
            train_linear_with(&d, 10, cfg).unwrap()
        );
    }

    #[test]
    fn margin_cases() {
        let m = LinearModel {
            weights: vec![1.0, 0.0],
            bias: 0.0,
        };
        assert_eq!(decision_margin(&m, &[3.0, 7.0]).unwrap(), 3.0);
        assert_eq!(decision_margin(&m, &[0.0, 5.0]).unwrap(), 0.0);
        let doubled = LinearModel {
            weights: vec![2.0, 0.0],
            bias: 0.0,
        };
        assert_eq!(decision_margin(&doubled, &[3.0, 7.0]).unwrap(), 3.0);
        let zero = LinearModel {
            weights: vec![0.0, 0.0],
            bias: 1.0,
        };
        assert_eq!(
            decision_margin(&zero, &[1.0, 1.0]),
            Err(Error::ZeroWeightVector)
        );
    }
}
