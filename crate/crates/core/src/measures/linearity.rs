//! Linearity measures, each backed by its own freshly trained linear model.

use crate::dataset::Dataset;
use crate::error::Result;
use crate::geometry::interpolate_same_class;
use crate::numerics::linear::{train_linear, LinearModel};

/// Sum of error distances, normalised by `n` and squashed as `s / (1 + s)`.
pub fn l1(d: &Dataset, seed: u64) -> Result<f64> {
    let model = train_linear(d, seed)?;
    Ok(error_distance(&model, d))
}

pub(crate) fn error_distance(model: &LinearModel, d: &Dataset) -> f64 {
    let norm = model.weight_norm();
    let mut total = 0.0;
    let mut any_wrong = false;
    for i in 0..d.n_samples() {
        let x = d.row(i);
        if model.predict(x) != d.label(i) {
            any_wrong = true;
            if norm > 0.0 {
                total += libm::fabs(model.decision(x)) / norm;
            }
        }
    }
    if !any_wrong {
        return 0.0;
    }
    // a zero normal vector puts every point infinitely far from the boundary
    if norm == 0.0 {
        return 1.0;
    }
    let s = total / d.n_samples() as f64;
    s / (1.0 + s)
}

/// Training error rate of the linear classifier.
pub fn l2(d: &Dataset, seed: u64) -> Result<f64> {
    Ok(train_linear(d, seed)?.training_error(d))
}

/// Error of the linear classifier on `n` same-class interpolants.
/// Interpolation uses `seed + 1` so it does not share draws with training.
pub fn l3(d: &Dataset, seed: u64) -> Result<f64> {
    d.require_class_size(2)?;
    let model = train_linear(d, seed)?;
    let synth = interpolate_same_class(d, d.n_samples(), seed.wrapping_add(1))?;
    let wrong = (0..synth.len())
        .filter(|&i| model.predict(synth.row(i)) != synth.labels[i])
        .count();
    Ok(wrong as f64 / synth.len() as f64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dataset::{build_dataset, fixture};
    use crate::error::Error;
    use alloc::vec;

    #[test]
    fn separable_fixture_scores_zero() {
        let d = fixture("SEP4").unwrap();
        assert_eq!(l1(&d, 0).unwrap(), 0.0);
        assert_eq!(l2(&d, 0).unwrap(), 0.0);
        assert_eq!(l3(&d, 0).unwrap(), 0.0);
    }

    #[test]
    fn seeded_values_repeat() {
        let d = fixture("XOR4").unwrap();
        for seed in [0, 7, 123] {
            assert_eq!(
                l1(&d, seed).unwrap().to_bits(),
                l1(&d, seed).unwrap().to_bits()
            );
            assert_eq!(
                l3(&d, seed).unwrap().to_bits(),
                l3(&d, seed).unwrap().to_bits()
            );
        }
    }

    #[test]
    fn error_distance_cases() {
        let d = build_dataset(&[[-1.0], [2.0], [1.0], [3.0]], &[0, 0, 1, 1]).unwrap();
        let model = LinearModel {
            weights: vec![2.0],
            bias: -3.0,
        };
        // boundary at 1.5: x=2 (class 0) is 0.5 away, x=1 (class 1) is 0.5 away
        let s = 1.0 / 4.0;
        assert!((error_distance(&model, &d) - s / (1.0 + s)).abs() < 1e-15);
        let flat = LinearModel {
            weights: vec![0.0],
            bias: 1.0,
        };
        assert_eq!(error_distance(&flat, &d), 1.0);
    }

    #[test]
    fn l3_needs_two_per_class() {
        let d = build_dataset(&[[0.0], [1.0], [2.0]], &[0, 1, 1]).unwrap();
        assert!(matches!(l3(&d, 0), Err(Error::ClassTooSmall { .. })));
    }
}
