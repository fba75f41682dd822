//! Feature-based measures: how well single features, or features applied
//! in sequence, separate the two classes.

use alloc::vec;
use alloc::vec::Vec;

use crate::dataset::Dataset;
use crate::numerics::eigen::{dot, mat_vec, symmetric_eigen};

/// Per-class, per-feature summary statistics.
#[derive(Debug, Clone, PartialEq)]
pub struct FeatureStats {
    pub counts: [usize; 2],
    /// `means[c][f]`
    pub means: [Vec<f64>; 2],
    pub mins: [Vec<f64>; 2],
    pub maxs: [Vec<f64>; 2],
    /// Sum of squared deviations from the class mean.
    pub scatter: [Vec<f64>; 2],
}

impl FeatureStats {
    pub fn new(d: &Dataset) -> Self {
        let m = d.n_features();
        let mut counts = [0usize; 2];
        let mut means = [vec![0.0; m], vec![0.0; m]];
        let mut mins = [vec![f64::INFINITY; m], vec![f64::INFINITY; m]];
        let mut maxs = [vec![f64::NEG_INFINITY; m], vec![f64::NEG_INFINITY; m]];
        for (i, row) in d.rows().enumerate() {
            let c = d.label(i);
            counts[c] += 1;
            for (f, &v) in row.iter().enumerate() {
                means[c][f] += v;
                mins[c][f] = mins[c][f].min(v);
                maxs[c][f] = maxs[c][f].max(v);
            }
        }
        for c in 0..2 {
            means[c].iter_mut().for_each(|v| *v /= counts[c] as f64);
        }
        let mut scatter = [vec![0.0; m], vec![0.0; m]];
        for (i, row) in d.rows().enumerate() {
            let c = d.label(i);
            for (f, &v) in row.iter().enumerate() {
                let dev = v - means[c][f];
                scatter[c][f] += dev * dev;
            }
        }
        FeatureStats {
            counts,
            means,
            mins,
            maxs,
            scatter,
        }
    }

    pub fn n_features(&self) -> usize {
        self.means[0].len()
    }

    /// Closed interval where both classes have values, `None` when disjoint.
    pub fn overlap_interval(&self, f: usize) -> Option<(f64, f64)> {
        let lo = self.mins[0][f].max(self.mins[1][f]);
        let hi = self.maxs[0][f].min(self.maxs[1][f]);
        (lo <= hi).then_some((lo, hi))
    }
}

/// Maximum Fisher's discriminant ratio, inverted into `[0, 1]`.
///
/// Per feature, `r = Σ_{c≠c'} p_c p_c' (μ_c − μ_c')² / Σ_c p_c σ_c²` with
/// population variances. A zero denominator with a nonzero numerator means
/// the feature separates perfectly and yields 0.
pub fn f1(d: &Dataset) -> f64 {
    let stats = FeatureStats::new(d);
    let n = d.n_samples() as f64;
    let p = [stats.counts[0] as f64 / n, stats.counts[1] as f64 / n];
    let mut best: f64 = 0.0;
    for f in 0..stats.n_features() {
        let gap = stats.means[0][f] - stats.means[1][f];
        let between = 2.0 * p[0] * p[1] * gap * gap;
        let within: f64 = (0..2)
            .map(|c| p[c] * stats.scatter[c][f] / stats.counts[c] as f64)
            .sum();
        let ratio = if within > 0.0 {
            between / within
        } else if between > 0.0 {
            f64::INFINITY
        } else {
            0.0
        };
        best = best.max(ratio);
    }
    1.0 / (1.0 + best)
}

/// Within-class scatter `W = Σ_c p_c Σ_c` (population covariances) and the
/// mean difference `μ₀ − μ₁`.
pub fn directional_scatter(d: &Dataset) -> (Vec<f64>, Vec<f64>) {
    let stats = FeatureStats::new(d);
    let m = d.n_features();
    let n = d.n_samples() as f64;
    let mut within = vec![0.0; m * m];
    for (i, row) in d.rows().enumerate() {
        let c = d.label(i);
        let weight = 1.0 / n;
        for a in 0..m {
            let da = row[a] - stats.means[c][a];
            for b in a..m {
                within[a * m + b] += weight * da * (row[b] - stats.means[c][b]);
            }
        }
    }
    for a in 0..m {
        for b in 0..a {
            within[a * m + b] = within[b * m + a];
        }
    }
    let gap = (0..m)
        .map(|f| stats.means[0][f] - stats.means[1][f])
        .collect();
    (within, gap)
}

/// Directional-vector Fisher ratio, inverted into `[0, 1]`.
///
/// Projects onto `w = W⁺(μ₀ − μ₁)` and takes `dF = wᵀBw / wᵀWw` with
/// `B = (μ₀ − μ₁)(μ₀ − μ₁)ᵀ`. If the mean difference has a component along
/// which the within-class scatter vanishes, the classes are perfectly
/// separable along it and the result is 0.
pub fn f1v(d: &Dataset) -> f64 {
    let m = d.n_features();
    let (within, gap) = directional_scatter(d);
    let gap_norm2 = dot(&gap, &gap);
    if gap_norm2 == 0.0 {
        return 1.0;
    }

    let eig = symmetric_eigen(&within, m);
    let top = eig.values.first().copied().unwrap_or(0.0).abs();
    let cutoff = m as f64 * f64::EPSILON * top;
    let mut direction = vec![0.0; m];
    let mut null_part = 0.0;
    for (k, &lambda) in eig.values.iter().enumerate() {
        let u = eig.vector(k);
        let coeff = dot(u, &gap);
        if lambda > cutoff {
            for (w, ui) in direction.iter_mut().zip(u) {
                *w += coeff / lambda * ui;
            }
        } else {
            null_part += coeff * coeff;
        }
    }
    if null_part > 1e-18 * gap_norm2 {
        return 0.0;
    }

    let projected = dot(&direction, &gap);
    let between = projected * projected;
    let spread = dot(&direction, &mat_vec(&within, m, &direction));
    let ratio = if spread > 0.0 {
        between / spread
    } else if between > 0.0 {
        return 0.0;
    } else {
        0.0
    };
    1.0 / (1.0 + ratio)
}

/// Per-feature overlap-to-range ratios used by F2; zero-range features
/// count as fully overlapping.
pub fn overlap_ratios(stats: &FeatureStats) -> Vec<f64> {
    (0..stats.n_features())
        .map(|f| {
            let overlap = (stats.maxs[0][f].min(stats.maxs[1][f])
                - stats.mins[0][f].max(stats.mins[1][f]))
            .max(0.0);
            let range =
                stats.maxs[0][f].max(stats.maxs[1][f]) - stats.mins[0][f].min(stats.mins[1][f]);
            if range > 0.0 {
                overlap / range
            } else {
                1.0
            }
        })
        .collect()
}

/// Volume of the overlapping region.
pub fn f2(d: &Dataset) -> f64 {
    overlap_ratios(&FeatureStats::new(d)).iter().product()
}

fn count_inside<I: Iterator<Item = usize>>(
    d: &Dataset,
    f: usize,
    interval: Option<(f64, f64)>,
    rows: I,
) -> usize {
    match interval {
        Some((lo, hi)) => rows
            .filter(|&i| {
                let v = d.value(i, f);
                v >= lo && v <= hi
            })
            .count(),
        None => 0,
    }
}

/// Maximum individual feature efficiency: the smallest fraction of
/// instances inside any single feature's overlap interval.
pub fn f3(d: &Dataset) -> f64 {
    let stats = FeatureStats::new(d);
    let n = d.n_samples();
    (0..stats.n_features())
        .map(|f| count_inside(d, f, stats.overlap_interval(f), 0..n))
        .min()
        .unwrap_or(n) as f64
        / n as f64
}

/// Collective feature efficiency.
///
/// Greedily applies the unused feature whose overlap interval (taken over
/// the instances still unresolved) contains the fewest instances of the
/// whole dataset, keeping only the instances inside that interval. Stops
/// when nothing is left, a class runs out, or every feature was used.
pub fn f4(d: &Dataset) -> f64 {
    let n = d.n_samples();
    let mut remaining: Vec<usize> = (0..n).collect();
    let mut unused: Vec<usize> = (0..d.n_features()).collect();

    while !remaining.is_empty() && !unused.is_empty() {
        // a single surviving class has no overlap left to shrink
        let Some(intervals) = overlap_on(d, &remaining) else {
            break;
        };
        let mut best: Option<(usize, usize)> = None;
        for (slot, &f) in unused.iter().enumerate() {
            let inside = count_inside(d, f, intervals[f], 0..n);
            if best.is_none_or(|(_, count)| inside < count) {
                best = Some((slot, inside));
            }
        }
        let (slot, _) = best.expect("unused features remain");
        let f = unused.remove(slot);
        match intervals[f] {
            Some((lo, hi)) => remaining.retain(|&i| {
                let v = d.value(i, f);
                v >= lo && v <= hi
            }),
            None => remaining.clear(),
        }
    }
    remaining.len() as f64 / n as f64
}

// Overlap interval of every feature restricted to `rows`; `None` if a class
// is absent from `rows`.
fn overlap_on(d: &Dataset, rows: &[usize]) -> Option<Vec<Option<(f64, f64)>>> {
    let m = d.n_features();
    let mut mins = [vec![f64::INFINITY; m], vec![f64::INFINITY; m]];
    let mut maxs = [vec![f64::NEG_INFINITY; m], vec![f64::NEG_INFINITY; m]];
    let mut seen = [false; 2];
    for &i in rows {
        let c = d.label(i);
        seen[c] = true;
        for (f, &v) in d.row(i).iter().enumerate() {
            mins[c][f] = mins[c][f].min(v);
            maxs[c][f] = maxs[c][f].max(v);
        }
    }
    if !(seen[0] && seen[1]) {
        return None;
    }
    Some(
        (0..m)
            .map(|f| {
                let lo = mins[0][f].max(mins[1][f]);
                let hi = maxs[0][f].min(maxs[1][f]);
                (lo <= hi).then_some((lo, hi))
            })
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dataset::{build_dataset, fixture};
    use crate::numerics::eigen::pseudo_inverse_psd;

    #[test]
    fn sep4_is_trivially_separable() {
        let d = fixture("SEP4").unwrap();
        assert_eq!(f1(&d), 0.0);
        assert_eq!(f1v(&d), 0.0);
        assert_eq!(f2(&d), 0.0);
        assert_eq!(f3(&d), 0.0);
        assert_eq!(f4(&d), 0.0);
    }

    #[test]
    fn dup4_is_fully_overlapping() {
        let d = fixture("DUP4").unwrap();
        assert_eq!(f1(&d), 1.0);
        assert_eq!(f1v(&d), 1.0);
        assert_eq!(f2(&d), 1.0);
        assert_eq!(f3(&d), 1.0);
        assert_eq!(f4(&d), 1.0);
    }

    #[test]
    fn single_feature_f4_equals_f3() {
        let d = build_dataset(
            &[[0.0], [2.0], [3.0], [1.0], [2.5], [5.0]],
            &[0, 0, 0, 1, 1, 1],
        )
        .unwrap();
        assert_eq!(f4(&d), f3(&d));
        // overlap [1, 3] holds 2, 3, 1, 2.5
        assert_eq!(f3(&d), 4.0 / 6.0);
    }

    #[test]
    fn constant_feature_counts_as_overlap() {
        let d = build_dataset(&[[7.0], [7.0], [7.0], [7.0]], &[0, 0, 1, 1]).unwrap();
        assert_eq!(f2(&d), 1.0);
        assert_eq!(f3(&d), 1.0);
    }

    #[test]
    fn f1v_matches_closed_form() {
        // with w = W⁺d, dF = dᵀW⁺d when d lies in the range of W
        let d = build_dataset(
            &[
                [0.0, 1.0],
                [1.0, 0.5],
                [2.0, 2.0],
                [1.5, 3.0],
                [3.0, 2.5],
                [2.5, 4.0],
            ],
            &[0, 0, 0, 1, 1, 1],
        )
        .unwrap();
        let (w, gap) = directional_scatter(&d);
        let pinv = pseudo_inverse_psd(&w, 2);
        let closed = dot(&gap, &mat_vec(&pinv, 2, &gap));
        assert!((f1v(&d) - 1.0 / (1.0 + closed)).abs() < 1e-12);
    }

    #[test]
    fn wdbc_feature_measures() {
        let d = fixture("WDBC").unwrap();
        assert!((f1(&d) - 0.227).abs() < 1e-3, "{}", f1(&d));
        assert!((f1v(&d) - 0.064).abs() < 1e-3, "{}", f1v(&d));
        assert!(f2(&d) < 1e-3);
        assert!((f3(&d) - 0.478).abs() < 1e-2, "{}", f3(&d));
        assert!((f4(&d) - 0.012).abs() < 1e-3, "{}", f4(&d));
    }
}
