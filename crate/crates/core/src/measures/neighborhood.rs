//! Neighbourhood measures over the Euclidean distance matrix.
//!
//! Each measure has a plain form that builds its own matrix and a `_with`
//! form that reuses one computed by the caller.

use alloc::vec;
use alloc::vec::Vec;

use crate::dataset::Dataset;
use crate::error::Result;
use crate::geometry::{
    euclidean, euclidean_matrix, interpolate_same_class, minimum_spanning_tree, DistanceMatrix,
};

/// Nearest opposite-class instance of every point, ties to the lowest index.
pub fn nearest_enemies(d: &Dataset, dm: &DistanceMatrix) -> Vec<(usize, f64)> {
    nearest_by(d, dm, |i, j| d.label(i) != d.label(j))
}

/// Nearest same-class instance (other than itself) of every point.
pub fn nearest_friends(d: &Dataset, dm: &DistanceMatrix) -> Vec<(usize, f64)> {
    nearest_by(d, dm, |i, j| i != j && d.label(i) == d.label(j))
}

fn nearest_by(
    d: &Dataset,
    dm: &DistanceMatrix,
    keep: impl Fn(usize, usize) -> bool,
) -> Vec<(usize, f64)> {
    (0..d.n_samples())
        .map(|i| {
            let row = dm.row(i);
            let mut best = (usize::MAX, f64::INFINITY);
            for (j, &dist) in row.iter().enumerate() {
                if keep(i, j) && dist < best.1 {
                    best = (j, dist);
                }
            }
            best
        })
        .collect()
}

/// Fraction of borderline MST edges: cross-class tree edges over `n`.
pub fn n1(d: &Dataset) -> f64 {
    n1_with(d, &euclidean_matrix(d))
}

pub fn n1_with(d: &Dataset, dm: &DistanceMatrix) -> f64 {
    let cross = minimum_spanning_tree(dm)
        .iter()
        .filter(|e| d.label(e.a) != d.label(e.b))
        .count();
    cross as f64 / d.n_samples() as f64
}

/// Ratio of summed intra-class to summed extra-class nearest-neighbour
/// distances, squashed as `r / (1 + r)`.
pub fn n2(d: &Dataset) -> Result<f64> {
    n2_with(d, &euclidean_matrix(d))
}

pub fn n2_with(d: &Dataset, dm: &DistanceMatrix) -> Result<f64> {
    d.require_class_size(2)?;
    let intra: f64 = nearest_friends(d, dm).iter().map(|&(_, dist)| dist).sum();
    let extra: f64 = nearest_enemies(d, dm).iter().map(|&(_, dist)| dist).sum();
    // every point sits on top of an enemy
    if extra == 0.0 {
        return Ok(1.0);
    }
    let r = intra / extra;
    Ok(r / (1.0 + r))
}

/// Leave-one-out error of the 1-NN classifier.
pub fn n3(d: &Dataset) -> f64 {
    n3_with(d, &euclidean_matrix(d))
}

pub fn n3_with(d: &Dataset, dm: &DistanceMatrix) -> f64 {
    let neighbours = nearest_by(d, dm, |i, j| i != j);
    let wrong = neighbours
        .iter()
        .enumerate()
        .filter(|&(i, &(j, _))| d.label(i) != d.label(j))
        .count();
    wrong as f64 / d.n_samples() as f64
}

/// Error of a 1-NN classifier fitted on the original points and evaluated
/// on `n` same-class interpolants.
pub fn n4(d: &Dataset, seed: u64) -> Result<f64> {
    let synth = interpolate_same_class(d, d.n_samples(), seed)?;
    let mut wrong = 0;
    for s in 0..synth.len() {
        let x = synth.row(s);
        let mut best = (0, f64::INFINITY);
        for (i, row) in d.rows().enumerate() {
            let dist = euclidean(x, row);
            if dist < best.1 {
                best = (i, dist);
            }
        }
        if d.label(best.0) != synth.labels[s] {
            wrong += 1;
        }
    }
    Ok(wrong as f64 / synth.len() as f64)
}

/// Hypersphere radius of every instance.
///
/// For mutual nearest enemies the radius is half their distance; otherwise
/// it is the distance to the nearest enemy minus that enemy's own radius,
/// so spheres of neighbouring enemies touch without overlapping.
pub fn sphere_radii(d: &Dataset, dm: &DistanceMatrix) -> Vec<f64> {
    let enemy = nearest_enemies(d, dm);
    let n = d.n_samples();
    let mut radius: Vec<Option<f64>> = vec![None; n];
    let mut on_path = vec![false; n];
    let mut path = Vec::new();

    for start in 0..n {
        let mut cur = start;
        loop {
            if radius[cur].is_some() {
                break;
            }
            let (next, dist) = enemy[cur];
            // a revisited node closes a cycle of equal distances
            if on_path[cur] || enemy[next].0 == cur {
                radius[cur] = Some(dist / 2.0);
                break;
            }
            on_path[cur] = true;
            path.push(cur);
            cur = next;
        }
        while let Some(node) = path.pop() {
            on_path[node] = false;
            if radius[node].is_none() {
                let (next, dist) = enemy[node];
                let inner = radius[next].expect("resolved before its predecessor");
                radius[node] = Some((dist - inner).max(0.0));
            }
        }
    }
    radius.into_iter().map(|r| r.unwrap_or(0.0)).collect()
}

/// Fraction of hyperspheres that survive greedy elimination.
///
/// Spheres are visited by descending radius (ties to the lowest index); a
/// sphere is dropped when its centre lies strictly inside an already kept
/// sphere of the same class.
pub fn t1(d: &Dataset) -> f64 {
    t1_with(d, &euclidean_matrix(d))
}

pub fn t1_with(d: &Dataset, dm: &DistanceMatrix) -> f64 {
    kept_spheres(d, dm).len() as f64 / d.n_samples() as f64
}

pub fn kept_spheres(d: &Dataset, dm: &DistanceMatrix) -> Vec<usize> {
    let radius = sphere_radii(d, dm);
    let mut order: Vec<usize> = (0..d.n_samples()).collect();
    order.sort_by(|&a, &b| radius[b].total_cmp(&radius[a]).then(a.cmp(&b)));
    let mut kept: Vec<usize> = Vec::new();
    for i in order {
        let covered = kept
            .iter()
            .any(|&k| d.label(k) == d.label(i) && dm.get(i, k) < radius[k]);
        if !covered {
            kept.push(i);
        }
    }
    kept
}

/// Local set average cardinality: `1 − Σ|LS(i)| / n²`, where `LS(i)` holds
/// the other instances strictly closer to `i` than its nearest enemy.
pub fn lsc(d: &Dataset) -> f64 {
    lsc_with(d, &euclidean_matrix(d))
}

pub fn lsc_with(d: &Dataset, dm: &DistanceMatrix) -> f64 {
    let enemy = nearest_enemies(d, dm);
    let n = d.n_samples();
    let total: usize = (0..n)
        .map(|i| {
            let bound = enemy[i].1;
            dm.row(i)
                .iter()
                .enumerate()
                .filter(|&(j, &dist)| j != i && dist < bound)
                .count()
        })
        .sum();
    1.0 - total as f64 / (n * n) as f64
}
