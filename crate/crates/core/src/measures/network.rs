//! Network measures over the same-class ε-neighbourhood graph.
//!
//! All three are reported as complements of the raw graph statistic, so a
//! dense, well-clustered graph (an easy problem) scores near 0.

use alloc::vec;
use alloc::vec::Vec;

use crate::dataset::Dataset;
use crate::geometry::{gower_matrix, DistanceMatrix};

pub const EPSILON: f64 = 0.15;

/// Undirected graph joining same-class instances closer than [`EPSILON`].
#[derive(Debug, Clone, PartialEq)]
pub struct EpsilonGraph {
    n: usize,
    adjacency: Vec<Vec<usize>>,
    linked: Vec<bool>,
}

impl EpsilonGraph {
    /// Builds the graph from the Gower matrix rescaled onto `[0, 1]`.
    pub fn build(d: &Dataset) -> Self {
        EpsilonGraph::from_distances(d, &gower_matrix(d).rescaled(), EPSILON)
    }

    /// Edge iff `distance < epsilon` and both ends share a class.
    pub fn from_distances(d: &Dataset, dm: &DistanceMatrix, epsilon: f64) -> Self {
        let n = d.n_samples();
        let mut adjacency = vec![Vec::new(); n];
        let mut linked = vec![false; n * n];
        for i in 0..n {
            for j in (i + 1)..n {
                if d.label(i) == d.label(j) && dm.get(i, j) < epsilon {
                    adjacency[i].push(j);
                    adjacency[j].push(i);
                    linked[i * n + j] = true;
                    linked[j * n + i] = true;
                }
            }
        }
        EpsilonGraph {
            n,
            adjacency,
            linked,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, i: usize) -> &[usize] {
        &self.adjacency[i]
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adjacency[i].len()
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.linked[i * self.n + j]
    }
}

pub fn build_epsilon_graph(d: &Dataset) -> EpsilonGraph {
    EpsilonGraph::build(d)
}

/// `1 − 2E / (n(n − 1))`.
pub fn density(g: &EpsilonGraph) -> f64 {
    let n = g.vertex_count() as f64;
    1.0 - 2.0 * g.edge_count() as f64 / (n * (n - 1.0))
}

/// One minus the mean local clustering coefficient; vertices with fewer
/// than two neighbours contribute a coefficient of 0.
pub fn cls_coef(g: &EpsilonGraph) -> f64 {
    let n = g.vertex_count();
    let total: f64 = (0..n).map(|i| local_clustering(g, i)).sum();
    1.0 - total / n as f64
}

pub fn local_clustering(g: &EpsilonGraph, i: usize) -> f64 {
    let nbrs = g.neighbors(i);
    let k = nbrs.len();
    if k < 2 {
        return 0.0;
    }
    let mut links = 0usize;
    for (a, &u) in nbrs.iter().enumerate() {
        for &v in &nbrs[a + 1..] {
            if g.has_edge(u, v) {
                links += 1;
            }
        }
    }
    2.0 * links as f64 / (k * (k - 1)) as f64
}

/// Hub scores: each vertex's sum of neighbour degrees, divided by the
/// largest such sum.
pub fn hub_scores(g: &EpsilonGraph) -> Vec<f64> {
    let raw: Vec<f64> = (0..g.vertex_count())
        .map(|i| g.neighbors(i).iter().map(|&j| g.degree(j) as f64).sum())
        .collect();
    let top = raw.iter().copied().fold(0.0, f64::max);
    if top == 0.0 {
        return vec![0.0; raw.len()];
    }
    raw.into_iter().map(|r| r / top).collect()
}

/// One minus the mean hub score.
pub fn hubs(g: &EpsilonGraph) -> f64 {
    let scores = hub_scores(g);
    1.0 - scores.iter().sum::<f64>() / scores.len() as f64
}
