//! Pairwise distances, minimum spanning trees, nearest-neighbour lookup and
//! same-class interpolation.

use alloc::vec;
use alloc::vec::Vec;

use rand::Rng;

use crate::dataset::Dataset;
use crate::error::{Error, Result};
use crate::rng::seeded;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Metric {
    Euclidean,
    Gower,
    /// Gower distances min–max rescaled over the off-diagonal entries.
    RescaledGower,
}

/// Symmetric `n × n` distance table with a zero diagonal.
#[derive(Debug, Clone, PartialEq)]
pub struct DistanceMatrix {
    n: usize,
    data: Vec<f64>,
    metric: Metric,
}

impl DistanceMatrix {
    fn from_fn(n: usize, metric: Metric, f: impl Fn(usize, usize) -> f64) -> Self {
        let mut data = vec![0.0; n * n];
        for i in 0..n {
            for j in (i + 1)..n {
                let d = f(i, j);
                data[i * n + j] = d;
                data[j * n + i] = d;
            }
        }
        DistanceMatrix { n, data, metric }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn metric(&self) -> Metric {
        self.metric
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    /// Maps off-diagonal entries onto `[0, 1]` by their observed min and max.
    ///
    /// When every off-diagonal entry is equal the result is all zeros.
    pub fn rescaled(&self) -> DistanceMatrix {
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                let d = self.get(i, j);
                lo = lo.min(d);
                hi = hi.max(d);
            }
        }
        let span = hi - lo;
        DistanceMatrix::from_fn(self.n, Metric::RescaledGower, |i, j| {
            if span > 0.0 {
                (self.get(i, j) - lo) / span
            } else {
                0.0
            }
        })
    }
}

pub fn squared_euclidean(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum()
}

pub fn euclidean(a: &[f64], b: &[f64]) -> f64 {
    libm::sqrt(squared_euclidean(a, b))
}

pub fn euclidean_matrix(d: &Dataset) -> DistanceMatrix {
    DistanceMatrix::from_fn(d.n_samples(), Metric::Euclidean, |i, j| {
        euclidean(d.row(i), d.row(j))
    })
}

/// Range-normalised Manhattan distance averaged over non-constant features.
pub fn gower_matrix(d: &Dataset) -> DistanceMatrix {
    let m = d.n_features();
    let mut ranges = Vec::with_capacity(m);
    for f in 0..m {
        let (lo, hi) = (0..d.n_samples())
            .map(|i| d.value(i, f))
            .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| {
                (lo.min(v), hi.max(v))
            });
        ranges.push(hi - lo);
    }
    let active: Vec<usize> = (0..m).filter(|&f| ranges[f] > 0.0).collect();
    DistanceMatrix::from_fn(d.n_samples(), Metric::Gower, |i, j| {
        if active.is_empty() {
            return 0.0;
        }
        let (a, b) = (d.row(i), d.row(j));
        let total: f64 = active
            .iter()
            .map(|&f| libm::fabs(a[f] - b[f]) / ranges[f])
            .sum();
        total / active.len() as f64
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Edge {
    pub a: usize,
    pub b: usize,
    pub weight: f64,
}

/// Kruskal's algorithm over all pairs. Candidate edges are ordered by
/// `(weight, a, b)` so equal-weight ties resolve to the lexicographically
/// smallest pair.
pub fn minimum_spanning_tree(dm: &DistanceMatrix) -> Vec<Edge> {
    let n = dm.len();
    let mut edges = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for a in 0..n {
        for b in (a + 1)..n {
            edges.push(Edge {
                a,
                b,
                weight: dm.get(a, b),
            });
        }
    }
    edges.sort_by(|x, y| {
        x.weight
            .total_cmp(&y.weight)
            .then(x.a.cmp(&y.a))
            .then(x.b.cmp(&y.b))
    });

    let mut sets = DisjointSets::new(n);
    let mut tree = Vec::with_capacity(n.saturating_sub(1));
    for e in edges {
        if sets.union(e.a, e.b) {
            tree.push(e);
            if tree.len() + 1 == n {
                break;
            }
        }
    }
    tree
}

struct DisjointSets {
    parent: Vec<usize>,
    rank: Vec<u8>,
}

impl DisjointSets {
    fn new(n: usize) -> Self {
        DisjointSets {
            parent: (0..n).collect(),
            rank: vec![0; n],
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        match self.rank[ra].cmp(&self.rank[rb]) {
            core::cmp::Ordering::Less => self.parent[ra] = rb,
            core::cmp::Ordering::Greater => self.parent[rb] = ra,
            core::cmp::Ordering::Equal => {
                self.parent[rb] = ra;
                self.rank[ra] += 1;
            }
        }
        true
    }
}

/// Closest candidate to `i`; ties go to the lowest index.
pub fn nearest_neighbor<I>(dm: &DistanceMatrix, i: usize, candidates: I) -> Result<(usize, f64)>
where
    I: IntoIterator<Item = usize>,
{
    let mut best: Option<(usize, f64)> = None;
    for j in candidates {
        let d = dm.get(i, j);
        best = match best {
            Some((bj, bd)) if bd < d || (bd == d && bj < j) => Some((bj, bd)),
            _ => Some((j, d)),
        };
    }
    best.ok_or(Error::EmptyCandidates)
}

/// Points produced by [`interpolate_same_class`]. May hold a single class.
#[derive(Debug, Clone, PartialEq)]
pub struct SyntheticSet {
    pub n_features: usize,
    pub features: Vec<f64>,
    pub labels: Vec<usize>,
}

impl SyntheticSet {
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.features[i * self.n_features..(i + 1) * self.n_features]
    }
}

/// Draws `count` points on segments between random same-class pairs.
///
/// The class of each point is drawn with probability equal to its prior,
/// then two distinct parents of that class and `t ~ U(0, 1)`.
pub fn interpolate_same_class(d: &Dataset, count: usize, seed: u64) -> Result<SyntheticSet> {
    d.require_class_size(2)?;
    let split = d.split();
    let m = d.n_features();
    let mut rng = seeded(seed);
    let mut features = Vec::with_capacity(count * m);
    let mut labels = Vec::with_capacity(count);
    for _ in 0..count {
        let class = d.label(rng.gen_range(0..d.n_samples()));
        let members = &split.indices[class];
        let first = rng.gen_range(0..members.len());
        let mut second = rng.gen_range(0..members.len() - 1);
        if second >= first {
            second += 1;
        }
        let t: f64 = rng.gen();
        let (a, b) = (d.row(members[first]), d.row(members[second]));
        features.extend(a.iter().zip(b).map(|(x, y)| t * x + (1.0 - t) * y));
        labels.push(class);
    }
    Ok(SyntheticSet {
        n_features: m,
        features,
        labels,
    })
}
