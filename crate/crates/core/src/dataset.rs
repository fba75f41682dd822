//! Validated binary-classification datasets and the bundled fixtures.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt::Display;
use core::str::FromStr;

use crate::error::{Error, Result};

/// Dense feature matrix (row-major) with labels mapped to `{0, 1}`.
///
/// Construction goes through [`build_dataset`] or [`Dataset::from_parts`];
/// there is no way to mutate a dataset afterwards.
#[derive(Debug, Clone, PartialEq)]
pub struct Dataset {
    features: Vec<f64>,
    labels: Vec<usize>,
    n_samples: usize,
    n_features: usize,
    class_names: [String; 2],
}

/// Partition of instance indices by class.
#[derive(Debug, Clone, PartialEq)]
pub struct ClassSplit {
    pub indices: [Vec<usize>; 2],
}

impl ClassSplit {
    pub fn counts(&self) -> [usize; 2] {
        [self.indices[0].len(), self.indices[1].len()]
    }

    pub fn priors(&self) -> [f64; 2] {
        let [a, b] = self.counts();
        let n = (a + b) as f64;
        [a as f64 / n, b as f64 / n]
    }
}

/// Builds a dataset from raw rows and labels of any ordered type.
///
/// The two distinct label values are mapped to 0 and 1 by their sort order.
pub fn build_dataset<R, L>(rows: &[R], labels: &[L]) -> Result<Dataset>
where
    R: AsRef<[f64]>,
    L: PartialOrd + Display,
{
    if rows.len() < 2 {
        return Err(Error::EmptyDataset);
    }
    if labels.len() != rows.len() {
        return Err(Error::ShapeMismatch {
            expected: rows.len(),
            found: labels.len(),
            row: None,
        });
    }
    let m = rows[0].as_ref().len();
    if m == 0 {
        return Err(Error::EmptyDataset);
    }

    let mut features = Vec::with_capacity(rows.len() * m);
    for (i, row) in rows.iter().enumerate() {
        let row = row.as_ref();
        if row.len() != m {
            return Err(Error::ShapeMismatch {
                expected: m,
                found: row.len(),
                row: Some(i),
            });
        }
        if let Some(column) = row.iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFiniteFeature { row: i, column });
        }
        features.extend_from_slice(row);
    }

    let mut distinct: Vec<&L> = Vec::new();
    for label in labels {
        if !distinct.contains(&label) {
            distinct.push(label);
        }
    }
    if distinct.len() != 2 {
        return Err(Error::NonBinaryLabels {
            found: distinct.len(),
        });
    }
    let (low, high) = if distinct[1] < distinct[0] {
        (distinct[1], distinct[0])
    } else {
        (distinct[0], distinct[1])
    };
    let mapped = labels
        .iter()
        .map(|l| if l == low { 0 } else { 1 })
        .collect();

    Ok(Dataset {
        features,
        labels: mapped,
        n_samples: rows.len(),
        n_features: m,
        class_names: [low.to_string(), high.to_string()],
    })
}

impl Dataset {
    /// Assembles a dataset from a row-major buffer and `{0,1}` labels.
    pub fn from_parts(
        features: Vec<f64>,
        n_features: usize,
        labels: Vec<usize>,
        class_names: [String; 2],
    ) -> Result<Self> {
        let n = labels.len();
        if n < 2 || n_features == 0 {
            return Err(Error::EmptyDataset);
        }
        if features.len() != n * n_features {
            return Err(Error::ShapeMismatch {
                expected: n * n_features,
                found: features.len(),
                row: None,
            });
        }
        if let Some(pos) = features.iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFiniteFeature {
                row: pos / n_features,
                column: pos % n_features,
            });
        }
        if labels.iter().any(|&l| l > 1) {
            return Err(Error::NonBinaryLabels { found: 3 });
        }
        let ones = labels.iter().filter(|&&l| l == 1).count();
        if ones == 0 || ones == n {
            return Err(Error::NonBinaryLabels { found: 1 });
        }
        Ok(Dataset {
            features,
            labels,
            n_samples: n,
            n_features,
            class_names,
        })
    }

    pub fn n_samples(&self) -> usize {
        self.n_samples
    }

    pub fn n_features(&self) -> usize {
        self.n_features
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.features[i * self.n_features..(i + 1) * self.n_features]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[f64]> + '_ {
        self.features.chunks_exact(self.n_features)
    }

    pub fn value(&self, i: usize, feature: usize) -> f64 {
        self.features[i * self.n_features + feature]
    }

    pub fn label(&self, i: usize) -> usize {
        self.labels[i]
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn class_names(&self) -> &[String; 2] {
        &self.class_names
    }

    pub fn split(&self) -> ClassSplit {
        let mut indices = [Vec::new(), Vec::new()];
        for (i, &l) in self.labels.iter().enumerate() {
            indices[l].push(i);
        }
        ClassSplit { indices }
    }

    pub fn class_counts(&self) -> [usize; 2] {
        let ones = self.labels.iter().filter(|&&l| l == 1).count();
        [self.n_samples - ones, ones]
    }

    pub fn priors(&self) -> [f64; 2] {
        let [a, b] = self.class_counts();
        let n = self.n_samples as f64;
        [a as f64 / n, b as f64 / n]
    }

    /// New dataset made of the given rows, in the given order.
    pub fn select_rows(&self, order: &[usize]) -> Result<Dataset> {
        let mut features = Vec::with_capacity(order.len() * self.n_features);
        let mut labels = Vec::with_capacity(order.len());
        for &i in order {
            features.extend_from_slice(self.row(i));
            labels.push(self.labels[i]);
        }
        Dataset::from_parts(features, self.n_features, labels, self.class_names.clone())
    }

    /// New dataset with feature columns rearranged as `columns`.
    pub fn select_columns(&self, columns: &[usize]) -> Result<Dataset> {
        let mut features = Vec::with_capacity(self.n_samples * columns.len());
        for row in self.rows() {
            features.extend(columns.iter().map(|&c| row[c]));
        }
        Dataset::from_parts(
            features,
            columns.len(),
            self.labels.clone(),
            self.class_names.clone(),
        )
    }

    /// Fails unless every class has at least `required` instances.
    pub fn require_class_size(&self, required: usize) -> Result<()> {
        for (class, &count) in self.class_counts().iter().enumerate() {
            if count < required {
                return Err(Error::ClassTooSmall {
                    class,
                    count,
                    required,
                });
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fixture {
    /// Two vertical pairs ten units apart; linearly separable.
    Sep4,
    /// The four corners of the unit square labelled as XOR.
    Xor4,
    /// Both classes are the point set {(0,0), (1,1)}.
    Dup4,
    /// Wisconsin diagnostic breast cancer, 569 × 30.
    Wdbc,
}

impl Fixture {
    pub const ALL: [Fixture; 4] = [Fixture::Sep4, Fixture::Xor4, Fixture::Dup4, Fixture::Wdbc];

    pub fn name(self) -> &'static str {
        match self {
            Fixture::Sep4 => "SEP4",
            Fixture::Xor4 => "XOR4",
            Fixture::Dup4 => "DUP4",
            Fixture::Wdbc => "WDBC",
        }
    }

    pub fn load(self) -> Dataset {
        match self {
            Fixture::Sep4 => small(
                &[[0.0, 0.0], [0.0, 1.0], [10.0, 0.0], [10.0, 1.0]],
                &[0, 0, 1, 1],
            ),
            Fixture::Xor4 => small(
                &[[0.0, 0.0], [1.0, 1.0], [0.0, 1.0], [1.0, 0.0]],
                &[0, 0, 1, 1],
            ),
            Fixture::Dup4 => small(
                &[[0.0, 0.0], [1.0, 1.0], [0.0, 0.0], [1.0, 1.0]],
                &[0, 0, 1, 1],
            ),
            Fixture::Wdbc => parse_bundled_csv(WDBC_CSV),
        }
    }
}

impl FromStr for Fixture {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Fixture::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownFixture(s.into()))
    }
}

/// Loads a named fixture: `SEP4`, `XOR4`, `DUP4` or `WDBC`.
pub fn fixture(name: &str) -> Result<Dataset> {
    name.parse::<Fixture>().map(Fixture::load)
}

const WDBC_CSV: &str = include_str!("../data/wdbc.csv");

fn small(rows: &[[f64; 2]], labels: &[i32]) -> Dataset {
    build_dataset(rows, labels).expect("fixture is valid")
}

// Header row, numeric features, integer label in the last column.
fn parse_bundled_csv(text: &str) -> Dataset {
    let mut rows = Vec::new();
    let mut labels = Vec::new();
    for line in text.lines().skip(1).filter(|l| !l.trim().is_empty()) {
        let mut cells: Vec<&str> = line.split(',').collect();
        let label: i64 = cells
            .pop()
            .and_then(|c| c.trim().parse().ok())
            .expect("bundled label parses");
        let row: Vec<f64> = cells
            .iter()
            .map(|c| c.trim().parse().expect("bundled feature parses"))
            .collect();
        rows.push(row);
        labels.push(label);
    }
    build_dataset(&rows, &labels).expect("bundled dataset is valid")
}
