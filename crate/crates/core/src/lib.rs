//! Problem-complexity measures for binary classification datasets.
//!
//! The 22 measures cover six families: feature overlap, linearity,
//! neighbourhood structure, ε-graph topology, dimensionality and class
//! imbalance. Values near 0 mark easy problems and values near 1 hard ones;
//! `t2` and `t3` are not bounded by 1.
//!
//! The crate is `no_std` and only needs `alloc`. Stochastic measures take
//! an explicit seed, so every result is reproducible.
//!
//! ```
//! use hardness_core::{fixture, CalculatorConfig, ComplexityCalculator};
//!
//! let data = fixture("SEP4").unwrap();
//! let mut calc = ComplexityCalculator::new(CalculatorConfig::default().with_seed(7));
//! calc.fit(&data).unwrap();
//! let report = calc.report().unwrap();
//! assert_eq!(report.complexities.len(), 22);
//! ```

#![no_std]

extern crate alloc;
#[cfg(feature = "std")]
extern crate std;

pub mod calculator;
pub mod dataset;
pub mod error;
pub mod geometry;
pub mod measures;
pub mod numerics;
mod rng;

pub use calculator::{
    metrics, CalculatorConfig, Category, ComplexityCalculator, ComplexityReport, FitPlan, Fitted,
    MeasureId, PolarPlotSpec, Sector, Wedge,
};
pub use dataset::{build_dataset, fixture, ClassSplit, Dataset, Fixture};
pub use error::{Error, Result};
