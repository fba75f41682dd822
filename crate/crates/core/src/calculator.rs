//! Measure registry and the fit → score / report / plot workflow.

use alloc::boxed::Box;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::dataset::Dataset;
use crate::error::{Error, Result};
use crate::geometry::{euclidean_matrix, DistanceMatrix};
use crate::measures::{dimensionality, feature, imbalance, linearity, neighborhood, network};
use crate::numerics::pca::{pca_spectrum, PcaSpectrum};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Category {
    FeatureBased,
    Linearity,
    Neighborhood,
    Network,
    Dimensionality,
    ClassImbalance,
}

impl Category {
    pub const ALL: [Category; 6] = [
        Category::FeatureBased,
        Category::Linearity,
        Category::Neighborhood,
        Category::Network,
        Category::Dimensionality,
        Category::ClassImbalance,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Category::FeatureBased => "feature_based",
            Category::Linearity => "linearity",
            Category::Neighborhood => "neighborhood",
            Category::Network => "network",
            Category::Dimensionality => "dimensionality",
            Category::ClassImbalance => "class_imbalance",
        }
    }

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn default_color(self) -> &'static str {
        DEFAULT_COLORS[self.index()]
    }
}

pub const DEFAULT_COLORS: [&str; 6] = ["red", "orange", "yellow", "green", "teal", "blue"];

/// One of the 22 measures. Declaration order is the canonical order used
/// for vectors, weights, reports and plots.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MeasureId {
    F1,
    F1v,
    F2,
    F3,
    F4,
    L1,
    L2,
    L3,
    N1,
    N2,
    N3,
    N4,
    T1,
    Lsc,
    Density,
    ClsCoef,
    Hubs,
    T2,
    T3,
    T4,
    C1,
    C2,
}

impl MeasureId {
    pub const ALL: [MeasureId; 22] = [
        MeasureId::F1,
        MeasureId::F1v,
        MeasureId::F2,
        MeasureId::F3,
        MeasureId::F4,
        MeasureId::L1,
        MeasureId::L2,
        MeasureId::L3,
        MeasureId::N1,
        MeasureId::N2,
        MeasureId::N3,
        MeasureId::N4,
        MeasureId::T1,
        MeasureId::Lsc,
        MeasureId::Density,
        MeasureId::ClsCoef,
        MeasureId::Hubs,
        MeasureId::T2,
        MeasureId::T3,
        MeasureId::T4,
        MeasureId::C1,
        MeasureId::C2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            MeasureId::F1 => "f1",
            MeasureId::F1v => "f1v",
            MeasureId::F2 => "f2",
            MeasureId::F3 => "f3",
            MeasureId::F4 => "f4",
            MeasureId::L1 => "l1",
            MeasureId::L2 => "l2",
            MeasureId::L3 => "l3",
            MeasureId::N1 => "n1",
            MeasureId::N2 => "n2",
            MeasureId::N3 => "n3",
            MeasureId::N4 => "n4",
            MeasureId::T1 => "t1",
            MeasureId::Lsc => "lsc",
            MeasureId::Density => "density",
            MeasureId::ClsCoef => "clsCoef",
            MeasureId::Hubs => "hubs",
            MeasureId::T2 => "t2",
            MeasureId::T3 => "t3",
            MeasureId::T4 => "t4",
            MeasureId::C1 => "c1",
            MeasureId::C2 => "c2",
        }
    }

    /// Position in the canonical order.
    pub fn ordinal(self) -> usize {
        self as usize
    }

    pub fn category(self) -> Category {
        use MeasureId::*;
        match self {
            F1 | F1v | F2 | F3 | F4 => Category::FeatureBased,
            L1 | L2 | L3 => Category::Linearity,
            N1 | N2 | N3 | N4 | T1 | Lsc => Category::Neighborhood,
            Density | ClsCoef | Hubs => Category::Network,
            T2 | T3 | T4 => Category::Dimensionality,
            C1 | C2 => Category::ClassImbalance,
        }
    }

    /// Whether the value depends on the seed.
    pub fn is_stochastic(self) -> bool {
        matches!(
            self,
            MeasureId::L1 | MeasureId::L2 | MeasureId::L3 | MeasureId::N4
        )
    }

    /// Seed handed to this measure for a given top-level seed.
    pub fn derive_seed(self, seed: u64) -> u64 {
        seed ^ self.ordinal() as u64
    }

    fn needs_euclidean(self) -> bool {
        use MeasureId::*;
        matches!(self, N1 | N2 | N3 | T1 | Lsc)
    }

    fn needs_graph(self) -> bool {
        matches!(
            self,
            MeasureId::Density | MeasureId::ClsCoef | MeasureId::Hubs
        )
    }

    fn needs_pca(self) -> bool {
        matches!(self, MeasureId::T3 | MeasureId::T4)
    }
}

impl fmt::Display for MeasureId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MeasureId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        MeasureId::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| Error::UnknownMeasure(s.into()))
    }
}

/// Measures in canonical order.
pub fn metrics() -> [MeasureId; 22] {
    MeasureId::ALL
}

/// Sorts into canonical order and drops duplicates.
pub fn canonical_selection(ids: &[MeasureId]) -> Vec<MeasureId> {
    let mut out = ids.to_vec();
    out.sort();
    out.dedup();
    out
}

#[derive(Debug, Clone, PartialEq)]
pub struct CalculatorConfig {
    pub measures: Vec<MeasureId>,
    /// Aggregation weights, aligned with `measures` in canonical order.
    pub weights: Option<Vec<f64>>,
    pub seed: u64,
    /// One color per [`Category`], in category order.
    pub colors: [String; 6],
}

impl Default for CalculatorConfig {
    fn default() -> Self {
        CalculatorConfig {
            measures: MeasureId::ALL.to_vec(),
            weights: None,
            seed: 0,
            colors: DEFAULT_COLORS.map(String::from),
        }
    }
}

impl CalculatorConfig {
    pub fn with_measures(mut self, ids: &[MeasureId]) -> Self {
        self.measures = ids.to_vec();
        self
    }

    pub fn with_weights(mut self, weights: Vec<f64>) -> Self {
        self.weights = Some(weights);
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }
}

/// Intermediates shared between measures, computed once per fit and only
/// when some selected measure reads them.
#[derive(Debug, Clone)]
pub struct FitPlan<'a> {
    dataset: &'a Dataset,
    measures: Vec<MeasureId>,
    seed: u64,
    euclidean: Option<DistanceMatrix>,
    graph: Option<network::EpsilonGraph>,
    pca: Option<PcaSpectrum>,
}

impl<'a> FitPlan<'a> {
    pub fn new(dataset: &'a Dataset, measures: &[MeasureId], seed: u64) -> Self {
        let measures = canonical_selection(measures);
        let any = |pred: fn(MeasureId) -> bool| measures.iter().any(|&id| pred(id));
        let euclidean = any(MeasureId::needs_euclidean).then(|| euclidean_matrix(dataset));
        let graph = any(MeasureId::needs_graph).then(|| network::build_epsilon_graph(dataset));
        let pca = any(MeasureId::needs_pca).then(|| pca_spectrum(dataset));
        FitPlan {
            dataset,
            measures,
            seed,
            euclidean,
            graph,
            pca,
        }
    }

    pub fn measures(&self) -> &[MeasureId] {
        &self.measures
    }

    pub fn dataset(&self) -> &Dataset {
        self.dataset
    }

    /// Evaluates one measure against the shared intermediates.
    pub fn evaluate(&self, id: MeasureId) -> Result<f64> {
        let d = self.dataset;
        let seed = id.derive_seed(self.seed);
        let value = match id {
            MeasureId::F1 => feature::f1(d),
            MeasureId::F1v => feature::f1v(d),
            MeasureId::F2 => feature::f2(d),
            MeasureId::F3 => feature::f3(d),
            MeasureId::F4 => feature::f4(d),
            MeasureId::L1 => linearity::l1(d, seed)?,
            MeasureId::L2 => linearity::l2(d, seed)?,
            MeasureId::L3 => linearity::l3(d, seed)?,
            MeasureId::N1 => neighborhood::n1_with(d, self.distances()),
            MeasureId::N2 => neighborhood::n2_with(d, self.distances())?,
            MeasureId::N3 => neighborhood::n3_with(d, self.distances()),
            MeasureId::N4 => neighborhood::n4(d, seed)?,
            MeasureId::T1 => neighborhood::t1_with(d, self.distances()),
            MeasureId::Lsc => neighborhood::lsc_with(d, self.distances()),
            MeasureId::Density => network::density(self.graph()),
            MeasureId::ClsCoef => network::cls_coef(self.graph()),
            MeasureId::Hubs => network::hubs(self.graph()),
            MeasureId::T2 => dimensionality::t2(d),
            MeasureId::T3 => dimensionality::t3_with(d, self.spectrum()),
            MeasureId::T4 => dimensionality::t4_with(d, self.spectrum()),
            MeasureId::C1 => imbalance::c1(d),
            MeasureId::C2 => imbalance::c2(d),
        };
        Ok(value)
    }

    /// Evaluates every selected measure in order, tagging failures with
    /// the measure id.
    pub fn run(&self) -> Result<Vec<f64>> {
        self.measures
            .iter()
            .map(|&id| self.evaluate(id).map_err(|e| tag(id, e)))
            .collect()
    }

    fn distances(&self) -> &DistanceMatrix {
        self.euclidean
            .as_ref()
            .expect("planned for neighborhood measures")
    }

    fn graph(&self) -> &network::EpsilonGraph {
        self.graph.as_ref().expect("planned for network measures")
    }

    fn spectrum(&self) -> &PcaSpectrum {
        self.pca
            .as_ref()
            .expect("planned for dimensionality measures")
    }
}

/// Wraps a measure failure with the id of the measure that raised it.
pub fn tag(id: MeasureId, error: Error) -> Error {
    match error {
        e @ Error::Measure { .. } => e,
        e => Error::Measure {
            id,
            source: Box::new(e),
        },
    }
}

/// Values of a completed fit plus the dataset facts the report needs.
#[derive(Debug, Clone, PartialEq)]
pub struct Fitted {
    pub measures: Vec<MeasureId>,
    pub values: Vec<f64>,
    pub n_samples: usize,
    pub n_features: usize,
    pub classes: [String; 2],
    pub prior_probability: [f64; 2],
}

impl Fitted {
    pub fn value(&self, id: MeasureId) -> Option<f64> {
        self.measures
            .iter()
            .position(|&m| m == id)
            .map(|k| self.values[k])
    }

    pub fn pairs(&self) -> impl Iterator<Item = (MeasureId, f64)> + '_ {
        self.measures
            .iter()
            .copied()
            .zip(self.values.iter().copied())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ComplexityReport {
    pub n_samples: usize,
    pub n_features: usize,
    pub n_classes: usize,
    pub classes: [String; 2],
    pub prior_probability: [f64; 2],
    pub score: f64,
    pub complexities: Vec<(MeasureId, f64)>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Sector {
    pub category: Category,
    pub start_deg: f64,
    pub end_deg: f64,
    pub color: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Wedge {
    pub measure: MeasureId,
    pub category: Category,
    pub start_deg: f64,
    pub end_deg: f64,
    /// Radial extent in `[0, 1]`; the raw value clamped at 1.
    pub radius: f64,
    pub value: f64,
    pub color: String,
}

/// Polar chart layout: six equal 60° sectors, one per category, each split
/// evenly among that category's selected measures. Angles are clockwise
/// from twelve o'clock.
#[derive(Debug, Clone, PartialEq)]
pub struct PolarPlotSpec {
    pub sectors: Vec<Sector>,
    pub wedges: Vec<Wedge>,
    pub score: f64,
    pub score_label: String,
}

pub const SECTOR_DEGREES: f64 = 60.0;

/// Weighted mean `Σ wᵢ vᵢ / Σ wᵢ`; uniform weights when `weights` is `None`.
pub fn weighted_mean(values: &[f64], weights: Option<&[f64]>) -> Result<f64> {
    match weights {
        None => Ok(values.iter().sum::<f64>() / values.len() as f64),
        Some(w) => {
            if w.len() != values.len() {
                return Err(Error::WeightLengthMismatch {
                    expected: values.len(),
                    found: w.len(),
                });
            }
            if let Some(index) = w.iter().position(|x| !(x.is_finite() && *x > 0.0)) {
                return Err(Error::InvalidWeight { index });
            }
            let total: f64 = w.iter().sum();
            Ok(values.iter().zip(w).map(|(v, x)| v * x).sum::<f64>() / total)
        }
    }
}

/// Facade over the measures: fit once, then read the score, the report or
/// the plot layout.
#[derive(Debug, Clone, Default)]
pub struct ComplexityCalculator {
    config: CalculatorConfig,
    fitted: Option<Fitted>,
}

impl ComplexityCalculator {
    pub fn new(config: CalculatorConfig) -> Self {
        ComplexityCalculator {
            config,
            fitted: None,
        }
    }

    pub fn config(&self) -> &CalculatorConfig {
        &self.config
    }

    /// Canonically ordered measure selection.
    pub fn measures(&self) -> Vec<MeasureId> {
        canonical_selection(&self.config.measures)
    }

    pub fn fit(&mut self, d: &Dataset) -> Result<&Fitted> {
        self.fit_with(d, |plan| plan.run())
    }

    /// Fits using a caller-supplied evaluation strategy, for example one
    /// that runs measures on several threads. `run` must return one value
    /// per entry of `plan.measures()`, in that order.
    pub fn fit_with<F>(&mut self, d: &Dataset, run: F) -> Result<&Fitted>
    where
        F: FnOnce(&FitPlan<'_>) -> Result<Vec<f64>>,
    {
        let measures = self.measures();
        if let Some(w) = &self.config.weights {
            if w.len() != measures.len() {
                return Err(Error::WeightLengthMismatch {
                    expected: measures.len(),
                    found: w.len(),
                });
            }
        }
        let plan = FitPlan::new(d, &measures, self.config.seed);
        let values = run(&plan)?;
        assert_eq!(
            values.len(),
            measures.len(),
            "one value per planned measure"
        );
        self.fitted = Some(Fitted {
            measures,
            values,
            n_samples: d.n_samples(),
            n_features: d.n_features(),
            classes: d.class_names().clone(),
            prior_probability: d.priors(),
        });
        Ok(self.fitted.as_ref().expect("just set"))
    }

    pub fn fitted(&self) -> Result<&Fitted> {
        self.fitted.as_ref().ok_or(Error::NotFitted)
    }

    /// The complexity vector in canonical order.
    pub fn complexity(&self) -> Result<&[f64]> {
        Ok(&self.fitted()?.values)
    }

    /// Aggregate score. Explicit weights take precedence over configured
    /// ones; with neither this is the arithmetic mean.
    pub fn score(&self, weights: Option<&[f64]>) -> Result<f64> {
        let fitted = self.fitted()?;
        let weights = weights.or(self.config.weights.as_deref());
        weighted_mean(&fitted.values, weights)
    }

    pub fn report(&self) -> Result<ComplexityReport> {
        let fitted = self.fitted()?;
        Ok(ComplexityReport {
            n_samples: fitted.n_samples,
            n_features: fitted.n_features,
            n_classes: 2,
            classes: fitted.classes.clone(),
            prior_probability: fitted.prior_probability,
            score: self.score(None)?,
            complexities: fitted.pairs().collect(),
        })
    }

    pub fn plot_data(&self) -> Result<PolarPlotSpec> {
        let fitted = self.fitted()?;
        let score = self.score(None)?;
        let sectors = Category::ALL
            .iter()
            .map(|&category| Sector {
                category,
                start_deg: SECTOR_DEGREES * category.index() as f64,
                end_deg: SECTOR_DEGREES * (category.index() + 1) as f64,
                color: self.config.colors[category.index()].clone(),
            })
            .collect();

        let mut wedges = Vec::with_capacity(fitted.measures.len());
        for category in Category::ALL {
            let members: Vec<(MeasureId, f64)> = fitted
                .pairs()
                .filter(|(id, _)| id.category() == category)
                .collect();
            if members.is_empty() {
                continue;
            }
            let span = SECTOR_DEGREES / members.len() as f64;
            let base = SECTOR_DEGREES * category.index() as f64;
            for (k, (measure, value)) in members.into_iter().enumerate() {
                wedges.push(Wedge {
                    measure,
                    category,
                    start_deg: base + span * k as f64,
                    end_deg: base + span * (k + 1) as f64,
                    radius: value.clamp(0.0, 1.0),
                    value,
                    color: self.config.colors[category.index()].clone(),
                });
            }
        }

        Ok(PolarPlotSpec {
            sectors,
            wedges,
            score,
            score_label: format!("{score:.3}"),
        })
    }
}

impl fmt::Display for ComplexityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n_samples: {}", self.n_samples)?;
        writeln!(f, "n_features: {}", self.n_features)?;
        writeln!(f, "n_classes: {}", self.n_classes)?;
        writeln!(f, "classes: [{}, {}]", self.classes[0], self.classes[1])?;
        writeln!(
            f,
            "prior_probability: [{:.3}, {:.3}]",
            self.prior_probability[0], self.prior_probability[1]
        )?;
        writeln!(f, "score: {:.3}", self.score)?;
        for (id, v) in &self.complexities {
            writeln!(f, "  {:<8} {v:.3}", id.to_string())?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dataset::{build_dataset, fixture};
    use alloc::vec;

    #[test]
    fn canonical_names() {
        let names: Vec<&str> = metrics().iter().map(|m| m.name()).collect();
        assert_eq!(
            names,
            [
                "f1", "f1v", "f2", "f3", "f4", "l1", "l2", "l3", "n1", "n2", "n3", "n4", "t1",
                "lsc", "density", "clsCoef", "hubs", "t2", "t3", "t4", "c1", "c2"
            ]
        );
        for id in MeasureId::ALL {
            assert_eq!(id.name().parse::<MeasureId>().unwrap(), id);
        }
        assert!(matches!(
            "F1".parse::<MeasureId>(),
            Err(Error::UnknownMeasure(_))
        ));
    }

    #[test]
    fn single_measure_fit() {
        let rows: Vec<Vec<f64>> = (0..100)
            .map(|i| (0..10).map(|f| (i + f) as f64).collect())
            .collect();
        let labels: Vec<usize> = (0..100).map(|i| i % 2).collect();
        let d = build_dataset(&rows, &labels).unwrap();
        let mut cc =
            ComplexityCalculator::new(CalculatorConfig::default().with_measures(&[MeasureId::T2]));
        assert_eq!(cc.fit(&d).unwrap().values, [0.1]);
        assert_eq!(cc.score(None).unwrap(), 0.1);
    }

    #[test]
    fn unfitted_calls_fail() {
        let cc = ComplexityCalculator::default();
        assert_eq!(cc.score(None), Err(Error::NotFitted));
        assert_eq!(cc.report(), Err(Error::NotFitted));
        assert_eq!(cc.plot_data(), Err(Error::NotFitted));
    }

    #[test]
    fn selection_is_canonicalised() {
        let d = fixture("SEP4").unwrap();
        let mut cc = ComplexityCalculator::new(CalculatorConfig::default().with_measures(&[
            MeasureId::C1,
            MeasureId::F1,
            MeasureId::C1,
        ]));
        let fitted = cc.fit(&d).unwrap();
        assert_eq!(fitted.measures, [MeasureId::F1, MeasureId::C1]);
    }

    #[test]
    fn weights_are_validated() {
        let d = fixture("SEP4").unwrap();
        let mut cc = ComplexityCalculator::new(
            CalculatorConfig::default().with_measures(&[MeasureId::F1, MeasureId::N1]),
        );
        cc.fit(&d).unwrap();
        assert_eq!(
            cc.score(Some(&[1.0])),
            Err(Error::WeightLengthMismatch {
                expected: 2,
                found: 1
            })
        );
        assert_eq!(
            cc.score(Some(&[1.0, -1.0])),
            Err(Error::InvalidWeight { index: 1 })
        );
        assert_eq!(cc.score(Some(&[0.5, 1.5])).unwrap(), 0.25 * 1.5 / 2.0);

        let mut bad =
            ComplexityCalculator::new(CalculatorConfig::default().with_weights(vec![1.0; 3]));
        assert!(matches!(
            bad.fit(&d),
            Err(Error::WeightLengthMismatch { expected: 22, .. })
        ));
    }

    #[test]
    fn score_of_printed_vector() {
        let printed = [
            0.227, 0.064, 0.000, 0.478, 0.012, 0.225, 0.070, 0.042, 0.043, 0.296, 0.084, 0.025,
            0.178, 0.912, 0.741, 0.268, 0.569, 0.053, 0.002, 0.033, 0.047, 0.122,
        ];
        assert!((weighted_mean(&printed, None).unwrap() - 0.203).abs() < 2e-3);
        let mut onehot = vec![0.0; 22];
        onehot[0] = 1.0;
        // one-hot needs strictly positive weights; use a dominant weight instead
        onehot.iter_mut().skip(1).for_each(|w| *w = 1e-12);
        assert!((weighted_mean(&printed, Some(&onehot)).unwrap() - 0.227).abs() < 1e-9);
    }

    #[test]
    fn errors_carry_measure_id() {
        let d = build_dataset(&[[0.0], [1.0], [2.0]], &[0, 1, 1]).unwrap();
        let mut cc =
            ComplexityCalculator::new(CalculatorConfig::default().with_measures(&[MeasureId::N2]));
        match cc.fit(&d) {
            Err(Error::Measure { id, source }) => {
                assert_eq!(id, MeasureId::N2);
                assert!(matches!(*source, Error::ClassTooSmall { .. }));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn plot_layout() {
        let d = fixture("SEP4").unwrap();
        let mut cc = ComplexityCalculator::default();
        cc.fit(&d).unwrap();
        let plot = cc.plot_data().unwrap();
        assert_eq!(plot.wedges.len(), 22);
        assert_eq!(plot.sectors.len(), 6);
        let colors: Vec<&str> = plot.sectors.iter().map(|s| s.color.as_str()).collect();
        assert_eq!(colors, DEFAULT_COLORS);
        for w in &plot.wedges {
            let span = w.end_deg - w.start_deg;
            match w.category {
                Category::ClassImbalance => assert_eq!(span, 30.0),
                Category::Neighborhood => assert_eq!(span, 10.0),
                Category::FeatureBased => assert_eq!(span, 12.0),
                _ => assert_eq!(span, 20.0),
            }
        }
        // SEP4: t2 = 2 / 4 = 0.5, untouched
        let t2 = plot
            .wedges
            .iter()
            .find(|w| w.measure == MeasureId::T2)
            .unwrap();
        assert_eq!(t2.radius, 0.5);
        assert_eq!(plot.score_label, format!("{:.3}", cc.score(None).unwrap()));
    }

    #[test]
    fn plot_clamps_large_values() {
        let rows: Vec<Vec<f64>> = (0..4)
            .map(|i| (0..20).map(|f| ((i * 7 + f * 3) % 11) as f64).collect())
            .collect();
        let d = build_dataset(&rows, &[0, 0, 1, 1]).unwrap();
        let mut cc =
            ComplexityCalculator::new(CalculatorConfig::default().with_measures(&[MeasureId::T2]));
        cc.fit(&d).unwrap();
        let plot = cc.plot_data().unwrap();
        assert_eq!(plot.wedges[0].value, 5.0);
        assert_eq!(plot.wedges[0].radius, 1.0);
        assert_eq!(cc.report().unwrap().complexities[0].1, 5.0);
    }
}
