use hardness_core::measures::build_epsilon_graph;
use hardness_core::numerics::linear::{decision_margin, train_linear, LinearModel, DEFAULT_LAMBDA};
use hardness_core::numerics::pca::{covariance, pca_spectrum};
use hardness_core::{build_dataset, CalculatorConfig, ComplexityCalculator, Dataset, MeasureId};
use proptest::prelude::*;

// n ∈ [4, 60], m ∈ [1, 8], at least two instances per class.
fn dataset() -> impl Strategy<Value = Dataset> {
    (4usize..=60, 1usize..=8)
        .prop_flat_map(|(n, m)| {
            (
                proptest::collection::vec(proptest::collection::vec(-100.0f64..100.0, m), n),
                proptest::collection::vec(0usize..2, n),
            )
        })
        .prop_map(|(rows, mut labels)| {
            labels[..4].copy_from_slice(&[0, 0, 1, 1]);
            build_dataset(&rows, &labels).unwrap()
        })
}

fn fit(d: &Dataset, seed: u64) -> Vec<(MeasureId, f64)> {
    let mut calc = ComplexityCalculator::new(CalculatorConfig::default().with_seed(seed));
    calc.fit(d).unwrap().pairs().collect()
}

// Real roots of the characteristic polynomial of a symmetric matrix, m ≤ 3.
fn characteristic_roots(a: &[f64], m: usize) -> Vec<f64> {
    let mut roots = match m {
        1 => vec![a[0]],
        2 => {
            let (tr, det) = (a[0] + a[3], a[0] * a[3] - a[1] * a[2]);
            let disc = (tr * tr / 4.0 - det).max(0.0).sqrt();
            vec![tr / 2.0 + disc, tr / 2.0 - disc]
        }
        3 => {
            // trigonometric solution for a symmetric 3×3 matrix
            let q = (a[0] + a[4] + a[8]) / 3.0;
            let p1 = a[1] * a[1] + a[2] * a[2] + a[5] * a[5];
            let p2 = (a[0] - q).powi(2) + (a[4] - q).powi(2) + (a[8] - q).powi(2) + 2.0 * p1;
            let p = (p2 / 6.0).sqrt();
            if p == 0.0 {
                return vec![q; 3];
            }
            let b: Vec<f64> = (0..9)
                .map(|k| (a[k] - if k % 4 == 0 { q } else { 0.0 }) / p)
                .collect();
            let det_b = b[0] * (b[4] * b[8] - b[5] * b[7]) - b[1] * (b[3] * b[8] - b[5] * b[6])
                + b[2] * (b[3] * b[7] - b[4] * b[6]);
            let phi = (det_b / 2.0).clamp(-1.0, 1.0).acos() / 3.0;
            let l1 = q + 2.0 * p * phi.cos();
            let l3 = q + 2.0 * p * (phi + 2.0 * std::f64::consts::PI / 3.0).cos();
            vec![l1, 3.0 * q - l1 - l3, l3]
        }
        _ => unreachable!(),
    };
    roots.sort_by(|x, y| y.total_cmp(x));
    roots
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn bounded_measures_stay_in_unit_interval(d in dataset(), seed in any::<u64>()) {
        for (id, v) in fit(&d, seed) {
            prop_assert!(v.is_finite(), "{id} = {v}");
            if !matches!(id, MeasureId::T2 | MeasureId::T3) {
                prop_assert!((0.0..=1.0).contains(&v), "{id} = {v}");
            }
        }
    }

    #[test]
    fn t3_never_exceeds_t2(d in dataset()) {
        let values = fit(&d, 0);
        let get = |id| values.iter().find(|(m, _)| *m == id).unwrap().1;
        prop_assert!(get(MeasureId::T3) <= get(MeasureId::T2));
    }

    #[test]
    fn epsilon_graph_is_simple_and_class_pure(d in dataset()) {
        let g = build_epsilon_graph(&d);
        let n = d.n_samples();
        let mut degree_sum = 0;
        for i in 0..n {
            prop_assert!(!g.has_edge(i, i));
            degree_sum += g.degree(i);
            for j in 0..n {
                prop_assert_eq!(g.has_edge(i, j), g.has_edge(j, i));
                if g.has_edge(i, j) {
                    prop_assert_eq!(d.label(i), d.label(j));
                }
            }
        }
        prop_assert_eq!(degree_sum, 2 * g.edge_count());
        prop_assert!(g.edge_count() <= n * (n - 1) / 2);
    }

    #[test]
    fn deterministic_measures_ignore_row_order(d in dataset(), shift in 1usize..60) {
        let n = d.n_samples();
        let order: Vec<usize> = (0..n).map(|i| (i * 7 + shift) % n).collect();
        prop_assume!({
            let mut seen = order.clone();
            seen.sort_unstable();
            seen.dedup();
            seen.len() == n
        });
        let permuted = d.select_rows(&order).unwrap();
        for ((id, a), (_, b)) in fit(&d, 0).into_iter().zip(fit(&permuted, 0)) {
            if !id.is_stochastic() {
                prop_assert!((a - b).abs() < 1e-12, "{id}: {a} vs {b}");
            }
        }
    }

    #[test]
    fn score_is_the_weighted_mean(d in dataset(), weights in proptest::collection::vec(0.01f64..10.0, 22)) {
        let mut calc = ComplexityCalculator::default();
        let values = calc.fit(&d).unwrap().values.clone();
        let expected = values.iter().zip(&weights).map(|(v, w)| v * w).sum::<f64>() / weights.iter().sum::<f64>();
        prop_assert!((calc.score(Some(&weights)).unwrap() - expected).abs() < 1e-12);
        let mean = values.iter().sum::<f64>() / 22.0;
        prop_assert!((calc.score(None).unwrap() - mean).abs() < 1e-12);
    }

    #[test]
    fn pca_matches_characteristic_polynomial(
        rows in (1usize..=3).prop_flat_map(|m| proptest::collection::vec(proptest::collection::vec(-10.0f64..10.0, m), 5..20)),
    ) {
        let m = rows[0].len();
        let labels: Vec<usize> = (0..rows.len()).map(|i| i % 2).collect();
        let d = build_dataset(&rows, &labels).unwrap();
        let cov = covariance(&d);
        let spectrum = pca_spectrum(&d);
        let trace: f64 = (0..m).map(|k| cov[k * m + k]).sum();
        let scale = trace.max(1.0);
        for (got, want) in spectrum.eigenvalues.iter().zip(characteristic_roots(&cov, m)) {
            prop_assert!((got - want.max(0.0)).abs() < 1e-8 * scale, "{got} vs {want}");
        }
        let total: f64 = spectrum.eigenvalues.iter().sum();
        prop_assert!((total - trace).abs() <= 1e-8 * scale);
        prop_assert!((spectrum.cumulative_ratios[m - 1] - 1.0).abs() < 1e-12 || trace == 0.0);
    }

    #[test]
    fn margin_is_scale_invariant(
        w in proptest::collection::vec(-5.0f64..5.0, 3),
        b in -5.0f64..5.0,
        x in proptest::collection::vec(-5.0f64..5.0, 3),
        k in 0.01f64..100.0,
    ) {
        prop_assume!(w.iter().any(|v| v.abs() > 1e-3));
        let model = LinearModel { weights: w.clone(), bias: b };
        let scaled = LinearModel { weights: w.iter().map(|v| v * k).collect(), bias: b * k };
        let (a, c) = (decision_margin(&model, &x).unwrap(), decision_margin(&scaled, &x).unwrap());
        prop_assert!((a - c).abs() < 1e-9 * (1.0 + a.abs()));
    }

    #[test]
    fn training_beats_the_zero_model_on_separable_data(
        rows in proptest::collection::vec(proptest::collection::vec(0.0f64..1.0, 2), 4..30),
        gap in 1.0f64..10.0,
        seed in any::<u64>(),
    ) {
        // class 1 is class 0 shifted along the first axis
        let n = rows.len();
        let labels: Vec<usize> = (0..n).map(|i| usize::from(i >= n / 2)).collect();
        let shifted: Vec<Vec<f64>> = rows
            .iter()
            .zip(&labels)
            .map(|(r, &c)| vec![r[0] + c as f64 * (1.0 + gap), r[1]])
            .collect();
        let d = build_dataset(&shifted, &labels).unwrap();
        let model = train_linear(&d, seed).unwrap();
        let zero = LinearModel { weights: vec![0.0; 2], bias: 0.0 };
        prop_assert!(model.hinge_objective(&d, DEFAULT_LAMBDA) <= zero.hinge_objective(&d, DEFAULT_LAMBDA));
    }
}

#[test]
fn same_seed_same_bits() {
    let d = hardness_core::fixture("WDBC").unwrap();
    let a = fit(&d, 11);
    let b = fit(&d, 11);
    for ((id, x), (_, y)) in a.iter().zip(&b) {
        assert_eq!(x.to_bits(), y.to_bits(), "{id}");
    }
}
