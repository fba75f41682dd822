use hardness_core::{fixture, ComplexityCalculator, MeasureId};

#[test]
fn report_fields_and_score() {
    let d = fixture("WDBC").unwrap();
    let mut calc = ComplexityCalculator::default();
    calc.fit(&d).unwrap();
    let report = calc.report().unwrap();
    assert_eq!(
        (report.n_samples, report.n_features, report.n_classes),
        (569, 30, 2)
    );
    assert_eq!(report.classes, ["0".to_string(), "1".to_string()]);
    assert!((report.prior_probability[0] - 0.373).abs() < 5e-4);
    assert!((report.prior_probability[1] - 0.627).abs() < 5e-4);
    assert_eq!(report.score, calc.score(None).unwrap());
    assert!(
        (report.score - 0.203).abs() <= 0.02,
        "score {}",
        report.score
    );
    let ids: Vec<MeasureId> = report.complexities.iter().map(|(id, _)| *id).collect();
    assert_eq!(ids, MeasureId::ALL);
}
