use std::collections::BTreeSet;

use graphene_cs::verify::{run, VerifyOptions};

#[test]
fn default_suite_passes() {
    let report = run(&VerifyOptions::default()).unwrap();
    let failures: Vec<_> = report
        .failures()
        .map(|c| (&c.name, c.residual, &c.params))
        .collect();
    assert!(failures.is_empty(), "{failures:#?}");
    let count = |name: &str| report.cases.iter().filter(|c| c.name == name).count();
    assert_eq!(count("eigen_residual"), 36);
    assert_eq!(count("density_normalization"), 54);
    assert_eq!(count("closed_form_agreement"), 15);
    assert_eq!(count("energy_scaling"), 10);
}

#[test]
fn literal_series_errata_are_the_known_set() {
    let report = run(&VerifyOptions::default()).unwrap();
    let found: BTreeSet<(String, String)> = report
        .errata
        .iter()
        .map(|e| (e.family.clone(), e.observable.clone()))
        .collect();
    let expected: BTreeSet<(String, String)> = [
        ("one", "z"),
        ("one", "z2"),
        ("one", "p"),
        ("one", "p2"),
        ("cubic", "z2"),
        ("cubic", "p2"),
    ]
    .iter()
    .map(|(f, o)| (f.to_string(), o.to_string()))
    .collect();
    assert_eq!(found, expected);
}

#[test]
fn suite_passes_under_weak_field() {
    let opts = VerifyOptions {
        b0: 0.125,
        k: -0.75,
        tol: 1e-14,
    };
    let report = run(&opts).unwrap();
    let failures: Vec<_> = report.failures().map(|c| (&c.name, c.residual)).collect();
    assert!(failures.is_empty(), "{failures:?}");
}

#[test]
fn report_serializes_with_expected_keys() {
    let report = run(&VerifyOptions::default()).unwrap();
    let v = serde_json::to_value(&report).unwrap();
    assert!(v["suite"].is_string());
    assert!(v["errata"][0]["worst_relative_difference"].is_number());
    let case = &v["cases"][0];
    for key in ["name", "params", "residual", "tolerance", "pass"] {
        assert!(case.get(key).is_some());
    }
}
