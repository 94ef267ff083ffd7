use gfkit_corpus::{list_suites, run_all, run_suite, Scale, SuiteReport};

#[test]
fn every_suite_passes_at_small_scale() {
    for rep in run_all(Scale::Small) {
        let bad: Vec<_> = rep.failures().map(|c| &c.description).collect();
        assert!(rep.passed(), "{}: {bad:?}", rep.suite);
        assert!(!rep.checks.is_empty(), "{} ran no checks", rep.suite);
    }
}

#[test]
fn reports_come_back_in_registry_order() {
    let names: Vec<String> = run_all(Scale::Small).into_iter().map(|r| r.suite).collect();
    assert_eq!(names, list_suites());
}

#[test]
fn unknown_suite_is_an_error() {
    assert!(run_suite("no_such_suite", Scale::Small).is_err());
}

#[test]
fn report_roundtrips_through_json() {
    let rep = run_suite("dyck_area", Scale::Small).unwrap();
    let text = serde_json::to_string(&rep).unwrap();
    let back: SuiteReport = serde_json::from_str(&text).unwrap();
    assert_eq!(back.suite, rep.suite);
    assert_eq!(back.scale, rep.scale);
    assert_eq!(back.checks.len(), rep.checks.len());
    assert!(text.contains("\"scale\":\"small\""));
}
