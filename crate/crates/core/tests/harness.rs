use scm_core::harness::enumerate::{canonical_complexes_upto, labeled_count};
use scm_core::harness::search::{search_counterexample, verify, SearchBounds, SearchOutcome};
use scm_core::harness::suite::{run_equivalence_suite, Family, SuiteConfig};
use scm_core::scm::Checker;
use scm_core::Coefficient;

fn small(families: &[Family]) -> SuiteConfig {
    SuiteConfig {
        samples: 12,
        exhaustive_vertices: 3,
        max_vertices: 6,
        homology_vertices: 6,
        max_elements: 7,
        semipure_elements: 8,
        families: families.to_vec(),
        ..SuiteConfig::default()
    }
}

#[test]
fn report_is_independent_of_parallelism() {
    let families = [Family::Routes, Family::Semipure, Family::Preservation, Family::Hochster];
    let one = run_equivalence_suite(&SuiteConfig { jobs: 1, ..small(&families) });
    let four = run_equivalence_suite(&SuiteConfig { jobs: 4, ..small(&families) });
    assert_eq!(serde_json::to_string(&one).unwrap(), serde_json::to_string(&four).unwrap());
    assert_eq!(one.summary.disagreements, 0);
}

#[test]
fn every_family_runs_clean() {
    let report = run_equivalence_suite(&small(&Family::ALL));
    if let Some(r) = report.disagreements().next() {
        panic!("{} on {}: {:?}", r.name, r.instance, r.verdicts);
    }
    assert_eq!(report.summary.budget_exhausted, 0);
    for f in Family::ALL {
        assert!(report.summary.instances.get(f.name()).copied().unwrap_or(0) > 0, "family {} produced no records", f.name());
    }
}

#[test]
fn pure_instances_collapse_to_cm() {
    let report = run_equivalence_suite(&SuiteConfig { exhaustive_vertices: 4, ..small(&[Family::PureCollapse]) });
    assert!(report.summary.records > 0);
    assert_eq!(report.summary.disagreements, 0);
}

#[test]
fn tiny_budget_is_reported_not_fatal() {
    let report = run_equivalence_suite(&SuiteConfig { budget_ms: Some(0), ..small(&[Family::Routes]) });
    assert!(report.summary.budget_exhausted > 0);
    assert_eq!(report.summary.disagreements, 0);
}

#[test]
fn enumeration_counts_are_frozen() {
    assert_eq!(labeled_count(4).unwrap(), 166);
    assert_eq!(canonical_complexes_upto(4).unwrap().len(), 50);
}

#[test]
fn search_is_reproducible_and_double_verified() {
    let bounds = SearchBounds::default();
    let a = search_counterexample(&bounds, 3, None);
    let b = search_counterexample(&bounds, 3, None);
    assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
    assert_eq!(a.outcome, SearchOutcome::Found);
    let p = a.poset.unwrap();
    let v = verify(&Checker::new(Coefficient::Rationals), &p).unwrap();
    assert!(v.confirmed());
    assert!(!Checker::new(Coefficient::Rationals).is_scm_links(&p.order_complex()).unwrap().verdict);
}

#[test]
fn tiny_search_bounds_exhaust() {
    let bounds = SearchBounds { max_elements: 4, random_samples: 20, ..SearchBounds::default() };
    let r = search_counterexample(&bounds, 0, None);
    assert_eq!(r.outcome, SearchOutcome::ExhaustedBounds);
    assert!(r.poset.is_none());
}
