//! Search and census behaviour on concrete targets.

use sepr::classify::Field;
use sepr::search::{attainability_census, find_witness, parse_pool, SearchConfig, SearchMode, SourceKind};
use sepr::sepr::SeprSequence;

fn seq(s: &str) -> SeprSequence {
    s.parse().unwrap()
}

/// Uniform sampling rarely hits NA+S-: at position 1 a zero diagonal forces
/// every order-2 minor to be -|b_ij|^2, so the window must start later, where
/// every minor of some order k >= 2 has to vanish. The census reaches it by
/// negating a catalog witness instead.
#[test]
fn na_plus_s_minus_window() {
    let mut cfg = SearchConfig::new(6, Field::Hermitian);
    cfg.pool = parse_pool("0,1,-1,i,-i,2,-2").unwrap();
    cfg.target = Some(seq("NA+S-"));
    cfg.budget = 5000;
    cfg.seed = 1;
    if let Some(found) = find_witness(&cfg).unwrap() {
        assert_eq!(found.sepr.window(found.position, 3), seq("NA+S-"));
    }

    let mut census_cfg = SearchConfig::new(3, Field::Hermitian);
    census_cfg.budget = 200;
    let report = attainability_census(3, Field::Hermitian, &census_cfg).unwrap();
    let row = report.rows.iter().find(|r| r.pattern == seq("NA+S-")).unwrap();
    let w = row.witness.as_ref().expect("constructed witness");
    assert_ne!(w.kind, SourceKind::Search);
    assert_eq!(w.matrix.sepr().window(w.position, 3), seq("NA+S-"));
    assert!(!w.matrix.is_real());
}

#[test]
fn full_sequence_search_at_order_three() {
    let mut cfg = SearchConfig::new(3, Field::RealSymmetric);
    cfg.pool = parse_pool("-1,0,1").unwrap();
    cfg.mode = SearchMode::Exhaustive;
    cfg.budget = 729;
    cfg.subsequence = false;
    for target in ["A+A+A+", "A-A+A-", "NNN"] {
        cfg.target = Some(seq(target));
        let found = find_witness(&cfg).unwrap();
        let found = found.unwrap_or_else(|| panic!("{target} not found"));
        assert_eq!(found.sepr, seq(target));
        assert_eq!(found.position, 1);
    }
    cfg.target = Some(seq("NA+N"));
    assert_eq!(find_witness(&cfg).unwrap(), None);
}

#[test]
fn census_reports_open_patterns_with_tiny_budget() {
    let mut cfg = SearchConfig::new(3, Field::Hermitian);
    cfg.budget = 1;
    let report = attainability_census(3, Field::Hermitian, &cfg).unwrap();
    assert_eq!(report.targets(), 251);
    assert_eq!(report.witnessed() + report.open().len(), 251);
    assert!(report.all_verified);
    assert!(report.budgets.iter().any(|b| b.contains('1')));
    for row in &report.rows {
        assert!(row.tsv().starts_with(&row.pattern.to_string()));
    }
}
