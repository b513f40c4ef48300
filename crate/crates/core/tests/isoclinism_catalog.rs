use commdeg::catalog::{build, SHIPPED_CATALOG};
use commdeg::isoclinism::{
    commutation_map, find_pair_isoclinism, verify_invariance, verify_pair_isoclinism, SearchOutcome,
    DEFAULT_NODE_BUDGET, DEFAULT_QUOTIENT_CAP,
};
use commdeg::GroupSpec;

fn small_specs() -> Vec<GroupSpec> {
    SHIPPED_CATALOG.iter().map(|s| commdeg::catalog::parse_spec(s).unwrap()).filter(|s| s.order() <= 128).collect()
}

/// Every witness the search finds between whole-group pairs carries the
/// commutator distribution across exactly, and so does its inverse.
#[test]
fn invariance_holds_for_every_witness_found() {
    let entries: Vec<_> = small_specs().iter().map(|s| build(s).unwrap()).collect();
    let maps: Vec<_> = entries.iter().map(|e| commutation_map(e.landmark("G").unwrap())).collect();
    let mut found = 0;
    for (i, a) in maps.iter().enumerate() {
        for (j, b) in maps.iter().enumerate() {
            if a.quotient_order() > DEFAULT_QUOTIENT_CAP
                || a.descriptor().quotient_order != b.descriptor().quotient_order
            {
                continue;
            }
            let outcome = find_pair_isoclinism(a, b, DEFAULT_QUOTIENT_CAP, DEFAULT_NODE_BUDGET).unwrap();
            assert!(
                !matches!(outcome, SearchOutcome::BudgetExhausted { .. }),
                "{} {}",
                entries[i].name,
                entries[j].name
            );
            if let Some(w) = outcome.witness() {
                found += 1;
                assert!(verify_invariance(a, b, w).unwrap().holds(), "{} -> {}", entries[i].name, entries[j].name);
                assert_eq!(verify_pair_isoclinism(b, a, &w.inverse()).unwrap(), None);
            }
            if i == j {
                assert!(outcome.witness().is_some(), "{} with itself", entries[i].name);
            }
        }
    }
    assert!(found > maps.len());
}

#[test]
fn subgroup_pairs_with_themselves() {
    for spec in ["S:4", "Q:8 x S:3", "D:16"] {
        let e = commdeg::catalog::build_str(spec).unwrap();
        for (name, h) in &e.landmarks {
            let m = commutation_map(h);
            let outcome = find_pair_isoclinism(&m, &m, DEFAULT_QUOTIENT_CAP, DEFAULT_NODE_BUDGET).unwrap();
            let w = outcome.witness().unwrap_or_else(|| panic!("{spec} {name}: {outcome:?}"));
            assert!(verify_invariance(&m, &m, w).unwrap().holds());
        }
    }
}
