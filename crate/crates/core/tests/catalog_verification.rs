use commdeg::bounds::{shipped_specs, verify_catalog};
use commdeg::catalog::BuildCaps;

#[test]
fn shipped_catalog_up_to_200_has_no_violations() {
    let specs = shipped_specs();
    let t = std::time::Instant::now();
    let result = verify_catalog(&specs, 200, BuildCaps::default()).unwrap();
    eprintln!("{} groups, {} pairs in {:?}", result.groups.len(), result.pairs, t.elapsed());
    assert!(result.violations.is_empty(), "{:#?}", &result.violations[..result.violations.len().min(10)]);
    assert!(result.groups.iter().any(|g| g == "A:5"));
    assert!(result.groups.iter().all(|g| g != "X5:3"));
}

#[test]
fn larger_catalog_groups_have_no_violations() {
    let specs: Vec<_> = shipped_specs().into_iter().filter(|s| (200..=400).contains(&s.order())).collect();
    let result = verify_catalog(&specs, 400, BuildCaps::default()).unwrap();
    assert_eq!(result.groups, ["X5:3", "A:6", "ESp:7"]);
    assert!(result.violations.is_empty(), "{:#?}", &result.violations[..result.violations.len().min(10)]);
}
