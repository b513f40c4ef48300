use super::*;
use crate::catalog::build_str;
use crate::error::Error;
use crate::ratio::ExactRatio;
use crate::stats::DEFAULT_WORK_CAP;

fn whole_map(spec: &str) -> CommutationMap {
    let e = build_str(spec).unwrap();
    commutation_map(e.landmark("G").unwrap())
}

fn search(a: &CommutationMap, b: &CommutationMap) -> SearchOutcome {
    find_pair_isoclinism(a, b, DEFAULT_QUOTIENT_CAP, DEFAULT_NODE_BUDGET).unwrap()
}

#[test]
fn abelian_map_is_constant() {
    let m = whole_map("C:12");
    assert_eq!(m.quotient_order(), 1);
    assert_eq!(m.apply(0, 0), 0);
    let e = build_str("EA:2^3").unwrap();
    let sub = commutation_map(e.landmark("maximal").unwrap());
    assert_eq!(sub.first_ill_defined(), None);
}

#[test]
fn q8_and_d8_maps_have_the_same_shape() {
    for spec in ["Q:8", "D:8"] {
        let m = whole_map(spec);
        assert_eq!(m.quotient_order(), 4);
        assert_eq!(m.subgroup_image.order(), 4);
        let mut image: Vec<u32> =
            (0..4).flat_map(|a| (0..4).map(move |b| (a, b))).map(|(a, b)| m.apply(a, b)).collect();
        image.sort_unstable();
        image.dedup();
        assert_eq!(image, m.commutator_subgroup.members());
        assert_eq!(image.len(), 2);
    }
}

#[test]
fn identity_witness_is_valid() {
    for spec in ["S:3", "Q:8", "ESp:3", "A:4"] {
        let m = whole_map(spec);
        let w = IsoclinismWitness::identity(&m);
        assert_eq!(verify_pair_isoclinism(&m, &m, &w).unwrap(), None, "{spec}");
        assert!(verify_invariance(&m, &m, &w).unwrap().holds());
    }
}

#[test]
fn q8_d8_witness_and_perturbation() {
    let (q8, d8) = (whole_map("Q:8"), whole_map("D:8"));
    let outcome = search(&q8, &d8);
    let w = outcome.witness().expect("Q8 and D8 are isoclinic").clone();
    assert_eq!(verify_pair_isoclinism(&q8, &d8, &w).unwrap(), None);

    let report = verify_invariance(&q8, &d8, &w).unwrap();
    assert!(report.holds());
    let values: Vec<_> = report.rows.iter().map(|r| r.pr_source.clone()).collect();
    assert_eq!(values, vec![ExactRatio::new(5, 8), ExactRatio::new(3, 8)]);

    let inv = w.inverse();
    assert_eq!(verify_pair_isoclinism(&d8, &q8, &inv).unwrap(), None);

    let mut bad = w.clone();
    bad.beta[1] = bad.beta[0];
    let v = verify_pair_isoclinism(&q8, &d8, &bad).unwrap().unwrap();
    assert!(
        matches!(v, IsoclinismViolation::BetaNotBijective { element } if element == q8.commutator_subgroup.members()[1])
    );
    assert!(v.to_string().contains("beta"));
    assert!(matches!(verify_invariance(&q8, &d8, &bad), Err(Error::InvalidWitness(_))));

    let mut swapped = w.clone();
    swapped.beta.swap(0, 1);
    assert!(matches!(
        verify_pair_isoclinism(&q8, &d8, &swapped).unwrap(),
        Some(IsoclinismViolation::BetaNotHomomorphism { .. })
    ));

    let json = serde_json::to_string(&w).unwrap();
    let back: IsoclinismWitness = serde_json::from_str(&json).unwrap();
    assert_eq!(back, w);
}

#[test]
fn diagram_violation_is_named() {
    // identity on the quotient with beta inverting [G, G] keeps both maps
    // isomorphisms but breaks the square
    let m = whole_map("ESp:3");
    let g = m.group();
    let mut w = IsoclinismWitness::identity(&m);
    let members = m.commutator_subgroup.members();
    w.beta = members.iter().map(|&x| m.commutator_position(g.inv(x)).unwrap() as u32).collect();
    let v = verify_pair_isoclinism(&m, &m, &w).unwrap().unwrap();
    assert!(matches!(v, IsoclinismViolation::DiagramMismatch { .. }), "{v:?}");
    assert!(v.to_string().starts_with("diagram fails"));
}

#[test]
fn extraspecial_pair() {
    let (a, b) = (whole_map("ESp:3"), whole_map("ESm:3"));
    let w = search(&a, &b).witness().expect("extraspecial groups of order 27 are isoclinic").clone();
    let report = verify_invariance(&a, &b, &w).unwrap();
    assert_eq!(report.rows.len(), 3);
    assert!(report.holds());
}

#[test]
fn abelian_pairs_are_isoclinic() {
    let (a, b) = (whole_map("C:4"), whole_map("EA:2^2"));
    let w = search(&a, &b).witness().unwrap().clone();
    assert_eq!(w.alpha, vec![0]);
    assert_eq!(w.beta, vec![0]);
}

#[test]
fn fast_rejects_and_domain_errors() {
    let (q8, c8) = (whole_map("Q:8"), whole_map("C:8"));
    assert!(matches!(search(&q8, &c8), SearchOutcome::NotFound { nodes: 0, .. }));
    let w = IsoclinismWitness::identity(&q8);
    assert!(matches!(verify_pair_isoclinism(&q8, &c8, &w), Err(Error::DomainMismatch(_))));

    let (s3, q8b) = (whole_map("S:3"), whole_map("Q:8"));
    assert!(matches!(search(&s3, &q8b), SearchOutcome::NotFound { .. }));
}

#[test]
fn abelian_factors_do_not_change_the_class() {
    let (a, b) = (whole_map("D:8 x C:2"), whole_map("Q:8 x C:2"));
    assert!(search(&a, &b).witness().is_some());
    let (a, b) = (whole_map("D:8"), whole_map("Q:8 x C:2"));
    assert!(search(&a, &b).witness().is_some());
}

#[test]
fn budget_is_reported() {
    let (a, b) = (whole_map("ESp:3"), whole_map("ESm:3"));
    let outcome = find_pair_isoclinism(&a, &b, DEFAULT_QUOTIENT_CAP, 1).unwrap();
    assert_eq!(outcome, SearchOutcome::BudgetExhausted { nodes: 1 });
    assert!(matches!(find_pair_isoclinism(&a, &b, 4, 10), Err(Error::CapExceeded { order: 9, cap: 4 })));
}

#[test]
fn tuples() {
    let (q8e, d8e) = (build_str("Q:8").unwrap(), build_str("D:8").unwrap());
    let (gq, gd) = (q8e.landmark("G").unwrap().clone(), d8e.landmark("G").unwrap().clone());
    let (pq, pd) = (commutation_map(&gq), commutation_map(&gd));
    let w = search(&pq, &pd).witness().unwrap().clone();

    // m = 1 on (G, G) is the pair case
    let t1 = TupleData::new(&[gq.clone(), gq.clone()], DEFAULT_WORK_CAP).unwrap();
    let t2 = TupleData::new(&[gd.clone(), gd.clone()], DEFAULT_WORK_CAP).unwrap();
    let tw = TupleWitness::lift_from_pair(&w, &pq, &pd, &t1, &t2).unwrap();
    assert_eq!(tw.alpha, w.alpha);
    assert_eq!(tw.beta, w.beta);
    assert_eq!(verify_tuple_isoclinism(&t1, &t2, &tw).unwrap(), None);
    assert_eq!(tuple_invariance(&t1, &t2, &tw).unwrap(), verify_invariance(&pq, &pd, &w).unwrap());

    let t1 = TupleData::new(&[gq.clone(), gq.clone(), gq.clone()], DEFAULT_WORK_CAP).unwrap();
    let t2 = TupleData::new(&[gd.clone(), gd.clone(), gd.clone()], DEFAULT_WORK_CAP).unwrap();
    assert_eq!(t1.quotient.table.order(), 1);
    let tw = TupleWitness::lift_from_pair(&w, &pq, &pd, &t1, &t2).unwrap();
    let report = tuple_invariance(&t1, &t2, &tw).unwrap();
    assert_eq!(report.rows.len(), 1);
    assert!(report.rows[0].pr_source.is_one() && report.rows[0].pr_target.is_one());

    let s4 = build_str("S:4").unwrap();
    let g = s4.landmark("G").unwrap().clone();
    let m = s4.landmark("maximal").unwrap().clone();
    let t = TupleData::new(&[g.clone(), m, g], DEFAULT_WORK_CAP).unwrap();
    let id = TupleWitness::identity(&t);
    assert_eq!(verify_tuple_isoclinism(&t, &t, &id).unwrap(), None);
    assert!(tuple_invariance(&t, &t, &id).unwrap().holds());

    let mut bad = id.clone();
    bad.beta.swap(0, 1);
    assert!(verify_tuple_isoclinism(&t, &t, &bad).unwrap().is_some());
    assert!(matches!(verify_tuple_isoclinism(&t, &t1, &id), Err(Error::DomainMismatch(_))));
}
