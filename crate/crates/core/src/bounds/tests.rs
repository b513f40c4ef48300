use super::*;
use crate::catalog::{build_str, families};
use crate::group::DEFAULT_ORDER_CAP;
use crate::stats::pair_profile;

fn r(n: i64, d: i64) -> ExactRatio {
    ExactRatio::new(n, d)
}

fn profile_of(spec: &str, landmark: &str) -> PairProfile {
    let e = build_str(spec).unwrap();
    pair_profile(e.landmark(landmark).unwrap())
}

fn noncentral_cyclic(g: &GroupTable) -> SubgroupView {
    let z = center(g);
    let x = g.elements().find(|&x| !z.contains(x)).unwrap();
    SubgroupView::generated(g, [x])
}

#[test]
fn commutator_set_lower_bound_examples() {
    let ab = profile_of("C:12", "G");
    assert!(theorem_a_lower(&ab).is_one());

    let q8 = profile_of("Q:8", "G");
    assert_eq!(theorem_a_lower(&q8), r(5, 8));
    assert_eq!(pr_bruteforce(&q8.subgroup), r(5, 8));

    let s3 = profile_of("S:3", "G");
    assert_eq!(theorem_a_lower(&s3), r(4, 9));
    assert!(theorem_a_lower(&s3) < pr_bruteforce(&s3.subgroup));
}

#[test]
fn comparison_examples() {
    let q8 = comparison_lowers(&profile_of("Q:8", "G"));
    assert_eq!(q8.salemkar.value, Some(r(5, 8)));
    assert!(q8.salemkar.hypothesis.met);
    // 1/4 + 2(8 - 2)/64
    assert_eq!(q8.erfanian.value, Some(r(7, 16)));
    assert_eq!(q8.pournaki.value, Some(r(5, 8)));

    // |G : [G,G]| = 2 = p in S3, so erfanian meets salemkar
    let s3 = comparison_lowers(&profile_of("S:3", "G"));
    assert_eq!(s3.salemkar.value, s3.erfanian.value);
    assert_eq!(s3.erfanian.value, Some(r(4, 9)));
    assert!(!s3.salemkar.hypothesis.met, "[S3,S3] is not central");

    let ab = comparison_lowers(&profile_of("C:6", "G"));
    for b in [&ab.erfanian, &ab.salemkar, &ab.pournaki] {
        assert_eq!(b.value, None);
        assert!(!b.hypothesis.met);
    }

    let sub = comparison_lowers(&profile_of("S:4", "maximal"));
    assert!(sub.pournaki.value.is_none());
}

#[test]
fn class_size_sandwich_examples() {
    assert_eq!(theorem41_bounds(&profile_of("Q:8", "G")).unwrap(), (r(5, 8), r(5, 8)));
    assert_eq!(theorem41_bounds(&profile_of("S:3", "G")).unwrap(), (r(4, 9), r(7, 12)));
    assert_eq!(theorem41_bounds(&profile_of("C:4", "G")), Err(Error::DegeneratePair));

    // |Z| = 9, |G'| = 27, noncentral classes of size 9: Pr(G', G) =
    // (9·243 + 18·27) / (27·243)
    let x5 = profile_of("X5:3", "derived");
    let by_hand = r(9 * 243 + 18 * 27, 27 * 243);
    assert_eq!(by_hand, r(11, 27));
    assert_eq!(pr_bruteforce(&x5.subgroup), by_hand);
    assert_eq!(x5.index_h_z, 3);
    assert_eq!(theorem41_bounds(&x5).unwrap(), (by_hand.clone(), by_hand));

    let x5g = profile_of("X5:3", "G");
    let (lo, hi) = theorem41_bounds(&x5g).unwrap();
    assert_eq!(lo, hi);
    assert_eq!(lo, r(9 + 234 / 9, 243));
    assert_eq!(pr_bruteforce(&x5g.subgroup), lo);
}

#[test]
fn dn10_examples() {
    assert_eq!(dn10_upper(&profile_of("Q:8", "G")).value, Some(r(5, 8)));
    assert_eq!(dn10_upper(&profile_of("S:3", "G")).value, Some(r(7, 12)));
    let ab = dn10_upper(&profile_of("C:4", "G"));
    assert_eq!(ab.value, None);
    assert!(!ab.hypothesis.met);
}

#[test]
fn classvec_examples() {
    let s3 = families::symmetric(3, DEFAULT_ORDER_CAP).unwrap();
    assert_eq!(classvec_lower(&s3).unwrap(), r(1, 2));
    assert_eq!(classvec_lower(&families::dicyclic(8)).unwrap(), r(5, 8));
    let a5 = families::alternating(5, DEFAULT_ORDER_CAP).unwrap();
    // (1 + 3 + (60 - 1 - 47)/20) / 60
    assert_eq!(classvec_lower(&a5).unwrap(), r(23, 300));
    assert!(classvec_lower(&a5).unwrap() <= r(1, 12));
    assert_eq!(classvec_lower(&families::cyclic(5)), Err(Error::DegeneratePair));
    let esp = families::heisenberg(3);
    assert_eq!(classvec_lower(&esp).unwrap(), pr_bruteforce(&SubgroupView::whole(&esp)));
}

#[test]
fn equality_condition_examples() {
    let all_true = Cor35Status { cond_i: true, cond_ii: true, cond_iii: true };
    let all_false = Cor35Status { cond_i: false, cond_ii: false, cond_iii: false };
    for (spec, landmark) in [("ESp:3", "maximal"), ("X5:3", "derived")] {
        let p = profile_of(spec, landmark);
        let pr = pr_bruteforce(&p.subgroup);
        assert_eq!(corollary35_status(&p, &pr).unwrap(), all_true, "{spec} {landmark}");
    }
    let s3 = profile_of("S:3", "G");
    assert_eq!(corollary35_status(&s3, &r(1, 2)).unwrap(), all_false);
    let ab = profile_of("C:3", "G");
    assert_eq!(corollary35_status(&ab, &ExactRatio::one()), Err(Error::DegeneratePair));
}

#[test]
fn camina_examples() {
    let ab = is_camina(&families::cyclic(9));
    assert!(ab.camina && ab.abelian);
    for p in [3, 5] {
        assert_eq!(is_camina(&families::heisenberg(p)), CaminaStatus { camina: true, abelian: false });
        assert!(is_camina(&families::extraspecial_exp_p2(p)).camina);
    }
    assert!(!is_camina(&families::x5(3)).camina);
    assert!(!is_camina(&families::symmetric(4, DEFAULT_ORDER_CAP).unwrap()).camina);
}

#[test]
fn prime_commutator_closed_forms() {
    for p in [3, 5] {
        let g = families::heisenberg(p);
        let report = theorem_b_check(&pair_profile(&noncentral_cyclic(&g))).unwrap();
        assert_eq!(report.prime, p as u64);
        assert_eq!(report.rows.len(), p);
        assert!(report.all_match());
    }

    let e = build_str("Q:8 x C:3").unwrap();
    let sylow = crate::catalog::sylow_subgroup(&e.group, 2).unwrap();
    assert_eq!(sylow.order(), 8);
    let report = theorem_b_check(&pair_profile(&sylow)).unwrap();
    assert_eq!(report.prime, 2);
    assert_eq!(report.index_h_z, 4);
    let values: Vec<_> = report.rows.iter().map(|row| row.brute_force.clone()).collect();
    assert_eq!(values, vec![r(5, 8), r(3, 8)]);
    assert!(report.all_match());
    assert!(lemma34_check(&pair_profile(&sylow)).unwrap().all_match());

    let s3 = families::symmetric(3, DEFAULT_ORDER_CAP).unwrap();
    let a3 = commutator_subgroup(&SubgroupView::whole(&s3));
    let p = pair_profile(&a3);
    assert!(matches!(theorem_b_check(&p), Err(Error::HypothesisNotMet(m)) if m.contains("nilpotent")));
    assert!(matches!(lemma34_check(&p), Err(Error::HypothesisNotMet(m)) if m.contains("smallest prime")));
}

#[test]
fn x5_gamma2_has_no_prime_commutator() {
    // [G, γ2] = γ3 = <c1, c2> has order p², so the prime-order hypothesis fails
    let p = profile_of("X5:3", "gamma2");
    assert_eq!(p.commutator_subgroup.order(), 9);
    assert!(theorem_b_check(&p).is_err());
    let dist = pr_g_distribution(&p.subgroup);
    assert_eq!(dist[0], r(11, 27));
    assert_ne!(dist[0], ExactRatio::class_bound(3, 3));
}

#[test]
fn smallest_prime_closed_forms() {
    let q8 = families::dicyclic(8);
    let i = q8.elements().find(|&x| q8.element_order(x) == 4).unwrap();
    assert!(lemma34_check(&pair_profile(&SubgroupView::generated(&q8, [i]))).unwrap().all_match());

    let d8 = families::dihedral(8);
    let r4 = d8.elements().find(|&x| d8.element_order(x) == 4).unwrap();
    assert!(lemma34_check(&pair_profile(&SubgroupView::generated(&d8, [r4]))).unwrap().all_match());

    let c6 = families::cyclic(6);
    assert!(matches!(lemma34_check(&pair_profile(&SubgroupView::whole(&c6))), Err(Error::HypothesisNotMet(_))));
}

#[test]
fn verdicts() {
    let v = solvability_verdict(6, &r(1, 2));
    assert!(v.supersolvable());
    assert!(v.fired("barry-machale-ni-she").is_some());
    assert!(v.fired("barry-machale-ni-she-odd").is_none());

    let a5 = families::alternating(5, DEFAULT_ORDER_CAP).unwrap();
    let (pr, v) = group_verdict(&a5);
    assert_eq!(pr, r(1, 12));
    let gr = v.fired("guralnick-robinson").unwrap();
    assert_eq!(gr.conclusion, Some(SolvabilityConclusion::SolvableOrA5TimesAbelian));
    assert!(!v.supersolvable());

    let (pr, v) = group_verdict(&families::cyclic(45));
    assert!(pr.is_one());
    assert!(v.lines.iter().all(|l| l.fired));

    let s5 = families::symmetric(5, DEFAULT_ORDER_CAP).unwrap();
    let (pr, v) = group_verdict(&s5);
    assert_eq!(pr, r(7, 120));
    assert!(v.lines.iter().all(|l| !l.fired));
}

#[test]
fn report_fields() {
    let e = build_str("Q:8").unwrap();
    let report = bound_report("Q:8|G", e.landmark("G").unwrap());
    assert_eq!(report.pr, r(5, 8));
    for name in [
        "theorem_a_lower",
        "salemkar_lower",
        "pournaki_lower",
        "theorem41_lower",
        "theorem41_upper",
        "dn10_upper",
        "classvec_lower",
    ] {
        assert!(report.attained(name), "{name}");
    }
    assert!(!report.attained("erfanian_lower"));
    assert_eq!(report.bounds.len(), 8);
    assert!(report.camina.camina);
    assert!(report.verdicts.as_ref().unwrap().supersolvable());
    assert_eq!(report::csv_row(&report).len(), report::CSV_HEADER.len());

    let json = serde_json::to_string(&report).unwrap();
    let back: BoundReport = serde_json::from_str(&json).unwrap();
    assert_eq!(back, report);

    let ab = bound_report("C:4|G", &SubgroupView::whole(&families::cyclic(4)));
    assert!(ab.cor35.is_none());
    assert!(ab.bounds["theorem41_upper"].value.is_none());
    assert!(!ab.bounds["classvec_lower"].hypothesis.met);
}

#[test]
fn checks_pass_on_small_catalog() {
    for spec in ["S:3", "Q:8", "D:8", "ESp:3", "A:4", "Q:8 x C:3", "S:3 x C:3"] {
        let entry = build_str(spec).unwrap();
        assert!(check_group(spec, &entry).is_empty(), "{spec}");
        for (name, h) in default_selection(&entry, 1000) {
            let (_, violations) = check_pair(&name, &h);
            assert!(violations.is_empty(), "{spec} {name}: {violations:?}");
        }
    }
}

#[test]
fn selection_is_deduplicated() {
    let entry = build_str("Q:8").unwrap();
    let sel = default_selection(&entry, 1000);
    let mut members: Vec<_> = sel.iter().map(|(_, h)| h.members().to_vec()).collect();
    let n = members.len();
    members.sort();
    members.dedup();
    assert_eq!(members.len(), n);
    // G, 1, Z, three cyclic subgroups of order 4
    assert_eq!(n, 6);
}
