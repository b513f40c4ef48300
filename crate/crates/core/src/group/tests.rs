use super::*;
use crate::catalog::{build_str, families};

fn q8() -> GroupTable {
    families::dicyclic(8)
}

fn s3() -> GroupTable {
    families::symmetric(3, DEFAULT_ORDER_CAP).unwrap()
}

fn involution(g: &GroupTable) -> u32 {
    let mut it = g.elements().filter(|&x| g.element_order(x) == 2);
    let x = it.next().unwrap();
    assert!(it.next().is_none(), "expected a unique involution");
    x
}

#[test]
fn orbit_stabilizer_and_identity_class() {
    for spec in ["S:4", "Q:8 x C:3", "A:5", "ESm:3"] {
        let g = build_str(spec).unwrap().group;
        let classes = g.conjugacy();
        assert_eq!(classes.class_size(0), 1);
        for x in g.elements() {
            assert_eq!(classes.class_size(x) as u64 * classes.centralizer_order[x as usize], g.order() as u64);
            assert_eq!(centralizer(&g, x).order() as u64, classes.centralizer_order[x as usize]);
        }
        let total: usize = classes.classes.iter().map(Vec::len).sum();
        assert_eq!(total, g.order());
    }
}

#[test]
fn abelian_groups_have_singleton_classes() {
    let g = families::cyclic(12);
    assert_eq!(g.conjugacy().num_classes(), 12);
    assert_eq!(nilpotency_class(&g), Some(1));
    let whole = SubgroupView::whole(&g);
    assert_eq!(commutator_set(&whole), vec![0]);
    assert!(commutator_subgroup(&whole).is_trivial());
}

#[test]
fn s3_classes_and_commutators() {
    let g = s3();
    let mut sizes = g.conjugacy().class_sizes();
    sizes.dedup();
    assert_eq!(sizes, vec![1, 2, 3]);
    let whole = SubgroupView::whole(&g);
    let k = commutator_set(&whole);
    assert_eq!(k.len(), 3);
    let derived = commutator_subgroup(&whole);
    assert_eq!(derived.members(), &k[..]);
    assert!(derived.is_normal());
    let q = quotient(&derived).unwrap();
    assert_eq!(q.table.order(), 2);
    assert_eq!(g.smallest_prime_divisor(), Some(2));
    assert_eq!(g.element_order(0), 1);
}

#[test]
fn generated_subgroups() {
    let g = s3();
    assert!(SubgroupView::generated(&g, []).is_trivial());
    let t = g.elements().find(|&x| g.element_order(x) == 2).unwrap();
    assert_eq!(SubgroupView::generated(&g, [t]).order(), 2);
    assert!(!SubgroupView::generated(&g, [t]).is_normal());

    let q = q8();
    let k = commutator_set(&SubgroupView::whole(&q));
    let gen = SubgroupView::generated(&q, k.iter().copied());
    assert_eq!(gen.members(), &[0, involution(&q)]);
}

#[test]
fn q8_centralizers_center_and_series() {
    let g = q8();
    let minus_one = involution(&g);
    let i = g.elements().find(|&x| g.element_order(x) == 4).unwrap();
    let c = centralizer(&g, i);
    assert_eq!(c.order(), 4);
    assert!(c.contains(minus_one) && c.contains(i) && c.contains(g.inv(i)));
    assert_eq!(center(&g).members(), &[0, minus_one]);
    assert_eq!(relative_center(&SubgroupView::whole(&g)), center(&g));

    let lower = lower_central_series(&g);
    assert_eq!(lower.kind, SeriesKind::Lower);
    assert_eq!(lower.terms[1].members(), &[0, minus_one]);
    assert!(lower.last().is_trivial());
    let upper = upper_central_series(&g);
    assert_eq!(upper.terms.len(), 3);
    assert!(upper.last().is_whole());
    assert_eq!(nilpotency_class(&g), Some(2));
    assert_eq!(upper_central_term(&g, 1), center(&g));
}

#[test]
fn q8_mod_center_is_klein() {
    let g = q8();
    let q = quotient(&center(&g)).unwrap();
    assert_eq!(q.table.order(), 4);
    assert!(q.table.elements().all(|x| q.table.element_order(x) <= 2));
    for a in g.elements() {
        for b in g.elements() {
            assert_eq!(q.project(g.mul(a, b)), q.table.mul(q.project(a), q.project(b)));
        }
    }
    assert_eq!(q.representatives[0], 0);
    assert!(q.representatives.windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn quotient_rejects_non_normal() {
    let g = s3();
    let t = g.elements().find(|&x| g.element_order(x) == 2).unwrap();
    let h = SubgroupView::generated(&g, [t]);
    assert!(matches!(quotient(&h), Err(crate::Error::NotNormal { .. })));
    let trivial = quotient(&SubgroupView::trivial(&g)).unwrap();
    assert_eq!(trivial.table.order(), 6);
}

#[test]
fn products() {
    let c2c3 = families::cyclic(2).direct_product(&families::cyclic(3), DEFAULT_ORDER_CAP).unwrap();
    assert_eq!(c2c3.order(), 6);
    assert!(c2c3.is_abelian());

    let q = q8();
    let lifted = GroupTable::trivial().direct_product(&q, DEFAULT_ORDER_CAP).unwrap();
    assert_eq!(lifted, q);

    let q8c3 = q.direct_product(&families::cyclic(3), DEFAULT_ORDER_CAP).unwrap();
    assert_eq!(q8c3.order(), 24);
    assert_eq!(center(&q8c3).order(), 6);
}

#[test]
fn x5_structure() {
    let entry = build_str("X5:3").unwrap();
    let g = &entry.group;
    assert_eq!(g.order(), 243);
    assert_eq!(center(g).order(), 9);
    let derived = commutator_subgroup(&SubgroupView::whole(g));
    assert_eq!(derived.order(), 27);
    assert!(center(g).is_subset_of(&derived));
    assert_eq!(nilpotency_class(g), Some(3));
    let lower = lower_central_series(g);
    assert_eq!(lower.terms.iter().map(SubgroupView::order).collect::<Vec<_>>(), vec![243, 27, 9, 1]);
    let classes = g.conjugacy();
    let z = center(g);
    assert!(g.elements().filter(|&x| !z.contains(x)).all(|x| classes.class_size(x) == 9));
    g.audit_associativity_exhaustive().unwrap();
}

#[test]
fn containment_and_two_way_center_on_small_catalog() {
    for spec in ["S:4", "D:12", "Q:8 x S:3", "A:4 x C:2"] {
        let entry = build_str(spec).unwrap();
        let g = &entry.group;
        for (_, h) in &entry.landmarks {
            let k = commutator_set(h);
            let derived = commutator_subgroup(h);
            assert!(k.iter().all(|&c| derived.contains(c)));
            assert_eq!(relative_center(h), h.intersection(&center(g)).unwrap());
            for &x in h.members() {
                for &c in g.conjugacy().class(x) {
                    assert!(k.binary_search(&g.mul(c, g.inv(x))).is_ok());
                }
            }
        }
    }
}

#[test]
fn commutator_set_equals_subgroup_on_extraspecial_and_abelian() {
    for spec in ["ESp:3", "ESm:3", "ESp:5", "C:12", "EA:2^3"] {
        let g = build_str(spec).unwrap().group;
        let whole = SubgroupView::whole(&g);
        assert_eq!(commutator_set(&whole), commutator_subgroup(&whole).members());
    }
}

#[test]
fn subgroup_validation() {
    let g = s3();
    assert!(SubgroupView::from_members(&g, [0, 1, 2, 3]).is_err());
    assert!(SubgroupView::from_members(&g, [1]).is_err());
    let t = g.elements().find(|&x| g.element_order(x) == 2).unwrap();
    let h = SubgroupView::from_members(&g, [t, 0]).unwrap();
    assert_eq!(h.members(), &[0, t]);
    let other = families::cyclic(6);
    assert_eq!(h.intersection(&SubgroupView::whole(&other)), Err(crate::Error::ParentMismatch));
    // an identical table built twice counts as the same parent
    assert!(h.intersection(&SubgroupView::whole(&s3())).is_ok());
    let (standalone, map) = SubgroupView::whole(&g).as_group();
    assert_eq!(standalone.order(), 6);
    assert_eq!(map.len(), 6);
}

#[test]
fn join_of_two_reflections_is_whole_s3() {
    let g = s3();
    let mut ts = g.elements().filter(|&x| g.element_order(x) == 2);
    let a = SubgroupView::generated(&g, [ts.next().unwrap()]);
    let b = SubgroupView::generated(&g, [ts.next().unwrap()]);
    assert!(a.join(&b).unwrap().is_whole());
    assert!(a.intersection(&b).unwrap().is_trivial());
}

#[test]
fn mutual_commutator_of_whole_is_derived() {
    let g = build_str("S:4").unwrap().group;
    let whole = SubgroupView::whole(&g);
    assert_eq!(mutual_commutator(&whole, &whole).unwrap(), commutator_subgroup(&whole));
}

mod props {
    use super::*;
    use proptest::prelude::*;

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn generated_subgroups_are_closed(seeds in proptest::collection::vec(0u32..24, 0..3)) {
            let g = families::symmetric(4, DEFAULT_ORDER_CAP).unwrap();
            let h = SubgroupView::generated(&g, seeds.iter().copied());
            prop_assert_eq!(g.order() % h.order(), 0);
            for &a in h.members() {
                prop_assert!(h.contains(g.inv(a)));
                for &b in h.members() {
                    prop_assert!(h.contains(g.mul(a, b)));
                }
            }
            for s in seeds {
                prop_assert!(h.contains(s));
            }
        }

        #[test]
        fn commutator_identities(a in 0u32..48, b in 0u32..48) {
            let g = build_str("Q:8 x S:3").unwrap().group;
            let c = g.commutator(a, b);
            prop_assert_eq!(c, g.mul(g.mul(g.mul(a, b), g.inv(a)), g.inv(b)));
            prop_assert_eq!(g.inv(c), g.commutator(b, a));
        }

        #[test]
        fn relabelled_tables_validate(perm in Just((0u32..6).collect::<Vec<_>>()).prop_shuffle()) {
            let g = s3();
            let pos: Vec<u32> = {
                let mut p = vec![0; 6];
                for (i, &x) in perm.iter().enumerate() { p[x as usize] = i as u32; }
                p
            };
            let rows: Vec<Vec<u32>> = (0..6u32)
                .map(|i| (0..6u32).map(|j| pos[g.mul(perm[i as usize], perm[j as usize]) as usize]).collect())
                .collect();
            let h = GroupTable::from_cayley_table(&rows).unwrap();
            prop_assert_eq!(h.order(), 6);
            prop_assert!(h.audit().is_ok());
            prop_assert!(!h.is_abelian());
        }
    }
}
