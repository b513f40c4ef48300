//! Enforced invariants over pairs and whole catalogs. A violation here is a
//! bug in the library, never an expected outcome.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bounds::report::{bound_report_from, BoundReport};
use crate::bounds::{
    classvec_lower, comparison_lowers, dn10_upper, lemma34_check, theorem41_bounds, theorem_a_lower, theorem_b_check,
};
use crate::catalog::{self, lattice, BuildCaps, CatalogEntry, GroupSpec};
use crate::error::Result;
use crate::group::subgroup::{center, commutator_set, relative_center, SubgroupView};
use crate::ratio::ExactRatio;
use crate::stats::{commutator_counts, conjugate_rank, pair_profile, pr_bruteforce, pr_g_class_formula, PairProfile};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub pair_id: String,
    pub check: String,
    pub detail: String,
}

struct Recorder<'a> {
    pair_id: &'a str,
    out: Vec<Violation>,
}

impl Recorder<'_> {
    fn require(&mut self, ok: bool, check: &str, detail: impl FnOnce() -> String) {
        if !ok {
            self.out.push(Violation { pair_id: self.pair_id.to_string(), check: check.to_string(), detail: detail() });
        }
    }
}

/// Subgroups the checks run over: landmarks, every maximal subgroup (when
/// the lattice is within cap) and the cyclic subgroup generated by each
/// class representative. Duplicates keep their first name.
pub fn default_selection(entry: &CatalogEntry, lattice_cap: usize) -> Vec<(String, SubgroupView)> {
    let g = &entry.group;
    let mut out: Vec<(String, SubgroupView)> = entry.landmarks.clone();
    if g.order() > 1 && g.order() <= lattice_cap {
        if let Ok(maxes) = lattice::maximal_subgroups(g, lattice_cap) {
            out.extend(maxes.into_iter().enumerate().map(|(i, m)| (format!("max{i}"), m)));
        }
    }
    for class in g.conjugacy().classes.iter().skip(1) {
        let x = class[0];
        out.push((format!("cyc{x}"), SubgroupView::generated(g, [x])));
    }
    let mut seen: Vec<&[u32]> = Vec::new();
    let mut keep = vec![false; out.len()];
    for (i, (_, h)) in out.iter().enumerate() {
        if !seen.contains(&h.members()) {
            seen.push(h.members());
            keep[i] = true;
        }
    }
    let mut it = keep.into_iter();
    out.retain(|_| it.next().unwrap());
    out
}

fn check_profile(rec: &mut Recorder<'_>, profile: &PairProfile, pr: &ExactRatio) {
    let h = &profile.subgroup;
    let g = h.parent();
    let n = g.order();
    let z = &profile.relative_center;
    let classes = g.conjugacy();
    let k = commutator_set(h);
    let mut k_mask = vec![false; n];
    for &c in &k {
        k_mask[c as usize] = true;
    }

    // relative centre two ways
    let via_center = h.intersection(&center(g)).expect("same parent");
    rec.require(&via_center == z, "relative_center_two_ways", || format!("{z:?} vs {via_center:?}"));

    // commutator distribution: brute force vs class sum
    let counts = commutator_counts(h);
    let total = (h.order() * n) as u64;
    rec.require(counts.iter().sum::<u64>() == total, "pr_g_total_probability", || "Σ_g Pr_g != 1".into());
    for x in g.elements() {
        let brute = ExactRatio::new(counts[x as usize], total);
        let formula = pr_g_class_formula(h, x);
        rec.require(brute == formula, "pr_g_oracle_equivalence", || {
            format!("g={x}: brute {brute} vs class sum {formula}")
        });
        if !k_mask[x as usize] {
            rec.require(counts[x as usize] == 0, "pr_g_outside_k", || format!("g={x} outside K(G,H) has Pr_g > 0"));
        }
    }
    rec.require(ExactRatio::new(counts[0], total) == *pr, "pr_g_identity_is_pr", || "Pr_1 != Pr".into());
    rec.require(pr.is_one() == (z == h), "pr_one_iff_central", || format!("Pr = {pr}, |Z(H,G)| = {}", z.order()));

    // containment Cl_G(x) ⊆ K(G,H)·x and K ⊆ [G,H]
    for &x in h.members() {
        let xinv = g.inv(x);
        let ok = classes.class(x).iter().all(|&c| k_mask[g.mul(c, xinv) as usize]);
        rec.require(ok, "class_in_commutator_translate", || format!("Cl_G({x}) not inside K(G,H)·{x}"));
    }
    rec.require(k.iter().all(|&c| profile.commutator_subgroup.contains(c)), "k_in_commutator_subgroup", || {
        "K(G,H) not inside [G,H]".into()
    });

    // K(G,H) lower bound and strictness
    let ta = theorem_a_lower(profile);
    rec.require(ta <= *pr, "theorem_a_lower", || format!("bound {ta} > Pr {pr}"));
    if !profile.is_degenerate() {
        let strict = ExactRatio::new(1u64, k.len() as u64);
        rec.require(*pr > strict, "theorem_a_strict", || format!("Pr {pr} <= 1/|K| = {strict}"));
    }

    // ordering chain of lower bounds
    let cmp = comparison_lowers(profile);
    let c_order = profile.commutator_subgroup.order();
    if let Some(sal) = &cmp.salemkar.value {
        rec.require(*sal <= ta, "salemkar_le_theorem_a", || format!("{sal} > {ta}"));
        let equal_expected = k.len() == c_order;
        rec.require((*sal == ta) == equal_expected, "salemkar_theorem_a_equality", || {
            format!("equality {} but |K| = {}, |[G,H]| = {c_order}", *sal == ta, k.len())
        });
        if let (Some(erf), Some(p)) = (&cmp.erfanian.value, g.smallest_prime_divisor()) {
            if c_order != n {
                rec.require(erf <= sal, "erfanian_le_salemkar", || format!("{erf} > {sal}"));
                let equal_expected = (n / c_order) as u64 == p;
                rec.require((erf == sal) == equal_expected, "erfanian_salemkar_equality", || {
                    format!("equality {} but |G:[G,H]| = {}, p = {p}", erf == sal, n / c_order)
                });
            }
        }
    }
    if let Some(erf) = &cmp.erfanian.value {
        rec.require(erf <= pr, "erfanian_lower", || format!("{erf} > Pr {pr}"));
    }
    if let Some(pk) = &cmp.pournaki.value {
        rec.require(*pk <= ta, "pournaki_le_theorem_a", || format!("{pk} > {ta}"));
    }

    // class-size sandwich and the upper bound by the smallest prime
    if let Ok((lo, hi)) = theorem41_bounds(profile) {
        rec.require(lo <= *pr && *pr <= hi, "theorem41_sandwich", || format!("{lo} <= {pr} <= {hi} fails"));
        let two_valued = profile.s_h == profile.l_h;
        rec.require((lo == *pr) == two_valued, "theorem41_lower_equality", || {
            format!("lower attained {} but cs = {:?}", lo == *pr, profile.class_sizes)
        });
        rec.require((hi == *pr) == two_valued, "theorem41_upper_equality", || {
            format!("upper attained {} but cs = {:?}", hi == *pr, profile.class_sizes)
        });
        let p = g.smallest_prime_divisor().unwrap_or(1) as usize;
        rec.require(profile.s_h.unwrap() >= p, "s_h_at_least_p", || format!("s_H = {:?} < p = {p}", profile.s_h));
        if let Some(dn) = dn10_upper(profile).value {
            rec.require(hi <= dn, "theorem41_upper_le_dn10", || format!("{hi} > {dn}"));
        }
    }

    // equivalent equality conditions
    if let Ok(status) = crate::bounds::corollary35_status(profile, pr) {
        rec.require(status.agree(), "cor35_agreement", || format!("{status:?}"));
    }

    // closed forms for prime |[G,H]|
    if let Ok(report) = theorem_b_check(profile) {
        rec.require(report.all_match(), "theorem_b_closed_form", || format!("{:?}", report.rows));
    }
    if let Ok(report) = lemma34_check(profile) {
        rec.require(report.all_match(), "lemma34_closed_form", || format!("{:?}", report.rows));
    }
}

/// Runs every pair-level invariant; returns the report and any violations.
pub fn check_pair(pair_id: &str, h: &SubgroupView) -> (BoundReport, Vec<Violation>) {
    let profile = pair_profile(h);
    let pr = pr_bruteforce(h);
    let mut rec = Recorder { pair_id, out: Vec::new() };
    check_profile(&mut rec, &profile, &pr);
    (bound_report_from(pair_id.to_string(), &profile, pr), rec.out)
}

/// Group-level invariants: table audit, orbit–stabilizer, the
/// conjugate-type-vector lower bound, and the Sylow decomposition of
/// nilpotent groups.
pub fn check_group(name: &str, entry: &CatalogEntry) -> Vec<Violation> {
    let g = &entry.group;
    let mut rec = Recorder { pair_id: name, out: Vec::new() };
    if let Err(e) = g.audit() {
        rec.require(false, "table_audit", || e.to_string());
    }
    let classes = g.conjugacy();
    for x in g.elements() {
        let ok = classes.class_size(x) as u64 * classes.centralizer_order[x as usize] == g.order() as u64;
        rec.require(ok, "orbit_stabilizer", || format!("element {x}"));
    }
    rec.require(classes.class_size(0) == 1, "identity_singleton_class", String::new);

    let whole = SubgroupView::whole(g);
    rec.require(relative_center(&whole) == center(g), "relative_center_of_whole", String::new);
    if let Some(derived) = entry.landmark("derived") {
        rec.require(*derived == crate::group::commutator_subgroup(&whole), "derived_landmark", String::new);
    }
    for (lname, view) in &entry.landmarks {
        rec.require(
            SubgroupView::from_members(g, view.members().iter().copied()).is_ok(),
            "landmark_is_subgroup",
            || lname.clone(),
        );
    }

    if !g.is_abelian() {
        let pr = pr_bruteforce(&whole);
        match classvec_lower(g) {
            Ok(v) => {
                rec.require(v <= pr, "classvec_lower", || format!("{v} > Pr(G) {pr}"));
                if conjugate_rank(g) == 1 {
                    rec.require(v == pr, "classvec_attained_crk1", || format!("{v} != Pr(G) {pr}"));
                }
            }
            Err(e) => rec.require(false, "classvec_lower", || e.to_string()),
        }
    }

    let sylows: Vec<&SubgroupView> =
        entry.landmarks.iter().filter(|(n, _)| n.starts_with("sylow")).map(|(_, v)| v).collect();
    if !sylows.is_empty() {
        let product: usize = sylows.iter().map(|s| s.order()).product();
        rec.require(product == g.order(), "sylow_orders_multiply", || format!("{product} != {}", g.order()));
        for (i, a) in sylows.iter().enumerate() {
            for b in &sylows[i + 1..] {
                let meet = a.intersection(b).expect("same parent");
                rec.require(meet.is_trivial(), "sylow_intersections_trivial", || format!("{a:?} ∩ {b:?}"));
            }
        }
    }
    rec.out
}

/// Result of checking a batch of catalog groups.
#[derive(Clone, Debug, Serialize)]
pub struct CatalogVerification {
    pub groups: Vec<String>,
    pub pairs: usize,
    pub violations: Vec<Violation>,
    #[serde(skip)]
    pub reports: Vec<BoundReport>,
    #[serde(skip)]
    pub entries: Vec<CatalogEntry>,
}

/// Builds every spec with order at most `max_order` and runs all group and
/// pair invariants over [`default_selection`]. Work is spread over threads;
/// output order follows the input order.
pub fn verify_catalog(specs: &[GroupSpec], max_order: usize, caps: BuildCaps) -> Result<CatalogVerification> {
    let selected: Vec<&GroupSpec> = specs.iter().filter(|s| s.order() <= max_order as u128).collect();
    let entries: Vec<CatalogEntry> =
        selected.par_iter().map(|s| catalog::build_with_caps(s, caps)).collect::<Result<Vec<_>>>()?;

    let jobs: Vec<(String, SubgroupView)> = entries
        .iter()
        .flat_map(|e| {
            let spec = e.name.clone();
            default_selection(e, caps.lattice).into_iter().map(move |(n, h)| (format!("{spec}|{n}"), h))
        })
        .collect();

    let group_violations: Vec<Violation> = entries.par_iter().flat_map_iter(|e| check_group(&e.name, e)).collect();
    let pair_results: Vec<(BoundReport, Vec<Violation>)> = jobs.par_iter().map(|(id, h)| check_pair(id, h)).collect();

    let mut violations = group_violations;
    let mut reports = Vec::with_capacity(pair_results.len());
    for (r, v) in pair_results {
        violations.extend(v);
        reports.push(r);
    }
    Ok(CatalogVerification {
        groups: entries.iter().map(|e| e.name.clone()).collect(),
        pairs: reports.len(),
        violations,
        reports,
        entries,
    })
}

/// The shipped catalog as parsed specs.
pub fn shipped_specs() -> Vec<GroupSpec> {
    catalog::SHIPPED_CATALOG.iter().map(|s| catalog::parse_spec(s).expect("shipped specs parse")).collect()
}
