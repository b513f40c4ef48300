use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::bounds::{
    classvec_lower, comparison_lowers, corollary35_status, dn10_upper, is_camina, solvability_verdict,
    theorem41_bounds, theorem_a_lower, BoundValue, CaminaStatus, Cor35Status, Hypothesis, Verdict,
};
use crate::group::subgroup::SubgroupView;
use crate::ratio::ExactRatio;
use crate::stats::{pair_profile, pr_bruteforce, PairProfile, ProfileSummary};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundKind {
    Lower,
    Upper,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundEntry {
    pub kind: BoundKind,
    pub value: Option<ExactRatio>,
    pub hypothesis: Hypothesis,
    /// `value == pr`.
    pub attained: bool,
}

/// Every bound and condition evaluated for one `(H, G)` pair.
///
/// Bound keys: `theorem_a_lower`, `salemkar_lower`, `erfanian_lower`,
/// `pournaki_lower`, `theorem41_lower`, `theorem41_upper`, `dn10_upper`,
/// `classvec_lower`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub pair_id: String,
    pub pr: ExactRatio,
    pub profile: ProfileSummary,
    pub bounds: BTreeMap<String, BoundEntry>,
    /// Names of bounds equal to `pr`, sorted.
    pub equality_flags: Vec<String>,
    pub cor35: Option<Cor35Status>,
    pub camina: CaminaStatus,
    /// Present only when `H = G`.
    pub verdicts: Option<Verdict>,
}

impl BoundReport {
    pub fn bound(&self, name: &str) -> Option<&ExactRatio> {
        self.bounds.get(name).and_then(|b| b.value.as_ref())
    }

    pub fn attained(&self, name: &str) -> bool {
        self.bounds.get(name).is_some_and(|b| b.attained)
    }
}

pub fn bound_report(pair_id: impl Into<String>, h: &SubgroupView) -> BoundReport {
    let profile = pair_profile(h);
    let pr = pr_bruteforce(h);
    bound_report_from(pair_id.into(), &profile, pr)
}

pub(crate) fn bound_report_from(pair_id: String, profile: &PairProfile, pr: ExactRatio) -> BoundReport {
    let g = profile.group();
    let degenerate = profile.is_degenerate();
    let mut bounds = BTreeMap::new();
    let mut put = |name: &str, kind: BoundKind, bv: BoundValue| {
        let attained = bv.value.as_ref() == Some(&pr);
        bounds.insert(name.to_string(), BoundEntry { kind, value: bv.value, hypothesis: bv.hypothesis, attained });
    };

    put(
        "theorem_a_lower",
        BoundKind::Lower,
        BoundValue { value: Some(theorem_a_lower(profile)), hypothesis: Hypothesis::met() },
    );
    let cmp = comparison_lowers(profile);
    put("erfanian_lower", BoundKind::Lower, cmp.erfanian);
    put("salemkar_lower", BoundKind::Lower, cmp.salemkar);
    put("pournaki_lower", BoundKind::Lower, cmp.pournaki);
    match theorem41_bounds(profile) {
        Ok((lo, hi)) => {
            put("theorem41_lower", BoundKind::Lower, BoundValue { value: Some(lo), hypothesis: Hypothesis::met() });
            put("theorem41_upper", BoundKind::Upper, BoundValue { value: Some(hi), hypothesis: Hypothesis::met() });
        }
        Err(_) => {
            for (name, kind) in [("theorem41_lower", BoundKind::Lower), ("theorem41_upper", BoundKind::Upper)] {
                put(name, kind, BoundValue { value: None, hypothesis: Hypothesis::not_met("H = Z(H,G)") });
            }
        }
    }
    put("dn10_upper", BoundKind::Upper, dn10_upper(profile));
    let classvec = if !profile.subgroup.is_whole() {
        BoundValue { value: None, hypothesis: Hypothesis::not_met("bounds Pr(G) only; H != G") }
    } else {
        match classvec_lower(g) {
            Ok(v) => BoundValue { value: Some(v), hypothesis: Hypothesis::met() },
            Err(_) => BoundValue { value: None, hypothesis: Hypothesis::not_met("G is abelian") },
        }
    };
    put("classvec_lower", BoundKind::Lower, classvec);

    let equality_flags = bounds.iter().filter(|(_, b)| b.attained).map(|(k, _)| k.clone()).collect();
    let cor35 = if degenerate { None } else { corollary35_status(profile, &pr).ok() };
    let verdicts = profile.subgroup.is_whole().then(|| solvability_verdict(g.order(), &pr));
    BoundReport {
        pair_id,
        profile: ProfileSummary::from(profile),
        bounds,
        equality_flags,
        cor35,
        camina: is_camina(g),
        verdicts,
        pr,
    }
}

/// Column order of [`csv_row`].
pub const CSV_HEADER: &[&str] = &[
    "pair_id",
    "group_order",
    "subgroup_order",
    "pr",
    "theorem_a_lower",
    "salemkar_lower",
    "erfanian_lower",
    "pournaki_lower",
    "theorem41_lower",
    "theorem41_upper",
    "dn10_upper",
    "classvec_lower",
    "equality_flags",
    "cor35_i",
    "cor35_ii",
    "cor35_iii",
    "camina",
];

/// One CSV row with exact fractions; empty cells for inapplicable bounds.
pub fn csv_row(r: &BoundReport) -> Vec<String> {
    let bound = |k: &str| r.bound(k).map(ToString::to_string).unwrap_or_default();
    let flag = |b: Option<bool>| b.map(|b| b.to_string()).unwrap_or_default();
    vec![
        r.pair_id.clone(),
        r.profile.group_order.to_string(),
        r.profile.subgroup_order.to_string(),
        r.pr.to_string(),
        bound("theorem_a_lower"),
        bound("salemkar_lower"),
        bound("erfanian_lower"),
        bound("pournaki_lower"),
        bound("theorem41_lower"),
        bound("theorem41_upper"),
        bound("dn10_upper"),
        bound("classvec_lower"),
        r.equality_flags.join(";"),
        flag(r.cor35.map(|c| c.cond_i)),
        flag(r.cor35.map(|c| c.cond_ii)),
        flag(r.cor35.map(|c| c.cond_iii)),
        r.camina.camina.to_string(),
    ]
}
