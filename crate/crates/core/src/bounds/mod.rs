//! Lower and upper bounds on `Pr(H, G)`, the equality conditions that go
//! with them, Camina detection, closed forms for `Pr_g` when `|[G, H]|` is
//! prime, and the class-size solvability thresholds.
//!
//! Every bound evaluator reports its value together with whether its side
//! conditions hold, so a report can tell "violated" apart from
//! "inapplicable".

pub mod checks;
pub mod report;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::subgroup::{commutator_set, SubgroupView};
use crate::group::table::{is_prime, GroupTable};
use crate::group::{center, commutator_subgroup, is_nilpotent};
use crate::ratio::ExactRatio;
use crate::stats::{conjugate_type_vector, pr_bruteforce, pr_g_distribution, PairProfile};

pub use checks::{
    check_group, check_pair, default_selection, shipped_specs, verify_catalog, CatalogVerification, Violation,
};
pub use report::{bound_report, BoundEntry, BoundReport};

/// Whether a bound's side conditions hold, with the first failing one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Hypothesis {
    pub met: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

impl Hypothesis {
    pub fn met() -> Self {
        Hypothesis { met: true, reason: None }
    }

    pub fn not_met(reason: impl Into<String>) -> Self {
        Hypothesis { met: false, reason: Some(reason.into()) }
    }
}

/// A bound value (absent when it cannot be evaluated) and its hypothesis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundValue {
    pub value: Option<ExactRatio>,
    pub hypothesis: Hypothesis,
}

fn ratio(num: usize, den: usize) -> ExactRatio {
    ExactRatio::new(num as u64, den as u64)
}

/// `(1/|K|)(1 + (|K| − 1)/|H : Z(H,G)|)` with `K = K(G, H)`.
pub fn theorem_a_lower(profile: &PairProfile) -> ExactRatio {
    ExactRatio::class_bound(profile.commutator_set_size as u64, profile.index_h_z as u64)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComparisonLowers {
    /// `|Z|/|H| + p(|H| − |Z|)/(|H||G|)`, `p` the smallest prime of `|G|`.
    pub erfanian: BoundValue,
    /// `(1/|[G,H]|)(1 + (|[G,H]| − 1)/|H : Z(H,G)|)`; published for normal
    /// `H` with `[G, H] ≤ Z(H, G)`.
    pub salemkar: BoundValue,
    /// `(1/|G'|)(1 + (|G'| − 1)/|G : Z(G)|)`, a bound on `Pr(G)` only.
    pub pournaki: BoundValue,
}

pub fn comparison_lowers(profile: &PairProfile) -> ComparisonLowers {
    let g = profile.group();
    let h = &profile.subgroup;
    let z = profile.relative_center.order();
    let degenerate = || Hypothesis::not_met("H = Z(H,G)");

    let erfanian = match (profile.is_degenerate(), g.smallest_prime_divisor()) {
        (true, _) => BoundValue { value: None, hypothesis: degenerate() },
        (false, None) => BoundValue { value: None, hypothesis: Hypothesis::not_met("trivial group") },
        (false, Some(p)) => {
            let (hn, gn) = (h.order() as u64, g.order() as u64);
            let value = ratio(z, h.order()) + ExactRatio::new(p * (hn - z as u64), hn * gn);
            BoundValue { value: Some(value), hypothesis: Hypothesis::met() }
        }
    };

    let c = profile.commutator_subgroup.order() as u64;
    let salemkar = if profile.is_degenerate() {
        BoundValue { value: None, hypothesis: degenerate() }
    } else {
        let hypothesis = if !h.is_normal() {
            Hypothesis::not_met("H is not normal in G")
        } else if !profile.commutator_subgroup.is_subset_of(&profile.relative_center) {
            Hypothesis::not_met("[G,H] is not contained in Z(H,G)")
        } else {
            Hypothesis::met()
        };
        BoundValue { value: Some(ExactRatio::class_bound(c, profile.index_h_z as u64)), hypothesis }
    };

    let pournaki = if profile.is_degenerate() {
        BoundValue { value: None, hypothesis: degenerate() }
    } else if !h.is_whole() {
        BoundValue { value: None, hypothesis: Hypothesis::not_met("bounds Pr(G) only; H != G") }
    } else {
        // H = G: [G,H] = G' and Z(H,G) = Z(G)
        BoundValue { value: Some(ExactRatio::class_bound(c, profile.index_h_z as u64)), hypothesis: Hypothesis::met() }
    };

    ComparisonLowers { erfanian, salemkar, pournaki }
}

/// `(1/l_H)(1 + (l_H − 1)/i) ≤ Pr(H, G) ≤ (1/s_H)(1 + (s_H − 1)/i)` with
/// `i = |H : Z(H,G)|`.
pub fn theorem41_bounds(profile: &PairProfile) -> Result<(ExactRatio, ExactRatio)> {
    let (Some(s), Some(l)) = (profile.s_h, profile.l_h) else {
        return Err(Error::DegeneratePair);
    };
    let i = profile.index_h_z as u64;
    Ok((ExactRatio::class_bound(l as u64, i), ExactRatio::class_bound(s as u64, i)))
}

/// `(1/p)(1 + (p − 1)/|H : Z(H,G)|)` with `p` the smallest prime of `|G|`.
pub fn dn10_upper(profile: &PairProfile) -> BoundValue {
    match (profile.is_degenerate(), profile.group().smallest_prime_divisor()) {
        (true, _) => BoundValue { value: None, hypothesis: Hypothesis::not_met("H = Z(H,G)") },
        (false, None) => BoundValue { value: None, hypothesis: Hypothesis::not_met("trivial group") },
        (false, Some(p)) => BoundValue {
            value: Some(ExactRatio::class_bound(p, profile.index_h_z as u64)),
            hypothesis: Hypothesis::met(),
        },
    }
}

/// `(1/|G|)(|Z(G)| + crk(G) + (|G| − |Z(G)| − Σ n_i)/n_r)` from the conjugate
/// type vector `(1, n_1, …, n_r)`.
pub fn classvec_lower(g: &GroupTable) -> Result<ExactRatio> {
    let vector = conjugate_type_vector(g);
    let nontrivial = &vector[1..];
    let Some(&largest) = nontrivial.last() else {
        return Err(Error::DegeneratePair);
    };
    let n = g.order() as i64;
    let z = center(g).order() as i64;
    let r = nontrivial.len() as i64;
    let sum: i64 = nontrivial.iter().map(|&x| x as i64).sum();
    let inner = ExactRatio::from_integer(z + r) + ExactRatio::new(n - z - sum, largest as i64);
    Ok(inner / ExactRatio::from_integer(n))
}

/// The three equivalent equality conditions for the `K(G, H)` lower bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cor35Status {
    /// `Pr(H, G)` equals the `K(G, H)` lower bound.
    pub cond_i: bool,
    /// `Cl_G(x) = K(G, H)·x` for every `x ∈ H − Z(H, G)`.
    pub cond_ii: bool,
    /// `K(G, H) = {y x y⁻¹ x⁻¹ : y ∈ G}` for every `x ∈ H − Z(H, G)`.
    pub cond_iii: bool,
}

impl Cor35Status {
    pub fn agree(&self) -> bool {
        self.cond_i == self.cond_ii && self.cond_ii == self.cond_iii
    }
}

pub fn corollary35_status(profile: &PairProfile, pr: &ExactRatio) -> Result<Cor35Status> {
    if profile.is_degenerate() {
        return Err(Error::DegeneratePair);
    }
    let h = &profile.subgroup;
    let g = h.parent();
    let classes = g.conjugacy();
    let k = commutator_set(h);
    let mut k_mask = vec![false; g.order()];
    for &c in &k {
        k_mask[c as usize] = true;
    }
    let noncentral: Vec<u32> = h.members().iter().copied().filter(|&x| !profile.relative_center.contains(x)).collect();

    let cond_i = *pr == theorem_a_lower(profile);
    let cond_ii = noncentral.iter().all(|&x| {
        let mut translate: Vec<u32> = k.iter().map(|&c| g.mul(c, x)).collect();
        translate.sort_unstable();
        translate == classes.class(x)
    });
    let cond_iii = noncentral.iter().all(|&x| {
        let xinv = g.inv(x);
        let mut hit = vec![false; g.order()];
        let mut count = 0;
        for y in g.elements() {
            let c = g.mul(g.conjugate(y, x), xinv);
            if !hit[c as usize] {
                hit[c as usize] = true;
                count += 1;
            }
        }
        count == k.len() && k.iter().all(|&c| hit[c as usize])
    });
    Ok(Cor35Status { cond_i, cond_ii, cond_iii })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaminaStatus {
    pub camina: bool,
    /// Set for abelian groups, where the condition holds trivially.
    pub abelian: bool,
}

/// Camina condition: `Cl_G(x) = G'x` for every `x ∈ G − G'`.
pub fn is_camina(g: &GroupTable) -> CaminaStatus {
    let derived = commutator_subgroup(&SubgroupView::whole(g));
    let classes = g.conjugacy();
    let camina = g.elements().filter(|&x| !derived.contains(x)).all(|x| {
        let class = classes.class(x);
        class.len() == derived.order() && class.iter().all(|&y| derived.contains(g.mul(y, g.inv(x))))
    });
    CaminaStatus { camina, abelian: g.is_abelian() }
}

/// One row of a closed-form comparison.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosedFormRow {
    pub element: u32,
    pub brute_force: ExactRatio,
    pub closed_form: ExactRatio,
    pub matches: bool,
}

/// `Pr_g(H, G)` against `(1/p)(1 + (p−1)/i)` at `g = 1` and `(1/p)(1 − 1/i)`
/// elsewhere on `[G, H]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosedFormReport {
    pub prime: u64,
    pub index_h_z: usize,
    pub rows: Vec<ClosedFormRow>,
}

impl ClosedFormReport {
    pub fn all_match(&self) -> bool {
        self.rows.iter().all(|r| r.matches)
    }
}

fn closed_form_report(profile: &PairProfile, p: u64) -> ClosedFormReport {
    let i = profile.index_h_z as u64;
    let distribution = pr_g_distribution(&profile.subgroup);
    let one_over_p = ExactRatio::new(1u64, p);
    let rows = profile
        .commutator_subgroup
        .members()
        .iter()
        .map(|&g| {
            let closed_form = if g == 0 {
                ExactRatio::class_bound(p, i)
            } else {
                &one_over_p * &(ExactRatio::one() - ExactRatio::new(1u64, i))
            };
            let brute_force = distribution[g as usize].clone();
            ClosedFormRow { element: g, matches: brute_force == closed_form, brute_force, closed_form }
        })
        .collect();
    ClosedFormReport { prime: p, index_h_z: profile.index_h_z, rows }
}

/// Closed forms for nilpotent `G` with `|[G, H]|` prime (any prime).
pub fn theorem_b_check(profile: &PairProfile) -> Result<ClosedFormReport> {
    let c = profile.commutator_subgroup.order() as u64;
    if !is_nilpotent(profile.group()) {
        return Err(Error::HypothesisNotMet("G is not nilpotent".into()));
    }
    if !is_prime(c) {
        return Err(Error::HypothesisNotMet(format!("|[G,H]| = {c} is not prime")));
    }
    Ok(closed_form_report(profile, c))
}

/// Closed forms when `|[G, H]|` equals the smallest prime dividing `|G|`.
pub fn lemma34_check(profile: &PairProfile) -> Result<ClosedFormReport> {
    let c = profile.commutator_subgroup.order() as u64;
    match profile.group().smallest_prime_divisor() {
        Some(p) if p == c => Ok(closed_form_report(profile, p)),
        Some(p) => Err(Error::HypothesisNotMet(format!("|[G,H]| = {c} is not the smallest prime {p} of |G|"))),
        None => Err(Error::HypothesisNotMet("trivial group".into())),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SolvabilityConclusion {
    /// `Pr(G) > 3/40` and `Pr(G) ≠ 1/12`.
    Solvable,
    /// `Pr(G) = 1/12`: solvable, or `A5 × T` with `T` abelian.
    SolvableOrA5TimesAbelian,
    Supersolvable,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictLine {
    /// The threshold rule, e.g. `"Pr(G) > 1/3"`.
    pub rule: String,
    pub source: String,
    pub fired: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub conclusion: Option<SolvabilityConclusion>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub lines: Vec<VerdictLine>,
}

impl Verdict {
    pub fn supersolvable(&self) -> bool {
        self.lines.iter().any(|l| l.fired && l.conclusion == Some(SolvabilityConclusion::Supersolvable))
    }

    pub fn fired(&self, source: &str) -> Option<&VerdictLine> {
        self.lines.iter().find(|l| l.source == source && l.fired)
    }
}

/// Applies the three commuting-probability thresholds as cited
/// implications. No independent solvability test is run.
pub fn solvability_verdict(group_order: usize, pr: &ExactRatio) -> Verdict {
    let gr = *pr > ExactRatio::new(3, 40);
    let gr_conclusion = if *pr == ExactRatio::new(1, 12) {
        SolvabilityConclusion::SolvableOrA5TimesAbelian
    } else {
        SolvabilityConclusion::Solvable
    };
    let bm = *pr > ExactRatio::new(1, 3);
    let odd = group_order % 2 == 1;
    let bm_odd = odd && *pr > ExactRatio::new(11, 75);
    Verdict {
        lines: vec![
            VerdictLine {
                rule: "Pr(G) > 3/40".into(),
                source: "guralnick-robinson".into(),
                fired: gr,
                conclusion: gr.then_some(gr_conclusion),
            },
            VerdictLine {
                rule: "Pr(G) > 1/3".into(),
                source: "barry-machale-ni-she".into(),
                fired: bm,
                conclusion: bm.then_some(SolvabilityConclusion::Supersolvable),
            },
            VerdictLine {
                rule: "|G| odd and Pr(G) > 11/75".into(),
                source: "barry-machale-ni-she-odd".into(),
                fired: bm_odd,
                conclusion: bm_odd.then_some(SolvabilityConclusion::Supersolvable),
            },
        ],
    }
}

/// `Pr(G)` and its verdict record.
pub fn group_verdict(g: &GroupTable) -> (ExactRatio, Verdict) {
    let pr = pr_bruteforce(&SubgroupView::whole(g));
    let v = solvability_verdict(g.order(), &pr);
    (pr, v)
}

#[cfg(test)]
mod tests;
