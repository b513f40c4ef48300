use std::fmt;

use serde::{Deserialize, Serialize};

use super::CommutationMap;
use crate::error::{Error, Result};
use crate::ratio::ExactRatio;
use crate::stats::pr_g_distribution;

/// Sizes that fix the domains of a witness, stored with it for replay.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairDescriptor {
    pub group_order: usize,
    pub subgroup_order: usize,
    pub quotient_order: usize,
    pub subgroup_quotient_order: usize,
    pub commutator_order: usize,
}

/// An isoclinism `(α, β)` between two pairs.
///
/// `alpha[i]` is the image of coset `i` of `Z(H1, G1)`; `beta[j]` is the
/// position in the sorted members of `[H2, G2]` of the image of the `j`-th
/// sorted member of `[H1, G1]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsoclinismWitness {
    pub alpha: Vec<u32>,
    pub beta: Vec<u32>,
    pub source: PairDescriptor,
    pub target: PairDescriptor,
}

impl IsoclinismWitness {
    pub fn identity(map: &CommutationMap) -> Self {
        IsoclinismWitness {
            alpha: (0..map.quotient_order() as u32).collect(),
            beta: (0..map.commutator_subgroup.order() as u32).collect(),
            source: map.descriptor(),
            target: map.descriptor(),
        }
    }

    /// The witness in the other direction. Only meaningful for bijections.
    pub fn inverse(&self) -> Self {
        fn invert(v: &[u32]) -> Vec<u32> {
            let mut out = vec![u32::MAX; v.len()];
            for (i, &x) in v.iter().enumerate() {
                if let Some(slot) = out.get_mut(x as usize) {
                    *slot = i as u32;
                }
            }
            out
        }
        IsoclinismWitness {
            alpha: invert(&self.alpha),
            beta: invert(&self.beta),
            source: self.target,
            target: self.source,
        }
    }

    /// `β` as a map on group elements.
    pub fn beta_element(&self, m1: &CommutationMap, m2: &CommutationMap, x: u32) -> Option<u32> {
        let pos = m1.commutator_position(x)?;
        let image = *self.beta.get(pos)?;
        m2.commutator_subgroup.members().get(image as usize).copied()
    }
}

/// The first invariant a witness breaks. Cosets are quotient indices,
/// commutators are group elements.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum IsoclinismViolation {
    AlphaNotBijective { coset: u32 },
    AlphaNotHomomorphism { a: u32, b: u32 },
    AlphaSubgroupImage { coset: u32 },
    BetaNotBijective { element: u32 },
    BetaNotHomomorphism { a: u32, b: u32 },
    DiagramMismatch { h: u32, g: u32, expected: u32, found: u32 },
}

impl fmt::Display for IsoclinismViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use IsoclinismViolation::*;
        match self {
            AlphaNotBijective { coset } => write!(f, "alpha is not a bijection at coset {coset}"),
            AlphaNotHomomorphism { a, b } => write!(f, "alpha(c{a} c{b}) != alpha(c{a}) alpha(c{b})"),
            AlphaSubgroupImage { coset } => write!(f, "alpha sends coset {coset} across the subgroup image"),
            BetaNotBijective { element } => write!(f, "beta is not a bijection at element {element}"),
            BetaNotHomomorphism { a, b } => write!(f, "beta({a}*{b}) != beta({a}) beta({b})"),
            DiagramMismatch { h, g, expected, found } => {
                write!(f, "diagram fails at coset pair ({h}, {g}): beta([h,g]) = {found}, expected {expected}")
            }
        }
    }
}

fn is_permutation(v: &[u32]) -> Option<u32> {
    let mut seen = vec![false; v.len()];
    for (i, &x) in v.iter().enumerate() {
        match seen.get_mut(x as usize) {
            Some(s) if !*s => *s = true,
            _ => return Some(i as u32),
        }
    }
    None
}

/// Checks every witness invariant; `Ok(None)` means the witness is valid.
pub fn verify_pair_isoclinism(
    m1: &CommutationMap,
    m2: &CommutationMap,
    w: &IsoclinismWitness,
) -> Result<Option<IsoclinismViolation>> {
    let (q1, q2) = (&m1.quotient.table, &m2.quotient.table);
    let (c1, c2) = (&m1.commutator_subgroup, &m2.commutator_subgroup);
    if w.alpha.len() != q1.order() || q1.order() != q2.order() {
        return Err(Error::DomainMismatch(format!(
            "alpha has {} entries for quotients of order {} and {}",
            w.alpha.len(),
            q1.order(),
            q2.order()
        )));
    }
    if w.beta.len() != c1.order() || c1.order() != c2.order() {
        return Err(Error::DomainMismatch(format!(
            "beta has {} entries for commutator subgroups of order {} and {}",
            w.beta.len(),
            c1.order(),
            c2.order()
        )));
    }
    Ok(first_violation(m1, m2, w))
}

fn first_violation(m1: &CommutationMap, m2: &CommutationMap, w: &IsoclinismWitness) -> Option<IsoclinismViolation> {
    use IsoclinismViolation::*;
    let (q1, q2) = (&m1.quotient.table, &m2.quotient.table);
    let (g1, g2) = (m1.group(), m2.group());
    let alpha = |x: u32| w.alpha[x as usize];

    if let Some(coset) = is_permutation(&w.alpha) {
        return Some(AlphaNotBijective { coset });
    }
    for a in q1.elements() {
        for b in q1.elements() {
            if alpha(q1.mul(a, b)) != q2.mul(alpha(a), alpha(b)) {
                return Some(AlphaNotHomomorphism { a, b });
            }
        }
    }
    for x in q1.elements() {
        if m1.subgroup_image.contains(x) != m2.subgroup_image.contains(alpha(x)) {
            return Some(AlphaSubgroupImage { coset: x });
        }
    }

    let c1 = m1.commutator_subgroup.members();
    if let Some(pos) = is_permutation(&w.beta) {
        return Some(BetaNotBijective { element: c1[pos as usize] });
    }
    let beta = |x: u32| w.beta_element(m1, m2, x).expect("beta covers [H1,G1]");
    for &a in c1 {
        for &b in c1 {
            if beta(g1.mul(a, b)) != g2.mul(beta(a), beta(b)) {
                return Some(BetaNotHomomorphism { a, b });
            }
        }
    }

    for &h in m1.subgroup_image.members() {
        for g in q1.elements() {
            let expected = m2.apply(alpha(h), alpha(g));
            let found = beta(m1.apply(h, g));
            if expected != found {
                return Some(DiagramMismatch { h, g, expected, found });
            }
        }
    }
    None
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvarianceRow {
    pub element: u32,
    pub image: u32,
    pub pr_source: ExactRatio,
    pub pr_target: ExactRatio,
}

/// `Pr_g` on both sides of `β`, one row per element of the source
/// commutator subgroup.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvarianceReport {
    pub rows: Vec<InvarianceRow>,
}

impl InvarianceReport {
    pub fn holds(&self) -> bool {
        self.rows.iter().all(|r| r.pr_source == r.pr_target)
    }
}

/// Verifies the witness, then compares `Pr_g(H1, G1)` with
/// `Pr_{β(g)}(H2, G2)` for every `g ∈ [H1, G1]`.
pub fn verify_invariance(m1: &CommutationMap, m2: &CommutationMap, w: &IsoclinismWitness) -> Result<InvarianceReport> {
    if let Some(v) = verify_pair_isoclinism(m1, m2, w)? {
        return Err(Error::InvalidWitness(v.to_string()));
    }
    let d1 = pr_g_distribution(&m1.subgroup);
    let d2 = pr_g_distribution(&m2.subgroup);
    let rows = m1
        .commutator_subgroup
        .members()
        .iter()
        .map(|&x| {
            let image = w.beta_element(m1, m2, x).expect("verified witness");
            InvarianceRow {
                element: x,
                image,
                pr_source: d1[x as usize].clone(),
                pr_target: d2[image as usize].clone(),
            }
        })
        .collect();
    Ok(InvarianceReport { rows })
}
