use std::fmt;

use serde::{Deserialize, Serialize};

use super::witness::{InvarianceReport, InvarianceRow, IsoclinismWitness};
use super::CommutationMap;
use crate::error::{Error, Result};
use crate::group::quotient::{quotient, Quotient};
use crate::group::series::upper_central_term;
use crate::group::subgroup::SubgroupView;
use crate::group::table::GroupTable;
use crate::ratio::ExactRatio;
use crate::stats::{left_normed_commutator, multi_commutator_counts};

/// A tuple `(H_1, …, H_{m+1})` of subgroups of one group `H`, with the
/// quotient `H/Z_m(H)` and the iterated commutator subgroup. The cosets of
/// `Z_m(H_i) = H_i ∩ Z_m(H)` in `H_i` are the image of `H_i` in that
/// quotient.
#[derive(Clone, Debug)]
pub struct TupleData {
    pub factors: Vec<SubgroupView>,
    pub quotient: Quotient,
    pub factor_images: Vec<SubgroupView>,
    /// `[H_1, …, H_{m+1}]`.
    pub commutator_subgroup: SubgroupView,
    counts: Vec<u128>,
}

impl TupleData {
    pub fn new(factors: &[SubgroupView], work_cap: u128) -> Result<Self> {
        if factors.len() < 2 {
            return Err(Error::DomainMismatch("a tuple needs m + 1 >= 2 subgroups".into()));
        }
        let counts = multi_commutator_counts(factors, work_cap)?;
        let g = factors[0].parent();
        let zm = upper_central_term(g, factors.len() - 1);
        let q = quotient(&zm).expect("upper central terms are normal");
        let support = g.elements().filter(|&x| counts[x as usize] > 0);
        Ok(TupleData {
            factor_images: factors.iter().map(|h| q.image(h)).collect(),
            commutator_subgroup: SubgroupView::generated(g, support),
            factors: factors.to_vec(),
            quotient: q,
            counts,
        })
    }

    pub fn group(&self) -> &GroupTable {
        self.factors[0].parent()
    }

    /// `m`, one less than the tuple length.
    pub fn m(&self) -> usize {
        self.factors.len() - 1
    }

    /// The left-normed commutator of coset representatives.
    pub fn apply(&self, cosets: &[u32]) -> u32 {
        let reps: Vec<u32> = cosets.iter().map(|&c| self.quotient.representative(c)).collect();
        left_normed_commutator(self.group(), &reps)
    }

    fn position(&self, x: u32) -> Option<usize> {
        self.commutator_subgroup.members().binary_search(&x).ok()
    }

    /// Every tuple of cosets `(h̄_1, …, h̄_{m+1})` with `h̄_i ∈ H_i/Z_m(H_i)`.
    fn for_each_coset_tuple(&self, mut f: impl FnMut(&[u32]) -> bool) -> bool {
        fn go(images: &[SubgroupView], prefix: &mut Vec<u32>, f: &mut dyn FnMut(&[u32]) -> bool) -> bool {
            let Some((first, rest)) = images.split_first() else {
                return f(prefix);
            };
            for &c in first.members() {
                prefix.push(c);
                let keep_going = go(rest, prefix, f);
                prefix.pop();
                if !keep_going {
                    return false;
                }
            }
            true
        }
        go(&self.factor_images, &mut Vec::new(), &mut f)
    }
}

/// `α` on `H/Z_m(H)` and `β` on the iterated commutator subgroups, indexed
/// as in [`IsoclinismWitness`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TupleWitness {
    pub m: usize,
    pub alpha: Vec<u32>,
    pub beta: Vec<u32>,
}

impl TupleWitness {
    pub fn identity(t: &TupleData) -> Self {
        TupleWitness {
            m: t.m(),
            alpha: (0..t.quotient.table.order() as u32).collect(),
            beta: (0..t.commutator_subgroup.order() as u32).collect(),
        }
    }

    /// Pushes a pair witness between `(G1, G1)` and `(G2, G2)` down to
    /// `G/Z_m` and restricts `β` to the iterated commutator subgroup. The
    /// result still has to pass [`verify_tuple_isoclinism`].
    pub fn lift_from_pair(
        w: &IsoclinismWitness,
        p1: &CommutationMap,
        p2: &CommutationMap,
        t1: &TupleData,
        t2: &TupleData,
    ) -> Result<Self> {
        if !p1.group().same_group(t1.group()) || !p2.group().same_group(t2.group()) {
            return Err(Error::ParentMismatch);
        }
        let alpha = t1
            .quotient
            .representatives
            .iter()
            .map(|&x| {
                let image = w.alpha[p1.quotient.project(x) as usize];
                t2.quotient.project(p2.quotient.representative(image))
            })
            .collect();
        let beta = t1
            .commutator_subgroup
            .members()
            .iter()
            .map(|&x| {
                w.beta_element(p1, p2, x)
                    .and_then(|y| t2.position(y))
                    .map(|p| p as u32)
                    .ok_or_else(|| Error::DomainMismatch(format!("beta does not carry {x} into the target")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(TupleWitness { m: t1.m(), alpha, beta })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum TupleViolation {
    AlphaNotBijective { coset: u32 },
    AlphaNotHomomorphism { a: u32, b: u32 },
    RestrictionImage { factor: usize, coset: u32 },
    BetaNotBijective { element: u32 },
    BetaNotHomomorphism { a: u32, b: u32 },
    DiagramMismatch { cosets: Vec<u32>, expected: u32, found: u32 },
}

impl fmt::Display for TupleViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use TupleViolation::*;
        match self {
            AlphaNotBijective { coset } => write!(f, "alpha is not a bijection at coset {coset}"),
            AlphaNotHomomorphism { a, b } => write!(f, "alpha is not multiplicative on cosets {a}, {b}"),
            RestrictionImage { factor, coset } => {
                write!(f, "alpha restricted to factor {factor} misplaces coset {coset}")
            }
            BetaNotBijective { element } => write!(f, "beta is not a bijection at element {element}"),
            BetaNotHomomorphism { a, b } => write!(f, "beta({a}*{b}) != beta({a}) beta({b})"),
            DiagramMismatch { cosets, expected, found } => {
                write!(f, "diagram fails at cosets {cosets:?}: found {found}, expected {expected}")
            }
        }
    }
}

fn first_repeat(v: &[u32]) -> Option<usize> {
    let mut seen = vec![false; v.len()];
    for (i, &x) in v.iter().enumerate() {
        match seen.get_mut(x as usize) {
            Some(s) if !*s => *s = true,
            _ => return Some(i),
        }
    }
    None
}

/// Checks a tuple witness: `α` an isomorphism restricting onto each factor
/// image, `β` an isomorphism, and the commutator diagram.
pub fn verify_tuple_isoclinism(t1: &TupleData, t2: &TupleData, w: &TupleWitness) -> Result<Option<TupleViolation>> {
    use TupleViolation::*;
    let (q1, q2) = (&t1.quotient.table, &t2.quotient.table);
    if t1.m() != t2.m() || w.m != t1.m() {
        return Err(Error::DomainMismatch(format!("tuple lengths {} and {}", t1.m() + 1, t2.m() + 1)));
    }
    if w.alpha.len() != q1.order() || q1.order() != q2.order() {
        return Err(Error::DomainMismatch("alpha domain does not match the quotients".into()));
    }
    let (c1, c2) = (&t1.commutator_subgroup, &t2.commutator_subgroup);
    if w.beta.len() != c1.order() || c1.order() != c2.order() {
        return Err(Error::DomainMismatch("beta domain does not match the commutator subgroups".into()));
    }

    let alpha = |x: u32| w.alpha[x as usize];
    if let Some(i) = first_repeat(&w.alpha) {
        return Ok(Some(AlphaNotBijective { coset: i as u32 }));
    }
    for a in q1.elements() {
        for b in q1.elements() {
            if alpha(q1.mul(a, b)) != q2.mul(alpha(a), alpha(b)) {
                return Ok(Some(AlphaNotHomomorphism { a, b }));
            }
        }
    }
    for (i, (h1, h2)) in t1.factor_images.iter().zip(&t2.factor_images).enumerate() {
        for x in q1.elements() {
            if h1.contains(x) != h2.contains(alpha(x)) {
                return Ok(Some(RestrictionImage { factor: i, coset: x }));
            }
        }
    }

    if let Some(i) = first_repeat(&w.beta) {
        return Ok(Some(BetaNotBijective { element: c1.members()[i] }));
    }
    let beta = |x: u32| c2.members()[w.beta[t1.position(x).expect("inside [H_1,…]")] as usize];
    let (g1, g2) = (t1.group(), t2.group());
    for &a in c1.members() {
        for &b in c1.members() {
            if beta(g1.mul(a, b)) != g2.mul(beta(a), beta(b)) {
                return Ok(Some(BetaNotHomomorphism { a, b }));
            }
        }
    }

    let mut violation = None;
    t1.for_each_coset_tuple(|cosets| {
        let images: Vec<u32> = cosets.iter().map(|&c| alpha(c)).collect();
        let expected = t2.apply(&images);
        let found = beta(t1.apply(cosets));
        if expected != found {
            violation = Some(DiagramMismatch { cosets: cosets.to_vec(), expected, found });
            return false;
        }
        true
    });
    Ok(violation)
}

/// `Pr_g(H_1, …, H_{m+1})` against `Pr_{β(g)}(K_1, …, K_{m+1})` over the
/// iterated commutator subgroup, after verifying the witness.
pub fn tuple_invariance(t1: &TupleData, t2: &TupleData, w: &TupleWitness) -> Result<InvarianceReport> {
    if let Some(v) = verify_tuple_isoclinism(t1, t2, w)? {
        return Err(Error::InvalidWitness(v.to_string()));
    }
    let total = |t: &TupleData| t.factors.iter().map(|h| h.order() as u128).product::<u128>();
    let (n1, n2) = (total(t1), total(t2));
    let rows = t1
        .commutator_subgroup
        .members()
        .iter()
        .zip(&w.beta)
        .map(|(&x, &p)| {
            let image = t2.commutator_subgroup.members()[p as usize];
            InvarianceRow {
                element: x,
                image,
                pr_source: ExactRatio::new(t1.counts[x as usize], n1),
                pr_target: ExactRatio::new(t2.counts[image as usize], n2),
            }
        })
        .collect();
    Ok(InvarianceReport { rows })
}
