//! Exact commuting probabilities: `Pr(H, G)`, the commutator distribution
//! `Pr_g(H, G)` by brute force and by the class-size sum, class-size
//! profiles, and the left-normed multi-commutator probability.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::subgroup::{commutator_set, commutator_subgroup, relative_center, SubgroupView};
use crate::group::table::GroupTable;
use crate::ratio::ExactRatio;

/// Default bound on `∏ |H_i|` for [`pr_multi`].
pub const DEFAULT_WORK_CAP: u128 = 100_000_000;

/// Brute-force loops split `H` into chunks of this many elements.
const CHUNK: usize = 16;

/// `|{(x, y) ∈ H × G : xy = yx}| / (|H||G|)`.
pub fn pr_bruteforce(h: &SubgroupView) -> ExactRatio {
    let g = h.parent();
    let count: u64 = h
        .members()
        .par_chunks(CHUNK)
        .map(|xs| xs.iter().map(|&x| g.elements().filter(|&y| g.mul(x, y) == g.mul(y, x)).count() as u64).sum::<u64>())
        .sum();
    ExactRatio::new(count, (h.order() * g.order()) as u64)
}

/// For each `g`, the number of pairs `(x, y) ∈ H × G` with `[x, y] = g`.
pub fn commutator_counts(h: &SubgroupView) -> Vec<u64> {
    let g = h.parent();
    let n = g.order();
    h.members()
        .par_chunks(CHUNK)
        .map(|xs| {
            let mut counts = vec![0u64; n];
            for &x in xs {
                let xinv = g.inv(x);
                for y in g.elements() {
                    // x y x⁻¹ y⁻¹
                    let c = g.mul(g.mul(g.mul(x, y), xinv), g.inv(y));
                    counts[c as usize] += 1;
                }
            }
            counts
        })
        .reduce(
            || vec![0u64; n],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        )
}

/// `|{(x, y) ∈ H × G : x y x⁻¹ y⁻¹ = g}| / (|H||G|)`.
pub fn pr_g_bruteforce(h: &SubgroupView, g: u32) -> ExactRatio {
    let group = h.parent();
    let count = commutator_counts(h)[g as usize];
    ExactRatio::new(count, (h.order() * group.order()) as u64)
}

/// The whole distribution `g ↦ Pr_g(H, G)` from one brute-force pass.
pub fn pr_g_distribution(h: &SubgroupView) -> Vec<ExactRatio> {
    let total = (h.order() * h.parent().order()) as u64;
    commutator_counts(h).into_iter().map(|c| ExactRatio::new(c, total)).collect()
}

/// `Pr_g(H, G) = (1/|H|) Σ 1/|Cl_G(x)|` over `x ∈ H` with `g⁻¹x ∈ Cl_G(x)`.
///
/// Summed as `Σ |C_G(x)| / (|H||G|)` to stay in integers.
pub fn pr_g_class_formula(h: &SubgroupView, g: u32) -> ExactRatio {
    let group = h.parent();
    let classes = group.conjugacy();
    let ginv = group.inv(g);
    let total: u64 = h
        .members()
        .iter()
        .filter(|&&x| classes.same_class(group.mul(ginv, x), x))
        .map(|&x| classes.centralizer_order[x as usize])
        .sum();
    ExactRatio::new(total, (h.order() * group.order()) as u64)
}

/// Class-size and commutator data for a pair `(H, G)`.
#[derive(Clone, Debug)]
pub struct PairProfile {
    pub subgroup: SubgroupView,
    /// `Z(H, G)`.
    pub relative_center: SubgroupView,
    /// `|K(G, H)|`.
    pub commutator_set_size: usize,
    /// `[G, H]`.
    pub commutator_subgroup: SubgroupView,
    /// `cs(G, H)`, the distinct class sizes of elements of `H`.
    pub class_sizes: BTreeSet<usize>,
    /// Smallest class size over `H − Z(H, G)`; absent when `H = Z(H, G)`.
    pub s_h: Option<usize>,
    /// Largest class size over `H − Z(H, G)`.
    pub l_h: Option<usize>,
    /// `|H : Z(H, G)|`.
    pub index_h_z: usize,
}

impl PairProfile {
    pub fn group(&self) -> &GroupTable {
        self.subgroup.parent()
    }

    /// Whether `H = Z(H, G)`.
    pub fn is_degenerate(&self) -> bool {
        self.s_h.is_none()
    }
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct ProfileSummary {
    pub group_order: usize,
    pub subgroup_order: usize,
    pub relative_center_order: usize,
    pub commutator_set_size: usize,
    pub commutator_subgroup_order: usize,
    pub class_sizes: Vec<usize>,
    pub s_h: Option<usize>,
    pub l_h: Option<usize>,
    pub index_h_z: usize,
}

impl From<&PairProfile> for ProfileSummary {
    fn from(p: &PairProfile) -> Self {
        ProfileSummary {
            group_order: p.group().order(),
            subgroup_order: p.subgroup.order(),
            relative_center_order: p.relative_center.order(),
            commutator_set_size: p.commutator_set_size,
            commutator_subgroup_order: p.commutator_subgroup.order(),
            class_sizes: p.class_sizes.iter().copied().collect(),
            s_h: p.s_h,
            l_h: p.l_h,
            index_h_z: p.index_h_z,
        }
    }
}

pub fn pair_profile(h: &SubgroupView) -> PairProfile {
    let g = h.parent();
    let classes = g.conjugacy();
    let z = relative_center(h);
    let k = commutator_set(h);
    let class_sizes: BTreeSet<usize> = h.members().iter().map(|&x| classes.class_size(x)).collect();
    let noncentral = || h.members().iter().filter(|&&x| !z.contains(x)).map(|&x| classes.class_size(x));
    PairProfile {
        subgroup: h.clone(),
        commutator_set_size: k.len(),
        commutator_subgroup: commutator_subgroup(h),
        class_sizes,
        s_h: noncentral().min(),
        l_h: noncentral().max(),
        index_h_z: h.order() / z.order(),
        relative_center: z,
    }
}

/// The conjugate type vector `(1, n_1, …, n_r)`: distinct class sizes in
/// increasing order.
pub fn conjugate_type_vector(g: &GroupTable) -> Vec<usize> {
    let mut sizes = g.conjugacy().class_sizes();
    sizes.dedup();
    sizes
}

/// `crk(G)`: the number of distinct class sizes above 1.
pub fn conjugate_rank(g: &GroupTable) -> usize {
    conjugate_type_vector(g).len() - 1
}

/// Left-normed commutator `[h_1, …, h_k] = [[…[h_1, h_2], …], h_k]`.
pub fn left_normed_commutator(g: &GroupTable, elements: &[u32]) -> u32 {
    let mut it = elements.iter().copied();
    let first = it.next().unwrap_or(0);
    it.fold(first, |acc, y| g.commutator(acc, y))
}

/// Distribution of the left-normed commutator over `H_1 × ⋯ × H_{m+1}`, as
/// counts indexed by group element. Built level by level: the count vector
/// for `[h_1, …, h_k]` is pushed through `c ↦ [c, h_{k+1}]`.
pub fn multi_commutator_counts(subgroups: &[SubgroupView], work_cap: u128) -> Result<Vec<u128>> {
    if subgroups.len() < 2 {
        return Err(Error::DomainMismatch("need at least two subgroups".into()));
    }
    for w in subgroups.windows(2) {
        w[0].check_parent(&w[1])?;
    }
    let work: u128 = subgroups.iter().map(|h| h.order() as u128).product();
    if work > work_cap {
        return Err(Error::WorkCapExceeded { work, cap: work_cap });
    }
    let g = subgroups[0].parent();
    let mut counts = vec![0u128; g.order()];
    for &x in subgroups[0].members() {
        counts[x as usize] = 1;
    }
    for h in &subgroups[1..] {
        let mut next = vec![0u128; g.order()];
        for (c, &weight) in counts.iter().enumerate() {
            if weight == 0 {
                continue;
            }
            for &y in h.members() {
                next[g.commutator(c as u32, y) as usize] += weight;
            }
        }
        counts = next;
    }
    Ok(counts)
}

/// `Pr_g(H_1, …, H_{m+1})`: the fraction of tuples whose left-normed
/// commutator is `g`.
pub fn pr_multi(subgroups: &[SubgroupView], g: u32, work_cap: u128) -> Result<ExactRatio> {
    let counts = multi_commutator_counts(subgroups, work_cap)?;
    let total: u128 = subgroups.iter().map(|h| h.order() as u128).product();
    Ok(ExactRatio::new(counts[g as usize], total))
}

/// `(1/n)(1 + (n−1)/i) ≥ (1/m)(1 + (m−1)/i)` for `m ≥ n ≥ 1`, `i ≥ 1`, with
/// equality iff `m = n` or `i = 1`.
pub fn monotone_bound_holds(m: u64, n: u64, index: u64) -> bool {
    let lhs = ExactRatio::class_bound(n, index);
    let rhs = ExactRatio::class_bound(m, index);
    let equal_expected = m == n || index == 1;
    lhs >= rhs && ((lhs == rhs) == equal_expected)
}
