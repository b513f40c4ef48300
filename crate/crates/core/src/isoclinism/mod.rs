//! Isoclinism of pairs `(G, H)` and of subgroup tuples: commutation maps,
//! witness verification, a backtracking witness search, and the check that
//! the commutator distribution is carried across by `β`.

mod search;
mod tuple;
mod witness;

pub use search::{find_pair_isoclinism, SearchOutcome, DEFAULT_NODE_BUDGET, DEFAULT_QUOTIENT_CAP};
pub use tuple::{tuple_invariance, verify_tuple_isoclinism, TupleData, TupleViolation, TupleWitness};
pub use witness::{
    verify_invariance, verify_pair_isoclinism, InvarianceReport, InvarianceRow, IsoclinismViolation, IsoclinismWitness,
    PairDescriptor,
};

use crate::group::quotient::{quotient, Quotient};
use crate::group::subgroup::{commutator_subgroup, relative_center, SubgroupView};
use crate::group::table::GroupTable;

/// Exhaustive well-definedness checks run up to this quotient order.
pub const WELL_DEFINED_CHECK_LIMIT: usize = 64;

/// The map `a(hZ, gZ) = [h, g]` for a pair, with `Z = Z(H, G)`, together with
/// the quotient data it lives on.
#[derive(Clone, Debug)]
pub struct CommutationMap {
    pub subgroup: SubgroupView,
    pub quotient: Quotient,
    /// `H / Z(H, G)` inside the quotient.
    pub subgroup_image: SubgroupView,
    /// `[H, G]`, whose sorted members index `β`.
    pub commutator_subgroup: SubgroupView,
    /// `table[a * |Q| + b] = [rep(a), rep(b)]`; rows outside the image of `H`
    /// are filled but carry no meaning for the pair.
    table: Vec<u32>,
}

impl CommutationMap {
    pub fn group(&self) -> &GroupTable {
        self.subgroup.parent()
    }

    pub fn quotient_order(&self) -> usize {
        self.quotient.table.order()
    }

    /// `[h, g]` for cosets `h̄ ∈ H/Z`, `ḡ ∈ G/Z`.
    pub fn apply(&self, h: u32, g: u32) -> u32 {
        self.table[h as usize * self.quotient_order() + g as usize]
    }

    /// Position of `x ∈ [H, G]` in its sorted member list.
    pub fn commutator_position(&self, x: u32) -> Option<usize> {
        self.commutator_subgroup.members().binary_search(&x).ok()
    }

    pub fn descriptor(&self) -> PairDescriptor {
        PairDescriptor {
            group_order: self.group().order(),
            subgroup_order: self.subgroup.order(),
            quotient_order: self.quotient_order(),
            subgroup_quotient_order: self.subgroup_image.order(),
            commutator_order: self.commutator_subgroup.order(),
        }
    }

    /// First `(h, g) ∈ H × G` whose commutator differs from the value on its
    /// coset pair. Always `None` since `Z(H, G)` is central; kept as a check.
    pub fn first_ill_defined(&self) -> Option<(u32, u32)> {
        let g = self.group();
        for &h in self.subgroup.members() {
            let hq = self.quotient.project(h);
            for y in g.elements() {
                if g.commutator(h, y) != self.apply(hq, self.quotient.project(y)) {
                    return Some((h, y));
                }
            }
        }
        None
    }
}

/// Builds the commutation map of `(G, H)`; well-definedness is checked
/// exhaustively when the quotient has order at most
/// [`WELL_DEFINED_CHECK_LIMIT`].
pub fn commutation_map(h: &SubgroupView) -> CommutationMap {
    let g = h.parent();
    let z = relative_center(h);
    let q = quotient(&z).expect("Z(H,G) is central");
    let k = q.table.order();
    let mut table = Vec::with_capacity(k * k);
    for &a in &q.representatives {
        for &b in &q.representatives {
            table.push(g.commutator(a, b));
        }
    }
    let map = CommutationMap {
        subgroup: h.clone(),
        subgroup_image: q.image(h),
        commutator_subgroup: commutator_subgroup(h),
        quotient: q,
        table,
    };
    if k <= WELL_DEFINED_CHECK_LIMIT {
        assert_eq!(map.first_ill_defined(), None, "commutation map not constant on cosets");
    }
    map
}

#[cfg(test)]
mod tests;
