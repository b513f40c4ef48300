use std::fmt;

use crate::error::{Error, Result};
use crate::group::table::GroupTable;

/// A subgroup, stored as a sorted set of element indices of its parent.
#[derive(Clone)]
pub struct SubgroupView {
    parent: GroupTable,
    members: Vec<u32>,
    mask: Vec<bool>,
}

impl SubgroupView {
    fn from_mask(parent: &GroupTable, mask: Vec<bool>) -> Self {
        let members = mask.iter().enumerate().filter(|(_, &m)| m).map(|(i, _)| i as u32).collect();
        SubgroupView { parent: parent.clone(), members, mask }
    }

    /// The whole group viewed as a subgroup of itself.
    pub fn whole(parent: &GroupTable) -> Self {
        Self::from_mask(parent, vec![true; parent.order()])
    }

    pub fn trivial(parent: &GroupTable) -> Self {
        let mut mask = vec![false; parent.order()];
        mask[0] = true;
        Self::from_mask(parent, mask)
    }

    /// Checks that `members` is a subgroup and wraps it.
    pub fn from_members(parent: &GroupTable, members: impl IntoIterator<Item = u32>) -> Result<Self> {
        let n = parent.order();
        let mut mask = vec![false; n];
        for x in members {
            if x as usize >= n {
                return Err(Error::NotASubgroup(format!("element {x} outside 0..{n}")));
            }
            mask[x as usize] = true;
        }
        let view = Self::from_mask(parent, mask);
        if !view.contains(0) {
            return Err(Error::NotASubgroup("missing identity".into()));
        }
        if !n.is_multiple_of(view.order()) {
            return Err(Error::NotASubgroup(format!("order {} does not divide {n}", view.order())));
        }
        for &a in &view.members {
            if !view.contains(parent.inv(a)) {
                return Err(Error::NotASubgroup(format!("inverse of {a} missing")));
            }
            for &b in &view.members {
                let ab = parent.mul(a, b);
                if !view.contains(ab) {
                    return Err(Error::NotASubgroup(format!("{a}*{b} = {ab} missing")));
                }
            }
        }
        Ok(view)
    }

    /// Smallest subgroup containing `seeds`.
    pub fn generated(parent: &GroupTable, seeds: impl IntoIterator<Item = u32>) -> Self {
        let mut closure = Closure::new(parent);
        for s in seeds {
            closure.add(s);
        }
        closure.finish()
    }

    pub fn parent(&self) -> &GroupTable {
        &self.parent
    }

    pub fn members(&self) -> &[u32] {
        &self.members
    }

    pub fn mask(&self) -> &[bool] {
        &self.mask
    }

    #[inline]
    pub fn contains(&self, x: u32) -> bool {
        self.mask[x as usize]
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn index(&self) -> usize {
        self.parent.order() / self.order()
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn is_whole(&self) -> bool {
        self.order() == self.parent.order()
    }

    pub fn is_subset_of(&self, other: &SubgroupView) -> bool {
        self.members.iter().all(|&x| other.contains(x))
    }

    /// Normality by a full conjugation scan.
    pub fn is_normal(&self) -> bool {
        self.first_non_normal_witness().is_none()
    }

    pub(crate) fn first_non_normal_witness(&self) -> Option<(u32, u32)> {
        let g = &self.parent;
        for x in g.elements() {
            for &h in &self.members {
                if !self.contains(g.conjugate(x, h)) {
                    return Some((x, h));
                }
            }
        }
        None
    }

    pub fn intersection(&self, other: &SubgroupView) -> Result<SubgroupView> {
        self.check_parent(other)?;
        let mask = self.mask.iter().zip(&other.mask).map(|(&a, &b)| a && b).collect();
        Ok(Self::from_mask(&self.parent, mask))
    }

    pub fn join(&self, other: &SubgroupView) -> Result<SubgroupView> {
        self.check_parent(other)?;
        let mut closure = Closure::from_subgroup(self);
        for &x in &other.members {
            closure.add(x);
        }
        Ok(closure.finish())
    }

    pub(crate) fn check_parent(&self, other: &SubgroupView) -> Result<()> {
        if self.parent.same_group(&other.parent) || self.parent == other.parent {
            Ok(())
        } else {
            Err(Error::ParentMismatch)
        }
    }

    /// A standalone table for this subgroup, together with the map from its
    /// element indices to indices in the parent. Element `i` of the new table
    /// is `members[i]`, so the identity stays at 0.
    pub fn as_group(&self) -> (GroupTable, Vec<u32>) {
        let n = self.order();
        let mut position = vec![u32::MAX; self.parent.order()];
        for (i, &x) in self.members.iter().enumerate() {
            position[x as usize] = i as u32;
        }
        let mut mul = Vec::with_capacity(n * n);
        for &a in &self.members {
            for &b in &self.members {
                mul.push(position[self.parent.mul(a, b) as usize]);
            }
        }
        (GroupTable::from_trusted(n, mul, None), self.members.clone())
    }
}

impl PartialEq for SubgroupView {
    fn eq(&self, other: &Self) -> bool {
        self.members == other.members && self.parent == other.parent
    }
}

impl Eq for SubgroupView {}

impl fmt::Debug for SubgroupView {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.order() <= 16 {
            write!(f, "SubgroupView{:?}", self.members)
        } else {
            write!(f, "SubgroupView(order {} of {})", self.order(), self.parent.order())
        }
    }
}

/// Incremental subgroup closure. Seeds already inside the current closure
/// are skipped, so the generator list stays logarithmic in the order.
pub(crate) struct Closure<'g> {
    group: &'g GroupTable,
    mask: Vec<bool>,
    members: Vec<u32>,
    gens: Vec<u32>,
}

impl<'g> Closure<'g> {
    pub(crate) fn new(group: &'g GroupTable) -> Self {
        let mut mask = vec![false; group.order()];
        mask[0] = true;
        Closure { group, mask, members: vec![0], gens: Vec::new() }
    }

    pub(crate) fn from_subgroup(h: &'g SubgroupView) -> Self {
        let mut c = Closure::new(&h.parent);
        for &x in &h.members {
            c.add(x);
        }
        c
    }

    pub(crate) fn add(&mut self, seed: u32) {
        if self.mask[seed as usize] {
            return;
        }
        self.gens.push(seed);
        // Every old member times the new generator, then saturate.
        let mut frontier = 0;
        let mut pending: Vec<u32> = self.members.clone();
        while frontier < pending.len() {
            let y = pending[frontier];
            frontier += 1;
            for &s in &self.gens {
                let z = self.group.mul(y, s);
                if !self.mask[z as usize] {
                    self.mask[z as usize] = true;
                    self.members.push(z);
                    pending.push(z);
                }
            }
        }
    }

    pub(crate) fn order(&self) -> usize {
        self.members.len()
    }

    pub(crate) fn finish(self) -> SubgroupView {
        SubgroupView::from_mask(self.group, self.mask)
    }
}

/// `C_G(x)`.
pub fn centralizer(g: &GroupTable, x: u32) -> SubgroupView {
    let mask = g.elements().map(|y| g.mul(x, y) == g.mul(y, x)).collect();
    SubgroupView::from_mask(g, mask)
}

/// `Z(G)`: elements commuting with a generating set.
pub fn center(g: &GroupTable) -> SubgroupView {
    let gens = g.generators();
    let mask = g.elements().map(|y| gens.iter().all(|&s| g.mul(s, y) == g.mul(y, s))).collect();
    SubgroupView::from_mask(g, mask)
}

/// `Z(H, G) = {h ∈ H : hg = gh for all g ∈ G}`.
pub fn relative_center(h: &SubgroupView) -> SubgroupView {
    let g = h.parent();
    let mut mask = vec![false; g.order()];
    for &x in h.members() {
        mask[x as usize] = g.elements().all(|y| g.mul(x, y) == g.mul(y, x));
    }
    let view = SubgroupView::from_mask(g, mask);
    debug_assert_eq!(view, h.intersection(&center(g)).unwrap());
    view
}

/// `K(G, H) = {[x, y] : x ∈ G, y ∈ H}` as a sorted index list.
pub fn commutator_set(h: &SubgroupView) -> Vec<u32> {
    let g = h.parent();
    let mut hit = vec![false; g.order()];
    for x in g.elements() {
        for &y in h.members() {
            hit[g.commutator(x, y) as usize] = true;
        }
    }
    hit.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i as u32).collect()
}

/// `[G, H]`, the subgroup generated by `K(G, H)`.
pub fn commutator_subgroup(h: &SubgroupView) -> SubgroupView {
    SubgroupView::generated(h.parent(), commutator_set(h))
}

/// `[A, B]` for two subgroups of the same group.
pub fn mutual_commutator(a: &SubgroupView, b: &SubgroupView) -> Result<SubgroupView> {
    a.check_parent(b)?;
    let g = a.parent();
    let mut closure = Closure::new(g);
    for &x in a.members() {
        for &y in b.members() {
            closure.add(g.commutator(x, y));
        }
        if closure.order() == g.order() {
            break;
        }
    }
    Ok(closure.finish())
}
