use crate::error::{Error, Result};
use crate::group::subgroup::SubgroupView;
use crate::group::table::GroupTable;

/// `G/N` with coset bookkeeping.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub table: GroupTable,
    /// Element of `G` to coset index.
    pub projection: Vec<u32>,
    /// Coset index to its smallest element, which is the representative.
    pub representatives: Vec<u32>,
}

impl Quotient {
    pub fn project(&self, x: u32) -> u32 {
        self.projection[x as usize]
    }

    pub fn representative(&self, coset: u32) -> u32 {
        self.representatives[coset as usize]
    }

    /// Image of a subgroup of `G` in the quotient.
    pub fn image(&self, h: &SubgroupView) -> SubgroupView {
        let mut cosets: Vec<u32> = h.members().iter().map(|&x| self.project(x)).collect();
        cosets.sort_unstable();
        cosets.dedup();
        SubgroupView::from_members(&self.table, cosets).expect("image of a subgroup is a subgroup")
    }

    /// Full preimage of a subgroup of the quotient.
    pub fn preimage(&self, q: &SubgroupView, g: &GroupTable) -> SubgroupView {
        let members = g.elements().filter(|&x| q.contains(self.project(x)));
        SubgroupView::from_members(g, members).expect("preimage of a subgroup is a subgroup")
    }
}

/// Builds `G/N` for normal `N`. Cosets are numbered by increasing smallest
/// element, so the coset `N` itself is 0.
pub fn quotient(n: &SubgroupView) -> Result<Quotient> {
    let g = n.parent();
    if let Some((x, h)) = n.first_non_normal_witness() {
        return Err(Error::NotNormal { g: x, h });
    }
    let mut projection = vec![u32::MAX; g.order()];
    let mut representatives = Vec::new();
    for x in g.elements() {
        if projection[x as usize] != u32::MAX {
            continue;
        }
        let id = representatives.len() as u32;
        representatives.push(x);
        for &m in n.members() {
            projection[g.mul(x, m) as usize] = id;
        }
    }
    let k = representatives.len();
    let mut mul = Vec::with_capacity(k * k);
    for &a in &representatives {
        for &b in &representatives {
            mul.push(projection[g.mul(a, b) as usize]);
        }
    }
    Ok(Quotient { table: GroupTable::from_trusted(k, mul, None), projection, representatives })
}
