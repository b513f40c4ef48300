//! Subgroup enumeration by cyclic extension.
//!
//! Every subgroup is a join of cyclic subgroups of prime-power order, so
//! starting from those and repeatedly joining with one more such cyclic
//! subgroup reaches the whole lattice. A proper subgroup is maximal exactly
//! when each of its one-step extensions is the whole group.

use std::collections::hash_map::{Entry, HashMap};

use crate::error::{Error, Result};
use crate::group::subgroup::SubgroupView;
use crate::group::table::GroupTable;

/// Default bound on the group order for full lattice enumeration.
pub const DEFAULT_LATTICE_CAP: usize = 1000;

struct Node {
    mask: Vec<bool>,
    members: Vec<u32>,
    gens: Vec<u32>,
    maximal: bool,
}

fn key(mask: &[bool]) -> Vec<u64> {
    let mut words = vec![0u64; mask.len().div_ceil(64)];
    for (i, &m) in mask.iter().enumerate() {
        if m {
            words[i / 64] |= 1 << (i % 64);
        }
    }
    words
}

fn extend(g: &GroupTable, node: &Node, x: u32) -> (Vec<bool>, Vec<u32>, Vec<u32>) {
    let mut mask = node.mask.clone();
    let mut members = node.members.clone();
    let mut gens = node.gens.clone();
    gens.push(x);
    let mut i = 0;
    // old members need only the new generator; new ones need all
    let old = members.len();
    while i < members.len() {
        let y = members[i];
        let fresh = i >= old;
        i += 1;
        let range = if fresh { 0..gens.len() } else { gens.len() - 1..gens.len() };
        for s in range {
            let z = g.mul(y, gens[s]);
            if !mask[z as usize] {
                mask[z as usize] = true;
                members.push(z);
            }
        }
    }
    (mask, members, gens)
}

fn prime_power_cyclic_generators(g: &GroupTable) -> Vec<u32> {
    // one generator per distinct cyclic subgroup of prime-power order > 1
    let mut seen: HashMap<Vec<u64>, ()> = HashMap::new();
    let mut out = Vec::new();
    for x in g.elements().skip(1) {
        let ord = g.element_order(x) as u64;
        if crate::group::table::prime_factors(ord).len() != 1 {
            continue;
        }
        let mut mask = vec![false; g.order()];
        let mut y = 0;
        loop {
            mask[y as usize] = true;
            y = g.mul(y, x);
            if y == 0 {
                break;
            }
        }
        if seen.insert(key(&mask), ()).is_none() {
            out.push(x);
        }
    }
    out
}

fn enumerate(g: &GroupTable, cap: usize) -> Result<Vec<Node>> {
    if g.order() > cap {
        return Err(Error::CapExceeded { order: g.order(), cap });
    }
    let n = g.order();
    let cyclic = prime_power_cyclic_generators(g);
    let mut trivial_mask = vec![false; n];
    trivial_mask[0] = true;
    let mut nodes = vec![Node { mask: trivial_mask.clone(), members: vec![0], gens: Vec::new(), maximal: true }];
    let mut index: HashMap<Vec<u64>, usize> = HashMap::new();
    index.insert(key(&trivial_mask), 0);
    let mut i = 0;
    while i < nodes.len() {
        let mut maximal = nodes[i].members.len() < n;
        for &x in &cyclic {
            if nodes[i].mask[x as usize] {
                continue;
            }
            let (mask, members, gens) = extend(g, &nodes[i], x);
            if members.len() < n {
                maximal = false;
            }
            let k = key(&mask);
            if let Entry::Vacant(e) = index.entry(k) {
                e.insert(nodes.len());
                nodes.push(Node { mask, members, gens, maximal: false });
            }
        }
        nodes[i].maximal = maximal;
        i += 1;
    }
    Ok(nodes)
}

fn sorted_views(g: &GroupTable, nodes: impl Iterator<Item = Node>) -> Vec<SubgroupView> {
    let mut views: Vec<SubgroupView> =
        nodes.map(|n| SubgroupView::from_members(g, n.members).expect("closure is a subgroup")).collect();
    views.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.members().cmp(b.members())));
    views
}

/// Every subgroup, sorted by order and then member list.
pub fn all_subgroups(g: &GroupTable, cap: usize) -> Result<Vec<SubgroupView>> {
    Ok(sorted_views(g, enumerate(g, cap)?.into_iter()))
}

/// Every maximal subgroup, sorted by order and then member list. The trivial
/// group has none.
pub fn maximal_subgroups(g: &GroupTable, cap: usize) -> Result<Vec<SubgroupView>> {
    if g.order() == 1 {
        return Ok(Vec::new());
    }
    Ok(sorted_views(g, enumerate(g, cap)?.into_iter().filter(|n| n.maximal)))
}
