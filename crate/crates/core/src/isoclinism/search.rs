use serde::{Deserialize, Serialize};

use super::witness::{verify_pair_isoclinism, IsoclinismWitness};
use super::CommutationMap;
use crate::error::{Error, Result};
use crate::group::table::GroupTable;

pub const DEFAULT_QUOTIENT_CAP: usize = 64;
pub const DEFAULT_NODE_BUDGET: u64 = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum SearchOutcome {
    Found { witness: IsoclinismWitness, nodes: u64 },
    NotFound { reason: String, nodes: u64 },
    BudgetExhausted { nodes: u64 },
}

impl SearchOutcome {
    pub fn witness(&self) -> Option<&IsoclinismWitness> {
        match self {
            SearchOutcome::Found { witness, .. } => Some(witness),
            _ => None,
        }
    }
}

/// Element signature used to filter generator images: order, class size in
/// the quotient, membership in the subgroup image.
fn signatures(map: &CommutationMap) -> Vec<(usize, usize, bool)> {
    let q = &map.quotient.table;
    let classes = q.conjugacy();
    q.elements().map(|x| (q.element_order(x), classes.class_size(x), map.subgroup_image.contains(x))).collect()
}

/// Generators of the quotient with those of the subgroup image first.
fn quotient_generators(map: &CommutationMap) -> Vec<u32> {
    let q = &map.quotient.table;
    let mut in_span = vec![false; q.order()];
    in_span[0] = true;
    let mut span = vec![0u32];
    let mut gens = Vec::new();
    let candidates = map.subgroup_image.members().iter().copied().chain(q.elements());
    for x in candidates {
        if in_span[x as usize] {
            continue;
        }
        gens.push(x);
        let mut i = 0;
        while i < span.len() {
            for &s in &gens {
                let y = q.mul(span[i], s);
                if !in_span[y as usize] {
                    in_span[y as usize] = true;
                    span.push(y);
                }
            }
            i += 1;
        }
    }
    gens
}

/// Extends generator images to a map on all of `q1` by walking the right
/// Cayley graph. `None` if the images do not define an injective
/// homomorphism.
fn extend_homomorphism(q1: &GroupTable, q2: &GroupTable, gens: &[u32], images: &[u32]) -> Option<Vec<u32>> {
    let mut map = vec![u32::MAX; q1.order()];
    let mut hit = vec![false; q2.order()];
    map[0] = 0;
    hit[0] = true;
    let mut queue = vec![0u32];
    let mut i = 0;
    while i < queue.len() {
        let x = queue[i];
        i += 1;
        for (&s, &t) in gens.iter().zip(images) {
            let y = q1.mul(x, s);
            let fy = q2.mul(map[x as usize], t);
            match map[y as usize] {
                u32::MAX => {
                    if hit[fy as usize] {
                        return None;
                    }
                    hit[fy as usize] = true;
                    map[y as usize] = fy;
                    queue.push(y);
                }
                existing if existing != fy => return None,
                _ => {}
            }
        }
    }
    (queue.len() == q1.order()).then_some(map)
}

/// `β` read off the diagram on `K(G1, H1)` and extended multiplicatively to
/// `[H1, G1]`. `None` if it is not single-valued or not injective.
fn derive_beta(m1: &CommutationMap, m2: &CommutationMap, alpha: &[u32]) -> Option<Vec<u32>> {
    let (g1, g2) = (m1.group(), m2.group());
    let mut beta = vec![u32::MAX; g1.order()];
    let mut hit = vec![false; g2.order()];
    beta[0] = 0;
    hit[0] = true;
    let mut gens: Vec<(u32, u32)> = Vec::new();
    for &h in m1.subgroup_image.members() {
        for g in m1.quotient.table.elements() {
            let c1 = m1.apply(h, g);
            let c2 = m2.apply(alpha[h as usize], alpha[g as usize]);
            match beta[c1 as usize] {
                u32::MAX => {
                    if hit[c2 as usize] {
                        return None;
                    }
                    hit[c2 as usize] = true;
                    beta[c1 as usize] = c2;
                    gens.push((c1, c2));
                }
                existing if existing != c2 => return None,
                _ => {}
            }
        }
    }
    let mut visited = vec![false; g1.order()];
    visited[0] = true;
    let mut queue = vec![0u32];
    let mut i = 0;
    while i < queue.len() {
        let x = queue[i];
        i += 1;
        for &(s, t) in &gens {
            let y = g1.mul(x, s);
            let fy = g2.mul(beta[x as usize], t);
            match beta[y as usize] {
                u32::MAX => {
                    if hit[fy as usize] {
                        return None;
                    }
                    hit[fy as usize] = true;
                    beta[y as usize] = fy;
                }
                existing if existing != fy => return None,
                _ => {}
            }
            if !visited[y as usize] {
                visited[y as usize] = true;
                queue.push(y);
            }
        }
    }
    let members = m1.commutator_subgroup.members();
    if queue.len() != members.len() {
        return None;
    }
    members.iter().map(|&x| m2.commutator_position(beta[x as usize]).map(|p| p as u32)).collect()
}

struct Search<'a> {
    m1: &'a CommutationMap,
    m2: &'a CommutationMap,
    gens: Vec<u32>,
    candidates: Vec<Vec<u32>>,
    images: Vec<u32>,
    nodes: u64,
    budget: u64,
}

enum Step {
    Found(IsoclinismWitness),
    Exhausted,
    Continue,
}

impl Search<'_> {
    fn run(&mut self, depth: usize) -> Step {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Step::Exhausted;
        }
        let (q1, q2) = (&self.m1.quotient.table, &self.m2.quotient.table);
        if depth == self.gens.len() {
            let Some(alpha) = extend_homomorphism(q1, q2, &self.gens, &self.images) else {
                return Step::Continue;
            };
            let Some(beta) = derive_beta(self.m1, self.m2, &alpha) else {
                return Step::Continue;
            };
            let witness = IsoclinismWitness { alpha, beta, source: self.m1.descriptor(), target: self.m2.descriptor() };
            return match verify_pair_isoclinism(self.m1, self.m2, &witness) {
                Ok(None) => Step::Found(witness),
                _ => Step::Continue,
            };
        }
        for ci in 0..self.candidates[depth].len() {
            let t = self.candidates[depth][ci];
            // distinct generators need distinct images
            if self.images.contains(&t) {
                continue;
            }
            self.images.push(t);
            let partial_ok = self.commutators_consistent(depth + 1);
            if partial_ok {
                match self.run(depth + 1) {
                    Step::Continue => {}
                    done => return done,
                }
            }
            self.images.pop();
        }
        Step::Continue
    }

    /// Orders of generator commutators must match for the assigned prefix.
    fn commutators_consistent(&self, assigned: usize) -> bool {
        let (q1, q2) = (&self.m1.quotient.table, &self.m2.quotient.table);
        let (g1, g2) = (self.m1.group(), self.m2.group());
        let i = assigned - 1;
        let (s, t) = (self.gens[i], self.images[i]);
        if q1.element_order(s) != q2.element_order(t) {
            return false;
        }
        for j in 0..assigned {
            let (sj, tj) = (self.gens[j], self.images[j]);
            if q1.element_order(q1.mul(s, sj)) != q2.element_order(q2.mul(t, tj)) {
                return false;
            }
            if self.m1.subgroup_image.contains(s) {
                let c1 = self.m1.apply(s, sj);
                let c2 = self.m2.apply(t, tj);
                if g1.element_order(c1) != g2.element_order(c2) {
                    return false;
                }
            }
            if self.m1.subgroup_image.contains(sj) {
                let c1 = self.m1.apply(sj, s);
                let c2 = self.m2.apply(tj, t);
                if g1.element_order(c1) != g2.element_order(c2) {
                    return false;
                }
            }
        }
        true
    }
}

/// Backtracking search for an isoclinism between two pairs.
///
/// Generators of the first quotient are sent to candidates with a matching
/// signature, tried in increasing index order, so the first witness found
/// is deterministic. `β` is derived from `α` through the commutation maps.
pub fn find_pair_isoclinism(
    m1: &CommutationMap,
    m2: &CommutationMap,
    quotient_cap: usize,
    budget: u64,
) -> Result<SearchOutcome> {
    let (d1, d2) = (m1.descriptor(), m2.descriptor());
    let reject = |reason: String| Ok(SearchOutcome::NotFound { reason, nodes: 0 });
    if d1.quotient_order != d2.quotient_order {
        return reject(format!("quotient orders {} and {}", d1.quotient_order, d2.quotient_order));
    }
    if d1.subgroup_quotient_order != d2.subgroup_quotient_order {
        return reject(format!(
            "subgroup quotient orders {} and {}",
            d1.subgroup_quotient_order, d2.subgroup_quotient_order
        ));
    }
    if d1.commutator_order != d2.commutator_order {
        return reject(format!("commutator subgroup orders {} and {}", d1.commutator_order, d2.commutator_order));
    }
    if d1.quotient_order > quotient_cap {
        return Err(Error::CapExceeded { order: d1.quotient_order, cap: quotient_cap });
    }

    let (sig1, sig2) = (signatures(m1), signatures(m2));
    let mut sorted1 = sig1.clone();
    let mut sorted2 = sig2.clone();
    sorted1.sort_unstable();
    sorted2.sort_unstable();
    if sorted1 != sorted2 {
        return reject("quotient element signatures differ".into());
    }

    let gens = quotient_generators(m1);
    let candidates: Vec<Vec<u32>> = gens
        .iter()
        .map(|&s| (0..sig2.len() as u32).filter(|&t| sig2[t as usize] == sig1[s as usize]).collect())
        .collect();
    let mut search = Search { m1, m2, gens, candidates, images: Vec::new(), nodes: 0, budget };
    Ok(match search.run(0) {
        Step::Found(witness) => SearchOutcome::Found { witness, nodes: search.nodes },
        Step::Exhausted => SearchOutcome::BudgetExhausted { nodes: budget },
        Step::Continue => SearchOutcome::NotFound { reason: "search space exhausted".into(), nodes: search.nodes },
    })
}
