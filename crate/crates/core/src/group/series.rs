use crate::group::quotient::quotient;
use crate::group::subgroup::{center, mutual_commutator, SubgroupView};
use crate::group::table::GroupTable;

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SeriesKind {
    Lower,
    Upper,
}

/// A central series, listed until it stabilizes (the stable term is kept
/// once).
#[derive(Clone, Debug)]
pub struct SeriesChain {
    pub kind: SeriesKind,
    pub terms: Vec<SubgroupView>,
}

impl SeriesChain {
    pub fn last(&self) -> &SubgroupView {
        self.terms.last().expect("series has at least one term")
    }
}

/// `γ_1 = G`, `γ_{k+1} = [γ_k, G]`.
pub fn lower_central_series(g: &GroupTable) -> SeriesChain {
    let whole = SubgroupView::whole(g);
    let mut terms = vec![whole.clone()];
    loop {
        let next = mutual_commutator(terms.last().unwrap(), &whole).expect("same parent");
        if &next == terms.last().unwrap() {
            break;
        }
        terms.push(next);
    }
    SeriesChain { kind: SeriesKind::Lower, terms }
}

/// `Z_0 = 1`, `Z_{k+1}/Z_k = Z(G/Z_k)`.
pub fn upper_central_series(g: &GroupTable) -> SeriesChain {
    let mut terms = vec![SubgroupView::trivial(g)];
    loop {
        let current = terms.last().unwrap();
        let q = quotient(current).expect("upper central terms are normal");
        let next = q.preimage(&center(&q.table), g);
        if &next == current {
            break;
        }
        terms.push(next);
    }
    SeriesChain { kind: SeriesKind::Upper, terms }
}

pub fn is_nilpotent(g: &GroupTable) -> bool {
    lower_central_series(g).last().is_trivial()
}

/// Length of the lower central series to the trivial group; 0 for the
/// trivial group, `None` when the group is not nilpotent.
pub fn nilpotency_class(g: &GroupTable) -> Option<usize> {
    let series = lower_central_series(g);
    series.last().is_trivial().then(|| series.terms.len() - 1)
}

/// `Z_m(G)`, the m-th upper central term (the stable term past the end).
pub fn upper_central_term(g: &GroupTable, m: usize) -> SubgroupView {
    let series = upper_central_series(g);
    series.terms.get(m).cloned().unwrap_or_else(|| series.last().clone())
}
