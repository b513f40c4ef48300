//! Concrete group families, built from [`GroupSpec`] strings, each paired
//! with named landmark subgroups.

pub mod families;
pub mod lattice;
pub mod pc;
pub mod spec;

pub use lattice::{all_subgroups, DEFAULT_LATTICE_CAP};
pub use spec::{parse_spec, GroupSpec, FAMILIES};

use crate::error::{Error, Result};
use crate::group::series::{lower_central_series, upper_central_series};
use crate::group::subgroup::{center, commutator_subgroup, SubgroupView};
use crate::group::table::{prime_factors, GroupTable, DEFAULT_ORDER_CAP};

/// Group specs the theorem checks run over. Orders range from 1 to 3125.
pub const SHIPPED_CATALOG: &[&str] = &[
    "C:1",
    "C:2",
    "C:4",
    "C:6",
    "C:12",
    "EA:2^2",
    "EA:2^3",
    "C:45",
    "S:3",
    "D:8",
    "Q:8",
    "D:10",
    "D:12",
    "Dic:12",
    "A:4",
    "D:16",
    "Q:16",
    "S:4",
    "Q:8 x C:3",
    "D:8 x C:2",
    "Q:8 x C:2",
    "S:3 x C:3",
    "ESp:3",
    "ESm:3",
    "Q:8 x S:3",
    "D:8 x C:3",
    "A:4 x C:2",
    "A:5",
    "ESp:5",
    "ESm:5",
    "S:5",
    "ESp:3 x C:2",
    "X5:3",
    "A:6",
    "S:6",
    "ESp:7",
    "X5:5",
];

/// Caps applied while building and enumerating.
#[derive(Clone, Copy, Debug)]
pub struct BuildCaps {
    pub order: usize,
    pub lattice: usize,
}

impl Default for BuildCaps {
    fn default() -> Self {
        BuildCaps { order: DEFAULT_ORDER_CAP, lattice: DEFAULT_LATTICE_CAP }
    }
}

/// A built group with its named landmark subgroups.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    /// Display name: the spec string, or a file name for loaded tables.
    pub name: String,
    /// Absent for groups loaded from files.
    pub spec: Option<GroupSpec>,
    pub group: GroupTable,
    /// Named subgroups in a fixed order: `G`, `trivial`, `center`, `derived`,
    /// `gamma2…`, `Z1…`, `maximal` (when the lattice is within cap) and
    /// `sylow<p>` for nilpotent groups.
    pub landmarks: Vec<(String, SubgroupView)>,
}

impl CatalogEntry {
    pub fn landmark(&self, name: &str) -> Option<&SubgroupView> {
        self.landmarks.iter().find(|(n, _)| n == name).map(|(_, v)| v)
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    pub fn is_nilpotent(&self) -> bool {
        self.landmarks.iter().any(|(n, _)| n.starts_with("sylow")) || self.group.order() == 1
    }
}

/// Builds only the table for a spec.
pub fn build_table(spec: &GroupSpec, cap: usize) -> Result<GroupTable> {
    if spec.order() > cap as u128 {
        return Err(Error::ClosureCapExceeded { cap });
    }
    let table = match *spec {
        GroupSpec::Cyclic(n) => families::cyclic(n as usize),
        GroupSpec::Dihedral(n) => families::dihedral(n as usize),
        GroupSpec::Quaternion(n) | GroupSpec::Dicyclic(n) => families::dicyclic(n as usize),
        GroupSpec::Symmetric(n) => families::symmetric(n as usize, cap)?,
        GroupSpec::Alternating(n) => families::alternating(n as usize, cap)?,
        GroupSpec::ExtraspecialExpP(p) => families::heisenberg(p as usize),
        GroupSpec::ExtraspecialExpP2(p) => families::extraspecial_exp_p2(p as usize),
        GroupSpec::X5(p) => families::x5(p as usize),
        GroupSpec::ElementaryAbelian { p, k } => families::elementary_abelian(p as usize, k),
        GroupSpec::Product(ref a, ref b) => build_table(a, cap)?.direct_product(&build_table(b, cap)?, cap)?,
    };
    Ok(table)
}

/// Builds the group and its landmarks with default caps.
pub fn build(spec: &GroupSpec) -> Result<CatalogEntry> {
    build_with_caps(spec, BuildCaps::default())
}

pub fn build_str(spec: &str) -> Result<CatalogEntry> {
    build(&parse_spec(spec)?)
}

pub fn build_with_caps(spec: &GroupSpec, caps: BuildCaps) -> Result<CatalogEntry> {
    let group = build_table(spec, caps.order)?;
    let mut entry = entry_from_table(spec.to_string(), group, caps);
    entry.spec = Some(spec.clone());
    Ok(entry)
}

/// Attaches landmarks to a table that did not come from a spec.
pub fn entry_from_table(name: impl Into<String>, group: GroupTable, caps: BuildCaps) -> CatalogEntry {
    let mut landmarks = vec![
        ("G".to_string(), SubgroupView::whole(&group)),
        ("trivial".to_string(), SubgroupView::trivial(&group)),
        ("center".to_string(), center(&group)),
        ("derived".to_string(), commutator_subgroup(&SubgroupView::whole(&group))),
    ];
    let lower = lower_central_series(&group);
    for (i, term) in lower.terms.iter().enumerate().skip(1) {
        landmarks.push((format!("gamma{}", i + 1), term.clone()));
    }
    let upper = upper_central_series(&group);
    for (i, term) in upper.terms.iter().enumerate().skip(1) {
        landmarks.push((format!("Z{i}"), term.clone()));
    }
    if group.order() > 1 && group.order() <= caps.lattice {
        // lattices past the cap just go without this landmark
        if let Some(m) = lattice::maximal_subgroups(&group, caps.lattice).ok().and_then(|v| v.into_iter().next()) {
            landmarks.push(("maximal".to_string(), m));
        }
    }
    if lower.last().is_trivial() {
        for p in prime_factors(group.order() as u64) {
            landmarks.push((format!("sylow{p}"), p_power_elements(&group, p)));
        }
    }
    CatalogEntry { name: name.into(), spec: None, group, landmarks }
}

fn p_power_elements(g: &GroupTable, p: u64) -> SubgroupView {
    let members = g.elements().filter(|&x| {
        let mut o = g.element_order(x) as u64;
        while o.is_multiple_of(p) {
            o /= p;
        }
        o == 1
    });
    SubgroupView::from_members(g, members).expect("p-elements of a nilpotent group form a subgroup")
}

/// The Sylow p-subgroup of a nilpotent group: all elements of p-power order.
pub fn sylow_subgroup(g: &GroupTable, p: u64) -> Result<SubgroupView> {
    if !crate::group::series::is_nilpotent(g) {
        return Err(Error::NotNilpotent);
    }
    if !crate::group::table::is_prime(p) {
        return Err(Error::UnsupportedParameter(format!("{p} is not prime")));
    }
    Ok(p_power_elements(g, p))
}

/// All maximal subgroups, by full lattice enumeration.
pub fn maximal_subgroups(g: &GroupTable, cap: usize) -> Result<Vec<SubgroupView>> {
    lattice::maximal_subgroups(g, cap)
}

/// Checks the defining relations of `X5:p` in a built table: returns the
/// elements `(a1, a2, b, c1, c2)` when every relation holds.
pub fn x5_generators(p: u32, g: &GroupTable) -> Option<[u32; 5]> {
    let pc = pc::x5_presentation(p);
    let gens: [u32; 5] = std::array::from_fn(|i| pc.generator(i));
    let [a1, a2, b, c1, c2] = gens;
    let ok = g.commutator(a1, a2) == b
        && g.commutator(a1, b) == c1
        && g.commutator(a2, b) == c2
        && gens.iter().all(|&x| g.element_order(x) == p as usize)
        && [c1, c2].iter().all(|&c| g.elements().all(|y| g.mul(c, y) == g.mul(y, c)));
    ok.then_some(gens)
}
