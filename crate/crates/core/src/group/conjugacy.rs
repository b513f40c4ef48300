use crate::group::table::GroupTable;

/// Conjugacy classes of a group with per-element class ids and centralizer
/// orders.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyPartition {
    /// Each class is sorted; classes are ordered by their smallest element,
    /// so class 0 is `{identity}`.
    pub classes: Vec<Vec<u32>>,
    pub class_of: Vec<u32>,
    pub centralizer_order: Vec<u64>,
}

impl ConjugacyPartition {
    pub(crate) fn compute(g: &GroupTable) -> Self {
        let n = g.order();
        let gens = g.generators();
        let mut class_of = vec![u32::MAX; n];
        let mut classes = Vec::new();
        for x in g.elements() {
            if class_of[x as usize] != u32::MAX {
                continue;
            }
            let id = classes.len() as u32;
            class_of[x as usize] = id;
            let mut orbit = vec![x];
            let mut i = 0;
            while i < orbit.len() {
                let y = orbit[i];
                i += 1;
                for &s in gens {
                    let z = g.conjugate(s, y);
                    if class_of[z as usize] == u32::MAX {
                        class_of[z as usize] = id;
                        orbit.push(z);
                    }
                }
            }
            orbit.sort_unstable();
            classes.push(orbit);
        }
        let centralizer_order = class_of.iter().map(|&c| (n / classes[c as usize].len()) as u64).collect();
        ConjugacyPartition { classes, class_of, centralizer_order }
    }

    pub fn class_size(&self, x: u32) -> usize {
        self.classes[self.class_of[x as usize] as usize].len()
    }

    pub fn class(&self, x: u32) -> &[u32] {
        &self.classes[self.class_of[x as usize] as usize]
    }

    pub fn same_class(&self, x: u32, y: u32) -> bool {
        self.class_of[x as usize] == self.class_of[y as usize]
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    /// Class sizes sorted ascending, with multiplicity.
    pub fn class_sizes(&self) -> Vec<usize> {
        let mut sizes: Vec<usize> = self.classes.iter().map(Vec::len).collect();
        sizes.sort_unstable();
        sizes
    }
}

/// Conjugacy partition of `g` (cached on the table).
pub fn conjugacy_partition(g: &GroupTable) -> &ConjugacyPartition {
    g.conjugacy()
}
