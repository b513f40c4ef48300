use std::collections::VecDeque;
use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::group::conjugacy::ConjugacyPartition;

/// Largest group order any constructor will build unless told otherwise.
pub const DEFAULT_ORDER_CAP: usize = 20_000;

/// A finite group stored as a dense multiplication table.
///
/// Element `0` is always the identity. Cloning is cheap: the table is shared,
/// and [`SubgroupView`](crate::SubgroupView)s keep a clone of their parent.
#[derive(Clone)]
pub struct GroupTable {
    inner: Arc<TableData>,
}

struct TableData {
    order: usize,
    mul: Vec<u32>,
    inv: Vec<u32>,
    labels: Option<Vec<String>>,
    generators: OnceLock<Vec<u32>>,
    classes: OnceLock<ConjugacyPartition>,
}

impl GroupTable {
    /// Assembles a table that is already known to be a group with identity 0.
    /// Inverses are read off the table. Callers in this crate only use this
    /// for tables produced by construction rather than user input.
    pub(crate) fn from_trusted(order: usize, mul: Vec<u32>, labels: Option<Vec<String>>) -> Self {
        debug_assert_eq!(mul.len(), order * order);
        let mut inv = vec![0u32; order];
        for a in 0..order {
            let row = &mul[a * order..(a + 1) * order];
            let b = row.iter().position(|&x| x == 0).expect("row without identity");
            inv[a] = b as u32;
        }
        GroupTable {
            inner: Arc::new(TableData {
                order,
                mul,
                inv,
                labels,
                generators: OnceLock::new(),
                classes: OnceLock::new(),
            }),
        }
    }

    /// The group of order 1.
    pub fn trivial() -> Self {
        Self::from_trusted(1, vec![0], None)
    }

    /// Validates a Cayley table and relabels so that the identity is element 0.
    ///
    /// Checks run in the order: shape, Latin square, identity, associativity.
    pub fn from_cayley_table(rows: &[Vec<u32>]) -> Result<Self> {
        Self::from_cayley_table_with_labels(rows, None)
    }

    pub fn from_cayley_table_with_labels(rows: &[Vec<u32>], labels: Option<Vec<String>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::MalformedTable("empty table".into()));
        }
        if let Some(labels) = &labels {
            if labels.len() != n {
                return Err(Error::MalformedTable(format!("{} labels for {} elements", labels.len(), n)));
            }
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::MalformedTable(format!("row {i} has {} entries, expected {n}", row.len())));
            }
            if let Some(&bad) = row.iter().find(|&&x| x as usize >= n) {
                return Err(Error::MalformedTable(format!("row {i} contains {bad}, outside 0..{n}")));
            }
        }
        check_latin(rows)?;
        let e = (0..n)
            .find(|&r| rows[r].iter().enumerate().all(|(c, &x)| x as usize == c))
            .ok_or(Error::NoIdentity { row: 0 })?;
        if (0..n).any(|r| rows[r][e] as usize != r) {
            return Err(Error::NoIdentity { row: e });
        }

        // swap labels 0 and e
        let relabel = |x: usize| -> usize {
            if x == e {
                0
            } else if x == 0 {
                e
            } else {
                x
            }
        };
        let mut mul = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                mul[relabel(a) * n + relabel(b)] = relabel(rows[a][b] as usize) as u32;
            }
        }
        let labels = labels.map(|mut l| {
            l.swap(0, e);
            l
        });
        let group = Self::from_trusted(n, mul, labels);
        group.check_associative()?;
        Ok(group)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.inner.order
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.inner.mul[a as usize * self.inner.order + b as usize]
    }

    #[inline]
    pub fn inv(&self, a: u32) -> u32 {
        self.inner.inv[a as usize]
    }

    /// `[a, b] = a b a⁻¹ b⁻¹`.
    #[inline]
    pub fn commutator(&self, a: u32, b: u32) -> u32 {
        let ab = self.mul(a, b);
        let ba = self.mul(b, a);
        // a b a⁻¹ b⁻¹ = (ab)(ba)⁻¹
        self.mul(ab, self.inv(ba))
    }

    /// `g x g⁻¹`.
    #[inline]
    pub fn conjugate(&self, g: u32, x: u32) -> u32 {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn row(&self, a: u32) -> &[u32] {
        let n = self.inner.order;
        &self.inner.mul[a as usize * n..(a as usize + 1) * n]
    }

    pub fn elements(&self) -> impl Iterator<Item = u32> + Clone {
        0..self.order() as u32
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.inner.labels.as_deref()
    }

    pub fn label(&self, x: u32) -> String {
        match &self.inner.labels {
            Some(l) => l[x as usize].clone(),
            None => x.to_string(),
        }
    }

    /// Whether two handles share the same underlying table.
    pub fn same_group(&self, other: &GroupTable) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
    }

    /// Rows of the table as nested vectors, e.g. for writing to disk.
    pub fn to_rows(&self) -> Vec<Vec<u32>> {
        self.elements().map(|a| self.row(a).to_vec()).collect()
    }

    pub fn is_abelian(&self) -> bool {
        let gens = self.generators();
        gens.iter().enumerate().all(|(i, &a)| gens[i + 1..].iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn element_order(&self, x: u32) -> usize {
        let mut k = 1;
        let mut y = x;
        while y != 0 {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    /// Smallest prime dividing the order, `None` for the trivial group.
    pub fn smallest_prime_divisor(&self) -> Option<u64> {
        smallest_prime_factor(self.order() as u64)
    }

    /// A generating set chosen greedily in index order: an element becomes a
    /// generator when it is not yet reachable from the earlier ones.
    pub fn generators(&self) -> &[u32] {
        self.inner.generators.get_or_init(|| greedy_generators(self))
    }

    pub fn conjugacy(&self) -> &ConjugacyPartition {
        self.inner.classes.get_or_init(|| ConjugacyPartition::compute(self))
    }

    /// Re-runs every structural check on the table: Latin square, identity,
    /// inverses and associativity.
    pub fn audit(&self) -> Result<()> {
        let n = self.order();
        let mut seen = vec![u32::MAX; n];
        for a in 0..n {
            for (b, &x) in self.row(a as u32).iter().enumerate() {
                if x as usize >= n {
                    return Err(Error::MalformedTable(format!("entry ({a},{b}) = {x} out of range")));
                }
                if seen[x as usize] == a as u32 {
                    return Err(Error::NotLatinSquare { axis: "row", index: a, element: x });
                }
                seen[x as usize] = a as u32;
            }
        }
        seen.fill(u32::MAX);
        for b in 0..n {
            for a in 0..n {
                let x = self.mul(a as u32, b as u32);
                if seen[x as usize] == b as u32 {
                    return Err(Error::NotLatinSquare { axis: "column", index: b, element: x });
                }
                seen[x as usize] = b as u32;
            }
        }
        for a in self.elements() {
            if self.mul(0, a) != a || self.mul(a, 0) != a {
                return Err(Error::NoIdentity { row: 0 });
            }
            let ai = self.inv(a);
            if self.mul(a, ai) != 0 || self.mul(ai, a) != 0 {
                return Err(Error::MalformedTable(format!("inverse table wrong at {a}")));
            }
        }
        self.check_associative()
    }

    /// Light's associativity test: `(x a) y == x (a y)` for all `x`, `y` and
    /// every `a` in a generating set. The set of elements `a` passing the
    /// test is closed under the operation, so passing for generators implies
    /// associativity everywhere. Cost is `O(n² · |generators|)`.
    fn check_associative(&self) -> Result<()> {
        for &a in self.generators() {
            for x in self.elements() {
                let xa = self.mul(x, a);
                for y in self.elements() {
                    if self.mul(xa, y) != self.mul(x, self.mul(a, y)) {
                        return Err(Error::NotAssociative { a: x, b: a, c: y });
                    }
                }
            }
        }
        Ok(())
    }

    /// Exhaustive `O(n³)` associativity scan; reports the lexicographically
    /// first failing triple.
    pub fn audit_associativity_exhaustive(&self) -> Result<()> {
        for a in self.elements() {
            for b in self.elements() {
                let ab = self.mul(a, b);
                for c in self.elements() {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return Err(Error::NotAssociative { a, b, c });
                    }
                }
            }
        }
        Ok(())
    }

    /// Componentwise product; `(a, b)` gets index `a·|other| + b`.
    pub fn direct_product(&self, other: &GroupTable, cap: usize) -> Result<GroupTable> {
        let (n1, n2) = (self.order(), other.order());
        let n = n1.checked_mul(n2).ok_or(Error::ClosureCapExceeded { cap })?;
        if n > cap {
            return Err(Error::ClosureCapExceeded { cap });
        }
        let mut mul = Vec::with_capacity(n * n);
        for a1 in 0..n1 as u32 {
            for b1 in 0..n2 as u32 {
                for a2 in 0..n1 as u32 {
                    let x = self.mul(a1, a2) as usize * n2;
                    let row = other.row(b1);
                    mul.extend(row.iter().map(|&y| (x + y as usize) as u32));
                }
            }
        }
        let labels = match (self.labels(), other.labels()) {
            (None, None) => None,
            _ => Some(
                (0..n1 as u32)
                    .flat_map(|a| (0..n2 as u32).map(move |b| (a, b)))
                    .map(|(a, b)| format!("({},{})", self.label(a), other.label(b)))
                    .collect(),
            ),
        };
        Ok(GroupTable::from_trusted(n, mul, labels))
    }
}

impl PartialEq for GroupTable {
    /// Tables are equal when their multiplication tables are identical.
    fn eq(&self, other: &Self) -> bool {
        self.same_group(other) || (self.order() == other.order() && self.inner.mul == other.inner.mul)
    }
}

impl Eq for GroupTable {}

impl fmt::Debug for GroupTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GroupTable").field("order", &self.order()).finish_non_exhaustive()
    }
}

fn check_latin(rows: &[Vec<u32>]) -> Result<()> {
    let n = rows.len();
    let mut seen = vec![usize::MAX; n];
    for (i, row) in rows.iter().enumerate() {
        for &x in row {
            if seen[x as usize] == i {
                return Err(Error::NotLatinSquare { axis: "row", index: i, element: x });
            }
            seen[x as usize] = i;
        }
    }
    seen.fill(usize::MAX);
    for c in 0..n {
        for row in rows {
            let x = row[c];
            if seen[x as usize] == c {
                return Err(Error::NotLatinSquare { axis: "column", index: c, element: x });
            }
            seen[x as usize] = c;
        }
    }
    Ok(())
}

/// Greedy generators, closing under right multiplication. Only relies on
/// the Latin property and the identity, so it is safe to call on a table
/// that has not been checked for associativity yet.
fn greedy_generators(g: &GroupTable) -> Vec<u32> {
    let n = g.order();
    let mut reached = vec![false; n];
    reached[0] = true;
    let mut reached_list = vec![0u32];
    let mut gens: Vec<u32> = Vec::new();
    for x in 0..n as u32 {
        if reached[x as usize] {
            continue;
        }
        gens.push(x);
        let mut queue: VecDeque<u32> = reached_list.iter().copied().collect();
        while let Some(y) = queue.pop_front() {
            for &s in &gens {
                let z = g.mul(y, s);
                if !reached[z as usize] {
                    reached[z as usize] = true;
                    reached_list.push(z);
                    queue.push_back(z);
                }
            }
        }
    }
    gens
}

pub(crate) fn smallest_prime_factor(n: u64) -> Option<u64> {
    if n < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            return Some(p);
        }
        p += 1;
    }
    Some(n)
}

pub(crate) fn is_prime(n: u64) -> bool {
    smallest_prime_factor(n) == Some(n)
}

/// Distinct prime factors in increasing order.
pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    while let Some(p) = smallest_prime_factor(n) {
        out.push(p);
        while n.is_multiple_of(p) {
            n /= p;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyclic_rows(n: u32) -> Vec<Vec<u32>> {
        (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect()
    }

    fn s3_rows() -> Vec<Vec<u32>> {
        // elements r^i s^j with index j*3 + i; s r s = r⁻¹
        let idx = |i: u32, j: u32| j * 3 + i;
        let mut rows = vec![vec![0; 6]; 6];
        for a in 0..6u32 {
            for b in 0..6u32 {
                let (i, j) = (a % 3, a / 3);
                let (k, l) = (b % 3, b / 3);
                let rot = if j == 0 { (i + k) % 3 } else { (i + 3 - k) % 3 };
                rows[a as usize][b as usize] = idx(rot, (j + l) % 2);
            }
        }
        rows
    }

    #[test]
    fn trivial_table() {
        let g = GroupTable::from_cayley_table(&[vec![0]]).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.inv(0), 0);
        assert_eq!(g.smallest_prime_divisor(), None);
    }

    #[test]
    fn order_two() {
        let g = GroupTable::from_cayley_table(&cyclic_rows(2)).unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.inner.inv, vec![0, 1]);
    }

    #[test]
    fn identity_is_relabelled_to_zero() {
        // Z/3 with identity stored as element 2: x*y = (x + y + 1) mod 3
        let rows: Vec<Vec<u32>> = (0..3).map(|a| (0..3).map(|b| (a + b + 1) % 3).collect()).collect();
        let g =
            GroupTable::from_cayley_table_with_labels(&rows, Some(vec!["a".into(), "b".into(), "e".into()])).unwrap();
        assert_eq!(g.label(0), "e");
        assert!(g.audit().is_ok());
        assert_eq!(g.element_order(1), 3);
    }

    #[test]
    fn s3_accepted_and_mutation_rejected() {
        let rows = s3_rows();
        let g = GroupTable::from_cayley_table(&rows).unwrap();
        assert_eq!(g.order(), 6);
        assert!(!g.is_abelian());
        g.audit_associativity_exhaustive().unwrap();

        // Flip an intercalate (a 2x2 Latin subsquare): the result is still a
        // Latin square with identity, so only associativity can catch it.
        let mut bad = rows.clone();
        let mut done = false;
        'outer: for r1 in 1..6 {
            for r2 in r1 + 1..6 {
                for c1 in 1..6 {
                    for c2 in c1 + 1..6 {
                        let (a, b) = (bad[r1][c1], bad[r1][c2]);
                        if bad[r2][c1] == b && bad[r2][c2] == a {
                            bad[r1][c1] = b;
                            bad[r1][c2] = a;
                            bad[r2][c1] = a;
                            bad[r2][c2] = b;
                            done = true;
                            break 'outer;
                        }
                    }
                }
            }
        }
        assert!(done);
        match GroupTable::from_cayley_table(&bad) {
            Err(Error::NotAssociative { .. }) => {}
            other => panic!("expected NotAssociative, got {other:?}"),
        }
    }

    #[test]
    fn single_cell_defect_is_rejected() {
        let mut bad = s3_rows();
        bad[3][4] = bad[3][5];
        assert!(matches!(
            GroupTable::from_cayley_table(&bad),
            Err(Error::NotLatinSquare { axis: "row", index: 3, .. })
        ));
    }

    #[test]
    fn missing_identity() {
        // x*y = x - y mod 3 is a Latin square without a two-sided identity
        let rows: Vec<Vec<u32>> = (0..3).map(|a| (0..3).map(|b| (a + 3 - b) % 3).collect()).collect();
        assert!(matches!(GroupTable::from_cayley_table(&rows), Err(Error::NoIdentity { .. })));
    }

    #[test]
    fn malformed_shapes() {
        assert!(matches!(GroupTable::from_cayley_table(&[]), Err(Error::MalformedTable(_))));
        assert!(matches!(GroupTable::from_cayley_table(&[vec![0, 1], vec![1]]), Err(Error::MalformedTable(_))));
        assert!(matches!(GroupTable::from_cayley_table(&[vec![0, 2], vec![1, 0]]), Err(Error::MalformedTable(_))));
    }

    #[test]
    fn product_layout() {
        let c2 = GroupTable::from_cayley_table(&cyclic_rows(2)).unwrap();
        let c3 = GroupTable::from_cayley_table(&cyclic_rows(3)).unwrap();
        let p = c2.direct_product(&c3, DEFAULT_ORDER_CAP).unwrap();
        assert_eq!(p.order(), 6);
        assert!(p.is_abelian());
        // (a, b) sits at 3a + b: (1,1)*(1,2) = (0,0)
        let at = |a: u32, b: u32| 3 * a + b;
        assert_eq!(p.mul(at(1, 1), at(1, 2)), at(0, 0));
        p.audit().unwrap();
        let t = GroupTable::trivial().direct_product(&c3, DEFAULT_ORDER_CAP).unwrap();
        assert_eq!(t, c3);
        assert!(matches!(c3.direct_product(&c3, 8), Err(Error::ClosureCapExceeded { cap: 8 })));
    }

    #[test]
    fn primes() {
        assert_eq!(smallest_prime_factor(60), Some(2));
        assert_eq!(smallest_prime_factor(45), Some(3));
        assert_eq!(prime_factors(360), vec![2, 3, 5]);
        assert!(is_prime(97));
        assert!(!is_prime(1));
    }
}
