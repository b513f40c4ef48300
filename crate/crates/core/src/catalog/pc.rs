//! Collection in polycyclic presentations with all relative orders equal to
//! one prime.
//!
//! Elements are exponent vectors `(e_0, …, e_{k-1})` standing for the normal
//! word `g_0^{e_0} ⋯ g_{k-1}^{e_{k-1}}`. Relations are given as
//!
//! * powers: `g_i^p = w_i`, a normal word in generators above `i`;
//! * conjugates: `g_i⁻¹ g_j g_i = w_{ij}` for `j > i`, a normal word in
//!   generators above `i`.

use crate::group::table::GroupTable;

/// A normal word as `(generator, exponent)` pairs in increasing generator
/// order.
pub type Word = Vec<(usize, u32)>;

pub struct PcPresentation {
    prime: u32,
    rank: usize,
    powers: Vec<Word>,
    /// `conjugates[i][j]` for `j > i`; unused entries are empty.
    conjugates: Vec<Vec<Word>>,
}

impl PcPresentation {
    /// Presentation with trivial powers and commuting generators; relations
    /// are then added with [`Self::set_conjugate`].
    pub fn new(prime: u32, rank: usize) -> Self {
        let conjugates =
            (0..rank).map(|i| (0..rank).map(|j| if j > i { vec![(j, 1)] } else { Vec::new() }).collect()).collect();
        PcPresentation { prime, rank, powers: vec![Vec::new(); rank], conjugates }
    }

    pub fn set_conjugate(&mut self, i: usize, j: usize, word: Word) {
        assert!(j > i && word.iter().all(|&(g, _)| g > i));
        self.conjugates[i][j] = word;
    }

    pub fn order(&self) -> usize {
        (self.prime as usize).pow(self.rank as u32)
    }

    pub fn index_of(&self, exps: &[u32]) -> usize {
        exps.iter().fold(0, |acc, &e| acc * self.prime as usize + e as usize)
    }

    pub fn exponents_of(&self, mut index: usize) -> Vec<u32> {
        let p = self.prime as usize;
        let mut exps = vec![0; self.rank];
        for slot in exps.iter_mut().rev() {
            *slot = (index % p) as u32;
            index /= p;
        }
        exps
    }

    /// Multiplies the normal word `exps` on the right by `g_i`, in place.
    pub fn mul_generator(&self, exps: &mut [u32], i: usize) {
        // w = w_{<=i} · w_{>i}  ⇒  w g_i = (w_{<=i} g_i) · (g_i⁻¹ w_{>i} g_i)
        let mut tail: Vec<(usize, u32)> = Vec::new();
        for (j, e) in exps.iter_mut().enumerate().skip(i + 1) {
            if *e > 0 {
                tail.push((j, std::mem::take(e)));
            }
        }
        exps[i] += 1;
        if exps[i] == self.prime {
            exps[i] = 0;
            self.mul_word(exps, &self.powers[i]);
        }
        for (j, e) in tail {
            for _ in 0..e {
                self.mul_word(exps, &self.conjugates[i][j]);
            }
        }
    }

    fn mul_word(&self, exps: &mut [u32], word: &Word) {
        for &(g, e) in word {
            for _ in 0..e {
                self.mul_generator(exps, g);
            }
        }
    }

    /// Full multiplication table. Element indices are exponent vectors read
    /// as base-p numerals with `g_0` most significant.
    pub fn to_table(&self) -> GroupTable {
        let n = self.order();
        let rank = self.rank;
        // right[i][x] = index of x·g_i
        let right: Vec<Vec<u32>> = (0..rank)
            .map(|i| {
                (0..n)
                    .map(|x| {
                        let mut e = self.exponents_of(x);
                        self.mul_generator(&mut e, i);
                        self.index_of(&e) as u32
                    })
                    .collect()
            })
            .collect();
        // Column b is column b' pushed through right[i], where b = b'·g_i and
        // g_i is the last generator occurring in b.
        let mut columns: Vec<Vec<u32>> = Vec::with_capacity(n);
        columns.push((0..n as u32).collect());
        for b in 1..n {
            let mut e = self.exponents_of(b);
            let i = (0..rank).rev().find(|&i| e[i] > 0).unwrap();
            e[i] -= 1;
            let prev = self.index_of(&e);
            let col = columns[prev].iter().map(|&x| right[i][x as usize]).collect();
            columns.push(col);
        }
        let mut mul = vec![0u32; n * n];
        for (b, col) in columns.iter().enumerate() {
            for (a, &x) in col.iter().enumerate() {
                mul[a * n + b] = x;
            }
        }
        GroupTable::from_trusted(n, mul, None)
    }

    /// Generator `g_i` as an element index.
    pub fn generator(&self, i: usize) -> u32 {
        let mut e = vec![0; self.rank];
        e[i] = 1;
        self.index_of(&e) as u32
    }
}

/// The order-p⁵ group with `[a1,a2] = b`, `[a1,b] = c1`, `[a2,b] = c2`, all
/// generators of order p, `c1, c2` central, under `[x,y] = x y x⁻¹ y⁻¹`.
///
/// Generator order is `a1, a2, b, c1, c2`. Conjugation relations:
/// `a1⁻¹ a2 a1 = a2 b⁻¹ c1 c2`, `a1⁻¹ b a1 = b c1⁻¹`, `a2⁻¹ b a2 = b c2⁻¹`.
pub fn x5_presentation(p: u32) -> PcPresentation {
    let mut pc = PcPresentation::new(p, 5);
    pc.set_conjugate(0, 1, vec![(1, 1), (2, p - 1), (3, 1), (4, 1)]);
    pc.set_conjugate(0, 2, vec![(2, 1), (3, p - 1)]);
    pc.set_conjugate(1, 2, vec![(2, 1), (4, p - 1)]);
    pc
}
