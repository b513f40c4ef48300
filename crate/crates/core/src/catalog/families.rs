use crate::catalog::pc::x5_presentation;
use crate::error::Result;
use crate::group::perm::{from_permutations, Permutation};
use crate::group::table::GroupTable;

fn table_from_fn(n: usize, f: impl Fn(usize, usize) -> usize) -> GroupTable {
    let mut mul = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            mul.push(f(a, b) as u32);
        }
    }
    GroupTable::from_trusted(n, mul, None)
}

pub fn cyclic(n: usize) -> GroupTable {
    table_from_fn(n, |a, b| (a + b) % n)
}

/// `r^i s^j` at index `i + n·j`, with `s r s⁻¹ = r⁻¹`.
pub fn dihedral(order: usize) -> GroupTable {
    let n = order / 2;
    table_from_fn(order, |a, b| {
        let (i, j) = (a % n, a / n);
        let (k, l) = (b % n, b / n);
        let rot = if j == 0 { (i + k) % n } else { (i + n - k) % n };
        rot + n * ((j + l) % 2)
    })
}

/// `a^i x^j` at index `i + 2n·j`, where `a` has order `2n`, `x² = a^n` and
/// `x a x⁻¹ = a⁻¹`. Order 8 gives the quaternion group.
pub fn dicyclic(order: usize) -> GroupTable {
    let m = order / 2; // order of a
    let n = m / 2;
    table_from_fn(order, |a, b| {
        let (i, j) = (a % m, a / m);
        let (k, l) = (b % m, b / m);
        match (j, l) {
            (0, _) => (i + k) % m + m * l,
            (_, 0) => (i + m - k) % m + m,
            _ => (i + m - k + n) % m,
        }
    })
}

fn cycle(degree: usize, points: &[u32]) -> Permutation {
    Permutation::from_cycles(degree, &[points.to_vec()]).expect("valid cycle")
}

pub fn symmetric(n: usize, cap: usize) -> Result<GroupTable> {
    let mut gens = Vec::new();
    if n >= 2 {
        gens.push(cycle(n, &[0, 1]));
    }
    if n >= 3 {
        gens.push(cycle(n, &(0..n as u32).collect::<Vec<_>>()));
    }
    from_permutations(&gens, n, cap)
}

pub fn alternating(n: usize, cap: usize) -> Result<GroupTable> {
    let gens: Vec<Permutation> = (0..n.saturating_sub(2) as u32).map(|i| cycle(n, &[i, i + 1, i + 2])).collect();
    from_permutations(&gens, n, cap)
}

/// Unitriangular 3×3 matrices over F_p: `(x, y, z)` at index `x p² + y p + z`
/// with `(x,y,z)(x',y',z') = (x+x', y+y', z+z'+x y')`.
pub fn heisenberg(p: usize) -> GroupTable {
    let split = |a: usize| (a / (p * p), (a / p) % p, a % p);
    table_from_fn(p * p * p, |a, b| {
        let (x, y, z) = split(a);
        let (x2, y2, z2) = split(b);
        let nx = (x + x2) % p;
        let ny = (y + y2) % p;
        let nz = (z + z2 + x * y2) % p;
        nx * p * p + ny * p + nz
    })
}

/// `⟨a, b : a^{p²} = b^p = 1, b a b⁻¹ = a^{1+p}⟩`, with `a^i b^j` at index
/// `i p + j`.
pub fn extraspecial_exp_p2(p: usize) -> GroupTable {
    let m = p * p;
    // (1+p)^j mod p²
    let twist: Vec<usize> = (0..p)
        .scan(1usize, |acc, _| {
            let cur = *acc;
            *acc = (*acc * (1 + p)) % m;
            Some(cur)
        })
        .collect();
    table_from_fn(m * p, |a, b| {
        let (i, j) = (a / p, a % p);
        let (k, l) = (b / p, b % p);
        let ni = (i + k * twist[j]) % m;
        ni * p + (j + l) % p
    })
}

pub fn x5(p: usize) -> GroupTable {
    x5_presentation(p as u32).to_table()
}

pub fn elementary_abelian(p: usize, k: u32) -> GroupTable {
    let n = p.pow(k);
    table_from_fn(n, |mut a, mut b| {
        let mut out = 0;
        let mut place = 1;
        for _ in 0..k {
            out += ((a % p + b % p) % p) * place;
            a /= p;
            b /= p;
            place *= p;
        }
        out
    })
}
