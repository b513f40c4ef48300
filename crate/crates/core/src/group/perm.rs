//! Permutations in disjoint-cycle notation and permutation-group closure.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::group::table::GroupTable;

/// A bijection on `{0, …, degree-1}`, stored as its image list.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Permutation(Vec<u32>);

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation((0..degree as u32).collect())
    }

    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &x in &images {
            if x as usize >= images.len() || seen[x as usize] {
                return Err(Error::InvalidPermutation(format!("{images:?} is not a bijection")));
            }
            seen[x as usize] = true;
        }
        Ok(Permutation(images))
    }

    /// Builds a permutation of the given degree from cycles.
    pub fn from_cycles(degree: usize, cycles: &[Vec<u32>]) -> Result<Self> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut moved = vec![false; degree];
        for cycle in cycles {
            for (i, &x) in cycle.iter().enumerate() {
                if x as usize >= degree {
                    return Err(Error::InvalidPermutation(format!("point {x} outside degree {degree}")));
                }
                if moved[x as usize] {
                    return Err(Error::InvalidPermutation(format!("point {x} appears twice")));
                }
                moved[x as usize] = true;
                images[x as usize] = cycle[(i + 1) % cycle.len()];
            }
        }
        Ok(Permutation(images))
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.0
    }

    /// Composition `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation(other.0.iter().map(|&i| self.0[i as usize]).collect())
    }

    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.0[start] as usize == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x as u32);
                x = self.0[x] as usize;
            }
            out.push(cycle);
        }
        out
    }

    fn pad(&mut self, degree: usize) {
        let d = self.0.len();
        self.0.extend(d as u32..degree as u32);
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let parts: Vec<String> = c.iter().map(u32::to_string).collect();
            write!(f, "({})", parts.join(" "))?;
        }
        Ok(())
    }
}

/// Parses one generator in disjoint-cycle notation, e.g. `(0 1 2)(3 4)`.
/// Returns the cycles; columns in errors are 1-based.
pub fn parse_cycles(line: &str) -> Result<Vec<Vec<u32>>> {
    let err = |column: usize, message: &str| Error::Parse { column, message: message.to_string() };
    let mut cycles = Vec::new();
    let mut current: Option<(usize, Vec<u32>)> = None;
    let mut chars = line.char_indices().peekable();
    while let Some((i, c)) = chars.next() {
        let column = i + 1;
        match c {
            '(' => {
                if current.is_some() {
                    return Err(err(column, "nested '('"));
                }
                current = Some((column, Vec::new()));
            }
            ')' => match current.take() {
                Some((_, cycle)) => {
                    if !cycle.is_empty() {
                        cycles.push(cycle);
                    }
                }
                None => return Err(err(column, "unmatched ')'")),
            },
            c if c.is_ascii_digit() => {
                let Some((_, cycle)) = current.as_mut() else {
                    return Err(err(column, "point outside a cycle"));
                };
                let mut value = c.to_digit(10).unwrap() as u64;
                while let Some(&(_, d)) = chars.peek() {
                    if let Some(v) = d.to_digit(10) {
                        value = value * 10 + v as u64;
                        if value > u32::MAX as u64 / 2 {
                            return Err(err(column, "point too large"));
                        }
                        chars.next();
                    } else {
                        break;
                    }
                }
                cycle.push(value as u32);
            }
            c if c.is_whitespace() || c == ',' => {}
            _ => return Err(err(column, &format!("unexpected character {c:?}"))),
        }
    }
    if let Some((open, _)) = current {
        return Err(err(line.len() + 1, &format!("cycle opened at column {open} is not closed")));
    }
    Ok(cycles)
}

/// Parses a generator file: one generator per non-empty line. All
/// generators are extended to the largest point mentioned.
pub fn parse_generators(text: &str) -> Result<Vec<Permutation>> {
    let mut parsed = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let cycles = parse_cycles(line).map_err(|e| match e {
            Error::Parse { column, message } => {
                Error::Parse { column, message: format!("line {}: {message}", lineno + 1) }
            }
            other => other,
        })?;
        parsed.push(cycles);
    }
    let degree = parsed.iter().flatten().flatten().map(|&x| x as usize + 1).max().unwrap_or(1);
    parsed.iter().map(|cycles| Permutation::from_cycles(degree, cycles)).collect()
}

/// The group generated by `generators`, elements discovered breadth-first
/// from the identity (element 0). Labels are cycle notation.
pub fn from_permutations(generators: &[Permutation], degree: usize, cap: usize) -> Result<GroupTable> {
    let mut gens: Vec<Permutation> = generators.to_vec();
    let degree = gens.iter().map(Permutation::degree).max().unwrap_or(0).max(degree);
    for g in &mut gens {
        g.pad(degree);
    }

    let mut elements = vec![Permutation::identity(degree)];
    let mut index: HashMap<Permutation, u32> = HashMap::new();
    index.insert(elements[0].clone(), 0);
    // parent[b] = (a, s) with b = a * gens[s]
    let mut parent: Vec<(u32, usize)> = vec![(0, 0)];
    let mut right: Vec<Vec<u32>> = vec![Vec::new(); gens.len()];
    let mut i = 0;
    while i < elements.len() {
        for (s, g) in gens.iter().enumerate() {
            let product = elements[i].compose(g);
            let next = match index.get(&product) {
                Some(&j) => j,
                None => {
                    if elements.len() >= cap {
                        return Err(Error::ClosureCapExceeded { cap });
                    }
                    let j = elements.len() as u32;
                    index.insert(product.clone(), j);
                    elements.push(product);
                    parent.push((i as u32, s));
                    j
                }
            };
            right[s].push(next);
        }
        i += 1;
    }

    let n = elements.len();
    let mut columns: Vec<Vec<u32>> = Vec::with_capacity(n);
    columns.push((0..n as u32).collect());
    for &(a, s) in &parent[1..] {
        let col = columns[a as usize].iter().map(|&x| right[s][x as usize]).collect();
        columns.push(col);
    }
    let mut mul = vec![0u32; n * n];
    for (b, col) in columns.iter().enumerate() {
        for (a, &x) in col.iter().enumerate() {
            mul[a * n + b] = x;
        }
    }
    let labels = elements.iter().map(Permutation::to_string).collect();
    Ok(GroupTable::from_trusted(n, mul, Some(labels)))
}
