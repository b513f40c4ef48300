//! Group sources, caps and subgroup selection.

use std::path::{Path, PathBuf};

use commdeg::bounds::default_selection;
use commdeg::catalog::{self, all_subgroups, entry_from_table, BuildCaps, CatalogEntry};
use commdeg::group::io::parse_cayley_table;
use commdeg::group::perm::{from_permutations, parse_generators};
use commdeg::SubgroupView;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::CliError;

#[derive(Clone, Copy, Debug)]
pub struct Caps {
    pub order: usize,
    pub lattice: usize,
    pub work: u128,
    pub budget: u64,
    pub quotient: usize,
}

impl Caps {
    pub fn build(&self) -> BuildCaps {
        BuildCaps { order: self.order, lattice: self.lattice }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Source {
    Spec(String),
    Table(PathBuf),
    Perms(PathBuf),
}

impl Source {
    /// `table:PATH` and `perms:PATH` name files; anything else is a spec.
    pub fn parse(text: &str) -> Source {
        if let Some(path) = text.strip_prefix("table:") {
            Source::Table(path.into())
        } else if let Some(path) = text.strip_prefix("perms:") {
            Source::Perms(path.into())
        } else {
            Source::Spec(text.to_string())
        }
    }
}

fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| {
        let code = if e.kind() == std::io::ErrorKind::NotFound { "E_NOT_FOUND" } else { "E_IO" };
        CliError::new(code, format!("{}: {e}", path.display()))
    })
}

fn file_name(path: &Path) -> String {
    path.file_name().map(|n| n.to_string_lossy().into_owned()).unwrap_or_else(|| path.display().to_string())
}

pub fn load_entry(source: &Source, caps: &Caps) -> Result<CatalogEntry, CliError> {
    match source {
        Source::Spec(text) => Ok(catalog::build_with_caps(&catalog::parse_spec(text)?, caps.build())?),
        Source::Table(path) => {
            let group = parse_cayley_table(&read_file(path)?)?;
            if group.order() > caps.order {
                return Err(commdeg::Error::ClosureCapExceeded { cap: caps.order }.into());
            }
            Ok(entry_from_table(file_name(path), group, caps.build()))
        }
        Source::Perms(path) => {
            let gens = parse_generators(&read_file(path)?)?;
            let group = from_permutations(&gens, 0, caps.order)?;
            Ok(entry_from_table(file_name(path), group, caps.build()))
        }
    }
}

fn selector_error(message: impl Into<String>) -> CliError {
    CliError::new("E_SELECTOR", message)
}

/// Resolves a selector: `all`, `maximal`, `default`, `gen:a,b,…` or a
/// landmark name.
pub fn select(entry: &CatalogEntry, selector: &str, caps: &Caps) -> Result<Vec<(String, SubgroupView)>, CliError> {
    let g = &entry.group;
    let picked: Vec<(String, SubgroupView)> = match selector {
        "all" => all_subgroups(g, caps.lattice)?.into_iter().enumerate().map(|(i, h)| (format!("sub{i}"), h)).collect(),
        "maximal" => catalog::maximal_subgroups(g, caps.lattice)?
            .into_iter()
            .enumerate()
            .map(|(i, h)| (format!("max{i}"), h))
            .collect(),
        "default" => default_selection(entry, caps.lattice),
        s if s.starts_with("gen:") => {
            let seeds = s[4..]
                .split(',')
                .filter(|t| !t.trim().is_empty())
                .map(|t| {
                    let x: u32 = t.trim().parse().map_err(|_| selector_error(format!("bad element {t:?}")))?;
                    if x as usize >= g.order() {
                        return Err(selector_error(format!("element {x} outside a group of order {}", g.order())));
                    }
                    Ok(x)
                })
                .collect::<Result<Vec<u32>, CliError>>()?;
            vec![(s.to_string(), SubgroupView::generated(g, seeds))]
        }
        name => match entry.landmark(name) {
            Some(h) => vec![(name.to_string(), h.clone())],
            None => {
                let known: Vec<&str> = entry.landmarks.iter().map(|(n, _)| n.as_str()).collect();
                return Err(selector_error(format!(
                    "unknown selector {name:?}; use all, maximal, default, gen:a,b or one of {}",
                    known.join(", ")
                )));
            }
        },
    };
    if picked.is_empty() {
        return Err(selector_error(format!("selector {selector:?} resolved to no subgroups")));
    }
    Ok(picked)
}

/// Keeps `k` of the selected subgroups, chosen with a seeded generator, in
/// their original order.
pub fn sample<T>(items: Vec<T>, k: usize, seed: u64) -> Vec<T> {
    if k >= items.len() {
        return items;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut keep = vec![false; items.len()];
    for i in rand::seq::index::sample(&mut rng, items.len(), k) {
        keep[i] = true;
    }
    items.into_iter().zip(keep).filter_map(|(x, k)| k.then_some(x)).collect()
}
