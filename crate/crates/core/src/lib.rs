//! Exact relative commutativity degrees of finite groups.
//!
//! Groups are dense multiplication tables ([`GroupTable`]); subgroups are
//! index sets into their parent ([`SubgroupView`]). On top of that the crate
//! computes `Pr(H, G)` and the commutator distribution `Pr_g(H, G)` as exact
//! fractions, evaluates the classical lower and upper bounds on them, and
//! searches for isoclinisms between group pairs.
//!
//! ```
//! use commdeg::{catalog, stats};
//!
//! let q8 = catalog::build_str("Q:8").unwrap();
//! let whole = q8.landmark("G").unwrap();
//! assert_eq!(stats::pr_bruteforce(whole).to_string(), "5/8");
//! ```

pub mod bounds;
pub mod catalog;
pub mod error;
pub mod group;
pub mod isoclinism;
pub mod ratio;
pub mod stats;

pub use catalog::{CatalogEntry, GroupSpec};
pub use error::{Error, Result};
pub use group::{ConjugacyPartition, GroupTable, SeriesChain, SeriesKind, SubgroupView};
pub use ratio::ExactRatio;
