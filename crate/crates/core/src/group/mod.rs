//! Finite groups as dense multiplication tables, with subgroups, quotients,
//! central series and conjugacy classes.

pub mod conjugacy;
pub mod io;
pub mod perm;
pub mod quotient;
pub mod series;
pub mod subgroup;
pub mod table;

pub use conjugacy::{conjugacy_partition, ConjugacyPartition};
pub use perm::{from_permutations, Permutation};
pub use quotient::{quotient, Quotient};
pub use series::{
    is_nilpotent, lower_central_series, nilpotency_class, upper_central_series, upper_central_term, SeriesChain,
    SeriesKind,
};
pub use subgroup::{
    center, centralizer, commutator_set, commutator_subgroup, mutual_commutator, relative_center, SubgroupView,
};
pub use table::{GroupTable, DEFAULT_ORDER_CAP};

#[cfg(test)]
mod tests;
