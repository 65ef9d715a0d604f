//! Semiorders of bounded length.
//!
//! Unlabeled semiorders are handled through canonical vectors
//! ([`Semiorder`]), which correspond one to one with ordered trees and Dyck
//! paths ([`bijection`]). Length is the number of edges in a longest chain;
//! it matches the tree height minus one, so counting semiorders of bounded
//! length is counting trees of bounded height ([`unlabeled`], [`labeled`]).

pub mod bijection;
pub mod error;
pub mod labeled;
pub mod oracle;
pub mod relation;
pub mod semiorder;
pub mod series;
pub mod tree;
pub mod trunk;
pub mod unlabeled;
pub mod verify;

pub use bijection::{
    arrangement_to_semiorder, dyck_to_semiorder, semiorder_to_arrangement, semiorder_to_dyck,
    semiorder_to_tree, tree_to_semiorder, Construction, LevelLinkage,
};
pub use error::{Error, Result};
pub use labeled::{
    count_labeled_exact, count_labeled_leq, labeled_semiorder_to_partition, ordered_bell,
    partition_to_labeled_semiorder, EgfSeries, LabeledSemiorder, OrderedSetPartition,
};
pub use oracle::{
    enumerate_semiorders, has_pattern, oracle_counts, GenericPoset, PatternKind, Route,
};
pub use relation::ComparabilityMatrix;
pub use semiorder::{BadElement, Contraction, LevelProfile, Semiorder, Split};
pub use series::{IntegerPolynomial, IntegerSeries};
pub use tree::{DyckPath, OrderedTree, Step};
pub use trunk::{
    count_trunk_trees, dyck_to_rtlm, narayana, rtl_minima, rtlm_to_dyck, trunk_tree, RtlmSet,
    TrunkCount, TrunkTree,
};
pub use unlabeled::{
    count_exact, count_leq, p_polynomial, series_exact, series_leq, t_fnk, CountTable, Method,
};
pub use verify::{Check, Suite};
