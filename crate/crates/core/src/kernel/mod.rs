//! Finite binary relational structures and the operations on them.

pub mod connectivity;
pub mod generators;
mod io;
pub mod ops;
pub mod order;
mod structure;

pub use connectivity::{components, diameter, is_connected, rs_closure, rst_closure, Components};
pub use generators::{antichain, binary_fan, chain, fan, fence, point};
pub use ops::{direct_product, disjoint_union, lex_sum, product_of, union_of};
pub use order::{
    comparability, compatibility, down_set, is_antichain, is_antisymmetric, is_linear, is_poset,
    is_reflexive, is_transitive, is_tree, root, strip_root,
};
pub(crate) use structure::check_bijection;
pub use structure::{FinStruct, Partition};

use crate::error::Result;

/// Builds a structure of the given size from a list of related pairs.
pub fn make_struct(size: usize, pairs: &[(usize, usize)]) -> Result<FinStruct> {
    FinStruct::from_pairs(size, pairs)
}
