//! Terms for countable ω-categorical linear order types.

mod algebra;
mod jump;
mod realize;
mod term;

pub use algebra::{enum_c, pred, rank};
pub use jump::{block_sizes, has_jump};
pub use realize::{realize, Boundary, RealizedSample};
pub use term::{Node, OtTerm};
