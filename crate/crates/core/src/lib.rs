//! Finite binary relational structures and the algebra around the sharp
//! Vaught dichotomy for products, unions and lexicographic sums: an
//! isomorphism engine, Ehrenfeucht–Fraïssé games, terms for ω-categorical
//! linear orders and a rule-based model-count classifier.

pub mod classify;
pub mod ef;
pub mod error;
pub mod iso;
pub mod kernel;
pub mod oracle;
pub mod ordertype;
pub mod verify;

pub use classify::{classify, StructExpr, VcClass};
pub use error::{Error, Result};
pub use iso::{IsoBudget, IsoEngine, IsoWitness, OrbitProfile};
pub use kernel::{FinStruct, Partition};
pub use ordertype::OtTerm;
