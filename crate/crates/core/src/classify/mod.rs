//! Classification of expressions over declared bases by the number of
//! countable models of their theories.

mod closure;
mod decl;
mod engine;
mod fmd;
mod rules;
mod validate;

pub use closure::{closure_enumerate, ClosureItem};
pub use decl::{
    BaseDecl, BaseKind, ChainLength, Multiplicity, OmegaComponent, PartDecl, Schema, StructExpr,
    VcClass,
};
pub use engine::{classify, finitely_axiomatizable, Axiomatizability, Classification};
pub use fmd::{fmd_decompose, FmdDecomposition};
pub use rules::{Rule, TraceStep};
pub use validate::{validate, validate_base, Annotated, Atom, BaseInfo, Family};
