//! Declarations and expressions accepted by the classifier.

use crate::kernel::FinStruct;
use crate::ordertype::OtTerm;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;

/// Number of countable models of the theory of a structure.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum VcClass {
    /// The structure is finite.
    Zero,
    One,
    Continuum,
    Unknown,
}

impl fmt::Display for VcClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            VcClass::Zero => "zero",
            VcClass::One => "one",
            VcClass::Continuum => "continuum",
            VcClass::Unknown => "unknown",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
enum OmegaTag {
    Omega,
}

/// A finite count or ω; written as a number or `"omega"`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Multiplicity {
    Finite(usize),
    Omega,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum MultiplicityWire {
    Finite(usize),
    Omega(OmegaTag),
}

impl Serialize for Multiplicity {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match *self {
            Multiplicity::Finite(n) => MultiplicityWire::Finite(n),
            Multiplicity::Omega => MultiplicityWire::Omega(OmegaTag::Omega),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Multiplicity {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Ok(match MultiplicityWire::deserialize(d)? {
            MultiplicityWire::Finite(n) => Multiplicity::Finite(n),
            MultiplicityWire::Omega(_) => Multiplicity::Omega,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
enum OpaqueTag {
    Opaque,
}

/// Order type of a chain part: a number, a term, or `"opaque"`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ChainLength {
    Finite(usize),
    Term(OtTerm),
    /// A linear order outside the term algebra; only its declared count is known.
    Opaque,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum ChainLengthWire {
    Finite(usize),
    Opaque(OpaqueTag),
    Term(OtTerm),
}

impl Serialize for ChainLength {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            ChainLength::Finite(n) => ChainLengthWire::Finite(*n),
            ChainLength::Term(t) => ChainLengthWire::Term(t.clone()),
            ChainLength::Opaque => ChainLengthWire::Opaque(OpaqueTag::Opaque),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for ChainLength {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Ok(match ChainLengthWire::deserialize(d)? {
            ChainLengthWire::Finite(n) => ChainLength::Finite(n),
            ChainLengthWire::Term(t) => ChainLength::Term(t),
            ChainLengthWire::Opaque(_) => ChainLength::Opaque,
        })
    }
}

/// One part of a lexicographic sum over a finite tree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "shape", rename_all = "lowercase", deny_unknown_fields)]
pub enum PartDecl {
    Chain { length: ChainLength },
    Antichain { size: Multiplicity },
}

impl PartDecl {
    pub fn chain(n: usize) -> Self {
        PartDecl::Chain {
            length: ChainLength::Finite(n),
        }
    }

    pub fn chain_term(t: OtTerm) -> Self {
        PartDecl::Chain {
            length: ChainLength::Term(t),
        }
    }

    pub fn antichain(n: usize) -> Self {
        PartDecl::Antichain {
            size: Multiplicity::Finite(n),
        }
    }

    pub fn antichain_omega() -> Self {
        PartDecl::Antichain {
            size: Multiplicity::Omega,
        }
    }

    /// A one-element part, whichever way it is written.
    pub fn is_point(&self) -> bool {
        matches!(
            self,
            PartDecl::Chain {
                length: ChainLength::Finite(1)
            } | PartDecl::Antichain {
                size: Multiplicity::Finite(1)
            }
        ) || matches!(self, PartDecl::Chain { length: ChainLength::Term(t) } if t.is_one())
    }

    /// A linear order (a chain, or an antichain of size one).
    pub fn is_linear(&self) -> bool {
        matches!(self, PartDecl::Chain { .. }) || self.is_point()
    }

    /// Number of elements, if finite.
    pub fn finite_size(&self) -> Option<usize> {
        match self {
            PartDecl::Chain {
                length: ChainLength::Finite(n),
            } => Some(*n),
            PartDecl::Chain {
                length: ChainLength::Term(t),
            } => t.finite_length(),
            PartDecl::Chain {
                length: ChainLength::Opaque,
            } => None,
            PartDecl::Antichain {
                size: Multiplicity::Finite(n),
            } => Some(*n),
            PartDecl::Antichain {
                size: Multiplicity::Omega,
            } => None,
        }
    }
}

/// What a base denotes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum BaseKind {
    /// A linear order given by a term of the order-type algebra.
    #[serde(rename = "linear_class_c")]
    LinearClassC { term: OtTerm },
    /// A linear order known only through its declared count.
    LinearDeclared,
    /// A rooted tree given as a lexicographic sum of chains and antichains
    /// over a finite tree.
    RootedFmdTree {
        index: FinStruct,
        parts: Vec<PartDecl>,
    },
    /// An initially finite tree known only through its declared count.
    InitiallyFiniteTreeDeclared,
    /// An explicit finite structure.
    Finite { structure: FinStruct },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BaseDecl {
    pub name: String,
    #[serde(flatten)]
    pub kind: BaseKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub declared_count: Option<VcClass>,
    /// Free text echoed into the derivation for declared counts.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub justification: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub connected: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub finite_diameter: Option<bool>,
}

impl BaseDecl {
    pub fn new(name: impl Into<String>, kind: BaseKind) -> Self {
        BaseDecl {
            name: name.into(),
            kind,
            declared_count: None,
            justification: None,
            connected: None,
            finite_diameter: None,
        }
    }

    pub fn finite(name: impl Into<String>, s: FinStruct) -> Self {
        BaseDecl::new(name, BaseKind::Finite { structure: s })
    }

    pub fn linear(name: impl Into<String>, term: OtTerm) -> Self {
        BaseDecl::new(name, BaseKind::LinearClassC { term })
    }

    pub fn declared_linear(name: impl Into<String>, count: VcClass) -> Self {
        BaseDecl {
            declared_count: Some(count),
            ..BaseDecl::new(name, BaseKind::LinearDeclared)
        }
    }

    pub fn rooted_fmd(name: impl Into<String>, index: FinStruct, parts: Vec<PartDecl>) -> Self {
        BaseDecl::new(name, BaseKind::RootedFmdTree { index, parts })
    }

    pub fn with_declared_count(mut self, c: VcClass) -> Self {
        self.declared_count = Some(c);
        self
    }

    pub fn with_finite_diameter(mut self, v: bool) -> Self {
        self.finite_diameter = Some(v);
        self
    }
}

/// The built-in infinite families usable in a countable union.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Schema {
    /// One copy of the finite chain `n` for every `n ≥ 1`.
    AllFiniteChains,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OmegaComponent {
    pub expr: StructExpr,
    pub multiplicity: Multiplicity,
}

/// Products, finite unions and countable unions of declared bases.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "snake_case", deny_unknown_fields)]
pub enum StructExpr {
    Base {
        base: BaseDecl,
    },
    Product {
        args: Vec<StructExpr>,
    },
    #[serde(rename = "union")]
    UnionFin {
        args: Vec<StructExpr>,
    },
    UnionOmega {
        #[serde(default)]
        components: Vec<OmegaComponent>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        schema: Option<Schema>,
    },
}

impl StructExpr {
    pub fn base(b: BaseDecl) -> Self {
        StructExpr::Base { base: b }
    }

    pub fn product(args: Vec<StructExpr>) -> Self {
        StructExpr::Product { args }
    }

    pub fn union(args: Vec<StructExpr>) -> Self {
        StructExpr::UnionFin { args }
    }

    /// `ω` copies of each given expression.
    pub fn union_omega(components: Vec<StructExpr>) -> Self {
        StructExpr::UnionOmega {
            components: components
                .into_iter()
                .map(|expr| OmegaComponent {
                    expr,
                    multiplicity: Multiplicity::Omega,
                })
                .collect(),
            schema: None,
        }
    }

    pub fn all_finite_chains() -> Self {
        StructExpr::UnionOmega {
            components: Vec::new(),
            schema: Some(Schema::AllFiniteChains),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::chain;

    #[test]
    fn json_shapes() {
        let e = StructExpr::union_omega(vec![StructExpr::base(BaseDecl::linear(
            "eta",
            OtTerm::eta(),
        ))]);
        let s = serde_json::to_string(&e).unwrap();
        assert_eq!(
            s,
            r#"{"op":"union_omega","components":[{"expr":{"op":"base","base":{"name":"eta","kind":"linear_class_c","term":{"op":"shuffle","args":[{"op":"one"}]}}},"multiplicity":"omega"}]}"#
        );
        assert_eq!(serde_json::from_str::<StructExpr>(&s).unwrap(), e);
        let s = serde_json::to_string(&StructExpr::all_finite_chains()).unwrap();
        assert_eq!(
            s,
            r#"{"op":"union_omega","components":[],"schema":"all_finite_chains"}"#
        );
    }

    #[test]
    fn part_json() {
        let parts = vec![
            PartDecl::chain(1),
            PartDecl::antichain_omega(),
            PartDecl::chain_term(OtTerm::eta()),
            PartDecl::Chain {
                length: ChainLength::Opaque,
            },
        ];
        let s = serde_json::to_string(&parts).unwrap();
        assert_eq!(
            s,
            r#"[{"shape":"chain","length":1},{"shape":"antichain","size":"omega"},{"shape":"chain","length":{"op":"shuffle","args":[{"op":"one"}]}},{"shape":"chain","length":"opaque"}]"#
        );
        assert_eq!(serde_json::from_str::<Vec<PartDecl>>(&s).unwrap(), parts);
    }

    #[test]
    fn finite_base_json() {
        let b = BaseDecl::finite("c2", chain(2));
        let s = serde_json::to_string(&b).unwrap();
        assert_eq!(
            s,
            r#"{"name":"c2","kind":"finite","structure":{"name":"C2","size":2,"pairs":[[0,0],[0,1],[1,1]]}}"#
        );
        assert_eq!(serde_json::from_str::<BaseDecl>(&s).unwrap(), b);
    }
}
