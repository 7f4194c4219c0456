//! Shape checks and per-base annotation.

use super::decl::{
    BaseDecl, BaseKind, ChainLength, Multiplicity, PartDecl, Schema, StructExpr, VcClass,
};
use super::rules::{Rule, TraceStep};
use crate::error::{Error, Result};
use crate::kernel::{
    antichain, chain, components, diameter, is_connected, is_linear, is_tree, lex_sum, root,
    FinStruct,
};
use crate::ordertype::OtTerm;
use serde::Serialize;

/// The certified classes of connected structures.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Linear,
    RootedFmd,
    InitiallyFinite,
}

/// A connected piece of a base.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Atom {
    pub label: String,
    pub class: VcClass,
    pub finite: bool,
    pub finite_diameter: Option<bool>,
    /// Certified classes this atom belongs to.
    pub families: Vec<Family>,
    /// The structure itself, for finite atoms.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub structure: Option<FinStruct>,
}

impl Atom {
    fn finite(label: String, s: FinStruct) -> Atom {
        let mut families = Vec::new();
        if is_linear(&s) {
            families.push(Family::Linear);
        }
        if is_tree(&s) && matches!(root(&s), Ok(Some(_))) {
            families.extend([Family::RootedFmd, Family::InitiallyFinite]);
        }
        Atom {
            label,
            class: VcClass::Zero,
            finite: true,
            finite_diameter: Some(diameter(&s).is_some()),
            families,
            structure: Some(s),
        }
    }
}

/// What validation learnt about a base.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BaseInfo {
    /// The connected components, one unless the base is a finite
    /// disconnected structure.
    pub atoms: Vec<Atom>,
    pub connected: bool,
    pub steps: Vec<TraceStep>,
}

/// An expression whose bases have been checked and annotated.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "op", rename_all = "snake_case")]
pub enum Annotated {
    Base {
        base: BaseDecl,
        info: BaseInfo,
    },
    Product {
        args: Vec<Annotated>,
    },
    #[serde(rename = "union")]
    UnionFin {
        args: Vec<Annotated>,
    },
    UnionOmega {
        components: Vec<(Annotated, Multiplicity)>,
        schema: Option<Schema>,
    },
}

pub(crate) const CLAUSE_TREE_SHAPE: &str = "fmd-tree-shape";
pub(crate) const CLAUSE_ROOTED: &str = "fmd-rooted";

fn part_structure(p: &PartDecl) -> Option<FinStruct> {
    match p {
        PartDecl::Chain { .. } => p.finite_size().map(chain),
        PartDecl::Antichain { .. } => p.finite_size().map(antichain),
    }
}

fn omega_categorical_part(p: &PartDecl) -> bool {
    !matches!(
        p,
        PartDecl::Chain {
            length: ChainLength::Opaque
        }
    )
}

fn check_declared(b: &BaseDecl, computed: VcClass) -> Result<()> {
    match b.declared_count {
        Some(d) if d != computed => Err(Error::validation(
            "declared-count",
            format!(
                "base {} is declared {d} but its count is {computed}",
                b.name
            ),
        )),
        _ => Ok(()),
    }
}

fn require_declared(b: &BaseDecl) -> Result<VcClass> {
    match b.declared_count {
        None => Err(Error::validation(
            "declared-count",
            format!("base {} needs a declared count", b.name),
        )),
        Some(VcClass::Zero) => Err(Error::validation(
            "declared-count",
            format!(
                "base {} denotes an infinite structure and cannot have count zero",
                b.name
            ),
        )),
        Some(c) => Ok(c),
    }
}

/// Connected, finite-diameter bases reject flags that say otherwise.
fn check_flags(b: &BaseDecl, connected: bool, finite_diameter: bool, why: &str) -> Result<()> {
    if b.connected.is_some_and(|c| c != connected) {
        return Err(Error::validation(
            "connectivity",
            format!(
                "base {} is declared connected={} but {why}",
                b.name, !connected
            ),
        ));
    }
    if b.finite_diameter.is_some_and(|d| d != finite_diameter) {
        return Err(Error::validation(
            "finite-diameter",
            format!(
                "base {} is declared finite_diameter={} but {why}",
                b.name, !finite_diameter
            ),
        ));
    }
    Ok(())
}

fn declared_step(b: &BaseDecl, class: VcClass) -> TraceStep {
    let mut step = TraceStep::concludes(Rule::Decl, b.name.clone(), class);
    if let Some(j) = &b.justification {
        step.citation = format!("{}: {j}", step.citation);
    }
    step
}

fn validate_fmd(b: &BaseDecl, index: &FinStruct, parts: &[PartDecl]) -> Result<BaseInfo> {
    let name = &b.name;
    if parts.len() != index.size() {
        return Err(Error::validation(
            "fmd-parts",
            format!(
                "base {name}: {} parts for an index of size {}",
                parts.len(),
                index.size()
            ),
        ));
    }
    if parts.iter().any(|p| p.finite_size() == Some(0)) {
        return Err(Error::validation(
            "fmd-parts",
            format!("base {name}: parts must be nonempty"),
        ));
    }
    if index.is_empty() || !is_tree(index) {
        return Err(Error::validation(
            CLAUSE_TREE_SHAPE,
            format!("base {name}: the index must be a nonempty finite tree"),
        ));
    }
    let Some(r) = root(index)? else {
        return Err(Error::validation(
            CLAUSE_ROOTED,
            format!("base {name}: a rooted tree needs an index with a root"),
        ));
    };
    let root_ok = match &parts[r] {
        PartDecl::Chain {
            length: ChainLength::Finite(_),
        } => true,
        PartDecl::Chain {
            length: ChainLength::Term(t),
        } => t.has_min(),
        PartDecl::Chain {
            length: ChainLength::Opaque,
        } => false,
        a @ PartDecl::Antichain { .. } => a.is_point(),
    };
    if !root_ok {
        return Err(Error::validation(
            CLAUSE_ROOTED,
            format!(
                "base {name}: the part at the index root must be a linear order having a minimum"
            ),
        ));
    }
    for i in 0..index.size() {
        let maximal = (0..index.size()).all(|j| j == i || !index.related(i, j));
        if !maximal && !parts[i].is_linear() {
            return Err(Error::validation(
                CLAUSE_TREE_SHAPE,
                format!("base {name}: antichain part at non-maximal index point {i}"),
            ));
        }
    }
    check_flags(
        b,
        true,
        true,
        "a rooted tree is connected with diameter at most 2",
    )?;

    if let Some(finite_parts) = parts.iter().map(part_structure).collect::<Option<Vec<_>>>() {
        let s = lex_sum(index, &finite_parts)?;
        check_declared(b, VcClass::Zero)?;
        return Ok(BaseInfo {
            atoms: vec![Atom::finite(name.clone(), s)],
            connected: true,
            steps: vec![TraceStep::concludes(Rule::R0, name.clone(), VcClass::Zero)],
        });
    }

    let mut families = vec![Family::RootedFmd];
    // the tree minus its root has finitely many components unless the root
    // part is a point with an infinite antichain directly above it
    let root_is_point = parts[r].is_point();
    let infinite_leaf_above_root = (0..index.size()).any(|i| {
        i != r
            && (0..index.size()).all(|j| j == i || !index.related(i, j))
            && (0..index.size())
                .all(|j| j == r || j == i || !(index.related(r, j) && index.related(j, i)))
            && matches!(
                parts[i],
                PartDecl::Antichain {
                    size: Multiplicity::Omega
                }
            )
    });
    if !(root_is_point && infinite_leaf_above_root) {
        families.push(Family::InitiallyFinite);
    }

    let (class, steps) = if parts.iter().all(omega_categorical_part) {
        check_declared(b, VcClass::One)?;
        let steps = if root_is_point {
            vec![
                TraceStep::new(
                    Rule::R5,
                    format!("{name} without its root"),
                    "ω-categorical",
                ),
                TraceStep::concludes(Rule::R6, name.clone(), VcClass::One),
            ]
        } else {
            vec![TraceStep::concludes(Rule::R5, name.clone(), VcClass::One)]
        };
        (VcClass::One, steps)
    } else {
        let c = require_declared(b)?;
        let step = if c == VcClass::Continuum {
            let mut s = TraceStep::concludes(Rule::R7, name.clone(), c);
            if let Some(j) = &b.justification {
                s.citation = format!("{}: {j}", s.citation);
            }
            s
        } else {
            declared_step(b, c)
        };
        (c, vec![step])
    };
    Ok(BaseInfo {
        atoms: vec![Atom {
            label: name.clone(),
            class,
            finite: false,
            finite_diameter: Some(true),
            families,
            structure: None,
        }],
        connected: true,
        steps,
    })
}

fn validate_term(b: &BaseDecl, term: &OtTerm) -> Result<BaseInfo> {
    let name = &b.name;
    check_flags(
        b,
        true,
        true,
        "a linear order is connected with diameter at most 1",
    )?;
    if let Some(n) = term.finite_length() {
        check_declared(b, VcClass::Zero)?;
        return Ok(BaseInfo {
            atoms: vec![Atom::finite(name.clone(), chain(n))],
            connected: true,
            steps: vec![TraceStep::concludes(Rule::R0, name.clone(), VcClass::Zero)],
        });
    }
    check_declared(b, VcClass::One)?;
    let mut families = vec![Family::Linear];
    if term.has_min() {
        families.extend([Family::RootedFmd, Family::InitiallyFinite]);
    }
    Ok(BaseInfo {
        atoms: vec![Atom {
            label: name.clone(),
            class: VcClass::One,
            finite: false,
            finite_diameter: Some(true),
            families,
            structure: None,
        }],
        connected: true,
        steps: vec![TraceStep::concludes(
            Rule::ClassC,
            format!("{name} = {term}"),
            VcClass::One,
        )],
    })
}

fn validate_finite(b: &BaseDecl, s: &FinStruct) -> Result<BaseInfo> {
    let name = &b.name;
    if s.is_empty() {
        return Err(Error::validation(
            "nonempty-base",
            format!("base {name} is empty"),
        ));
    }
    let connected = is_connected(s);
    check_flags(
        b,
        connected,
        diameter(s).is_some(),
        "that contradicts the given structure",
    )?;
    check_declared(b, VcClass::Zero)?;
    let comps = components(s);
    let many = comps.len() > 1;
    let atoms = comps
        .parts
        .into_iter()
        .enumerate()
        .map(|(k, c)| {
            let label = if many {
                format!("{name}#{k}")
            } else {
                name.clone()
            };
            Atom::finite(label, c)
        })
        .collect();
    Ok(BaseInfo {
        atoms,
        connected,
        steps: vec![TraceStep::concludes(Rule::R0, name.clone(), VcClass::Zero)],
    })
}

fn declared_atom(b: &BaseDecl, family: Family) -> Result<BaseInfo> {
    let class = require_declared(b)?;
    check_flags(
        b,
        true,
        true,
        "such a base is connected with finite diameter",
    )?;
    Ok(BaseInfo {
        atoms: vec![Atom {
            label: b.name.clone(),
            class,
            finite: false,
            finite_diameter: Some(true),
            families: vec![family],
            structure: None,
        }],
        connected: true,
        steps: vec![declared_step(b, class)],
    })
}

pub fn validate_base(b: &BaseDecl) -> Result<BaseInfo> {
    match &b.kind {
        BaseKind::Finite { structure } => validate_finite(b, structure),
        BaseKind::LinearClassC { term } => validate_term(b, term),
        BaseKind::LinearDeclared => declared_atom(b, Family::Linear),
        BaseKind::InitiallyFiniteTreeDeclared => declared_atom(b, Family::InitiallyFinite),
        BaseKind::RootedFmdTree { index, parts } => validate_fmd(b, index, parts),
    }
}

/// Checks every base and the expression grammar, annotating each base.
pub fn validate(e: &StructExpr) -> Result<Annotated> {
    match e {
        StructExpr::Base { base } => Ok(Annotated::Base {
            base: base.clone(),
            info: validate_base(base)?,
        }),
        StructExpr::Product { args } | StructExpr::UnionFin { args } => {
            if args.is_empty() {
                return Err(Error::validation(
                    "expr-grammar",
                    "products and unions need at least one argument",
                ));
            }
            let args = args.iter().map(validate).collect::<Result<Vec<_>>>()?;
            Ok(if matches!(e, StructExpr::Product { .. }) {
                Annotated::Product { args }
            } else {
                Annotated::UnionFin { args }
            })
        }
        StructExpr::UnionOmega { components, schema } => {
            let has_omega = components
                .iter()
                .any(|c| c.multiplicity == Multiplicity::Omega);
            if schema.is_none() && !has_omega {
                return Err(Error::validation(
                    "union-omega-multiplicity",
                    "a countable union needs a component of multiplicity omega or a schema",
                ));
            }
            if components
                .iter()
                .any(|c| c.multiplicity == Multiplicity::Finite(0))
            {
                return Err(Error::validation(
                    "union-omega-multiplicity",
                    "multiplicities must be positive",
                ));
            }
            let components = components
                .iter()
                .map(|c| Ok((validate(&c.expr)?, c.multiplicity)))
                .collect::<Result<Vec<_>>>()?;
            Ok(Annotated::UnionOmega {
                components,
                schema: *schema,
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{antichain, chain};

    fn fan() -> BaseDecl {
        BaseDecl::rooted_fmd(
            "fan",
            chain(2),
            vec![PartDecl::chain(1), PartDecl::antichain_omega()],
        )
    }

    #[test]
    fn fan_is_valid() {
        let info = validate_base(&fan()).unwrap();
        assert_eq!(info.atoms[0].class, VcClass::One);
        assert_eq!(info.atoms[0].families, vec![Family::RootedFmd]);
        let rules: Vec<Rule> = info.steps.iter().map(|s| s.rule).collect();
        assert_eq!(rules, vec![Rule::R5, Rule::R6]);
    }

    #[test]
    fn antichain_root_is_rejected() {
        let b = BaseDecl::rooted_fmd(
            "bad",
            chain(2),
            vec![PartDecl::antichain(2), PartDecl::chain(1)],
        );
        match validate_base(&b) {
            Err(Error::Validation { clause, .. }) => assert_eq!(clause, CLAUSE_ROOTED),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn antichain_below_is_rejected() {
        let index = chain(3);
        let b = BaseDecl::rooted_fmd(
            "bad",
            index,
            vec![
                PartDecl::chain(1),
                PartDecl::antichain(2),
                PartDecl::chain(1),
            ],
        );
        match validate_base(&b) {
            Err(Error::Validation { clause, .. }) => assert_eq!(clause, CLAUSE_TREE_SHAPE),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn eta_annotation() {
        let info = validate_base(&BaseDecl::linear("eta", OtTerm::eta())).unwrap();
        let a = &info.atoms[0];
        assert_eq!(a.class, VcClass::One);
        assert!(info.connected);
        // any two points of a linear order are comparable
        assert_eq!(a.finite_diameter, Some(true));
    }

    #[test]
    fn finite_bases_split() {
        let info = validate_base(&BaseDecl::finite("a3", antichain(3))).unwrap();
        assert_eq!(info.atoms.len(), 3);
        assert!(!info.connected);
    }

    #[test]
    fn declared_needs_count() {
        assert!(validate_base(&BaseDecl::new("x", BaseKind::LinearDeclared)).is_err());
        assert!(validate_base(&BaseDecl::declared_linear("x", VcClass::Zero)).is_err());
    }
}
