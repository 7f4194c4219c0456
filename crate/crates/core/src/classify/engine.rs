//! Rule application.

use super::decl::{Multiplicity, Schema, StructExpr, VcClass};
use super::rules::{Rule, TraceStep};
use super::validate::{validate, Annotated, Atom, Family};
use crate::error::{Error, Result};
use serde::Serialize;

const MAX_PRODUCTS: usize = 4096;

/// A class together with the rules that produced it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub class: VcClass,
    pub trace: Vec<TraceStep>,
}

/// Finitely axiomatisable, not, or outside the scope of the criterion.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Axiomatizability {
    True,
    False,
    NotApplicable,
}

type Product = Vec<Atom>;

/// Rewrites to a finite union of products of connected atoms.
fn normal_form(a: &Annotated) -> Result<Vec<Product>> {
    match a {
        Annotated::Base { info, .. } => Ok(info.atoms.iter().map(|x| vec![x.clone()]).collect()),
        Annotated::UnionFin { args } => {
            let mut out = Vec::new();
            for arg in args {
                out.extend(normal_form(arg)?);
            }
            Ok(out)
        }
        Annotated::Product { args } => {
            let mut acc: Vec<Product> = vec![Vec::new()];
            for arg in args {
                let nf = normal_form(arg)?;
                if acc.len().saturating_mul(nf.len()) > MAX_PRODUCTS {
                    return Err(Error::resource(format!(
                        "normal form has more than {MAX_PRODUCTS} union components"
                    )));
                }
                acc = acc
                    .iter()
                    .flat_map(|p| {
                        nf.iter().map(move |q| {
                            let mut r = p.clone();
                            r.extend(q.iter().cloned());
                            r
                        })
                    })
                    .collect();
            }
            Ok(acc)
        }
        Annotated::UnionOmega { .. } => Err(Error::NoApplicableTheorem(
            "a countable union may only appear at the top of an expression".into(),
        )),
    }
}

fn base_steps(a: &Annotated, out: &mut Vec<TraceStep>) {
    match a {
        Annotated::Base { info, .. } => {
            for s in &info.steps {
                if !out.contains(s) {
                    out.push(s.clone());
                }
            }
        }
        Annotated::Product { args } | Annotated::UnionFin { args } => {
            args.iter().for_each(|x| base_steps(x, out));
        }
        Annotated::UnionOmega { components, .. } => {
            components.iter().for_each(|(x, _)| base_steps(x, out));
        }
    }
}

fn label(p: &Product) -> String {
    p.iter()
        .map(|a| a.label.as_str())
        .collect::<Vec<_>>()
        .join(" × ")
}

fn family_name(f: Family) -> &'static str {
    match f {
        Family::Linear => "linear orders",
        Family::RootedFmd => "rooted FMD trees",
        Family::InitiallyFinite => "initially finite trees",
    }
}

fn common_family<'a>(atoms: impl Iterator<Item = &'a Atom> + Clone) -> Option<Family> {
    [Family::Linear, Family::RootedFmd, Family::InitiallyFinite]
        .into_iter()
        .find(|f| atoms.clone().all(|a| a.families.contains(f)))
}

/// The dichotomy for products and finite unions within one certified class.
fn dichotomy<'a>(atoms: impl Iterator<Item = &'a Atom> + Clone) -> VcClass {
    if atoms.clone().any(|a| a.class == VcClass::Continuum) {
        VcClass::Continuum
    } else if atoms.clone().any(|a| a.class == VcClass::Unknown) {
        VcClass::Unknown
    } else {
        VcClass::One
    }
}

fn refuse_mixed<'a>(atoms: impl Iterator<Item = &'a Atom>) -> Error {
    let names: Vec<&str> = atoms.map(|a| a.label.as_str()).collect();
    Error::NoApplicableTheorem(format!(
        "the bases {} do not all belong to one certified class",
        names.join(", ")
    ))
}

fn classify_finite_union(
    products: &[Product],
    mut trace: Vec<TraceStep>,
) -> Result<Classification> {
    trace.push(TraceStep::new(
        Rule::NormalForm,
        "expression",
        format!("{} union component(s)", products.len()),
    ));
    let atoms = || products.iter().flatten();
    if atoms().all(|a| a.finite) {
        trace.push(TraceStep::concludes(Rule::R0, "expression", VcClass::Zero));
        return Ok(Classification {
            class: VcClass::Zero,
            trace,
        });
    }
    if let Some(p) = products.iter().find(|p| {
        p.len() == 1 && p[0].class == VcClass::Continuum && p[0].finite_diameter == Some(true)
    }) {
        trace.push(TraceStep::concludes(Rule::R4, label(p), VcClass::Continuum));
        return Ok(Classification {
            class: VcClass::Continuum,
            trace,
        });
    }
    let family = common_family(atoms()).ok_or_else(|| refuse_mixed(atoms()))?;
    let class = dichotomy(atoms());
    trace.push(TraceStep::concludes(
        Rule::R1,
        format!("expression over {}", family_name(family)),
        class,
    ));
    Ok(Classification { class, trace })
}

fn classify_omega(
    components: &[(Annotated, Multiplicity)],
    schema: Option<Schema>,
    mut trace: Vec<TraceStep>,
) -> Result<Classification> {
    let mut products: Vec<Product> = Vec::new();
    for (c, _) in components {
        products.extend(normal_form(c)?);
    }
    trace.push(TraceStep::new(
        Rule::NormalForm,
        "countable union",
        format!(
            "{} component expression(s){}",
            products.len(),
            if schema.is_some() {
                " plus every finite chain"
            } else {
                ""
            }
        ),
    ));
    let done = |class, trace| Ok(Classification { class, trace });
    let all_linear = products
        .iter()
        .all(|p| p.len() == 1 && p[0].families.contains(&Family::Linear));
    if all_linear {
        let subject = "countable union of linear orders";
        let class = if products.iter().any(|p| p[0].class == VcClass::Continuum) || schema.is_some()
        {
            VcClass::Continuum
        } else if products.iter().any(|p| p[0].class == VcClass::Unknown) {
            VcClass::Unknown
        } else {
            VcClass::One
        };
        let mut step = TraceStep::concludes(Rule::R2, subject, class);
        if schema.is_some() && class == VcClass::Continuum {
            step.subject = format!("{subject} with infinitely many order types");
        }
        trace.push(step);
        return done(class, trace);
    }
    let mut classes = Vec::with_capacity(products.len());
    for p in &products {
        let class = if p.iter().all(|a| a.finite) {
            VcClass::Zero
        } else {
            common_family(p.iter()).ok_or_else(|| refuse_mixed(p.iter()))?;
            dichotomy(p.iter())
        };
        classes.push(class);
    }
    if let Some(i) = (0..products.len()).find(|&i| {
        classes[i] == VcClass::Continuum
            && products[i].iter().all(|a| a.finite_diameter == Some(true))
    }) {
        if products[i].len() > 1 {
            trace.push(TraceStep::concludes(
                Rule::R1,
                label(&products[i]),
                VcClass::Continuum,
            ));
        }
        trace.push(TraceStep::concludes(
            Rule::R4,
            label(&products[i]),
            VcClass::Continuum,
        ));
        return done(VcClass::Continuum, trace);
    }
    if schema.is_some() || classes.contains(&VcClass::Continuum) {
        return Err(Error::NoApplicableTheorem(
            "countable union of connected structures with no component forcing continuum many models".into(),
        ));
    }
    let class = if classes.contains(&VcClass::Unknown) {
        VcClass::Unknown
    } else {
        VcClass::One
    };
    trace.push(TraceStep::concludes(
        Rule::R3,
        "countable union of connected structures",
        class,
    ));
    done(class, trace)
}

/// Classifies an expression by the number of countable models of its theory.
pub fn classify(e: &StructExpr) -> Result<Classification> {
    let ann = validate(e)?;
    let mut trace = Vec::new();
    base_steps(&ann, &mut trace);
    match &ann {
        Annotated::UnionOmega { components, schema } => classify_omega(components, *schema, trace),
        _ => classify_finite_union(&normal_form(&ann)?, trace),
    }
}

/// Whether the theory is finitely axiomatisable, for unions of linear
/// orders with one countable model: exactly when there are finitely many
/// components.
pub fn finitely_axiomatizable(e: &StructExpr) -> Axiomatizability {
    let Ok(c) = classify(e) else {
        return Axiomatizability::NotApplicable;
    };
    if c.class != VcClass::One {
        return Axiomatizability::NotApplicable;
    }
    let Ok(ann) = validate(e) else {
        return Axiomatizability::NotApplicable;
    };
    let linear = |ps: &[Product]| {
        ps.iter()
            .all(|p| p.len() == 1 && p[0].families.contains(&Family::Linear))
    };
    match &ann {
        Annotated::UnionOmega { components, .. } => {
            let mut ps = Vec::new();
            for (c, _) in components {
                match normal_form(c) {
                    Ok(nf) => ps.extend(nf),
                    Err(_) => return Axiomatizability::NotApplicable,
                }
            }
            if linear(&ps) {
                Axiomatizability::False
            } else {
                Axiomatizability::NotApplicable
            }
        }
        _ => match normal_form(&ann) {
            Ok(ps) if linear(&ps) => Axiomatizability::True,
            _ => Axiomatizability::NotApplicable,
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::decl::{BaseDecl, BaseKind, PartDecl};
    use crate::kernel::{chain, direct_product};
    use crate::ordertype::OtTerm;

    fn eta() -> StructExpr {
        StructExpr::base(BaseDecl::linear("eta", OtTerm::eta()))
    }

    fn last_rule(c: &Classification) -> Rule {
        c.trace.last().unwrap().rule
    }

    #[test]
    fn goldens() {
        let c = classify(&StructExpr::all_finite_chains()).unwrap();
        assert_eq!((c.class, last_rule(&c)), (VcClass::Continuum, Rule::R2));

        let c = classify(&StructExpr::union_omega(vec![eta()])).unwrap();
        assert_eq!((c.class, last_rule(&c)), (VcClass::One, Rule::R2));

        let c = classify(&StructExpr::product(vec![eta(), eta()])).unwrap();
        assert_eq!((c.class, last_rule(&c)), (VcClass::One, Rule::R1));

        let c = classify(&StructExpr::base(BaseDecl::finite("c3", chain(3)))).unwrap();
        assert_eq!((c.class, last_rule(&c)), (VcClass::Zero, Rule::R0));

        let wild = BaseDecl::declared_linear("wild", VcClass::Continuum).with_finite_diameter(true);
        let odd = BaseDecl::finite("diamond", direct_product(&chain(2), &chain(2)));
        let c = classify(&StructExpr::union(vec![
            StructExpr::base(wild),
            StructExpr::base(odd),
        ]))
        .unwrap();
        assert_eq!((c.class, last_rule(&c)), (VcClass::Continuum, Rule::R4));

        let fan = BaseDecl::rooted_fmd(
            "fan",
            chain(2),
            vec![PartDecl::chain(1), PartDecl::antichain_omega()],
        );
        let c = classify(&StructExpr::base(fan)).unwrap();
        assert_eq!((c.class, last_rule(&c)), (VcClass::One, Rule::R1));
        assert!(c.trace.iter().any(|s| s.rule == Rule::R6));
    }

    #[test]
    fn mixed_classes_are_refused() {
        let diamond = BaseDecl::finite("diamond", direct_product(&chain(2), &chain(2)));
        let e = StructExpr::product(vec![eta(), StructExpr::base(diamond)]);
        assert!(matches!(classify(&e), Err(Error::NoApplicableTheorem(_))));
        let tree = BaseDecl {
            declared_count: Some(VcClass::One),
            ..BaseDecl::new("t", BaseKind::InitiallyFiniteTreeDeclared)
        };
        let fan = BaseDecl::rooted_fmd(
            "fan",
            chain(2),
            vec![PartDecl::chain(1), PartDecl::antichain_omega()],
        );
        let e = StructExpr::product(vec![StructExpr::base(tree), StructExpr::base(fan)]);
        assert!(matches!(classify(&e), Err(Error::NoApplicableTheorem(_))));
    }

    #[test]
    fn nested_countable_union_is_refused() {
        let e = StructExpr::product(vec![eta(), StructExpr::union_omega(vec![eta()])]);
        assert!(matches!(classify(&e), Err(Error::NoApplicableTheorem(_))));
    }

    #[test]
    fn continuum_factor_wins() {
        let wild = StructExpr::base(BaseDecl::declared_linear("wild", VcClass::Continuum));
        let c = classify(&StructExpr::product(vec![eta(), wild])).unwrap();
        assert_eq!((c.class, last_rule(&c)), (VcClass::Continuum, Rule::R1));
    }

    #[test]
    fn unknown_only_from_declarations() {
        let u = StructExpr::base(BaseDecl::declared_linear("u", VcClass::Unknown));
        let c = classify(&StructExpr::union(vec![eta(), u])).unwrap();
        assert_eq!(c.class, VcClass::Unknown);
    }

    #[test]
    fn countable_union_of_trees() {
        let fan = BaseDecl::rooted_fmd(
            "fan",
            chain(2),
            vec![PartDecl::chain(1), PartDecl::antichain_omega()],
        );
        let c = classify(&StructExpr::union_omega(vec![StructExpr::base(fan)])).unwrap();
        assert_eq!((c.class, last_rule(&c)), (VcClass::One, Rule::R3));
    }

    #[test]
    fn axiomatizability() {
        let three = StructExpr::union(vec![
            eta(),
            eta(),
            StructExpr::base(BaseDecl::linear("two", OtTerm::finite(2).unwrap())),
        ]);
        assert_eq!(finitely_axiomatizable(&three), Axiomatizability::True);
        assert_eq!(
            finitely_axiomatizable(&StructExpr::union_omega(vec![eta()])),
            Axiomatizability::False
        );
        assert_eq!(
            finitely_axiomatizable(&StructExpr::product(vec![eta(), eta()])),
            Axiomatizability::NotApplicable
        );
        assert_eq!(
            finitely_axiomatizable(&StructExpr::all_finite_chains()),
            Axiomatizability::NotApplicable
        );
    }
}
