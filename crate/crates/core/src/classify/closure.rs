//! Enumeration of the closure of a basis under products and unions.

use super::decl::{BaseDecl, StructExpr};
use super::engine::{classify, Classification};
use crate::error::{Error, Result};
use std::collections::BTreeMap;

const MAX_EXPRESSIONS: usize = 200_000;

/// A finite union of products of basis indices, each level sorted.
type NormalForm = Vec<Vec<usize>>;

/// One member of the closure and its classification.
#[derive(Clone, Debug)]
pub struct ClosureItem {
    /// Level of the tower at which the expression first appears.
    pub level: usize,
    pub expr: StructExpr,
    pub outcome: Result<Classification>,
}

fn union(a: &NormalForm, b: &NormalForm) -> NormalForm {
    let mut out: NormalForm = a.iter().chain(b).cloned().collect();
    out.sort();
    out
}

fn product(a: &NormalForm, b: &NormalForm) -> NormalForm {
    let mut out: NormalForm = a
        .iter()
        .flat_map(|p| {
            b.iter().map(move |q| {
                let mut r: Vec<usize> = p.iter().chain(q).copied().collect();
                r.sort_unstable();
                r
            })
        })
        .collect();
    out.sort();
    out
}

fn to_expr(basis: &[BaseDecl], nf: &NormalForm) -> StructExpr {
    let prod = |p: &Vec<usize>| {
        let mut args: Vec<StructExpr> = p
            .iter()
            .map(|&i| StructExpr::base(basis[i].clone()))
            .collect();
        if args.len() == 1 {
            args.pop().unwrap()
        } else {
            StructExpr::product(args)
        }
    };
    if nf.len() == 1 {
        prod(&nf[0])
    } else {
        StructExpr::union(nf.iter().map(prod).collect())
    }
}

/// Members of the tower `K₀ = basis`, `Kₙ₊₁ = Kₙ ∪ {x × y, x ⊍ y : x, y ∈ Kₙ}`
/// up to level `depth`, identified up to reordering of factors and union
/// components, in order of first appearance and then of normal form.
pub fn closure_enumerate(basis: &[BaseDecl], depth: usize) -> Result<Vec<ClosureItem>> {
    if depth > 3 {
        return Err(Error::resource("closure enumeration is limited to depth 3"));
    }
    let mut seen: BTreeMap<NormalForm, usize> =
        (0..basis.len()).map(|i| (vec![vec![i]], 0)).collect();
    let mut level: Vec<NormalForm> = seen.keys().cloned().collect();
    for d in 1..=depth {
        let mut next = Vec::new();
        for a in &level {
            for b in &level {
                for nf in [product(a, b), union(a, b)] {
                    if !seen.contains_key(&nf) {
                        seen.insert(nf.clone(), d);
                        next.push(nf);
                    }
                }
            }
            if seen.len() > MAX_EXPRESSIONS {
                return Err(Error::resource(format!(
                    "closure exceeds {MAX_EXPRESSIONS} expressions"
                )));
            }
        }
        level.extend(next);
    }
    let mut items: Vec<(usize, NormalForm)> = seen.into_iter().map(|(nf, d)| (d, nf)).collect();
    items.sort();
    Ok(items
        .into_iter()
        .map(|(level, nf)| {
            let expr = to_expr(basis, &nf);
            let outcome = classify(&expr);
            ClosureItem {
                level,
                expr,
                outcome,
            }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::decl::VcClass;
    use crate::kernel::chain;

    fn basis() -> Vec<BaseDecl> {
        vec![
            BaseDecl::finite("1", chain(1)),
            BaseDecl::finite("2", chain(2)),
        ]
    }

    #[test]
    fn depth_zero_is_the_basis() {
        let items = closure_enumerate(&basis(), 0).unwrap();
        assert_eq!(items.len(), 2);
        assert_eq!(items[0].expr, StructExpr::base(basis()[0].clone()));
    }

    #[test]
    fn depth_one() {
        let b = basis();
        let items = closure_enumerate(&b, 1).unwrap();
        let exprs: Vec<&StructExpr> = items.iter().map(|i| &i.expr).collect();
        let base = |i: usize| StructExpr::base(b[i].clone());
        assert!(exprs.contains(&&base(0)));
        assert!(exprs.contains(&&base(1)));
        assert!(exprs.contains(&&StructExpr::product(vec![base(0), base(1)])));
        assert!(exprs.contains(&&StructExpr::union(vec![base(0), base(1)])));
        // 2 bases, 3 products, 3 unions
        assert_eq!(items.len(), 8);
        assert!(items
            .iter()
            .all(|i| i.outcome.as_ref().unwrap().class == VcClass::Zero));
    }
}
