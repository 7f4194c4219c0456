//! Order-theoretic predicates and the poset-only constructions built on them.

use super::FinStruct;
use crate::error::{Error, Result};

pub fn is_reflexive(a: &FinStruct) -> bool {
    (0..a.size()).all(|x| a.related(x, x))
}

pub fn is_antisymmetric(a: &FinStruct) -> bool {
    let n = a.size();
    (0..n).all(|x| (x + 1..n).all(|y| !(a.related(x, y) && a.related(y, x))))
}

pub fn is_transitive(a: &FinStruct) -> bool {
    let n = a.size();
    for x in 0..n {
        for y in a.successors(x) {
            for z in a.successors(y) {
                if !a.related(x, z) {
                    return false;
                }
            }
        }
    }
    true
}

/// Reflexive, antisymmetric and transitive.
pub fn is_poset(a: &FinStruct) -> bool {
    is_reflexive(a) && is_antisymmetric(a) && is_transitive(a)
}

pub fn is_linear(a: &FinStruct) -> bool {
    let n = a.size();
    is_poset(a) && (0..n).all(|x| (0..n).all(|y| a.related(x, y) || a.related(y, x)))
}

pub fn is_antichain(a: &FinStruct) -> bool {
    let n = a.size();
    is_poset(a) && (0..n).all(|x| (0..n).all(|y| x == y || !a.related(x, y)))
}

/// The principal down-set `(−∞, x]`, ascending.
pub fn down_set(a: &FinStruct, x: usize) -> Vec<usize> {
    (0..a.size()).filter(|&y| a.related(y, x)).collect()
}

pub(crate) fn is_chain_set(a: &FinStruct, set: &[usize]) -> bool {
    set.iter()
        .all(|&u| set.iter().all(|&w| a.related(u, w) || a.related(w, u)))
}

/// A poset in which every principal down-set is a chain.
pub fn is_tree(a: &FinStruct) -> bool {
    is_poset(a) && (0..a.size()).all(|x| is_chain_set(a, &down_set(a, x)))
}

fn require_poset(a: &FinStruct, op: &str) -> Result<()> {
    if is_poset(a) {
        Ok(())
    } else {
        Err(Error::precondition(format!(
            "{op} requires a partial order"
        )))
    }
}

/// `x ∥ y` iff `x ≤ y` or `y ≤ x`.
pub fn comparability(a: &FinStruct) -> Result<FinStruct> {
    require_poset(a, "comparability")?;
    Ok(FinStruct::from_fn(a.size(), |x, y| {
        a.related(x, y) || a.related(y, x)
    }))
}

/// `x` and `y` are compatible iff some `z` lies below both.
pub fn compatibility(a: &FinStruct) -> Result<FinStruct> {
    require_poset(a, "compatibility")?;
    let n = a.size();
    Ok(FinStruct::from_fn(n, |x, y| {
        (0..n).any(|z| a.related(z, x) && a.related(z, y))
    }))
}

/// The global minimum, if any.
pub fn root(a: &FinStruct) -> Result<Option<usize>> {
    require_poset(a, "root")?;
    let n = a.size();
    Ok((0..n).find(|&r| (0..n).all(|x| a.related(r, x))))
}

/// The substructure left after removing the root.
pub fn strip_root(a: &FinStruct) -> Result<FinStruct> {
    let r = root(a)?.ok_or_else(|| Error::precondition("strip_root requires a root"))?;
    let rest: Vec<usize> = (0..a.size()).filter(|&x| x != r).collect();
    Ok(a.induced(&rest))
}
