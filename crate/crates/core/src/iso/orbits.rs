use super::IsoEngine;
use crate::error::{Error, Result};
use crate::kernel::FinStruct;
use serde::Serialize;

/// Number of automorphism orbits on k-tuples, for k = 1..=K.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitProfile {
    pub counts: Vec<usize>,
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

pub(crate) fn orbit_profile(
    engine: &IsoEngine,
    a: &FinStruct,
    max_k: usize,
) -> Result<OrbitProfile> {
    let n = a.size();
    let too_many = || {
        Error::resource(format!(
            "{n}^{max_k} tuples exceed the budget of {}",
            engine.budget.max_tuples
        ))
    };
    let total = (n as u128).checked_pow(max_k as u32).ok_or_else(too_many)?;
    if total > engine.budget.max_tuples as u128 {
        return Err(too_many());
    }
    let auts = engine.automorphisms(a)?;
    let mut counts = Vec::with_capacity(max_k);
    for k in 1..=max_k {
        let tuples = n.pow(k as u32);
        let mut parent: Vec<usize> = (0..tuples).collect();
        let mut digits = vec![0usize; k];
        // the identity contributes nothing
        for g in auts.iter().skip(1) {
            for t in 0..tuples {
                let mut rest = t;
                for d in digits.iter_mut().rev() {
                    *d = rest % n;
                    rest /= n;
                }
                let image = digits.iter().fold(0, |acc, &d| acc * n + g[d]);
                let (rt, ri) = (find(&mut parent, t), find(&mut parent, image));
                if rt != ri {
                    parent[rt.max(ri)] = rt.min(ri);
                }
            }
        }
        counts.push((0..tuples).filter(|&t| find(&mut parent, t) == t).count());
    }
    Ok(OrbitProfile { counts })
}

#[cfg(test)]
mod tests {
    use crate::iso::orbit_profile;
    use crate::kernel::{antichain, chain, point};

    #[test]
    fn small_profiles() {
        assert_eq!(orbit_profile(&antichain(3), 2).unwrap().counts, vec![1, 2]);
        assert_eq!(orbit_profile(&chain(3), 2).unwrap().counts, vec![3, 9]);
        assert_eq!(orbit_profile(&point(), 3).unwrap().counts, vec![1, 1, 1]);
    }

    #[test]
    fn tuple_budget() {
        assert!(orbit_profile(&chain(40), 6).is_err());
    }
}
