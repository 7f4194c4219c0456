//! Exhaustive and random families of small structures.

use crate::error::Result;
use crate::iso::canonical_form;
use crate::kernel::{is_connected, FinStruct};
use rand::Rng;
use std::collections::BTreeMap;

fn dedup(items: Vec<FinStruct>) -> Result<Vec<FinStruct>> {
    let mut seen = BTreeMap::new();
    for s in items {
        let key = canonical_form(&s)?;
        seen.entry(key).or_insert(s);
    }
    Ok(seen.into_values().collect())
}

/// Extends `s` by a new element whose strict down-set is `below`.
fn add_above(s: &FinStruct, below: &[usize]) -> FinStruct {
    let n = s.size();
    FinStruct::from_fn(n + 1, |x, y| {
        if y == n {
            x == n || below.contains(&x)
        } else {
            x < n && s.related(x, y)
        }
    })
}

/// All posets with exactly `n` elements, one per isomorphism type.
pub fn posets(n: usize) -> Result<Vec<FinStruct>> {
    let mut level = vec![FinStruct::empty_relation(0)];
    for k in 0..n {
        let mut next = Vec::new();
        for p in &level {
            for mask in 0usize..1 << k {
                let set: Vec<usize> = (0..k).filter(|&x| mask >> x & 1 == 1).collect();
                let down_closed = set
                    .iter()
                    .all(|&y| (0..k).all(|x| !p.related(x, y) || mask >> x & 1 == 1));
                if down_closed {
                    next.push(add_above(p, &set));
                }
            }
        }
        level = dedup(next)?;
    }
    Ok(level)
}

/// Trees (every down-set a chain) with exactly `n` elements, optionally
/// only the rooted ones.
pub fn trees(n: usize, rooted: bool) -> Result<Vec<FinStruct>> {
    if n == 0 {
        return Ok(if rooted {
            vec![]
        } else {
            vec![FinStruct::empty_relation(0)]
        });
    }
    let mut level = vec![FinStruct::from_fn(1, |_, _| true)];
    for k in 1..n {
        let mut next = Vec::new();
        for t in &level {
            if !rooted {
                next.push(add_above(t, &[]));
            }
            for x in 0..k {
                let below: Vec<usize> = (0..k).filter(|&y| t.related(y, x)).collect();
                next.push(add_above(t, &below));
            }
        }
        level = dedup(next)?;
    }
    Ok(level)
}

/// A random relation on `n` points, each pair present with probability `p`.
pub fn random_struct(rng: &mut impl Rng, n: usize, p: f64) -> FinStruct {
    FinStruct::from_fn(n, |_, _| rng.gen_bool(p))
}

/// A random reflexive connected structure on `n` points.
pub fn random_connected(rng: &mut impl Rng, n: usize) -> FinStruct {
    loop {
        let s = FinStruct::from_fn(n, |x, y| x == y || rng.gen_bool(0.4));
        if is_connected(&s) {
            return s;
        }
    }
}

/// A uniformly random relabelling of `s`.
pub fn shuffled(rng: &mut impl Rng, s: &FinStruct) -> FinStruct {
    use rand::seq::SliceRandom;
    let mut perm: Vec<usize> = (0..s.size()).collect();
    perm.shuffle(rng);
    s.relabel(&perm).expect("permutation")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn poset_counts() {
        // unlabelled posets: 1, 1, 2, 5, 16, 63
        let counts: Vec<usize> = (0..=5).map(|n| posets(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 5, 16, 63]);
    }

    #[test]
    fn tree_counts() {
        // rooted trees 1, 1, 2, 4 and rooted forests 1, 2, 4, 9
        let rooted: Vec<usize> = (1..=4).map(|n| trees(n, true).unwrap().len()).collect();
        assert_eq!(rooted, vec![1, 1, 2, 4]);
        let forests: Vec<usize> = (1..=4).map(|n| trees(n, false).unwrap().len()).collect();
        assert_eq!(forests, vec![1, 2, 4, 9]);
    }
}
