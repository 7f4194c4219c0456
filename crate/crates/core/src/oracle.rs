//! Brute-force reference implementations used to check the fast paths.
//!
//! Everything here is exhaustive and only meant for small inputs.

use crate::kernel::FinStruct;
use crate::ordertype::{Node, OtTerm};
use std::collections::{BTreeSet, HashMap};

/// Every permutation of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    loop {
        out.push(p.clone());
        let Some(i) = (1..n).rev().find(|&i| p[i - 1] < p[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| p[j] > p[i - 1]).unwrap();
        p.swap(i - 1, j);
        p[i..].reverse();
    }
}

fn preserves(a: &FinStruct, b: &FinStruct, m: &[usize]) -> bool {
    let n = a.size();
    (0..n).all(|x| (0..n).all(|y| a.related(x, y) == b.related(m[x], m[y])))
}

/// An isomorphism found by trying every permutation.
pub fn brute_iso(a: &FinStruct, b: &FinStruct) -> Option<Vec<usize>> {
    if a.size() != b.size() || a.pair_count() != b.pair_count() {
        return None;
    }
    permutations(a.size())
        .into_iter()
        .find(|m| preserves(a, b, m))
}

pub fn brute_automorphisms(a: &FinStruct) -> Vec<Vec<usize>> {
    permutations(a.size())
        .into_iter()
        .filter(|m| preserves(a, a, m))
        .collect()
}

/// The least relabelled relation matrix over all permutations.
pub fn brute_canonical(a: &FinStruct) -> Vec<bool> {
    permutations(a.size())
        .into_iter()
        .map(|m| a.relabel(&m).unwrap().matrix_bits())
        .min()
        .unwrap_or_default()
}

/// Least equivalence relation containing the relation, via union–find.
pub fn union_find_rst(a: &FinStruct) -> FinStruct {
    let n = a.size();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            x = p[x];
        }
        x
    }
    for (x, y) in a.pairs() {
        let (rx, ry) = (find(&mut parent, x), find(&mut parent, y));
        if rx != ry {
            parent[rx] = ry;
        }
    }
    let roots: Vec<usize> = (0..n).map(|x| find(&mut parent, x)).collect();
    FinStruct::from_fn(n, |x, y| roots[x] == roots[y])
}

/// Orbits of k-tuples under the brute-force automorphism group.
pub fn brute_tuple_orbits(a: &FinStruct, k: usize) -> usize {
    let n = a.size();
    let auts = brute_automorphisms(a);
    let total = n.pow(k as u32);
    let decode = |mut t: usize| {
        let mut v = vec![0; k];
        for d in v.iter_mut().rev() {
            *d = t % n;
            t /= n;
        }
        v
    };
    let mut seen = vec![false; total];
    let mut orbits = 0;
    for t in 0..total {
        if seen[t] {
            continue;
        }
        orbits += 1;
        let tup = decode(t);
        for g in &auts {
            let img = tup.iter().fold(0, |acc, &x| acc * n + g[x]);
            seen[img] = true;
        }
    }
    orbits
}

/// Size of a maximum matching between `left` and `right` using only
/// allowed pairs (augmenting paths).
pub fn max_matching(
    left: &[usize],
    right: &[usize],
    allowed: impl Fn(usize, usize) -> bool,
) -> usize {
    let mut owner: Vec<Option<usize>> = vec![None; right.len()];
    fn augment(
        l: usize,
        left: &[usize],
        right: &[usize],
        allowed: &dyn Fn(usize, usize) -> bool,
        owner: &mut [Option<usize>],
        seen: &mut [bool],
    ) -> bool {
        for r in 0..right.len() {
            if seen[r] || !allowed(left[l], right[r]) {
                continue;
            }
            seen[r] = true;
            if owner[r].is_none_or(|o| augment(o, left, right, allowed, owner, seen)) {
                owner[r] = Some(l);
                return true;
            }
        }
        false
    }
    (0..left.len())
        .filter(|&l| {
            let mut seen = vec![false; right.len()];
            augment(l, left, right, &allowed, &mut owner, &mut seen)
        })
        .count()
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Item {
    Point,
    Gap,
}

fn skeleton(t: &OtTerm, out: &mut Vec<Item>) {
    match t.node() {
        Node::One => out.push(Item::Point),
        Node::Sum(parts) => parts.iter().for_each(|p| skeleton(p, out)),
        Node::Shuffle(members) => {
            for m in members {
                for _ in 0..2 {
                    out.push(Item::Gap);
                    skeleton(m, out);
                }
            }
            out.push(Item::Gap);
        }
    }
}

/// Block sizes read off a flat skeleton in which every shuffle is replaced
/// by dense gaps around two copies of each member.
pub fn jump_sizes_by_expansion(t: &OtTerm) -> BTreeSet<usize> {
    let mut items = Vec::new();
    skeleton(t, &mut items);
    items
        .split(|&i| i == Item::Gap)
        .map(<[Item]>::len)
        .filter(|&l| l > 0)
        .collect()
}

/// Checks the defining property of a monomorphic decomposition directly:
/// every two subsets with the same number of points in each block induce
/// isomorphic substructures.
pub fn is_monomorphic_decomposition(a: &FinStruct, labels: &[usize]) -> bool {
    let n = a.size();
    let mut keys: HashMap<Vec<usize>, Vec<bool>> = HashMap::new();
    let k = labels.iter().max().map_or(0, |m| m + 1);
    for mask in 0usize..1 << n {
        let elems: Vec<usize> = (0..n).filter(|&x| mask >> x & 1 == 1).collect();
        let mut trace = vec![0; k];
        for &x in &elems {
            trace[labels[x]] += 1;
        }
        let key = brute_canonical(&a.induced(&elems));
        match keys.get(&trace) {
            Some(prev) if *prev != key => return false,
            Some(_) => {}
            None => {
                keys.insert(trace, key);
            }
        }
    }
    true
}

/// All partitions of `0..k` as restricted growth strings.
pub fn set_partitions(k: usize) -> Vec<Vec<usize>> {
    fn go(i: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == cur.len() {
            out.push(cur.clone());
            return;
        }
        let top = if i == 0 { 0 } else { max + 1 };
        for v in 0..=top {
            cur[i] = v;
            go(i + 1, max.max(v), cur, out);
        }
    }
    let mut out = Vec::new();
    go(0, 0, &mut vec![0; k], &mut out);
    out
}

/// Classical threshold for finite chains: `m ≡ₙ k` iff they are equal or
/// both have at least `2ⁿ − 1` elements.
pub fn chain_threshold(m: usize, k: usize, n: u32) -> bool {
    m == k || m.min(k) >= (1usize << n) - 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{antichain, chain};

    #[test]
    fn permutation_count() {
        assert_eq!(permutations(4).len(), 24);
        assert_eq!(permutations(0), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn matching() {
        assert_eq!(max_matching(&[0, 1], &[2, 3], |_, _| true), 2);
        assert_eq!(max_matching(&[0, 1], &[2, 3], |_, r| r == 2), 1);
    }

    #[test]
    fn skeleton_blocks() {
        let t = OtTerm::sum(&OtTerm::finite(2).unwrap(), &OtTerm::eta());
        assert_eq!(jump_sizes_by_expansion(&t), [1, 2].into());
    }

    #[test]
    fn orbits() {
        assert_eq!(brute_tuple_orbits(&antichain(3), 2), 2);
        assert_eq!(brute_tuple_orbits(&chain(3), 2), 9);
    }

    #[test]
    fn partitions_of_three() {
        assert_eq!(set_partitions(3).len(), 5);
    }
}
