//! Rank, predecessors and level-by-level enumeration of terms.

use super::term::{Node, OtTerm};
use crate::error::{Error, Result};
use std::collections::BTreeSet;

/// Ranks of every contiguous run of summands, `r[i][j]` for `parts[i..=j]`.
fn run_ranks(parts: &[OtTerm]) -> Vec<Vec<usize>> {
    let k = parts.len();
    let mut r = vec![vec![0; k]; k];
    for i in 0..k {
        r[i][i] = rank(&parts[i]);
    }
    for len in 2..=k {
        for i in 0..=k - len {
            let j = i + len - 1;
            r[i][j] = 1 + (i..j).map(|s| r[i][s].max(r[s + 1][j])).min().unwrap();
        }
    }
    r
}

/// Least `n` with the term in level `n`, where level 0 is `{1}` and level
/// `n+1` adds all sums of two and all shuffles of level-`n` terms.
/// A flattened sum may be split at any point.
pub fn rank(t: &OtTerm) -> usize {
    match t.node() {
        Node::One => 0,
        Node::Sum(parts) => run_ranks(parts)[0][parts.len() - 1],
        Node::Shuffle(m) => 1 + m.iter().map(rank).max().unwrap(),
    }
}

/// Predecessors, collected over the decompositions of the term itself whose
/// pieces have rank below the term's rank.
pub fn pred(t: &OtTerm) -> BTreeSet<OtTerm> {
    let mut out = BTreeSet::new();
    match t.node() {
        Node::One => {}
        Node::Sum(parts) => {
            let r = run_ranks(parts);
            let k = parts.len();
            let below = r[0][k - 1] - 1;
            for s in 0..k - 1 {
                if r[0][s] > below || r[s + 1][k - 1] > below {
                    continue;
                }
                for piece in [&parts[..=s], &parts[s + 1..]] {
                    let p = OtTerm::sum_all(piece.iter().cloned()).unwrap();
                    out.extend(pred(&p));
                    out.insert(p);
                }
            }
        }
        Node::Shuffle(m) => {
            for s in m {
                out.insert(s.clone());
                out.extend(pred(s));
            }
        }
    }
    out
}

/// All normalised terms of rank at most `n`. Levels are cumulative.
pub fn enum_c(n: usize) -> Result<BTreeSet<OtTerm>> {
    if n > 3 {
        return Err(Error::resource("term enumeration is limited to rank 3"));
    }
    let mut level: BTreeSet<OtTerm> = [OtTerm::one()].into();
    for _ in 0..n {
        let cur: Vec<OtTerm> = level.iter().cloned().collect();
        let mut next = level.clone();
        for a in &cur {
            for b in &cur {
                next.insert(OtTerm::sum(a, b));
            }
        }
        let k = cur.len();
        for mask in 1u64..(1u64 << k) {
            let members = (0..k)
                .filter(|&i| mask >> i & 1 == 1)
                .map(|i| cur[i].clone());
            next.insert(OtTerm::shuffle(members));
        }
        level = next;
    }
    Ok(level)
}
