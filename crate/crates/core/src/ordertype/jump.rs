//! Maximal finite blocks of consecutive elements.
//!
//! A block of `m` consecutive elements whose first element has no immediate
//! predecessor and whose last has no immediate successor is an
//! `(m-1)`-jump.

use super::term::{Node, OtTerm};
use std::collections::BTreeSet;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Blocks {
    /// The whole order is a finite chain of this length.
    Finite(usize),
    Infinite {
        /// Size of the block holding the least element, if there is one.
        first: Option<usize>,
        /// Size of the block holding the greatest element, if there is one.
        last: Option<usize>,
        /// Sizes of all other maximal blocks.
        inner: BTreeSet<usize>,
    },
}

impl Blocks {
    fn then(self, next: Blocks) -> Blocks {
        use Blocks::*;
        match (self, next) {
            (Finite(a), Finite(b)) => Finite(a + b),
            (Finite(a), Infinite { first, last, inner }) => Infinite {
                first: Some(a + first.unwrap_or(0)),
                last,
                inner,
            },
            (Infinite { first, last, inner }, Finite(b)) => Infinite {
                first,
                last: Some(last.unwrap_or(0) + b),
                inner,
            },
            (
                Infinite {
                    first,
                    last: l1,
                    mut inner,
                },
                Infinite {
                    first: f2,
                    last,
                    inner: i2,
                },
            ) => {
                inner.extend(i2);
                match (l1, f2) {
                    (None, None) => {}
                    (a, b) => {
                        inner.insert(a.unwrap_or(0) + b.unwrap_or(0));
                    }
                }
                Infinite { first, last, inner }
            }
        }
    }

    fn all(&self) -> BTreeSet<usize> {
        match self {
            Blocks::Finite(n) => [*n].into(),
            Blocks::Infinite { first, last, inner } => {
                let mut out = inner.clone();
                out.extend(first.iter().chain(last));
                out
            }
        }
    }
}

fn blocks(t: &OtTerm) -> Blocks {
    match t.node() {
        Node::One => Blocks::Finite(1),
        Node::Sum(parts) => {
            let mut it = parts.iter().map(blocks);
            let first = it.next().unwrap();
            it.fold(first, Blocks::then)
        }
        // every copy of a member is cut off on both sides by density
        Node::Shuffle(members) => Blocks::Infinite {
            first: None,
            last: None,
            inner: members.iter().flat_map(|m| blocks(m).all()).collect(),
        },
    }
}

/// Sizes of the maximal blocks of consecutive elements of the denoted order.
pub fn block_sizes(t: &OtTerm) -> BTreeSet<usize> {
    blocks(t).all()
}

/// Does the denoted order contain a `k`-jump, i.e. a maximal block of
/// exactly `k + 1` consecutive elements?
pub fn has_jump(t: &OtTerm, k: usize) -> bool {
    block_sizes(t).contains(&(k + 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let eta = OtTerm::eta();
        assert!(has_jump(&eta, 0));
        assert!(!has_jump(&eta, 1));
        assert!(has_jump(&OtTerm::finite(2).unwrap(), 1));
        assert!(!has_jump(&OtTerm::finite(2).unwrap(), 0));
    }

    #[test]
    fn seams_merge() {
        // 1 + σ{1+1} + 1 + 1 + σ{1}: blocks 1, 2 and 2
        let t = OtTerm::sum_all([
            OtTerm::one(),
            OtTerm::shuffle([OtTerm::finite(2).unwrap()]),
            OtTerm::finite(2).unwrap(),
            OtTerm::eta(),
        ])
        .unwrap();
        assert_eq!(block_sizes(&t), [1, 2].into());
        // σ{1} + 1 + σ{1 + 1 + 1}
        let t = OtTerm::sum_all([
            OtTerm::eta(),
            OtTerm::one(),
            OtTerm::shuffle([OtTerm::finite(3).unwrap()]),
        ])
        .unwrap();
        assert_eq!(block_sizes(&t), [1, 3].into());
    }
}
