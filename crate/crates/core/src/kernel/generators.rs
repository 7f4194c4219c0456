//! Reflexive encodings of a few standard finite posets.

use super::FinStruct;

/// The one-element reflexive structure.
pub fn point() -> FinStruct {
    chain(1)
}

/// `0 < 1 < … < n−1`.
pub fn chain(n: usize) -> FinStruct {
    FinStruct::from_fn(n, |x, y| x <= y).with_name(format!("C{n}"))
}

pub fn antichain(n: usize) -> FinStruct {
    FinStruct::from_fn(n, |x, y| x == y).with_name(format!("A{n}"))
}

/// Zigzag on `n` points: every odd point lies below its even neighbours,
/// so `fence(5)` is `1<0, 1<2, 3<2, 3<4`.
pub fn fence(n: usize) -> FinStruct {
    FinStruct::from_fn(n, |x, y| {
        x == y || (x % 2 == 1 && (y + 1 == x || y == x + 1))
    })
    .with_name(format!("F{n}"))
}

/// A root (element 0) below `k` pairwise incomparable points.
pub fn fan(k: usize) -> FinStruct {
    FinStruct::from_fn(k + 1, |x, y| x == y || x == 0).with_name(format!("fan{k}"))
}

/// Root with two leaves (the "V" poset).
pub fn binary_fan() -> FinStruct {
    fan(2)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn encodings() {
        assert_eq!(
            chain(3).pairs(),
            vec![(0, 0), (0, 1), (0, 2), (1, 1), (1, 2), (2, 2)]
        );
        assert_eq!(
            fence(5).pairs(),
            vec![
                (0, 0),
                (1, 0),
                (1, 1),
                (1, 2),
                (2, 2),
                (3, 2),
                (3, 3),
                (3, 4),
                (4, 4)
            ]
        );
        assert_eq!(antichain(1), point());
        assert_eq!(chain(0).size(), 0);
        assert_eq!(
            binary_fan().pairs(),
            vec![(0, 0), (0, 1), (0, 2), (1, 1), (2, 2)]
        );
    }
}
