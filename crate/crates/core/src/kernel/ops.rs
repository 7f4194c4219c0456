//! Direct products, disjoint unions and lexicographic sums.

use super::FinStruct;
use crate::error::{Error, Result};

/// Componentwise product. The pair `(x, y)` gets index `x * b.size() + y`.
pub fn direct_product(a: &FinStruct, b: &FinStruct) -> FinStruct {
    let m = b.size();
    FinStruct::from_fn(a.size() * m, |p, q| {
        a.related(p / m, q / m) && b.related(p % m, q % m)
    })
}

/// Product of a list of structures, folded left to right.
///
/// The empty list gives the one-point reflexive structure, the unit of the
/// product up to isomorphism.
pub fn product_of(factors: &[FinStruct]) -> FinStruct {
    let mut iter = factors.iter();
    match iter.next() {
        None => super::generators::point(),
        Some(first) => iter.fold(first.clone(), |acc, f| direct_product(&acc, f)),
    }
}

/// Disjoint union; `b` is shifted by `a.size()`.
pub fn disjoint_union(a: &FinStruct, b: &FinStruct) -> FinStruct {
    let n = a.size();
    FinStruct::from_fn(n + b.size(), |x, y| match (x < n, y < n) {
        (true, true) => a.related(x, y),
        (false, false) => b.related(x - n, y - n),
        _ => false,
    })
}

/// Disjoint union of a list, in order.
pub fn union_of(parts: &[FinStruct]) -> FinStruct {
    parts.iter().fold(FinStruct::empty_relation(0), |acc, p| {
        disjoint_union(&acc, p)
    })
}

/// Lexicographic sum of `parts` over `index`.
///
/// Elements of part `i` come before elements of part `i + 1`. Two elements
/// in different parts `i != j` are related iff `index` relates `i` to `j`;
/// the diagonal of `index` plays no role.
pub fn lex_sum(index: &FinStruct, parts: &[FinStruct]) -> Result<FinStruct> {
    if parts.len() != index.size() {
        return Err(Error::input(format!(
            "lexicographic sum needs {} parts, got {}",
            index.size(),
            parts.len()
        )));
    }
    let mut owner = Vec::new();
    let mut local = Vec::new();
    for (i, p) in parts.iter().enumerate() {
        for x in 0..p.size() {
            owner.push(i);
            local.push(x);
        }
    }
    Ok(FinStruct::from_fn(owner.len(), |x, y| {
        let (i, j) = (owner[x], owner[y]);
        if i == j {
            parts[i].related(local[x], local[y])
        } else {
            index.related(i, j)
        }
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::generators::{antichain, chain, point};

    #[test]
    fn chain_square_is_the_diamond() {
        let d = direct_product(&chain(2), &chain(2));
        // (0,0)=0 bottom, (0,1)=1 and (1,0)=2 atoms, (1,1)=3 top
        let expected = FinStruct::from_pairs(
            4,
            &[
                (0, 0),
                (0, 1),
                (0, 2),
                (0, 3),
                (1, 1),
                (1, 3),
                (2, 2),
                (2, 3),
                (3, 3),
            ],
        )
        .unwrap();
        assert_eq!(d, expected);
    }

    #[test]
    fn product_with_point_keeps_the_structure() {
        let x = crate::kernel::generators::fence(5);
        assert_eq!(direct_product(&x, &point()), x);
        assert_eq!(direct_product(&point(), &x), x);
    }

    #[test]
    fn empty_factor_annihilates() {
        let e = FinStruct::empty_relation(0);
        assert!(direct_product(&chain(3), &e).is_empty());
        assert!(direct_product(&e, &chain(3)).is_empty());
    }

    #[test]
    fn union_is_block_diagonal() {
        let u = disjoint_union(&chain(2), &chain(2));
        assert_eq!(u.size(), 4);
        assert_eq!(
            u.pairs(),
            vec![(0, 0), (0, 1), (1, 1), (2, 2), (2, 3), (3, 3)]
        );
        assert_eq!(
            disjoint_union(&chain(3), &FinStruct::empty_relation(0)),
            chain(3)
        );
        assert_eq!(
            disjoint_union(&FinStruct::empty_relation(0), &chain(3)),
            chain(3)
        );
    }

    #[test]
    fn lex_sum_cases() {
        assert_eq!(
            lex_sum(&antichain(2), &[chain(2), chain(2)]).unwrap(),
            disjoint_union(&chain(2), &chain(2))
        );
        assert_eq!(lex_sum(&chain(2), &[point(), point()]).unwrap(), chain(2));
        let v = lex_sum(&chain(2), &[point(), antichain(2)]).unwrap();
        assert_eq!(v.pairs(), vec![(0, 0), (0, 1), (0, 2), (1, 1), (2, 2)]);
    }

    #[test]
    fn lex_sum_ignores_index_diagonal() {
        let irreflexive = FinStruct::from_pairs(2, &[(0, 1)]).unwrap();
        let parts = [antichain(2), chain(3)];
        assert_eq!(
            lex_sum(&irreflexive, &parts).unwrap(),
            lex_sum(&chain(2), &parts).unwrap()
        );
    }

    #[test]
    fn lex_sum_length_mismatch() {
        assert!(matches!(
            lex_sum(&chain(2), &[point()]),
            Err(Error::Input(_))
        ));
    }
}
