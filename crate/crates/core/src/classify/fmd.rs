//! Minimal monomorphic decomposition of small finite posets.

use super::decl::PartDecl;
use crate::error::{Error, Result};
use crate::iso::canonical_form;
use crate::kernel::{is_antichain, is_linear, is_poset, FinStruct, Partition};
use std::collections::HashMap;

const MAX_SIZE: usize = 8;

/// Blocks, the structure induced on one representative per block, and the
/// shape of every block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FmdDecomposition {
    pub partition: Partition,
    pub quotient: FinStruct,
    pub shapes: Vec<PartDecl>,
}

/// Isomorphism keys of the substructures induced on every subset.
struct SubsetKeys {
    n: usize,
    keys: Vec<Vec<u8>>,
}

impl SubsetKeys {
    fn new(a: &FinStruct) -> Result<Self> {
        let n = a.size();
        let mut keys = Vec::with_capacity(1 << n);
        for mask in 0usize..1 << n {
            let elems: Vec<usize> = (0..n).filter(|&x| mask >> x & 1 == 1).collect();
            keys.push(canonical_form(&a.induced(&elems))?);
        }
        Ok(SubsetKeys { n, keys })
    }

    /// Do equal block counts force isomorphic substructures?
    fn monomorphic(&self, labels: &[usize]) -> bool {
        let mut first: HashMap<Vec<u8>, usize> = HashMap::new();
        for mask in 0usize..1 << self.n {
            let mut trace = vec![0u8; self.n];
            for x in (0..self.n).filter(|&x| mask >> x & 1 == 1) {
                trace[labels[x]] += 1;
            }
            let rep = *first.entry(trace).or_insert(mask);
            if self.keys[rep] != self.keys[mask] {
                return false;
            }
        }
        true
    }

    /// Points that can be exchanged in every finite context.
    fn twins(&self) -> Vec<usize> {
        let n = self.n;
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for x in 0..n {
            for y in x + 1..n {
                let rest = ((1usize << n) - 1) & !(1 << x) & !(1 << y);
                let mut f = rest;
                let twin = loop {
                    if self.keys[f | 1 << x] != self.keys[f | 1 << y] {
                        break false;
                    }
                    if f == 0 {
                        break true;
                    }
                    f = (f - 1) & rest;
                };
                if twin {
                    let (rx, ry) = (find(&mut parent, x), find(&mut parent, y));
                    if rx != ry {
                        parent[rx.max(ry)] = rx.min(ry);
                    }
                }
            }
        }
        let roots: Vec<usize> = (0..n).map(|x| find(&mut parent, x)).collect();
        Partition::from_labels(&roots).labels()
    }

    fn no_merge_passes(&self, labels: &[usize]) -> bool {
        let k = labels.iter().max().map_or(0, |&m| m + 1);
        for b in 0..k {
            for c in b + 1..k {
                let merged: Vec<usize> =
                    labels.iter().map(|&l| if l == c { b } else { l }).collect();
                if self.monomorphic(&Partition::from_labels(&merged).labels()) {
                    return false;
                }
            }
        }
        true
    }

    /// Monomorphic partition with the fewest blocks, found exhaustively.
    fn search(&self) -> Vec<usize> {
        let n = self.n;
        let mut best: Option<(usize, Vec<usize>)> = None;
        let mut rgs = vec![0usize; n];
        fn go(
            i: usize,
            max: usize,
            rgs: &mut Vec<usize>,
            keys: &SubsetKeys,
            best: &mut Option<(usize, Vec<usize>)>,
        ) {
            if i == rgs.len() {
                let k = if rgs.is_empty() { 0 } else { max + 1 };
                if best.as_ref().is_none_or(|(b, _)| k < *b) && keys.monomorphic(rgs) {
                    *best = Some((k, rgs.clone()));
                }
                return;
            }
            let top = if i == 0 { 0 } else { max + 1 };
            for v in 0..=top {
                rgs[i] = v;
                go(i + 1, max.max(v), rgs, keys, best);
            }
        }
        go(0, 0, &mut rgs, self, &mut best);
        best.map(|(_, l)| l).unwrap_or_default()
    }
}

/// The minimal monomorphic decomposition of a finite poset of size at
/// most 8: the coarsest partition such that any two subsets meeting every
/// block in equally many points induce isomorphic substructures.
pub fn fmd_decompose(a: &FinStruct) -> Result<FmdDecomposition> {
    if !is_poset(a) {
        return Err(Error::precondition("decomposition needs a poset"));
    }
    if a.size() > MAX_SIZE {
        return Err(Error::resource(format!(
            "decomposition is limited to {MAX_SIZE} elements"
        )));
    }
    let keys = SubsetKeys::new(a)?;
    let mut labels = keys.twins();
    if !(keys.monomorphic(&labels) && keys.no_merge_passes(&labels)) {
        labels = keys.search();
    }
    let partition = Partition::from_labels(&labels);
    let reps: Vec<usize> = partition.blocks().iter().map(|b| b[0]).collect();
    let mut shapes = Vec::with_capacity(partition.len());
    for block in partition.blocks() {
        let s = a.induced(block);
        shapes.push(if is_linear(&s) {
            PartDecl::chain(block.len())
        } else if is_antichain(&s) {
            PartDecl::antichain(block.len())
        } else {
            return Err(Error::Internal(
                "monomorphic block is neither a chain nor an antichain".into(),
            ));
        });
    }
    Ok(FmdDecomposition {
        quotient: a.induced(&reps),
        partition,
        shapes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iso::is_isomorphic;
    use crate::kernel::{antichain, chain, lex_sum, make_struct, point};

    #[test]
    fn v_poset() {
        let v = lex_sum(&chain(2), &[point(), antichain(2)]).unwrap();
        let d = fmd_decompose(&v).unwrap();
        assert_eq!(d.partition.blocks(), &[vec![0], vec![1, 2]]);
        assert!(is_isomorphic(&d.quotient, &chain(2)).unwrap());
        assert_eq!(d.shapes, vec![PartDecl::chain(1), PartDecl::antichain(2)]);
    }

    #[test]
    fn chain_is_one_block() {
        let d = fmd_decompose(&chain(5)).unwrap();
        assert_eq!(d.partition.len(), 1);
        assert_eq!(d.shapes, vec![PartDecl::chain(5)]);
    }

    #[test]
    fn n_poset_has_no_twins() {
        // a<c, b<c, b<d with a,b,c,d = 0,1,2,3
        let n = make_struct(4, &[(0, 0), (1, 1), (2, 2), (3, 3), (0, 2), (1, 2), (1, 3)]).unwrap();
        let d = fmd_decompose(&n).unwrap();
        assert_eq!(d.partition.len(), 4);
    }

    #[test]
    fn preconditions() {
        assert!(fmd_decompose(&make_struct(2, &[(0, 1), (1, 0)]).unwrap()).is_err());
        assert!(fmd_decompose(&chain(9)).is_err());
    }
}
