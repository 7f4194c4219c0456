//! Symmetric and equivalence closures, connected components, diameter.

use std::collections::VecDeque;

use super::{FinStruct, Partition};

/// `Δ ∪ ρ ∪ ρ⁻¹`.
pub fn rs_closure(a: &FinStruct) -> FinStruct {
    FinStruct::from_fn(a.size(), |x, y| {
        x == y || a.related(x, y) || a.related(y, x)
    })
}

/// Least equivalence relation containing the relation (transitive closure of
/// [`rs_closure`], Warshall over bit rows).
pub fn rst_closure(a: &FinStruct) -> FinStruct {
    let mut c = rs_closure(a);
    let n = c.size();
    let w = c.words();
    for k in 0..n {
        let row_k: Vec<u64> = c.row(k).to_vec();
        for i in 0..n {
            if c.related(i, k) {
                let base = i * w;
                for (t, word) in row_k.iter().enumerate() {
                    c.bits_mut()[base + t] |= word;
                }
            }
        }
    }
    c
}

/// Connected components of a structure.
#[derive(Clone, Debug)]
pub struct Components {
    pub partition: Partition,
    /// Induced substructure on each block, in block order. Element `k` of
    /// part `b` is element `partition.blocks()[b][k]` of the parent.
    pub parts: Vec<FinStruct>,
}

impl Components {
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Parent indices of block `b`.
    pub fn index_map(&self, b: usize) -> &[usize] {
        &self.partition.blocks()[b]
    }
}

pub fn components(a: &FinStruct) -> Components {
    let closure = rst_closure(a);
    let n = a.size();
    let mut label = vec![usize::MAX; n];
    let mut next = 0;
    for x in 0..n {
        if label[x] == usize::MAX {
            for y in closure.successors(x) {
                label[y] = next;
            }
            next += 1;
        }
    }
    let partition = Partition::from_labels(&label);
    let parts = partition.blocks().iter().map(|b| a.induced(b)).collect();
    Components { partition, parts }
}

pub fn is_connected(a: &FinStruct) -> bool {
    components(a).len() == 1
}

/// Largest shortest-path length in the symmetric closure, or `None` when the
/// structure is empty or disconnected.
pub fn diameter(a: &FinStruct) -> Option<usize> {
    let n = a.size();
    if n == 0 {
        return None;
    }
    let sym = rs_closure(a);
    let mut best = 0;
    let mut dist = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for s in 0..n {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[s] = 0;
        queue.push_back(s);
        while let Some(x) = queue.pop_front() {
            for y in sym.successors(x) {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        for &d in &dist {
            if d == usize::MAX {
                return None;
            }
            best = best.max(d);
        }
    }
    Some(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::generators::{antichain, chain, fence};
    use crate::kernel::ops::{direct_product, disjoint_union};

    #[test]
    fn closures_on_small_cases() {
        let full2 = FinStruct::from_fn(2, |_, _| true);
        assert_eq!(rst_closure(&chain(2)), full2);
        assert_eq!(rst_closure(&antichain(3)), antichain(3));
        assert_eq!(rst_closure(&fence(5)), FinStruct::from_fn(5, |_, _| true));
    }

    #[test]
    fn component_counts() {
        let c = components(&disjoint_union(&chain(2), &chain(2)));
        assert_eq!(c.len(), 2);
        assert_eq!(c.parts, vec![chain(2), chain(2)]);
        assert_eq!(components(&fence(5)).len(), 1);
        assert_eq!(components(&direct_product(&chain(2), &chain(2))).len(), 1);
        assert_eq!(
            components(&disjoint_union(&antichain(3), &chain(2))).len(),
            4
        );
        assert!(components(&FinStruct::empty_relation(0)).is_empty());
    }

    #[test]
    fn diameters() {
        assert_eq!(diameter(&chain(2)), Some(1));
        assert_eq!(diameter(&chain(7)), Some(1));
        assert_eq!(diameter(&fence(5)), Some(4));
        assert_eq!(diameter(&antichain(2)), None);
        assert_eq!(diameter(&antichain(1)), Some(0));
        assert_eq!(diameter(&FinStruct::empty_relation(0)), None);
    }
}
