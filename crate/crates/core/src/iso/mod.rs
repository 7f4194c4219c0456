//! Isomorphism testing, automorphisms, orbit counts and the cancellation
//! machinery built on top of them.

mod cancel;
mod orbits;
mod refine;
mod search;

pub use cancel::{
    chain_product_factors, equivalence_bijection, extract_linear_downset_part,
    linear_downset_elements, match_components,
};
pub use orbits::OrbitProfile;

use crate::error::Result;
use crate::kernel::FinStruct;
use serde::{Deserialize, Serialize};

/// Limits on the search performed by [`IsoEngine`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IsoBudget {
    /// Largest structure accepted.
    pub max_size: usize,
    /// Largest automorphism group listed explicitly.
    pub max_automorphisms: usize,
    /// Largest number of tuples considered by orbit counting.
    pub max_tuples: usize,
    /// Search-tree nodes visited per call.
    pub max_nodes: usize,
}

impl Default for IsoBudget {
    fn default() -> Self {
        IsoBudget {
            max_size: 64,
            max_automorphisms: 100_000,
            max_tuples: 1 << 20,
            max_nodes: 5_000_000,
        }
    }
}

impl IsoBudget {
    pub fn with_max_size(mut self, max_size: usize) -> Self {
        self.max_size = max_size;
        self
    }
}

/// An isomorphism given as the image of every element of the source.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IsoWitness {
    pub mapping: Vec<usize>,
}

impl IsoWitness {
    pub fn identity(n: usize) -> Self {
        IsoWitness {
            mapping: (0..n).collect(),
        }
    }

    /// True iff the mapping is a bijection `a → b` preserving the relation
    /// in both directions.
    pub fn validates(&self, a: &FinStruct, b: &FinStruct) -> bool {
        let n = a.size();
        if b.size() != n || crate::kernel::check_bijection(&self.mapping, n).is_err() {
            return false;
        }
        let m = &self.mapping;
        (0..n).all(|x| (0..n).all(|y| a.related(x, y) == b.related(m[x], m[y])))
    }

    pub fn inverse(&self) -> IsoWitness {
        let mut inv = vec![0; self.mapping.len()];
        for (x, &y) in self.mapping.iter().enumerate() {
            inv[y] = x;
        }
        IsoWitness { mapping: inv }
    }
}

/// Isomorphism machinery running under a fixed budget.
#[derive(Clone, Copy, Debug, Default)]
pub struct IsoEngine {
    pub budget: IsoBudget,
}

impl IsoEngine {
    pub fn new(budget: IsoBudget) -> Self {
        IsoEngine { budget }
    }

    pub fn find_iso(&self, a: &FinStruct, b: &FinStruct) -> Result<Option<IsoWitness>> {
        search::find_iso(&self.budget, a, b)
    }

    pub fn is_isomorphic(&self, a: &FinStruct, b: &FinStruct) -> Result<bool> {
        Ok(self.find_iso(a, b)?.is_some())
    }

    /// The automorphism group, identity first, then in lexicographic order.
    pub fn automorphisms(&self, a: &FinStruct) -> Result<Vec<Vec<usize>>> {
        search::automorphisms(&self.budget, a)
    }

    /// A byte string that is equal for two structures iff they are isomorphic.
    pub fn canonical_form(&self, a: &FinStruct) -> Result<Vec<u8>> {
        search::canonical_form(&self.budget, a)
    }

    pub fn orbit_profile(&self, a: &FinStruct, max_k: usize) -> Result<OrbitProfile> {
        orbits::orbit_profile(self, a, max_k)
    }

    pub fn cancel_union(
        &self,
        a_parts: &[FinStruct],
        y: &FinStruct,
        z: &FinStruct,
        f: &IsoWitness,
    ) -> Result<IsoWitness> {
        cancel::cancel_union(self, a_parts, y, z, f)
    }

    pub fn chain_product_factors(&self, p: &FinStruct) -> Result<Option<Vec<usize>>> {
        cancel::chain_product_factors_with(self, p)
    }
}

pub fn find_iso(a: &FinStruct, b: &FinStruct) -> Result<Option<IsoWitness>> {
    IsoEngine::default().find_iso(a, b)
}

pub fn is_isomorphic(a: &FinStruct, b: &FinStruct) -> Result<bool> {
    IsoEngine::default().is_isomorphic(a, b)
}

pub fn automorphisms(a: &FinStruct) -> Result<Vec<Vec<usize>>> {
    IsoEngine::default().automorphisms(a)
}

pub fn canonical_form(a: &FinStruct) -> Result<Vec<u8>> {
    IsoEngine::default().canonical_form(a)
}

pub fn orbit_profile(a: &FinStruct, max_k: usize) -> Result<OrbitProfile> {
    IsoEngine::default().orbit_profile(a, max_k)
}

pub fn cancel_union(
    a_parts: &[FinStruct],
    y: &FinStruct,
    z: &FinStruct,
    f: &IsoWitness,
) -> Result<IsoWitness> {
    IsoEngine::default().cancel_union(a_parts, y, z, f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{antichain, chain, direct_product, disjoint_union, fence, lex_sum, point};

    fn v_poset() -> FinStruct {
        lex_sum(&chain(2), &[point(), antichain(2)]).unwrap()
    }

    #[test]
    fn union_of_chains_matches_product_with_antichain() {
        let a = disjoint_union(&chain(2), &chain(2));
        let b = direct_product(&antichain(2), &chain(2));
        let w = find_iso(&a, &b).unwrap().expect("isomorphic");
        assert!(w.validates(&a, &b));
        assert_eq!(canonical_form(&a).unwrap(), canonical_form(&b).unwrap());
    }

    #[test]
    fn relabelled_chain_is_found() {
        let c = chain(3);
        let r = c.relabel(&[2, 0, 1]).unwrap();
        let w = find_iso(&c, &r).unwrap().unwrap();
        assert!(w.validates(&c, &r));
    }

    #[test]
    fn chain_and_antichain_differ() {
        assert!(find_iso(&chain(2), &antichain(2)).unwrap().is_none());
        assert_ne!(
            canonical_form(&chain(2)).unwrap(),
            canonical_form(&antichain(2)).unwrap()
        );
    }

    #[test]
    fn automorphism_groups() {
        let a3 = automorphisms(&antichain(3)).unwrap();
        assert_eq!(a3.len(), 6);
        assert_eq!(a3[0], vec![0, 1, 2]);
        assert_eq!(automorphisms(&chain(3)).unwrap(), vec![vec![0, 1, 2]]);
        assert_eq!(
            automorphisms(&v_poset()).unwrap(),
            vec![vec![0, 1, 2], vec![0, 2, 1]]
        );
        assert_eq!(automorphisms(&fence(5)).unwrap().len(), 2);
    }

    #[test]
    fn empty_structures() {
        let e = FinStruct::empty_relation(0);
        assert_eq!(
            find_iso(&e, &e).unwrap(),
            Some(IsoWitness { mapping: vec![] })
        );
        assert_eq!(automorphisms(&e).unwrap(), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn size_budget_is_enforced() {
        let big = chain(65);
        assert!(matches!(
            find_iso(&big, &big),
            Err(crate::Error::Resource(_))
        ));
    }
}
