//! Component matching, bijection extraction and the cancellation laws.

use super::{IsoEngine, IsoWitness};
use crate::error::{Error, Result};
use crate::kernel::order::is_chain_set;
use crate::kernel::{
    chain, components, down_set, is_connected, is_poset, product_of, root, union_of, FinStruct,
    Partition,
};
use std::collections::{BTreeMap, BTreeSet};

/// The bijection between component indices of `a` and `b` induced by an
/// isomorphism `f: a → b`.
pub fn match_components(f: &IsoWitness, a: &FinStruct, b: &FinStruct) -> Result<Vec<usize>> {
    if !f.validates(a, b) {
        return Err(Error::input(
            "mapping is not an isomorphism between the structures",
        ));
    }
    let ca = components(a);
    let lb = components(b).partition.labels();
    Ok(ca
        .partition
        .blocks()
        .iter()
        .map(|block| lb[f.mapping[block[0]]])
        .collect())
}

/// Given pairwise disjoint finite sets `i`, `j`, `k`, a bijection
/// `f: i ∪ j → i ∪ k` and an equivalence `rho` containing the graph of `f`,
/// returns a bijection `j → k` contained in `rho`.
///
/// Points of `j` and `k` are matched in ascending order inside each class of
/// the least equivalence relation containing `f`. Output pairs are sorted.
pub fn equivalence_bijection(
    i: &[usize],
    j: &[usize],
    k: &[usize],
    f: &[(usize, usize)],
    rho: &Partition,
) -> Result<Vec<(usize, usize)>> {
    let si: BTreeSet<usize> = i.iter().copied().collect();
    let sj: BTreeSet<usize> = j.iter().copied().collect();
    let sk: BTreeSet<usize> = k.iter().copied().collect();
    if si.len() != i.len() || sj.len() != j.len() || sk.len() != k.len() {
        return Err(Error::input("repeated point in i, j or k"));
    }
    if !si.is_disjoint(&sj) || !si.is_disjoint(&sk) || !sj.is_disjoint(&sk) {
        return Err(Error::input("i, j and k must be pairwise disjoint"));
    }
    let n = rho.size();
    if si.iter().chain(&sj).chain(&sk).any(|&x| x >= n) {
        return Err(Error::input("point outside the domain of rho"));
    }
    let dom: BTreeSet<usize> = f.iter().map(|&(x, _)| x).collect();
    let cod: BTreeSet<usize> = f.iter().map(|&(_, y)| y).collect();
    let want_dom: BTreeSet<usize> = si.union(&sj).copied().collect();
    let want_cod: BTreeSet<usize> = si.union(&sk).copied().collect();
    if dom.len() != f.len() || cod.len() != f.len() || dom != want_dom || cod != want_cod {
        return Err(Error::input("f must be a bijection from i ∪ j onto i ∪ k"));
    }
    let class = rho.labels();
    if let Some(&(x, y)) = f.iter().find(|&&(x, y)| class[x] != class[y]) {
        return Err(Error::input(format!(
            "f maps {x} to {y}, which rho does not relate"
        )));
    }
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for &(x, y) in f {
        let (rx, ry) = (find(&mut parent, x), find(&mut parent, y));
        if rx != ry {
            parent[rx] = ry;
        }
    }
    let mut sides: BTreeMap<usize, (Vec<usize>, Vec<usize>)> = BTreeMap::new();
    for &x in &sj {
        sides.entry(find(&mut parent, x)).or_default().0.push(x);
    }
    for &x in &sk {
        sides.entry(find(&mut parent, x)).or_default().1.push(x);
    }
    let mut out = Vec::with_capacity(j.len());
    for (js, ks) in sides.values() {
        if js.len() != ks.len() {
            return Err(Error::Internal(
                "a class of the closure of f is unbalanced between j and k".into(),
            ));
        }
        out.extend(js.iter().copied().zip(ks.iter().copied()));
    }
    out.sort_unstable();
    Ok(out)
}

pub(crate) fn cancel_union(
    engine: &IsoEngine,
    a_parts: &[FinStruct],
    y: &FinStruct,
    z: &FinStruct,
    f: &IsoWitness,
) -> Result<IsoWitness> {
    if let Some(p) = a_parts
        .iter()
        .position(|p| p.is_empty() || !is_connected(p))
    {
        return Err(Error::input(format!(
            "cancelled part {p} is not a nonempty connected structure"
        )));
    }
    let left_parts: Vec<FinStruct> = a_parts.iter().cloned().chain([y.clone()]).collect();
    let right_parts: Vec<FinStruct> = a_parts.iter().cloned().chain([z.clone()]).collect();
    let left = union_of(&left_parts);
    let right = union_of(&right_parts);
    let comp_map = match_components(f, &left, &right)?;

    let m = a_parts.len();
    let cy = components(y);
    let cz = components(z);
    let (nj, nk) = (cy.len(), cz.len());
    // universe: I = 0..m, J = m..m+nj, K = m+nj..m+nj+nk
    let to_left = |c: usize| c;
    let to_right = |d: usize| if d < m { d } else { m + nj + (d - m) };
    let pairs: Vec<(usize, usize)> = comp_map
        .iter()
        .enumerate()
        .map(|(c, &d)| (to_left(c), to_right(d)))
        .collect();
    let mut universe: Vec<&FinStruct> = a_parts.iter().collect();
    universe.extend(cy.parts.iter());
    universe.extend(cz.parts.iter());
    let mut keys = Vec::with_capacity(universe.len());
    for s in &universe {
        keys.push(engine.canonical_form(s)?);
    }
    let mut distinct = keys.clone();
    distinct.sort();
    distinct.dedup();
    let labels: Vec<usize> = keys
        .iter()
        .map(|key| distinct.binary_search(key).unwrap())
        .collect();
    let rho = Partition::from_labels(&labels);
    let i_set: Vec<usize> = (0..m).collect();
    let j_set: Vec<usize> = (m..m + nj).collect();
    let k_set: Vec<usize> = (m + nj..m + nj + nk).collect();
    let pi = equivalence_bijection(&i_set, &j_set, &k_set, &pairs, &rho)?;

    let mut mapping = vec![usize::MAX; y.size()];
    for (jp, kp) in pi {
        let (bj, bk) = (jp - m, kp - m - nj);
        let w = engine
            .find_iso(&cy.parts[bj], &cz.parts[bk])?
            .ok_or_else(|| Error::Internal("matched components are not isomorphic".into()))?;
        for (t, &x) in cy.index_map(bj).iter().enumerate() {
            mapping[x] = cz.index_map(bk)[w.mapping[t]];
        }
    }
    let out = IsoWitness { mapping };
    if !out.validates(y, z) {
        return Err(Error::Internal(
            "assembled cancellation map is not an isomorphism".into(),
        ));
    }
    Ok(out)
}

/// The elements above the minimum whose down-set is a chain.
///
/// For a product of rooted trees this is the disjoint union of the trees
/// with their roots removed.
pub fn extract_linear_downset_part(p: &FinStruct) -> Result<FinStruct> {
    Ok(p.induced(&linear_downset_elements(p)?))
}

/// The elements kept by [`extract_linear_downset_part`], ascending.
pub fn linear_downset_elements(p: &FinStruct) -> Result<Vec<usize>> {
    let r = root(p)?.ok_or_else(|| Error::precondition("poset has no minimum"))?;
    Ok((0..p.size())
        .filter(|&x| x != r && is_chain_set(p, &down_set(p, x)))
        .collect())
}

/// Factorisations of `n` into factors ≥ 2, each in non-increasing order.
fn factorisations(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if n == 1 {
        out.push(prefix.clone());
        return;
    }
    for d in (2..=max.min(n)).rev() {
        if n.is_multiple_of(d) {
            prefix.push(d);
            factorisations(n / d, d, prefix, out);
            prefix.pop();
        }
    }
}

pub(crate) fn chain_product_factors_with(
    engine: &IsoEngine,
    p: &FinStruct,
) -> Result<Option<Vec<usize>>> {
    if p.size() > engine.budget.max_size {
        return Err(Error::resource(format!(
            "structure of size {} exceeds the isomorphism budget",
            p.size()
        )));
    }
    if p.is_empty() || !is_poset(p) {
        return Ok(None);
    }
    let mut cands = Vec::new();
    factorisations(p.size(), p.size(), &mut Vec::new(), &mut cands);
    for cand in cands {
        let grid = product_of(&cand.iter().map(|&n| chain(n)).collect::<Vec<_>>());
        if engine.find_iso(p, &grid)?.is_some() {
            let mut factors = cand;
            factors.sort_unstable();
            return Ok(Some(factors));
        }
    }
    Ok(None)
}

/// The multiset of chain lengths (each ≥ 2, ascending) whose product is
/// isomorphic to `p`, if there is one. A single point gives the empty list.
pub fn chain_product_factors(p: &FinStruct) -> Result<Option<Vec<usize>>> {
    chain_product_factors_with(&IsoEngine::default(), p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iso::{cancel_union, find_iso};
    use crate::kernel::{antichain, direct_product, disjoint_union, fence, point};

    #[test]
    fn components_follow_the_isomorphism() {
        let a = disjoint_union(&chain(2), &chain(3));
        let b = disjoint_union(&chain(3), &chain(2));
        let f = find_iso(&a, &b).unwrap().unwrap();
        assert_eq!(match_components(&f, &a, &b).unwrap(), vec![1, 0]);
        let c = disjoint_union(&chain(2), &chain(2));
        assert_eq!(
            match_components(&IsoWitness::identity(4), &c, &c).unwrap(),
            vec![0, 1]
        );
    }

    #[test]
    fn invalid_witness_is_rejected() {
        let a = chain(2);
        let bad = IsoWitness {
            mapping: vec![1, 0],
        };
        assert!(matches!(
            match_components(&bad, &a, &a),
            Err(Error::Input(_))
        ));
    }

    #[test]
    fn bijection_examples() {
        let one = Partition::new(3, vec![vec![0, 1, 2]]).unwrap();
        assert_eq!(
            equivalence_bijection(&[0], &[1], &[2], &[(1, 0), (0, 2)], &one).unwrap(),
            vec![(1, 2)]
        );
        assert!(
            equivalence_bijection(&[], &[], &[], &[], &Partition::discrete(0))
                .unwrap()
                .is_empty()
        );
        let rho = Partition::new(5, vec![vec![0], vec![1, 3], vec![2, 4]]).unwrap();
        assert_eq!(
            equivalence_bijection(&[], &[1, 2], &[3, 4], &[(1, 3), (2, 4)], &rho).unwrap(),
            vec![(1, 3), (2, 4)]
        );
    }

    #[test]
    fn bijection_rejects_f_outside_rho() {
        let rho = Partition::discrete(3);
        assert!(equivalence_bijection(&[0], &[1], &[2], &[(1, 0), (0, 2)], &rho).is_err());
    }

    #[test]
    fn cancel_examples() {
        let y = chain(3);
        let z = chain(3).relabel(&[1, 2, 0]).unwrap();
        let l = disjoint_union(&chain(2), &y);
        let r = disjoint_union(&chain(2), &z);
        let f = find_iso(&l, &r).unwrap().unwrap();
        let w = cancel_union(&[chain(2)], &y, &z, &f).unwrap();
        assert!(w.validates(&y, &z));

        let e = FinStruct::empty_relation(0);
        assert!(cancel_union(&[], &e, &e, &IsoWitness::identity(0))
            .unwrap()
            .mapping
            .is_empty());

        let parts = [chain(2), fence(3)];
        let y = disjoint_union(&chain(2), &chain(4));
        let z = disjoint_union(&chain(4), &chain(2));
        let mut lp = parts.to_vec();
        lp.push(y.clone());
        let mut rp = parts.to_vec();
        rp.push(z.clone());
        let f = find_iso(&union_of(&lp), &union_of(&rp)).unwrap().unwrap();
        let w = cancel_union(&parts, &y, &z, &f).unwrap();
        assert!(w.validates(&y, &z));
    }

    #[test]
    fn extraction_examples() {
        let diamond = direct_product(&chain(2), &chain(2));
        assert!(find_iso(
            &extract_linear_downset_part(&diamond).unwrap(),
            &antichain(2)
        )
        .unwrap()
        .is_some());
        assert!(
            find_iso(&extract_linear_downset_part(&chain(3)).unwrap(), &chain(2))
                .unwrap()
                .is_some()
        );
        let grid = direct_product(&chain(2), &chain(3));
        let expect = disjoint_union(&point(), &chain(2));
        assert!(
            find_iso(&extract_linear_downset_part(&grid).unwrap(), &expect)
                .unwrap()
                .is_some()
        );
        assert!(extract_linear_downset_part(&antichain(2)).is_err());
    }

    #[test]
    fn factor_examples() {
        let diamond = direct_product(&chain(2), &chain(2));
        assert_eq!(chain_product_factors(&diamond).unwrap(), Some(vec![2, 2]));
        assert_eq!(chain_product_factors(&chain(5)).unwrap(), Some(vec![5]));
        assert_eq!(chain_product_factors(&antichain(2)).unwrap(), None);
    }
}
